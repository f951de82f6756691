//! Complexity of a Landau-Zener eigenstate along the sweep, and where it peaks.
//!
//! cargo run --example lz_sweep

use tls_complexity::curve::Curve;
use tls_complexity::optimize::Bracket;
use tls_complexity::tls::{model_complexity, ModelSpec};

fn main() -> tls_complexity::Result<()> {
    println!("{:>8} {:>10} {:>10}", "x", "diag", "offdiag");
    for x in [0.1, 0.3, 0.9, 1.11, 2.0, 5.0, 20.0] {
        let di = model_complexity(ModelSpec::LzDiagonal, x, false)?.complexity;
        let od = model_complexity(ModelSpec::LzOffDiagonal, x, false)?.complexity;
        println!("{x:>8} {di:>10.6} {od:>10.6}");
    }

    let bracket = Bracket::log(1e-2, 1e2)?;
    for model in [ModelSpec::LzDiagonal, ModelSpec::LzOffDiagonal] {
        let m = Curve::Tls(model).maximize(bracket, 1e-10)?;
        println!("{}: x* = {:.6}, S_C = {:.6} nats", model.name(), m.x, m.value);
    }
    Ok(())
}
