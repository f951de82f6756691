//! Paramagnet and mean-field Ising complexity versus temperature.

use tls_complexity::curve::Curve;
use tls_complexity::thermal::{curie_weiss_solve, find_t_star, IsingPoint};

fn main() -> tls_complexity::Result<()> {
    let para = Curve::Paramagnet;
    let m = para.maximize(para.default_bracket(), 1e-10)?;
    println!("paramagnet: peak at x = {:.5}", m.x);

    println!("{:>6} {:>10} {:>10}", "T/Tc", "m", "S_C");
    for i in 1..=12 {
        let x = 0.1 * i as f64;
        let pt = IsingPoint::new(x, 0.0)?;
        let sol = curie_weiss_solve(pt)?;
        let sc = Curve::Ising { alpha: 0.0 }.complexity(x)?;
        println!("{x:>6.2} {:>10.6} {sc:>10.6}", sol.m);
    }

    for alpha in [0.0, 0.05, 0.1, 0.2, 0.2133] {
        println!("alpha = {alpha}: T*/Tc = {:.5}", find_t_star(alpha)?);
    }
    Ok(())
}
