//! Shannon, Rényi-2 and their difference for a single qubit state.

use tls_complexity::entropy::{complexity_from_coeff, complexity_from_p, critical_r, entropy_from_r};

fn main() -> tls_complexity::Result<()> {
    println!("{:>6} {:>9} {:>9} {:>9}", "r", "S", "R2", "S_C");
    for r in [0.0, 0.25, 0.5, 0.7433, 0.9, 1.0] {
        let e = entropy_from_r(r, false)?;
        println!("{r:>6} {:>9.6} {:>9.6} {:>9.6}", e.shannon, e.renyi2, e.complexity);
    }
    let r = critical_r();
    println!("peak at r* = {r:.12}, S_C = {:.8} bits", entropy_from_r(r, true)?.complexity);
    // same state three ways
    let p = (1.0 + r) / 2.0;
    let c = (p / (1.0 - p)).sqrt();
    println!(
        "via p: {:.12}, via c: {:.12}",
        complexity_from_p(p, false)?.complexity,
        complexity_from_coeff(c, false)?.complexity
    );
    Ok(())
}
