//! Bloch angles of the Landau-Zener eigenstates, at the complexity peak and
//! at the crossing.

use tls_complexity::curve::Curve;
use tls_complexity::tls::{bloch_report, ModelSpec};

fn main() -> tls_complexity::Result<()> {
    let curve = Curve::Tls(ModelSpec::LzDiagonal);
    let peak = curve.maximize(curve.default_bracket(), 1e-10)?.x;
    for x in [0.0, peak, -peak] {
        let st = bloch_report(ModelSpec::LzDiagonal, x)?;
        println!(
            "x = {x:+.6}: |1> {:.4}, |0> {:.4}, theta+ {:.2} deg, theta- {:.2} deg",
            st.pop1,
            st.pop0,
            st.theta_plus.to_degrees(),
            st.theta_minus.to_degrees()
        );
    }
    Ok(())
}
