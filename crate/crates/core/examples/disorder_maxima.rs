//! Peak positions of the four disorder averages. The λ and V peaks of each
//! distribution multiply to about one.

use tls_complexity::curve::Curve;
use tls_complexity::tls::ModelSpec;

fn main() -> tls_complexity::Result<()> {
    let argmax = |m: ModelSpec| {
        let c = Curve::Tls(m);
        c.maximize(c.default_bracket(), 1e-10).map(|m| m.x)
    };
    let bin_l = argmax(ModelSpec::BinaryLambda { chi: 0.0 })?;
    let bin_v = argmax(ModelSpec::BinaryV)?;
    let box_l = argmax(ModelSpec::BoxLambda { chi: 0.0 })?;
    let box_v = argmax(ModelSpec::BoxV)?;
    println!("binary: tau* = {bin_l:.6}  kappa* = {bin_v:.6}  product = {:.6}", bin_l * bin_v);
    println!("box:    tau* = {box_l:.6}  kappa* = {box_v:.6}  product = {:.6}", box_l * box_v);

    // the peak moves as the mean level offset grows
    for chi in [0.0, 0.25, 0.5, 0.75] {
        let x = argmax(ModelSpec::BinaryLambda { chi })?;
        println!("binary lambda, chi = {chi}: tau* = {x:.5}");
    }
    Ok(())
}
