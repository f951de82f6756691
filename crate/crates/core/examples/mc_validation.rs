//! Check the disorder closed forms against seeded Monte Carlo.
//!
//! cargo run --release --example mc_validation

use tls_complexity::mc::{compare, compare_sampled, Disorder, SampleConfig};

fn main() -> tls_complexity::Result<()> {
    let cases = [
        Disorder::binary_lambda(0.4, 1.1),
        Disorder::binary_v(0.9),
        Disorder::box_lambda(0.0, 0.54),
        Disorder::box_v(1.848578),
    ];
    for d in cases {
        let cfg = SampleConfig::new(d, 1_000_000, 7)?;
        let sampled = compare_sampled(&cfg, None)?;
        println!(
            "{d:?}\n  closed r = {:.6}  sampled r = {:.6}  z = ({:+.2}, {:+.2})",
            sampled.expected.r, sampled.estimate.r_hat, sampled.z_s, sampled.z_c,
        );
        if d.is_binary() {
            // two-point ensembles also average exactly
            let exact = compare(&cfg)?;
            println!("  exact two-point average: z = ({}, {})", exact.z_s, exact.z_c);
        }
    }
    Ok(())
}
