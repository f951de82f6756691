//! Acceptance suite. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use std::f64::consts::LN_2;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tls_complexity::curve::Curve;
use tls_complexity::entropy::{
    complexity_from_coeff, complexity_from_p, critical_r, entropy_from_r,
};
use tls_complexity::mc::{compare_sampled, exhaustive_binary, sample_bloch, Disorder, SampleConfig};
use tls_complexity::optimize::Maximum;
use tls_complexity::thermal::{
    find_t_star, ising_complexity, paramagnet_complexity, IsingPoint, ParamagnetPoint,
};
use tls_complexity::tls::{
    bloch_report, lz_coeff_diag, normalized_coeff, LambdaDisorder, ModelSpec,
};

const TOL: f64 = 1e-10;

fn report(id: &str, pass: bool, detail: String) {
    println!("criterion {id:<3} {}  {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {id}: {detail}");
}

fn argmax(curve: Curve) -> Maximum {
    curve.maximize(curve.default_bracket(), TOL).unwrap()
}

fn tls(model: ModelSpec) -> Maximum {
    argmax(Curve::Tls(model))
}

#[test]
fn criterion_01_lz_diagonal_maximum() {
    let m = tls(ModelSpec::LzDiagonal);
    report(
        "1",
        (m.x - 1.110668).abs() <= 1e-4 && !m.at_boundary,
        format!("x* = {:.7}", m.x),
    );
}

#[test]
fn criterion_02_lz_off_diagonal_maximum() {
    let di = tls(ModelSpec::LzDiagonal).x;
    let od = tls(ModelSpec::LzOffDiagonal).x;
    report(
        "2",
        (od - 0.900359).abs() <= 1e-4 && (di * od - 1.0).abs() <= 1e-6,
        format!("x*_od = {od:.7}, x*_di * x*_od = {:.3e} from 1", di * od - 1.0),
    );
}

#[test]
fn criterion_03_bloch_report_at_lz_maximum() {
    let x = tls(ModelSpec::LzDiagonal).x;
    let st = bloch_report(ModelSpec::LzDiagonal, x).unwrap();
    let coeff = normalized_coeff(lz_coeff_diag(x));
    let (tp, tm) = (st.theta_plus.to_degrees(), st.theta_minus.to_degrees());
    let pass = (st.pop1 - 0.8716).abs() <= 5e-4
        && (st.pop0 - 0.1284).abs() <= 5e-4
        && (tp - 138.0).abs() <= 0.5
        && (tm - 42.0).abs() <= 0.5
        && (coeff - 0.93358).abs() <= 5e-4;
    report(
        "3",
        pass,
        format!(
            "pop = {:.5}/{:.5}, θ+ = {tp:.3}°, θ- = {tm:.3}°, coeff = {coeff:.5}",
            st.pop1, st.pop0
        ),
    );
}

#[test]
fn criterion_04_box_v_maximum() {
    let m = tls(ModelSpec::BoxV);
    report(
        "4",
        (m.x - 1.848578).abs() <= 1e-3 && !m.at_boundary,
        format!("κ* = {:.6}", m.x),
    );
}

#[test]
fn criterion_05_disorder_maxima_and_products() {
    let bin_v = tls(ModelSpec::BinaryV).x;
    let bin_l = tls(ModelSpec::BinaryLambda { chi: 0.0 }).x;
    let box_l = tls(ModelSpec::BoxLambda { chi: 0.0 }).x;
    let box_v = tls(ModelSpec::BoxV).x;
    let pass = (bin_v - 0.90).abs() <= 0.01
        && (bin_l - 1.11).abs() <= 0.01
        && (box_l - 0.54).abs() <= 0.01
        && (bin_l * bin_v - 1.0).abs() <= 0.02
        && (box_l * box_v - 1.0).abs() <= 0.02;
    report(
        "5",
        pass,
        format!(
            "κ_bin = {bin_v:.4}, τ_bin = {bin_l:.4}, τ_box = {box_l:.4}, products {:.4} / {:.4}",
            bin_l * bin_v,
            box_l * box_v
        ),
    );
}

#[test]
fn criterion_06_binary_lambda_matches_lz_curve() {
    let a = tls(ModelSpec::BinaryLambda { chi: 0.0 }).value;
    let b = tls(ModelSpec::LzDiagonal).value;
    report(
        "6",
        (a - b).abs() <= 1e-10,
        format!("S_C max {a:.12} vs {b:.12}"),
    );
}

fn second_maximum(kind: LambdaDisorder, zeta: f64) -> (Vec<Maximum>, Option<f64>) {
    let curve = Curve::ChiInverse { kind, zeta };
    let maxima = curve
        .local_maxima(curve.default_bracket(), 4096, TOL)
        .unwrap();
    let second = (maxima.len() >= 2).then(|| maxima[maxima.len() - 1].x * zeta);
    (maxima, second)
}

fn criterion_07(kind: LambdaDisorder, label: &str, target: f64) {
    let start = Instant::now();
    let zeta = 0.01;
    let (maxima, second) = second_maximum(kind, zeta);
    let positions: Vec<String> = maxima.iter().map(|m| format!("{:.4}", m.x)).collect();
    let pass = second.is_some_and(|p| (p / target - 1.0).abs() <= 0.2)
        && start.elapsed().as_secs_f64() < 30.0;
    report(
        label,
        pass,
        format!(
            "maxima at χ⁻¹ = [{}], second χ⁻¹ζ = {}, expected {target} ± 20%",
            positions.join(", "),
            second.map_or("none".into(), |p| format!("{p:.4}")),
        ),
    );
}

#[test]
fn criterion_07_binary_second_maximum() {
    criterion_07(LambdaDisorder::Binary, "7a", 1.0);
}

#[test]
fn criterion_07_box_second_maximum() {
    criterion_07(LambdaDisorder::Box, "7b", 5.0);
}

#[test]
fn criterion_08_paramagnet() {
    let sc = |x: f64| paramagnet_complexity(ParamagnetPoint::new(x).unwrap(), false).complexity;
    let m = argmax(Curve::Paramagnet);
    let pass = sc(0.0) == 0.0 && sc(1e3) < 1e-8 && (m.x - 0.955).abs() <= 0.005;
    report(
        "8",
        pass,
        format!("S_C(0) = {}, S_C(1e3) = {:.1e}, x* = {:.5}", sc(0.0), sc(1e3), m.x),
    );
}

#[test]
fn criterion_09_ising_zero_field() {
    let t = find_t_star(0.0).unwrap();
    let zero_above = (0..=400).all(|i| {
        let x = 1.0 + i as f64 * 0.01;
        ising_complexity(IsingPoint::new(x, 0.0).unwrap(), false).unwrap().complexity == 0.0
    });
    report(
        "9",
        (t - 0.776).abs() <= 0.002 && zero_above,
        format!("T*/T_c = {t:.5}, S_C = 0 on x in [1, 5]: {zero_above}"),
    );
}

#[test]
fn criterion_10_ising_field_linear_law() {
    let alphas: Vec<f64> = (0..=25).map(|i| i as f64 * 0.01).collect();
    let ts: Vec<f64> = alphas.iter().map(|&a| find_t_star(a).unwrap()).collect();
    let monotone = ts.windows(2).all(|w| w[1] > w[0]);

    let n = alphas.len() as f64;
    let (ma, mt) = (alphas.iter().sum::<f64>() / n, ts.iter().sum::<f64>() / n);
    let sxy: f64 = alphas.iter().zip(&ts).map(|(a, t)| (a - ma) * (t - mt)).sum();
    let sxx: f64 = alphas.iter().map(|a| (a - ma).powi(2)).sum();
    let slope = sxy / sxx;
    let icpt = mt - slope * ma;
    let range = ts[ts.len() - 1] - ts[0];
    let worst = alphas
        .iter()
        .zip(&ts)
        .map(|(a, t)| (t - (icpt + slope * a)).abs())
        .fold(0.0, f64::max);
    let t_c = find_t_star(0.2133).unwrap();

    report(
        "10",
        monotone && worst < 0.01 * range && (t_c - 1.0).abs() <= 0.02,
        format!(
            "slope = {slope:.4}, max residual = {:.2e} of range, T*(0.2133) = {t_c:.5}",
            worst / range
        ),
    );
}

#[test]
fn criterion_11_universal_maximum() {
    let r_star = critical_r();
    let mut curves: Vec<Curve> = [
        ModelSpec::LzDiagonal,
        ModelSpec::LzOffDiagonal,
        ModelSpec::BinaryLambda { chi: 0.0 },
        ModelSpec::BinaryV,
        ModelSpec::BoxLambda { chi: 0.0 },
        ModelSpec::BoxV,
    ]
    .into_iter()
    .map(Curve::Tls)
    .collect();
    curves.push(Curve::Paramagnet);
    curves.extend((0..=25).map(|i| Curve::Ising { alpha: i as f64 * 0.01 }));
    curves.push(Curve::Ising { alpha: 0.2133 });
    curves.push(Curve::ChiInverse {
        kind: LambdaDisorder::Binary,
        zeta: 0.01,
    });
    curves.push(Curve::ChiInverse {
        kind: LambdaDisorder::Box,
        zeta: 0.01,
    });

    let mut worst: (f64, String) = (0.0, String::new());
    let mut count = 0;
    for curve in &curves {
        let maxima = curve.local_maxima(curve.default_bracket(), 2048, TOL).unwrap();
        for m in maxima.iter().filter(|m| !m.at_boundary) {
            count += 1;
            let dev = (curve.radius(m.x).unwrap() - r_star).abs();
            if dev > worst.0 {
                worst = (dev, format!("{} at {:.5}", curve.name(), m.x));
            }
        }
    }
    report(
        "11",
        count > 0 && worst.0 <= 1e-4,
        format!("{count} interior maxima, worst |r - r*| = {:.2e} ({})", worst.0, worst.1),
    );
}

fn lambda_grid(boxed: bool) -> Vec<Disorder> {
    let mut out = Vec::new();
    for eps in [0.0, 0.3, 1.0, 2.0, 5.0] {
        for v in [0.05, 0.2, 0.5, 1.0, 3.0] {
            let w = 1.0;
            out.push(if boxed {
                Disorder::BoxLambda { eps, v, w }
            } else {
                Disorder::BinaryLambda { eps, v, w }
            });
        }
    }
    out
}

fn coupling_grid(boxed: bool) -> Vec<Disorder> {
    let mut out = Vec::new();
    for eps in [0.2, 0.5, 1.0, 2.0, 4.0] {
        for v0 in [0.05, 0.2, 0.9, 2.0, 6.0] {
            out.push(if boxed {
                Disorder::BoxV { eps, v0 }
            } else {
                Disorder::BinaryV { eps, v0 }
            });
        }
    }
    out
}

#[test]
fn criterion_12_monte_carlo_oracle() {
    let start = Instant::now();
    let n = 1_000_000;
    let mut failures = Vec::new();
    let mut worst_z: f64 = 0.0;
    let mut worst_exact: f64 = 0.0;

    let configurations: [(&str, Vec<Disorder>, bool); 6] = [
        ("binary-lambda exhaustive", lambda_grid(false), true),
        ("binary-lambda sampled", lambda_grid(false), false),
        ("binary-v exhaustive", coupling_grid(false), true),
        ("binary-v sampled", coupling_grid(false), false),
        ("box-lambda sampled", lambda_grid(true), false),
        ("box-v sampled", coupling_grid(true), false),
    ];
    for (name, grid, exact) in &configurations {
        for (k, d) in grid.iter().enumerate() {
            let cfg = SampleConfig::new(*d, n, 1000 + k as u64).unwrap();
            if *exact {
                let est = exhaustive_binary(&cfg).unwrap();
                let closed = d.closed_form().unwrap();
                let dev = (est.s_hat - closed.s).abs().max((est.c_hat - closed.c).abs());
                worst_exact = worst_exact.max(dev);
                if dev > 1e-14 {
                    failures.push(format!("{name} {d:?}: exact dev {dev:.2e}"));
                }
            } else {
                let r = compare_sampled(&cfg, None).unwrap();
                worst_z = worst_z.max(r.z_s.abs()).max(r.z_c.abs());
                if !r.pass {
                    failures.push(format!("{name} {d:?}: z = ({}, {})", r.z_s, r.z_c));
                }
            }
        }
    }

    for d in [Disorder::box_lambda(0.5, 0.8), Disorder::box_v(1.8), Disorder::binary_lambda(1.5, 0.7)] {
        let se: Vec<(f64, f64)> = [10_000u64, 40_000, 160_000]
            .iter()
            .map(|&m| {
                let e = sample_bloch(&SampleConfig::new(d, m, 5).unwrap()).unwrap();
                (e.se_s, e.se_c)
            })
            .collect();
        for w in se.windows(2) {
            for (a, b) in [(w[0].0, w[1].0), (w[0].1, w[1].1)] {
                if b > 0.0 && ((a / b) / 2.0 - 1.0).abs() > 0.2 {
                    failures.push(format!("{d:?}: se ratio {}", a / b));
                }
            }
        }
    }

    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 60.0 {
        failures.push(format!("runtime {elapsed:.1} s"));
    }
    report(
        "12",
        failures.is_empty(),
        format!(
            "max |z| = {worst_z:.2}, max exact dev = {worst_exact:.1e}, {elapsed:.1} s{}",
            if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }
        ),
    );
}

#[test]
fn criterion_13_entropy_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut bad = Vec::new();
    for _ in 0..100_000 {
        let r: f64 = rng.random_range(0.0..=1.0);
        let e = entropy_from_r(r, false).unwrap();
        let bits = entropy_from_r(r, true).unwrap();
        if e.complexity < 0.0 {
            bad.push(format!("negative S_C at r = {r}"));
        }
        if bits.complexity != e.complexity / LN_2
            || bits.shannon != e.shannon / LN_2
            || bits.renyi2 != e.renyi2 / LN_2
        {
            bad.push(format!("normalization at r = {r}"));
        }

        let c: f64 = 10f64.powf(rng.random_range(-3.0..3.0));
        let q = c * c;
        let a = complexity_from_coeff(c, false).unwrap().complexity;
        let b = complexity_from_p(q / (1.0 + q), false).unwrap().complexity;
        let viar = entropy_from_r((q - 1.0).abs() / (q + 1.0), false).unwrap().complexity;
        if (a - b).abs() > 1e-12 || (a - viar).abs() > 1e-12 {
            bad.push(format!("routes disagree at c = {c}: {a} {b} {viar}"));
        }
    }
    let ends = entropy_from_r(0.0, false).unwrap().complexity == 0.0
        && entropy_from_r(1.0, false).unwrap().complexity == 0.0;
    if !ends {
        bad.push("S_C(0) or S_C(1) nonzero".into());
    }
    bad.truncate(5);
    report(
        "13",
        bad.is_empty(),
        format!("10^5 draws{}", if bad.is_empty() { String::new() } else { format!(": {}", bad.join("; ")) }),
    );
}
