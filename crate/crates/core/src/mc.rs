//! Monte Carlo disorder averages of the two-level density matrix.
//!
//! Each draw of the random parameter gives a pure eigenstate with
//! `sin φ = 2V/Δ`, `cos φ = (ε − λ)/Δ`. The sample means estimate the
//! averaged Bloch components and serve as an oracle for the closed forms in
//! [`crate::tls`].
//!
//! Samples are grouped in fixed batches of [`BATCH_SIZE`]. Batch `k` draws
//! from its own ChaCha8 stream `(seed, k)`, and batch statistics are merged
//! in batch order, so the result is bit-identical for any number of worker
//! threads.

use rand::distr::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::entropy::{entropy_from_r, stationarity, BlochAverage};
use crate::error::{Error, Result};
use crate::tls::{
    bloch_binary_lambda, bloch_binary_v, bloch_box_lambda, bloch_box_v, coupling_disorder_param,
    lambda_disorder_params,
};

pub const BATCH_SIZE: u64 = 16_384;

/// Identifies the random stream layout; recorded with every estimate.
pub const RNG_ALGORITHM: &str = "chacha8-seed_from_u64-stream_per_batch-16384";

/// Flag threshold on `|z|`.
pub const Z_LIMIT: f64 = 4.0;

/// Zero-variance estimates (exact averages, constant integrands) count as
/// agreeing with the closed form when the deviation is below this.
pub const ZERO_VARIANCE_TOL: f64 = 1e-12;

/// Random parameter of `H = ½(ε − λ)σ_z + Vσ_x`, in raw energies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Disorder {
    /// `λ = ±W`.
    BinaryLambda { eps: f64, v: f64, w: f64 },
    /// `V = ±V₀`, `λ = 0`.
    BinaryV { eps: f64, v0: f64 },
    /// `λ` uniform on `[−W, W]`.
    BoxLambda { eps: f64, v: f64, w: f64 },
    /// `V` uniform on `[−V₀, V₀]`, `λ = 0`.
    BoxV { eps: f64, v0: f64 },
}

impl Disorder {
    pub fn is_binary(&self) -> bool {
        matches!(self, Self::BinaryLambda { .. } | Self::BinaryV { .. })
    }

    /// Raw parameters with `W = 1` (λ kinds) or `ε = 1` (V kinds).
    pub fn binary_lambda(chi: f64, tau: f64) -> Self {
        Self::BinaryLambda {
            eps: chi,
            v: 0.5 * tau,
            w: 1.0,
        }
    }

    pub fn box_lambda(chi: f64, tau: f64) -> Self {
        Self::BoxLambda {
            eps: chi,
            v: 0.5 * tau,
            w: 1.0,
        }
    }

    pub fn binary_v(kappa: f64) -> Self {
        Self::BinaryV {
            eps: 1.0,
            v0: 0.5 * kappa,
        }
    }

    pub fn box_v(kappa: f64) -> Self {
        Self::BoxV {
            eps: 1.0,
            v0: 0.5 * kappa,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = |x: f64| x.is_finite();
        match *self {
            Self::BinaryLambda { eps, v, w } | Self::BoxLambda { eps, v, w } => {
                if !(ok(eps) && ok(v) && ok(w)) || w <= 0.0 || v == 0.0 {
                    return Err(Error::InvalidConfig(format!(
                        "lambda disorder needs finite eps, V != 0 and W > 0 (eps = {eps}, V = {v}, W = {w})"
                    )));
                }
            }
            Self::BinaryV { eps, v0 } | Self::BoxV { eps, v0 } => {
                if !(ok(eps) && ok(v0)) || eps <= 0.0 || v0 <= 0.0 {
                    return Err(Error::InvalidConfig(format!(
                        "coupling disorder needs eps > 0 and V0 > 0 (eps = {eps}, V0 = {v0})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Closed-form averaged Bloch vector of this ensemble.
    pub fn closed_form(&self) -> Result<BlochAverage> {
        self.validate()?;
        match *self {
            Self::BinaryLambda { eps, v, w } => {
                let (chi, tau) = lambda_disorder_params(eps, v, w)?;
                let b = bloch_binary_lambda(chi, tau)?;
                // closed forms assume eps >= 0; c is odd in eps
                Ok(BlochAverage::new(b.s, b.c.copysign(eps)))
            }
            Self::BoxLambda { eps, v, w } => {
                let (chi, tau) = lambda_disorder_params(eps, v, w)?;
                let b = bloch_box_lambda(chi, tau)?;
                Ok(BlochAverage::new(b.s, b.c.copysign(eps)))
            }
            Self::BinaryV { eps, v0 } => bloch_binary_v(coupling_disorder_param(eps, v0)?),
            Self::BoxV { eps, v0 } => bloch_box_v(coupling_disorder_param(eps, v0)?),
        }
        .map(|b| {
            // sin φ carries the sign of V for λ disorder
            match *self {
                Self::BinaryLambda { v, .. } | Self::BoxLambda { v, .. } => {
                    BlochAverage::new(b.s.copysign(v), b.c)
                }
                _ => b,
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleConfig {
    pub n_samples: u64,
    pub seed: u64,
    pub disorder: Disorder,
}

impl SampleConfig {
    pub fn new(disorder: Disorder, n_samples: u64, seed: u64) -> Result<Self> {
        let config = Self {
            n_samples,
            seed,
            disorder,
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        if self.n_samples == 0 {
            return Err(Error::InvalidConfig("n_samples must be at least 1".into()));
        }
        self.disorder.validate()
    }
}

/// Sample estimate of the averaged Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub s_hat: f64,
    pub c_hat: f64,
    pub r_hat: f64,
    /// Complexity of the estimated state, nats.
    pub sc_hat: f64,
    pub se_s: f64,
    pub se_c: f64,
    /// Delta-method standard error of `sc_hat`.
    pub se_sc: f64,
    /// Number of draws, or support points for exact two-point averages.
    pub n: u64,
    pub rng: &'static str,
}

/// Running moments of `(sin φ, cos φ)`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Moments {
    n: u64,
    mean_s: f64,
    mean_c: f64,
    m2_s: f64,
    m2_c: f64,
    cov: f64,
}

impl Moments {
    fn push(&mut self, s: f64, c: f64) {
        self.n += 1;
        let n = self.n as f64;
        let ds = s - self.mean_s;
        let dc = c - self.mean_c;
        self.mean_s += ds / n;
        self.mean_c += dc / n;
        self.m2_s += ds * (s - self.mean_s);
        self.m2_c += dc * (c - self.mean_c);
        self.cov += ds * (c - self.mean_c);
    }

    fn merge(self, other: Self) -> Self {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let (na, nb, nf) = (self.n as f64, other.n as f64, n as f64);
        let ds = other.mean_s - self.mean_s;
        let dc = other.mean_c - self.mean_c;
        Self {
            n,
            mean_s: self.mean_s + ds * nb / nf,
            mean_c: self.mean_c + dc * nb / nf,
            m2_s: self.m2_s + other.m2_s + ds * ds * na * nb / nf,
            m2_c: self.m2_c + other.m2_c + dc * dc * na * nb / nf,
            cov: self.cov + other.cov + ds * dc * na * nb / nf,
        }
    }

    fn estimate(&self) -> Result<McEstimate> {
        let n = self.n as f64;
        let (var_s, var_c, cov) = if self.n > 1 {
            let d = n - 1.0;
            (self.m2_s / d, self.m2_c / d, self.cov / d)
        } else {
            (0.0, 0.0, 0.0)
        };
        let (se_s, se_c) = ((var_s / n).sqrt(), (var_c / n).sqrt());
        let avg = BlochAverage::new(self.mean_s, self.mean_c);
        let sc_hat = entropy_from_r(avg.r, false)?.complexity;
        let se_sc = if avg.r > 0.0 && avg.r < 1.0 {
            // dS_C/dr = 2r/(1+r²) − atanh r; dr = (s ds + c dc)/r
            let slope = -stationarity(avg.r);
            let (gs, gc) = (avg.s / avg.r, avg.c / avg.r);
            let var_r = (gs * gs * var_s + gc * gc * var_c + 2.0 * gs * gc * cov) / n;
            slope.abs() * var_r.max(0.0).sqrt()
        } else {
            0.0
        };
        Ok(McEstimate {
            s_hat: avg.s,
            c_hat: avg.c,
            r_hat: avg.r,
            sc_hat,
            se_s,
            se_c,
            se_sc,
            n: self.n,
            rng: RNG_ALGORITHM,
        })
    }
}

fn rotation(eps: f64, lambda: f64, v: f64) -> (f64, f64) {
    let detuning = eps - lambda;
    let gap = detuning.hypot(2.0 * v);
    (2.0 * v / gap, detuning / gap)
}

fn run_batch(disorder: &Disorder, seed: u64, batch: u64, len: u64) -> Result<Moments> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    let mut m = Moments::default();
    let uniform = |half_width: f64| {
        Uniform::new_inclusive(-half_width, half_width)
            .map_err(|e| Error::InvalidConfig(e.to_string()))
    };
    match *disorder {
        Disorder::BinaryLambda { eps, v, w } => {
            for _ in 0..len {
                let lambda = if rng.random::<bool>() { w } else { -w };
                let (s, c) = rotation(eps, lambda, v);
                m.push(s, c);
            }
        }
        Disorder::BoxLambda { eps, v, w } => {
            let dist = uniform(w)?;
            for _ in 0..len {
                let (s, c) = rotation(eps, dist.sample(&mut rng), v);
                m.push(s, c);
            }
        }
        Disorder::BinaryV { eps, v0 } => {
            for _ in 0..len {
                let v = if rng.random::<bool>() { v0 } else { -v0 };
                let (s, c) = rotation(eps, 0.0, v);
                m.push(s, c);
            }
        }
        Disorder::BoxV { eps, v0 } => {
            let dist = uniform(v0)?;
            for _ in 0..len {
                let (s, c) = rotation(eps, 0.0, dist.sample(&mut rng));
                m.push(s, c);
            }
        }
    }
    Ok(m)
}

fn sample_batches(config: &SampleConfig) -> Result<McEstimate> {
    let batches = config.n_samples.div_ceil(BATCH_SIZE);
    let partials = (0..batches)
        .into_par_iter()
        .map(|k| {
            let len = BATCH_SIZE.min(config.n_samples - k * BATCH_SIZE);
            run_batch(&config.disorder, config.seed, k, len)
        })
        .collect::<Result<Vec<_>>>()?;
    partials
        .into_iter()
        .fold(Moments::default(), Moments::merge)
        .estimate()
}

/// Sample the ensemble and average `sin φ`, `cos φ`. Runs on the global
/// rayon pool.
pub fn sample_bloch(config: &SampleConfig) -> Result<McEstimate> {
    config.validate()?;
    sample_batches(config)
}

/// [`sample_bloch`] on a dedicated pool of `workers` threads. The result does
/// not depend on `workers`.
pub fn sample_bloch_with_workers(config: &SampleConfig, workers: usize) -> Result<McEstimate> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    pool.install(|| sample_batches(config))
}

/// Exact two-point average of a binary ensemble; standard errors are zero.
pub fn exhaustive_binary(config: &SampleConfig) -> Result<McEstimate> {
    config.validate()?;
    let (a, b) = match config.disorder {
        Disorder::BinaryLambda { eps, v, w } => (rotation(eps, w, v), rotation(eps, -w, v)),
        Disorder::BinaryV { eps, v0 } => (rotation(eps, 0.0, v0), rotation(eps, 0.0, -v0)),
        other => {
            return Err(Error::Unsupported(format!(
                "exhaustive average needs a binary ensemble, got {other:?}"
            )))
        }
    };
    let avg = BlochAverage::new(0.5 * (a.0 + b.0), 0.5 * (a.1 + b.1));
    Ok(McEstimate {
        s_hat: avg.s,
        c_hat: avg.c,
        r_hat: avg.r,
        sc_hat: entropy_from_r(avg.r, false)?.complexity,
        se_s: 0.0,
        se_c: 0.0,
        se_sc: 0.0,
        n: 2,
        rng: "exact",
    })
}

/// Deviation of an estimate from the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeviationReport {
    pub z_s: f64,
    pub z_c: f64,
    pub sc_abs_dev: f64,
    pub pass: bool,
    pub estimate: McEstimate,
    pub expected: BlochAverage,
    /// Complexity of the closed form, nats.
    pub sc_expected: f64,
}

fn z_score(estimate: f64, expected: f64, se: f64) -> f64 {
    let dev = estimate - expected;
    if se > 0.0 {
        dev / se
    } else if dev.abs() <= ZERO_VARIANCE_TOL {
        0.0
    } else {
        f64::INFINITY.copysign(dev)
    }
}

/// Compare an estimate against the closed form of `disorder`.
pub fn deviation(disorder: &Disorder, estimate: McEstimate) -> Result<DeviationReport> {
    let expected = disorder.closed_form()?;
    let sc_expected = entropy_from_r(expected.r, false)?.complexity;
    let z_s = z_score(estimate.s_hat, expected.s, estimate.se_s);
    let z_c = z_score(estimate.c_hat, expected.c, estimate.se_c);
    Ok(DeviationReport {
        z_s,
        z_c,
        sc_abs_dev: (estimate.sc_hat - sc_expected).abs(),
        pass: z_s.abs() <= Z_LIMIT && z_c.abs() <= Z_LIMIT,
        estimate,
        expected,
        sc_expected,
    })
}

/// Check the closed form of `config.disorder`. Binary ensembles use the
/// exact two-point average; box ensembles are sampled.
pub fn compare(config: &SampleConfig) -> Result<DeviationReport> {
    let estimate = if config.disorder.is_binary() {
        exhaustive_binary(config)?
    } else {
        sample_bloch(config)?
    };
    deviation(&config.disorder, estimate)
}

/// [`compare`] with sampling forced for every ensemble.
pub fn compare_sampled(config: &SampleConfig, workers: Option<usize>) -> Result<DeviationReport> {
    let estimate = match workers {
        Some(w) => sample_bloch_with_workers(config, w)?,
        None => sample_bloch(config)?,
    };
    deviation(&config.disorder, estimate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(d: Disorder, n: u64, seed: u64) -> SampleConfig {
        SampleConfig::new(d, n, seed).unwrap()
    }

    #[test]
    fn invalid_configs() {
        assert!(SampleConfig::new(Disorder::box_v(1.0), 0, 1).is_err());
        let bad = Disorder::BoxLambda {
            eps: 1.0,
            v: 0.5,
            w: 0.0,
        };
        assert!(SampleConfig::new(bad, 10, 1).is_err());
        let bad = Disorder::BoxV { eps: 0.0, v0: 1.0 };
        assert!(SampleConfig::new(bad, 10, 1).is_err());
        let bad = Disorder::BinaryV { eps: 1.0, v0: 0.0 };
        assert!(SampleConfig::new(bad, 10, 1).is_err());
    }

    #[test]
    fn exhaustive_rejects_box() {
        let err = exhaustive_binary(&config(Disorder::box_v(1.0), 10, 1)).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn exhaustive_reference_values() {
        let est = exhaustive_binary(&config(
            Disorder::BinaryLambda {
                eps: 0.0,
                v: 0.5,
                w: 1.0,
            },
            1,
            0,
        ))
        .unwrap();
        assert!((est.s_hat - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(est.c_hat, 0.0);

        let est =
            exhaustive_binary(&config(Disorder::BinaryV { eps: 1.0, v0: 0.5 }, 1, 0)).unwrap();
        assert!((est.c_hat - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(est.s_hat, 0.0);

        let d = Disorder::BinaryLambda {
            eps: 1.0,
            v: 1.0,
            w: 1.0,
        };
        let est = exhaustive_binary(&config(d, 1, 0)).unwrap();
        let closed = bloch_binary_lambda(1.0, 2.0).unwrap();
        assert!((est.s_hat - closed.s).abs() < 1e-14);
        assert!((est.c_hat - closed.c).abs() < 1e-14);
    }

    #[test]
    fn binary_compare_is_exact() {
        let r = compare(&config(Disorder::binary_lambda(0.7, 1.3), 100, 3)).unwrap();
        assert_eq!((r.z_s, r.z_c), (0.0, 0.0));
        assert!(r.pass);
    }

    #[test]
    fn moments_merge_matches_sequential() {
        let xs: Vec<(f64, f64)> = (0..37).map(|i| ((i as f64).sin(), (i as f64 * 0.3).cos())).collect();
        let mut all = Moments::default();
        xs.iter().for_each(|&(s, c)| all.push(s, c));
        let (a, b) = xs.split_at(11);
        let mut ma = Moments::default();
        let mut mb = Moments::default();
        a.iter().for_each(|&(s, c)| ma.push(s, c));
        b.iter().for_each(|&(s, c)| mb.push(s, c));
        let merged = ma.merge(mb);
        assert_eq!(merged.n, all.n);
        assert!((merged.mean_s - all.mean_s).abs() < 1e-15);
        assert!((merged.m2_c - all.m2_c).abs() < 1e-12);
        assert!((merged.cov - all.cov).abs() < 1e-12);
    }

    #[test]
    fn negative_parameters_flip_signs() {
        let d = Disorder::BinaryLambda {
            eps: -0.5,
            v: -0.3,
            w: 1.0,
        };
        let exact = exhaustive_binary(&config(d, 1, 0)).unwrap();
        let closed = d.closed_form().unwrap();
        assert!((exact.s_hat - closed.s).abs() < 1e-14);
        assert!((exact.c_hat - closed.c).abs() < 1e-14);
    }

    #[test]
    fn single_sample_has_zero_error() {
        let est = sample_bloch(&config(Disorder::box_v(1.0), 1, 9)).unwrap();
        assert_eq!(est.n, 1);
        assert_eq!(est.se_s, 0.0);
    }
}
