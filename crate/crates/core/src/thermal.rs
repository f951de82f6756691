//! Thermal two-level ensembles: free spins in a field and the mean-field
//! Ising ferromagnet.
//!
//! Both reduce to a two-point occupation `p`, so their complexity comes from
//! [`complexity_from_p`]. The Ising magnetization solves the Curie-Weiss
//! equation `m = tanh((m + α)/x)` in reduced variables `x = T/T_c`,
//! `α = ε_B/(zJ)`.

use serde::Serialize;

use crate::entropy::{complexity_from_p, EntropyTriple};
use crate::error::{domain, Error, Result};
use crate::optimize::{maximize_scalar, Bracket};

const CW_MAX_ITERATIONS: usize = 200;
const CW_RESIDUAL: f64 = 1e-12;

/// `T*/T_c` is searched on this bracket.
pub const T_STAR_BRACKET: (f64, f64) = (0.1, 5.0);

/// A paramagnet at `x = βε = μ_B B/(k_B T)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamagnetPoint {
    x: f64,
}

impl ParamagnetPoint {
    /// Negative fields map to `|x|`.
    pub fn new(x: f64) -> Result<Self> {
        if x.is_finite() {
            Ok(Self { x: x.abs() })
        } else {
            Err(domain("x", x, "finite"))
        }
    }

    /// From a field `B`, temperature `T` and the constants `μ_B`, `k_B`.
    pub fn from_raw(b: f64, t: f64, mu_b: f64, k_b: f64) -> Result<Self> {
        if !(t > 0.0 && k_b > 0.0) {
            return Err(domain("T", t, "T > 0 and k_B > 0"));
        }
        Self::new(mu_b * b / (k_b * t))
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

/// A mean-field Ising state at `x = T/T_c` and `α = ε_B/(zJ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsingPoint {
    x: f64,
    alpha: f64,
}

impl IsingPoint {
    pub fn new(x: f64, alpha: f64) -> Result<Self> {
        if !(x > 0.0 && x.is_finite()) {
            return Err(domain("x", x, "x = T/T_c > 0"));
        }
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(domain("alpha", alpha, "alpha >= 0"));
        }
        Ok(Self { x, alpha })
    }

    /// From raw parameters, with `k_B T_c = zJ` and `ε_B = μ_B B`.
    pub fn from_raw(t: f64, b: f64, j: f64, z: f64, mu_b: f64, k_b: f64) -> Result<Self> {
        let zj = z * j;
        if zj.is_nan() || zj <= 0.0 {
            return Err(domain("zJ", zj, "zJ > 0"));
        }
        Self::new(k_b * t / zj, (mu_b * b).abs() / zj)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Zero,
    Positive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MagnetizationSolution {
    pub m: f64,
    pub branch: Branch,
    /// `m − tanh((m + α)/x)`.
    pub residual: f64,
    pub iterations: usize,
}

pub fn paramagnet_occupation(pt: ParamagnetPoint) -> f64 {
    // e^x / (2 cosh x)
    1.0 / (1.0 + (-2.0 * pt.x).exp())
}

pub fn paramagnet_complexity(pt: ParamagnetPoint, normalized: bool) -> EntropyTriple {
    complexity_from_p(paramagnet_occupation(pt), normalized)
        .expect("occupation lies in [1/2, 1]")
}

/// Largest root of the Curie-Weiss equation, i.e. the field-aligned stable
/// branch. Found by bisection on `g(m) = m − tanh((m + α)/x)` over
/// `[max(tanh(α/x), 1e−16), 1]`.
pub fn curie_weiss_solve(pt: IsingPoint) -> Result<MagnetizationSolution> {
    let IsingPoint { x, alpha } = pt;
    let g = |m: f64| m - ((m + alpha) / x).tanh();
    if alpha == 0.0 && x >= 1.0 {
        return Ok(MagnetizationSolution {
            m: 0.0,
            branch: Branch::Zero,
            residual: 0.0,
            iterations: 0,
        });
    }

    let mut lo = (alpha / x).tanh().max(1e-16);
    let mut hi = 1.0;
    if g(hi) <= 0.0 {
        // tanh saturated to 1 in double precision
        return Ok(MagnetizationSolution {
            m: 1.0,
            branch: Branch::Positive,
            residual: g(1.0),
            iterations: 0,
        });
    }
    if g(lo) > 0.0 {
        return Err(Error::NoSignChange {
            lo,
            hi,
            g_lo: g(lo),
            g_hi: g(hi),
        });
    }
    let mut iterations = 0;
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if iterations == CW_MAX_ITERATIONS {
            return Err(Error::NonConvergence { iterations });
        }
        iterations += 1;
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let m = [lo, 0.5 * (lo + hi), hi]
        .into_iter()
        .min_by(|a, b| g(*a).abs().total_cmp(&g(*b).abs()))
        .expect("non-empty");
    let residual = g(m);
    if residual.abs() >= CW_RESIDUAL {
        return Err(Error::NonConvergence { iterations });
    }
    Ok(MagnetizationSolution {
        m,
        branch: Branch::Positive,
        residual,
        iterations,
    })
}

/// Complexity of the occupation `p = (1 + m)/2`.
pub fn ising_complexity(pt: IsingPoint, normalized: bool) -> Result<EntropyTriple> {
    let sol = curie_weiss_solve(pt)?;
    complexity_from_p(0.5 * (1.0 + sol.m), normalized)
}

/// Temperature `T*/T_c` of maximal complexity at field ratio `alpha`.
///
/// Errors with [`Error::BoundaryMaximum`] when the maximum sits on the edge
/// of [`T_STAR_BRACKET`].
pub fn find_t_star(alpha: f64) -> Result<f64> {
    find_t_star_tol(alpha, 1e-9)
}

pub fn find_t_star_tol(alpha: f64, tol: f64) -> Result<f64> {
    IsingPoint::new(1.0, alpha)?;
    let bracket = Bracket::linear(T_STAR_BRACKET.0, T_STAR_BRACKET.1)?;
    let f = |x: f64| match IsingPoint::new(x, alpha).and_then(|pt| ising_complexity(pt, false)) {
        Ok(e) => e.complexity,
        Err(_) => f64::NAN,
    };
    let max = maximize_scalar(f, bracket, tol)?;
    if max.at_boundary {
        return Err(Error::BoundaryMaximum { x: max.x });
    }
    Ok(max.x)
}
