//! Shannon entropy, Rényi-2 entropy and entropic complexity of a two-level
//! density matrix.
//!
//! A 2×2 density matrix with Bloch radius `r` has eigenvalues `(1 ± r)/2`.
//! Its entropic complexity is the Shannon entropy minus the order-2 Rényi
//! entropy of that spectrum. It vanishes for pure states (`r = 1`) and for
//! the maximally mixed state (`r = 0`), and peaks at [`critical_r`].
//!
//! Three parametrizations are provided, all in nats internally:
//!
//! - [`entropy_from_r`]: Bloch radius of an averaged density matrix,
//! - [`complexity_from_p`]: occupation probability of one level,
//! - [`complexity_from_coeff`]: unnormalized amplitude ratio of a pure
//!   state expanded in the computational basis.
//!
//! Each is evaluated with its own formula so the three can check each other.

use std::f64::consts::LN_2;
use std::sync::OnceLock;

use crate::error::{domain, Error, Result};
use crate::optimize::{bisect, Bracket};

/// Radii in `(1, 1 + RADIUS_CLAMP]` are rounding overshoot and clamp to 1.
pub const RADIUS_CLAMP: f64 = 1e-9;

/// Shannon entropy, Rényi-2 entropy and their difference.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EntropyTriple {
    pub shannon: f64,
    pub renyi2: f64,
    pub complexity: f64,
    /// All three values are divided by ln 2.
    pub normalized: bool,
}

impl EntropyTriple {
    const ZERO: Self = Self {
        shannon: 0.0,
        renyi2: 0.0,
        complexity: 0.0,
        normalized: false,
    };

    const MAXIMALLY_MIXED: Self = Self {
        shannon: LN_2,
        renyi2: LN_2,
        complexity: 0.0,
        normalized: false,
    };

    fn from_parts(shannon: f64, renyi2: f64) -> Self {
        Self {
            shannon,
            renyi2,
            complexity: (shannon - renyi2).max(0.0),
            normalized: false,
        }
    }

    /// Divide by ln 2 when `normalized` is set and the triple is in nats.
    pub fn scaled(self, normalized: bool) -> Self {
        if normalized && !self.normalized {
            Self {
                shannon: self.shannon / LN_2,
                renyi2: self.renyi2 / LN_2,
                complexity: self.complexity / LN_2,
                normalized: true,
            }
        } else {
            self
        }
    }
}

/// Ensemble-averaged Bloch components `s = <sin φ>`, `c = <cos φ>` and the
/// radius `r` of the averaged vector.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BlochAverage {
    pub s: f64,
    pub c: f64,
    pub r: f64,
}

impl BlochAverage {
    pub fn new(s: f64, c: f64) -> Self {
        Self {
            s,
            c,
            r: s.hypot(c),
        }
    }

    pub fn entropy(&self, normalized: bool) -> Result<EntropyTriple> {
        entropy_from_r(self.r, normalized)
    }
}

/// Entropies of the averaged density matrix with Bloch radius `r`.
pub fn entropy_from_r(r: f64, normalized: bool) -> Result<EntropyTriple> {
    if !(0.0..=1.0 + RADIUS_CLAMP).contains(&r) {
        return Err(domain("r", r, "0 <= r <= 1"));
    }
    let r = r.min(1.0);
    if r == 1.0 {
        return Ok(EntropyTriple::ZERO.scaled(normalized));
    }
    // ln 2 - S = [(1+r) ln(1+r) + (1-r) ln(1-r)] / 2
    let deficit = 0.5 * ((1.0 + r) * r.ln_1p() + (1.0 - r) * (-r).ln_1p());
    let purity_gain = (r * r).ln_1p();
    Ok(EntropyTriple {
        shannon: (LN_2 - deficit).max(0.0),
        renyi2: LN_2 - purity_gain,
        complexity: (purity_gain - deficit).max(0.0),
        normalized: false,
    }
    .scaled(normalized))
}

/// Entropies of a two-point distribution `(p, 1 - p)`.
pub fn complexity_from_p(p: f64, normalized: bool) -> Result<EntropyTriple> {
    if !(0.0..=1.0).contains(&p) {
        return Err(domain("p", p, "0 <= p <= 1"));
    }
    let lo = p.min(1.0 - p);
    if lo == 0.0 {
        return Ok(EntropyTriple::ZERO.scaled(normalized));
    }
    if lo == 0.5 {
        return Ok(EntropyTriple::MAXIMALLY_MIXED.scaled(normalized));
    }
    let hi = 1.0 - lo;
    let shannon = -(lo * lo.ln() + hi * (-lo).ln_1p());
    // p² + (1-p)² = 1 - 2p(1-p)
    let renyi2 = -(-2.0 * lo * hi).ln_1p();
    Ok(EntropyTriple::from_parts(shannon, renyi2).scaled(normalized))
}

/// Entropies of the pure state `c|1> + |0>` (before normalization) measured
/// in the computational basis. Symmetric under `c -> 1/c` and `c -> -c`.
pub fn complexity_from_coeff(cval: f64, normalized: bool) -> Result<EntropyTriple> {
    if !cval.is_finite() {
        return Err(domain("cval", cval, "finite"));
    }
    let a = cval.abs();
    let q = if a > 1.0 { (1.0 / a).powi(2) } else { a * a };
    if q == 0.0 {
        return Ok(EntropyTriple::ZERO.scaled(normalized));
    }
    // p = q/(1+q); S = ln(1+q) - q ln q/(1+q); R2 = 2 ln(1+q) - ln(1+q²)
    let shannon = q.ln_1p() - q * q.ln() / (1.0 + q);
    let renyi2 = 2.0 * q.ln_1p() - (q * q).ln_1p();
    Ok(EntropyTriple::from_parts(shannon, renyi2).scaled(normalized))
}

/// Stationarity condition of the complexity in `r`: zero at [`critical_r`].
pub fn stationarity(r: f64) -> f64 {
    r.atanh() - 2.0 * r / (1.0 + r * r)
}

/// The Bloch radius maximizing the complexity, the unique root of
/// `atanh(r) = 2r/(1 + r²)` in `(0, 1)`. Approximately 0.7432.
pub fn critical_r() -> f64 {
    static CRITICAL_R: OnceLock<f64> = OnceLock::new();
    *CRITICAL_R.get_or_init(|| {
        let bracket = Bracket::linear(0.5, 0.9).expect("static bracket");
        bisect(stationarity, bracket, 1e-15)
            .expect("stationarity changes sign on [0.5, 0.9]")
            .x
    })
}

/// The occupation `|2p - 1|` expressed as a Bloch radius.
pub fn radius_from_p(p: f64) -> f64 {
    (2.0 * p - 1.0).abs()
}

/// Radius of the pure state with amplitude ratio `c`: `|c² - 1| / (c² + 1)`.
pub fn radius_from_coeff(cval: f64) -> Result<f64> {
    if !cval.is_finite() {
        return Err(Error::NonFinite { x: cval });
    }
    let a = cval.abs();
    let q = if a > 1.0 { (1.0 / a).powi(2) } else { a * a };
    Ok((1.0 - q) / (1.0 + q))
}
