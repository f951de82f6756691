//! A single entry point over every complexity curve in the crate, used by
//! the command-line tool and the examples.

use std::collections::BTreeMap;
use std::io::Write;

use crate::entropy::{radius_from_p, EntropyTriple};
use crate::error::{Error, Result};
use crate::optimize::{local_maxima, maximize_scalar, Bracket, Maximum};
use crate::thermal::{
    curie_weiss_solve, ising_complexity, paramagnet_complexity, paramagnet_occupation,
    IsingPoint, ParamagnetPoint, T_STAR_BRACKET,
};
use crate::tls::{chi_inverse_bloch, model_complexity, model_radius, LambdaDisorder, ModelSpec};

/// A complexity curve over one sweep variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curve {
    Tls(ModelSpec),
    /// λ disorder swept in `χ⁻¹` at fixed `ζ`.
    ChiInverse { kind: LambdaDisorder, zeta: f64 },
    /// Free spins against `x = μ_B B/(k_B T)`.
    Paramagnet,
    /// Mean-field Ising against `x = T/T_c`.
    Ising { alpha: f64 },
}

impl Curve {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Tls(m) => m.name(),
            Self::ChiInverse {
                kind: LambdaDisorder::Binary,
                ..
            } => "binary-lambda-inv",
            Self::ChiInverse {
                kind: LambdaDisorder::Box,
                ..
            } => "box-lambda-inv",
            Self::Paramagnet => "paramagnet",
            Self::Ising { .. } => "ising",
        }
    }

    pub fn params(&self) -> BTreeMap<&'static str, f64> {
        let mut p = BTreeMap::new();
        match *self {
            Self::Tls(m) => {
                if let Some(chi) = m.chi() {
                    p.insert("chi", chi);
                }
            }
            Self::ChiInverse { zeta, .. } => {
                p.insert("zeta", zeta);
            }
            Self::Ising { alpha } => {
                p.insert("alpha", alpha);
            }
            Self::Paramagnet => {}
        }
        p
    }

    pub fn entropy(&self, v: f64, normalized: bool) -> Result<EntropyTriple> {
        match *self {
            Self::Tls(m) => model_complexity(m, v, normalized),
            Self::ChiInverse { kind, zeta } => chi_inverse_bloch(kind, zeta, v)?.entropy(normalized),
            Self::Paramagnet => Ok(paramagnet_complexity(ParamagnetPoint::new(v)?, normalized)),
            Self::Ising { alpha } => ising_complexity(IsingPoint::new(v, alpha)?, normalized),
        }
    }

    pub fn complexity(&self, v: f64) -> Result<f64> {
        self.entropy(v, false).map(|e| e.complexity)
    }

    /// Bloch radius (or `|m|`, or `tanh x`) of the state at `v`.
    pub fn radius(&self, v: f64) -> Result<f64> {
        match *self {
            Self::Tls(m) => model_radius(m, v),
            Self::ChiInverse { kind, zeta } => Ok(chi_inverse_bloch(kind, zeta, v)?.r),
            Self::Paramagnet => Ok(radius_from_p(paramagnet_occupation(ParamagnetPoint::new(v)?))),
            Self::Ising { alpha } => Ok(curie_weiss_solve(IsingPoint::new(v, alpha)?)?.m.abs()),
        }
    }

    /// The bracket used when the caller gives none.
    pub fn default_bracket(&self) -> Bracket {
        let b = match self {
            Self::Tls(_) | Self::Paramagnet => Bracket::log(1e-2, 1e2),
            Self::ChiInverse { .. } => Bracket::log(1e-3, 1e5),
            Self::Ising { .. } => Bracket::linear(T_STAR_BRACKET.0, T_STAR_BRACKET.1),
        };
        b.expect("static bracket")
    }

    fn objective(&self) -> impl Fn(f64) -> f64 + '_ {
        move |v| self.complexity(v).unwrap_or(f64::NAN)
    }

    /// Tallest maximum of the complexity inside `bracket`.
    pub fn maximize(&self, bracket: Bracket, tol: f64) -> Result<Maximum> {
        maximize_scalar(self.objective(), bracket, tol)
    }

    /// Every interior local maximum visible on a `points`-point scan.
    pub fn local_maxima(&self, bracket: Bracket, points: usize, tol: f64) -> Result<Vec<Maximum>> {
        local_maxima(self.objective(), bracket, points, tol)
    }
}

/// One CSV curve: the sweep grid and output options.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRequest {
    pub curve: Curve,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub log_grid: bool,
    pub normalized: bool,
}

impl CurveRequest {
    pub fn grid(&self) -> Result<Vec<f64>> {
        if self.points < 2 {
            return Err(Error::InvalidConfig(format!(
                "points must be at least 2, got {}",
                self.points
            )));
        }
        Ok(Bracket::new(self.min, self.max, self.log_grid)?.grid(self.points))
    }

    pub fn evaluate(&self) -> Result<Vec<(f64, EntropyTriple)>> {
        self.grid()?
            .into_iter()
            .map(|x| Ok((x, self.curve.entropy(x, self.normalized)?)))
            .collect()
    }
}

/// Shortest decimal that parses back to the same `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

pub const CSV_HEADER: &str = "x,S,R2,SC";

/// Write `x,S,R2,SC` rows with LF line endings.
pub fn write_csv<W: Write>(mut out: W, rows: &[(f64, EntropyTriple)]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for (x, e) in rows {
        writeln!(
            out,
            "{},{},{},{}",
            fmt_f64(*x),
            fmt_f64(e.shannon),
            fmt_f64(e.renyi2),
            fmt_f64(e.complexity)
        )?;
    }
    out.flush()
}
