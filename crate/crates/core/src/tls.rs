//! Two-level system models with closed-form ensemble averages.
//!
//! The Hamiltonian `H = ½(ε − λ)σ_z + Vσ_x` is diagonalized by a rotation
//! with `sin φ = 2V/Δ`, `cos φ = (ε − λ)/Δ`, `Δ = √((ε − λ)² + 4V²)`.
//! Averaging the eigenstate projectors over a random `λ` or `V` leaves a
//! mixed state with Bloch components `s = <sin φ>`, `c = <cos φ>`.
//!
//! Every model is expressed in one dimensionless sweep variable:
//!
//! | model            | sweep | fixed      |
//! |------------------|-------|------------|
//! | Landau-Zener     | `x`   |            |
//! | λ disorder       | `τ = 2V/W` | `χ = ε/W` |
//! | V disorder       | `κ = 2V₀/ε` |           |
//!
//! The Landau-Zener models are pure states at every `x`; their complexity is
//! that of the basis populations, see [`complexity_from_coeff`].

use std::f64::consts::PI;

use serde::Serialize;

use crate::entropy::{
    complexity_from_coeff, entropy_from_r, radius_from_coeff, BlochAverage, EntropyTriple,
};
use crate::error::{domain, Error, Result};

/// Below this `κ`, `asinh(κ)/κ` switches to its series.
const SERIES_THRESHOLD: f64 = 1e-6;

/// The six analytic two-level models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelSpec {
    /// Diagonal energies swept linearly through the avoided crossing.
    LzDiagonal,
    /// Coupling swept linearly at fixed level splitting.
    LzOffDiagonal,
    /// `λ = ±W` with equal weight.
    BinaryLambda { chi: f64 },
    /// `V = ±V₀` with equal weight.
    BinaryV,
    /// `λ` uniform on `[−W, W]`.
    BoxLambda { chi: f64 },
    /// `V` uniform on `[−V₀, V₀]`.
    BoxV,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepVariable {
    X,
    Tau,
    Kappa,
}

impl ModelSpec {
    pub fn binary_lambda(chi: f64) -> Result<Self> {
        check_chi(chi)?;
        Ok(Self::BinaryLambda { chi })
    }

    pub fn box_lambda(chi: f64) -> Result<Self> {
        check_chi(chi)?;
        Ok(Self::BoxLambda { chi })
    }

    pub fn sweep_variable(&self) -> SweepVariable {
        match self {
            Self::LzDiagonal | Self::LzOffDiagonal => SweepVariable::X,
            Self::BinaryLambda { .. } | Self::BoxLambda { .. } => SweepVariable::Tau,
            Self::BinaryV | Self::BoxV => SweepVariable::Kappa,
        }
    }

    pub fn chi(&self) -> Option<f64> {
        match *self {
            Self::BinaryLambda { chi } | Self::BoxLambda { chi } => Some(chi),
            _ => None,
        }
    }

    pub fn is_landau_zener(&self) -> bool {
        matches!(self, Self::LzDiagonal | Self::LzOffDiagonal)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::LzDiagonal => "lz-diag",
            Self::LzOffDiagonal => "lz-offd",
            Self::BinaryLambda { .. } => "binary-lambda",
            Self::BinaryV => "binary-v",
            Self::BoxLambda { .. } => "box-lambda",
            Self::BoxV => "box-v",
        }
    }
}

fn check_chi(chi: f64) -> Result<()> {
    if chi.is_finite() && chi >= 0.0 {
        Ok(())
    } else {
        Err(domain("chi", chi, "finite chi >= 0"))
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if tau > 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(domain("tau", tau, "tau > 0"))
    }
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa >= 0.0 && kappa.is_finite() {
        Ok(())
    } else {
        Err(domain("kappa", kappa, "kappa >= 0"))
    }
}

/// `(χ, τ) = (ε/W, 2V/W)` from raw energies of a λ-disorder model.
pub fn lambda_disorder_params(eps: f64, v: f64, w: f64) -> Result<(f64, f64)> {
    if !(w > 0.0 && w.is_finite()) {
        return Err(domain("W", w, "W > 0"));
    }
    let chi = eps.abs() / w;
    let tau = 2.0 * v.abs() / w;
    check_chi(chi)?;
    check_tau(tau)?;
    Ok((chi, tau))
}

/// `κ = 2V₀/ε` from raw energies of a V-disorder model.
pub fn coupling_disorder_param(eps: f64, v0: f64) -> Result<f64> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(domain("eps", eps, "eps > 0"));
    }
    let kappa = 2.0 * v0.abs() / eps;
    check_kappa(kappa)?;
    Ok(kappa)
}

/// Landau-Zener sweep coordinate `x = γt/T₀` (diagonal sweep, `γ = ε/V`) or
/// `x = δt/T₀` (off-diagonal sweep, `δ = V/ε`).
pub fn lz_sweep_coordinate(ratio: f64, t: f64, t0: f64) -> Result<f64> {
    if !(t0 > 0.0 && t0.is_finite()) {
        return Err(domain("T0", t0, "T0 > 0"));
    }
    Ok(ratio * t / t0)
}

/// Unnormalized `|1>` amplitude of `|+> = c|1> + |0>` for the diagonal sweep,
/// `√(1 + x²) + x`. The `|->` coefficient is its negative.
pub fn lz_coeff_diag(x: f64) -> f64 {
    let root = x.hypot(1.0);
    if x >= 0.0 {
        root + x
    } else {
        1.0 / (root - x)
    }
}

/// Unnormalized `|1>` amplitude for the off-diagonal sweep,
/// `(√(1 + x²) + 1)/x`. Diverges at `x = 0`, where the eigenstate is a pure
/// basis state.
pub fn lz_coeff_offdiag(x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(domain("x", x, "x != 0"));
    }
    Ok((x.hypot(1.0) + 1.0) / x)
}

/// Two-point λ disorder, `λ = ±W`.
pub fn bloch_binary_lambda(chi: f64, tau: f64) -> Result<BlochAverage> {
    check_chi(chi)?;
    check_tau(tau)?;
    let below = (chi - 1.0).hypot(tau);
    let above = (chi + 1.0).hypot(tau);
    let c = 0.5 * ((chi - 1.0) / below + (chi + 1.0) / above);
    let s = 0.5 * tau * (1.0 / below + 1.0 / above);
    Ok(BlochAverage::new(s, c))
}

/// Two-point coupling disorder, `V = ±V₀`: `s = 0`, `c = 1/√(1 + κ²)`.
pub fn bloch_binary_v(kappa: f64) -> Result<BlochAverage> {
    check_kappa(kappa)?;
    Ok(BlochAverage::new(0.0, 1.0 / kappa.hypot(1.0)))
}

/// Uniform λ disorder on `[−W, W]`.
///
/// `s` is the average of the non-negative `2V/Δ`, so it is reported
/// non-negative: `(τ/2)[asinh((χ+1)/τ) − asinh((χ−1)/τ)]`, which is the
/// magnitude of `(τ/2) ln[(√((χ−1)²+τ²) + χ − 1)/(√((χ+1)²+τ²) + χ + 1)]`.
pub fn bloch_box_lambda(chi: f64, tau: f64) -> Result<BlochAverage> {
    check_chi(chi)?;
    check_tau(tau)?;
    let above = (chi + 1.0).hypot(tau);
    let below = (chi - 1.0).hypot(tau);
    // ½[above − below] without the cancellation at large χ
    let c = 2.0 * chi / (above + below);
    // asinh((χ+1)/τ) − asinh((χ−1)/τ) written as a single ln_1p
    let d = chi - 1.0;
    let e_below = if d >= 0.0 { d + below } else { tau * tau / (below - d) };
    let s = 0.5 * tau * (2.0 * (1.0 + c) / e_below).ln_1p();
    Ok(BlochAverage::new(s, c))
}

/// Uniform coupling disorder on `[−V₀, V₀]`: `s = 0`, `c = asinh(κ)/κ`.
pub fn bloch_box_v(kappa: f64) -> Result<BlochAverage> {
    check_kappa(kappa)?;
    let c = if kappa < SERIES_THRESHOLD {
        1.0 - kappa * kappa / 6.0
    } else {
        kappa.asinh() / kappa
    };
    Ok(BlochAverage::new(0.0, c))
}

/// Averaged Bloch vector of a disorder model. Landau-Zener models are pure
/// states with `r = 1` in their own eigenbasis and are rejected here.
pub fn model_bloch(model: ModelSpec, v: f64) -> Result<BlochAverage> {
    match model {
        ModelSpec::BinaryLambda { chi } => bloch_binary_lambda(chi, v),
        ModelSpec::BinaryV => bloch_binary_v(v),
        ModelSpec::BoxLambda { chi } => bloch_box_lambda(chi, v),
        ModelSpec::BoxV => bloch_box_v(v),
        ModelSpec::LzDiagonal | ModelSpec::LzOffDiagonal => Err(Error::Unsupported(format!(
            "{} has no disorder average",
            model.name()
        ))),
    }
}

fn lz_coeff(model: ModelSpec, x: f64) -> Result<Option<f64>> {
    match model {
        ModelSpec::LzDiagonal => {
            if !x.is_finite() {
                return Err(domain("x", x, "finite"));
            }
            Ok(Some(lz_coeff_diag(x)))
        }
        // x = 0 is the pure basis state limit
        ModelSpec::LzOffDiagonal if x == 0.0 => Ok(None),
        ModelSpec::LzOffDiagonal => lz_coeff_offdiag(x).map(Some),
        _ => unreachable!("not a Landau-Zener model"),
    }
}

/// Entropies along the model's sweep variable.
pub fn model_complexity(model: ModelSpec, v: f64, normalized: bool) -> Result<EntropyTriple> {
    if model.is_landau_zener() {
        match lz_coeff(model, v)? {
            Some(c) => complexity_from_coeff(c, normalized),
            None => entropy_from_r(1.0, normalized),
        }
    } else {
        model_bloch(model, v)?.entropy(normalized)
    }
}

/// The radius of the state whose complexity [`model_complexity`] reports:
/// the population imbalance for Landau-Zener models, the averaged Bloch
/// radius otherwise.
pub fn model_radius(model: ModelSpec, v: f64) -> Result<f64> {
    if model.is_landau_zener() {
        match lz_coeff(model, v)? {
            Some(c) => radius_from_coeff(c),
            None => Ok(1.0),
        }
    } else {
        Ok(model_bloch(model, v)?.r)
    }
}

/// λ-disorder distributions for the sweep in `χ⁻¹ = W/ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaDisorder {
    Binary,
    Box,
}

/// Bloch vector along the `χ⁻¹` sweep of the curve family labelled by `ζ`:
/// evaluated at `χ = 1/χ⁻¹` and `τ = ζ·χ⁻¹`.
pub fn chi_inverse_bloch(kind: LambdaDisorder, zeta: f64, chi_inv: f64) -> Result<BlochAverage> {
    if !(zeta > 0.0 && zeta.is_finite()) {
        return Err(domain("zeta", zeta, "zeta > 0"));
    }
    if !(chi_inv > 0.0 && chi_inv.is_finite()) {
        return Err(domain("chi_inv", chi_inv, "chi_inv > 0"));
    }
    let chi = 1.0 / chi_inv;
    let tau = zeta * chi_inv;
    match kind {
        LambdaDisorder::Binary => bloch_binary_lambda(chi, tau),
        LambdaDisorder::Box => bloch_box_lambda(chi, tau),
    }
}

pub fn sweep_chi_inverse(
    kind: LambdaDisorder,
    zeta: f64,
    chi_inv: f64,
    normalized: bool,
) -> Result<EntropyTriple> {
    chi_inverse_bloch(kind, zeta, chi_inv)?.entropy(normalized)
}

/// Bloch-sphere angles and basis populations of the Landau-Zener eigenstates
/// `|±> = cos(θ±/2)|0> + e^{iφ±} sin(θ±/2)|1>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochState {
    pub theta_plus: f64,
    pub theta_minus: f64,
    pub phi_plus: f64,
    pub phi_minus: f64,
    /// Population of `|1>` in `|+>`.
    pub pop1: f64,
    /// Population of `|0>` in `|+>`.
    pub pop0: f64,
}

/// Normalized `|1>` amplitude `c/√(1 + c²)` of the state `c|1> + |0>`.
pub fn normalized_coeff(cval: f64) -> f64 {
    cval / cval.hypot(1.0)
}

pub fn bloch_report(model: ModelSpec, v: f64) -> Result<BlochState> {
    if !model.is_landau_zener() {
        return Err(Error::Unsupported(format!(
            "{} is a mixed state; use its averaged Bloch vector",
            model.name()
        )));
    }
    let c = lz_coeff(model, v)?.ok_or_else(|| domain("x", v, "x != 0 for lz-offd"))?;
    let a = c.abs();
    let (pop1, pop0) = if a >= 1.0 {
        let pop0 = 1.0 / (1.0 + a * a);
        (1.0 - pop0, pop0)
    } else {
        let pop1 = a * a / (1.0 + a * a);
        (pop1, 1.0 - pop1)
    };
    // cos(θ+/2) ∝ 1, sin(θ+/2) ∝ |c|; |−> swaps the two amplitudes
    let theta_plus = 2.0 * a.atan2(1.0);
    let theta_minus = 2.0 * 1f64.atan2(a);
    let (phi_plus, phi_minus) = if c >= 0.0 { (0.0, PI) } else { (PI, 0.0) };
    Ok(BlochState {
        theta_plus,
        theta_minus,
        phi_plus,
        phi_minus,
        pop1,
        pop0,
    })
}
