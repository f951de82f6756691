//! Bracketed scalar maximization and root finding.
//!
//! Maximization runs a coarse grid scan first and then a golden-section
//! search on the sub-bracket around the best grid point, so curves with more
//! than one peak resolve to the tallest one inside the bracket. Log-scale
//! brackets are searched in `ln x`.

use crate::error::{domain, Error, Result};

/// Default tolerance in sweep coordinates.
pub const DEFAULT_TOL: f64 = 1e-6;

/// Number of grid points scanned before the golden-section refinement.
pub const GRID_POINTS: usize = 64;

/// A scanned peak must rise this far above both neighbours. Smaller bumps
/// are rounding noise on curves whose values are near zero.
pub const PEAK_FLOOR: f64 = 1e-12;

const INV_PHI: f64 = 0.618_033_988_749_894_8;
const MAX_GOLDEN_ITERATIONS: usize = 400;
const MAX_BISECTION_ITERATIONS: usize = 2048;

/// A search interval in sweep coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    lo: f64,
    hi: f64,
    log_scale: bool,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64, log_scale: bool) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "bracket [{lo}, {hi}] is not finite"
            )));
        }
        if lo >= hi {
            return Err(Error::InvalidConfig(format!(
                "bracket requires lo < hi, got [{lo}, {hi}]"
            )));
        }
        if log_scale && lo <= 0.0 {
            return Err(domain("lo", lo, "lo > 0 for a log-scale bracket"));
        }
        Ok(Self { lo, hi, log_scale })
    }

    pub fn linear(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, false)
    }

    pub fn log(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, true)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_log_scale(&self) -> bool {
        self.log_scale
    }

    fn to_work(self, x: f64) -> f64 {
        if self.log_scale {
            x.ln()
        } else {
            x
        }
    }

    fn map_back(self, u: f64) -> f64 {
        if self.log_scale {
            u.exp()
        } else {
            u
        }
    }

    /// `n` evenly spaced points in working coordinates, mapped back to sweep
    /// coordinates. The end points are exactly `lo` and `hi`.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        assert!(n >= 2, "grid needs at least two points");
        let (u_lo, u_hi) = (self.to_work(self.lo), self.to_work(self.hi));
        (0..n)
            .map(|i| {
                if i == 0 {
                    self.lo
                } else if i == n - 1 {
                    self.hi
                } else {
                    let t = i as f64 / (n - 1) as f64;
                    self.map_back(u_lo + t * (u_hi - u_lo))
                }
            })
            .collect()
    }
}

/// Result of a maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
    /// The argmax sits on an edge of the bracket, so it is not an interior
    /// stationary point.
    pub at_boundary: bool,
}

/// Result of a bisection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub iterations: usize,
    /// Width of the final bracket.
    pub width: f64,
}

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { x })
    }
}

/// Golden-section search for a maximum on `[u_lo, u_hi]` in working
/// coordinates. Stops once the bracket is narrower than `tol` in sweep
/// coordinates or stops shrinking.
fn golden<F: Fn(f64) -> f64>(
    f: &F,
    b: &Bracket,
    mut a: f64,
    mut d: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    let g = |u: f64| eval(f, b.map_back(u));
    let mut x1 = d - INV_PHI * (d - a);
    let mut x2 = a + INV_PHI * (d - a);
    let mut f1 = g(x1)?;
    let mut f2 = g(x2)?;
    for _ in 0..MAX_GOLDEN_ITERATIONS {
        if (b.map_back(d) - b.map_back(a)).abs() < tol {
            break;
        }
        if f1 >= f2 {
            d = x2;
            x2 = x1;
            f2 = f1;
            x1 = d - INV_PHI * (d - a);
            f1 = g(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (d - a);
            f2 = g(x2)?;
        }
        if !(a < x1 && x1 <= x2 && x2 < d) {
            break;
        }
    }
    let x = b.map_back(0.5 * (a + d));
    Ok((x, eval(f, x)?))
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    b: &Bracket,
    grid: &[f64],
    values: &[f64],
    i: usize,
    tol: f64,
) -> Result<Maximum> {
    let n = grid.len();
    let a = b.to_work(grid[i.saturating_sub(1)]);
    let d = b.to_work(grid[(i + 1).min(n - 1)]);
    let (mut x, mut value) = golden(f, b, a, d, tol)?;
    if values[i] > value {
        x = grid[i];
        value = values[i];
    }
    let at_boundary =
        (i == 0 && (x - b.lo).abs() <= tol) || (i == n - 1 && (b.hi - x).abs() <= tol);
    Ok(Maximum {
        x,
        value,
        at_boundary,
    })
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(domain("tol", tol, "tol > 0"))
    }
}

/// Maximize `f` over the bracket: a [`GRID_POINTS`]-point scan picks the
/// best sub-bracket, golden-section search refines it to `tol`.
///
/// A maximum on the bracket edge is reported through
/// [`Maximum::at_boundary`]; callers decide whether that is an error.
pub fn maximize_scalar<F: Fn(f64) -> f64>(f: F, b: Bracket, tol: f64) -> Result<Maximum> {
    check_tol(tol)?;
    let grid = b.grid(GRID_POINTS);
    let values = grid
        .iter()
        .map(|&x| eval(&f, x))
        .collect::<Result<Vec<_>>>()?;
    let best = values
        .iter()
        .enumerate()
        .fold(0, |best, (i, &v)| if v > values[best] { i } else { best });
    refine(&f, &b, &grid, &values, best, tol)
}

/// All interior local maxima of `f` visible on a `points`-point scan, each
/// refined by golden-section search. Ordered by position. Peaks that rise
/// less than [`PEAK_FLOOR`] above their neighbours are ignored.
pub fn local_maxima<F: Fn(f64) -> f64>(
    f: F,
    b: Bracket,
    points: usize,
    tol: f64,
) -> Result<Vec<Maximum>> {
    check_tol(tol)?;
    if points < 3 {
        return Err(Error::InvalidConfig(format!(
            "local maxima scan needs at least 3 points, got {points}"
        )));
    }
    let grid = b.grid(points);
    let values = grid
        .iter()
        .map(|&x| eval(&f, x))
        .collect::<Result<Vec<_>>>()?;
    (1..points - 1)
        .filter(|&i| {
            values[i] > values[i - 1] + PEAK_FLOOR && values[i] > values[i + 1] + PEAK_FLOOR
        })
        .map(|i| refine(&f, &b, &grid, &values, i, tol))
        .collect()
}

/// Bisection with the iteration count and final width.
pub fn bisect<G: Fn(f64) -> f64>(g: G, b: Bracket, tol: f64) -> Result<Root> {
    check_tol(tol)?;
    let (mut lo, mut hi) = (b.lo, b.hi);
    let g_lo = eval(&g, lo)?;
    let g_hi = eval(&g, hi)?;
    if g_lo == 0.0 {
        return Ok(Root {
            x: lo,
            iterations: 0,
            width: hi - lo,
        });
    }
    if g_hi == 0.0 {
        return Ok(Root {
            x: hi,
            iterations: 0,
            width: hi - lo,
        });
    }
    if g_lo.signum() == g_hi.signum() {
        return Err(Error::NoSignChange { lo, hi, g_lo, g_hi });
    }
    let lo_negative = g_lo < 0.0;
    let mut iterations = 0;
    while hi - lo >= tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if iterations == MAX_BISECTION_ITERATIONS {
            return Err(Error::NonConvergence { iterations });
        }
        iterations += 1;
        let g_mid = eval(&g, mid)?;
        if g_mid == 0.0 {
            return Ok(Root {
                x: mid,
                iterations,
                width: 0.0,
            });
        }
        if (g_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Root {
        x: 0.5 * (lo + hi),
        iterations,
        width: hi - lo,
    })
}

/// Root of `g` on the bracket by bisection, to an interval narrower than
/// `tol`. Requires a sign change across the bracket.
pub fn find_root<G: Fn(f64) -> f64>(g: G, b: Bracket, tol: f64) -> Result<f64> {
    bisect(g, b, tol).map(|r| r.x)
}
