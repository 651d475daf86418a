//! Floating-point spectra of connection Laplacians and the finite spectral
//! zeta functions built from them: evaluation at complex arguments, the
//! Euler characteristic / Morse index / determinant sign recovered from
//! zeta, functional-equation residuals, product spectra, zeta grids over a
//! rectangle, and Newton root scans.
//!
//! Branch convention: for a negative eigenvalue, log(lambda) =
//! log|lambda| + i pi (upper branch). This is forced by the identity
//! zeta'(0) = -i pi n(G).

use num_complex::Complex64;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::connection::connection_laplacian;
use crate::eigen::symmetric_eigenvalues;
use crate::error::{Error, Result};

/// Default tolerance for classifying eigenvalue signs; connection
/// Laplacians in this domain have min |lambda| around 0.2.
pub const SIGN_TOL: f64 = 1e-9;

/// Sorted eigenvalues of an invertible symmetric operator with sign counts.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    positive: usize,
    negative: usize,
    tolerance: f64,
}

impl Spectrum {
    /// Wraps an eigenvalue list. Fails if any |lambda| <= tol (the zeta
    /// functions here require invertibility).
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, tolerance: f64) -> Result<Self> {
        eigenvalues.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if eigenvalues.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite eigenvalue".into()));
        }
        if let Some(min) = eigenvalues.iter().map(|v| v.abs()).reduce(f64::min) {
            if min <= tolerance {
                return Err(Error::InvalidInput(format!(
                    "eigenvalue {min:e} within sign tolerance {tolerance:e} of zero"
                )));
            }
        }
        let negative = eigenvalues.iter().filter(|&&v| v < 0.0).count();
        let positive = eigenvalues.len() - negative;
        Ok(Spectrum {
            eigenvalues,
            positive,
            negative,
            tolerance,
        })
    }

    /// Spectrum of a symmetric matrix given row-major.
    pub fn from_symmetric(a: &[f64], n: usize) -> Result<Self> {
        Spectrum::from_eigenvalues(symmetric_eigenvalues(a, n)?, SIGN_TOL)
    }

    /// Spectrum of the connection Laplacian of a complex.
    pub fn of_complex(g: &SimplicialComplex) -> Result<Self> {
        let l = connection_laplacian(g);
        Spectrum::from_symmetric(&l.to_f64(), g.len())
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.positive
    }

    pub fn negative_count(&self) -> usize {
        self.negative
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Number of eigenvalues within `tol` of `x` (used to report the
    /// +-1 multiplicities).
    pub fn count_near(&self, x: f64, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|v| (**v - x).abs() < tol).count()
    }
}

fn log_branch(lambda: f64) -> Complex64 {
    if lambda < 0.0 {
        Complex64::new(lambda.abs().ln(), std::f64::consts::PI)
    } else {
        Complex64::new(lambda.ln(), 0.0)
    }
}

/// zeta_L(s) = sum_k lambda_k^{-s} with the upper-branch logarithm.
pub fn zeta_l(spec: &Spectrum, s: Complex64) -> Complex64 {
    spec.eigenvalues
        .iter()
        .map(|&l| (-s * log_branch(l)).exp())
        .sum()
}

/// zeta_{L^2}(s) = sum_k (lambda_k^2)^{-s}; real on the real axis.
pub fn zeta_l2(spec: &Spectrum, s: Complex64) -> Complex64 {
    spec.eigenvalues
        .iter()
        .map(|&l| (-s * (l * l).ln()).exp())
        .sum()
}

/// d/ds zeta_{L^2}(s), computed analytically.
pub fn zeta_l2_derivative(spec: &Spectrum, s: Complex64) -> Complex64 {
    spec.eigenvalues
        .iter()
        .map(|&l| {
            let c = (l * l).ln();
            -c * (-s * c).exp()
        })
        .sum()
}

/// zeta_L'(0) = -sum_k log(lambda_k), with the branch convention.
pub fn zeta_derivative_0(spec: &Spectrum) -> Complex64 {
    -spec.eigenvalues.iter().map(|&l| log_branch(l)).sum::<Complex64>()
}

/// chi(G) = zeta(0) - 2 i zeta'(0) / pi, rounded to an integer. Errors if
/// the imaginary residue exceeds 1e-6 (which would mean |det L| != 1).
pub fn euler_from_zeta(spec: &Spectrum) -> Result<i64> {
    let z0 = Complex64::new(spec.len() as f64, 0.0);
    let d0 = zeta_derivative_0(spec);
    let chi = z0 - Complex64::i() * 2.0 * d0 / std::f64::consts::PI;
    if chi.im.abs() > 1e-6 {
        return Err(Error::Invariant(format!(
            "euler_from_zeta imaginary residue {:e}",
            chi.im
        )));
    }
    Ok(chi.re.round() as i64)
}

/// Morse index n(G): the number of negative eigenvalues.
pub fn morse_index(spec: &Spectrum) -> usize {
    spec.negative_count()
}

/// det(L) sign recovered from zeta: the regularized determinant
/// exp(-zeta'(0)) equals |det| (-1)^{n(G)}.
pub fn det_sign_from_zeta(spec: &Spectrum) -> Result<i64> {
    let det = (-zeta_derivative_0(spec)).exp();
    if det.im.abs() > 1e-6 || (det.re.abs() - 1.0).abs() > 1e-6 {
        return Err(Error::Invariant(format!(
            "regularized determinant {det} not within 1e-6 of +-1"
        )));
    }
    Ok(if det.re < 0.0 { -1 } else { 1 })
}

/// Residuals of the functional equation zeta_{L^2}(s) = zeta_{L^2}(-s).
#[derive(Clone, Copy, Debug)]
pub struct FunctionalEquationResidual {
    /// max_s |zeta_{L^2}(s) - zeta_{L^2}(-s)| over the samples.
    pub max_zeta_diff: f64,
    /// l1 distance between sorted {lambda^2} and sorted {1/lambda^2}.
    pub multiset_l1: f64,
}

pub fn functional_equation_residual(
    spec: &Spectrum,
    samples: &[Complex64],
) -> FunctionalEquationResidual {
    let max_zeta_diff = samples
        .iter()
        .map(|&s| (zeta_l2(spec, s) - zeta_l2(spec, -s)).norm())
        .fold(0.0, f64::max);
    let mut sq: Vec<f64> = spec.eigenvalues.iter().map(|&l| l * l).collect();
    let mut inv: Vec<f64> = spec.eigenvalues.iter().map(|&l| 1.0 / (l * l)).collect();
    sq.sort_by(|a, b| a.partial_cmp(b).unwrap());
    inv.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let multiset_l1 = sq.iter().zip(&inv).map(|(a, b)| (a - b).abs()).sum();
    FunctionalEquationResidual {
        max_zeta_diff,
        multiset_l1,
    }
}

/// All pairwise products of the eigenvalues (the spectrum of a product
/// complex in the strong ring).
pub fn product_spectrum(specs: &[&Spectrum]) -> Result<Spectrum> {
    if specs.len() < 2 {
        return Err(Error::InvalidInput("need at least two spectra".into()));
    }
    let mut acc = vec![1.0f64];
    for spec in specs {
        let mut next = Vec::with_capacity(acc.len() * spec.len());
        for &a in &acc {
            for &b in spec.eigenvalues() {
                next.push(a * b);
            }
        }
        acc = next;
    }
    let tol = specs.iter().map(|s| s.tolerance).fold(0.0, f64::max);
    Spectrum::from_eigenvalues(acc, tol)
}

/// zeta of a product: the normalized zeta functions multiply,
/// zeta_{L^2, GxH} = zeta_{L^2, G} zeta_{L^2, H}. The normalized form is
/// used because the L^2 eigenvalues are positive, so no branch factors
/// appear; with the upper-branch zeta_L the identity only holds at
/// integer arguments (negative-negative eigenvalue pairs pick up
/// exp(-2 pi i s)).
pub fn product_zeta(specs: &[&Spectrum], s: Complex64) -> Complex64 {
    specs
        .iter()
        .map(|spec| zeta_l2(spec, s))
        .fold(Complex64::new(1.0, 0.0), |acc, z| acc * z)
}

/// Rectangle in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Rect {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Rect {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        if !(x_min < x_max && y_min < y_max) {
            return Err(Error::InvalidInput(format!(
                "degenerate rectangle [{x_min},{x_max}]x[{y_min},{y_max}]"
            )));
        }
        Ok(Rect {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    pub fn contains(&self, s: Complex64) -> bool {
        self.x_min <= s.re && s.re <= self.x_max && self.y_min <= s.im && s.im <= self.y_max
    }
}

/// |zeta_{L^2}| sampled over a rectangle, row-major by y then x.
#[derive(Clone, Debug)]
pub struct ZetaGrid {
    pub rect: Rect,
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<f64>,
}

impl ZetaGrid {
    /// CSV with header "x,y,abs_zeta"; shortest round-trip decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,abs_zeta\n");
        for j in 0..self.ny {
            let y = grid_coord(self.rect.y_min, self.rect.y_max, self.ny, j);
            for i in 0..self.nx {
                let x = grid_coord(self.rect.x_min, self.rect.x_max, self.nx, i);
                out.push_str(&format!("{},{},{}\n", x, y, self.values[j * self.nx + i]));
            }
        }
        out
    }
}

fn grid_coord(min: f64, max: f64, n: usize, i: usize) -> f64 {
    min + (max - min) * (i as f64) / ((n - 1) as f64)
}

/// Samples |zeta_{L^2}(s)| over the rectangle. zeta is entire, so every
/// value is finite.
pub fn zeta_grid(spec: &Spectrum, rect: Rect, nx: usize, ny: usize) -> Result<ZetaGrid> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidInput("grid resolution must be >= 2x2".into()));
    }
    let logs: Vec<f64> = spec.eigenvalues.iter().map(|&l| (l * l).ln()).collect();
    let mut values = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        let y = grid_coord(rect.y_min, rect.y_max, ny, j);
        for i in 0..nx {
            let x = grid_coord(rect.x_min, rect.x_max, nx, i);
            let s = Complex64::new(x, y);
            let z: Complex64 = logs.iter().map(|&c| (-s * c).exp()).sum();
            values.push(z.norm());
        }
    }
    Ok(ZetaGrid {
        rect,
        nx,
        ny,
        values,
    })
}

/// One refined root with its residual.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

/// Result of a root scan: refined roots plus scan metadata.
#[derive(Clone, Debug, Serialize)]
pub struct RootScan {
    pub roots: Vec<Root>,
    pub rect: Rect,
    pub seeds: usize,
    pub converged: usize,
    pub dropped: usize,
    /// Largest |Re| among the found roots (0 when none).
    pub max_abs_re: f64,
}

const NEWTON_MAX_ITER: usize = 80;

/// Seeds complex Newton iterations at grid local minima of |zeta_{L^2}|,
/// deduplicates within half the grid spacing, and keeps roots with
/// |zeta| < tol inside the rectangle. Non-convergent seeds are dropped
/// and counted.
pub fn root_scan(spec: &Spectrum, rect: Rect, nx: usize, ny: usize, tol: f64) -> Result<RootScan> {
    if tol <= 0.0 {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let grid = zeta_grid(spec, rect, nx, ny)?;
    let logs: Vec<f64> = spec.eigenvalues.iter().map(|&l| (l * l).ln()).collect();
    let zeta = |s: Complex64| -> Complex64 { logs.iter().map(|&c| (-s * c).exp()).sum() };
    let dzeta = |s: Complex64| -> Complex64 { logs.iter().map(|&c| -c * (-s * c).exp()).sum() };

    let dx = (rect.x_max - rect.x_min) / ((nx - 1) as f64);
    let dy = (rect.y_max - rect.y_min) / ((ny - 1) as f64);
    let dedup_radius = 0.5 * dx.max(dy);

    let mut seeds = Vec::new();
    for j in 1..(ny - 1) {
        for i in 1..(nx - 1) {
            let v = grid.values[j * nx + i];
            if v < grid.values[j * nx + i - 1]
                && v < grid.values[j * nx + i + 1]
                && v < grid.values[(j - 1) * nx + i]
                && v < grid.values[(j + 1) * nx + i]
            {
                seeds.push(Complex64::new(
                    grid_coord(rect.x_min, rect.x_max, nx, i),
                    grid_coord(rect.y_min, rect.y_max, ny, j),
                ));
            }
        }
    }

    let mut roots: Vec<Root> = Vec::new();
    let mut converged = 0usize;
    let mut dropped = 0usize;
    'seed: for &seed in &seeds {
        let mut s = seed;
        let mut ok = false;
        for _ in 0..NEWTON_MAX_ITER {
            let f = zeta(s);
            let d = dzeta(s);
            if d.norm() == 0.0 {
                break;
            }
            let step = f / d;
            s -= step;
            if step.norm() < 1e-13 * (1.0 + s.norm()) {
                ok = true;
                break;
            }
        }
        if !ok || !rect.contains(s) || zeta(s).norm() >= tol {
            dropped += 1;
            continue;
        }
        converged += 1;
        for r in &roots {
            if (s - Complex64::new(r.re, r.im)).norm() < dedup_radius {
                continue 'seed;
            }
        }
        roots.push(Root {
            re: s.re,
            im: s.im,
            residual: zeta(s).norm(),
        });
    }
    roots.sort_by(|a, b| (a.im, a.re).partial_cmp(&(b.im, b.re)).unwrap());
    let max_abs_re = roots.iter().map(|r| r.re.abs()).fold(0.0, f64::max);
    Ok(RootScan {
        roots,
        rect,
        seeds: seeds.len(),
        converged,
        dropped,
        max_abs_re,
    })
}
