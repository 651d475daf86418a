//! Complex Gamma function via the Lanczos approximation (g = 7, 9
//! coefficients), with reflection for Re(z) < 1/2.

use num_complex::Complex64;

use crate::error::{Error, Result};

const G: f64 = 7.0;
// GNU Scientific Library coefficient set for g = 7, n = 9.
const COEF: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const POLE_TOL: f64 = 1e-8;

/// Gamma(z). Errors when z is within 1e-8 of a pole (nonpositive integer).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if z.im.abs() < POLE_TOL && z.re <= 0.5 && (z.re - z.re.round()).abs() < POLE_TOL {
        return Err(Error::Domain(format!("Gamma pole near z = {z}")));
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let pi = std::f64::consts::PI;
        return pi / ((pi * z).sin() * gamma_unchecked(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut acc = Complex64::new(COEF[0], 0.0);
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * acc
}
