//! Fixed-point arithmetic at 512 fractional bits, with just enough
//! transcendental support (pi, sqrt, sin, cos, ln) to evaluate the
//! circular Riemann sums of the limit function exactly enough to observe
//! their decay.
//!
//! Why this exists: the integrand of the limiting zeta function is
//! analytic and periodic, so the Riemann-sum error of zeta_{C_n}/n decays
//! geometrically in n (about e^{-1.07 n}). At n = 64 the true gap is
//! already ~1e-33, far below anything double precision can resolve; the
//! doubling law is only observable with >400 fractional bits.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const SHIFT: u32 = 512;
const REF_NODES: u32 = 4096;

/// Fixed-point number: value = raw / 2^512.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fx(BigInt);

impl Fx {
    pub fn zero() -> Fx {
        Fx(BigInt::zero())
    }

    pub fn one() -> Fx {
        Fx(BigInt::one() << SHIFT)
    }

    pub fn from_u64(v: u64) -> Fx {
        Fx(BigInt::from(v) << SHIFT)
    }

    /// Exact embedding of a double.
    pub fn from_f64(v: f64) -> Fx {
        assert!(v.is_finite());
        if v == 0.0 {
            return Fx::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mantissa, e) = if exp == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), exp - 1075)
        };
        let m = BigInt::from(mantissa) * sign;
        let shift = SHIFT as i64 + e;
        if shift >= 0 {
            Fx(m << (shift as usize))
        } else {
            Fx(m >> ((-shift) as usize))
        }
    }

    pub fn to_f64(&self) -> f64 {
        // split so neither factor under/overflows
        let hi = (&self.0 >> 256usize).to_f64().unwrap_or(f64::NAN);
        let lo = (&self.0 - ((&self.0 >> 256usize) << 256usize))
            .to_f64()
            .unwrap_or(f64::NAN);
        hi * 2f64.powi(-256) + lo * 2f64.powi(-512)
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx(&self.0 - &o.0)
    }

    pub fn neg(&self) -> Fx {
        Fx(-&self.0)
    }

    pub fn abs(&self) -> Fx {
        Fx(self.0.abs())
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx((&self.0 * &o.0) >> SHIFT)
    }

    pub fn div(&self, o: &Fx) -> Fx {
        Fx((&self.0 << SHIFT) / &o.0)
    }

    pub fn div_u64(&self, k: u64) -> Fx {
        Fx(&self.0 / BigInt::from(k))
    }

    pub fn mul_int(&self, k: &BigInt) -> Fx {
        Fx(&self.0 * k)
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Nonnegative square root.
    pub fn sqrt(&self) -> Fx {
        assert!(!self.0.is_negative());
        Fx((&self.0 << SHIFT).sqrt())
    }

    /// Nearest integer as a BigInt.
    fn round_int(&self) -> BigInt {
        let half = BigInt::one() << (SHIFT - 1);
        (&self.0 + half) >> SHIFT
    }
}

/// atan(1/x) * 2^shift by the alternating inverse-power series.
fn atan_inv(x: u64, shift: u32) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = (BigInt::one() << shift) / BigInt::from(x);
    let mut acc = power.clone();
    let mut k = 1u64;
    loop {
        power = &power / &x2;
        if power.is_zero() {
            break;
        }
        let contrib = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            acc -= contrib;
        } else {
            acc += contrib;
        }
        k += 1;
    }
    acc
}

/// atanh(1/x) * 2^shift (x >= 2).
fn atanh_inv(x: u64, shift: u32) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = (BigInt::one() << shift) / BigInt::from(x);
    let mut acc = power.clone();
    let mut k = 1u64;
    loop {
        power = &power / &x2;
        if power.is_zero() {
            break;
        }
        acc += &power / BigInt::from(2 * k + 1);
        k += 1;
    }
    acc
}

/// pi by Machin's formula, computed once with 64 guard bits.
pub fn pi() -> &'static Fx {
    static PI: OnceLock<Fx> = OnceLock::new();
    PI.get_or_init(|| {
        let g = SHIFT + 64;
        let raw = atan_inv(5, g) * 16 - atan_inv(239, g) * 4;
        Fx(raw >> 64u32)
    })
}

fn ln2() -> &'static Fx {
    static LN2: OnceLock<Fx> = OnceLock::new();
    LN2.get_or_init(|| {
        let g = SHIFT + 64;
        Fx((atanh_inv(3, g) * 2) >> 64u32)
    })
}

/// sin and cos by range reduction mod 2 pi and Taylor series.
fn sin_cos(x: &Fx) -> (Fx, Fx) {
    let two_pi = pi().mul_int(&BigInt::from(2));
    let k = x.div(&two_pi).round_int();
    let r = x.sub(&two_pi.mul_int(&k));
    // |r| <= pi + ulp
    let r2 = r.mul(&r);
    let mut sin_term = r.clone();
    let mut sin_acc = r.clone();
    let mut cos_term = Fx::one();
    let mut cos_acc = Fx::one();
    let mut j = 1u64;
    loop {
        // sin: term_{j} = -term_{j-1} r^2 / ((2j)(2j+1))
        sin_term = sin_term.mul(&r2).div_u64(2 * j * (2 * j + 1)).neg();
        cos_term = cos_term.mul(&r2).div_u64((2 * j - 1) * (2 * j)).neg();
        let done = sin_term.0.is_zero() && cos_term.0.is_zero();
        sin_acc = sin_acc.add(&sin_term);
        cos_acc = cos_acc.add(&cos_term);
        if done {
            break;
        }
        j += 1;
    }
    (sin_acc, cos_acc)
}

pub fn cos(x: &Fx) -> Fx {
    sin_cos(x).1
}

pub fn sin(x: &Fx) -> Fx {
    sin_cos(x).0
}

/// Natural log for x > 0: normalize to [1,2) by a power of two, then the
/// atanh series ln(m) = 2 atanh((m-1)/(m+1)).
pub fn ln(x: &Fx) -> Fx {
    assert!(x.0.is_positive(), "ln of nonpositive value");
    let bits = x.0.bits() as i64;
    let e = bits - 1 - SHIFT as i64;
    let m = if e >= 0 {
        Fx(&x.0 >> (e as usize))
    } else {
        Fx(&x.0 << ((-e) as usize))
    };
    // r = (m-1)/(m+1) in [0, 1/3)
    let r = m.sub(&Fx::one()).div(&m.add(&Fx::one()));
    let r2 = r.mul(&r);
    let mut power = r.clone();
    let mut acc = r.clone();
    let mut k = 1u64;
    loop {
        power = power.mul(&r2);
        if power.0.is_zero() {
            break;
        }
        acc = acc.add(&power.div_u64(2 * k + 1));
        k += 1;
    }
    let series = acc.mul_int(&BigInt::from(2));
    ln2().mul_int(&BigInt::from(e)).add(&series)
}

/// log w(k/n) = 2 ln(2 sin^2(pi k/n) + sqrt(1 + 4 sin^4(pi k/n))).
fn log_w_exact(k: u32, n: u32) -> Fx {
    let x = pi().mul_int(&BigInt::from(k)).div_u64(n as u64);
    let s = sin(&x);
    let s2 = s.mul(&s);
    let four_s4 = s2.mul(&s2).mul_int(&BigInt::from(4));
    let arg = s2.mul_int(&BigInt::from(2)).add(&four_s4.add(&Fx::one()).sqrt());
    ln(&arg).mul_int(&BigInt::from(2))
}

fn ref_grid() -> &'static Vec<Fx> {
    static GRID: OnceLock<Vec<Fx>> = OnceLock::new();
    GRID.get_or_init(|| (1..=REF_NODES).map(|k| log_w_exact(k, REF_NODES)).collect())
}

/// (1/n) sum_{k=1..n} 2 cos(t log w(k/n)) in fixed point.
fn riemann_sum(n: u32, t: &Fx) -> Fx {
    let grid = ref_grid();
    let mut acc = Fx::zero();
    if REF_NODES % n == 0 {
        let stride = (REF_NODES / n) as usize;
        for k in 1..=n as usize {
            acc = acc.add(&cos(&t.mul(&grid[k * stride - 1])));
        }
    } else {
        for k in 1..=n {
            acc = acc.add(&cos(&t.mul(&log_w_exact(k, n))));
        }
    }
    acc.mul_int(&BigInt::from(2)).div_u64(n as u64)
}

/// |zeta_{L^2(C_n)}(it)/(2n) - z(it)/2| measured in fixed point: the
/// Riemann-sum gap of the limit function, resolvable far below the f64
/// floor. The reference is the 4096-node sum, whose own gap is below the
/// fixed-point resolution.
pub fn riemann_gap(n: u32, t: f64) -> Result<f64> {
    if n < 8 || n > 2048 {
        return Err(Error::InvalidInput(format!(
            "riemann_gap supports 8 <= n <= 2048, got {n}"
        )));
    }
    let tf = Fx::from_f64(t);
    let tn = riemann_sum(n, &tf);
    let tref = riemann_sum(REF_NODES, &tf);
    Ok(tn.sub(&tref).abs().div_u64(2).to_f64())
}

/// z(it) evaluated on the 4096-node grid in fixed point; an independent
/// high-precision reference for the f64 quadrature forms.
pub fn limit_reference(t: f64) -> f64 {
    riemann_sum(REF_NODES, &Fx::from_f64(t)).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_matches_f64() {
        assert!((pi().to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = Fx::from_f64(1.75);
        let b = Fx::from_f64(-0.375);
        assert_eq!(a.add(&b).to_f64(), 1.375);
        assert_eq!(a.mul(&b).to_f64(), 1.75 * -0.375);
        assert!((a.div(&b).to_f64() - (1.75 / -0.375)).abs() < 1e-15);
    }

    #[test]
    fn sqrt_and_ln_consistency() {
        let two = Fx::from_u64(2);
        let r = two.sqrt();
        assert!((r.to_f64() - 2f64.sqrt()).abs() < 1e-15);
        let l = ln(&Fx::from_f64(7.25));
        assert!((l.to_f64() - 7.25f64.ln()).abs() < 1e-15);
        // ln at a subnormal-free small value
        let s = ln(&Fx::from_f64(0.03125));
        assert!((s.to_f64() - 0.03125f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn trig_values() {
        let x = Fx::from_f64(1.2345);
        assert!((sin(&x).to_f64() - 1.2345f64.sin()).abs() < 1e-15);
        assert!((cos(&x).to_f64() - 1.2345f64.cos()).abs() < 1e-15);
        // large argument goes through range reduction
        let y = Fx::from_f64(57.9);
        assert!((cos(&y).to_f64() - 57.9f64.cos()).abs() < 1e-14);
    }

    #[test]
    fn gap_matches_oracle_magnitudes() {
        // frozen 260-digit oracle values for t = 1.7 (|T_n - T_ref| was
        // 1.7607e-31 and 8.9111e-60; the gap here carries the /2 of the
        // zeta/(2n) normalization)
        let g64 = riemann_gap(64, 1.7).unwrap();
        let g128 = riemann_gap(128, 1.7).unwrap();
        assert!(
            (g64 / 8.80350e-32 - 1.0).abs() < 1e-3,
            "gap(64) = {g64:e}, oracle 8.80350e-32"
        );
        assert!(
            (g128 / 4.45555e-60 - 1.0).abs() < 1e-3,
            "gap(128) = {g128:e}, oracle 4.45555e-60"
        );
    }

    #[test]
    fn reference_matches_f64_quadrature() {
        let cfg = crate::limits::QuadratureConfig::default();
        for t in [0.0, 1.0, 4.4] {
            let hi = limit_reference(t);
            let lo = crate::limits::limit_zeta(t, &cfg).unwrap().smooth_integral;
            assert!((hi - lo).abs() < 1e-12, "t={t}: {hi} vs {lo}");
        }
    }
}
