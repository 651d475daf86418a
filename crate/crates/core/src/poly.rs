//! Exact univariate polynomials over the integers, characteristic
//! polynomials via Faddeev-LeVerrier (over Z and over Z[t]), palindrome
//! tests and reduction, and the exhaustive minor-sum (Cauchy-Binet /
//! Pythagoras) oracles.
//!
//! Characteristic polynomial sign convention throughout:
//!
//!   p(x) = det(A - xI) = p_0 (-x)^n + p_1 (-x)^{n-1} + ... + p_n
//!
//! so p_0 = 1, p_1 = tr(A), p_n = det(A). A `CharPoly` stores the list
//! p_0..p_n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intmatrix::IntMatrix;

/// Budget for exhaustive pattern enumeration (number of k x k minors).
pub const MINOR_BUDGET: u128 = 10_000_000;

/// Polynomial with integer coefficients, ascending degree, trailing zeros
/// trimmed (the zero polynomial has an empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            c: vec![BigInt::one()],
        }
    }

    pub fn constant(v: BigInt) -> Self {
        let mut p = IntPoly { c: vec![v] };
        p.normalize();
        p
    }

    pub fn from_coeffs(c: Vec<BigInt>) -> Self {
        let mut p = IntPoly { c };
        p.normalize();
        p
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPoly {
            c: vec![BigInt::zero(), BigInt::one()],
        }
    }

    fn normalize(&mut self) {
        while matches!(self.c.last(), Some(v) if v.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.c.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.c.len().max(other.c.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, v) in self.c.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.c.iter().enumerate() {
            c[i] += v;
        }
        IntPoly::from_coeffs(c)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.c.len().max(other.c.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, v) in self.c.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.c.iter().enumerate() {
            c[i] -= v;
        }
        IntPoly::from_coeffs(c)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            c: self.c.iter().map(|v| -v).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(c)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.c.iter().map(|v| v * k).collect())
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        IntPoly { c }
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Division by an integer scalar that must be exact on every coefficient.
    pub fn div_exact_scalar(&self, k: u64) -> Result<IntPoly> {
        let k = BigInt::from(k);
        let mut c = Vec::with_capacity(self.c.len());
        for v in &self.c {
            let (q, r) = v.div_rem(&k);
            if !r.is_zero() {
                return Err(Error::Invariant(format!(
                    "scalar division by {k} not exact on coefficient {v}"
                )));
            }
            c.push(q);
        }
        Ok(IntPoly::from_coeffs(c))
    }

    /// Exact polynomial division; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly> {
        if d.is_zero() {
            return Err(Error::InvalidInput("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let mut r = self.c.clone();
        let dn = d.c.len();
        if r.len() < dn {
            return Err(Error::Invariant("polynomial division not exact".into()));
        }
        let qn = r.len() - dn + 1;
        let mut q = vec![BigInt::zero(); qn];
        let lead = &d.c[dn - 1];
        for k in (0..qn).rev() {
            let (coef, rem) = r[k + dn - 1].div_rem(lead);
            if !rem.is_zero() {
                return Err(Error::Invariant("polynomial division not exact".into()));
            }
            for (i, dv) in d.c.iter().enumerate() {
                let prod = &coef * dv;
                r[k + i] -= prod;
            }
            q[k] = coef;
        }
        if r.iter().any(|v| !v.is_zero()) {
            return Err(Error::Invariant("polynomial division not exact".into()));
        }
        Ok(IntPoly::from_coeffs(q))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for v in self.c.iter().rev() {
            acc = acc * x + v;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        let mut acc = 0.0;
        for v in self.c.iter().rev() {
            acc = acc * x + v.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn only_even_powers(&self) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(i, v)| i % 2 == 0 || v.is_zero())
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if first {
                write!(f, "{v}")?;
                first = false;
            } else if v.is_negative() {
                write!(f, " - {}", -v)?;
            } else {
                write!(f, " + {v}")?;
            }
            if i == 1 {
                write!(f, "*t")?;
            } else if i > 1 {
                write!(f, "*t^{i}")?;
            }
        }
        Ok(())
    }
}

/// True iff the coefficient list equals its reverse.
pub fn is_palindromic(coeffs: &[BigInt]) -> bool {
    let n = coeffs.len();
    (0..n / 2).all(|k| coeffs[k] == coeffs[n - 1 - k])
}

/// Characteristic polynomial coefficients p_0..p_n in the sign convention
/// of the module header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pk: Vec<BigInt>,
}

impl CharPoly {
    /// Faddeev-LeVerrier over exact integers. The divisions by 1..n are
    /// exact; this is asserted.
    pub fn of(a: &IntMatrix) -> Result<CharPoly> {
        let n = a.size();
        let mut pk = Vec::with_capacity(n + 1);
        pk.push(BigInt::one());
        if n == 0 {
            return Ok(CharPoly { pk });
        }
        let mut m = a.clone(); // N_1 = A
        for k in 1..=n {
            let t = m.trace();
            let (q, r) = t.div_rem(&BigInt::from(k));
            if !r.is_zero() {
                return Err(Error::Invariant(
                    "Faddeev-LeVerrier trace division not exact".into(),
                ));
            }
            let bk = -q;
            // p_k = (-1)^k b_k
            pk.push(if k % 2 == 0 { bk.clone() } else { -&bk });
            if k < n {
                // N_{k+1} = A (N_k + b_k I)
                let mut shifted = m;
                for i in 0..n {
                    let v = shifted.get(i, i) + &bk;
                    shifted.set(i, i, v);
                }
                m = a.mul(&shifted);
            }
        }
        Ok(CharPoly { pk })
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.pk
    }

    pub fn degree(&self) -> usize {
        self.pk.len() - 1
    }

    pub fn det(&self) -> &BigInt {
        &self.pk[self.pk.len() - 1]
    }

    pub fn is_palindromic(&self) -> bool {
        is_palindromic(&self.pk)
    }

    /// det(xI - A) as a plain polynomial: coefficient of x^{n-k} is (-1)^k p_k.
    pub fn monic_poly(&self) -> IntPoly {
        let n = self.degree();
        let mut c = vec![BigInt::zero(); n + 1];
        for (k, p) in self.pk.iter().enumerate() {
            c[n - k] = if k % 2 == 0 { p.clone() } else { -p };
        }
        IntPoly::from_coeffs(c)
    }

    /// det(xI + A) as a plain polynomial: coefficient of x^{n-k} is p_k.
    /// For palindromic p_k this polynomial is palindromic for every n.
    pub fn plus_poly(&self) -> IntPoly {
        let mut c: Vec<BigInt> = self.pk.iter().rev().cloned().collect();
        while matches!(c.last(), Some(v) if v.is_zero()) {
            c.pop();
        }
        IntPoly::from_coeffs(c)
    }
}

/// Writes a palindromic p of even degree 2m as p(x) = x^m q(x + 1/x) and
/// returns q. An odd-degree palindrome first has its guaranteed (1+x)
/// factor removed, so p(x) = (1+x) x^m q(x + 1/x).
pub fn palindrome_reduce(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    if !is_palindromic(p.coeffs()) {
        return Err(Error::InvalidInput(
            "palindrome_reduce requires a palindromic polynomial".into(),
        ));
    }
    let n = p.degree().unwrap();
    if n % 2 == 1 {
        let quotient = p.div_exact(&IntPoly::from_i64(&[1, 1]))?;
        if !is_palindromic(quotient.coeffs()) {
            return Err(Error::Invariant(
                "odd palindrome quotient by (1+x) not palindromic".into(),
            ));
        }
        return palindrome_reduce(&quotient);
    }
    let m = n / 2;
    let mut r = p.clone();
    let mut q = vec![BigInt::zero(); m + 1];
    let x2p1 = IntPoly::from_i64(&[1, 0, 1]);
    for j in (0..=m).rev() {
        let b = r.coeff(m + j);
        // subtract b * x^{m-j} (x^2+1)^j
        let term = x2p1.pow(j).shift(m - j).scale(&b);
        r = r.sub(&term);
        q[j] = b;
    }
    if !r.is_zero() {
        return Err(Error::Invariant(
            "palindrome reduction left a nonzero remainder".into(),
        ));
    }
    Ok(IntPoly::from_coeffs(q))
}

/// Square matrix over Z[t].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    e: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> IntPoly) -> Self {
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                e.push(f(i, j));
            }
        }
        PolyMatrix { n, e }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPoly {
        &self.e[i * self.n + j]
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        PolyMatrix::from_fn(n, |i, j| {
            let mut acc = IntPoly::zero();
            for k in 0..n {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        })
    }

    pub fn trace(&self) -> IntPoly {
        let mut acc = IntPoly::zero();
        for i in 0..self.n {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let k = rows.len();
        assert_eq!(k, cols.len());
        PolyMatrix {
            n: k,
            e: rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
                .collect(),
        }
    }

    /// Specialization t -> value, as an exact integer matrix.
    pub fn eval_at(&self, t: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.get(i, j).eval(t))
    }

    /// Determinant by cofactor expansion; intended for small blocks.
    pub fn det_cofactor(&self) -> IntPoly {
        let n = self.n;
        if n == 0 {
            return IntPoly::one();
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut acc = IntPoly::zero();
        let rows: Vec<usize> = (1..n).collect();
        for j in 0..n {
            if self.get(0, j).is_zero() {
                continue;
            }
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = self.submatrix(&rows, &cols).det_cofactor();
            let term = self.get(0, j).mul(&minor);
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    /// Faddeev-LeVerrier over Z[t]: p_0..p_n with the usual convention.
    /// All scalar divisions are exact and asserted.
    pub fn char_poly(&self) -> Result<Vec<IntPoly>> {
        let n = self.n;
        let mut pk = Vec::with_capacity(n + 1);
        pk.push(IntPoly::one());
        if n == 0 {
            return Ok(pk);
        }
        let mut m = self.clone();
        for k in 1..=n {
            let bk = m.trace().div_exact_scalar(k as u64)?.neg();
            pk.push(if k % 2 == 0 { bk.clone() } else { bk.neg() });
            if k < n {
                let mut shifted = m;
                for i in 0..n {
                    let v = shifted.get(i, i).add(&bk);
                    shifted.e[i * n + i] = v;
                }
                m = self.mul(&shifted);
            }
        }
        Ok(pk)
    }
}

/// All k-element subsets of 0..n in colex order.
pub fn k_subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn budget_check(n: usize, k: usize) -> Result<()> {
    let count = binom(n, k).saturating_mul(binom(n, k));
    if count > MINOR_BUDGET {
        return Err(Error::ResourceBudget { count });
    }
    Ok(())
}

/// Sum over all k x k patterns P = I x J of det(A_P) det((A^T)_P),
/// i.e. det(A_{I,J}) det(A_{J,I}). For symmetric A this is the sum of
/// squared minors. Exhaustive; guarded by [`MINOR_BUDGET`].
pub fn minor_sum_squares(a: &IntMatrix, k: usize) -> Result<BigInt> {
    let n = a.size();
    if k > n {
        return Err(Error::InvalidInput(format!("k = {k} exceeds size {n}")));
    }
    budget_check(n, k)?;
    let subsets = k_subsets_colex(n, k);
    let mut acc = BigInt::zero();
    for rows in &subsets {
        for cols in &subsets {
            let d1 = a.submatrix(rows, cols).det_bareiss();
            if d1.is_zero() {
                continue;
            }
            let d2 = a.submatrix(cols, rows).det_bareiss();
            acc += d1 * d2;
        }
    }
    Ok(acc)
}

/// Polynomial-entry variant of [`minor_sum_squares`].
pub fn minor_sum_squares_poly(a: &PolyMatrix, k: usize) -> Result<IntPoly> {
    let n = a.size();
    if k > n {
        return Err(Error::InvalidInput(format!("k = {k} exceeds size {n}")));
    }
    budget_check(n, k)?;
    let subsets = k_subsets_colex(n, k);
    let mut acc = IntPoly::zero();
    for rows in &subsets {
        for cols in &subsets {
            let d1 = a.submatrix(rows, cols).det_cofactor();
            if d1.is_zero() {
                continue;
            }
            let d2 = a.submatrix(cols, rows).det_cofactor();
            acc = acc.add(&d1.mul(&d2));
        }
    }
    Ok(acc)
}

/// Generalized Cauchy-Binet: checks that the k-th characteristic
/// coefficient of F^T G equals the pattern sum over det(F_P) det(G_P).
pub fn cauchy_binet_check(f: &IntMatrix, g: &IntMatrix, k: usize) -> Result<bool> {
    let n = f.size();
    if g.size() != n {
        return Err(Error::InvalidInput("matrix sizes differ".into()));
    }
    if k > n {
        return Err(Error::InvalidInput(format!("k = {k} exceeds size {n}")));
    }
    budget_check(n, k)?;
    let product = f.transpose().mul(g);
    let pk = CharPoly::of(&product)?.coefficients()[k].clone();
    let subsets = k_subsets_colex(n, k);
    let mut acc = BigInt::zero();
    for rows in &subsets {
        for cols in &subsets {
            let df = f.submatrix(rows, cols).det_bareiss();
            if df.is_zero() {
                continue;
            }
            let dg = g.submatrix(rows, cols).det_bareiss();
            acc += df * dg;
        }
    }
    Ok(acc == pk)
}

/// Oracle route for characteristic coefficients: p_k(A) equals the sum of
/// all principal k x k minors. Exhaustive; for small n.
pub fn principal_minor_char_poly(a: &IntMatrix) -> Result<CharPoly> {
    let n = a.size();
    let total: u128 = (0..=n).map(|k| binom(n, k)).sum();
    if total > MINOR_BUDGET {
        return Err(Error::ResourceBudget { count: total });
    }
    let mut pk = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = BigInt::zero();
        for idx in k_subsets_colex(n, k) {
            acc += a.submatrix(&idx, &idx).det_bareiss();
        }
        pk.push(acc);
    }
    Ok(CharPoly { pk })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_identity_4x4_is_binomial() {
        let p = CharPoly::of(&IntMatrix::identity(4)).unwrap();
        let want: Vec<BigInt> = [1i64, 4, 6, 4, 1].iter().map(|&v| v.into()).collect();
        assert_eq!(p.coefficients(), &want[..]);
        assert!(p.is_palindromic());
    }

    #[test]
    fn charpoly_k2_connection_matrix() {
        let l = IntMatrix::from_i64_rows(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
        let p = CharPoly::of(&l).unwrap();
        let want: Vec<BigInt> = [1i64, 3, 1, -1].iter().map(|&v| v.into()).collect();
        assert_eq!(p.coefficients(), &want[..]);
        assert_eq!(p.det(), &BigInt::from(-1));
    }

    #[test]
    fn charpoly_matches_principal_minor_oracle() {
        // deterministic pseudo-random entries in [-3, 3]
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for n in 1..=6 {
            let a = IntMatrix::from_fn(n, |_, _| BigInt::from(next()));
            let fl = CharPoly::of(&a).unwrap();
            let oracle = principal_minor_char_poly(&a).unwrap();
            assert_eq!(fl, oracle, "n = {n}");
        }
    }

    #[test]
    fn palindrome_tests() {
        assert!(is_palindromic(&[
            BigInt::from(1),
            BigInt::from(9),
            BigInt::from(22),
            BigInt::from(22),
            BigInt::from(9),
            BigInt::from(1)
        ]));
        assert!(!is_palindromic(&[
            BigInt::from(1),
            BigInt::from(2),
            BigInt::from(3)
        ]));
    }

    #[test]
    fn palindrome_reduce_trivial_square() {
        // x^2 + 2x + 1 = x (x + 1/x + 2)
        let p = IntPoly::from_i64(&[1, 2, 1]);
        let q = palindrome_reduce(&p).unwrap();
        assert_eq!(q, IntPoly::from_i64(&[2, 1]));
    }

    #[test]
    fn palindrome_reduce_odd_degree() {
        // (1,2,2,1) = (1+x)(1+x+x^2); the even part reduces to q(u) = u + 1
        let p = IntPoly::from_i64(&[1, 2, 2, 1]);
        let q = palindrome_reduce(&p).unwrap();
        assert_eq!(q, IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn palindrome_reduce_reconstructs() {
        // p(x) = x^m q(x+1/x) <=> p = sum_j b_j x^{m-j} (x^2+1)^j
        let p = IntPoly::from_i64(&[3, -5, 7, 11, 7, -5, 3]);
        let q = palindrome_reduce(&p).unwrap();
        let m = 3usize;
        let mut rebuilt = IntPoly::zero();
        let x2p1 = IntPoly::from_i64(&[1, 0, 1]);
        for (j, b) in q.coeffs().iter().enumerate() {
            rebuilt = rebuilt.add(&x2p1.pow(j).shift(m - j).scale(b));
        }
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn palindrome_reduce_rejects_non_palindrome() {
        let p = IntPoly::from_i64(&[1, 2, 3]);
        assert!(palindrome_reduce(&p).is_err());
    }

    #[test]
    fn minor_sum_full_size_is_det_squared() {
        let a = IntMatrix::from_i64_rows(&[vec![2, -1, 0], vec![1, 3, 2], vec![0, 1, 1]]);
        let s = minor_sum_squares(&a, 3).unwrap();
        let d = a.det_bareiss();
        assert_eq!(s, &d * &d);
    }

    #[test]
    fn cauchy_binet_identity_case() {
        let id = IntMatrix::identity(5);
        assert!(cauchy_binet_check(&id, &id, 2).unwrap());
        // k = 1 is the Hilbert-Schmidt identity tr(F^T G) = sum F_ij G_ij
        let f = IntMatrix::from_i64_rows(&[vec![1, -2], vec![3, 0]]);
        let g = IntMatrix::from_i64_rows(&[vec![2, 1], vec![-1, 2]]);
        assert!(cauchy_binet_check(&f, &g, 1).unwrap());
    }

    #[test]
    fn budget_guard_fires() {
        let a = IntMatrix::identity(40);
        match minor_sum_squares(&a, 20) {
            Err(Error::ResourceBudget { count }) => assert!(count > MINOR_BUDGET),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn poly_display() {
        let p = IntPoly::from_i64(&[3, 0, 4]);
        assert_eq!(p.to_string(), "3 + 4*t^2");
        let d = IntPoly::from_i64(&[0, 0, 4, 0, -4]);
        assert_eq!(d.to_string(), "4*t^2 - 4*t^4");
    }

    #[test]
    fn colex_order() {
        let s = k_subsets_colex(4, 2);
        assert_eq!(
            s,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
