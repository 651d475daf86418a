//! Dense square matrices with arbitrary-precision integer entries, and the
//! fraction-free (Bareiss/Montante) elimination kernels used for exact
//! determinants and the exact inverse of unimodular matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    a: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            a: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.a[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        IntMatrix { n, a }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.a[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn sum_entries(&self) -> BigInt {
        self.a.iter().sum()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.a[i * n + j] += aik * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn pow(&self, e: u32) -> IntMatrix {
        let mut out = Self::identity(self.n);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Submatrix with the given row and column index sets (in order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let k = rows.len();
        assert_eq!(k, cols.len());
        IntMatrix {
            n: k,
            a: rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
                .collect(),
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.a.iter().map(|x| x.to_f64().unwrap()).collect()
    }

    /// Exact determinant by fraction-free Gaussian elimination with row
    /// pivoting. Every division is exact; this is asserted.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.a.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for r in 0..n {
            if m[r * n + r].is_zero() {
                match (r + 1..n).find(|&i| !m[i * n + r].is_zero()) {
                    Some(p) => {
                        for j in 0..n {
                            m.swap(r * n + j, p * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            let pivot = m[r * n + r].clone();
            for i in (r + 1)..n {
                for j in (r + 1)..n {
                    let num = &pivot * &m[i * n + j] - &m[i * n + r] * &m[r * n + j];
                    let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                    debug_assert!(rem.is_zero(), "Bareiss division not exact");
                    m[i * n + j] = q;
                }
                m[i * n + r] = BigInt::zero();
            }
            prev = pivot;
        }
        let det = m[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Exact inverse for matrices with det = +-1, via fraction-free
    /// Gauss-Jordan (Montante) on the augmented system. Returns an error
    /// carrying the determinant if |det| != 1.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let n = self.n;
        let w = 2 * n;
        // augmented [A | I]
        let mut m = vec![BigInt::zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                m[i * w + j] = self.get(i, j).clone();
            }
            m[i * w + n + i] = BigInt::one();
        }
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for r in 0..n {
            if m[r * w + r].is_zero() {
                let p = (r + 1..n)
                    .find(|&i| !m[i * w + r].is_zero())
                    .ok_or_else(|| Error::Invariant("singular matrix in exact inverse".into()))?;
                for j in 0..w {
                    m.swap(r * w + j, p * w + j);
                }
                sign = -sign;
            }
            let pivot = m[r * w + r].clone();
            for i in 0..n {
                if i == r {
                    continue;
                }
                let lead = m[i * w + r].clone();
                for j in 0..w {
                    if j == r {
                        continue;
                    }
                    let num = &pivot * &m[i * w + j] - &lead * &m[r * w + j];
                    let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                    if !rem.is_zero() {
                        return Err(Error::Invariant("Montante division not exact".into()));
                    }
                    m[i * w + j] = q;
                }
                m[i * w + r] = BigInt::zero();
            }
            prev = pivot;
        }
        // after full elimination the left block is prev * I (up to the
        // row-swap sign in prev = det of the permuted matrix)
        let mut det = prev;
        if sign < 0 {
            det = -det;
        }
        if det.abs() != BigInt::one() {
            return Err(Error::Invariant(format!(
                "matrix is not unimodular: det = {det}"
            )));
        }
        // right block equals det(PA) * A^{-1}; divide by det(PA) = sign-less prev
        let d = if sign < 0 { -&det } else { det.clone() };
        let inv = IntMatrix::from_fn(n, |i, j| {
            let v = &m[i * w + n + j];
            if d == BigInt::one() {
                v.clone()
            } else {
                -v
            }
        });
        // the inverse must reproduce the identity exactly
        let check = self.mul(&inv);
        if check != IntMatrix::identity(n) {
            return Err(Error::Invariant("exact inverse failed verification".into()));
        }
        Ok(inv)
    }

    /// Plain text dump: first line n, then n rows of space-separated entries.
    pub fn dump(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small() {
        let m = IntMatrix::from_i64_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.det_bareiss(), BigInt::from(-2));
        let id = IntMatrix::identity(5);
        assert_eq!(id.det_bareiss(), BigInt::one());
    }

    #[test]
    fn det_needs_pivot() {
        let m = IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.det_bareiss(), BigInt::from(-1));
        let s = IntMatrix::from_i64_rows(&[vec![0, 0], vec![0, 1]]);
        assert_eq!(s.det_bareiss(), BigInt::zero());
    }

    #[test]
    fn inverse_of_k2_connection_matrix() {
        let l = IntMatrix::from_i64_rows(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
        let g = l.inverse_unimodular().unwrap();
        let expect = IntMatrix::from_i64_rows(&[vec![0, -1, 1], vec![-1, 0, 1], vec![1, 1, -1]]);
        assert_eq!(g, expect);
    }

    #[test]
    fn inverse_rejects_non_unimodular() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 1]]);
        assert!(m.inverse_unimodular().is_err());
    }

    #[test]
    fn inverse_matches_adjugate_oracle() {
        // oracle: cofactor-expansion adjugate, independent of Bareiss
        fn det_cofactor(m: &IntMatrix) -> BigInt {
            let n = m.size();
            if n == 0 {
                return BigInt::one();
            }
            if n == 1 {
                return m.get(0, 0).clone();
            }
            let mut acc = BigInt::zero();
            let rows: Vec<usize> = (1..n).collect();
            for j in 0..n {
                if m.get(0, j).is_zero() {
                    continue;
                }
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = det_cofactor(&m.submatrix(&rows, &cols));
                let term = m.get(0, j) * minor;
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }

        let l = IntMatrix::from_i64_rows(&[
            vec![1, 0, 0, 1],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 0],
            vec![1, 1, 0, 1],
        ]);
        let det = det_cofactor(&l);
        assert_eq!(det, BigInt::from(-1));
        let n = l.size();
        let adj = IntMatrix::from_fn(n, |i, j| {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let c = det_cofactor(&l.submatrix(&rows, &cols));
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        });
        // inverse = adj / det with det = -1
        let oracle = IntMatrix::from_fn(n, |i, j| -adj.get(i, j));
        assert_eq!(l.inverse_unimodular().unwrap(), oracle);
    }

    #[test]
    fn pow_and_trace() {
        let m = IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]);
        let m3 = m.pow(3);
        assert_eq!(m3.get(0, 1), &BigInt::from(3));
        assert_eq!(m3.trace(), BigInt::from(2));
    }
}
