//! Exact integer operators of a complex: the connection Laplacian L, the
//! Dirac operator D and Hodge Laplacian H = D^2, the exact integer inverse
//! of L (unimodularity), total energy, and the hydrogen operator L - L^{-1}.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::intmatrix::IntMatrix;

/// L(x,y) = 1 iff x and y intersect. Symmetric with unit diagonal;
/// equals I + A for the adjacency matrix A of the connection graph.
pub fn connection_laplacian(g: &SimplicialComplex) -> IntMatrix {
    let s = g.simplices();
    IntMatrix::from_fn(s.len(), |i, j| {
        if s[i].intersects(&s[j]) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Signed incidence: D(x,y) = D(y,x) = (-1)^k when y is the facet of x
/// obtained by removing x's k-th smallest vertex (k from 0), else 0.
pub fn dirac_operator(g: &SimplicialComplex) -> IntMatrix {
    let s = g.simplices();
    let n = s.len();
    let mut d = IntMatrix::zeros(n);
    for (i, x) in s.iter().enumerate() {
        if x.dimension() == 0 {
            continue;
        }
        for k in 0..x.cardinality() {
            let facet = x.facet(k);
            let j = g
                .index_of(&facet)
                .expect("complex closed under taking facets");
            let sign = if k % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            d.set(i, j, sign.clone());
            d.set(j, i, sign);
        }
    }
    d
}

/// H = D^2; block diagonal by dimension.
pub fn hodge_laplacian(g: &SimplicialComplex) -> IntMatrix {
    let d = dirac_operator(g);
    d.mul(&d)
}

/// Exact integer inverse g of L (exists and is integral by unimodularity).
pub fn green_matrix(g: &SimplicialComplex) -> Result<IntMatrix> {
    connection_laplacian(g).inverse_unimodular()
}

/// Sum of all Green-function entries; equals chi(G).
pub fn total_energy(g: &SimplicialComplex) -> Result<BigInt> {
    Ok(green_matrix(g)?.sum_entries())
}

/// det(L) in {-1, +1}; the sign is the parity of the number of
/// odd-dimensional simplices.
pub fn fredholm_det_sign(g: &SimplicialComplex) -> Result<i64> {
    let det = connection_laplacian(g).det_bareiss();
    if det.abs() != BigInt::one() {
        return Err(Error::Invariant(format!(
            "unimodularity failed: det(L) = {det}"
        )));
    }
    Ok(if det.is_negative() { -1 } else { 1 })
}

/// Hydrogen operator L - L^{-1}, exact integers.
pub fn hydrogen_operator(g: &SimplicialComplex) -> Result<IntMatrix> {
    let l = connection_laplacian(g);
    let inv = l.inverse_unimodular()?;
    Ok(l.sub(&inv))
}

/// Exact integer zeta value at an integer argument:
/// zeta_{L^2}(m) = tr(L^{-2m}) for m >= 0 (via the Green matrix) and
/// tr(L^{2|m|}) for m < 0.
pub fn zeta_l2_integer(g: &SimplicialComplex, m: i32) -> Result<BigInt> {
    if m == 0 {
        return Ok(BigInt::from(g.len()));
    }
    let base = if m < 0 {
        connection_laplacian(g)
    } else {
        green_matrix(g)?
    };
    Ok(base.pow(2 * m.unsigned_abs()).trace())
}
