//! The deformation operator K(t): the connection Laplacian of a complex
//! bordered by one new edge cell whose intersection entries are scaled by
//! t. K(0) extends L by an isolated cell, K(1) is the connection Laplacian
//! of the enlarged complex. The palindrome defects delta_k(t) of
//! char(K(t)^2) factor as C_k t^2 (1 - t^2); checking that factorization
//! exactly is the strongest regression test in this module.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::connection::connection_laplacian;
use crate::error::{Error, Result};
use crate::poly::{IntPoly, PolyMatrix};

fn validate_edge(g: &SimplicialComplex, a: Vertex, b: Vertex) -> Result<Simplex> {
    if g.dimension() > 1 {
        return Err(Error::InvalidInput(
            "deformation requires a complex of dimension at most 1".into(),
        ));
    }
    if a == b {
        return Err(Error::InvalidInput("new edge endpoints must differ".into()));
    }
    for v in [a, b] {
        if !g.contains_simplex(&Simplex::new([v])?) {
            return Err(Error::InvalidInput(format!("vertex {v} not in the complex")));
        }
    }
    let edge = Simplex::new([a, b])?;
    if g.contains_simplex(&edge) {
        return Err(Error::InvalidInput(format!("edge ({a},{b}) already present")));
    }
    Ok(edge)
}

/// K(t): L bordered by one row/column for the new edge x = {a,b}, with
/// border entries t * L(., x) and corner 1.
pub fn deformation_matrix(g: &SimplicialComplex, a: Vertex, b: Vertex) -> Result<PolyMatrix> {
    let edge = validate_edge(g, a, b)?;
    let l = connection_laplacian(g);
    let n = g.len();
    let t = IntPoly::x();
    Ok(PolyMatrix::from_fn(n + 1, |i, j| {
        if i < n && j < n {
            IntPoly::constant(l.get(i, j).clone())
        } else if i == n && j == n {
            IntPoly::one()
        } else {
            let k = if i < n { i } else { j };
            if g.simplices()[k].intersects(&edge) {
                t.clone()
            } else {
                IntPoly::zero()
            }
        }
    }))
}

/// Coefficients p_k(t) of char(K(t)^2), exact in Z[t]. Guarantees checked
/// on every call: each p_k has only even powers of t and degree <= 4, and
/// det(K(t)) = det(L) (1 - 2 t^2).
pub fn deformation_charpoly(g: &SimplicialComplex, a: Vertex, b: Vertex) -> Result<Vec<IntPoly>> {
    let k = deformation_matrix(g, a, b)?;
    let pk = k.mul(&k).char_poly()?;
    for (idx, p) in pk.iter().enumerate() {
        if !p.only_even_powers() || p.degree().unwrap_or(0) > 4 {
            return Err(Error::Invariant(format!(
                "p_{idx}(t) = {p} is not even of degree <= 4"
            )));
        }
    }
    // det(K(t)) is the last coefficient of char(K(t))
    let det_kt = k.char_poly()?.pop().expect("nonempty coefficient list");
    let det_l = connection_laplacian(g).det_bareiss();
    let expected = IntPoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), BigInt::from(-2)])
        .scale(&det_l);
    if det_kt != expected {
        return Err(Error::Invariant(format!(
            "det K(t) = {det_kt}, expected det(L)(1-2t^2) = {expected}"
        )));
    }
    Ok(pk)
}

/// The artillery identity: delta_k(t) = p_k(t) - p_{n-k}(t) must equal
/// C_k t^2 (1 - t^2) for an integer C_k. Returns the list C_0..C_n, or an
/// invariant error carrying the offending delta_k.
pub fn artillery_delta(g: &SimplicialComplex, a: Vertex, b: Vertex) -> Result<Vec<BigInt>> {
    let pk = deformation_charpoly(g, a, b)?;
    let n = pk.len() - 1;
    let mut constants = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let delta = pk[k].sub(&pk[n - k]);
        let c = delta.coeff(2);
        // C t^2 (1 - t^2) has coefficients [0, 0, C, 0, -C]
        let expected = IntPoly::from_coeffs(vec![
            BigInt::zero(),
            BigInt::zero(),
            c.clone(),
            BigInt::zero(),
            -&c,
        ]);
        if delta != expected {
            return Err(Error::Invariant(format!(
                "delta_{k}(t) = {delta} is not of the form C t^2 (1 - t^2)"
            )));
        }
        constants.push(c);
    }
    Ok(constants)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::CharPoly;

    fn two_points() -> SimplicialComplex {
        SimplicialComplex::generate_closure(&[vec![1], vec![2]]).unwrap()
    }

    fn paper_example() -> SimplicialComplex {
        SimplicialComplex::generate_closure(&[vec![1], vec![2], vec![3], vec![1, 2]]).unwrap()
    }

    #[test]
    fn k2_deformation_coefficients() {
        // eigen-symmetric case {{1},{2}} + (1,2):
        // p = (1, 3+4t^2, 3+4t^4, (1-2t^2)^2)
        let pk = deformation_charpoly(&two_points(), 1, 2).unwrap();
        assert_eq!(pk.len(), 4);
        assert_eq!(pk[0], IntPoly::one());
        assert_eq!(pk[1], IntPoly::from_i64(&[3, 0, 4]));
        assert_eq!(pk[2], IntPoly::from_i64(&[3, 0, 0, 0, 4]));
        assert_eq!(pk[3], IntPoly::from_i64(&[1, 0, -4, 0, 4]));
    }

    #[test]
    fn k2_artillery_constants() {
        let c = artillery_delta(&two_points(), 1, 2).unwrap();
        let want: Vec<BigInt> = [4i64, 4, -4, -4].iter().map(|&v| v.into()).collect();
        assert_eq!(c, want);
    }

    #[test]
    fn paper_example_palindromes() {
        let pk = deformation_charpoly(&paper_example(), 2, 3).unwrap();
        let at = |t: i64| -> Vec<BigInt> {
            pk.iter().map(|p| p.eval(&BigInt::from(t))).collect()
        };
        let want0: Vec<BigInt> = [1i64, 9, 22, 22, 9, 1].iter().map(|&v| v.into()).collect();
        let want1: Vec<BigInt> = [1i64, 15, 49, 49, 15, 1].iter().map(|&v| v.into()).collect();
        assert_eq!(at(0), want0);
        assert_eq!(at(1), want1);
    }

    #[test]
    fn t1_specialization_is_enlarged_complex() {
        let g = paper_example();
        let pk = deformation_charpoly(&g, 2, 3).unwrap();
        let enlarged =
            SimplicialComplex::generate_closure(&[vec![1], vec![2], vec![3], vec![1, 2], vec![2, 3]])
                .unwrap();
        let l = connection_laplacian(&enlarged);
        let direct = CharPoly::of(&l.mul(&l)).unwrap();
        let at1: Vec<BigInt> = pk.iter().map(|p| p.eval(&BigInt::one())).collect();
        assert_eq!(at1, direct.coefficients());
    }

    #[test]
    fn t0_specialization_is_bordered_identity() {
        // K(0) = L + isolated cell, so char(K(0)^2) = char(L^2) * (x - 1)
        // in spectral terms: evaluating p_k at 0 must match the p_k of
        // L^2 with one extra eigenvalue 1
        let g = paper_example();
        let k = deformation_matrix(&g, 2, 3).unwrap();
        let k0 = k.eval_at(&BigInt::zero());
        let l = connection_laplacian(&g);
        for i in 0..g.len() {
            for j in 0..g.len() {
                assert_eq!(k0.get(i, j), l.get(i, j));
            }
            assert!(k0.get(i, g.len()).is_zero());
            assert!(k0.get(g.len(), i).is_zero());
        }
        assert_eq!(k0.get(g.len(), g.len()), &BigInt::one());
    }

    #[test]
    fn delta_antisymmetry_and_middle_zero() {
        let pk = deformation_charpoly(&paper_example(), 2, 3).unwrap();
        let n = pk.len() - 1;
        for k in 0..=n {
            let d = pk[k].sub(&pk[n - k]);
            let dr = pk[n - k].sub(&pk[k]);
            assert_eq!(d, dr.neg());
            if k * 2 == n {
                assert!(d.is_zero());
            }
        }
    }

    #[test]
    fn rejects_bad_edges() {
        let g = paper_example();
        assert!(artillery_delta(&g, 1, 1).is_err());
        assert!(artillery_delta(&g, 1, 2).is_err()); // already present
        assert!(artillery_delta(&g, 1, 9).is_err()); // vertex missing
        let k3 = SimplicialComplex::complete(3).unwrap();
        assert!(artillery_delta(&k3, 1, 2).is_err()); // dimension 2
    }

    #[test]
    fn random_one_dimensional_artillery() {
        for seed in 0..6u64 {
            let g = SimplicialComplex::random_one_dimensional(6, 4, seed).unwrap();
            // find a legal missing edge
            let mut found = None;
            'outer: for a in 1..=6u32 {
                for b in (a + 1)..=6 {
                    let e = Simplex::new([a, b]).unwrap();
                    if !g.contains_simplex(&e) {
                        found = Some((a, b));
                        break 'outer;
                    }
                }
            }
            let (a, b) = found.expect("sparse complex has a missing edge");
            artillery_delta(&g, a, b).unwrap();
        }
    }
}
