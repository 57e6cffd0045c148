//! Cartan involutions and decompositions g = k + p, canonical embedding
//! of subalgebras, Lie triple systems, and fixed-point subalgebras.

use crate::error::{Error, Result};
use crate::liealg::{commutator, MatrixLieAlgebra, Subspace};
use crate::linalg::{
    self, eigensplit_involution, principal_angle_defect, subspace_intersection, vectorize_complex,
    BilinearForm, RMatrix, RVector, Tolerances,
};

/// A Cartan decomposition of a semisimple matrix algebra: theta is the
/// coordinate matrix of an involutive automorphism with -B(X, theta Y)
/// positive definite; k and p are its +1 and -1 eigenspaces.
#[derive(Debug, Clone)]
pub struct CartanDecomposition {
    pub algebra: MatrixLieAlgebra,
    pub theta: RMatrix,
    pub k_basis: Subspace,
    pub p_basis: Subspace,
    pub b_theta: BilinearForm,
}

/// Verifies that `theta` (in coordinates) is an automorphism of `alg`:
/// theta[x, y] = [theta x, theta y] on all basis pairs.
pub fn automorphism_residual(alg: &MatrixLieAlgebra, theta: &RMatrix) -> f64 {
    let d = alg.dim();
    let images: Vec<_> = (0..d)
        .map(|i| alg.from_coords(&theta.column(i).into_owned()))
        .collect();
    let mut worst = 0.0_f64;
    for i in 0..d {
        for j in (i + 1)..d {
            // theta applied to [b_i, b_j], in coordinates
            let lhs = alg.from_coords(&(theta * alg.ad[i].column(j).into_owned()));
            let rhs = commutator(&images[i], &images[j]);
            worst = worst.max(linalg::frobenius(&(lhs - rhs)));
        }
    }
    worst
}

/// Constructs the Cartan decomposition from X -> -X^H, for realizations
/// whose span is closed under that map.
pub fn cartan_from_star(alg: &MatrixLieAlgebra, tol: &Tolerances) -> Result<CartanDecomposition> {
    if !alg.is_semisimple(tol.rank)? {
        return Err(Error::AmbientNotSemisimple);
    }
    let d = alg.dim();
    let mut theta = RMatrix::zeros(d, d);
    for i in 0..d {
        let star = -alg.basis[i].adjoint();
        let (coords, res) = alg.coords_with_residual(&star);
        if res > tol.close {
            return Err(Error::NotStarClosed);
        }
        theta.set_column(i, &coords);
    }
    let inv_res = (&theta * &theta - RMatrix::identity(d, d)).amax();
    if inv_res > tol.close {
        return Err(Error::NotInvolution(inv_res));
    }
    if automorphism_residual(alg, &theta) > tol.close {
        return Err(Error::NotCartan);
    }
    let b_theta = BilinearForm::new(linalg::symmetrize(&(-&alg.killing * &theta)))?;
    let eigs = b_theta.eigenvalues();
    if eigs.min() <= tol.rank * eigs.amax() {
        return Err(Error::NotCartan);
    }
    let (k_rows, p_rows) = eigensplit_involution(&theta, tol.close)?;
    Ok(CartanDecomposition {
        algebra: alg.clone(),
        theta,
        k_basis: Subspace::from_rows(&k_rows),
        p_basis: Subspace::from_rows(&p_rows),
        b_theta,
    })
}

impl CartanDecomposition {
    pub fn dim_k(&self) -> usize {
        self.k_basis.dim()
    }

    pub fn dim_p(&self) -> usize {
        self.p_basis.dim()
    }

    /// theta(sub) = sub as subspaces; equivalent to the eigenspace
    /// splitting sub = (sub & k) + (sub & p).
    pub fn is_canonically_embedded(&self, sub: &Subspace, tol: &Tolerances) -> bool {
        let rows = sub.rows();
        let image: Vec<RVector> = rows.iter().map(|r| &self.theta * r).collect();
        principal_angle_defect(&rows, &image) <= tol.span
    }

    /// Intersection of `sub` with one of the parts (or any subspace).
    pub fn intersect_with(&self, sub: &Subspace, part: &Subspace, tol: &Tolerances) -> Result<Subspace> {
        let rows = subspace_intersection(&sub.rows(), &part.rows(), tol.rank)?;
        Ok(Subspace::from_rows(&rows))
    }

    /// Splits `sub` into its k- and p-intersections; `defect` counts the
    /// dimensions lost when sub is not theta-stable.
    pub fn split(&self, sub: &Subspace, tol: &Tolerances) -> Result<SubalgebraSplit> {
        let in_k = self.intersect_with(sub, &self.k_basis, tol)?;
        let in_p = self.intersect_with(sub, &self.p_basis, tol)?;
        let defect = sub.dim() - in_k.dim() - in_p.dim();
        Ok(SubalgebraSplit {
            canonical: defect == 0,
            defect,
            in_k,
            in_p,
        })
    }

    /// Lie triple test on a subspace of p: [[x, y], z] stays in the span.
    pub fn is_lie_triple(&self, s: &Subspace, tol: &Tolerances) -> Result<bool> {
        Ok(self.lie_triple_residual(s, tol)? <= tol.close)
    }

    pub fn lie_triple_residual(&self, s: &Subspace, tol: &Tolerances) -> Result<f64> {
        for row in s.rows() {
            let res = linalg::span_membership_residual(
                &linalg::orthonormalize(&self.p_basis.rows(), 1e-12),
                &row,
            );
            if res > tol.span {
                return Err(Error::NotInP(res));
            }
        }
        let mats = s.matrices(&self.algebra);
        let vecs: Vec<RVector> = mats.iter().map(vectorize_complex).collect();
        let q = linalg::orthonormalize(&vecs, 1e-12);
        let mut worst = 0.0_f64;
        for x in &mats {
            for y in &mats {
                for z in &mats {
                    let t = commutator(&commutator(x, y), z);
                    worst = worst.max(linalg::span_membership_residual(&q, &vectorize_complex(&t)));
                }
            }
        }
        Ok(worst)
    }

    /// The symmetric-space data carried by this decomposition: metric on p
    /// is B restricted to p (positive definite), curvature sign -1.
    pub fn symmetric_pair(&self) -> Result<SymmetricPair> {
        let metric_p = BilinearForm::new(
            self.algebra.killing_form().restrict(&self.p_basis.coeffs),
        )?;
        Ok(SymmetricPair {
            algebra: self.algebra.clone(),
            k_part: self.k_basis.clone(),
            p_part: self.p_basis.clone(),
            metric_p,
            curvature_sign: -1.0,
        })
    }
}

/// Result of splitting a subspace against a Cartan decomposition.
#[derive(Debug, Clone)]
pub struct SubalgebraSplit {
    pub canonical: bool,
    pub defect: usize,
    pub in_k: Subspace,
    pub in_p: Subspace,
}

/// +1 eigenspace of an involutive automorphism, always a subalgebra.
pub fn fixed_point_algebra(
    sigma: &RMatrix,
    alg: &MatrixLieAlgebra,
    tol: &Tolerances,
) -> Result<Subspace> {
    let d = alg.dim();
    if sigma.nrows() != d || sigma.ncols() != d {
        return Err(Error::DimensionError("sigma must be d x d".into()));
    }
    let inv_res = (sigma * sigma - RMatrix::identity(d, d)).amax();
    if inv_res > tol.close {
        return Err(Error::NotInvolution(inv_res));
    }
    let auto_res = automorphism_residual(alg, sigma);
    if auto_res > tol.close {
        return Err(Error::NotInvolution(auto_res));
    }
    let (plus, _) = eigensplit_involution(sigma, tol.close)?;
    let sub = Subspace::from_rows(&plus);
    debug_assert!(alg.is_subalgebra(&sub, tol.close)?);
    Ok(sub)
}

/// Coordinate matrix of conjugation X -> S X S^{-1} on the algebra.
pub fn ad_conjugation(alg: &MatrixLieAlgebra, s: &linalg::CMatrix, tol: &Tolerances) -> Result<RMatrix> {
    let d = alg.dim();
    let s_inv = s.clone().try_inverse().ok_or(Error::InvalidMatrix)?;
    let mut m = RMatrix::zeros(d, d);
    for i in 0..d {
        let img = s * &alg.basis[i] * &s_inv;
        let coords = alg.coords(&img, tol.close.max(1e-9))?;
        m.set_column(i, &coords);
    }
    Ok(m)
}

/// The common data of both sides of a dual pair: the ambient algebra, the
/// k/p split, a positive definite metric on the p-part, and the sign
/// convention for sectional curvature.
#[derive(Debug, Clone)]
pub struct SymmetricPair {
    pub algebra: MatrixLieAlgebra,
    pub k_part: Subspace,
    pub p_part: Subspace,
    pub metric_p: BilinearForm,
    pub curvature_sign: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_sl, make_so, signature_matrix};
    use num_complex::Complex64;

    fn tols() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn compact_so_n_has_trivial_theta() {
        let alg = make_so(0, 4).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        assert_eq!((dec.dim_k(), dec.dim_p()), (6, 0));
        assert!((dec.theta - RMatrix::identity(6, 6)).amax() < 1e-12);
    }

    #[test]
    fn sl2_splits_one_two() {
        let alg = make_sl(2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        assert_eq!((dec.dim_k(), dec.dim_p()), (1, 2));
        // B is negative definite on k and positive definite on p
        let bk = alg.killing_form().restrict(&dec.k_basis.coeffs);
        let bp = alg.killing_form().restrict(&dec.p_basis.coeffs);
        assert!(bk.symmetric_eigen().eigenvalues.max() < 0.0);
        assert!(bp.symmetric_eigen().eigenvalues.min() > 0.0);
    }

    #[test]
    fn so_1_n_part_dimensions() {
        for n in [2usize, 3, 4] {
            let alg = make_so(1, n).unwrap();
            let dec = cartan_from_star(&alg, &tols()).unwrap();
            assert_eq!(dec.dim_k(), n * (n - 1) / 2);
            assert_eq!(dec.dim_p(), n);
        }
    }

    #[test]
    fn bracket_relations_of_parts() {
        // [k,k] in k, [k,p] in p, [p,p] in k for so(1,2)
        let alg = make_so(1, 2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let k = dec.k_basis.matrices(&alg);
        let p = dec.p_basis.matrices(&alg);
        let kq: Vec<RVector> = k.iter().map(vectorize_complex).collect();
        let pq: Vec<RVector> = p.iter().map(vectorize_complex).collect();
        let kq = linalg::orthonormalize(&kq, 1e-12);
        let pq = linalg::orthonormalize(&pq, 1e-12);
        for y1 in &p {
            for y2 in &p {
                let b = commutator(y1, y2);
                assert!(linalg::span_membership_residual(&kq, &vectorize_complex(&b)) < 1e-10);
            }
            for x in &k {
                let b = commutator(x, y1);
                assert!(linalg::span_membership_residual(&pq, &vectorize_complex(&b)) < 1e-10);
            }
        }
    }

    #[test]
    fn canonical_embedding_examples() {
        let alg = make_sl(2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        // k itself is theta-fixed
        assert!(dec.is_canonically_embedded(&dec.k_basis, &tols()));
        // Borel span{e, h}: theta(e) = -f leaves the span
        // basis order of make_sl(2): E01, E10, diag(1,-1)
        let borel = Subspace::from_rows(&[
            RVector::from_row_slice(&[1.0, 0.0, 0.0]),
            RVector::from_row_slice(&[0.0, 0.0, 1.0]),
        ]);
        assert!(alg.is_subalgebra(&borel, 1e-9).unwrap());
        assert!(!dec.is_canonically_embedded(&borel, &tols()));
        let split = dec.split(&borel, &tols()).unwrap();
        assert!(!split.canonical);
        assert_eq!(split.defect, 1);
        assert_eq!((split.in_k.dim(), split.in_p.dim()), (0, 1));
    }

    #[test]
    fn boost_line_in_so12_sits_in_p() {
        // basis of so(1,2): boost01, boost02, rotation12
        let alg = make_so(1, 2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let h = Subspace::from_rows(&[RVector::from_row_slice(&[1.0, 0.0, 0.0])]);
        let split = dec.split(&h, &tols()).unwrap();
        assert!(split.canonical);
        assert_eq!((split.in_k.dim(), split.in_p.dim()), (0, 1));
        // full algebra intersected with a part returns the part
        let full = Subspace::new(RMatrix::identity(3, 3));
        let ik = dec.intersect_with(&full, &dec.k_basis, &tols()).unwrap();
        assert_eq!(ik.dim(), 1);
    }

    #[test]
    fn lie_triple_examples() {
        let alg = make_sl(3).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        // all of p is a Lie triple system
        assert!(dec.is_lie_triple(&dec.p_basis, &tols()).unwrap());
        // any line is one
        let line = Subspace::from_rows(&[dec.p_basis.coeffs.row(0).transpose()]);
        assert!(dec.is_lie_triple(&line, &tols()).unwrap());
    }

    #[test]
    fn generic_plane_in_p_is_not_lie_triple() {
        // s = span{E01 + E10, diag(1,0,-1)} in sl(3,R):
        // [[diag, E01+E10], E01+E10] = diag(2,-2,0) leaves the span
        let alg = make_sl(3).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let c = |x: f64| Complex64::new(x, 0.0);
        let mut x1 = linalg::CMatrix::zeros(3, 3);
        x1[(0, 1)] = c(1.0);
        x1[(1, 0)] = c(1.0);
        let mut x2 = linalg::CMatrix::zeros(3, 3);
        x2[(0, 0)] = c(1.0);
        x2[(2, 2)] = c(-1.0);
        let s = Subspace::from_matrices(&alg, &[x1, x2], 1e-9).unwrap();
        assert!(!dec.is_lie_triple(&s, &tols()).unwrap());
    }

    #[test]
    fn lie_triple_rejects_vectors_outside_p() {
        let alg = make_sl(2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        assert!(matches!(
            dec.is_lie_triple(&dec.k_basis, &tols()),
            Err(Error::NotInP(_))
        ));
    }

    #[test]
    fn theta_stable_subalgebra_gives_lie_triple_p_part() {
        // so(1,2) block in so(1,3): its p-part must be a Lie triple system
        let alg = make_so(1, 3).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let sub = crate::catalog::block_so_subalgebra(&alg, &[0, 1, 2]).unwrap();
        assert!(dec.is_canonically_embedded(&sub, &tols()));
        let split = dec.split(&sub, &tols()).unwrap();
        assert!(dec.is_lie_triple(&split.in_p, &tols()).unwrap());
    }

    #[test]
    fn fixed_points_of_signature_conjugation() {
        let tol = tols();
        // Ad(I_{1,2}) on so(3) fixes the so(2) rotation in the last block
        let alg = make_so(0, 3).unwrap();
        let s = signature_matrix(1, 3).map(|x| Complex64::new(x, 0.0));
        let sigma = ad_conjugation(&alg, &s, &tol).unwrap();
        let fixed = fixed_point_algebra(&sigma, &alg, &tol).unwrap();
        assert_eq!(fixed.dim(), 1);
        // Ad(I_{2,3}) on so(5): so(2) + so(3), dim 1 + 3
        let alg = make_so(0, 5).unwrap();
        let s = signature_matrix(2, 5).map(|x| Complex64::new(x, 0.0));
        let sigma = ad_conjugation(&alg, &s, &tol).unwrap();
        let fixed = fixed_point_algebra(&sigma, &alg, &tol).unwrap();
        assert_eq!(fixed.dim(), 4);
        assert!(alg.is_subalgebra(&fixed, 1e-9).unwrap());
        // identity sigma fixes everything
        let id = RMatrix::identity(10, 10);
        assert_eq!(fixed_point_algebra(&id, &alg, &tol).unwrap().dim(), 10);
    }

    #[test]
    fn fixed_point_rejects_non_automorphism() {
        let alg = make_so(0, 3).unwrap();
        // an involution of coordinates that is not an automorphism
        let bad = RMatrix::from_diagonal(&RVector::from_row_slice(&[1.0, -1.0, 1.0]));
        assert!(matches!(
            fixed_point_algebra(&bad, &alg, &tols()),
            Err(Error::NotInvolution(_))
        ));
    }

    #[test]
    fn borel_span_is_not_star_closed() {
        let c = |x: f64| Complex64::new(x, 0.0);
        let h = linalg::CMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]);
        let e = linalg::CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(0.0), c(0.0)]);
        let borel = MatrixLieAlgebra::build("borel", vec![h, e], 1e-8, 1e-9).unwrap();
        // not semisimple, so the decomposition is refused upstream
        assert!(matches!(
            cartan_from_star(&borel, &tols()),
            Err(Error::AmbientNotSemisimple)
        ));
    }
}
