//! Form-aware numerical kernel: ranks, null spaces, projections and
//! eigensplits used by every other module.
//!
//! All subspace computations happen in real coordinate vectors; complex
//! matrices only appear as realizations of algebra elements.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type RMatrix = DMatrix<f64>;
pub type RVector = DVector<f64>;

/// Global tolerances. Rank decisions are relative to the largest singular
/// value; closure and orthogonality thresholds are absolute (all catalog
/// matrices have entries of magnitude O(1)).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative SVD threshold for rank decisions.
    pub rank: f64,
    /// Absolute residual for bracket closure, Jacobi and automorphism checks.
    pub close: f64,
    /// Principal-angle defect for subspace equality.
    pub span: f64,
    /// Verification threshold for the trilinear orthogonality test.
    pub orth: f64,
    /// Refutation threshold for the trilinear orthogonality test.
    pub refute: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            rank: 1e-8,
            close: 1e-9,
            span: 1e-7,
            orth: 1e-7,
            refute: 1e-3,
        }
    }
}

/// Symmetric bilinear form given by its Gram matrix over a chosen basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BilinearForm {
    pub gram: RMatrix,
}

impl BilinearForm {
    /// Symmetry tolerance for Gram matrices.
    pub const TAU_SYM: f64 = 1e-9;

    pub fn new(gram: RMatrix) -> Result<Self> {
        if gram.nrows() != gram.ncols() {
            return Err(Error::DimensionError("Gram matrix must be square".into()));
        }
        let asym = (&gram - gram.transpose()).amax();
        if !asym.is_finite() || asym > Self::TAU_SYM {
            return Err(Error::InvalidMatrix);
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn apply(&self, x: &RVector, y: &RVector) -> f64 {
        (x.transpose() * &self.gram * y)[(0, 0)]
    }

    pub fn eigenvalues(&self) -> RVector {
        self.gram.clone().symmetric_eigen().eigenvalues
    }

    /// Restriction to the row span of `coeffs`: C G C^T.
    pub fn restrict(&self, coeffs: &RMatrix) -> RMatrix {
        let g = coeffs * &self.gram * coeffs.transpose();
        symmetrize(&g)
    }
}

pub fn symmetrize(m: &RMatrix) -> RMatrix {
    (m + m.transpose()) * 0.5
}

pub fn is_finite_c(m: &CMatrix) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

pub fn is_finite_r(m: &RMatrix) -> bool {
    m.iter().all(|x| x.is_finite())
}

fn rank_from_singular(sv: &[f64], tol: f64) -> usize {
    let max = sv.iter().cloned().fold(0.0_f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * max).count()
}

/// Number of singular values above `tol` times the largest one.
pub fn numerical_rank(m: &RMatrix, tol: f64) -> Result<usize> {
    if !is_finite_r(m) {
        return Err(Error::InvalidMatrix);
    }
    let sv = m.clone().singular_values();
    Ok(rank_from_singular(sv.as_slice(), tol))
}

/// Complex counterpart of [`numerical_rank`].
pub fn numerical_rank_complex(m: &CMatrix, tol: f64) -> Result<usize> {
    if !is_finite_c(m) {
        return Err(Error::InvalidMatrix);
    }
    let sv = m.clone().singular_values();
    Ok(rank_from_singular(sv.as_slice(), tol))
}

/// Orthonormal basis of the kernel of `m`, from the right singular vectors.
pub fn nullspace(m: &RMatrix, tol: f64) -> Result<Vec<RVector>> {
    if !is_finite_r(m) {
        return Err(Error::InvalidMatrix);
    }
    let cols = m.ncols();
    if cols == 0 {
        return Ok(vec![]);
    }
    // Pad with zero rows so the thin SVD carries a full set of right
    // singular vectors.
    let work = if m.nrows() < cols {
        let mut w = RMatrix::zeros(cols, cols);
        w.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
        w
    } else {
        m.clone()
    };
    let svd = work.svd(false, true);
    let v_t = svd.v_t.expect("SVD with V requested");
    let sv = svd.singular_values;
    let max = sv.iter().cloned().fold(0.0_f64, f64::max);
    let mut basis = Vec::new();
    for (i, &s) in sv.iter().enumerate() {
        if max == 0.0 || s <= tol * max {
            basis.push(v_t.row(i).transpose());
        }
    }
    Ok(basis)
}

/// Modified Gram-Schmidt with one re-orthogonalization pass. Near-zero
/// vectors are dropped.
pub fn orthonormalize(rows: &[RVector], tol: f64) -> Vec<RVector> {
    let mut basis: Vec<RVector> = Vec::with_capacity(rows.len());
    for v in rows {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = b.dot(&w);
                w -= b * c;
            }
        }
        let n = w.norm();
        if n > tol * v.norm().max(1.0) {
            basis.push(w / n);
        }
    }
    basis
}

/// Gram-Schmidt in the inner product given by `gram` (must be positive
/// definite on the span).
pub fn orthonormalize_with(rows: &[RVector], gram: &RMatrix, tol: f64) -> Vec<RVector> {
    let mut basis: Vec<RVector> = Vec::with_capacity(rows.len());
    let ip = |a: &RVector, b: &RVector| (a.transpose() * gram * b)[(0, 0)];
    for v in rows {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = ip(b, &w);
                w -= b * c;
            }
        }
        let n = ip(&w, &w).max(0.0).sqrt();
        if n > tol * ip(v, v).abs().sqrt().max(1.0) {
            basis.push(w / n);
        }
    }
    basis
}

/// Basis of `{w : form(w, s) = 0 for all s in span}`. The form must be
/// definite on the ambient space.
pub fn orthocomplement(
    span: &[RVector],
    form: &BilinearForm,
    tol: f64,
) -> Result<Vec<RVector>> {
    let d = form.dim();
    let eigs = form.eigenvalues();
    let max = eigs.amax();
    if max == 0.0 || eigs.iter().any(|&e| e.abs() <= tol * max) {
        return Err(Error::FormNotDefinite);
    }
    let positive = eigs[0] > 0.0;
    if eigs.iter().any(|&e| (e > 0.0) != positive) {
        return Err(Error::FormNotDefinite);
    }
    if span.is_empty() {
        return Ok((0..d).map(|i| standard_basis_vector(d, i)).collect());
    }
    let mut s = RMatrix::zeros(span.len(), d);
    for (i, v) in span.iter().enumerate() {
        if v.len() != d {
            return Err(Error::DimensionError(format!(
                "span vector length {} vs ambient {}",
                v.len(),
                d
            )));
        }
        s.set_row(i, &v.transpose());
    }
    nullspace(&(s * &form.gram), tol)
}

pub fn standard_basis_vector(d: usize, i: usize) -> RVector {
    let mut v = RVector::zeros(d);
    v[i] = 1.0;
    v
}

/// Splits R^d into the +1 and -1 eigenspaces of an involution `t`.
pub fn eigensplit_involution(
    t: &RMatrix,
    tol: f64,
) -> Result<(Vec<RVector>, Vec<RVector>)> {
    let d = t.nrows();
    if d != t.ncols() {
        return Err(Error::DimensionError("involution must be square".into()));
    }
    let res = (t * t - RMatrix::identity(d, d)).amax();
    if !res.is_finite() || res > tol {
        return Err(Error::NotInvolution(res));
    }
    let id = RMatrix::identity(d, d);
    let plus = nullspace(&(t - &id), 1e-7)?;
    let minus = nullspace(&(t + &id), 1e-7)?;
    if plus.len() + minus.len() != d {
        return Err(Error::NotInvolution(res));
    }
    Ok((plus, minus))
}

fn rows_to_matrix(rows: &[RVector], d: usize) -> RMatrix {
    let mut m = RMatrix::zeros(rows.len(), d);
    for (i, v) in rows.iter().enumerate() {
        m.set_row(i, &v.transpose());
    }
    m
}

/// Defect `sin(theta_max)` between two subspaces of equal dimension;
/// infinite when the dimensions differ.
pub fn principal_angle_defect(a: &[RVector], b: &[RVector]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    if a.is_empty() {
        return 0.0;
    }
    let d = a[0].len();
    let qa = rows_to_matrix(&orthonormalize(a, 1e-12), d);
    let qb = rows_to_matrix(&orthonormalize(b, 1e-12), d);
    if qa.nrows() != qb.nrows() {
        return f64::INFINITY;
    }
    // sin of the largest principal angle, symmetric in the two spans
    let ra = &qb - (&qb * qa.transpose()) * &qa;
    let rb = &qa - (&qa * qb.transpose()) * &qb;
    let sa = ra.singular_values().max();
    let sb = rb.singular_values().max();
    sa.max(sb)
}

/// Residual distance of `v` from the row span of `span`, relative to `|v|`.
pub fn span_membership_residual(span: &[RVector], v: &RVector) -> f64 {
    let n = v.norm();
    if n == 0.0 {
        return 0.0;
    }
    let q = orthonormalize(span, 1e-12);
    let mut w = v.clone();
    for b in &q {
        let c = b.dot(&w);
        w -= b * c;
    }
    w.norm() / n
}

/// Intersection of two row spans, as an orthonormal basis.
pub fn subspace_intersection(a: &[RVector], b: &[RVector], tol: f64) -> Result<Vec<RVector>> {
    let d = match (a.first(), b.first()) {
        (Some(v), _) | (_, Some(v)) => v.len(),
        _ => return Ok(vec![]),
    };
    // x lies in span(a) iff x is orthogonal to the complement of a.
    let ca = nullspace(&rows_to_matrix(a, d), tol)?;
    let cb = nullspace(&rows_to_matrix(b, d), tol)?;
    let mut stacked = Vec::with_capacity(ca.len() + cb.len());
    stacked.extend(ca);
    stacked.extend(cb);
    nullspace(&rows_to_matrix(&stacked, d), tol)
}

/// Real vectorization of a complex matrix: all real parts, then all
/// imaginary parts, column-major.
pub fn vectorize_complex(m: &CMatrix) -> RVector {
    let n = m.nrows() * m.ncols();
    let mut v = RVector::zeros(2 * n);
    for (i, z) in m.iter().enumerate() {
        v[i] = z.re;
        v[n + i] = z.im;
    }
    v
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cmat(rows: usize, cols: usize, data: &[f64]) -> CMatrix {
        CMatrix::from_iterator(rows, cols, data.iter().map(|&x| Complex64::new(x, 0.0)))
    }

    #[test]
    fn rank_identity_and_zero() {
        let id = RMatrix::identity(3, 3);
        assert_eq!(numerical_rank(&id, 1e-8).unwrap(), 3);
        let z = RMatrix::zeros(2, 2);
        assert_eq!(numerical_rank(&z, 1e-8).unwrap(), 0);
    }

    #[test]
    fn rank_near_singular() {
        // singular values 1 and 1e-14
        let m = RMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 1e-14]);
        assert_eq!(numerical_rank(&m, 1e-8).unwrap(), 1);
    }

    #[test]
    fn rank_rejects_nan() {
        let m = RMatrix::from_row_slice(1, 1, &[f64::NAN]);
        assert!(matches!(numerical_rank(&m, 1e-8), Err(Error::InvalidMatrix)));
    }

    #[test]
    fn nullspace_zero_and_identity() {
        let z = RMatrix::zeros(2, 2);
        let ns = nullspace(&z, 1e-8).unwrap();
        assert_eq!(ns.len(), 2);
        assert!((ns[0].dot(&ns[1])).abs() < 1e-12);
        let id = RMatrix::identity(3, 3);
        assert!(nullspace(&id, 1e-8).unwrap().is_empty());
    }

    #[test]
    fn nullspace_rank_one() {
        let m = RMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 1.0]);
        let ns = nullspace(&m, 1e-8).unwrap();
        assert_eq!(ns.len(), 1);
        // direction (1,-1)/sqrt(2)
        let v = &ns[0];
        assert!((v[0] + v[1]).abs() < 1e-12);
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nullspace_wide_matrix() {
        // 1x3 matrix: kernel must be 2-dimensional despite the thin SVD
        let m = RMatrix::from_row_slice(1, 3, &[1.0, 0.0, 0.0]);
        assert_eq!(nullspace(&m, 1e-8).unwrap().len(), 2);
    }

    #[test]
    fn orthocomplement_examples() {
        let id_form = BilinearForm::new(RMatrix::identity(3, 3)).unwrap();
        let e1 = standard_basis_vector(3, 0);
        let c = orthocomplement(&[e1], &id_form, 1e-8).unwrap();
        assert_eq!(c.len(), 2);
        for v in &c {
            assert!(v[0].abs() < 1e-12);
        }
        // empty span returns the full ambient basis
        let full = orthocomplement(&[], &id_form, 1e-8).unwrap();
        assert_eq!(full.len(), 3);

        // span {(1,1)} with Gram diag(1,2): complement direction (2,-1)
        let g = BilinearForm::new(RMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 2.0])).unwrap();
        let v = RVector::from_row_slice(&[1.0, 1.0]);
        let c = orthocomplement(&[v], &g, 1e-8).unwrap();
        assert_eq!(c.len(), 1);
        let w = &c[0];
        assert!((w[0] * 1.0 + w[1] * 2.0).abs() < 1e-12);
    }

    #[test]
    fn orthocomplement_rejects_indefinite_form() {
        let g = BilinearForm::new(RMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0])).unwrap();
        let v = RVector::from_row_slice(&[1.0, 0.0]);
        assert!(matches!(
            orthocomplement(&[v], &g, 1e-8),
            Err(Error::FormNotDefinite)
        ));
    }

    #[test]
    fn eigensplit_examples() {
        let id = RMatrix::identity(4, 4);
        let (p, m) = eigensplit_involution(&id, 1e-9).unwrap();
        assert_eq!((p.len(), m.len()), (4, 0));

        let neg = -RMatrix::identity(2, 2);
        let (p, m) = eigensplit_involution(&neg, 1e-9).unwrap();
        assert_eq!((p.len(), m.len()), (0, 2));

        let t = RMatrix::from_diagonal(&RVector::from_row_slice(&[1.0, -1.0, 1.0]));
        let (p, m) = eigensplit_involution(&t, 1e-9).unwrap();
        assert_eq!((p.len(), m.len()), (2, 1));
    }

    #[test]
    fn eigensplit_rejects_non_involution() {
        let t = RMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]);
        assert!(matches!(
            eigensplit_involution(&t, 1e-9),
            Err(Error::NotInvolution(_))
        ));
    }

    #[test]
    fn principal_angles_detect_equality() {
        let a = vec![standard_basis_vector(3, 0), standard_basis_vector(3, 1)];
        let b = vec![
            RVector::from_row_slice(&[1.0, 1.0, 0.0]),
            RVector::from_row_slice(&[1.0, -1.0, 0.0]),
        ];
        assert!(principal_angle_defect(&a, &b) < 1e-12);
        let c = vec![standard_basis_vector(3, 0), standard_basis_vector(3, 2)];
        assert!(principal_angle_defect(&a, &c) > 0.5);
    }

    #[test]
    fn vectorize_roundtrip_shape() {
        let m = cmat(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(vectorize_complex(&m).len(), 8);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_plus_nullity_is_cols(rows in 1usize..6, cols in 1usize..6,
                                     data in proptest::collection::vec(-5.0f64..5.0, 36)) {
            let m = RMatrix::from_fn(rows, cols, |i, j| data[i * 6 + j]);
            let r = numerical_rank(&m, 1e-8).unwrap();
            let n = nullspace(&m, 1e-8).unwrap().len();
            prop_assert_eq!(r + n, cols);
        }

        #[test]
        fn orthocomplement_is_involutive(data in proptest::collection::vec(-3.0f64..3.0, 8)) {
            let d = 4;
            let form = BilinearForm::new(RMatrix::identity(d, d)).unwrap();
            let rows = vec![
                RVector::from_row_slice(&data[0..4]),
                RVector::from_row_slice(&data[4..8]),
            ];
            let span = orthonormalize(&rows, 1e-6);
            prop_assume!(!span.is_empty());
            let c = orthocomplement(&span, &form, 1e-8).unwrap();
            let cc = orthocomplement(&c, &form, 1e-8).unwrap();
            prop_assert!(principal_angle_defect(&span, &cc) <= 1e-7);
        }

        #[test]
        fn eigensplit_bases_are_invariant(signs in proptest::collection::vec(prop::bool::ANY, 4)) {
            let diag: Vec<f64> = signs.iter().map(|&s| if s { 1.0 } else { -1.0 }).collect();
            let t = RMatrix::from_diagonal(&RVector::from_row_slice(&diag));
            let (plus, minus) = eigensplit_involution(&t, 1e-9).unwrap();
            for v in &plus {
                prop_assert!(((&t * v) - v).amax() <= 1e-8);
            }
            for v in &minus {
                prop_assert!(((&t * v) + v).amax() <= 1e-8);
            }
        }
    }
}
