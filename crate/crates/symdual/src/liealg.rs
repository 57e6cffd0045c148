//! Matrix Lie algebras over the reals: bracket closure, adjoint
//! representation, Killing form, and the algebraic-reductivity test.
//!
//! An algebra is a real span of complex matrices. Coordinates of an
//! element are taken with respect to the stored basis via least squares
//! on the real vectorization, so membership always comes with a residual.

use nalgebra::SVD;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    self, numerical_rank, numerical_rank_complex, nullspace, vectorize_complex, BilinearForm,
    CMatrix, RMatrix, RVector,
};

/// A finite-dimensional real Lie algebra of complex matrices.
#[derive(Debug, Clone)]
pub struct MatrixLieAlgebra {
    pub name: String,
    pub ambient_size: usize,
    pub basis: Vec<CMatrix>,
    /// Adjoint matrices: column j of `ad[i]` holds the coordinates of
    /// `[basis[i], basis[j]]`.
    pub ad: Vec<RMatrix>,
    /// Killing form Gram matrix over `basis`.
    pub killing: RMatrix,
    vec_basis: RMatrix,
    vec_pinv: RMatrix,
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

impl MatrixLieAlgebra {
    /// Builds the algebra from a spanning set, verifying linear
    /// independence and bracket closure up to `tol_close`.
    pub fn build(
        name: &str,
        basis: Vec<CMatrix>,
        tol_rank: f64,
        tol_close: f64,
    ) -> Result<Self> {
        let d = basis.len();
        if d == 0 {
            return Err(Error::InvalidInput("empty basis".into()));
        }
        let n = basis[0].nrows();
        for m in &basis {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionError(
                    "basis matrices must be square of equal size".into(),
                ));
            }
            if !linalg::is_finite_c(m) {
                return Err(Error::InvalidMatrix);
            }
        }
        // columns of V are the vectorized basis elements
        let mut vec_basis = RMatrix::zeros(2 * n * n, d);
        for (j, m) in basis.iter().enumerate() {
            vec_basis.set_column(j, &vectorize_complex(m));
        }
        if numerical_rank(&vec_basis, tol_rank)? != d {
            return Err(Error::DependentBasis);
        }
        let svd = SVD::new(vec_basis.clone(), true, true);
        let sv_max = svd.singular_values.max();
        let vec_pinv = svd
            .pseudo_inverse(tol_rank * sv_max)
            .map_err(|_| Error::InvalidMatrix)?;

        let mut alg = MatrixLieAlgebra {
            name: name.to_string(),
            ambient_size: n,
            basis,
            ad: vec![],
            killing: RMatrix::zeros(d, d),
            vec_basis,
            vec_pinv,
        };

        // closure check and adjoint matrices in one sweep
        let mut ad = vec![RMatrix::zeros(d, d); d];
        for (i, ad_i) in ad.iter_mut().enumerate() {
            for j in 0..d {
                if i == j {
                    continue;
                }
                let c = commutator(&alg.basis[i], &alg.basis[j]);
                let (coords, res) = alg.coords_with_residual(&c);
                if res > tol_close {
                    return Err(Error::NotClosed(res));
                }
                ad_i.set_column(j, &coords);
            }
        }
        alg.ad = ad;
        let killing = RMatrix::from_fn(d, d, |i, j| (&alg.ad[i] * &alg.ad[j]).trace());
        alg.killing = linalg::symmetrize(&killing);
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Least-squares coordinates of `m` plus the relative projection
    /// residual (zero iff `m` lies in the span).
    pub fn coords_with_residual(&self, m: &CMatrix) -> (RVector, f64) {
        let v = vectorize_complex(m);
        let coords = &self.vec_pinv * &v;
        let recon = &self.vec_basis * &coords;
        let res = (&v - recon).norm() / v.norm().max(1.0);
        (coords, res)
    }

    /// Coordinates of an element, failing when `m` is not in the algebra.
    pub fn coords(&self, m: &CMatrix, tol: f64) -> Result<RVector> {
        let (c, res) = self.coords_with_residual(m);
        if res > tol {
            return Err(Error::NotInSpan(res));
        }
        Ok(c)
    }

    pub fn from_coords(&self, c: &RVector) -> CMatrix {
        let n = self.ambient_size;
        let mut m = CMatrix::zeros(n, n);
        for (x, b) in c.iter().zip(&self.basis) {
            m += b * Complex64::new(*x, 0.0);
        }
        m
    }

    /// Adjoint matrix of the element with coordinates `c`.
    pub fn adjoint_of(&self, c: &RVector) -> RMatrix {
        let d = self.dim();
        let mut a = RMatrix::zeros(d, d);
        for (x, adb) in c.iter().zip(&self.ad) {
            a += adb * *x;
        }
        a
    }

    /// Killing form B(x, y) = tr(ad x . ad y) in coordinates.
    pub fn killing_product(&self, x: &RVector, y: &RVector) -> f64 {
        (x.transpose() * &self.killing * y)[(0, 0)]
    }

    pub fn killing_form(&self) -> BilinearForm {
        BilinearForm::new(self.killing.clone()).expect("Killing Gram is symmetric")
    }

    /// Semisimplicity by Cartan's criterion: the Killing form is
    /// non-degenerate.
    pub fn is_semisimple(&self, tol_rank: f64) -> Result<bool> {
        Ok(numerical_rank(&self.killing, tol_rank)? == self.dim())
    }

    /// Orthonormal coordinate basis of the center.
    pub fn center(&self, tol_rank: f64) -> Result<Vec<RVector>> {
        let d = self.dim();
        let mut stacked = RMatrix::zeros(d * d, d);
        for (i, a) in self.ad.iter().enumerate() {
            stacked.view_mut((i * d, 0), (d, d)).copy_from(a);
        }
        nullspace(&stacked, tol_rank)
    }

    /// Maximal relative residual of any pairwise bracket of `sub` against
    /// the span of `sub` (zero means the subspace is a subalgebra).
    pub fn subalgebra_residual(&self, sub: &Subspace) -> Result<f64> {
        let mats = sub.matrices(self);
        let vecs: Vec<RVector> = mats.iter().map(vectorize_complex).collect();
        let q = linalg::orthonormalize(&vecs, 1e-12);
        let mut worst = 0.0_f64;
        for i in 0..mats.len() {
            for j in (i + 1)..mats.len() {
                let c = commutator(&mats[i], &mats[j]);
                let mut w = vectorize_complex(&c);
                for b in &q {
                    let coef = b.dot(&w);
                    w -= b * coef;
                }
                // scale by the operands, not the bracket: a bracket that
                // vanishes up to roundoff must count as inside the span
                let scale = mats[i].norm() * mats[j].norm();
                if scale > 0.0 {
                    worst = worst.max(w.norm() / scale);
                }
            }
        }
        Ok(worst)
    }

    pub fn is_subalgebra(&self, sub: &Subspace, tol_close: f64) -> Result<bool> {
        Ok(self.subalgebra_residual(sub)? <= tol_close)
    }
}

/// A linear subspace of an algebra, stored as coordinate rows over the
/// parent basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Subspace {
    pub coeffs: RMatrix,
}

impl Subspace {
    pub fn new(coeffs: RMatrix) -> Self {
        Subspace { coeffs }
    }

    pub fn from_rows(rows: &[RVector]) -> Self {
        let d = rows.first().map_or(0, |v| v.len());
        let mut coeffs = RMatrix::zeros(rows.len(), d);
        for (i, v) in rows.iter().enumerate() {
            coeffs.set_row(i, &v.transpose());
        }
        Subspace { coeffs }
    }

    /// Span of explicit matrices, expressed in the parent's coordinates.
    pub fn from_matrices(alg: &MatrixLieAlgebra, mats: &[CMatrix], tol: f64) -> Result<Self> {
        let rows: Vec<RVector> = mats
            .iter()
            .map(|m| alg.coords(m, tol))
            .collect::<Result<_>>()?;
        Ok(Self::from_rows(&rows))
    }

    pub fn dim(&self) -> usize {
        self.coeffs.nrows()
    }

    pub fn rows(&self) -> Vec<RVector> {
        (0..self.coeffs.nrows())
            .map(|i| self.coeffs.row(i).transpose())
            .collect()
    }

    pub fn matrices(&self, alg: &MatrixLieAlgebra) -> Vec<CMatrix> {
        self.rows().iter().map(|r| alg.from_coords(r)).collect()
    }
}

/// Outcome of the algebraic-reductivity test: a canonically closed
/// algebraic subgroup is reductive exactly when the restricted Killing
/// form of the ambient algebra is non-degenerate on its Lie algebra.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReductivityReport {
    pub subalgebra_dim: usize,
    /// Whether the subspace is closed under the bracket.
    pub closure_ok: bool,
    pub closure_residual: f64,
    pub killing_restriction_rank: usize,
    pub nondegenerate: bool,
    /// Smallest |eigenvalue| of the restricted Gram, for diagnostics.
    pub smallest_abs_eigenvalue: f64,
    /// The criterion is two-sided only for algebraic (Zariski-closed)
    /// subgroups; algebraicity is attested by the caller, not decided.
    pub attested_algebraic: bool,
}

impl ReductivityReport {
    /// The two-sided verdict, available only when the criterion applies.
    pub fn is_reductive(&self) -> Option<bool> {
        (self.closure_ok && self.attested_algebraic).then_some(self.nondegenerate)
    }
}

/// Tests reductivity of a subalgebra inside a semisimple ambient algebra
/// by restricting the ambient Killing form.
pub fn reductivity_report(
    alg: &MatrixLieAlgebra,
    sub: &Subspace,
    attested_algebraic: bool,
    tol_rank: f64,
    tol_close: f64,
) -> Result<ReductivityReport> {
    if !alg.is_semisimple(tol_rank)? {
        return Err(Error::AmbientNotSemisimple);
    }
    let closure_residual = alg.subalgebra_residual(sub)?;
    let restricted = alg.killing_form().restrict(&sub.coeffs);
    let eigs = restricted.clone().symmetric_eigen().eigenvalues;
    // degeneracy is judged against the ambient Killing scale, so that a
    // restriction to an isotropic line reads as rank zero
    let scale = alg.killing.amax();
    let rank = eigs.iter().filter(|e| e.abs() > tol_rank * scale).count();
    Ok(ReductivityReport {
        subalgebra_dim: sub.dim(),
        closure_ok: closure_residual <= tol_close,
        closure_residual,
        killing_restriction_rank: rank,
        nondegenerate: rank == sub.dim(),
        smallest_abs_eigenvalue: eigs.iter().map(|e| e.abs()).fold(f64::INFINITY, f64::min),
        attested_algebraic,
    })
}

/// Checks whether `ad x` is a semisimple operator: every eigenvalue's
/// geometric multiplicity must match its algebraic multiplicity.
pub fn is_ad_semisimple(
    alg: &MatrixLieAlgebra,
    x: &RVector,
    cluster_tol: f64,
    tol_rank: f64,
) -> Result<bool> {
    let a = alg.adjoint_of(x);
    let d = alg.dim();
    let eigs = a.clone().complex_eigenvalues();
    let scale = eigs.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
    // greedy clustering of the spectrum
    let mut remaining: Vec<Complex64> = eigs.iter().cloned().collect();
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    while let Some(seed) = remaining.pop() {
        let mut members = vec![seed];
        remaining.retain(|z| {
            if (z - seed).norm() <= cluster_tol * scale {
                members.push(*z);
                false
            } else {
                true
            }
        });
        let mean = members.iter().sum::<Complex64>() / members.len() as f64;
        clusters.push((mean, members.len()));
    }
    let ac = CMatrix::from_fn(d, d, |i, j| Complex64::new(a[(i, j)], 0.0));
    for (lambda, mult) in clusters {
        let shifted = &ac - CMatrix::identity(d, d) * lambda;
        // rank deficiency = geometric multiplicity
        let geo = d - numerical_rank_complex(&shifted, tol_rank.max(cluster_tol))?;
        if geo != mult {
            return Ok(false);
        }
    }
    Ok(true)
}
