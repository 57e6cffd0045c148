//! The duality map psi: X + Y -> X + iY between a noncompact semisimple
//! algebra g = k + p and its compact dual g* = k + ip, together with
//! dualization of theta-stable subalgebras.

use num_complex::Complex64;

use crate::cartan::{CartanDecomposition, SymmetricPair};
use crate::error::{Error, Result};
use crate::liealg::{MatrixLieAlgebra, Subspace};
use crate::linalg::{self, BilinearForm, RMatrix, RVector, Tolerances};

/// A noncompact algebra together with its compact dual, realized in the
/// same complex ambient by multiplying the p-basis matrices by i.
#[derive(Debug, Clone)]
pub struct DualPair {
    pub decomposition: CartanDecomposition,
    pub compact: MatrixLieAlgebra,
    /// Coordinate matrix of psi: coords in g -> coords in g*'s basis.
    pub psi_matrix: RMatrix,
    psi_inverse: RMatrix,
    /// The dual metric beta* on the ip-part of g* (positive definite).
    pub dual_form: BilinearForm,
}

/// Builds g* = k + ip from a Cartan decomposition and certifies it is a
/// compact real form (negative definite Killing form).
pub fn dualize_algebra(dec: &CartanDecomposition, tol: &Tolerances) -> Result<DualPair> {
    let alg = &dec.algebra;
    let d = alg.dim();
    let dk = dec.dim_k();
    let i = Complex64::new(0.0, 1.0);

    let mut dual_basis = Vec::with_capacity(d);
    for row in dec.k_basis.rows() {
        dual_basis.push(alg.from_coords(&row));
    }
    for row in dec.p_basis.rows() {
        dual_basis.push(alg.from_coords(&row) * i);
    }
    let compact = MatrixLieAlgebra::build(
        &format!("{}^*", alg.name),
        dual_basis,
        tol.rank,
        tol.close,
    )
    .map_err(|e| match e {
        Error::NotClosed(r) => Error::DualityBroken(r),
        other => other,
    })?;

    let eigs = compact.killing_form().eigenvalues();
    if eigs.max() >= -tol.rank * eigs.amax() {
        return Err(Error::NotCompactForm);
    }

    // mixed basis (k rows, then p rows) as a coordinate change: an element
    // with g-coordinates x has mixed coordinates u with x = S^T u, and psi
    // keeps the mixed coordinates.
    let mut s = RMatrix::zeros(d, d);
    if dk > 0 {
        s.view_mut((0, 0), (dk, d)).copy_from(&dec.k_basis.coeffs);
    }
    if d > dk {
        s.view_mut((dk, 0), (d - dk, d))
            .copy_from(&dec.p_basis.coeffs);
    }
    let psi_inverse = s.transpose();
    let psi_matrix = psi_inverse
        .clone()
        .try_inverse()
        .ok_or(Error::DependentBasis)?;

    // beta*(iX, iY) = beta(X, Y): gram of -B* over the ip rows
    let mut ip_coeffs = RMatrix::zeros(d - dk, d);
    for r in 0..(d - dk) {
        ip_coeffs[(r, dk + r)] = 1.0;
    }
    let dual_form = BilinearForm::new(-BilinearForm::new(compact.killing.clone())?.restrict(&ip_coeffs))?;

    Ok(DualPair {
        decomposition: dec.clone(),
        compact,
        psi_matrix,
        psi_inverse,
        dual_form,
    })
}

impl DualPair {
    pub fn noncompact(&self) -> &MatrixLieAlgebra {
        &self.decomposition.algebra
    }

    pub fn dim_k(&self) -> usize {
        self.decomposition.dim_k()
    }

    /// psi in coordinates: g-coordinates in, g*-coordinates out.
    pub fn psi(&self, x: &RVector) -> RVector {
        &self.psi_matrix * x
    }

    pub fn psi_inv(&self, u: &RVector) -> RVector {
        &self.psi_inverse * u
    }

    /// Image of a subspace of g under psi, as a subspace of g*.
    pub fn psi_subspace(&self, sub: &Subspace) -> Subspace {
        Subspace::new(&sub.coeffs * self.psi_matrix.transpose())
    }

    /// Bracket-closure residual of psi(sub) inside g*; large values
    /// witness that sub was not theta-stable.
    pub fn psi_closure_residual(&self, sub: &Subspace) -> Result<f64> {
        self.compact.subalgebra_residual(&self.psi_subspace(sub))
    }

    /// Dualizes a theta-stable subalgebra: h* = psi(h), verified to be a
    /// subalgebra of g*.
    pub fn dualize_subalgebra(&self, sub: &Subspace, tol: &Tolerances) -> Result<Subspace> {
        let res = self.noncompact().subalgebra_residual(sub)?;
        if res > tol.close {
            return Err(Error::NotClosed(res));
        }
        if !self.decomposition.is_canonically_embedded(sub, tol) {
            let split = self.decomposition.split(sub, tol)?;
            return Err(Error::NotThetaStable(split.defect));
        }
        let image = self.psi_subspace(sub);
        let res = self.compact.subalgebra_residual(&image)?;
        if res > tol.close {
            // a theta-stable subalgebra always dualizes; reaching this
            // indicates an upstream invariant violation
            return Err(Error::DualityBroken(res));
        }
        Ok(image)
    }

    /// Principal-angle defect between sub and psi^{-1}(psi(sub)).
    pub fn roundtrip(&self, sub: &Subspace) -> f64 {
        let image = self.psi_subspace(sub);
        let back = Subspace::new(&image.coeffs * self.psi_inverse.transpose());
        linalg::principal_angle_defect(&sub.rows(), &back.rows())
    }

    /// Coordinate span of the k-part of g* (the first dim-k basis vectors).
    pub fn compact_k_part(&self) -> Subspace {
        let d = self.compact.dim();
        let dk = self.dim_k();
        let mut coeffs = RMatrix::zeros(dk, d);
        for r in 0..dk {
            coeffs[(r, r)] = 1.0;
        }
        Subspace::new(coeffs)
    }

    /// Coordinate span of the ip-part of g*.
    pub fn compact_ip_part(&self) -> Subspace {
        let d = self.compact.dim();
        let dk = self.dim_k();
        let mut coeffs = RMatrix::zeros(d - dk, d);
        for r in 0..(d - dk) {
            coeffs[(r, dk + r)] = 1.0;
        }
        Subspace::new(coeffs)
    }

    /// The compact side as a symmetric pair: metric -B* on ip, curvature
    /// sign +1.
    pub fn compact_pair(&self) -> Result<SymmetricPair> {
        Ok(SymmetricPair {
            algebra: self.compact.clone(),
            k_part: self.compact_k_part(),
            p_part: self.compact_ip_part(),
            metric_p: self.dual_form.clone(),
            curvature_sign: 1.0,
        })
    }
}
