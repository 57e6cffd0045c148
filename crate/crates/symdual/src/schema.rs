//! Stable JSON formats for algebras, subspaces, and dualization output.
//!
//! Matrices serialize as N x N arrays of [re, im] pairs so that files are
//! readable without knowing the internal layout.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{MatrixLieAlgebra, Subspace};
use crate::linalg::{CMatrix, RMatrix, Tolerances};

/// A matrix Lie algebra as stored on disk.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub ambient_size: usize,
    /// Basis matrices, each `ambient_size` x `ambient_size` of [re, im].
    pub basis: Vec<Vec<Vec<[f64; 2]>>>,
}

/// A subspace as stored on disk: coordinate rows over the parent basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub parent: String,
    pub coeffs: Vec<Vec<f64>>,
}

/// Output of a dualization run: both sides of the dual pair plus the psi
/// coordinate matrix (and the image subspace when one was supplied).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DualizeJson {
    pub noncompact: AlgebraJson,
    pub compact: AlgebraJson,
    pub psi: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_subspace: Option<SubspaceJson>,
}

fn matrix_to_json(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

fn matrix_from_json(rows: &[Vec<[f64; 2]>], n: usize) -> Result<CMatrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionError(format!(
            "basis matrix is not {n} x {n}"
        )));
    }
    Ok(CMatrix::from_fn(n, n, |i, j| {
        Complex64::new(rows[i][j][0], rows[i][j][1])
    }))
}

pub fn real_matrix_to_json(m: &RMatrix) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

impl AlgebraJson {
    pub fn from_algebra(alg: &MatrixLieAlgebra) -> Self {
        AlgebraJson {
            name: alg.name.clone(),
            ambient_size: alg.ambient_size,
            basis: alg.basis.iter().map(matrix_to_json).collect(),
        }
    }

    /// Rebuilds the algebra, re-validating independence and closure.
    pub fn to_algebra(&self, tol: &Tolerances) -> Result<MatrixLieAlgebra> {
        let basis = self
            .basis
            .iter()
            .map(|rows| matrix_from_json(rows, self.ambient_size))
            .collect::<Result<Vec<_>>>()?;
        MatrixLieAlgebra::build(&self.name, basis, tol.rank, tol.close)
    }
}

impl SubspaceJson {
    pub fn from_subspace(parent: &str, sub: &Subspace) -> Self {
        SubspaceJson {
            parent: parent.to_string(),
            coeffs: real_matrix_to_json(&sub.coeffs),
        }
    }

    pub fn to_subspace(&self, parent_dim: usize) -> Result<Subspace> {
        if self.coeffs.iter().any(|r| r.len() != parent_dim) {
            return Err(Error::DimensionError(format!(
                "coefficient rows must have length {parent_dim}"
            )));
        }
        let k = self.coeffs.len();
        let coeffs = DMatrix::from_fn(k, parent_dim, |i, j| self.coeffs[i][j]);
        Ok(Subspace { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_so;
    use crate::linalg::RVector;

    #[test]
    fn algebra_roundtrips_through_json() {
        let alg = make_so(1, 2).unwrap();
        let json = AlgebraJson::from_algebra(&alg);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: AlgebraJson = serde_json::from_str(&text).unwrap();
        let back = parsed.to_algebra(&Tolerances::default()).unwrap();
        assert_eq!(back.dim(), alg.dim());
        for (a, b) in back.basis.iter().zip(alg.basis.iter()) {
            assert!((a - b).map(|z| z.norm()).max() < 1e-15);
        }
    }

    #[test]
    fn subspace_roundtrips_through_json() {
        let sub = Subspace::from_rows(&[RVector::from_vec(vec![1.0, 0.0, 2.0])]);
        let json = SubspaceJson::from_subspace("so(1,2)", &sub);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: SubspaceJson = serde_json::from_str(&text).unwrap();
        let back = parsed.to_subspace(3).unwrap();
        assert!((back.coeffs - sub.coeffs).amax() < 1e-15);
        assert!(parsed.to_subspace(4).is_err());
    }

    #[test]
    fn mismatched_matrix_size_is_rejected() {
        let alg = make_so(0, 3).unwrap();
        let mut json = AlgebraJson::from_algebra(&alg);
        json.ambient_size = 4;
        assert!(json.to_algebra(&Tolerances::default()).is_err());
    }
}
