//! Slice representations, cohomogeneity, polarity and hyperpolarity
//! verification, and section curvature profiles, all at the tangent space
//! of the base point.

use serde::{Deserialize, Serialize};

use crate::cartan::SymmetricPair;
use crate::error::{Error, Result};
use crate::liealg::{commutator, Subspace};
use crate::linalg::{
    self, nullspace, subspace_intersection, vectorize_complex, BilinearForm, RMatrix, RVector,
    Tolerances,
};
use crate::sampling::SplitMix64;

/// Number of random module points sampled per probabilistic decision.
pub const N_SAMPLES: usize = 20;

/// The linear action of h & k on the orthocomplement of h & p in p.
/// `action` matrices are written in a basis of `module` that is
/// orthonormal under the symmetric pair's metric, so `inner` is the
/// identity Gram.
#[derive(Debug, Clone)]
pub struct SliceRepresentation {
    /// h & k, rows in parent-algebra coordinates.
    pub actors: Subspace,
    /// Module basis rows in parent-algebra coordinates (metric-orthonormal).
    pub module: Subspace,
    /// One matrix per actor basis element, in the module basis.
    pub action: Vec<RMatrix>,
    pub inner: BilinearForm,
}

impl SliceRepresentation {
    /// Wraps explicit action matrices on a Euclidean module (used for
    /// stand-alone linear representations).
    pub fn from_action_matrices(action: Vec<RMatrix>) -> Self {
        let m = action.first().map_or(0, |a| a.nrows());
        SliceRepresentation {
            actors: Subspace::new(RMatrix::identity(action.len(), action.len())),
            module: Subspace::new(RMatrix::identity(m, m)),
            action,
            inner: BilinearForm::new(RMatrix::identity(m, m)).expect("identity Gram"),
        }
    }

    pub fn module_dim(&self) -> usize {
        self.inner.dim()
    }

    /// Lifts module-basis coordinate rows back to parent coordinates.
    pub fn lift(&self, rows_in_module: &[RVector]) -> Subspace {
        let lifted: Vec<RVector> = rows_in_module
            .iter()
            .map(|r| (r.transpose() * &self.module.coeffs).transpose())
            .collect();
        Subspace::from_rows(&lifted)
    }
}

/// Builds the slice representation of a canonically embedded subalgebra
/// with respect to a symmetric pair (either side of the duality).
pub fn slice_representation(
    h: &Subspace,
    pair: &SymmetricPair,
    tol: &Tolerances,
) -> Result<SliceRepresentation> {
    let alg = &pair.algebra;
    let h_k = subspace_intersection(&h.rows(), &pair.k_part.rows(), tol.rank)?;
    let h_p = subspace_intersection(&h.rows(), &pair.p_part.rows(), tol.rank)?;
    let defect = h.dim() - h_k.len() - h_p.len();
    if defect > 0 {
        return Err(Error::NotThetaStable(defect));
    }

    // work in p-part coordinates; the part rows are orthonormal by
    // construction, so projection gives exact coordinates
    let np = pair.p_part.dim();
    let p_coords = |v: &RVector| -> RVector { &pair.p_part.coeffs * v };
    let gram = &pair.metric_p.gram;

    let hp_in_p: Vec<RVector> = h_p.iter().map(&p_coords).collect();
    let complement = linalg::orthocomplement(&hp_in_p, &pair.metric_p, tol.rank)?;
    let module_p = linalg::orthonormalize_with(&complement, gram, 1e-10);
    let m = module_p.len();
    debug_assert_eq!(m, np - hp_in_p.len());

    // lift module vectors to ambient matrices once
    let lift_alg = |x: &RVector| (x.transpose() * &pair.p_part.coeffs).transpose();
    let module_rows: Vec<RVector> = module_p.iter().map(lift_alg).collect();
    let module_mats: Vec<_> = module_rows.iter().map(|r| alg.from_coords(r)).collect();

    let mut action = Vec::with_capacity(h_k.len());
    for a in &h_k {
        let x = alg.from_coords(a);
        let mut mat = RMatrix::zeros(m, m);
        for (v, mv) in module_mats.iter().enumerate() {
            let w = commutator(&x, mv);
            let w_coords = alg.coords(&w, tol.span)?;
            let w_p = p_coords(&w_coords);
            for u in 0..m {
                mat[(u, v)] = (module_p[u].transpose() * gram * &w_p)[(0, 0)];
            }
        }
        action.push(mat);
    }

    Ok(SliceRepresentation {
        actors: Subspace::from_rows(&h_k),
        module: Subspace::from_rows(&module_rows),
        action,
        inner: BilinearForm::new(RMatrix::identity(m, m))?,
    })
}

/// Rank of the map x -> [x, v] from actors into the module.
pub fn orbit_dimension(rep: &SliceRepresentation, v: &RVector, tol: &Tolerances) -> Result<usize> {
    let m = rep.module_dim();
    if rep.action.is_empty() || m == 0 {
        return Ok(0);
    }
    let mut tangent = RMatrix::zeros(m, rep.action.len());
    for (j, a) in rep.action.iter().enumerate() {
        tangent.set_column(j, &(a * v));
    }
    if !linalg::is_finite_r(&tangent) {
        return Err(Error::InvalidMatrix);
    }
    // threshold against |v| as well, so that a tangent map that is zero up
    // to roundoff reads as rank zero (action entries are O(1))
    let sv = tangent.singular_values();
    let scale = sv.max().max(v.norm());
    Ok(sv.iter().filter(|&&s| s > tol.rank * scale).count())
}

fn sample_points(rep: &SliceRepresentation, seed: u64) -> Vec<RVector> {
    let mut rng = SplitMix64::new(seed);
    (0..N_SAMPLES)
        .map(|_| rng.normal_vector(rep.module_dim()))
        .collect()
}

/// Cohomogeneity = module dim minus the maximal sampled orbit dimension.
pub fn cohomogeneity(rep: &SliceRepresentation, seed: u64, tol: &Tolerances) -> Result<usize> {
    let m = rep.module_dim();
    if m == 0 {
        return Ok(0);
    }
    let mut max_orbit = 0;
    for v in sample_points(rep, seed) {
        max_orbit = max_orbit.max(orbit_dimension(rep, &v, tol)?);
    }
    Ok(m - max_orbit)
}

/// Normal space of the orbit through a principal point: vectors of the
/// module orthogonal to every tangent direction [x, v]. Coordinates are
/// in the module basis; lift with `rep.lift` when ambient rows are needed.
fn section_at(rep: &SliceRepresentation, v: &RVector, tol: &Tolerances) -> Result<Vec<RVector>> {
    let m = rep.module_dim();
    if rep.action.is_empty() {
        return Ok((0..m).map(|i| linalg::standard_basis_vector(m, i)).collect());
    }
    let mut tangent_rows = RMatrix::zeros(rep.action.len(), m);
    for (j, a) in rep.action.iter().enumerate() {
        tangent_rows.set_row(j, &(a * v).transpose());
    }
    nullspace(&tangent_rows, tol.rank)
}

/// Exact trilinear orthogonality residual of a candidate section:
/// max |<[x, w], u>| over actors x and section basis vectors w, u.
fn trilinear_residual(rep: &SliceRepresentation, section: &[RVector]) -> f64 {
    let mut worst = 0.0_f64;
    for a in &rep.action {
        for w in section {
            let aw = a * w;
            for u in section {
                worst = worst.max(u.dot(&aw).abs());
            }
        }
    }
    worst
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolarVerdict {
    Verified,
    RefutedBySliceRep,
    Inconclusive,
}

/// Everything the polarity pipeline measured, with the sampling
/// parameters needed to reproduce it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolarityReport {
    pub seed: u64,
    pub n_samples: usize,
    pub cohomogeneity: usize,
    pub principal_orbit_dim: usize,
    /// Section rows in the coordinates the representation was given in
    /// (parent-algebra coordinates for slice representations).
    pub section: Subspace,
    pub orthogonality_residual: f64,
    /// None when the test does not apply (bare linear representation).
    pub lie_triple_ok: Option<bool>,
    pub polar: PolarVerdict,
    /// Only meaningful for Verified reports.
    pub hyperpolar: Option<bool>,
    pub section_curvatures: Vec<f64>,
}

/// Polarity of a linear representation: the normal space at a principal
/// point must be orthogonal to every orbit it meets. Verified / refuted
/// by the exact trilinear test at sampled principal points.
pub fn is_polar_linear(
    rep: &SliceRepresentation,
    seed: u64,
    tol: &Tolerances,
) -> Result<PolarityReport> {
    let m = rep.module_dim();
    if m == 0 {
        return Ok(PolarityReport {
            seed,
            n_samples: N_SAMPLES,
            cohomogeneity: 0,
            principal_orbit_dim: 0,
            section: rep.lift(&[]),
            orthogonality_residual: 0.0,
            lie_triple_ok: None,
            polar: PolarVerdict::Verified,
            hyperpolar: None,
            section_curvatures: vec![],
        });
    }
    let points = sample_points(rep, seed);
    let mut ranks = Vec::with_capacity(points.len());
    for v in &points {
        ranks.push(orbit_dimension(rep, v, tol)?);
    }
    let max_orbit = *ranks.iter().max().expect("nonempty samples");
    let principal: Vec<&RVector> = points
        .iter()
        .zip(&ranks)
        .filter(|(_, &r)| r == max_orbit)
        .map(|(v, _)| v)
        .collect();
    if principal.is_empty() {
        return Err(Error::SamplingFailed(N_SAMPLES));
    }

    let section = section_at(rep, principal[0], tol)?;
    let residual = trilinear_residual(rep, &section);
    let polar = if residual <= tol.orth {
        PolarVerdict::Verified
    } else {
        // refutation demands a large residual at every principal point
        let mut all_refuted = residual > tol.refute;
        for v in principal.iter().skip(1) {
            if !all_refuted {
                break;
            }
            let s = section_at(rep, v, tol)?;
            all_refuted &= trilinear_residual(rep, &s) > tol.refute;
        }
        if all_refuted {
            PolarVerdict::RefutedBySliceRep
        } else {
            PolarVerdict::Inconclusive
        }
    };
    Ok(PolarityReport {
        seed,
        n_samples: N_SAMPLES,
        cohomogeneity: m - max_orbit,
        principal_orbit_dim: max_orbit,
        section: rep.lift(&section),
        orthogonality_residual: residual,
        lie_triple_ok: None,
        polar,
        hyperpolar: None,
        section_curvatures: vec![],
    })
}

/// Lie triple test for a set of parent-coordinate rows lying in the
/// p-part of a symmetric pair.
pub fn lie_triple_residual(pair: &SymmetricPair, rows: &[RVector], tol: &Tolerances) -> Result<f64> {
    let p_q = linalg::orthonormalize(&pair.p_part.rows(), 1e-12);
    for r in rows {
        let res = linalg::span_membership_residual(&p_q, r);
        if res > tol.span {
            return Err(Error::NotInP(res));
        }
    }
    let mats: Vec<_> = rows.iter().map(|r| pair.algebra.from_coords(r)).collect();
    let vecs: Vec<RVector> = mats.iter().map(vectorize_complex).collect();
    let q = linalg::orthonormalize(&vecs, 1e-12);
    let mut worst = 0.0_f64;
    for x in &mats {
        for y in &mats {
            for z in &mats {
                let t = commutator(&commutator(x, y), z);
                let mut w = vectorize_complex(&t);
                for b in &q {
                    let coef = b.dot(&w);
                    w -= b * coef;
                }
                // scale by the operands: a triple bracket that vanishes
                // up to roundoff counts as inside the span
                let scale = x.norm() * y.norm() * z.norm();
                if scale > 0.0 {
                    worst = worst.max(w.norm() / scale);
                }
            }
        }
    }
    Ok(worst)
}

/// Max Frobenius norm of pairwise brackets: zero means an abelian
/// (flat) section.
fn max_bracket_norm(pair: &SymmetricPair, rows: &[RVector]) -> f64 {
    let mats: Vec<_> = rows.iter().map(|r| pair.algebra.from_coords(r)).collect();
    let mut worst = 0.0_f64;
    for (i, x) in mats.iter().enumerate() {
        for y in &mats[(i + 1)..] {
            worst = worst.max(linalg::frobenius(&commutator(x, y)));
        }
    }
    worst
}

/// Sectional curvatures K(s_i, s_j) of all basis planes of a subspace of
/// the p-part, under the symmetric-space formula with the pair's sign.
/// Rows must be orthonormal under the pair's metric.
pub fn section_curvatures(pair: &SymmetricPair, rows: &[RVector]) -> Result<Vec<f64>> {
    let alg = &pair.algebra;
    let mut out = Vec::new();
    for (i, x) in rows.iter().enumerate() {
        let mx = alg.from_coords(x);
        for y in rows.iter().skip(i + 1) {
            let my = alg.from_coords(y);
            let t = commutator(&commutator(&mx, &my), &my);
            let t_coords = alg.coords(&t, 1e-7)?;
            // rows are metric-orthonormal, so the denominator is 1
            out.push(pair.curvature_sign * alg.killing_product(&t_coords, x));
        }
    }
    Ok(out)
}

/// Polarity of the action of a canonically embedded subalgebra on the
/// symmetric space of `pair`: the slice-representation test plus the
/// Lie-triple requirement on the section, then hyperpolarity and the
/// curvature profile.
pub fn is_polar_action(
    h: &Subspace,
    pair: &SymmetricPair,
    seed: u64,
    tol: &Tolerances,
) -> Result<PolarityReport> {
    let rep = slice_representation(h, pair, tol)?;
    let mut report = is_polar_linear(&rep, seed, tol)?;
    let rows = report.section.rows();
    let triple_res = lie_triple_residual(pair, &rows, tol)?;
    let triple_ok = triple_res <= tol.close.max(tol.span);
    report.lie_triple_ok = Some(triple_ok);
    if report.polar == PolarVerdict::Verified && !triple_ok {
        // the normal space fails to be totally geodesic: the linear test
        // alone cannot certify the action
        report.polar = PolarVerdict::Inconclusive;
    }
    if report.polar == PolarVerdict::Verified {
        report.hyperpolar = Some(max_bracket_norm(pair, &rows) <= tol.close);
        report.section_curvatures = section_curvatures(pair, &rows)?;
    }
    Ok(report)
}

/// Hyperpolarity of an already-Verified report (flat section = abelian
/// Lie triple system).
pub fn is_hyperpolar(
    report: &PolarityReport,
    pair: &SymmetricPair,
    tol: &Tolerances,
) -> Result<bool> {
    if report.polar != PolarVerdict::Verified {
        return Err(Error::NotPolar);
    }
    Ok(max_bracket_norm(pair, &report.section.rows()) <= tol.close)
}

/// Section candidate at a seeded principal point: the normal space of
/// the orbit. Returns the section (module coordinates) and the point,
/// which always lies in the section.
pub fn candidate_section(
    rep: &SliceRepresentation,
    seed: u64,
    tol: &Tolerances,
) -> Result<(Subspace, RVector)> {
    let m = rep.module_dim();
    if m == 0 {
        return Ok((Subspace::from_rows(&[]), RVector::zeros(0)));
    }
    let points = sample_points(rep, seed);
    let mut best: Option<(usize, &RVector)> = None;
    for v in &points {
        let r = orbit_dimension(rep, v, tol)?;
        if best.is_none_or(|(br, _)| r > br) {
            best = Some((r, v));
        }
    }
    let (_, v) = best.ok_or(Error::SamplingFailed(N_SAMPLES))?;
    let section = section_at(rep, v, tol)?;
    Ok((Subspace::from_rows(&section), v.clone()))
}

/// Theorem-level check: cohomogeneity of the slice representation on the
/// noncompact side and of the dualized subalgebra on the compact side.
/// Equality is reported, not assumed.
pub fn dual_cohomogeneity_check(
    h: &Subspace,
    dual: &crate::duality::DualPair,
    seed: u64,
    tol: &Tolerances,
) -> Result<(usize, usize)> {
    let noncompact_pair = dual.decomposition.symmetric_pair()?;
    let rep = slice_representation(h, &noncompact_pair, tol)?;
    let c_noncompact = cohomogeneity(&rep, seed, tol)?;

    let h_star = dual.dualize_subalgebra(h, tol)?;
    let compact_pair = dual.compact_pair()?;
    let rep_star = slice_representation(&h_star, &compact_pair, tol)?;
    let c_compact = cohomogeneity(&rep_star, seed, tol)?;
    Ok((c_noncompact, c_compact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::cartan_from_star;
    use crate::catalog::{block_so_subalgebra, make_so, spin3_on_r7};
    use crate::duality::dualize_algebra;

    fn tols() -> Tolerances {
        Tolerances::default()
    }

    fn rotation_generators(n: usize) -> Vec<RMatrix> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut m = RMatrix::zeros(n, n);
                m[(i, j)] = -1.0;
                m[(j, i)] = 1.0;
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn circle_on_the_plane_is_polar() {
        let rep = SliceRepresentation::from_action_matrices(rotation_generators(2));
        let report = is_polar_linear(&rep, 7, &tols()).unwrap();
        assert_eq!(report.polar, PolarVerdict::Verified);
        assert_eq!(report.cohomogeneity, 1);
        assert_eq!(report.principal_orbit_dim, 1);
        assert_eq!(report.section.dim(), 1);
    }

    #[test]
    fn so3_on_r3_has_radial_sections() {
        let rep = SliceRepresentation::from_action_matrices(rotation_generators(3));
        let report = is_polar_linear(&rep, 11, &tols()).unwrap();
        assert_eq!(report.polar, PolarVerdict::Verified);
        assert_eq!((report.cohomogeneity, report.principal_orbit_dim), (1, 2));
        // the section is the radial line through the sampled point
        let (section, v) = candidate_section(&rep, 11, &tols()).unwrap();
        assert_eq!(section.dim(), 1);
        assert!(linalg::span_membership_residual(&section.rows(), &v) <= 1e-7);
    }

    #[test]
    fn block_torus_on_r4_is_polar_cohomogeneity_two() {
        // so(2) + so(2) acting on R^2 + R^2
        let mut a = RMatrix::zeros(4, 4);
        a[(0, 1)] = -1.0;
        a[(1, 0)] = 1.0;
        let mut b = RMatrix::zeros(4, 4);
        b[(2, 3)] = -1.0;
        b[(3, 2)] = 1.0;
        let rep = SliceRepresentation::from_action_matrices(vec![a, b]);
        let report = is_polar_linear(&rep, 3, &tols()).unwrap();
        assert_eq!(report.polar, PolarVerdict::Verified);
        assert_eq!(report.cohomogeneity, 2);
        let (section, v) = candidate_section(&rep, 3, &tols()).unwrap();
        assert_eq!(section.dim(), 2);
        assert!(linalg::span_membership_residual(&section.rows(), &v) <= 1e-7);
    }

    #[test]
    fn spin3_is_refuted() {
        let rep = spin3_on_r7();
        let report = is_polar_linear(&rep, 20260826, &tols()).unwrap();
        assert_eq!(report.polar, PolarVerdict::RefutedBySliceRep);
        assert!(report.orthogonality_residual > 1e-3);
        // cohomogeneity of the 7-dim module under a 3-dim group
        assert_eq!(report.principal_orbit_dim, 3);
        assert_eq!(report.cohomogeneity, 4);
    }

    #[test]
    fn zero_vector_has_zero_orbit() {
        let rep = SliceRepresentation::from_action_matrices(rotation_generators(3));
        let v = RVector::zeros(3);
        assert_eq!(orbit_dimension(&rep, &v, &tols()).unwrap(), 0);
    }

    #[test]
    fn slice_rep_of_so12_block_in_so13() {
        let alg = make_so(1, 3).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let pair = dec.symmetric_pair().unwrap();
        let h = block_so_subalgebra(&alg, &[0, 1, 2]).unwrap();
        let rep = slice_representation(&h, &pair, &tols()).unwrap();
        assert_eq!(rep.actors.dim(), 1);
        assert_eq!(rep.module_dim(), 1);
        // action matrices are skew w.r.t. the orthonormal module basis
        for m in &rep.action {
            assert!((m + m.transpose()).amax() < 1e-9);
        }
        let report = is_polar_action(&h, &pair, 5, &tols()).unwrap();
        assert_eq!(report.polar, PolarVerdict::Verified);
        assert_eq!(report.cohomogeneity, 1);
        assert_eq!(report.hyperpolar, Some(true));
        assert_eq!(report.lie_triple_ok, Some(true));
    }

    #[test]
    fn isotropy_action_of_so13_is_hyperpolar() {
        let alg = make_so(1, 3).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let pair = dec.symmetric_pair().unwrap();
        let report = is_polar_action(&dec.k_basis, &pair, 1, &tols()).unwrap();
        assert_eq!(report.polar, PolarVerdict::Verified);
        assert_eq!(report.cohomogeneity, 1);
        assert_eq!(report.hyperpolar, Some(true));
        assert!(is_hyperpolar(&report, &pair, &tols()).unwrap());
    }

    #[test]
    fn transitive_subalgebra_has_cohomogeneity_zero() {
        let alg = make_so(1, 2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let pair = dec.symmetric_pair().unwrap();
        let full = Subspace::new(RMatrix::identity(3, 3));
        let report = is_polar_action(&full, &pair, 9, &tols()).unwrap();
        assert_eq!(report.polar, PolarVerdict::Verified);
        assert_eq!(report.cohomogeneity, 0);
        assert_eq!(report.section.dim(), 0);
    }

    #[test]
    fn actor_free_subalgebra_gives_trivial_action() {
        // boost line in so(1,2): h & k = 0, so cohomogeneity = module dim
        let alg = make_so(1, 2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let pair = dec.symmetric_pair().unwrap();
        let h = Subspace::from_rows(&[RVector::from_row_slice(&[1.0, 0.0, 0.0])]);
        let rep = slice_representation(&h, &pair, &tols()).unwrap();
        assert_eq!(rep.actors.dim(), 0);
        assert_eq!(rep.module_dim(), 1);
        assert_eq!(cohomogeneity(&rep, 2, &tols()).unwrap(), 1);
    }

    #[test]
    fn is_hyperpolar_requires_verified_report() {
        let rep = spin3_on_r7();
        let report = is_polar_linear(&rep, 1, &tols()).unwrap();
        let alg = make_so(1, 2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let pair = dec.symmetric_pair().unwrap();
        assert!(matches!(
            is_hyperpolar(&report, &pair, &tols()),
            Err(Error::NotPolar)
        ));
    }

    #[test]
    fn curvature_signs_flip_across_duality() {
        // the 2-plane of boosts of the so(1,2) block in so(1,3): a
        // hyperbolic-plane tangent, negatively curved; its dual is
        // positively curved with the same magnitude
        let alg = make_so(1, 3).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let dual = dualize_algebra(&dec, &tols()).unwrap();
        let pair = dec.symmetric_pair().unwrap();
        let h = block_so_subalgebra(&alg, &[0, 1, 2]).unwrap();
        let split = dec.split(&h, &tols()).unwrap();
        // B restricted to p is the metric, so orthonormalize against the
        // ambient Killing Gram (positive definite on these rows)
        let rows = linalg::orthonormalize_with(&split.in_p.rows(), &alg.killing, 1e-10);
        let ks = section_curvatures(&pair, &rows).unwrap();
        assert_eq!(ks.len(), 1);
        assert!(ks[0] < -1e-6, "noncompact side must be negatively curved");

        let compact_pair = dual.compact_pair().unwrap();
        let dual_rows: Vec<RVector> = rows.iter().map(|r| dual.psi(r)).collect();
        let dual_rows =
            linalg::orthonormalize_with(&dual_rows, &(-&dual.compact.killing), 1e-10);
        let ks_dual = section_curvatures(&compact_pair, &dual_rows).unwrap();
        assert_eq!(ks_dual.len(), 1);
        assert!((ks_dual[0] + ks[0]).abs() < 1e-8, "{} vs {}", ks_dual[0], ks[0]);
    }

    #[test]
    fn dual_cohomogeneity_agrees_on_examples() {
        let tol = tols();
        let alg = make_so(1, 3).unwrap();
        let dec = cartan_from_star(&alg, &tol).unwrap();
        let dual = dualize_algebra(&dec, &tol).unwrap();
        // isotropy action: sphere slice representation on both sides
        let (a, b) = dual_cohomogeneity_check(&dec.k_basis, &dual, 13, &tol).unwrap();
        assert_eq!((a, b), (1, 1));
        // so(1,2) block
        let h = block_so_subalgebra(&alg, &[0, 1, 2]).unwrap();
        let (a, b) = dual_cohomogeneity_check(&h, &dual, 13, &tol).unwrap();
        assert_eq!((a, b), (1, 1));
        // transitive
        let full = Subspace::new(RMatrix::identity(6, 6));
        let (a, b) = dual_cohomogeneity_check(&full, &dual, 13, &tol).unwrap();
        assert_eq!((a, b), (0, 0));
    }

    #[test]
    fn non_theta_stable_subalgebra_is_rejected() {
        use crate::catalog::make_sl;
        let alg = make_sl(2).unwrap();
        let dec = cartan_from_star(&alg, &tols()).unwrap();
        let pair = dec.symmetric_pair().unwrap();
        let borel = Subspace::from_rows(&[
            RVector::from_row_slice(&[1.0, 0.0, 0.0]),
            RVector::from_row_slice(&[0.0, 0.0, 1.0]),
        ]);
        assert!(matches!(
            slice_representation(&borel, &pair, &tols()),
            Err(Error::NotThetaStable(1))
        ));
    }
}
