//! The aggregate verification suite: one deterministic run over all
//! built-in checks, producing a machine-readable report.

use serde::{Deserialize, Serialize};

use crate::actions::{
    dual_cohomogeneity_check, is_polar_action, PolarVerdict, PolarityReport,
};
use crate::cartan::cartan_from_star;
use crate::catalog::{
    all_keys, block_so_subalgebra, entry, example_7_1_table, make_sl, make_so, make_sp, make_su,
};
use crate::duality::dualize_algebra;
use crate::error::Result;
use crate::liealg::{reductivity_report, MatrixLieAlgebra, Subspace};
use crate::linalg::{RMatrix, RVector, Tolerances};
use crate::sampling::SplitMix64;

/// Output serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

/// Run parameters embedded in every report for reproducibility.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub tolerances: Tolerances,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 1,
            tolerances: Tolerances::default(),
            format: OutputFormat::Json,
        }
    }
}

/// One verification criterion outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The aggregate report. Wall-clock time is kept out of the serialized
/// form so that identical runs produce identical bytes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub tolerances: Tolerances,
    pub criteria: Vec<CriterionResult>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn verdict_signature(&self) -> Vec<(u32, bool)> {
        self.criteria.iter().map(|c| (c.id, c.passed)).collect()
    }
}

fn result_of(id: u32, name: &str, run: Result<(bool, String)>) -> CriterionResult {
    match run {
        Ok((passed, detail)) => CriterionResult {
            id,
            name: name.to_string(),
            passed,
            detail,
        },
        Err(e) => CriterionResult {
            id,
            name: name.to_string(),
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

// criterion 1: Killing Gram equals the classical trace-form multiple
fn killing_constants() -> Result<(bool, String)> {
    let mut cases: Vec<(MatrixLieAlgebra, f64)> = Vec::new();
    for n in 3..=6 {
        cases.push((make_so(0, n)?, n as f64 - 2.0));
    }
    for n in 2..=3 {
        cases.push((make_su(0, n)?, 2.0 * n as f64));
        cases.push((make_sl(n)?, 2.0 * n as f64));
    }
    for n in 1..=2 {
        cases.push((make_sp(0, n)?, 2.0 * n as f64 + 2.0));
    }
    let mut worst = 0.0_f64;
    for (alg, mult) in &cases {
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let tr = (&alg.basis[i] * &alg.basis[j]).trace();
                worst = worst.max((alg.killing[(i, j)] - mult * tr.re).abs());
            }
        }
    }
    Ok((worst < 1e-8, format!("10 families, worst deviation {worst:.3e}")))
}

// criterion 2: reductivity discrimination on four reference subalgebras
fn reductivity_discrimination(tol: &Tolerances) -> Result<(bool, String)> {
    let mut verdicts = Vec::new();

    let sl2 = make_sl(2)?;
    let e01 = crate::linalg::CMatrix::from_fn(2, 2, |i, j| {
        num_complex::Complex64::new(if (i, j) == (0, 1) { 1.0 } else { 0.0 }, 0.0)
    });
    let nilpotent = Subspace::from_rows(&[sl2.coords(&e01, tol.close)?]);
    let rep = reductivity_report(&sl2, &nilpotent, true, tol.rank, tol.close)?;
    verdicts.push(("nilpotent line in sl(2,R)", rep.is_reductive() == Some(false)));

    let so3 = make_so(0, 3)?;
    let line = block_so_subalgebra(&so3, &[0, 1])?;
    let rep = reductivity_report(&so3, &line, true, tol.rank, tol.close)?;
    verdicts.push(("so(2) line in so(3)", rep.is_reductive() == Some(true)));

    let so4 = make_so(0, 4)?;
    let full = Subspace::new(RMatrix::identity(so4.dim(), so4.dim()));
    let rep = reductivity_report(&so4, &full, true, tol.rank, tol.close)?;
    verdicts.push(("full so(4)", rep.is_reductive() == Some(true)));

    let so13 = make_so(1, 3)?;
    let block = block_so_subalgebra(&so13, &[0, 1, 2])?;
    let rep = reductivity_report(&so13, &block, true, tol.rank, tol.close)?;
    verdicts.push(("so(1,2) in so(1,3)", rep.is_reductive() == Some(true)));

    let good = verdicts.iter().filter(|(_, ok)| *ok).count();
    let detail = format!("{good}/4 verdicts correct");
    Ok((good == 4, detail))
}

fn conjugate_rows(rows: &RMatrix, alg: &MatrixLieAlgebra, z: &RVector) -> Subspace {
    let d = alg.dim();
    let mut ad_z = RMatrix::zeros(d, d);
    for (i, zi) in z.iter().enumerate() {
        ad_z += &alg.ad[i] * *zi;
    }
    let g = ad_z.exp();
    Subspace::new(rows * g.transpose())
}

// criterion 3: psi-image closure holds exactly for theta-stable
// subalgebras and fails for generically conjugated ones
fn duality_closure(seed: u64, tol: &Tolerances) -> Result<(bool, String)> {
    let alg = make_so(1, 3)?;
    let dec = cartan_from_star(&alg, tol)?;
    let dual = dualize_algebra(&dec, tol)?;
    // theta-stable abelian base: a boost plus a commuting rotation; a
    // generic conjugate of it is still abelian but no longer theta-stable,
    // and its psi image picks up a nonzero k-side bracket
    let n = alg.ambient_size;
    let boost = crate::linalg::CMatrix::from_fn(n, n, |i, j| {
        num_complex::Complex64::new(
            if (i, j) == (0, 1) || (i, j) == (1, 0) { 1.0 } else { 0.0 },
            0.0,
        )
    });
    let rot = crate::linalg::CMatrix::from_fn(n, n, |i, j| {
        num_complex::Complex64::new(
            match (i, j) {
                (2, 3) => 1.0,
                (3, 2) => -1.0,
                _ => 0.0,
            },
            0.0,
        )
    });
    let base = Subspace::from_rows(&[alg.coords(&boost, tol.close)?, alg.coords(&rot, tol.close)?]);
    let dim_k = dec.dim_k();
    let d = alg.dim();

    let mut rng = SplitMix64::new(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut stable_ok = 0;
    let mut unstable_ok = 0;
    let mut worst_stable = 0.0_f64;
    let mut best_unstable = f64::INFINITY;
    for _ in 0..50 {
        // rotation by an isotropy element commutes with theta
        let zk = rng.normal_vector(dim_k) * 0.4;
        let mut z = RVector::zeros(d);
        for (i, row) in dec.k_basis.rows().iter().enumerate() {
            z += row * zk[i];
        }
        let sub = conjugate_rows(&base.coeffs, &alg, &z);
        let res = dual.psi_closure_residual(&sub)?;
        worst_stable = worst_stable.max(res);
        if res <= tol.span {
            stable_ok += 1;
        }
    }
    let p_rows = dec.p_basis.rows();
    for _ in 0..50 {
        // a generic conjugation has a boost component and breaks
        // theta-stability; resample in the rare case the boost part is
        // too small to count as generic
        let z = loop {
            let z = rng.normal_vector(d) * 0.4;
            let zp: f64 = p_rows
                .iter()
                .map(|row| row.dot(&z).abs() / row.norm())
                .sum();
            if zp > 0.2 {
                break z;
            }
        };
        let sub = conjugate_rows(&base.coeffs, &alg, &z);
        let res = dual.psi_closure_residual(&sub)?;
        best_unstable = best_unstable.min(res);
        if res > tol.refute {
            unstable_ok += 1;
        }
    }
    let detail = format!(
        "stable {stable_ok}/50 (worst residual {worst_stable:.3e}), \
         non-stable {unstable_ok}/50 (smallest residual {best_unstable:.3e})"
    );
    Ok((stable_ok == 50 && unstable_ok == 50, detail))
}

// criterion 4: equal cohomogeneities on both sides of every dual pair
fn cohomogeneity_duality(seed: u64, tol: &Tolerances) -> Result<(bool, String)> {
    let mut equal = 0;
    let mut total = 0;
    let mut mismatches = Vec::new();
    for key in all_keys() {
        let e = entry(key)?;
        let dual = dualize_algebra(&e.decomposition, tol)?;
        let (c, c_star) = dual_cohomogeneity_check(&e.subalgebra, &dual, seed, tol)?;
        total += 1;
        if c == c_star {
            equal += 1;
        } else {
            mismatches.push(format!("{key}: {c} vs {c_star}"));
        }
        if let Some(expected) = e.expected.cohomogeneity {
            if c != expected {
                mismatches.push(format!("{key}: cohomogeneity {c}, expected {expected}"));
            }
        }
    }
    let ok = equal == total && mismatches.is_empty();
    let detail = if mismatches.is_empty() {
        format!("{equal}/{total} entries with equal dual cohomogeneities")
    } else {
        mismatches.join("; ")
    };
    Ok((ok, detail))
}

fn both_side_reports(
    key: &str,
    seed: u64,
    tol: &Tolerances,
) -> Result<(PolarityReport, PolarityReport)> {
    let e = entry(key)?;
    let dual = dualize_algebra(&e.decomposition, tol)?;
    let pair = e.decomposition.symmetric_pair()?;
    let report = is_polar_action(&e.subalgebra, &pair, seed, tol)?;
    let h_star = dual.dualize_subalgebra(&e.subalgebra, tol)?;
    let pair_star = dual.compact_pair()?;
    let report_star = is_polar_action(&h_star, &pair_star, seed, tol)?;
    Ok((report, report_star))
}

// criterion 5: polar verdicts agree across every dual pair, with no
// Inconclusive outcomes
fn polarity_agreement(seed: u64, tol: &Tolerances) -> Result<(bool, String)> {
    let mut agreements = 0;
    let mut total = 0;
    let mut problems = Vec::new();
    for key in all_keys() {
        let e = entry(key)?;
        let (report, report_star) = both_side_reports(key, seed, tol)?;
        total += 1;
        if report.polar == PolarVerdict::Inconclusive
            || report_star.polar == PolarVerdict::Inconclusive
        {
            problems.push(format!("{key}: inconclusive"));
            continue;
        }
        if report.polar != report_star.polar {
            problems.push(format!(
                "{key}: {:?} vs {:?}",
                report.polar, report_star.polar
            ));
            continue;
        }
        if let Some(expected) = e.expected.polar {
            let got = report.polar == PolarVerdict::Verified;
            if got != expected {
                problems.push(format!("{key}: polar {got}, expected {expected}"));
                continue;
            }
        }
        agreements += 1;
    }
    let ok = problems.is_empty();
    let detail = if ok {
        format!("{agreements}/{total} dual pairs agree, zero inconclusive")
    } else {
        problems.join("; ")
    };
    Ok((ok, detail))
}

// criterion 6: odd Grassmannian intersection table versus closed form
fn grassmann_tables() -> Result<(bool, String)> {
    let mut rows = 0;
    let mut matched = 0;
    for m in 1..=4_usize {
        for p in 1..=m {
            for q in 1..=m {
                for row in example_7_1_table(m, p, q)? {
                    rows += 1;
                    if row.matched {
                        matched += 1;
                    }
                }
            }
        }
    }
    Ok((matched == rows, format!("{matched}/{rows} table rows match")))
}

// criterion 7: hyperpolarity split between the Hermann entry and the
// maximal torus entry
fn hyperpolarity(seed: u64, tol: &Tolerances) -> Result<(bool, String)> {
    let (hermann, _) = both_side_reports("hermann/so(2,3)", seed, tol)?;
    let hermann_ok = hermann.polar == PolarVerdict::Verified
        && hermann.hyperpolar == Some(true)
        && hermann.cohomogeneity == 2;

    let (torus, torus_star) = both_side_reports("thm9.1/iii/torus-su3", seed, tol)?;
    let curvature_signed = !torus.section_curvatures.is_empty()
        && torus
            .section_curvatures
            .iter()
            .all(|k| *k < -tol.close)
        && torus_star
            .section_curvatures
            .iter()
            .all(|k| *k > tol.close);
    let torus_ok = torus.polar == PolarVerdict::Verified
        && torus.hyperpolar == Some(false)
        && torus.cohomogeneity == 2
        && curvature_signed;

    let detail = format!(
        "hermann: hyperpolar {:?} cohom {}; torus: hyperpolar {:?} curvatures {:?}",
        hermann.hyperpolar, hermann.cohomogeneity, torus.hyperpolar, torus.section_curvatures
    );
    Ok((hermann_ok && torus_ok, detail))
}

// criterion 8: noncompact sections never curve positively; dual sections
// never curve negatively
fn curvature_signs(seed: u64, tol: &Tolerances) -> Result<(bool, String)> {
    let mut checked = 0;
    let mut problems = Vec::new();
    for key in all_keys() {
        let (report, report_star) = both_side_reports(key, seed, tol)?;
        if report.polar != PolarVerdict::Verified {
            continue;
        }
        checked += 1;
        if report.section_curvatures.iter().any(|k| *k > tol.close) {
            problems.push(format!("{key}: positive noncompact curvature"));
        }
        if report_star
            .section_curvatures
            .iter()
            .any(|k| *k < -tol.close)
        {
            problems.push(format!("{key}: negative compact curvature"));
        }
    }
    let ok = problems.is_empty() && checked > 0;
    let detail = if problems.is_empty() {
        format!("{checked} verified sections obey the sign bound")
    } else {
        problems.join("; ")
    };
    Ok((ok, detail))
}

/// Runs every built-in criterion with the given configuration.
pub fn run_suite(config: &RunConfig) -> SuiteReport {
    let tol = &config.tolerances;
    let seed = config.seed;
    let criteria = vec![
        result_of(1, "killing-constants", killing_constants()),
        result_of(2, "reductivity-discrimination", reductivity_discrimination(tol)),
        result_of(3, "duality-closure", duality_closure(seed, tol)),
        result_of(4, "cohomogeneity-duality", cohomogeneity_duality(seed, tol)),
        result_of(5, "polarity-agreement", polarity_agreement(seed, tol)),
        result_of(6, "grassmann-tables", grassmann_tables()),
        result_of(7, "hyperpolarity", hyperpolarity(seed, tol)),
        result_of(8, "curvature-signs", curvature_signs(seed, tol)),
    ];
    let passed = criteria.iter().all(|c| c.passed);
    SuiteReport {
        seed,
        tolerances: config.tolerances,
        criteria,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        let tol = Tolerances::default();
        assert!(killing_constants().unwrap().0);
        assert!(reductivity_discrimination(&tol).unwrap().0);
    }

    #[test]
    fn duality_closure_discriminates() {
        let (ok, detail) = duality_closure(11, &Tolerances::default()).unwrap();
        assert!(ok, "{detail}");
    }

    #[test]
    fn grassmann_criterion_passes() {
        let (ok, detail) = grassmann_tables().unwrap();
        assert!(ok, "{detail}");
    }
}
