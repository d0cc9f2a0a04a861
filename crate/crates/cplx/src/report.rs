//! The consistency report: re-runs the bundled checks and emits a catalogue
//! of the fixtures with every property tagged verified / evidence / cited.

use crate::collapse::{
    check_lc_ball, check_lc_sphere, search_collapse, verify_certificate, CollapseTarget, Strategy,
};
use crate::fixtures::{self, load_fixture, manifest};
use crate::hierarchy::{
    evasiveness_scan, is_nonevasive, is_shellable, is_vertex_decomposable,
    ne_tree_from_deletion_order, verify_ne_tree, Decision,
};
use crate::homology::{boundary_matrix, is_acyclic, reduced_homology};
use crate::knot::{complement_complex, count_homs, pi1_presentation, tietze_simplify, FiniteGroup, KnotCycle};
use crate::manifold::manifold_check;
use crate::morse::{morse_search, verify_morse_certificate};
use crate::flips::{reduce, replay, AnnealParams};
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A probabilistic or stretch criterion that did not confirm; reported,
    /// but not a hard failure.
    Soft,
    Skipped,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Soft => write!(f, "soft-fail"),
            CheckStatus::Skipped => write!(f, "skipped"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    pub millis: u128,
}

#[derive(Debug)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            writeln!(
                out,
                "[{:9}] {:38} {:>7} ms  {}",
                c.status.to_string(),
                c.name,
                c.millis,
                c.detail
            )
            .unwrap();
        }
        writeln!(out).unwrap();
        writeln!(
            out,
            "{:24} {:8} {:>4} {:>7} {:>10}  properties",
            "complex", "trefoils", "v", "facets", "class"
        )
        .unwrap();
        for info in manifest() {
            let props: Vec<String> = info
                .properties
                .iter()
                .map(|(p, s)| format!("{p} [{s}]"))
                .collect();
            writeln!(
                out,
                "{:24} {:8} {:>4} {:>7} {:>10}  {}",
                info.name,
                info.trefoils,
                info.vertices,
                info.facets,
                info.class.to_string(),
                props.join("; ")
            )
            .unwrap();
        }
        out
    }

    pub fn render_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            writeln!(out, "check\t{}\t{}\t{}\t{}", c.name, c.status, c.millis, c.detail).unwrap();
        }
        for info in manifest() {
            for (p, s) in info.properties {
                writeln!(out, "property\t{}\t{}\t{}", info.name, p, s).unwrap();
            }
        }
        out
    }
}

fn run(
    checks: &mut Vec<CheckResult>,
    name: &'static str,
    skip: bool,
    soft: bool,
    f: impl FnOnce() -> Result<String, String>,
) {
    if skip {
        checks.push(CheckResult {
            name,
            status: CheckStatus::Skipped,
            detail: "skipped in fast mode".into(),
            millis: 0,
        });
        return;
    }
    let start = Instant::now();
    let (status, detail) = match f() {
        Ok(d) => (CheckStatus::Pass, d),
        Err(d) => (if soft { CheckStatus::Soft } else { CheckStatus::Fail }, d),
    };
    checks.push(CheckResult {
        name,
        status,
        detail,
        millis: start.elapsed().as_millis(),
    });
}

/// Runs the consistency suite. `fast` skips the probabilistic and long
/// searches and keeps the exact, certificate-backed checks.
pub fn verify_all(fast: bool) -> Report {
    let mut checks = Vec::new();

    run(&mut checks, "fixture f-vectors", false, false, || {
        for info in manifest() {
            let c = load_fixture(info.name).map_err(|e| e.to_string())?;
            if c.vertex_count() as u64 != info.vertices || c.facet_count() as u64 != info.facets {
                return Err(format!("{}: size mismatch", info.name));
            }
            if let Some(f) = info.f_vector {
                let got = c.f_vector();
                if got.0 != f {
                    return Err(format!("{}: f-vector {got} != expected", info.name));
                }
            }
        }
        Ok(format!("{} fixtures", manifest().len()))
    });

    run(&mut checks, "manifold classification", false, false, || {
        for info in manifest() {
            let c = load_fixture(info.name).unwrap();
            let r = manifold_check(&c);
            if r.class != info.class {
                return Err(format!(
                    "{}: classified {} (expected {}): {}",
                    info.name,
                    r.class,
                    info.class,
                    r.diagnostic.unwrap_or_default()
                ));
            }
        }
        Ok("all fixtures classified as catalogued".into())
    });

    run(&mut checks, "boundary exactness", false, false, || {
        let b12 = load_fixture("B_12_38").unwrap();
        if b12.boundary_complex().unwrap() != fixtures::b_12_38_boundary() {
            return Err("boundary of the 38-facet ball deviates".into());
        }
        let b15 = load_fixture("B_15_66").unwrap();
        if b15.boundary_complex().unwrap() != fixtures::b_15_66_boundary() {
            return Err("boundary of the 66-facet ball deviates".into());
        }
        Ok("18 and 26 boundary triangles match".into())
    });

    run(&mut checks, "collapse certificates", false, false, || {
        let b12 = load_fixture("B_12_38").unwrap();
        verify_certificate(&b12, &fixtures::b_12_38_collapse_certificate())
            .map_err(|e| e.to_string())?;
        let b16 = load_fixture("B_16_91").unwrap();
        verify_certificate(&b16, &fixtures::b_16_91_collapse_certificate())
            .map_err(|e| e.to_string())?;
        let b15 = load_fixture("B_15_66").unwrap();
        let m = verify_morse_certificate(&b15, &fixtures::b_15_66_morse_certificate())
            .map_err(|e| e.to_string())?;
        let mut dims: Vec<isize> = m.critical.iter().map(|s| s.dim()).collect();
        dims.sort_unstable();
        if dims != vec![0, 1, 2] {
            return Err(format!("critical faces {:?}", m.critical));
        }
        Ok("3 certificates replay".into())
    });

    run(&mut checks, "evasiveness scan", false, false, || {
        let b12 = load_fixture("B_12_38").unwrap();
        let rows = evasiveness_scan(&b12, 5);
        let acyclic: Vec<Vec<u32>> = rows
            .iter()
            .filter(|(_, a)| *a)
            .map(|(s, _)| s.clone())
            .collect();
        let expected = [
            vec![4u32, 5, 8, 10, 11],
            vec![4, 5, 10, 11, 12],
            vec![4, 6, 7, 9, 12],
        ];
        if acyclic != expected {
            return Err(format!("acyclic subsets: {acyclic:?}"));
        }
        for s in &expected {
            let del = b12.delete_all(s).unwrap();
            for &v in del.vertices() {
                if is_acyclic(&del.delete(v).unwrap()) {
                    return Err(format!("{s:?} plus {v} stays acyclic"));
                }
            }
        }
        Ok(format!("792 subsets scanned, 3 acyclic, all dead ends"))
    });

    run(&mut checks, "non-evasiveness decisions", false, false, || {
        let b7 = load_fixture("B_7_10").unwrap();
        let t = ne_tree_from_deletion_order(&b7, &[6, 5, 4, 3, 2, 1, 0], 100_000);
        let Decision::Yes(tree) = t else {
            return Err("countdown order rejected".into());
        };
        verify_ne_tree(&b7, &tree).map_err(|e| e.to_string())?;
        let b9 = load_fixture("B_9_18").unwrap();
        let t = ne_tree_from_deletion_order(&b9, &[1, 0, 6, 3, 7, 2, 4, 5, 8], 100_000);
        let Decision::Yes(tree) = t else {
            return Err("9-vertex deletion order rejected".into());
        };
        verify_ne_tree(&b9, &tree).map_err(|e| e.to_string())?;
        let rudin = load_fixture("R_14_41").unwrap();
        let order = [3, 4, 5, 12, 13, 1, 7, 9, 14, 8, 11, 10, 2, 6];
        let t = ne_tree_from_deletion_order(&rudin, &order, 1_000_000);
        let Decision::Yes(tree) = t else {
            return Err("deletion order for Rudin's ball rejected".into());
        };
        verify_ne_tree(&rudin, &tree).map_err(|e| e.to_string())?;
        let b12 = load_fixture("B_12_38").unwrap();
        match is_nonevasive(&b12, 10_000_000) {
            Decision::No => {}
            other => return Err(format!("expected evasive, got {other:?}")),
        }
        Ok("3 balls non-evasive, knotted ball evasive".into())
    });

    run(&mut checks, "shellability decisions", false, false, || {
        let b7 = load_fixture("B_7_10").unwrap();
        if !is_shellable(&b7, 10_000_000).is_yes() {
            return Err("10-facet ball should be shellable".into());
        }
        let b9 = load_fixture("B_9_18").unwrap();
        match is_shellable(&b9, 100_000_000) {
            Decision::No => {}
            other => {
                return Err(format!(
                    "expected exhaustive refutation, got {}",
                    match other {
                        Decision::Yes(_) => "a shelling",
                        _ => "out of budget",
                    }
                ))
            }
        }
        Ok("shellable / non-shellable pair decided".into())
    });

    run(&mut checks, "vertex-decomposability", false, false, || {
        let b7 = load_fixture("B_7_10").unwrap();
        match is_vertex_decomposable(&b7, 10_000_000) {
            Decision::No => Ok("shellable 10-facet ball is not VD".into()),
            other => Err(format!("expected refutation, got {other:?}")),
        }
    });

    run(&mut checks, "sd vertex-decomposability", fast, true, || {
        let sd = load_fixture("sd:B_9_18").unwrap();
        match is_vertex_decomposable(&sd, 50_000_000) {
            Decision::Yes(_) => Ok("subdivision of the non-shellable ball is VD".into()),
            Decision::No => Err("refuted (unexpected)".into()),
            Decision::Inconclusive => Err("budget exhausted (soft)".into()),
        }
    });

    run(&mut checks, "local constructibility", fast, false, || {
        let s16 = load_fixture("S_16_92").unwrap();
        let ev = check_lc_sphere(&s16, 2, 100).map_err(|e| e.to_string())?;
        let w16 = ev.witness;
        let s13 = load_fixture("S_13_56").unwrap();
        check_lc_sphere(&s13, 2, 100).map_err(|e| e.to_string())?;
        let b16 = load_fixture("B_16_91").unwrap();
        let ev = check_lc_ball(&b16, 2, 100).map_err(|e| e.to_string())?;
        Ok(format!(
            "witness facet {w16}; witness triangle {}",
            ev.witness
        ))
    });

    run(&mut checks, "collapsibility searches", fast, false, || {
        let b12 = load_fixture("B_12_38").unwrap();
        let cert = search_collapse(&b12, &CollapseTarget::Point, 11, 400, Strategy::Uniform)
            .map_err(|e| e.to_string())?;
        verify_certificate(&b12, &cert).map_err(|e| e.to_string())?;
        Ok(format!("knotted ball collapsed in {} pairs", cert.pairs.len()))
    });

    run(&mut checks, "random discrete Morse", fast, true, || {
        let b12 = load_fixture("B_12_38").unwrap();
        let out = morse_search(&b12, 0, 10_000, Some(&[1, 0, 0, 0]));
        if out.best_vector.0 != [1, 0, 0, 0] {
            return Err(format!("best vector on the knotted ball: {}", out.best_vector));
        }
        let s18 = load_fixture("S_18_125").unwrap();
        let out = morse_search(&s18, 0, 10_000, Some(&[1, 1, 1, 1]));
        if out.best_vector.0 != [1, 1, 1, 1] {
            return Err(format!(
                "best vector on the triple-trefoil sphere after {} tries: {}",
                out.tried, out.best_vector
            ));
        }
        Ok(format!(
            "(1,0,0,0) and (1,1,1,1) found (seed {})",
            out.best_seed
        ))
    });

    run(&mut checks, "flip reduction", fast, true, || {
        let s18 = load_fixture("S_18_125").unwrap();
        let out = reduce(&s18, 5, 10_000, &[], false, &AnnealParams::default())
            .map_err(|e| e.to_string())?;
        if !out.reached_minimum {
            return Err(format!(
                "budget exhausted at f = {}",
                out.complex.f_vector()
            ));
        }
        let replayed = replay(&s18, &out.log).map_err(|e| e.to_string())?;
        if replayed != out.complex {
            return Err("replay mismatch".into());
        }
        Ok(format!(
            "reached the 4-simplex boundary in {} moves",
            out.log.moves.len()
        ))
    });

    run(&mut checks, "knot hom-counts", fast, false, || {
        let s3 = FiniteGroup::symmetric(3);
        // unknot: the boundary of a triangle of the 4-simplex boundary
        let d4 = crate::complex::SimplicialComplex::from_facets(vec![vec![0u32, 1, 2, 3, 4]])
            .unwrap()
            .boundary_complex()
            .unwrap();
        let k = KnotCycle::new(&d4, vec![0, 1, 2]).unwrap();
        let comp = complement_complex(&d4, &k).map_err(|e| e.to_string())?;
        let p = tietze_simplify(&pi1_presentation(&comp).unwrap(), 100_000);
        let homs = count_homs(&p, &s3, 100_000_000).map_err(|e| e.to_string())?;
        if homs != 6 {
            return Err(format!("unknot complement: {homs} homs to S3"));
        }
        let s13 = load_fixture("S_13_56").unwrap();
        let k = KnotCycle::new(&s13, fixtures::knot_cycle_vertices()).unwrap();
        let comp = complement_complex(&s13, &k).map_err(|e| e.to_string())?;
        let p = tietze_simplify(&pi1_presentation(&comp).unwrap(), 100_000);
        let (rank, torsion) = p.abelianization();
        if rank != 1 || !torsion.is_empty() {
            return Err("trefoil complement H_1 is not Z".into());
        }
        let homs = count_homs(&p, &s3, 100_000_000).map_err(|e| e.to_string())?;
        if homs != 12 {
            return Err(format!("trefoil complement: {homs} homs to S3"));
        }
        Ok(format!("unknot 6, trefoil 12 (generators left: {})", p.generators))
    });

    run(&mut checks, "boundary operator battery", false, false, || {
        for name in ["B_7_10", "B_9_18", "B_12_38", "R_14_41"] {
            let c = load_fixture(name).unwrap();
            for k in 2..=3usize {
                let a = boundary_matrix(&c, k - 1).unwrap();
                let b = boundary_matrix(&c, k).unwrap();
                if a.compose(&b).iter().flatten().any(|&v| v != 0) {
                    return Err(format!("dd != 0 on {name} at k {k}"));
                }
            }
            let h = reduced_homology(&c);
            if !h.is_trivial() {
                return Err(format!("{name} is a ball but not acyclic"));
            }
        }
        Ok("dd = 0 and acyclicity on the small balls".into())
    });

    Report { checks }
}
