//! Temporary probes, run explicitly with --ignored. Not part of the suite.

use cplx::collapse::{search_collapse, CollapseTarget, Strategy};
use cplx::fixtures::load_fixture;
use cplx::flips::{reduce, AnnealParams};
use cplx::hierarchy::{is_nonevasive, is_vertex_decomposable, Decision};
use cplx::knot::{complement_complex, count_homs, pi1_presentation, tietze_simplify, FiniteGroup, KnotCycle};
use cplx::manifold::manifold_check;
use cplx::morse::morse_search;
use std::time::Instant;

#[test]
#[ignore]
fn probe_manifold_times() {
    for name in ["S_13_56", "S_16_92", "S_18_125", "S_33_192", "S_44_284", "B_43_214"] {
        let c = load_fixture(name).unwrap();
        let t = Instant::now();
        let r = manifold_check(&c);
        println!("{name}: {} in {:?}", r.class, t.elapsed());
    }
}

#[test]
#[ignore]
fn probe_morse_s18() {
    let s18 = load_fixture("S_18_125").unwrap();
    let t = Instant::now();
    let out = morse_search(&s18, 0, 10_000, Some(&[1, 1, 1, 1]));
    println!(
        "best {} at seed {} after {} tries in {:?}",
        out.best_vector, out.best_seed, out.tried, t.elapsed()
    );
    let mut hist: Vec<_> = out.histogram.iter().collect();
    hist.sort();
    for (v, n) in hist.iter().take(12) {
        println!("  {v:?}: {n}");
    }
}

#[test]
#[ignore]
fn probe_collapse_b12() {
    let b12 = load_fixture("B_12_38").unwrap();
    for strategy in [Strategy::Uniform, Strategy::MinNewFree] {
        let t = Instant::now();
        let r = search_collapse(&b12, &CollapseTarget::Point, 0, 2000, strategy);
        println!(
            "B_12_38 {strategy}: {} in {:?}",
            r.as_ref().map(|c| format!("ok {} pairs", c.pairs.len())).unwrap_or_else(|e| e.to_string()),
            t.elapsed()
        );
    }
}

#[test]
#[ignore]
fn probe_lc() {
    let b16 = load_fixture("B_16_91").unwrap();
    let t = Instant::now();
    let r = cplx::collapse::check_lc_ball(&b16, 2, 100);
    println!("B_16_91 LC: {:?} in {:?}", r.map(|e| e.witness.to_string()), t.elapsed());
    let s13 = load_fixture("S_13_56").unwrap();
    let t = Instant::now();
    let r = cplx::collapse::check_lc_sphere(&s13, 2, 100);
    println!("S_13_56 LC: {:?} in {:?}", r.map(|e| e.witness.to_string()), t.elapsed());
    let s16 = load_fixture("S_16_92").unwrap();
    let t = Instant::now();
    let r = cplx::collapse::check_lc_sphere(&s16, 2, 100);
    println!("S_16_92 LC: {:?} in {:?}", r.map(|e| e.witness.to_string()), t.elapsed());
}

#[test]
#[ignore]
fn probe_flip_reduce() {
    let s18 = load_fixture("S_18_125").unwrap();
    for seed in 0..8u64 {
        let t = Instant::now();
        let out = reduce(&s18, seed, 10_000, &[], false, &AnnealParams::default()).unwrap();
        println!(
            "seed {seed}: reached={} moves={} steps={} f={} in {:?}",
            out.reached_minimum,
            out.log.moves.len(),
            out.steps,
            out.complex.f_vector(),
            t.elapsed()
        );
    }
}

#[test]
#[ignore]
fn probe_ne() {
    let rudin = load_fixture("R_14_41").unwrap();
    let t = Instant::now();
    let r = is_nonevasive(&rudin, 10_000_000);
    println!("Rudin NE: yes={} in {:?}", r.is_yes(), t.elapsed());
    let b12 = load_fixture("B_12_38").unwrap();
    let t = Instant::now();
    let r = is_nonevasive(&b12, 10_000_000);
    println!("B_12_38 NE: {:?} in {:?}", matches!(r, Decision::No), t.elapsed());
}

#[test]
#[ignore]
fn probe_vd_sd() {
    let sd = load_fixture("sd:B_9_18").unwrap();
    println!("sd(B_9_18): v={} facets={}", sd.vertex_count(), sd.facet_count());
    let t = Instant::now();
    let r = is_vertex_decomposable(&sd, 50_000_000);
    println!("VD: {:?} in {:?}", r.is_yes(), t.elapsed());
}

#[test]
#[ignore]
fn probe_knot_homs() {
    let s3 = FiniteGroup::symmetric(3);
    for name in ["S_13_56", "S_16_92", "S_18_125"] {
        let s = load_fixture(name).unwrap();
        let t = Instant::now();
        let k = KnotCycle::new(&s, vec![1, 2, 3]).unwrap();
        let comp = complement_complex(&s, &k).unwrap();
        let p0 = pi1_presentation(&comp).unwrap();
        let p = tietze_simplify(&p0, 1_000_000);
        let ab = p.abelianization();
        let homs = count_homs(&p, &s3, 100_000_000);
        println!(
            "{name}: complement v={} gens {} -> {} (len {}), H1 = ({:?}), homs S3 = {:?} in {:?}",
            comp.vertex_count(),
            p0.generators,
            p.generators,
            p.total_relator_length(),
            ab,
            homs,
            t.elapsed()
        );
    }
}
