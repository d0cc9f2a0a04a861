//! Elementary collapses: free-pair enumeration, certificate replay, randomized
//! collapsibility search, and the local-constructibility checks for 3-balls
//! and 3-spheres.

use crate::complex::{Simplex, SimplicialComplex};
use crate::lattice::{CollapseState, Lattice};
use crate::manifold::{manifold_check, ManifoldClass};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;
use thiserror::Error;

/// An elementary collapse: `free` is a face whose unique proper coface is
/// `coface` at removal time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsePair {
    pub free: Simplex,
    pub coface: Simplex,
}

impl fmt::Display for CollapsePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.free, self.coface)
    }
}

/// What a collapse sequence is declared to reach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CollapseTarget {
    /// A single vertex (any vertex).
    Point,
    /// A specific subcomplex, kept intact by the collapse.
    Subcomplex(SimplicialComplex),
}

/// An ordered, replayable list of collapse pairs with a declared target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseCertificate {
    pub target: CollapseTarget,
    pub pairs: Vec<CollapsePair>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("pair {index}: face {face} is not present in the complex at this step")]
    FaceAbsent { index: usize, face: Simplex },
    #[error("pair {index}: {face} is not free here ({cofaces} proper cofaces alive)")]
    NotFree {
        index: usize,
        face: Simplex,
        cofaces: usize,
    },
    #[error("pair {index}: the unique coface of {face} is {actual}, not {declared}")]
    WrongCoface {
        index: usize,
        face: Simplex,
        declared: Simplex,
        actual: Simplex,
    },
    #[error("residue does not match the declared target: {0}")]
    WrongResidue(String),
}

/// All pairs (σ, Σ) with Σ the unique proper coface of σ.
pub fn free_pairs(c: &SimplicialComplex) -> Vec<CollapsePair> {
    let lat = Lattice::build(c);
    let st = CollapseState::new(&lat, &[]);
    let mut ids: Vec<u32> = st.free_faces().to_vec();
    ids.sort_unstable();
    ids.iter()
        .map(|&i| CollapsePair {
            free: lat.faces[i as usize].clone(),
            coface: lat.faces[st.unique_coface(i).unwrap() as usize].clone(),
        })
        .collect()
}

/// Replays a certificate on `c`. Every pair must be legal when reached and the
/// residue must equal the declared target (a single vertex for
/// [`CollapseTarget::Point`]).
pub fn verify_certificate(
    c: &SimplicialComplex,
    cert: &CollapseCertificate,
) -> Result<(), CertificateError> {
    let lat = Lattice::build(c);
    let mut st = CollapseState::new(&lat, &[]);
    for (index, pair) in cert.pairs.iter().enumerate() {
        let fid = lat.id(&pair.free).ok_or(CertificateError::FaceAbsent {
            index,
            face: pair.free.clone(),
        })?;
        if !st.is_alive(fid) {
            return Err(CertificateError::FaceAbsent {
                index,
                face: pair.free.clone(),
            });
        }
        let Some(cid) = st.unique_coface(fid) else {
            return Err(CertificateError::NotFree {
                index,
                face: pair.free.clone(),
                cofaces: st.up_alive[fid as usize] as usize,
            });
        };
        if lat.faces[cid as usize] != pair.coface {
            return Err(CertificateError::WrongCoface {
                index,
                face: pair.free.clone(),
                declared: pair.coface.clone(),
                actual: lat.faces[cid as usize].clone(),
            });
        }
        st.remove_pair(fid, cid);
    }
    let residue = st.residue();
    match &cert.target {
        CollapseTarget::Point => {
            if !(residue.facet_count() == 1 && residue.facets()[0].dim() == 0) {
                return Err(CertificateError::WrongResidue(format!(
                    "expected a single vertex, got {} faces",
                    st.alive_count
                )));
            }
        }
        CollapseTarget::Subcomplex(t) => {
            if &residue != t {
                return Err(CertificateError::WrongResidue(format!(
                    "residue has {} facets, target has {}",
                    residue.facet_count(),
                    t.facet_count()
                )));
            }
        }
    }
    Ok(())
}

/// Free-pair selection heuristic for the randomized search. `Uniform` picks a
/// free face uniformly; `MinNewFree` scores each candidate by the number of
/// faces its removal would newly free and keeps only the minimizers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Uniform,
    MinNewFree,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Uniform => write!(f, "uniform"),
            Strategy::MinNewFree => write!(f, "min-new-free"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no collapse found within {restarts} restarts (strategy {strategy}); this is not a proof of non-collapsibility")]
pub struct SearchFailure {
    pub restarts: u64,
    pub strategy: Strategy,
}

fn restart_seed(seed: u64, restart: u64) -> u64 {
    // splitmix64 step keeps per-restart streams independent
    let mut z = seed
        .wrapping_add(restart.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One seeded greedy run; returns pairs on success.
fn run_once(
    lat: &Lattice,
    protected: &[u32],
    goal_alive: usize,
    strategy: Strategy,
    seed: u64,
) -> Option<Vec<(u32, u32)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut st = CollapseState::new(lat, protected);
    let mut pairs = Vec::new();
    while st.alive_count > goal_alive {
        let f = match strategy {
            Strategy::Uniform => st.sample_free(&mut rng)?,
            Strategy::MinNewFree => {
                let free = st.free_faces();
                if free.is_empty() {
                    return None;
                }
                let mut best_score = usize::MAX;
                let mut best: Vec<u32> = Vec::new();
                for &f in free {
                    let c = st.unique_coface(f).unwrap();
                    let s = st.new_free_after(f, c);
                    if s < best_score {
                        best_score = s;
                        best.clear();
                    }
                    if s == best_score {
                        best.push(f);
                    }
                }
                best[rng.gen_range(0..best.len())]
            }
        };
        let c = st.unique_coface(f).unwrap();
        st.remove_pair(f, c);
        pairs.push((f, c));
    }
    Some(pairs)
}

/// Randomized collapsibility search: seeded random free-pair selection with
/// independent restarts (parallel, first success by restart index wins).
/// Faces of the target are never removed. A failure is *not* a proof of
/// non-collapsibility.
pub fn search_collapse(
    c: &SimplicialComplex,
    target: &CollapseTarget,
    seed: u64,
    restarts: u64,
    strategy: Strategy,
) -> Result<CollapseCertificate, SearchFailure> {
    let lat = Lattice::build(c);
    let (protected, goal_alive) = match target {
        CollapseTarget::Point => (Vec::new(), 1),
        CollapseTarget::Subcomplex(t) => {
            let mut ids = Vec::new();
            for fs in t.faces_by_dim() {
                for s in fs {
                    let id = lat
                        .id(s)
                        .unwrap_or_else(|| panic!("target face {s} is not a face of the complex"));
                    ids.push(id);
                }
            }
            let goal = ids.len();
            (ids, goal)
        }
    };
    let found = (0..restarts).into_par_iter().find_map_first(|r| {
        run_once(&lat, &protected, goal_alive, strategy, restart_seed(seed, r))
    });
    match found {
        Some(pairs) => Ok(CollapseCertificate {
            target: target.clone(),
            pairs: pairs
                .into_iter()
                .map(|(f, c)| CollapsePair {
                    free: lat.faces[f as usize].clone(),
                    coface: lat.faces[c as usize].clone(),
                })
                .collect(),
        }),
        None => Err(SearchFailure {
            restarts,
            strategy,
        }),
    }
}

#[derive(Debug, Error)]
pub enum LcError {
    #[error("input is not a triangulated {0}")]
    WrongKind(&'static str),
    #[error("inconclusive: no witness found within budget ({tried} candidates x {restarts} restarts)")]
    Inconclusive { tried: usize, restarts: u64 },
}

/// A successful local-constructibility check: the witness face together with
/// the collapse certificate.
#[derive(Debug, Clone)]
pub struct LcEvidence {
    /// For a ball: the boundary triangle left out. For a sphere: the facet removed.
    pub witness: Simplex,
    pub certificate: CollapseCertificate,
}

/// Checks whether a 3-ball is locally constructible: for each boundary
/// triangle `t` in seeded random order, searches for a collapse of the ball
/// onto its boundary minus `t`. Exhaustion is inconclusive, not a refutation.
pub fn check_lc_ball(
    b: &SimplicialComplex,
    seed: u64,
    restarts: u64,
) -> Result<LcEvidence, LcError> {
    if manifold_check(b).class != ManifoldClass::Ball3 {
        return Err(LcError::WrongKind("3-ball"));
    }
    let boundary = b.boundary_complex().expect("ball is pure");
    let mut triangles: Vec<Simplex> = boundary.facets().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    shuffle(&mut triangles, &mut rng);
    for (i, t) in triangles.iter().enumerate() {
        let target = boundary.delete_face(t);
        let cert = search_collapse(
            b,
            &CollapseTarget::Subcomplex(target),
            restart_seed(seed, 1 + i as u64),
            restarts,
            Strategy::Uniform,
        );
        if let Ok(certificate) = cert {
            return Ok(LcEvidence {
                witness: t.clone(),
                certificate,
            });
        }
    }
    Err(LcError::Inconclusive {
        tried: triangles.len(),
        restarts,
    })
}

/// Checks whether a 3-sphere is locally constructible: for each facet Σ in
/// seeded random order, searches for a collapse of S − Σ to a point.
pub fn check_lc_sphere(
    s: &SimplicialComplex,
    seed: u64,
    restarts: u64,
) -> Result<LcEvidence, LcError> {
    if manifold_check(s).class != ManifoldClass::Sphere3 {
        return Err(LcError::WrongKind("3-sphere"));
    }
    let mut facets: Vec<Simplex> = s.facets().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    shuffle(&mut facets, &mut rng);
    for (i, f) in facets.iter().enumerate() {
        let ball = s.delete_face(f);
        let cert = search_collapse(
            &ball,
            &CollapseTarget::Point,
            restart_seed(seed, 1 + i as u64),
            restarts,
            Strategy::Uniform,
        );
        if let Ok(certificate) = cert {
            return Ok(LcEvidence {
                witness: f.clone(),
                certificate,
            });
        }
    }
    Err(LcError::Inconclusive {
        tried: facets.len(),
        restarts,
    })
}

fn shuffle<T, R: Rng>(items: &mut [T], rng: &mut R) {
    for i in (1..items.len()).rev() {
        items.swap(i, rng.gen_range(0..=i));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn tetrahedron_has_four_free_pairs() {
        let pairs = free_pairs(&cx(&[&[1, 2, 3, 4]]));
        assert_eq!(pairs.len(), 4);
        assert!(pairs.iter().all(|p| p.free.dim() == 2 && p.coface.dim() == 3));
    }

    #[test]
    fn closed_surface_has_no_free_pairs() {
        let s = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        assert!(free_pairs(&s).is_empty());
    }

    #[test]
    fn cone_collapses_to_point() {
        let base = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        let cone = base.cone(9).unwrap();
        let cert = search_collapse(&cone, &CollapseTarget::Point, 7, 20, Strategy::Uniform)
            .expect("cones collapse");
        verify_certificate(&cone, &cert).unwrap();
    }

    #[test]
    fn sphere_search_fails_immediately() {
        let s = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        let err = search_collapse(&s, &CollapseTarget::Point, 0, 5, Strategy::Uniform)
            .unwrap_err();
        assert_eq!(err.restarts, 5);
    }

    #[test]
    fn certificate_on_wrong_complex_reports_failure() {
        let c = cx(&[&[1, 2, 3]]);
        let cert = search_collapse(&c, &CollapseTarget::Point, 3, 10, Strategy::Uniform).unwrap();
        verify_certificate(&c, &cert).unwrap();
        let other = cx(&[&[4, 5, 6]]);
        let err = verify_certificate(&other, &cert).unwrap_err();
        assert!(matches!(err, CertificateError::FaceAbsent { index: 0, .. }));
    }

    #[test]
    fn min_new_free_strategy_also_works() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        let cert =
            search_collapse(&c, &CollapseTarget::Point, 0, 10, Strategy::MinNewFree).unwrap();
        verify_certificate(&c, &cert).unwrap();
    }

    #[test]
    fn lc_check_single_tetrahedron() {
        let b = cx(&[&[1, 2, 3, 4]]);
        let ev = check_lc_ball(&b, 1, 10).unwrap();
        assert_eq!(ev.witness.dim(), 2);
        verify_certificate(&b, &ev.certificate).unwrap();
    }

    #[test]
    fn lc_check_boundary_of_4_simplex() {
        let s = cx(&[&[1, 2, 3, 4, 5]]).boundary_complex().unwrap();
        let ev = check_lc_sphere(&s, 1, 10).unwrap();
        assert_eq!(ev.witness.dim(), 3);
    }
}
