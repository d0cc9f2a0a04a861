//! Random discrete Morse functions and replayable Morse certificates.
//!
//! A run performs random elementary collapses until stuck, then declares a
//! random top-dimensional face critical and continues. The resulting partial
//! matching is acyclic by construction and re-verified explicitly.

use crate::complex::{Simplex, SimplicialComplex};
use crate::collapse::CollapsePair;
use crate::homology::reduced_homology;
use crate::lattice::{CollapseState, Lattice};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Critical-face counts per dimension, `c_0 .. c_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseVector(pub Vec<u64>);

impl fmt::Display for MorseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl<const N: usize> PartialEq<[u64; N]> for MorseVector {
    fn eq(&self, other: &[u64; N]) -> bool {
        self.0 == other
    }
}

/// A partial matching on the face poset; unmatched faces are critical.
#[derive(Debug, Clone)]
pub struct MorseMatching {
    pub pairs: Vec<CollapsePair>,
    pub critical: Vec<Simplex>,
}

impl MorseMatching {
    pub fn vector(&self, dim: usize) -> MorseVector {
        let mut v = vec![0u64; dim + 1];
        for c in &self.critical {
            v[c.dim() as usize] += 1;
        }
        MorseVector(v)
    }

    /// Checks that every face is covered exactly once and that the modified
    /// Hasse diagram has no directed cycle.
    pub fn verify_acyclic(&self, c: &SimplicialComplex) -> bool {
        let lat = Lattice::build(c);
        let n = lat.faces.len();
        let mut matched_up: Vec<Option<u32>> = vec![None; n];
        let mut covered = vec![false; n];
        for p in &self.pairs {
            let (Some(f), Some(cf)) = (lat.id(&p.free), lat.id(&p.coface)) else {
                return false;
            };
            if covered[f as usize] || covered[cf as usize] {
                return false;
            }
            if !lat.down[cf as usize].contains(&f) {
                return false;
            }
            covered[f as usize] = true;
            covered[cf as usize] = true;
            matched_up[f as usize] = Some(cf);
        }
        for s in &self.critical {
            let Some(i) = lat.id(s) else { return false };
            if covered[i as usize] {
                return false;
            }
            covered[i as usize] = true;
        }
        if !covered.iter().all(|&b| b) {
            return false;
        }
        // V-path digraph: matched face -> its coface -> its other facets
        let mut color = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        fn dfs(
            i: u32,
            lat: &Lattice,
            matched_up: &[Option<u32>],
            color: &mut [u8],
        ) -> bool {
            if color[i as usize] == 1 {
                return false;
            }
            if color[i as usize] == 2 {
                return true;
            }
            color[i as usize] = 1;
            if let Some(up) = matched_up[i as usize] {
                for &d in &lat.down[up as usize] {
                    if d != i && !dfs(d, lat, matched_up, color) {
                        return false;
                    }
                }
            }
            color[i as usize] = 2;
            true
        }
        (0..n as u32).all(|i| dfs(i, &lat, &matched_up, &mut color))
    }

    /// `c_i >= β_i` for all i (unreduced Betti numbers).
    pub fn satisfies_morse_inequalities(&self, c: &SimplicialComplex) -> bool {
        let dim = c.dim().unwrap_or(0).max(0) as usize;
        let v = self.vector(dim);
        let h = reduced_homology(c);
        (0..=dim).all(|k| v.0[k] >= h.unreduced_betti(k))
    }
}

/// Builds a Morse matching by iterated random free-face collapses, declaring a
/// random top-dimensional face critical when stuck.
pub fn random_discrete_morse(c: &SimplicialComplex, seed: u64) -> (MorseMatching, MorseVector) {
    let lat = Lattice::build(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut st = CollapseState::new(&lat, &[]);
    let mut pairs = Vec::new();
    let mut critical = Vec::new();
    while st.alive_count > 0 {
        if let Some(f) = st.sample_free(&mut rng) {
            let cf = st.unique_coface(f).unwrap();
            st.remove_pair(f, cf);
            pairs.push(CollapsePair {
                free: lat.faces[f as usize].clone(),
                coface: lat.faces[cf as usize].clone(),
            });
        } else {
            let top = st.top_maximal_faces();
            let pick = top[rng.gen_range(0..top.len())];
            st.remove_maximal(pick);
            critical.push(lat.faces[pick as usize].clone());
        }
    }
    let matching = MorseMatching { pairs, critical };
    let dim = c.dim().unwrap_or(0).max(0) as usize;
    let vector = matching.vector(dim);
    (matching, vector)
}

/// One step of a replayable Morse certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorseEvent {
    Collapse(CollapsePair),
    Critical(Simplex),
}

/// An explicit construction trace for a discrete Morse function: collapse
/// pairs interleaved with critical-face removals, consuming the whole complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseCertificate {
    pub events: Vec<MorseEvent>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorseCertificateError {
    #[error("event {index}: face {face} is not present at this step")]
    FaceAbsent { index: usize, face: Simplex },
    #[error("event {index}: {face} is not free here")]
    NotFree { index: usize, face: Simplex },
    #[error("event {index}: declared coface of {face} is {declared}, actual {actual}")]
    WrongCoface {
        index: usize,
        face: Simplex,
        declared: Simplex,
        actual: Simplex,
    },
    #[error("event {index}: critical face {face} is not maximal at this step")]
    NotMaximal { index: usize, face: Simplex },
    #[error("certificate does not consume the complex: {remaining} faces left")]
    Incomplete { remaining: usize },
}

/// Replays a Morse certificate; on success returns the matching it induces.
pub fn verify_morse_certificate(
    c: &SimplicialComplex,
    cert: &MorseCertificate,
) -> Result<MorseMatching, MorseCertificateError> {
    let lat = Lattice::build(c);
    let mut st = CollapseState::new(&lat, &[]);
    let mut pairs = Vec::new();
    let mut critical = Vec::new();
    for (index, ev) in cert.events.iter().enumerate() {
        match ev {
            MorseEvent::Collapse(p) => {
                let fid = lat.id(&p.free).filter(|&i| st.is_alive(i)).ok_or(
                    MorseCertificateError::FaceAbsent {
                        index,
                        face: p.free.clone(),
                    },
                )?;
                let cid =
                    st.unique_coface(fid)
                        .ok_or_else(|| MorseCertificateError::NotFree {
                            index,
                            face: p.free.clone(),
                        })?;
                if lat.faces[cid as usize] != p.coface {
                    return Err(MorseCertificateError::WrongCoface {
                        index,
                        face: p.free.clone(),
                        declared: p.coface.clone(),
                        actual: lat.faces[cid as usize].clone(),
                    });
                }
                st.remove_pair(fid, cid);
                pairs.push(p.clone());
            }
            MorseEvent::Critical(s) => {
                let id = lat.id(s).filter(|&i| st.is_alive(i)).ok_or(
                    MorseCertificateError::FaceAbsent {
                        index,
                        face: s.clone(),
                    },
                )?;
                if st.up_alive[id as usize] != 0 {
                    return Err(MorseCertificateError::NotMaximal {
                        index,
                        face: s.clone(),
                    });
                }
                st.remove_maximal(id);
                critical.push(s.clone());
            }
        }
    }
    if st.alive_count > 0 {
        return Err(MorseCertificateError::Incomplete {
            remaining: st.alive_count,
        });
    }
    Ok(MorseMatching { pairs, critical })
}

/// Runs `tries` seeded Morse searches (seeds `seed..seed+tries`), returning
/// the lexicographically best vector found, the seed that attained it, and the
/// distribution of vectors. Stops early if `stop_at` is reached.
pub fn morse_search(
    c: &SimplicialComplex,
    seed: u64,
    tries: u64,
    stop_at: Option<&[u64]>,
) -> MorseSearchOutcome {
    use rayon::prelude::*;
    let chunk = 64u64;
    let mut best: Option<(MorseVector, u64)> = None;
    let mut histogram: HashMap<Vec<u64>, u64> = HashMap::new();
    let mut tried = 0u64;
    'outer: for start in (0..tries).step_by(chunk as usize) {
        let end = (start + chunk).min(tries);
        let results: Vec<(u64, MorseVector)> = (start..end)
            .into_par_iter()
            .map(|i| (seed + i, random_discrete_morse(c, seed + i).1))
            .collect();
        for (s, v) in results {
            tried += 1;
            *histogram.entry(v.0.clone()).or_insert(0) += 1;
            let better = best.as_ref().is_none_or(|(bv, _)| v.0 < bv.0);
            if better {
                best = Some((v.clone(), s));
            }
            if let Some(goal) = stop_at {
                if v.0 == goal {
                    break 'outer;
                }
            }
        }
    }
    let (best_vector, best_seed) = best.expect("at least one try");
    MorseSearchOutcome {
        best_vector,
        best_seed,
        tried,
        histogram,
    }
}

#[derive(Debug, Clone)]
pub struct MorseSearchOutcome {
    pub best_vector: MorseVector,
    pub best_seed: u64,
    pub tried: u64,
    pub histogram: HashMap<Vec<u64>, u64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn single_simplex_is_perfect() {
        let c = cx(&[&[1, 2, 3, 4]]);
        let (m, v) = random_discrete_morse(&c, 42);
        assert_eq!(v, [1, 0, 0, 0]);
        assert!(m.verify_acyclic(&c));
        assert!(m.satisfies_morse_inequalities(&c));
    }

    #[test]
    fn sphere_needs_two_critical_faces() {
        let s = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        let (m, v) = random_discrete_morse(&s, 7);
        assert_eq!(v, [1, 0, 1]);
        assert!(m.verify_acyclic(&s));
        assert!(m.satisfies_morse_inequalities(&s));
    }

    #[test]
    fn matching_from_run_replays_as_certificate() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        let (m, _) = random_discrete_morse(&c, 5);
        // rebuild the event order from a fresh run to exercise the verifier
        let mut events: Vec<MorseEvent> = Vec::new();
        let lat = Lattice::build(&c);
        let mut st = CollapseState::new(&lat, &[]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        while st.alive_count > 0 {
            if let Some(f) = st.sample_free(&mut rng) {
                let cf = st.unique_coface(f).unwrap();
                st.remove_pair(f, cf);
                events.push(MorseEvent::Collapse(CollapsePair {
                    free: lat.faces[f as usize].clone(),
                    coface: lat.faces[cf as usize].clone(),
                }));
            } else {
                let top = st.top_maximal_faces();
                let pick = top[rng.gen_range(0..top.len())];
                st.remove_maximal(pick);
                events.push(MorseEvent::Critical(lat.faces[pick as usize].clone()));
            }
        }
        let cert = MorseCertificate { events };
        let replayed = verify_morse_certificate(&c, &cert).unwrap();
        assert_eq!(replayed.critical.len(), m.critical.len());
    }
}
