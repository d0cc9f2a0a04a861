//! Knotted spanning edges, knot cycles, complexes homotopy equivalent to knot
//! complements, fundamental-group presentations with Tietze simplification,
//! and homomorphism counting into small permutation groups.
//!
//! Hom counting into S3/S4 is the computable non-triviality witness used
//! throughout: a cyclic fundamental group admits exactly |G| homomorphisms, so
//! any excess certifies a non-cyclic group, hence a non-trivial knot.

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::manifold::{manifold_check, ManifoldClass};
use crate::snf;
use num_bigint::BigUint;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KnotError {
    #[error("input is not a triangulated {0}")]
    WrongKind(&'static str),
    #[error("{0} is not a spanning edge")]
    NotSpanning(Simplex),
    #[error("cycle is invalid: {0}")]
    BadCycle(String),
    #[error("complex is not connected")]
    Disconnected,
    #[error("{0}^{1} assignments exceed the enumeration bound {2}; simplify the presentation further")]
    TooManyAssignments(usize, usize, u64),
}

/// A closed edge path inside a complex's 1-skeleton, stored as the cyclic
/// vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotCycle(Vec<Vertex>);

impl KnotCycle {
    /// Validates that consecutive pairs (cyclically) are edges of `c` and that
    /// no vertex repeats.
    pub fn new(c: &SimplicialComplex, vertices: Vec<Vertex>) -> Result<Self, KnotError> {
        if vertices.len() < 3 {
            return Err(KnotError::BadCycle("fewer than three vertices".into()));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(KnotError::BadCycle(format!("repeated vertex {v}")));
            }
        }
        for i in 0..vertices.len() {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            let e = Simplex::new(vec![a, b]).unwrap();
            if !c.contains(&e) {
                return Err(KnotError::BadCycle(format!("{e} is not an edge")));
            }
        }
        Ok(KnotCycle(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The cycle's faces: its vertices and edges.
    pub fn faces(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = self.0.iter().map(|&v| Simplex::vertex(v)).collect();
        for i in 0..self.0.len() {
            let a = self.0[i];
            let b = self.0[(i + 1) % self.0.len()];
            out.push(Simplex::new(vec![a, b]).unwrap());
        }
        out
    }
}

/// Interior edges of a 3-ball with both endpoints on the boundary.
pub fn spanning_edges(b: &SimplicialComplex) -> Result<Vec<Simplex>, KnotError> {
    if manifold_check(b).class != ManifoldClass::Ball3 {
        return Err(KnotError::WrongKind("3-ball"));
    }
    let boundary = b.boundary_complex().expect("pure");
    Ok(b.faces_of_dim(1)
        .iter()
        .filter(|e| {
            !boundary.contains(e)
                && e.vertices()
                    .iter()
                    .all(|&v| boundary.has_vertex(v))
        })
        .cloned()
        .collect())
}

/// Closes a spanning edge to a knot cycle through a shortest boundary path
/// (breadth-first search from the smaller endpoint, neighbors scanned in
/// ascending order, so the result is deterministic). The knot type does not
/// depend on the path chosen.
pub fn close_cycle(b: &SimplicialComplex, edge: &Simplex) -> Result<KnotCycle, KnotError> {
    let spanning = spanning_edges(b)?;
    if !spanning.contains(edge) {
        return Err(KnotError::NotSpanning(edge.clone()));
    }
    let boundary = b.boundary_complex().expect("pure");
    let (start, goal) = (edge.vertices()[0], edge.vertices()[1]);
    let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for e in boundary.faces_of_dim(1) {
        let v = e.vertices();
        adj.entry(v[0]).or_default().insert(v[1]);
        adj.entry(v[1]).or_default().insert(v[0]);
    }
    let mut parent: HashMap<Vertex, Vertex> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    parent.insert(start, start);
    while let Some(x) = queue.pop_front() {
        if x == goal {
            break;
        }
        if let Some(ns) = adj.get(&x) {
            for &y in ns {
                parent.entry(y).or_insert_with(|| {
                    queue.push_back(y);
                    x
                });
            }
        }
    }
    if !parent.contains_key(&goal) {
        return Err(KnotError::BadCycle(
            "endpoints are disconnected on the boundary".into(),
        ));
    }
    let mut path = vec![goal];
    while *path.last().unwrap() != start {
        path.push(parent[path.last().unwrap()]);
    }
    path.reverse(); // start .. goal; closing edge goal-start is the spanning edge
    KnotCycle::new(b, path)
}

/// A complex homotopy equivalent to the complement of the cycle `k` in the
/// 3-sphere `s`: the full subcomplex of the barycentric subdivision spanned by
/// the barycenters of faces that do not lie on the knot.
pub fn complement_complex(
    s: &SimplicialComplex,
    k: &KnotCycle,
) -> Result<SimplicialComplex, KnotError> {
    if manifold_check(s).class != ManifoldClass::Sphere3 {
        return Err(KnotError::WrongKind("3-sphere"));
    }
    // validate the cycle against s
    KnotCycle::new(s, k.vertices().to_vec())?;
    let sub = s.barycentric_subdivision();
    let knot_faces: BTreeSet<Simplex> = k.faces().into_iter().collect();
    let dropped: BTreeSet<Vertex> = sub
        .face_labels
        .iter()
        .enumerate()
        .filter_map(|(i, f)| knot_faces.contains(f).then_some(i as Vertex))
        .collect();
    let mut gens = Vec::new();
    for flag in sub.complex.facets() {
        let kept: Vec<Vertex> = flag
            .vertices()
            .iter()
            .copied()
            .filter(|v| !dropped.contains(v))
            .collect();
        if !kept.is_empty() {
            gens.push(Simplex::new(kept).unwrap());
        }
    }
    Ok(SimplicialComplex::from_simplices(gens))
}

/// A finite group presentation: relators are words over signed generator
/// indices (1-based; negative means inverse).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

impl GroupPresentation {
    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(|r| r.len()).sum()
    }

    /// Abelianization invariants: free rank and torsion coefficients.
    pub fn abelianization(&self) -> (u64, Vec<BigUint>) {
        let mut exps: HashMap<(u32, u32), i64> = HashMap::new();
        for (j, r) in self.relators.iter().enumerate() {
            for &l in r {
                let g = l.unsigned_abs() - 1;
                *exps.entry((g, j as u32)).or_insert(0) += l.signum() as i64;
            }
        }
        let entries: Vec<(u32, u32, i64)> = exps
            .into_iter()
            .filter(|&(_, v)| v != 0)
            .map(|((g, j), v)| (g, j, v))
            .collect();
        let inv = snf::smith_invariants(self.generators, self.relators.len(), &entries);
        ((self.generators - inv.rank) as u64, inv.torsion)
    }
}

/// Edge-path-group presentation of the fundamental group: a breadth-first
/// spanning tree from the least vertex kills its edges, every other edge is a
/// generator, and every triangle contributes one relator.
pub fn pi1_presentation(c: &SimplicialComplex) -> Result<GroupPresentation, KnotError> {
    if c.is_void() || !c.is_connected() {
        return Err(KnotError::Disconnected);
    }
    let verts = c.vertices().to_vec();
    let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for e in c.faces_of_dim(1) {
        let v = e.vertices();
        adj.entry(v[0]).or_default().insert(v[1]);
        adj.entry(v[1]).or_default().insert(v[0]);
    }
    let root = verts[0];
    let mut in_tree: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut seen: BTreeSet<Vertex> = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        if let Some(ns) = adj.get(&x) {
            for &y in ns {
                if seen.insert(y) {
                    in_tree.insert((x.min(y), x.max(y)));
                    queue.push_back(y);
                }
            }
        }
    }
    // generator per non-tree edge
    let mut gen_of: HashMap<(Vertex, Vertex), i32> = HashMap::new();
    let mut generators = 0usize;
    for e in c.faces_of_dim(1) {
        let v = e.vertices();
        let key = (v[0], v[1]);
        if !in_tree.contains(&key) {
            generators += 1;
            gen_of.insert(key, generators as i32);
        }
    }
    let letter = |a: Vertex, b: Vertex| -> Option<i32> {
        let key = (a.min(b), a.max(b));
        gen_of.get(&key).map(|&g| if a < b { g } else { -g })
    };
    let mut relators = Vec::new();
    for t in c.faces_of_dim(2) {
        let v = t.vertices();
        let mut word = Vec::new();
        // path u -> v -> w -> u
        for (a, b) in [(v[0], v[1]), (v[1], v[2]), (v[2], v[0])] {
            if let Some(l) = letter(a, b) {
                word.push(l);
            }
        }
        if !word.is_empty() {
            relators.push(word);
        }
    }
    Ok(GroupPresentation {
        generators,
        relators,
    })
}

/// Tietze simplification: free and cyclic reduction, removal of trivial and
/// duplicate relators, and generator elimination by substitution, chosen
/// greedily by substitution cost. The result presents an isomorphic group.
pub fn tietze_simplify(p: &GroupPresentation, budget: u64) -> GroupPresentation {
    let mut gens: Vec<bool> = vec![true; p.generators]; // alive flags
    let mut relators: Vec<Vec<i32>> = p.relators.clone();
    let mut rounds = 0u64;
    loop {
        rounds += 1;
        if rounds > budget {
            break;
        }
        let mut changed = false;
        for r in &mut relators {
            let n = reduce_word(r);
            *r = n;
        }
        relators.retain(|r| !r.is_empty());
        // canonical form under rotation and inversion for dedup
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        relators.retain(|r| seen.insert(canonical_cyclic(r)));
        // kill generators set trivial by length-1 relators
        let trivial: Vec<i32> = relators
            .iter()
            .filter(|r| r.len() == 1)
            .map(|r| r[0].abs())
            .collect();
        if !trivial.is_empty() {
            for g in trivial {
                gens[g as usize - 1] = false;
                for r in &mut relators {
                    r.retain(|l| l.abs() != g);
                }
            }
            continue;
        }
        // generator elimination: find (relator, generator occurring once in it)
        // with minimal substitution cost
        let mut occurrences: HashMap<i32, usize> = HashMap::new();
        for r in &relators {
            for &l in r {
                *occurrences.entry(l.abs()).or_insert(0) += 1;
            }
        }
        let mut best: Option<(usize, i32, usize)> = None; // (relator idx, gen, cost)
        for (i, r) in relators.iter().enumerate() {
            for &l in r {
                let g = l.abs();
                if r.iter().filter(|&&x| x.abs() == g).count() != 1 {
                    continue;
                }
                let elsewhere = occurrences[&g] - 1;
                let cost = (r.len() - 1) * elsewhere;
                if best.is_none_or(|(_, _, c)| cost < c) {
                    best = Some((i, g, cost));
                }
            }
        }
        if let Some((idx, g, _)) = best {
            let r = relators.remove(idx);
            let pos = r.iter().position(|&l| l.abs() == g).unwrap();
            // rotate so the chosen letter is first: r = g^s . tail
            let mut word: Vec<i32> = r[pos + 1..]
                .iter()
                .chain(r[..pos].iter())
                .copied()
                .collect();
            if r[pos] > 0 {
                // g = (tail)^{-1}
                word = invert(&word);
            }
            for rel in &mut relators {
                *rel = substitute(rel, g, &word);
            }
            gens[g as usize - 1] = false;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    // renumber the surviving generators densely
    let mut remap: HashMap<i32, i32> = HashMap::new();
    let mut next = 0i32;
    for (i, &alive) in gens.iter().enumerate() {
        if alive {
            next += 1;
            remap.insert(i as i32 + 1, next);
        }
    }
    let relators: Vec<Vec<i32>> = relators
        .iter()
        .map(|r| {
            r.iter()
                .map(|&l| remap[&l.abs()] * l.signum())
                .collect()
        })
        .collect();
    GroupPresentation {
        generators: next as usize,
        relators,
    }
}

fn reduce_word(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    // cyclic reduction
    while out.len() >= 2 && *out.first().unwrap() == -*out.last().unwrap() {
        out.pop();
        out.remove(0);
    }
    out
}

fn invert(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&l| -l).collect()
}

fn canonical_cyclic(w: &[i32]) -> Vec<i32> {
    let mut best: Option<Vec<i32>> = None;
    for cand in [w.to_vec(), invert(w)] {
        for i in 0..cand.len().max(1) {
            let rot: Vec<i32> = cand[i..].iter().chain(cand[..i].iter()).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn substitute(r: &[i32], g: i32, word: &[i32]) -> Vec<i32> {
    let mut out = Vec::with_capacity(r.len());
    for &l in r {
        if l == g {
            out.extend_from_slice(word);
        } else if l == -g {
            out.extend(invert(word));
        } else {
            out.push(l);
        }
    }
    reduce_word(&out)
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub name: String,
    pub order: usize,
    /// `table[a][b] = a * b`; element 0 is the identity.
    pub table: Vec<Vec<u16>>,
    pub inverse: Vec<u16>,
}

impl FiniteGroup {
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<u16>>) -> FiniteGroup {
        let order = table.len();
        let mut inverse = vec![0u16; order];
        for a in 0..order {
            for b in 0..order {
                if table[a][b] == 0 {
                    inverse[a] = b as u16;
                }
            }
        }
        FiniteGroup {
            name: name.into(),
            order,
            table,
            inverse,
        }
    }

    /// The symmetric group on `n` letters (n ≤ 5), elements in lexicographic
    /// one-line order, identity first.
    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!((1..=5).contains(&n));
        let mut perms: Vec<Vec<u8>> = Vec::new();
        let mut p: Vec<u8> = (0..n as u8).collect();
        loop {
            perms.push(p.clone());
            // next lexicographic permutation
            let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
        }
        let index: HashMap<Vec<u8>, u16> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u16))
            .collect();
        let table: Vec<Vec<u16>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // (a*b)(x) = a(b(x))
                        let ab: Vec<u8> = (0..n).map(|x| a[b[x] as usize]).collect();
                        index[&ab]
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(format!("S{n}"), table)
    }

    fn eval(&self, word: &[i32], images: &[u16]) -> u16 {
        let mut acc = 0u16; // identity
        for &l in word {
            let g = images[l.unsigned_abs() as usize - 1];
            let g = if l > 0 { g } else { self.inverse[g as usize] };
            acc = self.table[acc as usize][g as usize];
        }
        acc
    }
}

/// Exact count of homomorphisms from the presented group into `G`, by brute
/// force over generator images. An isomorphism invariant of the group, hence
/// independent of the presentation.
pub fn count_homs(p: &GroupPresentation, g: &FiniteGroup, limit: u64) -> Result<u64, KnotError> {
    let n = g.order as u64;
    let total = n.checked_pow(p.generators as u32).filter(|&t| t <= limit);
    let Some(_total) = total else {
        return Err(KnotError::TooManyAssignments(
            g.order,
            p.generators,
            limit,
        ));
    };
    if p.generators == 0 {
        return Ok(1);
    }
    let per_first = n.pow(p.generators as u32 - 1);
    let count = (0..g.order as u16)
        .into_par_iter()
        .map(|first| {
            let mut images = vec![0u16; p.generators];
            images[0] = first;
            let mut count = 0u64;
            for mut idx in 0..per_first {
                for slot in images.iter_mut().skip(1) {
                    *slot = (idx % n) as u16;
                    idx /= n;
                }
                if p.relators.iter().all(|r| g.eval(r, &images) == 0) {
                    count += 1;
                }
            }
            count
        })
        .sum();
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn cone_over_sphere_has_no_spanning_edges() {
        let ball = cx(&[&[1, 2, 3, 4]])
            .boundary_complex()
            .unwrap()
            .cone(9)
            .unwrap();
        assert!(spanning_edges(&ball).unwrap().is_empty());
    }

    #[test]
    fn pi1_of_circle_is_z() {
        let c = cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let p = pi1_presentation(&c).unwrap();
        let q = tietze_simplify(&p, 100);
        assert_eq!(q.generators, 1);
        assert!(q.relators.is_empty());
        assert_eq!(q.abelianization(), (1, vec![]));
    }

    #[test]
    fn pi1_of_sphere_is_trivial() {
        let s = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        let p = pi1_presentation(&s).unwrap();
        let q = tietze_simplify(&p, 100);
        assert_eq!(q.generators, 0);
        assert!(q.relators.is_empty());
    }

    #[test]
    fn tietze_kills_simple_presentations() {
        // <a, b | a, b>
        let p = GroupPresentation {
            generators: 2,
            relators: vec![vec![1], vec![2]],
        };
        let q = tietze_simplify(&p, 100);
        assert_eq!((q.generators, q.relators.len()), (0, 0));
        // <a, b | ab>
        let p = GroupPresentation {
            generators: 2,
            relators: vec![vec![1, 2]],
        };
        let q = tietze_simplify(&p, 100);
        assert_eq!((q.generators, q.relators.len()), (1, 0));
    }

    #[test]
    fn s3_hom_counts() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order, 6);
        // free group of rank 1: |S3| homomorphisms
        let z = GroupPresentation {
            generators: 1,
            relators: vec![],
        };
        assert_eq!(count_homs(&z, &s3, 1_000_000).unwrap(), 6);
        // trivial presentation: exactly one
        let t = GroupPresentation {
            generators: 0,
            relators: vec![],
        };
        assert_eq!(count_homs(&t, &s3, 1_000_000).unwrap(), 1);
        // trefoil group <x, y | x^2 y^-3>
        let trefoil = GroupPresentation {
            generators: 2,
            relators: vec![vec![1, 1, -2, -2, -2]],
        };
        // independent oracle: enumerate all 36 pairs explicitly
        let mut expected = 0;
        for x in 0..6u16 {
            for y in 0..6u16 {
                let xx = s3.table[x as usize][x as usize];
                let yy = s3.table[y as usize][y as usize];
                let yyy = s3.table[yy as usize][y as usize];
                if xx == yyy {
                    expected += 1;
                }
            }
        }
        assert_eq!(expected, 12);
        assert_eq!(count_homs(&trefoil, &s3, 1_000_000).unwrap(), 12);
    }

    #[test]
    fn hom_count_invariant_under_tietze() {
        let s3 = FiniteGroup::symmetric(3);
        let p = GroupPresentation {
            generators: 3,
            relators: vec![vec![1, 1, -2, -2, -2], vec![3, -1, 2]],
        };
        let q = tietze_simplify(&p, 100);
        assert!(q.generators < p.generators);
        assert_eq!(
            count_homs(&p, &s3, 10_000_000).unwrap(),
            count_homs(&q, &s3, 10_000_000).unwrap()
        );
    }

    #[test]
    fn hom_bound_is_enforced() {
        let s4 = FiniteGroup::symmetric(4);
        let p = GroupPresentation {
            generators: 12,
            relators: vec![],
        };
        assert!(matches!(
            count_homs(&p, &s4, 100_000_000),
            Err(KnotError::TooManyAssignments(..))
        ));
    }

    #[test]
    fn s4_has_24_elements_and_correct_identity() {
        let s4 = FiniteGroup::symmetric(4);
        assert_eq!(s4.order, 24);
        for a in 0..24 {
            assert_eq!(s4.table[0][a], a as u16);
            assert_eq!(s4.table[a][0], a as u16);
            assert_eq!(s4.table[a][s4.inverse[a] as usize], 0);
        }
    }
}
