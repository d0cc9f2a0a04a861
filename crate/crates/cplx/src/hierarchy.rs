//! Decision procedures for the combinatorial hierarchy: non-evasiveness,
//! vertex-decomposability, shellability (bounded search), and constructibility
//! certificate verification.
//!
//! Searches memoize on the exact canonical facet list (no isomorphism
//! testing) and prune with integer homology: a complex with nontrivial
//! reduced homology can be neither non-evasive nor vertex-decomposable, so a
//! "false" from the pruned exhaustive recursion is a genuine decision.

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::homology::is_acyclic;
use crate::manifold::{manifold_check, ManifoldClass};
use crate::homology::reduced_homology;
use rayon::prelude::*;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Outcome of a budgeted decision procedure. `No` is a genuine refutation;
/// `Inconclusive` only means the budget ran out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision<T> {
    Yes(T),
    No,
    Inconclusive,
}

impl<T> Decision<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
    pub fn witness(&self) -> Option<&T> {
        match self {
            Decision::Yes(t) => Some(t),
            _ => None,
        }
    }
}

/// A non-evasiveness decision tree: at each node some vertex has a
/// non-evasive link and a non-evasive deletion; leaves are single simplices
/// (a point included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeTree {
    Simplex,
    Node {
        vertex: Vertex,
        link: Arc<NeTree>,
        del: Arc<NeTree>,
    },
}

/// A vertex-decomposability tree: like [`NeTree`] but deletions must stay
/// pure of the same dimension, and a disjoint union of points is a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VdTree {
    Simplex,
    Points,
    Node {
        vertex: Vertex,
        link: Arc<VdTree>,
        del: Arc<VdTree>,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("at path [{}]: {reason}", fmt_path(.path))]
    Invalid { path: Vec<Vertex>, reason: String },
}

fn fmt_path(p: &[Vertex]) -> String {
    p.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn tree_err<T>(path: &[Vertex], reason: impl Into<String>) -> Result<T, TreeError> {
    Err(TreeError::Invalid {
        path: path.to_vec(),
        reason: reason.into(),
    })
}

// ---------------------------------------------------------------------------
// non-evasiveness
// ---------------------------------------------------------------------------

struct NeCtx {
    memo: HashMap<Vec<Simplex>, Decision<Arc<NeTree>>>,
    budget: u64,
}

/// Decides non-evasiveness by exhaustive recursion over candidate vertices,
/// memoized on the canonical facet list, with sound homology pruning.
pub fn is_nonevasive(c: &SimplicialComplex, budget: u64) -> Decision<Arc<NeTree>> {
    let mut ctx = NeCtx {
        memo: HashMap::new(),
        budget,
    };
    ne_rec(c, &mut ctx)
}

fn ne_rec(c: &SimplicialComplex, ctx: &mut NeCtx) -> Decision<Arc<NeTree>> {
    if c.is_simplex() {
        return Decision::Yes(Arc::new(NeTree::Simplex));
    }
    if c.is_void() || c.is_irrelevant() {
        return Decision::No;
    }
    if let Some(hit) = ctx.memo.get(c.facets()) {
        return hit.clone();
    }
    if ctx.budget == 0 {
        return Decision::Inconclusive;
    }
    ctx.budget -= 1;
    // NE ⇒ collapsible ⇒ contractible ⇒ Z-acyclic
    if !is_acyclic(c) {
        ctx.memo.insert(c.facets().to_vec(), Decision::No);
        return Decision::No;
    }
    let mut candidates: Vec<(usize, Vertex)> = c
        .vertices()
        .iter()
        .map(|&v| {
            let link_size = c.facets().iter().filter(|f| f.has_vertex(v)).count();
            (link_size, v)
        })
        .collect();
    candidates.sort_unstable();
    let mut out = Decision::No;
    for (_, v) in candidates {
        let link = c.link(&Simplex::vertex(v)).expect("vertex present");
        let link_d = match ne_rec(&link, ctx) {
            Decision::Yes(t) => t,
            Decision::No => continue,
            Decision::Inconclusive => {
                out = Decision::Inconclusive;
                continue;
            }
        };
        let del = c.delete(v).expect("vertex present");
        match ne_rec(&del, ctx) {
            Decision::Yes(t) => {
                let tree = Arc::new(NeTree::Node {
                    vertex: v,
                    link: link_d,
                    del: t,
                });
                let res = Decision::Yes(tree);
                ctx.memo.insert(c.facets().to_vec(), res.clone());
                return res;
            }
            Decision::No => {}
            Decision::Inconclusive => out = Decision::Inconclusive,
        }
    }
    if out == Decision::No {
        ctx.memo.insert(c.facets().to_vec(), Decision::No);
    }
    out
}

/// Replays a non-evasiveness tree; true iff all leaves are legal base cases.
pub fn verify_ne_tree(c: &SimplicialComplex, tree: &NeTree) -> Result<(), TreeError> {
    verify_ne_at(c, tree, &mut Vec::new())
}

fn verify_ne_at(
    c: &SimplicialComplex,
    tree: &NeTree,
    path: &mut Vec<Vertex>,
) -> Result<(), TreeError> {
    match tree {
        NeTree::Simplex => {
            if c.is_simplex() {
                Ok(())
            } else {
                tree_err(path, format!("leaf is not a single simplex: {c:?}"))
            }
        }
        NeTree::Node { vertex, link, del } => {
            if !c.has_vertex(*vertex) {
                return tree_err(path, format!("vertex {vertex} not in the complex"));
            }
            path.push(*vertex);
            let l = c.link(&Simplex::vertex(*vertex)).expect("vertex present");
            verify_ne_at(&l, link, path)?;
            let d = c.delete(*vertex).expect("vertex present");
            verify_ne_at(&d, del, path)?;
            path.pop();
            Ok(())
        }
    }
}

/// Builds a non-evasiveness tree whose deletion spine follows the given
/// vertex order (stopping early at a simplex); link subtrees are found by
/// search. Returns `No`/`Inconclusive` when the order does not certify.
pub fn ne_tree_from_deletion_order(
    c: &SimplicialComplex,
    order: &[Vertex],
    budget: u64,
) -> Decision<Arc<NeTree>> {
    if c.is_simplex() {
        return Decision::Yes(Arc::new(NeTree::Simplex));
    }
    let Some((&v, rest)) = order.split_first() else {
        return Decision::No;
    };
    if !c.has_vertex(v) {
        return Decision::No;
    }
    let link = c.link(&Simplex::vertex(v)).expect("vertex present");
    let link_tree = match is_nonevasive(&link, budget) {
        Decision::Yes(t) => t,
        Decision::No => return Decision::No,
        Decision::Inconclusive => return Decision::Inconclusive,
    };
    let del = c.delete(v).expect("vertex present");
    match ne_tree_from_deletion_order(&del, rest, budget) {
        Decision::Yes(t) => Decision::Yes(Arc::new(NeTree::Node {
            vertex: v,
            link: link_tree,
            del: t,
        })),
        other => other,
    }
}

/// For every k-subset S of the vertices (lexicographic order), reports whether
/// deleting S leaves an acyclic complex.
pub fn evasiveness_scan(c: &SimplicialComplex, k: usize) -> Vec<(Vec<Vertex>, bool)> {
    let verts = c.vertices().to_vec();
    assert!(k <= verts.len(), "subset size exceeds vertex count");
    let subsets = k_subsets(&verts, k);
    subsets
        .into_par_iter()
        .map(|s| {
            let del = c.delete_all(&s).expect("vertices present");
            let acyclic = is_acyclic(&del);
            (s, acyclic)
        })
        .collect()
}

fn k_subsets(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------------
// vertex-decomposability
// ---------------------------------------------------------------------------

struct VdCtx {
    memo: HashMap<Vec<Simplex>, Decision<Arc<VdTree>>>,
    budget: u64,
}

/// Decides vertex-decomposability of a pure complex by backtracking over
/// shedding candidates. For 3-balls, candidates are restricted to boundary
/// vertices (a shedding vertex of a ball always lies on its boundary).
pub fn is_vertex_decomposable(c: &SimplicialComplex, budget: u64) -> Decision<Arc<VdTree>> {
    let mut ctx = VdCtx {
        memo: HashMap::new(),
        budget,
    };
    vd_rec(c, &mut ctx)
}

fn vd_rec(c: &SimplicialComplex, ctx: &mut VdCtx) -> Decision<Arc<VdTree>> {
    if c.is_simplex() {
        return Decision::Yes(Arc::new(VdTree::Simplex));
    }
    if c.is_void() || c.is_irrelevant() {
        return Decision::No;
    }
    if c.dim() == Some(0) {
        return Decision::Yes(Arc::new(VdTree::Points));
    }
    if !c.is_pure() {
        return Decision::No;
    }
    if let Some(hit) = ctx.memo.get(c.facets()) {
        return hit.clone();
    }
    if ctx.budget == 0 {
        return Decision::Inconclusive;
    }
    ctx.budget -= 1;
    let d = c.dim().unwrap();
    // a VD complex is shellable, hence homotopy equivalent to a wedge of
    // d-spheres: any lower homology or torsion refutes
    {
        let h = reduced_homology(c);
        let bad = h
            .groups
            .iter()
            .enumerate()
            .any(|(k, g)| ((k as isize) < d && !g.is_trivial()) || !g.torsion.is_empty());
        if bad {
            ctx.memo.insert(c.facets().to_vec(), Decision::No);
            return Decision::No;
        }
    }
    let mut candidates: Vec<Vertex> = c.vertices().to_vec();
    if d == 3 && manifold_check(c).class == ManifoldClass::Ball3 {
        let boundary = c.boundary_complex().expect("pure");
        candidates.retain(|&v| boundary.has_vertex(v));
    }
    let mut scored: Vec<(usize, Vertex)> = candidates
        .into_iter()
        .map(|v| {
            let star = c.facets().iter().filter(|f| f.has_vertex(v)).count();
            (star, v)
        })
        .collect();
    scored.sort_unstable();
    let mut out = Decision::No;
    for (_, v) in scored {
        let del = c.delete(v).expect("vertex present");
        // shedding condition: deletion stays pure of the same dimension
        if del.dim() != Some(d) || !del.is_pure() {
            continue;
        }
        let link = c.link(&Simplex::vertex(v)).expect("vertex present");
        let link_d = match vd_rec(&link, ctx) {
            Decision::Yes(t) => t,
            Decision::No => continue,
            Decision::Inconclusive => {
                out = Decision::Inconclusive;
                continue;
            }
        };
        match vd_rec(&del, ctx) {
            Decision::Yes(t) => {
                let tree = Arc::new(VdTree::Node {
                    vertex: v,
                    link: link_d,
                    del: t,
                });
                let res = Decision::Yes(tree);
                ctx.memo.insert(c.facets().to_vec(), res.clone());
                return res;
            }
            Decision::No => {}
            Decision::Inconclusive => out = Decision::Inconclusive,
        }
    }
    if out == Decision::No {
        ctx.memo.insert(c.facets().to_vec(), Decision::No);
    }
    out
}

/// Replays a vertex-decomposability tree.
pub fn verify_vd_tree(c: &SimplicialComplex, tree: &VdTree) -> Result<(), TreeError> {
    verify_vd_at(c, tree, &mut Vec::new())
}

fn verify_vd_at(
    c: &SimplicialComplex,
    tree: &VdTree,
    path: &mut Vec<Vertex>,
) -> Result<(), TreeError> {
    match tree {
        VdTree::Simplex => {
            if c.is_simplex() {
                Ok(())
            } else {
                tree_err(path, "leaf is not a single simplex")
            }
        }
        VdTree::Points => {
            if c.dim() == Some(0) {
                Ok(())
            } else {
                tree_err(path, "leaf is not a disjoint union of points")
            }
        }
        VdTree::Node { vertex, link, del } => {
            if !c.is_pure() {
                return tree_err(path, "complex at node is not pure");
            }
            if !c.has_vertex(*vertex) {
                return tree_err(path, format!("vertex {vertex} not in the complex"));
            }
            let d = c.dim().unwrap();
            let deleted = c.delete(*vertex).expect("vertex present");
            if deleted.dim() != Some(d) || !deleted.is_pure() {
                return tree_err(
                    path,
                    format!("deletion of {vertex} is not pure {d}-dimensional"),
                );
            }
            path.push(*vertex);
            let l = c.link(&Simplex::vertex(*vertex)).expect("vertex present");
            verify_vd_at(&l, link, path)?;
            verify_vd_at(&deleted, del, path)?;
            path.pop();
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// shellability
// ---------------------------------------------------------------------------

/// Decides shellability of a pure complex by backtracking over facet orders,
/// memoizing refuted facet subsets. Exhaustive for small complexes, so `No`
/// is a genuine refutation; the budget caps visited states.
pub fn is_shellable(c: &SimplicialComplex, budget: u64) -> Decision<Vec<Simplex>> {
    if c.is_void() || c.is_irrelevant() {
        return Decision::No;
    }
    if !c.is_pure() {
        return Decision::No;
    }
    if c.dim() == Some(0) || c.is_simplex() {
        return Decision::Yes(c.facets().to_vec());
    }
    let facets = c.facets().to_vec();
    let n = facets.len();
    let d = c.dim().unwrap();
    // pairwise intersections, kept as vertex sets
    let inters: Vec<Vec<Simplex>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| facets[i].intersection(&facets[j]))
                .collect()
        })
        .collect();
    let words = n.div_ceil(64);
    let mut ctx = ShellCtx {
        facets: &facets,
        inters: &inters,
        d,
        failed: HashSet::new(),
        budget,
        order: Vec::with_capacity(n),
    };
    let mut state = vec![0u64; words];
    match shell_rec(&mut ctx, &mut state, 0) {
        ShellOutcome::Found => Decision::Yes(ctx.order.iter().map(|&i| facets[i].clone()).collect()),
        ShellOutcome::Exhausted => Decision::No,
        ShellOutcome::OutOfBudget => Decision::Inconclusive,
    }
}

struct ShellCtx<'a> {
    facets: &'a [Simplex],
    inters: &'a [Vec<Simplex>],
    d: isize,
    failed: HashSet<Vec<u64>>,
    budget: u64,
    order: Vec<usize>,
}

enum ShellOutcome {
    Found,
    Exhausted,
    OutOfBudget,
}

fn shell_rec(ctx: &mut ShellCtx, state: &mut Vec<u64>, placed: usize) -> ShellOutcome {
    let n = ctx.facets.len();
    if placed == n {
        return ShellOutcome::Found;
    }
    if ctx.failed.contains(state.as_slice()) {
        return ShellOutcome::Exhausted;
    }
    if ctx.budget == 0 {
        return ShellOutcome::OutOfBudget;
    }
    ctx.budget -= 1;
    let mut out_of_budget = false;
    for next in 0..n {
        if state[next / 64] >> (next % 64) & 1 == 1 {
            continue;
        }
        if placed > 0 && !shelling_step_ok(ctx, state, next) {
            continue;
        }
        state[next / 64] |= 1 << (next % 64);
        ctx.order.push(next);
        match shell_rec(ctx, state, placed + 1) {
            ShellOutcome::Found => return ShellOutcome::Found,
            ShellOutcome::OutOfBudget => out_of_budget = true,
            ShellOutcome::Exhausted => {}
        }
        ctx.order.pop();
        state[next / 64] &= !(1 << (next % 64));
    }
    if out_of_budget {
        ShellOutcome::OutOfBudget
    } else {
        ctx.failed.insert(state.clone());
        ShellOutcome::Exhausted
    }
}

/// The incremental shelling condition: the new facet must meet the union of
/// the placed ones in a nonempty pure (d−1)-complex that is itself shellable.
/// For simplices the intersection is a union of boundary ridges of the new
/// facet; its shellability is checked directly by a small recursive search.
fn shelling_step_ok(ctx: &ShellCtx, state: &[u64], next: usize) -> bool {
    let row = &ctx.inters[next];
    let mut ridges: Vec<&Simplex> = Vec::new();
    for j in 0..ctx.facets.len() {
        if j == next || state[j / 64] >> (j % 64) & 1 == 0 {
            continue;
        }
        if row[j].dim() == ctx.d - 1 {
            ridges.push(&row[j]);
        }
    }
    if ridges.is_empty() {
        return false;
    }
    // purity: every intersection with a placed facet lies under some ridge
    for j in 0..ctx.facets.len() {
        if j == next || state[j / 64] >> (j % 64) & 1 == 0 {
            continue;
        }
        let s = &row[j];
        if s.is_empty() {
            continue;
        }
        if !ridges.iter().any(|r| s.is_face_of(r)) {
            return false;
        }
    }
    if ctx.d == 1 {
        return true; // a nonempty set of vertices is shellable
    }
    ridges.sort_unstable();
    ridges.dedup();
    if ridges.len() == 1 {
        return true;
    }
    let small = SimplicialComplex::from_simplices(ridges.into_iter().cloned().collect());
    is_shellable(&small, 10_000).is_yes()
}

// ---------------------------------------------------------------------------
// constructibility (certificate verification only)
// ---------------------------------------------------------------------------

/// A constructibility certificate: a recursive splitting `C = C1 ∪ C2` with
/// both parts pure d-dimensional and the intersection a constructible
/// (d−1)-complex, down to simplices or disjoint unions of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructibilityTree {
    Simplex,
    Points,
    Split {
        /// Facets of the first part; the second part takes the rest.
        first: Vec<Simplex>,
        left: Box<ConstructibilityTree>,
        right: Box<ConstructibilityTree>,
        intersection: Box<ConstructibilityTree>,
    },
}

/// Checks every node's union/purity/intersection conditions recursively.
pub fn verify_constructibility(
    c: &SimplicialComplex,
    tree: &ConstructibilityTree,
) -> Result<(), TreeError> {
    verify_con_at(c, tree, &mut Vec::new())
}

fn verify_con_at(
    c: &SimplicialComplex,
    tree: &ConstructibilityTree,
    path: &mut Vec<Vertex>,
) -> Result<(), TreeError> {
    match tree {
        ConstructibilityTree::Simplex => {
            if c.is_simplex() {
                Ok(())
            } else {
                tree_err(path, "leaf is not a single simplex")
            }
        }
        ConstructibilityTree::Points => {
            if c.dim() == Some(0) {
                Ok(())
            } else {
                tree_err(path, "leaf is not a disjoint union of points")
            }
        }
        ConstructibilityTree::Split {
            first,
            left,
            right,
            intersection,
        } => {
            if !c.is_pure() {
                return tree_err(path, "complex at split is not pure");
            }
            let d = match c.dim() {
                Some(d) if d >= 1 => d,
                _ => return tree_err(path, "split requires dimension >= 1"),
            };
            let first_set: HashSet<&Simplex> = first.iter().collect();
            for f in first {
                if !c.is_facet(f) {
                    return tree_err(path, format!("{f} is not a facet of the complex"));
                }
            }
            let rest: Vec<Simplex> = c
                .facets()
                .iter()
                .filter(|f| !first_set.contains(f))
                .cloned()
                .collect();
            if first.is_empty() || rest.is_empty() {
                return tree_err(path, "split must be proper on both sides");
            }
            let c1 = SimplicialComplex::from_simplices(first.clone());
            let c2 = SimplicialComplex::from_simplices(rest);
            if c1.dim() != Some(d) || !c1.is_pure() || c2.dim() != Some(d) || !c2.is_pure() {
                return tree_err(path, "both parts must be pure of the same dimension");
            }
            let inter = c1.intersection(&c2);
            if inter.dim() != Some(d - 1) || !inter.is_pure() {
                return tree_err(
                    path,
                    format!("intersection must be pure of dimension {}", d - 1),
                );
            }
            verify_con_at(&c1, left, path)?;
            verify_con_at(&c2, right, path)?;
            verify_con_at(&inter, intersection, path)
        }
    }
}

/// Builds a constructibility certificate from a shelling order: each step
/// attaches one simplex, and the step intersections receive recursively
/// searched shelling certificates of their own.
pub fn constructibility_tree_from_shelling(
    order: &[Simplex],
) -> Option<ConstructibilityTree> {
    if order.is_empty() {
        return None;
    }
    if order.len() == 1 {
        return Some(ConstructibilityTree::Simplex);
    }
    let (last, init) = order.split_last().unwrap();
    let left = constructibility_tree_from_shelling(init)?;
    let c1 = SimplicialComplex::from_simplices(init.to_vec());
    let c2 = SimplicialComplex::simplex(last.clone());
    let inter = c1.intersection(&c2);
    let inter_tree = if inter.dim() == Some(0) {
        if inter.facet_count() == 1 {
            ConstructibilityTree::Simplex
        } else {
            ConstructibilityTree::Points
        }
    } else if inter.is_simplex() {
        ConstructibilityTree::Simplex
    } else {
        let sub_order = match is_shellable(&inter, 100_000) {
            Decision::Yes(o) => o,
            _ => return None,
        };
        constructibility_tree_from_shelling(&sub_order)?
    };
    Some(ConstructibilityTree::Split {
        first: c1.facets().to_vec(),
        left: Box::new(left),
        right: Box::new(ConstructibilityTree::Simplex),
        intersection: Box::new(inter_tree),
    })
}

impl fmt::Display for Decision<Arc<NeTree>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Yes(_) => write!(f, "non-evasive (tree found)"),
            Decision::No => write!(f, "evasive"),
            Decision::Inconclusive => write!(f, "inconclusive (budget exhausted)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn simplex_is_nonevasive() {
        let c = cx(&[&[1, 2, 3, 4]]);
        let d = is_nonevasive(&c, 1000);
        assert!(d.is_yes());
        verify_ne_tree(&c, d.witness().unwrap()).unwrap();
    }

    #[test]
    fn two_points_are_evasive() {
        assert_eq!(is_nonevasive(&cx(&[&[1], &[2]]), 1000), Decision::No);
    }

    #[test]
    fn sphere_is_evasive() {
        let s = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        assert_eq!(is_nonevasive(&s, 10_000), Decision::No);
    }

    #[test]
    fn disc_is_nonevasive_and_tree_verifies() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        let d = is_nonevasive(&c, 10_000);
        assert!(d.is_yes());
        verify_ne_tree(&c, d.witness().unwrap()).unwrap();
        // a bad tree is rejected with a path
        let bad = NeTree::Node {
            vertex: 3,
            link: Arc::new(NeTree::Simplex),
            del: Arc::new(NeTree::Simplex),
        };
        assert!(verify_ne_tree(&c, &bad).is_err());
    }

    #[test]
    fn deletion_order_tree() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        let d = ne_tree_from_deletion_order(&c, &[4, 3, 2, 1], 1000);
        assert!(d.is_yes());
        verify_ne_tree(&c, d.witness().unwrap()).unwrap();
    }

    #[test]
    fn scan_on_tetrahedron() {
        let c = cx(&[&[1, 2, 3, 4]]);
        let rows = evasiveness_scan(&c, 1);
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|(_, acyclic)| *acyclic));
        assert_eq!(rows[0].0, vec![1]);
    }

    #[test]
    fn vd_of_discs_spheres_and_points() {
        let disc = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        assert!(is_vertex_decomposable(&disc, 100_000).is_yes());
        // the boundary of a simplex is vertex-decomposable
        let sphere = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        let d = is_vertex_decomposable(&sphere, 100_000);
        assert!(d.is_yes());
        verify_vd_tree(&sphere, d.witness().unwrap()).unwrap();
        let points = cx(&[&[1], &[5], &[9]]);
        assert!(is_vertex_decomposable(&points, 10).is_yes());
        // an annulus has H_1 = Z, refuting the wedge condition
        let annulus = cx(&[
            &[1, 2, 4],
            &[2, 4, 5],
            &[2, 3, 5],
            &[3, 5, 6],
            &[1, 3, 6],
            &[1, 4, 6],
        ]);
        assert_eq!(is_vertex_decomposable(&annulus, 100_000), Decision::No);
    }

    #[test]
    fn vd_tree_verifies() {
        let disc = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        let d = is_vertex_decomposable(&disc, 10_000);
        let tree = d.witness().unwrap();
        verify_vd_tree(&disc, tree).unwrap();
    }

    #[test]
    fn shellable_examples() {
        assert!(is_shellable(&cx(&[&[1, 2, 3, 4]]), 1000).is_yes());
        let disc = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        let d = is_shellable(&disc, 100_000);
        assert!(d.is_yes());
        // two triangles meeting in a point are not shellable (intersection
        // has dimension 0, not 1)
        let pinched = cx(&[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(is_shellable(&pinched, 100_000), Decision::No);
    }

    #[test]
    fn sphere_is_shellable() {
        let s = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        assert!(is_shellable(&s, 100_000).is_yes());
    }

    #[test]
    fn constructibility_of_single_facet_and_bad_split() {
        let c = cx(&[&[1, 2, 3, 4]]);
        verify_constructibility(&c, &ConstructibilityTree::Simplex).unwrap();
        // a split whose intersection is 1-dimensional must be rejected
        let two = cx(&[&[1, 2, 3], &[1, 2, 4], &[3, 4, 5], &[3, 4, 6]]);
        let bad = ConstructibilityTree::Split {
            first: vec![
                Simplex::new(vec![1, 2, 3]).unwrap(),
                Simplex::new(vec![1, 2, 4]).unwrap(),
            ],
            left: Box::new(ConstructibilityTree::Simplex),
            right: Box::new(ConstructibilityTree::Simplex),
            intersection: Box::new(ConstructibilityTree::Simplex),
        };
        let err = verify_constructibility(&two, &bad);
        assert!(err.is_err());
    }

    #[test]
    fn shelling_order_to_constructibility_tree() {
        let disc = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        let order = is_shellable(&disc, 100_000);
        let tree = constructibility_tree_from_shelling(order.witness().unwrap()).unwrap();
        verify_constructibility(&disc, &tree).unwrap();
    }
}
