//! Finite simplicial complexes over integer-labeled vertices.
//!
//! A complex is stored by its facets (inclusion-maximal faces) in a canonical
//! order. Full face sets per dimension are derived lazily and cached; after
//! construction a complex is immutable and safe to share across threads.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

/// Vertex labels are arbitrary non-negative integers; they need not be contiguous.
pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet [{}] has a repeated vertex", fmt_verts(.0))]
    RepeatedVertex(Vec<Vertex>),
    #[error("empty facet is not allowed here")]
    EmptyFacet,
    #[error("{0} is not a face of the complex")]
    FaceAbsent(Simplex),
    #[error("vertex {0} is not a vertex of the complex")]
    VertexAbsent(Vertex),
    #[error("apex {0} is already a vertex of the complex")]
    ApexPresent(Vertex),
    #[error("operation requires a pure complex")]
    NotPure,
    #[error("operation requires a complex of dimension >= {0}")]
    DimensionTooSmall(isize),
}

fn fmt_verts(v: &[Vertex]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// A simplex, canonically a strictly increasing vertex sequence.
///
/// The empty simplex is allowed; it is the unique face of the irrelevant
/// complex `{∅}` and has dimension −1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds a simplex from the given vertices, sorting them. Repeated
    /// vertices are rejected.
    pub fn new(vertices: impl Into<Vec<Vertex>>) -> Result<Self, ComplexError> {
        let mut v = vertices.into();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::RepeatedVertex(v));
        }
        Ok(Simplex(v))
    }

    /// The empty simplex (dimension −1).
    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    /// Internal: caller guarantees sorted + distinct.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of vertices.
    pub fn card(&self) -> usize {
        self.0.len()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Subset test: is `self` a face of `other`?
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// The codimension-1 faces, in the order that omits vertices from last to first.
    pub fn boundary_faces(&self) -> Vec<Simplex> {
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                Simplex(v)
            })
            .collect()
    }

    /// All nonempty subsets.
    pub fn nonempty_subfaces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u32..(1 << n) {
            let v: Vec<Vertex> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.0[i])
                .collect();
            out.push(Simplex(v));
        }
        out
    }

    pub fn with_vertex(&self, v: Vertex) -> Result<Simplex, ComplexError> {
        if self.has_vertex(v) {
            return Err(ComplexError::RepeatedVertex(self.0.clone()));
        }
        let mut w = self.0.clone();
        let pos = w.partition_point(|&x| x < v);
        w.insert(pos, v);
        Ok(Simplex(w))
    }

    pub fn without_vertex(&self, v: Vertex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    /// Set difference `self ∖ other`.
    pub fn minus(&self, other: &Simplex) -> Simplex {
        Simplex(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.has_vertex(*v))
                .collect(),
        )
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(
            self.0
                .iter()
                .copied()
                .filter(|v| other.has_vertex(*v))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| !other.has_vertex(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: Vec<Vertex> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{}", fmt_verts(&self.0))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Face counts per dimension, `f_0 .. f_d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for FVector {
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

impl<const N: usize> PartialEq<[u64; N]> for FVector {
    fn eq(&self, other: &[u64; N]) -> bool {
        self.0 == other
    }
}

/// A finite simplicial complex, stored by its facets.
///
/// The void complex (no faces at all) and the irrelevant complex `{∅}` are
/// distinguished: the latter arises as the link of a facet and must not be
/// conflated with "no complex".
#[derive(Clone)]
pub struct SimplicialComplex {
    facets: Arc<Vec<Simplex>>,
    faces: OnceLock<Arc<Vec<Vec<Simplex>>>>,
    vertices: OnceLock<Arc<Vec<Vertex>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}
impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex{{")?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl SimplicialComplex {
    fn from_canonical(facets: Vec<Simplex>) -> Self {
        SimplicialComplex {
            facets: Arc::new(facets),
            faces: OnceLock::new(),
            vertices: OnceLock::new(),
        }
    }

    /// The void complex: no faces at all.
    pub fn void() -> Self {
        Self::from_canonical(Vec::new())
    }

    /// The irrelevant complex `{∅}`: a single empty face.
    pub fn irrelevant() -> Self {
        Self::from_canonical(vec![Simplex::empty()])
    }

    /// The full simplex on the given facet, as a complex.
    pub fn simplex(s: Simplex) -> Self {
        Self::from_canonical(vec![s])
    }

    /// Builds a complex whose maximal faces are the inclusion-maximal members
    /// of the input; duplicates and dominated faces are silently absorbed.
    /// An empty input yields the void complex. Facets must be nonempty and
    /// free of repeated vertices.
    pub fn from_facets<I, V>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<Vertex>>,
    {
        let mut sims = Vec::new();
        for f in facets {
            let s = Simplex::new(f)?;
            if s.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            sims.push(s);
        }
        Ok(Self::from_simplices(sims))
    }

    /// Like [`from_facets`](Self::from_facets) but from already-built simplices;
    /// dominated faces and duplicates are absorbed. Empty simplices are absorbed
    /// by anything else; an input of only empty simplices yields `{∅}`.
    pub fn from_simplices(mut sims: Vec<Simplex>) -> Self {
        sims.sort_unstable_by(|a, b| b.card().cmp(&a.card()).then_with(|| a.cmp(b)));
        sims.dedup();
        let mut maximal: Vec<Simplex> = Vec::with_capacity(sims.len());
        for s in sims {
            if !maximal.iter().any(|m| s.is_face_of(m)) {
                maximal.push(s);
            }
        }
        if maximal.len() > 1 {
            maximal.retain(|s| !s.is_empty());
        }
        maximal.sort_unstable();
        Self::from_canonical(maximal)
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension of the complex: `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|s| s.dim()).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(_) => {
                let d = self.dim().unwrap();
                self.facets.iter().all(|s| s.dim() == d)
            }
        }
    }

    /// Is the complex a single (nonempty) simplex with all its faces?
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && !self.facets[0].is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.vertices
            .get_or_init(|| {
                let set: BTreeSet<Vertex> = self
                    .facets
                    .iter()
                    .flat_map(|s| s.vertices().iter().copied())
                    .collect();
                Arc::new(set.into_iter().collect())
            })
            .as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices().binary_search(&v).is_ok()
    }

    /// All faces grouped by dimension (index = dimension). The empty face is
    /// not listed. Computed once and cached.
    pub fn faces_by_dim(&self) -> &[Vec<Simplex>] {
        self.faces
            .get_or_init(|| {
                let d = self.dim().unwrap_or(-1).max(-1);
                if d < 0 {
                    return Arc::new(Vec::new());
                }
                let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); d as usize + 1];
                for f in self.facets.iter() {
                    for sub in f.nonempty_subfaces() {
                        let k = sub.dim() as usize;
                        sets[k].insert(sub);
                    }
                }
                let mut out = Vec::with_capacity(sets.len());
                for set in sets {
                    let mut v: Vec<Simplex> = set.into_iter().collect();
                    v.sort_unstable();
                    out.push(v);
                }
                Arc::new(out)
            })
            .as_ref()
    }

    pub fn faces_of_dim(&self, k: usize) -> &[Simplex] {
        let all = self.faces_by_dim();
        if k < all.len() {
            &all[k]
        } else {
            &[]
        }
    }

    /// Membership test for a nonempty simplex (the empty face belongs to every
    /// nonvoid complex).
    pub fn contains(&self, s: &Simplex) -> bool {
        if s.is_empty() {
            return !self.is_void();
        }
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    pub fn is_facet(&self, s: &Simplex) -> bool {
        self.facets.binary_search(s).is_ok()
    }

    /// Exact face counts per dimension.
    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_dim().iter().map(|v| v.len() as u64).collect())
    }

    /// Unreduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// The complex generated by all (d−1)-faces contained in exactly one
    /// facet. Empty for closed pseudomanifolds. Requires a pure complex of
    /// dimension ≥ 1.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let d = self.dim().unwrap_or(-1);
        if d < 1 {
            return Err(ComplexError::DimensionTooSmall(1));
        }
        let mut count: HashMap<Simplex, u32> = HashMap::new();
        for f in self.facets.iter() {
            for b in f.boundary_faces() {
                *count.entry(b).or_insert(0) += 1;
            }
        }
        let ridges: Vec<Simplex> = count
            .into_iter()
            .filter_map(|(s, c)| (c == 1).then_some(s))
            .collect();
        Ok(Self::from_simplices(ridges))
    }

    /// `{ t : t ∩ s = ∅ and t ∪ s ∈ C }`. The link of a facet is `{∅}`.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains(s) {
            return Err(ComplexError::FaceAbsent(s.clone()));
        }
        let gens: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| s.is_face_of(f))
            .map(|f| f.minus(s))
            .collect();
        Ok(Self::from_simplices(gens))
    }

    /// All faces of the complex not containing `v` (the full subcomplex on the
    /// remaining vertices). Equivalently, the complex minus the open star of `v`.
    pub fn delete(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        if !self.has_vertex(v) {
            return Err(ComplexError::VertexAbsent(v));
        }
        Ok(self.delete_face(&Simplex::vertex(v)))
    }

    /// Iterated deletion of a set of vertices; vertices must all be present.
    pub fn delete_all(&self, vs: &[Vertex]) -> Result<SimplicialComplex, ComplexError> {
        for &v in vs {
            if !self.has_vertex(v) {
                return Err(ComplexError::VertexAbsent(v));
            }
        }
        let mut gens = Vec::new();
        for f in self.facets.iter() {
            let keep: Vec<Vertex> = f
                .vertices()
                .iter()
                .copied()
                .filter(|v| !vs.contains(v))
                .collect();
            if !keep.is_empty() {
                gens.push(Simplex::from_sorted(keep));
            }
        }
        Ok(Self::from_simplices(gens))
    }

    /// The complex minus the open star of the face `s`: all faces not
    /// containing `s` as a subset.
    pub fn delete_face(&self, s: &Simplex) -> SimplicialComplex {
        let mut gens = Vec::new();
        for f in self.facets.iter() {
            if !s.is_face_of(f) {
                gens.push(f.clone());
            } else {
                for &v in s.vertices() {
                    let g = f.without_vertex(v);
                    if !g.is_empty() {
                        gens.push(g);
                    }
                }
            }
        }
        Self::from_simplices(gens)
    }

    /// All faces contained in some facet containing `v`.
    pub fn closed_star(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        if !self.has_vertex(v) {
            return Err(ComplexError::VertexAbsent(v));
        }
        let gens: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| f.has_vertex(v))
            .cloned()
            .collect();
        Ok(Self::from_simplices(gens))
    }

    /// `{ s ∪ {apex} : s ∈ C } ∪ C`. The apex must be a fresh vertex.
    pub fn cone(&self, apex: Vertex) -> Result<SimplicialComplex, ComplexError> {
        if self.has_vertex(apex) {
            return Err(ComplexError::ApexPresent(apex));
        }
        let gens: Vec<Simplex> = self
            .facets
            .iter()
            .map(|f| f.with_vertex(apex).expect("apex is fresh"))
            .collect();
        Ok(Self::from_simplices(gens))
    }

    /// Facet-list union of two complexes.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let gens: Vec<Simplex> = self
            .facets
            .iter()
            .chain(other.facets.iter())
            .cloned()
            .collect();
        Self::from_simplices(gens)
    }

    /// Intersection: the complex of faces common to both.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut gens = Vec::new();
        for f in self.facets.iter() {
            for g in other.facets.iter() {
                let i = f.intersection(g);
                if !i.is_empty() {
                    gens.push(i);
                }
            }
        }
        Self::from_simplices(gens)
    }

    /// Barycentric subdivision with its deterministic labeling: new vertex `i`
    /// corresponds to `face_labels[i]`, where faces are sorted by dimension,
    /// then lexicographically.
    pub fn barycentric_subdivision(&self) -> Subdivision {
        let mut face_labels: Vec<Simplex> = Vec::new();
        for dimfaces in self.faces_by_dim() {
            face_labels.extend(dimfaces.iter().cloned());
        }
        let index: HashMap<&Simplex, Vertex> = face_labels
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as Vertex))
            .collect();
        // facets of the subdivision = maximal chains = one flag per permutation
        // of each facet's vertex set
        let mut flags: Vec<Simplex> = Vec::new();
        for f in self.facets.iter() {
            let verts = f.vertices().to_vec();
            permute(&verts, &mut |perm| {
                let mut chain: Vec<Vertex> = Vec::with_capacity(perm.len());
                let mut prefix: Vec<Vertex> = Vec::with_capacity(perm.len());
                for &v in perm {
                    let pos = prefix.partition_point(|&x| x < v);
                    prefix.insert(pos, v);
                    chain.push(index[&Simplex(prefix.clone())]);
                }
                chain.sort_unstable();
                flags.push(Simplex(chain));
            });
        }
        Subdivision {
            complex: Self::from_simplices(flags),
            face_labels,
        }
    }

    /// Shorthand for the subdivision complex alone.
    pub fn sd(&self) -> SimplicialComplex {
        self.barycentric_subdivision().complex
    }

    /// Is the 1-skeleton connected? Void and `{∅}` count as connected.
    pub fn is_connected(&self) -> bool {
        let verts = self.vertices();
        if verts.len() <= 1 {
            return true;
        }
        let idx: HashMap<Vertex, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu: Vec<usize> = (0..verts.len()).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        for f in self.facets.iter() {
            let vs = f.vertices();
            for w in vs.windows(2) {
                let (a, b) = (find(&mut dsu, idx[&w[0]]), find(&mut dsu, idx[&w[1]]));
                dsu[a] = b;
            }
        }
        let root = find(&mut dsu, 0);
        (1..verts.len()).all(|i| find(&mut dsu, i) == root)
    }

    /// SHA-256 of the canonical text emission; used to pin complexes in logs.
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(crate::io::emit_cplx(self).as_bytes());
        let out = h.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// A barycentric subdivision together with its face labeling.
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `face_labels[i]` is the face of the original complex represented by the
    /// subdivision vertex `i`.
    pub face_labels: Vec<Simplex>,
}

/// Heap's algorithm, calling `f` on each permutation.
fn permute(items: &[Vertex], f: &mut impl FnMut(&[Vertex])) {
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn tetrahedron_f_vector() {
        let c = cx(&[&[1, 2, 3, 4]]);
        assert_eq!(c.f_vector(), [4, 6, 4, 1]);
    }

    #[test]
    fn dominated_faces_absorbed() {
        let c = cx(&[&[1, 2], &[1, 2, 3]]);
        assert_eq!(c.facets(), &[Simplex::new(vec![1, 2, 3]).unwrap()]);
    }

    #[test]
    fn malformed_facet_rejected() {
        let err = SimplicialComplex::from_facets(vec![vec![1, 2, 2]]).unwrap_err();
        assert_eq!(err, ComplexError::RepeatedVertex(vec![1, 2, 2]));
    }

    #[test]
    fn void_vs_irrelevant() {
        let void = SimplicialComplex::from_facets(Vec::<Vec<Vertex>>::new()).unwrap();
        assert!(void.is_void());
        assert_eq!(void.dim(), None);
        let irr = SimplicialComplex::irrelevant();
        assert!(irr.is_irrelevant());
        assert_eq!(irr.dim(), Some(-1));
        assert_ne!(void, irr);
    }

    #[test]
    fn boundary_of_tetrahedron() {
        let c = cx(&[&[1, 2, 3, 4]]);
        let b = c.boundary_complex().unwrap();
        assert_eq!(b.f_vector(), [4, 6, 4]);
        // boundary of a closed pseudomanifold is empty
        assert!(b.boundary_complex().unwrap().is_void());
    }

    #[test]
    fn boundary_requires_pure() {
        let c = cx(&[&[1, 2, 3], &[3, 4]]);
        assert_eq!(c.boundary_complex().unwrap_err(), ComplexError::NotPure);
    }

    #[test]
    fn cone_identities() {
        let c = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        let cone = c.cone(9).unwrap();
        assert_eq!(cone.f_vector(), [4, 6, 3]);
        // link of the apex recovers the base
        assert_eq!(cone.link(&Simplex::vertex(9)).unwrap(), c);
        // deleting the apex recovers the base
        assert_eq!(cone.delete(9).unwrap(), c);
        // star of the apex is the whole cone
        assert_eq!(cone.closed_star(9).unwrap(), cone);
        assert_eq!(c.cone(1).unwrap_err(), ComplexError::ApexPresent(1));
    }

    #[test]
    fn link_of_facet_is_irrelevant() {
        let c = cx(&[&[1, 2, 3]]);
        let l = c.link(&Simplex::new(vec![1, 2, 3]).unwrap()).unwrap();
        assert!(l.is_irrelevant());
        let err = c.link(&Simplex::new(vec![4]).unwrap()).unwrap_err();
        assert!(matches!(err, ComplexError::FaceAbsent(_)));
    }

    #[test]
    fn sd_of_tetrahedron() {
        let c = cx(&[&[1, 2, 3, 4]]);
        let sd = c.sd();
        assert_eq!(sd.vertex_count(), 15);
        assert_eq!(sd.facet_count(), 24);
        // flags of the boundary complex
        let sdb = c.boundary_complex().unwrap().sd();
        assert_eq!(sdb.vertex_count(), 14);
        assert_eq!(sdb.facet_count(), 24);
    }

    #[test]
    fn sd_labels_deterministic() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        let s1 = c.barycentric_subdivision();
        let s2 = c.barycentric_subdivision();
        assert_eq!(s1.face_labels, s2.face_labels);
        assert_eq!(s1.complex, s2.complex);
        assert_eq!(s1.face_labels.len() as u64, c.f_vector().total());
    }

    #[test]
    fn delete_face_removes_open_star() {
        let c = cx(&[&[1, 2, 3, 4]]);
        let d = c.delete_face(&Simplex::new(vec![1, 2, 3, 4]).unwrap());
        assert_eq!(d.f_vector(), [4, 6, 4]);
        let e = c.delete(1).unwrap();
        assert_eq!(e.f_vector(), [3, 3, 1]);
        assert_eq!(c.delete(7).unwrap_err(), ComplexError::VertexAbsent(7));
    }

    #[test]
    fn intersection_of_two_tetrahedra() {
        let a = cx(&[&[1, 2, 3, 4]]);
        let b = cx(&[&[2, 3, 4, 5]]);
        assert_eq!(a.intersection(&b), cx(&[&[2, 3, 4]]));
    }
}
