//! Bistellar (Pachner) moves on closed triangulated 3-manifolds, with
//! protected-subcomplex constraints, and a simulated-annealing reducer that
//! minimizes (f_0, f_3) lexicographically.

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipKind {
    /// Subdivide a tetrahedron with a new vertex.
    OneFour,
    /// Replace the two tetrahedra on a triangle by three around the opposite edge.
    TwoThree,
    /// Replace the three tetrahedra around an edge by two on the opposite triangle.
    ThreeTwo,
    /// Remove a degree-4 vertex.
    FourOne,
}

impl fmt::Display for FlipKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlipKind::OneFour => write!(f, "1-4"),
            FlipKind::TwoThree => write!(f, "2-3"),
            FlipKind::ThreeTwo => write!(f, "3-2"),
            FlipKind::FourOne => write!(f, "4-1"),
        }
    }
}

impl std::str::FromStr for FlipKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1-4" => Ok(FlipKind::OneFour),
            "2-3" => Ok(FlipKind::TwoThree),
            "3-2" => Ok(FlipKind::ThreeTwo),
            "4-1" => Ok(FlipKind::FourOne),
            other => Err(format!("unknown move kind {other:?}")),
        }
    }
}

/// A bistellar move, determined by its pivot face (a facet for 1-4, a
/// triangle for 2-3, an edge for 3-2, a vertex for 4-1) plus the new vertex
/// label for 1-4 moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipMove {
    pub kind: FlipKind,
    pub pivot: Simplex,
    pub new_vertex: Option<Vertex>,
}

impl fmt::Display for FlipMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.pivot)?;
        if let Some(v) = self.new_vertex {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// A replayable move log pinned to its endpoints by content hashes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipLog {
    pub initial_hash: String,
    pub final_hash: String,
    pub moves: Vec<FlipMove>,
}

#[derive(Debug, Error)]
pub enum FlipError {
    #[error("input is not a closed pure connected 3-complex: {0}")]
    NotClosed(String),
    #[error("illegal move {mv}: {reason}")]
    Illegal { mv: String, reason: String },
    #[error("log step {index} ({mv}): {reason}")]
    IllegalStep {
        index: usize,
        mv: String,
        reason: String,
    },
    #[error("protected edge {0} is not an edge of the complex")]
    ProtectedEdgeAbsent(Simplex),
    #[error("{which} hash mismatch: log has {expected}, complex has {actual}")]
    HashMismatch {
        which: &'static str,
        expected: String,
        actual: String,
    },
}

type Tet = [Vertex; 4];
type Tri = [Vertex; 3];
type Edge = [Vertex; 2];

/// Incremental state for a closed 3-manifold triangulation.
struct Triangulation {
    tets: BTreeSet<Tet>,
    /// triangle -> opposite vertices of the tets containing it
    tri_opp: BTreeMap<Tri, BTreeSet<Vertex>>,
    /// edge -> opposite edges of the tets containing it (the link graph)
    edge_link: BTreeMap<Edge, BTreeSet<Edge>>,
    /// vertex -> number of tets containing it
    vert_deg: BTreeMap<Vertex, u32>,
}

fn tet_of(s: &Simplex) -> Option<Tet> {
    let v = s.vertices();
    (v.len() == 4).then(|| [v[0], v[1], v[2], v[3]])
}

impl Triangulation {
    fn from_complex(c: &SimplicialComplex) -> Result<Self, FlipError> {
        if c.dim() != Some(3) || !c.is_pure() {
            return Err(FlipError::NotClosed("not pure 3-dimensional".into()));
        }
        if !c.is_connected() {
            return Err(FlipError::NotClosed("not connected".into()));
        }
        let mut t = Triangulation {
            tets: BTreeSet::new(),
            tri_opp: BTreeMap::new(),
            edge_link: BTreeMap::new(),
            vert_deg: BTreeMap::new(),
        };
        for f in c.facets() {
            t.insert(tet_of(f).expect("pure 3-complex"));
        }
        if let Some((tri, opp)) = t.tri_opp.iter().find(|(_, o)| o.len() != 2) {
            return Err(FlipError::NotClosed(format!(
                "triangle {} {} {} lies in {} tetrahedra",
                tri[0],
                tri[1],
                tri[2],
                opp.len()
            )));
        }
        Ok(t)
    }

    fn insert(&mut self, tet: Tet) {
        assert!(self.tets.insert(tet), "duplicate tetrahedron");
        for i in 0..4 {
            let mut tri = [0; 3];
            let mut k = 0;
            for j in 0..4 {
                if j != i {
                    tri[k] = tet[j];
                    k += 1;
                }
            }
            self.tri_opp.entry(tri).or_default().insert(tet[i]);
        }
        for i in 0..4 {
            for j in i + 1..4 {
                let e = [tet[i], tet[j]];
                let mut opp = [0; 2];
                let mut k = 0;
                for (l, &v) in tet.iter().enumerate() {
                    if l != i && l != j {
                        opp[k] = v;
                        k += 1;
                    }
                }
                self.edge_link.entry(e).or_default().insert(opp);
            }
            *self.vert_deg.entry(tet[i]).or_insert(0) += 1;
        }
    }

    fn remove(&mut self, tet: &Tet) {
        assert!(self.tets.remove(tet), "removing absent tetrahedron");
        for i in 0..4 {
            let mut tri = [0; 3];
            let mut k = 0;
            for j in 0..4 {
                if j != i {
                    tri[k] = tet[j];
                    k += 1;
                }
            }
            let set = self.tri_opp.get_mut(&tri).unwrap();
            set.remove(&tet[i]);
            if set.is_empty() {
                self.tri_opp.remove(&tri);
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                let e = [tet[i], tet[j]];
                let mut opp = [0; 2];
                let mut k = 0;
                for (l, &v) in tet.iter().enumerate() {
                    if l != i && l != j {
                        opp[k] = v;
                        k += 1;
                    }
                }
                let set = self.edge_link.get_mut(&e).unwrap();
                set.remove(&opp);
                if set.is_empty() {
                    self.edge_link.remove(&e);
                }
            }
            let d = self.vert_deg.get_mut(&tet[i]).unwrap();
            *d -= 1;
            if *d == 0 {
                self.vert_deg.remove(&tet[i]);
            }
        }
    }

    fn has_edge(&self, e: Edge) -> bool {
        self.edge_link.contains_key(&e)
    }

    fn has_triangle(&self, t: Tri) -> bool {
        self.tri_opp.contains_key(&t)
    }

    fn f_counts(&self) -> (u64, u64) {
        (self.vert_deg.len() as u64, self.tets.len() as u64)
    }

    fn smallest_unused_vertex(&self) -> Vertex {
        let mut v = 0;
        for &u in self.vert_deg.keys() {
            if u > v {
                break;
            }
            v = u + 1;
        }
        v
    }

    /// The star of a degree-4 vertex as (link vertices, the 4 tets), when the
    /// link is the boundary of a tetrahedron.
    fn degree4_star(&self, v: Vertex) -> Option<(Tet, Vec<Tet>)> {
        if self.vert_deg.get(&v) != Some(&4) {
            return None;
        }
        let star: Vec<Tet> = self
            .tets
            .iter()
            .filter(|t| t.contains(&v))
            .copied()
            .collect();
        let mut others = BTreeSet::new();
        for t in &star {
            for &u in t {
                if u != v {
                    others.insert(u);
                }
            }
        }
        if others.len() != 4 {
            return None;
        }
        let o: Vec<Vertex> = others.into_iter().collect();
        Some(([o[0], o[1], o[2], o[3]], star))
    }

    fn check_legal(&self, m: &FlipMove, protected: &[Edge]) -> Result<MoveData, String> {
        let pv = m.pivot.vertices();
        match m.kind {
            FlipKind::OneFour => {
                if pv.len() != 4 {
                    return Err("pivot of a 1-4 move must be a tetrahedron".into());
                }
                let tet = [pv[0], pv[1], pv[2], pv[3]];
                if !self.tets.contains(&tet) {
                    return Err("pivot tetrahedron not in the complex".into());
                }
                let Some(nv) = m.new_vertex else {
                    return Err("1-4 move needs a new vertex label".into());
                };
                if self.vert_deg.contains_key(&nv) {
                    return Err(format!("new vertex {nv} is already used"));
                }
                Ok(MoveData::OneFour { tet, nv })
            }
            FlipKind::TwoThree => {
                if pv.len() != 3 {
                    return Err("pivot of a 2-3 move must be a triangle".into());
                }
                let tri = [pv[0], pv[1], pv[2]];
                let Some(opp) = self.tri_opp.get(&tri) else {
                    return Err("pivot triangle not in the complex".into());
                };
                if opp.len() != 2 {
                    return Err(format!("pivot triangle lies in {} tetrahedra", opp.len()));
                }
                let o: Vec<Vertex> = opp.iter().copied().collect();
                let e = [o[0], o[1]];
                if self.has_edge(e) {
                    return Err(format!("opposite edge {} {} already present", e[0], e[1]));
                }
                Ok(MoveData::TwoThree { tri, apexes: e })
            }
            FlipKind::ThreeTwo => {
                if pv.len() != 2 {
                    return Err("pivot of a 3-2 move must be an edge".into());
                }
                let e = [pv[0], pv[1]];
                if protected.contains(&e) {
                    return Err("pivot edge is protected".into());
                }
                let Some(link) = self.edge_link.get(&e) else {
                    return Err("pivot edge not in the complex".into());
                };
                if link.len() != 3 {
                    return Err(format!("pivot edge lies in {} tetrahedra", link.len()));
                }
                let mut verts = BTreeSet::new();
                for le in link {
                    verts.insert(le[0]);
                    verts.insert(le[1]);
                }
                if verts.len() != 3 {
                    return Err("edge link is not a 3-cycle".into());
                }
                let v: Vec<Vertex> = verts.into_iter().collect();
                let tri = [v[0], v[1], v[2]];
                if self.has_triangle(tri) {
                    return Err(format!(
                        "opposite triangle {} {} {} already present",
                        tri[0], tri[1], tri[2]
                    ));
                }
                Ok(MoveData::ThreeTwo { edge: e, tri })
            }
            FlipKind::FourOne => {
                if pv.len() != 1 {
                    return Err("pivot of a 4-1 move must be a vertex".into());
                }
                let v = pv[0];
                if protected.iter().any(|e| e.contains(&v)) {
                    return Err(format!("vertex {v} is an endpoint of a protected edge"));
                }
                let Some((others, star)) = self.degree4_star(v) else {
                    return Err(format!("vertex {v} does not have tetrahedral link"));
                };
                if self.tets.contains(&others) {
                    return Err("replacement tetrahedron already present".into());
                }
                Ok(MoveData::FourOne { others, star })
            }
        }
    }

    fn apply(&mut self, data: &MoveData) {
        match data {
            MoveData::OneFour { tet, nv } => {
                self.remove(&tet.clone());
                for i in 0..4 {
                    let mut t = [0; 4];
                    let mut k = 0;
                    for j in 0..4 {
                        if j != i {
                            t[k] = tet[j];
                            k += 1;
                        }
                    }
                    t[3] = *nv;
                    t.sort_unstable();
                    self.insert(t);
                }
            }
            MoveData::TwoThree { tri, apexes } => {
                for &a in apexes {
                    let mut t = [tri[0], tri[1], tri[2], a];
                    t.sort_unstable();
                    self.remove(&t);
                }
                for i in 0..3 {
                    let mut t = [0; 4];
                    let mut k = 0;
                    for j in 0..3 {
                        if j != i {
                            t[k] = tri[j];
                            k += 1;
                        }
                    }
                    t[2] = apexes[0];
                    t[3] = apexes[1];
                    t.sort_unstable();
                    self.insert(t);
                }
            }
            MoveData::ThreeTwo { edge, tri } => {
                for i in 0..3 {
                    let mut t = [0; 4];
                    let mut k = 0;
                    for j in 0..3 {
                        if j != i {
                            t[k] = tri[j];
                            k += 1;
                        }
                    }
                    t[2] = edge[0];
                    t[3] = edge[1];
                    t.sort_unstable();
                    self.remove(&t);
                }
                for &a in edge {
                    let mut t = [tri[0], tri[1], tri[2], a];
                    t.sort_unstable();
                    self.insert(t);
                }
            }
            MoveData::FourOne { others, star, .. } => {
                for t in star {
                    self.remove(t);
                }
                self.insert(*others);
            }
        }
    }

    fn to_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.tets.iter().map(|t| t.to_vec()))
            .expect("tets are valid simplices")
    }

    /// All legal moves under the protection constraints, in deterministic order.
    fn legal_moves(&self, protected: &[Edge], allow_insert: bool) -> Vec<FlipMove> {
        let mut out = Vec::new();
        if allow_insert {
            let nv = self.smallest_unused_vertex();
            for t in &self.tets {
                out.push(FlipMove {
                    kind: FlipKind::OneFour,
                    pivot: Simplex::new(t.to_vec()).unwrap(),
                    new_vertex: Some(nv),
                });
            }
        }
        for (tri, opp) in &self.tri_opp {
            if opp.len() == 2 {
                let o: Vec<Vertex> = opp.iter().copied().collect();
                if !self.has_edge([o[0], o[1]]) {
                    out.push(FlipMove {
                        kind: FlipKind::TwoThree,
                        pivot: Simplex::new(tri.to_vec()).unwrap(),
                        new_vertex: None,
                    });
                }
            }
        }
        for (edge, link) in &self.edge_link {
            if link.len() != 3 || protected.contains(edge) {
                continue;
            }
            let mut verts = BTreeSet::new();
            for le in link {
                verts.insert(le[0]);
                verts.insert(le[1]);
            }
            if verts.len() != 3 {
                continue;
            }
            let v: Vec<Vertex> = verts.into_iter().collect();
            if !self.has_triangle([v[0], v[1], v[2]]) {
                out.push(FlipMove {
                    kind: FlipKind::ThreeTwo,
                    pivot: Simplex::new(edge.to_vec()).unwrap(),
                    new_vertex: None,
                });
            }
        }
        for (&v, &deg) in &self.vert_deg {
            if deg != 4 || protected.iter().any(|e| e.contains(&v)) {
                continue;
            }
            if let Some((others, _)) = self.degree4_star(v) {
                if !self.tets.contains(&others) {
                    out.push(FlipMove {
                        kind: FlipKind::FourOne,
                        pivot: Simplex::vertex(v),
                        new_vertex: None,
                    });
                }
            }
        }
        out
    }
}

enum MoveData {
    OneFour { tet: Tet, nv: Vertex },
    TwoThree { tri: Tri, apexes: Edge },
    ThreeTwo { edge: Edge, tri: Tri },
    FourOne { others: Tet, star: Vec<Tet> },
}

fn protected_edges(protected: &[Simplex]) -> Result<Vec<Edge>, FlipError> {
    protected
        .iter()
        .map(|s| {
            let v = s.vertices();
            if v.len() == 2 {
                Ok([v[0], v[1]])
            } else {
                Err(FlipError::ProtectedEdgeAbsent(s.clone()))
            }
        })
        .collect()
}

/// All legal moves of a closed triangulation; moves that would remove a
/// protected edge (3-2 on it) or delete one of its endpoints (4-1) are
/// excluded. 1-4 moves are listed with the smallest unused vertex label.
pub fn legal_moves(
    s: &SimplicialComplex,
    protected: &[Simplex],
) -> Result<Vec<FlipMove>, FlipError> {
    let t = Triangulation::from_complex(s)?;
    let prot = protected_edges(protected)?;
    Ok(t.legal_moves(&prot, true))
}

/// Applies one move, validating its legality.
pub fn apply_move(s: &SimplicialComplex, m: &FlipMove) -> Result<SimplicialComplex, FlipError> {
    let mut t = Triangulation::from_complex(s)?;
    let data = t.check_legal(m, &[]).map_err(|reason| FlipError::Illegal {
        mv: m.to_string(),
        reason,
    })?;
    t.apply(&data);
    Ok(t.to_complex())
}

/// Annealing schedule parameters; geometric cooling with heating bursts on
/// stagnation. All values can be overridden from a key=value config file via
/// the CLI.
#[derive(Debug, Clone)]
pub struct AnnealParams {
    /// Initial temperature for accepting f-raising 2-3 moves.
    pub t0: f64,
    /// Geometric cooling factor per step.
    pub cooling: f64,
    /// Steps without improvement before a heating burst and temperature reset.
    pub plateau: u64,
    /// Length of the first heating burst.
    pub heat_base: u64,
    /// Multiplicative growth of the burst on consecutive stagnations.
    pub heat_growth: f64,
}

impl Default for AnnealParams {
    fn default() -> Self {
        AnnealParams {
            t0: 1.2,
            cooling: 0.9995,
            plateau: 400,
            heat_base: 6,
            heat_growth: 1.4,
        }
    }
}

/// Result of a [`reduce`] run.
#[derive(Debug)]
pub struct ReduceOutcome {
    /// Replayable log from the input to the best complex reached.
    pub log: FlipLog,
    /// The best (lexicographically minimal (f_0, f_3)) complex reached.
    pub complex: SimplicialComplex,
    /// Whether the boundary of the 4-simplex was reached.
    pub reached_minimum: bool,
    pub steps: u64,
}

/// Simulated annealing minimizing (f_0, f_3) lexicographically with greedy
/// preference 4-1 > 3-2 > 2-3 and temperature-controlled acceptance of
/// f-raising moves. Honors protected edges and the insertion flag. On budget
/// exhaustion the log of the best complex seen is returned.
pub fn reduce(
    s: &SimplicialComplex,
    seed: u64,
    budget: u64,
    protected: &[Simplex],
    allow_insert: bool,
    params: &AnnealParams,
) -> Result<ReduceOutcome, FlipError> {
    let mut t = Triangulation::from_complex(s)?;
    let prot = protected_edges(protected)?;
    for e in &prot {
        if !t.has_edge(*e) {
            return Err(FlipError::ProtectedEdgeAbsent(
                Simplex::new(e.to_vec()).unwrap(),
            ));
        }
    }
    let initial_hash = s.content_hash();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moves: Vec<FlipMove> = Vec::new();
    let mut best = t.f_counts();
    let mut best_len = 0usize;
    let mut since_best = 0u64;
    let mut heating = 0u64;
    let mut burst = params.heat_base as f64;
    let mut temp = params.t0;
    let mut steps = 0u64;
    let minimum = (5, 5);
    while steps < budget && best != minimum {
        steps += 1;
        temp *= params.cooling;
        let mv = if heating > 0 {
            heating -= 1;
            pick(&t.legal_moves(&prot, allow_insert), FlipKind::TwoThree, &mut rng)
                .or_else(|| pick(&t.legal_moves(&prot, allow_insert), FlipKind::ThreeTwo, &mut rng))
        } else {
            let all = t.legal_moves(&prot, false);
            pick(&all, FlipKind::FourOne, &mut rng)
                .or_else(|| pick(&all, FlipKind::ThreeTwo, &mut rng))
                .or_else(|| {
                    let accept = rng.gen::<f64>() < (-1.0 / temp.max(1e-9)).exp();
                    if accept {
                        pick(&all, FlipKind::TwoThree, &mut rng)
                    } else {
                        None
                    }
                })
                .or_else(|| {
                    if allow_insert {
                        pick(&t.legal_moves(&prot, true), FlipKind::OneFour, &mut rng)
                            .filter(|_| rng.gen::<f64>() < (-3.0 / temp.max(1e-9)).exp())
                    } else {
                        None
                    }
                })
        };
        if let Some(m) = mv {
            let data = t
                .check_legal(&m, &prot)
                .expect("enumerated moves are legal");
            t.apply(&data);
            moves.push(m);
            let f = t.f_counts();
            if f < best {
                best = f;
                best_len = moves.len();
                since_best = 0;
            } else {
                since_best += 1;
            }
        } else {
            since_best += 1;
        }
        if since_best > params.plateau {
            heating = burst as u64;
            burst *= params.heat_growth;
            temp = params.t0;
            since_best = 0;
        }
    }
    moves.truncate(best_len);
    // rebuild the best complex by replaying the truncated log
    let mut tb = Triangulation::from_complex(s)?;
    for m in &moves {
        let data = tb.check_legal(m, &[]).expect("log moves are legal");
        tb.apply(&data);
    }
    let complex = tb.to_complex();
    let final_hash = complex.content_hash();
    Ok(ReduceOutcome {
        log: FlipLog {
            initial_hash,
            final_hash,
            moves,
        },
        reached_minimum: best == minimum,
        complex,
        steps,
    })
}

fn pick<R: Rng>(all: &[FlipMove], kind: FlipKind, rng: &mut R) -> Option<FlipMove> {
    let cand: Vec<&FlipMove> = all.iter().filter(|m| m.kind == kind).collect();
    if cand.is_empty() {
        None
    } else {
        Some(cand[rng.gen_range(0..cand.len())].clone())
    }
}

/// Deterministically replays a log; the initial and final hashes must match.
pub fn replay(s: &SimplicialComplex, log: &FlipLog) -> Result<SimplicialComplex, FlipError> {
    let actual = s.content_hash();
    if actual != log.initial_hash {
        return Err(FlipError::HashMismatch {
            which: "initial",
            expected: log.initial_hash.clone(),
            actual,
        });
    }
    let mut t = Triangulation::from_complex(s)?;
    for (index, m) in log.moves.iter().enumerate() {
        let data = t
            .check_legal(m, &[])
            .map_err(|reason| FlipError::IllegalStep {
                index,
                mv: m.to_string(),
                reason,
            })?;
        t.apply(&data);
    }
    let out = t.to_complex();
    let actual = out.content_hash();
    if actual != log.final_hash {
        return Err(FlipError::HashMismatch {
            which: "final",
            expected: log.final_hash.clone(),
            actual,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere_d4() -> SimplicialComplex {
        SimplicialComplex::from_facets(vec![vec![0u32, 1, 2, 3, 4]])
            .unwrap()
            .boundary_complex()
            .unwrap()
    }

    #[test]
    fn moves_on_boundary_of_4_simplex() {
        let s = sphere_d4();
        let moves = legal_moves(&s, &[]).unwrap();
        // only the five 1-4 moves are legal: every 2-3 is blocked by the
        // present opposite edge, every 3-2 by the present opposite triangle,
        // and every 4-1 by the present replacement tetrahedron
        assert_eq!(moves.len(), 5);
        assert!(moves.iter().all(|m| m.kind == FlipKind::OneFour));
        assert_eq!(moves[0].new_vertex, Some(5));
    }

    #[test]
    fn one_four_then_four_one_roundtrip() {
        let s = sphere_d4();
        let m = FlipMove {
            kind: FlipKind::OneFour,
            pivot: s.facets()[0].clone(),
            new_vertex: Some(5),
        };
        let t = apply_move(&s, &m).unwrap();
        assert_eq!(t.f_vector().0[3], 8);
        // the inserted vertex admits a 4-1 move
        let back = apply_move(
            &t,
            &FlipMove {
                kind: FlipKind::FourOne,
                pivot: Simplex::vertex(5),
                new_vertex: None,
            },
        )
        .unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn two_three_f_vector_delta() {
        // a 1-4 move on the 5-cell creates legal 2-3 moves
        let s = sphere_d4();
        let t = apply_move(
            &s,
            &FlipMove {
                kind: FlipKind::OneFour,
                pivot: s.facets()[0].clone(),
                new_vertex: Some(5),
            },
        )
        .unwrap();
        let m = legal_moves(&t, &[])
            .unwrap()
            .into_iter()
            .find(|m| m.kind == FlipKind::TwoThree)
            .expect("some 2-3 move");
        let u = apply_move(&t, &m).unwrap();
        let (a, b) = (t.f_vector(), u.f_vector());
        assert_eq!(b.0[0] - a.0[0], 0);
        assert_eq!(b.0[1] - a.0[1], 1);
        assert_eq!(b.0[2] - a.0[2], 2);
        assert_eq!(b.0[3] - a.0[3], 1);
    }

    #[test]
    fn reduce_identity_on_minimal_sphere() {
        let s = sphere_d4();
        let out = reduce(&s, 1, 100, &[], false, &AnnealParams::default()).unwrap();
        assert!(out.reached_minimum);
        assert!(out.log.moves.is_empty());
        assert_eq!(replay(&s, &out.log).unwrap(), s);
    }

    #[test]
    fn tampered_log_fails_at_step() {
        let s = sphere_d4();
        let m = FlipMove {
            kind: FlipKind::OneFour,
            pivot: s.facets()[0].clone(),
            new_vertex: Some(5),
        };
        let t = apply_move(&s, &m).unwrap();
        let log = FlipLog {
            initial_hash: s.content_hash(),
            final_hash: t.content_hash(),
            moves: vec![FlipMove {
                kind: FlipKind::ThreeTwo,
                pivot: Simplex::new(vec![0, 1]).unwrap(),
                new_vertex: None,
            }],
        };
        match replay(&s, &log) {
            Err(FlipError::IllegalStep { index: 0, .. }) => {}
            other => panic!("expected illegal step, got {other:?}"),
        }
    }

    #[test]
    fn non_closed_input_rejected() {
        let ball = SimplicialComplex::from_facets(vec![vec![0u32, 1, 2, 3]]).unwrap();
        assert!(matches!(
            legal_moves(&ball, &[]),
            Err(FlipError::NotClosed(_))
        ));
    }
}
