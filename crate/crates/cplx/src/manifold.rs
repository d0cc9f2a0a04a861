//! Classification of pure 3-complexes as triangulated 3-spheres or 3-balls.
//!
//! The vertex-link conditions are checked exactly in dimension 2; on top of
//! them the 3-dimensional classification uses boundary emptiness plus integer
//! homology of the whole complex, which certifies "homology sphere/ball with
//! sphere/ball links". That suffices for every bundled triangulation.

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::homology::{is_acyclic, reduced_homology};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ManifoldClass {
    Sphere3,
    Ball3,
    Other,
}

impl std::fmt::Display for ManifoldClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ManifoldClass::Sphere3 => write!(f, "3-sphere"),
            ManifoldClass::Ball3 => write!(f, "3-ball"),
            ManifoldClass::Other => write!(f, "other"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ManifoldReport {
    pub class: ManifoldClass,
    /// First reason a complex was classified `Other`, if any.
    pub diagnostic: Option<String>,
    /// An offending face, where one exists (e.g. a triangle in ≥ 3 facets).
    pub offending: Option<Simplex>,
}

impl ManifoldReport {
    fn other(diagnostic: impl Into<String>, offending: Option<Simplex>) -> Self {
        ManifoldReport {
            class: ManifoldClass::Other,
            diagnostic: Some(diagnostic.into()),
            offending,
        }
    }
}

/// Classifies a pure connected 3-complex as a 3-sphere, a 3-ball, or `Other`
/// (with the violated condition reported).
pub fn manifold_check(c: &SimplicialComplex) -> ManifoldReport {
    if c.dim() != Some(3) {
        return ManifoldReport::other("dimension is not 3", None);
    }
    if !c.is_pure() {
        return ManifoldReport::other("not pure", None);
    }
    if !c.is_connected() {
        return ManifoldReport::other("not connected", None);
    }
    // pseudomanifold property: every triangle in at most two facets
    let mut tri_count: HashMap<&Simplex, u32> = HashMap::new();
    for t in c.faces_of_dim(2) {
        tri_count.insert(t, 0);
    }
    for f in c.facets() {
        for t in f.boundary_faces() {
            *tri_count.get_mut(&t).unwrap() += 1;
        }
    }
    if let Some((t, n)) = tri_count.iter().find(|(_, &n)| n > 2) {
        return ManifoldReport::other(
            format!("triangle in {n} facets"),
            Some((*t).clone()),
        );
    }
    let boundary = c.boundary_complex().expect("pure by the check above");
    let boundary_vertices: Vec<Vertex> = boundary.vertices().to_vec();
    for &v in c.vertices() {
        let link = c.link(&Simplex::vertex(v)).expect("vertex of the complex");
        let on_boundary = boundary_vertices.binary_search(&v).is_ok();
        let ok = if on_boundary {
            is_2_ball(&link)
        } else {
            is_2_sphere(&link)
        };
        if !ok {
            return ManifoldReport::other(
                format!(
                    "link of vertex {v} is not a 2-{}",
                    if on_boundary { "ball" } else { "sphere" }
                ),
                Some(Simplex::vertex(v)),
            );
        }
    }
    if boundary.is_void() {
        let h = reduced_homology(c);
        if h.betti() == [0, 0, 0, 1] && h.groups.iter().all(|g| g.torsion.is_empty()) {
            ManifoldReport {
                class: ManifoldClass::Sphere3,
                diagnostic: None,
                offending: None,
            }
        } else {
            ManifoldReport::other(format!("closed but homology is not spherical:\n{h}"), None)
        }
    } else if is_acyclic(c) {
        ManifoldReport {
            class: ManifoldClass::Ball3,
            diagnostic: None,
            offending: None,
        }
    } else {
        ManifoldReport::other("boundary is nonempty but the complex is not acyclic", None)
    }
}

/// Is the complex a triangulated 2-sphere? Checked exactly: pure, connected,
/// every edge in exactly two triangles, every vertex link a single closed
/// cycle, Euler characteristic 2.
pub fn is_2_sphere(c: &SimplicialComplex) -> bool {
    if c.dim() != Some(2) || !c.is_pure() || !c.is_connected() {
        return false;
    }
    let mut edge_count: HashMap<Simplex, u32> = HashMap::new();
    for f in c.facets() {
        for e in f.boundary_faces() {
            *edge_count.entry(e).or_insert(0) += 1;
        }
    }
    if edge_count.values().any(|&n| n != 2) {
        return false;
    }
    if c.euler_characteristic() != 2 {
        return false;
    }
    c.vertices().iter().all(|&v| {
        let link = c.link(&Simplex::vertex(v)).unwrap();
        is_single_cycle(&link)
    })
}

/// Is the complex a triangulated 2-ball (disc)? Pure, connected, every edge in
/// at most two triangles, boundary a single cycle, interior vertex links
/// closed cycles, boundary vertex links simple paths, Euler characteristic 1.
pub fn is_2_ball(c: &SimplicialComplex) -> bool {
    if c.dim() != Some(2) || !c.is_pure() || !c.is_connected() {
        return false;
    }
    let mut edge_count: HashMap<Simplex, u32> = HashMap::new();
    for f in c.facets() {
        for e in f.boundary_faces() {
            *edge_count.entry(e).or_insert(0) += 1;
        }
    }
    if edge_count.values().any(|&n| n > 2) {
        return false;
    }
    if c.euler_characteristic() != 1 {
        return false;
    }
    let boundary_edges: Vec<Simplex> = edge_count
        .iter()
        .filter_map(|(e, &n)| (n == 1).then(|| e.clone()))
        .collect();
    if boundary_edges.is_empty() {
        return false;
    }
    let boundary = SimplicialComplex::from_simplices(boundary_edges);
    if !is_single_cycle(&boundary) {
        return false;
    }
    c.vertices().iter().all(|&v| {
        let link = c.link(&Simplex::vertex(v)).unwrap();
        if boundary.has_vertex(v) {
            is_simple_path(&link)
        } else {
            is_single_cycle(&link)
        }
    })
}

/// A pure 1-complex forming one closed cycle: connected, every vertex degree 2.
pub fn is_single_cycle(c: &SimplicialComplex) -> bool {
    if c.dim() != Some(1) || !c.is_pure() || !c.is_connected() {
        return false;
    }
    let mut deg: HashMap<Vertex, u32> = HashMap::new();
    for e in c.facets() {
        for &v in e.vertices() {
            *deg.entry(v).or_insert(0) += 1;
        }
    }
    deg.values().all(|&d| d == 2)
}

/// A 1-complex forming one simple open path (a single vertex counts).
pub fn is_simple_path(c: &SimplicialComplex) -> bool {
    if c.facets().len() == 1 && c.facets()[0].dim() == 0 {
        return true;
    }
    if c.dim() != Some(1) || !c.is_pure() || !c.is_connected() {
        return false;
    }
    let mut deg: HashMap<Vertex, u32> = HashMap::new();
    for e in c.facets() {
        for &v in e.vertices() {
            *deg.entry(v).or_insert(0) += 1;
        }
    }
    let ones = deg.values().filter(|&&d| d == 1).count();
    ones == 2 && deg.values().all(|&d| d <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn boundary_of_4_simplex_is_a_sphere() {
        let s = cx(&[&[0, 1, 2, 3, 4]]).boundary_complex().unwrap();
        assert_eq!(manifold_check(&s).class, ManifoldClass::Sphere3);
    }

    #[test]
    fn tetrahedron_is_a_ball() {
        assert_eq!(manifold_check(&cx(&[&[1, 2, 3, 4]])).class, ManifoldClass::Ball3);
    }

    #[test]
    fn two_tetrahedra_glued_along_a_triangle() {
        let c = cx(&[&[1, 2, 3, 4], &[1, 2, 3, 5]]);
        assert_eq!(manifold_check(&c).class, ManifoldClass::Ball3);
    }

    #[test]
    fn non_pure_is_other() {
        let c = cx(&[&[1, 2, 3, 4], &[4, 5, 6]]);
        let r = manifold_check(&c);
        assert_eq!(r.class, ManifoldClass::Other);
        assert!(r.diagnostic.unwrap().contains("pure"));
    }

    #[test]
    fn triangle_in_three_facets_is_reported() {
        let c = cx(&[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 3, 6]]);
        let r = manifold_check(&c);
        assert_eq!(r.class, ManifoldClass::Other);
        assert_eq!(r.offending, Some(Simplex::new(vec![1, 2, 3]).unwrap()));
    }

    #[test]
    fn surface_checks() {
        let sphere = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        assert!(is_2_sphere(&sphere));
        assert!(!is_2_ball(&sphere));
        let disc = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        assert!(is_2_ball(&disc));
        assert!(!is_2_sphere(&disc));
        // two triangles sharing one vertex: not a ball
        let pinched = cx(&[&[1, 2, 3], &[3, 4, 5]]);
        assert!(!is_2_ball(&pinched));
    }
}
