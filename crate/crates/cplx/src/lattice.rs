//! Internal face lattice with decremental removal, the engine behind
//! collapse search, certificate replay and random discrete Morse functions.
//!
//! A face is *free* iff it has exactly one proper coface alive; that coface is
//! then automatically maximal, so a single counter per face suffices.

use crate::complex::{Simplex, SimplicialComplex};
use rand::Rng;
use smallvec::SmallVec;
use std::collections::HashMap;

pub(crate) struct Lattice {
    /// All faces, sorted by (dimension, lex); the id of a face is its index.
    pub faces: Vec<Simplex>,
    pub dim_of: Vec<u8>,
    /// Codimension-1 cofaces per face.
    pub up: Vec<SmallVec<[u32; 6]>>,
    /// Codimension-1 faces per face.
    pub down: Vec<SmallVec<[u32; 6]>>,
    pub index: HashMap<Simplex, u32>,
}

impl Lattice {
    pub fn build(c: &SimplicialComplex) -> Lattice {
        let by_dim = c.faces_by_dim();
        let mut faces = Vec::new();
        let mut dim_of = Vec::new();
        for (d, fs) in by_dim.iter().enumerate() {
            for s in fs {
                faces.push(s.clone());
                dim_of.push(d as u8);
            }
        }
        let index: HashMap<Simplex, u32> = faces
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u32))
            .collect();
        let mut up: Vec<SmallVec<[u32; 6]>> = vec![SmallVec::new(); faces.len()];
        let mut down: Vec<SmallVec<[u32; 6]>> = vec![SmallVec::new(); faces.len()];
        for (i, s) in faces.iter().enumerate() {
            if s.card() >= 2 {
                for b in s.boundary_faces() {
                    let j = index[&b];
                    up[j as usize].push(i as u32);
                    down[i as usize].push(j);
                }
            }
        }
        Lattice {
            faces,
            dim_of,
            up,
            down,
            index,
        }
    }

    pub fn id(&self, s: &Simplex) -> Option<u32> {
        self.index.get(s).copied()
    }
}

/// Mutable collapse state over an immutable lattice.
pub(crate) struct CollapseState<'a> {
    pub lat: &'a Lattice,
    pub alive: Vec<bool>,
    /// Number of alive codim-1 cofaces.
    pub up_alive: Vec<u32>,
    pub protected: Vec<bool>,
    pub alive_count: usize,
    /// Unprotected faces with up_alive == 1, as an O(1)-sample set.
    free: Vec<u32>,
    free_pos: Vec<u32>, // position in `free` + 1, or 0
}

impl<'a> CollapseState<'a> {
    pub fn new(lat: &'a Lattice, protected_ids: &[u32]) -> CollapseState<'a> {
        let n = lat.faces.len();
        let mut protected = vec![false; n];
        for &p in protected_ids {
            protected[p as usize] = true;
        }
        let up_alive: Vec<u32> = lat.up.iter().map(|u| u.len() as u32).collect();
        let mut st = CollapseState {
            lat,
            alive: vec![true; n],
            up_alive,
            protected,
            alive_count: n,
            free: Vec::new(),
            free_pos: vec![0; n],
        };
        for i in 0..n as u32 {
            st.refresh_free(i);
        }
        st
    }

    fn refresh_free(&mut self, i: u32) {
        let should = self.alive[i as usize]
            && !self.protected[i as usize]
            && self.up_alive[i as usize] == 1;
        let pos = self.free_pos[i as usize];
        if should && pos == 0 {
            self.free.push(i);
            self.free_pos[i as usize] = self.free.len() as u32;
        } else if !should && pos != 0 {
            let last = *self.free.last().unwrap();
            let idx = (pos - 1) as usize;
            self.free.swap_remove(idx);
            if idx < self.free.len() {
                self.free_pos[last as usize] = pos;
            }
            self.free_pos[i as usize] = 0;
        }
    }

    pub fn free_faces(&self) -> &[u32] {
        &self.free
    }

    pub fn sample_free<R: Rng>(&self, rng: &mut R) -> Option<u32> {
        if self.free.is_empty() {
            None
        } else {
            Some(self.free[rng.gen_range(0..self.free.len())])
        }
    }

    pub fn is_alive(&self, i: u32) -> bool {
        self.alive[i as usize]
    }

    /// The unique alive coface of a free face.
    pub fn unique_coface(&self, i: u32) -> Option<u32> {
        if self.up_alive[i as usize] != 1 {
            return None;
        }
        self.lat.up[i as usize]
            .iter()
            .copied()
            .find(|&j| self.alive[j as usize])
    }

    fn kill(&mut self, i: u32) {
        debug_assert!(self.alive[i as usize]);
        self.alive[i as usize] = false;
        self.alive_count -= 1;
        self.refresh_free(i);
        for d in self.lat.down[i as usize].clone() {
            self.up_alive[d as usize] -= 1;
            self.refresh_free(d);
        }
    }

    /// Removes the pair (free, its unique coface); both must be legal.
    pub fn remove_pair(&mut self, free: u32, coface: u32) {
        debug_assert_eq!(self.unique_coface(free), Some(coface));
        self.kill(coface);
        self.kill(free);
    }

    /// Removes a maximal face (a critical face in a Morse run).
    pub fn remove_maximal(&mut self, i: u32) {
        debug_assert_eq!(self.up_alive[i as usize], 0);
        self.kill(i);
    }

    /// Alive faces of the largest alive dimension with no alive coface.
    pub fn top_maximal_faces(&self) -> Vec<u32> {
        let mut best_dim = 0u8;
        let mut out = Vec::new();
        for i in 0..self.lat.faces.len() as u32 {
            if self.alive[i as usize] && self.up_alive[i as usize] == 0 {
                let d = self.lat.dim_of[i as usize];
                if d > best_dim {
                    best_dim = d;
                    out.clear();
                }
                if d == best_dim {
                    out.push(i);
                }
            }
        }
        out
    }

    /// The residue as a complex (alive faces form a downward-closed set).
    pub fn residue(&self) -> SimplicialComplex {
        let gens: Vec<Simplex> = (0..self.lat.faces.len())
            .filter(|&i| self.alive[i] && self.up_alive[i] == 0)
            .map(|i| self.lat.faces[i].clone())
            .collect();
        SimplicialComplex::from_simplices(gens)
    }

    /// How many currently-unfree alive faces would become free if the pair
    /// (free, coface) were removed; used by the min-new-free strategy.
    pub fn new_free_after(&self, free: u32, coface: u32) -> usize {
        let mut count = 0;
        for &d in &self.lat.down[coface as usize] {
            if d != free
                && self.alive[d as usize]
                && !self.protected[d as usize]
                && self.up_alive[d as usize] == 2
            {
                count += 1;
            }
        }
        for &d in &self.lat.down[free as usize] {
            if self.alive[d as usize]
                && !self.protected[d as usize]
                && self.up_alive[d as usize] == 2
            {
                count += 1;
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn tetrahedron_free_faces() {
        let c = cx(&[&[1, 2, 3, 4]]);
        let lat = Lattice::build(&c);
        let st = CollapseState::new(&lat, &[]);
        // exactly the four triangles are free
        let mut dims: Vec<u8> = st
            .free_faces()
            .iter()
            .map(|&i| lat.dim_of[i as usize])
            .collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![2, 2, 2, 2]);
    }

    #[test]
    fn closed_surface_has_no_free_face() {
        let c = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        let lat = Lattice::build(&c);
        let st = CollapseState::new(&lat, &[]);
        assert!(st.free_faces().is_empty());
    }

    #[test]
    fn collapse_triangle_to_vertex() {
        let c = cx(&[&[1, 2, 3]]);
        let lat = Lattice::build(&c);
        let mut st = CollapseState::new(&lat, &[]);
        while let Some(f) = st.free_faces().first().copied() {
            let c = st.unique_coface(f).unwrap();
            st.remove_pair(f, c);
        }
        assert_eq!(st.alive_count, 1);
        let residue = st.residue();
        assert_eq!(residue.facet_count(), 1);
        assert_eq!(residue.facets()[0].dim(), 0);
    }
}
