//! Integer simplicial homology via Smith normal form.
//!
//! Used as the acyclicity oracle in the evasiveness scan and for manifold
//! classification, so the answers must be exact over the integers; a mod-2
//! rank computation serves as a fast pre-filter only.

use crate::complex::{ComplexError, Simplex, SimplicialComplex};
use crate::snf;
use num_bigint::BigUint;
use std::collections::HashMap;
use std::fmt;

/// Signed incidence matrix of `∂_k`: rows are (k−1)-faces, columns are
/// k-faces, entries ±1 from the sorted-vertex orientation convention.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub k: usize,
    pub rows: usize,
    pub cols: usize,
    /// (row, col, sign) triplets.
    pub entries: Vec<(u32, u32, i8)>,
}

impl BoundaryMatrix {
    /// Matrix product `∂_{k-1} · ∂_k` as a dense integer matrix; zero for
    /// every simplicial complex.
    pub fn compose(&self, next: &BoundaryMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.cols, next.rows, "dimension mismatch");
        let mut a = vec![vec![0i64; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            a[r as usize][c as usize] = v as i64;
        }
        let mut out = vec![vec![0i64; next.cols]; self.rows];
        for &(r, c, v) in &next.entries {
            for i in 0..self.rows {
                out[i][c as usize] += a[i][r as usize] * v as i64;
            }
        }
        out
    }
}

fn widen(entries: &[(u32, u32, i8)]) -> Vec<(u32, u32, i64)> {
    entries.iter().map(|&(r, c, v)| (r, c, v as i64)).collect()
}

/// Builds `∂_k` for `1 ≤ k ≤ dim C`.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> Result<BoundaryMatrix, ComplexError> {
    let d = c.dim().unwrap_or(-1);
    if k < 1 || (k as isize) > d {
        return Err(ComplexError::DimensionTooSmall(k as isize));
    }
    Ok(boundary_matrix_unchecked(
        c.faces_of_dim(k - 1),
        c.faces_of_dim(k),
        k,
    ))
}

fn boundary_matrix_unchecked(rows: &[Simplex], cols: &[Simplex], k: usize) -> BoundaryMatrix {
    let row_index: HashMap<&Simplex, u32> = rows
        .iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect();
    let mut entries = Vec::with_capacity(cols.len() * (k + 1));
    for (j, col) in cols.iter().enumerate() {
        for (i, face) in col.boundary_faces().iter().enumerate() {
            // boundary_faces omits vertex i; sign (−1)^i
            let sign = if i % 2 == 0 { 1 } else { -1 };
            entries.push((row_index[face], j as u32, sign));
        }
    }
    BoundaryMatrix {
        k,
        rows: rows.len(),
        cols: cols.len(),
        entries,
    }
}

/// One reduced homology group: free rank plus torsion coefficients in
/// divisibility order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub rank: u64,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduced integer homology of a complex, degrees 0 through dim.
///
/// The group in degree −1 is nonzero exactly for the irrelevant complex `{∅}`;
/// the void complex has all groups zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    /// Rank of the reduced group in degree −1 (1 for `{∅}`, else 0).
    pub empty_degree_rank: u64,
    /// groups[k] is the reduced homology in degree k.
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn is_trivial(&self) -> bool {
        self.empty_degree_rank == 0 && self.groups.iter().all(|g| g.is_trivial())
    }

    pub fn betti(&self) -> Vec<u64> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    /// Unreduced Betti number in degree k.
    pub fn unreduced_betti(&self, k: usize) -> u64 {
        let r = self.groups.get(k).map_or(0, |g| g.rank);
        if k == 0 {
            r + 1
        } else {
            r
        }
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.groups.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "H~_{k} = {g}")?;
        }
        Ok(())
    }
}

/// Exact reduced homology over the integers.
pub fn reduced_homology(c: &SimplicialComplex) -> HomologyProfile {
    if c.is_void() {
        return HomologyProfile {
            empty_degree_rank: 0,
            groups: Vec::new(),
        };
    }
    if c.is_irrelevant() {
        return HomologyProfile {
            empty_degree_rank: 1,
            groups: Vec::new(),
        };
    }
    let d = c.dim().unwrap() as usize;
    let faces = c.faces_by_dim();
    // rank and torsion of each ∂_k; ∂_0 is the augmentation onto Z
    let mut ranks = vec![0usize; d + 2];
    let mut torsions: Vec<Vec<BigUint>> = vec![Vec::new(); d + 2];
    ranks[0] = 1; // augmentation has rank 1 on any nonempty vertex set
    for k in 1..=d {
        let m = boundary_matrix_unchecked(&faces[k - 1], &faces[k], k);
        let inv = snf::smith_invariants(m.rows, m.cols, &widen(&m.entries));
        ranks[k] = inv.rank;
        torsions[k] = inv.torsion;
    }
    let mut groups = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let fk = faces[k].len();
        let rank = fk - ranks[k] - ranks[k + 1];
        groups.push(HomologyGroup {
            rank: rank as u64,
            torsion: torsions[k + 1].clone(),
        });
    }
    HomologyProfile {
        empty_degree_rank: 0,
        groups,
    }
}

/// True iff every reduced homology group vanishes, including torsion.
///
/// A mod-2 rank computation runs first; only complexes that pass it are
/// checked exactly over the integers.
pub fn is_acyclic(c: &SimplicialComplex) -> bool {
    if c.is_void() {
        return true;
    }
    if c.is_irrelevant() {
        return false;
    }
    if !mod2_trivial(c) {
        return false;
    }
    reduced_homology(c).is_trivial()
}

/// Are all reduced mod-2 Betti numbers zero?
fn mod2_trivial(c: &SimplicialComplex) -> bool {
    let d = c.dim().unwrap() as usize;
    let faces = c.faces_by_dim();
    let mut ranks = vec![0usize; d + 2];
    ranks[0] = 1;
    for k in 1..=d {
        let m = boundary_matrix_unchecked(&faces[k - 1], &faces[k], k);
        ranks[k] = snf::rank_mod2(m.rows, m.cols, &m.entries);
    }
    (0..=d).all(|k| faces[k].len() == ranks[k] + ranks[k + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    /// Independent rank oracle over the rationals: fraction-free Gaussian
    /// elimination on a dense copy.
    fn rank_oracle(m: &BoundaryMatrix) -> usize {
        let mut a = vec![vec![0i128; m.cols]; m.rows];
        for &(r, c, v) in &m.entries {
            a[r as usize][c as usize] = v as i128;
        }
        let (mut rank, mut row) = (0usize, 0usize);
        for col in 0..m.cols {
            let Some(p) = (row..m.rows).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, p);
            for r in 0..m.rows {
                if r != row && a[r][col] != 0 {
                    let (num, den) = (a[r][col], a[row][col]);
                    for c in 0..m.cols {
                        a[r][c] = a[r][c] * den - a[row][c] * num;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn triangle_boundary_columns() {
        let c = cx(&[&[1, 2, 3]]);
        let m = boundary_matrix(&c, 1).unwrap();
        assert_eq!((m.rows, m.cols), (3, 3));
        // each edge column has exactly two nonzero entries of opposite sign
        for j in 0..3 {
            let col: Vec<i8> = m
                .entries
                .iter()
                .filter(|e| e.1 == j)
                .map(|e| e.2)
                .collect();
            assert_eq!(col.len(), 2);
            assert_eq!(col.iter().map(|&v| v as i32).sum::<i32>(), 0);
            assert_eq!(col.iter().map(|&v| v.abs() as i32).sum::<i32>(), 2);
        }
    }

    #[test]
    fn boundary_of_boundary_is_zero() {
        let c = cx(&[&[1, 2, 3, 4], &[2, 3, 4, 5]]);
        let d1 = boundary_matrix(&c, 1).unwrap();
        let d2 = boundary_matrix(&c, 2).unwrap();
        let d3 = boundary_matrix(&c, 3).unwrap();
        assert!(d1.compose(&d2).iter().flatten().all(|&v| v == 0));
        assert!(d2.compose(&d3).iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn rank_of_d2_on_boundary_of_tetrahedron() {
        let c = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        let m = boundary_matrix(&c, 2).unwrap();
        assert_eq!((m.rows, m.cols), (6, 4));
        assert_eq!(rank_oracle(&m), 3);
        let inv = snf::smith_invariants(m.rows, m.cols, &super::widen(&m.entries));
        assert_eq!(inv.rank, 3);
        assert!(inv.torsion.is_empty());
    }

    #[test]
    fn sphere_homology() {
        let c = cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap();
        let h = reduced_homology(&c);
        assert_eq!(h.betti(), vec![0, 0, 1]);
        assert!(h.groups.iter().all(|g| g.torsion.is_empty()));
        assert!(!is_acyclic(&c));
    }

    #[test]
    fn solid_tetrahedron_is_acyclic() {
        assert!(is_acyclic(&cx(&[&[1, 2, 3, 4]])));
    }

    #[test]
    fn projective_plane_torsion() {
        // the 6-vertex triangulation of the real projective plane
        let rp2 = cx(&[
            &[1, 2, 3],
            &[1, 2, 6],
            &[1, 3, 5],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 4],
            &[2, 4, 5],
            &[2, 5, 6],
            &[3, 4, 6],
            &[3, 5, 6],
        ]);
        let h = reduced_homology(&rp2);
        assert_eq!(h.groups[0], HomologyGroup::default());
        assert_eq!(h.groups[1].rank, 0);
        assert_eq!(h.groups[1].torsion, vec![BigUint::from(2u8)]);
        assert_eq!(h.groups[2], HomologyGroup::default());
        // odd-torsion-free here, but the exact check must still refuse it
        assert!(!is_acyclic(&rp2));
    }

    #[test]
    fn two_points_not_acyclic() {
        let c = cx(&[&[1], &[2]]);
        let h = reduced_homology(&c);
        assert_eq!(h.betti(), vec![1]);
        assert!(!is_acyclic(&c));
    }

    #[test]
    fn void_and_irrelevant() {
        assert!(is_acyclic(&SimplicialComplex::void()));
        assert!(!is_acyclic(&SimplicialComplex::irrelevant()));
        assert_eq!(
            reduced_homology(&SimplicialComplex::irrelevant()).empty_degree_rank,
            1
        );
    }

    #[test]
    fn euler_poincare() {
        for c in [
            cx(&[&[1, 2, 3, 4], &[4, 5], &[5, 6, 7]]),
            cx(&[&[1, 2], &[2, 3], &[1, 3]]),
            cx(&[&[1, 2, 3, 4]]).boundary_complex().unwrap(),
        ] {
            let h = reduced_homology(&c);
            let chi_h: i64 = h
                .groups
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    let b = g.rank as i64 + if k == 0 { 1 } else { 0 };
                    if k % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                })
                .sum();
            assert_eq!(c.euler_characteristic(), chi_h);
        }
    }
}
