//! Integer matrix reduction for homology: rank and invariant factors.
//!
//! Sparse phase eliminates ±1 pivots with Markowitz-style fill control; the
//! leftover (usually tiny) block is finished by a dense Smith normal form.
//! Entries are i128 with overflow checks; on overflow the computation restarts
//! with arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Rank and the invariant factors of absolute value ≥ 2, in divisibility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SmithInvariants {
    pub rank: usize,
    pub torsion: Vec<num_bigint::BigUint>,
}

pub(crate) fn smith_invariants(
    rows: usize,
    cols: usize,
    entries: &[(u32, u32, i64)],
) -> SmithInvariants {
    match eliminate::<i128>(rows, cols, entries) {
        Ok(inv) => inv,
        Err(Overflow) => eliminate::<BigInt>(rows, cols, entries).expect("bigint cannot overflow"),
    }
}

/// Rank over GF(2); cheap pre-filter for acyclicity tests.
pub(crate) fn rank_mod2(rows: usize, _cols: usize, entries: &[(u32, u32, i8)]) -> usize {
    let words = rows.div_ceil(64);
    let mut by_col: HashMap<u32, Vec<u64>> = HashMap::new();
    for &(r, c, v) in entries {
        if v as i32 & 1 == 1 || v == 1 || v == -1 {
            let col = by_col.entry(c).or_insert_with(|| vec![0u64; words]);
            col[r as usize / 64] ^= 1u64 << (r % 64);
        }
    }
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut rank = 0;
    'next: for (_, mut col) in by_col {
        loop {
            let lead = match col.iter().rposition(|&w| w != 0) {
                Some(i) => i * 64 + (63 - col[i].leading_zeros() as usize),
                None => continue 'next,
            };
            match basis.iter().find(|b| leading(b) == Some(lead)) {
                Some(b) => {
                    for (x, y) in col.iter_mut().zip(b.iter()) {
                        *x ^= y;
                    }
                }
                None => {
                    basis.push(col);
                    rank += 1;
                    continue 'next;
                }
            }
        }
    }
    rank
}

fn leading(b: &[u64]) -> Option<usize> {
    b.iter()
        .rposition(|&w| w != 0)
        .map(|i| i * 64 + (63 - b[i].leading_zeros() as usize))
}

#[derive(Debug)]
pub(crate) struct Overflow;

trait Entry: Clone + PartialEq + Zero + One + Signed {
    fn from_i64(v: i64) -> Self;
    fn checked_mul_sub(&self, a: &Self, b: &Self) -> Result<Self, Overflow>;
    fn to_biguint_abs(&self) -> num_bigint::BigUint;
    fn div_exact(&self, d: &Self) -> Self;
    fn rem_by(&self, d: &Self) -> Self;
    fn magnitude_le(&self, other: &Self) -> bool;
}

impl Entry for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn checked_mul_sub(&self, a: &Self, b: &Self) -> Result<Self, Overflow> {
        a.checked_mul(*b)
            .and_then(|p| self.checked_sub(p))
            .ok_or(Overflow)
    }
    fn to_biguint_abs(&self) -> num_bigint::BigUint {
        num_bigint::BigUint::try_from(self.unsigned_abs()).unwrap()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn rem_by(&self, d: &Self) -> Self {
        self % d
    }
    fn magnitude_le(&self, other: &Self) -> bool {
        self.unsigned_abs() <= other.unsigned_abs()
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn checked_mul_sub(&self, a: &Self, b: &Self) -> Result<Self, Overflow> {
        Ok(self - a * b)
    }
    fn to_biguint_abs(&self) -> num_bigint::BigUint {
        self.abs().to_biguint().unwrap()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn rem_by(&self, d: &Self) -> Self {
        self % d
    }
    fn magnitude_le(&self, other: &Self) -> bool {
        self.abs() <= other.abs()
    }
}

struct Sparse<T> {
    rows: Vec<HashMap<u32, T>>,
    cols: Vec<HashMap<u32, ()>>,
}

impl<T: Entry> Sparse<T> {
    fn set(&mut self, r: u32, c: u32, v: T) {
        if v.is_zero() {
            if self.rows[r as usize].remove(&c).is_some() {
                self.cols[c as usize].remove(&r);
            }
        } else {
            self.rows[r as usize].insert(c, v);
            self.cols[c as usize].insert(r, ());
        }
    }
    fn get(&self, r: u32, c: u32) -> Option<&T> {
        self.rows[r as usize].get(&c)
    }
}

fn eliminate<T: Entry>(
    rows: usize,
    cols: usize,
    entries: &[(u32, u32, i64)],
) -> Result<SmithInvariants, Overflow> {
    let mut m = Sparse::<T> {
        rows: vec![HashMap::new(); rows],
        cols: vec![HashMap::new(); cols],
    };
    for &(r, c, v) in entries {
        debug_assert!(m.get(r, c).is_none());
        m.set(r, c, T::from_i64(v));
    }
    let mut rank = 0usize;
    // sparse phase: unit pivots only
    loop {
        let mut best: Option<(u32, u32, usize)> = None;
        for (ri, row) in m.rows.iter().enumerate() {
            for (&c, v) in row {
                if v.abs().is_one() {
                    let fill = (row.len() - 1) * (m.cols[c as usize].len() - 1);
                    if best.as_ref().is_none_or(|&(_, _, f)| fill < f) {
                        best = Some((ri as u32, c, fill));
                    }
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pr, pc, _)) = best else { break };
        let pivot = m.get(pr, pc).unwrap().clone();
        let prow: Vec<(u32, T)> = m.rows[pr as usize]
            .iter()
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        let below: Vec<u32> = m.cols[pc as usize]
            .keys()
            .copied()
            .filter(|&r| r != pr)
            .collect();
        for r in below {
            // factor = entry / pivot, pivot = ±1
            let factor = m.get(r, pc).unwrap().clone().div_exact(&pivot);
            for (c, pv) in &prow {
                let cur = m.get(r, *c).cloned().unwrap_or_else(T::zero);
                let nv = cur.checked_mul_sub(&factor, pv)?;
                m.set(r, *c, nv);
            }
        }
        // clear pivot row and column
        for (c, _) in prow {
            m.rows[pr as usize].remove(&c);
            m.cols[c as usize].remove(&pr);
        }
        rank += 1;
    }
    // densify the residual block
    let live_rows: Vec<u32> = (0..rows as u32)
        .filter(|&r| !m.rows[r as usize].is_empty())
        .collect();
    let live_cols: Vec<u32> = (0..cols as u32)
        .filter(|&c| !m.cols[c as usize].is_empty())
        .collect();
    let rmap: HashMap<u32, usize> = live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let cmap: HashMap<u32, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = vec![vec![T::zero(); live_cols.len()]; live_rows.len()];
    for &r in &live_rows {
        for (&c, v) in &m.rows[r as usize] {
            dense[rmap[&r]][cmap[&c]] = v.clone();
        }
    }
    let diag = dense_snf(&mut dense)?;
    let mut torsion = Vec::new();
    for d in diag {
        rank += 1;
        let u = d.to_biguint_abs();
        if u > num_bigint::BigUint::from(1u8) {
            torsion.push(u);
        }
    }
    Ok(SmithInvariants { rank, torsion })
}

/// Classical dense Smith normal form; returns the nonzero diagonal in
/// divisibility order.
fn dense_snf<T: Entry>(m: &mut Vec<Vec<T>>) -> Result<Vec<T>, Overflow> {
    let nr = m.len();
    let nc = if nr == 0 { 0 } else { m[0].len() };
    let mut diag: Vec<T> = Vec::new();
    let mut top = 0usize;
    while top < nr && top < nc {
        // find a minimal-magnitude nonzero entry in the remaining block
        let mut pos: Option<(usize, usize)> = None;
        for r in top..nr {
            for c in top..nc {
                if !m[r][c].is_zero() && pos.is_none_or(|(pr, pc)| m[r][c].magnitude_le(&m[pr][pc]))
                {
                    pos = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pos else { break };
        m.swap(top, pr);
        for row in m.iter_mut() {
            row.swap(top, pc);
        }
        // reduce row and column against the pivot until it divides everything there
        loop {
            let mut clean = true;
            for r in top + 1..nr {
                if m[r][top].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&m[r][top], &m[top][top]);
                for c in top..nc {
                    let nv = m[r][c].checked_mul_sub(&q, &m[top][c])?;
                    m[r][c] = nv;
                }
                if !m[r][top].is_zero() {
                    // remainder smaller than pivot: swap up and restart
                    m.swap(top, r);
                    clean = false;
                }
            }
            for c in top + 1..nc {
                if m[top][c].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&m[top][c], &m[top][top]);
                for row in m.iter_mut().take(nr).skip(top) {
                    let nv = row[c].checked_mul_sub(&q, &row[top])?;
                    row[c] = nv;
                }
                if !m[top][c].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(top, c);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // pivot must divide the rest of the block; if not, mix the offending row in
        let piv = m[top][top].clone();
        let mut offender = None;
        'scan: for r in top + 1..nr {
            for c in top + 1..nc {
                if !m[r][c].rem_by(&piv).is_zero() {
                    offender = Some(r);
                    break 'scan;
                }
            }
        }
        if let Some(r) = offender {
            let extra: Vec<T> = m[r].clone();
            for c in top..nc {
                let nv = m[top][c].checked_mul_sub(&T::one().neg(), &extra[c])?;
                m[top][c] = nv;
            }
            continue; // redo this pivot position
        }
        diag.push(piv);
        top += 1;
    }
    Ok(diag)
}

/// Quotient rounding toward the nearest integer keeps remainders small.
fn nearest_quotient<T: Entry>(a: &T, b: &T) -> T {
    // plain truncated division suffices for termination (Euclidean descent)
    a.clone().div_exact(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn inv(rows: usize, cols: usize, dense: &[&[i64]]) -> SmithInvariants {
        let mut entries = Vec::new();
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    entries.push((r as u32, c as u32, v));
                }
            }
        }
        smith_invariants(rows, cols, &entries)
    }

    #[test]
    fn identity_rank() {
        let got = inv(2, 2, &[&[1, 0], &[0, 1]]);
        assert_eq!(got.rank, 2);
        assert!(got.torsion.is_empty());
    }

    #[test]
    fn torsion_two() {
        // diag(1, 2) up to unimodular equivalence
        let got = inv(2, 2, &[&[2, 0], &[0, 1]]);
        assert_eq!(got.rank, 2);
        assert_eq!(got.torsion, vec![BigUint::from(2u8)]);
    }

    #[test]
    fn divisibility_chain() {
        let got = inv(3, 3, &[&[2, 0, 0], &[0, 6, 0], &[0, 0, 4]]);
        assert_eq!(got.rank, 3);
        // invariant factors of diag(2,6,4) are (2, 2, 12)
        assert_eq!(
            got.torsion,
            vec![
                BigUint::from(2u8),
                BigUint::from(2u8),
                BigUint::from(12u8)
            ]
        );
    }

    #[test]
    fn rank_deficient() {
        let got = inv(2, 3, &[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(got.rank, 1);
        assert!(got.torsion.is_empty());
    }

    #[test]
    fn mod2_rank_matches() {
        let entries = vec![(0u32, 0u32, 1i8), (0, 1, 1), (1, 0, 1), (1, 1, 1)];
        assert_eq!(rank_mod2(2, 2, &entries), 1);
    }
}
