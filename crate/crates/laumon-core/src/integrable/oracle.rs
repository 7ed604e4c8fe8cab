//! Direct enumerations used as references for the graded counts of `D(μ)`.
//!
//! [`cylindric_counts`] grows cylindric plane partitions one box at a time.
//! A state is the list of pile heights `Π(x, y)` for `x = −1,…,−n` and
//! `y` above the wall, a box may be added wherever the two monotonicity
//! conditions survive, and states are deduplicated per size. The box added
//! as the `(h+1)`-th one of pile `x` has residue `h − x`.
//!
//! [`fock_counts`] counts partitions by the residues `c − r` of their boxes,
//! which is the level-one vacuum module.

use crate::patterns::DominantWeight;
use crate::prelude::*;
use alloc::collections::BTreeSet;

type State = Vec<Vec<u32>>;

struct Cyl<'a> {
    w: &'a DominantWeight,
    n: i64,
}

impl Cyl<'_> {
    fn wall(&self, x: i64) -> i64 {
        -self.w.mu_tilde(-x)
    }

    /// Height at `(x, y)`; `None` at or below the wall.
    fn height(&self, s: &State, x: i64, y: i64) -> Option<u32> {
        let q = (x + self.n).div_euclid(self.n);
        let x0 = x - q * self.n;
        let y0 = y + q * self.w.level();
        let wall = self.wall(x0);
        if y0 <= wall {
            return None;
        }
        let col = &s[(-x0 - 1) as usize];
        Some(col.get((y0 - wall - 1) as usize).copied().unwrap_or(0))
    }

    fn valid_at(&self, s: &State, x: i64, y: i64) -> bool {
        let h = match self.height(s, x, y) {
            Some(h) => h,
            None => return true,
        };
        if let Some(below) = self.height(s, x, y - 1) {
            if below < h {
                return false;
            }
        }
        if let Some(up) = self.height(s, x, y + 1) {
            if up > h {
                return false;
            }
        }
        if let Some(left) = self.height(s, x - 1, y) {
            if left < h {
                return false;
            }
        }
        if let Some(right) = self.height(s, x + 1, y) {
            if right > h {
                return false;
            }
        }
        true
    }

    fn children(&self, s: &State) -> Vec<(State, usize)> {
        let mut out = Vec::new();
        for c in 0..self.n as usize {
            let x = -(c as i64) - 1;
            let wall = self.wall(x);
            for t in 0..=s[c].len() {
                let y = wall + 1 + t as i64;
                let mut next = s.clone();
                if t == next[c].len() {
                    next[c].push(0);
                }
                let h = next[c][t];
                next[c][t] += 1;
                if self.valid_at(&next, x, y) {
                    let residue = (h as i64 - x).rem_euclid(self.n) as usize;
                    out.push((next, residue));
                }
            }
        }
        out
    }
}

/// Counts of cylindric plane partitions with boundary `μ` by degree vector,
/// total size `≤ cutoff`. Residue `0` is reported in the last slot.
pub fn cylindric_counts(w: &DominantWeight, cutoff: u32) -> BTreeMap<Vec<u32>, u64> {
    let n = w.n();
    let cyl = Cyl { w, n: n as i64 };
    let mut layer: BTreeMap<State, Vec<u32>> = BTreeMap::new();
    layer.insert(vec![Vec::new(); n], vec![0; n]);
    let mut out = BTreeMap::new();
    for size in 0..=cutoff {
        for deg in layer.values() {
            *out.entry(deg.clone()).or_insert(0) += 1;
        }
        if size == cutoff {
            break;
        }
        let mut next: BTreeMap<State, Vec<u32>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (s, deg) in &layer {
            for (child, residue) in cyl.children(s) {
                if seen.insert(child.clone()) {
                    let mut d = deg.clone();
                    let slot = if residue == 0 { n } else { residue };
                    d[slot - 1] += 1;
                    next.insert(child, d);
                }
            }
        }
        layer = next;
    }
    out
}

/// Partitions of size `≤ cutoff` counted by the residues `(c − r) mod n` of
/// their boxes; residue `0` in the last slot.
pub fn fock_counts(n: usize, cutoff: u32) -> BTreeMap<Vec<u32>, u64> {
    fn rec(
        n: usize,
        left: u32,
        max: u32,
        row: i64,
        deg: &mut Vec<u32>,
        out: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        *out.entry(deg.clone()).or_insert(0) += 1;
        for part in 1..=left.min(max) {
            for c in 0..part as i64 {
                let r = (c - row).rem_euclid(n as i64) as usize;
                deg[if r == 0 { n - 1 } else { r - 1 }] += 1;
            }
            rec(n, left - part, part, row + 1, deg, out);
            for c in 0..part as i64 {
                let r = (c - row).rem_euclid(n as i64) as usize;
                deg[if r == 0 { n - 1 } else { r - 1 }] -= 1;
            }
        }
    }
    let mut out = BTreeMap::new();
    rec(n, cutoff, cutoff, 0, &mut vec![0; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fock() {
        let f = fock_counts(3, 2);
        assert_eq!(f[&vec![0, 0, 0]], 1);
        assert_eq!(f[&vec![0, 0, 1]], 1);
        assert_eq!(f[&vec![1, 0, 1]], 1);
        assert_eq!(f[&vec![0, 1, 1]], 1);
        assert_eq!(f.values().sum::<u64>(), 4);
    }

    #[test]
    fn level_one_piles_match_fock() {
        let w = DominantWeight::zero(3, 1);
        assert_eq!(cylindric_counts(&w, 5), fock_counts(3, 5));
    }
}
