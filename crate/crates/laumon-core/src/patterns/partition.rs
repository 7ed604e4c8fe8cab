//! Integer partitions, stored as weakly decreasing positive parts.

use core::fmt;

use crate::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Accepts any weakly decreasing list; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Option<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The part with 0-based index `s`, zero beyond the length.
    pub fn part(&self, s: usize) -> u32 {
        self.0.get(s).copied().unwrap_or(0)
    }

    /// Changes part `s` by `delta`, if the result is still a partition.
    pub fn bump(&self, s: usize, delta: i32) -> Option<Partition> {
        let mut parts = self.0.clone();
        if parts.len() <= s {
            parts.resize(s + 1, 0);
        }
        let v = parts[s] as i64 + delta as i64;
        if v < 0 {
            return None;
        }
        parts[s] = v as u32;
        Partition::new(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        let parts = (1..=m)
            .map(|z| self.0.iter().filter(|p| **p >= z).count() as u32)
            .collect();
        Partition(parts)
    }

    /// `self ⊇ other` part by part.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// All partitions of `m`, in decreasing lexicographic order.
    pub fn all(m: u32) -> Vec<Partition> {
        fn rec(m: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if m == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for a in (1..=m.min(max)).rev() {
                cur.push(a);
                rec(m - a, a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_conjugate() {
        let counts: Vec<usize> = (0..8).map(|m| Partition::all(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let p = Partition::new(vec![3, 1, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![3, 1, 1]).unwrap());
        assert_eq!(
            Partition::new(vec![2, 1]).unwrap().conjugate().parts(),
            &[2, 1]
        );
        assert!(Partition::new(vec![1, 2]).is_none());
        assert_eq!(p.bump(2, 1), None);
        assert_eq!(p.bump(1, 1).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(p.bump(3, 1).unwrap().parts(), &[3, 1, 1, 1]);
    }
}
