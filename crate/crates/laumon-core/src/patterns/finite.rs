//! Fixed points of the finite Laumon space: triangular arrays `d_{ij}`,
//! `n−1 ≥ i ≥ j ≥ 1`, with `d_{kj} ≥ d_{ij}` whenever `i ≥ k ≥ j`.

use core::fmt;

use crate::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitePattern {
    n: usize,
    /// `rows[i-1][j-1] = d_{ij}`.
    rows: Vec<Vec<u32>>,
}

impl FinitePattern {
    pub fn vacuum(n: usize) -> FinitePattern {
        assert!(n >= 2);
        FinitePattern {
            n,
            rows: (1..n).map(|i| vec![0; i]).collect(),
        }
    }

    /// Builds from rows `i = 1..n−1`, row `i` listing `d_{i1}..d_{ii}`.
    pub fn from_rows(n: usize, rows: Vec<Vec<u32>>) -> Option<FinitePattern> {
        if n < 2 || rows.len() != n - 1 || rows.iter().enumerate().any(|(i, r)| r.len() != i + 1) {
            return None;
        }
        let p = FinitePattern { n, rows };
        if p.is_valid() {
            Some(p)
        } else {
            None
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `d_{ij}`, read as zero on row `0` and row `n`.
    pub fn d(&self, i: usize, j: usize) -> u32 {
        if i == 0 || i >= self.n || j == 0 || j > i {
            0
        } else {
            self.rows[i - 1][j - 1]
        }
    }

    fn is_valid(&self) -> bool {
        for i in 1..self.n.saturating_sub(1) {
            for j in 1..=i {
                if self.d(i, j) < self.d(i + 1, j) {
                    return false;
                }
            }
        }
        true
    }

    /// `(d_1,…,d_{n−1})` with `d_k = Σ_j d_{kj}`.
    pub fn degree(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn total(&self) -> u32 {
        self.degree().iter().sum()
    }

    pub fn flattened(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Changes `d_{ij}` by `delta` if the result is a valid pattern.
    pub fn bump(&self, i: usize, j: usize, delta: i32) -> Option<FinitePattern> {
        if i == 0 || i >= self.n || j == 0 || j > i {
            return None;
        }
        let v = self.rows[i - 1][j - 1] as i64 + delta as i64;
        if v < 0 {
            return None;
        }
        let mut q = self.clone();
        q.rows[i - 1][j - 1] = v as u32;
        if q.is_valid() {
            Some(q)
        } else {
            None
        }
    }

    /// All patterns with the given degree vector, lexicographic in the flattened entries.
    pub fn enumerate(n: usize, degree: &[u32]) -> Vec<FinitePattern> {
        assert_eq!(degree.len(), n - 1, "finite degree vector has n−1 entries");
        let mut out = Vec::new();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        fn compositions(
            total: u32,
            caps: &[Option<u32>],
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if cur.len() == caps.len() {
                if total == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let cap = caps[cur.len()].unwrap_or(total).min(total);
            for a in 0..=cap {
                cur.push(a);
                compositions(total - a, caps, cur, out);
                cur.pop();
            }
        }
        fn rec(n: usize, degree: &[u32], rows: &mut Vec<Vec<u32>>, out: &mut Vec<FinitePattern>) {
            let i = rows.len() + 1;
            if i == n {
                out.push(FinitePattern {
                    n,
                    rows: rows.clone(),
                });
                return;
            }
            let caps: Vec<Option<u32>> = (1..=i)
                .map(|j| {
                    if j < i {
                        Some(rows[i - 2][j - 1])
                    } else {
                        None
                    }
                })
                .collect();
            let mut choices = Vec::new();
            compositions(degree[i - 1], &caps, &mut Vec::new(), &mut choices);
            for c in choices {
                rows.push(c);
                rec(n, degree, rows, out);
                rows.pop();
            }
        }
        rec(n, degree, &mut rows, &mut out);
        out.sort_by_key(|p| p.flattened());
        out
    }

    /// All patterns of total degree at most `max_total`.
    pub fn up_to(n: usize, max_total: u32) -> Vec<FinitePattern> {
        let mut out = Vec::new();
        for degree in degree_vectors(n - 1, max_total) {
            out.extend(FinitePattern::enumerate(n, &degree));
        }
        out
    }
}

/// All vectors of `len` nonnegative entries with sum at most `max_total`,
/// ordered by total and then lexicographically.
pub fn degree_vectors(len: usize, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(len, left - a, cur, out);
            cur.pop();
        }
    }
    for t in 0..=max_total {
        rec(len, t, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for FinitePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, v) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", v)?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_one() {
        let ps = FinitePattern::enumerate(3, &[1, 1]);
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].flattened(), vec![1, 0, 1]);
        assert_eq!(ps[1].flattened(), vec![1, 1, 0]);
    }

    #[test]
    fn brute_force_agrees() {
        let n = 4;
        for degree in degree_vectors(n - 1, 3) {
            let fast = FinitePattern::enumerate(n, &degree);
            let mut slow = Vec::new();
            let max = *degree.iter().max().unwrap_or(&0);
            let cells = n * (n - 1) / 2;
            let mut vals = vec![0u32; cells];
            loop {
                let mut rows = Vec::new();
                let mut k = 0;
                for i in 1..n {
                    rows.push(vals[k..k + i].to_vec());
                    k += i;
                }
                if let Some(p) = FinitePattern::from_rows(n, rows) {
                    if p.degree() == degree {
                        slow.push(p);
                    }
                }
                let mut idx = 0;
                while idx < cells && vals[idx] == max {
                    vals[idx] = 0;
                    idx += 1;
                }
                if idx == cells {
                    break;
                }
                vals[idx] += 1;
            }
            slow.sort_by_key(|p| p.flattened());
            assert_eq!(fast, slow, "degree {:?}", degree);
        }
    }
}
