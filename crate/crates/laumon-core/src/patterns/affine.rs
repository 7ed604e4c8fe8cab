//! Fixed points of the affine Laumon space, stored as `n` partitions
//! `(λ¹,…,λⁿ)` with `d_{ij} = λ^{(j mod n)}_{i−j}`.
//!
//! Under this storage the periodicity `d_{i+n,j+n} = d_{ij}`, the column
//! inequalities and the eventual vanishing of `d_{ij}` are automatic.

use core::fmt;

use super::partition::Partition;
use crate::exactalg::{Lin, Var};
use crate::prelude::*;

/// Floor division for a positive divisor.
pub fn fdiv(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Residue of `j` in `{1,…,n}`.
pub fn md(j: i64, n: usize) -> usize {
    ((j - 1).rem_euclid(n as i64) + 1) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePattern {
    n: usize,
    lambdas: Vec<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvertError {
    Shape,
    /// The chain inequality for column `l` fails between rows `k` and the next.
    ChainViolated {
        k: usize,
        l: usize,
    },
}

impl fmt::Display for ConvertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvertError::Shape => write!(f, "expected an n×n collection of diagrams"),
            ConvertError::ChainViolated { k, l } => {
                write!(f, "containment fails after lambda^({},{})", k, l)
            }
        }
    }
}

impl AffinePattern {
    pub fn vacuum(n: usize) -> AffinePattern {
        AffinePattern {
            n,
            lambdas: vec![Partition::empty(); n],
        }
    }

    pub fn new(lambdas: Vec<Partition>) -> AffinePattern {
        assert!(lambdas.len() >= 2);
        AffinePattern {
            n: lambdas.len(),
            lambdas,
        }
    }

    pub fn from_parts(parts: &[&[u32]]) -> Option<AffinePattern> {
        let lambdas = parts
            .iter()
            .map(|p| Partition::new(p.to_vec()))
            .collect::<Option<Vec<_>>>()?;
        Some(AffinePattern::new(lambdas))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambdas(&self) -> &[Partition] {
        &self.lambdas
    }

    /// `λ^l` for `l ∈ 1..=n`.
    pub fn lambda(&self, l: usize) -> &Partition {
        &self.lambdas[l - 1]
    }

    pub fn d(&self, i: i64, j: i64) -> u32 {
        if i < j {
            return 0;
        }
        self.lambdas[md(j, self.n) - 1].part((i - j) as usize)
    }

    /// Longest partition length; `d_{ij} = 0` once `i − j` reaches it.
    pub fn max_len(&self) -> usize {
        self.lambdas.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn max_entry(&self) -> u32 {
        self.lambdas.iter().map(|l| l.part(0)).max().unwrap_or(0)
    }

    /// `(d_1,…,d_n)` with `d_k = Σ_{j≤k} d_{kj}`; `d_n` plays the role of `d_0`.
    pub fn degree(&self) -> Vec<u32> {
        let n = self.n as i64;
        (1..=n)
            .map(|k| {
                let lo = k - self.max_len() as i64;
                (lo..=k).map(|j| self.d(k, j)).sum()
            })
            .collect()
    }

    pub fn total(&self) -> u32 {
        self.lambdas.iter().map(|l| l.size()).sum()
    }

    /// Changes `d_{ij}` (and its periodic copies) by `delta` when the result is valid.
    pub fn bump(&self, i: i64, j: i64, delta: i32) -> Option<AffinePattern> {
        if i < j {
            return None;
        }
        let l = md(j, self.n);
        let new = self.lambdas[l - 1].bump((i - j) as usize, delta)?;
        let mut out = self.clone();
        out.lambdas[l - 1] = new;
        Some(out)
    }

    /// `p_{ij} = −x_{(j mod n)} + d_{ij} ħ + ⌊−j/n⌋ ħ′`, with ħ′ given as a linear form.
    pub fn weight_with(&self, i: i64, j: i64, hp: &Lin) -> Lin {
        let x = Lin::var(Var::X(md(j, self.n) as u8)).neg();
        let base = x.plus(Var::H, self.d(i, j) as i64);
        let f = fdiv(-j, self.n as i64);
        if f == 0 {
            base
        } else {
            base.add(&hp.scale(f, 1))
        }
    }

    /// `p_{ij}` with ħ′ a free variable.
    pub fn weight_p(&self, i: i64, j: i64) -> Lin {
        self.weight_with(i, j, &Lin::var(Var::Hp))
    }

    /// The `n²` diagrams `λ^{kl}`, indexed `[k−1][l−1]`.
    pub fn to_collection(&self) -> Vec<Vec<Partition>> {
        let n = self.n;
        (1..=n)
            .map(|k| {
                (1..=n)
                    .map(|l| {
                        let off = (k as i64 - l as i64).rem_euclid(n as i64) as usize;
                        let lam = &self.lambdas[l - 1];
                        let parts: Vec<u32> = (0..)
                            .map(|i| n * i + off)
                            .take_while(|s| *s < lam.len())
                            .map(|s| lam.part(s))
                            .collect();
                        Partition::new(parts).expect("subsequence of a partition")
                    })
                    .collect()
            })
            .collect()
    }

    /// Inverse of [`AffinePattern::to_collection`]; rejects collections that
    /// break the chain inequalities.
    pub fn from_collection(coll: &[Vec<Partition>]) -> Result<AffinePattern, ConvertError> {
        let n = coll.len();
        if n < 2 || coll.iter().any(|row| row.len() != n) {
            return Err(ConvertError::Shape);
        }
        let mut lambdas = Vec::with_capacity(n);
        for l in 1..=n {
            // Chain order k = l, l+1, …, l−1 (cyclically), then the shifted containment.
            let order: Vec<usize> = (0..n).map(|o| (l - 1 + o) % n + 1).collect();
            for w in 0..n {
                let k = order[w];
                let a = &coll[k - 1][l - 1];
                if w + 1 < n {
                    let b = &coll[order[w + 1] - 1][l - 1];
                    if !a.contains(b) {
                        return Err(ConvertError::ChainViolated { k, l });
                    }
                } else {
                    let b = &coll[l - 1][l - 1];
                    if (0..b.len()).any(|i| a.part(i) < b.part(i + 1)) {
                        return Err(ConvertError::ChainViolated { k, l });
                    }
                }
            }
            let max_len = order
                .iter()
                .map(|k| coll[k - 1][l - 1].len())
                .max()
                .unwrap_or(0);
            let mut parts = Vec::new();
            for i in 0..max_len {
                for k in &order {
                    parts.push(coll[k - 1][l - 1].part(i));
                }
            }
            lambdas.push(Partition::new(parts).ok_or(ConvertError::ChainViolated { k: l, l })?);
        }
        Ok(AffinePattern::new(lambdas))
    }

    /// All patterns with degree vector `(d_1,…,d_n)`, in lexicographic order of the λ-tuple.
    pub fn enumerate(n: usize, degree: &[u32]) -> Vec<AffinePattern> {
        assert_eq!(degree.len(), n, "affine degree vector has n entries");
        let total: u32 = degree.iter().sum();
        let mut out: Vec<AffinePattern> = tuples_of_size(n, total)
            .into_iter()
            .filter(|p| p.degree() == degree)
            .collect();
        out.sort();
        out
    }

    /// All patterns with total size at most `max_total`, ordered by degree vector.
    pub fn up_to(n: usize, max_total: u32) -> Vec<AffinePattern> {
        let mut out = Vec::new();
        for t in 0..=max_total {
            let mut level = tuples_of_size(n, t);
            level.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
            out.extend(level);
        }
        out
    }
}

/// Every n-tuple of partitions with total size `total`.
pub fn tuples_of_size(n: usize, total: u32) -> Vec<AffinePattern> {
    let mut out = Vec::new();
    fn rec(n: usize, left: u32, cur: &mut Vec<Partition>, out: &mut Vec<AffinePattern>) {
        if cur.len() == n - 1 {
            for p in Partition::all(left) {
                cur.push(p);
                out.push(AffinePattern::new(cur.clone()));
                cur.pop();
            }
            return;
        }
        for m in 0..=left {
            for p in Partition::all(m) {
                cur.push(p);
                rec(n, left - m, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, total, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for AffinePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.lambdas.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;

    fn box1() -> AffinePattern {
        AffinePattern::from_parts(&[&[1], &[], &[]]).unwrap()
    }

    #[test]
    fn enumerate_small() {
        let ps = AffinePattern::enumerate(3, &[1, 0, 0]);
        assert_eq!(ps, vec![box1()]);
        assert_eq!(
            AffinePattern::enumerate(3, &[0, 0, 0]),
            vec![AffinePattern::vacuum(3)]
        );
        assert_eq!(AffinePattern::enumerate(3, &[1, 1, 0]).len(), 2);
    }

    #[test]
    fn weights() {
        let v = AffinePattern::vacuum(3);
        let s = |l: Lin| Scalar::from_lin(&l).to_string();
        assert_eq!(s(v.weight_p(1, 1)), "-x1 - hp");
        assert_eq!(s(v.weight_p(0, 0)), "-x3");
        assert_eq!(s(box1().weight_p(1, 1)), "-x1 + h - hp");
    }

    #[test]
    fn collection_roundtrip() {
        let c = box1().to_collection();
        assert_eq!(c[0][0].parts(), &[1]);
        let nonempty = c.iter().flatten().filter(|p| !p.is_empty()).count();
        assert_eq!(nonempty, 1);
        for p in AffinePattern::up_to(3, 5) {
            let coll = p.to_collection();
            assert_eq!(AffinePattern::from_collection(&coll), Ok(p.clone()));
            for k in 1..=3 {
                let dk: u32 = coll[k - 1].iter().map(|l| l.size()).sum();
                assert_eq!(dk, p.degree()[k - 1]);
            }
        }
        let mut bad = vec![vec![Partition::empty(); 3]; 3];
        bad[1][0] = Partition::new(vec![1]).unwrap();
        assert!(AffinePattern::from_collection(&bad).is_err());
    }
}
