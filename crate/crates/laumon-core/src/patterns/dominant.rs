//! Dominant integral weights `(μ, K)` and the subset `D(μ)` of affine patterns.

use core::fmt;

use super::affine::{fdiv, AffinePattern};
use crate::prelude::*;

/// Level `K` and `μ = (μ_{1−n},…,μ₀)`, stored in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    k: i64,
    mu: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightError {
    TooShort,
    NonPositiveLevel,
    NotDominant,
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::TooShort => write!(f, "a weight needs at least two components"),
            WeightError::NonPositiveLevel => write!(f, "the level must be positive"),
            WeightError::NotDominant => write!(f, "need mu_0 + K >= mu_(1-n) >= ... >= mu_0"),
        }
    }
}

impl DominantWeight {
    pub fn new(k: i64, mu: Vec<i64>) -> Result<DominantWeight, WeightError> {
        if mu.len() < 2 {
            return Err(WeightError::TooShort);
        }
        if k <= 0 {
            return Err(WeightError::NonPositiveLevel);
        }
        let last = *mu.last().unwrap();
        if mu[0] > last + k || mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(WeightError::NotDominant);
        }
        Ok(DominantWeight { k, mu })
    }

    /// `μ = 0` at level `k`.
    pub fn zero(n: usize, k: i64) -> DominantWeight {
        DominantWeight::new(k, vec![0; n]).expect("zero weight is dominant")
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn level(&self) -> i64 {
        self.k
    }

    /// `(μ_{1−n},…,μ₀)`.
    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    /// `μ̃_i = μ_{i mod n} + ⌊−i/n⌋K`, residue taken in `{1−n,…,0}`.
    pub fn mu_tilde(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let r = (i - 1).rem_euclid(n) + 1 - n; // in 1−n..=0
        self.mu[(r + n - 1) as usize] + fdiv(-i, n) * self.k
    }

    /// Whether `d_{ij} − μ̃_j ≤ d_{i+l,j+l} − μ̃_{j+l}` for all `j ≤ i`, `l ≥ 0`.
    ///
    /// Only `d_{ij} > 0` needs checking (otherwise dominance suffices), `j` runs
    /// over one period and `l` stops at `n(1 + max entry) + n`: past that bound the
    /// μ̃ difference alone exceeds every entry.
    pub fn contains(&self, p: &AffinePattern) -> bool {
        let n = self.n() as i64;
        assert_eq!(p.n() as i64, n, "weight and pattern have different n");
        let lstar = n * (1 + p.max_entry() as i64) + n;
        for j in 1..=n {
            for s in 0..p.max_len() as i64 {
                let i = j + s;
                let left = p.d(i, j) as i64 - self.mu_tilde(j);
                if p.d(i, j) == 0 {
                    continue;
                }
                for l in 1..=lstar {
                    if left > p.d(i + l, j + l) as i64 - self.mu_tilde(j + l) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Membership of `p` in `D(μ)`.
pub fn in_dmu(p: &AffinePattern, w: &DominantWeight) -> bool {
    w.contains(p)
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K={} mu=(", self.k)?;
        for (i, m) in self.mu.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tilde_and_dominance() {
        let w = DominantWeight::zero(3, 1);
        assert_eq!(w.mu_tilde(1), -1);
        assert_eq!(w.mu_tilde(0), 0);
        assert_eq!(w.mu_tilde(3), -1);
        assert_eq!(w.mu_tilde(-2), 0);
        assert_eq!(w.mu_tilde(4), -2);
        assert!(DominantWeight::new(1, vec![2, 0, 0]).is_err());
        assert!(DominantWeight::new(2, vec![2, 1, 0]).is_ok());
        assert!(DominantWeight::new(2, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn membership_examples() {
        let w = DominantWeight::zero(3, 1);
        assert!(in_dmu(&AffinePattern::vacuum(3), &w));
        assert!(!in_dmu(
            &AffinePattern::from_parts(&[&[1], &[], &[]]).unwrap(),
            &w
        ));
        assert!(!in_dmu(
            &AffinePattern::from_parts(&[&[], &[1], &[]]).unwrap(),
            &w
        ));
        assert!(in_dmu(
            &AffinePattern::from_parts(&[&[], &[], &[1]]).unwrap(),
            &w
        ));
    }

    #[test]
    fn consecutive_shifts_suffice() {
        // D(μ) is equivalently: d(j+s,j) − μ̃_j nondecreasing in j for each s.
        for w in [
            DominantWeight::zero(3, 1),
            DominantWeight::new(2, vec![1, 0, 0]).unwrap(),
        ] {
            for p in AffinePattern::up_to(3, 5) {
                let mut ok = true;
                for j in 1..=3i64 {
                    for s in 0..=p.max_len() as i64 {
                        let a = p.d(j + s, j) as i64 - w.mu_tilde(j);
                        let b = p.d(j + 1 + s, j + 1) as i64 - w.mu_tilde(j + 1);
                        ok &= a <= b;
                    }
                }
                assert_eq!(ok, in_dmu(&p, &w), "{}", p);
            }
        }
    }
}
