//! Cylindric plane partitions attached to `D(μ)`.
//!
//! For `x ∈ ℤ` the pile `Π(x, y)` counts the rows `s` with
//! `d(s−x, −x) ≥ y + μ̃_{−x}`; it is defined above the wall `y > −μ̃_{−x}`.
//! One period `x = −1,…,−n` determines everything through
//! `Π(x+n, y) = Π(x, y+K)`. The stored piles are partitions in `y`, and the
//! cylindric condition is `Π(x, y) ≥ Π(x+1, y)` wherever both are defined.

use core::fmt;

use super::affine::{md, AffinePattern};
use super::dominant::DominantWeight;
use super::partition::Partition;
use crate::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CylindricPartition {
    weight: DominantWeight,
    /// `piles[c−1][t] = Π(−c, wall(−c) + 1 + t)`.
    piles: Vec<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CylindricError {
    NotInDmu,
    Shape,
    /// `Π(x, y) < Π(x+1, y)` at the given point.
    NotCylindric {
        x: i64,
        y: i64,
    },
}

impl fmt::Display for CylindricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CylindricError::NotInDmu => write!(f, "pattern is outside D(mu)"),
            CylindricError::Shape => write!(f, "expected one pile per residue"),
            CylindricError::NotCylindric { x, y } => {
                write!(f, "pile order fails at x={}, y={}", x, y)
            }
        }
    }
}

impl CylindricPartition {
    pub fn empty(weight: DominantWeight) -> CylindricPartition {
        let n = weight.n();
        CylindricPartition {
            weight,
            piles: vec![Partition::empty(); n],
        }
    }

    /// Builds and validates a cylindric partition from its piles `x = −1,…,−n`.
    pub fn from_piles(
        weight: DominantWeight,
        piles: Vec<Partition>,
    ) -> Result<CylindricPartition, CylindricError> {
        if piles.len() != weight.n() {
            return Err(CylindricError::Shape);
        }
        let c = CylindricPartition { weight, piles };
        c.check()?;
        Ok(c)
    }

    pub fn weight(&self) -> &DominantWeight {
        &self.weight
    }

    pub fn piles(&self) -> &[Partition] {
        &self.piles
    }

    /// `−μ̃_{−x}`; the pile is infinite at or below this height.
    pub fn wall(&self, x: i64) -> i64 {
        -self.weight.mu_tilde(-x)
    }

    /// `Π(x, y)`, or `None` when `y` is at or below the wall.
    pub fn pile(&self, x: i64, y: i64) -> Option<u32> {
        let n = self.weight.n() as i64;
        let k = self.weight.level();
        let q = (x + n).div_euclid(n);
        let (x0, y0) = (x - q * n, y + q * k); // x0 ∈ −n..=−1
        let wall = self.wall(x0);
        if y0 <= wall {
            return None;
        }
        Some(self.piles[(-x0 - 1) as usize].part((y0 - wall - 1) as usize))
    }

    fn check(&self) -> Result<(), CylindricError> {
        let n = self.weight.n() as i64;
        for x in -n..0 {
            let top =
                self.wall(x) + 1 + self.piles[(-x - 1) as usize].len() as i64 + self.weight.level();
            for y in self.wall(x) + 1..=top {
                let here = self.pile(x, y).expect("above the wall");
                if let Some(next) = self.pile(x + 1, y) {
                    if here < next {
                        return Err(CylindricError::NotCylindric { x, y });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn total(&self) -> u32 {
        self.piles.iter().map(|p| p.size()).sum()
    }

    /// Degree vector `(d_1,…,d_n)`: the `s`-th box of a layer of pile `x`
    /// has residue `s − x`.
    pub fn degree(&self) -> Vec<u32> {
        let n = self.weight.n();
        let mut deg = vec![0u32; n];
        for (c, pile) in self.piles.iter().enumerate() {
            let x = -(c as i64) - 1;
            for layer in pile.parts() {
                for s in 0..*layer as i64 {
                    deg[md(s - x, n) - 1] += 1;
                }
            }
        }
        deg
    }

    /// Reduced heights `h(x, y) = d(y−x, −x)` for `x ∈ {−n,…,−1}`, `y ≥ 0`.
    pub fn heights(&self) -> Vec<Vec<u32>> {
        self.to_pattern()
            .lambdas()
            .iter()
            .map(|l| l.parts().to_vec())
            .collect()
    }

    pub fn to_pattern(&self) -> AffinePattern {
        AffinePattern::new(self.piles.iter().map(|p| p.conjugate()).collect())
    }
}

/// The cylindric partition of a pattern in `D(μ)`.
pub fn cylindric(
    p: &AffinePattern,
    w: &DominantWeight,
) -> Result<CylindricPartition, CylindricError> {
    if !w.contains(p) {
        return Err(CylindricError::NotInDmu);
    }
    // Π(−c, wall+y′) = #{s : λ^c_s ≥ y′}, the conjugate of λ^c.
    let piles = p.lambdas().iter().map(|l| l.conjugate()).collect();
    CylindricPartition::from_piles(w.clone(), piles)
}

/// Inverse of [`cylindric`].
pub fn from_cylindric(c: &CylindricPartition) -> AffinePattern {
    c.to_pattern()
}

impl fmt::Display for CylindricPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (c, p) in self.piles.iter().enumerate() {
            if c > 0 {
                write!(f, " ")?;
            }
            write!(f, "x={}:{}", -(c as i64) - 1, p)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let w = DominantWeight::zero(3, 1);
        let vac = cylindric(&AffinePattern::vacuum(3), &w).unwrap();
        assert_eq!(vac, CylindricPartition::empty(w.clone()));
        let p = AffinePattern::from_parts(&[&[], &[], &[1]]).unwrap();
        let c = cylindric(&p, &w).unwrap();
        assert_eq!(c.total(), 1);
        assert_eq!(c.pile(-3, 2), Some(1));
        assert_eq!(c.pile(-3, 1), None);
        assert_eq!(c.pile(0, 1), Some(1));
        assert_eq!(c.degree(), vec![0, 0, 1]);
        let bad = AffinePattern::from_parts(&[&[1], &[], &[]]).unwrap();
        assert_eq!(cylindric(&bad, &w), Err(CylindricError::NotInDmu));
        let bad_piles = vec![
            Partition::empty(),
            Partition::new(vec![1]).unwrap(),
            Partition::empty(),
        ];
        assert!(CylindricPartition::from_piles(w, bad_piles).is_err());
    }

    #[test]
    fn roundtrip_and_grading() {
        for w in [
            DominantWeight::zero(3, 1),
            DominantWeight::new(2, vec![1, 1, 0]).unwrap(),
        ] {
            for p in AffinePattern::up_to(3, 4) {
                match cylindric(&p, &w) {
                    Ok(c) => {
                        assert_eq!(from_cylindric(&c), p);
                        assert_eq!(c.degree(), p.degree());
                        assert_eq!(c.total(), p.total());
                    }
                    Err(e) => {
                        assert_eq!(e, CylindricError::NotInDmu);
                        // Outside D(μ) the piles are not cylindric either.
                        let piles = p.lambdas().iter().map(|l| l.conjugate()).collect();
                        assert!(
                            CylindricPartition::from_piles(w.clone(), piles).is_err(),
                            "{}",
                            p
                        );
                    }
                }
            }
        }
    }
}
