//! Monic rational functions `∏(U − z)^{m_z}` whose roots are linear forms.
//!
//! Equality is equality of root multisets, so identities between products of
//! shifted linear factors are decided without expanding anything.

use core::fmt;

use super::lin::Lin;
use super::scalar::Scalar;
use super::series::SplitU;
use crate::prelude::*;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinRoots {
    roots: BTreeMap<Lin, i32>,
}

impl LinRoots {
    pub fn one() -> LinRoots {
        LinRoots::default()
    }

    /// Multiplies by `(U − z)^m`; negative `m` divides.
    pub fn push(&mut self, z: Lin, m: i32) {
        if m == 0 {
            return;
        }
        let e = self.roots.entry(z).or_insert(0);
        *e += m;
        if *e == 0 {
            self.roots.remove(&z);
        }
    }

    pub fn from_lists(
        zeros: impl IntoIterator<Item = Lin>,
        poles: impl IntoIterator<Item = Lin>,
    ) -> LinRoots {
        let mut r = LinRoots::one();
        for z in zeros {
            r.push(z, 1);
        }
        for p in poles {
            r.push(p, -1);
        }
        r
    }

    pub fn roots(&self) -> impl Iterator<Item = (&Lin, &i32)> {
        self.roots.iter()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn degree(&self) -> i32 {
        self.roots.values().sum()
    }

    pub fn mul(&self, o: &LinRoots) -> LinRoots {
        let mut out = self.clone();
        for (z, m) in &o.roots {
            out.push(*z, *m);
        }
        out
    }

    pub fn pow(&self, e: i32) -> LinRoots {
        LinRoots {
            roots: self
                .roots
                .iter()
                .filter(|_| e != 0)
                .map(|(z, m)| (*z, m * e))
                .collect(),
        }
    }

    pub fn inv(&self) -> LinRoots {
        self.pow(-1)
    }

    pub fn div(&self, o: &LinRoots) -> LinRoots {
        self.mul(&o.inv())
    }

    /// `f(U + c)`.
    pub fn shift(&self, c: &Lin) -> LinRoots {
        LinRoots {
            roots: self.roots.iter().map(|(z, m)| (z.sub(c), *m)).collect(),
        }
    }

    pub fn to_split(&self) -> SplitU {
        let mut zeros = Vec::new();
        let mut poles = Vec::new();
        for (z, m) in &self.roots {
            let s = Scalar::from_lin(z);
            let target = if *m > 0 { &mut zeros } else { &mut poles };
            for _ in 0..m.abs() {
                target.push(s.clone());
            }
        }
        SplitU::new(Scalar::one(), zeros, poles)
    }
}

impl fmt::Display for LinRoots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "1");
        }
        for (i, (z, m)) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "(U - ({}))^{}", z, m)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Var;

    #[test]
    fn cancellation_and_shift() {
        let x = Lin::var(Var::X(1));
        let h = Lin::var(Var::H);
        let a = LinRoots::from_lists([x, x.add(&h)], [x]);
        assert_eq!(a.degree(), 1);
        let b = a.shift(&h);
        assert_eq!(b, LinRoots::from_lists([x], []));
        assert!(a.div(&a).is_one());
        let s = a.to_split();
        assert_eq!(s.zeros().len(), 1);
    }
}
