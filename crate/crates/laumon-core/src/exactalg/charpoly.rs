//! Laurent polynomials in t₁²,…,tₙ², q^{1/2}, q′ with integer coefficients.

use core::fmt;

use super::int::Int;
use super::lin::Lin;
use super::mono::Var;
use super::scalar::Scalar;
use crate::prelude::*;

/// Exponent data of one monomial `∏ tᵢ^{2aᵢ} · q^{q2/2} · q′^{qp}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharMono {
    pub qp: i32,
    pub q2: i32,
    pub t: Vec<i32>,
}

impl CharMono {
    pub fn new(t: Vec<i32>, q2: i32, qp: i32) -> CharMono {
        CharMono { qp, q2, t }
    }

    fn mul(&self, o: &CharMono) -> CharMono {
        CharMono {
            qp: self.qp + o.qp,
            q2: self.q2 + o.q2,
            t: self.t.iter().zip(o.t.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    fn div(&self, o: &CharMono) -> CharMono {
        CharMono {
            qp: self.qp - o.qp,
            q2: self.q2 - o.q2,
            t: self.t.iter().zip(o.t.iter()).map(|(a, b)| a - b).collect(),
        }
    }

    fn coords(&self) -> Vec<i32> {
        let mut v = vec![self.qp, self.q2];
        v.extend(self.t.iter().copied());
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CharPoly {
    n: usize,
    terms: BTreeMap<CharMono, Int>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharError {
    DivisionByZero,
    /// The division left this nonzero remainder.
    NotDivisible(CharPoly),
    NegativeCoefficient(CharMono),
    HalfIntegralQ(CharMono),
}

impl fmt::Display for CharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharError::DivisionByZero => write!(f, "division by the zero character"),
            CharError::NotDivisible(r) => write!(f, "not divisible, remainder {}", r),
            CharError::NegativeCoefficient(m) => write!(f, "negative coefficient at {:?}", m),
            CharError::HalfIntegralQ(m) => write!(f, "half-integral q exponent at {:?}", m),
        }
    }
}

impl CharPoly {
    pub fn zero(n: usize) -> CharPoly {
        CharPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> CharPoly {
        CharPoly::monomial(n, vec![0; n], 0, 0, Int::ONE)
    }

    pub fn monomial(n: usize, t: Vec<i32>, q2: i32, qp: i32, c: Int) -> CharPoly {
        assert_eq!(t.len(), n);
        let mut p = CharPoly::zero(n);
        p.add_term(CharMono::new(t, q2, qp), c);
        p
    }

    /// `q^{b}` for integral `b`.
    pub fn q(n: usize, b: i32) -> CharPoly {
        CharPoly::monomial(n, vec![0; n], 2 * b, 0, Int::ONE)
    }

    pub fn qp(n: usize, c: i32) -> CharPoly {
        CharPoly::monomial(n, vec![0; n], 0, c, Int::ONE)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, m: CharMono, c: Int) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CharMono, &Int)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> CharPoly {
        CharPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &CharPoly) -> CharPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Int) -> CharPoly {
        let mut out = CharPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, o: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Value at t = q = q′ = 1.
    pub fn at_one(&self) -> Int {
        let mut acc = Int::ZERO;
        for c in self.terms.values() {
            acc = &acc + c;
        }
        acc
    }

    /// Exact quotient in the Laurent ring; errors with the remainder when
    /// `b` does not divide `self`.
    pub fn div_exact(&self, b: &CharPoly) -> Result<CharPoly, CharError> {
        if b.is_zero() {
            return Err(CharError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(CharPoly::zero(self.n));
        }
        // Coordinate-wise bounds on the quotient's support (extremes add under products).
        let dims = 2 + self.n;
        let bounds = |p: &CharPoly| {
            let mut lo = vec![i32::MAX; dims];
            let mut hi = vec![i32::MIN; dims];
            for m in p.terms.keys() {
                for (i, x) in m.coords().into_iter().enumerate() {
                    lo[i] = lo[i].min(x);
                    hi[i] = hi[i].max(x);
                }
            }
            (lo, hi)
        };
        let (alo, ahi) = bounds(self);
        let (blo, bhi) = bounds(b);
        let (blead, bc) = b
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot = CharPoly::zero(self.n);
        while let Some((m, c)) = rem
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            let qm = m.div(&blead);
            let inside = qm
                .coords()
                .iter()
                .enumerate()
                .all(|(i, x)| *x >= alo[i] - blo[i] && *x <= ahi[i] - bhi[i]);
            if !inside || !bc.divides(&c) {
                return Err(CharError::NotDivisible(rem));
            }
            let qc = c.div_exact(&bc);
            for (bm, bcoef) in &b.terms {
                rem.add_term(qm.mul(bm), -(&qc * bcoef));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// The weight multiset: `q^b q′^c ∏tᵢ^{2aᵢ}` ↦ `bħ + cħ′ + Σ aᵢxᵢ`, repeated by coefficient.
    pub fn to_weights(&self) -> Result<Vec<(Lin, u64)>, CharError> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            if c.is_negative() {
                return Err(CharError::NegativeCoefficient(m.clone()));
            }
            if m.q2 % 2 != 0 {
                return Err(CharError::HalfIntegralQ(m.clone()));
            }
            let mut w = Lin::ZERO
                .plus(Var::H, (m.q2 / 2) as i64)
                .plus(Var::Hp, m.qp as i64);
            for (i, a) in m.t.iter().enumerate() {
                if *a != 0 {
                    w = w.plus(Var::X(i as u8 + 1), *a as i64);
                }
            }
            let mult = c.to_i64().expect("multiplicity fits") as u64;
            out.push((w, mult));
        }
        Ok(out)
    }

    /// Product of all weights, each with its multiplicity.
    pub fn weight_product(&self) -> Result<Scalar, CharError> {
        let mut acc = Scalar::one();
        for (w, m) in self.to_weights()? {
            acc = acc.mul(&Scalar::from_lin(&w).pow(m as i32));
        }
        Ok(acc)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, a) in m.t.iter().enumerate() {
                if *a != 0 {
                    write!(f, "*t{}^{}", i + 1, 2 * a)?;
                }
            }
            if m.q2 != 0 {
                if m.q2 % 2 == 0 {
                    write!(f, "*q^{}", m.q2 / 2)?;
                } else {
                    write!(f, "*q^({}/2)", m.q2)?;
                }
            }
            if m.qp != 0 {
                write!(f, "*qp^{}", m.qp)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: i32) -> CharPoly {
        CharPoly::qp(2, c)
    }

    #[test]
    fn division_examples() {
        let one = CharPoly::one(2);
        let b = qp(1).sub(&one);
        let a = qp(2).sub(&one);
        assert_eq!(a.div_exact(&b), Ok(qp(1).add(&one)));
        assert_eq!(CharPoly::zero(2).div_exact(&b), Ok(CharPoly::zero(2)));
        assert!(matches!(
            qp(1).add(&one).div_exact(&b),
            Err(CharError::NotDivisible(_))
        ));
        // Laurent case: (q′⁻¹ − q′)/(q′ − 1) = −q′⁻¹ − 1
        let c = qp(-1).sub(&qp(1));
        assert_eq!(c.div_exact(&b), Ok(qp(-1).add(&one).neg()));
    }

    #[test]
    fn weights() {
        let n = 2;
        let a = CharPoly::monomial(n, vec![1, 0], 2, 0, Int::from(2)).add(&CharPoly::qp(n, -1));
        let w = a.to_weights().unwrap();
        let total: u64 = w.iter().map(|(_, m)| *m).sum();
        assert_eq!(total, 3);
        let prod = a.weight_product().unwrap();
        let expect = (&Scalar::h() + &Scalar::x(1))
            .pow(2)
            .mul(&Scalar::hp().neg());
        assert_eq!(prod, expect);
        assert!(CharPoly::q(n, 1)
            .sub(&CharPoly::one(n))
            .to_weights()
            .is_err());
        assert!(CharPoly::monomial(n, vec![0, 0], 1, 0, Int::ONE)
            .to_weights()
            .is_err());
    }
}
