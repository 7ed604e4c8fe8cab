//! Sparse multivariate polynomials with integer coefficients.

use core::cmp::Ordering;
use core::fmt;

use super::int::Int;
use super::modp;
use super::mono::{Mono, Var};
use super::rat::Rat;
use crate::prelude::*;

/// Terms sorted by strictly decreasing monomial; no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: Vec<(Mono, Int)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Mono::ONE, c)],
            }
        }
    }

    pub fn var(v: Var) -> Poly {
        Poly {
            terms: vec![(Mono::var(v), Int::ONE)],
        }
    }

    pub fn monomial(m: Mono, c: Int) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(mut raw: Vec<(Mono, Int)>) -> Poly {
        raw.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<(Mono, Int)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = &*lc + &c;
                }
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Int)] {
        &self.terms
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Int> {
        if self.terms.is_empty() {
            Some(Int::ZERO)
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn lead(&self) -> Option<&(Mono, Int)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut out: Vec<Var> = Vec::new();
        for (m, _) in &self.terms {
            for (v, _) in m.factors() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out.sort();
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Int) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono, k: &Int) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(tm, c)| (tm.mul(m), c * k))
                .collect(),
        }
    }

    fn merge(a: &[(Mono, Int)], b: &[(Mono, Int)], negate_b: bool) -> Poly {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_b { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly::merge(&self.terms, &other.terms, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        Poly::merge(&self.terms, &other.terms, true)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_mono(*m, c);
        }
        if small.len() <= 8 {
            // Each shifted copy is already sorted; fold them in by merging.
            let mut acc = big.mul_mono(small.terms[0].0, &small.terms[0].1);
            for (m, c) in &small.terms[1..] {
                let part = big.mul_mono(*m, c);
                acc = acc.add(&part);
            }
            return acc;
        }
        let mut raw = Vec::with_capacity(small.len() * big.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                raw.push((m1.mul(*m2), c1 * c2));
            }
        }
        Poly::from_terms(raw)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Gcd of all coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits `self = k · p` with `p` primitive and positive leading coefficient.
    pub fn primitive(&self) -> (Int, Poly) {
        if self.is_zero() {
            return (Int::ZERO, Poly::zero());
        }
        let mut g = self.content();
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if g.is_one() {
            return (g, self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.div_exact(&g)))
            .collect();
        (g, Poly { terms })
    }

    /// Exact quotient `self / d` over ℤ, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                if !dc.divides(c) {
                    return None;
                }
                terms.push((m.div(*dm)?, c.div_exact(dc)));
            }
            return Some(Poly { terms });
        }
        let (lm, lc) = d.terms[0].clone();
        let mut rem: BTreeMap<Mono, Int> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Int)> = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            let qm = m.div(lm)?;
            if !lc.divides(c) {
                return None;
            }
            let qc = c.div_exact(&lc);
            for (dm, dc) in &d.terms {
                let key = qm.mul(*dm);
                let delta = &qc * dc;
                let remove = match rem.get_mut(&key) {
                    Some(v) => {
                        *v = &*v - &delta;
                        v.is_zero()
                    }
                    None => {
                        rem.insert(key, -&delta);
                        false
                    }
                };
                if remove {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Value modulo the engine prime at a point given per variable.
    pub fn eval_mod(&self, point: &modp::Point) -> u64 {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = c.mod_u64(modp::P);
            for (v, e) in m.factors() {
                t = modp::mul(t, point.pow(v, e));
            }
            acc = modp::add(acc, t);
        }
        acc
    }

    /// Exact rational value with every variable substituted.
    pub fn eval_rat(&self, value: &dyn Fn(Var) -> Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = Rat::from_int(c.clone());
            for (v, e) in m.factors() {
                t = &t * &value(v).pow(e as i32);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes `v := replacement`.
    pub fn substitute(&self, v: Var, replacement: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut raw: Vec<Poly> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul(replacement);
                powers.push(next);
            }
            raw.push(powers[e as usize].mul_mono(rest, c));
        }
        let mut all = Vec::new();
        for p in raw {
            all.extend(p.terms);
        }
        Poly::from_terms(all)
    }

    /// Coefficients with respect to `v`: `self = Σ_e coeffs[e] · v^e`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Mono, Int)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut all = Vec::new();
        for (e, p) in coeffs.iter().enumerate() {
            let m = Mono::var_pow(v, e as u32);
            for (tm, c) in &p.terms {
                all.push((tm.mul(m), c.clone()));
            }
        }
        Poly::from_terms(all)
    }

    /// Writes the polynomial with rational scale `k`, terms in increasing order.
    pub fn fmt_scaled(&self, k: &Rat, f: &mut dyn fmt::Write) -> fmt::Result {
        if self.is_zero() || k.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let coef = &Rat::from_int(c.clone()) * k;
            let neg = coef.signum() < 0;
            let mag = if neg { -&coef } else { coef };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            let o = a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_scaled(&Rat::one(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u8) -> Poly {
        Poly::var(Var::X(i))
    }

    #[test]
    fn ring_operations() {
        let a = x(1).add(&x(2));
        let b = x(1).sub(&x(2));
        let prod = a.mul(&b);
        let expect = x(1).mul(&x(1)).sub(&x(2).mul(&x(2)));
        assert_eq!(prod, expect);
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&x(1)), None);
        assert_eq!(a.pow(3).div_exact(&a.pow(2)), Some(a));
    }

    #[test]
    fn display_increasing_order() {
        let p = x(1).sub(&x(2)).add(&Poly::var(Var::H));
        assert_eq!(format!("{}", p), "x1 - x2 + h");
        let q = p.scale(&Int::from(-2));
        assert_eq!(format!("{}", q), "-2*x1 + 2*x2 - 2*h");
    }

    #[test]
    fn substitution_and_coefficients() {
        let p = x(1).mul(&x(1)).add(&Poly::var(Var::Hp));
        let r = p.substitute(Var::Hp, &Poly::var(Var::H).scale(&Int::from(3)));
        assert_eq!(format!("{}", r), "3*h + x1^2");
        let cs = p.coeffs_in(Var::X(1));
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_in(Var::X(1), &cs), p);
    }
}
