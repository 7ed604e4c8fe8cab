//! Elements of ℚ(x₁,…,x₁₃,ħ,ħ′).
//!
//! A [`Scalar`] is stored partially factored as
//!
//! ```text
//!     c · num · ∏ Lₖ^{eₖ} / den
//! ```
//!
//! with `c` rational, `num` and `den` primitive integer polynomials with
//! positive leading coefficient, and each `Lₖ` a primitive linear form
//! (an *atom*) raised to a nonzero integer power. Torus weights and matrix
//! coefficients are products of linear forms, so products and quotients of
//! such values never expand anything; only sums do. After a sum the new
//! numerator is trial-divided by the atoms that occur with negative exponent,
//! using an evaluation modulo 2⁶¹−1 at a point on the atom's zero set as a
//! cheap necessary condition before exact division.
//!
//! The stored form is not unique (a numerator may still contain linear
//! factors that were never split off), but the represented fraction is
//! always reduced, so [`Scalar::canonical`] expands it into a unique
//! `num / den` with `den` monic under graded-lex order.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd::gcd;
use super::int::Int;
use super::lin::Lin;
use super::modp;
use super::mono::{Mono, Var};
use super::poly::Poly;
use super::rat::Rat;
use crate::prelude::*;

/// Primitive linear form; index 15 is the constant term. The coefficient of
/// the largest variable present is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom([i32; 16]);

impl Atom {
    fn to_poly(self) -> Poly {
        let mut terms = Vec::new();
        for (i, c) in self.0.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let m = if i == 15 {
                Mono::ONE
            } else {
                Mono::var(Var::from_byte(i as u32))
            };
            terms.push((m, Int::from(*c as i64)));
        }
        Poly::from_terms(terms)
    }

    /// A point of (ℤ/p)¹⁵ on the hyperplane `self = 0`.
    fn zero_point(self) -> modp::Point {
        let mut seed = 0x5151_2024u64;
        for c in self.0.iter() {
            seed = seed.rotate_left(7) ^ (*c as i64 as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        }
        let mut pt = modp::Point::random(seed);
        let lead = (0..15)
            .rev()
            .find(|i| self.0[*i] != 0)
            .expect("atom has a variable");
        let mut rest = modp::from_i64(self.0[15] as i64);
        for i in 0..15 {
            if i != lead && self.0[i] != 0 {
                let v = Var::from_byte(i as u32);
                rest = modp::add(rest, modp::mul(modp::from_i64(self.0[i] as i64), pt.get(v)));
            }
        }
        let a = modp::from_i64(self.0[lead] as i64);
        let val = modp::mul(modp::sub(0, rest), modp::inv(a));
        pt.set(Var::from_byte(lead as u32), val);
        pt
    }

    fn eval(self, value: &dyn Fn(Var) -> Rat) -> Rat {
        let mut acc = Rat::from(self.0[15] as i64);
        for i in 0..15 {
            if self.0[i] != 0 {
                let t = &Rat::from(self.0[i] as i64) * &value(Var::from_byte(i as u32));
                acc = &acc + &t;
            }
        }
        acc
    }

    /// Splits a polynomial of degree exactly one into `k · atom`, when the
    /// coefficients fit.
    fn from_linear_poly(p: &Poly) -> Option<(Int, Atom)> {
        if p.total_degree() != 1 {
            return None;
        }
        let (k, prim) = p.primitive();
        let mut a = [0i32; 16];
        for (m, c) in prim.terms() {
            let idx = if m.is_one() {
                15
            } else {
                let (v, _) = m.factors().next().unwrap();
                v.byte() as usize
            };
            a[idx] = i32::try_from(c.to_i64()?).ok()?;
        }
        Some((k, Atom(a)))
    }

    /// Normalizes integer coefficients to an atom plus integer scale.
    fn from_ints(coef: &[i64; 16]) -> Option<(i64, Atom)> {
        let lead = (0..15).rev().find(|i| coef[*i] != 0)?;
        let mut g = 0i64;
        for c in coef.iter() {
            let (mut a, mut b) = (g, c.abs());
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            g = a;
        }
        if coef[lead] < 0 {
            g = -g;
        }
        let mut a = [0i32; 16];
        for i in 0..16 {
            a[i] = i32::try_from(coef[i] / g).ok()?;
        }
        Some((g, Atom(a)))
    }
}

#[derive(Clone, Debug)]
pub struct Scalar {
    c: Rat,
    num: Poly,
    atoms: Vec<(Atom, i32)>,
    den: Poly,
}

/// Raised by checked division and by specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    /// A denominator factor vanished under substitution; carries its text form.
    VanishingDenominator(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::VanishingDenominator(s) => write!(f, "denominator factor {} vanishes", s),
        }
    }
}

fn merge_atoms(a: &[(Atom, i32)], b: &[(Atom, i32)], sign: i32) -> Vec<(Atom, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = if i == a.len() {
            Ordering::Greater
        } else if j == b.len() {
            Ordering::Less
        } else {
            a[i].0.cmp(&b[j].0)
        };
        match ord {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, sign * b[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let e = a[i].1 + sign * b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn int_lcm(a: &Int, b: &Int) -> Int {
    let g = a.gcd(b);
    &a.div_exact(&g) * b
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            c: Rat::zero(),
            num: Poly::one(),
            atoms: Vec::new(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Scalar {
        Scalar {
            c,
            num: Poly::one(),
            atoms: Vec::new(),
            den: Poly::one(),
        }
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar::from_rat(Rat::from(v))
    }

    pub fn ratio(a: i64, b: i64) -> Scalar {
        Scalar::from_rat(Rat::ratio(a, b))
    }

    pub fn var(v: Var) -> Scalar {
        Scalar::from_lin(&Lin::var(v))
    }

    pub fn x(i: usize) -> Scalar {
        Scalar::var(Var::X(i as u8))
    }

    pub fn h() -> Scalar {
        Scalar::var(Var::H)
    }

    pub fn hp() -> Scalar {
        Scalar::var(Var::Hp)
    }

    pub fn from_lin(l: &Lin) -> Scalar {
        let (coef, den) = l.raw();
        match Atom::from_ints(coef) {
            Some((g, atom)) => Scalar {
                c: Rat::ratio(g, den),
                num: Poly::one(),
                atoms: vec![(atom, 1)],
                den: Poly::one(),
            },
            None => Scalar::from_rat(Rat::ratio(coef[15], den)),
        }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar::normalize(Rat::one(), p, Vec::new(), Poly::one())
    }

    /// `num / den` for integer polynomials; errors on a zero denominator.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalize(Rat::one(), num, Vec::new(), den))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.c.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.is_zero() || (self.atoms.is_empty() && self.num.is_one() && self.den.is_one())
    }

    /// The value when constant.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.c.clone())
        } else {
            None
        }
    }

    /// True when the denominator is a monomial, so the value is a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one() && self.atoms.iter().all(|(_, e)| *e > 0)
    }

    fn atomize(p: &Poly) -> Option<(Int, Atom)> {
        Atom::from_linear_poly(p)
    }

    /// Restores the representation invariants.
    fn normalize(c: Rat, num: Poly, atoms: Vec<(Atom, i32)>, den: Poly) -> Scalar {
        if c.is_zero() || num.is_zero() {
            return Scalar::zero();
        }
        assert!(!den.is_zero(), "zero denominator");
        let (kn, mut num) = num.primitive();
        let (kd, mut den) = den.primitive();
        let mut c = &(&c * &Rat::from_int(kn)) / &Rat::from_int(kd);
        let mut atoms = atoms;
        let mut extra: Vec<(Atom, i32)> = Vec::new();
        if let Some((k, a)) = Scalar::atomize(&num) {
            c = &c * &Rat::from_int(k);
            extra.push((a, 1));
            num = Poly::one();
        }
        if let Some((k, a)) = Scalar::atomize(&den) {
            c = &c / &Rat::from_int(k);
            extra.push((a, -1));
            den = Poly::one();
        }
        if !extra.is_empty() {
            extra.sort();
            let mut merged: Vec<(Atom, i32)> = Vec::new();
            for (a, e) in extra {
                match merged.last_mut() {
                    Some((la, le)) if *la == a => *le += e,
                    _ => merged.push((a, e)),
                }
            }
            merged.retain(|(_, e)| *e != 0);
            atoms = merge_atoms(&atoms, &merged, 1);
        }
        if !num.is_one() || !den.is_one() {
            Scalar::cancel(&mut c, &mut num, &mut atoms, &mut den);
        }
        Scalar { c, num, atoms, den }
    }

    /// Cancels atoms against `num`/`den` and `num` against `den`.
    fn cancel(c: &mut Rat, num: &mut Poly, atoms: &mut Vec<(Atom, i32)>, den: &mut Poly) {
        let mut changed = true;
        while changed {
            changed = false;
            for idx in 0..atoms.len() {
                let (atom, e) = atoms[idx];
                let target: &mut Poly = if e < 0 { &mut *num } else { &mut *den };
                if target.is_constant() || e == 0 {
                    continue;
                }
                let pt = atom.zero_point();
                let lp = atom.to_poly();
                let mut left = e.abs();
                while left > 0 && !target.is_constant() && target.eval_mod(&pt) == 0 {
                    match target.div_exact(&lp) {
                        Some(q) => {
                            *target = q;
                            left -= 1;
                            changed = true;
                        }
                        None => break,
                    }
                }
                atoms[idx].1 = e.signum() * left;
            }
            atoms.retain(|(_, e)| *e != 0);
            if !num.is_constant() && !den.is_constant() {
                let g = gcd(num, den);
                if !g.is_constant() {
                    *num = num.div_exact(&g).expect("gcd divides");
                    *den = den.div_exact(&g).expect("gcd divides");
                    changed = true;
                }
            }
            for (p, sign) in [(&mut *num, 1i32), (&mut *den, -1i32)] {
                if let Some(k) = p.constant_value() {
                    if !k.is_one() {
                        *c = if sign > 0 {
                            &*c * &Rat::from_int(k)
                        } else {
                            &*c / &Rat::from_int(k)
                        };
                        *p = Poly::one();
                    }
                    continue;
                }
                let (k, prim) = p.primitive();
                if !k.is_one() {
                    *c = if sign > 0 {
                        &*c * &Rat::from_int(k)
                    } else {
                        &*c / &Rat::from_int(k)
                    };
                    *p = prim;
                }
                if let Some((k, a)) = Scalar::atomize(p) {
                    *c = if sign > 0 {
                        &*c * &Rat::from_int(k)
                    } else {
                        &*c / &Rat::from_int(k)
                    };
                    *p = Poly::one();
                    *atoms = merge_atoms(atoms, &[(a, sign)], 1);
                    changed = true;
                }
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        let mut s = self.clone();
        s.c = -&s.c;
        s
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let c = &self.c * &o.c;
        let atoms = merge_atoms(&self.atoms, &o.atoms, 1);
        if self.num.is_one() && self.den.is_one() && o.num.is_one() && o.den.is_one() {
            return Scalar {
                c,
                num: Poly::one(),
                atoms,
                den: Poly::one(),
            };
        }
        let num = self.num.mul(&o.num);
        let den = self.den.mul(&o.den);
        let (mut c, mut num, mut atoms, mut den) = (c, num, atoms, den);
        Scalar::cancel(&mut c, &mut num, &mut atoms, &mut den);
        Scalar { c, num, atoms, den }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar {
            c: self.c.recip(),
            num: self.den.clone(),
            atoms: self.atoms.iter().map(|(a, e)| (*a, -e)).collect(),
            den: self.num.clone(),
        })
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Scalar {
        if e == 0 {
            return Scalar::one();
        }
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let k = e.unsigned_abs();
        if base.num.is_one() && base.den.is_one() {
            return Scalar {
                c: base.c.pow(k as i32),
                num: Poly::one(),
                atoms: base.atoms.iter().map(|(a, x)| (*a, x * k as i32)).collect(),
                den: Poly::one(),
            };
        }
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn scale(&self, r: &Rat) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        let mut s = self.clone();
        s.c = &s.c * r;
        s
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        Scalar::sum([self, o])
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    /// Sum of many terms over a single common denominator.
    pub fn sum<'a, I: IntoIterator<Item = &'a Scalar>>(terms: I) -> Scalar {
        let terms: Vec<&Scalar> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        match terms.len() {
            0 => return Scalar::zero(),
            1 => return terms[0].clone(),
            _ => {}
        }
        let (cden, acc, common, den) = Scalar::combine(&terms);
        Scalar::normalize(Rat::new(Int::ONE, cden), acc, common, den)
    }

    /// Whether a sum vanishes; skips the final reduction that [`Scalar::sum`] performs.
    pub fn sum_vanishes<'a, I: IntoIterator<Item = &'a Scalar>>(terms: I) -> bool {
        let terms: Vec<&Scalar> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        match terms.len() {
            0 => true,
            1 => false,
            _ => Scalar::combine(&terms).1.is_zero(),
        }
    }

    fn combine(terms: &[&Scalar]) -> (Int, Poly, Vec<(Atom, i32)>, Poly) {
        // Common polynomial denominator.
        let mut den = Poly::one();
        for t in terms {
            if !t.den.is_one() && den != t.den {
                let g = gcd(&den, &t.den);
                den = den.mul(&t.den.div_exact(&g).expect("gcd divides"));
            }
        }
        // Atom exponents shared by every term.
        let mut common: Vec<(Atom, i32)> = terms[0].atoms.clone();
        for t in &terms[1..] {
            let mut next = Vec::new();
            let (a, b) = (&common, &t.atoms);
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                let ord = if i == a.len() {
                    Ordering::Greater
                } else if j == b.len() {
                    Ordering::Less
                } else {
                    a[i].0.cmp(&b[j].0)
                };
                match ord {
                    Ordering::Less => {
                        if a[i].1 < 0 {
                            next.push(a[i]);
                        }
                        i += 1;
                    }
                    Ordering::Greater => {
                        if b[j].1 < 0 {
                            next.push(b[j]);
                        }
                        j += 1;
                    }
                    Ordering::Equal => {
                        next.push((a[i].0, a[i].1.min(b[j].1)));
                        i += 1;
                        j += 1;
                    }
                }
            }
            common = next;
        }
        let mut cden = Int::ONE;
        for t in terms {
            cden = int_lcm(&cden, t.c.denom());
        }
        let mut cache: BTreeMap<(Atom, i32), Poly> = BTreeMap::new();
        let mut acc = Poly::zero();
        for t in terms {
            let k = &t.c.numer().clone() * &cden.div_exact(t.c.denom());
            let mut p = t.num.scale(&k);
            if den != t.den {
                p = p.mul(&den.div_exact(&t.den).expect("common denominator"));
            }
            let rest = merge_atoms(&t.atoms, &common, -1);
            for (a, e) in rest {
                debug_assert!(e > 0);
                let f = cache
                    .entry((a, e))
                    .or_insert_with(|| a.to_poly().pow(e as u32));
                p = p.mul(f);
            }
            acc = acc.add(&p);
        }
        (cden, acc, common, den)
    }

    /// Unique expanded form `scale · num / den` with `num`, `den` integer
    /// polynomials, `den` primitive with positive leading coefficient.
    pub fn canonical(&self) -> (Rat, Poly, Poly) {
        if self.is_zero() {
            return (Rat::zero(), Poly::zero(), Poly::one());
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (a, e) in &self.atoms {
            let p = a.to_poly().pow(e.unsigned_abs());
            if *e > 0 {
                num = num.mul(&p);
            } else {
                den = den.mul(&p);
            }
        }
        (self.c.clone(), num, den)
    }

    /// Substitutes values for every variable.
    pub fn eval(&self, value: &dyn Fn(Var) -> Rat) -> Result<Rat, ScalarError> {
        if self.is_zero() {
            return Ok(Rat::zero());
        }
        let mut acc = self.c.clone();
        for (a, e) in &self.atoms {
            let v = a.eval(value);
            if v.is_zero() {
                if *e < 0 {
                    return Err(ScalarError::VanishingDenominator(a.to_poly().to_string()));
                }
                return Ok(Rat::zero());
            }
            acc = &acc * &v.pow(*e);
        }
        let d = self.den.eval_rat(value);
        if d.is_zero() {
            return Err(ScalarError::VanishingDenominator(self.den.to_string()));
        }
        let n = self.num.eval_rat(value);
        Ok(&(&acc * &n) / &d)
    }

    /// Value modulo 2⁶¹−1 at a point, or `None` when a denominator vanishes there.
    pub fn eval_mod(&self, pt: &modp::Point) -> Option<u64> {
        let cn = self.c.numer().mod_u64(modp::P);
        let cd = self.c.denom().mod_u64(modp::P);
        let mut num = modp::mul(cn, self.num.eval_mod(pt));
        let mut den = modp::mul(cd, self.den.eval_mod(pt));
        for (a, e) in &self.atoms {
            let v = a.to_poly().eval_mod(pt);
            let vp = modp::pow(v, e.unsigned_abs() as u64);
            if *e > 0 {
                num = modp::mul(num, vp);
            } else {
                den = modp::mul(den, vp);
            }
        }
        if den == 0 {
            return None;
        }
        Some(modp::mul(num, modp::inv(den)))
    }

    /// Substitutes `v := r` for a scalar `r`.
    pub fn substitute(&self, v: Var, r: &Scalar) -> Scalar {
        if self.is_zero() {
            return Scalar::zero();
        }
        let (k, rn, rd) = r.canonical();
        let p = rn.scale(k.numer());
        let q = rd.scale(k.denom());
        let sub_poly = |poly: &Poly| -> Scalar {
            let deg = poly.degree_in(v);
            if deg == 0 {
                return Scalar::from_poly(poly.clone());
            }
            let coeffs = poly.coeffs_in(v);
            let mut acc = Poly::zero();
            for (e, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = c.mul(&p.pow(e as u32)).mul(&q.pow(deg - e as u32));
                acc = acc.add(&t);
            }
            let d = Scalar::from_poly(q.pow(deg));
            Scalar::from_poly(acc)
                .checked_div(&d)
                .expect("substituted denominator is nonzero")
        };
        let mut out = Scalar::from_rat(self.c.clone()).mul(&sub_poly(&self.num));
        for (a, e) in &self.atoms {
            let s = sub_poly(&a.to_poly());
            let s = if *e < 0 {
                s.inv().expect("substitution made a denominator vanish")
            } else {
                s
            };
            out = out.mul(&s.pow(e.abs()));
        }
        out.checked_div(&sub_poly(&self.den))
            .expect("substitution made a denominator vanish")
    }

    /// Total degree of numerator minus that of denominator.
    pub fn degree(&self) -> i64 {
        let mut d = self.num.total_degree() as i64 - self.den.total_degree() as i64;
        for (a, e) in &self.atoms {
            d += if a.0[..15].iter().any(|c| *c != 0) {
                *e as i64
            } else {
                0
            };
        }
        d
    }

    pub fn vars(&self) -> Vec<Var> {
        let (_, n, d) = self.canonical();
        let mut v = n.vars();
        for x in d.vars() {
            if !v.contains(&x) {
                v.push(x);
            }
        }
        v.sort();
        v
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.c.is_zero() || other.c.is_zero() {
            return self.c.is_zero() && other.c.is_zero();
        }
        if self.atoms == other.atoms && self.num == other.num && self.den == other.den {
            return self.c == other.c;
        }
        self.sub(other).is_zero()
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Rat> for Scalar {
    fn from(v: Rat) -> Self {
        Scalar::from_rat(v)
    }
}

impl From<Var> for Scalar {
    fn from(v: Var) -> Self {
        Scalar::var(v)
    }
}

impl From<&Lin> for Scalar {
    fn from(v: &Lin) -> Self {
        Scalar::from_lin(v)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| Scalar::add(a, b));
binop!(Sub, sub, |a, b| Scalar::sub(a, b));
binop!(Mul, mul, |a, b| Scalar::mul(a, b));
binop!(Div, div, |a, b| Scalar::checked_div(a, b)
    .expect("division by zero scalar"));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, num, den) = self.canonical();
        if k.is_zero() {
            return write!(f, "0");
        }
        let lead = den.lead().map(|t| t.1.clone()).unwrap_or(Int::ONE);
        let nscale = &k / &Rat::from_int(lead.clone());
        if den.is_one() || (den.is_constant()) {
            let mut s = String::new();
            num.fmt_scaled(&nscale, &mut s)?;
            return write!(f, "{}", s);
        }
        let mut ns = String::new();
        num.fmt_scaled(&nscale, &mut ns)?;
        let mut ds = String::new();
        den.fmt_scaled(&Rat::new(Int::ONE, lead), &mut ds)?;
        let wrap = |s: String, compound: bool| if compound { format!("({})", s) } else { s };
        let num_compound = num.len() > 1;
        let den_compound = den.len() > 1;
        write!(f, "{} / {}", wrap(ns, num_compound), wrap(ds, den_compound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Scalar {
        Scalar::x(i)
    }

    #[test]
    fn spec_examples() {
        let h = Scalar::h();
        let a = &(&x(1) - &x(2)) / &h;
        let b = &(&x(2) - &x(1)) / &h;
        assert!((&a + &b).is_zero());
        assert_eq!(&(&x(1) / &h) * &h, x(1));
        let q = &(&(&x(1) * &x(1)) - &(&x(2) * &x(2))) / &(&x(1) - &x(2));
        assert_eq!(q, &x(1) + &x(2));
        assert_eq!(format!("{}", q), "x1 + x2");
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn display_forms() {
        let h = Scalar::h();
        let s = &(&(&x(1) - &x(2)) + &h) / &h;
        assert_eq!(s.to_string(), "(x1 - x2 + h) / h");
        let m = &Scalar::from_int(-1) / &h;
        assert_eq!(m.to_string(), "-1 / h");
        let t = &Scalar::one() / &(&x(1).scale(&Rat::from(2)) + &h);
        assert_eq!(t.to_string(), "1 / (2*x1 + h)");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::ratio(3, 4).to_string(), "3/4");
    }

    #[test]
    fn sums_reduce() {
        let h = Scalar::h();
        let a = &Scalar::one() / &(&x(1) - &h);
        let b = &Scalar::one() / &(&x(1) + &h);
        let s = &a + &b;
        let expect = &x(1).scale(&Rat::from(2)) / &(&(&x(1) * &x(1)) - &(&h * &h));
        assert_eq!(s, expect);
        let back = &s - &b;
        assert_eq!(back, a);
        assert_eq!(back.to_string(), "-1 / (-x1 + h)");
    }

    #[test]
    fn nonlinear_denominators() {
        let p = &(&x(1) * &x(1)) + &(&x(2) * &Scalar::h());
        let q = &x(1) * &x(3);
        let s = &Scalar::one() / &p;
        let t = &(&s * &q) / &q;
        assert_eq!(t, s);
        assert!((&(&s * &p) - &Scalar::one()).is_zero());
    }

    #[test]
    fn substitution_and_eval() {
        let s = &(&x(1) + &Scalar::hp()) / &Scalar::h();
        let r = s.substitute(Var::Hp, &Scalar::h().scale(&Rat::ratio(-3, 2)));
        assert_eq!(r.to_string(), "(x1 - 3/2*h) / h");
        let v = s.eval(&|v| match v {
            Var::X(1) => Rat::from(1),
            Var::H => Rat::from(2),
            _ => Rat::from(3),
        });
        assert_eq!(v, Ok(Rat::from(2)));
        let bad = &Scalar::one() / &Scalar::h();
        assert!(bad.eval(&|_| Rat::zero()).is_err());
    }
}
