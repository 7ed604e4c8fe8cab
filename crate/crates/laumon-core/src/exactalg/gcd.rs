//! Multivariate gcd over ℤ by recursive primitive pseudo-remainder sequences.
//!
//! This path is only taken for denominators that are not products of linear
//! forms, which the engine itself never produces; it exists so that arbitrary
//! user input still reaches a reduced form.

use super::int::Int;
use super::mono::Var;
use super::poly::Poly;
use crate::prelude::*;

/// Greatest common divisor, primitive with positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive().1;
    }
    if b.is_zero() {
        return a.primitive().1;
    }
    let vars = union_vars(a, b);
    let g = gcd_rec(a, b, &vars);
    g.primitive().1
}

fn union_vars(a: &Poly, b: &Poly) -> Vec<Var> {
    let mut v = a.vars();
    for x in b.vars() {
        if !v.contains(&x) {
            v.push(x);
        }
    }
    v.sort();
    v
}

fn gcd_rec(a: &Poly, b: &Poly, vars: &[Var]) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() || vars.is_empty() {
        let g = a.content().gcd(&b.content());
        return Poly::constant(g);
    }
    let v = *vars.last().unwrap();
    let rest = &vars[..vars.len() - 1];
    if a.degree_in(v) == 0 && b.degree_in(v) == 0 {
        return gcd_rec(a, b, rest);
    }
    let (ca, pa) = content_in(a, v, rest);
    let (cb, pb) = content_in(b, v, rest);
    let c = gcd_rec(&ca, &cb, rest);
    let mut r0 = pa;
    let mut r1 = pb;
    if r0.degree_in(v) < r1.degree_in(v) {
        core::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        if r1.degree_in(v) == 0 {
            return c;
        }
        let r = pseudo_rem(&r0, &r1, v);
        r0 = r1;
        r1 = if r.is_zero() {
            r
        } else {
            content_in(&r, v, rest).1
        };
    }
    let g = content_in(&r0, v, rest).1;
    g.mul(&c)
}

/// Content with respect to `v` (a polynomial in the remaining variables) and primitive part.
fn content_in(p: &Poly, v: Var, rest: &[Var]) -> (Poly, Poly) {
    let coeffs = p.coeffs_in(v);
    let mut g = Poly::zero();
    for c in &coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, c, rest);
        if g.is_constant()
            && g.constant_value()
                .map(|x| x.abs().is_one())
                .unwrap_or(false)
        {
            break;
        }
    }
    let (_, g) = g.primitive();
    let g = if g.is_zero() { Poly::one() } else { g };
    let prim = p.div_exact(&g).expect("content divides its polynomial");
    (g, prim)
}

fn pseudo_rem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let bc = b.coeffs_in(v);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let rc = r.coeffs_in(v);
        let lr = rc[dr as usize].clone();
        let shift = Poly::monomial(super::mono::Mono::var_pow(v, dr - db), Int::ONE);
        r = r.mul(&lb).sub(&b.mul(&lr).mul(&shift));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_common_factor() {
        let x = Poly::var(Var::X(1));
        let y = Poly::var(Var::X(2));
        let h = Poly::var(Var::H);
        let common = x.mul(&x).add(&y.mul(&h)).add(&Poly::one());
        let a = common.mul(&x.sub(&h));
        let b = common.mul(&y.add(&h)).mul(&y);
        assert_eq!(gcd(&a, &b), common);
        assert!(gcd(&x, &y).is_one());
        assert_eq!(gcd(&x.scale(&Int::from(6)), &x.scale(&Int::from(4))), x);
    }
}
