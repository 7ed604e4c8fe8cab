//! Functions of the spectral parameter `u`: truncated expansions at `u = ∞`,
//! rational functions, and rational functions kept split into linear factors.

use super::rat::Rat;
use super::scalar::Scalar;
use crate::prelude::*;

/// Truncated Laurent series `Σ_{r=start}^{order} c_r u^{-r}`.
///
/// Coefficients with `r > order` are unknown; [`SeriesU::coeff`] reports them
/// as `None` instead of pretending they vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesU {
    start: i32,
    order: i32,
    coeffs: Vec<Scalar>,
}

fn binom(n: i64, k: i64) -> Rat {
    if k < 0 || k > n {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc = &(&acc * &Rat::from(n - i)) / &Rat::from(i + 1);
    }
    acc
}

impl SeriesU {
    /// `coeffs[k]` is the coefficient of `u^{-(start+k)}`; anything beyond the
    /// supplied coefficients up to `order` is zero.
    pub fn new(start: i32, order: i32, mut coeffs: Vec<Scalar>) -> SeriesU {
        assert!(order >= start - 1, "order below start");
        let len = (order - start + 1).max(0) as usize;
        coeffs.resize(len, Scalar::zero());
        SeriesU {
            start,
            order,
            coeffs,
        }
    }

    pub fn constant(c: Scalar, order: i32) -> SeriesU {
        SeriesU::new(0, order, vec![c])
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    pub fn start(&self) -> i32 {
        self.start
    }

    /// Coefficient of `u^{-r}`.
    pub fn coeff(&self, r: i32) -> Option<Scalar> {
        if r > self.order {
            None
        } else if r < self.start {
            Some(Scalar::zero())
        } else {
            Some(self.coeffs[(r - self.start) as usize].clone())
        }
    }

    fn coeff_ref(&self, r: i32) -> Option<&Scalar> {
        if r < self.start || r > self.order {
            None
        } else {
            Some(&self.coeffs[(r - self.start) as usize])
        }
    }

    pub fn add(&self, o: &SeriesU) -> SeriesU {
        let start = self.start.min(o.start);
        let order = self.order.min(o.order);
        let coeffs = (start..=order)
            .map(|r| {
                let a = self.coeff(r).unwrap();
                let b = o.coeff(r).unwrap();
                a.add(&b)
            })
            .collect();
        SeriesU::new(start, order, coeffs)
    }

    pub fn neg(&self) -> SeriesU {
        SeriesU {
            start: self.start,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, o: &SeriesU) -> SeriesU {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> SeriesU {
        SeriesU {
            start: self.start,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn mul(&self, o: &SeriesU) -> SeriesU {
        let start = self.start + o.start;
        let order = (self.order + o.start).min(o.order + self.start);
        let mut coeffs = Vec::new();
        for r in start..=order {
            let mut terms = Vec::new();
            for i in self.start..=(r - o.start) {
                if let (Some(a), Some(b)) = (self.coeff_ref(i), o.coeff_ref(r - i)) {
                    if !a.is_zero() && !b.is_zero() {
                        terms.push(a.mul(b));
                    }
                }
            }
            coeffs.push(Scalar::sum(terms.iter()));
        }
        SeriesU::new(start, order, coeffs)
    }

    /// `f(u + c)`, re-expanded at `u = ∞`.
    pub fn shift(&self, c: &Scalar) -> SeriesU {
        let mut acc: Vec<Vec<Scalar>> =
            vec![Vec::new(); (self.order - self.start + 1).max(0) as usize];
        let mut cpow: Vec<Scalar> = vec![Scalar::one()];
        let push = |r: i32, v: Scalar, acc: &mut Vec<Vec<Scalar>>| {
            if r <= self.order && !v.is_zero() {
                acc[(r - self.start) as usize].push(v);
            }
        };
        for r in self.start..=self.order {
            let a = &self.coeffs[(r - self.start) as usize];
            if a.is_zero() {
                continue;
            }
            let q_max = self.order - r;
            while (cpow.len() as i32) <= q_max.max(-r) {
                let next = cpow.last().unwrap().mul(c);
                cpow.push(next);
            }
            if r <= 0 {
                // (u + c)^m with m = -r ≥ 0
                let m = -r as i64;
                for q in 0..=m {
                    let b = binom(m, q);
                    push(r + q as i32, a.mul(&cpow[q as usize]).scale(&b), &mut acc);
                }
            } else {
                for q in 0..=q_max {
                    let mut b = binom(r as i64 + q as i64 - 1, q as i64);
                    if q % 2 == 1 {
                        b = -&b;
                    }
                    push(r + q, a.mul(&cpow[q as usize]).scale(&b), &mut acc);
                }
            }
        }
        let coeffs = acc.iter().map(|ts| Scalar::sum(ts.iter())).collect();
        SeriesU::new(self.start, self.order, coeffs)
    }

    /// Equality on the common range of known coefficients.
    pub fn agrees_with(&self, o: &SeriesU) -> bool {
        let order = self.order.min(o.order);
        (self.start.min(o.start)..=order).all(|r| self.coeff(r).unwrap() == o.coeff(r).unwrap())
    }
}

/// Polynomial in `u` with ascending scalar coefficients.
pub type UPoly = Vec<Scalar>;

fn upoly_trim(p: &mut UPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn upoly_mul(a: &[Scalar], b: &[Scalar]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: Vec<Vec<Scalar>> = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if !x.is_zero() && !y.is_zero() {
                out[i + j].push(x.mul(y));
            }
        }
    }
    let mut p: UPoly = out.iter().map(|ts| Scalar::sum(ts.iter())).collect();
    upoly_trim(&mut p);
    p
}

/// Remainder of `a` modulo a nonzero `b`.
fn upoly_rem(a: &[Scalar], b: &[Scalar]) -> UPoly {
    let mut r: UPoly = a.to_vec();
    upoly_trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let q = r
            .last()
            .unwrap()
            .checked_div(&lb)
            .expect("nonzero leading coefficient");
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&q.mul(bj));
        }
        r.pop();
        upoly_trim(&mut r);
    }
    r
}

fn upoly_quo(a: &[Scalar], b: &[Scalar]) -> UPoly {
    let mut r: UPoly = a.to_vec();
    upoly_trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return Vec::new();
    }
    let mut q = vec![Scalar::zero(); r.len() - db];
    let lb = b[db].clone();
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r
            .last()
            .unwrap()
            .checked_div(&lb)
            .expect("nonzero leading coefficient");
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&c.mul(bj));
        }
        q[k] = c;
        r.pop();
    }
    q
}

fn upoly_monic(p: &[Scalar]) -> (Scalar, UPoly) {
    let lead = p.last().expect("nonzero polynomial").clone();
    let inv = lead.inv().expect("nonzero lead");
    (lead, p.iter().map(|c| c.mul(&inv)).collect())
}

/// Reduced quotient of polynomials in `u` with a monic denominator.
#[derive(Clone, Debug)]
pub struct RationalU {
    num: UPoly,
    den: UPoly,
}

impl RationalU {
    /// Builds and reduces `num / den`; `den` must be nonzero.
    pub fn new(mut num: UPoly, mut den: UPoly) -> RationalU {
        upoly_trim(&mut num);
        upoly_trim(&mut den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RationalU {
                num,
                den: vec![Scalar::one()],
            };
        }
        // Euclid over the scalar field.
        let (mut a, mut b) = (num.clone(), den.clone());
        while !b.is_empty() {
            let r = upoly_rem(&a, &b);
            a = b;
            b = r;
        }
        if a.len() > 1 {
            num = upoly_quo(&num, &a);
            den = upoly_quo(&den, &a);
        }
        let (lead, den) = upoly_monic(&den);
        let inv = lead.inv().unwrap();
        let num = num.iter().map(|c| c.mul(&inv)).collect();
        RationalU { num, den }
    }

    pub fn polynomial(num: UPoly) -> RationalU {
        RationalU::new(num, vec![Scalar::one()])
    }

    pub fn numerator(&self) -> &[Scalar] {
        &self.num
    }

    pub fn denominator(&self) -> &[Scalar] {
        &self.den
    }

    pub fn mul(&self, o: &RationalU) -> RationalU {
        RationalU::new(upoly_mul(&self.num, &o.num), upoly_mul(&self.den, &o.den))
    }

    /// Expansion at `u = ∞` through `u^{-order}`.
    pub fn expand(&self, order: i32) -> SeriesU {
        if self.num.is_empty() {
            return SeriesU::new(0, order, Vec::new());
        }
        let n = self.num.len() as i32 - 1;
        let m = self.den.len() as i32 - 1;
        let start = m - n;
        let kmax = order - start;
        let mut c: Vec<Scalar> = Vec::new();
        for k in 0..=kmax.max(-1) {
            let mut terms: Vec<Scalar> = Vec::new();
            if n - k >= 0 {
                terms.push(self.num[(n - k) as usize].clone());
            }
            for j in 1..=k.min(m) {
                let d = &self.den[(m - j) as usize];
                if !d.is_zero() {
                    terms.push(d.mul(&c[(k - j) as usize]).neg());
                }
            }
            c.push(Scalar::sum(terms.iter()));
        }
        SeriesU::new(start, order, c)
    }
}

impl PartialEq for RationalU {
    fn eq(&self, o: &Self) -> bool {
        let a = upoly_mul(&self.num, &o.den);
        let b = upoly_mul(&o.num, &self.den);
        a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| x == y)
    }
}

/// `lead · ∏(u − zᵢ) / ∏(u − pⱼ)` with no root shared between the two lists.
#[derive(Clone, Debug)]
pub struct SplitU {
    lead: Scalar,
    zeros: Vec<Scalar>,
    poles: Vec<Scalar>,
}

impl SplitU {
    pub fn new(lead: Scalar, zeros: Vec<Scalar>, poles: Vec<Scalar>) -> SplitU {
        let mut s = SplitU { lead, zeros, poles };
        s.cancel();
        s
    }

    pub fn one() -> SplitU {
        SplitU {
            lead: Scalar::one(),
            zeros: Vec::new(),
            poles: Vec::new(),
        }
    }

    fn cancel(&mut self) {
        let mut i = 0;
        while i < self.zeros.len() {
            if let Some(j) = self.poles.iter().position(|p| *p == self.zeros[i]) {
                self.poles.swap_remove(j);
                self.zeros.swap_remove(i);
            } else {
                i += 1;
            }
        }
    }

    pub fn lead(&self) -> &Scalar {
        &self.lead
    }

    pub fn zeros(&self) -> &[Scalar] {
        &self.zeros
    }

    pub fn poles(&self) -> &[Scalar] {
        &self.poles
    }

    pub fn degree(&self) -> i32 {
        self.zeros.len() as i32 - self.poles.len() as i32
    }

    pub fn mul(&self, o: &SplitU) -> SplitU {
        let mut zeros = self.zeros.clone();
        zeros.extend(o.zeros.iter().cloned());
        let mut poles = self.poles.clone();
        poles.extend(o.poles.iter().cloned());
        SplitU::new(self.lead.mul(&o.lead), zeros, poles)
    }

    pub fn inv(&self) -> SplitU {
        SplitU {
            lead: self.lead.inv().expect("nonzero lead"),
            zeros: self.poles.clone(),
            poles: self.zeros.clone(),
        }
    }

    pub fn div(&self, o: &SplitU) -> SplitU {
        self.mul(&o.inv())
    }

    /// `f(u + c)`.
    pub fn shift(&self, c: &Scalar) -> SplitU {
        SplitU {
            lead: self.lead.clone(),
            zeros: self.zeros.iter().map(|z| z.sub(c)).collect(),
            poles: self.poles.iter().map(|p| p.sub(c)).collect(),
        }
    }

    /// `f(k·u)` rescaled by `k^{-deg}` so that the result stays monic-led.
    pub fn rescale_roots(&self, k: &Scalar) -> SplitU {
        SplitU {
            lead: self.lead.clone(),
            zeros: self.zeros.iter().map(|z| z.mul(k)).collect(),
            poles: self.poles.iter().map(|p| p.mul(k)).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.zeros.is_empty() && self.poles.is_empty() && self.lead.is_one()
    }

    /// Power sums `Σ zʳ − Σ pʳ` for `r = 0..=rmax`.
    pub fn power_sums(&self, rmax: usize) -> Vec<Scalar> {
        let mut zp: Vec<Scalar> = vec![Scalar::one(); self.zeros.len()];
        let mut pp: Vec<Scalar> = vec![Scalar::one(); self.poles.len()];
        let mut out = Vec::with_capacity(rmax + 1);
        out.push(Scalar::from_int(self.degree() as i64));
        for _ in 1..=rmax {
            for (acc, z) in zp.iter_mut().zip(self.zeros.iter()) {
                *acc = acc.mul(z);
            }
            for (acc, p) in pp.iter_mut().zip(self.poles.iter()) {
                *acc = acc.mul(p);
            }
            let neg: Vec<Scalar> = pp.iter().map(|x| x.neg()).collect();
            out.push(Scalar::sum(zp.iter().chain(neg.iter())));
        }
        out
    }

    /// Expansion at `u = ∞` through `u^{-order}`.
    pub fn expand(&self, order: i32) -> SeriesU {
        let deg = self.degree();
        let start = -deg;
        let kmax = (order - start).max(-1);
        let ps = self.power_sums(kmax.max(0) as usize);
        let mut g: Vec<Scalar> = vec![Scalar::one()];
        for k in 1..=kmax {
            let terms: Vec<Scalar> = (1..=k)
                .map(|r| ps[r as usize].mul(&g[(k - r) as usize]))
                .collect();
            g.push(Scalar::sum(terms.iter()).scale(&Rat::ratio(-1, k as i64)));
        }
        g.truncate((kmax + 1).max(0) as usize);
        let coeffs = g.iter().map(|c| c.mul(&self.lead)).collect();
        SeriesU::new(start, order, coeffs)
    }

    /// `∂_u log f = Σ_{r≥0} (Σ zʳ − Σ pʳ) u^{-r-1}` through `u^{-order}`.
    pub fn log_derivative(&self, order: i32) -> SeriesU {
        let ps = self.power_sums((order - 1).max(0) as usize);
        let coeffs: Vec<Scalar> = ps.into_iter().take(order.max(0) as usize).collect();
        SeriesU::new(1, order, coeffs)
    }

    pub fn to_rational(&self) -> RationalU {
        let lin = |r: &Scalar| vec![r.neg(), Scalar::one()];
        let mut num: UPoly = vec![self.lead.clone()];
        for z in &self.zeros {
            num = upoly_mul(&num, &lin(z));
        }
        let mut den: UPoly = vec![Scalar::one()];
        for p in &self.poles {
            den = upoly_mul(&den, &lin(p));
        }
        RationalU { num, den }
    }
}

impl PartialEq for SplitU {
    fn eq(&self, o: &Self) -> bool {
        self.div(o).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Scalar {
        Scalar::x(1)
    }

    #[test]
    fn geometric_series() {
        let f = SplitU::new(Scalar::one(), vec![], vec![a()]);
        let s = f.expand(3);
        assert_eq!(s.coeff(0), Some(Scalar::zero()));
        assert_eq!(s.coeff(1), Some(Scalar::one()));
        assert_eq!(s.coeff(2), Some(a()));
        assert_eq!(s.coeff(3), Some(a().pow(2)));
        assert_eq!(s.coeff(4), None);
    }

    #[test]
    fn telescoped_ratio() {
        let p = Scalar::x(2);
        let f = SplitU::new(Scalar::one(), vec![p.sub(&Scalar::one())], vec![p.clone()]);
        let s = f.expand(1);
        assert_eq!(s.coeff(0), Some(Scalar::one()));
        assert_eq!(s.coeff(1), Some(Scalar::one()));
    }

    #[test]
    fn polynomial_part() {
        // u²/(u−1) = u + 1 + u⁻¹ + u⁻²
        let r = RationalU::new(
            vec![Scalar::zero(), Scalar::zero(), Scalar::one()],
            vec![Scalar::from_int(-1), Scalar::one()],
        );
        let s = r.expand(2);
        for k in -1..=2 {
            assert_eq!(s.coeff(k), Some(Scalar::one()), "u^{}", -k);
        }
        let split = SplitU::new(
            Scalar::one(),
            vec![Scalar::zero(), Scalar::zero()],
            vec![Scalar::one()],
        );
        assert!(split.expand(2).agrees_with(&s));
    }

    #[test]
    fn rational_reduces() {
        let z = Scalar::x(3);
        let f = SplitU::new(
            Scalar::h(),
            vec![a(), z.clone()],
            vec![z.clone(), Scalar::hp()],
        );
        let r = f.to_rational();
        let big = RationalU::new(
            upoly_mul(r.numerator(), &[z.neg(), Scalar::one()]),
            upoly_mul(r.denominator(), &[z.neg(), Scalar::one()]),
        );
        assert_eq!(big.numerator().len(), 2);
        assert!(big == r);
        assert!(f.expand(4).agrees_with(&r.expand(4)));
    }

    #[test]
    fn shift_matches_root_shift() {
        let f = SplitU::new(Scalar::one(), vec![a()], vec![Scalar::h(), Scalar::hp()]);
        let c = Scalar::x(2);
        let lhs = f.expand(5).shift(&c);
        let rhs = f.shift(&c).expand(5);
        assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn log_derivative_power_sums() {
        let f = SplitU::new(Scalar::one(), vec![a(), Scalar::h()], vec![Scalar::hp()]);
        let d = f.log_derivative(3);
        assert_eq!(d.coeff(1), Some(Scalar::one()));
        assert_eq!(d.coeff(2), Some(&(&a() + &Scalar::h()) - &Scalar::hp()));
    }
}
