//! Sparse vectors over a fixed-point basis, operators acting on them, and a
//! relation checker shared by the finite and affine modules.
//!
//! Relation-level generators are named by what they do to the degree:
//! [`Op::Raise`] adds a box (it is `x⁺` inside the relations) and
//! [`Op::Lower`] removes one (`x⁻` inside the relations).

use alloc::rc::Rc;
use core::fmt;

use crate::exactalg::{Rat, Scalar};
use crate::prelude::*;

/// Finite linear combination of basis elements with nonzero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

impl<B: Ord + Clone> Vector<B> {
    pub fn zero() -> Self {
        Vector {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(b: B) -> Self {
        let mut v = Self::zero();
        v.terms.insert(b, Scalar::one());
        v
    }

    pub fn from_terms(it: impl IntoIterator<Item = (B, Scalar)>) -> Self {
        let mut v = Self::zero();
        for (b, c) in it {
            v.add_term(b, c);
        }
        v
    }

    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&b);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn coeff(&self, b: &B) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &Scalar)> {
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

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &o.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, c)| (b.clone(), c.mul(s))))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    /// Linear extension of a basis map.
    pub fn map(&self, f: impl Fn(&B) -> Vec<(B, Scalar)>) -> Self {
        let mut acc: BTreeMap<B, Vec<Scalar>> = BTreeMap::new();
        for (b, c) in &self.terms {
            for (t, k) in f(b) {
                acc.entry(t).or_default().push(k.mul(c));
            }
        }
        Self::from_terms(acc.into_iter().map(|(b, cs)| (b, Scalar::sum(cs.iter()))))
    }
}

impl<B: Ord + fmt::Display> fmt::Display for Vector<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", c, b)?;
        }
        Ok(())
    }
}

/// A generator as seen by the relation checker. `shifted` selects the
/// spectrally shifted series used by the modified affine relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Raise {
        k: usize,
        r: u32,
        shifted: bool,
    },
    Lower {
        k: usize,
        r: u32,
        shifted: bool,
    },
    H {
        k: usize,
        r: u32,
        shifted: bool,
    },
    /// The diagonal Cartan generator `E_ii` (finite) or `h_i` (affine).
    Cartan(usize),
}

impl Op {
    pub fn raise(k: usize, r: u32) -> Op {
        Op::Raise {
            k,
            r,
            shifted: false,
        }
    }

    pub fn lower(k: usize, r: u32) -> Op {
        Op::Lower {
            k,
            r,
            shifted: false,
        }
    }

    pub fn h(k: usize, r: u32) -> Op {
        Op::H {
            k,
            r,
            shifted: false,
        }
    }

    /// Relation-level `x^±`: `+` raises, `−` lowers.
    pub fn x(plus: bool, k: usize, r: u32, shifted: bool) -> Op {
        if plus {
            Op::Raise { k, r, shifted }
        } else {
            Op::Lower { k, r, shifted }
        }
    }
}

pub type Terms<B> = Vec<(B, Scalar)>;

/// Data of a module with a fixed-point basis.
pub trait Rep {
    type Basis: Clone + Ord + fmt::Display;

    /// Node labels are `1..=rank()`.
    fn rank(&self) -> usize;

    /// Cartan matrix entry `a_{kl}`.
    fn cartan(&self, k: usize, l: usize) -> i64;

    /// Matrix coefficients of `op` on one basis element.
    fn apply(&self, op: Op, b: &Self::Basis) -> Terms<Self::Basis>;

    /// For pairs whose `[h, x]` and `[x, x]` relations are modified: which side uses the
    /// shifted series, and the integer replacing `a_{kl}`.
    fn modified_pair(&self, _k: usize, _l: usize) -> Option<PairRule> {
        None
    }

    /// Whether the pair `(k, l)` is adjacent in the Dynkin diagram.
    fn adjacent(&self, k: usize, l: usize) -> bool {
        k != l && self.cartan(k, l) == -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairRule {
    pub shift_k: bool,
    pub shift_l: bool,
    /// Replaces `a_{kl}` in the `x⁺` relations; the `x⁻` ones use its negative.
    pub a: i64,
}

/// `Σ cᵢ · wordᵢ`, each word applied right to left.
#[derive(Clone, Debug)]
pub struct Expr {
    pub words: Vec<(Scalar, Vec<Op>)>,
}

impl Expr {
    pub fn zero() -> Expr {
        Expr { words: Vec::new() }
    }

    pub fn word(c: Scalar, ops: &[Op]) -> Expr {
        Expr {
            words: vec![(c, ops.to_vec())],
        }
    }

    pub fn op(o: Op) -> Expr {
        Expr::word(Scalar::one(), &[o])
    }

    pub fn add(mut self, o: Expr) -> Expr {
        self.words.extend(o.words);
        self
    }

    pub fn scale(mut self, s: &Scalar) -> Expr {
        for (c, _) in self.words.iter_mut() {
            *c = c.mul(s);
        }
        self
    }

    pub fn sub(self, o: Expr) -> Expr {
        self.add(o.scale(&Scalar::from_int(-1)))
    }

    /// Composition `self ∘ o`.
    pub fn then(&self, o: &Expr) -> Expr {
        let mut words = Vec::new();
        for (c1, w1) in &self.words {
            for (c2, w2) in &o.words {
                let mut w = w1.clone();
                w.extend(w2.iter().copied());
                words.push((c1.mul(c2), w));
            }
        }
        Expr { words }
    }

    pub fn commutator(a: &Expr, b: &Expr) -> Expr {
        a.then(b).sub(b.then(a))
    }

    pub fn anticommutator(a: &Expr, b: &Expr) -> Expr {
        a.then(b).add(b.then(a))
    }
}

/// Applies words to basis vectors, caching single-operator images.
pub struct Evaluator<'a, R: Rep> {
    rep: &'a R,
    cache: BTreeMap<(Op, R::Basis), Rc<Terms<R::Basis>>>,
}

impl<'a, R: Rep> Evaluator<'a, R> {
    pub fn new(rep: &'a R) -> Self {
        Evaluator {
            rep,
            cache: BTreeMap::new(),
        }
    }

    pub fn rep(&self) -> &R {
        self.rep
    }

    pub fn apply_op(&mut self, op: Op, b: &R::Basis) -> Rc<Terms<R::Basis>> {
        let key = (op, b.clone());
        if let Some(t) = self.cache.get(&key) {
            return t.clone();
        }
        let t = Rc::new(self.rep.apply(op, b));
        self.cache.insert(key, t.clone());
        t
    }

    /// All path contributions of `expr` applied to `b`, grouped by target.
    fn contributions(&mut self, expr: &Expr, b: &R::Basis) -> BTreeMap<R::Basis, Vec<Scalar>> {
        let mut out: BTreeMap<R::Basis, Vec<Scalar>> = BTreeMap::new();
        for (c, word) in &expr.words {
            if c.is_zero() {
                continue;
            }
            let mut paths: Vec<(R::Basis, Scalar)> = vec![(b.clone(), c.clone())];
            for op in word.iter().rev() {
                let mut next = Vec::new();
                for (src, k) in &paths {
                    for (t, m) in self.apply_op(*op, src).iter() {
                        next.push((t.clone(), k.mul(m)));
                    }
                }
                paths = next;
                if paths.is_empty() {
                    break;
                }
            }
            for (t, k) in paths {
                out.entry(t).or_default().push(k);
            }
        }
        out
    }

    /// `expr(b)` as a vector.
    pub fn eval(&mut self, expr: &Expr, b: &R::Basis) -> Vector<R::Basis> {
        let parts = self.contributions(expr, b);
        Vector::from_terms(parts.into_iter().map(|(t, cs)| (t, Scalar::sum(cs.iter()))))
    }

    /// Whether `expr(b) = 0`; on failure returns the nonzero part.
    pub fn check_zero(&mut self, expr: &Expr, b: &R::Basis) -> Result<(), Vector<R::Basis>> {
        let parts = self.contributions(expr, b);
        let mut bad = Vector::zero();
        for (t, cs) in parts {
            if !Scalar::sum_vanishes(cs.iter()) {
                bad.add_term(t, Scalar::sum(cs.iter()));
            }
        }
        if bad.is_zero() {
            Ok(())
        } else {
            Err(bad)
        }
    }
}

/// One checked relation instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub relation: String,
    pub indices: Vec<i64>,
    pub basis: String,
    pub passed: bool,
    /// Canonical `lhs − rhs` when the instance fails.
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub instances: Vec<Instance>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.instances.iter().filter(|i| i.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.instances.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.instances.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.passed)
    }

    pub fn merge(&mut self, o: Report) {
        self.instances.extend(o.instances);
    }

    /// Pass/fail counts per relation label, in label order.
    pub fn summary(&self) -> BTreeMap<String, (usize, usize)> {
        let mut out: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for i in &self.instances {
            let e = out.entry(i.relation.clone()).or_default();
            if i.passed {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        out
    }
}

/// A named relation `expr = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: &'static str,
    pub indices: Vec<i64>,
    pub expr: Expr,
}

pub fn check_relations<R: Rep>(
    ev: &mut Evaluator<'_, R>,
    relations: &[Relation],
    b: &R::Basis,
) -> Report {
    let mut report = Report::default();
    let label = b.to_string();
    for rel in relations {
        let res = ev.check_zero(&rel.expr, b);
        report.instances.push(Instance {
            relation: rel.name.to_string(),
            indices: rel.indices.clone(),
            basis: label.clone(),
            passed: res.is_ok(),
            residual: res.err().map(|v| v.to_string()),
        });
    }
    report
}

fn hbar_times(k: i64) -> Scalar {
    Scalar::h().scale(&Rat::from(k))
}

/// The Yangian relations with all spectral indices `≤ rmax`.
///
/// The `[h, x]` and `[x, x]` relations are used in the form
/// `2[A_{r+1}, B_s] − 2[A_r, B_{s+1}] = ±ħ a {A_r, B_s}`; modified pairs take
/// their shifts and constant from [`Rep::modified_pair`].
pub fn yangian_relations<R: Rep>(rep: &R, rmax: u32) -> Vec<Relation> {
    let rank = rep.rank();
    let mut out = Vec::new();
    let two = Scalar::from_int(2);
    for k in 1..=rank {
        for l in 1..=rank {
            let idx = |v: &[i64]| -> Vec<i64> {
                let mut x = vec![k as i64, l as i64];
                x.extend_from_slice(v);
                x
            };
            for r in 0..=rmax {
                for s in 0..=rmax {
                    out.push(Relation {
                        name: "[h,h]",
                        indices: idx(&[r as i64, s as i64]),
                        expr: Expr::commutator(&Expr::op(Op::h(k, r)), &Expr::op(Op::h(l, s))),
                    });
                }
            }
            for plus in [true, false] {
                let sg: i64 = if plus { 1 } else { -1 };
                for s in 0..=rmax {
                    let x = Expr::op(Op::x(plus, l, s, false));
                    let lhs = Expr::commutator(&Expr::op(Op::h(k, 0)), &x);
                    out.push(Relation {
                        name: if plus { "[h0,x+]" } else { "[h0,x-]" },
                        indices: idx(&[s as i64]),
                        expr: lhs.sub(x.scale(&Scalar::from_int(sg * rep.cartan(k, l)))),
                    });
                }
            }
            for r in 0..=rmax {
                for s in 0..=rmax {
                    let lhs =
                        Expr::commutator(&Expr::op(Op::raise(k, r)), &Expr::op(Op::lower(l, s)));
                    let expr = if k == l {
                        lhs.sub(Expr::op(Op::h(k, r + s)))
                    } else {
                        lhs
                    };
                    out.push(Relation {
                        name: "[x+,x-]",
                        indices: idx(&[r as i64, s as i64]),
                        expr,
                    });
                }
            }
            let rule = rep.modified_pair(k, l);
            let (sk, sl, a) = match rule {
                Some(p) => (p.shift_k, p.shift_l, p.a),
                None => (false, false, rep.cartan(k, l)),
            };
            for plus in [true, false] {
                let sg: i64 = if plus { 1 } else { -1 };
                let tag_hx = match (rule.is_some(), plus) {
                    (false, true) => "[h,x+]",
                    (false, false) => "[h,x-]",
                    (true, true) => "[h,x+]mod",
                    (true, false) => "[h,x-]mod",
                };
                let tag_xx = match (rule.is_some(), plus) {
                    (false, true) => "[x+,x+]",
                    (false, false) => "[x-,x-]",
                    (true, true) => "[x+,x+]mod",
                    (true, false) => "[x-,x-]mod",
                };
                for r in 0..=rmax {
                    for s in 0..=rmax {
                        let hk = |r| Expr::op(Op::H { k, r, shifted: sk });
                        let xk = |r| Expr::op(Op::x(plus, k, r, sk));
                        let xl = |s| Expr::op(Op::x(plus, l, s, sl));
                        let c = hbar_times(sg * a);
                        let rel_hx = Expr::commutator(&hk(r + 1), &xl(s))
                            .scale(&two)
                            .sub(Expr::commutator(&hk(r), &xl(s + 1)).scale(&two))
                            .sub(Expr::anticommutator(&hk(r), &xl(s)).scale(&c));
                        out.push(Relation {
                            name: tag_hx,
                            indices: idx(&[r as i64, s as i64]),
                            expr: rel_hx,
                        });
                        let rel_xx = Expr::commutator(&xk(r + 1), &xl(s))
                            .scale(&two)
                            .sub(Expr::commutator(&xk(r), &xl(s + 1)).scale(&two))
                            .sub(Expr::anticommutator(&xk(r), &xl(s)).scale(&c));
                        out.push(Relation {
                            name: tag_xx,
                            indices: idx(&[r as i64, s as i64]),
                            expr: rel_xx,
                        });
                    }
                }
                if rep.adjacent(k, l) {
                    for r in 0..=rmax {
                        for p in r..=rmax {
                            for s in 0..=rmax {
                                let xr = Expr::op(Op::x(plus, k, r, false));
                                let xp = Expr::op(Op::x(plus, k, p, false));
                                let xs = Expr::op(Op::x(plus, l, s, false));
                                let e = Expr::commutator(&xr, &Expr::commutator(&xp, &xs))
                                    .add(Expr::commutator(&xp, &Expr::commutator(&xr, &xs)));
                                out.push(Relation {
                                    name: if plus { "serre+" } else { "serre-" },
                                    indices: idx(&[r as i64, p as i64, s as i64]),
                                    expr: e,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
