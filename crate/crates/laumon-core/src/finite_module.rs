//! The `gl_n` and Yangian `Y(sl_n)` action on the localized equivariant
//! cohomology of the finite Laumon spaces, written in the fixed-point basis.

use core::fmt;

use crate::exactalg::{Lin, RationalU, Scalar, SplitU, Var};
use crate::patterns::FinitePattern;
use crate::prelude::*;
use crate::rep::{
    check_relations, yangian_relations, Evaluator, Expr, Op, Relation, Rep, Report, Terms, Vector,
};

pub type VectorV = Vector<FinitePattern>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteGenerator {
    /// `E_ii`, `1 ≤ i ≤ n`.
    Eii(usize),
    /// `h_i = E_{i+1,i+1} − E_ii`.
    H(usize),
    /// `e_i = E_{i+1,i}`, adds a box in row `i`.
    E(usize),
    /// `f_i = E_{i,i+1}`, removes a box in row `i`.
    F(usize),
    /// `x⁺_{k,r}`: the lowering correspondence weighted by the target's line bundle.
    XPlus(usize, u32),
    /// `x⁻_{k,r}`: the raising correspondence weighted by `c_1(L_k)^r`.
    XMinus(usize, u32),
    /// `h_{k,r}`, the coefficient of `ħ^{-r}u^{-r-1}` in `h_k(u)`.
    HCoeff(usize, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorError {
    IndexOutOfRange {
        index: usize,
        max: usize,
    },
    PatternSize {
        expected: usize,
        found: usize,
    },
    /// `via_m` must be below `k`.
    BadM {
        m: usize,
        k: usize,
    },
}

impl fmt::Display for GeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorError::IndexOutOfRange { index, max } => {
                write!(f, "index {} outside 1..={}", index, max)
            }
            GeneratorError::PatternSize { expected, found } => {
                write!(f, "pattern has n={} but n={} was expected", found, expected)
            }
            GeneratorError::BadM { m, k } => write!(f, "m={} must be smaller than k={}", m, k),
        }
    }
}

/// The module `V` for a fixed `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    n: usize,
}

fn lin_x(j: usize) -> Lin {
    Lin::var(Var::X(j as u8))
}

fn s(l: Lin) -> Scalar {
    Scalar::from_lin(&l)
}

impl FiniteModule {
    pub fn new(n: usize) -> FiniteModule {
        assert!(n >= 2, "n must be at least 2");
        FiniteModule { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x_k − x_j + (d_{ij} − d_{mk})ħ`, the building block of both coefficients.
    fn diff(p: &FinitePattern, k: usize, j: usize, i: usize, m: usize) -> Lin {
        let c = p.d(i, j) as i64 - p.d(m, k) as i64;
        lin_x(k).sub(&lin_x(j)).plus(Var::H, c)
    }

    /// Coefficient of `e_i` from `p` to `p + δ_{ij}`.
    pub fn e_coeff(&self, p: &FinitePattern, i: usize, j: usize) -> Scalar {
        let mut num = Scalar::from_int(-1);
        let mut den = Scalar::h();
        for k in 1..=i {
            if k != j {
                den = den.mul(&s(FiniteModule::diff(p, k, j, i, i).neg()));
            }
        }
        for k in 1..i {
            num = num.mul(&s(FiniteModule::diff(p, k, j, i, i - 1).neg()));
        }
        num.checked_div(&den)
            .expect("fixed-point weights are distinct")
    }

    /// Coefficient of `f_i` from `p` to `p − δ_{ij}`.
    pub fn f_coeff(&self, p: &FinitePattern, i: usize, j: usize) -> Scalar {
        let mut num = Scalar::one();
        let mut den = Scalar::h();
        for k in 1..=i {
            if k != j {
                den = den.mul(&s(FiniteModule::diff(p, k, j, i, i)));
            }
        }
        for k in 1..=i + 1 {
            num = num.mul(&s(FiniteModule::diff(p, k, j, i, i + 1)));
        }
        num.checked_div(&den)
            .expect("fixed-point weights are distinct")
    }

    /// `−x_j + (d_{ij} + t + (1−i)/2)ħ`, `t ∈ {0, −1}` for the source and target of the edge.
    fn fiber(p: &FinitePattern, i: usize, j: usize, t: i64) -> Scalar {
        let h = Lin::var(Var::H).scale(2 * (p.d(i, j) as i64 + t) + 1 - i as i64, 2);
        s(lin_x(j).neg().add(&h))
    }

    fn raise(&self, p: &FinitePattern, i: usize, r: u32) -> Terms<FinitePattern> {
        let mut out = Vec::new();
        for j in 1..=i {
            if let Some(t) = p.bump(i, j, 1) {
                let w = FiniteModule::fiber(p, i, j, 0).pow(r as i32);
                out.push((t, self.e_coeff(p, i, j).mul(&w)));
            }
        }
        out
    }

    fn lower(&self, p: &FinitePattern, i: usize, r: u32) -> Terms<FinitePattern> {
        let mut out = Vec::new();
        for j in 1..=i {
            if p.d(i, j) == 0 {
                continue;
            }
            if let Some(t) = p.bump(i, j, -1) {
                let w = FiniteModule::fiber(p, i, j, -1).pow(r as i32);
                out.push((t, self.f_coeff(p, i, j).mul(&w)));
            }
        }
        out
    }

    /// Eigenvalue of `E_ii`: `ħ⁻¹x_i + d_{i−1} − d_i + i − 1`.
    pub fn eii_eigenvalue(&self, p: &FinitePattern, i: usize) -> Scalar {
        let row = |k: usize| -> i64 { (1..=k).map(|j| p.d(k, j) as i64).sum() };
        let c = row(i - 1) - row(i) + i as i64 - 1;
        Scalar::x(i)
            .checked_div(&Scalar::h())
            .unwrap()
            .add(&Scalar::from_int(c))
    }

    /// Roots `ħ·p̂_{mj} = −x_j + d_{mj}ħ` of `a_m`, in the dimensionful variable `ħu`.
    fn a_roots(p: &FinitePattern, m: usize) -> Vec<Lin> {
        (1..=m)
            .map(|j| lin_x(j).neg().plus(Var::H, p.d(m, j) as i64))
            .collect()
    }

    /// `h_k` as a function of `U = ħu`: zeros and poles shifted by `cħ`.
    fn h_split_dimensionful(p: &FinitePattern, k: usize, m: usize) -> SplitU {
        let shifted = |row: usize, c2: i64| -> Vec<Scalar> {
            FiniteModule::a_roots(p, row)
                .into_iter()
                .map(|l| s(l.add(&Lin::var(Var::H).scale(-c2, 2))))
                .collect()
        };
        let k2 = k as i64;
        let mut zeros = shifted(k - 1, k2 - 1);
        zeros.extend(shifted(k + 1, k2 + 1));
        let mut poles = shifted(k, k2 + 1);
        poles.extend(shifted(k, k2 - 1));
        // a_{m,i} = a_i / a_m: the a_m factors enter twice upstairs and twice downstairs.
        let am = |c2: i64| shifted(m, c2);
        zeros.extend(am(k2 + 1));
        zeros.extend(am(k2 - 1));
        poles.extend(am(k2 - 1));
        poles.extend(am(k2 + 1));
        SplitU::new(Scalar::one(), zeros, poles)
    }

    /// `h_{k,r}`: `ħ^r` times the `u^{-r-1}` coefficient of `h_k(u)`.
    pub fn h_coeff(&self, p: &FinitePattern, k: usize, r: u32) -> Scalar {
        let ser = FiniteModule::h_split_dimensionful(p, k, 0).expand(r as i32 + 1);
        // In U = ħu the u^{-r-1} coefficient times ħ^r becomes the U^{-r-1} coefficient over ħ.
        ser.coeff(r as i32 + 1)
            .unwrap()
            .checked_div(&Scalar::h())
            .unwrap()
    }

    fn check_row(&self, i: usize, max: usize) -> Result<(), GeneratorError> {
        if i == 0 || i > max {
            Err(GeneratorError::IndexOutOfRange { index: i, max })
        } else {
            Ok(())
        }
    }

    fn check_vector(&self, v: &VectorV) -> Result<(), GeneratorError> {
        for (p, _) in v.terms() {
            if p.n() != self.n {
                return Err(GeneratorError::PatternSize {
                    expected: self.n,
                    found: p.n(),
                });
            }
        }
        Ok(())
    }

    /// Action of a generator on a vector.
    pub fn apply(&self, g: FiniteGenerator, v: &VectorV) -> Result<VectorV, GeneratorError> {
        self.check_vector(v)?;
        let n = self.n;
        match g {
            FiniteGenerator::Eii(i) => {
                self.check_row(i, n)?;
                Ok(v.map(|p| vec![(p.clone(), self.eii_eigenvalue(p, i))]))
            }
            FiniteGenerator::H(i) => {
                self.check_row(i, n - 1)?;
                Ok(v.map(|p| {
                    let e = self
                        .eii_eigenvalue(p, i + 1)
                        .sub(&self.eii_eigenvalue(p, i));
                    vec![(p.clone(), e)]
                }))
            }
            FiniteGenerator::E(i) => {
                self.check_row(i, n - 1)?;
                Ok(v.map(|p| self.raise(p, i, 0)))
            }
            FiniteGenerator::F(i) => {
                self.check_row(i, n - 1)?;
                Ok(v.map(|p| self.lower(p, i, 0)))
            }
            FiniteGenerator::XMinus(k, r) => {
                self.check_row(k, n - 1)?;
                Ok(v.map(|p| self.raise(p, k, r)))
            }
            FiniteGenerator::XPlus(k, r) => {
                self.check_row(k, n - 1)?;
                Ok(v.map(|p| self.lower(p, k, r)))
            }
            FiniteGenerator::HCoeff(k, r) => {
                self.check_row(k, n - 1)?;
                Ok(v.map(|p| vec![(p.clone(), self.h_coeff(p, k, r))]))
            }
        }
    }

    /// `a_m(u) = ∏_{j≤m}(u + ħ⁻¹x_j − d_{mj})`, with `a_0 = 1`.
    pub fn eigen_a(&self, m: usize, p: &FinitePattern) -> Result<RationalU, GeneratorError> {
        if m > self.n {
            return Err(GeneratorError::IndexOutOfRange {
                index: m,
                max: self.n,
            });
        }
        let roots = (1..=m)
            .map(|j| {
                Scalar::x(j)
                    .checked_div(&Scalar::h())
                    .unwrap()
                    .neg()
                    .add(&Scalar::from_int(p.d(m, j) as i64))
            })
            .collect();
        Ok(SplitU::new(Scalar::one(), roots, Vec::new()).to_rational())
    }

    /// `h_k(u)` as a reduced rational function of `u`, computed through the
    /// ratios `a_i/a_m` with `m = via_m` (default `0`).
    pub fn eigen_h(
        &self,
        k: usize,
        p: &FinitePattern,
        via_m: Option<usize>,
    ) -> Result<RationalU, GeneratorError> {
        self.check_row(k, self.n - 1)?;
        let m = via_m.unwrap_or(0);
        if m >= k {
            return Err(GeneratorError::BadM { m, k });
        }
        let inv_h = Scalar::h().inv().unwrap();
        let split = FiniteModule::h_split_dimensionful(p, k, m).rescale_roots(&inv_h);
        Ok(split.to_rational())
    }

    /// `gl_n` Chevalley relations between `E_ii`, `e_i`, `f_i`.
    pub fn chevalley_relations(&self) -> Vec<Relation> {
        let n = self.n;
        let mut out = Vec::new();
        let e = |k| Expr::op(Op::raise(k, 0));
        let f = |k| Expr::op(Op::lower(k, 0));
        let eii = |i| Expr::op(Op::Cartan(i));
        let delta = |a: usize, b: usize| if a == b { 1 } else { 0 };
        for i in 1..=n {
            for j in 1..=n {
                out.push(Relation {
                    name: "gl:[E,E]",
                    indices: vec![i as i64, j as i64],
                    expr: Expr::commutator(&eii(i), &eii(j)),
                });
            }
            for k in 1..n {
                let c = Scalar::from_int(delta(i, k + 1) - delta(i, k));
                out.push(Relation {
                    name: "gl:[E,e]",
                    indices: vec![i as i64, k as i64],
                    expr: Expr::commutator(&eii(i), &e(k)).sub(e(k).scale(&c)),
                });
                out.push(Relation {
                    name: "gl:[E,f]",
                    indices: vec![i as i64, k as i64],
                    expr: Expr::commutator(&eii(i), &f(k)).add(f(k).scale(&c)),
                });
            }
        }
        for k in 1..n {
            for l in 1..n {
                let mut expr = Expr::commutator(&e(k), &f(l));
                if k == l {
                    expr = expr.sub(eii(k + 1)).add(eii(k));
                }
                out.push(Relation {
                    name: "gl:[e,f]",
                    indices: vec![k as i64, l as i64],
                    expr,
                });
                if k == l {
                    continue;
                }
                let (ee, ff) = if k.abs_diff(l) == 1 {
                    (
                        Expr::commutator(&e(k), &Expr::commutator(&e(k), &e(l))),
                        Expr::commutator(&f(k), &Expr::commutator(&f(k), &f(l))),
                    )
                } else {
                    (
                        Expr::commutator(&e(k), &e(l)),
                        Expr::commutator(&f(k), &f(l)),
                    )
                };
                out.push(Relation {
                    name: "gl:serre-e",
                    indices: vec![k as i64, l as i64],
                    expr: ee,
                });
                out.push(Relation {
                    name: "gl:serre-f",
                    indices: vec![k as i64, l as i64],
                    expr: ff,
                });
            }
        }
        out
    }

    /// Checks the `gl_n` relations and the Yangian relations with
    /// spectral indices `≤ rmax` on every basis vector of total degree `≤ max_degree`.
    pub fn verify_relations(&self, max_degree: u32, rmax: u32) -> Report {
        self.verify_relations_on(&FinitePattern::up_to(self.n, max_degree), rmax)
    }

    pub fn verify_relations_on(&self, basis: &[FinitePattern], rmax: u32) -> Report {
        let mut rels = self.chevalley_relations();
        rels.extend(yangian_relations(self, rmax));
        let mut ev = Evaluator::new(self);
        let mut report = Report::default();
        for p in basis {
            report.merge(check_relations(&mut ev, &rels, p));
        }
        report
    }
}

impl Rep for FiniteModule {
    type Basis = FinitePattern;

    fn rank(&self) -> usize {
        self.n - 1
    }

    fn cartan(&self, k: usize, l: usize) -> i64 {
        if k == l {
            2
        } else if k.abs_diff(l) == 1 {
            -1
        } else {
            0
        }
    }

    fn apply(&self, op: Op, p: &FinitePattern) -> Terms<FinitePattern> {
        match op {
            Op::Raise { k, r, .. } => self.raise(p, k, r),
            Op::Lower { k, r, .. } => self.lower(p, k, r),
            Op::H { k, r, .. } => vec![(p.clone(), self.h_coeff(p, k, r))],
            Op::Cartan(i) => vec![(p.clone(), self.eii_eigenvalue(p, i))],
        }
    }
}

/// Convenience: `h_k(u)` eigenvalue with the default `m = 0`.
pub fn eigen_h_finite(
    p: &FinitePattern,
    k: usize,
    via_m: Option<usize>,
) -> Result<RationalU, GeneratorError> {
    FiniteModule::new(p.n()).eigen_h(k, p, via_m)
}

pub fn eigen_a_finite(p: &FinitePattern, m: usize) -> Result<RationalU, GeneratorError> {
    FiniteModule::new(p.n()).eigen_a(m, p)
}

pub fn apply_finite(g: FiniteGenerator, v: &VectorV) -> Result<VectorV, GeneratorError> {
    let n = v.terms().next().map(|(p, _)| p.n()).unwrap_or(2);
    FiniteModule::new(n).apply(g, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_scalar;

    fn sc(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    fn box11() -> FinitePattern {
        FinitePattern::from_rows(3, vec![vec![1], vec![0, 0]]).unwrap()
    }

    #[test]
    fn chevalley_examples() {
        let m = FiniteModule::new(3);
        let vac = VectorV::basis(FinitePattern::vacuum(3));
        let e = m.apply(FiniteGenerator::E(1), &vac).unwrap();
        assert_eq!(e, VectorV::from_terms([(box11(), sc("-1/h"))]));
        let f = m
            .apply(FiniteGenerator::F(1), &VectorV::basis(box11()))
            .unwrap();
        assert_eq!(
            f,
            VectorV::from_terms([(FinitePattern::vacuum(3), sc("x2 - x1 + h"))])
        );
        let ef = m
            .apply(
                FiniteGenerator::E(1),
                &m.apply(FiniteGenerator::F(1), &vac).unwrap(),
            )
            .unwrap();
        let fe = m.apply(FiniteGenerator::F(1), &e).unwrap();
        let comm = ef.sub(&fe);
        let h = m.apply(FiniteGenerator::H(1), &vac).unwrap();
        assert_eq!(comm, h);
        assert_eq!(h.coeff(&FinitePattern::vacuum(3)), sc("(x2 - x1)/h + 1"));
    }

    #[test]
    fn r_zero_matches_chevalley() {
        let m = FiniteModule::new(3);
        for p in FinitePattern::up_to(3, 2) {
            let v = VectorV::basis(p);
            for k in 1..=2 {
                assert_eq!(
                    m.apply(FiniteGenerator::XMinus(k, 0), &v),
                    m.apply(FiniteGenerator::E(k), &v)
                );
                assert_eq!(
                    m.apply(FiniteGenerator::XPlus(k, 0), &v),
                    m.apply(FiniteGenerator::F(k), &v)
                );
            }
        }
    }

    #[test]
    fn eigen_series() {
        let m = FiniteModule::new(3);
        let vac = FinitePattern::vacuum(3);
        assert_eq!(
            m.eigen_a(0, &vac).unwrap(),
            RationalU::polynomial(vec![Scalar::one()])
        );
        let a2 = m.eigen_a(2, &vac).unwrap();
        assert_eq!(a2.numerator().len(), 3);
        assert_eq!(a2.numerator()[1], sc("(x1 + x2)/h"));
        let a1 = m.eigen_a(1, &box11()).unwrap();
        assert_eq!(a1.numerator(), &[sc("x1/h - 1"), Scalar::one()]);
        let h1 = m.eigen_h(1, &vac, None).unwrap();
        let expect = RationalU::new(
            vec![sc("1 + x2/h"), Scalar::one()],
            vec![sc("x1/h"), Scalar::one()],
        );
        assert_eq!(h1, expect);
        assert_eq!(h1.expand(1).coeff(1).unwrap(), sc("(x2 - x1)/h + 1"));
        assert_eq!(m.h_coeff(&vac, 1, 0), sc("(x2 - x1)/h + 1"));
        assert!(m.eigen_h(1, &vac, Some(1)).is_err());
        for p in FinitePattern::up_to(3, 3) {
            assert_eq!(
                m.eigen_h(2, &p, Some(1)).unwrap(),
                m.eigen_h(2, &p, None).unwrap()
            );
        }
    }

    #[test]
    fn relation_examples() {
        let m = FiniteModule::new(3);
        let mut ev = Evaluator::new(&m);
        let vac = FinitePattern::vacuum(3);
        let e13 = Expr::commutator(&Expr::op(Op::raise(1, 1)), &Expr::op(Op::lower(1, 1)))
            .sub(Expr::op(Op::h(1, 2)));
        assert!(ev.check_zero(&e13, &vac).is_ok());
        let e11 = Expr::commutator(&Expr::op(Op::h(1, 0)), &Expr::op(Op::raise(2, 0)))
            .add(Expr::op(Op::raise(2, 0)));
        assert!(ev.check_zero(&e11, &vac).is_ok());
    }

    #[test]
    fn small_verification() {
        let rep = FiniteModule::new(3).verify_relations(1, 1);
        assert!(rep.all_passed(), "{:?}", rep.failures().next());
        assert!(rep.instances.len() > 100);
    }
}
