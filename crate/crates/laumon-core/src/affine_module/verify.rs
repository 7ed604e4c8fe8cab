use super::AffineModule;
use crate::exactalg::{Lin, LinRoots, Var};
use crate::patterns::AffinePattern;
use crate::prelude::*;
use crate::rep::{check_relations, yangian_relations, Evaluator, Instance, Report};

fn instance(
    relation: &str,
    indices: Vec<i64>,
    p: &AffinePattern,
    ok: bool,
    residual: impl FnOnce() -> String,
) -> Instance {
    Instance {
        relation: relation.to_string(),
        indices,
        basis: p.to_string(),
        passed: ok,
        residual: if ok { None } else { Some(residual()) },
    }
}

fn h(c2: i64) -> Lin {
    Lin::var(Var::H).scale(c2, 2)
}

impl AffineModule {
    /// The Yangian relations, with the modified `[h, x]` and `[x, x]` forms for the pairs
    /// `(n,1)` and `(1,n)`, on every fixed point of total degree `≤ max_degree`.
    pub fn verify_relations(&self, max_degree: u32, rmax: u32) -> Report {
        self.verify_relations_on(&AffinePattern::up_to(self.n, max_degree), rmax)
    }

    pub fn verify_relations_on(&self, basis: &[AffinePattern], rmax: u32) -> Report {
        let rels = yangian_relations(self, rmax);
        let mut ev = Evaluator::new(self);
        let mut report = Report::default();
        for p in basis {
            report.merge(check_relations(&mut ev, &rels, p));
        }
        report
    }

    /// The `a ↔ h` identities: independence of `m`, the period shift of
    /// `a_{0,i+n}`, the product formula for `a_{0i}`, and the functional
    /// equation for `a_{01}`.
    pub fn verify_recursion(&self, max_degree: u32) -> Report {
        let n = self.n as i64;
        let mut report = Report::default();
        for p in AffinePattern::up_to(self.n, max_degree) {
            for i in 1..=n {
                let base = self.h_roots(&p, i);
                for m in [i - 1, i - 2, i - 3] {
                    let via = self.h_roots_via(&p, i, m);
                    report.instances.push(instance(
                        "m-independence",
                        vec![i, m],
                        &p,
                        via == base,
                        || via.div(&base).to_string(),
                    ));
                }
            }
            for i in 1..=n {
                let lhs = self.a_roots(&p, 0, i + n).div(&self.a_roots(&p, 0, n));
                let rhs = self.a_roots(&p, 0, i).shift(&self.hp);
                report
                    .instances
                    .push(instance("ai+n", vec![i], &p, lhs == rhs, || {
                        lhs.div(&rhs).to_string()
                    }));
            }
            let a01 = self.a_roots(&p, 0, 1);
            for i in 1..=n {
                let mut rhs = LinRoots::one();
                for j in 0..i {
                    rhs = rhs.mul(&a01.shift(&h(-2 * j)));
                }
                for j in 1..i {
                    for l in 1..=i - j {
                        rhs = rhs.mul(&self.h_roots(&p, j).shift(&h(-(2 * l + j - 1))));
                    }
                }
                let lhs = self.a_roots(&p, 0, i);
                report
                    .instances
                    .push(instance("ai", vec![i], &p, lhs == rhs, || {
                        lhs.div(&rhs).to_string()
                    }));
            }
            let lhs = a01.shift(&h(-2 * n)).mul(&self.critical_product(&p));
            let rhs = a01.shift(&self.hp);
            report
                .instances
                .push(instance("a01", vec![], &p, lhs == rhs, || {
                    lhs.div(&rhs).to_string()
                }));
        }
        report
    }

    /// `∏_{j=1}^{n} h_j(u − n + (j−1)/2)`.
    pub fn critical_product(&self, p: &AffinePattern) -> LinRoots {
        let n = self.n as i64;
        let mut out = LinRoots::one();
        for j in 1..=n {
            out = out.mul(&self.h_roots(p, j).shift(&h(-2 * n + j - 1)));
        }
        out
    }

    /// At `ħ′ = −nħ` the product [`AffineModule::critical_product`] is `1`.
    pub fn verify_critical(&self, max_degree: u32) -> Report {
        let mut report = Report::default();
        for p in AffinePattern::up_to(self.n, max_degree) {
            let prod = self.critical_product(&p);
            report
                .instances
                .push(instance("critical", vec![], &p, prod.is_one(), || {
                    prod.to_string()
                }));
        }
        report
    }

    /// Data behind irreducibility: distinct joint `h`-spectra, a nonzero raising
    /// image everywhere, and a nonzero lowering image away from the vacuum.
    pub fn verify_irreducibility(&self, max_degree: u32) -> Report {
        let pats = AffinePattern::up_to(self.n, max_degree);
        let mut seen: BTreeMap<Vec<LinRoots>, usize> = BTreeMap::new();
        let tuples: Vec<Vec<LinRoots>> = pats.iter().map(|p| self.h_tuple(p)).collect();
        for t in &tuples {
            *seen.entry(t.clone()).or_default() += 1;
        }
        let mut report = Report::default();
        let n = self.n as i64;
        for (p, t) in pats.iter().zip(tuples.iter()) {
            let unique = seen[t] == 1;
            report
                .instances
                .push(instance("distinct-spectrum", vec![], p, unique, || {
                    "shared h-spectrum".into()
                }));
            let up = (1..=n).any(|i| !self.raise(p, i, 0).is_empty());
            report
                .instances
                .push(instance("raise-nonzero", vec![], p, up, || {
                    "all raising images vanish".into()
                }));
            if p.total() > 0 {
                let down = (1..=n).any(|i| !self.lower(p, i, 0).is_empty());
                report
                    .instances
                    .push(instance("lower-nonzero", vec![], p, down, || {
                        "all lowering images vanish".into()
                    }));
            }
        }
        report
    }
}
