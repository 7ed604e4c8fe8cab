//! Integrable level-`K` specialization: `ħ = 1`, `ħ′ = −K − n`,
//! `x_j = μ̃_j − j + 1`, acting on the span of `D(μ)` in the renormalized basis
//! `⟨d⟩ = C_d⁻¹[d]`.

pub mod oracle;

use crate::affine_module::AffineModule;
use crate::exactalg::{Rat, Scalar, ScalarError, Var};
use crate::localization::{tangent, weight_product, FixedEdge, LocalizationError};
use crate::patterns::{AffinePattern, DominantWeight};
use crate::prelude::*;
use crate::rep::{Instance, Report};

/// The substitution point of `w`.
pub fn point(w: &DominantWeight) -> impl Fn(Var) -> Rat + '_ {
    move |v| match v {
        Var::H => Rat::from_int(1.into()),
        Var::Hp => Rat::from_int((-w.level() - w.n() as i64).into()),
        Var::X(j) => {
            let j = j as i64;
            Rat::from_int((w.mu_tilde(j) - j + 1).into())
        }
    }
}

/// Value of `s` at the point of `w`.
pub fn specialize(s: &Scalar, w: &DominantWeight) -> Result<Rat, ScalarError> {
    s.eval(&point(w))
}

/// `C_d`, the product of the tangent weights at `d`.
pub fn renorm_c(p: &AffinePattern) -> Result<Scalar, LocalizationError> {
    weight_product(&tangent(p), &crate::exactalg::Lin::var(Var::Hp))
}

/// Matrix coefficients of `x⁺_{i,r}` on `⟨d⟩`, written as `−f[d′,d]` times the
/// fiber weight so that no `C` factor enters.
pub fn raise_renormalized(
    m: &AffineModule,
    d: &AffinePattern,
    i: i64,
    r: u32,
) -> Vec<(AffinePattern, Scalar)> {
    let mut out = Vec::new();
    for edge in FixedEdge::from_source(d) {
        if edge.i != i {
            continue;
        }
        let c = m.f_coeff(&edge.target, i, edge.j).neg();
        out.push((edge.target, c.mul(&m.fiber(d, i, edge.j, 0).pow(r as i32))));
    }
    out
}

/// Matrix coefficients of `x⁻_{i,r}` on `⟨d⟩` as `−e[d′,d]` times the fiber weight.
pub fn lower_renormalized(
    m: &AffineModule,
    d: &AffinePattern,
    i: i64,
    r: u32,
) -> Vec<(AffinePattern, Scalar)> {
    let n = d.n() as i64;
    let mut out = Vec::new();
    for j in i - d.max_len() as i64 - n - 2..=i {
        if d.d(i, j) == 0 {
            continue;
        }
        if let Some(t) = d.bump(i, j, -1) {
            let c = m.e_coeff(&t, i, j).neg();
            out.push((t, c.mul(&m.fiber(d, i, j, -2).pow(r as i32))));
        }
    }
    out
}

fn push(
    report: &mut Report,
    relation: &str,
    indices: Vec<i64>,
    basis: String,
    ok: bool,
    residual: impl FnOnce() -> String,
) {
    report.instances.push(Instance {
        relation: relation.to_string(),
        indices,
        basis,
        passed: ok,
        residual: if ok { None } else { Some(residual()) },
    });
}

/// For every `d ∈ D(μ)` with `|d| ≤ max_degree`, every node and `r ≤ rmax`:
/// (a) the renormalized coefficients of `x^±_{i,r}` have nonvanishing
/// denominators at the specialization point; (b) those leading out of `D(μ)`
/// specialize to zero.
pub fn check_truncation(w: &DominantWeight, max_degree: u32, rmax: u32) -> Report {
    let sources: Vec<AffinePattern> = AffinePattern::up_to(w.n(), max_degree)
        .into_iter()
        .filter(|d| w.contains(d))
        .collect();
    check_truncation_on(w, &sources, rmax)
}

/// [`check_truncation`] on the given sources, which must lie in `D(μ)`.
pub fn check_truncation_on(w: &DominantWeight, sources: &[AffinePattern], rmax: u32) -> Report {
    let n = w.n();
    let m = AffineModule::new(n);
    let mut report = Report::default();
    for d in sources {
        for i in 1..=n as i64 {
            for r in 0..=rmax {
                let sides = [
                    ("x+", raise_renormalized(&m, d, i, r)),
                    ("x-", lower_renormalized(&m, d, i, r)),
                ];
                for (name, terms) in sides {
                    for (t, c) in terms {
                        let basis = format!("{} -> {}", d, t);
                        let v = specialize(&c, w);
                        let ok_a = v.is_ok();
                        push(
                            &mut report,
                            &format!("a:{}", name),
                            vec![i, r as i64],
                            basis.clone(),
                            ok_a,
                            || format!("denominator vanishes in {}", c),
                        );
                        if !w.contains(&t) {
                            let ok_b = matches!(&v, Ok(x) if x.is_zero());
                            push(
                                &mut report,
                                &format!("b:{}", name),
                                vec![i, r as i64],
                                basis,
                                ok_b,
                                || match &v {
                                    Ok(x) => format!("numerator specializes to {}", x),
                                    Err(e) => format!("{}", e),
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

/// `e[d,d′]·C_{d′}/C_d = −f[d′,d]` on edges inside `D(μ)`, checked as identities
/// of rational functions and at the specialization point.
pub fn check_renormalized_antisymmetry(w: &DominantWeight, max_degree: u32) -> Report {
    let n = w.n();
    let m = AffineModule::new(n);
    let mut report = Report::default();
    for d in AffinePattern::up_to(n, max_degree) {
        if !w.contains(&d) {
            continue;
        }
        let cd = renorm_c(&d);
        for edge in FixedEdge::from_source(&d) {
            if !w.contains(&edge.target) {
                continue;
            }
            let lhs = match (&cd, renorm_c(&edge.target)) {
                (Ok(a), Ok(b)) => m.e_coeff(&d, edge.i, edge.j).mul(&b).checked_div(a).ok(),
                _ => None,
            };
            let rhs = m.f_coeff(&edge.target, edge.i, edge.j).neg();
            let ok = lhs.as_ref() == Some(&rhs) && specialize(&rhs, w).is_ok();
            push(
                &mut report,
                "e<d,d'>=-f[d',d]",
                vec![edge.i, edge.j],
                edge.to_string(),
                ok,
                || format!("lhs {:?} rhs {}", lhs.map(|s| s.to_string()), rhs),
            );
        }
    }
    report
}

/// `|{d ∈ D(μ) : deg d = v}|` for all degree vectors `v` of total `≤ cutoff`.
pub fn character_counts(w: &DominantWeight, cutoff: u32) -> BTreeMap<Vec<u32>, u64> {
    let mut out = BTreeMap::new();
    for d in AffinePattern::up_to(w.n(), cutoff) {
        if w.contains(&d) {
            *out.entry(d.degree()).or_insert(0) += 1;
        }
    }
    out
}

/// Degree-by-degree comparison of [`character_counts`] with the pile
/// enumerator of [`oracle`] (and, at level one with `μ = 0`, with coloured
/// partitions).
pub fn check_character(w: &DominantWeight, cutoff: u32) -> Report {
    let ours = character_counts(w, cutoff);
    let piles = oracle::cylindric_counts(w, cutoff);
    let fock = if w.level() == 1 && w.mu().iter().all(|&m| m == 0) {
        Some(oracle::fock_counts(w.n(), cutoff))
    } else {
        None
    };
    let mut keys: Vec<&Vec<u32>> = ours.keys().chain(piles.keys()).collect();
    if let Some(f) = &fock {
        keys.extend(f.keys());
    }
    keys.sort();
    keys.dedup();
    let mut report = Report::default();
    for k in keys {
        let a = ours.get(k).copied().unwrap_or(0);
        let b = piles.get(k).copied().unwrap_or(0);
        let idx: Vec<i64> = k.iter().map(|&x| x as i64).collect();
        push(
            &mut report,
            "cylindric-count",
            idx.clone(),
            format!("{:?}", k),
            a == b,
            || format!("D(mu) {} piles {}", a, b),
        );
        if let Some(f) = &fock {
            let c = f.get(k).copied().unwrap_or(0);
            push(
                &mut report,
                "fock-count",
                idx,
                format!("{:?}", k),
                a == c,
                || format!("D(mu) {} fock {}", a, c),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_scalar;

    fn w0() -> DominantWeight {
        DominantWeight::zero(3, 1)
    }

    #[test]
    fn specialization_examples() {
        let w = w0();
        let r = |t: &str| specialize(&parse_scalar(t).unwrap(), &w).unwrap();
        assert_eq!(r("x1"), Rat::from_int((-1).into()));
        assert_eq!(r("hp"), Rat::from_int((-4).into()));
        assert_eq!(r("1/(x1-x2)"), Rat::from_int(1.into()));
        assert!(specialize(&parse_scalar("1/(x1+1)").unwrap(), &w).is_err());
    }

    #[test]
    fn renorm_examples() {
        assert!(renorm_c(&AffinePattern::vacuum(3)).unwrap().is_one());
        let p = AffinePattern::from_parts(&[&[1], &[], &[]]).unwrap();
        let c = renorm_c(&p).unwrap();
        assert_eq!(c.degree(), 2);
    }

    #[test]
    fn first_edges() {
        let w = w0();
        let m = AffineModule::new(3);
        let vac = AffinePattern::vacuum(3);
        for i in 1..=3 {
            for (t, c) in raise_renormalized(&m, &vac, i, 0) {
                let v = specialize(&c, &w).unwrap();
                assert_eq!(w.contains(&t), !v.is_zero(), "{}", t);
            }
        }
        let third = AffinePattern::from_parts(&[&[], &[], &[1]]).unwrap();
        assert!(w.contains(&third));
        assert!(!w.contains(&AffinePattern::from_parts(&[&[1], &[], &[]]).unwrap()));
    }

    #[test]
    fn small_checks() {
        let w = w0();
        let r = check_truncation(&w, 2, 1);
        assert!(r.all_passed(), "{:?}", r.failures().next());
        let r = check_character(&w, 4);
        assert!(r.all_passed(), "{:?}", r.failures().next());
        let one: Vec<_> = character_counts(&w, 1)
            .into_iter()
            .filter(|(k, _)| k.iter().sum::<u32>() == 1)
            .collect();
        assert_eq!(one, vec![(vec![0, 0, 1], 1)]);
    }
}
