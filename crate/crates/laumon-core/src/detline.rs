//! The determinant line bundle `D₀` and the formula for its first Chern class
//! in terms of the power sums `Φ_{n,r}`.

use crate::affine_module::{AffineModule, EigenSeries, SeriesKind};
use crate::exactalg::{Lin, LinRoots, Rat, Scalar, Var};
use crate::patterns::{md, AffinePattern};
use crate::prelude::*;
use crate::rep::{Instance, Report};

/// The nonzero entries `(j, d_{0j})`, `j ≤ 0`.
fn row_zero(p: &AffinePattern) -> Vec<(i64, i64)> {
    let lo = -(p.max_len() as i64);
    (lo..=0)
        .map(|j| (j, p.d(0, j) as i64))
        .filter(|(_, v)| *v != 0)
        .collect()
}

fn fl(a: i64, n: usize) -> i64 {
    a.div_euclid(n as i64)
}

fn int(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// Character of the fiber of `D₀` at `p`.
pub fn char_d0(p: &AffinePattern) -> Scalar {
    let n = p.n();
    let row = row_zero(p);
    let mut lin = Lin::ZERO;
    for jj in 1..=n {
        let lost: i64 = row
            .iter()
            .filter(|(j, _)| md(*j, n) == jj)
            .map(|(_, v)| v)
            .sum();
        lin = lin.plus(Var::X(jj as u8), 1 - lost);
    }
    let quad: i64 = row.iter().map(|(_, v)| v * (v - 1)).sum();
    let lin = lin.add(&Lin::var(Var::H).scale(quad, 2));
    let hp: i64 = row.iter().map(|(j, v)| v * fl(-j, n)).sum();
    Scalar::from_lin(&lin.plus(Var::Hp, hp))
}

/// `Φ_{n,r}`, the coefficient of `u^{−r−1}` in `∂_u log a_{0n}(u)`.
pub fn phi(m: &AffineModule, p: &AffinePattern, r: u32) -> Scalar {
    match m.eigen_series(
        SeriesKind::Phi {
            order: r as i32 + 1,
        },
        p,
    ) {
        Ok(EigenSeries::Series(s)) => s.coeff(r as i32 + 1).unwrap_or_else(Scalar::zero),
        _ => unreachable!("the Phi series is always a power series"),
    }
}

/// `Σ_j (x_j + ħ′)^e`.
fn shifted_power_sum(n: usize, e: i32) -> Scalar {
    let mut acc = Vec::new();
    for j in 1..=n {
        acc.push(Scalar::x(j).add(&Scalar::hp()).pow(e));
    }
    Scalar::sum(acc.iter())
}

/// The closed forms of `Φ_{n,1}`, `Φ_{n,2}`, `Φ_{n,3}`; `None` for other `r`.
pub fn phi_closed(p: &AffinePattern, r: u32) -> Option<Scalar> {
    let n = p.n();
    let row = row_zero(p);
    let (h, hp) = (Scalar::h(), Scalar::hp());
    let s: i64 = row.iter().map(|(_, v)| v).sum();
    Some(match r {
        0 => int(n as i64),
        1 => {
            let xs: Vec<Scalar> = (1..=n).map(Scalar::x).collect();
            Scalar::sum(xs.iter()).add(&hp.mul(&int(n as i64))).neg()
        }
        2 => shifted_power_sum(n, 2).sub(&h.mul(&hp).mul(&int(2 * s))),
        3 => {
            let mut sx = Vec::new();
            for jj in 1..=n {
                let c: i64 = row
                    .iter()
                    .filter(|(j, _)| md(*j, n) == jj)
                    .map(|(_, v)| v)
                    .sum();
                sx.push(Scalar::x(jj).mul(&int(2 * c)));
            }
            let sq: i64 = row.iter().map(|(_, v)| v * v).sum();
            let lin: i64 = row.iter().map(|(j, v)| v * (2 * fl(-j, n) - 1)).sum();
            let bracket = Scalar::sum(sx.iter())
                .sub(&h.mul(&int(sq)))
                .sub(&hp.mul(&int(lin)));
            shifted_power_sum(n, 3)
                .neg()
                .add(&h.mul(&hp).mul(&int(3)).mul(&bracket))
        }
        _ => return None,
    })
}

/// Right-hand side of the first Chern class formula, evaluated from the
/// eigenvalues `Φ_{n,2}`, `Φ_{n,3}` of `m` at `p`.
pub fn c1_formula(m: &AffineModule, p: &AffinePattern) -> Scalar {
    let n = p.n();
    let (h, hp) = (Scalar::h(), Scalar::hp());
    let diff = h.sub(&hp);
    let inner = Scalar::sum(
        [
            phi(m, p, 3).mul(&int(-2)),
            diff.mul(&phi(m, p, 2)).mul(&int(3)),
            shifted_power_sum(n, 3).mul(&int(-2)),
            diff.mul(&shifted_power_sum(n, 2)).mul(&int(-3)),
        ]
        .iter(),
    );
    let scale = h.mul(&hp).mul(&int(12)).inv().expect("nonzero");
    let xs: Vec<Scalar> = (1..=n).map(Scalar::x).collect();
    inner.mul(&scale).add(&Scalar::sum(xs.iter()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    /// Degree vectors `(d,…,d)` only.
    Diagonal,
    /// Every degree vector.
    All,
}

fn instance(
    relation: &str,
    p: &AffinePattern,
    ok: bool,
    residual: impl FnOnce() -> String,
) -> Instance {
    Instance {
        relation: relation.to_string(),
        indices: p.degree().iter().map(|&x| x as i64).collect(),
        basis: p.to_string(),
        passed: ok,
        residual: if ok { None } else { Some(residual()) },
    }
}

/// Patterns on which the formula is checked: with `Diagonal` every pattern of
/// degree `(d,…,d)` with `d ≤ cutoff`, with `All` every pattern of total
/// degree `≤ cutoff`.
pub fn xvi_patterns(n: usize, cutoff: u32, mode: DegreeMode) -> Vec<AffinePattern> {
    match mode {
        DegreeMode::Diagonal => (0..=cutoff)
            .flat_map(|d| AffinePattern::enumerate(n, &vec![d; n]))
            .collect(),
        DegreeMode::All => AffinePattern::up_to(n, cutoff),
    }
}

/// The first Chern class formula against [`char_d0`]. Instances at
/// non-diagonal degree vectors are named `xvi-offdiagonal`.
pub fn verify_xvi_on(patterns: &[AffinePattern]) -> Report {
    let mut report = Report::default();
    let mut modules: BTreeMap<usize, AffineModule> = BTreeMap::new();
    for p in patterns {
        let m = modules
            .entry(p.n())
            .or_insert_with(|| AffineModule::new(p.n()));
        let deg = p.degree();
        let name = if deg.iter().all(|&x| x == deg[0]) {
            "xvi"
        } else {
            "xvi-offdiagonal"
        };
        let lhs = c1_formula(m, p);
        let rhs = char_d0(p);
        let ok = lhs == rhs;
        report.instances.push(instance(name, p, ok, || {
            format!("formula {} character {}", lhs, rhs)
        }));
    }
    report
}

pub fn verify_xvi(n: usize, cutoff: u32, mode: DegreeMode) -> Report {
    verify_xvi_on(&xvi_patterns(n, cutoff, mode))
}

/// `Φ_{n,r}` for `r = 0..=3` against the closed forms, and the telescoped
/// product `a_{0n}(u) = ∏_{j≤0}(u − p_{0j} + ħ′)/(u − p_{0j})`.
pub fn verify_phi_closed_on(patterns: &[AffinePattern]) -> Report {
    let mut report = Report::default();
    for p in patterns {
        let m = AffineModule::new(p.n());
        for r in 0..=3 {
            let got = phi(&m, p, r);
            let want = phi_closed(p, r).expect("closed form exists");
            let ok = got == want;
            report
                .instances
                .push(instance(&format!("phi{}", r), p, ok, || {
                    format!("series {} closed {}", got, want)
                }));
        }
        let lo = -(p.max_len() as i64) - 2 * p.n() as i64;
        let zeros = (lo..=0).map(|j| m.p(p, 0, j).sub(m.hp()));
        // The bottom `n` poles would cancel zeros beyond the truncation.
        let poles = (lo + p.n() as i64..=0).map(|j| m.p(p, 0, j));
        let tele = LinRoots::from_lists(zeros, poles);
        let a0n = m.a0n(p);
        let ok = tele == a0n;
        report.instances.push(instance("a0n-product", p, ok, || {
            a0n.div(&tele).to_string()
        }));
    }
    report
}

/// Sanity value used by the CLI: `Φ_{n,1}` must not depend on the pattern.
pub fn phi1_constant(n: usize) -> Scalar {
    let xs: Vec<Scalar> = (1..=n).map(Scalar::x).collect();
    Scalar::sum(xs.iter())
        .add(&Scalar::hp().scale(&Rat::from_int((n as i64).into())))
        .neg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_scalar;

    fn sc(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn d0_examples() {
        assert_eq!(char_d0(&AffinePattern::vacuum(3)), sc("x1 + x2 + x3"));
        // d_{00} = λ³_{0}
        let one = AffinePattern::from_parts(&[&[], &[], &[1]]).unwrap();
        assert_eq!(one.d(0, 0), 1);
        assert_eq!(char_d0(&one), sc("x1 + x2"));
        let two = AffinePattern::from_parts(&[&[], &[], &[2]]).unwrap();
        assert_eq!(char_d0(&two), sc("x1 + x2 - x3 + h"));
    }

    #[test]
    fn vacuum_values() {
        let m = AffineModule::new(3);
        let vac = AffinePattern::vacuum(3);
        assert_eq!(phi(&m, &vac, 3), sc("-(x1+hp)^3 - (x2+hp)^3 - (x3+hp)^3"));
        assert_eq!(c1_formula(&m, &vac), sc("x1 + x2 + x3"));
        assert_eq!(phi(&m, &vac, 1), phi1_constant(3));
    }

    #[test]
    fn small_degrees() {
        let r = verify_xvi(3, 1, DegreeMode::Diagonal);
        assert!(r.all_passed(), "{:?}", r.failures().next());
        let r = verify_phi_closed_on(&AffinePattern::up_to(3, 2));
        assert!(r.all_passed(), "{:?}", r.failures().next());
    }
}
