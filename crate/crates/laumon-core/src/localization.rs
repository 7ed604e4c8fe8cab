//! Torus characters at fixed points of affine Laumon spaces and the
//! localization formula for the correspondence operators.
//!
//! Characters are [`CharPoly`]s: a monomial `q^b q′^c ∏ t_l^{2a_l}` stands for
//! the weight `bħ + cħ′ + Σ a_l x_l`. The formally infinite sums over columns
//! are cut at a column below which every `d_{kl}` vanishes; each dropped term
//! carries a factor `q⁰ − 1`.

use core::fmt;

use crate::affine_module::AffineModule;
use crate::exactalg::{CharError, CharPoly, Int, Lin, Scalar, Var};
use crate::patterns::{md, AffinePattern, Partition};
use crate::prelude::*;
use crate::rep::{Instance, Report};

fn fl(a: i64, n: usize) -> i64 {
    a.div_euclid(n as i64)
}

/// Accumulates a character term by term.
struct Builder {
    n: usize,
    poly: CharPoly,
}

impl Builder {
    fn new(n: usize) -> Builder {
        Builder {
            n,
            poly: CharPoly::zero(n),
        }
    }

    /// Exponent vector of `t_l² / t_{l′}²`.
    fn t(&self, l: i64, lp: i64) -> Vec<i32> {
        let mut v = vec![0; self.n];
        if self.n > 0 {
            v[md(l, self.n) - 1] += 1;
            v[md(lp, self.n) - 1] -= 1;
        }
        v
    }

    fn mono(&mut self, t: &[i32], q: i64, qp: i64, c: i64) {
        let m = crate::exactalg::CharMono::new(t.to_vec(), 2 * q as i32, qp as i32);
        self.poly.add_term(m, Int::from(c));
    }

    /// `c · q^{shift} (q^a − 1)/(q − 1) · q′^{qp}`.
    fn qpoly(&mut self, t: &[i32], a: i64, shift: i64, qp: i64, c: i64) {
        if a >= 0 {
            for e in 0..a {
                self.mono(t, e + shift, qp, c);
            }
        } else {
            for e in a..0 {
                self.mono(t, e + shift, qp, -c);
            }
        }
    }

    /// `c · q (q^a − 1)(q^{−b} − 1)/(q − 1) · q′^{qp}`.
    fn two(&mut self, t: &[i32], a: i64, b: i64, qp: i64, c: i64) {
        if a == 0 || b == 0 {
            return;
        }
        self.qpoly(t, a, 1 - b, qp, c);
        self.qpoly(t, a, 1, qp, -c);
    }

    fn finish(self) -> CharPoly {
        self.poly
    }
}

/// Rank-one character `char_{αβ}(λ′, λ)` of `χ(J_{λ′}, J_λ(−D_∞ + αD₀ + βD₁))`
/// for the two-dimensional torus; the result has no `t` variables.
pub fn char_chi_rank1(src: &Partition, tgt: &Partition, alpha: i64, beta: i64) -> CharPoly {
    let mut b = Builder::new(0);
    let t: [i32; 0] = [];
    let (lp, l) = (src.parts(), tgt.parts());
    for (i, &li) in l.iter().enumerate() {
        for (ip, &lpi) in lp.iter().enumerate() {
            let e = alpha + ip as i64 - i as i64;
            // −q^{β}·q(q^{λ′}−1)(q^{−λ}−1)/(q−1)·q′^e(q′−1)
            for (shift, sign) in [(1, -1), (0, 1)] {
                b.qpoly(&t, lpi as i64, beta + 1 - li as i64, e + shift, sign);
                b.qpoly(&t, lpi as i64, beta + 1, e + shift, -sign);
            }
        }
        b.qpoly(&t, -(li as i64), beta + 1, alpha - i as i64, 1);
    }
    for (ip, &lpi) in lp.iter().enumerate() {
        b.qpoly(&t, lpi as i64, beta + 1, alpha + ip as i64 + 1, -1);
    }
    // q q′ (q^β − 1)/(q − 1) (q′^α − 1)/(q′ − 1)
    let (qs, qps) = (qpoly_exps(beta), qpoly_exps(alpha));
    for (eq, cq) in &qs {
        for (ep, cp) in &qps {
            b.mono(&t, eq + 1, ep + 1, cq * cp);
        }
    }
    b.finish()
}

fn qpoly_exps(a: i64) -> Vec<(i64, i64)> {
    if a >= 0 {
        (0..a).map(|e| (e, 1)).collect()
    } else {
        (a..0).map(|e| (e, -1)).collect()
    }
}

/// Lowest column index any of the character sums needs to see.
fn low_column(ps: &[&AffinePattern]) -> i64 {
    let n = ps[0].n() as i64;
    let len = ps.iter().map(|p| p.max_len()).max().unwrap_or(0) as i64;
    -len - 2 * n - 2
}

fn d(p: &AffinePattern, i: i64, j: i64) -> i64 {
    p.d(i, j) as i64
}

/// Character of the fiber of the diagonal bundle `E` at the pair `(d, d′)`.
pub fn e_char(dd: &AffinePattern, dp: &AffinePattern) -> CharPoly {
    let n = dd.n();
    let lo = low_column(&[dd, dp]);
    let mut b = Builder::new(n);
    for k in 1..=n as i64 {
        let ls = k + lo..=k;
        for l in ls.clone() {
            for lp in k + lo..k {
                let t = b.t(l, lp);
                b.two(&t, d(dp, k - 1, lp), d(dd, k, l), fl(-lp, n) - fl(-l, n), 1);
            }
        }
        for lp in k + lo..k {
            let t = b.t(k, lp);
            b.qpoly(&t, d(dp, k - 1, lp), 1, fl(-lp, n) - fl(-k, n), 1);
        }
        for l in ls.clone() {
            for lp in k + lo..=k {
                let t = b.t(l, lp);
                b.two(&t, d(dp, k, lp), d(dd, k, l), fl(-lp, n) - fl(-l, n), -1);
            }
        }
        for l in ls {
            let t = b.t(l, k);
            b.qpoly(&t, -d(dd, k, l), 1, fl(-k, n) - fl(-l, n), -1);
        }
    }
    b.finish()
}

/// Character of the tangent space at a fixed point.
pub fn tangent(p: &AffinePattern) -> CharPoly {
    e_char(p, p)
}

/// Character of `χ(F′_{k−n}, F_{k−n}(−D_∞))` (`shifted = false`) or of
/// `χ(F′_{k−1−n}, F_{k−n}(−D_∞))` (`shifted = true`).
pub fn chi_parabolic(dd: &AffinePattern, dp: &AffinePattern, k: i64, shifted: bool) -> CharPoly {
    let n = dd.n();
    let lo = low_column(&[dd, dp]);
    let kk = if shifted { k - 1 } else { k };
    let mut b = Builder::new(n);
    for l in k + lo..=k {
        for lp in k + lo..=kk {
            let t = b.t(l, lp);
            let e = fl(-lp, n) - fl(-l, n);
            let (a, c) = (d(dp, kk, lp), d(dd, k, l));
            b.two(&t, a, c, e, 1);
            b.two(&t, a, c, e + 1, -1);
        }
    }
    for lp in 1..=n as i64 {
        for l in k + lo..=k {
            let t = b.t(l, lp);
            let e = if shifted {
                fl(lp - k, n)
            } else {
                fl(lp - k - 1, n)
            };
            b.qpoly(&t, -d(dd, k, l), 1, e - fl(-l, n), 1);
        }
    }
    for l in 1..=n as i64 {
        for lp in k + lo..=kk {
            let t = b.t(l, lp);
            b.qpoly(&t, d(dp, kk, lp), 1, fl(-lp, n) - fl(l - k - 1, n) + 1, -1);
        }
    }
    b.finish()
}

/// A pair of fixed points joined by the correspondence on row `i`: the target
/// has `d′_{ij} = d_{ij} + 1` and agrees with the source elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedEdge {
    pub source: AffinePattern,
    pub target: AffinePattern,
    pub i: i64,
    pub j: i64,
}

impl FixedEdge {
    pub fn new(source: &AffinePattern, i: i64, j: i64) -> Option<FixedEdge> {
        let target = source.bump(i, j, 1)?;
        Some(FixedEdge {
            source: source.clone(),
            target,
            i,
            j,
        })
    }

    /// Every edge leaving `p` along rows `1..=n`.
    pub fn from_source(p: &AffinePattern) -> Vec<FixedEdge> {
        let n = p.n() as i64;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i - p.max_len() as i64 - n - 2..=i {
                out.extend(FixedEdge::new(p, i, j));
            }
        }
        out
    }
}

impl fmt::Display for FixedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} (i={}, j={})",
            self.source, self.target, self.i, self.j
        )
    }
}

/// Character of the tangent space to the correspondence at an edge.
pub fn corr_tangent(edge: &FixedEdge) -> CharPoly {
    let p = &edge.source;
    let n = p.n();
    let (i, j) = (edge.i, edge.j);
    let dij = d(p, i, j);
    let mut b = Builder::new(n);
    b.poly = tangent(p);
    let zero = vec![0; n];
    b.mono(&zero, 1, 0, 1);
    if j != i {
        b.mono(&zero, d(p, i - 1, j) - dij, 0, -1);
        let t = b.t(j, i);
        b.mono(&t, d(p, i, i) - dij, fl(-i, n) - fl(-j, n), 1);
    }
    for k in i - p.max_len() as i64 - n as i64 - 2..i {
        if k == j {
            continue;
        }
        let (a, c) = (d(p, i, k), d(p, i - 1, k));
        if a != c {
            let t = b.t(j, k);
            let e = fl(-k, n) - fl(-j, n);
            b.mono(&t, a - dij, e, 1);
            b.mono(&t, c - dij, e, -1);
        }
    }
    b.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    E,
    F,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LocalizationError {
    Character(CharError),
    /// A tangent weight vanishes, so the fixed point would not be isolated.
    ZeroWeight,
}

impl fmt::Display for LocalizationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalizationError::Character(e) => write!(f, "{}", e),
            LocalizationError::ZeroWeight => write!(f, "zero tangent weight"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LocalizationError {}

/// Product of the weights of a character with ħ′ replaced by the linear form `hp`.
pub fn weight_product(c: &CharPoly, hp: &Lin) -> Result<Scalar, LocalizationError> {
    let mut acc = Scalar::one();
    for (w, m) in c.to_weights().map_err(LocalizationError::Character)? {
        let k = w.coeff(Var::Hp);
        let w = w
            .sub(&Lin::var(Var::Hp).scale_rat(&k))
            .add(&hp.scale_rat(&k));
        if w.is_zero() {
            return Err(LocalizationError::ZeroWeight);
        }
        acc = acc.mul(&Scalar::from_lin(&w).pow(m as i32));
    }
    Ok(acc)
}

/// Matrix coefficient of `e_i` (source to target) or of `f_i` (target back to
/// source) from the ratio of tangent weight products.
pub fn localized_coeff(
    edge: &FixedEdge,
    kind: CoeffKind,
    hp: &Lin,
) -> Result<Scalar, LocalizationError> {
    let corr = weight_product(&corr_tangent(edge), hp)?;
    let num = match kind {
        CoeffKind::E => weight_product(&tangent(&edge.source), hp)?.neg(),
        CoeffKind::F => weight_product(&tangent(&edge.target), hp)?,
    };
    Ok(num.checked_div(&corr).expect("weight products are nonzero"))
}

fn instance(
    relation: &str,
    indices: Vec<i64>,
    basis: String,
    ok: bool,
    residual: impl FnOnce() -> String,
) -> Instance {
    Instance {
        relation: relation.to_string(),
        indices,
        basis,
        passed: ok,
        residual: if ok { None } else { Some(residual()) },
    }
}

/// The identity `E = (Σ_k χ_k − Σ_k χ′_k)/(q′ − 1)` at the pair `(d, d′)`.
pub fn verify_k_identity_pair(dd: &AffinePattern, dp: &AffinePattern) -> Instance {
    let n = dd.n();
    let mut num = CharPoly::zero(n);
    for k in 1..=n as i64 {
        num = num
            .add(&chi_parabolic(dd, dp, k, false))
            .sub(&chi_parabolic(dd, dp, k, true));
    }
    let den = CharPoly::qp(n, 1).sub(&CharPoly::one(n));
    let basis = format!("{} | {}", dd, dp);
    match num.div_exact(&den) {
        Ok(q) => {
            let e = e_char(dd, dp);
            let ok = q == e;
            instance("k-identity", vec![], basis, ok, || {
                format!("difference {}", q.sub(&e))
            })
        }
        Err(err) => instance("k-identity", vec![], basis, false, || format!("{}", err)),
    }
}

/// All pairs of fixed points with equal degree vectors and total degree `≤ max_degree`.
pub fn verify_k_identity(n: usize, max_degree: u32) -> Report {
    let mut report = Report::default();
    for total in 0..=max_degree {
        let pats = crate::patterns::affine::tuples_of_size(n, total);
        let degs: Vec<Vec<u32>> = pats.iter().map(|p| p.degree()).collect();
        for (a, da) in pats.iter().zip(&degs) {
            for (b, db) in pats.iter().zip(&degs) {
                if da == db {
                    report.instances.push(verify_k_identity_pair(a, b));
                }
            }
        }
    }
    report
}

/// The tangent character has `2|d|` weights, all with positive multiplicity
/// and none zero.
pub fn verify_rank(n: usize, max_degree: u32) -> Report {
    verify_rank_on(&AffinePattern::up_to(n, max_degree))
}

pub fn verify_rank_on(patterns: &[AffinePattern]) -> Report {
    let mut report = Report::default();
    for p in patterns {
        let t = tangent(p);
        let rank = t.at_one();
        let expect = 2 * p.degree().iter().map(|&x| x as i64).sum::<i64>();
        let ok_rank = rank == Int::from(expect);
        report
            .instances
            .push(instance("rank", vec![], p.to_string(), ok_rank, || {
                format!("rank {} expected {}", rank, expect)
            }));
        let weights = t.to_weights();
        let ok_w = matches!(&weights, Ok(ws) if ws.iter().all(|(w, _)| !w.is_zero()));
        report.instances.push(instance(
            "tangent-weights",
            vec![],
            p.to_string(),
            ok_w,
            || format!("{}", t),
        ));
    }
    report
}

/// Localized `e` and `f` coefficients against the closed forms of `module`
/// on every edge whose source has total degree `≤ max_degree`, together with
/// the antisymmetry `e⟨p,p′⟩ = −f[p′,p]` of the renormalized basis.
pub fn verify_localization(module: &AffineModule, max_degree: u32) -> Report {
    verify_localization_on(module, &AffinePattern::up_to(module.n(), max_degree))
}

pub fn verify_localization_on(module: &AffineModule, sources: &[AffinePattern]) -> Report {
    let hp = *module.hp();
    let mut report = Report::default();
    for p in sources {
        let cp = weight_product(&tangent(p), &hp);
        for edge in FixedEdge::from_source(p) {
            let idx = vec![edge.i, edge.j];
            let basis = edge.to_string();
            let closed_e = module.e_coeff(&edge.source, edge.i, edge.j);
            let closed_f = module.f_coeff(&edge.target, edge.i, edge.j);
            for (name, kind, closed) in [
                ("loc-e", CoeffKind::E, &closed_e),
                ("loc-f", CoeffKind::F, &closed_f),
            ] {
                let r = localized_coeff(&edge, kind, &hp);
                let ok = matches!(&r, Ok(v) if v == closed);
                report.instances.push(instance(
                    name,
                    idx.clone(),
                    basis.clone(),
                    ok,
                    || match &r {
                        Ok(v) => format!("localized {} closed {}", v, closed),
                        Err(e) => format!("{}", e),
                    },
                ));
            }
            let ctp = weight_product(&tangent(&edge.target), &hp);
            let ok = match (&cp, &ctp) {
                (Ok(a), Ok(b)) => closed_e
                    .mul(b)
                    .checked_div(a)
                    .map(|l| l == closed_f.neg())
                    .unwrap_or(false),
                _ => false,
            };
            report
                .instances
                .push(instance("renorm-antisymmetry", idx, basis, ok, || {
                    "e<p,p'> != -f[p',p]".into()
                }));
        }
    }
    report
}

/// Künneth components `(c^{(j)}, c^{(j−1)}, c^{(j−1)′}, c^{(j−2)})` from the
/// four corner values `(e^{0,0}, e^{0,∞}, e^{∞,0}, e^{∞,∞})`.
pub fn kunneth_solve(corners: [&Scalar; 4]) -> [Scalar; 4] {
    let [a, b, c, dd] = corners;
    let quarter = |s: Scalar| s.scale(&crate::exactalg::Rat::new(Int::from(1), Int::from(4)));
    let h = Scalar::h();
    let hp = Scalar::hp();
    let c0 = quarter(a.add(b).add(c).add(dd));
    let c1 = quarter(c.add(dd).sub(a).sub(b)).checked_div(&h).unwrap();
    let c1p = quarter(b.add(dd).sub(a).sub(c)).checked_div(&hp).unwrap();
    let c2 = quarter(a.add(dd).sub(b).sub(c))
        .checked_div(&h.mul(&hp))
        .unwrap();
    [c0, c1, c1p, c2]
}

/// The curve case: `(c^{(j)}, c^{(j−1)})` from `(e^0, e^∞)`.
pub fn kunneth_solve_curve(e0: &Scalar, einf: &Scalar) -> (Scalar, Scalar) {
    let half = crate::exactalg::Rat::new(Int::from(1), Int::from(2));
    let c0 = einf.add(e0).scale(&half);
    let c1 = einf.sub(e0).scale(&half).checked_div(&Scalar::h()).unwrap();
    (c0, c1)
}

/// Reassembles the corner values from Künneth components.
pub fn kunneth_corners(c: &[Scalar; 4]) -> [Scalar; 4] {
    let h = Scalar::h();
    let hp = Scalar::hp();
    let t1 = h.mul(&c[1]);
    let t2 = hp.mul(&c[2]);
    let t3 = h.mul(&hp).mul(&c[3]);
    [
        c[0].sub(&t1).sub(&t2).add(&t3),
        c[0].sub(&t1).add(&t2).sub(&t3),
        c[0].add(&t1).sub(&t2).sub(&t3),
        c[0].add(&t1).add(&t2).add(&t3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_scalar;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// `char_{a,b}` of a line bundle.
    fn line(a: i64, b: i64) -> CharPoly {
        let mut out = CharPoly::zero(0);
        for (eq, cq) in qpoly_exps(b) {
            for (ep, cp) in qpoly_exps(a) {
                out = out.add(&CharPoly::monomial(
                    0,
                    vec![],
                    2 * (eq + 1) as i32,
                    (ep + 1) as i32,
                    Int::from(cq * cp),
                ));
            }
        }
        out
    }

    /// The rank-one character through the two-step resolutions of `J_λ`, `J_{λ′}`.
    fn via_resolution(lp: &Partition, l: &Partition, alpha: i64, beta: i64) -> CharPoly {
        let tt = l.len() as i64;
        let ttp = lp.len() as i64;
        let pl = |i: i64| l.part(i as usize) as i64;
        let plp = |i: i64| lp.part(i as usize) as i64;
        let mut out = CharPoly::zero(0);
        for i in 0..=tt {
            for ip in 0..=ttp {
                out = out.add(&line(ip - i + alpha, plp(ip) - pl(i) + beta));
                if ip < ttp {
                    out = out.sub(&line(ip - i + 1 + alpha, plp(ip) - pl(i) + beta));
                }
                if i < tt {
                    out = out.sub(&line(ip - i - 1 + alpha, plp(ip) - pl(i) + beta));
                }
                if i < tt && ip < ttp {
                    out = out.add(&line(ip - i + alpha, plp(ip) - pl(i) + beta));
                }
            }
        }
        out
    }

    #[test]
    fn rank_one_examples() {
        let e = Partition::empty();
        assert!(char_chi_rank1(&e, &e, 0, 0).is_zero());
        assert_eq!(
            char_chi_rank1(&e, &e, 1, 1),
            CharPoly::monomial(0, vec![], 2, 1, Int::ONE)
        );
        assert_eq!(
            char_chi_rank1(&e, &part(&[1]), 0, 0),
            CharPoly::one(0).neg()
        );
    }

    #[test]
    fn rank_one_matches_resolution() {
        let parts: Vec<Partition> = (0..=3).flat_map(Partition::all).collect();
        for a in &parts {
            for b in &parts {
                for (alpha, beta) in [(0, 0), (1, 0), (0, 1), (-1, 2), (2, -1)] {
                    assert_eq!(
                        char_chi_rank1(a, b, alpha, beta),
                        via_resolution(a, b, alpha, beta),
                        "{:?} {:?}",
                        a,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn vacuum_and_first_box() {
        let vac = AffinePattern::vacuum(3);
        assert!(tangent(&vac).is_zero());
        let edge = FixedEdge::new(&vac, 1, 1).unwrap();
        assert_eq!(corr_tangent(&edge), CharPoly::q(3, 1));
        let hp = Lin::var(Var::Hp);
        assert_eq!(
            localized_coeff(&edge, CoeffKind::E, &hp).unwrap(),
            parse_scalar("-1/h").unwrap()
        );
        let m = AffineModule::new(3);
        assert_eq!(
            localized_coeff(&edge, CoeffKind::F, &hp).unwrap(),
            m.f_coeff(&edge.target, 1, 1)
        );
    }

    #[test]
    fn k_identity_small() {
        let r = verify_k_identity(3, 1);
        assert!(r.all_passed(), "{:?}", r.summary());
        assert!(
            verify_k_identity_pair(&AffinePattern::vacuum(3), &AffinePattern::vacuum(3)).passed
        );
    }

    #[test]
    fn rank_and_localization_small() {
        assert!(verify_rank(3, 2).all_passed());
        let r = verify_localization(&AffineModule::new(3), 1);
        assert!(r.all_passed(), "{:?}", r.summary());
        let bad = verify_localization(&AffineModule::new(3).with_flipped_e_sign(), 1);
        assert!(!bad.all_passed());
    }

    #[test]
    fn kunneth_examples() {
        let e = parse_scalar("x1 + 2*h").unwrap();
        let c = kunneth_solve([&e, &e, &e, &e]);
        assert_eq!(c[0], e);
        assert!(c[1].is_zero() && c[2].is_zero() && c[3].is_zero());
        let a = parse_scalar("x1*x2").unwrap();
        let b = parse_scalar("x3 - hp").unwrap();
        let hb = Scalar::h().mul(&b);
        assert_eq!(
            kunneth_solve_curve(&a.sub(&hb), &a.add(&hb)),
            (a.clone(), b.clone())
        );
        let comps = [
            a.clone(),
            b.clone(),
            e.clone(),
            parse_scalar("1/(x1-x2)").unwrap(),
        ];
        let corners = kunneth_corners(&comps);
        assert_eq!(
            kunneth_solve([&corners[0], &corners[1], &corners[2], &corners[3]]),
            comps
        );
    }
}
