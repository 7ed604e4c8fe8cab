//! Eigenvalues of the Gelfand–Tsetlin series on fixed points.
//!
//! Everything is computed in the dimensionful variable `U = ħu`, where the
//! roots are the linear forms `p_{ij}` shifted by multiples of `ħ`. Infinite
//! products over columns are paired row against row; below the support of the
//! pattern the paired factors coincide and are dropped.

use super::AffineModule;
use crate::exactalg::{Lin, LinRoots, RationalU, Scalar, SeriesU, Var};
use crate::patterns::AffinePattern;
use crate::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// `a_{mi}(u)`, `m < i`, in the dimensionless variable.
    Ami { m: i64, i: i64 },
    /// `h_i(u)`, dimensionless.
    H { i: i64 },
    /// `a_{0,n}(u)` in the dimensionful variable.
    A0n,
    /// `Φ_n(u) = ∂_u log a_{0,n}(u)` through `u^{-order}`.
    Phi { order: i32 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum EigenSeries {
    Rational(RationalU),
    Series(SeriesU),
}

fn hbar_times(c2: i64) -> Lin {
    Lin::var(Var::H).scale(c2, 2)
}

impl AffineModule {
    /// `a_{mi}` in `U`: zeros `p_{ij}`, `j ≤ i`, over poles `p_{mk}`, `k ≤ m`.
    pub fn a_roots(&self, d: &AffinePattern, m: i64, i: i64) -> LinRoots {
        let lo = m.min(i) - d.max_len() as i64 - self.n as i64;
        let zeros = (lo..=i).map(|j| self.p(d, i, j));
        let poles = (lo..=m).map(|k| self.p(d, m, k));
        LinRoots::from_lists(zeros, poles)
    }

    /// `h_i` in `U` from the column-paired product
    /// `∏(U + (i−1)ħ/2 − p_{i−1,j})(U + (i+1)ħ/2 − p_{i+1,j}) / ∏(U + (i±1)ħ/2 − p_{ij})`.
    pub fn h_roots(&self, d: &AffinePattern, i: i64) -> LinRoots {
        let lo = i - d.max_len() as i64 - self.n as i64 - 1;
        let mut out = LinRoots::one();
        for j in lo..=i + 1 {
            if j < i {
                out.push(self.p(d, i - 1, j).sub(&hbar_times(i - 1)), 1);
            }
            out.push(self.p(d, i + 1, j).sub(&hbar_times(i + 1)), 1);
            if j <= i {
                out.push(self.p(d, i, j).sub(&hbar_times(i + 1)), -1);
                out.push(self.p(d, i, j).sub(&hbar_times(i - 1)), -1);
            }
        }
        out
    }

    /// `h_i` through `a_{m,i−1}(u+(i−1)/2) a_{m,i+1}(u+(i+1)/2) / (a_{mi}(u+(i−1)/2) a_{mi}(u+(i+1)/2))`.
    pub fn h_roots_via(&self, d: &AffinePattern, i: i64, m: i64) -> LinRoots {
        let a = |row: i64, c2: i64| self.a_roots(d, m, row).shift(&hbar_times(c2));
        a(i - 1, i - 1)
            .mul(&a(i + 1, i + 1))
            .div(&a(i, i - 1))
            .div(&a(i, i + 1))
    }

    /// `h_{k,r}` for `h_k(u − c/ħ)`, `c` dimensionful (zero for the plain series).
    pub fn h_coeff(&self, d: &AffinePattern, k: i64, r: u32, c: &Lin) -> Scalar {
        let roots = self.h_roots(d, k).shift(&c.neg());
        let ser = roots.to_split().expand(r as i32 + 1);
        ser.coeff(r as i32 + 1)
            .unwrap()
            .checked_div(&Scalar::h())
            .unwrap()
    }

    /// `h_{k,r}` for arbitrary integer `k`, via `h_{k₀+qn}(u) = h_{k₀}(u + q(ħ′/ħ + n/2))`.
    pub fn h_coeff_any(&self, d: &AffinePattern, k: i64, r: u32) -> Scalar {
        let (k0, q) = self.reduce_node(k);
        self.h_coeff(d, k0 as i64, r, &self.shift_lin().scale(-q, 1))
    }

    pub fn eigen_series(
        &self,
        kind: SeriesKind,
        d: &AffinePattern,
    ) -> Result<EigenSeries, super::AffineError> {
        let inv_h = Scalar::h().inv().unwrap();
        Ok(match kind {
            SeriesKind::Ami { m, i } => {
                if m >= i {
                    return Err(super::AffineError::BadM { m, i });
                }
                EigenSeries::Rational(
                    self.a_roots(d, m, i)
                        .to_split()
                        .rescale_roots(&inv_h)
                        .to_rational(),
                )
            }
            SeriesKind::H { i } => EigenSeries::Rational(
                self.h_roots(d, i)
                    .to_split()
                    .rescale_roots(&inv_h)
                    .to_rational(),
            ),
            SeriesKind::A0n => EigenSeries::Rational(self.a0n(d).to_split().to_rational()),
            SeriesKind::Phi { order } => {
                EigenSeries::Series(self.a0n(d).to_split().log_derivative(order))
            }
        })
    }

    /// `a_{0,n}` in `U`.
    pub fn a0n(&self, d: &AffinePattern) -> LinRoots {
        self.a_roots(d, 0, self.n as i64)
    }

    /// The joint spectrum `(h_1(u),…,h_n(u))` as root multisets.
    pub fn h_tuple(&self, d: &AffinePattern) -> Vec<LinRoots> {
        (1..=self.n as i64).map(|i| self.h_roots(d, i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_scalar;

    fn sc(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn a01_on_vacuum() {
        let m = AffineModule::new(3);
        let vac = AffinePattern::vacuum(3);
        let EigenSeries::Rational(r) = m
            .eigen_series(SeriesKind::Ami { m: 0, i: 1 }, &vac)
            .unwrap()
        else {
            panic!()
        };
        assert_eq!(
            r,
            RationalU::polynomial(vec![sc("x1/h + hp/h"), Scalar::one()])
        );
        assert!(m
            .eigen_series(SeriesKind::Ami { m: 1, i: 1 }, &vac)
            .is_err());
    }

    #[test]
    fn phi_low_coefficients() {
        let m = AffineModule::new(3);
        for p in AffinePattern::up_to(3, 2) {
            let EigenSeries::Series(s) = m.eigen_series(SeriesKind::Phi { order: 2 }, &p).unwrap()
            else {
                panic!()
            };
            assert_eq!(s.coeff(1).unwrap(), Scalar::from_int(3));
            assert_eq!(s.coeff(2).unwrap(), sc("-x1 - x2 - x3 - 3*hp"));
        }
    }

    #[test]
    fn h_series_matches_diagonal_and_a_ratios() {
        let m = AffineModule::new(3);
        for p in AffinePattern::up_to(3, 3) {
            for i in 1..=3 {
                assert_eq!(
                    m.h_coeff(&p, i, 0, &Lin::ZERO),
                    m.h_diag(&p, i),
                    "{} i={}",
                    p,
                    i
                );
                for mm in [i - 1, i - 2, i - 3] {
                    assert_eq!(m.h_roots_via(&p, i, mm), m.h_roots(&p, i));
                }
            }
        }
    }

    #[test]
    fn node_shift_for_h() {
        let m = AffineModule::new(3);
        for p in AffinePattern::up_to(3, 2) {
            for k in [-2i64, 0, 4, 6] {
                for r in 0..=2 {
                    let direct = {
                        let ser = m.h_roots(&p, k).to_split().expand(r as i32 + 1);
                        ser.coeff(r as i32 + 1)
                            .unwrap()
                            .checked_div(&Scalar::h())
                            .unwrap()
                    };
                    assert_eq!(direct, m.h_coeff_any(&p, k, r), "{} k={} r={}", p, k, r);
                }
            }
        }
    }
}
