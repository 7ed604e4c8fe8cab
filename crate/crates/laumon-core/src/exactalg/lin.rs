//! Small affine-linear forms `Σ aᵥ v + a₀` with a shared denominator.
//!
//! Weights, roots and the ħ′ parameter are all of this shape; keeping them in
//! machine integers avoids polynomial traffic on the hottest paths.

use core::fmt;

use super::int::Int;
use super::mono::Var;
use super::rat::Rat;

const CONST: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lin {
    /// Indices 0..15 are variable bytes, index 15 is the constant term.
    coef: [i64; 16],
    den: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Lin {
    pub const ZERO: Lin = Lin {
        coef: [0; 16],
        den: 1,
    };

    pub fn var(v: Var) -> Lin {
        let mut l = Lin::ZERO;
        l.coef[v.byte() as usize] = 1;
        l
    }

    pub fn constant(r: &Rat) -> Lin {
        let mut l = Lin::ZERO;
        l.coef[CONST] = r.numer().to_i64().expect("constant fits i64");
        l.den = r.denom().to_i64().expect("constant fits i64");
        l
    }

    pub fn int(v: i64) -> Lin {
        let mut l = Lin::ZERO;
        l.coef[CONST] = v;
        l
    }

    fn normalized(mut self) -> Lin {
        let mut g = self.den;
        for c in self.coef.iter() {
            g = gcd(g, *c);
        }
        if g > 1 {
            for c in self.coef.iter_mut() {
                *c /= g;
            }
            self.den /= g;
        }
        if self.den < 0 {
            for c in self.coef.iter_mut() {
                *c = -*c;
            }
            self.den = -self.den;
        }
        self
    }

    pub fn coeff(&self, v: Var) -> Rat {
        Rat::ratio(self.coef[v.byte() as usize], self.den)
    }

    pub fn constant_term(&self) -> Rat {
        Rat::ratio(self.coef[CONST], self.den)
    }

    pub(crate) fn raw(&self) -> (&[i64; 16], i64) {
        (&self.coef, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.coef.iter().all(|c| *c == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.coef[..CONST].iter().all(|c| *c == 0)
    }

    pub fn add(&self, o: &Lin) -> Lin {
        let l = self.den / gcd(self.den, o.den) * o.den;
        let (fa, fb) = (l / self.den, l / o.den);
        let mut out = Lin {
            coef: [0; 16],
            den: l,
        };
        for i in 0..16 {
            out.coef[i] = self.coef[i]
                .checked_mul(fa)
                .and_then(|a| o.coef[i].checked_mul(fb).and_then(|b| a.checked_add(b)))
                .expect("linear form overflow");
        }
        out.normalized()
    }

    pub fn neg(&self) -> Lin {
        let mut out = *self;
        for c in out.coef.iter_mut() {
            *c = -*c;
        }
        out
    }

    pub fn sub(&self, o: &Lin) -> Lin {
        self.add(&o.neg())
    }

    pub fn scale(&self, num: i64, den: i64) -> Lin {
        assert!(den != 0);
        let mut out = *self;
        for c in out.coef.iter_mut() {
            *c = c.checked_mul(num).expect("linear form overflow");
        }
        out.den = out.den.checked_mul(den).expect("linear form overflow");
        out.normalized()
    }

    pub fn scale_rat(&self, r: &Rat) -> Lin {
        self.scale(
            r.numer().to_i64().expect("scale fits i64"),
            r.denom().to_i64().expect("scale fits i64"),
        )
    }

    /// `self + k·v`.
    pub fn plus(&self, v: Var, k: i64) -> Lin {
        self.add(&Lin::var(v).scale(k, 1))
    }

    pub fn plus_const(&self, num: i64, den: i64) -> Lin {
        self.add(&Lin::int(num).scale(1, den))
    }

    pub fn eval(&self, value: &dyn Fn(Var) -> Rat) -> Rat {
        let mut acc = Rat::from(self.coef[CONST]);
        for v in Var::all() {
            let c = self.coef[v.byte() as usize];
            if c != 0 {
                acc = &acc + &(&Rat::from(c) * &value(v));
            }
        }
        &acc / &Rat::from(self.den)
    }

    pub fn int_coeffs(&self) -> impl Iterator<Item = (Option<Var>, Int)> + '_ {
        (0..16).filter(move |i| self.coef[*i] != 0).map(move |i| {
            let v = if i == CONST {
                None
            } else {
                Some(Var::from_byte(i as u32))
            };
            (v, Int::from(self.coef[i]))
        })
    }
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = super::scalar::Scalar::from_lin(self);
        write!(f, "{}", s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Lin::var(Var::X(1)).plus(Var::H, 2);
        let b = Lin::var(Var::Hp).scale(-3, 2);
        let s = a.add(&b);
        assert_eq!(s.coeff(Var::Hp), Rat::ratio(-3, 2));
        assert_eq!(s.coeff(Var::X(1)), Rat::one());
        assert!(s.sub(&s).is_zero());
        let v = s.eval(&|v| match v {
            Var::X(1) => Rat::from(1),
            Var::H => Rat::from(1),
            Var::Hp => Rat::from(2),
            _ => Rat::zero(),
        });
        assert_eq!(v, Rat::from(0));
    }
}
