//! Reduced rational numbers over [`Int`].

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::int::Int;

/// A reduced fraction `num / den` with `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat {
    num: Int,
    den: Int,
}

impl Rat {
    pub fn zero() -> Rat {
        Rat {
            num: Int::ZERO,
            den: Int::ONE,
        }
    }

    pub fn one() -> Rat {
        Rat {
            num: Int::ONE,
            den: Int::ONE,
        }
    }

    pub fn from_int(v: Int) -> Rat {
        Rat {
            num: v,
            den: Int::ONE,
        }
    }

    /// Builds `num / den`; panics when `den` is zero.
    pub fn new(num: Int, den: Int) -> Rat {
        assert!(!den.is_zero(), "zero denominator in Rat::new");
        if num.is_zero() {
            return Rat::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.div_exact(&g), den.div_exact(&g));
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Rat { num: n, den: d }
    }

    pub fn ratio(num: i64, den: i64) -> Rat {
        Rat::new(Int::from(num), Int::from(den))
    }

    pub fn numer(&self) -> &Int {
        &self.num
    }

    pub fn denom(&self) -> &Int {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn signum(&self) -> i32 {
        self.num.signum()
    }

    pub fn recip(&self) -> Rat {
        Rat::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Rat {
        let base = if e < 0 { self.recip() } else { self.clone() };
        Rat {
            num: base.num.pow(e.unsigned_abs()),
            den: base.den.pow(e.unsigned_abs()),
        }
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(Int::from(v))
    }
}

impl<'a> Add<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        if self.den == rhs.den {
            return Rat::new(&self.num + &rhs.num, self.den.clone());
        }
        Rat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_reduces() {
        let a = Rat::ratio(1, 2);
        let b = Rat::ratio(1, 3);
        assert_eq!(&a + &b, Rat::ratio(5, 6));
        assert_eq!(&a - &a, Rat::zero());
        assert_eq!(&a / &b, Rat::ratio(3, 2));
        assert_eq!(Rat::ratio(4, -6), Rat::ratio(-2, 3));
        assert_eq!(Rat::ratio(2, 3).pow(-2), Rat::ratio(9, 4));
        assert!(Rat::ratio(-1, 2) < Rat::ratio(1, 3));
    }
}
