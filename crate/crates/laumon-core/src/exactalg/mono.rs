//! Packed monomials in x₁..x₁₃, ħ, ħ′.
//!
//! A monomial is a `u128` whose bytes, most significant first, hold the total
//! degree, the exponent of ħ′, of ħ, and of x₁₃ down to x₁. Comparing the raw
//! integers is then exactly graded-lexicographic order with
//! x₁ < … < x₁₃ < ħ < ħ′, and multiplying monomials is integer addition.

use core::fmt;

/// Largest supported number of x-variables.
pub const MAX_X: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `X(i)` is xᵢ, 1-based.
    X(u8),
    H,
    Hp,
}

impl Var {
    pub(crate) fn byte(self) -> u32 {
        match self {
            Var::X(i) => {
                assert!(
                    i >= 1 && (i as usize) <= MAX_X,
                    "variable x{} out of range",
                    i
                );
                i as u32 - 1
            }
            Var::H => 13,
            Var::Hp => 14,
        }
    }

    pub(crate) fn from_byte(b: u32) -> Var {
        match b {
            13 => Var::H,
            14 => Var::Hp,
            i => Var::X(i as u8 + 1),
        }
    }

    /// Every variable, in increasing monomial order.
    pub fn all() -> impl Iterator<Item = Var> {
        (0..15u32).map(Var::from_byte)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{}", i),
            Var::H => write!(f, "h"),
            Var::Hp => write!(f, "hp"),
        }
    }
}

const DEG_SHIFT: u32 = 120;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub(crate) u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn var(v: Var) -> Mono {
        Mono::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Mono {
        assert!(e < 256, "exponent overflow");
        Mono(((e as u128) << (8 * v.byte())) | ((e as u128) << DEG_SHIFT))
    }

    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn exp(self, v: Var) -> u32 {
        ((self.0 >> (8 * v.byte())) & 0xff) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn mul(self, other: Mono) -> Mono {
        assert!(
            self.degree() + other.degree() < 256,
            "monomial degree overflow"
        );
        Mono(self.0 + other.0)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(self, other: Mono) -> Option<Mono> {
        if self.divisible_by(other) {
            Some(Mono(self.0 - other.0))
        } else {
            None
        }
    }

    pub fn divisible_by(self, other: Mono) -> bool {
        let a = self.0.to_le_bytes();
        let b = other.0.to_le_bytes();
        (0..15).all(|i| a[i] >= b[i])
    }

    /// Iterator over `(variable, exponent)` with nonzero exponent, increasing order.
    pub fn factors(self) -> impl Iterator<Item = (Var, u32)> {
        let bytes = self.0.to_le_bytes();
        (0..15u32).filter_map(move |b| {
            let e = bytes[b as usize] as u32;
            if e > 0 {
                Some((Var::from_byte(b), e))
            } else {
                None
            }
        })
    }

    /// Removes variable `v`, returning its exponent and the remaining monomial.
    pub fn split_var(self, v: Var) -> (u32, Mono) {
        let e = self.exp(v);
        if e == 0 {
            return (0, self);
        }
        let m = Mono::var_pow(v, e);
        (e, Mono(self.0 - m.0))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x1 = Mono::var(Var::X(1));
        let x2 = Mono::var(Var::X(2));
        let h = Mono::var(Var::H);
        let hp = Mono::var(Var::Hp);
        assert!(x1 < x2 && x2 < h && h < hp);
        assert!(hp < x1.mul(x1));
        assert!(x1.mul(h) < x2.mul(h));
        assert!(x2.mul(x2) < x1.mul(h));
    }

    #[test]
    fn divisibility_and_display() {
        let m = Mono::var_pow(Var::X(1), 2).mul(Mono::var(Var::Hp));
        assert_eq!(m.degree(), 3);
        assert!(m.divisible_by(Mono::var(Var::X(1))));
        assert!(!m.divisible_by(Mono::var(Var::H)));
        assert_eq!(format!("{}", m), "x1^2*hp");
        assert_eq!(m.div(Mono::var(Var::Hp)), Some(Mono::var_pow(Var::X(1), 2)));
    }
}
