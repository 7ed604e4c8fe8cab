//! Arithmetic modulo the Mersenne prime 2⁶¹−1, used as a fast necessary-condition
//! filter before exact polynomial division.

use super::mono::Var;

pub const P: u64 = (1u64 << 61) - 1;

pub fn reduce(x: u128) -> u64 {
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    let mut s = lo + (hi & P) + ((x >> 122) as u64);
    while s >= P {
        s -= P;
    }
    s
}

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

pub fn from_i64(v: i64) -> u64 {
    (v as i128).rem_euclid(P as i128) as u64
}

/// SplitMix64 step; deterministic pseudo-random stream for evaluation points.
pub fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Values for all fifteen variables.
#[derive(Clone, Debug)]
pub struct Point {
    vals: [u64; 15],
}

impl Point {
    pub fn random(seed: u64) -> Point {
        let mut s = seed;
        let mut vals = [0u64; 15];
        for v in vals.iter_mut() {
            *v = splitmix(&mut s) % P;
        }
        Point { vals }
    }

    pub fn get(&self, v: Var) -> u64 {
        self.vals[v.byte() as usize]
    }

    pub fn set(&mut self, v: Var, value: u64) {
        self.vals[v.byte() as usize] = value;
    }

    pub fn pow(&self, v: Var, e: u32) -> u64 {
        pow(self.get(v), e as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_laws() {
        let a = 123_456_789_012_345u64;
        assert_eq!(mul(a, inv(a)), 1);
        assert_eq!(sub(3, 5), P - 2);
        assert_eq!(from_i64(-1), P - 1);
        assert_eq!(reduce(u128::from(P) * u128::from(P)), 0);
    }
}
