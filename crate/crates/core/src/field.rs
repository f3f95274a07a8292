//! Prime field arithmetic.

use crate::error::{Error, Result};

/// Default characteristic. Large enough that trace-form radicals are valid
/// and random intertwiners are invertible with overwhelming probability.
pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// The prime field GF(p). Elements are canonical representatives `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: DEFAULT_CHARACTERISTIC }
    }
}

impl Field {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { p })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into the field.
    #[inline]
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Signed representative in `(-p/2, p/2]`, used for display.
    pub fn to_signed(self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        let f = Field::default();
        for a in [1u32, 2, 3, 17, 32002, 12345] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rejects_composites() {
        assert!(Field::new(32003).is_ok());
        assert!(Field::new(1).is_err());
        assert!(Field::new(32004).is_err());
        assert!(Field::new(2).is_ok());
    }

    #[test]
    fn signed_roundtrip() {
        let f = Field::new(7).unwrap();
        for x in -20i64..20 {
            let a = f.from_i64(x);
            assert_eq!(f.from_i64(f.to_signed(a)), a);
        }
    }
}
