use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A prime modulus, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Coefficient ring of every matrix and complex in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    PrimeField(Prime),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Self> {
        Ok(Ring::PrimeField(Prime::new(p)?))
    }

    /// 𝔽₂, the default field for exhaustive tests.
    pub fn f2() -> Self {
        Ring::PrimeField(Prime(2))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::Integers => 0,
            Ring::PrimeField(p) => p.0,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Ring::PrimeField(_))
    }

    pub fn ensure_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(*self, *other))
        }
    }

    pub fn reduce(&self, x: BigInt) -> BigInt {
        match self {
            Ring::Integers => x,
            Ring::PrimeField(p) => x.mod_floor(&BigInt::from(p.0)),
        }
    }

    pub fn from_i64(&self, x: i64) -> BigInt {
        self.reduce(BigInt::from(x))
    }

    pub fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }

    pub fn is_unit(&self, a: &BigInt) -> bool {
        match self {
            Ring::Integers => a.abs().is_one(),
            Ring::PrimeField(_) => !self.reduce(a.clone()).is_zero(),
        }
    }

    pub fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        match self {
            Ring::Integers => {
                if a.is_one() || (-a).is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            Ring::PrimeField(p) => {
                let a = self.reduce(a.clone());
                if a.is_zero() {
                    return None;
                }
                let m = BigInt::from(p.0);
                Some(a.modpow(&(&m - 2u32), &m))
            }
        }
    }

    /// Euclidean size used for pivot selection.
    pub(crate) fn norm(&self, a: &BigInt) -> BigInt {
        match self {
            Ring::Integers => a.abs(),
            Ring::PrimeField(_) => {
                if a.is_zero() {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    /// Quotient `q` with `norm(a - q*b) < norm(b)`; `b` must be nonzero.
    pub(crate) fn quotient(&self, a: &BigInt, b: &BigInt) -> BigInt {
        match self {
            Ring::Integers => a.div_floor(b),
            Ring::PrimeField(_) => self.mul(a, &self.inverse(b).expect("nonzero divisor")),
        }
    }

    /// Canonical associate: positive over ℤ, 1 over a field (for nonzero `a`).
    pub(crate) fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        match self {
            Ring::Integers => {
                if a.is_negative() {
                    BigInt::from(-1)
                } else {
                    BigInt::one()
                }
            }
            Ring::PrimeField(_) => self.inverse(a).unwrap_or_else(BigInt::one),
        }
    }

    pub fn divides(&self, a: &BigInt, b: &BigInt) -> bool {
        match self {
            Ring::Integers => {
                if a.is_zero() {
                    b.is_zero()
                } else {
                    (b % a).is_zero()
                }
            }
            Ring::PrimeField(_) => !a.is_zero() || b.is_zero(),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::PrimeField(p) => write!(f, "F{}", p.0),
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Z" || t == "ZZ" {
            return Ok(Ring::Integers);
        }
        let digits = t
            .strip_prefix("F_")
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix("GF"));
        match digits.and_then(|d| d.parse::<u64>().ok()) {
            Some(p) => Ring::prime_field(p),
            None => Err(Error::Parse {
                location: "ring".into(),
                reason: format!("unrecognized ring descriptor {s:?}"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_is_checked() {
        assert!(Ring::prime_field(2).is_ok());
        assert!(Ring::prime_field(7).is_ok());
        assert!(matches!(Ring::prime_field(1), Err(Error::NotPrime(1))));
        assert!(matches!(Ring::prime_field(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn field_inverse() {
        let f = Ring::prime_field(7).unwrap();
        for a in 1..7 {
            let inv = f.inverse(&BigInt::from(a)).unwrap();
            assert_eq!(f.mul(&BigInt::from(a), &inv), BigInt::one());
        }
        assert!(f.inverse(&BigInt::zero()).is_none());
        assert!(Ring::Integers.inverse(&BigInt::from(2)).is_none());
    }

    #[test]
    fn ring_descriptor_round_trip() {
        for r in [Ring::Integers, Ring::f2(), Ring::prime_field(5).unwrap()] {
            assert_eq!(r.to_string().parse::<Ring>().unwrap(), r);
        }
        assert!("F4".parse::<Ring>().is_err());
    }
}
