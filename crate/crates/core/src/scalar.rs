//! Exact field scalars.
//!
//! Everything in this crate that does linear algebra is generic over
//! [`Scalar`]. Only exact fields implement it: rank and kernel computations
//! rely on exact zero tests, so floating point types are deliberately left out.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

mod sealed {
    pub trait Sealed {}
    impl Sealed for num_rational::BigRational {}
    impl<const P: u64> Sealed for super::Fp<P> {}
}

/// An exact field element.
pub trait Scalar:
    sealed::Sealed
    + Num
    + Clone
    + fmt::Debug
    + fmt::Display
    + Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    /// Characteristic of the field (0 for the rationals).
    const CHARACTERISTIC: u64;
}

impl Scalar for BigRational {
    const CHARACTERISTIC: u64 = 0;
}

impl<const P: u64> Scalar for Fp<P> {
    const CHARACTERISTIC: u64 = P;
}

/// Builds a rational from a numerator and a nonzero denominator.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The prime field `Z/PZ`. `P` must be prime and below 2^32.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero like integer division does.
    pub fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P - 2)
    }

    /// Reduces a rational into the field, or `None` when `P` divides the
    /// denominator.
    pub fn from_rational(q: &BigRational) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |n: &BigInt| -> u64 {
            let r = ((n % &p) + &p) % &p;
            r.try_into().expect("residue fits in u64")
        };
        let den = reduce(q.denom());
        if den == 0 {
            return None;
        }
        Some(Fp(reduce(q.numer())) / Fp(den))
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    // Every nonzero element is a unit, so the remainder is always zero.
    fn rem(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "remainder by zero in F_{P}");
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::from_i64)
    }
}

impl<const P: u64> FromPrimitive for Fp<P> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Fp::from_i64(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Fp::new(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F13 = Fp<13>;

    #[test]
    fn field_axioms_mod_13() {
        for a in 1..13 {
            let x = F13::new(a);
            assert_eq!(x * x.inv(), F13::one());
            assert_eq!(x + (-x), F13::zero());
        }
        assert_eq!(F13::from_i64(-1), F13::new(12));
    }

    #[test]
    fn rational_reduction() {
        assert_eq!(F13::from_rational(&rational(1, 2)), Some(F13::new(7)));
        assert_eq!(F13::from_rational(&rational(-3, 1)), Some(F13::new(10)));
        assert_eq!(F13::from_rational(&rational(1, 13)), None);
    }

    #[test]
    fn rational_round_trip() {
        for (n, d) in [(3, 7), (-5, 2), (12, 1), (-1, 9)] {
            let q = rational(n, d);
            assert_eq!(&q * &q.recip(), BigRational::one());
        }
    }
}
