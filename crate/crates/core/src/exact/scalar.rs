//! Scalar traits shared by the matrix and polynomial code.
//!
//! Everything in [`crate::exact`] is written against [`Scalar`] (a field) or
//! [`ExactRing`] (an integral domain with exact division, enough for
//! fraction-free elimination). The concrete instances used in the crate are
//! [`crate::Rational`], [`ModP`], [`crate::exact::QuadSurd`] and `f64`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{FromPrimitive, Num, One, Zero};

/// A field with the numeric traits the linear algebra needs.
pub trait Scalar: Num + Clone + Neg<Output = Self> + fmt::Debug + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the scalar type")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = Self> + fmt::Debug + FromPrimitive {}

/// Integral domain in which `div_exact(a, b)` is only ever called when `b`
/// divides `a`. Fraction-free (Bareiss) elimination runs over any such ring.
pub trait ExactRing:
    Clone + PartialEq + fmt::Debug + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl<T: Scalar> ExactRing for T {
    fn div_exact(&self, rhs: &Self) -> Self {
        self.clone() / rhs.clone()
    }
}

/// The Mersenne prime 2^61 - 1.
pub const MODULUS: u64 = (1 << 61) - 1;

/// Element of the prime field of order [`MODULUS`].
///
/// The rank of an integer matrix reduced modulo a prime never exceeds its
/// rank over the rationals, so ranks computed here are certified lower
/// bounds for the rational rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModP(u64);

impl ModP {
    pub fn new(v: u64) -> Self {
        ModP(v % MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce(v: u128) -> u64 {
        let lo = (v as u64) & MODULUS;
        let hi = (v >> 61) as u64;
        let mut s = lo + (hi & MODULUS) + ((hi >> 61) as u64);
        while s >= MODULUS {
            s -= MODULUS;
        }
        s
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = ModP(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(MODULUS - 2))
        }
    }

    /// Reduce `num/den` into the field; `None` when `den` vanishes mod p.
    pub fn from_fraction(num: i64, den: i64) -> Option<Self> {
        let d = ModP::from_i64(den)?;
        Some(ModP::from_i64(num)? * d.inverse()?)
    }
}

impl fmt::Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod p)", self.0)
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for ModP {
    type Output = ModP;
    fn add(self, rhs: ModP) -> ModP {
        let s = self.0 + rhs.0;
        ModP(if s >= MODULUS { s - MODULUS } else { s })
    }
}

impl Sub for ModP {
    type Output = ModP;
    fn sub(self, rhs: ModP) -> ModP {
        ModP(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + MODULUS - rhs.0 })
    }
}

impl Mul for ModP {
    type Output = ModP;
    fn mul(self, rhs: ModP) -> ModP {
        ModP(Self::reduce(self.0 as u128 * rhs.0 as u128))
    }
}

impl Div for ModP {
    type Output = ModP;
    fn div(self, rhs: ModP) -> ModP {
        self * rhs.inverse().expect("division by zero in ModP")
    }
}

impl Rem for ModP {
    type Output = ModP;
    fn rem(self, rhs: ModP) -> ModP {
        assert!(rhs.0 != 0, "remainder by zero in ModP");
        ModP(0)
    }
}

impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        ModP(if self.0 == 0 { 0 } else { MODULUS - self.0 })
    }
}

impl Zero for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for ModP {
    fn one() -> Self {
        ModP(1)
    }
}

impl Num for ModP {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let v = i128::from_str_radix(s, radix)?;
        let m = MODULUS as i128;
        Ok(ModP((((v % m) + m) % m) as u64))
    }
}

impl FromPrimitive for ModP {
    fn from_i64(n: i64) -> Option<Self> {
        let m = MODULUS as i128;
        Some(ModP((((n as i128 % m) + m) % m) as u64))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(ModP::new(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modp_field_laws() {
        let a = ModP::from_int(-12);
        let b = ModP::from_int(45);
        assert_eq!(a + (-a), ModP::zero());
        assert_eq!((a / b) * b, a);
        assert_eq!(ModP::from_int(-1).value(), MODULUS - 1);
        let big = ModP::new(MODULUS - 1);
        assert_eq!(big * big, ModP::one());
    }

    #[test]
    fn modp_fraction() {
        let p = ModP::from_fraction(-4, 15).unwrap();
        assert_eq!(p * ModP::from_int(15), ModP::from_int(-4));
        assert!(ModP::from_fraction(1, 0).is_none());
    }
}
