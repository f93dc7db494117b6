//! Exact arithmetic in a real quadratic field Q(√d).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

use crate::Rational;

/// The number `a + b·√d` with rational `a`, `b` and square-free `d ≥ 2`.
///
/// Values with `b = 0` are plain rationals and are stored with `d = 0`, so
/// `zero()`/`one()` need no radicand. Combining two irrational values with
/// different radicands is a logic error and panics.
#[derive(Clone)]
pub struct QuadSurd {
    a: Rational,
    b: Rational,
    d: u64,
}

fn square_free_split(n: u64) -> (u64, u64) {
    // n = outer^2 * inner with inner square-free
    let mut inner = 1u64;
    let mut outer = 1u64;
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        outer *= p.pow(e / 2);
        if e % 2 == 1 {
            inner *= p;
        }
        p += 1;
    }
    inner *= m;
    (outer, inner)
}

impl QuadSurd {
    pub fn rational(a: Rational) -> Self {
        QuadSurd { a, b: Rational::zero(), d: 0 }
    }

    /// `a + b·√n` for any natural `n`; square factors of `n` are pulled out.
    pub fn new(a: Rational, b: Rational, n: u64) -> Self {
        let (outer, inner) = square_free_split(n);
        let b = b * Rational::from_integer(BigInt::from(outer));
        if n == 0 || inner == 1 || b.is_zero() {
            let extra = if n == 0 { Rational::zero() } else { b };
            return QuadSurd::rational(a + extra);
        }
        QuadSurd { a, b, d: inner }
    }

    /// `√n` exactly.
    pub fn sqrt(n: u64) -> Self {
        QuadSurd::new(Rational::zero(), Rational::one(), n)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    /// Square-free radicand, or 0 for a rational value.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * (self.d as f64).sqrt()
    }

    fn join(&self, other: &Self) -> u64 {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(self.d, other.d, "mixing incompatible quadratic fields");
                self.d
            }
        }
    }

    fn normalized(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() {
            QuadSurd::rational(a)
        } else {
            QuadSurd { a, b, d }
        }
    }

    /// Sign of the exact value: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // opposite signs: compare a^2 with b^2 d
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * Rational::from_integer(BigInt::from(self.d));
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadSurd::normalized(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        let approx = self.to_f64().ceil();
        let mut c = BigInt::from_f64(approx).unwrap_or_else(BigInt::zero);
        // fix up the float guess exactly
        loop {
            let cq = QuadSurd::rational(Rational::from_integer(c.clone()));
            if (cq.clone() - self.clone()).signum() < 0 {
                c += 1;
                continue;
            }
            let below = QuadSurd::rational(Rational::from_integer(c.clone() - 1));
            if (below - self.clone()).signum() >= 0 {
                c -= 1;
                continue;
            }
            return c;
        }
    }
}

fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialEq for QuadSurd {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).signum().cmp(&0))
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                write!(f, "+")?;
            }
        }
        if self.b == Rational::one() {
            write!(f, "√{}", self.d)
        } else if self.b == -Rational::one() {
            write!(f, "-√{}", self.d)
        } else {
            write!(f, "{}·√{}", self.b, self.d)
        }
    }
}

impl Add for QuadSurd {
    type Output = QuadSurd;
    fn add(self, rhs: QuadSurd) -> QuadSurd {
        let d = self.join(&rhs);
        QuadSurd::normalized(self.a + rhs.a, self.b + rhs.b, d)
    }
}

impl Sub for QuadSurd {
    type Output = QuadSurd;
    fn sub(self, rhs: QuadSurd) -> QuadSurd {
        let d = self.join(&rhs);
        QuadSurd::normalized(self.a - rhs.a, self.b - rhs.b, d)
    }
}

impl Mul for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, rhs: QuadSurd) -> QuadSurd {
        let d = self.join(&rhs);
        let dq = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dq;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadSurd::normalized(a, b, d)
    }
}

impl Div for QuadSurd {
    type Output = QuadSurd;
    fn div(self, rhs: QuadSurd) -> QuadSurd {
        assert!(!rhs.is_zero(), "division by zero in QuadSurd");
        let d = self.join(&rhs);
        let norm = &rhs.a * &rhs.a - &rhs.b * &rhs.b * Rational::from_integer(BigInt::from(d));
        let num = self * rhs.conjugate();
        QuadSurd::normalized(num.a / &norm, num.b / norm, d)
    }
}

impl Rem for QuadSurd {
    type Output = QuadSurd;
    fn rem(self, rhs: QuadSurd) -> QuadSurd {
        assert!(!rhs.is_zero(), "remainder by zero in QuadSurd");
        QuadSurd::zero()
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd::normalized(-self.a, -self.b, self.d)
    }
}

impl Zero for QuadSurd {
    fn zero() -> Self {
        QuadSurd::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadSurd {
    fn one() -> Self {
        QuadSurd::rational(Rational::one())
    }
}

impl Num for QuadSurd {
    type FromStrRadixErr = num_rational::ParseRatioError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        Rational::from_str_radix(s, radix).map(QuadSurd::rational)
    }
}

impl FromPrimitive for QuadSurd {
    fn from_i64(n: i64) -> Option<Self> {
        Some(QuadSurd::rational(Rational::from_integer(BigInt::from(n))))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(QuadSurd::rational(Rational::from_integer(BigInt::from(n))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn square_factors_are_extracted() {
        let x = QuadSurd::sqrt(12);
        assert_eq!(x.radicand(), 3);
        assert_eq!(x.surd_part(), &q(2, 1));
        assert!(QuadSurd::sqrt(49).is_rational());
        assert_eq!(QuadSurd::sqrt(49).to_rational(), Some(q(7, 1)));
    }

    #[test]
    fn golden_ratio_identities() {
        // r = (-1 + √5)/2 satisfies r^2 + r - 1 = 0
        let r = QuadSurd::new(q(-1, 2), q(1, 2), 5);
        let lhs = r.clone() * r.clone() + r.clone() - QuadSurd::one();
        assert!(lhs.is_zero());
        assert_eq!(r.signum(), 1);
        assert_eq!((QuadSurd::one() / r.clone()) * r, QuadSurd::one());
    }

    #[test]
    fn signs_and_ceiling() {
        let x = QuadSurd::new(q(3, 1), q(-1, 1), 10); // 3 - √10 < 0
        assert_eq!(x.signum(), -1);
        assert_eq!(x.ceil(), BigInt::from(0));
        let y = QuadSurd::new(q(0, 1), q(1, 1), 2);
        assert_eq!(y.ceil(), BigInt::from(2));
        assert_eq!(QuadSurd::rational(q(7, 1)).ceil(), BigInt::from(7));
    }
}
