use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{ExactRing, Scalar};

/// Dense univariate polynomial; `coeffs[i]` multiplies `w^i`.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and [`UniPoly::degree`] returns `None` for it.
#[derive(Clone, PartialEq)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        UniPoly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        UniPoly::new(vec![T::zero(), T::one()])
    }

    /// `c0 + c1·w`.
    pub fn affine(c0: T, c1: T) -> Self {
        UniPoly::new(vec![c0, c1])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// The constant term if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<T> {
        match self.coeffs.len() {
            0 => Some(T::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_int(i as i64))
                .collect(),
        )
    }

    /// Composition `self(other(w))`.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| acc * other.clone() + UniPoly::constant(c.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = rem[i + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Render with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String
    where
        T: fmt::Display,
    {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag == "1";
            match i {
                0 => out.push_str(&mag),
                _ => {
                    if !unit {
                        out.push_str(&mag);
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("w"))
    }
}

impl<T: Scalar> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UniPoly").field(&self.coeffs).finish()
    }
}

impl<T: Scalar> Add for UniPoly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for UniPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for UniPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<T: Scalar> Neg for UniPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar> Zero for UniPoly<T> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for UniPoly<T> {
    fn one() -> Self {
        UniPoly::constant(T::one())
    }
}

impl<T: Scalar> ExactRing for UniPoly<T> {
    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = UniPoly<Rational>;

    #[test]
    fn trailing_zeros_stripped() {
        let p = P::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(P::from_ints(&[0, 0]).degree(), None);
        assert!(P::from_ints(&[]).is_zero());
    }

    #[test]
    fn division_round_trip() {
        let a = P::from_ints(&[-1, 0, 0, 1]); // w^3 - 1
        let b = P::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, P::from_ints(&[1, 1, 1]));
        let (q2, r2) = P::from_ints(&[3, 0, 2]).div_rem(&P::from_ints(&[0, 2]));
        assert_eq!(q2, P::from_ints(&[0, 1]));
        assert_eq!(r2, P::from_ints(&[3]));
    }

    #[test]
    fn render_forms() {
        let p = P::new(vec![Rational::from_ratio(19760, 81), Rational::from_ratio(-5776, 81)]);
        assert_eq!(p.render("w"), "-5776/81*w + 19760/81");
        assert_eq!(P::var().render("w"), "w");
        assert_eq!(P::from_ints(&[0, 0, -1]).render("x"), "-x^2");
        assert_eq!(P::zero().render("w"), "0");
    }

    #[test]
    fn eval_and_compose() {
        let p = P::from_ints(&[1, 0, 1]);
        let shifted = p.compose(&P::from_ints(&[1, 1]));
        assert_eq!(shifted, P::from_ints(&[2, 2, 1]));
        assert_eq!(p.eval(&Rational::from_int(3)), Rational::from_int(10));
    }
}
