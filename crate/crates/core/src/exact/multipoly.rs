use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::scalar::Scalar;
use super::UniPoly;

/// Sparse polynomial in a fixed number of variables.
///
/// Monomials are exponent vectors of length `nvars`; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.add_term(e, T::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: T) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn as_constant(&self) -> Option<T> {
        match self.terms.len() {
            0 => Some(T::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong arity");
        self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            let m = e.iter().zip(point).fold(c.clone(), |m, (&k, x)| (0..k).fold(m, |m, _| m * x.clone()));
            acc + m
        })
    }

    /// Substitute univariate polynomials for every variable.
    pub fn substitute(&self, images: &[UniPoly<T>]) -> UniPoly<T> {
        assert_eq!(images.len(), self.nvars, "substitution has wrong arity");
        self.terms.iter().fold(UniPoly::zero(), |acc, (e, c)| {
            let m = e
                .iter()
                .zip(images)
                .fold(UniPoly::constant(c.clone()), |m, (&k, x)| (0..k).fold(m, |m, _| m * x.clone()));
            acc + m
        })
    }

    /// Render with the given variable names, in graded reverse order.
    pub fn render(&self, names: &[&str]) -> String
    where
        T: fmt::Display,
    {
        assert_eq!(names.len(), self.nvars, "wrong number of variable names");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for e in keys {
            let s = self.terms[e].to_string();
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
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, n)| if k == 1 { n.to_string() } else { format!("{n}^{k}") })
                .collect();
            if mono.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Debug for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<T: Scalar> Add for MultiPoly<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "mixing polynomial rings");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<T: Scalar> Sub for MultiPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for MultiPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly { nvars: self.nvars, terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<T: Scalar> Mul for MultiPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "mixing polynomial rings");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type M = MultiPoly<Rational>;

    #[test]
    fn arithmetic_and_cancellation() {
        let x = M::var(2, 0);
        let y = M::var(2, 1);
        let p = (x.clone() + y.clone()) * (x.clone() - y.clone());
        let expect = x.clone() * x.clone() - y.clone() * y.clone();
        assert_eq!(p, expect);
        assert!((p.clone() - expect).is_zero());
        assert_eq!(p.total_degree(), Some(2));
        let pt = [Rational::from_int(3), Rational::from_int(2)];
        assert_eq!(p.eval(&pt), Rational::from_int(5));
    }

    #[test]
    fn render_names() {
        let n = M::var(1, 0);
        let p = n.clone() * n.clone().scale(&Rational::from_ratio(-3, 10)) + M::constant(1, Rational::from_int(2));
        assert_eq!(p.render(&["n"]), "-3/10*n^2 + 2");
        assert_eq!(M::zero(1).render(&["n"]), "0");
    }

    #[test]
    fn substitution() {
        let x = M::var(2, 0);
        let y = M::var(2, 1);
        let p = x.clone() * y.clone();
        let w = UniPoly::<Rational>::var();
        let img = [w.clone() + <UniPoly<Rational> as num_traits::One>::one(), w.clone()];
        assert_eq!(p.substitute(&img), w.clone() * w.clone() + w);
    }
}
