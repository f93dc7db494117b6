//! Zonal harmonics and the lower bound on the number of 4-cliques.
//!
//! Vertices `x_i` of the Euclidean representation in `R^g` and normalised
//! edge vectors `y_e = (x_i + x_j)/√(2+2p)` are unit vectors. Positive
//! definiteness of the zonal kernel `Z_{g,t}` gives
//! `Ψ_B² ≤ Ψ_A (Ψ_C0 + N Ψ_C1)` where `N` is the number of 4-cliques, so
//! `N ≥ (Ψ_B²/Ψ_A − Ψ_C0)/Ψ_C1` whenever `Ψ_C1 > 0`.
//!
//! Only even degrees are supported: every argument of `Z` then enters
//! through its square and all arithmetic stays in the field of `p` and `q`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{QuadSurd, Scalar, UniPoly};
use crate::graph::Graph;
use crate::params::{representation_dots, representation_dots_surd, RepDots, Side, SrgParams};
use crate::{Error, Rational, Result};

/// Gegenbauer polynomial `C_t^{(α)}` by the three-term recurrence
/// `n C_n = 2(n+α−1) ξ C_{n−1} − (n+2α−2) C_{n−2}`.
pub fn gegenbauer<T: Scalar>(alpha: &T, t: usize) -> UniPoly<T> {
    let mut prev = UniPoly::constant(T::one());
    if t == 0 {
        return prev;
    }
    let two = T::from_int(2);
    let mut cur = UniPoly::affine(T::zero(), two.clone() * alpha.clone());
    for n in 2..=t {
        let nn = T::from_int(n as i64);
        let a = two.clone() * (nn.clone() + alpha.clone() - T::one());
        let b = nn.clone() + two.clone() * alpha.clone() - two.clone();
        let next = (UniPoly::affine(T::zero(), a) * cur.clone() - prev.scale(&b)).scale(&(T::one() / nn));
        prev = cur;
        cur = next;
    }
    cur
}

/// The zonal harmonic `Z_{n,t}(ξ) = (2t+n−2)/(n−2) · C_t^{((n−2)/2)}(ξ)` on
/// the sphere `S^{n−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZonalPoly<T: Scalar = Rational> {
    pub n: usize,
    pub t: usize,
    pub poly: UniPoly<T>,
}

impl<T: Scalar> ZonalPoly<T> {
    pub fn new(n: usize, t: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Degenerate(format!("zonal harmonics need dimension at least 3, got {n}")));
        }
        let alpha = T::from_ratio(n as i64 - 2, 2);
        let scale = T::from_ratio((2 * t + n - 2) as i64, n as i64 - 2);
        Ok(ZonalPoly { n, t, poly: gegenbauer(&alpha, t).scale(&scale) })
    }

    pub fn eval(&self, xi: &T) -> T {
        self.poly.eval(xi)
    }

    /// The polynomial `P` with `Z(ξ) = P(ξ²)`; needs `t` even.
    pub fn in_square(&self) -> Result<UniPoly<T>> {
        if self.t % 2 == 1 {
            return Err(Error::OddDegree(self.t as u32));
        }
        let c = self.poly.coeffs();
        Ok(UniPoly::new((0..=self.t / 2).map(|i| c.get(2 * i).cloned().unwrap_or_else(T::zero)).collect()))
    }
}

/// The four sums in the 4-clique inequality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsiTerms<T = Rational> {
    pub psi_a: T,
    pub psi_b: T,
    pub psi_c0: T,
    pub psi_c1: T,
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Ψ terms for given parameters, representation dots and dimension, with
/// an even degree `t`.
pub fn psi_terms_with<T: Scalar>(params: &SrgParams, dots: &RepDots<T>, dim: usize, t: usize) -> Result<PsiTerms<T>> {
    let zsq = ZonalPoly::<T>::new(dim, t)?.in_square()?;
    let z = |xi: T| zsq.eval(&(xi.clone() * xi));
    let int = |x: u64| T::from_int(x as i64);
    let half = T::from_ratio(1, 2);
    let (v, k, l, m) = (int(params.v()), int(params.k()), int(params.lambda()), int(params.mu()));
    let (p, q) = (dots.p.clone(), dots.q.clone());
    let one = T::one();
    let two = T::from_int(2);
    let norm = two.clone() + two.clone() * p.clone();
    let far = v.clone() - k.clone() - one.clone();

    let psi_a = v.clone() * (z(one.clone()) + k.clone() * z(p.clone()) + far.clone() * z(q.clone()));

    // arguments c/√(2+2p): square is c²/(2+2p)
    let zn = |c: T| zsq.eval(&(c.clone() * c / norm.clone()));
    let psi_b = v.clone() * k.clone() * zn(one.clone() + p.clone())
        + v.clone() * k.clone() * l.clone() * half.clone() * zn(two.clone() * p.clone())
        + v.clone() * far.clone() * m.clone() * zn(p.clone() + q.clone())
        + v.clone() * far.clone() * (k.clone() - m.clone()) * half.clone() * zn(two.clone() * q.clone());

    // edge–edge dots are (sum of four vertex dots)/(2+2p)
    let ze = |a: i64, b: i64, c: i64| z((T::from_int(a) + T::from_int(b) * p.clone() + T::from_int(c) * q.clone()) / norm.clone());
    let kl1 = k.clone() - l.clone() - one.clone();
    let k2l = k.clone() - two.clone() * l.clone();
    let ll1 = l.clone() * (l.clone() - one.clone());
    let bracket = ze(2, 2, 0)
        + two.clone() * l.clone() * ze(1, 3, 0)
        + two.clone() * kl1.clone() * ze(1, 2, 1)
        + two.clone() * ll1.clone() * ze(0, 3, 1)
        + ((m.clone() - one.clone()) * kl1.clone() - ll1.clone() + two.clone() * l.clone() * k2l.clone()) * ze(0, 2, 2)
        + two.clone() * ((k.clone() - m.clone()) * kl1.clone() - l.clone() * k2l.clone()) * ze(0, 1, 3)
        + (k.clone() * (v.clone() - two.clone() * k.clone() + l.clone()) * half.clone() - (k.clone() - m.clone()) * kl1
            + l.clone() * k2l * half.clone())
            * ze(0, 0, 4);
    let psi_c0 = v.clone() * k.clone() * half * bracket;

    let mut alt = T::zero();
    for i in 0..=4i64 {
        let term = T::from_int(binomial(4, i as u64)) * ze(0, 4 - i, i);
        alt = if i % 2 == 0 { alt + term } else { alt - term };
    }
    let psi_c1 = T::from_int(6) * alt;
    Ok(PsiTerms { psi_a, psi_b, psi_c0, psi_c1 })
}

/// Dimension `g` of the primal representation.
pub fn representation_dimension(params: &SrgParams) -> Result<usize> {
    let g = params.spectrum().g.to_rational().ok_or_else(|| Error::Internal("multiplicity is irrational".into()))?;
    if !g.is_integer() || g <= Rational::zero() {
        return Err(Error::InvalidParams {
            v: params.v(),
            k: params.k(),
            lambda: params.lambda(),
            mu: params.mu(),
            reason: format!("multiplicity {g} is not a positive integer"),
        });
    }
    g.to_integer().try_into().map_err(|_| Error::Internal("multiplicity overflow".into()))
}

/// Ψ terms over the rationals; refuses conference graphs.
pub fn psi_terms(params: &SrgParams, t: usize) -> Result<PsiTerms> {
    let dots = representation_dots(params, Side::PrimalInG)?;
    psi_terms_with(params, &dots, representation_dimension(params)?, t)
}

/// Ψ terms in `Q(√D)`, valid for every parameter set including conference
/// graphs.
pub fn psi_terms_surd(params: &SrgParams, t: usize) -> Result<PsiTerms<QuadSurd>> {
    let dots = representation_dots_surd(params, Side::PrimalInG)?;
    psi_terms_with(params, &dots, representation_dimension(params)?, t)
}

/// Exact ceiling, needed to turn the raw bound into an integer.
pub trait ExactCeil {
    fn ceil_int(&self) -> BigInt;
}

impl ExactCeil for Rational {
    fn ceil_int(&self) -> BigInt {
        self.ceil().to_integer()
    }
}

impl ExactCeil for QuadSurd {
    fn ceil_int(&self) -> BigInt {
        self.ceil()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundDirection {
    Lower,
    /// `Ψ_C1 ≤ 0` or `Ψ_A = 0`: the inequality gives no lower bound.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq)]
pub struct K4Bound<T = Rational> {
    pub raw_bound: Option<T>,
    pub integer_bound: Option<BigInt>,
    pub direction: BoundDirection,
}

impl<T> K4Bound<T> {
    /// True when the bound proves that a 4-clique exists.
    pub fn certifies_k4(&self) -> bool {
        self.integer_bound.as_ref().is_some_and(|n| n.is_positive())
    }
}

pub fn bound_from_terms<T: Scalar + PartialOrd + ExactCeil>(terms: &PsiTerms<T>) -> Result<K4Bound<T>> {
    if terms.psi_a.is_zero() && !terms.psi_b.is_zero() {
        return Err(Error::Internal("Ψ_A vanished with Ψ_B nonzero".into()));
    }
    // Ψ_A = 0 is a spherical 4-design and the inequality reads 0 ≤ 0
    if terms.psi_a.is_zero() || terms.psi_c1 <= T::zero() {
        return Ok(K4Bound { raw_bound: None, integer_bound: None, direction: BoundDirection::Vacuous });
    }
    let raw = (terms.psi_b.clone() * terms.psi_b.clone() / terms.psi_a.clone() - terms.psi_c0.clone()) / terms.psi_c1.clone();
    let integer = raw.ceil_int();
    Ok(K4Bound { raw_bound: Some(raw), integer_bound: Some(integer), direction: BoundDirection::Lower })
}

/// Lower bound on the number of 4-cliques from the degree-`t` zonal kernel.
pub fn k4_lower_bound(params: &SrgParams, t: usize) -> Result<K4Bound> {
    bound_from_terms(&psi_terms(params, t)?)
}

/// The same bound computed in `Q(√D)`.
pub fn k4_lower_bound_surd(params: &SrgParams, t: usize) -> Result<K4Bound<QuadSurd>> {
    bound_from_terms(&psi_terms_surd(params, t)?)
}

/// Primitive parameter sets with `v ≤ max_v`, integral eigenvalues, integral
/// multiplicities and `g ≥ 3`, sorted by `(v, k, λ, µ)`.
pub fn admissible_parameters(max_v: u64) -> Vec<SrgParams> {
    (5..=max_v)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut rows = Vec::new();
            for k in 2..v - 1 {
                let far = v - k - 1;
                for mu in 1..k {
                    let prod = far * mu;
                    if prod % k != 0 || prod / k + 1 > k {
                        continue;
                    }
                    let lambda = k - 1 - prod / k;
                    let Ok(p) = SrgParams::new(v, k, lambda, mu) else { continue };
                    let sp = p.spectrum();
                    if sp.integral_eigenvalues && sp.feasible && sp.g_int().is_some_and(|g| g >= 3) {
                        rows.push(p);
                    }
                }
            }
            rows.sort_by_key(|p| (p.k(), p.lambda(), p.mu()));
            rows
        })
        .collect()
}

/// One line of the bound table.
#[derive(Clone, Debug, PartialEq)]
pub struct K4TableRow {
    pub params: SrgParams,
    pub raw_bound: Rational,
    pub integer_bound: BigInt,
}

/// Admissible parameter sets whose degree-4 bound is at least 1.
pub fn k4_table(max_v: u64) -> Result<Vec<K4TableRow>> {
    let rows: Result<Vec<Option<K4TableRow>>> = admissible_parameters(max_v)
        .into_par_iter()
        .map(|params| {
            let b = k4_lower_bound(&params, 4)?;
            Ok(match (b.direction, b.raw_bound, b.integer_bound) {
                (BoundDirection::Lower, Some(raw_bound), Some(integer_bound)) if integer_bound >= BigInt::one() => {
                    Some(K4TableRow { params, raw_bound, integer_bound })
                }
                _ => None,
            })
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}

pub fn k4_table_tsv(rows: &[K4TableRow]) -> String {
    let mut out = String::from("v\tk\tlambda\tmu\tbound_rational\tbound_integer\n");
    for r in rows {
        let p = &r.params;
        out.push_str(&format!("{}\t{}\t{}\t{}\t{}\t{}\n", p.v(), p.k(), p.lambda(), p.mu(), r.raw_bound, r.integer_bound));
    }
    out
}

/// Number of 4-cliques, counting each clique from its two smallest vertices.
pub fn brute_k4_count(g: &Graph) -> u64 {
    let mut count = 0;
    for (a, b) in g.edges() {
        let (a, b) = (a.min(b), a.max(b));
        let common: Vec<usize> = g.neighbors(a).intersect(g.neighbors(b)).iter().filter(|&c| c > b).collect();
        for (i, &c) in common.iter().enumerate() {
            count += common[i + 1..].iter().filter(|&&d| g.has_edge(c, d)).count() as u64;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_gegenbauer() {
        let a = Rational::new(7.into(), 3.into());
        assert_eq!(gegenbauer(&a, 0), UniPoly::constant(Rational::one()));
        assert_eq!(gegenbauer(&a, 1), UniPoly::affine(Rational::zero(), a.clone() * Rational::from_integer(2.into())));
    }

    #[test]
    fn odd_degree_refused() {
        let p = SrgParams::new(76, 30, 8, 14).unwrap();
        assert_eq!(psi_terms(&p, 3), Err(Error::OddDegree(3)));
    }
}
