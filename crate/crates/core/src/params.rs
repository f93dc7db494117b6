//! SRG parameter sets, spectra and Euclidean-representation dot products.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{QuadSurd, Scalar};
use crate::Rational;

/// A validated parameter tuple `(v, k, λ, µ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SrgParams {
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
}

impl SrgParams {
    /// Checks `0 < k < v - 1`, `λ < k`, `µ ≤ k` and `(v-k-1)µ = k(k-λ-1)`.
    ///
    /// Complete graphs (`k = v - 1`) are rejected since `µ` is meaningless
    /// for them.
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidParams { v, k, lambda, mu, reason: reason.to_string() };
        if k == 0 || k + 1 >= v {
            return Err(bad("need 0 < k < v-1"));
        }
        if lambda >= k {
            return Err(bad("need lambda < k"));
        }
        if mu > k {
            return Err(bad("need mu <= k"));
        }
        if (v - k - 1) as u128 * mu as u128 != k as u128 * (k - lambda - 1) as u128 {
            return Err(bad("(v-k-1)*mu != k*(k-lambda-1)"));
        }
        Ok(SrgParams { v, k, lambda, mu })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    /// Neither the graph nor its complement is disconnected.
    pub fn is_primitive(&self) -> bool {
        0 < self.mu && self.mu < self.k
    }

    /// Parameters of the complementary graph, `(v, v-1-k, v-2k+µ-2, v-2k+λ)`.
    pub fn complement(&self) -> Result<SrgParams> {
        let (v, k, l, m) = (self.v as i128, self.k as i128, self.lambda as i128, self.mu as i128);
        let lc = v - 2 * k + m - 2;
        let mc = v - 2 * k + l;
        if lc < 0 || mc < 0 {
            return Err(Error::InvalidParams {
                v: self.v,
                k: self.k,
                lambda: self.lambda,
                mu: self.mu,
                reason: "complement parameters are negative".to_string(),
            });
        }
        SrgParams::new(self.v, self.v - 1 - self.k, lc as u64, mc as u64)
    }

    /// `(λ-µ)^2 + 4(k-µ)`, the discriminant of the eigenvalue equation.
    pub fn discriminant(&self) -> u64 {
        let d = self.lambda as i128 - self.mu as i128;
        (d * d + 4 * (self.k as i128 - self.mu as i128)) as u64
    }

    pub fn spectrum(&self) -> Spectrum {
        derive_spectrum(self)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Restricted eigenvalues `r > 0 > s` with multiplicities `f`, `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub r: QuadSurd,
    pub s: QuadSurd,
    pub f: QuadSurd,
    pub g: QuadSurd,
    /// `(λ-µ)^2 + 4(k-µ)`.
    pub discriminant: u64,
    /// The discriminant is a perfect square.
    pub integral_eigenvalues: bool,
    /// Both multiplicities are nonnegative integers.
    pub feasible: bool,
    /// Conference graph: `2k + (v-1)(λ-µ) = 0`.
    pub conference: bool,
}

impl Spectrum {
    /// Multiplicity of `s` as an integer, when feasible.
    pub fn g_int(&self) -> Option<u64> {
        integral_value(&self.g)
    }

    pub fn f_int(&self) -> Option<u64> {
        integral_value(&self.f)
    }
}

fn integral_value(x: &QuadSurd) -> Option<u64> {
    let r = x.to_rational()?;
    if !r.is_integer() || r.is_negative() {
        return None;
    }
    u64::try_from(r.to_integer()).ok()
}

fn int(v: i128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact spectrum of `params`.
pub fn derive_spectrum(params: &SrgParams) -> Spectrum {
    let v = params.v as i128;
    let k = params.k as i128;
    let lm = params.lambda as i128 - params.mu as i128;
    let disc = params.discriminant();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let root = QuadSurd::sqrt(disc);
    let base = QuadSurd::rational(int(lm) * half.clone());
    let half_root = root.clone() * QuadSurd::rational(half.clone());
    let r = base.clone() + half_root.clone();
    let s = base - half_root;
    // (2k + (v-1)(λ-µ)) / √D = X·√D / D
    let x = 2 * k + (v - 1) * lm;
    let shift = root * QuadSurd::rational(int(x) / int(disc as i128) * half.clone());
    let mid = QuadSurd::rational(int(v - 1) * half);
    let f = mid.clone() - shift.clone();
    let g = mid + shift;
    let sq = disc.sqrt();
    let integral_eigenvalues = sq * sq == disc;
    let mut spec = Spectrum {
        r,
        s,
        f,
        g,
        discriminant: disc,
        integral_eigenvalues,
        feasible: false,
        conference: x == 0,
    };
    spec.feasible = spec.f_int().is_some() && spec.g_int().is_some();
    spec
}

/// Which eigenspace carries the representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// Eigenspace of `s`, dimension `g`.
    PrimalInG,
    /// Eigenspace of `r`, dimension `f`, obtained through the complement.
    DualInF,
}

/// Dot products of a Euclidean representation: `p` for adjacent pairs and
/// `q` for non-adjacent pairs of the original graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: fmt::Display"))]
pub struct RepDots<T = Rational> {
    #[serde(serialize_with = "serialize_display")]
    pub p: T,
    #[serde(serialize_with = "serialize_display")]
    pub q: T,
    pub side: Side,
}

fn serialize_display<T: fmt::Display, S: serde::Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl<T: Scalar> RepDots<T> {
    pub fn new(p: T, q: T, side: Side) -> Self {
        RepDots { p, q, side }
    }

    /// Dot product for pairs with the given relation.
    pub fn dot(&self, same: bool, adjacent: bool) -> T {
        if same {
            T::one()
        } else if adjacent {
            self.p.clone()
        } else {
            self.q.clone()
        }
    }
}

fn primal_surd(params: &SrgParams) -> (QuadSurd, QuadSurd) {
    let s = params.spectrum().s;
    let k = QuadSurd::rational(int(params.k as i128));
    let nk = QuadSurd::rational(int((params.v - params.k - 1) as i128));
    let p = s.clone() / k;
    let q = -(s + QuadSurd::one()) / nk;
    (p, q)
}

/// Dot products over `Q(√D)`; defined for every parameter set, including
/// conference graphs.
pub fn representation_dots_surd(params: &SrgParams, side: Side) -> Result<RepDots<QuadSurd>> {
    match side {
        Side::PrimalInG => {
            let (p, q) = primal_surd(params);
            Ok(RepDots::new(p, q, side))
        }
        Side::DualInF => {
            // complement-adjacent means originally non-adjacent
            let (pc, qc) = primal_surd(&params.complement()?);
            Ok(RepDots::new(qc, pc, side))
        }
    }
}

/// Rational dot products `p = s/k`, `q = -(s+1)/(v-k-1)` (primal side) or
/// their counterparts in the `f`-dimensional eigenspace (dual side).
pub fn representation_dots(params: &SrgParams, side: Side) -> Result<RepDots> {
    if !params.spectrum().integral_eigenvalues {
        return Err(Error::ConferenceGraph);
    }
    let d = representation_dots_surd(params, side)?;
    match (d.p.to_rational(), d.q.to_rational()) {
        (Some(p), Some(q)) => Ok(RepDots::new(p, q, side)),
        _ => Err(Error::ConferenceGraph),
    }
}

/// `k·p + (v-k-1)·q`, which equals -1 for any valid representation.
pub fn barycenter_sum<T: Scalar>(params: &SrgParams, dots: &RepDots<T>) -> T {
    let non = params.v - params.k - 1;
    T::from_int(params.k as i64) * dots.p.clone() + T::from_int(non as i64) * dots.q.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn qs(n: i64) -> QuadSurd {
        QuadSurd::rational(q(n, 1))
    }

    #[test]
    fn spectrum_76() {
        let p = SrgParams::new(76, 30, 8, 14).unwrap();
        let s = p.spectrum();
        assert_eq!((s.r.clone(), s.f.clone(), s.s.clone(), s.g.clone()), (qs(2), qs(57), qs(-8), qs(18)));
        assert!(s.feasible && s.integral_eigenvalues && !s.conference);
        assert_eq!(s.g_int(), Some(18));
    }

    #[test]
    fn pentagon_is_conference() {
        let p = SrgParams::new(5, 2, 0, 1).unwrap();
        let s = p.spectrum();
        assert!(s.conference && !s.integral_eigenvalues && s.feasible);
        assert_eq!(s.r, QuadSurd::new(q(-1, 2), q(1, 2), 5));
        assert_eq!(s.f, qs(2));
        assert_eq!(representation_dots(&p, Side::PrimalInG), Err(Error::ConferenceGraph));
        let d = representation_dots_surd(&p, Side::PrimalInG).unwrap();
        assert_eq!(barycenter_sum(&p, &d), -QuadSurd::one());
    }

    #[test]
    fn dots_76() {
        let p = SrgParams::new(76, 30, 8, 14).unwrap();
        let pr = representation_dots(&p, Side::PrimalInG).unwrap();
        assert_eq!((pr.p.clone(), pr.q.clone()), (q(-4, 15), q(7, 45)));
        let du = representation_dots(&p, Side::DualInF).unwrap();
        assert_eq!((du.p.clone(), du.q.clone()), (q(1, 15), q(-1, 15)));
        assert_eq!(barycenter_sum(&p, &pr), q(-1, 1));
        assert_eq!(barycenter_sum(&p, &du), q(-1, 1));
    }

    #[test]
    fn validation_and_complement() {
        assert!(SrgParams::new(76, 30, 8, 13).is_err());
        assert!(SrgParams::new(5, 4, 3, 0).is_err());
        let p = SrgParams::new(10, 3, 0, 1).unwrap();
        let c = p.complement().unwrap();
        assert_eq!(c, SrgParams::new(10, 6, 3, 4).unwrap());
        assert_eq!(c.complement().unwrap(), p);
        assert_eq!(c.spectrum().f, p.spectrum().g);
    }
}
