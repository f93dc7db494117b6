//! Counting identities of strongly regular graphs: neighbour-count
//! frequencies around an induced subgraph, and the edge matrix of the four
//! common/private neighbourhoods of an edge.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, UniPoly};
use crate::params::SrgParams;

/// Degree frequencies of an induced subgraph `H` on `m` vertices together
/// with the outside counts `b_j` already known to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyProfile {
    m: usize,
    d: Vec<u64>,
    forced_zero: BTreeSet<usize>,
}

impl FrequencyProfile {
    /// `d[j]` is the number of vertices of `H` with `j` neighbours inside
    /// `H`; it may be shorter than `m` (missing entries are zero) but no
    /// longer. Forced zeros must index `0..=m`.
    pub fn new(m: usize, d: &[u64], forced_zero: impl IntoIterator<Item = usize>) -> Result<Self> {
        if d.len() > m {
            return Err(Error::InvalidInput(format!("degree index {} is impossible in a subgraph of order {m}", d.len() - 1)));
        }
        let total: u64 = d.iter().sum();
        if total != m as u64 {
            return Err(Error::InvalidInput(format!("degree frequencies sum to {total}, expected {m}")));
        }
        let degree_sum: u64 = d.iter().enumerate().map(|(j, &c)| j as u64 * c).sum();
        if degree_sum % 2 == 1 {
            return Err(Error::InvalidInput("odd degree sum".into()));
        }
        let forced_zero: BTreeSet<usize> = forced_zero.into_iter().collect();
        if let Some(&j) = forced_zero.iter().find(|&&j| j > m) {
            return Err(Error::InvalidInput(format!("forced zero b_{j} beyond the subgraph order {m}")));
        }
        let mut d = d.to_vec();
        d.resize(m, 0);
        Ok(FrequencyProfile { m, d, forced_zero })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degrees(&self) -> &[u64] {
        &self.d
    }

    pub fn forced_zero(&self) -> &BTreeSet<usize> {
        &self.forced_zero
    }
}

/// Right-hand sides `(Σ b_j, Σ j·b_j, Σ C(j,2)·b_j)` for a profile, or
/// `None` when the last one is not an integer.
pub fn frequency_moments(params: &SrgParams, profile: &FrequencyProfile) -> Option<(i64, i64, i64)> {
    let (v, k, l, mu) = (params.v() as i64, params.k() as i64, params.lambda() as i64, params.mu() as i64);
    let m = profile.m as i64;
    let sum_jd: i64 = profile.d.iter().enumerate().map(|(j, &c)| j as i64 * c as i64).sum();
    let sum_c2d: i64 = profile.d.iter().enumerate().map(|(j, &c)| choose2(j as i64) * c as i64).sum();
    let twice = 2 * (choose2(m) * mu - sum_c2d) + (l - mu) * sum_jd;
    if twice % 2 != 0 {
        return None;
    }
    Some((v - m, m * k - sum_jd, twice / 2))
}

fn choose2(j: i64) -> i64 {
    j * (j - 1) / 2
}

/// Every non-negative integer sequence `b_0..b_m` with the forced zeros
/// that satisfies the three counting identities, in lexicographic order.
pub fn frequency_solutions(params: &SrgParams, profile: &FrequencyProfile) -> Vec<Vec<u64>> {
    let Some((s0, s1, s2)) = frequency_moments(params, profile) else {
        return Vec::new();
    };
    if s0 < 0 || s1 < 0 || s2 < 0 {
        return Vec::new();
    }
    let m = profile.m;
    let free: Vec<usize> = (0..=m).filter(|j| !profile.forced_zero.contains(j)).collect();
    let mut out = Vec::new();
    let mut b = vec![0u64; m + 1];
    search(&free, 0, [s0, s1, s2], &mut b, &mut out);
    out.sort();
    out
}

// Assigns free indices in the given order; the last one takes the rest of
// the vertex budget.
fn search(free: &[usize], i: usize, rest: [i64; 3], b: &mut [u64], out: &mut Vec<Vec<u64>>) {
    let Some(&j) = free.get(i) else {
        if rest == [0, 0, 0] {
            out.push(b.to_vec());
        }
        return;
    };
    let tail = &free[i..];
    // bounds on what the remaining indices can contribute per vertex
    let (lo1, hi1) = (*tail.iter().min().unwrap() as i64, *tail.iter().max().unwrap() as i64);
    if rest[1] < lo1 * rest[0] || rest[1] > hi1 * rest[0] {
        return;
    }
    if rest[2] < choose2(lo1) * rest[0] || rest[2] > choose2(hi1) * rest[0] {
        return;
    }
    let (jj, cj) = (j as i64, choose2(j as i64));
    if i + 1 == free.len() {
        let x = rest[0];
        if jj * x == rest[1] && cj * x == rest[2] {
            b[j] = x as u64;
            out.push(b.to_vec());
            b[j] = 0;
        }
        return;
    }
    let mut cap = rest[0];
    if jj > 0 {
        cap = cap.min(rest[1] / jj);
    }
    if cj > 0 {
        cap = cap.min(rest[2] / cj);
    }
    for x in 0..=cap {
        b[j] = x as u64;
        search(free, i + 1, [rest[0] - x, rest[1] - jj * x, rest[2] - cj * x], b, out);
    }
    b[j] = 0;
}

/// Edge matrix of `{N(x)∩N(y), N'(x)∩N(y), N(x)∩N'(y), N'(x)∩N'(y)}` for an
/// edge `xy`, as polynomials in `a`, the number of edges inside
/// `N(x)∩N(y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeNeighborhoodMatrix<T: Scalar = crate::Rational> {
    pub entries: Matrix<UniPoly<T>>,
}

impl<T: Scalar> EdgeNeighborhoodMatrix<T> {
    pub fn at(&self, a: &T) -> Matrix<T> {
        self.entries.map(|e| e.eval(a))
    }

    /// Sum of the upper triangle including the diagonal: every edge not
    /// incident to `x` or `y`.
    pub fn total(&self) -> UniPoly<T> {
        let n = self.entries.rows();
        let mut s = UniPoly::zero();
        for i in 0..n {
            for j in i..n {
                s = s + self.entries[(i, j)].clone();
            }
        }
        s
    }

    /// Part sizes `λ, k−λ−1, k−λ−1, v−2k+λ`.
    pub fn sizes(params: &SrgParams) -> [u64; 4] {
        let (v, k, l) = (params.v(), params.k(), params.lambda());
        [l, k - l - 1, k - l - 1, v + l - 2 * k]
    }
}

/// The four-part edge matrix around an edge.
pub fn edge_matrix_around_edge<T: Scalar>(params: &SrgParams) -> EdgeNeighborhoodMatrix<T> {
    let (v, k, l, mu) = (params.v() as i64, params.k() as i64, params.lambda() as i64, params.mu() as i64);
    let half = |n: i64| T::from_ratio(n, 2);
    let c = |x: T, a: i64| UniPoly::affine(x, T::from_int(a));
    let int = |n: i64| T::from_int(n);
    let a11 = c(int(0), 1);
    let a12 = c(int(l * (l - 1)), -2);
    let a14 = c(int(l * (k - 2 * l)), 2);
    let a22 = c(half(l * (k - 2 * l)), 1);
    let a23 = c(int((mu - 1) * (k - l - 1) - l * (l - 1)), 2);
    let a24 = c(int((k - mu) * (k - l - 1) - l * (k - 2 * l)), -2);
    let a44 = c(half(k * (v - 2 * k + l) - 2 * (k - mu) * (k - l - 1) + l * (k - 2 * l)), 1);
    let upper = [
        [a11, a12.clone(), a12, a14],
        [UniPoly::zero(), a22.clone(), a23, a24.clone()],
        [UniPoly::zero(), UniPoly::zero(), a22, a24],
        [UniPoly::zero(), UniPoly::zero(), UniPoly::zero(), a44],
    ];
    let entries = Matrix::from_fn(4, 4, |i, j| if i <= j { upper[i][j].clone() } else { upper[j][i].clone() });
    EdgeNeighborhoodMatrix { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_validation() {
        assert!(FrequencyProfile::new(4, &[0, 0, 0, 4], [4]).is_ok());
        assert!(FrequencyProfile::new(4, &[0, 0, 0, 0, 4], []).is_err());
        assert!(FrequencyProfile::new(4, &[0, 0, 0, 3], []).is_err());
        assert!(FrequencyProfile::new(4, &[0, 0, 0, 4], [5]).is_err());
    }

    #[test]
    fn case_one() {
        let p = SrgParams::new(76, 30, 8, 14).unwrap();
        let prof = FrequencyProfile::new(4, &[0, 0, 0, 4], [4]).unwrap();
        assert_eq!(frequency_moments(&p, &prof), Some((72, 108, 36)));
        assert_eq!(frequency_solutions(&p, &prof), vec![vec![0, 36, 36, 0, 0]]);
    }
}
