//! Gram-matrix calculus for vertex partitions of a Euclidean representation.
//!
//! Vertices are never given coordinates. Every computation works with dot
//! products `1`, `p`, `q` and with edge counts inside and between groups
//! of vertices, so results are exact and independent of the ambient
//! dimension.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{EigenSign, Matrix, MultiPoly, Scalar, UniPoly};
use crate::graph::Graph;
use crate::params::RepDots;

/// Gram matrix `I + pA + q(J − I − A)` of the vertices of `g`.
pub fn gram_from_graph<T: Scalar>(g: &Graph, dots: &RepDots<T>) -> Matrix<T> {
    Matrix::from_fn(g.order(), g.order(), |i, j| dots.dot(i == j, g.has_edge(i, j)))
}

/// Edge count `c0 + c1·w`, affine in the single unknown `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeCount {
    pub c0: i64,
    #[serde(default)]
    pub c1: i64,
}

impl EdgeCount {
    pub const fn known(c0: i64) -> Self {
        EdgeCount { c0, c1: 0 }
    }

    pub const fn affine(c0: i64, c1: i64) -> Self {
        EdgeCount { c0, c1 }
    }

    pub fn at(&self, w: i64) -> i64 {
        self.c0 + self.c1 * w
    }

    pub fn poly<T: Scalar>(&self) -> UniPoly<T> {
        UniPoly::affine(T::from_int(self.c0), T::from_int(self.c1))
    }
}

/// Sizes of the groups `G_1..G_l` and their symmetric edge matrix: the
/// diagonal entry counts edges inside a group, an off-diagonal entry edges
/// between two groups.
///
/// The groups need not be disjoint; the caller is responsible for the
/// meaning of overlapping groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionSpec {
    pub sizes: Vec<u64>,
    pub edges: Vec<Vec<EdgeCount>>,
}

impl PartitionSpec {
    /// Builds a spec from the upper triangle, row by row: row `i` lists the
    /// entries `(i,i), (i,i+1), …`.
    pub fn from_upper(sizes: &[u64], upper: &[&[EdgeCount]]) -> Result<Self> {
        let l = sizes.len();
        if upper.len() != l {
            return Err(Error::DimensionMismatch { expected: l, found: upper.len() });
        }
        let mut edges = vec![vec![EdgeCount::known(0); l]; l];
        for (i, row) in upper.iter().enumerate() {
            if row.len() != l - i {
                return Err(Error::DimensionMismatch { expected: l - i, found: row.len() });
            }
            for (off, &e) in row.iter().enumerate() {
                edges[i][i + off] = e;
                edges[i + off][i] = e;
            }
        }
        let spec = PartitionSpec { sizes: sizes.to_vec(), edges };
        spec.validate()?;
        Ok(spec)
    }

    /// Edge matrix of explicit vertex groups of `g`.
    pub fn from_graph(g: &Graph, parts: &[Vec<usize>]) -> Self {
        let l = parts.len();
        let edges = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let count: usize = if i == j {
                            let p = &parts[i];
                            (0..p.len()).map(|a| (a + 1..p.len()).filter(|&b| g.has_edge(p[a], p[b])).count()).sum()
                        } else {
                            parts[i].iter().map(|&a| parts[j].iter().filter(|&&b| g.has_edge(a, b)).count()).sum()
                        };
                        EdgeCount::known(count as i64)
                    })
                    .collect()
            })
            .collect();
        PartitionSpec { sizes: parts.iter().map(|p| p.len() as u64).collect(), edges }
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Shape and symmetry check.
    pub fn validate(&self) -> Result<()> {
        let l = self.sizes.len();
        if self.edges.len() != l {
            return Err(Error::DimensionMismatch { expected: l, found: self.edges.len() });
        }
        for row in &self.edges {
            if row.len() != l {
                return Err(Error::DimensionMismatch { expected: l, found: row.len() });
            }
        }
        for i in 0..l {
            for j in 0..i {
                if self.edges[i][j] != self.edges[j][i] {
                    return Err(Error::InvalidInput(format!("edge matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    /// Whether every count is realisable at `w`: `0 ≤ a_ii ≤ C(m_i,2)` and
    /// `0 ≤ a_ij ≤ m_i·m_j`.
    pub fn admissible_at(&self, w: i64) -> bool {
        let l = self.len();
        (0..l).all(|i| {
            (0..l).all(|j| {
                let a = self.edges[i][j].at(w);
                let (mi, mj) = (self.sizes[i] as i64, self.sizes[j] as i64);
                let cap = if i == j { mi * (mi - 1) / 2 } else { mi * mj };
                (0..=cap).contains(&a)
            })
        })
    }

    /// Whether the edge matrix involves the unknown.
    pub fn is_symbolic(&self) -> bool {
        self.edges.iter().flatten().any(|e| e.c1 != 0)
    }

    /// Degree matrix at `w` if the counts are compatible with an equitable
    /// partition (each count divisible by the relevant size).
    pub fn degree_matrix_at(&self, w: i64) -> Option<DegreeMatrix> {
        let l = self.len();
        let mut b = vec![vec![0u64; l]; l];
        for i in 0..l {
            let mi = self.sizes[i] as i64;
            for j in 0..l {
                let a = self.edges[i][j].at(w);
                let num = if i == j { 2 * a } else { a };
                if mi == 0 || num < 0 || num % mi != 0 {
                    return None;
                }
                b[i][j] = (num / mi) as u64;
            }
        }
        Some(DegreeMatrix(b))
    }
}

/// Degree matrix `b_{i,j}`: number of neighbours in part `j` of any vertex
/// of part `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMatrix(pub Vec<Vec<u64>>);

impl DegreeMatrix {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Edge matrix with `a_ii = b_ii·m_i/2` and `a_ij = m_i·b_ij`, after
    /// checking `m_i·b_ij = m_j·b_ji`.
    pub fn to_partition_spec(&self, sizes: &[u64]) -> Result<PartitionSpec> {
        let l = sizes.len();
        if self.len() != l || self.0.iter().any(|r| r.len() != l) {
            return Err(Error::DimensionMismatch { expected: l, found: self.len() });
        }
        let b = &self.0;
        let mut edges = vec![vec![EdgeCount::known(0); l]; l];
        for i in 0..l {
            for j in 0..l {
                let a = if i == j {
                    if (b[i][i] * sizes[i]) % 2 == 1 {
                        return Err(Error::InvalidInput(format!("odd degree sum inside part {i}")));
                    }
                    b[i][i] * sizes[i] / 2
                } else {
                    if sizes[i] * b[i][j] != sizes[j] * b[j][i] {
                        return Err(Error::InvalidInput(format!("inconsistent degrees between parts {i} and {j}")));
                    }
                    sizes[i] * b[i][j]
                };
                edges[i][j] = EdgeCount::known(a as i64);
            }
        }
        Ok(PartitionSpec { sizes: sizes.to_vec(), edges })
    }

    /// Degree matrix of explicit parts of `g`, or `None` if the partition
    /// is not equitable.
    pub fn of_graph(g: &Graph, parts: &[Vec<usize>]) -> Option<Self> {
        let l = parts.len();
        let mut b = vec![vec![0u64; l]; l];
        for i in 0..l {
            for j in 0..l {
                let counts: Vec<usize> = parts[i].iter().map(|&v| parts[j].iter().filter(|&&u| g.has_edge(v, u)).count()).collect();
                let first = *counts.first()?;
                if counts.iter().any(|&c| c != first) {
                    return None;
                }
                b[i][j] = first as u64;
            }
        }
        Some(DegreeMatrix(b))
    }
}

/// Gram matrix of the group sums `X_j = Σ_{i∈G_j} x_i`, with entries
/// polynomial in the unknown:
/// `M_ii = m_i + 2a_ii·p + (m_i(m_i−1) − 2a_ii)·q` and
/// `M_ij = a_ij·p + (m_i·m_j − a_ij)·q`.
pub fn gram_from_partition<T: Scalar>(spec: &PartitionSpec, dots: &RepDots<T>) -> Matrix<UniPoly<T>> {
    let p = UniPoly::constant(dots.p.clone());
    let q = UniPoly::constant(dots.q.clone());
    let l = spec.len();
    Matrix::from_fn(l, l, |i, j| {
        let a: UniPoly<T> = spec.edges[i][j].poly();
        let mi = spec.sizes[i] as i64;
        let mj = spec.sizes[j] as i64;
        if i == j {
            let two_a = a.scale(&T::from_int(2));
            UniPoly::constant(T::from_int(mi)) + two_a.clone() * p.clone() + (UniPoly::constant(T::from_int(mi * (mi - 1))) - two_a) * q.clone()
        } else {
            a.clone() * p.clone() + (UniPoly::constant(T::from_int(mi * mj)) - a) * q.clone()
        }
    })
}

/// Gram matrix of the group sums at a fixed value of the unknown.
pub fn gram_at<T: Scalar>(spec: &PartitionSpec, dots: &RepDots<T>, w: i64) -> Matrix<T> {
    let x = T::from_int(w);
    gram_from_partition(spec, dots).map(|e| e.eval(&x))
}

/// `det M(π,p,q)` as a polynomial in the unknown.
pub fn gram_determinant<T: Scalar>(spec: &PartitionSpec, dots: &RepDots<T>) -> UniPoly<T> {
    gram_from_partition(spec, dots).det().expect("partition Gram matrix is square")
}

/// All integers `w` in `[w_min, w_max]` with `det M ≥ 0`.
pub fn psd_w_range<T: Scalar + PartialOrd>(spec: &PartitionSpec, dots: &RepDots<T>, w_min: i64, w_max: i64) -> Vec<i64> {
    let det = gram_determinant(spec, dots);
    (w_min..=w_max).filter(|&w| det.eval(&T::from_int(w)) >= T::zero()).collect()
}

/// All integers `w` in `[w_min, w_max]` at which `M` is positive
/// semidefinite. Stronger than [`psd_w_range`].
pub fn psd_w_range_strict<T: Scalar + PartialOrd>(spec: &PartitionSpec, dots: &RepDots<T>, w_min: i64, w_max: i64) -> Vec<i64> {
    let m = gram_from_partition(spec, dots);
    (w_min..=w_max)
        .filter(|&w| {
            let x = T::from_int(w);
            matches!(m.map(|e| e.eval(&x)).min_eigen_sign(), Ok(EigenSign::ZeroOrPositive))
        })
        .collect()
}

/// Coefficients `λ_j` of a vanishing combination `Σ λ_j X_j = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelCertificate<T = crate::Rational> {
    pub lambda: Vec<T>,
}

impl<T: Scalar> KernelCertificate<T> {
    /// Whether the two certificates agree up to a nonzero factor.
    pub fn proportional_to(&self, other: &[T]) -> bool {
        crate::exact::proportional(&self.lambda, other)
    }
}

/// Kernel vector of `M` at `w`, with first nonzero entry 1. Because `M` is
/// the Gram matrix of the group sums, a kernel vector is a linear
/// dependence among them.
pub fn kernel_certificate<T: Scalar>(spec: &PartitionSpec, dots: &RepDots<T>, w: i64) -> Result<KernelCertificate<T>> {
    let m = gram_at(spec, dots, w);
    let mut kernel = m.kernel();
    if kernel.is_empty() {
        return Err(Error::NoCertificate);
    }
    Ok(KernelCertificate { lambda: kernel.swap_remove(0) })
}

/// Affine relation `Σ coeffs_j·e_j + constant = 0` among the neighbour
/// counts `e_j = |N(z) ∩ G_j|` of a vertex `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearRelation<T = crate::Rational> {
    pub coeffs: Vec<T>,
    pub constant: T,
}

impl<T: Scalar> LinearRelation<T> {
    /// Rescales so that `coeffs[index] = value`.
    pub fn scaled_to(&self, index: usize, value: T) -> Result<Self> {
        let c = self.coeffs.get(index).ok_or(Error::DimensionMismatch { expected: self.coeffs.len(), found: index })?;
        if c.is_zero() {
            return Err(Error::Indeterminate);
        }
        let f = value / c.clone();
        Ok(LinearRelation {
            coeffs: self.coeffs.iter().map(|x| x.clone() * f.clone()).collect(),
            constant: self.constant.clone() * f,
        })
    }

    pub fn eval(&self, e: &[T]) -> T {
        self.coeffs.iter().zip(e).fold(self.constant.clone(), |acc, (c, x)| acc + c.clone() * x.clone())
    }
}

/// Relation obtained by dotting `Σ λ_j X_j = 0` with `x_z`. Uses the
/// unified form `Σ λ_j (p·ẽ_j + q(|G_j| − ẽ_j)) = 0`, where
/// `ẽ_j = e_j + (1−q)/(p−q)` for the group containing `z` and `ẽ_j = e_j`
/// otherwise.
pub fn lincomb_relation<T: Scalar>(
    cert: &KernelCertificate<T>,
    sizes: &[u64],
    dots: &RepDots<T>,
    membership: Option<usize>,
) -> Result<LinearRelation<T>> {
    if cert.lambda.len() != sizes.len() {
        return Err(Error::DimensionMismatch { expected: sizes.len(), found: cert.lambda.len() });
    }
    let (p, q) = (dots.p.clone(), dots.q.clone());
    let diff = p - q.clone();
    let mut constant = T::zero();
    let mut coeffs = Vec::with_capacity(sizes.len());
    for (j, (lambda, &m)) in cert.lambda.iter().zip(sizes).enumerate() {
        coeffs.push(lambda.clone() * diff.clone());
        constant = constant + lambda.clone() * q.clone() * T::from_int(m as i64);
        if membership == Some(j) {
            constant = constant + lambda.clone() * (T::one() - q.clone());
        }
    }
    Ok(LinearRelation { coeffs, constant })
}

/// Solves the relation of [`lincomb_relation`] for the single unknown
/// count (the `None` entry of `known`). The caller checks integrality and
/// range of the result.
pub fn lincomb_solve<T: Scalar>(
    cert: &KernelCertificate<T>,
    sizes: &[u64],
    dots: &RepDots<T>,
    membership: Option<usize>,
    known: &[Option<T>],
) -> Result<T> {
    let rel = lincomb_relation(cert, sizes, dots, membership)?;
    if known.len() != sizes.len() {
        return Err(Error::DimensionMismatch { expected: sizes.len(), found: known.len() });
    }
    let unknown: Vec<usize> = (0..known.len()).filter(|&j| known[j].is_none()).collect();
    let [u] = unknown[..] else {
        return Err(Error::InvalidInput(format!("expected exactly one unknown count, found {}", unknown.len())));
    };
    if rel.coeffs[u].is_zero() {
        return Err(Error::Indeterminate);
    }
    let rest = known
        .iter()
        .zip(&rel.coeffs)
        .filter_map(|(e, c)| e.as_ref().map(|e| e.clone() * c.clone()))
        .fold(rel.constant.clone(), |a, b| a + b);
    Ok(-rest / rel.coeffs[u].clone())
}

/// Solution family `particular + Σ t_i·directions_i` of the projection
/// system; each coefficient applies to every vertex of its part.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionCoeffs<T = crate::Rational> {
    pub particular: Vec<T>,
    pub directions: Vec<Vec<T>>,
}

impl<T: Scalar> ProjectionCoeffs<T> {
    pub fn is_unique(&self) -> bool {
        self.directions.is_empty()
    }

    /// The unique solution, if there is one.
    pub fn unique(&self) -> Option<&[T]> {
        self.is_unique().then_some(&self.particular[..])
    }

    /// Member of the family at the given parameters.
    pub fn at(&self, params: &[T]) -> Vec<T> {
        let mut v = self.particular.clone();
        for (dir, t) in self.directions.iter().zip(params) {
            for (x, d) in v.iter_mut().zip(dir) {
                *x = x.clone() + d.clone() * t.clone();
            }
        }
        v
    }

    /// Pins a one-parameter family by requiring `α_a = α_b`.
    pub fn pin_equal(&self, a: usize, b: usize) -> Result<Vec<T>> {
        let [dir] = &self.directions[..] else {
            return Err(Error::InvalidInput(format!("expected a one-parameter family, found {} parameters", self.directions.len())));
        };
        let slope = dir[a].clone() - dir[b].clone();
        if slope.is_zero() {
            return Err(Error::Indeterminate);
        }
        let t = (self.particular[b].clone() - self.particular[a].clone()) / slope;
        Ok(self.at(&[t]))
    }
}

/// Solves `h_w = (1−q)α_w + Σ_u α_u (p·b_wu + q(|G_u| − b_wu))`, where
/// `h_w` is `p` for parts adjacent to the outside vertex and `q` otherwise.
pub fn projection_coefficients<T: Scalar>(
    deg: &DegreeMatrix,
    sizes: &[u64],
    adjacent: &[bool],
    dots: &RepDots<T>,
) -> Result<ProjectionCoeffs<T>> {
    let l = sizes.len();
    if deg.len() != l || adjacent.len() != l {
        return Err(Error::DimensionMismatch { expected: l, found: deg.len().min(adjacent.len()) });
    }
    let (p, q) = (dots.p.clone(), dots.q.clone());
    let a = Matrix::from_fn(l, l, |w, u| {
        let b = T::from_int(deg.0[w][u] as i64);
        let m = T::from_int(sizes[u] as i64);
        let mut x = p.clone() * b.clone() + q.clone() * (m - b);
        if w == u {
            x = x + T::one() - q.clone();
        }
        x
    });
    let h: Vec<T> = adjacent.iter().map(|&adj| if adj { p.clone() } else { q.clone() }).collect();
    let sol = a.solve(&h)?.ok_or(Error::Inconsistent)?;
    Ok(ProjectionCoeffs { particular: sol.particular, directions: sol.directions })
}

/// Counts of the intersections `G_{u,w} = G_u⁽¹⁾ ∩ G_w⁽²⁾` of two
/// partitions with `l` parts each, as polynomials in declared unknowns.
/// Cells are indexed `u·l + w`.
#[derive(Clone, Debug)]
pub struct IntersectionSpec<T: Scalar = crate::Rational> {
    l: usize,
    nvars: usize,
    sizes: Vec<MultiPoly<T>>,
    inner: Vec<MultiPoly<T>>,
    between: Vec<MultiPoly<T>>,
}

impl<T: Scalar> IntersectionSpec<T> {
    /// All counts start at zero.
    pub fn new(l: usize, nvars: usize) -> Self {
        let cells = l * l;
        IntersectionSpec {
            l,
            nvars,
            sizes: vec![MultiPoly::zero(nvars); cells],
            inner: vec![MultiPoly::zero(nvars); cells],
            between: vec![MultiPoly::zero(nvars); cells * cells],
        }
    }

    pub fn parts(&self) -> usize {
        self.l
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn var(&self, i: usize) -> MultiPoly<T> {
        MultiPoly::var(self.nvars, i)
    }

    pub fn constant(&self, c: i64) -> MultiPoly<T> {
        MultiPoly::constant(self.nvars, T::from_int(c))
    }

    fn cell(&self, (u, w): (usize, usize)) -> usize {
        assert!(u < self.l && w < self.l, "cell index out of range");
        u * self.l + w
    }

    /// `|G_{u,w}|`.
    pub fn set_size(&mut self, c: (usize, usize), value: MultiPoly<T>) -> &mut Self {
        let i = self.cell(c);
        self.sizes[i] = value;
        self
    }

    /// Edges inside `G_{u,w}`.
    pub fn set_inner(&mut self, c: (usize, usize), value: MultiPoly<T>) -> &mut Self {
        let i = self.cell(c);
        self.inner[i] = value;
        self
    }

    /// Edges between two distinct cells (set symmetrically).
    pub fn set_between(&mut self, a: (usize, usize), b: (usize, usize), value: MultiPoly<T>) -> &mut Self {
        let (i, j) = (self.cell(a), self.cell(b));
        assert_ne!(i, j, "use set_inner for edges inside a cell");
        let n = self.l * self.l;
        self.between[i * n + j] = value.clone();
        self.between[j * n + i] = value;
        self
    }

    /// Counts taken from explicit parts of a graph on the base vertex set.
    pub fn from_graph(g: &Graph, first: &[Vec<usize>], second: &[Vec<usize>]) -> Self {
        let l = first.len();
        assert_eq!(second.len(), l, "partitions must have equally many parts");
        let mut spec = IntersectionSpec::new(l, 0);
        let cells: Vec<Vec<usize>> = (0..l * l)
            .map(|c| first[c / l].iter().copied().filter(|v| second[c % l].contains(v)).collect())
            .collect();
        let count = |a: &[usize], b: &[usize]| a.iter().map(|&x| b.iter().filter(|&&y| g.has_edge(x, y)).count()).sum::<usize>() as i64;
        for c in 0..l * l {
            let pos = (c / l, c % l);
            spec.set_size(pos, spec.constant(cells[c].len() as i64));
            spec.set_inner(pos, spec.constant(count(&cells[c], &cells[c]) / 2));
            for d in c + 1..l * l {
                spec.set_between(pos, (d / l, d % l), spec.constant(count(&cells[c], &cells[d])));
            }
        }
        spec
    }
}

/// `x'_{j1}·x'_{j2}` when both projections use the coefficients `alpha`
/// on their respective partitions:
/// `Σ_{(u,w)} α_u α_w (|G_uw| + 2e_uw·p + (|G_uw|(|G_uw|−1) − 2e_uw)·q)`
/// `+ Σ_{(u,w)≠(ũ,w̃)} α_u α_w̃ (e·p + (|G_uw||G_ũw̃| − e)·q)`.
pub fn projection_dot<T: Scalar>(spec: &IntersectionSpec<T>, alpha: &[T], dots: &RepDots<T>) -> Result<MultiPoly<T>> {
    let l = spec.l;
    if alpha.len() != l {
        return Err(Error::DimensionMismatch { expected: l, found: alpha.len() });
    }
    let nv = spec.nvars;
    let c = |x: T| MultiPoly::constant(nv, x);
    let (p, q) = (c(dots.p.clone()), c(dots.q.clone()));
    let one = c(T::one());
    let two = c(T::from_int(2));
    let n = l * l;
    let mut total = MultiPoly::zero(nv);
    for a in 0..n {
        let (u, w) = (a / l, a % l);
        let size = spec.sizes[a].clone();
        let e = spec.inner[a].clone();
        let gram = size.clone() + two.clone() * e.clone() * p.clone() + (size.clone() * (size.clone() - one.clone()) - two.clone() * e) * q.clone();
        total = total + c(alpha[u].clone() * alpha[w].clone()) * gram;
        for b in 0..n {
            if a == b {
                continue;
            }
            let tw = b % l;
            let e = spec.between[a * n + b].clone();
            let cross = e.clone() * p.clone() + (size.clone() * spec.sizes[b].clone() - e) * q.clone();
            total = total + c(alpha[u].clone() * alpha[tw].clone()) * cross;
        }
    }
    Ok(total)
}

/// Cosine of the angle between the residuals `x_j − x'_j` of two outside
/// vertices: `(dot_raw − dot_cross)/(1 − dot_self)`, where `dot_self` is
/// `x'_j·x'_j` (equal for both) and `dot_cross` is `x'_{j1}·x'_{j2}`.
pub fn residual_cosine<T: Scalar>(dot_self: &T, dot_cross: &T, dot_raw: &T) -> Result<T> {
    let norm = T::one() - dot_self.clone();
    if norm.is_zero() {
        return Err(Error::Degenerate("the projection captures the whole vector".into()));
    }
    Ok((dot_raw.clone() - dot_cross.clone()) / norm)
}

/// Squared length `1 − x'·x'` of the residual.
pub fn residual_norm_sq<T: Scalar>(dot_self: &T) -> T {
    T::one() - dot_self.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::params::Side;
    use crate::Rational;

    fn dots76() -> RepDots {
        RepDots::new(Rational::from_ratio(-4, 15), Rational::from_ratio(7, 45), Side::PrimalInG)
    }

    #[test]
    fn single_part_k5() {
        let spec = PartitionSpec::from_upper(&[5], &[&[EdgeCount::known(10)]]).unwrap();
        assert_eq!(gram_determinant(&spec, &dots76()), UniPoly::constant(Rational::from_ratio(-1, 3)));
        assert!(psd_w_range(&spec, &dots76(), 0, 0).is_empty());
    }

    #[test]
    fn degree_matrix_round_trip() {
        let g = families::petersen();
        let parts = vec![vec![0], (1..10).filter(|&v| g.has_edge(0, v)).collect(), (1..10).filter(|&v| !g.has_edge(0, v)).collect()];
        let deg = DegreeMatrix::of_graph(&g, &parts).unwrap();
        assert_eq!(deg.0, vec![vec![0, 3, 0], vec![1, 0, 2], vec![0, 1, 2]]);
        let spec = deg.to_partition_spec(&[1, 3, 6]).unwrap();
        assert_eq!(spec, PartitionSpec::from_graph(&g, &parts));
        assert_eq!(spec.degree_matrix_at(0), Some(deg));
        assert!(spec.admissible_at(0));
    }

    #[test]
    fn spec_json_schema() {
        let json = r#"{"sizes":[2,3],"edges":[[{"c0":1},{"c0":2,"c1":1}],[{"c0":2,"c1":1},{"c0":0}]]}"#;
        let spec: PartitionSpec = serde_json::from_str(json).unwrap();
        spec.validate().unwrap();
        assert!(spec.is_symbolic());
        let bad = r#"{"sizes":[2],"edges":[[{"c0":1,"x":2}]]}"#;
        assert!(serde_json::from_str::<PartitionSpec>(bad).is_err());
    }
}
