use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use super::scalar::{ExactRing, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Outcome of the exact positive-semidefiniteness test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EigenSign {
    /// The smallest eigenvalue is negative.
    Negative,
    /// Every eigenvalue is ≥ 0.
    ZeroOrPositive,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
}

/// Solution set `particular + span(directions)` of a linear system.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution<T> {
    pub particular: Vec<T>,
    pub directions: Vec<Vec<T>>,
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<T> = rows.into_iter().inspect(|row| assert_eq!(row.len(), c, "ragged rows")).flatten().collect();
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

impl<T: ExactRing> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul_mat(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self[(i, k)].clone() * rhs[(k, j)].clone())
        }))
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Works over any [`ExactRing`], in particular over polynomials, where
    /// every intermediate value stays a polynomial.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.data.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(T::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, swap * n + j);
                }
                sign_flip = !sign_flip;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = pivot.clone() * a[i * n + j].clone() - a[i * n + k].clone() * a[k * n + j].clone();
                    a[i * n + j] = v.div_exact(&prev);
                }
                a[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        Ok(if sign_flip { -d } else { d })
    }
}

impl<T: Scalar> Matrix<T> {
    /// Reduced row echelon form by exact Gauss–Jordan elimination.
    /// Pivots are taken in column order, first nonzero row.
    pub fn echelon(&self) -> Echelon<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = T::one() / m[(r, c)].clone();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        // forward elimination only; cheaper than the full echelon form
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = T::one() / m[(r, c)].clone();
            for i in r + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c + 1..m.cols {
                    let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
                m[(i, c)] = T::zero();
            }
            r += 1;
        }
        r
    }

    /// Basis of the right kernel, one vector per free column in ascending
    /// order, each scaled so its first nonzero entry is 1.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = -ech.matrix[(r, f)].clone();
                }
                normalize_leading(v)
            })
            .collect()
    }

    /// All solutions of `self · x = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[T]) -> Result<Option<AffineSolution<T>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: rhs.len() });
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[i].clone()
            }
        });
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut particular = vec![T::zero(); self.cols];
        for (r, &pc) in ech.pivots.iter().enumerate() {
            particular[pc] = ech.matrix[(r, self.cols)].clone();
        }
        Ok(Some(AffineSolution { particular, directions: self.kernel() }))
    }
}

impl<T: Scalar + PartialOrd> Matrix<T> {
    /// Exact PSD decision by symmetric pivoting on positive diagonal entries.
    ///
    /// A negative diagonal entry, or an all-zero diagonal with a nonzero
    /// off-diagonal entry, certifies a negative eigenvalue; otherwise a
    /// positive pivot is eliminated and the Schur complement examined.
    pub fn min_eigen_sign(&self) -> Result<EigenSign> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut active: Vec<usize> = (0..n).collect();
        let zero = T::zero();
        while !active.is_empty() {
            if active.iter().any(|&i| a[(i, i)] < zero) {
                return Ok(EigenSign::Negative);
            }
            let Some(pos) = active.iter().position(|&i| a[(i, i)] > zero) else {
                let off = active.iter().any(|&i| active.iter().any(|&j| i != j && !a[(i, j)].is_zero()));
                return Ok(if off { EigenSign::Negative } else { EigenSign::ZeroOrPositive });
            };
            let piv = active.remove(pos);
            let d = a[(piv, piv)].clone();
            for &i in &active {
                if a[(i, piv)].is_zero() {
                    continue;
                }
                let f = a[(i, piv)].clone() / d.clone();
                for &j in &active {
                    let v = a[(i, j)].clone() - f.clone() * a[(piv, j)].clone();
                    a[(i, j)] = v;
                }
            }
        }
        Ok(EigenSign::ZeroOrPositive)
    }
}

fn normalize_leading<T: Scalar>(v: Vec<T>) -> Vec<T> {
    match v.iter().find(|x| !x.is_zero()).cloned() {
        Some(lead) if !lead.is_one() => v.into_iter().map(|x| x / lead.clone()).collect(),
        _ => v,
    }
}

/// Scale a vector so its first nonzero entry is 1.
pub fn normalize_first_nonzero<T: Scalar>(v: &[T]) -> Vec<T> {
    normalize_leading(v.to_vec())
}

/// Whether `a = c·b` for some nonzero scalar `c`.
pub fn proportional<T: Scalar>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && normalize_first_nonzero(a) == normalize_first_nonzero(b) && a.iter().any(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::UniPoly;
    use num_traits::Zero;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn rat(rows: &[&[(i64, i64)]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(n, d)| q(n, d)).collect()).collect())
    }

    #[test]
    fn identity_rank_and_kernel() {
        let i3 = Matrix::<Rational>::identity(3);
        assert_eq!(i3.rank(), 3);
        assert!(Matrix::<Rational>::identity(2).kernel().is_empty());
        assert_eq!(Matrix::<Rational>::zeros(0, 0).rank(), 0);
        assert_eq!(i3.min_eigen_sign().unwrap(), EigenSign::ZeroOrPositive);
    }

    #[test]
    fn kernel_normalization() {
        let m = rat(&[&[(1, 1), (2, 1), (3, 1)], &[(2, 1), (4, 1), (6, 1)]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
        // free column 1: (-2, 1, 0) normalized to (1, -1/2, 0)
        assert_eq!(k[0], vec![q(1, 1), q(-1, 2), q(0, 1)]);
    }

    #[test]
    fn bareiss_matches_gauss_on_rationals() {
        let m = rat(&[&[(2, 3), (1, 1), (0, 1)], &[(1, 2), (-1, 1), (3, 1)], &[(0, 1), (4, 5), (1, 1)]]);
        // cofactor expansion by hand: 2/3*(-1-12/5) - 1*(1/2 - 0) = -34/15 - 1/2
        assert_eq!(m.det().unwrap(), q(-34, 15) - q(1, 2));
    }

    #[test]
    fn det_with_zero_pivot_swaps_sign() {
        let m = rat(&[&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]]);
        assert_eq!(m.det().unwrap(), q(-1, 1));
    }

    #[test]
    fn polynomial_det() {
        let w = UniPoly::<Rational>::var();
        let m = Matrix::from_rows(vec![vec![w.clone()]]);
        assert_eq!(m.det().unwrap(), w);
    }

    #[test]
    fn psd_detects_hidden_negative() {
        let m = rat(&[&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]]);
        assert_eq!(m.min_eigen_sign().unwrap(), EigenSign::Negative);
        let g = rat(&[&[(1, 1), (1, 1)], &[(1, 1), (1, 1)]]);
        assert_eq!(g.min_eigen_sign().unwrap(), EigenSign::ZeroOrPositive);
        assert_eq!(rat(&[&[(-1, 3)]]).min_eigen_sign().unwrap(), EigenSign::Negative);
        assert!(rat(&[&[(1, 1), (2, 1)], &[(0, 1), (1, 1)]]).min_eigen_sign().is_err());
    }

    #[test]
    fn solve_reports_family_and_inconsistency() {
        let m = rat(&[&[(1, 1), (1, 1)], &[(2, 1), (2, 1)]]);
        let sol = m.solve(&[q(1, 1), q(2, 1)]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![q(1, 1), q(0, 1)]);
        assert_eq!(sol.directions.len(), 1);
        assert!(m.solve(&[q(1, 1), q(3, 1)]).unwrap().is_none());
    }
}
