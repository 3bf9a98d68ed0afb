use std::fmt;
use std::ops::{Add, Index, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Small dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {i} has {} entries, expected {cols}",
                r.len()
            )));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Matrix::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j]).clone()
        })
    }

    /// Top-left `rows x cols` block (clamped to the matrix size).
    pub fn truncate(&self, rows: usize, cols: usize) -> Self {
        let (r, c) = (rows.min(self.rows), cols.min(self.cols));
        Matrix::from_fn(r, c, |i, j| self.get(i, j).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    pub fn try_mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    &acc + &(a * rhs.get(k, j))
                }
            })
        }))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// Exact determinant of a rational matrix.
///
/// Each row is scaled by the lcm of its denominators, the resulting integer
/// matrix goes through fraction-free (Bareiss) elimination, and the row scale
/// factors are divided back out at the end.
pub fn det_exact(m: &Matrix<Rat>) -> Result<Rat> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let mut scale = BigInt::one();
    let mut int_rows = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let row = m.row(i);
        let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        int_rows.push(
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect::<Vec<_>>(),
        );
        scale *= lcm;
    }
    let det = det_exact_int(&Matrix::from_rows(int_rows)?)?;
    Ok(Rat::new(det, scale))
}

/// Bareiss fraction-free elimination over the integers, with row pivoting.
pub fn det_exact_int(m: &Matrix<BigInt>) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by Sylvester's identity.
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_frac};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Leibniz formula over all permutations.
    fn permutation_det(a: &Matrix<Rat>) -> Rat {
        fn permute(k: usize, perm: &mut Vec<usize>, sign: bool, a: &Matrix<Rat>, acc: &mut Rat) {
            let n = perm.len();
            if k == n {
                let term = (0..n).fold(rat(1), |t, i| t * a.get(i, perm[i]));
                if sign {
                    *acc -= term;
                } else {
                    *acc += term;
                }
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                permute(k + 1, perm, sign ^ (i != k), a, acc);
                perm.swap(k, i);
            }
        }
        let mut acc = rat(0);
        permute(0, &mut (0..a.rows()).collect(), false, a, &mut acc);
        acc
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_exact(&m(&[&[1, 1], &[1, 2]])).unwrap(), rat(1));
        assert_eq!(det_exact(&m(&[&[1, 2], &[3, 4]])).unwrap(), rat(-2));
        assert_eq!(
            det_exact(&m(&[&[1, 1, 2], &[1, 2, 5], &[2, 5, 14]])).unwrap(),
            rat(1)
        );
        assert_eq!(det_exact(&m(&[])).unwrap(), rat(1));
    }

    #[test]
    fn needs_pivoting() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(det_exact(&a).unwrap(), permutation_det(&a));
        assert_eq!(det_exact(&m(&[&[0, 0], &[0, 5]])).unwrap(), rat(0));
    }

    #[test]
    fn fractional_entries() {
        let a = Matrix::from_rows(vec![
            vec![rat_frac(1, 2), rat_frac(1, 3)],
            vec![rat_frac(1, 4), rat(2)],
        ])
        .unwrap();
        assert_eq!(det_exact(&a).unwrap(), rat_frac(11, 12));
    }

    #[test]
    fn non_square_is_rejected() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(det_exact(&a), Err(Error::Dimension(_))));
        assert!(a.try_mul(&a).is_err());
    }

    #[test]
    fn product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.try_mul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
    }

    proptest! {
        #[test]
        fn agrees_with_permutation_sum(n in 1usize..=5, seed in prop::collection::vec(-9i64..=9, 25)) {
            let a = Matrix::from_fn(n, n, |i, j| rat(seed[i * 5 + j]));
            prop_assert_eq!(det_exact(&a).unwrap(), permutation_det(&a));
        }

        #[test]
        fn agrees_on_rational_entries(seed in prop::collection::vec((-9i64..=9, 1i64..=4), 16)) {
            let a = Matrix::from_fn(4, 4, |i, j| { let (n, d) = seed[i * 4 + j]; rat_frac(n, d) });
            prop_assert_eq!(det_exact(&a).unwrap(), permutation_det(&a));
        }
    }
}
