use num_traits::{One, Zero};

use super::scheme::ConstParams;
use super::Triangle;
use crate::algebra::{Matrix, QPoly, Rat};
use crate::error::{Error, Result};
use crate::properties::{
    is_log_concave, CheckedRange, NumSeq, PolySeq, Property, PropertyReport, Witness,
};

/// `A_n(q) = sum_k A(n,k) q^k`
pub fn row_gen_fn(t: &Triangle, n: usize) -> Result<QPoly> {
    Ok(QPoly::new(t.row(n)?.to_vec()))
}

/// `A_0(q), ..., A_{n_max}(q)` as a sequence starting at index 0.
pub fn row_gen_fns(t: &Triangle) -> PolySeq {
    let polys = t.rows().iter().map(|r| QPoly::new(r.clone())).collect();
    PolySeq::new(polys, 0).expect("triangles have at least one row")
}

/// Log-concavity of every row. On failure the report is the first failing
/// row's, annotated with the row index.
pub fn rows_log_concave(t: &Triangle) -> PropertyReport {
    for (n, row) in t.rows().iter().enumerate() {
        let seq = NumSeq::new(row.clone(), 0).expect("rows are nonempty");
        let r = is_log_concave(&seq);
        if !r.is_holds() {
            return r.with_note(format!("row {n}"));
        }
    }
    PropertyReport::holds(
        Property::LogConcave,
        CheckedRange::Rows {
            first: 0,
            last: t.n_max(),
        },
    )
}

/// The triangle as a matrix `(A(n,k))`, truncated to `rows x cols`, zero
/// outside the stored shape.
pub fn triangle_matrix(t: &Triangle, rows: usize, cols: usize) -> Matrix<Rat> {
    Matrix::from_fn(rows, cols, |n, k| t.get(n, k))
}

/// Leading `n x n` block of the triangle matrix with its first row deleted.
pub fn a_bar_matrix(t: &Triangle, n: usize) -> Result<Matrix<Rat>> {
    if n > t.n_max() {
        return Err(Error::Range {
            index: n as i64,
            available: format!("rows 0..={}", t.n_max()),
        });
    }
    Ok(Matrix::from_fn(n, n, |i, k| t.get(i + 1, k)))
}

/// `b(n,k) = sum_{i >= k} A(n,i) q^i` for rows `0..=n_max` and every column
/// index that occurs in those rows.
pub fn b_matrix(t: &Triangle, n_max: usize) -> Result<Matrix<QPoly>> {
    t.row(n_max)?;
    let width = t.arity() * n_max + 1;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let row = t.row(n)?;
        let mut tails = vec![QPoly::zero(); width];
        let mut acc = QPoly::zero();
        for k in (0..width).rev() {
            if let Some(a) = row.get(k) {
                acc = &acc + &QPoly::monomial(a.clone(), k);
            }
            tails[k] = acc.clone();
        }
        rows.push(tails);
    }
    Matrix::from_rows(rows)
}

/// Lower-triangular `T = (q^i)_{i >= j}`, truncated to `size x size`.
pub fn t_matrix(size: usize) -> Matrix<QPoly> {
    Matrix::from_fn(size, size, |i, j| {
        if i >= j {
            QPoly::monomial(Rat::one(), i)
        } else {
            QPoly::zero()
        }
    })
}

/// Leading `size x size` block of the production matrix
///
/// ```text
/// alpha beta  gamma 0     0 ...
/// g     f     e     gamma 0 ...
/// h     g     f     e     gamma ...
/// 0     h     g     f     e ...
/// ```
pub fn j_matrix(p: &ConstParams, size: usize) -> Matrix<Rat> {
    Matrix::from_fn(size, size, |i, j| {
        if i == 0 {
            return match j {
                0 => p.alpha.clone(),
                1 => p.beta.clone(),
                2 => p.gamma.clone(),
                _ => Rat::zero(),
            };
        }
        match j as i64 - i as i64 {
            -2 => p.h.clone(),
            -1 => p.g.clone(),
            0 => p.f.clone(),
            1 => p.e.clone(),
            2 => p.gamma.clone(),
            _ => Rat::zero(),
        }
    })
}

fn compare<T: PartialEq + ToString>(
    name: &str,
    expected: &Matrix<T>,
    actual: &Matrix<T>,
) -> PropertyReport {
    let range = CheckedRange::Matrix {
        rows: expected.rows(),
        cols: expected.cols(),
        max_order: 1,
    };
    let property = Property::Identity(name.to_string());
    for i in 0..expected.rows() {
        for j in 0..expected.cols() {
            if expected.get(i, j) != actual.get(i, j) {
                let witness = Witness::Mismatch {
                    row: i,
                    col: j,
                    expected: expected.get(i, j).to_string(),
                    actual: actual.get(i, j).to_string(),
                };
                return PropertyReport::fails(property, range, witness);
            }
        }
    }
    PropertyReport::holds(property, range)
}

/// Checks `B = A T` on rows `0..=n_max`, using every column the rows occupy
/// so that no term of the product is lost to truncation.
pub fn check_b_factorization(t: &Triangle, n_max: usize) -> Result<PropertyReport> {
    let b = b_matrix(t, n_max)?;
    let width = b.cols();
    let a = triangle_matrix(t, n_max + 1, width).map(|x| QPoly::constant(x.clone()));
    let at = a.try_mul(&t_matrix(width))?;
    Ok(compare("B=A*T", &b, &at))
}

/// Checks `A-bar_n = A_n J_n` on leading `n x n` blocks, where `t` is the
/// constant-coefficient triangle for `p`.
///
/// The square truncation drops the terms `A(i,k) J(k,j)` with `k >= n`; they
/// vanish when `gamma = 0` (rows have no entries past the diagonal) or when
/// `g = h = 0` (`J` has nothing below its diagonal). Otherwise the identity
/// can fail on the truncation even though it holds for the infinite matrices.
pub fn check_j_factorization(t: &Triangle, p: &ConstParams, n: usize) -> Result<PropertyReport> {
    let a_bar = a_bar_matrix(t, n)?;
    let product = triangle_matrix(t, n, n).try_mul(&j_matrix(p, n))?;
    let mut report = compare("Abar=A*J", &a_bar, &product);
    if !p.gamma.is_zero() && !(p.g.is_zero() && p.h.is_zero()) {
        report = report.with_note("gamma and g/h both nonzero: square truncation is lossy");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::triangles::{gen_const, gen_recursive, CoeffScheme};

    fn motzkin(n: usize) -> Triangle {
        gen_recursive(&CoeffScheme::constant(1), &CoeffScheme::constant(1), n).unwrap()
    }

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_ints(c.iter().copied())
    }

    #[test]
    fn row_generating_functions() {
        assert_eq!(row_gen_fn(&motzkin(4), 2).unwrap(), qp(&[2, 2, 1]));
        assert_eq!(row_gen_fn(&motzkin(0), 0).unwrap(), qp(&[1]));
        let two = crate::triangles::gen_bisnomial(2, 1).unwrap();
        assert_eq!(row_gen_fn(&two, 1).unwrap(), qp(&[1, 1, 1]));
        assert!(row_gen_fn(&two, 2).is_err());
    }

    #[test]
    fn b_matrix_entries() {
        let b = b_matrix(&motzkin(3), 2).unwrap();
        assert_eq!(b.get(2, 0), &qp(&[2, 2, 1]));
        assert_eq!(b.get(2, 1), &qp(&[0, 2, 1]));
        assert_eq!(b.get(2, 2), &qp(&[0, 0, 1]));
        assert_eq!(b.get(0, 0), &qp(&[1]));
        assert!(b.get(0, 1).is_zero() && b.get(0, 2).is_zero());
    }

    #[test]
    fn factorizations() {
        assert!(check_b_factorization(&motzkin(8), 8).unwrap().is_holds());
        let p = ConstParams::from_ints([1, 1, 0, 1, 1, 1, 0]).unwrap();
        let t = gen_const(&p, 4);
        assert!(check_j_factorization(&t, &p, 3).unwrap().is_holds());
        assert!(check_b_factorization(&t, 4).unwrap().is_holds());
    }

    #[test]
    fn j_matrix_layout() {
        let p = ConstParams::from_ints([2, 3, 5, 7, 11, 13, 17]).unwrap();
        let j = j_matrix(&p, 4);
        let expect = [
            [2, 3, 5, 0],
            [13, 11, 7, 5],
            [17, 13, 11, 7],
            [0, 17, 13, 11],
        ];
        for (i, row) in expect.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(j.get(i, k), &rat(v), "({i},{k})");
            }
        }
        let m = j_matrix(&ConstParams::from_ints([1, 1, 0, 1, 1, 1, 0]).unwrap(), 3);
        assert_eq!(
            m.to_rows(),
            vec![
                vec![rat(1), rat(1), rat(0)],
                vec![rat(1), rat(1), rat(1)],
                vec![rat(0), rat(1), rat(1)]
            ]
        );
    }

    #[test]
    fn lossy_truncation_is_flagged() {
        let p = ConstParams::from_ints([1, 1, 1, 1, 1, 1, 1]).unwrap();
        let t = gen_const(&p, 5);
        let r = check_j_factorization(&t, &p, 4).unwrap();
        assert!(!r.notes.is_empty());
        assert!(!r.is_holds());
    }
}
