use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::{CheckedRange, NumSeq, Property, PropertyReport, Verdict, Witness};
use crate::algebra::{det_exact, poly_geq_q, Matrix, QOrder, QPoly, Rat};
use crate::error::{Error, Result};

fn require(s: &NumSeq, needed: usize) -> Result<()> {
    if s.len() < needed {
        return Err(Error::Range {
            index: s.offset() + needed as i64 - 1,
            available: format!("{} terms starting at index {}", s.len(), s.offset()),
        });
    }
    Ok(())
}

/// `size x size` Toeplitz matrix `(a_{i-j})`, zero above the diagonal.
/// `a_0` is the first stored term.
pub fn toeplitz(s: &NumSeq, size: usize) -> Result<Matrix<Rat>> {
    require(s, size)?;
    let a = s.values();
    Ok(Matrix::from_fn(size, size, |i, j| {
        if i >= j {
            a[i - j].clone()
        } else {
            Rat::zero()
        }
    }))
}

/// `size x size` Hankel matrix `(a_{i+j})`.
pub fn hankel(s: &NumSeq, size: usize) -> Result<Matrix<Rat>> {
    hankel_rect(s, size, size)
}

/// Rectangular Hankel matrix `(a_{i+j})` with `rows x cols` entries.
pub fn hankel_rect(s: &NumSeq, rows: usize, cols: usize) -> Result<Matrix<Rat>> {
    if rows == 0 || cols == 0 {
        return Ok(Matrix::from_fn(rows, cols, |_, _| Rat::zero()));
    }
    require(s, rows + cols - 1)?;
    let a = s.values();
    Ok(Matrix::from_fn(rows, cols, |i, j| a[i + j].clone()))
}

fn minor(m: &Matrix<Rat>, rows: &[usize], cols: &[usize]) -> Rat {
    match rows.len() {
        1 => m.get(rows[0], cols[0]).clone(),
        2 => {
            m.get(rows[0], cols[0]) * m.get(rows[1], cols[1])
                - m.get(rows[0], cols[1]) * m.get(rows[1], cols[0])
        }
        _ => det_exact(&m.submatrix(rows, cols)).expect("square submatrix"),
    }
}

/// Checks every square minor of order `1..=r`, in increasing order, row
/// subsets lexicographically, then column subsets lexicographically; stops at
/// the first negative minor. `r` larger than the matrix is clamped.
pub fn is_tp_r(m: &Matrix<Rat>, r: usize) -> Result<PropertyReport> {
    if r == 0 {
        return Err(Error::Config("TP order must be at least 1".into()));
    }
    let max = m.rows().min(m.cols());
    let order = r.min(max);
    let range = CheckedRange::Matrix {
        rows: m.rows(),
        cols: m.cols(),
        max_order: order,
    };
    let mut report = PropertyReport::holds(Property::TotallyPositive(r), range.clone());
    if order < r {
        report = report.with_note(format!("order {r} clamped to {order} by the matrix size"));
    }
    for k in 1..=order {
        for rows in (0..m.rows()).combinations(k) {
            for cols in (0..m.cols()).combinations(k) {
                let value = minor(m, &rows, &cols);
                if value.is_negative() {
                    report.verdict = Verdict::Fails;
                    report.witness = Some(Witness::Minor { rows, cols, value });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// PF_r on a finite window: TP_r of the `window x window` Toeplitz matrix.
pub fn is_pf_r(s: &NumSeq, r: usize, window: usize) -> Result<PropertyReport> {
    let property = Property::PolyaFrequency(r);
    if let Some((i, v)) = s.values().iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Ok(PropertyReport {
            property,
            range: s.range(),
            verdict: Verdict::PreconditionFailed,
            witness: Some(Witness::NegativeEntry {
                index: s.offset() + i as i64,
                value: v.clone(),
            }),
            notes: vec!["entries must be nonnegative".into()],
        });
    }
    let t = toeplitz(s, window)?;
    let mut report = is_tp_r(&t, r)?;
    report.property = property;
    report.notes.push(format!(
        "verdict covers the {window}x{window} Toeplitz window only"
    ));
    Ok(report)
}

/// Every 2x2 minor of a polynomial matrix is `>=_q 0`.
pub fn is_q_tp2(m: &Matrix<QPoly>) -> PropertyReport {
    let range = CheckedRange::Matrix {
        rows: m.rows(),
        cols: m.cols(),
        max_order: 2,
    };
    for rows in (0..m.rows()).combinations(2) {
        for cols in (0..m.cols()).combinations(2) {
            let main = m.get(rows[0], cols[0]) * m.get(rows[1], cols[1]);
            let anti = m.get(rows[0], cols[1]) * m.get(rows[1], cols[0]);
            if let QOrder::Fails { index, value } = poly_geq_q(&main, &anti) {
                let witness = Witness::PolyMinor {
                    rows,
                    cols,
                    coeff_index: index,
                    value,
                };
                return PropertyReport::fails(Property::QTp2, range, witness);
            }
        }
    }
    PropertyReport::holds(Property::QTp2, range)
}
