use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scheme::{CoeffScheme, ConstParams, PentaSchemes};
use super::Triangle;
use crate::algebra::{rat, Rat};
use crate::error::{Error, Result};

/// Rows `0..=n_max` of the s-Pascal triangle, built with the longitudinal
/// recurrence `C(n,k) = C(n-1,k) + C(n-1,k-1) + ... + C(n-1,k-s)`.
pub fn bisnomial_rows(n_max: usize, s: usize) -> Vec<Vec<BigInt>> {
    assert!(s >= 1, "s must be positive");
    let mut rows = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::zero(); s * n + 1];
        // Sliding window of width s+1 over the previous row.
        let mut window = BigInt::zero();
        for (k, slot) in row.iter_mut().enumerate() {
            if let Some(v) = prev.get(k) {
                window += v;
            }
            if k > s {
                if let Some(v) = prev.get(k - s - 1) {
                    window -= v;
                }
            }
            *slot = window.clone();
        }
        rows.push(row);
    }
    rows
}

pub fn bisnomial_row(n: usize, s: usize) -> Vec<BigInt> {
    bisnomial_rows(n, s).pop().expect("at least one row")
}

/// Coefficient of `x^k` in `(1 + x + ... + x^s)^n`; zero unless `0 <= k <= s n`.
pub fn bisnomial(n: usize, k: i64, s: usize) -> BigInt {
    if k < 0 || k as usize > s * n {
        return BigInt::zero();
    }
    bisnomial_row(n, s).swap_remove(k as usize)
}

/// s-Pascal triangle as a [`Triangle`] of arity `s`.
pub fn gen_bisnomial(s: usize, n_max: usize) -> Result<Triangle> {
    if s == 0 {
        return Err(Error::Config("s must be positive".into()));
    }
    let rows = bisnomial_rows(n_max, s)
        .into_iter()
        .map(|r| r.into_iter().map(Rat::from_integer).collect())
        .collect();
    Triangle::new(s, rows)
}

fn prev_at(prev: &[Rat], k: i64) -> Option<&Rat> {
    usize::try_from(k).ok().and_then(|k| prev.get(k))
}

/// Tridiagonal recursive matrix `C(n,k) = C(n-1,k-1) + f_k C(n-1,k) + g_k C(n-1,k+1)`
/// with `C(0,0) = 1`; arity 1.
pub fn gen_recursive(f: &CoeffScheme, g: &CoeffScheme, n_max: usize) -> Result<Triangle> {
    f.require("f", 0, n_max as i64)?;
    g.require("g", 0, n_max as i64)?;
    let mut rows = vec![vec![rat(1)]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n as i64)
            .map(|k| {
                let mut acc = prev_at(prev, k - 1).cloned().unwrap_or_else(Rat::zero);
                if let Some(a) = prev_at(prev, k) {
                    acc += f.at(k).expect("checked") * a;
                }
                if let Some(a) = prev_at(prev, k + 1) {
                    acc += g.at(k).expect("checked") * a;
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    Triangle::new(1, rows)
}

/// Pentadiagonal array with per-index coefficients; arity 2, `A(0,0) = 1`.
pub fn gen_penta(schemes: &PentaSchemes, n_max: usize) -> Result<Triangle> {
    if n_max > 0 {
        schemes.require(2 * n_max as i64)?;
    }
    let named = schemes.named();
    let mut rows = vec![vec![rat(1)]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row =
            (0..=2 * n as i64)
                .map(|k| {
                    // gamma, e, f, g, h multiply A(n-1, k-2 .. k+2).
                    named.iter().zip(-2i64..).fold(
                        Rat::zero(),
                        |acc, ((_, scheme, start), shift)| match prev_at(prev, k + shift) {
                            Some(a) if !a.is_zero() => {
                                acc + PentaSchemes::value(scheme, *start, k) * a
                            }
                            _ => acc,
                        },
                    )
                })
                .collect();
        rows.push(row);
    }
    Triangle::new(2, rows)
}

/// Constant-coefficient pentadiagonal array with the special `k = 0, 1` rows;
/// arity 2, `A(0,0) = 1`.
pub fn gen_const(p: &ConstParams, n_max: usize) -> Triangle {
    let mut rows = vec![vec![rat(1)]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let a = |k: i64| prev_at(prev, k).cloned().unwrap_or_else(Rat::zero);
        let row = (0..=2 * n as i64)
            .map(|k| match k {
                0 => &p.alpha * a(0) + &p.g * a(1) + &p.h * a(2),
                1 => &p.beta * a(0) + &p.f * a(1) + &p.g * a(2) + &p.h * a(3),
                _ => {
                    &p.gamma * a(k - 2)
                        + &p.e * a(k - 1)
                        + &p.f * a(k)
                        + &p.g * a(k + 1)
                        + &p.h * a(k + 2)
                }
            })
            .collect();
        rows.push(row);
    }
    Triangle::new(2, rows).expect("rows have width 2n+1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QPoly;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn bisnomial_examples() {
        assert_eq!(bisnomial_row(2, 2), ints(&[1, 2, 3, 2, 1]));
        assert_eq!(bisnomial_row(3, 2), ints(&[1, 3, 6, 7, 6, 3, 1]));
        assert_eq!(bisnomial_row(4, 1), ints(&[1, 4, 6, 4, 1]));
        assert_eq!(bisnomial(3, 3, 2), BigInt::from(7));
        assert_eq!(bisnomial(3, -1, 2), BigInt::zero());
        assert_eq!(bisnomial(3, 7, 2), BigInt::zero());
        assert_eq!(bisnomial_row(0, 3), ints(&[1]));
    }

    #[test]
    fn bisnomial_matches_polynomial_expansion() {
        for s in 1..=3 {
            let base = QPoly::from_ints(vec![1; s + 1]);
            for n in 0..=15 {
                let expected: Vec<BigInt> = base
                    .pow(n as u32)
                    .coeffs()
                    .iter()
                    .map(|c| c.to_integer())
                    .collect();
                assert_eq!(bisnomial_row(n, s), expected, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn recursive_examples() {
        let motzkin =
            gen_recursive(&CoeffScheme::constant(1), &CoeffScheme::constant(1), 5).unwrap();
        assert_eq!(motzkin.column(0), rats(&[1, 1, 2, 4, 9, 21]));
        let aigner = gen_recursive(
            &CoeffScheme::head_then(&[1], 2),
            &CoeffScheme::constant(1),
            5,
        )
        .unwrap();
        assert_eq!(aigner.column(0), rats(&[1, 1, 2, 5, 14, 42]));
        let pascal =
            gen_recursive(&CoeffScheme::constant(1), &CoeffScheme::constant(0), 4).unwrap();
        assert_eq!(pascal.row(4).unwrap(), rats(&[1, 4, 6, 4, 1]).as_slice());
    }

    #[test]
    fn recursive_rejects_short_table() {
        let f = CoeffScheme::table(0, &[1, 1]);
        let err = gen_recursive(&f, &CoeffScheme::constant(1), 5).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn penta_examples() {
        let two_pascal = gen_penta(&PentaSchemes::constants(1, 1, 1, 0, 0), 6).unwrap();
        assert_eq!(
            two_pascal.row(2).unwrap(),
            rats(&[1, 2, 3, 2, 1]).as_slice()
        );
        for n in 0..=6 {
            let expect: Vec<Rat> = bisnomial_row(n, 2)
                .into_iter()
                .map(Rat::from_integer)
                .collect();
            assert_eq!(two_pascal.row(n).unwrap(), expect.as_slice());
        }

        let only_f = gen_penta(&PentaSchemes::constants(0, 0, 1, 0, 0), 3).unwrap();
        assert_eq!(
            only_f.row(3).unwrap(),
            rats(&[1, 0, 0, 0, 0, 0, 0]).as_slice()
        );

        let ones = gen_penta(&PentaSchemes::constants(1, 1, 1, 1, 1), 2).unwrap();
        assert_eq!(ones.row(1).unwrap(), rats(&[1, 1, 1]).as_slice());
        assert_eq!(ones.get(2, 0), rat(3));
    }

    #[test]
    fn const_examples() {
        let p = ConstParams::from_ints([1, 1, 1, 1, 1, 0, 0]).unwrap();
        let a = gen_const(&p, 12);
        let b = gen_penta(&PentaSchemes::constants(1, 1, 1, 0, 0), 12).unwrap();
        assert_eq!(a, b);

        let motzkin = ConstParams::from_ints([1, 1, 0, 1, 1, 1, 0]).unwrap();
        let m = gen_const(&motzkin, 5);
        assert_eq!(m.column(0), rats(&[1, 1, 2, 4, 9, 21]));
        // Zero tail beyond k = n.
        assert_eq!(m.row(2).unwrap(), rats(&[2, 2, 1, 0, 0]).as_slice());

        let id = gen_const(&ConstParams::from_ints([1, 0, 0, 0, 1, 0, 0]).unwrap(), 2);
        assert_eq!(id.row(1).unwrap(), rats(&[1, 0, 0]).as_slice());
        assert_eq!(id.row(2).unwrap(), rats(&[1, 0, 0, 0, 0]).as_slice());
    }

    #[test]
    fn const_and_penta_agree_when_special_rows_match() {
        // alpha = f and beta = e make the k = 0, 1 rows generic.
        let p = ConstParams::from_ints([2, 3, 1, 3, 2, 1, 1]).unwrap();
        let a = gen_const(&p, 8);
        let b = gen_penta(&PentaSchemes::constants(1, 3, 2, 1, 1), 8).unwrap();
        assert_eq!(a, b);
    }
}
