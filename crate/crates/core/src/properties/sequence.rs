use num_traits::Signed;

use super::{NumSeq, PolySeq, Property, PropertyReport, Verdict, Witness};
use crate::algebra::{poly_geq_q, QOrder};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Concave,
    Convex,
}

fn check_scalar(s: &NumSeq, shape: Shape) -> PropertyReport {
    let property = match shape {
        Shape::Concave => Property::LogConcave,
        Shape::Convex => Property::LogConvex,
    };
    let x = s.values();
    if let Some((i, v)) = x.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return PropertyReport {
            property,
            range: s.range(),
            verdict: Verdict::PreconditionFailed,
            witness: Some(Witness::NegativeEntry {
                index: s.offset() + i as i64,
                value: v.clone(),
            }),
            notes: vec!["entries must be nonnegative".into()],
        };
    }
    if x.len() < 3 {
        return PropertyReport::holds(property, s.range())
            .with_note("fewer than three terms: holds vacuously");
    }
    for i in 1..x.len() - 1 {
        let lhs = &x[i] * &x[i];
        let rhs = &x[i - 1] * &x[i + 1];
        let ok = match shape {
            Shape::Concave => lhs >= rhs,
            Shape::Convex => lhs <= rhs,
        };
        if !ok {
            let n = s.offset() + i as i64;
            return PropertyReport::fails(property, s.range(), Witness::Triple { n, lhs, rhs });
        }
    }
    PropertyReport::holds(property, s.range())
}

/// `x_n^2 >= x_{n-1} x_{n+1}` at every interior index.
pub fn is_log_concave(s: &NumSeq) -> PropertyReport {
    check_scalar(s, Shape::Concave)
}

/// `x_n^2 <= x_{n-1} x_{n+1}` at every interior index.
pub fn is_log_convex(s: &NumSeq) -> PropertyReport {
    check_scalar(s, Shape::Convex)
}

/// Pairwise polynomial check. For each `1 <= n <= m` with `m + 1` in range,
/// the convex case needs `f_{n-1} f_{m+1} - f_n f_m >=_q 0` and the concave
/// case the reverse. `strong == false` restricts to `m == n`.
fn check_poly(ps: &PolySeq, shape: Shape, strong: bool) -> PropertyReport {
    let property = match (shape, strong) {
        (Shape::Concave, true) => Property::StronglyQLogConcave,
        (Shape::Convex, true) => Property::StronglyQLogConvex,
        (Shape::Concave, false) => Property::QLogConcave,
        (Shape::Convex, false) => Property::QLogConvex,
    };
    let f = ps.polys();
    let len = f.len();
    if len < 3 {
        return PropertyReport::holds(property, ps.range())
            .with_note("fewer than three terms: holds vacuously");
    }
    for n in 1..len - 1 {
        let m_hi = if strong { len - 2 } else { n };
        for m in n..=m_hi {
            let inner = &f[n] * &f[m];
            let outer = &f[n - 1] * &f[m + 1];
            let order = match shape {
                Shape::Concave => poly_geq_q(&inner, &outer),
                Shape::Convex => poly_geq_q(&outer, &inner),
            };
            if let QOrder::Fails { index, value } = order {
                let witness = Witness::PolyPair {
                    n: ps.offset() + n as i64,
                    m: ps.offset() + m as i64,
                    coeff_index: index,
                    value,
                };
                return PropertyReport::fails(property, ps.range(), witness);
            }
        }
    }
    PropertyReport::holds(property, ps.range())
}

/// `f_n f_m <=_q f_{n-1} f_{m+1}` for all `m >= n >= 1` in range.
pub fn is_strongly_q_log_convex(ps: &PolySeq) -> PropertyReport {
    check_poly(ps, Shape::Convex, true)
}

/// `f_n f_m >=_q f_{n-1} f_{m+1}` for all `m >= n >= 1` in range.
pub fn is_strongly_q_log_concave(ps: &PolySeq) -> PropertyReport {
    check_poly(ps, Shape::Concave, true)
}

pub fn is_q_log_convex(ps: &PolySeq) -> PropertyReport {
    check_poly(ps, Shape::Convex, false)
}

pub fn is_q_log_concave(ps: &PolySeq) -> PropertyReport {
    check_poly(ps, Shape::Concave, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gaussian_binomial, rat, QPoly};

    fn seq(v: &[i64]) -> NumSeq {
        NumSeq::from_ints(v.iter().copied()).unwrap()
    }

    fn polys(v: &[&[i64]]) -> PolySeq {
        PolySeq::new(
            v.iter()
                .map(|c| QPoly::from_ints(c.iter().copied()))
                .collect(),
            0,
        )
        .unwrap()
    }

    #[test]
    fn log_concave_examples() {
        assert!(is_log_concave(&seq(&[1, 3, 6, 7, 6, 3, 1])).is_holds());
        assert!(is_log_concave(&seq(&[1, 4, 6, 4, 1])).is_holds());
        let r = is_log_concave(&seq(&[1, 1, 2]));
        assert_eq!(r.verdict, Verdict::Fails);
        assert_eq!(
            r.witness,
            Some(Witness::Triple {
                n: 1,
                lhs: rat(1),
                rhs: rat(2)
            })
        );
    }

    #[test]
    fn log_convex_examples() {
        assert!(is_log_convex(&seq(&[1, 1, 2, 5, 14, 42])).is_holds());
        let r = is_log_convex(&seq(&[1, 2, 1]));
        assert!(matches!(r.witness, Some(Witness::Triple { n: 1, .. })));
        assert!(is_log_convex(&seq(&[3, 3, 3])).is_holds());
    }

    #[test]
    fn short_and_negative_sequences() {
        let r = is_log_concave(&seq(&[5, 1]));
        assert!(r.is_holds());
        assert!(!r.notes.is_empty());
        let r = is_log_convex(&seq(&[1, -1, 4]));
        assert_eq!(r.verdict, Verdict::PreconditionFailed);
        assert_eq!(
            r.witness,
            Some(Witness::NegativeEntry {
                index: 1,
                value: rat(-1)
            })
        );
    }

    #[test]
    fn witness_uses_offset() {
        let s = NumSeq::new(vec![rat(1), rat(1), rat(2)], 10).unwrap();
        assert!(matches!(
            is_log_concave(&s).witness,
            Some(Witness::Triple { n: 11, .. })
        ));
    }

    #[test]
    fn strong_q_convex_examples() {
        assert!(is_strongly_q_log_convex(&polys(&[&[1], &[1], &[1], &[1]])).is_holds());
        let r = is_strongly_q_log_convex(&polys(&[&[1], &[1, 1], &[1]]));
        // f0 f2 - f1^2 = -2q - q^2
        assert_eq!(
            r.witness,
            Some(Witness::PolyPair {
                n: 1,
                m: 1,
                coeff_index: 1,
                value: rat(-2)
            })
        );
    }

    #[test]
    fn strong_q_concave_examples() {
        let binom: Vec<QPoly> = (0..8).map(|k| QPoly::from_ints([1, 1]).pow(k)).collect();
        let ps = PolySeq::new(binom, 0).unwrap();
        assert!(is_strongly_q_log_concave(&ps).is_holds());
        assert!(is_strongly_q_log_convex(&ps).is_holds());
        let gauss = PolySeq::new((2..=8).map(|n| gaussian_binomial(n, 2)).collect(), 2).unwrap();
        assert!(is_strongly_q_log_concave(&gauss).is_holds());
        assert_eq!(
            is_strongly_q_log_concave(&polys(&[&[1], &[1], &[1, 1]])).verdict,
            Verdict::Fails
        );
    }

    #[test]
    fn weak_variants() {
        let powers = PolySeq::new((0..6).map(|k| QPoly::monomial(rat(1), k)).collect(), 0).unwrap();
        assert!(is_q_log_convex(&powers).is_holds());
        assert!(is_q_log_concave(&powers).is_holds());
        // q-log-convex but not strongly: only the m == n comparisons are made.
        let ps = polys(&[&[1, 0, 3], &[1, 1, 1], &[1, 2, 1], &[3, 1, 3]]);
        assert!(is_q_log_convex(&ps).is_holds());
        assert!(!is_strongly_q_log_convex(&ps).is_holds());
    }
}
