//! The bi^s-nomial transform `B_n = sum_k C(n,k)_s f_k`, the window-sum
//! transform, and a symbolic expander for `B_{n-1} B_{m+1} - B_n B_m`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{QPoly, Rat};
use crate::error::{Error, Result};
use crate::properties::{
    is_strongly_q_log_concave, is_strongly_q_log_convex, PolySeq, PropertyReport, Verdict,
};
use crate::triangles::bisnomial_rows;

/// Sparse symmetric bilinear form `sum c_ij f_i f_j` with keys `i <= j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BilinearForm {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BilinearForm {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c f_i f_j`; the pair is normalized and zero results are dropped.
    pub fn add(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (i.min(j), i.max(j));
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), i64)>>(terms: I) -> Self {
        let mut form = Self::new();
        for ((i, j), c) in terms {
            form.add(i, j, &BigInt::from(c));
        }
        form
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.terms
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.terms
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest symbol index that appears, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Substitutes `f_i = fs[i]`; missing symbols are an error.
    pub fn evaluate(&self, fs: &[QPoly]) -> Result<QPoly> {
        if let Some(j) = self.max_index() {
            if j >= fs.len() {
                return Err(Error::Range {
                    index: j as i64,
                    available: format!("{} polynomials", fs.len()),
                });
            }
        }
        Ok(self.terms.iter().fold(QPoly::zero(), |acc, (&(i, j), c)| {
            &acc + &(&fs[i] * &fs[j]).scale(&Rat::from_integer(c.clone()))
        }))
    }

    /// One `i j coeff` line per term in key order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut form = Self::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(err(format!("expected `i j coeff`, got {line:?}")));
            }
            let i: usize = parts[0].parse().map_err(|e| err(format!("{e}")))?;
            let j: usize = parts[1].parse().map_err(|e| err(format!("{e}")))?;
            let c: BigInt = parts[2].parse().map_err(|e| err(format!("{e}")))?;
            form.add(i, j, &c);
        }
        Ok(form)
    }
}

impl fmt::Display for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), c) in &self.terms {
            writeln!(f, "{i} {j} {c}")?;
        }
        Ok(())
    }
}

impl Serialize for BilinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((i, j), c) in &self.terms {
            seq.serialize_element(&(i, j, c.to_string()))?;
        }
        seq.end()
    }
}

fn check_s(s: usize) -> Result<()> {
    if s == 0 {
        return Err(Error::Config("s must be positive".into()));
    }
    Ok(())
}

/// `B_0..=B_{n_max}` from `f_0..=f_{s n_max}`, indexing the input by position.
pub fn bisnomial_transform(ps: &PolySeq, s: usize, n_max: usize) -> Result<PolySeq> {
    check_s(s)?;
    let need = s * n_max + 1;
    if ps.len() < need {
        return Err(Error::Range {
            index: ps.offset() + need as i64 - 1,
            available: format!(
                "{} polynomials; the transform up to n = {n_max} with s = {s} needs {need}",
                ps.len()
            ),
        });
    }
    let f = ps.polys();
    let out = bisnomial_rows(n_max, s)
        .iter()
        .map(|row| {
            row.iter().zip(f).fold(QPoly::zero(), |acc, (c, fk)| {
                if c.is_zero() {
                    acc
                } else {
                    &acc + &fk.scale(&Rat::from_integer(c.clone()))
                }
            })
        })
        .collect();
    PolySeq::new(out, 0)
}

/// `y_k = x_k + ... + x_{k+s}`; output has `len - s` terms and the input offset.
pub fn window_sum(ps: &PolySeq, s: usize) -> Result<PolySeq> {
    if ps.len() < s + 1 {
        return Err(Error::Range {
            index: ps.offset() + s as i64,
            available: format!(
                "{} polynomials; window sums with s = {s} need {}",
                ps.len(),
                s + 1
            ),
        });
    }
    let x = ps.polys();
    let out = x
        .windows(s + 1)
        .map(|w| w.iter().fold(QPoly::zero(), |acc, p| &acc + p))
        .collect();
    PolySeq::new(out, ps.offset())
}

/// Symbolic expansion of `B_{n-1} B_{m+1} - B_n B_m` over the formal `f_i`.
pub fn transform_minor_form(n: usize, m: usize, s: usize) -> Result<BilinearForm> {
    check_s(s)?;
    if n == 0 || m < n {
        return Err(Error::Config(format!(
            "need 1 <= n <= m, got n = {n}, m = {m}"
        )));
    }
    let rows = bisnomial_rows(m + 1, s);
    let mut form = BilinearForm::new();
    let mut add_product = |a: &[BigInt], b: &[BigInt], sign: i64| {
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                form.add(i, j, &(x * y * sign));
            }
        }
    };
    add_product(&rows[n - 1], &rows[m + 1], 1);
    add_product(&rows[n], &rows[m], -1);
    Ok(form)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Convex,
    Concave,
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convex" => Ok(Direction::Convex),
            "concave" => Ok(Direction::Concave),
            other => Err(Error::Config(format!(
                "unknown direction {other:?} (convex|concave)"
            ))),
        }
    }
}

impl Direction {
    pub fn check(self, ps: &PolySeq) -> PropertyReport {
        match self {
            Direction::Convex => is_strongly_q_log_convex(ps),
            Direction::Concave => is_strongly_q_log_concave(ps),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreservationReport {
    pub direction: Direction,
    pub s: usize,
    pub n_max: usize,
    pub verdict: Verdict,
    /// Input property on the prefix the transform consumes.
    pub precondition: PropertyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transformed: Option<PolySeq>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PropertyReport>,
}

impl PreservationReport {
    pub fn output_holds(&self) -> bool {
        self.output.as_ref().is_some_and(PropertyReport::is_holds)
    }
}

/// Checks the input on `f_0..=f_{s n_max}`, transforms it, and checks
/// `B_0..=B_{n_max}` for the same property. A failed input check makes the
/// verdict inapplicable and skips the transform.
pub fn check_preservation(
    ps: &PolySeq,
    s: usize,
    n_max: usize,
    direction: Direction,
) -> Result<PreservationReport> {
    check_s(s)?;
    let used = ps.prefix(s * n_max + 1)?;
    let precondition = direction.check(&used);
    if !precondition.is_holds() {
        return Ok(PreservationReport {
            direction,
            s,
            n_max,
            verdict: Verdict::Inapplicable,
            precondition,
            transformed: None,
            output: None,
        });
    }
    let transformed = bisnomial_transform(&used, s, n_max)?;
    let output = direction.check(&transformed);
    Ok(PreservationReport {
        direction,
        s,
        n_max,
        verdict: output.verdict,
        precondition,
        transformed: Some(transformed),
        output: Some(output),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gaussian_binomial, rat};
    use crate::triangles::{preset, row_gen_fns};
    use proptest::prelude::*;

    fn consts(v: i64, len: usize) -> PolySeq {
        PolySeq::new(vec![QPoly::from_ints([v]); len], 0).unwrap()
    }

    fn binomial(n: usize, k: usize) -> BigInt {
        (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn transform_examples() {
        let b = bisnomial_transform(&consts(1, 21), 2, 10).unwrap();
        for (n, p) in b.polys().iter().enumerate() {
            assert_eq!(
                p,
                &QPoly::constant(Rat::from_integer(BigInt::from(3).pow(n as u32)))
            );
        }
        let powers: Vec<QPoly> = (0..21).map(|k| QPoly::monomial(rat(1), k)).collect();
        let b = bisnomial_transform(&PolySeq::new(powers, 0).unwrap(), 2, 10).unwrap();
        let base = QPoly::from_ints([1, 1, 1]);
        for (n, p) in b.polys().iter().enumerate() {
            assert_eq!(p, &base.pow(n as u32));
        }
        let fs: Vec<QPoly> = (0..3).map(|k| QPoly::from_ints([k, 1, 2 * k])).collect();
        let b = bisnomial_transform(&PolySeq::new(fs.clone(), 0).unwrap(), 2, 1).unwrap();
        assert_eq!(b.polys()[1], &(&fs[0] + &fs[1]) + &fs[2]);
    }

    #[test]
    fn transform_too_short() {
        let err = bisnomial_transform(&consts(1, 20), 2, 10).unwrap_err();
        assert!(err.to_string().contains("needs 21"), "{err}");
    }

    #[test]
    fn window_sum_examples() {
        let y = window_sum(&consts(1, 3), 1).unwrap();
        assert_eq!(y.polys(), &[QPoly::from_ints([2]), QPoly::from_ints([2])]);
        let fs: Vec<QPoly> = (1..=4).map(|k| QPoly::from_ints([k, k * k])).collect();
        let y = window_sum(&PolySeq::new(fs.clone(), 0).unwrap(), 2).unwrap();
        assert_eq!(y.polys()[0], &(&fs[0] + &fs[1]) + &fs[2]);
        assert_eq!(y.polys()[1], &(&fs[1] + &fs[2]) + &fs[3]);
        assert!(window_sum(&consts(1, 2), 2).is_err());
    }

    #[test]
    fn window_sum_keeps_motzkin_convex() {
        let t = preset("motzkin", None).unwrap().generate(12).unwrap();
        let a = row_gen_fns(&t);
        for s in 1..=2 {
            assert!(is_strongly_q_log_convex(&window_sum(&a, s).unwrap()).is_holds());
        }
    }

    #[test]
    fn minor_form_examples() {
        let f11 = transform_minor_form(1, 1, 2).unwrap();
        let expected = BilinearForm::from_terms([
            ((0, 2), 1),
            ((1, 1), -1),
            ((0, 3), 2),
            ((1, 2), -2),
            ((0, 4), 1),
            ((2, 2), -1),
        ]);
        assert_eq!(f11, expected);
        assert_eq!(
            transform_minor_form(1, 1, 1).unwrap(),
            BilinearForm::from_terms([((0, 2), 1), ((1, 1), -1)])
        );
        assert!(transform_minor_form(0, 1, 2).is_err());
        assert!(transform_minor_form(2, 1, 2).is_err());
    }

    #[test]
    fn form_text_round_trip() {
        let f = transform_minor_form(2, 3, 3).unwrap();
        assert_eq!(BilinearForm::from_text(&f.to_text()).unwrap(), f);
        assert!(BilinearForm::from_text("0 1\n").is_err());
    }

    #[test]
    fn s1_is_binomial_transform() {
        let fs: Vec<QPoly> = (0..12)
            .map(|k| QPoly::from_ints([k * k - 3, 1, k]))
            .collect();
        let ps = PolySeq::new(fs.clone(), 0).unwrap();
        let b = bisnomial_transform(&ps, 1, 11).unwrap();
        for n in 0..=11 {
            let direct = (0..=n).fold(QPoly::zero(), |acc, k| {
                &acc + &fs[k].scale(&Rat::from_integer(binomial(n, k)))
            });
            assert_eq!(b.polys()[n], direct);
        }
    }

    #[test]
    fn preservation_examples() {
        let t = preset("aigner_catalan", None)
            .unwrap()
            .generate(20)
            .unwrap();
        let a = row_gen_fns(&t);
        let r = check_preservation(&a, 2, 10, Direction::Convex).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsOnRange);

        let ones: Vec<QPoly> = (0..31).map(|k| QPoly::from_ints([1, 1]).pow(k)).collect();
        let ones = PolySeq::new(ones, 0).unwrap();
        for s in 1..=3 {
            let r = check_preservation(&ones, s, 10, Direction::Concave).unwrap();
            assert!(r.output_holds());
        }

        let gauss: Vec<QPoly> = (2..=14).map(|n| gaussian_binomial(n, 2)).collect();
        let gauss = PolySeq::new(gauss, 2).unwrap();
        let r = check_preservation(&gauss, 1, 10, Direction::Concave).unwrap();
        assert!(r.precondition.is_holds());
        assert!(r.output_holds());
    }

    #[test]
    fn failed_precondition_is_inapplicable() {
        let ps = PolySeq::new(
            [1, 5, 1, 1, 1]
                .iter()
                .map(|&v| QPoly::from_ints([v]))
                .collect(),
            0,
        )
        .unwrap();
        let r = check_preservation(&ps, 1, 4, Direction::Convex).unwrap();
        assert_eq!(r.verdict, Verdict::Inapplicable);
        assert!(r.transformed.is_none());
    }

    proptest! {
        #[test]
        fn minor_form_matches_concrete(
            s in 1usize..=3,
            n in 1usize..=4,
            dm in 0usize..=2,
            seed in prop::collection::vec(prop::collection::vec(-4i64..=4, 1..4), 20),
        ) {
            let m = n + dm;
            let need = s * (m + 1) + 1;
            let fs: Vec<QPoly> = (0..need).map(|i| QPoly::from_ints(seed[i % seed.len()].iter().map(|c| c + i as i64))).collect();
            let b = bisnomial_transform(&PolySeq::new(fs.clone(), 0).unwrap(), s, m + 1).unwrap();
            let b = b.polys();
            let concrete = &(&b[n - 1] * &b[m + 1]) - &(&b[n] * &b[m]);
            let symbolic = transform_minor_form(n, m, s).unwrap().evaluate(&fs).unwrap();
            prop_assert_eq!(symbolic, concrete);
        }
    }
}
