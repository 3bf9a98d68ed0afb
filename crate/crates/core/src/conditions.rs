//! Sufficient-condition checkers for the row log-concavity and strong
//! q-log-convexity criteria, plus the cleared `b`-matrix recurrence identity.
//!
//! A condition that fails means the criterion does not apply; it says nothing
//! about whether the property itself fails. Reports use "established" /
//! "not established" accordingly.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::rat::serde_rat;
use crate::algebra::{rat, QPoly, Rat};
use crate::error::Result;
use crate::properties::{is_log_concave, CheckedRange, NumSeq, Property, PropertyReport, Witness};
use crate::triangles::{b_matrix, gen_const, row_gen_fn, ConstParams, PentaSchemes};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Row log-concavity for the pentadiagonal array with per-index coefficients.
    Thm21,
    /// Row log-concavity for the constant-coefficient array.
    Cor22,
    /// Strong q-log-convexity of row generating functions.
    Thm34,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseOutcome {
    pub clause: &'static str,
    pub holds: bool,
    /// Lowest `k` at which the clause fails (index-dependent criteria only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_k: Option<i64>,
    /// Both sides at the failure, or at the single evaluation point for constants.
    #[serde(with = "serde_opt_rat", skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Rat>,
    #[serde(with = "serde_opt_rat", skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Rat>,
}

mod serde_opt_rat {
    use super::Rat;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => super::serde_rat::serialize(r, s),
            None => s.serialize_none(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionOutcome {
    pub id: usize,
    pub established: bool,
    pub clauses: Vec<ClauseOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub criterion: Criterion,
    pub conditions: Vec<ConditionOutcome>,
    /// Standing hypotheses such as log-concavity of the coefficient sequences.
    pub hypotheses: Vec<(String, PropertyReport)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ConditionReport {
    pub fn all_established(&self) -> bool {
        self.conditions.iter().all(|c| c.established)
            && self.hypotheses.iter().all(|(_, r)| r.is_holds())
    }

    pub fn condition(&self, id: usize) -> Option<&ConditionOutcome> {
        self.conditions.iter().find(|c| c.id == id)
    }

    /// First failing clause of condition `id`, if any.
    pub fn failing_clause(&self, id: usize) -> Option<&ClauseOutcome> {
        self.condition(id)?.clauses.iter().find(|c| !c.holds)
    }
}

type Side<V> = fn(&V) -> Rat;

struct Clause<V> {
    text: &'static str,
    lhs: Side<V>,
    rhs: Side<V>,
}

fn clause<V>(text: &'static str, lhs: Side<V>, rhs: Side<V>) -> Clause<V> {
    Clause { text, lhs, rhs }
}

/// Coefficient values at `k - 1`, `k`, `k + 1`.
struct Window {
    c: [[Rat; 3]; 5],
}

impl Window {
    fn at(schemes: &PentaSchemes, k: i64) -> Self {
        let named = schemes.named();
        let c = std::array::from_fn(|s| {
            let (_, scheme, start) = named[s];
            std::array::from_fn(|d| PentaSchemes::value(scheme, start, k - 1 + d as i64))
        });
        Window { c }
    }
}

const GAMMA: usize = 0;
const E: usize = 1;
const F: usize = 2;
const G: usize = 3;
const H: usize = 4;
const M: usize = 0;
const K: usize = 1;
const P: usize = 2;

/// `2 x_k y_k >= x_{k-1} y_{k+1} + x_{k+1} y_{k-1}` style clauses.
macro_rules! cross {
    ($text:literal, $x:ident, $y:ident, $a:ident, $b:ident) => {
        clause::<Window>(
            $text,
            |w| rat(2) * &w.c[$x][K] * &w.c[$y][K],
            |w| &w.c[$x][$a] * &w.c[$y][$b] + &w.c[$x][$b] * &w.c[$y][$a],
        )
    };
}

macro_rules! prod {
    ($text:literal, $x1:ident $d1:ident * $y1:ident $e1:ident >= $x2:ident $d2:ident * $y2:ident $e2:ident) => {
        clause::<Window>(
            $text,
            |w| &w.c[$x1][$d1] * &w.c[$y1][$e1],
            |w| &w.c[$x2][$d2] * &w.c[$y2][$e2],
        )
    };
}

fn thm21_clauses() -> Vec<Vec<Clause<Window>>> {
    vec![
        vec![cross!(
            "2 gamma_k e_k >= gamma_{k-1} e_{k+1} + gamma_{k+1} e_{k-1}",
            GAMMA,
            E,
            M,
            P
        )],
        vec![cross!(
            "2 gamma_k f_k >= gamma_{k-1} f_{k+1} + gamma_{k+1} f_{k-1}",
            GAMMA,
            F,
            M,
            P
        )],
        vec![cross!(
            "2 gamma_k g_k >= gamma_{k-1} g_{k+1} + gamma_{k+1} g_{k-1}",
            GAMMA,
            G,
            M,
            P
        )],
        vec![cross!(
            "2 gamma_k h_k >= gamma_{k-1} h_{k+1} + gamma_{k+1} h_{k-1}",
            GAMMA,
            H,
            M,
            P
        )],
        vec![
            cross!("2 e_k f_k >= e_{k+1} f_{k-1} + e_{k-1} f_{k+1}", E, F, P, M),
            prod!("e_{k+1} e_{k-1} >= gamma_{k+1} f_{k-1}", E P * E M >= GAMMA P * F M),
        ],
        vec![
            cross!("2 e_k g_k >= e_{k+1} g_{k-1} + e_{k-1} g_{k+1}", E, G, P, M),
            prod!("f_{k+1} e_{k-1} >= gamma_{k+1} g_{k-1}", F P * E M >= GAMMA P * G M),
        ],
        vec![
            cross!("2 e_k h_k >= e_{k+1} h_{k-1} + e_{k-1} h_{k+1}", E, H, P, M),
            prod!("g_{k+1} e_{k-1} >= gamma_{k+1} h_{k-1}", G P * E M >= GAMMA P * H M),
        ],
        vec![
            cross!("2 f_k g_k >= f_{k+1} g_{k-1} + f_{k-1} g_{k+1}", F, G, P, M),
            prod!("f_{k+1} f_{k-1} >= e_{k+1} g_{k-1}", F P * F M >= E P * G M),
        ],
        vec![
            cross!("2 f_k h_k >= f_{k+1} h_{k-1} + f_{k-1} h_{k+1}", F, H, P, M),
            prod!("g_{k+1} f_{k-1} >= e_{k+1} h_{k-1}", G P * F M >= E P * H M),
        ],
        vec![
            cross!("2 g_k h_k >= g_{k+1} h_{k-1} + g_{k-1} h_{k+1}", G, H, P, M),
            prod!("g_{k+1} g_{k-1} >= f_{k+1} h_{k-1}", G P * G M >= F P * H M),
        ],
    ]
}

/// Evaluates the ten index-dependent conditions for every `k` in
/// `2..=k_max`, and log-concavity of each coefficient sequence on its own
/// domain up to `k_max + 1`. Values below a sequence's domain start
/// (`gamma` below 2, `e` below 1) count as zero.
pub fn check_thm21(schemes: &PentaSchemes, k_max: i64) -> Result<ConditionReport> {
    let hi = k_max.max(2) + 1;
    schemes.require(hi)?;
    let windows: Vec<(i64, Window)> = (2..=k_max).map(|k| (k, Window::at(schemes, k))).collect();
    let conditions = thm21_clauses()
        .into_iter()
        .enumerate()
        .map(|(i, clauses)| {
            let clauses: Vec<ClauseOutcome> = clauses
                .iter()
                .map(|c| {
                    let failure = windows.iter().find_map(|(k, w)| {
                        let (l, r) = ((c.lhs)(w), (c.rhs)(w));
                        (l < r).then_some((*k, l, r))
                    });
                    match failure {
                        None => ClauseOutcome {
                            clause: c.text,
                            holds: true,
                            failing_k: None,
                            lhs: None,
                            rhs: None,
                        },
                        Some((k, l, r)) => ClauseOutcome {
                            clause: c.text,
                            holds: false,
                            failing_k: Some(k),
                            lhs: Some(l),
                            rhs: Some(r),
                        },
                    }
                })
                .collect();
            ConditionOutcome {
                id: i + 1,
                established: clauses.iter().all(|c| c.holds),
                clauses,
            }
        })
        .collect();
    let mut hypotheses = Vec::new();
    for (name, scheme, start) in schemes.named() {
        let values = (start..=hi)
            .map(|k| scheme.at(k).expect("checked"))
            .collect();
        let seq = NumSeq::new(values, start)?;
        hypotheses.push((
            format!("{name} log-concave on [{start}, {hi}]"),
            is_log_concave(&seq),
        ));
    }
    let mut notes = Vec::new();
    if k_max < 2 {
        notes.push("k_max < 2: no index-dependent conditions were evaluated".to_string());
    }
    Ok(ConditionReport {
        criterion: Criterion::Thm21,
        conditions,
        hypotheses,
        notes,
    })
}

fn evaluate_const(
    criterion: Criterion,
    p: &ConstParams,
    groups: Vec<Vec<Clause<ConstParams>>>,
) -> ConditionReport {
    let conditions = groups
        .into_iter()
        .enumerate()
        .map(|(i, clauses)| {
            let clauses: Vec<ClauseOutcome> = clauses
                .iter()
                .map(|c| {
                    let (l, r) = ((c.lhs)(p), (c.rhs)(p));
                    ClauseOutcome {
                        clause: c.text,
                        holds: l >= r,
                        failing_k: None,
                        lhs: Some(l),
                        rhs: Some(r),
                    }
                })
                .collect();
            ConditionOutcome {
                id: i + 1,
                established: clauses.iter().all(|c| c.holds),
                clauses,
            }
        })
        .collect();
    ConditionReport {
        criterion,
        conditions,
        hypotheses: Vec::new(),
        notes: Vec::new(),
    }
}

type C = ConstParams;

/// Five constant conditions for row log-concavity, evaluated as printed.
///
/// The second clause of condition (5), `2 beta g >= g e + gamma h`, is kept
/// verbatim. When it disagrees with `2 beta g >= alpha f + gamma h` the
/// report carries a note.
pub fn check_cor22(p: &ConstParams) -> ConditionReport {
    let groups: Vec<Vec<Clause<C>>> = vec![
        vec![
            clause("g^2 >= f h", |p: &C| &p.g * &p.g, |p: &C| &p.f * &p.h),
            clause("f >= alpha", |p: &C| p.f.clone(), |p: &C| p.alpha.clone()),
        ],
        vec![
            clause(
                "beta^2 >= alpha gamma",
                |p: &C| &p.beta * &p.beta,
                |p: &C| &p.alpha * &p.gamma,
            ),
            clause(
                "2 beta h >= alpha g",
                |p: &C| rat(2) * &p.beta * &p.h,
                |p: &C| &p.alpha * &p.g,
            ),
        ],
        vec![
            clause(
                "f e >= gamma g",
                |p: &C| &p.f * &p.e,
                |p: &C| &p.gamma * &p.g,
            ),
            clause("f g >= e h", |p: &C| &p.f * &p.g, |p: &C| &p.e * &p.h),
        ],
        vec![
            clause("f^2 >= e g", |p: &C| &p.f * &p.f, |p: &C| &p.e * &p.g),
            clause(
                "e g >= gamma h",
                |p: &C| &p.e * &p.g,
                |p: &C| &p.gamma * &p.h,
            ),
            clause(
                "e^2 >= gamma f",
                |p: &C| &p.e * &p.e,
                |p: &C| &p.gamma * &p.f,
            ),
        ],
        vec![
            clause(
                "2 beta f >= alpha e + gamma g",
                |p: &C| rat(2) * &p.beta * &p.f,
                |p: &C| &p.alpha * &p.e + &p.gamma * &p.g,
            ),
            clause(
                "2 beta g >= g e + gamma h",
                |p: &C| rat(2) * &p.beta * &p.g,
                |p: &C| &p.g * &p.e + &p.gamma * &p.h,
            ),
        ],
    ];
    let mut report = evaluate_const(Criterion::Cor22, p, groups);
    let printed = rat(2) * &p.beta * &p.g >= &p.g * &p.e + &p.gamma * &p.h;
    let alternative = rat(2) * &p.beta * &p.g >= &p.alpha * &p.f + &p.gamma * &p.h;
    if printed != alternative {
        report.notes.push(format!(
            "condition (5) clause `2 beta g >= g e + gamma h` is {} but `2 beta g >= alpha f + gamma h` would be {}",
            if printed { "satisfied" } else { "violated" },
            if alternative { "satisfied" } else { "violated" },
        ));
    }
    report
}

/// Four constant conditions for strong q-log-convexity of the row
/// generating functions; compound chains are split into separate clauses.
pub fn check_thm34(p: &ConstParams) -> ConditionReport {
    let zero = |_: &C| Rat::zero();
    let groups: Vec<Vec<Clause<C>>> = vec![
        vec![
            clause("f >= alpha", |p: &C| p.f.clone(), |p: &C| p.alpha.clone()),
            clause("e >= beta", |p: &C| p.e.clone(), |p: &C| p.beta.clone()),
            clause("g >= 0", |p: &C| p.g.clone(), zero),
            clause("h >= 0", |p: &C| p.h.clone(), zero),
        ],
        vec![
            clause(
                "alpha f >= beta g",
                |p: &C| &p.alpha * &p.f,
                |p: &C| &p.beta * &p.g,
            ),
            clause(
                "beta g >= gamma h",
                |p: &C| &p.beta * &p.g,
                |p: &C| &p.gamma * &p.h,
            ),
            clause("f^2 >= e g", |p: &C| &p.f * &p.f, |p: &C| &p.e * &p.g),
            clause(
                "e g >= gamma h",
                |p: &C| &p.e * &p.g,
                |p: &C| &p.gamma * &p.h,
            ),
        ],
        vec![
            clause(
                "alpha e >= gamma g",
                |p: &C| &p.alpha * &p.e,
                |p: &C| &p.gamma * &p.g,
            ),
            clause(
                "e f >= gamma g",
                |p: &C| &p.e * &p.f,
                |p: &C| &p.gamma * &p.g,
            ),
            clause(
                "beta f >= gamma g",
                |p: &C| &p.beta * &p.f,
                |p: &C| &p.gamma * &p.g,
            ),
        ],
        vec![
            clause(
                "beta e >= gamma f",
                |p: &C| &p.beta * &p.e,
                |p: &C| &p.gamma * &p.f,
            ),
            clause(
                "alpha g >= beta h",
                |p: &C| &p.alpha * &p.g,
                |p: &C| &p.beta * &p.h,
            ),
            clause("g^2 >= f h", |p: &C| &p.g * &p.g, |p: &C| &p.f * &p.h),
            clause("f g >= e h", |p: &C| &p.f * &p.g, |p: &C| &p.e * &p.h),
        ],
    ];
    evaluate_const(Criterion::Thm34, p, groups)
}

/// Checks, for `1 <= n <= n_max`, the tail-sum recurrences multiplied through by `q^2`:
///
/// ```text
/// q^2 b(n,k) = gamma q^4 b(n-1,k-2) + e q^3 b(n-1,k-1) + f q^2 b(n-1,k)
///              + g q b(n-1,k+1) + h b(n-1,k+2)                       (2 <= k <= 2n)
/// q^2 b(n,0) = (alpha q^2 + beta q^3 + gamma q^4) b(n-1,0)
///              + (g q + (f - alpha) q^2 + (e - beta) q^3) b(n-1,1) + h b(n-1,2)
/// ```
///
/// and `b(n,0) = A_n(q)` for every row.
pub fn verify_eq5_recurrence(p: &ConstParams, n_max: usize) -> Result<PropertyReport> {
    let t = gen_const(p, n_max);
    let b = b_matrix(&t, n_max)?;
    let width = b.cols();
    let entry = |n: usize, k: i64| -> QPoly {
        if k < 0 || k as usize >= width {
            QPoly::zero()
        } else {
            b.get(n, k as usize).clone()
        }
    };
    let c = |r: &Rat, power: usize| QPoly::monomial(r.clone(), power);
    let property = Property::Identity("b-recurrence".into());
    let range = CheckedRange::Rows {
        first: 0,
        last: n_max,
    };
    let mismatch = |n: usize, k: usize, expected: &QPoly, actual: &QPoly| {
        PropertyReport::fails(
            property.clone(),
            range.clone(),
            Witness::Mismatch {
                row: n,
                col: k,
                expected: expected.to_string(),
                actual: actual.to_string(),
            },
        )
    };
    for n in 0..=n_max {
        let gf = row_gen_fn(&t, n)?;
        if &gf != b.get(n, 0) {
            return Ok(mismatch(n, 0, &gf, b.get(n, 0)));
        }
        if n == 0 {
            continue;
        }
        let lhs0 = entry(n, 0).shift(2);
        let rhs0 = &(&(&(&c(&p.alpha, 2) + &c(&p.beta, 3)) + &c(&p.gamma, 4)) * &entry(n - 1, 0))
            + &(&(&(&(&c(&p.g, 1) + &c(&(&p.f - &p.alpha), 2)) + &c(&(&p.e - &p.beta), 3))
                * &entry(n - 1, 1))
                + &entry(n - 1, 2).scale(&p.h));
        if lhs0 != rhs0 {
            return Ok(mismatch(n, 0, &rhs0, &lhs0));
        }
        for k in 2..=(2 * n) as i64 {
            let lhs = entry(n, k).shift(2);
            let terms = [
                (&p.gamma, 4, k - 2),
                (&p.e, 3, k - 1),
                (&p.f, 2, k),
                (&p.g, 1, k + 1),
                (&p.h, 0, k + 2),
            ];
            let rhs = terms.iter().fold(QPoly::zero(), |acc, (coef, power, j)| {
                &acc + &(&c(coef, *power) * &entry(n - 1, *j))
            });
            if lhs != rhs {
                return Ok(mismatch(n, k as usize, &rhs, &lhs));
            }
        }
    }
    Ok(PropertyReport::holds(property, range))
}
