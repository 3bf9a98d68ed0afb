//! Property checkers over finite data: log-concavity and log-convexity of
//! sequences, (strong) q-log-concavity and q-log-convexity of polynomial
//! sequences, and total positivity of matrices.
//!
//! Every checker returns a [`PropertyReport`]. A report never claims more than
//! the finite range it inspected, and a failing report always carries a
//! witness that can be re-checked by hand.

mod matrix;
mod sequence;

use std::fmt;

use serde::Serialize;

use crate::algebra::rat::serde_rat;
use crate::algebra::{parse_rat, QPoly, Rat};
use crate::error::{Error, Result};

pub use matrix::{hankel, hankel_rect, is_pf_r, is_q_tp2, is_tp_r, toeplitz};
pub use sequence::{
    is_log_concave, is_log_convex, is_q_log_concave, is_q_log_convex, is_strongly_q_log_concave,
    is_strongly_q_log_convex,
};

/// Finite sequence of rationals; `values[i]` is the term with index `offset + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumSeq {
    values: Vec<Rat>,
    offset: i64,
}

impl NumSeq {
    pub fn new(values: Vec<Rat>, offset: i64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Config("a sequence needs at least one value".into()));
        }
        Ok(NumSeq { values, offset })
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        Self::new(
            values
                .into_iter()
                .map(|v| Rat::from_integer(v.into()))
                .collect(),
            0,
        )
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn range(&self) -> CheckedRange {
        CheckedRange::Sequence {
            first: self.offset,
            last: self.offset + self.values.len() as i64 - 1,
        }
    }
}

/// Finite sequence of polynomials; `polys[i]` is `f_{offset + i}(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolySeq {
    polys: Vec<QPoly>,
    offset: i64,
}

impl PolySeq {
    pub fn new(polys: Vec<QPoly>, offset: i64) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::Config(
                "a polynomial sequence needs at least one entry".into(),
            ));
        }
        Ok(PolySeq { polys, offset })
    }

    pub fn polys(&self) -> &[QPoly] {
        &self.polys
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// First `len` entries (same offset).
    pub fn prefix(&self, len: usize) -> Result<PolySeq> {
        if len > self.polys.len() {
            return Err(Error::Range {
                index: self.offset + len as i64 - 1,
                available: format!(
                    "{} polynomials starting at {}",
                    self.polys.len(),
                    self.offset
                ),
            });
        }
        PolySeq::new(self.polys[..len].to_vec(), self.offset)
    }

    /// One polynomial per line, coefficients lowest degree first, `0` for zero.
    pub fn to_text(&self) -> String {
        self.polys.iter().map(|p| format!("{p}\n")).collect()
    }

    /// Inverse of [`PolySeq::to_text`]; blank and `#` lines are skipped and
    /// the result has offset 0.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut polys = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let coeffs = line
                .split_whitespace()
                .map(|tok| parse_rat(tok, idx + 1))
                .collect::<Result<Vec<_>>>()?;
            polys.push(QPoly::new(coeffs));
        }
        if polys.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "no polynomials found".into(),
            });
        }
        PolySeq::new(polys, 0)
    }

    fn range(&self) -> CheckedRange {
        CheckedRange::Sequence {
            first: self.offset,
            last: self.offset + self.polys.len() as i64 - 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Property {
    LogConcave,
    LogConvex,
    QLogConcave,
    QLogConvex,
    StronglyQLogConcave,
    StronglyQLogConvex,
    TotallyPositive(usize),
    PolyaFrequency(usize),
    QTp2,
    /// Exact equality of two matrices or polynomial identities, by name.
    Identity(String),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::LogConcave => f.write_str("log-concave"),
            Property::LogConvex => f.write_str("log-convex"),
            Property::QLogConcave => f.write_str("q-log-concave"),
            Property::QLogConvex => f.write_str("q-log-convex"),
            Property::StronglyQLogConcave => f.write_str("strongly-q-log-concave"),
            Property::StronglyQLogConvex => f.write_str("strongly-q-log-convex"),
            Property::TotallyPositive(r) => write!(f, "TP{r}"),
            Property::PolyaFrequency(r) => write!(f, "PF{r}"),
            Property::QTp2 => f.write_str("q-TP2"),
            Property::Identity(name) => write!(f, "identity:{name}"),
        }
    }
}

impl Serialize for Property {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsOnRange,
    Fails,
    /// Input violated a checker precondition (e.g. a negative entry); the
    /// property itself was not evaluated.
    PreconditionFailed,
    /// A hypothesis gate failed, so the conclusion does not apply.
    Inapplicable,
}

/// What a report certifies. All ranges are inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CheckedRange {
    Sequence {
        first: i64,
        last: i64,
    },
    Matrix {
        rows: usize,
        cols: usize,
        max_order: usize,
    },
    Rows {
        first: usize,
        last: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    NegativeEntry {
        index: i64,
        #[serde(with = "serde_rat")]
        value: Rat,
    },
    /// `lhs` is `x_n^2`, `rhs` is `x_{n-1} x_{n+1}`.
    Triple {
        n: i64,
        #[serde(with = "serde_rat")]
        lhs: Rat,
        #[serde(with = "serde_rat")]
        rhs: Rat,
    },
    /// Negative coefficient of `q^coeff_index` in the difference that must be
    /// `>=_q 0` for the pair `(n, m)`.
    PolyPair {
        n: i64,
        m: i64,
        coeff_index: usize,
        #[serde(with = "serde_rat")]
        value: Rat,
    },
    Minor {
        rows: Vec<usize>,
        cols: Vec<usize>,
        #[serde(with = "serde_rat")]
        value: Rat,
    },
    PolyMinor {
        rows: Vec<usize>,
        cols: Vec<usize>,
        coeff_index: usize,
        #[serde(with = "serde_rat")]
        value: Rat,
    },
    /// A matrix or recurrence identity that does not hold at `(row, col)`.
    Mismatch {
        row: usize,
        col: usize,
        expected: String,
        actual: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: Property,
    pub range: CheckedRange,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn holds(property: Property, range: CheckedRange) -> Self {
        PropertyReport {
            property,
            range,
            verdict: Verdict::HoldsOnRange,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn fails(property: Property, range: CheckedRange, witness: Witness) -> Self {
        PropertyReport {
            property,
            range,
            verdict: Verdict::Fails,
            witness: Some(witness),
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::HoldsOnRange
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::HoldsOnRange => "holds",
            Verdict::Fails => "FAILS",
            Verdict::PreconditionFailed => "precondition failed",
            Verdict::Inapplicable => "inapplicable",
        };
        write!(f, "{}: {verdict}", self.property)?;
        match &self.range {
            CheckedRange::Sequence { first, last } => write!(f, " on [{first}, {last}]")?,
            CheckedRange::Matrix {
                rows,
                cols,
                max_order,
            } => write!(f, " on {rows}x{cols}, orders <= {max_order}")?,
            CheckedRange::Rows { first, last } => write!(f, " on rows [{first}, {last}]")?,
        }
        if let Some(w) = &self.witness {
            write!(
                f,
                " (witness: {})",
                serde_json::to_string(w).unwrap_or_default()
            )?;
        }
        Ok(())
    }
}
