//! Triangular arrays: bi^s-nomial coefficients, the tridiagonal recursive
//! matrix, the pentadiagonal array and its constant-coefficient special case,
//! named presets, and the auxiliary matrices used to study row generating
//! functions (`b`-matrix, `T`, `J`).

mod aux;
mod generate;
mod io;
pub mod oracles;
mod presets;
mod scheme;

use serde::Serialize;

use crate::algebra::rat::serde_rat;
use crate::algebra::Rat;
use crate::error::{Error, Result};

pub use aux::{
    a_bar_matrix, b_matrix, check_b_factorization, check_j_factorization, j_matrix, row_gen_fn,
    row_gen_fns, rows_log_concave, t_matrix, triangle_matrix,
};
pub use generate::{
    bisnomial, bisnomial_row, bisnomial_rows, gen_bisnomial, gen_const, gen_penta, gen_recursive,
};
pub use presets::{preset, Generator, Preset, PRESET_NAMES};
pub use scheme::{CoeffScheme, ConstParams, PentaSchemes};

/// Jagged triangular array; row `n` has exactly `arity * n + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangle {
    arity: usize,
    #[serde(serialize_with = "serialize_rows")]
    rows: Vec<Vec<Rat>>,
}

fn serialize_rows<S: serde::Serializer>(rows: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Row<'a>(&'a [Rat]);
    impl Serialize for Row<'_> {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serde_rat::vec::serialize(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in rows {
        seq.serialize_element(&Row(r))?;
    }
    seq.end()
}

impl Triangle {
    pub fn new(arity: usize, rows: Vec<Vec<Rat>>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Config("arity must be positive".into()));
        }
        if rows.is_empty() {
            return Err(Error::Config("a triangle needs at least one row".into()));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != arity * n + 1 {
                return Err(Error::Dimension(format!(
                    "row {n} has {} entries, expected {} at arity {arity}",
                    row.len(),
                    arity * n + 1
                )));
            }
        }
        Ok(Triangle { arity, rows })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Result<&[Rat]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Range {
                index: n as i64,
                available: format!("rows 0..={}", self.n_max()),
            })
    }

    /// Entry `(n, k)`, zero outside the stored shape.
    pub fn get(&self, n: usize, k: usize) -> Rat {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(|| Rat::from_integer(0.into()))
    }

    pub fn column(&self, k: usize) -> Vec<Rat> {
        (0..self.rows.len()).map(|n| self.get(n, k)).collect()
    }

    /// Keeps rows `0..=n_max`.
    pub fn truncate(&self, n_max: usize) -> Triangle {
        Triangle {
            arity: self.arity,
            rows: self.rows[..=n_max.min(self.n_max())].to_vec(),
        }
    }

    pub fn to_text(&self) -> String {
        io::to_text(self)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        io::from_text(text)
    }
}
