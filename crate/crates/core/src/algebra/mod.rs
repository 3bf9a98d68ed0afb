//! Exact scalars, dense polynomials in `q`, and small dense matrices.
//!
//! Every value in the crate is an exact rational. The coefficientwise order
//! `f >=_q g` (every coefficient of `f - g` is nonnegative) lives on [`QPoly`].

mod matrix;
mod poly;
pub(crate) mod rat;

pub use matrix::{det_exact, det_exact_int, Matrix};
pub use poly::{gaussian_binomial, poly_arith, poly_geq_q, PolyOp, QOrder, QPoly};
pub use rat::{parse_rat, rat, rat_frac, Rat};
