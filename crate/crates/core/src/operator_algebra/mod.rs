//! Exact symbolic algebra of the operator families `xᵃ` and `p xᵃ p` under
//! commutation with `F = x²p + px²`, the nested-commutator expansion of
//! `e^{εF} h e^{-εF}`, and the power series realization of `e^{εF}` on
//! polynomials.
//!
//! `F` itself is not representable in either family and only enters through
//! [`commute_f`]. All coefficients are exact complex rationals, and ε is kept
//! symbolic as the grading of [`GradedOperator`].

mod bch;
mod exact;
mod lemma;
pub mod oracle;
mod terms;

pub use bch::{bch_series, target_expansion, MAX_BCH_ORDER, MAX_TARGET_ORDER};
pub use exact::ExactComplex;
pub use lemma::{
    lemma_closed_form, lemma_series_sum, LemmaSeries, DEFAULT_LEMMA_TERMS, MAX_LEMMA_TERMS,
};
pub use terms::{commute_f, GradedOperator, OpTerm, OperatorSum, TermKind};
