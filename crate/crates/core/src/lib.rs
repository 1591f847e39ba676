//! Exact eigenstates, operator actions and contour inner products of the
//! PT-symmetric Hamiltonian `H = ½ p s⁴ p + 4ε² s² + x²/(2s²)`,
//! `s = 1 + 2iεx`, which is isospectral to the harmonic oscillator.
//!
//! * [`numerics`]: complex jets, Hermite polynomials, dense polynomials.
//! * [`pt_model`]: the system, its eigenstates, `H`, PT, C and `e^{aεF}`.
//! * [`contour`]: the path `z(q) = q/(1 - 2iεq)` and Gram matrices along it.
//! * [`operator_algebra`]: exact commutator algebra and the lemma series.
//! * [`spectral`]: finite-difference spectrum of the Hermitian partner.

pub mod contour;
pub mod error;
pub mod format;
pub mod numerics;
pub mod operator_algebra;
pub mod pt_model;
pub mod quadrature;
pub mod spectral;

pub use contour::{
    contour_point, cpt_norm, cpt_pairing, export_contour, gram_matrix, inner_product, ContourSample,
    ContourTable, GramReport,
};
pub use error::{Error, Result};
pub use numerics::{hermite, hermite_jet, Complex, Jet2, PolyC};
pub use operator_algebra::{
    bch_series, commute_f, lemma_closed_form, lemma_series_sum, target_expansion,
    ExactComplex, GradedOperator, LemmaSeries, OpTerm, OperatorSum, TermKind,
};
pub use pt_model::{pt_apply, pt_reflect, sample_grid, EigenState, PtSystem};
pub use quadrature::QuadratureRule;
pub use spectral::{
    discretize_h, eigenvalues_tridiag, ConvergenceStudy, Grid1D, TridiagSym,
};
