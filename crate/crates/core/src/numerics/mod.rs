//! Complex scalars, second-order jets, Hermite polynomials and dense
//! complex polynomials.

mod hermite;
mod jet;
mod poly;

pub use hermite::{hermite, hermite_jet, MAX_HERMITE_INDEX};
pub use jet::{Jet2, DEFAULT_DIV_FLOOR, EXP_OVERFLOW_GUARD};
pub use poly::PolyC;

/// Complex scalar used throughout the crate.
pub type Complex = num_complex::Complex64;

/// The imaginary unit.
pub const I: Complex = Complex::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

/// `true` when both components are finite.
#[inline]
pub fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
