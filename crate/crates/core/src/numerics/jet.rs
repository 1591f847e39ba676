use std::ops::{Add, Mul, Neg, Sub};

use super::Complex;
use crate::error::{Error, Result};

/// Magnitude below which a jet is treated as a zero divisor.
pub const DEFAULT_DIV_FLOOR: f64 = 1e-300;

/// Largest real part accepted by [`Jet2::exp`].
pub const EXP_OVERFLOW_GUARD: f64 = 700.0;

/// Value, first derivative and second derivative of a complex function at a
/// point.
///
/// Arithmetic on jets follows the Leibniz and chain rules through second
/// order, so composing jets evaluates a differential operator of order two
/// exactly (up to rounding) without finite differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet2 {
    pub v: Complex,
    pub d1: Complex,
    pub d2: Complex,
}

impl Jet2 {
    pub const fn new(v: Complex, d1: Complex, d2: Complex) -> Self {
        Self { v, d1, d2 }
    }

    /// Lift of a constant: both derivatives vanish.
    pub fn constant(v: Complex) -> Self {
        Self::new(v, Complex::new(0.0, 0.0), Complex::new(0.0, 0.0))
    }

    /// Lift of the identity function at `x`.
    pub fn variable(x: Complex) -> Self {
        Self::new(x, Complex::new(1.0, 0.0), Complex::new(0.0, 0.0))
    }

    pub fn scale(self, k: Complex) -> Self {
        Self::new(self.v * k, self.d1 * k, self.d2 * k)
    }

    pub fn is_finite(&self) -> bool {
        super::is_finite(self.v) && super::is_finite(self.d1) && super::is_finite(self.d2)
    }

    /// Quotient `self / rhs` with the default zero-divisor floor.
    pub fn checked_div(self, rhs: Jet2) -> Result<Jet2> {
        self.checked_div_with_floor(rhs, DEFAULT_DIV_FLOOR)
    }

    pub fn checked_div_with_floor(self, rhs: Jet2, floor: f64) -> Result<Jet2> {
        let magnitude = rhs.v.norm();
        if !(magnitude > floor) {
            return Err(Error::DivisionByZeroJet { magnitude, floor });
        }
        let inv = rhs.v.inv();
        let v = self.v * inv;
        let d1 = (self.d1 - v * rhs.d1) * inv;
        let d2 = (self.d2 - d1 * rhs.d1 * 2.0 - v * rhs.d2) * inv;
        Ok(Jet2::new(v, d1, d2))
    }

    /// `1 / self`.
    pub fn recip(self) -> Result<Jet2> {
        Jet2::constant(Complex::new(1.0, 0.0)).checked_div(self)
    }

    /// Jet of `exp` composed with `self`.
    pub fn exp(self) -> Result<Jet2> {
        if self.v.re > EXP_OVERFLOW_GUARD {
            return Err(Error::Overflow(self.v.re));
        }
        let v = self.v.exp();
        Ok(Jet2::new(
            v,
            self.d1 * v,
            (self.d2 + self.d1 * self.d1) * v,
        ))
    }

    /// Integer power through repeated multiplication.
    pub fn powi(self, n: u32) -> Jet2 {
        let mut acc = Jet2::constant(Complex::new(1.0, 0.0));
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Jet2) -> Jet2 {
        Jet2::new(self.v + rhs.v, self.d1 + rhs.d1, self.d2 + rhs.d2)
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        Jet2::new(self.v - rhs.v, self.d1 - rhs.d1, self.d2 - rhs.d2)
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2::new(-self.v, -self.d1, -self.d2)
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        Jet2::new(
            self.v * rhs.v,
            self.d1 * rhs.v + self.v * rhs.d1,
            self.d2 * rhs.v + self.d1 * rhs.d1 * 2.0 + self.v * rhs.d2,
        )
    }
}

impl Mul<Complex> for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Complex) -> Jet2 {
        self.scale(rhs)
    }
}

impl Add<Complex> for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Complex) -> Jet2 {
        Jet2::new(self.v + rhs, self.d1, self.d2)
    }
}
