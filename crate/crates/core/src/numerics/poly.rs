use std::ops::{Add, Mul};

use super::Complex;

/// Dense complex polynomial with coefficients in ascending powers.
///
/// Trailing zero coefficients are trimmed on construction, so the zero
/// polynomial has an empty coefficient list and `degree()` is `None`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolyC {
    coeffs: Vec<Complex>,
}

impl PolyC {
    pub fn new(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex::new(0.0, 0.0)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&a| Complex::new(a, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex::new(0.0, 0.0); k + 1];
        coeffs[k] = Complex::new(1.0, 0.0);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, &a| acc * x + a)
    }

    pub fn derivative(&self) -> PolyC {
        PolyC::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &a)| a * k as f64)
                .collect(),
        )
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> PolyC {
        if self.is_zero() {
            return PolyC::zero();
        }
        let mut coeffs = vec![Complex::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        PolyC { coeffs }
    }

    pub fn scale(&self, k: Complex) -> PolyC {
        PolyC::new(self.coeffs.iter().map(|&a| a * k).collect())
    }
}

impl Add for &PolyC {
    type Output = PolyC;
    fn add(self, rhs: &PolyC) -> PolyC {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Complex::new(0.0, 0.0);
        PolyC::new(
            (0..n)
                .map(|k| {
                    self.coeffs.get(k).copied().unwrap_or(zero)
                        + rhs.coeffs.get(k).copied().unwrap_or(zero)
                })
                .collect(),
        )
    }
}

impl Mul for &PolyC {
    type Output = PolyC;
    fn mul(self, rhs: &PolyC) -> PolyC {
        if self.is_zero() || rhs.is_zero() {
            return PolyC::zero();
        }
        let mut out = vec![Complex::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyC::new(out)
    }
}
