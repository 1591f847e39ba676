//! Independent check of the commutator rules: test functions
//! `P(x) e^{-x²/2}` are differentiated symbolically, and the operators are
//! applied pointwise through jets.

use super::exact::ExactComplex;
use super::terms::{commute_f, OperatorSum, TermKind};
use crate::error::Result;
use crate::numerics::{Complex, Jet2, PolyC};

/// `P(x) e^{-x²/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussPoly {
    pub poly: PolyC,
}

impl GaussPoly {
    /// `xʲ e^{-x²/2}`.
    pub fn monomial(j: usize) -> Self {
        Self { poly: PolyC::monomial(j) }
    }

    /// `(P' - xP) e^{-x²/2}`.
    pub fn derivative(&self) -> GaussPoly {
        let p = &self.poly.derivative() + &self.poly.shift(1).scale(Complex::new(-1.0, 0.0));
        GaussPoly { poly: p }
    }

    pub fn times_x_pow(&self, a: usize) -> GaussPoly {
        GaussPoly { poly: self.poly.shift(a) }
    }

    /// `F g = -i (2x² g' + 2x g)`.
    pub fn apply_f(&self) -> GaussPoly {
        let d = self.derivative();
        let p = &d.poly.shift(2) + &self.poly.shift(1);
        GaussPoly { poly: p.scale(Complex::new(0.0, -2.0)) }
    }

    /// `p xᵃ p g = -(xᵃ g')'`.
    pub fn apply_pxp(&self, a: usize) -> GaussPoly {
        let inner = self.derivative().times_x_pow(a).derivative();
        GaussPoly { poly: inner.poly.scale(Complex::new(-1.0, 0.0)) }
    }

    /// Jet at `x`, assembled from polynomial jets and the Gaussian factor.
    pub fn jet(&self, x: Complex) -> Result<Jet2> {
        let d1 = self.poly.derivative();
        let d2 = d1.derivative();
        let p = Jet2::new(self.poly.eval(x), d1.eval(x), d2.eval(x));
        let xj = Jet2::variable(x);
        let g = (xj * xj).scale(Complex::new(-0.5, 0.0)).exp()?;
        Ok(p * g)
    }
}

/// `F g` at `x` from the jet of `g`.
fn f_pointwise(g: Jet2, x: Complex) -> Complex {
    Complex::new(0.0, -2.0) * (x * x * g.d1 + x * g.v)
}

/// `p xᵃ p g` at `x` from the jet of `g`.
fn pxp_pointwise(a: u32, g: Jet2, x: Complex) -> Complex {
    OperatorSum::single(TermKind::PXPowP, a, ExactComplex::one()).apply_to_jet(g, x)
}

/// Both sides of a commutator rule evaluated at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorSides {
    /// `F(A g) - A(F g)`, computed by the oracle.
    pub lhs: Complex,
    /// [`commute_f`] of the single term `A`, applied to `g` through jets.
    pub rhs: Complex,
    /// `|F(A g)| + |A(F g)|`, the magnitude before cancellation.
    pub scale: f64,
}

/// Evaluates the commutator rule for the operator `kind` with power `n`,
/// acting on `xʲ e^{-x²/2}` at `x`.
pub fn commutator_sides(kind: TermKind, n: u32, j: usize, x: Complex) -> Result<CommutatorSides> {
    let g = GaussPoly::monomial(j);
    let fg = g.apply_f();
    let (first, second) = match kind {
        TermKind::XPow => {
            let ag = g.times_x_pow(n as usize);
            (f_pointwise(ag.jet(x)?, x), x.powu(n) * fg.jet(x)?.v)
        }
        TermKind::PXPowP => {
            let ag = g.apply_pxp(n as usize);
            (f_pointwise(ag.jet(x)?, x), pxp_pointwise(n, fg.jet(x)?, x))
        }
    };
    let rule = commute_f(&OperatorSum::single(kind, n, ExactComplex::one()));
    Ok(CommutatorSides {
        lhs: first - second,
        rhs: rule.apply_to_jet(g.jet(x)?, x),
        scale: first.norm() + second.norm(),
    })
}
