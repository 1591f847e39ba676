//! The deformed oscillator `H = ½ p s⁴ p + 4ε² s² + x²/(2s²)` with
//! `s = 1 + 2iεx`, its eigenstates, and the PT, C and `e^{aεF}` actions.
//!
//! Eigenstates are `φₙ(x) = (Aₙ/s) Hₙ(x/s) exp(-x²/2s²)`, the image of the
//! oscillator state `ψₙ` under `e^{εF}`, where `F = x²p + px²`. They share the
//! oscillator energies `n + ½`.

use crate::error::{Error, Result};
use crate::numerics::{hermite, hermite_jet, Complex, Jet2, MAX_HERMITE_INDEX};

/// `|s|` at or below this value is reported as a pole.
pub const POLE_TOLERANCE: f64 = 1e-14;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

fn check_pole(sigma: Complex, pole: Complex) -> Result<()> {
    if sigma.norm() <= POLE_TOLERANCE {
        Err(Error::Pole(pole))
    } else {
        Ok(())
    }
}

/// The deformation parameter ε together with the derived s-factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtSystem {
    epsilon: f64,
}

impl PtSystem {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !epsilon.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "epsilon must be finite, got {epsilon}"
            )));
        }
        Ok(Self { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Location `i/(2ε)` where `s` vanishes; `None` at ε = 0.
    pub fn pole(&self) -> Option<Complex> {
        (self.epsilon != 0.0).then(|| Complex::new(0.0, 0.5 / self.epsilon))
    }

    /// `1 + 2iaεx`: the s-factor of `e^{aεF}`.
    fn sigma(&self, a: f64, x: Complex) -> Complex {
        ONE + Complex::new(0.0, 2.0 * a * self.epsilon) * x
    }

    pub fn s(&self, x: Complex) -> Complex {
        self.sigma(1.0, x)
    }

    pub fn sbar(&self, x: Complex) -> Complex {
        self.sigma(-1.0, x)
    }

    pub fn s_jet(&self, x: Complex) -> Jet2 {
        Jet2::new(self.s(x), Complex::new(0.0, 2.0 * self.epsilon), ZERO)
    }

    fn require_regular(&self, x: Complex) -> Result<Complex> {
        let s = self.s(x);
        check_pole(s, self.pole().unwrap_or(x))?;
        Ok(s)
    }

    /// Jet of `φₙ` at `x`.
    ///
    /// `u = x/s` has the exact derivatives `u' = 1/s²` and `u'' = -4iε/s³`.
    pub fn phi_jet(&self, state: &EigenState, x: Complex) -> Result<Jet2> {
        let s = self.require_regular(x)?;
        let s_jet = self.s_jet(x);
        let inv_s = s.inv();
        let inv_s2 = inv_s * inv_s;
        let u = Jet2::new(
            x * inv_s,
            inv_s2,
            Complex::new(0.0, -4.0 * self.epsilon) * inv_s2 * inv_s,
        );
        let prefactor = Jet2::constant(Complex::new(state.norm, 0.0)).checked_div(s_jet)?;
        let gauss = (u * u).scale(Complex::new(-0.5, 0.0)).exp()?;
        Ok(hermite_jet(state.n, u)? * gauss * prefactor)
    }

    /// Value of `φₙ` at `x`.
    pub fn phi(&self, state: &EigenState, x: Complex) -> Result<Complex> {
        let s = self.require_regular(x)?;
        let u = x / s;
        let arg = -u * u * 0.5;
        if arg.re > crate::numerics::EXP_OVERFLOW_GUARD {
            return Err(Error::Overflow(arg.re));
        }
        Ok(hermite(state.n, u)? * arg.exp() * state.norm / s)
    }

    /// `(Hf)(x)` for a function given by its jets.
    ///
    /// Uses `½ p s⁴ p f = -½ (8iε s³ f' + s⁴ f'')` with `p = -i d/dx`.
    pub fn apply_h<F>(&self, f: F, x: Complex) -> Result<Complex>
    where
        F: Fn(Complex) -> Result<Jet2>,
    {
        let s = self.require_regular(x)?;
        let j = f(x)?;
        let eps = self.epsilon;
        let s2 = s * s;
        let s3 = s2 * s;
        let s4 = s2 * s2;
        let kinetic = (Complex::new(0.0, 8.0 * eps) * s3 * j.d1 + s4 * j.d2) * -0.5;
        let potential = s2 * (4.0 * eps * eps) * j.v + x * x * j.v / (s2 * 2.0);
        Ok(kinetic + potential)
    }

    /// `(e^{aεF} U)(x) = U(x/σ)/σ` with `σ = 1 + 2iaεx`.
    pub fn expf_apply<U>(&self, a: f64, u: U, x: Complex) -> Result<Complex>
    where
        U: Fn(Complex) -> Result<Complex>,
    {
        let sigma = self.sigma(a, x);
        let pole = if a * self.epsilon != 0.0 {
            Complex::new(0.0, 0.5 / (a * self.epsilon))
        } else {
            x
        };
        check_pole(sigma, pole)?;
        Ok(u(x / sigma)? / sigma)
    }

    /// `(Cf)(x) = f(-x/t)/t` with `t = 1 + 4iεx`, i.e. `e^{2εF}` after parity.
    pub fn c_apply<F>(&self, f: F, x: Complex) -> Result<Complex>
    where
        F: Fn(Complex) -> Result<Complex>,
    {
        self.expf_apply(2.0, |y| f(-y), x)
    }

    /// The argument map `x ↦ -x/t` underlying [`PtSystem::c_apply`].
    pub fn c_substitute(&self, x: Complex) -> Result<Complex> {
        let t = self.sigma(2.0, x);
        check_pole(t, self.pole().map(|p| p * 0.5).unwrap_or(x))?;
        Ok(-x / t)
    }

    /// `(C PT f)(z)` at a complex point, with PT taken as the holomorphic
    /// continuation of [`pt_apply`] (see [`pt_reflect`]).
    pub fn cpt_apply<F>(&self, f: F, z: Complex) -> Result<Complex>
    where
        F: Fn(Complex) -> Result<Complex>,
    {
        self.c_apply(|w| pt_reflect(&f, w), z)
    }
}

/// `(PT f)(x) = conj(f(-x))` on the real axis.
pub fn pt_apply<F>(f: F, x: f64) -> Complex
where
    F: Fn(f64) -> Complex,
{
    f(-x).conj()
}

/// `conj(f(-conj(z)))`: the holomorphic function agreeing with `PT f` on the
/// real axis, for `f` holomorphic.
pub fn pt_reflect<F>(f: F, z: Complex) -> Result<Complex>
where
    F: Fn(Complex) -> Result<Complex>,
{
    Ok(f(-z.conj())?.conj())
}

/// Half-width of the default real sample grid.
pub const DEFAULT_GRID_HALF_WIDTH: f64 = 6.0;
/// Points in the default real sample grid.
pub const DEFAULT_GRID_POINTS: usize = 64;

/// `points` equally spaced real points on `[-half_width, half_width]`.
pub fn sample_grid(half_width: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => {
            let step = 2.0 * half_width / (points - 1) as f64;
            (0..points).map(|i| -half_width + i as f64 * step).collect()
        }
    }
}

/// Harmonic-oscillator eigenstate index with its normalization
/// `Aₙ = (√π 2ⁿ n!)^{-1/2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenState {
    n: usize,
    norm: f64,
}

impl EigenState {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_HERMITE_INDEX {
            return Err(Error::IndexTooLarge(n));
        }
        let mut norm = std::f64::consts::PI.powf(-0.25);
        for k in 1..=n {
            norm /= (2.0 * k as f64).sqrt();
        }
        Ok(Self { n, norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn energy(&self) -> f64 {
        self.n as f64 + 0.5
    }

    /// Jet of `ψₙ(x) = Aₙ Hₙ(x) e^{-x²/2}`.
    pub fn psi_jet(&self, x: Complex) -> Result<Jet2> {
        let xj = Jet2::variable(x);
        let gauss = (xj * xj).scale(Complex::new(-0.5, 0.0)).exp()?;
        Ok(hermite_jet(self.n, xj)? * gauss * Complex::new(self.norm, 0.0))
    }

    pub fn psi(&self, x: Complex) -> Result<Complex> {
        Ok(self.psi_jet(x)?.v)
    }
}
