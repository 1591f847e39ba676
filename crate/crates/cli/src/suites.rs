//! The verification suites behind `ptosc verify`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ptosc_core::contour::{cpt_pairing, gram_matrix};
use ptosc_core::operator_algebra::oracle::commutator_sides;
use ptosc_core::operator_algebra::{
    bch_series, commute_f, lemma_closed_form, lemma_series_sum, target_expansion, ExactComplex,
    OperatorSum, TermKind,
};
use ptosc_core::pt_model::{pt_apply, sample_grid, DEFAULT_GRID_HALF_WIDTH, DEFAULT_GRID_POINTS};
use ptosc_core::spectral::ConvergenceStudy;
use ptosc_core::{Complex, EigenState, Error, PolyC, PtSystem, QuadratureRule, Result};

use crate::config::{Fault, RunConfig};
use crate::report::VerificationReport;

pub const RESIDUAL_TOL: f64 = 1e-10;
pub const GRAM_TOL: f64 = 1e-8;
pub const OPERATOR_TOL: f64 = 1e-12;
pub const LEMMA_TOL: f64 = 1e-10;
pub const COMMUTATOR_TOL: f64 = 1e-10;
pub const FD_LEVEL_TOL: f64 = 1e-6;
pub const FD_SLOPE_TOL: f64 = 0.2;

/// Terms used by the lemma sweep; 40 terms leave a truncation error above
/// 1e-10 for cubic seeds at |2εx| = 0.5.
pub const LEMMA_SWEEP_TERMS: usize = 60;

/// Highest level checked by the finite-difference oracle.
const FD_MAX_LEVEL: usize = 12;
const FD_GRIDS: [usize; 3] = [501, 1001, 2001];
const FD_HALF_WIDTH: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Spectrum,
    Orthonormality,
    Operators,
    Algebra,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Spectrum,
        Suite::Orthonormality,
        Suite::Operators,
        Suite::Algebra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Spectrum => "spectrum",
            Suite::Orthonormality => "orthonormality",
            Suite::Operators => "operators",
            Suite::Algebra => "algebra",
        }
    }

    pub fn run(self, cfg: &RunConfig) -> Result<VerificationReport> {
        let start = Instant::now();
        let mut report = match self {
            Suite::Spectrum => verify_spectrum(cfg),
            Suite::Orthonormality => verify_orthonormality(cfg),
            Suite::Operators => verify_operators(cfg),
            Suite::Algebra => verify_algebra(cfg),
        }?;
        report.elapsed = start.elapsed();
        Ok(report)
    }
}

fn systems(cfg: &RunConfig) -> Result<Vec<PtSystem>> {
    cfg.epsilons.iter().map(|&e| PtSystem::new(e)).collect()
}

fn real(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

fn default_grid() -> Vec<f64> {
    sample_grid(DEFAULT_GRID_HALF_WIDTH, DEFAULT_GRID_POINTS)
}

fn parity(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `max|Hφₙ - Eₙφₙ| / max|φₙ|` over the grid.
pub fn eigen_residual(sys: &PtSystem, n: usize, grid: &[f64], energy_shift: f64) -> Result<f64> {
    let st = EigenState::new(n)?;
    let energy = st.energy() + energy_shift;
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &x in grid {
        let phi = sys.phi(&st, real(x))?;
        let hphi = sys.apply_h(|y| sys.phi_jet(&st, y), real(x))?;
        worst = worst.max((hphi - phi * energy).norm());
        scale = scale.max(phi.norm());
    }
    Ok(worst / scale)
}

/// Eigen-residual sweep for every ε and n ≤ n_max, plus the
/// finite-difference spectrum of the Hermitian partner.
pub fn verify_spectrum(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Suite::Spectrum.name());
    let tol = cfg.tol_or(RESIDUAL_TOL);
    let shift = match cfg.fault {
        Some(Fault::EnergyShift(d)) => d,
        _ => 0.0,
    };
    let grid = default_grid();
    for sys in systems(cfg)? {
        for n in 0..=cfg.n_max {
            let r = eigen_residual(&sys, n, &grid, shift)?;
            report.check(format!("eigen_residual[eps={},n={n}]", sys.epsilon()), r, tol);
        }
    }

    let levels = cfg.n_max.min(FD_MAX_LEVEL) + 1;
    let study = ConvergenceStudy::run(FD_HALF_WIDTH, &FD_GRIDS, levels)?;
    for (n, (e, slope)) in study.extrapolated.iter().zip(&study.slopes).enumerate() {
        report.check(format!("fd_level[n={n}]"), (e - (n as f64 + 0.5)).abs(), FD_LEVEL_TOL);
        report.check(format!("fd_slope[n={n}]"), (slope - 2.0).abs(), FD_SLOPE_TOL);
    }
    Ok(report)
}

/// Gram matrix along the contour and CPT norms of each state.
pub fn verify_orthonormality(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Suite::Orthonormality.name());
    let tol = cfg.tol_or(GRAM_TOL);
    let rule = QuadratureRule::for_states(cfg.n_max);
    for sys in systems(cfg)? {
        let eps = sys.epsilon();
        let gram = gram_matrix(&sys, cfg.n_max, &rule)?;
        report.check(format!("gram_max_offdiag[eps={eps}]"), gram.max_offdiag, tol);
        report.check(format!("gram_max_diag_dev[eps={eps}]"), gram.max_diag_dev, tol);
        for n in 0..=cfg.n_max {
            let v = cpt_pairing(&sys, n, &rule)?;
            report.check(format!("cpt_norm[eps={eps},n={n}]"), (v.re - 1.0).abs(), tol);
            report.check(format!("cpt_norm_imag[eps={eps},n={n}]"), v.im.abs(), tol);
        }
    }
    Ok(report)
}

/// PT, C and CPT actions on each state over the real grid, relative to the
/// largest |φₙ| on the grid.
pub fn verify_operators(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Suite::Operators.name());
    let tol = cfg.tol_or(OPERATOR_TOL);
    let flip = if cfg.fault == Some(Fault::SignFlip) { -1.0 } else { 1.0 };
    let grid = default_grid();
    for sys in systems(cfg)? {
        let eps = sys.epsilon();
        for n in 0..=cfg.n_max {
            let st = EigenState::new(n)?;
            let phi = |y: Complex| sys.phi(&st, y);
            let values = grid
                .iter()
                .map(|&x| phi(real(x)))
                .collect::<Result<Vec<_>>>()?;
            let scale = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
            let sign = parity(n) * flip;
            let (mut pt, mut c, mut cpt) = (0.0f64, 0.0f64, 0.0f64);
            for (&x, &v) in grid.iter().zip(&values) {
                let expected = v * sign;
                let reflected = pt_apply(|y| phi(real(y)).unwrap_or(Complex::new(f64::NAN, 0.0)), x);
                pt = pt.max((reflected - expected).norm());
                c = c.max((sys.c_apply(phi, real(x))? - expected).norm());
                cpt = cpt.max((sys.cpt_apply(phi, real(x))? - v * flip).norm());
            }
            report.check(format!("pt_eigenvalue[eps={eps},n={n}]"), pt / scale, tol);
            report.check(format!("c_eigenvalue[eps={eps},n={n}]"), c / scale, tol);
            report.check(format!("cpt_identity[eps={eps},n={n}]"), cpt / scale, tol);
        }
    }
    Ok(report)
}

/// Seeds of the lemma sweep.
pub fn lemma_seeds() -> Vec<(&'static str, PolyC)> {
    vec![
        ("1", PolyC::from_real(&[1.0])),
        ("x", PolyC::monomial(1)),
        ("x^2", PolyC::monomial(2)),
        ("1+2x^3", PolyC::from_real(&[1.0, 0.0, 0.0, 2.0])),
    ]
}

/// 25 points with |2εx| spread over (0, 0.5]; phases come from the seed.
pub fn lemma_points(eps: f64, rng: &mut ChaCha8Rng) -> Vec<Complex> {
    let radius = if eps == 0.0 { 5.0 } else { 0.25 / eps.abs() };
    (0..25)
        .map(|k| {
            let r = radius * (k + 1) as f64 / 25.0;
            Complex::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect()
}

fn random_sum(rng: &mut ChaCha8Rng) -> OperatorSum {
    let mut s = OperatorSum::zero();
    for _ in 0..rng.gen_range(1..8) {
        let kind = if rng.gen_bool(0.5) { TermKind::XPow } else { TermKind::PXPowP };
        let c = ExactComplex::from_fractions(
            rng.gen_range(-9..10),
            rng.gen_range(1..7),
            rng.gen_range(-9..10),
            rng.gen_range(1..7),
        );
        s.add_term(kind, rng.gen_range(0..9), c);
    }
    s
}

/// Exact nested-commutator expansion against the expanded Hamiltonian, the
/// commutator rules against the differentiation oracle, and the lemma
/// series against its closed form.
pub fn verify_algebra(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Suite::Algebra.name());
    let bch = bch_series(cfg.order)?;
    let target = target_expansion(cfg.order)?;
    for k in 0..=cfg.order {
        let diff = bch.at(k).add(&target.at(k).scale(&ExactComplex::from_int(-1, 0)));
        report.check(format!("bch_vs_hamiltonian[eps^{k}]"), diff.len() as f64, 0.0);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut linearity_failures = 0usize;
    for _ in 0..500 {
        let a = random_sum(&mut rng);
        let b = random_sum(&mut rng);
        if commute_f(&a.add(&b)) != commute_f(&a).add(&commute_f(&b)) {
            linearity_failures += 1;
        }
    }
    report.check("commutator_linearity_failures", linearity_failures as f64, 0.0);

    let points = sample_grid(3.0, 20);
    let mut worst = 0.0f64;
    for kind in [TermKind::XPow, TermKind::PXPowP] {
        for n in 0..=6 {
            for j in 0..=6 {
                let sides = points
                    .iter()
                    .map(|&x| commutator_sides(kind, n, j, real(x)))
                    .collect::<Result<Vec<_>>>()?;
                let scale = sides.iter().map(|c| c.scale).fold(0.0, f64::max);
                for c in &sides {
                    worst = worst.max((c.lhs - c.rhs).norm() / scale);
                }
            }
        }
    }
    report.check("commutator_identities", worst, cfg.tol_or(COMMUTATOR_TOL));

    let tol = cfg.tol_or(LEMMA_TOL);
    for sys in systems(cfg)? {
        let eps = sys.epsilon();
        let pts = lemma_points(eps, &mut rng);
        for (name, seed) in lemma_seeds() {
            let mut err = 0.0f64;
            for &x in &pts {
                let series = lemma_series_sum(&seed, &sys, x, LEMMA_SWEEP_TERMS)?;
                let closed = lemma_closed_form(&seed, &sys, x)?;
                err = err.max((series - closed).norm() / closed.norm().max(1.0));
            }
            report.check(format!("lemma_series[eps={eps},U={name}]"), err, tol);
        }
        if eps != 0.0 {
            let outside = real(0.6 / eps.abs());
            let raised = matches!(
                lemma_series_sum(&PolyC::monomial(1), &sys, outside, LEMMA_SWEEP_TERMS),
                Err(Error::ConvergenceDomain(_))
            );
            report.check(
                format!("lemma_domain_error[eps={eps}]"),
                if raised { 0.0 } else { 1.0 },
                0.0,
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_detects_energy_shift() {
        let sys = PtSystem::new(0.2).unwrap();
        let grid = default_grid();
        assert!(eigen_residual(&sys, 3, &grid, 0.0).unwrap() < 1e-12);
        assert!(eigen_residual(&sys, 3, &grid, 1e-6).unwrap() > 1e-7);
    }

    #[test]
    fn lemma_points_stay_inside_half_radius() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pts = lemma_points(0.1, &mut rng);
        assert_eq!(pts.len(), 25);
        for p in pts {
            assert!(2.0 * 0.1 * p.norm() <= 0.5 + 1e-12);
        }
    }
}
