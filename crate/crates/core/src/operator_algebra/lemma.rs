use crate::error::{Error, Result};
use crate::numerics::{Complex, PolyC};
use crate::pt_model::PtSystem;

pub const MAX_LEMMA_TERMS: usize = 200;
pub const DEFAULT_LEMMA_TERMS: usize = 40;

/// Terms `f₀ … f_{N-1}` of `e^{εF} U = Σ fₖ`, generated by
/// `f_{k+1} = -μ/(k+1) · (x fₖ + x² fₖ')` with `μ = 2iε` and `f₀ = U`.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaSeries {
    pub mu: Complex,
    pub terms: Vec<PolyC>,
}

impl LemmaSeries {
    pub fn build(seed: &PolyC, sys: &PtSystem, n_terms: usize) -> Result<Self> {
        if n_terms == 0 || n_terms > MAX_LEMMA_TERMS {
            return Err(Error::InvalidArgument(format!(
                "lemma series needs 1..={MAX_LEMMA_TERMS} terms, got {n_terms}"
            )));
        }
        let mu = Complex::new(0.0, 2.0 * sys.epsilon());
        let mut terms = Vec::with_capacity(n_terms);
        terms.push(seed.clone());
        for k in 0..n_terms - 1 {
            let f = &terms[k];
            let next = &f.shift(1) + &f.derivative().shift(2);
            terms.push(next.scale(-mu / (k as f64 + 1.0)));
        }
        Ok(Self { mu, terms })
    }

    pub fn seed(&self) -> &PolyC {
        &self.terms[0]
    }

    pub fn partial_sum(&self, x: Complex) -> Complex {
        self.terms.iter().map(|f| f.eval(x)).sum()
    }
}

fn check_domain(sys: &PtSystem, x: Complex) -> Result<()> {
    let r = 2.0 * sys.epsilon().abs() * x.norm();
    if r >= 1.0 {
        Err(Error::ConvergenceDomain(r))
    } else {
        Ok(())
    }
}

/// `Σ_{k<n_terms} fₖ(x)`; requires `|2εx| < 1`.
pub fn lemma_series_sum(seed: &PolyC, sys: &PtSystem, x: Complex, n_terms: usize) -> Result<Complex> {
    check_domain(sys, x)?;
    Ok(LemmaSeries::build(seed, sys, n_terms)?.partial_sum(x))
}

/// `U(x/s)/s`.
pub fn lemma_closed_form(seed: &PolyC, sys: &PtSystem, x: Complex) -> Result<Complex> {
    sys.expf_apply(1.0, |y| Ok(seed.eval(y)), x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, real};

    fn sys(eps: f64) -> PtSystem {
        PtSystem::new(eps).unwrap()
    }

    #[test]
    fn constant_seed_sums_to_inverse_s() {
        let v = lemma_series_sum(&PolyC::from_real(&[1.0]), &sys(0.05), real(1.0), 40).unwrap();
        assert!((v - c(1.0, 0.1).inv()).norm() < 1e-15);
    }

    #[test]
    fn linear_seed() {
        let v = lemma_series_sum(&PolyC::monomial(1), &sys(0.05), real(1.0), 40).unwrap();
        let exact = c(0.99, 0.2).inv();
        assert!((v - exact).norm() < 1e-15);
        assert!((exact - c(0.970_493, -0.196_059)).norm() < 1e-5);
    }

    #[test]
    fn zero_epsilon_is_identity() {
        let u = PolyC::from_real(&[1.0, 0.0, 0.0, 2.0]);
        let s = LemmaSeries::build(&u, &sys(0.0), 10).unwrap();
        assert!(s.terms[1..].iter().all(PolyC::is_zero));
        assert_eq!(lemma_series_sum(&u, &sys(0.0), real(3.0), 10).unwrap(), real(55.0));
        assert_eq!(lemma_closed_form(&u, &sys(0.0), real(3.0)).unwrap(), real(55.0));
    }

    #[test]
    fn closed_form_square() {
        let v = lemma_closed_form(&PolyC::monomial(2), &sys(0.1), real(1.0)).unwrap();
        assert!((v - c(1.0, 0.2).powi(-3)).norm() < 1e-15);
    }

    #[test]
    fn degree_grows_by_one() {
        for seed in [PolyC::from_real(&[1.0]), PolyC::from_real(&[0.5, 0.0, -1.0, 2.0])] {
            let s = LemmaSeries::build(&seed, &sys(0.07), 51).unwrap();
            let d0 = seed.degree().unwrap();
            for (n, f) in s.terms.iter().enumerate() {
                assert_eq!(f.degree(), Some(d0 + n));
            }
        }
    }

    #[test]
    fn domain_and_term_limits() {
        let u = PolyC::monomial(1);
        assert!(matches!(
            lemma_series_sum(&u, &sys(0.5), real(1.0), 40),
            Err(Error::ConvergenceDomain(_))
        ));
        assert!(matches!(
            lemma_series_sum(&u, &sys(0.1), c(0.0, 6.0), 40),
            Err(Error::ConvergenceDomain(_))
        ));
        assert!(lemma_series_sum(&u, &sys(0.1), real(1.0), 201).is_err());
        assert!(lemma_series_sum(&u, &sys(0.1), real(1.0), 0).is_err());
    }

    #[test]
    fn truncation_error_within_tail_bound() {
        // U = xᵈ gives xᵈ/s^{d+1} = xᵈ Σ C(k+d, d) (-μx)ᵏ, so the tail after N
        // terms is at most |x|ᵈ Σ_{k≥N} C(k+d, d) rᵏ with r = |2εx|.
        let eps = 0.05;
        for d in 0..4usize {
            let seed = PolyC::monomial(d);
            for (r, th) in [(0.1, 0.0), (0.3, 1.0), (0.5, 2.5), (0.5, 0.0)] {
                let x = Complex::from_polar(r / (2.0 * eps), th);
                let err = (lemma_series_sum(&seed, &sys(eps), x, 40).unwrap()
                    - lemma_closed_form(&seed, &sys(eps), x).unwrap())
                .norm();
                let mut bound = 0.0;
                let mut binom = 1.0;
                for k in 0..400usize {
                    if k > 0 {
                        binom *= (k + d) as f64 / k as f64;
                    }
                    if k >= 40 {
                        bound += binom * r.powi(k as i32);
                    }
                }
                bound *= x.norm().powi(d as i32);
                assert!(err <= 1.01 * bound + 1e-14 * x.norm().powi(d as i32).max(1.0),
                    "d={d} r={r}: {err:e} > {bound:e}");
            }
        }
    }
}
