use std::fmt;
use std::path::PathBuf;

use ptosc_core::contour::MAX_GRAM_INDEX;
use ptosc_core::operator_algebra::MAX_BCH_ORDER;

/// Largest |ε| accepted without `allow_large_eps`.
pub const DEFAULT_EPS_LIMIT: f64 = 0.5;

/// ε values used by `verify all` when no `--eps` is given.
pub const DEFAULT_EPS_SET: [f64; 3] = [0.05, 0.1, 0.25];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// Deliberate errors for negative-control runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Fault {
    /// Adds the shift to every expected energy in the eigen-residual sweep.
    EnergyShift(f64),
    /// Flips the expected PT and C eigenvalue signs.
    SignFlip,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub epsilons: Vec<f64>,
    pub n_max: usize,
    pub order: usize,
    /// Overrides the main threshold of each suite.
    pub tol: Option<f64>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub allow_large_eps: bool,
    pub fault: Option<Fault>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            epsilons: vec![0.2],
            n_max: 6,
            order: 12,
            tol: None,
            format: Format::Text,
            out: None,
            seed: 0,
            allow_large_eps: false,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "configuration error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.epsilons.is_empty() {
            return Err(ConfigError("no epsilon values".into()));
        }
        for &eps in &self.epsilons {
            if !eps.is_finite() {
                return Err(ConfigError(format!("epsilon {eps} is not finite")));
            }
            if eps.abs() > DEFAULT_EPS_LIMIT && !self.allow_large_eps {
                return Err(ConfigError(format!(
                    "|epsilon| = {} exceeds {DEFAULT_EPS_LIMIT}; pass --allow-large-eps to override",
                    eps.abs()
                )));
            }
        }
        if self.n_max > MAX_GRAM_INDEX {
            return Err(ConfigError(format!(
                "n-max {} exceeds {MAX_GRAM_INDEX}",
                self.n_max
            )));
        }
        if self.order > MAX_BCH_ORDER {
            return Err(ConfigError(format!(
                "order {} exceeds {MAX_BCH_ORDER}",
                self.order
            )));
        }
        if let Some(tol) = self.tol {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(ConfigError(format!("tolerance {tol} must be positive")));
            }
        }
        Ok(())
    }

    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RunConfig::default().validate().is_ok());
        let mut c = RunConfig { epsilons: vec![0.7], ..Default::default() };
        assert!(c.validate().is_err());
        c.allow_large_eps = true;
        assert!(c.validate().is_ok());
        assert!(RunConfig { n_max: 21, ..Default::default() }.validate().is_err());
        assert!(RunConfig { order: 17, ..Default::default() }.validate().is_err());
        assert!(RunConfig { tol: Some(-1.0), ..Default::default() }.validate().is_err());
        assert!(RunConfig { epsilons: vec![f64::NAN], ..Default::default() }.validate().is_err());
    }
}
