//! The integration path `z(q) = q/(1 - 2iεq)` and the bilinear inner
//! products of the deformed eigenstates along it.
//!
//! Integrals are taken in the real parameter `q`: along the path
//! `dz φₙ(z) φₘ(z) = ψₙ(q) ψₘ(q) dq`, so the integrand decays like a Gaussian
//! in `q` and a truncated composite Gauss-Legendre rule is sufficient.
//! The pairing is `∫ φₙ φₘ dz` without complex conjugation.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::json_float;
use crate::numerics::Complex;
use crate::pt_model::{EigenState, PtSystem};
use crate::quadrature::QuadratureRule;

/// Largest state index accepted by [`gram_matrix`].
pub const MAX_GRAM_INDEX: usize = 20;

/// Imaginary residue above which [`cpt_norm`] reports [`Error::NonRealNorm`].
pub const NON_REAL_TOLERANCE: f64 = 1e-8;

/// A point of the path together with `dz/dq`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSample {
    pub q: f64,
    pub z: Complex,
    pub dz_dq: Complex,
}

pub fn contour_point(sys: &PtSystem, q: f64) -> ContourSample {
    let sbar = sys.sbar(Complex::new(q, 0.0));
    let inv = sbar.inv();
    ContourSample {
        q,
        z: inv * q,
        dz_dq: inv * inv,
    }
}

fn state_values(sys: &PtSystem, states: &[EigenState], q: f64) -> Result<(Complex, Vec<Complex>)> {
    let p = contour_point(sys, q);
    let values = states
        .iter()
        .map(|st| sys.phi(st, p.z))
        .collect::<Result<Vec<_>>>()?;
    Ok((p.dz_dq, values))
}

fn states_up_to(n_max: usize) -> Result<Vec<EigenState>> {
    (0..=n_max).map(EigenState::new).collect()
}

/// `∫ φₙ(z) φₘ(z) dz` along the path, integrated over `q ∈ [-Q, Q]`.
pub fn inner_product(sys: &PtSystem, n: usize, m: usize, rule: &QuadratureRule) -> Result<Complex> {
    let a = EigenState::new(n)?;
    let b = EigenState::new(m)?;
    let mut acc = Complex::new(0.0, 0.0);
    for &(q, w) in rule.nodes() {
        let p = contour_point(sys, q);
        acc += p.dz_dq * sys.phi(&a, p.z)? * sys.phi(&b, p.z)? * w;
    }
    Ok(acc)
}

/// `∫ φₙ (CPT φₙ) dz` along the path.
///
/// Returns the real part after checking that the imaginary residue is below
/// [`NON_REAL_TOLERANCE`].
pub fn cpt_norm(sys: &PtSystem, n: usize, rule: &QuadratureRule) -> Result<f64> {
    let acc = cpt_pairing(sys, n, rule)?;
    if acc.im.abs() > NON_REAL_TOLERANCE {
        return Err(Error::NonRealNorm(acc.im));
    }
    Ok(acc.re)
}

/// The complex value of `∫ φₙ (CPT φₙ) dz` before the reality check.
pub fn cpt_pairing(sys: &PtSystem, n: usize, rule: &QuadratureRule) -> Result<Complex> {
    let st = EigenState::new(n)?;
    let mut acc = Complex::new(0.0, 0.0);
    for &(q, w) in rule.nodes() {
        let p = contour_point(sys, q);
        let phi = sys.phi(&st, p.z)?;
        let cpt = sys.cpt_apply(|y| sys.phi(&st, y), p.z)?;
        acc += p.dz_dq * phi * cpt * w;
    }
    Ok(acc)
}

/// Matrix of pairwise inner products with its deviation from the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub n_max: usize,
    pub matrix: Vec<Vec<Complex>>,
    pub max_offdiag: f64,
    pub max_diag_dev: f64,
}

impl GramReport {
    fn from_matrix(n_max: usize, matrix: Vec<Vec<Complex>>) -> Self {
        let mut max_offdiag = 0.0f64;
        let mut max_diag_dev = 0.0f64;
        for (i, row) in matrix.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                if i == j {
                    max_diag_dev = max_diag_dev.max((g - 1.0).norm());
                } else {
                    max_offdiag = max_offdiag.max(g.norm());
                }
            }
        }
        Self { n_max, matrix, max_offdiag, max_diag_dev }
    }

    /// Largest deviation from the identity over all entries.
    pub fn max_deviation(&self) -> f64 {
        self.max_offdiag.max(self.max_diag_dev)
    }

    /// `{"n_max":…, "entries":[[re,im],…], "max_offdiag":…, "max_diag_dev":…}`
    /// with entries in row-major order.
    pub fn to_json(&self) -> String {
        let entries = self
            .matrix
            .iter()
            .flatten()
            .map(|g| format!("[{},{}]", json_float(g.re), json_float(g.im)))
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{{\"n_max\":{},\"entries\":[{}],\"max_offdiag\":{},\"max_diag_dev\":{}}}",
            self.n_max,
            entries,
            json_float(self.max_offdiag),
            json_float(self.max_diag_dev)
        )
    }
}

/// Gram matrix of `φ₀ … φ_{n_max}` along the path.
///
/// State values are tabulated per node in parallel; every entry is then
/// summed in node order, so the result does not depend on scheduling.
pub fn gram_matrix(sys: &PtSystem, n_max: usize, rule: &QuadratureRule) -> Result<GramReport> {
    if n_max > MAX_GRAM_INDEX {
        return Err(Error::InvalidArgument(format!(
            "gram matrix limited to n_max <= {MAX_GRAM_INDEX}, got {n_max}"
        )));
    }
    let states = states_up_to(n_max)?;
    let table = rule
        .nodes()
        .par_iter()
        .map(|&(q, w)| {
            state_values(sys, &states, q).map(|(dz, values)| (dz * w, values))
        })
        .collect::<Result<Vec<_>>>()?;
    let dim = n_max + 1;
    let mut matrix = vec![vec![Complex::new(0.0, 0.0); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let mut acc = Complex::new(0.0, 0.0);
            for (weight, values) in &table {
                acc += weight * values[i] * values[j];
            }
            matrix[i][j] = acc;
            matrix[j][i] = acc;
        }
    }
    Ok(GramReport::from_matrix(n_max, matrix))
}

/// Tabulated path for plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourTable {
    pub epsilon: f64,
    /// `i/(2ε)`, where both ends of the path meet; `None` at ε = 0.
    pub endpoint: Option<Complex>,
    pub rows: Vec<ContourSample>,
}

pub const CSV_HEADER: &str = "q,re_z,im_z";

impl ContourTable {
    /// CSV with header `q,re_z,im_z` and shortest round-trip floats.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(32 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            // `+ 0.0` folds -0 into 0
            let _ = writeln!(out, "{},{},{}", r.q + 0.0, r.z.re + 0.0, r.z.im + 0.0);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let endpoint = match self.endpoint {
            Some(e) => format!("[{},{}]", json_float(e.re), json_float(e.im)),
            None => "null".to_string(),
        };
        let rows = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "[{},{},{}]",
                    json_float(r.q),
                    json_float(r.z.re),
                    json_float(r.z.im)
                )
            })
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{{\"epsilon\":{},\"endpoint\":{},\"rows\":[{}]}}",
            json_float(self.epsilon),
            endpoint,
            rows
        )
    }
}

/// Parses CSV produced by [`ContourTable::to_csv`] into `(q, z)` rows.
pub fn parse_contour_csv(text: &str) -> Result<Vec<(f64, Complex)>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(CSV_HEADER) => {}
        other => {
            return Err(Error::InvalidArgument(format!(
                "expected header {CSV_HEADER:?}, found {other:?}"
            )))
        }
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let fields: Vec<&str> = line.split(',').collect();
            let parse = |s: &str| {
                s.parse::<f64>().map_err(|e| {
                    Error::InvalidArgument(format!("row {}: {e}: {s:?}", i + 1))
                })
            };
            if fields.len() != 3 {
                return Err(Error::InvalidArgument(format!(
                    "row {}: expected 3 fields, found {}",
                    i + 1,
                    fields.len()
                )));
            }
            Ok((parse(fields[0])?, Complex::new(parse(fields[1])?, parse(fields[2])?)))
        })
        .collect()
}

/// `samples` equally spaced points of the path for `q ∈ [-q_range, q_range]`.
pub fn export_contour(sys: &PtSystem, q_range: f64, samples: usize) -> Result<ContourTable> {
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "contour export needs at least 2 samples, got {samples}"
        )));
    }
    if !(q_range > 0.0 && q_range.is_finite()) {
        return Err(Error::InvalidArgument(format!("q range {q_range}")));
    }
    let step = 2.0 * q_range / (samples - 1) as f64;
    let rows = (0..samples)
        .map(|i| {
            // exact midpoint for odd sample counts
            let q = if 2 * i + 1 == samples {
                0.0
            } else {
                -q_range + i as f64 * step
            };
            contour_point(sys, q)
        })
        .collect();
    Ok(ContourTable {
        epsilon: sys.epsilon(),
        endpoint: sys.pole(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, real};

    fn sys(eps: f64) -> PtSystem {
        PtSystem::new(eps).unwrap()
    }

    #[test]
    fn path_points() {
        let p = contour_point(&sys(0.3), 0.0);
        assert_eq!(p.z, real(0.0));
        assert_eq!(p.dz_dq, real(1.0));
        let p = contour_point(&sys(0.25), 1.0);
        assert!((p.z - c(0.8, 0.4)).norm() < 1e-15);
        let far = contour_point(&sys(0.25), 100.0);
        let d = (far.z - c(0.0, 2.0)).norm();
        assert!((d - 0.04).abs() < 1e-4, "{d}");
        let far = contour_point(&sys(0.25), 1e12);
        assert!((far.z - c(0.0, 2.0)).norm() < 1e-10);
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let s = sys(0.35);
        let h = 1e-6;
        for q in [-4.0, -0.3, 0.0, 1.7, 9.0] {
            let fd = (contour_point(&s, q + h).z - contour_point(&s, q - h).z) / (2.0 * h);
            assert!((fd - contour_point(&s, q).dz_dq).norm() < 1e-9);
        }
    }

    #[test]
    fn path_stays_in_upper_half_plane() {
        let s = sys(0.2);
        for k in -200..=200 {
            let q = k as f64 * 0.37;
            let p = contour_point(&s, q);
            assert!(p.z.im >= 0.0);
            let m = contour_point(&s, -q);
            assert_eq!(m.z, -p.z.conj());
        }
    }

    #[test]
    fn inner_product_examples() {
        let rule = QuadratureRule::for_states(6);
        let g = inner_product(&sys(0.2), 0, 0, &rule).unwrap();
        assert!((g - 1.0).norm() < 1e-10);
        for eps in [0.0, 0.1, 0.3] {
            let g = inner_product(&sys(eps), 0, 1, &rule).unwrap();
            assert!(g.norm() < 1e-10);
        }
        let g = inner_product(&sys(0.0), 5, 5, &rule).unwrap();
        assert!((g - 1.0).norm() < 1e-12);
    }

    #[test]
    fn cpt_norm_examples() {
        let rule = QuadratureRule::for_states(6);
        for (eps, n) in [(0.2, 0), (0.2, 3), (0.0, 1)] {
            let v = cpt_norm(&sys(eps), n, &rule).unwrap();
            assert!((v - 1.0).abs() < 1e-9, "eps {eps} n {n}: {v}");
        }
    }

    #[test]
    fn gram_examples() {
        let r = gram_matrix(&sys(0.2), 6, &QuadratureRule::for_states(6)).unwrap();
        assert!(r.max_offdiag < 1e-9 && r.max_diag_dev < 1e-9, "{r:?}");
        let r = gram_matrix(&sys(0.0), 3, &QuadratureRule::for_states(3)).unwrap();
        assert!(r.max_deviation() < 1e-12);
        let r = gram_matrix(&sys(0.4), 8, &QuadratureRule::for_states(8)).unwrap();
        assert!(r.max_deviation() < 1e-8);
        for i in 0..=8 {
            for j in 0..=8 {
                assert_eq!(r.matrix[i][j], r.matrix[j][i]);
            }
        }
        assert!(gram_matrix(&sys(0.2), 21, &QuadratureRule::for_states(21)).is_err());
    }

    #[test]
    fn gram_is_stable_under_refinement() {
        let s = sys(0.2);
        let rule = QuadratureRule::for_states(6);
        let a = gram_matrix(&s, 6, &rule).unwrap();
        let b = gram_matrix(&s, 6, &rule.refined()).unwrap();
        for (ra, rb) in a.matrix.iter().zip(&b.matrix) {
            for (x, y) in ra.iter().zip(rb) {
                assert!((x - y).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn gram_json_shape() {
        let r = gram_matrix(&sys(0.0), 0, &QuadratureRule::for_states(0)).unwrap();
        let json = r.to_json();
        assert!(json.starts_with("{\"n_max\":0,\"entries\":[["));
        assert!(json.contains("\"max_offdiag\":0.0000000000000000e0"));
    }

    #[test]
    fn export_examples() {
        let t = export_contour(&sys(0.25), 50.0, 5).unwrap();
        assert_eq!(t.rows.len(), 5);
        assert_eq!(t.rows[2].q, 0.0);
        assert_eq!(t.rows[2].z, real(0.0));
        assert_eq!(t.endpoint, Some(c(0.0, 2.0)));
        for r in [&t.rows[0], &t.rows[4]] {
            assert!(r.z.re.abs() < 0.1 && (r.z.im - 2.0).abs() < 0.01);
        }
        assert_eq!(export_contour(&sys(0.1), 1.0, 2).unwrap().endpoint, Some(c(0.0, 5.0)));
        assert!(export_contour(&sys(0.1), 1.0, 1).is_err());
        let csv = t.to_csv();
        assert!(csv.starts_with("q,re_z,im_z\n-50,"));
        assert!(csv.ends_with('\n'));
    }

    #[test]
    fn csv_parse_errors() {
        assert!(parse_contour_csv("x,y\n").is_err());
        assert!(parse_contour_csv("q,re_z,im_z\n1,2\n").is_err());
        assert!(parse_contour_csv("q,re_z,im_z\n1,2,abc\n").is_err());
        assert_eq!(parse_contour_csv("q,re_z,im_z\n").unwrap(), vec![]);
    }
}
