//! Finite-difference spectrum of the Hermitian partner `h = ½p² + ½x²`.
//!
//! `h` is discretized with the three-point Laplacian and Dirichlet ends, and
//! the resulting symmetric tridiagonal matrix is diagonalized by implicit QL
//! iteration. This gives the oscillator levels without relying on the closed
//! form eigenstates.

use crate::error::{Error, Result};

/// Iteration limit per eigenvalue in [`eigenvalues_tridiag`].
pub const MAX_QL_SWEEPS: usize = 50;

/// Uniform grid on `[-L, L]` with `N` nodes, including both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    half_width: f64,
    points: usize,
}

impl Grid1D {
    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if points < 3 || !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "grid needs N >= 3 and L > 0 (got N = {points}, L = {half_width})"
            )));
        }
        Ok(Self { half_width, points })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }

    /// `x_i = -L + i·dx`; the middle node is exactly zero for odd `N`.
    pub fn node(&self, i: usize) -> f64 {
        if 2 * i + 1 == self.points {
            0.0
        } else {
            -self.half_width + i as f64 * self.spacing()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(|i| self.node(i))
    }
}

/// Real symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagSym {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl TridiagSym {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::InvalidArgument(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal entries",
                diag.len(),
                offdiag.len()
            )));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Interval containing every eigenvalue.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let radius = 2.0 * self.offdiag.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        let lo = self.diag.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = self.diag.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (lo - radius, hi + radius)
    }
}

/// `diag_i = 1/dx² + x_i²/2`, `offdiag = -1/(2dx²)`.
pub fn discretize_h(grid: &Grid1D) -> TridiagSym {
    let dx = grid.spacing();
    let kinetic = 1.0 / (dx * dx);
    let diag = grid.nodes().map(|x| kinetic + 0.5 * x * x).collect();
    let offdiag = vec![-0.5 * kinetic; grid.points() - 1];
    TridiagSym { diag, offdiag }
}

/// The `k` smallest eigenvalues in ascending order.
pub fn eigenvalues_tridiag(m: &TridiagSym, k: usize) -> Result<Vec<f64>> {
    let n = m.dim();
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "requested {k} eigenvalues of a {n}x{n} matrix"
        )));
    }
    let mut d = m.diag.clone();
    let mut e = m.offdiag.clone();
    e.push(0.0);

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut split = l;
            while split + 1 < n {
                let dd = d[split].abs() + d[split + 1].abs();
                if e[split].abs() <= f64::EPSILON * dd {
                    break;
                }
                split += 1;
            }
            if split == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(Error::NoConvergence(MAX_QL_SWEEPS));
            }
            // shift from the leading 2x2 block
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[split] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..split).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[split] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[split] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    d.truncate(k);
    Ok(d)
}

/// `n + ½` for `n < k`.
pub fn oscillator_levels(k: usize) -> Vec<f64> {
    (0..k).map(|n| n as f64 + 0.5).collect()
}

/// Lowest eigenvalues of the discretized `h` on a sequence of grids.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub half_width: f64,
    pub points: Vec<usize>,
    pub spacings: Vec<f64>,
    /// `eigenvalues[g][j]`: level `j` on grid `g`.
    pub eigenvalues: Vec<Vec<f64>>,
    /// Richardson extrapolation from the two finest grids, assuming `O(dx²)`.
    pub extrapolated: Vec<f64>,
    /// Least-squares slope of `log|E_j - (j + ½)|` against `log dx`.
    pub slopes: Vec<f64>,
}

impl ConvergenceStudy {
    pub fn run(half_width: f64, points: &[usize], k: usize) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidArgument(
                "a convergence study needs at least two grids".into(),
            ));
        }
        let grids = points
            .iter()
            .map(|&n| Grid1D::new(half_width, n))
            .collect::<Result<Vec<_>>>()?;
        let spacings: Vec<f64> = grids.iter().map(Grid1D::spacing).collect();
        let eigenvalues = grids
            .iter()
            .map(|g| eigenvalues_tridiag(&discretize_h(g), k))
            .collect::<Result<Vec<_>>>()?;

        let last = grids.len() - 1;
        let ratio = (spacings[last - 1] / spacings[last]).powi(2);
        let extrapolated = (0..k)
            .map(|j| {
                let fine = eigenvalues[last][j];
                let coarse = eigenvalues[last - 1][j];
                fine + (fine - coarse) / (ratio - 1.0)
            })
            .collect();

        let exact = oscillator_levels(k);
        let slopes = (0..k)
            .map(|j| {
                let pts: Vec<(f64, f64)> = spacings
                    .iter()
                    .zip(&eigenvalues)
                    .map(|(dx, ev)| (dx.ln(), (ev[j] - exact[j]).abs().ln()))
                    .collect();
                least_squares_slope(&pts)
            })
            .collect();

        Ok(Self {
            half_width,
            points: points.to_vec(),
            spacings,
            eigenvalues,
            extrapolated,
            slopes,
        })
    }

    /// Eigenvalues on the finest grid.
    pub fn finest(&self) -> &[f64] {
        self.eigenvalues.last().map(Vec::as_slice).unwrap_or(&[])
    }
}

fn least_squares_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
