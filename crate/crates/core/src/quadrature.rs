//! Composite Gauss-Legendre rules on a symmetric interval.

use crate::error::{Error, Result};

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(order: usize) -> Vec<(f64, f64)> {
    let mut out = vec![(0.0, 0.0); order];
    let n = order as f64;
    for i in 0..order.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            if order == 0 {
                break;
            }
            for k in 2..=order {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x)
            deriv = n * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / deriv;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        out[i] = (-x, w);
        out[order - 1 - i] = (x, w);
    }
    out
}

/// Composite Gauss-Legendre rule on `[-half_width, half_width]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<(f64, f64)>,
    half_width: f64,
    panels: usize,
    order: usize,
}

impl QuadratureRule {
    pub const DEFAULT_ORDER: usize = 16;
    pub const DEFAULT_PANEL_WIDTH: f64 = 0.5;

    /// `panels` equal panels with an `order`-point rule on each.
    pub fn composite(half_width: f64, panels: usize, order: usize) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) || panels == 0 || order == 0 {
            return Err(Error::InvalidArgument(format!(
                "quadrature needs half_width > 0, panels > 0, order > 0 \
                 (got {half_width}, {panels}, {order})"
            )));
        }
        let base = gauss_legendre(order);
        let width = 2.0 * half_width / panels as f64;
        let mut nodes = Vec::with_capacity(panels * order);
        for p in 0..panels {
            let mid = -half_width + (p as f64 + 0.5) * width;
            for &(t, w) in &base {
                nodes.push((mid + 0.5 * width * t, 0.5 * width * w));
            }
        }
        Ok(Self { nodes, half_width, panels, order })
    }

    /// Panels of width at most `panel_width` covering `[-half_width, half_width]`.
    pub fn with_panel_width(half_width: f64, panel_width: f64, order: usize) -> Result<Self> {
        if !(panel_width > 0.0) {
            return Err(Error::InvalidArgument(format!("panel width {panel_width}")));
        }
        let panels = (2.0 * half_width / panel_width).ceil().max(1.0) as usize;
        Self::composite(half_width, panels, order)
    }

    /// Truncation half-width `√(2(2n+1)) + 8` for states up to `n_max`.
    pub fn truncation_for(n_max: usize) -> f64 {
        (2.0 * (2.0 * n_max as f64 + 1.0)).sqrt() + 8.0
    }

    /// Default rule for inner products of states up to `n_max`.
    pub fn for_states(n_max: usize) -> Self {
        Self::with_panel_width(
            Self::truncation_for(n_max),
            Self::DEFAULT_PANEL_WIDTH,
            Self::DEFAULT_ORDER,
        )
        .expect("default quadrature parameters are valid")
    }

    /// Same interval and order with twice as many panels.
    pub fn refined(&self) -> Self {
        Self::composite(self.half_width, 2 * self.panels, self.order)
            .expect("refining a valid rule")
    }

    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn panels(&self) -> usize {
        self.panels
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes.iter().map(|&(q, w)| w * f(q)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_nodes() {
        let r = gauss_legendre(2);
        let x = 1.0 / 3f64.sqrt();
        assert!((r[0].0 + x).abs() < 1e-15 && (r[1].0 - x).abs() < 1e-15);
        assert!((r[0].1 - 1.0).abs() < 1e-15);
        let r = gauss_legendre(3);
        assert!(r[1].0.abs() < 1e-15);
        assert!((r[1].1 - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn polynomial_exactness() {
        for order in [4, 8, 16] {
            let r = gauss_legendre(order);
            for deg in 0..2 * order {
                let got: f64 = r.iter().map(|&(x, w)| w * x.powi(deg as i32)).sum();
                let exact = if deg % 2 == 0 { 2.0 / (deg as f64 + 1.0) } else { 0.0 };
                assert!((got - exact).abs() < 1e-13, "order {order} deg {deg}");
            }
        }
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [0, 3, 6, 20] {
            let rule = QuadratureRule::for_states(n);
            let total: f64 = rule.nodes().iter().map(|n| n.1).sum();
            assert!((total - 2.0 * rule.half_width()).abs() < 1e-12);
        }
    }

    #[test]
    fn gaussian_integral() {
        let rule = QuadratureRule::for_states(0);
        let v = rule.integrate(|q| (-q * q).exp());
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn invalid_rules() {
        assert!(QuadratureRule::composite(0.0, 4, 4).is_err());
        assert!(QuadratureRule::composite(1.0, 0, 4).is_err());
        assert!(QuadratureRule::with_panel_width(1.0, -0.5, 4).is_err());
    }
}
