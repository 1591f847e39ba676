use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::exact::ExactComplex;
use crate::numerics::{Complex, Jet2};

/// The two operator families closed under commutation with `F = x²p + px²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermKind {
    /// `xᵃ`
    XPow,
    /// `p xᵃ p`
    PXPowP,
}

/// `coeff · xᵃ` or `coeff · p xᵃ p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTerm {
    pub kind: TermKind,
    pub power: u32,
    pub coeff: ExactComplex,
}

impl fmt::Display for OpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TermKind::XPow => write!(f, "{} * x^{}", self.coeff, self.power),
            TermKind::PXPowP => write!(f, "{} * p x^{} p", self.coeff, self.power),
        }
    }
}

/// Finite linear combination of `xᵃ` and `p xᵃ p` terms.
///
/// Terms are kept sorted by `(kind, power)` with one entry per key; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorSum {
    terms: BTreeMap<(TermKind, u32), ExactComplex>,
}

impl OperatorSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(kind: TermKind, power: u32, coeff: ExactComplex) -> Self {
        let mut s = Self::zero();
        s.add_term(kind, power, coeff);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = OpTerm>>(terms: I) -> Self {
        let mut s = Self::zero();
        for t in terms {
            s.add_term(t.kind, t.power, t.coeff);
        }
        s
    }

    /// `½p² + ½x²`.
    pub fn oscillator() -> Self {
        let half = ExactComplex::from_fractions(1, 2, 0, 1);
        let mut h = Self::single(TermKind::PXPowP, 0, half.clone());
        h.add_term(TermKind::XPow, 2, half);
        h
    }

    pub fn add_term(&mut self, kind: TermKind, power: u32, coeff: ExactComplex) {
        if coeff.is_zero() {
            return;
        }
        let key = (kind, power);
        let sum = match self.terms.get(&key) {
            Some(existing) => existing + &coeff,
            None => coeff,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &OperatorSum) -> OperatorSum {
        let mut out = self.clone();
        for (&(kind, power), c) in &other.terms {
            out.add_term(kind, power, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &ExactComplex) -> OperatorSum {
        let mut out = OperatorSum::zero();
        for (&(kind, power), c) in &self.terms {
            out.add_term(kind, power, c * k);
        }
        out
    }

    pub fn scale_real(&self, k: &BigRational) -> OperatorSum {
        self.scale(&ExactComplex::real(k.clone()))
    }

    pub fn coeff(&self, kind: TermKind, power: u32) -> Option<&ExactComplex> {
        self.terms.get(&(kind, power))
    }

    pub fn terms(&self) -> impl Iterator<Item = OpTerm> + '_ {
        self.terms.iter().map(|(&(kind, power), c)| OpTerm {
            kind,
            power,
            coeff: c.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest power among the `p xᵃ p` terms.
    pub fn max_momentum_power(&self) -> Option<u32> {
        self.terms
            .keys()
            .filter(|(k, _)| *k == TermKind::PXPowP)
            .map(|&(_, p)| p)
            .max()
    }

    /// One term per line, in canonical order.
    pub fn dump(&self) -> String {
        self.terms().map(|t| format!("{t}\n")).collect()
    }

    /// Applies the operator at `x` to a function given by its jet there.
    ///
    /// `p xᵃ p f = -(a x^{a-1} f' + xᵃ f'')`.
    pub fn apply_to_jet(&self, f: Jet2, x: Complex) -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        for (&(kind, power), c) in &self.terms {
            let c = c.to_complex();
            let xa = x.powu(power);
            let v = match kind {
                TermKind::XPow => xa * f.v,
                TermKind::PXPowP => {
                    let lower = if power == 0 {
                        Complex::new(0.0, 0.0)
                    } else {
                        x.powu(power - 1) * power as f64 * f.d1
                    };
                    -(lower + xa * f.d2)
                }
            };
            acc += c * v;
        }
        acc
    }
}

impl fmt::Display for OperatorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// `[F, t]` for `F = x²p + px²`, applied termwise:
///
/// * `[F, xⁿ] = -2in x^{n+1}`
/// * `[F, p xⁿ p] = i(8 - 2n) p x^{n+1} p - 2ni x^{n-1}`
///
/// The second rule never yields `x^{-1}`: its coefficient vanishes at `n = 0`.
pub fn commute_f(t: &OperatorSum) -> OperatorSum {
    let mut out = OperatorSum::zero();
    for term in t.terms() {
        let n = i64::from(term.power);
        match term.kind {
            TermKind::XPow => {
                let k = ExactComplex::from_int(0, -2 * n);
                out.add_term(TermKind::XPow, term.power + 1, &term.coeff * &k);
            }
            TermKind::PXPowP => {
                let k = ExactComplex::from_int(0, 8 - 2 * n);
                out.add_term(TermKind::PXPowP, term.power + 1, &term.coeff * &k);
                if term.power > 0 {
                    let k = ExactComplex::from_int(0, -2 * n);
                    out.add_term(TermKind::XPow, term.power - 1, &term.coeff * &k);
                }
            }
        }
    }
    out
}

/// Operator-valued polynomial in ε: entry `k` is the coefficient of `εᵏ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedOperator {
    orders: Vec<OperatorSum>,
}

impl GradedOperator {
    pub fn with_order(order: usize) -> Self {
        Self {
            orders: vec![OperatorSum::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.orders.len().saturating_sub(1)
    }

    pub fn at(&self, k: usize) -> &OperatorSum {
        &self.orders[k]
    }

    pub fn orders(&self) -> &[OperatorSum] {
        &self.orders
    }

    pub(crate) fn add_at(&mut self, k: usize, kind: TermKind, power: u32, coeff: ExactComplex) {
        self.orders[k].add_term(kind, power, coeff);
    }

    pub(crate) fn set(&mut self, k: usize, op: OperatorSum) {
        self.orders[k] = op;
    }

    /// Orders at which `self` and `other` differ, up to the smaller order.
    pub fn mismatched_orders(&self, other: &GradedOperator) -> Vec<usize> {
        self.orders
            .iter()
            .zip(&other.orders)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(k, _)| k)
            .collect()
    }

    /// Binds ε and applies the truncated series to a jet.
    pub fn apply_to_jet(&self, eps: f64, f: Jet2, x: Complex) -> Complex {
        self.orders
            .iter()
            .enumerate()
            .map(|(k, op)| op.apply_to_jet(f, x) * eps.powi(k as i32))
            .sum()
    }

    /// Sections `eps^k` followed by that order's terms.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, op) in self.orders.iter().enumerate() {
            out.push_str(&format!("eps^{k}\n"));
            out.push_str(&op.dump());
        }
        out
    }
}
