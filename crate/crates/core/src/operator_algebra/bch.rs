use num_bigint::BigInt;
use num_rational::BigRational;

use super::exact::{binomial, inv_factorial, ratio, ExactComplex};
use super::terms::{commute_f, GradedOperator, OperatorSum, TermKind};
use crate::error::{Error, Result};

pub const MAX_BCH_ORDER: usize = 16;
pub const MAX_TARGET_ORDER: usize = 32;

fn check_order(order: usize, max: usize) -> Result<()> {
    if order > max {
        Err(Error::InvalidArgument(format!(
            "expansion order {order} exceeds the maximum {max}"
        )))
    } else {
        Ok(())
    }
}

/// `e^{εF} h e^{-εF} = Σ_k εᵏ/k! C_k` with `C_0 = h` and `C_k = [F, C_{k-1}]`,
/// truncated after `εᴺ`.
pub fn bch_series(order: usize) -> Result<GradedOperator> {
    check_order(order, MAX_BCH_ORDER)?;
    let mut out = GradedOperator::with_order(order);
    let mut nested = OperatorSum::oscillator();
    out.set(0, nested.clone());
    for k in 1..=order {
        nested = commute_f(&nested);
        out.set(k, nested.scale_real(&inv_factorial(k as u32)));
    }
    Ok(out)
}

/// Taylor expansion in ε of `½ p s⁴ p + 4ε² s² + x²/(2s²)`, `s = 1 + 2iεx`,
/// truncated after `εᴺ`.
///
/// The first two parts are polynomials of degree 4 in ε; the last uses
/// `1/s² = Σ_m (m+1)(-2iεx)ᵐ`.
pub fn target_expansion(order: usize) -> Result<GradedOperator> {
    check_order(order, MAX_TARGET_ORDER)?;
    let mut out = GradedOperator::with_order(order);
    let two_i = ExactComplex::from_int(0, 2);
    let minus_two_i = ExactComplex::from_int(0, -2);
    let half = ratio(1, 2);

    // ½ p (1 + 2iεx)⁴ p
    for k in 0..=4u32 {
        if k as usize > order {
            break;
        }
        let c = two_i
            .pow(k)
            .scale(&(BigRational::from(binomial(4, k)) * &half));
        out.add_at(k as usize, TermKind::PXPowP, k, c);
    }
    // 4ε² (1 + 2iεx)²
    for j in 0..=2u32 {
        let k = 2 + j as usize;
        if k > order {
            break;
        }
        let c = two_i.pow(j).scale(&BigRational::from(binomial(2, j) * BigInt::from(4)));
        out.add_at(k, TermKind::XPow, j, c);
    }
    // (x²/2) Σ (m+1)(-2iεx)ᵐ
    for m in 0..=order as u32 {
        let c = minus_two_i
            .pow(m)
            .scale(&(BigRational::from(BigInt::from(m + 1)) * &half));
        out.add_at(m as usize, TermKind::XPow, m + 2, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(power: u32, re: i64, im: i64) -> OperatorSum {
        OperatorSum::single(TermKind::XPow, power, ExactComplex::from_int(re, im))
    }

    fn pxp(power: u32, re: i64, im: i64) -> OperatorSum {
        OperatorSum::single(TermKind::PXPowP, power, ExactComplex::from_int(re, im))
    }

    #[test]
    fn zeroth_order_is_the_oscillator() {
        let b = bch_series(0).unwrap();
        assert_eq!(b.order(), 0);
        assert_eq!(b.at(0), &OperatorSum::oscillator());
        assert_eq!(target_expansion(0).unwrap().at(0), &OperatorSum::oscillator());
    }

    #[test]
    fn first_commutator() {
        let b = bch_series(1).unwrap();
        assert_eq!(b.at(1), &pxp(1, 0, 4).add(&x(3, 0, -2)));
    }

    #[test]
    fn target_blocks() {
        let t = target_expansion(6).unwrap();
        // ½·(1, 8i, -24, -32i, 16) from (1 + 2iεx)⁴
        let expected = [(1, 0), (0, 8), (-24, 0), (0, -32), (16, 0)];
        for (k, &(re, im)) in expected.iter().enumerate() {
            let c = t.at(k).coeff(TermKind::PXPowP, k as u32).unwrap();
            assert_eq!(c, &ExactComplex::from_fractions(re, 2, im, 2));
        }
        assert_eq!(t.at(1).coeff(TermKind::XPow, 3), Some(&ExactComplex::from_int(0, -2)));
        assert_eq!(t.at(5).max_momentum_power(), None);
    }

    #[test]
    fn bch_matches_target_through_eighth_order() {
        let b = bch_series(8).unwrap();
        let t = target_expansion(8).unwrap();
        assert!(b.mismatched_orders(&t).is_empty());
    }

    #[test]
    fn first_order_dump() {
        assert_eq!(
            bch_series(1).unwrap().dump(),
            "eps^0\n(1/2 + 0/1 i) * x^2\n(1/2 + 0/1 i) * p x^0 p\n\
             eps^1\n(0/1 + -2/1 i) * x^3\n(0/1 + 4/1 i) * p x^1 p\n"
        );
    }

    #[test]
    fn order_limits() {
        assert!(bch_series(17).is_err());
        assert!(target_expansion(33).is_err());
        assert!(target_expansion(32).is_ok());
    }
}
