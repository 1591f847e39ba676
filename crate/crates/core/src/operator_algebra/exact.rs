use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numerics::Complex;

/// Complex number with arbitrary-precision rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(ratio(re_num, re_den), ratio(im_num, im_den))
    }

    pub fn from_int(re: i64, im: i64) -> Self {
        Self::from_fractions(re, 1, im, 1)
    }

    pub fn real(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1, 0)
    }

    pub fn i() -> Self {
        Self::from_int(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn to_complex(&self) -> Complex {
        Complex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

pub(crate) fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `1/k!`.
pub(crate) fn inv_factorial(k: u32) -> BigRational {
    let f = (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
    BigRational::new(BigInt::one(), f)
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

impl fmt::Display for ExactComplex {
    /// `(re/den + im/den i)`, both parts always written as fractions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_ratio(f, &self.re)?;
        f.write_str(" + ")?;
        write_ratio(f, &self.im)?;
        f.write_str(" i)")
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-&self.re, -&self.im)
    }
}

impl ExactComplex {
    /// Largest absolute numerator or denominator, for growth diagnostics.
    pub fn height(&self) -> BigInt {
        [self.re.numer(), self.re.denom(), self.im.numer(), self.im.denom()]
            .into_iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let i = ExactComplex::i();
        assert_eq!(&i * &i, ExactComplex::from_int(-1, 0));
        let a = ExactComplex::from_fractions(1, 2, -3, 4);
        assert_eq!(a.to_string(), "(1/2 + -3/4 i)");
        assert_eq!((&a - &a).to_string(), "(0/1 + 0/1 i)");
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(ExactComplex::from_int(0, 2).pow(4), ExactComplex::from_int(16, 0));
        assert_eq!(inv_factorial(4), ratio(1, 24));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(a.to_complex(), Complex::new(0.5, -0.75));
        assert_eq!(a.height(), BigInt::from(4));
    }
}
