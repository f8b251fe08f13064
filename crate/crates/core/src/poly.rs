//! Dense univariate polynomials over arbitrary-precision integers and
//! rationals, coefficients stored lowest degree first.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial with integer coefficients. The zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Sign of `p(num/den)` for `den > 0`, computed exactly as the sign of
    /// `den^deg · p(num/den)`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> Sign {
        debug_assert!(den.is_positive());
        let Some(deg) = self.degree() else {
            return Sign::NoSign;
        };
        // Horner on the homogenized form: acc = acc·num + c_i·den^(deg-i)
        let mut acc = self.coeffs[deg].clone();
        let mut den_pow = BigInt::one();
        for c in self.coeffs[..deg].iter().rev() {
            den_pow *= den;
            acc = acc * num + c * &den_pow;
        }
        acc.sign()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn to_rational(&self) -> RationalPoly {
        RationalPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(zip_longest(&self.coeffs, &rhs.coeffs, |a, b| a + b))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(zip_longest(&self.coeffs, &rhs.coeffs, |a, b| a - b))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(convolve(&self.coeffs, &rhs.coeffs))
    }
}

/// Polynomial with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Multiplies through by the lcm of the denominators, giving an integer
    /// polynomial with the same roots and the same sign pattern.
    pub fn clear_denominators(&self) -> IntPoly {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        )
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        RationalPoly::new(zip_longest(&self.coeffs, &rhs.coeffs, |a, b| a + b))
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        RationalPoly::new(zip_longest(&self.coeffs, &rhs.coeffs, |a, b| a - b))
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        RationalPoly::new(convolve(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn trim<T: Zero>(coeffs: &mut Vec<T>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

fn zip_longest<T, F>(a: &[T], b: &[T], f: F) -> Vec<T>
where
    T: Zero + Clone,
    F: Fn(&T, &T) -> T,
{
    let zero = T::zero();
    (0..a.len().max(b.len()))
        .map(|i| f(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect()
}

fn convolve<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Zero + Clone,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_trims() {
        let a = ip(&[1, 2, 3]);
        let b = ip(&[0, 0, 3]);
        assert_eq!((&a - &b), ip(&[1, 2]));
        assert_eq!((&a - &a).degree(), None);
        assert_eq!(&ip(&[1, 1]) * &ip(&[-1, 1]), ip(&[-1, 0, 1]));
    }

    #[test]
    fn exact_sign() {
        // (x - 1/2)(x - 3/2) = x^2 - 2x + 3/4, times 4
        let p = ip(&[3, -8, 4]);
        assert_eq!(p.sign_at(&0.into(), &1.into()), Sign::Plus);
        assert_eq!(p.sign_at(&1.into(), &1.into()), Sign::Minus);
        assert_eq!(p.sign_at(&1.into(), &2.into()), Sign::NoSign);
        assert_eq!(p.sign_at(&3.into(), &2.into()), Sign::NoSign);
        assert_eq!(p.sign_at(&7.into(), &4.into()), Sign::Plus);
    }

    #[test]
    fn clearing_denominators_keeps_roots() {
        let p = RationalPoly::new(vec![q(3, 4), q(-2, 1), q(1, 1)]);
        let ints = p.clear_denominators();
        assert_eq!(ints, ip(&[3, -8, 4]));
        assert!(p.eval(&q(1, 2)).is_zero());
    }
}
