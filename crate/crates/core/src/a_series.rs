//! The three-term series `a_n(μ) = 2(1-μ) a_{n-1}(μ) - a_{n-2}(μ)` with
//! `a_{-1} = 0` and `a_0 = 1`.
//!
//! `a_n` is a degree-n polynomial in μ; with μ = 1 - cos θ it equals
//! `sin((n+1)θ) / sin θ`, the Chebyshev polynomial of the second kind in
//! `1 - μ`. Everything that builds polynomials here is exact; the `f64`
//! evaluators run the recurrence directly, which stays well conditioned on
//! [0, 2] where the monomial form does not.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

use crate::poly::{IntPoly, RationalPoly};

/// Evaluates `a_n(μ)` by the forward recurrence. Exact for exact `T`.
///
/// Panics if `n < -1`.
pub fn eval_a<T: Num + Clone>(n: i64, mu: T) -> T {
    assert!(n >= -1, "a-series index must be at least -1, got {n}");
    if n == -1 {
        return T::zero();
    }
    let two = T::one() + T::one();
    let beta = two * (T::one() - mu);
    let mut prev = T::zero();
    let mut cur = T::one();
    for _ in 0..n {
        let next = beta.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `a_{-1}(μ), ..., a_max(μ)` in one pass; entry `k` holds `a_{k-1}(μ)`.
pub fn a_values(max: i64, mu: f64) -> Vec<f64> {
    assert!(max >= -1);
    let beta = 2.0 * (1.0 - mu);
    let mut out = Vec::with_capacity((max + 2) as usize);
    out.push(0.0);
    if max >= 0 {
        out.push(1.0);
    }
    for k in 2..(max + 2) as usize {
        out.push(beta * out[k - 1] - out[k - 2]);
    }
    out
}

/// Coefficient vector of `a_n(μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASeriesPoly {
    pub index: i64,
    pub poly: IntPoly,
}

impl ASeriesPoly {
    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }
}

/// Exact integer coefficients of `a_n`, built by the polynomial recurrence.
/// `n = -1` yields the zero polynomial.
pub fn coeffs_a(n: i64) -> ASeriesPoly {
    assert!(n >= -1, "a-series index must be at least -1, got {n}");
    ASeriesPoly {
        index: n,
        poly: a_polys(n).pop().unwrap(),
    }
}

/// `a_{-1}, a_0, ..., a_max` as integer polynomials; entry `k` is `a_{k-1}`.
pub fn a_polys(max: i64) -> Vec<IntPoly> {
    assert!(max >= -1);
    let beta = IntPoly::new(vec![BigInt::from(2), BigInt::from(-2)]);
    let mut out = vec![IntPoly::zero()];
    if max >= 0 {
        out.push(IntPoly::new(vec![BigInt::from(1)]));
    }
    for k in 2..(max + 2) as usize {
        let next = &(&beta * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out
}

/// Exact coefficients of `Σ c_k · a_{i_k}(μ)`, trailing zeros trimmed.
pub fn linear_combination(terms: &[(BigRational, i64)]) -> RationalPoly {
    let Some(max) = terms.iter().map(|&(_, i)| i).max() else {
        return RationalPoly::zero();
    };
    let polys = a_polys(max);
    terms.iter().fold(RationalPoly::zero(), |acc, (c, i)| {
        let term = polys[(i + 1) as usize].to_rational().scale(c);
        &acc + &term
    })
}

/// Floating-point view of a linear combination of a-series terms,
/// evaluated through the recurrence rather than the monomial basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesCombination {
    terms: Vec<(f64, i64)>,
    max_index: i64,
}

impl SeriesCombination {
    pub fn new(terms: Vec<(f64, i64)>) -> Self {
        let max_index = terms.iter().map(|&(_, i)| i).max().unwrap_or(-1);
        assert!(terms.iter().all(|&(_, i)| i >= -1));
        Self { terms, max_index }
    }

    pub fn from_exact(terms: &[(BigRational, i64)]) -> Self {
        Self::new(
            terms
                .iter()
                .map(|(c, i)| (c.to_f64().unwrap_or(f64::NAN), *i))
                .collect(),
        )
    }

    pub fn terms(&self) -> &[(f64, i64)] {
        &self.terms
    }

    pub fn eval(&self, mu: f64) -> f64 {
        self.eval_with_derivative(mu).0
    }

    /// Value and first derivative in μ. The derivative follows from
    /// differentiating the recurrence:
    /// `a'_k = -2 a_{k-1} + 2(1-μ) a'_{k-1} - a'_{k-2}`.
    pub fn eval_with_derivative(&self, mu: f64) -> (f64, f64) {
        let len = (self.max_index + 2) as usize;
        let beta = 2.0 * (1.0 - mu);
        let mut val = vec![0.0; len];
        let mut der = vec![0.0; len];
        if len > 1 {
            val[1] = 1.0;
        }
        for k in 2..len {
            val[k] = beta * val[k - 1] - val[k - 2];
            der[k] = -2.0 * val[k - 1] + beta * der[k - 1] - der[k - 2];
        }
        self.terms.iter().fold((0.0, 0.0), |(f, d), &(c, i)| {
            let k = (i + 1) as usize;
            (f + c * val[k], d + c * der[k])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn known_values() {
        assert_eq!(eval_a(3, 0i64), 4);
        assert_eq!(eval_a(4, 2i64), 5);
        assert_eq!(eval_a(2, 1i64), -1);
        assert_eq!(eval_a(-1, 0.3f64), 0.0);
        assert_eq!(eval_a(0, q(7, 3)), BigRational::one());
    }

    #[test]
    fn known_coefficients() {
        assert_eq!(coeffs_a(0).coeffs(), ints(&[1]).as_slice());
        assert_eq!(coeffs_a(1).coeffs(), ints(&[2, -2]).as_slice());
        assert_eq!(coeffs_a(2).coeffs(), ints(&[3, -8, 4]).as_slice());
        assert!(coeffs_a(-1).poly.is_zero());
    }

    #[test]
    fn combinations() {
        let p = linear_combination(&[(q(1, 1), 1), (q(1, 1), 0)]);
        assert_eq!(p.coeffs(), &[q(3, 1), q(-2, 1)]);
        let p = linear_combination(&[(q(1, 1), 1), (q(-1, 1), -1)]);
        assert_eq!(p.coeffs(), &[q(2, 1), q(-2, 1)]);
        assert!(linear_combination(&[]).is_zero());
        assert!(linear_combination(&[(q(1, 1), 2), (q(-1, 1), 2)]).is_zero());
    }

    #[test]
    fn f2_pattern_at_three_halves() {
        // oracle: assemble a_2 - (1-λ)a_1 - a_0 + (1-λ)a_{-1} by hand from
        // the coefficient vectors, λ = 3/2
        let one_minus = q(-1, 2);
        let a2 = coeffs_a(2).poly.to_rational();
        let a1 = coeffs_a(1).poly.to_rational();
        let a0 = coeffs_a(0).poly.to_rational();
        let by_hand = &(&a2 - &a1.scale(&one_minus)) - &a0;
        assert_eq!(by_hand.coeffs(), &[q(3, 1), q(-9, 1), q(4, 1)]);

        let p = linear_combination(&[
            (q(1, 1), 2),
            (-one_minus.clone(), 1),
            (q(-1, 1), 0),
            (one_minus, -1),
        ]);
        assert_eq!(p, by_hand);
    }

    #[test]
    fn table_and_values_agree() {
        let polys = a_polys(12);
        let vals = a_values(12, 0.37);
        for (k, p) in polys.iter().enumerate() {
            let horner: f64 = p.to_f64().iter().rev().fold(0.0, |acc, c| acc * 0.37 + c);
            assert!((horner - vals[k]).abs() < 1e-9, "k = {k}");
        }
        assert!(a_polys(-1)[0].is_zero());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let comb = SeriesCombination::new(vec![(1.0, 5), (-0.3, 4), (2.0, 1)]);
        for &x in &[0.1, 0.77, 1.3, 1.95] {
            let h = 1e-6;
            let fd = (comb.eval(x + h) - comb.eval(x - h)) / (2.0 * h);
            let (_, d) = comb.eval_with_derivative(x);
            assert!((fd - d).abs() < 1e-6 * d.abs().max(1.0));
        }
    }

    #[test]
    fn empty_combination_is_zero() {
        let comb = SeriesCombination::new(vec![]);
        assert_eq!(comb.eval_with_derivative(0.5), (0.0, 0.0));
        assert!(eval_a(-1, BigRational::zero()).is_zero());
    }
}
