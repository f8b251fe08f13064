//! Real roots in (0, 2) of the fixed polynomial families and of the
//! cleared-denominator λ-equation.
//!
//! Every polynomial handled here has only simple real roots inside (0, 2),
//! so isolation is done by exact sign sampling on a uniform grid, then
//! bisection and a single guarded Newton step in `f64`.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::a_series::{a_polys, linear_combination, SeriesCombination};
use crate::error::{Error, Result};
use crate::poly::{IntPoly, RationalPoly};

/// Width at which bisection stops.
const BISECTION_WIDTH: f64 = 1e-14;
/// Grid points per unit of degree on the first pass.
const SAMPLES_PER_DEGREE: usize = 8;
/// How many times the grid is refined fourfold before giving up.
const MAX_REFINEMENTS: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `a_m = 0`, m = (n-1)/2
    OddZero,
    /// `a_m + a_{m-1} = 0`
    OddPlus,
    /// `a_m - a_{m-1} = 0`
    OddMinus,
    /// `a_k + a_{k-1} = 0`, k = n/2
    EvenPlus,
    /// `a_{k-1} = 0`
    EvenZero,
    /// `a_k - a_{k-2} = 0`
    EvenMinus,
}

impl FamilyKind {
    pub const ODD: [FamilyKind; 3] = [Self::OddZero, Self::OddPlus, Self::OddMinus];
    pub const EVEN: [FamilyKind; 3] = [Self::EvenPlus, Self::EvenZero, Self::EvenMinus];

    pub fn for_odd_n(self) -> bool {
        matches!(self, Self::OddZero | Self::OddPlus | Self::OddMinus)
    }
}

/// A family polynomial for a specific polygon parameter `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootFamily {
    kind: FamilyKind,
    n: u32,
}

impl RootFamily {
    pub fn new(kind: FamilyKind, n: u32) -> Result<Self> {
        if n < 2 || kind.for_odd_n() != (n % 2 == 1) {
            return Err(Error::ParityMismatch { kind, n });
        }
        Ok(Self { kind, n })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The family as `(coefficient, a-series index)` terms.
    pub fn terms(&self) -> Vec<(BigRational, i64)> {
        let one = BigRational::one();
        let minus = -BigRational::one();
        let h = (self.n / 2) as i64; // m for odd n, k for even n
        match self.kind {
            FamilyKind::OddZero => vec![(one, h)],
            FamilyKind::OddPlus => vec![(one.clone(), h), (one, h - 1)],
            FamilyKind::OddMinus => vec![(one, h), (minus, h - 1)],
            FamilyKind::EvenPlus => vec![(one.clone(), h), (one, h - 1)],
            FamilyKind::EvenZero => vec![(one, h - 1)],
            FamilyKind::EvenMinus => vec![(one, h), (minus, h - 2)],
        }
    }

    pub fn polynomial(&self) -> RationalPoly {
        linear_combination(&self.terms())
    }

    /// Closed-form `(Σ 1/μ, Π μ)` over the family's roots.
    pub fn vieta_closed_form(&self) -> (BigRational, BigRational) {
        let n = BigInt::from(self.n);
        let r = |num: BigInt, den: BigInt| BigRational::new(num, den);
        let pow2 = |e: u32| BigInt::one() << e;
        let nn = &n * &n;
        match self.kind {
            FamilyKind::OddMinus => (
                r(&nn - 1, 4.into()),
                r(1.into(), pow2((self.n - 1) / 2)),
            ),
            FamilyKind::OddPlus => (
                r(&nn - 1, 12.into()),
                r(n.clone(), pow2((self.n - 1) / 2)),
            ),
            FamilyKind::OddZero => (
                r(&nn + 2 * &n - 3, 12.into()),
                r(&n + 1, pow2(self.n.div_ceil(2))),
            ),
            FamilyKind::EvenMinus => (r(nn, 4.into()), r(1.into(), pow2(self.n / 2 - 1))),
            FamilyKind::EvenZero => (r(&nn - 4, 12.into()), r(n.clone(), pow2(self.n / 2))),
            FamilyKind::EvenPlus => (
                r(&nn + 2 * &n, 12.into()),
                r(&n + 1, pow2(self.n / 2)),
            ),
        }
    }
}

/// What a [`RootSet`] was solved for.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RootSource {
    Family(RootFamily),
    Lambda { n: u32, lambda: f64 },
}

/// Sorted roots in (0, 2) with their reciprocal sum and product.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub source: RootSource,
    pub roots: Vec<f64>,
    pub reciprocal_sum: f64,
    pub product: f64,
}

impl RootSet {
    fn new(source: RootSource, roots: Vec<f64>) -> Self {
        let reciprocal_sum = roots.iter().map(|r| 1.0 / r).sum();
        let product = roots.iter().product();
        Self {
            source,
            roots,
            reciprocal_sum,
            product,
        }
    }
}

pub fn roots_of_family(family: RootFamily) -> Result<RootSet> {
    let terms = family.terms();
    let exact = linear_combination(&terms).clear_denominators();
    let stable = SeriesCombination::from_exact(&terms);
    let roots = isolate_roots(&exact, &stable)?;
    Ok(RootSet::new(RootSource::Family(family), roots))
}

/// Roots of `1 - (a_{m+1} - a_{m-1}) / (a_m - a_{m-2}) = λ` (odd n,
/// m = (n-1)/2) or `1 - (a_k - a_{k-1}) / (a_{k-1} - a_{k-2}) = λ` (even n,
/// k = n/2), via the cleared form `P(x) - (1-λ) Q(x) = 0`.
pub fn solve_lambda_equation(n: u32, lambda: f64) -> Result<RootSet> {
    LambdaSolver::new(n)?.solve(lambda)
}

/// `(coefficient, index)` terms of the cleared λ-equation.
pub fn lambda_equation_terms(n: u32, lambda: &BigRational) -> Result<Vec<(BigRational, i64)>> {
    let (p, q) = lambda_indices(n)?;
    let one = BigRational::one();
    let c = &one - lambda;
    Ok(vec![
        (one.clone(), p.0),
        (-one, p.1),
        (-c.clone(), q.0),
        (c, q.1),
    ])
}

/// Closed-form `(Σ 1/μ_i(λ), Π μ_i(λ))` for the λ-equation.
pub fn lambda_vieta_closed_form(n: u32, lambda: f64) -> (f64, f64) {
    let nf = n as f64;
    if n % 2 == 1 {
        let h = (nf - 1.0) / 2.0;
        (nf / lambda + h * h, lambda / 2f64.powi(((n - 1) / 2) as i32))
    } else {
        (
            nf / lambda + (nf * nf - 2.0 * nf) / 4.0,
            lambda / 2f64.powi((n / 2) as i32),
        )
    }
}

/// Index pairs `(P+, P-)` and `(Q+, Q-)` with `P = a_{P+} - a_{P-}`.
fn lambda_indices(n: u32) -> Result<((i64, i64), (i64, i64))> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let h = (n / 2) as i64;
    Ok(if n % 2 == 1 {
        ((h + 1, h - 1), (h, h - 2))
    } else {
        ((h, h - 1), (h - 1, h - 2))
    })
}

/// Solves the λ-equation for one `n` and many λ, reusing the integer
/// polynomials `P` and `Q`.
#[derive(Clone, Debug)]
pub struct LambdaSolver {
    n: u32,
    p: IntPoly,
    q: IntPoly,
    indices: ((i64, i64), (i64, i64)),
}

impl LambdaSolver {
    pub fn new(n: u32) -> Result<Self> {
        let indices = lambda_indices(n)?;
        let ((p1, p0), (q1, q0)) = indices;
        let polys = a_polys(p1);
        let at = |i: i64| &polys[(i + 1) as usize];
        Ok(Self {
            n,
            p: at(p1) - at(p0),
            q: at(q1) - at(q0),
            indices,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn expected_degree(&self) -> usize {
        (self.n as usize).div_ceil(2)
    }

    /// `den · (P - (1-λ) Q)` with λ = num/den exactly.
    pub fn cleared_polynomial(&self, lambda: &BigRational) -> IntPoly {
        let den = lambda.denom();
        let num_c = den - lambda.numer();
        &self.p.scale(den) - &self.q.scale(&num_c)
    }

    pub fn solve(&self, lambda: f64) -> Result<RootSet> {
        if !(lambda > 0.0 && lambda < 2.0) {
            return Err(Error::InvalidParameter(format!(
                "lambda must lie strictly inside (0, 2), got {lambda}"
            )));
        }
        let exact_lambda = BigRational::from_float(lambda)
            .ok_or_else(|| Error::InvalidParameter(format!("non-finite lambda {lambda}")))?;
        let exact = self.cleared_polynomial(&exact_lambda);
        let c = 1.0 - lambda;
        let ((p1, p0), (q1, q0)) = self.indices;
        let stable = SeriesCombination::new(vec![(1.0, p1), (-1.0, p0), (-c, q1), (c, q0)]);
        let roots = isolate_roots(&exact, &stable)?;
        if roots.len() != self.expected_degree() {
            return Err(Error::RootIsolation {
                found: roots.len(),
                expected: self.expected_degree(),
            });
        }
        Ok(RootSet::new(RootSource::Lambda { n: self.n, lambda }, roots))
    }
}

/// `(Σ 1/r, Π r)` over the roots of `poly`, read off the coefficients.
pub fn vieta_sums(poly: &RationalPoly) -> Result<(BigRational, BigRational)> {
    let coeffs = poly.coeffs();
    let Some(deg) = poly.degree() else {
        return Err(Error::InvalidParameter("zero polynomial".into()));
    };
    let b0 = &coeffs[0];
    if b0.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let b1 = coeffs.get(1).cloned().unwrap_or_else(BigRational::zero);
    let mut product = b0 / &coeffs[deg];
    if deg % 2 == 1 {
        product = -product;
    }
    Ok((-b1 / b0, product))
}

/// All real roots of `exact` in (0, 2), assuming they are simple and that
/// their number equals the degree. `stable` must be a positive multiple of
/// the same polynomial, evaluated in floating point.
fn isolate_roots(exact: &IntPoly, stable: &SeriesCombination) -> Result<Vec<f64>> {
    let Some(degree) = exact.degree() else {
        return Err(Error::InvalidParameter("zero polynomial has no isolated roots".into()));
    };
    if degree == 0 {
        return Ok(Vec::new());
    }
    let mut found = 0;
    for refinement in 0..=MAX_REFINEMENTS {
        let samples = SAMPLES_PER_DEGREE * degree * 4usize.pow(refinement);
        let candidates = sign_changes(exact, samples);
        found = candidates.len();
        if found == degree {
            let mut roots: Vec<f64> = candidates
                .into_iter()
                .map(|c| match c {
                    Candidate::Exact(x) => x,
                    Candidate::Bracket { lo, hi, lo_sign } => refine(stable, lo, hi, lo_sign),
                })
                .collect();
            roots.sort_by(f64::total_cmp);
            return Ok(roots);
        }
    }
    Err(Error::RootIsolation {
        found,
        expected: degree,
    })
}

enum Candidate {
    Exact(f64),
    Bracket { lo: f64, hi: f64, lo_sign: Sign },
}

/// Exact signs at `2k/samples`, k = 0..=samples.
fn sign_changes(poly: &IntPoly, samples: usize) -> Vec<Candidate> {
    let den = BigInt::from(samples);
    let at = |k: usize| 2.0 * k as f64 / samples as f64;
    let mut out = Vec::new();
    let mut last: Option<Sign> = None;
    for k in 0..=samples {
        let s = poly.sign_at(&BigInt::from(2 * k), &den);
        if s == Sign::NoSign {
            out.push(Candidate::Exact(at(k)));
            last = None;
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                out.push(Candidate::Bracket {
                    lo: at(k - 1),
                    hi: at(k),
                    lo_sign: prev,
                });
            }
        }
        last = Some(s);
    }
    out
}

fn sign_of(x: f64) -> Sign {
    if x > 0.0 {
        Sign::Plus
    } else if x < 0.0 {
        Sign::Minus
    } else {
        Sign::NoSign
    }
}

fn refine(f: &SeriesCombination, mut lo: f64, mut hi: f64, lo_sign: Sign) -> f64 {
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match sign_of(f.eval(mid)) {
            Sign::NoSign => return mid,
            s if s == lo_sign => lo = mid,
            _ => hi = mid,
        }
    }
    let x = 0.5 * (lo + hi);
    let (fx, dx) = f.eval_with_derivative(x);
    if dx != 0.0 && dx.is_finite() {
        let step = x - fx / dx;
        if step >= lo && step <= hi && f.eval(step).abs() <= fx.abs() {
            return step;
        }
    }
    x
}

/// Exact rational value of a family root set's Vieta sums, computed from
/// the family polynomial itself.
pub fn family_vieta_from_polynomial(family: RootFamily) -> Result<(BigRational, BigRational)> {
    vieta_sums(&family.polynomial())
}

/// `Σ 1/r` and `Π r` of a root set as `f64`, checked against a target pair
/// within `tol` (absolute, scaled by `max(1, |target|)`).
pub fn vieta_matches(set: &RootSet, expected: (f64, f64), tol: f64) -> bool {
    let close = |a: f64, b: f64| (a - b).abs() <= tol * b.abs().max(1.0);
    close(set.reciprocal_sum, expected.0) && close(set.product, expected.1)
}

/// Convenience: closed form as `f64`.
pub fn family_vieta_f64(family: RootFamily) -> (f64, f64) {
    let (s, p) = family.vieta_closed_form();
    (s.to_f64().unwrap(), p.to_f64().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parity_is_enforced() {
        assert!(RootFamily::new(FamilyKind::OddZero, 4).is_err());
        assert!(RootFamily::new(FamilyKind::EvenPlus, 5).is_err());
        assert!(RootFamily::new(FamilyKind::EvenPlus, 1).is_err());
        assert!(RootFamily::new(FamilyKind::OddMinus, 3).is_ok());
    }

    #[test]
    fn small_families() {
        let plus = roots_of_family(RootFamily::new(FamilyKind::EvenPlus, 2).unwrap()).unwrap();
        assert_eq!(plus.roots, vec![1.5]);
        let zero = roots_of_family(RootFamily::new(FamilyKind::EvenZero, 2).unwrap()).unwrap();
        assert!(zero.roots.is_empty());
        assert_eq!((zero.reciprocal_sum, zero.product), (0.0, 1.0));
        let odd = roots_of_family(RootFamily::new(FamilyKind::OddZero, 3).unwrap()).unwrap();
        assert_eq!(odd.roots, vec![1.0]);
    }

    #[test]
    fn lambda_equation_small_cases() {
        let r = solve_lambda_equation(2, 1.5).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0] - 0.75).abs() < 1e-15);

        // quadratic formula on 4x^2 - 9x + 3
        let r = solve_lambda_equation(3, 1.5).unwrap();
        let disc = 33f64.sqrt();
        let expected = [(9.0 - disc) / 8.0, (9.0 + disc) / 8.0];
        for (got, want) in r.roots.iter().zip(expected) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
        assert!((r.reciprocal_sum - 3.0).abs() < 1e-12);
        assert!((r.product - 0.75).abs() < 1e-12);
    }

    #[test]
    fn cleared_polynomial_matches_linear_combination() {
        for n in 2..=11 {
            let solver = LambdaSolver::new(n).unwrap();
            for lambda in [0.25, 1.0, 1.5, 0.123456789] {
                let exact = BigRational::from_float(lambda).unwrap();
                let via_terms =
                    linear_combination(&lambda_equation_terms(n, &exact).unwrap()).clear_denominators();
                let cleared = solver.cleared_polynomial(&exact);
                // same polynomial up to a positive integer factor
                let a = via_terms.to_rational();
                let b = cleared.to_rational();
                let ratio = &b.coeffs()[0] / &a.coeffs()[0];
                assert!(ratio > BigRational::zero());
                assert_eq!(a.scale(&ratio), b, "n = {n}");
            }
        }
    }

    #[test]
    fn lambda_out_of_range() {
        assert!(solve_lambda_equation(3, 0.0).is_err());
        assert!(solve_lambda_equation(3, 2.0).is_err());
        assert!(solve_lambda_equation(3, f64::NAN).is_err());
        assert!(solve_lambda_equation(1, 1.0).is_err());
    }

    #[test]
    fn vieta_from_coefficients() {
        let p = RationalPoly::new(vec![q(3, 1), q(-2, 1)]);
        assert_eq!(vieta_sums(&p).unwrap(), (q(2, 3), q(3, 2)));
        let p = RationalPoly::new(vec![q(3, 1), q(-9, 1), q(4, 1)]);
        assert_eq!(vieta_sums(&p).unwrap(), (q(3, 1), q(3, 4)));
        let p = RationalPoly::new(vec![q(0, 1), q(1, 1)]);
        assert!(matches!(vieta_sums(&p), Err(Error::ZeroRoot)));
    }

    #[test]
    fn lambda_product_matches_constant_term() {
        // constant term of the odd-n cleared form is 2λ
        for n in [3u32, 5, 7, 9] {
            let lambda = q(3, 2);
            let p = linear_combination(&lambda_equation_terms(n, &lambda).unwrap());
            assert_eq!(p.coeffs()[0], q(3, 1));
            let (_, product) = vieta_sums(&p).unwrap();
            assert_eq!(product, q(3, 2) / BigRational::from_integer(BigInt::one() << ((n - 1) / 2)));
        }
    }

    #[test]
    fn closed_forms_agree_with_exact_polynomials() {
        for n in 2..=15u32 {
            let kinds = if n % 2 == 1 { FamilyKind::ODD } else { FamilyKind::EVEN };
            for kind in kinds {
                let fam = RootFamily::new(kind, n).unwrap();
                assert_eq!(
                    family_vieta_from_polynomial(fam).unwrap(),
                    fam.vieta_closed_form(),
                    "{kind:?} n = {n}"
                );
            }
        }
    }
}
