//! Multiplicative degree-Kirchhoff index, Kemeny's constant and spanning
//! tree counts, both from a spectrum and from closed forms over generations.
//!
//! With `0 = λ_1 < λ_2 ≤ ... ≤ λ_N` the normalized-Laplacian spectrum:
//!
//! ```text
//! K    = Σ_{i≥2} 1/λ_i
//! Kf'  = 2E · K
//! N_st = (Π d_i) (Π_{i≥2} λ_i) / (2E)
//! ```
//!
//! The closed forms work in exact rationals internally; `f64` entry points
//! convert their (exactly representable) inputs and round once at the end.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{predict_counts, Graph};
use crate::oracle;
use crate::poly::RationalPoly;
use crate::spectrum::{Spectrum, SpectrumContext};

/// Largest exponent the exact spanning-tree closed form will expand.
pub const MAX_EXACT_EXPONENT: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    FromSpectrum,
    ClosedForm,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::FromSpectrum => "from_spectrum",
            Method::ClosedForm => "closed_form",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport {
    pub generation: u32,
    pub method: Method,
    pub kirchhoff: f64,
    pub kemeny: f64,
    /// `None` when the count is too large to materialize.
    pub spanning_trees: Option<BigUint>,
    /// Natural log of the spanning-tree count, always available.
    pub spanning_trees_ln: f64,
}

/// Invariants as exact rationals (spanning trees as an exact integer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactInvariants {
    pub generation: u32,
    pub kirchhoff: BigRational,
    pub kemeny: BigRational,
    pub spanning_trees: BigUint,
}

/// `Π d_i`, exact while it is small enough to hold.
#[derive(Clone, Debug, PartialEq)]
pub enum DegreeProduct {
    Exact(BigUint),
    Ln(f64),
}

impl DegreeProduct {
    pub fn of_degrees(degrees: &[usize]) -> Self {
        DegreeProduct::Exact(degrees.iter().map(|&d| BigUint::from(d)).product())
    }

    pub fn of_graph(graph: &Graph) -> Self {
        Self::of_degrees(&graph.degrees())
    }

    pub fn ln(&self) -> f64 {
        match self {
            DegreeProduct::Exact(p) => ln_big(p),
            DegreeProduct::Ln(l) => *l,
        }
    }

    /// Degree product of `τ_n^g(G)` from that of `G`. Each generation doubles
    /// every existing degree and adds `(n-1)E` vertices of degree 2, so the
    /// product gains a factor `2^{N_t}` at generation `t`.
    pub fn iterated(&self, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<Self> {
        let mut exponent = BigUint::zero();
        for t in 1..=g {
            exponent += predict_counts(n0, e0, n, t)?.vertices;
        }
        match (self, exponent.to_u64()) {
            (DegreeProduct::Exact(p), Some(e)) if e <= MAX_EXACT_EXPONENT => {
                Ok(DegreeProduct::Exact(p << e))
            }
            _ => Ok(DegreeProduct::Ln(
                self.ln() + std::f64::consts::LN_2 * big_to_f64(&exponent),
            )),
        }
    }
}

fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// Natural log of a positive big integer without overflowing `f64`.
fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return big_to_f64(x).ln();
    }
    let shift = bits - 64;
    big_to_f64(&(x >> shift)).ln() + shift as f64 * std::f64::consts::LN_2
}

fn ln_rational(x: &BigRational) -> f64 {
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    ln_big(num) - ln_big(den)
}

/// Rounds `exp(ln)` to an integer when `f64` can represent it.
fn count_from_ln(ln: f64) -> Option<BigUint> {
    let v = ln.exp();
    if !v.is_finite() {
        return None;
    }
    num_traits::FromPrimitive::from_f64(v.round())
}

/// Invariants from a spectrum via the eigenvalue sums above. The spanning
/// tree count is rounded from floating point and is only advisory for large
/// graphs.
pub fn invariants_from_spectrum(
    spectrum: &Spectrum,
    ctx: &SpectrumContext,
    degrees: &DegreeProduct,
    generation: u32,
) -> Result<InvariantReport> {
    let zeros = spectrum.multiplicity_of(0.0);
    if !zeros.is_one() {
        return Err(Error::InconsistentSpectrum(format!(
            "eigenvalue 0 has multiplicity {zeros}, expected 1"
        )));
    }
    let mut kemeny = 0.0;
    let mut ln_product = 0.0;
    for e in spectrum.entries().iter().filter(|e| e.value != 0.0) {
        let m = big_to_f64(&e.multiplicity);
        kemeny += m / e.value;
        ln_product += m * e.value.ln();
    }
    let two_e = 2.0 * big_to_f64(&ctx.edges);
    let ln_trees = degrees.ln() + ln_product - two_e.ln();
    Ok(InvariantReport {
        generation,
        method: Method::FromSpectrum,
        kirchhoff: two_e * kemeny,
        kemeny,
        spanning_trees: count_from_ln(ln_trees),
        spanning_trees_ln: ln_trees,
    })
}

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn rat_u(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

fn exact_float(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::InvalidParameter(format!("non-finite input {x}")))
}

fn check_params(n: u32, g: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    if g < 1 {
        return Err(Error::InvalidParameter("closed forms need g >= 1".into()));
    }
    Ok(())
}

/// One application of `τ_n` to Kf':
/// `(n²+n)Kf' + (2/3)(n+1)(n²-1)E² - (2/3)(n²-1)EN - (1/3)(n²-1)(n-2)E`.
pub fn kirchhoff_one_step(kf: &BigRational, n_vertices: &BigUint, n_edges: &BigUint, n: u32) -> BigRational {
    let nn = rat(n);
    let e = rat_u(n_edges);
    let v = rat_u(n_vertices);
    let sq1 = &nn * &nn - rat(1);
    let third = BigRational::new(1.into(), 3.into());
    (&nn * &nn + &nn) * kf + &third * rat(2) * (&nn + rat(1)) * &sq1 * &e * &e
        - &third * rat(2) * &sq1 * &e * v
        - third * sq1 * (nn - rat(2)) * e
}

/// Kf' of `τ_n^g(G)` directly from Kf'(G).
pub fn kirchhoff_iterated(kf0: &BigRational, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> BigRational {
    let nn = rat(n);
    let e = rat_u(e0);
    let v = rat_u(n0);
    let np1g = rat(BigInt::from(n + 1).pow(g));
    let ng = rat(BigInt::from(n).pow(g));
    let ng2 = rat(BigInt::from(n).pow(g + 2));
    let third = BigRational::new(1.into(), 3.into());
    let growth = Pow::pow(&nn * &nn + &nn, g);
    growth * kf0 - &third * (&nn - rat(2)) * &np1g * (&ng - rat(1)) * &e
        + rat(2) * (&nn - rat(1)) / (rat(3) * &nn)
            * &np1g
            * (&np1g * (&nn * &nn + rat(1)) - ng2 - rat(1))
            * &e
            * &e
        - third * rat(2) * &np1g * (ng - rat(1)) * e * v
}

/// Kemeny's constant after one application of `τ_n`:
/// `nK + (1/3)(n²-1)E - (1/3)(n-1)N - (1/6)(n-1)(n-2)`.
pub fn kemeny_one_step(k: &BigRational, n_vertices: &BigUint, n_edges: &BigUint, n: u32) -> BigRational {
    let nn = rat(n);
    let third = BigRational::new(1.into(), 3.into());
    let sixth = BigRational::new(1.into(), 6.into());
    &nn * k + &third * (&nn * &nn - rat(1)) * rat_u(n_edges)
        - third * (&nn - rat(1)) * rat_u(n_vertices)
        - sixth * (&nn - rat(1)) * (nn - rat(2))
}

/// Kemeny's constant of `τ_n^g(G)`, equal to `Kf'(τ_n^g(G)) / (2 E_g)`.
pub fn kemeny_iterated(k0: &BigRational, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> BigRational {
    let nn = rat(n);
    let ng = rat(BigInt::from(n).pow(g));
    let np1g = rat(BigInt::from(n + 1).pow(g));
    let ng2 = rat(BigInt::from(n).pow(g + 2));
    let third = BigRational::new(1.into(), 3.into());
    let sixth = BigRational::new(1.into(), 6.into());
    &ng * k0 - third * (&ng - rat(1)) * rat_u(n0) - sixth * (&nn - rat(2)) * (ng - rat(1))
        + (&nn - rat(1)) * ((&nn * &nn + rat(1)) * np1g - ng2 - rat(1)) / (rat(3) * nn) * rat_u(e0)
}

pub fn kirchhoff_closed_exact(
    kf0: &BigRational,
    n0: &BigUint,
    e0: &BigUint,
    n: u32,
    g: u32,
) -> Result<BigRational> {
    check_params(n, g)?;
    Ok(if g == 1 {
        kirchhoff_one_step(kf0, n0, e0, n)
    } else {
        kirchhoff_iterated(kf0, n0, e0, n, g)
    })
}

pub fn kemeny_closed_exact(
    k0: &BigRational,
    n0: &BigUint,
    e0: &BigUint,
    n: u32,
    g: u32,
) -> Result<BigRational> {
    check_params(n, g)?;
    Ok(if g == 1 {
        kemeny_one_step(k0, n0, e0, n)
    } else {
        kemeny_iterated(k0, n0, e0, n, g)
    })
}

/// Kf' of `τ_n^g(G)` from Kf'(G) (`g ≥ 1`).
pub fn kirchhoff_closed(kf0: f64, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<f64> {
    let exact = kirchhoff_closed_exact(&exact_float(kf0)?, n0, e0, n, g)?;
    Ok(exact.to_f64().unwrap_or(f64::INFINITY))
}

/// Kemeny's constant of `τ_n^g(G)` from K(G) (`g ≥ 1`).
pub fn kemeny_closed(k0: f64, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<f64> {
    let exact = kemeny_closed_exact(&exact_float(k0)?, n0, e0, n, g)?;
    Ok(exact.to_f64().unwrap_or(f64::INFINITY))
}

/// Exponents `(of n+1, of n)` in the spanning-tree closed form.
pub fn spanning_tree_exponents(n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<(BigUint, BigUint)> {
    check_params(n, g)?;
    let nb = BigUint::from(n);
    let n2 = &nb * &nb;
    let np1g = BigUint::from(n + 1).pow(g);
    let ng = &nb * BigUint::from(g);
    let gb = BigUint::from(g);
    // (n+1)^g - ng - 1 = Σ_{k≥2} C(g,k) n^k, so it is divisible by n²
    let core = &np1g - &ng - BigUint::one();
    let (q1, r1) = (BigUint::from(n - 1) * &core).div_rem(&n2);
    let (q2, r2) = (&np1g + BigUint::from(n - 1) * &ng - BigUint::one()).div_rem(&n2);
    if !r1.is_zero() || !r2.is_zero() {
        return Err(Error::Arithmetic(format!(
            "spanning-tree exponents not integral for n = {n}, g = {g}"
        )));
    }
    let exp_np1 = q1 * e0 + &gb * n0 - &gb;
    let exp_n = q2 * e0 + &gb - &gb * n0;
    Ok((exp_np1, exp_n))
}

fn exponent_u32(e: &BigUint) -> Result<u32> {
    match e.to_u64() {
        Some(v) if v <= MAX_EXACT_EXPONENT => Ok(v as u32),
        _ => Err(Error::Arithmetic(format!(
            "spanning-tree exponent {e} is too large to expand exactly"
        ))),
    }
}

/// `(n+1)^{N-1} n^{E-N+1} N_st(G)`.
pub fn spanning_trees_one_step(nst: &BigUint, n_vertices: &BigUint, n_edges: &BigUint, n: u32) -> Result<BigUint> {
    let e1 = exponent_u32(&(n_vertices - BigUint::one()))?;
    let e2 = exponent_u32(&(n_edges + BigUint::one() - n_vertices))?;
    Ok(BigUint::from(n + 1).pow(e1) * BigUint::from(n).pow(e2) * nst)
}

/// `N_st(τ_n^g(G))` from the general-g formula.
pub fn spanning_trees_iterated(nst0: &BigUint, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<BigUint> {
    let (a, b) = spanning_tree_exponents(n0, e0, n, g)?;
    Ok(BigUint::from(n + 1).pow(exponent_u32(&a)?) * BigUint::from(n).pow(exponent_u32(&b)?) * nst0)
}

pub fn spanning_trees_closed(nst0: &BigUint, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<BigUint> {
    check_params(n, g)?;
    if g == 1 {
        spanning_trees_one_step(nst0, n0, e0, n)
    } else {
        spanning_trees_iterated(nst0, n0, e0, n, g)
    }
}

/// Natural log of the closed-form spanning-tree count; never overflows.
pub fn spanning_trees_closed_ln(nst0: &BigUint, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<f64> {
    let (a, b) = spanning_tree_exponents(n0, e0, n, g)?;
    Ok(big_to_f64(&a) * ((n + 1) as f64).ln() + big_to_f64(&b) * (n as f64).ln() + ln_big(nst0))
}

/// Closed-form reports for generations `0..=g`; generation 0 repeats the
/// base values.
pub fn closed_form_chain(
    kf0: f64,
    k0: f64,
    nst0: &BigUint,
    n0: &BigUint,
    e0: &BigUint,
    n: u32,
    g: u32,
) -> Result<Vec<InvariantReport>> {
    let mut out = vec![InvariantReport {
        generation: 0,
        method: Method::ClosedForm,
        kirchhoff: kf0,
        kemeny: k0,
        spanning_trees: Some(nst0.clone()),
        spanning_trees_ln: ln_big(nst0),
    }];
    for t in 1..=g {
        out.push(InvariantReport {
            generation: t,
            method: Method::ClosedForm,
            kirchhoff: kirchhoff_closed(kf0, n0, e0, n, t)?,
            kemeny: kemeny_closed(k0, n0, e0, n, t)?,
            spanning_trees: spanning_trees_closed(nst0, n0, e0, n, t).ok(),
            spanning_trees_ln: spanning_trees_closed_ln(nst0, n0, e0, n, t)?,
        });
    }
    Ok(out)
}

/// Exact closed-form chain for generations `0..=g`.
pub fn closed_form_chain_exact(base: &ExactInvariants, n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<Vec<ExactInvariants>> {
    let mut out = vec![base.clone()];
    for t in 1..=g {
        out.push(ExactInvariants {
            generation: t,
            kirchhoff: kirchhoff_closed_exact(&base.kirchhoff, n0, e0, n, t)?,
            kemeny: kemeny_closed_exact(&base.kemeny, n0, e0, n, t)?,
            spanning_trees: spanning_trees_closed(&base.spanning_trees, n0, e0, n, t)?,
        });
    }
    Ok(out)
}

/// Exact Kemeny's constant, Kf' and spanning-tree count of a graph. The
/// reciprocal eigenvalue sum is read off the characteristic polynomial of
/// the random-walk Laplacian `I - D^{-1}A` (same spectrum as the normalized
/// Laplacian): with `det(xI - M) = Σ c_i x^i` and `c_0 = 0`,
/// `Σ 1/λ = -c_2 / c_1`.
pub fn exact_invariants(graph: &Graph, matrix_tree_cap: usize) -> Result<ExactInvariants> {
    let n = graph.vertex_count();
    let degrees = graph.degrees();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    for &(i, j) in graph.edges() {
        m[i][j] = -BigRational::new(1.into(), degrees[i].into());
        m[j][i] = -BigRational::new(1.into(), degrees[j].into());
    }
    let charpoly = characteristic_polynomial(m);
    let c = charpoly.coeffs();
    if !c[0].is_zero() || c.len() < 2 || c[1].is_zero() {
        return Err(Error::Arithmetic(
            "characteristic polynomial does not have a simple zero root".into(),
        ));
    }
    let zero = BigRational::zero();
    let c2 = c.get(2).unwrap_or(&zero);
    let kemeny = -c2 / &c[1];
    let kirchhoff = rat(2 * graph.edge_count()) * &kemeny;
    Ok(ExactInvariants {
        generation: 0,
        kirchhoff,
        kemeny,
        spanning_trees: oracle::matrix_tree_count(graph, matrix_tree_cap)?,
    })
}

/// `det(xI - M)` by reduction to upper Hessenberg form with elementary
/// similarity transforms, then the Hessenberg determinant recurrence.
fn characteristic_polynomial(mut h: Vec<Vec<BigRational>>) -> RationalPoly {
    let n = h.len();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        for r in j + 2..n {
            if h[r][j].is_zero() {
                continue;
            }
            let u = &h[r][j] / &h[j + 1][j];
            let pivot_row = h[j + 1].clone();
            for (x, p) in h[r].iter_mut().zip(&pivot_row) {
                *x -= &u * p;
            }
            for row in h.iter_mut() {
                let t = &u * &row[r];
                row[j + 1] += t;
            }
        }
    }

    let x = RationalPoly::new(vec![BigRational::zero(), BigRational::one()]);
    let mut p: Vec<RationalPoly> = vec![RationalPoly::new(vec![BigRational::one()])];
    for m in 0..n {
        let diag = RationalPoly::new(vec![-h[m][m].clone()]);
        let mut next = &(&x + &diag) * &p[m];
        let mut prod = BigRational::one();
        for i in (0..m).rev() {
            prod *= &h[i + 1][i];
            let coef = &prod * &h[i][m];
            if !coef.is_zero() {
                next = &next - &p[i].scale(&coef);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// `ln` of an exact rational, for reports built from exact values.
pub fn exact_ln(x: &BigRational) -> f64 {
    ln_rational(x)
}
