//! Truncated expansions of Gamma, digamma, polygamma and Hurwitz zeta,
//! with first-omitted-term error accounting.
//!
//! The coefficient sequences grow factorially, so every expansion here is
//! treated as asymptotic: it is cut after a caller-chosen number of terms
//! and the size of the first dropped term is reported next to the value.
//! Each evaluator also computes a reference value through a path that does
//! not use the kernels (direct zeta sums, Spouge's Gamma, harmonic numbers).

pub mod constants;
pub mod real;
pub mod reference;
pub mod zeta;

use astro_float::BigFloat;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactnum::{factorial, ExactRational};
use crate::kernels::{KernelCache, KernelKind};
use crate::sequences::{a_from_kb, f_of, g_closed};
use crate::Error;

pub use real::Ctx;
pub use zeta::zeta_direct;

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: usize = 34;

/// Number of series terms kept and the working precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationParams {
    terms: usize,
    digits: usize,
}

impl TruncationParams {
    pub fn new(terms: usize, digits: usize) -> Result<Self, Error> {
        if terms == 0 {
            return Err(Error::Domain("at least one series term is required".into()));
        }
        if digits < 15 {
            return Err(Error::Domain(format!(
                "working precision must be at least 15 digits (got {digits})"
            )));
        }
        Ok(Self { terms, digits })
    }

    /// `terms` series terms at [`DEFAULT_DIGITS`].
    pub fn with_terms(terms: usize) -> Result<Self, Error> {
        Self::new(terms, DEFAULT_DIGITS)
    }

    pub fn terms(&self) -> usize {
        self.terms
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    /// Absolute tolerance handed to the direct zeta sums.
    fn zeta_tol(&self, scale: f64) -> f64 {
        (10f64.powi(-(self.digits as i32) - 4) * scale).max(1e-300)
    }
}

/// Outcome of one truncated evaluation.
#[derive(Clone, Debug)]
pub struct EvalReport {
    pub value: BigFloat,
    pub terms_used: usize,
    pub first_omitted_term_bound: BigFloat,
    pub reference: Option<BigFloat>,
    pub abs_error: Option<BigFloat>,
    digits: usize,
}

impl EvalReport {
    fn new(
        ctx: &Ctx,
        value: BigFloat,
        terms_used: usize,
        bound: BigFloat,
        reference: Option<BigFloat>,
    ) -> Self {
        let abs_error = reference.as_ref().map(|r| ctx.abs(&ctx.sub(&value, r)));
        Self {
            value,
            terms_used,
            first_omitted_term_bound: ctx.abs(&bound),
            reference,
            abs_error,
            digits: ctx.digits(),
        }
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn value_f64(&self) -> f64 {
        to_f64(&self.value)
    }

    pub fn bound_f64(&self) -> f64 {
        to_f64(&self.first_omitted_term_bound)
    }

    pub fn reference_f64(&self) -> Option<f64> {
        self.reference.as_ref().map(to_f64)
    }

    pub fn abs_error_f64(&self) -> Option<f64> {
        self.abs_error.as_ref().map(to_f64)
    }

    /// Whether the observed error is at most `factor` times the bound.
    /// `None` without a reference.
    pub fn within_bound(&self, factor: f64) -> Option<bool> {
        let err = self.abs_error.as_ref()?;
        let ctx = Ctx::new(self.digits).ok()?;
        let scaled = ctx.mul(&self.first_omitted_term_bound, &ctx.from_f64(factor));
        Some(!ctx.sub(err, &scaled).is_positive())
    }
}

fn to_f64(v: &BigFloat) -> f64 {
    Ctx::new(20).map(|mut c| c.to_f64(v)).unwrap_or(f64::NAN)
}

fn fmt(v: &BigFloat, digits: usize) -> String {
    Ctx::new(digits)
        .map(|mut c| c.format(v))
        .unwrap_or_else(|_| "NaN".into())
}

impl Serialize for EvalReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EvalReport", 5)?;
        s.serialize_field("value", &fmt(&self.value, self.digits))?;
        s.serialize_field("terms", &self.terms_used)?;
        s.serialize_field("bound", &fmt(&self.first_omitted_term_bound, self.digits))?;
        s.serialize_field(
            "reference",
            &self.reference.as_ref().map(|r| fmt(r, self.digits)),
        )?;
        s.serialize_field(
            "abs_error",
            &self.abs_error.as_ref().map(|r| fmt(r, self.digits)),
        )?;
        s.end()
    }
}

fn require_above_minus_half(x: f64) -> Result<(), Error> {
    if !(x.is_finite() && x > -0.5) {
        return Err(Error::Domain(format!("x must exceed -1/2 (got {x})")));
    }
    Ok(())
}

/// `p(m) = 1 / ((2m-1) (x+1/2)^{2m-1})` at working precision.
pub fn p_term(ctx: &mut Ctx, m: usize, x: f64) -> Result<BigFloat, Error> {
    require_above_minus_half(x)?;
    if m == 0 {
        return Err(Error::Domain("p_term needs m >= 1".into()));
    }
    let u = ctx.from_f64(x + 0.5);
    Ok(odd_power_term(ctx, &u, m))
}

fn odd_power_term(ctx: &Ctx, u: &BigFloat, m: usize) -> BigFloat {
    let k = 2 * m - 1;
    let p = ctx.powi_neg(u, k);
    ctx.div(&p, &ctx.int(k as i64))
}

/// `ζ(2 m0, x+1) ≈ p(m0) + Σ_{z=1}^{N} g(z+m0, m0) p(m0+z)`.
pub fn eval_hurwitz_expansion(
    m0: usize,
    x: f64,
    params: &TruncationParams,
) -> Result<EvalReport, Error> {
    require_above_minus_half(x)?;
    if m0 == 0 {
        return Err(Error::Domain("m0 must be >= 1".into()));
    }
    let mut ctx = Ctx::new(params.digits())?;
    let cache = KernelCache::new(KernelKind::B);
    let u = ctx.from_f64(x + 0.5);
    let term = |ctx: &mut Ctx, z: usize| -> Result<BigFloat, Error> {
        let g = ctx.rational(&g_closed(z, m0, &cache)?);
        Ok(ctx.mul(&g, &odd_power_term(ctx, &u, m0 + z)))
    };
    let mut value = odd_power_term(&ctx, &u, m0);
    for z in 1..=params.terms() {
        let t = term(&mut ctx, z)?;
        value = ctx.add(&value, &t);
    }
    let bound = term(&mut ctx, params.terms() + 1)?;
    let s = 2.0 * m0 as f64;
    let scale = (x + 1.0).powf(1.0 - s).min(1.0);
    let reference = zeta_direct(&mut ctx, s, x + 1.0, params.zeta_tol(scale))?;
    Ok(EvalReport::new(&ctx, value, params.terms(), bound, Some(reference)))
}

fn a_coeff(ctx: &mut Ctx, cache: &KernelCache, n: usize) -> Result<BigFloat, Error> {
    let a = a_from_kb(n, cache)?;
    Ok(ctx.rational(&a))
}

/// `Γ(x + 1/2) ≈ (x/e)^x √(2π) exp(-Σ_{n=1}^{N} a_n / ((2n-1) x^{2n-1}))`.
///
/// The bound is the absolute change the first omitted exponent term would
/// cause, `Γ · (exp|t_{N+1}| - 1)`.
pub fn eval_gamma(x: f64, params: &TruncationParams) -> Result<EvalReport, Error> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain(format!("eval_gamma needs x > 0 (got {x})")));
    }
    let mut ctx = Ctx::new(params.digits())?;
    let cache = KernelCache::new(KernelKind::B);
    let xb = ctx.from_f64(x);
    let exponent_term = |ctx: &mut Ctx, n: usize| -> Result<BigFloat, Error> {
        let a = a_coeff(ctx, &cache, n)?;
        Ok(ctx.mul(&a, &odd_power_term(ctx, &xb, n)))
    };
    let mut series = ctx.int(0);
    for n in 1..=params.terms() {
        let t = exponent_term(&mut ctx, n)?;
        series = ctx.add(&series, &t);
    }
    let ln_x = ctx.ln(&xb);
    let log_value = ctx.sub(&ctx.sub(&ctx.mul(&xb, &ln_x), &xb), &series);
    let pi = ctx.pi();
    let root_two_pi = ctx.sqrt(&ctx.mul(&ctx.int(2), &pi));
    let scaled = ctx.exp(&log_value);
    let value = ctx.mul(&scaled, &root_two_pi);

    let next = exponent_term(&mut ctx, params.terms() + 1)?;
    let next = ctx.abs(&next);
    let growth = ctx.exp(&next);
    let bound = ctx.mul(&value, &ctx.sub(&growth, &ctx.int(1)));
    let reference = reference::gamma_spouge(&ctx, x + 0.5)?;
    Ok(EvalReport::new(&ctx, value, params.terms(), bound, Some(reference)))
}

/// `ψ(x + 1) ≈ ln(x + 1/2) + Σ_{n=1}^{N} a_n (x + 1/2)^{-2n}`.
///
/// A reference is attached when `x` is an integer or half-integer.
pub fn eval_digamma(x: f64, params: &TruncationParams) -> Result<EvalReport, Error> {
    require_above_minus_half(x)?;
    let mut ctx = Ctx::new(params.digits())?;
    let cache = KernelCache::new(KernelKind::B);
    let u = ctx.from_f64(x + 0.5);
    let term = |ctx: &mut Ctx, n: usize| -> Result<BigFloat, Error> {
        let a = a_coeff(ctx, &cache, n)?;
        Ok(ctx.mul(&a, &ctx.powi_neg(&u, 2 * n)))
    };
    let mut value = ctx.ln(&u);
    for n in 1..=params.terms() {
        let t = term(&mut ctx, n)?;
        value = ctx.add(&value, &t);
    }
    let bound = term(&mut ctx, params.terms() + 1)?;
    let reference = reference::digamma_closed_form(&mut ctx, x);
    Ok(EvalReport::new(&ctx, value, params.terms(), bound, reference))
}

/// Exact `f(n) (2n+y)! / (2n-1)!`.
fn polygamma_coeff(n: usize, y: usize) -> Result<ExactRational, Error> {
    let ratio = ExactRational::new(factorial(2 * n + y), factorial(2 * n - 1))?;
    Ok(f_of(n)? * ratio)
}

/// `ψ^{(y)}(x+1) ≈ (-1)^{y-1} ((y-1)!/(x+1/2)^y
///   - Σ_{n=1}^{N} f(n) (2n+y)! ζ(2n+y+1, x+1) / (2n-1)!)`.
///
/// The reference is `(-1)^{y-1} y! ζ(y+1, x+1)` from the direct zeta sum.
pub fn eval_polygamma(y: usize, x: f64, params: &TruncationParams) -> Result<EvalReport, Error> {
    if y == 0 {
        return Err(Error::Domain("polygamma order y must be >= 1".into()));
    }
    require_above_minus_half(x)?;
    let mut ctx = Ctx::new(params.digits())?;
    let q = x + 1.0;
    let scale = |s: f64| q.powf(-s).clamp(1e-300, 1.0);
    let term = |ctx: &mut Ctx, n: usize| -> Result<BigFloat, Error> {
        let s = (2 * n + y + 1) as f64;
        let z = zeta_direct(ctx, s, q, params.zeta_tol(scale(s)))?;
        let c = ctx.rational(&polygamma_coeff(n, y)?);
        Ok(ctx.mul(&c, &z))
    };
    let u = ctx.from_f64(x + 0.5);
    let lead_num = ctx.big_int(&factorial(y - 1));
    let lead = ctx.div(&lead_num, &ctx.powi(&u, y));
    let mut sum = ctx.int(0);
    for n in 1..=params.terms() {
        let t = term(&mut ctx, n)?;
        sum = ctx.add(&sum, &t);
    }
    let mut value = ctx.sub(&lead, &sum);
    let bound = term(&mut ctx, params.terms() + 1)?;

    let s = (y + 1) as f64;
    let z = zeta_direct(&mut ctx, s, q, params.zeta_tol(scale(s)))?;
    let y_fact = ctx.big_int(&factorial(y));
    let mut reference = ctx.mul(&y_fact, &z);
    if y % 2 == 0 {
        value = value.neg();
        reference = reference.neg();
    }
    Ok(EvalReport::new(&ctx, value, params.terms(), bound, Some(reference)))
}

/// Partial sum `Σ_{j=1}^{N} ζ(2j) f(j)` against `ln √(π/e) = (ln π - 1)/2`.
pub fn check_ln_pi_over_e(terms: usize) -> Result<EvalReport, Error> {
    check_ln_pi_over_e_with(&TruncationParams::with_terms(terms)?)
}

pub fn check_ln_pi_over_e_with(params: &TruncationParams) -> Result<EvalReport, Error> {
    let mut ctx = Ctx::new(params.digits())?;
    let tol = params.zeta_tol(1.0);
    let term = |ctx: &mut Ctx, j: usize| -> Result<BigFloat, Error> {
        let z = zeta_direct(ctx, 2.0 * j as f64, 1.0, tol)?;
        let f = ctx.rational(&f_of(j)?);
        Ok(ctx.mul(&z, &f))
    };
    let mut value = ctx.int(0);
    for j in 1..=params.terms() {
        let t = term(&mut ctx, j)?;
        value = ctx.add(&value, &t);
    }
    let bound = term(&mut ctx, params.terms() + 1)?;
    let pi = ctx.pi();
    let ln_pi = ctx.ln(&pi);
    let reference = ctx.div(&ctx.sub(&ln_pi, &ctx.int(1)), &ctx.int(2));
    Ok(EvalReport::new(&ctx, value, params.terms(), bound, Some(reference)))
}
