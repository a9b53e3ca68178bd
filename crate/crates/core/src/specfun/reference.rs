//! Reference values for Gamma and digamma that share no code with the
//! kernel-derived expansions.

use astro_float::BigFloat;
use num_bigint::BigInt;

use super::constants::EULER_GAMMA_40;
use super::real::Ctx;
use crate::exactnum::ExactRational;
use crate::Error;

/// `Γ(x)` for `x > 0` by Spouge's approximation.
///
/// With parameter `a` the relative error is below
/// `a^{-1/2} (2π)^{-(a+1/2)}`; `a` is picked for the context's digits plus
/// two, and the coefficients are formed at triple precision because they
/// alternate in sign and cancel heavily.
pub fn gamma_spouge(ctx: &Ctx, x: f64) -> Result<BigFloat, Error> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain(format!("gamma reference needs x > 0 (got {x})")));
    }
    let mut w = ctx.widened(3)?;
    if x < 1.0 {
        // Γ(x) = Γ(x+1)/x keeps z = x - 1 non-negative below
        let g = gamma_spouge(ctx, x + 1.0)?;
        let xb = w.from_f64(x);
        return Ok(ctx.adopt(&w.div(&w.adopt(&g), &xb)));
    }
    let target_digits = (ctx.digits() + 2) as f64;
    let a = (target_digits * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI).ln()).ceil()
        as i64
        + 1;

    let z = w.from_f64(x - 1.0);
    let a_big = w.int(a);
    let pi = w.pi();
    let two_pi = w.mul(&w.int(2), &pi);

    let mut series = w.sqrt(&two_pi);
    let mut k_fact = w.int(1); // (k-1)!
    for k in 1..a {
        if k > 1 {
            k_fact = w.mul(&k_fact, &w.int(k - 1));
        }
        let base = w.int(a - k);
        let half = w.div(&w.int(2 * k - 1), &w.int(2));
        let ln_base = w.ln(&base);
        let pow = w.exp(&w.mul(&half, &ln_base));
        let e = w.exp(&w.int(a - k));
        let mut c = w.div(&w.mul(&pow, &e), &k_fact);
        if k % 2 == 0 {
            c = c.neg();
        }
        let denom = w.add(&z, &w.int(k));
        series = w.add(&series, &w.div(&c, &denom));
    }
    let za = w.add(&z, &a_big);
    let exponent = w.add(&z, &w.div(&w.int(1), &w.int(2)));
    let ln_za = w.ln(&za);
    let lead = w.exp(&w.sub(&w.mul(&exponent, &ln_za), &za));
    Ok(ctx.adopt(&w.mul(&lead, &series)))
}

/// `ψ(x + 1)` where a closed form exists: `H_x - γ` for integer `x >= 0`
/// and `-γ - 2 ln 2 + Σ_{k=1}^{x+1/2} 2/(2k-1)` for half-integer `x`.
pub fn digamma_closed_form(ctx: &mut Ctx, x: f64) -> Option<BigFloat> {
    let gamma = ctx.parse(EULER_GAMMA_40);
    if x >= 0.0 && x.fract() == 0.0 && x <= 1.0e7 {
        let n = x as i64;
        let mut h = ExactRational::zero();
        for k in 1..=n {
            h += &ExactRational::new(1, k).expect("k >= 1");
        }
        let h = ctx.rational(&h);
        return Some(ctx.sub(&h, &gamma));
    }
    let shifted = x + 0.5;
    if shifted >= 0.0 && shifted.fract() == 0.0 && shifted <= 1.0e7 {
        let n = shifted as i64;
        let mut s = ExactRational::zero();
        for k in 1..=n {
            s += &ExactRational::new(2, 2 * k - 1).expect("2k - 1 >= 1");
        }
        let s = ctx.rational(&s);
        let ln2 = ctx.ln(&ctx.int(2));
        let two_ln2 = ctx.mul(&ctx.int(2), &ln2);
        return Some(ctx.sub(&ctx.sub(&s, &gamma), &two_ln2));
    }
    None
}

/// `n!` at working precision, for closed-form Gamma checks.
pub fn factorial_float(ctx: &mut Ctx, n: usize) -> BigFloat {
    let f: BigInt = crate::exactnum::factorial(n);
    ctx.big_int(&f)
}
