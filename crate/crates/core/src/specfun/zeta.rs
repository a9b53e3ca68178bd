//! Direct Hurwitz zeta sum with an Euler–Maclaurin tail.

use astro_float::BigFloat;

use super::constants::EM_BERNOULLI;
use super::real::Ctx;
use crate::Error;

/// Number of Bernoulli corrections applied after the integral and the
/// half-endpoint term; the next one bounds the remainder.
const EM_TERMS: usize = EM_BERNOULLI.len() - 1;

/// Beyond this many direct terms the request is treated as unreasonable.
const MAX_DIRECT_TERMS: usize = 50_000_000;

/// Value of a direct zeta sum and how many explicit terms it used.
#[derive(Clone, Debug)]
pub struct ZetaSum {
    pub value: BigFloat,
    pub direct_terms: usize,
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Natural log of the first omitted Euler–Maclaurin term at `M = N + q`.
fn ln_remainder(s: f64, m: f64) -> f64 {
    let (bn, bd) = EM_BERNOULLI[EM_TERMS];
    let order = 2 * EM_TERMS + 2;
    let rising: f64 = (0..order - 1).map(|i| (s + i as f64).ln()).sum();
    (bn as f64 / bd as f64).abs().ln() - ln_factorial(order) + rising
        - (s + (order - 1) as f64) * m.ln()
}

/// Smallest `N` whose tail remainder estimate is below `tol / 2`.
fn choose_direct_terms(s: f64, q: f64, tol: f64) -> Result<usize, Error> {
    let target = (tol / 2.0).ln();
    // remainder decreases in M, so solve for the threshold directly
    let order = (2 * EM_TERMS + 1) as f64;
    let at_one = ln_remainder(s, 1.0);
    let m_min = ((at_one - target) / (s + order)).exp().max(1.0);
    let n = (m_min - q).ceil().max(0.0);
    if n > MAX_DIRECT_TERMS as f64 {
        return Err(Error::Domain(format!(
            "tolerance {tol:e} needs more than {MAX_DIRECT_TERMS} direct terms"
        )));
    }
    let mut n = n as usize;
    while ln_remainder(s, n as f64 + q) > target {
        n += 1;
    }
    Ok(n)
}

/// `ζ(s, q) = Σ_{n≥0} (n+q)^{-s}` for `s > 1`, `q > 0`.
///
/// The first `N` terms are summed explicitly; the rest is replaced by the
/// integral `(N+q)^{1-s}/(s-1)`, the endpoint term `(N+q)^{-s}/2` and
/// Bernoulli corrections. `N` is chosen so that the first omitted
/// correction is below `tol / 2`.
pub fn zeta_direct(ctx: &mut Ctx, s: f64, q: f64, tol: f64) -> Result<BigFloat, Error> {
    Ok(zeta_direct_detailed(ctx, s, q, tol)?.value)
}

pub fn zeta_direct_detailed(ctx: &mut Ctx, s: f64, q: f64, tol: f64) -> Result<ZetaSum, Error> {
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::Domain(format!("zeta_direct needs s > 1 (got {s})")));
    }
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::Domain(format!("zeta_direct needs q > 0 (got {q})")));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive (got {tol})")));
    }
    let n = choose_direct_terms(s, q, tol)?;
    let integer_s = s.fract() == 0.0 && s < 1.0e6;
    let s_big = ctx.from_f64(s);
    let q_big = ctx.from_f64(q);
    let neg_s = s_big.neg();

    let inv_pow = |ctx: &mut Ctx, base: &BigFloat| -> BigFloat {
        if integer_s {
            ctx.powi_neg(base, s as usize)
        } else {
            ctx.pow(base, &neg_s)
        }
    };

    let mut sum = ctx.int(0);
    for k in 0..n {
        let base = ctx.add(&ctx.int(k as i64), &q_big);
        let t = inv_pow(ctx, &base);
        sum = ctx.add(&sum, &t);
    }

    let m = ctx.add(&ctx.int(n as i64), &q_big);
    let m_neg_s = inv_pow(ctx, &m);
    let s_minus_one = ctx.sub(&s_big, &ctx.int(1));
    let integral = ctx.div(&ctx.mul(&m_neg_s, &m), &s_minus_one);
    let half = ctx.div(&m_neg_s, &ctx.int(2));
    sum = ctx.add(&sum, &integral);
    sum = ctx.add(&sum, &half);

    // B_{2k}/(2k)! (s)_{2k-1} M^{-s-2k+1}
    let inv_m = ctx.div(&ctx.int(1), &m);
    let inv_m2 = ctx.mul(&inv_m, &inv_m);
    let mut power = ctx.mul(&m_neg_s, &inv_m);
    let mut rising = s_big.clone();
    let mut fact = ctx.int(2);
    for (k, &(bn, bd)) in EM_BERNOULLI.iter().take(EM_TERMS).enumerate() {
        let k = k + 1;
        if k > 1 {
            // extend (s)_{2k-3} to (s)_{2k-1} and (2k-2)! to (2k)!
            let a = ctx.add(&s_big, &ctx.int(2 * k as i64 - 3));
            let b = ctx.add(&s_big, &ctx.int(2 * k as i64 - 2));
            rising = ctx.mul(&rising, &ctx.mul(&a, &b));
            fact = ctx.mul(&fact, &ctx.int((2 * k as i64 - 1) * (2 * k as i64)));
            power = ctx.mul(&power, &inv_m2);
        }
        let b = ctx.div(&ctx.int(bn), &ctx.int(bd));
        let term = ctx.mul(&ctx.div(&ctx.mul(&b, &rising), &fact), &power);
        sum = ctx.add(&sum, &term);
    }
    Ok(ZetaSum {
        value: sum,
        direct_terms: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(ctx: &mut Ctx, got: &BigFloat, want: &str, tol: f64) -> bool {
        let w = ctx.parse(want);
        let d = ctx.abs(&ctx.sub(got, &w));
        ctx.to_f64(&d) <= tol
    }

    #[test]
    fn basel_and_friends() {
        let mut ctx = Ctx::new(34).unwrap();
        let z2 = zeta_direct(&mut ctx, 2.0, 1.0, 1e-12).unwrap();
        assert!(close(&mut ctx, &z2, "1.644934066848226436472415166646025189219", 1e-12));
        let z4 = zeta_direct(&mut ctx, 4.0, 1.0, 1e-12).unwrap();
        assert!(close(&mut ctx, &z4, "1.082323233711138191516003696541167902775", 1e-12));
        // ζ(2) - 1 - 1/4 - 1/9
        let z24 = zeta_direct(&mut ctx, 2.0, 4.0, 1e-12).unwrap();
        assert!(close(&mut ctx, &z24, "0.2838229557371153253613040555349140781078", 1e-12));
    }

    #[test]
    fn tight_tolerance_reaches_working_precision() {
        let mut ctx = Ctx::new(34).unwrap();
        let z = zeta_direct(&mut ctx, 2.0, 1.0, 1e-32).unwrap();
        assert!(close(&mut ctx, &z, "1.644934066848226436472415166646025189219", 1e-32));
        let z3 = zeta_direct(&mut ctx, 3.0, 1.0, 1e-32).unwrap();
        assert!(close(&mut ctx, &z3, "1.202056903159594285399738161511449990765", 1e-32));
    }

    #[test]
    fn fractional_arguments() {
        let mut ctx = Ctx::new(34).unwrap();
        // ζ(2, 1/2) = 3 ζ(2) = π²/2
        let z = zeta_direct(&mut ctx, 2.0, 0.5, 1e-28).unwrap();
        assert!(close(&mut ctx, &z, "4.934802200544679309417245499938075567657", 1e-28));
        // ζ(2.5, 1), non-integer exponent
        let z = zeta_direct(&mut ctx, 2.5, 1.0, 1e-25).unwrap();
        assert!(close(&mut ctx, &z, "1.341487257250917179756769693348612136623", 1e-25));
    }

    #[test]
    fn term_count_shrinks_with_tolerance() {
        let mut ctx = Ctx::new(34).unwrap();
        let loose = zeta_direct_detailed(&mut ctx, 2.0, 1.0, 1e-6).unwrap();
        let tight = zeta_direct_detailed(&mut ctx, 2.0, 1.0, 1e-30).unwrap();
        assert!(loose.direct_terms <= tight.direct_terms);
    }

    #[test]
    fn domain_errors() {
        let mut ctx = Ctx::new(20).unwrap();
        assert!(zeta_direct(&mut ctx, 1.0, 1.0, 1e-10).is_err());
        assert!(zeta_direct(&mut ctx, 0.5, 1.0, 1e-10).is_err());
        assert!(zeta_direct(&mut ctx, 2.0, 0.0, 1e-10).is_err());
        assert!(zeta_direct(&mut ctx, 2.0, 1.0, 0.0).is_err());
    }
}
