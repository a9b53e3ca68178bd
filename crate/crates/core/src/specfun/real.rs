//! Thin arithmetic context over `astro_float::BigFloat` at a fixed precision.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;

use crate::exactnum::ExactRational;
use crate::Error;

const RM: RoundingMode = RoundingMode::ToEven;

/// Guard bits added on top of the requested decimal precision.
const GUARD_BITS: usize = 32;

pub struct Ctx {
    digits: usize,
    bits: usize,
    cc: Consts,
}

impl Ctx {
    /// Context carrying at least `digits` significant decimal digits.
    pub fn new(digits: usize) -> Result<Self, Error> {
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS;
        Self::with_bits(digits, bits)
    }

    fn with_bits(digits: usize, bits: usize) -> Result<Self, Error> {
        let cc = Consts::new()
            .map_err(|e| Error::Domain(format!("cannot initialize float constants: {e:?}")))?;
        Ok(Self { digits, bits, cc })
    }

    /// A context with `factor` times the binary precision, for computations
    /// that lose digits to cancellation.
    pub fn widened(&self, factor: usize) -> Result<Self, Error> {
        Self::with_bits(self.digits * factor, self.bits * factor)
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn from_f64(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.bits)
    }

    pub fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.bits)
    }

    pub fn big_int(&mut self, v: &BigInt) -> BigFloat {
        BigFloat::parse(&v.to_string(), Radix::Dec, self.bits, RM, &mut self.cc)
    }

    pub fn rational(&mut self, r: &ExactRational) -> BigFloat {
        let n = self.big_int(r.numer());
        let d = self.big_int(r.denom());
        self.div(&n, &d)
    }

    /// Decimal literal, rounded to the working precision.
    pub fn parse(&mut self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, self.bits, RM, &mut self.cc)
    }

    /// Moves a value computed in another context to this precision.
    pub fn adopt(&self, v: &BigFloat) -> BigFloat {
        let mut out = v.clone();
        // precision changes only fail for invalid `bits`, which `new` rules out
        let _ = out.set_precision(self.bits, RM);
        out
    }

    /// π: the pinned 40-digit constant while that suffices, the float
    /// library's own value beyond.
    pub fn pi(&mut self) -> BigFloat {
        if self.digits <= 38 {
            self.parse(super::constants::PI_40)
        } else {
            self.cc.pi(self.bits, RM)
        }
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    pub fn powi(&self, a: &BigFloat, n: usize) -> BigFloat {
        a.powi(n, self.bits, RM)
    }

    /// `a^{-n}`.
    pub fn powi_neg(&self, a: &BigFloat, n: usize) -> BigFloat {
        let p = self.powi(a, n);
        p.reciprocal(self.bits, RM)
    }

    pub fn pow(&mut self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.pow(b, self.bits, RM, &mut self.cc)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.bits, RM, &mut self.cc)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.bits, RM, &mut self.cc)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.bits, RM)
    }

    pub fn abs(&self, a: &BigFloat) -> BigFloat {
        a.abs()
    }

    /// Decimal scientific notation rounded to the context's digit count.
    pub fn format(&mut self, v: &BigFloat) -> String {
        let digits = self.digits;
        self.format_digits(v, digits)
    }

    pub fn format_digits(&mut self, v: &BigFloat, digits: usize) -> String {
        if v.is_nan() {
            return "NaN".to_string();
        }
        if v.is_inf_pos() {
            return "inf".to_string();
        }
        if v.is_inf_neg() {
            return "-inf".to_string();
        }
        if v.is_zero() {
            return "0".to_string();
        }
        match v.format(Radix::Dec, RM, &mut self.cc) {
            Ok(s) => round_scientific(&s, digits.max(1)),
            Err(e) => format!("NaN({e:?})"),
        }
    }

    pub fn to_f64(&mut self, v: &BigFloat) -> f64 {
        let s = self.format_digits(v, 20);
        s.parse().unwrap_or(f64::NAN)
    }
}

/// Rounds a `[-]d.ddd…e±X` string to `digits` significant digits, half up.
fn round_scientific(s: &str, digits: usize) -> String {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (mantissa, exp) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let mut ds: Vec<u8> = mantissa
        .bytes()
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect();
    let point = mantissa.find('.').unwrap_or(mantissa.len()) as i64;
    // normalize leading zeros away so the first digit is significant
    let lead = ds.iter().take_while(|&&d| d == 0).count();
    if lead == ds.len() {
        return "0".to_string();
    }
    ds.drain(..lead);
    let mut exp = exp + point - 1 - lead as i64;

    if ds.len() > digits {
        let round_up = ds[digits] >= 5;
        ds.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    exp += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    }
    while ds.len() > 1 && ds.last() == Some(&0) {
        ds.pop();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + ds[0]) as char);
    if ds.len() > 1 {
        out.push('.');
        out.extend(ds[1..].iter().map(|&d| (b'0' + d) as char));
    }
    out.push_str(&format!("e{exp}"));
    out
}
