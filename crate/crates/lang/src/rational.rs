//! Exact rational arithmetic helpers.
//!
//! All numeric literals in the language are exact rationals so that cost
//! arithmetic stays exact all the way into the solver.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse a decimal literal (`"2"`, `"0.5"`, `"1.25"`) into an exact rational.
pub fn parse_decimal(text: &str) -> Option<Rat> {
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let mut num: BigInt = if int_part.is_empty() {
        BigInt::from(0)
    } else {
        int_part.parse().ok()?
    };
    let mut den = BigInt::one();
    for ch in frac_part.chars() {
        let d = ch.to_digit(10)?;
        num = num * 10 + BigInt::from(d);
        den *= 10;
    }
    Some(Rat::new(num, den))
}

/// Render a rational in canonical form: integers bare, otherwise `n/d`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Floor-based remainder, extended to rationals: `a - b * floor(a / b)`.
pub fn rat_mod(a: &Rat, b: &Rat) -> Option<Rat> {
    if b.is_zero() {
        return None;
    }
    let q = (a / b).floor();
    Some(a - b * q)
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
