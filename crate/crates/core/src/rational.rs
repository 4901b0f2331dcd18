//! Arbitrary-precision rationals and their `"p/q"` text form.

use alloc::string::String;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Always `"p/q"`, with `q = 1` written out, so the format never depends on
/// whether the value happens to be integral.
pub fn to_ratio_string(r: &Rational) -> String {
    let mut s = String::new();
    let _ = write!(s, "{}/{}", r.numer(), r.denom());
    s
}

/// Parses `"p/q"` or a bare integer `"p"`. Rejects zero denominators.
pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}
