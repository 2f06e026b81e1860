//! Exact rational scalars.
//!
//! `Rat` is a thin alias for `num_rational::BigRational`, which already
//! guarantees the invariants we rely on (lowest terms, positive denominator).
//! The helpers here cover construction from machine integers, the `p/q`
//! string form used by the serializers, and integer floor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rint(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Largest integer `<= r`.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Floor as an `i64`. Panics on overflow; exponents in this crate stay far
/// below that range.
pub fn floor_i64(r: &Rat) -> i64 {
    floor_int(r).to_i64().expect("exponent exceeds i64 range")
}

/// Renders `r` as `p` or `p/q`, matching the serialized form.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_zero() {
        unreachable!("BigRational keeps a nonzero denominator");
    }
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (the inverse of [`format_rat`]).
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::InvalidInput(format!("malformed rational `{s}`"));
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// True if `r` is a positive rational.
pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}
