//! Exact rational scalars and their string form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LinalgError;

/// The scalar field: arbitrary-precision rationals, always in lowest terms.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses `"p"` or `"p/q"`; decimals and zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Q, LinalgError> {
    let t = s.trim();
    let bad = || LinalgError::BadRational(s.to_string());
    if t.is_empty() || t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(bad());
    }
    match t.split_once('/') {
        None => BigInt::from_str(t).map(Q::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Canonical string: `"p"` for integers, `"p/q"` otherwise, with q > 0.
pub fn format_rational(x: &Q) -> String {
    x.to_string()
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn qpow(base: &Q, exp: i64) -> Q {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}
