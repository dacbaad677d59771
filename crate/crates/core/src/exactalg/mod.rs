//! Exact rational arithmetic and sparse linear algebra.
//!
//! Rationals are `num_rational::BigRational`, which is always stored in
//! lowest terms with a positive denominator. Rank and kernel use a
//! fraction-free elimination over the integers after clearing row
//! denominators.

mod elim;
mod matrix;

pub use elim::{in_span, rank, rank_and_kernel, rank_naive};
pub use matrix::SparseMatrix;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `num/den`, the dump and JSON form.
pub fn fmt_rat(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `num/den` or a bare integer.
pub fn parse_rat(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

/// Dense vector helpers used throughout.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}
