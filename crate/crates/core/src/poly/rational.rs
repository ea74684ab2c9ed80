//! Scalar coefficients: arbitrary-precision fractions.
//!
//! `Rational` is backed by `num_rational::BigRational`, which keeps every
//! value in canonical reduced form: the denominator is always positive,
//! numerator and denominator are coprime, and zero is stored as `0/1`.

use num_bigint::BigInt;

/// Exact fraction with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a `Rational`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`, reduced. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
