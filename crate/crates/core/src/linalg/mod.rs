//! Exact rational linear algebra and square-class arithmetic.

mod arith;
mod matrix;

pub use arith::{
    is_prime, ord_p, ord_p_u64, square_class, square_class_with_bound, SquareClass,
    DEFAULT_FACTOR_BOUND,
};
pub(crate) use arith::check_prime;
pub use matrix::QMatrix;

pub use num_bigint::BigInt;

/// Exact rational number; always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
