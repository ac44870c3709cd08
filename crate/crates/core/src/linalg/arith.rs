//! p-adic valuations and square classes of nonzero rationals.

use core::fmt;
use core::ops::Mul;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Default trial-division bound used by [`square_class`].
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn ord_int(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// Exact p-adic valuation of a nonzero rational.
pub fn ord_p(q: &Rational, p: u64) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroValue);
    }
    check_prime(p)?;
    let pb = BigInt::from(p);
    Ok(ord_int(q.numer(), &pb) - ord_int(q.denom(), &pb))
}

/// Valuation of an integer at a prime, for callers holding machine integers.
pub fn ord_p_u64(n: u64, p: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroValue);
    }
    check_prime(p)?;
    let mut n = n;
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    Ok(k)
}

/// Element of ℚ*/ℚ*²: a sign and a squarefree positive radical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareClass {
    negative: bool,
    radical: BigUint,
}

impl SquareClass {
    pub fn one() -> Self {
        SquareClass { negative: false, radical: BigUint::one() }
    }

    /// Class of a squarefree integer. The caller guarantees squarefreeness.
    pub fn from_squarefree(negative: bool, radical: BigUint) -> Self {
        debug_assert!(!radical.is_zero());
        SquareClass { negative, radical }
    }

    pub fn of_prime(p: u64) -> Self {
        SquareClass { negative: false, radical: BigUint::from(p) }
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn radical(&self) -> &BigUint {
        &self.radical
    }

    pub fn is_trivial(&self) -> bool {
        !self.negative && self.radical.is_one()
    }

    /// The squarefree integer representing the class.
    pub fn representative(&self) -> BigInt {
        let s = if self.negative { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(s, self.radical.clone())
    }

    /// Parity of the p-adic valuation of any element of the class.
    pub fn ord_p_parity(&self, p: u64) -> bool {
        (&self.radical % BigUint::from(p)).is_zero()
    }
}

impl Mul for &SquareClass {
    type Output = SquareClass;

    fn mul(self, rhs: &SquareClass) -> SquareClass {
        let g = self.radical.gcd(&rhs.radical);
        SquareClass {
            negative: self.negative != rhs.negative,
            radical: (&self.radical / &g) * (&rhs.radical / &g),
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.radical)
    }
}

/// Squarefree part of a positive integer by trial division up to `bound`.
fn squarefree_part(n: &BigUint, bound: u64) -> Result<BigUint> {
    let mut n = n.clone();
    let mut radical = BigUint::one();
    let mut d: u64 = 2;
    while d <= bound {
        let db = BigUint::from(d);
        if &db * &db > n {
            break;
        }
        let mut odd = false;
        loop {
            let (q, r) = n.div_rem(&db);
            if !r.is_zero() {
                break;
            }
            n = q;
            odd = !odd;
        }
        if odd {
            radical *= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Ok(radical);
    }
    let db = BigUint::from(d);
    if &db * &db > n {
        // no factor up to sqrt(n): n is prime
        return Ok(radical * n);
    }
    let s = n.sqrt();
    if &s * &s == n {
        return Ok(radical);
    }
    Err(Error::FactorBoundExceeded { bound })
}

pub fn square_class(q: &Rational) -> Result<SquareClass> {
    square_class_with_bound(q, DEFAULT_FACTOR_BOUND)
}

/// Square class of `q`, factoring numerator and denominator by trial
/// division up to `bound`. Returns [`Error::FactorBoundExceeded`] when a
/// cofactor cannot be resolved.
pub fn square_class_with_bound(q: &Rational, bound: u64) -> Result<SquareClass> {
    if q.is_zero() {
        return Err(Error::ZeroValue);
    }
    let num = squarefree_part(q.numer().magnitude(), bound)?;
    let den = squarefree_part(q.denom().magnitude(), bound)?;
    let g = num.gcd(&den);
    Ok(SquareClass {
        negative: q.numer().sign() == Sign::Minus,
        radical: (&num / &g) * (&den / &g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn class(sign: bool, r: u64) -> SquareClass {
        SquareClass { negative: sign, radical: BigUint::from(r) }
    }

    #[test]
    fn square_class_examples() {
        assert_eq!(square_class(&q(12, 1)).unwrap(), class(false, 3));
        assert_eq!(square_class(&q(-1, 2)).unwrap(), class(true, 2));
        assert_eq!(square_class(&q(1, 1)).unwrap(), SquareClass::one());
        assert_eq!(square_class(&q(18, 50)).unwrap(), SquareClass::one());
        assert_eq!(square_class(&q(0, 1)), Err(Error::ZeroValue));
    }

    #[test]
    fn ord_p_examples() {
        assert_eq!(ord_p(&q(8, 3), 2).unwrap(), 3);
        assert_eq!(ord_p(&q(1, 3), 3).unwrap(), -1);
        assert_eq!(ord_p(&q(48, 1), 3).unwrap(), 1);
        assert_eq!(ord_p(&q(0, 1), 3), Err(Error::ZeroValue));
        assert_eq!(ord_p(&q(5, 1), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn large_prime_cofactor() {
        // 1_000_003 is prime and above the bound of 1000
        let p = 1_000_003i64;
        assert_eq!(square_class_with_bound(&q(p, 1), 1000).unwrap(), class(false, p as u64));
        assert_eq!(square_class_with_bound(&q(p * p * 3, 1), 1000).unwrap(), class(false, 3));
    }

    #[test]
    fn factor_bound_exceeded_is_reported() {
        // 1009 * 1013 has no factor below 100 and exceeds 100²
        let n = 1009i64 * 1013;
        assert_eq!(
            square_class_with_bound(&q(n, 1), 100),
            Err(Error::FactorBoundExceeded { bound: 100 })
        );
    }

    #[test]
    fn class_product() {
        assert_eq!(&class(false, 6) * &class(true, 10), class(true, 15));
        assert!(class(false, 7).ord_p_parity(7));
        assert!(!class(false, 7).ord_p_parity(3));
    }
}
