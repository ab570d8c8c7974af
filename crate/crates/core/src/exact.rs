//! Exact integer and rational primitives: shifted factorials, factorials and
//! generalized binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Builds a rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Returns `Some(n)` when `q` is an integer that fits into an `i64`.
pub fn as_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

/// True when `q` is an integer `<= 0`.
pub fn is_nonpositive_integer(q: &Rational) -> bool {
    q.is_integer() && !q.numer().is_positive()
}

/// Shifted factorial `(a)_k = a (a+1) ... (a+k-1)` with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: i64) -> Result<Rational> {
    if k < 0 {
        return Err(Error::argument(format!(
            "pochhammer length must be nonnegative, got {k}"
        )));
    }
    Ok(rising(a, k as usize))
}

/// Infallible shifted factorial for lengths known to be nonnegative.
pub fn rising(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += BigInt::one();
    }
    acc
}

/// `n!` for `n >= 0`.
pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::argument(format!(
            "factorial of a negative number ({n})"
        )));
    }
    Ok(factorial_u(n as u64))
}

pub(crate) fn factorial_u(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, t| acc * t)
}

/// Generalized binomial coefficient.
///
/// Zero for `k < 0`; otherwise the falling factorial `n (n-1) ... (n-k+1) / k!`,
/// which also covers negative `n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // symmetric shortcut only valid in the classical range
    let k = if n >= 0 && 2 * k > n { n - k } else { k };
    let mut acc = BigInt::one();
    for t in 0..k {
        // acc * (n - t) / (t + 1) is exact at every step
        acc *= BigInt::from(n - t);
        acc /= BigInt::from(t + 1);
    }
    acc
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(3), 4).unwrap(), int(360));
        assert_eq!(pochhammer(&ratio(7, 3), 0).unwrap(), int(1));
        assert_eq!(pochhammer(&int(-2), 3).unwrap(), int(0));
        assert!(matches!(pochhammer(&int(1), -1), Err(Error::Argument(_))));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0).unwrap(), BigInt::from(1));
        assert_eq!(factorial(6).unwrap(), BigInt::from(720));
        assert_eq!(factorial(10).unwrap(), BigInt::from(3628800));
        assert!(factorial(-1).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(-1, 2), BigInt::from(1));
        assert_eq!(binomial(5, -1), BigInt::from(0));
        assert_eq!(binomial(-3, 3), BigInt::from(-10));
    }

    proptest! {
        #[test]
        fn pochhammer_step(num in -30i64..30, den in 1i64..8, k in 1i64..12) {
            let a = ratio(num, den);
            let lhs = pochhammer(&a, k).unwrap();
            let rhs = pochhammer(&a, k - 1).unwrap() * (a.clone() + int(k - 1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pascal_recurrence(n in -40i64..40, k in -5i64..40) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }

        #[test]
        fn pochhammer_one_is_factorial(k in 0i64..40) {
            prop_assert_eq!(pochhammer(&int(1), k).unwrap(), Rational::from_integer(factorial(k).unwrap()));
        }
    }
}
