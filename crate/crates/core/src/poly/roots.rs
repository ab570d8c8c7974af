//! Resultants and integer root search.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::linalg::{IntegerMatrix, RationalMatrix};
use crate::Rational;

/// Resultant of `a` and `b`: the determinant of their Sylvester matrix with
/// the rows of `a` on top, so `Res(k, k - 5) = -5`.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Result<Rational> {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return Err(Error::argument("resultant of a zero polynomial"));
    };
    if m + n == 0 {
        return Ok(Rational::one());
    }
    Ok(RationalMatrix::from_fn(m + n, |row, col| sylvester_entry(a.coeffs(), b.coeffs(), row, col)).det())
}

// Entry of the Sylvester matrix for coefficient lists in increasing degree.
fn sylvester_entry<T: Clone + Zero>(a: &[T], b: &[T], row: usize, col: usize) -> T {
    let (m, n) = (a.len() - 1, b.len() - 1);
    // each row holds one polynomial's coefficients, highest degree first,
    // shifted right by the row offset
    let (coeffs, deg, offset) = if row < n { (a, m, row) } else { (b, n, row - n) };
    col.checked_sub(offset)
        .filter(|&t| t <= deg)
        .map(|t| coeffs[deg - t].clone())
        .unwrap_or_else(T::zero)
}

/// `R(j) = Res_k(a(k), b(k + j))` as a polynomial in `j`, up to a nonzero
/// constant factor, which leaves its roots unchanged.
///
/// Both inputs are replaced by their primitive integer multiples, so every
/// sample is a fraction-free integer determinant. The degree in `j` is at
/// most `deg a * deg b`, so that many plus one samples determine `R`.
pub fn shift_resultant(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return Err(Error::argument("resultant of a zero polynomial"));
    };
    let a_int = a.primitive_integer_coeffs();
    let b_prim = Polynomial::new(
        b.primitive_integer_coeffs()
            .into_iter()
            .map(Rational::from_integer)
            .collect(),
    );
    let points = m * n + 1;
    let mut ys = Vec::with_capacity(points);
    for j in 0..points as i64 {
        let bj: Vec<BigInt> = b_prim.shift(j).coeffs().iter().map(|c| c.numer().clone()).collect();
        let det = if m + n == 0 {
            BigInt::one()
        } else {
            IntegerMatrix::from_fn(m + n, |row, col| sylvester_entry(&a_int, &bj, row, col)).det()
        };
        ys.push(det);
    }
    Ok(interpolate_from_zero(ys))
}

// Interpolates integer samples at 0, 1, ..., n-1 in integer arithmetic:
// with forward differences d_t = Δ^t y(0), the polynomial is
// sum_t d_t (j)_t / t!, where (j)_t is the falling factorial. Everything is
// scaled by (n-1)! until the final division.
fn interpolate_from_zero(mut ys: Vec<BigInt>) -> Polynomial {
    let n = ys.len();
    for level in 1..n {
        for t in (level..n).rev() {
            let prev = ys[t - 1].clone();
            ys[t] -= prev;
        }
    }
    let top = crate::exact::factorial_u(n.saturating_sub(1) as u64);
    let mut acc = vec![BigInt::zero(); n];
    let mut falling = vec![BigInt::one()];
    let mut weight = top.clone();
    for (t, d) in ys.iter().enumerate() {
        if t > 0 {
            // (j)_t = (j)_{t-1} (j - t + 1), and top/t! = (top/(t-1)!) / t
            let shift = BigInt::from(t - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (e, c) in falling.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * &shift;
            }
            falling = next;
            weight /= t;
        }
        if d.is_zero() {
            continue;
        }
        let scale = d * &weight;
        for (e, c) in falling.iter().enumerate() {
            acc[e] += c * &scale;
        }
    }
    Polynomial::new(acc.into_iter().map(|c| Rational::new(c, top.clone())).collect())
}

/// All integer roots of a nonzero polynomial, in increasing order.
///
/// Candidates are divisors of the constant term (after clearing
/// denominators and factoring out powers of `k`) no larger than Fujiwara's
/// root bound.
pub fn integer_roots(a: &Polynomial) -> Result<BTreeSet<i64>> {
    if a.is_zero() {
        return Err(Error::argument("integer roots of the zero polynomial"));
    }
    let mut coeffs = a.primitive_integer_coeffs();
    let mut roots = BTreeSet::new();
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.insert(0);
        coeffs.drain(..zeros);
    }
    if coeffs.len() <= 1 {
        return Ok(roots);
    }
    let bound = fujiwara_bound(&coeffs);
    let constant = coeffs[0].abs();
    let limit = if constant < bound { constant.clone() } else { bound };
    let limit = i64::try_from(&limit).map_err(|_| Error::TooLarge("root search bound exceeds i64".into()))?;
    for d in 1..=limit {
        if !(&constant % d).is_zero() {
            continue;
        }
        for z in [d, -d] {
            if eval_int(&coeffs, z).is_zero() {
                roots.insert(z);
            }
        }
    }
    Ok(roots)
}

fn eval_int(coeffs: &[BigInt], z: i64) -> BigInt {
    let z = BigInt::from(z);
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &z + c)
}

// |root| <= 2 max_i |c_{n-i} / c_n|^(1/i)
fn fujiwara_bound(coeffs: &[BigInt]) -> BigInt {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].abs();
    let mut best = BigInt::zero();
    for i in 1..=n {
        let c = coeffs[n - i].abs();
        if c.is_zero() {
            continue;
        }
        let ceil_ratio = (&c + &lead - BigInt::one()) / &lead;
        let root = ceil_ratio.nth_root(i as u32) + BigInt::one();
        if root > best {
            best = root;
        }
    }
    best * 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn plain_resultants() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-1, 1])).unwrap(), int(0));
        assert_eq!(resultant(&p(&[0, 1]), &p(&[-5, 1])).unwrap(), int(-5));
        // constant against degree-2: c^2
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 1])).unwrap(), int(9));
        assert!(resultant(&Polynomial::zero(), &p(&[1])).is_err());
    }

    #[test]
    fn shift_resultant_root() {
        let r = shift_resultant(&p(&[0, 1]), &p(&[-2, 1])).unwrap();
        assert_eq!(integer_roots(&r).unwrap(), BTreeSet::from([2]));
        // Res(k, k + j - 2) = j - 2
        assert_eq!(r, p(&[-2, 1]));
    }

    #[test]
    fn integer_root_examples() {
        assert_eq!(integer_roots(&p(&[2, -3, 1])).unwrap(), BTreeSet::from([1, 2]));
        assert_eq!(integer_roots(&p(&[1, 0, 1])).unwrap(), BTreeSet::new());
        assert_eq!(integer_roots(&p(&[0, 0, 0, 1])).unwrap(), BTreeSet::from([0]));
        assert!(integer_roots(&Polynomial::zero()).is_err());
        // rational coefficients: (k - 3)(2k + 1)/6
        let q = (&p(&[-3, 1]) * &p(&[1, 2])).scale(&crate::exact::ratio(1, 6));
        assert_eq!(integer_roots(&q).unwrap(), BTreeSet::from([3]));
    }

    proptest! {
        #[test]
        fn roots_match_window_scan(roots in proptest::collection::vec(-12i64..12, 0..4),
                                   extra in proptest::collection::vec(-5i64..6, 0..3),
                                   lead in 1i64..4) {
            let mut f = Polynomial::constant(int(lead));
            for r in &roots {
                f = &f * &p(&[-r, 1]);
            }
            // append an irreducible-ish quadratic factor k^2 + e to mix in non-integer roots
            for e in &extra {
                f = &f * &p(&[e.abs() * 2 + 1, 0, 2]);
            }
            let found = integer_roots(&f).unwrap();
            let scanned: BTreeSet<i64> = (-60..=60).filter(|&z| f.eval(&int(z)).is_zero()).collect();
            prop_assert_eq!(found, scanned);
        }
    }
}
