use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::Rational;

/// Dense univariate polynomial over the rationals.
///
/// `coeffs[t]` is the coefficient of `k^t`; trailing zeros are always
/// stripped, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `k`.
    pub fn variable() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `k + c`.
    pub fn linear(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> Rational {
        self.coeffs.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`; handy in degree arithmetic.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, point: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * point + c)
    }

    /// `a(k + j)` expanded in `k`.
    pub fn shift(&self, j: i64) -> Self {
        self.shift_by(&Rational::from_integer(j.into()))
    }

    /// `a(k + h)` for a rational offset.
    pub fn shift_by(&self, h: &Rational) -> Self {
        // Taylor shift: sum_t c_t (k+h)^t = sum_m k^m sum_{t>=m} c_t C(t,m) h^(t-m)
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        let mut hp = vec![Rational::one(); n];
        for t in 1..n {
            hp[t] = &hp[t - 1] * h;
        }
        for (t, c) in self.coeffs.iter().enumerate() {
            for (m, slot) in out.iter_mut().enumerate().take(t + 1) {
                let b = binomial(t as i64, m as i64);
                *slot += c * &hp[t - m] * Rational::from_integer(b);
            }
        }
        Self::new(out)
    }

    /// `a(c k)`.
    pub fn scale_variable(&self, c: &Rational) -> Self {
        let mut p = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &p);
            p *= c;
        }
        Self::new(out)
    }

    /// `a(b(k))`.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| &(&acc * inner) + &Polynomial::constant(c.clone()))
    }

    /// Euclidean division. Errors when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroDenominator);
        };
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for t in (0..quot.len()).rev() {
            let c = &rem[t + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (s, d) in divisor.coeffs.iter().enumerate() {
                rem[t + s] -= &c * d;
            }
            quot[t] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    /// Multiplies through by the lcm of the denominators and divides by the
    /// content, giving a primitive integer polynomial with the same roots.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Formats with the given variable name, e.g. `3/2*k^2 - k + 1`.
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (t, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = mag.is_one();
            if t == 0 || !unit {
                write!(f, "{mag}")?;
            }
            if t > 0 {
                if !unit {
                    f.write_str("*")?;
                }
                f.write_str(self.var)?;
                if t > 1 {
                    write!(f, "^{t}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("k").fmt(f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|t| self.coeff(t) + rhs.coeff(t)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|t| self.coeff(t) - rhs.coeff(t)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in rhs.coeffs.iter().enumerate() {
                out[s + t] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Monic greatest common divisor. Errors when both inputs are zero.
///
/// Runs a primitive pseudo-remainder sequence on integer coefficients,
/// which keeps intermediate coefficients far smaller than Euclid over the
/// rationals.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::argument("gcd of two zero polynomials"));
    }
    let mut x = a.primitive_integer_coeffs();
    let mut y = b.primitive_integer_coeffs();
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive_part(pseudo_remainder(x, &y));
        x = y;
        y = r;
    }
    Ok(Polynomial::new(x.into_iter().map(Rational::from_integer).collect()).monic())
}

// Remainder of lc(y)^e x modulo y, for nonzero trimmed y.
fn pseudo_remainder(mut x: Vec<BigInt>, y: &[BigInt]) -> Vec<BigInt> {
    let dy = y.len() - 1;
    let lead = &y[dy];
    while x.len() > dy {
        let top = x.pop().expect("nonempty");
        let offset = x.len() - dy;
        for c in x.iter_mut() {
            *c *= lead;
        }
        // the x^(dx) term cancels; subtract top * y shifted by `offset`
        for (t, c) in y[..dy].iter().enumerate() {
            x[offset + t] -= &top * c;
        }
        while x.last().is_some_and(Zero::is_zero) {
            x.pop();
        }
    }
    x
}

fn primitive_part(v: Vec<BigInt>) -> Vec<BigInt> {
    use num_integer::Integer;
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// `(k + c)(k + c + 1) ... (k + c + m - 1)` as a polynomial in `k`.
pub fn rising_poly(c: &Rational, m: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    let mut shift = c.clone();
    for _ in 0..m {
        acc = &acc * &Polynomial::linear(shift.clone());
        shift += BigInt::one();
    }
    acc
}

/// Newton interpolation through `(xs[t], ys[t])`; the nodes must be distinct.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for level in 1..n {
        for t in (level..n).rev() {
            dd[t] = (&dd[t] - &dd[t - 1]) / (&xs[t] - &xs[t - level]);
        }
    }
    let mut acc = Polynomial::zero();
    for t in (0..n).rev() {
        acc = &(&acc * &Polynomial::linear(-&xs[t])) + &Polynomial::constant(dd[t].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[-1, 1]), p(&[0, 2]));
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 1, 1]).pow(0), Polynomial::one());
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[0, 0, 1]), &p(&[3, 1])).unwrap(), Polynomial::one());
        assert_eq!(gcd(&Polynomial::zero(), &p(&[2, 1])).unwrap(), p(&[2, 1]));
        assert!(gcd(&Polynomial::zero(), &Polynomial::zero()).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[0, 0, 1]).shift(1), p(&[1, 2, 1]));
        assert_eq!(p(&[-2, 1]).shift(2), p(&[0, 1]));
        assert_eq!(p(&[7]).shift(-5), p(&[7]));
    }

    #[test]
    fn eval_example() {
        assert_eq!(p(&[-1, 0, 1]).eval(&int(3)), int(8));
    }

    #[test]
    fn display_forms() {
        let q = Polynomial::new(vec![int(1), int(-1), ratio(3, 2)]);
        assert_eq!(q.display("k").to_string(), "3/2*k^2 - k + 1");
        assert_eq!(p(&[0, -1]).display("n").to_string(), "-n");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let f = p(&[3, -1, 0, 2]);
        let xs: Vec<_> = (0..6).map(int).collect();
        let ys: Vec<_> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), f);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-9i64..10, 1i64..4), 0..6)
            .prop_map(|v| Polynomial::new(v.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn gcd_matches_rational_euclid(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let (mut x, mut y) = (a.clone(), b.clone());
            while !y.is_zero() {
                let r = x.div_rem(&y).unwrap().1;
                x = y;
                y = r;
            }
            prop_assert_eq!(gcd(&a, &b).unwrap(), x.monic());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = gcd(&a, &b).unwrap();
            prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
            if !c.is_zero() {
                prop_assert!(g.div_rem(&c).unwrap().1.is_zero());
            }
        }

        #[test]
        fn shift_inverts(a in arb_poly(), j in -6i64..7) {
            prop_assert_eq!(a.shift(j).shift(-j), a);
        }

        #[test]
        fn shift_matches_eval(a in arb_poly(), j in -6i64..7, z in -10i64..10) {
            prop_assert_eq!(a.shift(j).eval(&int(z)), a.eval(&int(z + j)));
        }

        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree_i64() < b.degree_i64());
        }
    }
}
