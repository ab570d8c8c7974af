use std::fmt;

use num_traits::{One, Zero};

use super::polynomial::{gcd, Polynomial};
use crate::error::{Error, Result};
use crate::Rational;

/// Reduced quotient of two polynomials with a monic denominator.
///
/// The canonical form makes structural equality coincide with equality of
/// rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if numerator.is_zero() {
            return Ok(Self::from_polynomial(Polynomial::zero()));
        }
        let g = gcd(&numerator, &denominator)?;
        let mut num = numerator.exact_div(&g)?;
        let mut den = denominator.exact_div(&g)?;
        let lead = den.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction {
            numerator: num,
            denominator: den,
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            numerator: p,
            denominator: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.denominator.is_constant().then_some(&self.numerator)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.as_polynomial() {
            Some(p) if p.is_constant() => Some(p.coeff(0)),
            _ => None,
        }
    }

    pub fn eval(&self, point: &Rational) -> Result<Rational> {
        let d = self.denominator.eval(point);
        if d.is_zero() {
            return Err(Error::pole(point, "denominator vanishes"));
        }
        Ok(self.numerator.eval(point) / d)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator);
        Self::new(num, &self.denominator * &rhs.denominator).expect("nonzero denominators")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
        .expect("nonzero denominators")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(
            &self.numerator * &rhs.denominator,
            &self.denominator * &rhs.numerator,
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            numerator: self.numerator.pow(e),
            denominator: self.denominator.pow(e),
        }
    }

    /// `f(k + j)`.
    pub fn shift(&self, j: i64) -> Self {
        Self::new(self.numerator.shift(j), self.denominator.shift(j)).expect("shift keeps denominator nonzero")
    }

    pub fn display<'a>(&'a self, var: &'a str) -> RationalFunctionDisplay<'a> {
        RationalFunctionDisplay { rf: self, var }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl std::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        RationalFunction::add(&self, &rhs)
    }
}

pub struct RationalFunctionDisplay<'a> {
    rf: &'a RationalFunction,
    var: &'a str,
}

impl fmt::Display for RationalFunctionDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rf.denominator.is_one_poly() {
            write!(f, "{}", self.rf.numerator.display(self.var))
        } else {
            write!(
                f,
                "({})/({})",
                self.rf.numerator.display(self.var),
                self.rf.denominator.display(self.var)
            )
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("k").fmt(f)
    }
}

impl Polynomial {
    fn is_one_poly(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}
