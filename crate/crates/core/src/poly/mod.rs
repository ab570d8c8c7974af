//! Univariate polynomial and rational-function algebra over the rationals.

mod parse;
mod polynomial;
mod rational_function;
mod roots;

pub use parse::{parse_expression, parse_rational};
pub use polynomial::{gcd, interpolate, rising_poly, PolyDisplay, Polynomial};
pub use rational_function::{RationalFunction, RationalFunctionDisplay};
pub use roots::{integer_roots, resultant, shift_resultant};
