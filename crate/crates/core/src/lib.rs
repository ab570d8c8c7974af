//! Exact verification toolkit for a lozenge-tiling determinant.
//!
//! The crate evaluates the determinant
//! `det_{1<=i,j<=n} (C(x+y+j, x-i+2j) - C(x+y+j, x+i+2j))` and its product
//! formula, and checks every identity its hypergeometric evaluation rests on:
//!
//! - [`exact`]: shifted factorials, factorials and generalized binomials
//! - [`poly`]: polynomial and rational-function algebra, resultants, the expression parser
//! - [`gosper`]: Gosper's decision procedure for indefinite hypergeometric summation
//! - [`hyper`]: terminating `pFq` series, Chu-Vandermonde, Andrews-Burge, Bailey, and
//!   the column-annihilation relations for the first two factor families
//! - [`kernel`]: the `P_l(e, f)` polynomials and the row-annihilation argument
//! - [`tiling`]: the determinant, its product formula, lattice-path counts and
//!   brute-force enumeration of nonintersecting path families
//! - [`suites`] and [`report`]: parameter sweeps producing verification reports
//!
//! All arithmetic is exact.

pub mod error;
pub mod exact;
pub mod gosper;
pub mod hyper;
pub mod kernel;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod suites;
pub mod tiling;

pub use num_bigint::BigInt;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub use error::{Error, Result};
pub use gosper::{
    antidifference, definite_sum, degree_bound, pqr_decompose, solve_s, DegreeBound, Gosper,
    GosperCertificate, GosperDecomposition, HypergeometricTermSpec,
};
pub use hyper::HyperSeries;
pub use kernel::PlPolynomial;
pub use linalg::{IntegerMatrix, RationalMatrix};
pub use poly::{parse_expression, Polynomial, RationalFunction};
pub use report::{CaseRecord, CaseStatus, VerificationReport};
pub use suites::{run_suite, Suite, SuiteRanges};
pub use tiling::{PathEndpoints, RegionParams};
