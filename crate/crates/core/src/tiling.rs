//! The lozenge-tiling determinant, its product formula, and the lattice-path
//! model behind it.
//!
//! Tilings of the cut-corner hexagon correspond to families of
//! nonintersecting paths `P_i: (i, -i) -> (x + 2i, y - i)` with unit east
//! and north steps that never touch the line `y = x` (they may run along
//! `y = x - 1`).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int, pochhammer, rising};
use crate::linalg::{IntegerMatrix, RationalMatrix};
use crate::poly::interpolate;
use crate::Rational;

/// Side parameters of the region and the number of paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RegionParams {
    pub n: usize,
    pub x: i64,
    pub y: i64,
}

impl RegionParams {
    pub fn new(n: usize, x: i64, y: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("n must be positive"));
        }
        if x < 0 || y < 0 {
            return Err(Error::argument(format!("x and y must be nonnegative, got x={x}, y={y}")));
        }
        Ok(RegionParams { n, x, y })
    }
}

/// `C(x+y+j, x-i+2j) - C(x+y+j, x+i+2j)`, 1-based `i`, `j`.
pub fn entry(i: usize, j: usize, params: &RegionParams) -> BigInt {
    let (i, j) = (i as i64, j as i64);
    let top = params.x + params.y + j;
    binomial(top, params.x - i + 2 * j) - binomial(top, params.x + i + 2 * j)
}

pub fn tiling_matrix(params: &RegionParams) -> IntegerMatrix {
    IntegerMatrix::from_fn(params.n, |i, j| entry(i + 1, j + 1, params))
}

/// Number of tilings, as the determinant of the binomial matrix.
pub fn tiling_determinant(params: &RegionParams) -> BigInt {
    tiling_matrix(params).det()
}

/// `prod_j (j-1)! (x+y+2j)! (x-y+2j+1)_j (x+2y+3j+1)_{n-j} / ((x+n+2j)! (y+n-j)!)`.
pub fn rhs_product(params: &RegionParams) -> Rational {
    let RegionParams { n, x, y } = *params;
    let n = n as i64;
    let fact = |m: i64| Rational::from_integer(factorial(m).expect("nonnegative"));
    let mut acc = Rational::one();
    for j in 1..=n {
        acc *= fact(j - 1)
            * fact(x + y + 2 * j)
            * rising(&int(x - y + 2 * j + 1), j as usize)
            * rising(&int(x + 2 * y + 3 * j + 1), (n - j) as usize)
            / (fact(x + n + 2 * j) * fact(y + n - j));
    }
    acc
}

/// `(x+n+2j)! (y+n-j)! / (x+y+j)!`, the factor pulled out of column `j`.
pub fn column_factor(params: &RegionParams, j: usize) -> Rational {
    let RegionParams { n, x, y } = *params;
    let (n, j) = (n as i64, j as i64);
    let fact = |m: i64| Rational::from_integer(factorial(m).expect("nonnegative"));
    fact(x + n + 2 * j) * fact(y + n - j) / fact(x + y + j)
}

/// `(x+2j-i+1)_{n+i} (y+i-j+1)_{n-i} - (x+2j+i+1)_{n-i} (y-i-j+1)_{n+i}`.
pub fn dn_entry(i: usize, j: usize, x: &Rational, y: &Rational, n: usize) -> Rational {
    let (i, j, n) = (i as i64, j as i64, n as i64);
    let p = |base: Rational, len: i64| rising(&base, len as usize);
    p(x + int(2 * j - i + 1), n + i) * p(y + int(i - j + 1), n - i)
        - p(x + int(2 * j + i + 1), n - i) * p(y + int(-i - j + 1), n + i)
}

pub fn dn_matrix(x: &Rational, y: &Rational, n: usize) -> RationalMatrix {
    RationalMatrix::from_fn(n, |i, j| dn_entry(i + 1, j + 1, x, y, n))
}

pub fn dn_det(x: &Rational, y: &Rational, n: usize) -> Rational {
    dn_matrix(x, y, n).det()
}

/// `prod_j (j-1)! (x+y+j+1)_j (x-y+2j+1)_j (x+2y+3j+1)_{n-j}`.
pub fn dn_rhs(x: &Rational, y: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 1..=n {
        let jj = j as i64;
        acc *= Rational::from_integer(factorial(jj - 1).expect("nonnegative"))
            * rising(&(x + y + int(jj + 1)), j)
            * rising(&(x - y + int(2 * jj + 1)), j)
            * rising(&(x + y * int(2) + int(3 * jj + 1)), n - j);
    }
    acc
}

/// `prod_j (j-1)!`.
pub fn dn_constant(n: usize) -> BigInt {
    (1..=n as i64).map(|j| factorial(j - 1).expect("nonnegative")).product()
}

/// Start and end of a monotone lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathEndpoints {
    pub start: (i64, i64),
    pub end: (i64, i64),
}

impl PathEndpoints {
    pub fn new(start: (i64, i64), end: (i64, i64)) -> Self {
        PathEndpoints { start, end }
    }

    /// Endpoints of `P_i` in the region with parameters `x`, `y`.
    pub fn family_member(i: i64, x: i64, y: i64) -> Self {
        PathEndpoints::new((i, -i), (x + 2 * i, y - i))
    }

    /// Start of path `i` joined to the end of path `j`.
    pub fn crossed(i: i64, j: i64, x: i64, y: i64) -> Self {
        PathEndpoints::new((i, -i), (x + 2 * j, y - j))
    }
}

fn below_diagonal((a, b): (i64, i64)) -> bool {
    b < a
}

/// Number of east/north paths between the endpoints; with `constrained`
/// only paths that never touch `y = x` are counted.
///
/// The constrained count uses the reflection principle: paths touching
/// `y = x` are in bijection with paths from the start reflected in that line.
pub fn count_paths(ep: &PathEndpoints, constrained: bool) -> BigInt {
    let ((a, b), (c, d)) = (ep.start, ep.end);
    if c < a || d < b {
        return BigInt::zero();
    }
    let total = (c - a) + (d - b);
    if !constrained {
        return binomial(total, c - a);
    }
    if !below_diagonal(ep.start) || !below_diagonal(ep.end) {
        return BigInt::zero();
    }
    binomial(total, c - a) - binomial(total, c - b)
}

/// Same count by dynamic programming over the grid.
pub fn count_paths_dp(ep: &PathEndpoints, constrained: bool) -> BigInt {
    let ((a, b), (c, d)) = (ep.start, ep.end);
    if c < a || d < b {
        return BigInt::zero();
    }
    let allowed = |p: (i64, i64)| !constrained || below_diagonal(p);
    let (w, h) = ((c - a + 1) as usize, (d - b + 1) as usize);
    let mut ways = vec![BigInt::zero(); w * h];
    for dy in 0..h {
        for dx in 0..w {
            let p = (a + dx as i64, b + dy as i64);
            if !allowed(p) {
                continue;
            }
            let v = if dx == 0 && dy == 0 {
                BigInt::one()
            } else {
                let mut v = BigInt::zero();
                if dx > 0 {
                    v += &ways[dy * w + dx - 1];
                }
                if dy > 0 {
                    v += &ways[(dy - 1) * w + dx];
                }
                v
            };
            ways[dy * w + dx] = v;
        }
    }
    ways[w * h - 1].clone()
}

/// Upper limit on the number of path tuples the brute-force enumerator visits.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// Counts families of pairwise vertex-disjoint paths `(P_1, ..., P_n)` by
/// enumerating every constrained path for each member.
pub fn brute_force_families(params: &RegionParams) -> Result<u64> {
    let RegionParams { n, x, y } = *params;
    let grid = Grid::new(n as i64, x, y);
    let mut tuples = BigInt::one();
    for i in 1..=n as i64 {
        tuples *= count_paths(&PathEndpoints::family_member(i, x, y), true);
        if tuples > BigInt::from(BRUTE_FORCE_LIMIT) {
            return Err(Error::TooLarge(format!(
                "more than {BRUTE_FORCE_LIMIT} path tuples for n={n}, x={x}, y={y}"
            )));
        }
    }
    let members: Vec<_> = (1..=n as i64)
        .map(|i| grid.paths(&PathEndpoints::family_member(i, x, y)))
        .collect();
    if members.iter().any(|m| m.is_empty()) {
        return Ok(0);
    }
    let count = members[0]
        .par_iter()
        .map(|first| extend_family(&members[1..], first.clone()))
        .sum();
    Ok(count)
}

fn extend_family(rest: &[Vec<Vec<u64>>], occupied: Vec<u64>) -> u64 {
    let Some((head, tail)) = rest.split_first() else {
        return 1;
    };
    head.iter()
        .filter(|p| p.iter().zip(&occupied).all(|(a, b)| a & b == 0))
        .map(|p| extend_family(tail, p.iter().zip(&occupied).map(|(a, b)| a | b).collect()))
        .sum()
}

// Bounding box of all family paths, with points packed into bitsets.
struct Grid {
    x0: i64,
    y0: i64,
    width: i64,
    words: usize,
}

impl Grid {
    fn new(n: i64, x: i64, y: i64) -> Self {
        let (x0, x1) = (1, x + 2 * n);
        let (y0, y1) = (-n, y - 1);
        let width = x1 - x0 + 1;
        let cells = (width * (y1 - y0 + 1).max(1)) as usize;
        Grid {
            x0,
            y0,
            width,
            words: cells.div_ceil(64),
        }
    }

    fn bit(&self, (px, py): (i64, i64)) -> usize {
        ((py - self.y0) * self.width + (px - self.x0)) as usize
    }

    fn paths(&self, ep: &PathEndpoints) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        if ep.end.0 < ep.start.0 || ep.end.1 < ep.start.1 || !below_diagonal(ep.start) {
            return out;
        }
        let mut set = vec![0u64; self.words];
        self.walk(ep.start, ep.end, &mut set, &mut out);
        out
    }

    fn walk(&self, p: (i64, i64), end: (i64, i64), set: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let b = self.bit(p);
        set[b / 64] |= 1 << (b % 64);
        if p == end {
            out.push(set.clone());
        } else {
            for next in [(p.0 + 1, p.1), (p.0, p.1 + 1)] {
                if next.0 <= end.0 && next.1 <= end.1 && below_diagonal(next) {
                    self.walk(next, end, set, out);
                }
            }
        }
        set[b / 64] &= !(1 << (b % 64));
    }
}

/// Measured and expected degrees of `D_n(x, y)` in each variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree_x: i64,
    pub degree_y: i64,
    pub expected: i64,
}

/// Interpolates `D_n` in `x` (at `y = 1/3`) and in `y` (at `x = 1/3`) through
/// `n(3n+1)/2 + 2` consecutive integer nodes, shifted so the product formula
/// does not vanish at any node.
pub fn degree_check(n: usize) -> Result<DegreeCheck> {
    if n == 0 {
        return Err(Error::argument("n must be positive"));
    }
    let expected = (n * (3 * n + 1) / 2) as i64;
    let generic = Rational::new(1.into(), 3.into());
    let degree_in = |vary_x: bool| -> i64 {
        let points = expected as usize + 2;
        let at = |t: i64| {
            let v = int(t);
            if vary_x {
                (v, generic.clone())
            } else {
                (generic.clone(), v)
            }
        };
        let mut shift = 0i64;
        while (0..points as i64).any(|t| {
            let (x, y) = at(shift + t);
            dn_rhs(&x, &y, n).is_zero()
        }) {
            shift += 1;
        }
        let xs: Vec<Rational> = (0..points as i64).map(|t| int(shift + t)).collect();
        let ys: Vec<Rational> = (0..points as i64)
            .map(|t| {
                let (x, y) = at(shift + t);
                dn_det(&x, &y, n)
            })
            .collect();
        interpolate(&xs, &ys).degree_i64()
    };
    Ok(DegreeCheck {
        degree_x: degree_in(true),
        degree_y: degree_in(false),
        expected,
    })
}

/// `det D_n(x, 0) / prod_j (x+j+1)_{n+j}` against `prod_j (j-1)!`.
///
/// Fails when the `y = 0` matrix is not lower triangular.
pub fn constant_check(n: usize, x: &Rational) -> Result<(Rational, Rational)> {
    if n == 0 {
        return Err(Error::argument("n must be positive"));
    }
    let zero = Rational::zero();
    let m = dn_matrix(x, &zero, n);
    for i in 0..n {
        for j in i + 1..n {
            if !m.get(i, j).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "D_n(x, 0) has a nonzero entry above the diagonal at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let mut diagonal = Rational::one();
    for j in 1..=n as i64 {
        diagonal *= pochhammer(&(x + int(j + 1)), n as i64 + j)?;
    }
    if diagonal.is_zero() {
        return Err(Error::pole(x, "prod (x+j+1)_{n+j} vanishes"));
    }
    Ok((m.det() / diagonal, Rational::from_integer(dn_constant(n))))
}
