//! Exact linear algebra: fraction-free determinants and rational linear solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rational;

/// Square matrix of exact integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        IntegerMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let order = rows.len();
        assert!(rows.iter().all(|r| r.len() == order), "matrix must be square");
        IntegerMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        bareiss(self.order, self.entries.clone())
    }
}

/// Square matrix of rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    /// Determinant: each row is scaled to integers by the lcm of its
    /// denominators, Bareiss runs on the integer matrix, and the scale is
    /// divided back out.
    pub fn det(&self) -> Rational {
        let n = self.order;
        let mut scale = BigInt::one();
        let mut ints = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            for q in row {
                ints.push(q.numer() * (&lcm / q.denom()));
            }
            scale *= lcm;
        }
        Rational::new(bareiss(n, ints), scale)
    }
}

fn bareiss(n: usize, mut m: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                m.swap(k * n + c, p * n + c);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&pivot * &m[i * n + j] - &m[i * n + k] * &m[k * n + j]) / &prev;
                m[i * n + j] = v;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = m[n * n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Outcome of solving `A v = b` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// A particular solution (free variables set to zero) and the nullity of `A`.
    Solved { values: Vec<Rational>, nullity: usize },
    Inconsistent,
}

/// Solves a dense `rows x cols` system.
///
/// Rows are scaled to integers and reduced to row echelon form by
/// fraction-free elimination on the augmented matrix, where every division
/// by the previous pivot is exact. Back substitution is the only rational
/// step.
pub fn solve_linear(a: Vec<Vec<Rational>>, b: Vec<Rational>, cols: usize) -> LinearSolution {
    let rows = a.len();
    let mut m: Vec<Vec<BigInt>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for cc in c + 1..=cols {
                let v = (&m[r][c] * &m[i][cc] - &m[i][c] * &m[r][cc]) / &prev;
                m[i][cc] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut values = vec![Rational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate().rev() {
        let mut acc = Rational::from_integer(m[row][cols].clone());
        for (cc, v) in values.iter().enumerate().skip(c + 1) {
            if !v.is_zero() && !m[row][cc].is_zero() {
                acc -= v * &m[row][cc];
            }
        }
        values[c] = acc / &m[row][c];
    }
    LinearSolution::Solved {
        values,
        nullity: cols - pivots.len(),
    }
}
