//! Terminating hypergeometric series and the classical summation and
//! transformation formulas used in the column-annihilation arguments.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{as_i64, binomial, factorial, int, is_nonpositive_integer, pochhammer, ratio};
use crate::Rational;

/// `rFs[upper; lower; argument]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperSeries {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub argument: Rational,
}

impl HyperSeries {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        HyperSeries {
            upper,
            lower,
            argument,
        }
    }

    /// Largest summation index with a possibly nonzero term: the smallest
    /// `N` with `-N` among the upper parameters.
    pub fn termination_index(&self) -> Result<usize> {
        self.upper
            .iter()
            .filter(|a| is_nonpositive_integer(a))
            .filter_map(|a| as_i64(a).map(|v| (-v) as usize))
            .min()
            .ok_or_else(|| Error::argument("series has no nonpositive-integer upper parameter"))
    }

    /// Checks that no lower parameter reaches zero before the series ends.
    pub fn check_lower(&self) -> Result<usize> {
        let n = self.termination_index()?;
        for b in &self.lower {
            if is_nonpositive_integer(b) {
                let reach = as_i64(b).map(|v| (-v) as usize).unwrap_or(usize::MAX);
                if reach < n {
                    return Err(Error::pole(
                        b,
                        format!("lower parameter {b} vanishes at summation index {reach} < {n}"),
                    ));
                }
            }
        }
        Ok(n)
    }
}

/// Sums a terminating series with the term recurrence
/// `t(k+1) / t(k) = prod (a+k) / ((k+1) prod (b+k)) * z`.
pub fn evaluate_terminating_pfq(series: &HyperSeries) -> Result<Rational> {
    let n = series.check_lower()?;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..n {
        let kq = int(k as i64);
        let mut num = series.argument.clone();
        for a in &series.upper {
            num *= a + &kq;
        }
        if num.is_zero() {
            break;
        }
        let mut den = &kq + Rational::one();
        for b in &series.lower {
            den *= b + &kq;
        }
        term = term * num / den;
        sum += &term;
    }
    Ok(sum)
}

/// `sum_{s=0}^{N} C(N, s) (x)_s (y)_{N-s}` against `(x+y)_N`.
pub fn chu_vandermonde(n: i64, x: &Rational, y: &Rational) -> Result<(Rational, Rational)> {
    if n < 0 {
        return Err(Error::argument(format!("N must be nonnegative, got {n}")));
    }
    let mut lhs = Rational::zero();
    for s in 0..=n {
        lhs += Rational::from_integer(binomial(n, s)) * pochhammer(x, s)? * pochhammer(y, n - s)?;
    }
    Ok((lhs, pochhammer(&(x + y), n)?))
}

/// The Andrews-Burge summation
/// `4F3[-N/2, 1/2-N/2, -a, a+b; 1-N, b/2, 1/2+b/2; 1] = ((a+b)_N + (-a)_N) / (b)_N`.
pub fn andrews_burge_4f3(n: i64, a: &Rational, b: &Rational) -> Result<(Rational, Rational)> {
    if n < 1 {
        return Err(Error::argument(format!("N must be positive, got {n}")));
    }
    let half = ratio(1, 2);
    let nq = int(n);
    let series = HyperSeries::new(
        vec![-&nq / int(2), &half - &nq / int(2), -a, a + b],
        vec![int(1) - &nq, b / int(2), &half + b / int(2)],
        int(1),
    );
    screen_lower(&series, n / 2)?;
    let lhs = evaluate_terminating_pfq(&series)?;
    let den = pochhammer(b, n)?;
    if den.is_zero() {
        return Err(Error::pole(b, "(b)_N vanishes"));
    }
    let rhs = (pochhammer(&(a + b), n)? + pochhammer(&-a, n)?) / den;
    Ok((lhs, rhs))
}

/// Bailey's transformation of a balanced terminating `4F3`:
/// `4F3[a, b, c, -N; e, f, 1+a+b+c-e-f-N; 1]` against
/// `(e-a)_N (f-a)_N / ((e)_N (f)_N) *
///  4F3[-N, a, 1+a+c-e-f-N, 1+a+b-e-f-N; 1+a+b+c-e-f-N, 1+a-e-N, 1+a-f-N; 1]`.
pub fn bailey_transform(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: i64,
    e: &Rational,
    f: &Rational,
) -> Result<(Rational, Rational)> {
    if n < 0 {
        return Err(Error::argument(format!("N must be nonnegative, got {n}")));
    }
    let one = Rational::one();
    let nq = int(n);
    let balanced = &one + a + b + c - e - f - &nq;
    let left = HyperSeries::new(
        vec![a.clone(), b.clone(), c.clone(), -&nq],
        vec![e.clone(), f.clone(), balanced.clone()],
        one.clone(),
    );
    screen_lower(&left, n)?;
    let lhs = evaluate_terminating_pfq(&left)?;
    let den = pochhammer(e, n)? * pochhammer(f, n)?;
    if den.is_zero() {
        return Err(Error::pole(&den, "(e)_N (f)_N vanishes"));
    }
    let prefactor = pochhammer(&(e - a), n)? * pochhammer(&(f - a), n)? / den;
    let right = HyperSeries::new(
        vec![
            -&nq,
            a.clone(),
            &one + a + c - e - f - &nq,
            &one + a + b - e - f - &nq,
        ],
        vec![balanced, &one + a - e - &nq, &one + a - f - &nq],
        one,
    );
    screen_lower(&right, n)?;
    let transformed = evaluate_terminating_pfq(&right)?;
    Ok((lhs, prefactor * transformed))
}

// (x + shift)_len
fn px(x: &Rational, shift: i64, len: i64) -> Result<Rational> {
    pochhammer(&(x + int(shift)), len)
}

// Both sides of a summation or transformation are rational functions of the
// free parameters. A lower parameter hitting zero anywhere in the generic
// summation range is a pole of that function, even when another upper
// parameter happens to stop the series earlier.
fn screen_lower(series: &HyperSeries, len: i64) -> Result<()> {
    for (idx, lower) in series.lower.iter().enumerate() {
        denominator(&format!("lower parameter {}", idx + 1), lower.clone(), len)?;
    }
    Ok(())
}

// A denominator shifted factorial, rejected when one of its factors vanishes.
fn denominator(label: &str, base: Rational, len: i64) -> Result<Rational> {
    let value = pochhammer(&base, len)?;
    if value.is_zero() {
        return Err(Error::pole(&base, format!("denominator factor {label} vanishes")));
    }
    Ok(value)
}

fn check_indices(n: i64, j: i64, l: i64, i: i64) -> Result<()> {
    if !(1 <= j && j <= n && 1 <= l && l <= j && 1 <= i && i <= n) {
        return Err(Error::argument(format!(
            "need 1 <= j <= n, 1 <= l <= j, 1 <= i <= n; got n={n}, j={j}, l={l}, i={i}"
        )));
    }
    Ok(())
}

/// Row `i` of the column combination annihilating `D_n(x, y)` on `y = x + 2j + l`;
/// the result is zero when the relation holds.
///
/// For `j = l` the sum over `s` is empty by convention.
pub fn step1_relation(n: i64, j: i64, l: i64, i: i64, x: &Rational) -> Result<Rational> {
    check_indices(n, j, l, i)?;
    let mut total = Rational::zero();
    if j > l {
        for s in l..=(j + l) / 2 {
            let two_x = x * int(2);
            let coefficient = int(j - l) / int(j - s) * px(&int(0), j + l - 2 * s + 1, s - l)?
                / Rational::from_integer(factorial(s - l)?)
                * px(x, 2 * j + l + n - s + 1, s - l)?
                * px(x, n + 2 * s + 1, j + l - 2 * s)?
                / denominator("(2x+2j+l+s+1)_{j-s}", &two_x + int(2 * j + l + s + 1), j - s)?;
            let row = px(x, i + 2 * j + l - s + 1, n - i)? * px(x, -i + 2 * s + 1, n + i)?
                - px(x, -i + 2 * j + l - s + 1, n + i)? * px(x, i + 2 * s + 1, n - i)?;
            total += coefficient * row;
        }
    }
    total += px(x, -i + 2 * j + 1, n + i)? * px(x, i + j + l + 1, n - i)?
        - px(x, i + 2 * j + 1, n - i)? * px(x, -i + j + l + 1, n + i)?;
    Ok(total)
}

/// Row `i` of the column combination annihilating `D_n(x, y)` on `y = -x - j - l`;
/// the result is zero when the relation holds.
pub fn step2_relation(n: i64, j: i64, l: i64, i: i64, x: &Rational) -> Result<Rational> {
    check_indices(n, j, l, i)?;
    let mx = -x;
    let quarter = ratio(-1, 4);
    let mut total = Rational::zero();
    for s in (1 + j - l)..=j {
        let d = j - s;
        let den = denominator("(x+j+s+1/2)_{j-s}", x + int(j + s) + ratio(1, 2), d)?
            * denominator("(x+j+l+s)_{j-s}", x + int(j + l + s), d)?
            * denominator("(x+j+l-n+s)_{j-s}", x + int(j + l - n + s), d)?;
        let coefficient = quarter.pow(d as i32)
            * Rational::from_integer(binomial(l - 1, s + l - j - 1))
            * px(x, n + 2 * s + 1, 2 * d)?
            * pochhammer(&(x * int(2) + int(3 * j + l + s + 1)), d)?
            / den;
        let row = px(&mx, i - j - l - s + 1, n - i)? * px(x, -i + 2 * s + 1, n + i)?
            - px(&mx, -i - j - l - s + 1, n + i)? * px(x, i + 2 * s + 1, n - i)?;
        total += coefficient * row;
    }
    Ok(total)
}
