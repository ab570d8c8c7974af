//! Gosper's decision procedure for indefinite hypergeometric summation.
//!
//! Given a term `t(k)` through its consecutive ratio `t(k+1)/t(k)`, the
//! procedure writes the ratio as `p(k+1)/p(k) * q(k)/r(k+1)` with no root of
//! `q` exceeding a root of `r` by a positive integer, then looks for a
//! polynomial `s` with `p(k) = q(k) s(k+1) - r(k) s(k)`. When it exists,
//! `T(k) = r(k) s(k) / p(k) * t(k)` satisfies `T(k+1) - T(k) = t(k)`.

use std::ops::RangeInclusive;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{solve_linear, LinearSolution};
use crate::poly::{gcd, integer_roots, shift_resultant, Polynomial, RationalFunction};
use crate::Rational;

/// Result of a decision procedure that may legitimately answer "no".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gosper<T> {
    Summable(T),
    NotSummable,
}

impl<T> Gosper<T> {
    pub fn summable(self) -> Option<T> {
        match self {
            Gosper::Summable(v) => Some(v),
            Gosper::NotSummable => None,
        }
    }

    pub fn is_summable(&self) -> bool {
        matches!(self, Gosper::Summable(_))
    }
}

/// A hypergeometric term given by its ratio and one anchored value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeometricTermSpec {
    pub ratio: RationalFunction,
    pub anchor: i64,
    pub anchor_value: Rational,
}

impl HypergeometricTermSpec {
    pub fn new(ratio: RationalFunction, anchor: i64, anchor_value: Rational) -> Self {
        HypergeometricTermSpec {
            ratio,
            anchor,
            anchor_value,
        }
    }

    /// `t(k)`, obtained by walking the ratio from the anchor.
    pub fn value_at(&self, k: i64) -> Result<Rational> {
        Ok(self.values(k..=k)?.pop().expect("one value"))
    }

    /// `t(lo), ..., t(hi)`.
    pub fn values(&self, range: RangeInclusive<i64>) -> Result<Vec<Rational>> {
        let (lo, hi) = (*range.start(), *range.end());
        if lo > hi {
            return Ok(Vec::new());
        }
        let mut k = self.anchor;
        let mut t = self.anchor_value.clone();
        while k > lo {
            t = self.step_back(k, &t)?;
            k -= 1;
        }
        while k < lo {
            t = self.step_forward(k, &t)?;
            k += 1;
        }
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        out.push(t.clone());
        while k < hi {
            t = self.step_forward(k, &t)?;
            k += 1;
            out.push(t.clone());
        }
        Ok(out)
    }

    fn step_forward(&self, k: i64, t: &Rational) -> Result<Rational> {
        let at = Rational::from_integer(k.into());
        match self.ratio.eval(&at) {
            Ok(r) => Ok(t * r),
            Err(_) => Err(Error::pole(&at, "term ratio has a pole; cannot continue the term forward")),
        }
    }

    fn step_back(&self, k: i64, t: &Rational) -> Result<Rational> {
        let at = Rational::from_integer((k - 1).into());
        match self.ratio.eval(&at) {
            Ok(r) if !r.is_zero() => Ok(t / r),
            _ => Err(Error::pole(&at, "term ratio vanishes or has a pole; cannot continue the term backward")),
        }
    }
}

/// Gosper's normal form `ratio = p(k+1)/p(k) * q(k)/r(k+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperDecomposition {
    pub p: Polynomial,
    pub q: Polynomial,
    pub r: Polynomial,
}

impl GosperDecomposition {
    /// The ratio this decomposition represents.
    pub fn ratio(&self) -> RationalFunction {
        RationalFunction::new(
            &self.p.shift(1) * &self.q,
            &self.p * &self.r.shift(1),
        )
        .expect("p and r are nonzero")
    }

    /// Positive integers `j` for which `q(k)` and `r(k+j)` share a root.
    pub fn forbidden_shifts(&self) -> Result<Vec<i64>> {
        if self.q.is_constant() || self.r.is_constant() {
            return Ok(Vec::new());
        }
        let res = shift_resultant(&self.q, &self.r)?;
        if res.is_zero() {
            return Err(Error::Inconsistent("shift resultant vanishes identically".into()));
        }
        Ok(integer_roots(&res)?.into_iter().filter(|&j| j > 0).collect())
    }
}

/// Computes Gosper's decomposition of a nonzero ratio.
///
/// Common factors of `q(k)` and `r(k+j)` are moved into `p`, largest shift
/// first, until no positive-integer shift remains.
pub fn pqr_decompose(ratio: &RationalFunction) -> Result<GosperDecomposition> {
    if ratio.is_zero() {
        return Err(Error::argument("Gosper decomposition of a zero ratio"));
    }
    let mut d = GosperDecomposition {
        p: Polynomial::one(),
        q: ratio.numerator().clone(),
        r: ratio.denominator().shift(-1),
    };
    loop {
        let Some(&j) = d.forbidden_shifts()?.last() else {
            return Ok(d);
        };
        let g = gcd(&d.q, &d.r.shift(j))?;
        d.q = d.q.exact_div(&g)?;
        d.r = d.r.exact_div(&g.shift(-j))?;
        for i in 1..j {
            d.p = &d.p * &g.shift(-i);
        }
    }
}

/// Upper bound on `deg s` from Gosper's degree calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    Bound(usize),
    /// No polynomial `s` can exist.
    NoSolution,
}

/// Degree calculus for `p(k) = q(k) s(k+1) - r(k) s(k)`.
///
/// Writing the right side as `((q-r)(s(k+1)+s(k)) + (q+r)(s(k+1)-s(k)))/2`:
/// if `deg(q-r) >= deg(q+r)` the degree is `deg p - deg(q-r)`; otherwise it is
/// `deg p - deg(q+r) + 1` unless that value equals `-2 lambda / lambda'` (the
/// leading terms then cancel), where `lambda'` is the leading coefficient of
/// `q+r` and `lambda` the next-to-leading coefficient of `q-r`; that value is
/// itself a candidate when it is a nonnegative integer.
pub fn degree_bound(d: &GosperDecomposition) -> DegreeBound {
    let deg_p = d.p.degree_i64();
    let minus = &d.q - &d.r;
    let plus = &d.q + &d.r;
    let candidates: Vec<i64> = if minus.degree_i64() >= plus.degree_i64() {
        vec![deg_p - minus.degree_i64()]
    } else {
        let m = plus.degree_i64();
        let lambda_plus = plus.leading();
        let lambda_minus = if m >= 1 { minus.coeff((m - 1) as usize) } else { Rational::zero() };
        let special = -(Rational::from_integer(2.into()) * lambda_minus) / lambda_plus;
        let special = special
            .is_integer()
            .then(|| i64::try_from(special.to_integer()).ok())
            .flatten();
        let generic = deg_p - m + 1;
        let mut c = Vec::new();
        if Some(generic) != special {
            c.push(generic);
            if let Some(s) = special {
                c.push(s);
            }
        }
        c
    };
    match candidates.into_iter().filter(|&c| c >= 0).max() {
        Some(b) => DegreeBound::Bound(b as usize),
        None => DegreeBound::NoSolution,
    }
}

/// Solves Gosper's equation for `s` of degree at most `bound`.
pub fn solve_s(d: &GosperDecomposition, bound: usize) -> Gosper<Polynomial> {
    match solve_gosper_equation(&d.p, &d.q, &d.r, bound) {
        Some((s, _)) => Gosper::Summable(s),
        None => Gosper::NotSummable,
    }
}

/// Solves `p(k) = q(k) s(k+1) - r(k) s(k)` for `deg s <= bound`, returning a
/// solution and the dimension of the homogeneous solution space.
pub fn solve_gosper_equation(
    p: &Polynomial,
    q: &Polynomial,
    r: &Polynomial,
    bound: usize,
) -> Option<(Polynomial, usize)> {
    let columns: Vec<Polynomial> = (0..=bound)
        .map(|m| {
            let mono = Polynomial::variable().pow(m as u32);
            &(q * &mono.shift(1)) - &(r * &mono)
        })
        .collect();
    let rows = columns
        .iter()
        .map(|c| c.coeffs().len())
        .chain(std::iter::once(p.coeffs().len()))
        .max()
        .unwrap_or(0);
    let matrix: Vec<Vec<Rational>> = (0..rows)
        .map(|t| columns.iter().map(|c| c.coeff(t)).collect())
        .collect();
    let rhs: Vec<Rational> = (0..rows).map(|t| p.coeff(t)).collect();
    match solve_linear(matrix, rhs, bound + 1) {
        LinearSolution::Solved { values, nullity } => Some((Polynomial::new(values), nullity)),
        LinearSolution::Inconsistent => None,
    }
}

/// A decomposition together with a solution of Gosper's equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperCertificate {
    pub decomposition: GosperDecomposition,
    pub s: Polynomial,
}

impl GosperCertificate {
    /// `p(k) - q(k) s(k+1) + r(k) s(k)`; zero for a valid certificate.
    pub fn residual(&self) -> Polynomial {
        let GosperDecomposition { p, q, r } = &self.decomposition;
        &(p - &(q * &self.s.shift(1))) + &(r * &self.s)
    }

    pub fn is_valid(&self) -> bool {
        self.residual().is_zero()
    }

    /// The rational factor `r(k) s(k) / p(k)` with `T(k) = factor * t(k)`.
    pub fn antidifference_factor(&self) -> Result<RationalFunction> {
        RationalFunction::new(&self.decomposition.r * &self.s, self.decomposition.p.clone())
    }

    /// `T(lo), ..., T(hi)`.
    ///
    /// With the factor `r s / p` reduced to `N/D`, `T = N v` where `v = t/D`
    /// is walked along its own ratio `ratio(k) D(k) / D(k+1)`. Roots of `p`
    /// that cancel against `r s`, or against zeros of `t`, cause no `0/0`.
    pub fn antidifference_values(
        &self,
        term: &HypergeometricTermSpec,
        range: RangeInclusive<i64>,
    ) -> Result<Vec<Rational>> {
        let (lo, hi) = (*range.start(), *range.end());
        if lo > hi {
            return Ok(Vec::new());
        }
        let factor = self.antidifference_factor()?;
        let (num, den) = (factor.numerator(), factor.denominator());
        let v_ratio = term
            .ratio
            .mul(&RationalFunction::new(den.clone(), den.shift(1))?);
        let (anchor, anchor_value) = Self::reduced_anchor(term, den)?;
        let v = HypergeometricTermSpec::new(v_ratio, anchor, anchor_value);
        Ok(v
            .values(lo..=hi)?
            .into_iter()
            .zip(lo..)
            .map(|(vk, k)| num.eval(&Rational::from_integer(k.into())) * vk)
            .collect())
    }

    /// `T(lo), ..., T(lo + ts.len())` from known values `ts = t(lo), t(lo+1), ...`.
    ///
    /// Where `D(k) != 0`, `T(k) = N(k) t(k) / D(k)` directly. At roots of `D`
    /// and at the point past `ts`, `v = t/D` takes one step from a neighbour.
    /// Unlike [`Self::antidifference_values`] this never walks across zeros
    /// of `t`.
    pub fn antidifference_from_terms(
        &self,
        ratio: &RationalFunction,
        lo: i64,
        ts: &[Rational],
    ) -> Result<Vec<Rational>> {
        let factor = self.antidifference_factor()?;
        let (num, den) = (factor.numerator(), factor.denominator());
        let v_ratio = ratio.mul(&RationalFunction::new(den.clone(), den.shift(1))?);
        let at = |idx: usize| Rational::from_integer((lo + idx as i64).into());
        let mut v: Vec<Option<Rational>> = (0..=ts.len())
            .map(|idx| {
                let d = den.eval(&at(idx));
                (idx < ts.len() && !d.is_zero()).then(|| &ts[idx] / d)
            })
            .collect();
        loop {
            let mut progressed = false;
            for idx in 0..v.len() {
                if v[idx].is_some() {
                    continue;
                }
                let forward = idx
                    .checked_sub(1)
                    .and_then(|prev| Some((v[prev].clone()?, v_ratio.eval(&at(prev)).ok()?)))
                    .map(|(vp, step)| vp * step);
                let backward = || {
                    let vn = v.get(idx + 1)?.clone()?;
                    let step = v_ratio.eval(&at(idx)).ok().filter(|s| !s.is_zero())?;
                    Some(vn / step)
                };
                if let Some(value) = forward.or_else(backward) {
                    v[idx] = Some(value);
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        v.into_iter()
            .enumerate()
            .map(|(idx, vk)| {
                vk.map(|vk| num.eval(&at(idx)) * vk)
                    .ok_or_else(|| Error::pole(&at(idx), "antidifference is not determined by its neighbours"))
            })
            .collect()
    }

    pub fn antidifference_at(&self, term: &HypergeometricTermSpec, k: i64) -> Result<Rational> {
        Ok(self.antidifference_values(term, k..=k)?.pop().expect("one value"))
    }

    // Nearest point to the anchor where `den` does not vanish, with t/den there.
    fn reduced_anchor(term: &HypergeometricTermSpec, den: &Polynomial) -> Result<(i64, Rational)> {
        let reach = den.degree_i64().max(0) + 1;
        let mut last_err = None;
        for off in 0..=reach {
            let candidates = if off == 0 { vec![term.anchor] } else { vec![term.anchor + off, term.anchor - off] };
            for k in candidates {
                let dk = den.eval(&Rational::from_integer(k.into()));
                if dk.is_zero() {
                    continue;
                }
                match term.value_at(k) {
                    Ok(t) => return Ok((k, t / dk)),
                    Err(e) => last_err = Some(e),
                }
            }
        }
        Err(last_err.unwrap_or_else(|| {
            Error::Inconsistent("no anchor point avoids the roots of the antidifference denominator".into())
        }))
    }
}

/// Runs Gosper's algorithm and checks the telescoping relation on a
/// 20-point window starting at the anchor.
pub fn antidifference(term: &HypergeometricTermSpec) -> Result<Gosper<GosperCertificate>> {
    antidifference_checked(term, term.anchor..=term.anchor + 19)
}

/// Runs Gosper's algorithm and checks `T(k+1) - T(k) = t(k)` for every `k`
/// in `window`.
pub fn antidifference_checked(
    term: &HypergeometricTermSpec,
    window: RangeInclusive<i64>,
) -> Result<Gosper<GosperCertificate>> {
    let Some(cert) = find_certificate(&term.ratio)?.summable() else {
        return Ok(Gosper::NotSummable);
    };
    let (lo, hi) = (*window.start(), *window.end());
    if lo <= hi {
        let ts = term.values(lo..=hi)?;
        let big_t = cert.antidifference_values(term, lo..=hi + 1)?;
        for (idx, t) in ts.iter().enumerate() {
            if &(&big_t[idx + 1] - &big_t[idx]) != t {
                return Err(Error::Inconsistent(format!(
                    "telescoping fails at k = {}",
                    lo + idx as i64
                )));
            }
        }
    }
    Ok(Gosper::Summable(cert))
}

/// Decomposition, degree bound and linear solve, with the certificate
/// checked symbolically.
pub fn find_certificate(ratio: &RationalFunction) -> Result<Gosper<GosperCertificate>> {
    let decomposition = pqr_decompose(ratio)?;
    let DegreeBound::Bound(bound) = degree_bound(&decomposition) else {
        return Ok(Gosper::NotSummable);
    };
    let Some(s) = solve_s(&decomposition, bound).summable() else {
        return Ok(Gosper::NotSummable);
    };
    let cert = GosperCertificate { decomposition, s };
    if !cert.is_valid() {
        return Err(Error::Inconsistent("Gosper certificate has a nonzero residual".into()));
    }
    Ok(Gosper::Summable(cert))
}

/// `sum_{k=A}^{B} t(k) = T(B+1) - T(A)`, cross-checked against direct summation.
pub fn definite_sum(term: &HypergeometricTermSpec, from: i64, to: i64) -> Result<Gosper<Rational>> {
    if from > to {
        return Err(Error::argument(format!("empty summation range {from}..={to}")));
    }
    let Some(cert) = antidifference_checked(term, from..=to)?.summable() else {
        return Ok(Gosper::NotSummable);
    };
    let ends = cert.antidifference_values(term, from..=to + 1)?;
    let telescoped = &ends[ends.len() - 1] - &ends[0];
    let direct: Rational = term.values(from..=to)?.into_iter().sum();
    if telescoped != direct {
        return Err(Error::Inconsistent(format!(
            "telescoped sum {telescoped} differs from direct sum {direct}"
        )));
    }
    Ok(Gosper::Summable(telescoped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::poly::parse_expression;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(s: &str) -> RationalFunction {
        parse_expression(s, 'k').unwrap()
    }

    fn decomp(pp: &[i64], qq: &[i64], rr: &[i64]) -> GosperDecomposition {
        GosperDecomposition { p: p(pp), q: p(qq), r: p(rr) }
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(pqr_decompose(&rf("(k+1)^2/k")).unwrap(), decomp(&[0, 1], &[1, 1], &[1]));
        assert_eq!(pqr_decompose(&rf("1")).unwrap(), decomp(&[1], &[1], &[1]));
        assert_eq!(pqr_decompose(&rf("(k+1)/k")).unwrap(), decomp(&[0, 1], &[1], &[1]));
        assert_eq!(pqr_decompose(&rf("k/(k+1)")).unwrap(), decomp(&[1], &[0, 1], &[0, 1]));
        assert!(pqr_decompose(&rf("0")).is_err());
    }

    #[test]
    fn degree_bound_examples() {
        assert_eq!(degree_bound(&decomp(&[0, 1], &[1, 1], &[1])), DegreeBound::Bound(0));
        assert_eq!(degree_bound(&decomp(&[1], &[0, 1], &[0, 1])), DegreeBound::NoSolution);
        assert_eq!(degree_bound(&decomp(&[0, 1], &[1], &[1])), DegreeBound::Bound(2));
    }

    #[test]
    fn solve_s_examples() {
        assert_eq!(solve_s(&decomp(&[0, 1], &[1, 1], &[1]), 0), Gosper::Summable(Polynomial::one()));
        let tri = Polynomial::new(vec![int(0), ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(solve_s(&decomp(&[0, 1], &[1], &[1]), 2), Gosper::Summable(tri));
        assert_eq!(solve_s(&decomp(&[0, 1], &[1], &[1]), 1), Gosper::NotSummable);
        assert_eq!(solve_s(&decomp(&[1], &[0, 1], &[0, 1]), 0), Gosper::NotSummable);
    }

    #[test]
    fn k_times_factorial() {
        let term = HypergeometricTermSpec::new(rf("(k+1)^2/k"), 1, int(1));
        let cert = antidifference(&term).unwrap().summable().unwrap();
        assert_eq!(cert.s, Polynomial::one());
        // T(k) = k! : T(1..=5)
        let t = cert.antidifference_values(&term, 1..=5).unwrap();
        assert_eq!(t, vec![int(1), int(2), int(6), int(24), int(120)]);
        // T(0) = 0! = 1 is reached by walking u = t/p backward
        assert_eq!(cert.antidifference_at(&term, 0).unwrap(), int(1));
        assert_eq!(definite_sum(&term, 1, 5).unwrap(), Gosper::Summable(int(719)));
    }

    #[test]
    fn triangular_numbers() {
        let term = HypergeometricTermSpec::new(rf("(k+1)/k"), 1, int(1));
        let cert = antidifference(&term).unwrap().summable().unwrap();
        for k in 1..8 {
            assert_eq!(cert.antidifference_at(&term, k).unwrap(), int(k * (k - 1) / 2));
        }
        assert_eq!(definite_sum(&term, 1, 4).unwrap(), Gosper::Summable(int(10)));
    }

    #[test]
    fn harmonic_is_not_summable() {
        let term = HypergeometricTermSpec::new(rf("k/(k+1)"), 1, int(1));
        assert_eq!(antidifference(&term).unwrap(), Gosper::NotSummable);
        assert_eq!(definite_sum(&term, 1, 3).unwrap(), Gosper::NotSummable);
    }

    #[test]
    fn single_point_sum() {
        let term = HypergeometricTermSpec::new(rf("2"), 0, int(3));
        assert_eq!(definite_sum(&term, 0, 0).unwrap(), Gosper::Summable(int(3)));
        assert!(definite_sum(&term, 2, 1).is_err());
    }

    #[test]
    fn walking_reports_poles() {
        let term = HypergeometricTermSpec::new(rf("(k+1)^2/k"), 1, int(1));
        assert!(matches!(term.value_at(-1), Err(Error::Pole { .. })));
        assert_eq!(term.value_at(3).unwrap(), int(18));
    }

    #[test]
    fn binomial_alternating_partial_sums() {
        // t(k) = (-1)^k C(6, k): ratio -(6-k)/(k+1); partial sums are (-1)^k C(5, k)
        let term = HypergeometricTermSpec::new(rf("(k-6)/(k+1)"), 0, int(1));
        let cert = antidifference(&term).unwrap().summable().unwrap();
        assert!(cert.is_valid());
        assert_eq!(definite_sum(&term, 0, 3).unwrap(), Gosper::Summable(int(-10)));
    }

    fn linear_product(roots: &[i64]) -> Polynomial {
        roots
            .iter()
            .fold(Polynomial::one(), |acc, &a| &acc * &Polynomial::linear(int(a)))
    }

    fn random_ratio() -> impl Strategy<Value = RationalFunction> {
        (
            prop::collection::vec(-6i64..6, 0..4),
            prop::collection::vec(-6i64..6, 0..4),
            prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)],
        )
            .prop_map(|(num, den, c)| {
                RationalFunction::new(linear_product(&num).scale(&int(c)), linear_product(&den))
                    .unwrap()
            })
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn decomposition_is_valid(ratio in random_ratio(), seeds in prop::collection::vec((-500i64..500, 1i64..97), 200)) {
            let d = pqr_decompose(&ratio).unwrap();
            prop_assert_eq!(d.ratio(), ratio.clone());
            prop_assert!(d.forbidden_shifts().unwrap().is_empty());
            for (a, b) in seeds {
                let z = crate::exact::ratio(a, b);
                let Ok(value) = ratio.eval(&z) else { continue };
                let lhs = value * d.p.eval(&z) * d.r.eval(&(&z + int(1)));
                let rhs = d.p.eval(&(&z + int(1))) * d.q.eval(&z);
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn certificates_telescope(ratio in random_ratio()) {
            let Ok(Gosper::Summable(cert)) = find_certificate(&ratio) else { return Ok(()) };
            prop_assert!(cert.residual().is_zero());
            // anchor well to the right of every root of the test factors
            let term = HypergeometricTermSpec::new(ratio, 10, int(1));
            if let Ok(Gosper::Summable(_)) = antidifference(&term) {
                let t = term.values(10..=29).unwrap();
                let big_t = cert.antidifference_values(&term, 10..=30).unwrap();
                for k in 0..20 {
                    prop_assert_eq!(&big_t[k + 1] - &big_t[k], t[k].clone());
                }
            }
        }

        #[test]
        fn polynomial_times_power_is_summable(c in prop::collection::vec(-5i64..5, 1..4), base in 2i64..5) {
            // t(k) = P(k) base^k with P nonvanishing on k >= 10
            let poly = &Polynomial::from_ints(&c) + &Polynomial::constant(int(1000));
            let ratio = RationalFunction::new(poly.shift(1).scale(&int(base)), poly.clone()).unwrap();
            let term = HypergeometricTermSpec::new(ratio, 10, poly.eval(&int(10)) * int(base).pow(10));
            let cert = antidifference(&term).unwrap().summable().unwrap();
            prop_assert!(cert.is_valid());
            let direct: Rational = term.values(10..=15).unwrap().into_iter().sum();
            prop_assert_eq!(definite_sum(&term, 10, 15).unwrap(), Gosper::Summable(direct));
        }
    }
}

