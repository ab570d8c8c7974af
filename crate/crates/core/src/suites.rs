//! Parameter sweeps behind the `verify` subcommands.
//!
//! Every sweep enumerates its cases in a fixed order, draws random
//! parameters from a seeded generator before any parallel work starts, and
//! collects results in enumeration order, so the report depends only on the
//! ranges and the seed.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{int, ratio};
use crate::hyper::{andrews_burge_4f3, bailey_transform, chu_vandermonde, step1_relation, step2_relation};
use crate::kernel::{
    binomial_transform_check, claim1_check, eq21_residual, eq23_residual, generating_function_check,
    pl_evaluate, reflection_check, row_combination, solvability_sum, solve_s1,
    solve_s2, step3_certificate, step3_instance_with, step3_row_relation, step3_screen, PlPolynomial, Side,
    Step3Instance,
};
use crate::poly::Polynomial;
use crate::report::{CaseRecord, CaseStatus, VerificationReport};
use crate::tiling::{
    brute_force_families, constant_check, count_paths, count_paths_dp, degree_check, entry, rhs_product,
    tiling_determinant, PathEndpoints, RegionParams,
};
use crate::Rational;

pub const DEFAULT_SEED: u64 = 20_251_015;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorem1,
    Step1,
    Step2,
    Step3,
    Claims,
    Classical,
    Degree,
    Constant,
    Lgv,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Theorem1,
        Suite::Step1,
        Suite::Step2,
        Suite::Step3,
        Suite::Claims,
        Suite::Classical,
        Suite::Degree,
        Suite::Constant,
        Suite::Lgv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Step1 => "step1",
            Suite::Step2 => "step2",
            Suite::Step3 => "step3",
            Suite::Claims => "claims",
            Suite::Classical => "classical",
            Suite::Degree => "degree",
            Suite::Constant => "constant",
            Suite::Lgv => "lgv",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::argument(format!("unknown suite '{s}'")))
    }
}

/// Optional bounds; `None` selects the suite's default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteRanges {
    pub n_max: Option<usize>,
    pub x_max: Option<i64>,
    pub y_max: Option<i64>,
    pub l_max: Option<i64>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
}

impl SuiteRanges {
    fn validate(&self) -> Result<()> {
        if self.n_max == Some(0) {
            return Err(Error::argument("n-max must be at least 1"));
        }
        if self.x_max.is_some_and(|x| x < 0) || self.y_max.is_some_and(|y| y < 0) {
            return Err(Error::argument("x-max and y-max must be nonnegative"));
        }
        if self.l_max.is_some_and(|l| l < 1) {
            return Err(Error::argument("l-max must be at least 1"));
        }
        if self.jobs == Some(0) {
            return Err(Error::argument("jobs must be at least 1"));
        }
        Ok(())
    }

    fn n(&self, default: usize) -> i64 {
        self.n_max.unwrap_or(default) as i64
    }
}

/// `x` values for the step1 and step2 suites: five integers and five non-integral rationals.
pub fn column_sweep_x() -> Vec<Rational> {
    let mut xs: Vec<Rational> = [3, 4, 6, 10, 17].into_iter().map(int).collect();
    xs.extend([(1, 2), (1, 3), (-2, 3), (5, 4), (-7, 3)].map(|(a, b)| ratio(a, b)));
    xs
}

/// `y` values for the step3 suite.
pub fn row_sweep_y() -> Vec<Rational> {
    let mut ys: Vec<Rational> = [11, 13, 17].into_iter().map(int).collect();
    ys.extend([(1, 3), (-5, 3), (2, 7), (11, 3), (-13, 4)].map(|(a, b)| ratio(a, b)));
    ys
}

pub fn run_suite(suite: Suite, ranges: &SuiteRanges) -> Result<VerificationReport> {
    ranges.validate()?;
    let seed = ranges.seed.unwrap_or(DEFAULT_SEED);
    let started = Instant::now();
    let run = || match suite {
        Suite::Theorem1 => theorem1(ranges),
        Suite::Step1 => column_relations(ranges, 1),
        Suite::Step2 => column_relations(ranges, 2),
        Suite::Step3 => step3(ranges),
        Suite::Claims => claims(ranges, seed),
        Suite::Classical => classical(seed),
        Suite::Degree => degree(ranges),
        Suite::Constant => constant(ranges),
        Suite::Lgv => lgv(ranges),
    };
    let cases = match ranges.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::argument(format!("cannot start worker pool: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(VerificationReport {
        suite: suite.name().into(),
        seed,
        cases,
        wall_time: started.elapsed(),
    })
}

fn par_cases<T: Sync>(items: Vec<T>, f: impl Fn(&T) -> Vec<CaseRecord> + Sync + Send) -> Vec<CaseRecord> {
    items.par_iter().map(f).collect::<Vec<_>>().concat()
}

fn theorem1(r: &SuiteRanges) -> Vec<CaseRecord> {
    let mut items = Vec::new();
    for n in 1..=r.n(6) as usize {
        for x in 0..=r.x_max.unwrap_or(6) {
            for y in 0..=r.y_max.unwrap_or(6) {
                items.push(RegionParams { n, x, y });
            }
        }
    }
    par_cases(items, |p| {
        let det = Rational::from_integer(tiling_determinant(p));
        vec![CaseRecord::compare("det=product", region(p), &det, &rhs_product(p))]
    })
}

fn region(p: &RegionParams) -> String {
    format!("n={} x={} y={}", p.n, p.x, p.y)
}

fn lgv(r: &SuiteRanges) -> Vec<CaseRecord> {
    let (n_max, x_max, y_max) = (r.n(3) as usize, r.x_max.unwrap_or(3), r.y_max.unwrap_or(3));
    let mut items = Vec::new();
    for n in 1..=n_max {
        for x in 0..=x_max {
            for y in 0..=y_max {
                items.push(RegionParams { n, x, y });
            }
        }
    }
    let mut cases = par_cases(items, |p| {
        let det = Rational::from_integer(tiling_determinant(p));
        vec![match brute_force_families(p) {
            Ok(count) => CaseRecord::compare("families=det", region(p), &Rational::from_integer(count.into()), &det),
            Err(e) => CaseRecord::from_error("families=det", region(p), &e),
        }]
    });
    let mut paths = Vec::new();
    for x in 0..=x_max {
        for y in 0..=y_max {
            for i in 1..=n_max as i64 {
                for j in 1..=n_max as i64 {
                    paths.push((x, y, i, j));
                }
            }
        }
    }
    cases.extend(par_cases(paths, |&(x, y, i, j)| {
        let ep = PathEndpoints::crossed(i, j, x, y);
        let params = format!("x={x} y={y} i={i} j={j}");
        let reflected = count_paths(&ep, true);
        let dp = count_paths_dp(&ep, true);
        let expected = entry(i as usize, j as usize, &RegionParams { n: n_max, x, y });
        let as_q = |v: &BigInt| Rational::from_integer(v.clone());
        vec![
            CaseRecord::compare("reflection=entry", params.clone(), &as_q(&reflected), &as_q(&expected)),
            CaseRecord::compare("reflection=dp", params, &as_q(&reflected), &as_q(&dp)),
        ]
    }));
    cases
}

fn column_relations(r: &SuiteRanges, step: u8) -> Vec<CaseRecord> {
    let xs = column_sweep_x();
    let mut items = Vec::new();
    for n in 1..=r.n(5) {
        for j in 1..=n {
            for l in 1..=j {
                for i in 1..=n {
                    for x in &xs {
                        items.push((n, j, l, i, x.clone()));
                    }
                }
            }
        }
    }
    let check = if step == 1 { "step1-relation" } else { "step2-relation" };
    par_cases(items, |(n, j, l, i, x)| {
        let params = format!("n={n} j={j} l={l} i={i} x={x}");
        let value = if step == 1 {
            step1_relation(*n, *j, *l, *i, x)
        } else {
            step2_relation(*n, *j, *l, *i, x)
        };
        vec![CaseRecord::from_pair(check, params, value.map(|v| (v, Rational::zero())))]
    })
}

// (i, l, j, y)
type RowKey = (i64, i64, i64, Rational);

fn step3(r: &SuiteRanges) -> Vec<CaseRecord> {
    let ys = row_sweep_y();
    let n_max = r.n(4);
    // certificates do not depend on n, so each (i, l, j, y) group shares one
    // per side; records are put back in (n, i, l, j, y) order afterwards
    let mut groups: Vec<(RowKey, Vec<(usize, i64)>)> = Vec::new();
    let mut position = 0;
    for n in 1..=n_max {
        for i in 1..=n {
            for l in 1..=n - i {
                for j in 1..=n {
                    for y in &ys {
                        let key = (i, l, j, y.clone());
                        match groups.iter_mut().find(|(k, _)| *k == key) {
                            Some((_, ns)) => ns.push((position, n)),
                            None => groups.push((key, vec![(position, n)])),
                        }
                        position += 1;
                    }
                }
            }
        }
    }
    let mut indexed: Vec<(usize, Vec<CaseRecord>)> = groups
        .par_iter()
        .flat_map_iter(|((i, l, j, y), ns)| step3_group(*i, *l, *j, y, ns))
        .collect();
    indexed.sort_by_key(|(pos, _)| *pos);
    let mut cases: Vec<CaseRecord> = indexed.into_iter().flat_map(|(_, recs)| recs).collect();
    let mut polys = Vec::new();
    for i in 1..n_max {
        for l in 1..=n_max - i {
            for j in 1..=n_max {
                for y in &ys {
                    polys.push((i, l, j, y.clone()));
                }
            }
        }
    }
    cases.extend(par_cases(polys, |(i, l, j, y)| {
        let params = format!("i={i} l={l} j={j} y={y}");
        vec![match s_polynomials_agree(*i, *l, *j, y) {
            Ok(None) => CaseRecord::flag("s1(k)=s2(1-k)", params, true, ""),
            Ok(Some(reason)) => CaseRecord::flag("s1(k)=s2(1-k)", params, false, &reason),
            Err(e) => CaseRecord::from_error("s1(k)=s2(1-k)", params, &e),
        }]
    }));
    cases
}

fn step3_group(i: i64, l: i64, j: i64, y: &Rational, ns: &[(usize, i64)]) -> Vec<(usize, Vec<CaseRecord>)> {
    let params = |n: i64| format!("n={n} i={i} l={l} j={j} y={y}");
    if let Err(e) = step3_screen(i, l, j, y) {
        return ns
            .iter()
            .map(|&(pos, n)| (pos, vec![CaseRecord::from_error("screen", params(n), &e)]))
            .collect();
    }
    let sides = [("gosper-left", Side::Left), ("gosper-right", Side::Right)];
    let certificates = sides.map(|(_, side)| step3_certificate(i, l, j, y, side));
    ns.iter()
        .map(|&(pos, n)| {
            let mut out = vec![
                CaseRecord::from_pair("row-sums", params(n), step3_row_relation(n, i, l, j, y)),
                CaseRecord::from_pair(
                    "row-combination",
                    params(n),
                    row_combination(n, i, l, j, y).map(|v| (v, Rational::zero())),
                ),
            ];
            for ((check, side), certificate) in sides.iter().zip(&certificates) {
                let instance = certificate
                    .clone()
                    .and_then(|c| step3_instance_with(c, i, l, j, y, n, *side));
                out.push(match instance {
                    Ok(inst) => gosper_record(check, params(n), &inst),
                    Err(e) => CaseRecord::from_error(check, params(n), &e),
                });
            }
            (pos, out)
        })
        .collect()
}

fn gosper_record(check: &str, params: String, inst: &Step3Instance) -> CaseRecord {
    let mut rec = CaseRecord::compare(check, params, &inst.telescoped_sum, &inst.direct_sum);
    if rec.status == CaseStatus::Pass && !(inst.certificate.is_valid() && inst.agrees()) {
        rec.status = CaseStatus::Fail {
            reason: format!(
                "certificate valid={} boundary={} last-term-zero={} explicit-route={}",
                inst.certificate.is_valid(),
                inst.boundary_value == inst.telescoped_sum,
                inst.last_term_vanishes,
                inst.matches_explicit
            ),
        };
    }
    rec
}

// None when every relation between s1 and s2 holds, otherwise the first failure.
fn s_polynomials_agree(i: i64, l: i64, j: i64, y: &Rational) -> Result<Option<String>> {
    let s1 = solve_s1(i, l, j, y)?;
    let s2 = solve_s2(i, l, j, y)?;
    let a = int(-3 * i - l + 2 * j) - y * int(2);
    let checks = [
        (eq21_residual(i, l, j, y, &s1)?.is_zero(), "s1 recurrence residual is nonzero"),
        (eq23_residual(i, l, j, y, &s2)?.is_zero(), "s2 recurrence residual is nonzero"),
        (reflection_check(i, l, j, y, &s2)?, "reflected s2 fails the s1 recurrence"),
        (s1 == s2.compose(&Polynomial::from_ints(&[1, -1])), "s1(k) != s2(1-k)"),
        (s1.degree_i64() <= 2 * l, "deg s1 exceeds 2l"),
        (
            &a * s1.eval(&int(1)) == (y - int(j)) * s1.eval(&int(0)),
            "k = 0 relation between s1(0) and s1(1) fails",
        ),
    ];
    Ok(checks.iter().find(|(ok, _)| !ok).map(|(_, reason)| reason.to_string()))
}

fn random_rational(rng: &mut ChaCha8Rng, max_den: i64) -> Rational {
    ratio(rng.gen_range(-40..=40), rng.gen_range(1..=max_den))
}

fn random_non_integer(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let q = ratio(rng.gen_range(-40..=40), rng.gen_range(2..=9));
        if !q.is_integer() {
            return q;
        }
    }
}

fn claims(r: &SuiteRanges, seed: u64) -> Vec<CaseRecord> {
    let bound = |default: i64| r.l_max.unwrap_or(default);
    let mut cases = Vec::new();
    for l in 1..=bound(6) {
        let pl = PlPolynomial::new(l).expect("l >= 1");
        let a = pl.coefficients();
        let ends = a[0] == BigInt::from(-2) && a[a.len() - 1] == BigInt::from(2);
        cases.push(CaseRecord::flag(
            "antisymmetry",
            format!("l={l}"),
            pl.is_antisymmetric() && ends,
            "a_m != -a_(2l+1-m)",
        ));
        for m in 0..=2 * l + 1 {
            cases.push(CaseRecord::from_pair(
                "binomial-transform",
                format!("l={l} m={m}"),
                binomial_transform_check(l, m).map(|(x, y)| (Rational::from_integer(x), Rational::from_integer(y))),
            ));
        }
        cases.push(match generating_function_check(l) {
            Ok(ok) => CaseRecord::flag("generating-function", format!("l={l}"), ok, "functional equation fails"),
            Err(e) => CaseRecord::from_error("generating-function", format!("l={l}"), &e),
        });
    }
    let grid_e = [(-7, 2), (-2, 1), (-1, 3), (0, 1), (1, 5), (1, 1), (3, 2), (5, 3), (4, 1), (9, 2)];
    let grid_f = [(-5, 1), (-3, 4), (0, 1), (2, 7), (1, 1), (7, 3), (3, 1), (11, 2), (6, 1), (17, 5)];
    let mut grid = Vec::new();
    for l in 1..=bound(6) {
        for &(ea, eb) in &grid_e {
            for &(fa, fb) in &grid_f {
                grid.push((l, ratio(ea, eb), ratio(fa, fb)));
            }
        }
    }
    cases.extend(par_cases(grid, |(l, e, f)| {
        vec![CaseRecord::from_pair("claim1", format!("l={l} e={e} f={f}"), claim1_check(*l, e, f))]
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vanishing = Vec::new();
    for l in 1..=bound(8) {
        for _ in 0..20 {
            vanishing.push((l, random_rational(&mut rng, 9)));
        }
    }
    cases.extend(par_cases(vanishing, |(l, e)| {
        let value = pl_evaluate(*l, &(e * int(2)), &(e + int(*l)));
        vec![CaseRecord::from_pair("P_l(2e,e+l)=0", format!("l={l} e={e}"), value.map(|v| (v, Rational::zero())))]
    }));
    let mut solvability = Vec::new();
    for l in 1..=bound(5) {
        for _ in 0..10 {
            solvability.push((l, random_non_integer(&mut rng)));
        }
    }
    cases.extend(par_cases(solvability, |(l, w)| {
        let value = solvability_sum(*l, w).map(|v| (v, Rational::zero()));
        vec![CaseRecord::from_pair("solvability-sum", format!("l={l} w={w}"), value)]
    }));
    cases
}

fn classical(seed: u64) -> Vec<CaseRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cv = Vec::new();
    for _ in 0..100 {
        let n = rng.gen_range(0..=8i64);
        cv.push((n, random_rational(&mut rng, 6), random_rational(&mut rng, 6)));
    }
    let mut ab = Vec::new();
    for n in 1..=6 {
        for _ in 0..50 {
            ab.push((n, random_rational(&mut rng, 6), random_rational(&mut rng, 6)));
        }
    }
    let mut bailey = Vec::new();
    for n in 0..=5 {
        for _ in 0..50 {
            let params: Vec<Rational> = (0..5).map(|_| random_rational(&mut rng, 6)).collect();
            bailey.push((n, params));
        }
    }
    let mut cases = par_cases(cv, |(n, x, y)| {
        vec![CaseRecord::from_pair(
            "chu-vandermonde",
            format!("N={n} x={x} y={y}"),
            chu_vandermonde(*n, x, y),
        )]
    });
    cases.extend(par_cases(ab, |(n, a, b)| {
        vec![CaseRecord::from_pair(
            "andrews-burge",
            format!("N={n} a={a} b={b}"),
            andrews_burge_4f3(*n, a, b),
        )]
    }));
    cases.extend(par_cases(bailey, |(n, p)| {
        let [a, b, c, e, f] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
        vec![CaseRecord::from_pair(
            "bailey",
            format!("a={a} b={b} c={c} N={n} e={e} f={f}"),
            bailey_transform(a, b, c, *n, e, f),
        )]
    }));
    cases
}

fn degree(r: &SuiteRanges) -> Vec<CaseRecord> {
    let items: Vec<usize> = (1..=r.n(3) as usize).collect();
    par_cases(items, |&n| match degree_check(n) {
        Ok(d) => vec![
            CaseRecord::compare("degree-x", format!("n={n}"), &int(d.degree_x), &int(d.expected)),
            CaseRecord::compare("degree-y", format!("n={n}"), &int(d.degree_y), &int(d.expected)),
        ],
        Err(e) => vec![CaseRecord::from_error("degree", format!("n={n}"), &e)],
    })
}

fn constant(r: &SuiteRanges) -> Vec<CaseRecord> {
    let mut items = Vec::new();
    for n in 1..=r.n(5) as usize {
        for x in [ratio(7, 3), int(2)] {
            items.push((n, x));
        }
    }
    par_cases(items, |(n, x)| {
        vec![CaseRecord::from_pair("constant", format!("n={n} x={x}"), constant_check(*n, x))]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem1_small_range() {
        let ranges = SuiteRanges {
            n_max: Some(2),
            x_max: Some(1),
            y_max: Some(1),
            ..Default::default()
        };
        let report = run_suite(Suite::Theorem1, &ranges).unwrap();
        assert_eq!(report.cases.len(), 8);
        assert!(report.success());
        let nine = report.cases.iter().find(|c| c.parameters == "n=2 x=1 y=1").unwrap();
        assert_eq!(nine.lhs.as_deref(), Some("9"));
    }

    #[test]
    fn claims_small_range() {
        let ranges = SuiteRanges {
            l_max: Some(1),
            ..Default::default()
        };
        let report = run_suite(Suite::Claims, &ranges).unwrap();
        assert!(report.success(), "{}", report.render_text(false));
        assert!(report.cases.iter().any(|c| c.check == "claim1"));
    }

    #[test]
    fn invalid_ranges() {
        let bad = SuiteRanges {
            n_max: Some(0),
            ..Default::default()
        };
        assert!(matches!(run_suite(Suite::Theorem1, &bad), Err(Error::Argument(_))));
        assert!("nonsense".parse::<Suite>().is_err());
        assert_eq!("lgv".parse::<Suite>().unwrap(), Suite::Lgv);
    }

    #[test]
    fn reports_are_reproducible() {
        let ranges = SuiteRanges {
            n_max: Some(2),
            jobs: Some(3),
            ..Default::default()
        };
        let a = run_suite(Suite::Classical, &ranges).unwrap().render_text(false);
        let b = run_suite(Suite::Classical, &SuiteRanges { jobs: Some(1), ..ranges }).unwrap().render_text(false);
        assert_eq!(a, b);
    }
}
