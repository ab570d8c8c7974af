use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperdet_core::gosper::antidifference;
use hyperdet_core::poly::parse_rational;
use hyperdet_core::suites::{run_suite, Suite, SuiteRanges};
use hyperdet_core::tiling::{brute_force_families, rhs_product, tiling_determinant};
use hyperdet_core::{
    definite_sum, parse_expression, Error, Gosper, HypergeometricTermSpec, Rational, RegionParams,
};
use serde_json::json;

/// Exact checks for a lozenge-tiling determinant and the identities behind it.
#[derive(Parser)]
#[command(name = "hyperdet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification sweep and print its report.
    Verify(VerifyArgs),
    /// Print the determinant and the product formula at one point.
    Det {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count tilings as the determinant, optionally by enumerating path families.
    CountTilings {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        brute_force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run Gosper's algorithm on a term given by its ratio t(k+1)/t(k).
    Gosper(GosperArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// theorem1, step1, step2, step3, claims, classical, degree, constant or lgv
    suite: String,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    x_max: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    y_max: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    l_max: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; output does not depend on this.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct RegionArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    x: i64,
    #[arg(long, allow_hyphen_values = true)]
    y: i64,
}

#[derive(Args)]
struct GosperArgs {
    /// Term ratio t(k+1)/t(k), e.g. "(k+1)^2/k".
    #[arg(long)]
    ratio: String,
    #[arg(long, default_value_t = 'k')]
    var: char,
    #[arg(long, allow_hyphen_values = true)]
    anchor: i64,
    /// t(anchor), a rational such as 1 or -3/4.
    #[arg(long, allow_hyphen_values = true)]
    value: String,
    #[arg(long, allow_hyphen_values = true, requires = "to")]
    from: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "from")]
    to: Option<i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Inconsistent(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

// Ok(false) means a check ran and failed.
fn run(command: Command) -> hyperdet_core::Result<bool> {
    match command {
        Command::Verify(args) => verify(args),
        Command::Det { region, format } => det(region, format),
        Command::CountTilings { region, brute_force, format } => count_tilings(region, brute_force, format),
        Command::Gosper(args) => gosper(args),
    }
}

fn verify(args: VerifyArgs) -> hyperdet_core::Result<bool> {
    let suite: Suite = args.suite.parse()?;
    let ranges = SuiteRanges {
        n_max: args.n_max,
        x_max: args.x_max,
        y_max: args.y_max,
        l_max: args.l_max,
        seed: args.seed,
        jobs: args.jobs,
    };
    let report = run_suite(suite, &ranges)?;
    match args.format {
        Format::Text => print!("{}", report.render_text(args.timing)),
        Format::Structured => println!("{}", report.render_structured(args.timing)),
    }
    Ok(report.success())
}

fn region(args: &RegionArgs) -> hyperdet_core::Result<RegionParams> {
    RegionParams::new(args.n, args.x, args.y)
}

fn det(args: RegionArgs, format: Format) -> hyperdet_core::Result<bool> {
    let params = region(&args)?;
    let det = tiling_determinant(&params);
    let product = rhs_product(&params);
    let equal = Rational::from_integer(det.clone()) == product;
    match format {
        Format::Text => {
            println!("determinant {det}");
            println!("product {product}");
            println!("equal {equal}");
        }
        Format::Structured => println!(
            "{}",
            json!({
                "n": params.n, "x": params.x, "y": params.y,
                "determinant": det.to_string(), "product": product.to_string(), "equal": equal,
            })
        ),
    }
    Ok(equal)
}

fn count_tilings(args: RegionArgs, brute_force: bool, format: Format) -> hyperdet_core::Result<bool> {
    let params = region(&args)?;
    let det = tiling_determinant(&params);
    let families = if brute_force { Some(brute_force_families(&params)?) } else { None };
    let agree = families.is_none_or(|f| det == f.into());
    match format {
        Format::Text => {
            println!("tilings {det}");
            if let Some(f) = families {
                println!("path families {f}");
                println!("equal {agree}");
            }
        }
        Format::Structured => println!(
            "{}",
            json!({
                "n": params.n, "x": params.x, "y": params.y,
                "tilings": det.to_string(),
                "path_families": families.map(|f| f.to_string()),
                "equal": agree,
            })
        ),
    }
    Ok(agree)
}

fn gosper(args: GosperArgs) -> hyperdet_core::Result<bool> {
    let ratio = parse_expression(&args.ratio, args.var)?;
    let value = parse_rational(&args.value)?;
    let var = args.var.to_string();
    let term = HypergeometricTermSpec::new(ratio.clone(), args.anchor, value);
    println!("ratio {}", ratio.display(&var));
    let Gosper::Summable(cert) = antidifference(&term)? else {
        println!("not summable: no hypergeometric antidifference exists");
        return Ok(true);
    };
    let d = &cert.decomposition;
    println!("p {}", d.p.display(&var));
    println!("q {}", d.q.display(&var));
    println!("r {}", d.r.display(&var));
    println!("s {}", cert.s.display(&var));
    println!(
        "antidifference T({var}) = ({}) * t({var}), T({var}+1) - T({var}) = t({var})",
        cert.antidifference_factor()?.display(&var)
    );
    println!("T({}) {}", args.anchor, cert.antidifference_at(&term, args.anchor)?);
    if let (Some(from), Some(to)) = (args.from, args.to) {
        // definite_sum errors out if the telescoped and direct sums differ
        if let Gosper::Summable(sum) = definite_sum(&term, from, to)? {
            println!("sum {var}={from}..{to} {sum}");
            println!("direct sum agrees");
        }
    }
    Ok(true)
}
