//! Command-line driver for the exact cevian-configuration lab.
//!
//! Four subcommands: `eval` (closed forms against the geometric oracle),
//! `verify` (named theorem checks, explicit or seeded), `sweep` (limiting
//! families and the best-constant probe over rational grids) and
//! `open-problem` (the exploratory incidence probe).
//!
//! All inputs are exact rationals written as "p/q" (or plain integers);
//! decimal input is rejected. All internal computation is exact — this
//! binary is the only place decimals are ever formatted, and every decimal
//! field is labeled as an approximation by its `_decimal` suffix. Exit
//! codes: 0 all verdicts hold (or exploratory success), 1 at least one
//! check failed, 2 usage/parse/precondition error.

use cevian_lab::explore::{
    best_constant_probe, evaluate_family_point, open_problem_batch, open_problem_probe,
    sweep_ratio_11, sweep_ratio_16, Direction, Family, SweepSpec,
};
use cevian_lab::forms::{
    def_ratio, h_triangle_ratio, routh_ratio, rst_def_ratio, rst_over_g_ratio, rst_over_h_ratio,
};
use cevian_lab::kernel::{format_rational, parse_rational, rat};
use cevian_lab::report::{ReportInputs, Witness, SCHEMA};
use cevian_lab::scene::{build_scene, default_triangle, geometric_ratio};
use cevian_lab::verify::{
    check_claim_10, check_claim_15, check_corollary_2_2, check_moebius, check_rigby,
    check_schlomilch, check_theorem_2_1, check_theorem_2_4, check_zetel, run_suite, CheckId,
};
use cevian_lab::{Error, HPoint, RatioParams, Rational, Report, Verdict};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::ser::{Serialize, SerializeMap, Serializer};

/// Fractional digits in every decimal approximation the CLI prints.
const DECIMAL_DIGITS: u32 = 12;

#[derive(Parser)]
#[command(
    name = "cevian-lab",
    version,
    about = "Exact evaluation and verification of cevian-configuration area ratios"
)]
struct Cli {
    /// Side-division ratios of the first cevian trio, as "p/q" fractions.
    #[arg(long, global = true, num_args = 3, value_names = ["L1", "L2", "L3"])]
    lambda: Option<Vec<String>>,

    /// Side-division ratios of the second cevian trio, as "p/q" fractions.
    #[arg(long, global = true, num_args = 3, value_names = ["U", "V", "W"])]
    uvw: Option<Vec<String>>,

    /// Explicit triangle vertices as three "x,y" pairs of rationals.
    #[arg(long, global = true, num_args = 3, value_names = ["A", "B", "C"])]
    triangle: Option<Vec<String>>,

    /// Seed for all randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of random samples per check or probe batch.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,

    /// Size bound for sampled rational numerators and denominators.
    #[arg(long, global = true, default_value_t = 20)]
    bound: u64,

    /// Comma-separated check names (default: all checks).
    #[arg(long, global = true, value_delimiter = ',')]
    checks: Option<Vec<String>>,

    /// Sweep family: ratio11, ratio16 or best_constant.
    #[arg(long, global = true)]
    family: Option<String>,

    /// Comma-separated rational grid values for sweeps.
    #[arg(long, global = true, value_delimiter = ',')]
    grid: Option<Vec<String>>,

    /// Sweep direction: to_zero or to_infinity.
    #[arg(long, global = true, default_value = "to_zero")]
    direction: String,

    /// Output format; csv applies to sweep only.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every closed-form quantity against the geometric oracle.
    Eval,
    /// Run named checks on explicit inputs or seeded random samples.
    Verify,
    /// Sweep a parametric family over a rational grid.
    Sweep,
    /// Probe the exploratory vertex-on-cevian incidence question.
    #[command(name = "open-problem")]
    OpenProblem,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Eval => cmd_eval(&cli),
        Command::Verify => cmd_verify(&cli),
        Command::Sweep => cmd_sweep(&cli),
        Command::OpenProblem => cmd_open_problem(&cli),
    }
}

fn require<'a, T>(option: &'a Option<T>, flag: &str, context: &str) -> Result<&'a T, Error> {
    option
        .as_ref()
        .ok_or_else(|| Error::PreconditionViolated(format!("{context} requires {flag}")))
}

fn reject_csv(cli: &Cli, command: &str) -> Result<(), Error> {
    if cli.output == OutputFormat::Csv {
        return Err(Error::PreconditionViolated(format!(
            "csv output is only available for sweep, not {command}"
        )));
    }
    Ok(())
}

fn parse_trio(values: &[String], flag: &str) -> Result<[Rational; 3], Error> {
    if values.len() != 3 {
        return Err(Error::Parse(format!("{flag} expects exactly three values")));
    }
    Ok([
        parse_rational(&values[0])?,
        parse_rational(&values[1])?,
        parse_rational(&values[2])?,
    ])
}

fn parse_triangle(values: &[String]) -> Result<(HPoint, HPoint, HPoint), Error> {
    if values.len() != 3 {
        return Err(Error::Parse(
            "--triangle expects exactly three vertices".to_string(),
        ));
    }
    let mut points = Vec::with_capacity(3);
    for value in values {
        let (x, y) = value.split_once(',').ok_or_else(|| {
            Error::Parse(format!("triangle vertex '{value}' must be written as 'x,y'"))
        })?;
        points.push(HPoint::affine(parse_rational(x)?, parse_rational(y)?));
    }
    Ok((points[0].clone(), points[1].clone(), points[2].clone()))
}

fn params_from(lambda: &[Rational; 3], uvw: &[Rational; 3]) -> Result<RatioParams, Error> {
    RatioParams::new(
        lambda[0].clone(),
        lambda[1].clone(),
        lambda[2].clone(),
        uvw[0].clone(),
        uvw[1].clone(),
        uvw[2].clone(),
    )
}

/// Fixed-point decimal with [`DECIMAL_DIGITS`] fractional digits, rounded
/// half away from zero. The only place the whole workspace turns a rational
/// into a decimal.
fn decimal_approx(value: &Rational) -> String {
    let scale = BigInt::from(10u8).pow(DECIMAL_DIGITS);
    let scaled = (value.abs() * Rational::from_integer(scale.clone()) + rat(1, 2))
        .floor()
        .to_integer();
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let frac = frac_part.to_string();
    let sign = if value.is_negative() && scaled != BigInt::from(0) {
        "-"
    } else {
        ""
    };
    format!(
        "{sign}{int_part}.{zeros}{frac}",
        zeros = "0".repeat(DECIMAL_DIGITS as usize - frac.len())
    )
}

/// Insertion-ordered JSON object for the `eval` output.
enum JsonValue {
    Str(String),
    Bool(bool),
    Null,
    CoordinatePairs(Vec<[String; 2]>),
}

struct JsonDoc(Vec<(String, JsonValue)>);

impl JsonDoc {
    fn new() -> Self {
        JsonDoc(vec![(
            "schema".to_string(),
            JsonValue::Str(SCHEMA.to_string()),
        )])
    }

    fn str(&mut self, name: &str, value: impl Into<String>) {
        self.0.push((name.to_string(), JsonValue::Str(value.into())));
    }

    fn flag(&mut self, name: &str, value: bool) {
        self.0.push((name.to_string(), JsonValue::Bool(value)));
    }

    fn null(&mut self, name: &str) {
        self.0.push((name.to_string(), JsonValue::Null));
    }
}

impl Serialize for JsonDoc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in &self.0 {
            match value {
                JsonValue::Str(s) => map.serialize_entry(name, s)?,
                JsonValue::Bool(b) => map.serialize_entry(name, b)?,
                JsonValue::Null => map.serialize_entry(name, &Option::<bool>::None)?,
                JsonValue::CoordinatePairs(pairs) => map.serialize_entry(name, pairs)?,
            }
        }
        map.end()
    }
}

/// Records a closed-form/oracle pair plus its exact-equality flag; returns
/// whether the pair matched.
fn push_pair(doc: &mut JsonDoc, name: &str, closed: &Rational, oracle: &Rational) -> bool {
    let matches = closed == oracle;
    doc.str(name, format_rational(closed));
    doc.str(format!("{name}_geometric").as_str(), format_rational(oracle));
    doc.flag(format!("{name}_match").as_str(), matches);
    matches
}

fn cmd_eval(cli: &Cli) -> Result<i32, Error> {
    reject_csv(cli, "eval")?;
    let lambda = parse_trio(require(&cli.lambda, "--lambda", "eval")?, "--lambda")?;
    let uvw = parse_trio(require(&cli.uvw, "--uvw", "eval")?, "--uvw")?;
    let params = params_from(&lambda, &uvw)?;
    let (a, b, c) = match &cli.triangle {
        Some(vertices) => parse_triangle(vertices)?,
        None => default_triangle(),
    };
    let scene = build_scene(&a, &b, &c, &params)?;

    let mut doc = JsonDoc::new();
    for (name, value) in [
        ("lambda1", params.lambda1()),
        ("lambda2", params.lambda2()),
        ("lambda3", params.lambda3()),
        ("u", params.u()),
        ("v", params.v()),
        ("w", params.w()),
    ] {
        doc.str(name, format_rational(value));
    }
    if cli.triangle.is_some() {
        let pairs = [&a, &b, &c]
            .iter()
            .map(|p| {
                let (x, y) = p.to_affine().expect("parsed triangle vertices are finite");
                [format_rational(&x), format_rational(&y)]
            })
            .collect();
        doc.0
            .push(("triangle".to_string(), JsonValue::CoordinatePairs(pairs)));
    }

    use cevian_lab::TriangleName::{Abc, Def, G1G2G3, H1H2H3, Rst};
    let mut all_match = true;
    all_match &= push_pair(
        &mut doc,
        "routh_ratio",
        &routh_ratio(params.lambda1(), params.lambda2(), params.lambda3())?,
        &geometric_ratio(&scene, G1G2G3, Abc)?,
    );
    all_match &= push_pair(
        &mut doc,
        "def_ratio",
        &def_ratio(params.lambda1(), params.lambda2(), params.lambda3())?,
        &geometric_ratio(&scene, Def, Abc)?,
    );
    all_match &= push_pair(
        &mut doc,
        "rst_def_ratio",
        &rst_def_ratio(&params),
        &geometric_ratio(&scene, Rst, Def)?,
    );
    all_match &= push_pair(
        &mut doc,
        "h_triangle_ratio",
        &h_triangle_ratio(params.u(), params.v(), params.w())?,
        &geometric_ratio(&scene, H1H2H3, Abc)?,
    );

    // The two derived ratios only exist on their halves of parameter space;
    // outside they are emitted as null rather than omitted.
    if params.lambda_product().is_one() {
        doc.null("rst_over_g_ratio");
    } else {
        let closed = rst_over_g_ratio(&params)?;
        all_match &= push_pair(
            &mut doc,
            "rst_over_g_ratio",
            &closed,
            &geometric_ratio(&scene, Rst, G1G2G3)?,
        );
        doc.str("rst_over_g_ratio_decimal", decimal_approx(&closed));
        doc.flag("rst_over_g_ratio_exceeds_one", closed > Rational::one());
    }
    if params.lambda_product().is_one() && !params.uvw_product().is_one() {
        let closed = rst_over_h_ratio(&params)?;
        all_match &= push_pair(
            &mut doc,
            "rst_over_h_ratio",
            &closed,
            &geometric_ratio(&scene, Rst, H1H2H3)?,
        );
        doc.str("rst_over_h_ratio_decimal", decimal_approx(&closed));
        doc.flag("rst_over_h_ratio_exceeds_one", closed > Rational::one());
    } else {
        doc.null("rst_over_h_ratio");
    }

    println!(
        "{}",
        serde_json::to_string(&doc).expect("eval document serializes")
    );
    Ok(if all_match { 0 } else { 1 })
}

fn explicit_reports(cli: &Cli, checks: &[CheckId]) -> Result<Vec<Report>, Error> {
    let mut reports = Vec::with_capacity(checks.len());
    for check in checks {
        let context = format!("verify --checks {check} with explicit inputs");
        let report = match check {
            CheckId::Schlomilch => {
                let (a, b, c) = parse_triangle(require(&cli.triangle, "--triangle", &context)?)?;
                check_schlomilch(&a, &b, &c)?
            }
            CheckId::Moebius | CheckId::Rigby | CheckId::Theorem24 => {
                let trio = parse_trio(require(&cli.lambda, "--lambda", &context)?, "--lambda")?;
                match check {
                    CheckId::Moebius => check_moebius(&trio[0], &trio[1], &trio[2])?,
                    CheckId::Rigby => check_rigby(&trio[0], &trio[1], &trio[2])?,
                    _ => check_theorem_2_4(&trio[0], &trio[1], &trio[2])?,
                }
            }
            _ => {
                let lambda = parse_trio(require(&cli.lambda, "--lambda", &context)?, "--lambda")?;
                let uvw = parse_trio(require(&cli.uvw, "--uvw", &context)?, "--uvw")?;
                let params = params_from(&lambda, &uvw)?;
                match check {
                    CheckId::Theorem21 => check_theorem_2_1(&params)?,
                    CheckId::Corollary22 => check_corollary_2_2(&params)?,
                    CheckId::Zetel => check_zetel(&params)?,
                    CheckId::Claim10 => check_claim_10(&params)?,
                    CheckId::Claim15 => check_claim_15(&params)?,
                    _ => unreachable!("remaining checks handled above"),
                }
            }
        };
        reports.push(report);
    }
    Ok(reports)
}

fn summary_report(reports: &[Report]) -> Report {
    let mut holds = 0u64;
    let mut fails = 0u64;
    let mut degenerate = 0u64;
    for report in reports {
        match report.verdict {
            Verdict::Holds => holds += 1,
            Verdict::Fails => fails += 1,
            Verdict::Degenerate => degenerate += 1,
        }
    }
    let mut witness = Witness::new();
    witness.count("reports", reports.len() as u64);
    witness.count("holds", holds);
    witness.count("fails", fails);
    witness.count("degenerate", degenerate);
    let verdict = if fails == 0 {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Report::new("summary", ReportInputs::None, verdict).with_witness(witness)
}

fn cmd_verify(cli: &Cli) -> Result<i32, Error> {
    reject_csv(cli, "verify")?;
    let checks: Vec<CheckId> = match &cli.checks {
        Some(names) => names
            .iter()
            .map(|name| name.parse())
            .collect::<Result<_, _>>()?,
        None => CheckId::all().to_vec(),
    };
    if checks.is_empty() {
        return Err(Error::PreconditionViolated(
            "verify requires at least one check".to_string(),
        ));
    }
    let explicit = cli.lambda.is_some() || cli.uvw.is_some() || cli.triangle.is_some();
    let reports = if explicit {
        explicit_reports(cli, &checks)?
    } else {
        run_suite(cli.seed, cli.samples, cli.bound, &checks)?
    };
    for report in &reports {
        println!("{}", report.to_json_line());
    }
    let summary = summary_report(&reports);
    println!("{}", summary.to_json_line());
    Ok(if summary.verdict == Verdict::Fails { 1 } else { 0 })
}

fn cmd_sweep(cli: &Cli) -> Result<i32, Error> {
    let family: Family = require(&cli.family, "--family", "sweep")?.parse()?;
    let grid: Vec<Rational> = require(&cli.grid, "--grid", "sweep")?
        .iter()
        .map(|value| parse_rational(value))
        .collect::<Result<_, _>>()?;
    let direction: Direction = cli.direction.parse()?;
    let reports = match family {
        Family::Ratio11 => {
            sweep_ratio_11(&SweepSpec::new(family, grid.clone(), direction, None)?)?
        }
        Family::Ratio16 => {
            sweep_ratio_16(&SweepSpec::new(family, grid.clone(), direction, None)?)?
        }
        Family::BestConstant => vec![best_constant_probe(&grid, &rat(1, 100))?],
    };
    match cli.output {
        OutputFormat::Json => {
            for report in &reports {
                println!("{}", report.to_json_line());
            }
        }
        OutputFormat::Csv => {
            println!("family,epsilon,value,decimal");
            for eps in &grid {
                let value = evaluate_family_point(family, eps)?;
                println!(
                    "{family},{},{},{}",
                    format_rational(eps),
                    format_rational(&value),
                    decimal_approx(&value)
                );
            }
        }
    }
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fails);
    Ok(if failed { 1 } else { 0 })
}

fn cmd_open_problem(cli: &Cli) -> Result<i32, Error> {
    reject_csv(cli, "open-problem")?;
    let explicit = cli.lambda.is_some() || cli.uvw.is_some();
    let reports = if explicit {
        // Validate the uvw product first so a lone --uvw with a bad product
        // reports the actual violation, not a missing flag.
        let uvw = parse_trio(require(&cli.uvw, "--uvw", "open-problem")?, "--uvw")?;
        if !(&uvw[0] * &uvw[1] * &uvw[2]).is_one() {
            return Err(Error::PreconditionViolated(
                "open-problem requires u\u{b7}v\u{b7}w = 1".to_string(),
            ));
        }
        let lambda = parse_trio(require(&cli.lambda, "--lambda", "open-problem")?, "--lambda")?;
        vec![open_problem_probe(&params_from(&lambda, &uvw)?)?]
    } else {
        open_problem_batch(cli.seed, cli.samples, cli.bound)?
    };
    for report in &reports {
        println!("{}", report.to_json_line());
    }
    // Exploratory: a fails verdict is a data point, not a failure.
    Ok(0)
}
