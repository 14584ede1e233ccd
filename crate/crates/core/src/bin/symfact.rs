use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use symfact::exact::{parse_rational, var_names, MultiPoly};
use symfact::partitions::Partition;
use symfact::quad_check::{self, QuadratureResult};
use symfact::sym_bases::Basis;
use symfact::verify::{self, Suite, VerifyConfig};
use symfact::{ops, qops_schur, Error};

#[derive(Parser)]
#[command(name = "symfact", version, about = "Separating operators on symmetric polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized verification inputs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Print a basis polynomial.
    Basis {
        #[arg(long, value_parser = parse_basis)]
        kind: Basis,
        #[command(flatten)]
        shape: Shape,
        /// Divide by the value at (1, …, 1).
        #[arg(long)]
        normalized: bool,
    },
    /// Apply Q_z to a polynomial, symbolically or at a rational z.
    ApplyQ {
        #[arg(long, value_parser = parse_basis)]
        basis: Basis,
        #[command(flatten)]
        input: Input,
        /// Rational value for z; omit to keep z symbolic.
        #[arg(long)]
        z: Option<String>,
    },
    /// Separate variables: print q_λ(z) and the product over z_1, …, z_n.
    Separate {
        #[arg(long, value_parser = parse_basis)]
        basis: Basis,
        #[command(flatten)]
        shape: Shape,
    },
    /// Apply the inverse separating operator (bases m and s).
    Invert {
        #[arg(long, value_parser = parse_basis)]
        basis: Basis,
        /// Polynomial in z_1, …, z_n; defaults to the separated image of --lambda.
        #[command(flatten)]
        input: Input,
    },
    /// Apply Q_0′, adding one variable.
    Lift {
        #[arg(long, value_parser = parse_basis)]
        basis: Basis,
        #[command(flatten)]
        input: Input,
    },
    /// Run an invariant suite; exit status 1 when any identity fails.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Evaluate one integral representation against its exact oracle.
    Quadrature(QuadArgs),
}

#[derive(Args)]
struct Shape {
    /// Comma-separated weakly decreasing parts, e.g. 2,1,0.
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    /// Number of variables; must equal the number of parts when given.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct Input {
    /// Basis element to use as input.
    #[arg(long, value_parser = parse_partition, conflicts_with = "poly")]
    lambda: Option<Partition>,
    /// Polynomial JSON, `@file` or `-` for stdin.
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    /// Q_z integral, both prefactor conventions.
    Q,
    /// A_k integral on the restricted Schur polynomial.
    A,
    /// Q_0′ integral on s̄ of the partition with its last part dropped.
    Q0prime,
    /// Delta-constrained integral of the alternant.
    Alternant,
}

#[derive(Args)]
struct QuadArgs {
    #[arg(long, value_enum)]
    identity: Identity,
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, default_value_t = 1.5)]
    z: f64,
    /// Comma-separated increasing coordinates (ỹ for the A_k identity).
    #[arg(long, value_delimiter = ',')]
    y: Vec<f64>,
    /// Chain position for the A_k identity.
    #[arg(long)]
    k: Option<usize>,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::Quadrature(_) => Failure::Verification(json!({ "error": e.to_string() })),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<Value, Failure>;

fn check_shape(shape: &Shape) -> Result<(), Failure> {
    match shape.n {
        Some(n) if n != shape.lambda.len() => Err(Failure::Usage(format!(
            "--n {n} does not match the {} parts of --lambda",
            shape.lambda.len()
        ))),
        _ => Ok(()),
    }
}

fn read_poly(src: &str) -> Result<MultiPoly, Failure> {
    let text = if src == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        buf
    } else if let Some(path) = src.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?
    } else {
        src.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("polynomial JSON: {e}")))
}

fn input_poly(basis: Basis, input: &Input) -> Result<MultiPoly, Failure> {
    match (&input.lambda, &input.poly) {
        (Some(lambda), None) => Ok(ops::basis_bar(basis, lambda)?),
        (None, Some(src)) => read_poly(src),
        _ => Err(Failure::Usage("give exactly one of --lambda or --poly".into())),
    }
}

fn poly_json(p: &MultiPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn cmd_basis(kind: Basis, shape: &Shape, normalized: bool) -> CmdResult {
    check_shape(shape)?;
    let b = kind.basis_poly(&shape.lambda)?;
    Ok(poly_json(if normalized { &b.normalized } else { &b.raw }))
}

fn cmd_apply_q(basis: Basis, input: &Input, z: Option<&str>) -> CmdResult {
    let f = input_poly(basis, input)?;
    let n = f.arity();
    let out = match z {
        None => ops::apply_q(basis, &f, n, "z")?,
        Some(text) => {
            let value = parse_rational(text)?;
            let g = ops::apply_q(basis, &f, n, "z")?.eval_slot(n, &value);
            let map: Vec<Option<usize>> = (0..n).map(Some).collect();
            g.remap(f.vars().to_vec(), &map)?
        }
    };
    Ok(poly_json(&out))
}

fn cmd_separate(basis: Basis, shape: &Shape) -> CmdResult {
    check_shape(shape)?;
    let lambda = &shape.lambda;
    let q = ops::q_eigenvalue(basis, lambda)?;
    let product = ops::separate(basis, &ops::basis_bar(basis, lambda)?)?;
    Ok(json!({
        "basis": basis.tag(),
        "lambda": lambda,
        "q": q,
        "q_display": q.to_string(),
        "product": poly_json(&product),
    }))
}

fn cmd_invert(basis: Basis, input: &Input) -> CmdResult {
    let g = match (&input.lambda, &input.poly) {
        (Some(lambda), None) => {
            let q = ops::q_eigenvalue(basis, lambda)?;
            let z = var_names("z", lambda.len());
            (0..lambda.len()).fold(MultiPoly::one(z.clone()), |acc, i| &acc * &q.to_multi(z.clone(), i))
        }
        (None, Some(src)) => read_poly(src)?,
        _ => return Err(Failure::Usage("give exactly one of --lambda or --poly".into())),
    };
    Ok(poly_json(&ops::invert(basis, &g)?))
}

fn cmd_lift(basis: Basis, input: &Input) -> CmdResult {
    let f = input_poly(basis, input)?;
    Ok(poly_json(&ops::lift(basis, &f, f.arity() + 1)?))
}

fn cmd_verify(suite: Suite, max_weight: u32, n: usize, seed: u64) -> CmdResult {
    let report = verify::run(&VerifyConfig { suite, n, max_weight, seed })?;
    let value = serde_json::to_value(&report).expect("reports serialize");
    if report.passed {
        Ok(value)
    } else {
        Err(Failure::Verification(value))
    }
}

#[derive(Serialize)]
struct QuadOutput {
    identity: &'static str,
    lambda: Partition,
    z: f64,
    y: Vec<f64>,
    oracle: f64,
    result: QuadratureResult,
    #[serde(rename = "relErr")]
    rel_err: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    numerator_prefactor: Option<QuadratureResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    convention: Option<quad_check::PrefactorConvention>,
}

fn cmd_quadrature(args: &QuadArgs) -> CmdResult {
    let lambda = &args.lambda;
    let n = lambda.len();
    let f = qops_schur::s_bar(lambda)?;
    let tol = verify::quadrature_tolerance(n);
    let (name, oracle, result, numerator, convention) = match args.identity {
        Identity::Q => {
            let qi = quad_check::integral_q(&f, args.z, &args.y)?;
            let oracle = quad_check::q_oracle(&f, args.z, &args.y)?;
            let m = qi.matching(oracle, tol);
            let conv = (m.len() == 1).then(|| m[0]);
            ("q_integral", oracle, qi.reciprocal, Some(qi.numerator), conv)
        }
        Identity::A => {
            let k = args.k.ok_or_else(|| Failure::Usage("--k is required for the A identity".into()))?;
            let fk = quad_check::restricted_s_bar(lambda, k)?;
            let r = quad_check::integral_a(k, n, &fk, args.z, &args.y)?;
            ("a_integral", quad_check::a_oracle(lambda, args.z, &args.y)?, r, None, None)
        }
        Identity::Q0prime => {
            let short = qops_schur::s_bar(&lambda.truncate_last())?;
            let r = quad_check::integral_q0prime(&short, &args.y)?;
            ("q0prime_integral", quad_check::q0prime_oracle(&short, &args.y)?, r, None, None)
        }
        Identity::Alternant => {
            let mu = symfact::partitions::staircase_shift(lambda);
            let a = symfact::sym_bases::alternant(mu.parts())?;
            let dom = quad_check::OrderedDomain::for_q(args.z, &args.y)?;
            let r = quad_check::integrate_delta(&a, &dom)?;
            let oracle = a.eval_f64(&args.y)? * qops_schur::phi_lambda(lambda)?.phi.eval_f64(args.z);
            ("alternant_integral", oracle, r, None, None)
        }
    };
    let out = QuadOutput {
        identity: name,
        lambda: lambda.clone(),
        z: args.z,
        y: args.y.clone(),
        oracle,
        rel_err: quad_check::rel_err(result.value, oracle),
        result,
        numerator_prefactor: numerator,
        convention,
    };
    let value = serde_json::to_value(&out).expect("quadrature output serializes");
    if out.rel_err <= tol {
        Ok(value)
    } else {
        Err(Failure::Verification(value))
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn print_rows(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.iter().map(|s| s.to_string()).collect());
    for r in rows {
        line(r.clone());
    }
}

fn print_table(out: &mut String, v: &Value) {
    if let (Some(vars), Some(terms)) = (v.get("vars"), v.get("terms").and_then(Value::as_array)) {
        let vars: Vec<String> = vars.as_array().into_iter().flatten().map(cell).collect();
        let mut header: Vec<&str> = vars.iter().map(String::as_str).collect();
        header.push("coeff");
        let rows: Vec<Vec<String>> = terms
            .iter()
            .map(|t| {
                let mut r: Vec<String> = t["e"].as_array().into_iter().flatten().map(cell).collect();
                r.push(cell(&t["c"]));
                r
            })
            .collect();
        print_rows(out, &header, &rows);
    } else if let Some(records) = v.get("records").and_then(Value::as_array) {
        let rows: Vec<Vec<String>> = records
            .iter()
            .map(|r| {
                let lambda = r["lambda"]
                    .as_array()
                    .map(|a| a.iter().map(cell).collect::<Vec<_>>().join(","))
                    .unwrap_or_else(|| "-".into());
                vec![
                    cell(&r["identity"]),
                    cell(&r["n"]),
                    lambda,
                    cell(&r["params"]),
                    cell(&r["relErr"]),
                    cell(&r["convention"]),
                    if r["passed"] == Value::Bool(true) { "pass" } else { "FAIL" }.into(),
                ]
            })
            .collect();
        print_rows(out, &["identity", "n", "lambda", "params", "relErr", "convention", "status"], &rows);
        let _ = writeln!(out, "checked {} failed {}", cell(&v["checked"]), cell(&v["failed"]));
        for note in v["notes"].as_array().into_iter().flatten() {
            let _ = writeln!(out, "note: {}", cell(note));
        }
    } else if let Some(obj) = v.as_object() {
        let rows: Vec<Vec<String>> = obj
            .iter()
            .map(|(k, val)| {
                let shown = match val.get("vars") {
                    Some(_) => serde_json::from_value::<MultiPoly>(val.clone())
                        .map(|p| p.to_string())
                        .unwrap_or_else(|_| val.to_string()),
                    None => cell(val),
                };
                vec![k.clone(), shown]
            })
            .collect();
        print_rows(out, &["field", "value"], &rows);
    } else {
        let _ = writeln!(out, "{}", cell(v));
    }
}

/// Writes the whole output at once; a closed pipe is not an error.
fn emit(format: Format, v: &Value) {
    let mut out = String::new();
    match format {
        Format::Json => {
            let _ = writeln!(out, "{v}");
        }
        Format::Table => print_table(&mut out, v),
    }
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Basis { kind, shape, normalized } => cmd_basis(*kind, shape, *normalized),
        Command::ApplyQ { basis, input, z } => cmd_apply_q(*basis, input, z.as_deref()),
        Command::Separate { basis, shape } => cmd_separate(*basis, shape),
        Command::Invert { basis, input } => cmd_invert(*basis, input),
        Command::Lift { basis, input } => cmd_lift(*basis, input),
        Command::Verify { suite, max_weight, n } => cmd_verify(*suite, *max_weight, *n, cli.seed),
        Command::Quadrature(args) => cmd_quadrature(args),
    };
    match result {
        Ok(v) => {
            emit(cli.format, &v);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(v)) => {
            emit(cli.format, &v);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("symfact: {msg}");
            ExitCode::from(2)
        }
    }
}
