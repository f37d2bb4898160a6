//! `macdonald`: compute nonsymmetric Macdonald polynomials and run the
//! verification suites from the command line.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use macdonald_core::report::Report;
use macdonald_core::{comb, hecke, hhl, matrixprod, vertex, Composition, XPolynomial};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "macdonald", version, about = "Nonsymmetric Macdonald polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a polynomial and print it.
    Compute(PolyArgs),
    /// Print the monomial expansion, one term per line in graded order.
    Expand(PolyArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Composition, comma separated, e.g. 0,2,1.
    #[arg(long)]
    mu: String,
    /// Basement permutation, comma separated (matrix route only).
    #[arg(long)]
    rho: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Matrix)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[arg(long, value_enum, default_value_t = Convention::F)]
    convention: Convention,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check to run; may also be given with --check.
    #[arg(value_enum, required_unless_present = "check_flag", conflicts_with = "check_flag")]
    check: Option<Check>,
    #[arg(long = "check", value_enum)]
    check_flag: Option<Check>,
    /// Composition; without it the default family is used.
    #[arg(long)]
    mu: Option<String>,
    /// Row index for the cyclic check; all rows when omitted.
    #[arg(long)]
    i: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Hhl,
    Matrix,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    #[value(name = "f")]
    F,
    #[value(name = "E")]
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Eigen,
    Ybe,
    Exchange,
    Cyclic,
    Frozen,
    Bijection,
    Hecke,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Eigen => "eigen",
            Check::Ybe => "ybe",
            Check::Exchange => "exchange",
            Check::Cyclic => "cyclic",
            Check::Frozen => "frozen",
            Check::Bijection => "bijection",
            Check::Hecke => "hecke",
        }
    }
}

/// Failures that map to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Usage(msg.into()))
}

fn parse_mu(s: &str) -> anyhow::Result<Composition> {
    s.parse::<Composition>().map_err(|e| usage(format!("malformed composition {s:?}: {e}")))
}

fn parse_rho(s: &str, n: usize) -> anyhow::Result<Vec<usize>> {
    let rho = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("malformed permutation {s:?}")))?;
    matrixprod::check_permutation(&rho, n)
        .map_err(|e| usage(format!("rho is not a permutation of 1..{n}: {e}")))?;
    Ok(rho)
}

fn route(method: Method, mu: &Composition, rho: Option<&[usize]>) -> anyhow::Result<XPolynomial> {
    let p = match method {
        Method::Hhl => hhl::f_hhl(mu),
        _ => matrixprod::f_matrix_product(mu, rho),
    };
    p.with_context(|| format!("computing f for mu = {mu}"))
}

struct Computed {
    poly: XPolynomial,
    agree: Option<bool>,
}

fn compute(args: &PolyArgs) -> anyhow::Result<Computed> {
    let mu = parse_mu(&args.mu)?;
    let rho = args.rho.as_deref().map(|s| parse_rho(s, mu.n())).transpose()?;
    if rho.is_some() && args.method != Method::Matrix {
        bail!(usage("--rho requires --method matrix"));
    }
    if rho.is_some() && args.convention == Convention::E {
        bail!(usage("--rho is only defined for --convention f"));
    }
    // E_mu(x1..xn) = f_{rev mu}(xn..x1)
    let target = match args.convention {
        Convention::F => mu.clone(),
        Convention::E => mu.reversed(),
    };
    let finish = |p: XPolynomial| match args.convention {
        Convention::F => p,
        Convention::E => p.reverse_vars(),
    };
    if args.method == Method::Both {
        let a = route(Method::Hhl, &target, None)?;
        let b = route(Method::Matrix, &target, None)?;
        let agree = a == b;
        return Ok(Computed { poly: finish(b), agree: Some(agree) });
    }
    let poly = route(args.method, &target, rho.as_deref())?;
    Ok(Computed { poly: finish(poly), agree: None })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Hhl => "hhl",
        Method::Matrix => "matrix",
        Method::Both => "both",
    }
}

fn run_compute(args: &PolyArgs) -> anyhow::Result<bool> {
    let c = compute(args)?;
    match args.output {
        Output::Json => {
            let mu = parse_mu(&args.mu)?;
            let mut v = json!({
                "mu": mu.parts(),
                "method": method_name(args.method),
                "poly": c.poly,
            });
            if let Some(agree) = c.agree {
                v["routes_agree"] = json!(agree);
            }
            println!("{}", serde_json::to_string(&v)?);
        }
        Output::Text | Output::Latex => {
            println!("{}", c.poly.render(args.output == Output::Latex));
            match c.agree {
                Some(true) => println!("routes agree"),
                Some(false) => eprintln!("routes differ"),
                None => {}
            }
        }
    }
    Ok(c.agree != Some(false))
}

fn run_expand(args: &PolyArgs) -> anyhow::Result<bool> {
    let c = compute(args)?;
    let terms = c.poly.graded_terms();
    match args.output {
        Output::Json => {
            let rows: Vec<_> =
                terms.iter().map(|(e, coeff)| json!({ "exponents": e, "coeff": coeff })).collect();
            println!("{}", serde_json::to_string(&rows)?);
        }
        Output::Text | Output::Latex => {
            let latex = args.output == Output::Latex;
            for (e, coeff) in terms {
                let mono = XPolynomial::monomial(e).render(latex);
                println!("{mono}\t{}", coeff.render(latex));
            }
        }
    }
    if c.agree == Some(false) {
        eprintln!("routes differ");
    }
    Ok(c.agree != Some(false))
}

/// Default verification family: n <= 3 with parts <= 3, and n = 4 with parts <= 2.
fn default_family() -> Vec<Composition> {
    let mut v = Vec::new();
    for n in 1..=3 {
        v.extend(comb::compositions(n, 3));
    }
    v.extend(comb::compositions(4, 2));
    v
}

fn small_family() -> Vec<Composition> {
    (1..=3).flat_map(|n| comb::compositions(n, 2)).collect()
}

fn family(mu: &Option<Composition>, small: bool) -> Vec<Composition> {
    match mu {
        Some(m) => vec![m.clone()],
        None if small => small_family(),
        None => default_family(),
    }
}

fn verify(args: &VerifyArgs) -> anyhow::Result<Report> {
    let check = args.check.or(args.check_flag).ok_or_else(|| usage("a check is required"))?;
    let mu = args.mu.as_deref().map(parse_mu).transpose()?;
    let mut report = Report::new(check.name());
    match check {
        Check::Eigen => {
            for m in family(&mu, false) {
                let f = route(Method::Matrix, &m, None)?;
                report.merge(prefixed(&m, hecke::verify_eigen(&f, &m)));
            }
        }
        Check::Ybe => {
            let points = vertex::default_sample_points();
            for n in 1..=2 {
                report.merge(vertex::ybe_check(n, 2, &points));
            }
            report.merge(vertex::ybe_check_symbolic(1, 2, &vertex::l_weight));
        }
        Check::Exchange => {
            for i in 1..=2 {
                for j in 1..=2 {
                    report.merge(vertex::exchange_check(i, j, 2, 1, 1));
                }
            }
            if let Some(m) = &mu {
                for rho in matrixprod::permutations(m.n()) {
                    report.merge(prefixed(m, matrixprod::exchange_rho_check(m, &rho)));
                }
            }
        }
        Check::Cyclic => {
            for m in family(&mu, true) {
                let rows: Vec<usize> = match args.i {
                    Some(i) if i == 0 || i > m.n() => {
                        bail!(usage(format!("--i must lie in 1..={}", m.n())))
                    }
                    Some(i) => vec![i],
                    None => (1..=m.n()).collect(),
                };
                for i in rows {
                    report.merge(prefixed(&m, matrixprod::cyclic_check(&m, i)));
                }
            }
        }
        Check::Frozen => {
            for m in family(&mu, false) {
                report.merge(prefixed(&m, matrixprod::frozen_check(&m)));
            }
        }
        Check::Bijection => {
            for m in family(&mu, true) {
                report.merge(prefixed(&m, hhl::bijection_check(&m)));
                report.merge(prefixed(&m, hhl::weight_match_check(&m)));
            }
        }
        Check::Hecke => {
            let ns: Vec<usize> = match &mu {
                Some(m) => vec![m.n()],
                None => vec![1, 2, 3],
            };
            for n in ns {
                report.merge(hecke::verify_hecke_relations(n, 4, args.seed.wrapping_add(n as u64)));
                let mus = match &mu {
                    Some(m) => vec![m.clone()],
                    None => comb::compositions(n, 2),
                };
                for m in mus {
                    for rho in matrixprod::permutations(n) {
                        report.merge(prefixed(&m, matrixprod::exchange_rho_check(&m, &rho)));
                    }
                }
            }
        }
    }
    report.entries.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(report)
}

fn prefixed(mu: &Composition, mut r: Report) -> Report {
    for e in &mut r.entries {
        e.label = format!("mu={mu} {}", e.label);
    }
    r
}

fn run_verify(args: &VerifyArgs) -> anyhow::Result<bool> {
    let report = verify(args)?;
    let failed = report.failures().count();
    match args.output {
        Output::Json => println!("{}", serde_json::to_string(&report)?),
        Output::Text | Output::Latex => {
            let status = if report.passed() { "PASS" } else { "FAIL" };
            println!("{status} {} ({} checks, {failed} failed)", report.name, report.len());
        }
    }
    if !report.passed() {
        eprint!("{report}");
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => run_compute(a),
        Command::Expand(a) => run_expand(a),
        Command::Verify(a) => run_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<Usage>().is_some() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
