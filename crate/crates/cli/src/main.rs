mod repro;

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lrzeta::jdt::rectify_with;
use lrzeta::knuth::{label_off, phi_t};
use lrzeta::lr::lr_table;
use lrzeta::zeta::{verify_product_theorem, verify_skew_theorem, verify_winged_theorem, UChoice};
use lrzeta::{
    enumerate_ssyt, lr_coeff_rect, lr_expand, Cell, CornerPolicy, Diagram, Exponent, Partition, SkewShape, Tableau,
    TruncationContext,
};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lrzeta", version, about = "Tableau combinatorics and truncated Schur multiple zeta identities")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Expansion of a skew Schur function, or of a product with --mu/--nu.
    Expand {
        #[arg(long, conflicts_with_all = ["mu", "nu"])]
        shape: Option<SkewShape>,
        #[arg(long, requires = "nu")]
        mu: Option<Partition>,
        #[arg(long, requires = "mu")]
        nu: Option<Partition>,
    },
    /// Rectify a tableau given as JSON ({"rows": [[null, 2], [1, 3], [2]]}).
    Rect {
        #[arg(long, value_name = "FILE")]
        json: PathBuf,
        #[arg(long, value_enum, default_value_t = Policy::BottomRight)]
        policy: Policy,
    },
    /// Semistandard tableaux of a shape with bounded entries.
    Enumerate {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// Check the skew expansion identity at truncation.
    VerifySkew {
        #[arg(long)]
        shape: Option<SkewShape>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check the product identity at truncation.
    VerifyProduct {
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long)]
        nu: Option<Partition>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check the winged expansion identity at truncation (JSON input only).
    VerifyWinged {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Replay a worked example and diff it against the expected output.
    Repro {
        #[arg(value_enum)]
        example: repro::Example,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    BottomRight,
    TopLeft,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 3)]
    max_entry: u32,
    /// Exact rational arithmetic (the default).
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Floating point arithmetic with this relative tolerance.
    #[arg(long, value_name = "TOL")]
    float: Option<f64>,
    /// Seed for exponents not given in the JSON input.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Shapes, exponents and representative choices as JSON.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

impl RunArgs {
    fn context(&self) -> TruncationContext {
        match self.float {
            Some(tol) => TruncationContext::float(self.max_entry, tol),
            None => TruncationContext::exact(self.max_entry),
        }
    }

    fn input<T: for<'de> Deserialize<'de> + Default>(&self) -> Result<T, Failure> {
        match &self.json {
            Some(path) => read_json(path),
            None => Ok(T::default()),
        }
    }
}

enum Failure {
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A report and whether it records success.
struct Report {
    value: Value,
    ok: bool,
}

fn ok(value: Value) -> Report {
    Report { value, ok: true }
}

/// Random exponents `p/q` with `1 <= p, q <= 5` and value at least 1.
fn random_exponents(cells: impl Iterator<Item = Cell>, rng: &mut ChaCha8Rng) -> Tableau<Exponent> {
    let cells = cells.map(|c| {
        let q = rng.gen_range(1..=5);
        let p = rng.gen_range(q..=5);
        (c, Exponent::from(Rational64::new(p, q)))
    });
    Tableau::from_cells(cells).expect("cells are positive")
}

/// Checks that `t` covers exactly `cells`, naming the first offending box.
fn check_cover(name: &str, t: &Tableau<Exponent>, cells: &Diagram) -> Result<(), Failure> {
    let have: BTreeSet<Cell> = t.cells().collect();
    if let Some(c) = cells.cells().find(|c| !have.contains(c)) {
        return Err(Failure::Input(format!("{name}: no exponent for box ({}, {})", c.0, c.1)));
    }
    if let Some(c) = have.iter().find(|c| !cells.contains(**c)) {
        return Err(Failure::Input(format!("{name}: box ({}, {}) is outside the shape", c.0, c.1)));
    }
    Ok(())
}

fn exponents(
    name: &str,
    given: Option<Tableau<Exponent>>,
    cells: &Diagram,
    rng: &mut ChaCha8Rng,
) -> Result<Tableau<Exponent>, Failure> {
    match given {
        Some(t) => {
            check_cover(name, &t, cells)?;
            Ok(t)
        }
        None => Ok(random_exponents(cells.cells(), rng)),
    }
}

#[derive(Deserialize)]
struct ChoiceEntry {
    nu: Partition,
    placement: Tableau<Cell>,
}

fn u_choice(entries: Option<Vec<ChoiceEntry>>) -> Option<UChoice> {
    entries.map(|es| es.into_iter().map(|e| (e.nu, e.placement)).collect())
}

fn parse<T: std::str::FromStr>(field: &str, s: Option<String>) -> Result<Option<T>, Failure>
where
    T::Err: std::fmt::Display,
{
    s.map(|s| s.parse().map_err(|e| Failure::Input(format!("{field}: {e}"))))
        .transpose()
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct SkewInput {
    shape: Option<String>,
    v: Option<Tableau<Exponent>>,
    u_choice: Option<Vec<ChoiceEntry>>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ProductInput {
    mu: Option<Partition>,
    nu: Option<Partition>,
    s: Option<Tableau<Exponent>>,
    t: Option<Tableau<Exponent>>,
    u_choice: Option<Vec<ChoiceEntry>>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct WingedInput {
    alpha: Diagram,
    l0: usize,
    shape: Option<String>,
    l1: usize,
    beta: Diagram,
    a: Option<Tableau<Exponent>>,
    b: Option<Tableau<Exponent>>,
    v: Option<Tableau<Exponent>>,
    u_choice: Option<Vec<ChoiceEntry>>,
}

fn verdict(report: &lrzeta::VerificationReport) -> Result<Report, Failure> {
    Ok(Report {
        value: serde_json::to_value(report)?,
        ok: report.equal,
    })
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Lr { lambda, mu, nu } => {
            let coeff = if lambda.contains(&mu) {
                lr_coeff_rect(&lambda, &mu, &nu)?
            } else {
                Default::default()
            };
            Ok(ok(json!({
                "lambda": lambda,
                "mu": mu,
                "nu": nu,
                "coeff": serde_json::to_value(coeff.to_string().parse::<u64>()?)?,
            })))
        }
        Command::Expand { shape, mu, nu } => match (shape, mu, nu) {
            (Some(s), _, _) => Ok(ok(serde_json::to_value(lr_expand(&s))?)),
            (None, Some(mu), Some(nu)) => Ok(ok(serde_json::to_value(lr_table(&mu, &nu))?)),
            _ => Err(Failure::Input("expand needs --shape or both --mu and --nu".into())),
        },
        Command::Rect { json, policy } => {
            let t: Tableau<u32> = read_json(&json)?;
            let policy = match policy {
                Policy::BottomRight => CornerPolicy::BottomRight,
                Policy::TopLeft => CornerPolicy::TopLeft,
            };
            let r = rectify_with(&phi_t(&t)?, policy)?;
            let shape = r.shape();
            let rho: Vec<(Cell, Cell)> = r.rho.iter().map(|(&a, &b)| (a, b)).collect();
            Ok(ok(json!({
                "input": t,
                "rectified": label_off(&r.rectified),
                "rho": rho,
                "shape": shape,
            })))
        }
        Command::Enumerate { shape, max_entry, count } => {
            if max_entry < 1 {
                return Err(Failure::Input("--max-entry must be at least 1".into()));
            }
            let it = enumerate_ssyt(&shape.diagram(), max_entry);
            if count {
                Ok(ok(json!({ "shape": shape.to_string(), "max_entry": max_entry, "count": it.count() })))
            } else {
                let all: Vec<Tableau<u32>> = it.collect();
                Ok(ok(json!({
                    "shape": shape.to_string(),
                    "max_entry": max_entry,
                    "count": all.len(),
                    "tableaux": all,
                })))
            }
        }
        Command::VerifySkew { shape, run } => {
            let input: SkewInput = run.input()?;
            let shape = parse::<SkewShape>("shape", input.shape)?
                .or(shape)
                .ok_or_else(|| Failure::Input("verify-skew needs --shape or a shape in the JSON input".into()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(run.seed);
            let v = exponents("v", input.v, &shape.diagram(), &mut rng)?;
            let choice = u_choice(input.u_choice);
            verdict(&verify_skew_theorem(&shape, &v, &run.context(), choice.as_ref())?)
        }
        Command::VerifyProduct { mu, nu, run } => {
            let input: ProductInput = run.input()?;
            let missing = || Failure::Input("verify-product needs --mu and --nu or both in the JSON input".into());
            let mu = input.mu.or(mu).ok_or_else(missing)?;
            let nu = input.nu.or(nu).ok_or_else(missing)?;
            let mut rng = ChaCha8Rng::seed_from_u64(run.seed);
            let s = exponents("s", input.s, &mu.diagram(), &mut rng)?;
            let t = exponents("t", input.t, &nu.diagram(), &mut rng)?;
            let choice = u_choice(input.u_choice);
            verdict(&verify_product_theorem(&mu, &nu, &s, &t, &run.context(), choice.as_ref())?)
        }
        Command::VerifyWinged { run } => {
            if run.json.is_none() {
                return Err(Failure::Input("verify-winged reads its configuration from --json".into()));
            }
            let input: WingedInput = run.input()?;
            let shape: SkewShape = parse("shape", input.shape)?
                .ok_or_else(|| Failure::Input("winged input needs a `shape`".into()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(run.seed);
            let v = exponents("v", input.v, &shape.diagram(), &mut rng)?;
            let a = exponents("a", input.a, &input.alpha, &mut rng)?;
            let b = exponents("b", input.b, &input.beta, &mut rng)?;
            let choice = u_choice(input.u_choice);
            verdict(&verify_winged_theorem(
                &input.alpha,
                &input.beta,
                input.l0,
                input.l1,
                &shape,
                &a,
                &b,
                &v,
                &run.context(),
                choice.as_ref(),
            )?)
        }
        Command::Repro { example } => {
            let r = repro::run(example)?;
            Ok(Report {
                ok: r.pass,
                value: serde_json::to_value(&r)?,
            })
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("TABLEAUX_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli.command) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report.value).expect("reports are valid JSON") + "\n";
            let written = match &cli.out {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("{}", json!({ "error": e }));
                return ExitCode::from(2);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("{}", json!({ "error": msg }));
            ExitCode::from(2)
        }
    }
}
