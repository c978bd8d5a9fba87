//! `fgct`: character tables, forms, fives and the Isaacs correspondence from
//! the command line. Every command prints one JSON report (schema `fgct/1`).
//!
//! Exit codes: 0 success, 1 usage error, 2 hypothesis violated,
//! 3 internal theorem check failed.

mod commands;
mod select;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::{FiveArgs, Outcome};
use fgct::group::set_order_cap;
use fgct::{Error, ErrorClass};
use select::Ambient;
use serde_json::{json, Value};
use std::process::ExitCode;
use std::time::Instant;

const SCHEMA: &str = "fgct/1";

#[derive(Parser, Debug)]
#[command(name = "fgct", version, about = "Exact character theory of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; tsv is only available for `table`.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Single-line JSON instead of pretty printing.
    #[arg(long, global = true)]
    compact: bool,

    /// Include character values and full traces.
    #[arg(short, long, global = true)]
    verbose: bool,

    /// Largest group order accepted (overrides FGCT_ORDER_CAP).
    #[arg(long, global = true)]
    order_cap: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

/// A group: `--group SPEC`, or the semidirect product of `--n` by `--a`.
#[derive(Args, Debug)]
struct Source {
    /// JSON group spec or short catalog name (cyclic6, sym4, quaternion8, ...).
    #[arg(long, conflicts_with_all = ["n", "a"])]
    group: Option<String>,
    /// Normal factor N of N⋊A.
    #[arg(long, requires = "a")]
    n: Option<String>,
    /// Acting group A of N⋊A.
    #[arg(long, requires = "n")]
    a: Option<String>,
    /// trivial, inversion, inversion-mod-center, symplectic:a,b,c,d,
    /// auto-order:k, or a JSON list of generator images.
    #[arg(long, default_value = "trivial", requires = "n")]
    action: String,
}

impl Source {
    fn ambient(&self, a_power: Option<i64>) -> fgct::Result<Ambient> {
        match (&self.group, &self.n, &self.a) {
            (Some(g), _, _) => Ambient::from_group(g),
            (None, Some(n), Some(a)) => Ambient::from_setup(n, a, &self.action, a_power),
            _ => Err(Error::Parse("give --group, or --n and --a".into())),
        }
    }
}

/// `L` and `φ ∈ Irr(L)`.
#[derive(Args, Debug)]
struct Section {
    /// Normal subgroup L (see README for selectors).
    #[arg(long)]
    l: String,
    /// Character of L: table index or filter such as `faithful,first`.
    #[arg(long)]
    phi: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character table.
    Table {
        #[command(flatten)]
        src: Source,
    },
    /// Values of the form on pairs of coset representatives of G/L.
    Form {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        sec: Section,
    },
    /// Good classes of G/L and Gallagher's count.
    Good {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        sec: Section,
    },
    /// Scan every (K, L, φ) with L ≤ K normal for full ramification.
    Ramified {
        #[command(flatten)]
        src: Source,
    },
    /// Build a five, its magic character and the correspondence at every level.
    Five {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        k: String,
        #[command(flatten)]
        sec: Section,
        /// Strongly controlling subgroup; H is then constructed.
        #[arg(long, conflicts_with = "complement")]
        control: Option<String>,
        /// An explicit complement H.
        #[arg(long)]
        complement: Option<String>,
    },
    /// Irr_A(N) → Irr(C_N(A)) with traces.
    Isaacs {
        #[command(flatten)]
        src: Source,
        /// Only this character of N.
        #[arg(long)]
        chi: Option<String>,
    },
    /// The correspondence over χ and χ* in N⋊A and N_G(A).
    Above {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        chi: Option<String>,
        /// Act by the subgroup generated by the k-th power of a generator of A.
        #[arg(long)]
        a_power: Option<i64>,
    },
    /// Run the whole verification corpus.
    Verify {
        #[arg(long)]
        threads: Option<usize>,
        /// Only the items of one criterion.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Table { .. } => "table",
            Command::Form { .. } => "form",
            Command::Good { .. } => "good",
            Command::Ramified { .. } => "ramified",
            Command::Five { .. } => "five",
            Command::Isaacs { .. } => "isaacs",
            Command::Above { .. } => "above",
            Command::Verify { .. } => "verify",
        }
    }
}

fn run(cli: &Cli) -> fgct::Result<Outcome> {
    let v = cli.verbose;
    match &cli.command {
        Command::Table { src } => commands::table(&src.ambient(None)?),
        Command::Form { src, sec } => commands::form(&src.ambient(None)?, &sec.l, &sec.phi, v),
        Command::Good { src, sec } => commands::good(&src.ambient(None)?, &sec.l, &sec.phi, v),
        Command::Ramified { src } => commands::ramified(&src.ambient(None)?),
        Command::Five { src, k, sec, control, complement } => {
            let args = FiveArgs {
                k,
                l: &sec.l,
                phi: &sec.phi,
                control: control.as_deref(),
                complement: complement.as_deref(),
            };
            commands::five(&src.ambient(None)?, &args, v)
        }
        Command::Isaacs { src, chi } => commands::isaacs(&src.ambient(None)?, chi.as_deref(), v),
        Command::Above { src, chi, a_power } => commands::above(&src.ambient(*a_power)?, chi.as_deref(), v),
        Command::Verify { threads, criterion } => commands::verify(*threads, *criterion),
    }
}

fn class_name(c: ErrorClass) -> &'static str {
    match c {
        ErrorClass::Usage => "usage",
        ErrorClass::Hypothesis => "hypothesis",
        ErrorClass::Internal => "internal",
    }
}

fn emit(report: &Value, compact: bool) {
    let text = if compact { serde_json::to_string(report) } else { serde_json::to_string_pretty(report) };
    println!("{}", text.expect("serializable"));
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(cap) = cli.order_cap {
        set_order_cap(cap);
    }
    if cli.format == Format::Tsv && !matches!(cli.command, Command::Table { .. }) {
        eprintln!("error: --format tsv is only available for `table`");
        return ExitCode::from(1);
    }

    let t0 = Instant::now();
    let outcome = run(&cli);
    let elapsed = t0.elapsed().as_millis();
    let mut report = json!({
        "schema": SCHEMA,
        "tool": {"name": "fgct", "version": env!("CARGO_PKG_VERSION")},
        "command": {"name": cli.command.name(), "argv": &argv[1..]},
    });
    match outcome {
        Ok(out) => {
            let ok = out.checks.iter().all(|(_, b)| *b);
            if cli.format == Format::Tsv {
                print!("{}", out.tsv.unwrap_or_default());
            } else {
                let checks: serde_json::Map<String, Value> =
                    out.checks.iter().map(|(k, b)| (k.clone(), json!(b))).collect();
                report["result"] = out.result;
                report["verification"] = Value::Object(checks);
                report["ok"] = json!(ok);
                report["timing_ms"] = json!({"total": elapsed, "detail": out.timing});
                emit(&report, cli.compact);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                let failed: Vec<&str> = out.checks.iter().filter(|(_, b)| !b).map(|(k, _)| k.as_str()).collect();
                eprintln!("error: verification failed: {}", failed.join(", "));
                ExitCode::from(3)
            }
        }
        Err(e) => {
            let class = e.class();
            eprintln!("error ({}): {e}", class_name(class));
            if class == ErrorClass::Usage {
                return ExitCode::from(1);
            }
            report["error"] = json!({"class": class_name(class), "message": e.to_string()});
            report["ok"] = json!(false);
            report["timing_ms"] = json!({"total": elapsed, "detail": null});
            emit(&report, cli.compact);
            ExitCode::from(if class == ErrorClass::Hypothesis { 2 } else { 3 })
        }
    }
}
