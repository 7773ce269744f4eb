use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use schubert_fk::fk::{json_int, QuantumOracle, SchubertVector};
use schubert_fk::forest::{
    enumerate_forests, hook_expansion, hook_plus_box_ledger, rectangle_expansion, two_by_two_expansion, Rectangle,
};
use schubert_fk::poly::{cohomology_product, expand_in_e_basis, monomial_text, schubert_poly};
use schubert_fk::verify::{run_suite, SUITES};
use schubert_fk::{Diagram, FKElement, HookShape, Permutation};

const THREADS_VAR: &str = "SCHUBERT_FK_THREADS";

#[derive(Parser)]
#[command(name = "schubert-fk", version, about = "Schubert calculus through Dunkl elements of the Fomin-Kirillov algebra")]
struct Cli {
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Schubert polynomial of a permutation.
    Schubert {
        #[arg(long)]
        perm: Permutation,
    },
    /// Structure constants of sigma_u sigma_v in H*(Fl_n).
    Lr(Pair),
    /// Three-point Gromov-Witten invariants: sigma_u * sigma_v in QH*(Fl_n).
    Gw(Pair),
    /// Hook Schur polynomial in theta_1..theta_k as forest labelings.
    HookExpand {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        ambient: Ambient,
    },
    /// Full-width (--r rows) or full-height (--t columns) rectangle.
    RectExpand {
        #[arg(long, conflicts_with = "t", required_unless_present = "t")]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        ambient: Ambient,
    },
    /// The 2x2 Schur polynomial in theta_1..theta_k.
    Twobytwo {
        #[command(flatten)]
        ambient: Ambient,
    },
    /// Net coefficients of the hook-plus-box shape (b,2,1^(a-1)) per class.
    Ledger {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[command(flatten)]
        ambient: Ambient,
    },
    /// Forests with a given number of boxes in the k x (n-k) rectangle.
    Forests {
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        ambient: Ambient,
    },
    /// Coefficients of a Schubert polynomial in the products e_(i_1)(x_1) ... e_(i_(n-1))(x_1..x_(n-1)).
    Ebasis {
        #[arg(long)]
        perm: Permutation,
        #[arg(long)]
        n: usize,
    },
    /// Run theorem checks and stream one JSON report per line.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    u: Permutation,
    #[arg(long)]
    v: Permutation,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct Ambient {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

enum Failure {
    Usage(String),
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn format_of(requested: Option<Format>, allowed: &[Format]) -> Result<Format, Failure> {
    match requested {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(Failure::Usage(format!(
            "format {} is not available here",
            f.to_possible_value().expect("named").get_name()
        ))),
    }
}

fn in_sn(w: &Permutation, n: usize) -> Result<Permutation, Failure> {
    if !w.lies_in(n) {
        return Err(Failure::Usage(format!("{w} is not in S_{n}")));
    }
    Ok(w.embed(n.max(w.n())).restrict(n))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn element_output(el: &FKElement, format: Option<Format>) -> Outcome {
    Ok(match format_of(format, &[Format::Json, Format::Text])? {
        Format::Json => pretty(&el.to_json()),
        _ => format!("{el}\n"),
    })
}

fn schubert(perm: &Permutation, format: Option<Format>) -> Outcome {
    let f = schubert_poly(perm);
    Ok(match format_of(format, &[Format::Text, Format::Json])? {
        Format::Json => {
            let terms: Vec<Value> = f
                .terms()
                .rev()
                .map(|(e, c)| json!({"monomial": monomial_text(e, "x"), "coeff": json_int(c)}))
                .collect();
            pretty(&json!({"perm": perm.to_string(), "terms": terms}))
        }
        _ => format!("{f}\n"),
    })
}

fn lr(pair: &Pair, format: Option<Format>) -> Outcome {
    let (u, v) = (in_sn(&pair.u, pair.n)?, in_sn(&pair.v, pair.n)?);
    let out = cohomology_product(&u, &v, pair.n);
    Ok(match format_of(format, &[Format::Json, Format::Text])? {
        Format::Json => {
            let map: Map<String, Value> = out.iter().map(|(w, c)| (w.to_string(), json_int(c))).collect();
            pretty(&Value::Object(map))
        }
        _ => out.iter().map(|(w, c)| format!("{w}\t{c}\n")).collect(),
    })
}

fn gw(pair: &Pair, format: Option<Format>) -> Outcome {
    let (u, v) = (in_sn(&pair.u, pair.n)?, in_sn(&pair.v, pair.n)?);
    let out: SchubertVector = QuantumOracle::new(pair.n, true).operator(&u)?.apply(&SchubertVector::basis(&v));
    Ok(match format_of(format, &[Format::Json, Format::Text])? {
        Format::Json => pretty(&out.to_json()),
        _ => format!("{out}\n"),
    })
}

fn ledger(a: usize, b: usize, ambient: &Ambient, format: Option<Format>) -> Outcome {
    let ledger = hook_plus_box_ledger(a, b, ambient.k, ambient.n)?;
    Ok(match format_of(format, &[Format::Tsv, Format::Json])? {
        Format::Json => {
            let entries: Vec<Value> = ledger
                .entries
                .iter()
                .map(|e| json!({"word": e.word.to_string(), "net": e.net, "forest": e.is_forest_class}))
                .collect();
            pretty(&json!({
                "shape": ledger.shape.to_string(),
                "forest_classes_nonnegative": ledger.forest_classes_nonnegative(),
                "entries": entries,
            }))
        }
        _ => ledger.to_tsv(),
    })
}

fn forests(size: usize, ambient: &Ambient, format: Option<Format>) -> Outcome {
    if ambient.k == 0 || ambient.k >= ambient.n {
        return Err(Failure::Usage(format!("need 0 < k < n, got k={} n={}", ambient.k, ambient.n)));
    }
    Diagram::empty(ambient.k, ambient.n)?;
    let all = enumerate_forests(ambient.k, ambient.n - ambient.k, size);
    Ok(match format_of(format, &[Format::Text, Format::Json])? {
        Format::Json => pretty(&Value::Array(all.iter().map(|d| Value::String(d.to_string())).collect())),
        _ => all.iter().map(|d| format!("{d}\n")).collect(),
    })
}

fn ebasis(perm: &Permutation, n: usize, format: Option<Format>) -> Outcome {
    let w = in_sn(perm, n)?;
    let alpha = expand_in_e_basis(&schubert_poly(&w), n)?;
    Ok(match format_of(format, &[Format::Json, Format::Text])? {
        Format::Json => {
            let map: Map<String, Value> = alpha.iter().map(|(k, c)| (k.to_string(), json_int(c))).collect();
            pretty(&Value::Object(map))
        }
        _ => alpha.iter().map(|(k, c)| format!("{k}\t{c}\n")).collect(),
    })
}

fn verify(suite: &str, max_n: usize, format: Option<Format>) -> Outcome {
    format_of(format, &[Format::Json])?;
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(Failure::Usage(format!("unknown suite {suite:?}; expected all or one of {}", SUITES.join(", "))));
    }
    let stdout = std::io::stdout();
    let passed = run_suite(suite, max_n, &mut |r| {
        let mut lock = stdout.lock();
        let _ = writeln!(lock, "{}", r.to_json_line());
        let _ = lock.flush();
    })?;
    if passed {
        Ok(String::new())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Schubert { perm } => schubert(perm, format),
        Command::Lr(pair) => lr(pair, format),
        Command::Gw(pair) => gw(pair, format),
        Command::HookExpand { s, t, ambient } => {
            element_output(&hook_expansion(HookShape::new(*s, *t)?, ambient.k, ambient.n)?, format)
        }
        Command::RectExpand { r, t, ambient } => {
            let rect = match (r, t) {
                (Some(r), None) => Rectangle::Rows(*r),
                (None, Some(t)) => Rectangle::Columns(*t),
                _ => return Err(Failure::Usage("give exactly one of --r and --t".into())),
            };
            element_output(&rectangle_expansion(rect, ambient.k, ambient.n)?, format)
        }
        Command::Twobytwo { ambient } => element_output(&two_by_two_expansion(ambient.k, ambient.n)?, format),
        Command::Ledger { a, b, ambient } => ledger(*a, *b, ambient, format),
        Command::Forests { size, ambient } => forests(*size, ambient, format),
        Command::Ebasis { perm, n } => ebasis(perm, *n, format),
        Command::Verify { suite, max_n } => verify(suite, *max_n, format),
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Usage(format!("{THREADS_VAR} must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check) => ExitCode::from(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn formats() {
        assert!(format_of(None, &[Format::Tsv, Format::Json]).is_ok_and(|f| f == Format::Tsv));
        assert!(format_of(Some(Format::Text), &[Format::Json]).is_err());
    }
}
