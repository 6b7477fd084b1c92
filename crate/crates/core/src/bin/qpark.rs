//! Command-line front end: per-object statistics, family polynomials by
//! any of the four computation routes, the verification suites, and bulk
//! tables.
//!
//! Exit codes are stable for scripting: 0 success, 1 verification failure
//! or cross-check mismatch, 2 usage or parse errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qpark::closedforms;
use qpark::parkfun::{ParkingFunction, ShuffleSpec, is_shuffle};
use qpark::qalg::QPoly;
use qpark::routes::{Route, parkq_by_route};
use qpark::verify::{Report, Suite, run_suite};

#[derive(Parser)]
#[command(name = "qpark", version, about = "Exact statistics and generating polynomials for two-car-size parking functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the statistics of one parking function given as "u1,..,un;v1,..,vn".
    Stats {
        /// The two-line array, offsets then labels.
        pf: String,
        /// Composition to test the diagonal word against, e.g. "2,6".
        #[arg(long)]
        mu: Option<String>,
    },
    /// Compute a family polynomial in q^(coarea+dinv) form.
    Poly {
        /// Number of small cars.
        #[arg(long)]
        a: usize,
        /// Number of big cars.
        #[arg(long)]
        b: usize,
        /// Small cars on the main diagonal (omit to sum over all).
        #[arg(long)]
        r: Option<usize>,
        /// Big cars on the main diagonal (omit to sum over all).
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Enumerate)]
        method: Method,
        /// Compute by every applicable method and fail on any mismatch.
        #[arg(long)]
        check_all: bool,
        /// Worker threads for enumeration (default: machine parallelism).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run one verification suite up to a size bound.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Emit a table of closed-form polynomials for all a, b up to a bound.
    Table {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Enumerate,
    Formula,
    Recursion,
    QtBridge,
}

impl Method {
    fn route(self) -> Route {
        match self {
            Method::Enumerate => Route::Enumerate,
            Method::Formula => Route::Formula,
            Method::Recursion => Route::Recursion,
            Method::QtBridge => Route::QtBridge,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Qara,
    Isthm,
    Wolf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Stats { pf, mu } => cmd_stats(&pf, mu.as_deref()),
        Command::Poly { a, b, r, s, method, check_all, threads } => {
            with_threads(threads, || cmd_poly(a, b, r, s, method, check_all))
        }
        Command::Verify { suite, max_n, threads } => {
            with_threads(threads, || cmd_verify(&suite, max_n))
        }
        Command::Table { target, max_n, format } => cmd_table(target, max_n, format),
    }
}

/// Runs `f` inside a rayon pool of the requested size. Results do not
/// depend on the thread count: every reduction is over exact polynomials.
fn with_threads(threads: Option<usize>, f: impl FnOnce() -> ExitCode + Send) -> ExitCode {
    match threads {
        None => f(),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build();
            match pool {
                Ok(pool) => pool.install(f),
                Err(e) => usage_error(&format!("cannot build thread pool: {e}")),
            }
        }
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn cmd_stats(pf_text: &str, mu: Option<&str>) -> ExitCode {
    let pf = match ParkingFunction::parse(pf_text) {
        Ok(pf) => pf,
        Err(e) => return usage_error(&e.to_string()),
    };
    let dinv = pf.dinv();
    println!("n: {}", pf.len());
    println!("area: {}", pf.area());
    println!("coarea: {}", pf.coarea());
    println!("dinv: {} (primary {}, secondary {})", dinv.total(), dinv.primary, dinv.secondary);
    let word = pf.diagonal_word();
    let rendered: Vec<String> = word.iter().map(|x| x.to_string()).collect();
    println!("diagonal word: {}", rendered.join(" "));
    if let Some(mu_text) = mu {
        let spec = match ShuffleSpec::parse(mu_text) {
            Ok(spec) => spec,
            Err(e) => return usage_error(&e.to_string()),
        };
        match is_shuffle(&word, &spec) {
            Ok(verdict) => {
                println!("shuffle {}: {}", spec, if verdict { "yes" } else { "no" })
            }
            Err(e) => return usage_error(&e.to_string()),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_poly(
    a: usize,
    b: usize,
    r: Option<usize>,
    s: Option<usize>,
    method: Method,
    check_all: bool,
) -> ExitCode {
    if !check_all {
        return match parkq_by_route(a, b, r, s, method.route()) {
            Ok(poly) => {
                println!("{}", poly.to_json());
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&e.to_string()),
        };
    }
    let mut results: Vec<(&'static str, QPoly)> = Vec::new();
    for route in Route::ALL.into_iter().filter(|route| route.supports(r, s)) {
        match parkq_by_route(a, b, r, s, route) {
            Ok(poly) => results.push((route.name(), poly)),
            Err(e) => return usage_error(&e.to_string()),
        }
    }
    let all_equal = results.windows(2).all(|w| w[0].1 == w[1].1);
    if all_equal {
        println!("{}", results[0].1.to_json());
        ExitCode::SUCCESS
    } else {
        let detail: serde_json::Map<String, serde_json::Value> = results
            .iter()
            .map(|(name, poly)| (name.to_string(), poly.to_json()))
            .collect();
        println!(
            "{}",
            json!({
                "error": "method mismatch",
                "a": a, "b": b, "r": r, "s": s,
                "methods": detail,
            })
        );
        ExitCode::from(1)
    }
}

fn cmd_verify(suite_name: &str, max_n: usize) -> ExitCode {
    let suite: Suite = match suite_name.parse() {
        Ok(suite) => suite,
        Err(e) => return usage_error(&e),
    };
    let report: Report = run_suite(suite, max_n);
    match &report.failure {
        None => {
            println!("suite {}: {} checks passed (max-n {})", suite, report.checks, max_n);
            ExitCode::SUCCESS
        }
        Some(failure) => {
            println!("{}", failure.to_json());
            ExitCode::from(1)
        }
    }
}

struct TableRow {
    a: usize,
    b: usize,
    r: Option<usize>,
    s: Option<usize>,
    poly: QPoly,
}

fn table_rows(target: Target, max_n: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    let mut push = |a, b, r, s, poly| rows.push(TableRow { a, b, r, s, poly });
    // Bounded by a <= max_n and b <= max_n, ordered by (a+b, a, r, s).
    for n in 0..=2 * max_n {
        for a in n.saturating_sub(max_n)..=n.min(max_n) {
            let b = n - a;
            match target {
                Target::Wolf => {
                    push(a, b, None, None, closedforms::parkq_all(a, b).expect("in range"));
                }
                Target::Isthm => {
                    for s in 0..=b {
                        push(a, b, None, Some(s), closedforms::parkq_s(a, b, s).expect("in range"));
                    }
                }
                Target::Qara => {
                    for r in 0..=a {
                        for s in 0..=b {
                            push(
                                a,
                                b,
                                Some(r),
                                Some(s),
                                closedforms::parkq_rs(a, b, r, s).expect("in range"),
                            );
                        }
                    }
                }
            }
        }
    }
    rows
}

fn cmd_table(target: Target, max_n: usize, format: Format) -> ExitCode {
    let rows = table_rows(target, max_n);
    match format {
        Format::Csv => {
            let header = match target {
                Target::Qara => "a,b,r,s,coeffs",
                Target::Isthm => "a,b,s,coeffs",
                Target::Wolf => "a,b,coeffs",
            };
            println!("{header}");
            for row in rows {
                let coeffs: Vec<String> =
                    row.poly.coeffs().iter().map(|c| c.to_string()).collect();
                let mut fields = vec![row.a.to_string(), row.b.to_string()];
                if let Some(r) = row.r {
                    fields.push(r.to_string());
                }
                if let Some(s) = row.s {
                    fields.push(s.to_string());
                }
                fields.push(coeffs.join(" "));
                println!("{}", fields.join(","));
            }
        }
        Format::Json => {
            for row in rows {
                let mut value = json!({"a": row.a, "b": row.b, "poly": row.poly.to_json()});
                if let Some(r) = row.r {
                    value["r"] = json!(r);
                }
                if let Some(s) = row.s {
                    value["s"] = json!(s);
                }
                println!("{value}");
            }
        }
    }
    ExitCode::SUCCESS
}
