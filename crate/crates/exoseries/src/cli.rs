//! Command-line surface: `eval` (three-way evaluation at a point), `verify`
//! (grid sweeps with JSON/CSV/text reports), and `numbers` (exact tables of
//! the special-number families).
//!
//! Exit codes: 0 on success (including verify runs whose only non-pass
//! verdicts are printed-form rejections), 1 when a verification sweep fails,
//! 2 on usage or domain errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{self, Params};
use crate::exact::{self, Rational};
use crate::poly;
use crate::verify::{self, ReportFormat, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "exoseries",
    about = "Evaluate and verify series of exponential Taylor remainders",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one identity at a point along all routes.
    Eval {
        /// Identity id (see `verify --all` output for the list)
        #[arg(long)]
        identity: String,
        /// x coordinate (ignored by identities that pin x)
        #[arg(long)]
        x: Option<f64>,
        /// y coordinate (ignored by identities that pin y)
        #[arg(long)]
        y: Option<f64>,
        /// Identity parameter, e.g. p=3, k=2 or lambda=0.5
        #[arg(long = "param")]
        param: Option<String>,
        /// Comparison tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Sweep identities over verification grids and emit a report.
    Verify {
        /// Verify a single identity
        #[arg(long, conflicts_with = "all")]
        identity: Option<String>,
        /// Verify every catalogued identity
        #[arg(long)]
        all: bool,
        /// Grid override, e.g. "x=-2,0,0.5,2;y=-1:1:0.5"
        #[arg(long)]
        grid: Option<String>,
        /// Output format
        #[arg(long, value_enum, default_value_t = CliFormat::Text)]
        format: CliFormat,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comparison tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Print a table of an exact number family for n = 0..=N.
    Numbers {
        /// Family name
        #[arg(value_enum)]
        family: NumberFamily,
        /// Largest index (inclusive)
        #[arg(long)]
        n: u32,
        /// Second Stirling index (stirling2 only)
        #[arg(long)]
        k: Option<u32>,
        /// Print exact fractions instead of floating values
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliFormat {
    Json,
    Csv,
    Text,
}

impl From<CliFormat> for ReportFormat {
    fn from(f: CliFormat) -> Self {
        match f {
            CliFormat::Json => ReportFormat::Json,
            CliFormat::Csv => ReportFormat::Csv,
            CliFormat::Text => ReportFormat::Text,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NumberFamily {
    Bernoulli,
    Stirling2,
    Harmonic,
    Derangement,
    Catalan,
    Bell,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version, 2 for usage errors
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Eval {
            identity,
            x,
            y,
            param,
            tol,
        } => cmd_eval(&identity, x, y, param.as_deref(), tol),
        Command::Verify {
            identity,
            all,
            grid,
            format,
            out,
            tol,
        } => cmd_verify(identity.as_deref(), all, grid.as_deref(), format, out, tol),
        Command::Numbers {
            family,
            n,
            k,
            exact,
        } => cmd_numbers(family, n, k, exact),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

/// Fixed 15-significant-digit rendering for floating output.
fn fmt15(v: f64) -> String {
    format!("{v:.14e}")
}

fn parse_param(s: &str) -> Result<Params, String> {
    let (key, value) = s
        .split_once('=')
        .ok_or_else(|| format!("malformed parameter `{s}`, expected name=value"))?;
    match key.trim() {
        "p" => value
            .trim()
            .parse::<u32>()
            .map(Params::with_p)
            .map_err(|e| format!("bad p value `{value}`: {e}")),
        "k" => value
            .trim()
            .parse::<u32>()
            .map(Params::with_k)
            .map_err(|e| format!("bad k value `{value}`: {e}")),
        "lambda" => value
            .trim()
            .parse::<f64>()
            .map(Params::with_lambda)
            .map_err(|e| format!("bad lambda value `{value}`: {e}")),
        other => Err(format!("unknown parameter `{other}`, expected p, k or lambda")),
    }
}

fn cmd_eval(id: &str, x: Option<f64>, y: Option<f64>, param: Option<&str>, tol: f64) -> i32 {
    // unknown ids are rejected before any computation
    let Some(spec) = catalog::find(id) else {
        return usage_error(&format!(
            "unknown identity `{id}`; known ids: {}",
            catalog::ids().join(", ")
        ));
    };
    if tol.is_nan() || tol <= 0.0 {
        return usage_error("tolerance must be positive");
    }
    let params = match param.map(parse_param).transpose() {
        Ok(p) => p.unwrap_or_default(),
        Err(e) => return usage_error(&e),
    };
    let x = match (spec.pinned_x, x) {
        (Some(v), _) => v,
        (None, Some(v)) => v,
        (None, None) => return usage_error(&format!("`{id}` needs --x")),
    };
    let y = match (spec.pinned_y, y) {
        (Some(v), _) => v,
        (None, Some(v)) => v,
        (None, None) => return usage_error(&format!("`{id}` needs --y")),
    };
    match verify::evaluate_point(spec, x, y, &params, tol) {
        Ok(ev) => {
            println!("identity:    {}", spec.id);
            println!("statement:   {}", spec.statement);
            if params.is_empty() {
                println!("point:       x = {x}, y = {y}");
            } else {
                println!("point:       x = {x}, y = {y}, {params}");
            }
            println!(
                "series       = {}  (+/- {:.2e}, {} terms)",
                fmt15(ev.series.value),
                ev.series.abs_error_bound,
                ev.series.terms_used
            );
            println!(
                "quadrature   = {}  (+/- {:.2e}, {} intervals)",
                fmt15(ev.quadrature.value),
                ev.quadrature.abs_error_bound,
                ev.quadrature.terms_used
            );
            println!(
                "closed form  = {}  (+/- {:.2e})",
                fmt15(ev.closed.value),
                ev.closed.abs_error_bound
            );
            if let Some(p) = ev.printed {
                println!(
                    "printed form = {}  (disputed published variant)",
                    fmt15(p.value)
                );
            }
            if let Some(a) = ev.alternate {
                println!("alternate    = {}", fmt15(a.value));
            }
            println!("max pairwise deviation = {:.2e}", ev.max_dev());
            EXIT_OK
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

type GridOverride = (Option<Vec<f64>>, Option<Vec<f64>>);

/// Parse a grid override such as "x=-2,0,0.5,2;y=-1:1:0.5". Axes accept a
/// comma list or an inclusive start:stop:step range.
fn parse_grid_spec(s: &str) -> Result<GridOverride, String> {
    let mut xs = None;
    let mut ys = None;
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (axis, vals) = part
            .split_once('=')
            .ok_or_else(|| format!("malformed grid axis `{part}`"))?;
        let values = parse_axis_values(vals)?;
        if values.is_empty() {
            return Err(format!("grid axis `{axis}` is empty"));
        }
        match axis.trim() {
            "x" => xs = Some(values),
            "y" => ys = Some(values),
            other => return Err(format!("unknown grid axis `{other}`")),
        }
    }
    if xs.is_none() && ys.is_none() {
        return Err("grid spec is empty".into());
    }
    Ok((xs, ys))
}

fn parse_axis_values(s: &str) -> Result<Vec<f64>, String> {
    let s = s.trim();
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range `{s}` must be start:stop:step"));
        }
        let start: f64 = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
        let stop: f64 = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
        let step: f64 = parts[2].trim().parse().map_err(|e| format!("{e}"))?;
        if step.is_nan() || step <= 0.0 {
            return Err("range step must be positive".into());
        }
        if stop < start {
            return Err("range stop must be >= start".into());
        }
        let count = ((stop - start) / step).round() as usize + 1;
        if count > 10_000 {
            return Err("range produces more than 10000 points".into());
        }
        let mut v = Vec::with_capacity(count);
        for i in 0..count {
            let t = start + step * i as f64;
            if t <= stop + 1e-12 * step {
                v.push(t);
            }
        }
        Ok(v)
    } else {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<f64>().map_err(|e| format!("bad number `{t}`: {e}")))
            .collect()
    }
}

fn cmd_verify(
    identity: Option<&str>,
    all: bool,
    grid: Option<&str>,
    format: CliFormat,
    out: Option<PathBuf>,
    tol: f64,
) -> i32 {
    if tol.is_nan() || tol <= 0.0 {
        return usage_error("tolerance must be positive");
    }
    let overrides = match grid.map(parse_grid_spec).transpose() {
        Ok(o) => o,
        Err(e) => return usage_error(&e),
    };
    let specs: Vec<&catalog::IdentitySpec> = if all {
        let mut v: Vec<_> = catalog::catalog().iter().collect();
        v.sort_by_key(|s| s.id);
        v
    } else if let Some(id) = identity {
        match catalog::find(id) {
            Some(s) => vec![s],
            None => {
                return usage_error(&format!(
                    "unknown identity `{id}`; known ids: {}",
                    catalog::ids().join(", ")
                ))
            }
        }
    } else {
        return usage_error("pass --identity ID or --all");
    };

    let reports: Vec<verify::VerificationReport> = specs
        .iter()
        .map(|spec| {
            let grid = match &overrides {
                Some((xs, ys)) => spec.grid_with(xs.as_deref(), ys.as_deref()),
                None => spec.standard_grid(),
            };
            verify::verify_identity(spec, &grid, tol)
        })
        .collect();

    let bytes = if reports.len() == 1 {
        verify::emit(&reports[0], format.into())
    } else {
        verify::emit_all(&reports, format.into())
    };

    if let Some(path) = out {
        if let Err(e) = fs::write(&path, &bytes) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    } else {
        let mut stdout = std::io::stdout().lock();
        if stdout.write_all(&bytes).is_err() {
            return EXIT_USAGE;
        }
    }

    let total_ms = reports
        .iter()
        .map(|r| r.wall_time.as_millis())
        .sum::<u128>();
    eprintln!("verified {} identit{} in {} ms", reports.len(),
        if reports.len() == 1 { "y" } else { "ies" }, total_ms);
    for r in &reports {
        for e in &r.errors {
            eprintln!("error: {e}");
        }
    }

    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_VERIFY_FAIL
    } else {
        EXIT_OK
    }
}

fn cmd_numbers(family: NumberFamily, n: u32, k: Option<u32>, exact_out: bool) -> i32 {
    if family != NumberFamily::Stirling2 && k.is_some() {
        return usage_error("--k applies only to stirling2");
    }
    let values: Vec<Rational> = match family {
        NumberFamily::Bernoulli => (0..=n).map(exact::bernoulli).collect(),
        NumberFamily::Stirling2 => {
            let Some(k) = k else {
                return usage_error("stirling2 needs --k");
            };
            (0..=n).map(|m| exact::stirling2(m, k)).collect()
        }
        NumberFamily::Harmonic => (0..=n).map(exact::harmonic).collect(),
        NumberFamily::Derangement => (0..=n).map(exact::derangement_number).collect(),
        NumberFamily::Catalan => (0..=n).map(exact::catalan).collect(),
        NumberFamily::Bell => (0..=n).map(poly::bell_number).collect(),
    };
    for v in values {
        if exact_out {
            println!("{v}");
        } else {
            println!("{}", fmt15(exact::to_f64(&v)));
        }
    }
    EXIT_OK
}
