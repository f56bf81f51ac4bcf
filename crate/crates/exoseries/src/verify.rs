//! Grid sweeps, three-way comparisons, and report emission.
//!
//! [`verify_identity`] evaluates every grid point along the three routes
//! (truncated series, adaptive quadrature, closed form), records the maximum
//! pairwise deviation, and produces a deterministic [`VerificationReport`].
//! For flagged identities both the printed and the corrected closed form are
//! evaluated; the printed form is rejected only when it deviates from BOTH
//! numeric oracles by more than 1000× the tolerance somewhere on the grid
//! while the corrected form passes everywhere.
//!
//! Reports serialize to JSON, CSV and a human-oriented text format. JSON and
//! CSV layouts are stable; the text format is not. Point evaluations run in
//! parallel; assembly is an order-preserving reduction, so parallel and
//! sequential sweeps produce identical reports.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, CatalogError, Grid, GridPoint, IdentitySpec, Params, Status};
use crate::series::EvalResult;

/// Outcome of one identity sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    PrintedFormRejected,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::PrintedFormRejected => "printed_form_rejected",
        };
        write!(f, "{s}")
    }
}

/// One grid point of a report. `closed` carries the printed form for flagged
/// identities (with the corrected value in `closed_corrected`); otherwise it
/// carries the verified form and `closed_corrected` holds any alternate form
/// stored for the identity. Skipped and failed points serialize null values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    pub x: f64,
    pub y: f64,
    pub params: Params,
    pub series: Option<f64>,
    pub quadrature: Option<f64>,
    pub closed: Option<f64>,
    pub closed_corrected: Option<f64>,
    pub max_dev: Option<f64>,
    pub skipped: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub verdict: Verdict,
    pub tolerance: f64,
    pub points: Vec<PointRecord>,
    #[serde(skip)]
    pub wall_time: Duration,
    #[serde(skip)]
    pub errors: Vec<String>,
}

impl VerificationReport {
    pub fn evaluated(&self) -> usize {
        self.points.iter().filter(|p| !p.skipped).count()
    }

    pub fn skipped(&self) -> usize {
        self.points.iter().filter(|p| p.skipped).count()
    }

    pub fn max_deviation(&self) -> f64 {
        self.points
            .iter()
            .filter_map(|p| p.max_dev)
            .fold(0.0, f64::max)
    }
}

/// All three routes evaluated at one point.
#[derive(Clone, Copy, Debug)]
pub struct PointEval {
    pub series: EvalResult,
    pub quadrature: EvalResult,
    pub closed: EvalResult,
    pub printed: Option<EvalResult>,
    pub alternate: Option<EvalResult>,
}

impl PointEval {
    /// Maximum pairwise deviation among series, quadrature and the verified
    /// closed form.
    pub fn max_dev(&self) -> f64 {
        let s = self.series.value;
        let q = self.quadrature.value;
        let c = self.closed.value;
        (s - q).abs().max((s - c).abs()).max((q - c).abs())
    }
}

/// Evaluate one point along every route. The series and quadrature routes
/// run at a tolerance two orders tighter than the comparison tolerance.
pub fn evaluate_point(
    spec: &IdentitySpec,
    x: f64,
    y: f64,
    params: &Params,
    tol: f64,
) -> Result<PointEval, CatalogError> {
    let inner = (tol / 100.0).clamp(1e-13, 1e-9);
    let series = spec.lhs_series(x, y, params, inner)?;
    let quadrature = spec.quadrature(x, y, params, inner)?;
    let closed = spec.closed_form(x, y, params)?;
    let printed = spec.printed_form(x, y, params).transpose()?;
    let alternate = spec.alternate_form(x, y, params).transpose()?;
    Ok(PointEval {
        series,
        quadrature,
        closed,
        printed,
        alternate,
    })
}

/// Sweep an identity over a grid. Out-of-validity points are recorded as
/// skipped; evaluation errors are collected (and fail the verdict) without
/// aborting the sweep.
pub fn verify_identity(spec: &IdentitySpec, grid: &Grid, tol: f64) -> VerificationReport {
    run_sweep(spec, grid, tol, true)
}

/// Sequential variant of [`verify_identity`]; used to pin down parallelism
/// invariance.
pub fn verify_identity_sequential(
    spec: &IdentitySpec,
    grid: &Grid,
    tol: f64,
) -> VerificationReport {
    run_sweep(spec, grid, tol, false)
}

struct PointOutcome {
    record: PointRecord,
    error: Option<String>,
    printed_dev_vs_both: Option<f64>,
}

fn eval_grid_point(
    spec: &IdentitySpec,
    pt: &GridPoint,
    tol: f64,
) -> PointOutcome {
    let flagged = spec.status != Status::Verified && spec.has_printed_variant();
    if !spec.is_valid(pt.x, pt.y, &pt.params) {
        return PointOutcome {
            record: PointRecord {
                x: pt.x,
                y: pt.y,
                params: pt.params,
                series: None,
                quadrature: None,
                closed: None,
                closed_corrected: None,
                max_dev: None,
                skipped: true,
            },
            error: None,
            printed_dev_vs_both: None,
        };
    }
    match evaluate_point(spec, pt.x, pt.y, &pt.params, tol) {
        Ok(ev) => {
            let max_dev = ev.max_dev();
            // printed-form deviation against BOTH oracles: the smaller of
            // the two distances must still be large for a rejection
            let printed_dev = ev.printed.map(|p| {
                (p.value - ev.series.value)
                    .abs()
                    .min((p.value - ev.quadrature.value).abs())
            });
            let (closed_col, corrected_col) = if flagged {
                (ev.printed.map(|p| p.value), Some(ev.closed.value))
            } else {
                (Some(ev.closed.value), ev.alternate.map(|a| a.value))
            };
            PointOutcome {
                record: PointRecord {
                    x: pt.x,
                    y: pt.y,
                    params: pt.params,
                    series: Some(ev.series.value),
                    quadrature: Some(ev.quadrature.value),
                    closed: closed_col,
                    closed_corrected: corrected_col,
                    max_dev: Some(max_dev),
                    skipped: false,
                },
                error: None,
                printed_dev_vs_both: printed_dev,
            }
        }
        Err(e) => PointOutcome {
            record: PointRecord {
                x: pt.x,
                y: pt.y,
                params: pt.params,
                series: None,
                quadrature: None,
                closed: None,
                closed_corrected: None,
                max_dev: None,
                skipped: true,
            },
            error: Some(format!(
                "{} at (x={}, y={}, {}): {e}",
                spec.id, pt.x, pt.y, pt.params
            )),
            printed_dev_vs_both: None,
        },
    }
}

fn run_sweep(spec: &IdentitySpec, grid: &Grid, tol: f64, parallel: bool) -> VerificationReport {
    let start = Instant::now();
    let outcomes: Vec<PointOutcome> = if parallel {
        grid.points
            .par_iter()
            .map(|pt| eval_grid_point(spec, pt, tol))
            .collect()
    } else {
        grid.points
            .iter()
            .map(|pt| eval_grid_point(spec, pt, tol))
            .collect()
    };

    let mut points = Vec::with_capacity(outcomes.len());
    let mut errors = Vec::new();
    let mut corrected_pass = true;
    let mut printed_rejected_somewhere = false;
    for o in outcomes {
        if let Some(e) = o.error {
            errors.push(e);
        }
        if let Some(dev) = o.record.max_dev {
            if dev > tol {
                corrected_pass = false;
            }
        }
        if let Some(pd) = o.printed_dev_vs_both {
            if pd > 1e3 * tol {
                printed_rejected_somewhere = true;
            }
        }
        points.push(o.record);
    }

    let flagged = spec.status != Status::Verified && spec.has_printed_variant();
    let verdict = if !errors.is_empty() || !corrected_pass {
        Verdict::Fail
    } else if flagged && printed_rejected_somewhere {
        Verdict::PrintedFormRejected
    } else {
        Verdict::Pass
    };

    VerificationReport {
        identity: spec.id.to_string(),
        verdict,
        tolerance: tol,
        points,
        wall_time: start.elapsed(),
        errors,
    }
}

/// Run every catalogued identity on its standard grid, ordered by id.
pub fn verify_all(tol: f64) -> Vec<VerificationReport> {
    let mut specs: Vec<&IdentitySpec> = catalog::catalog().iter().collect();
    specs.sort_by_key(|s| s.id);
    specs
        .iter()
        .map(|s| verify_identity(s, &s.standard_grid(), tol))
        .collect()
}

/// Output encodings for reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

/// Serialize one report.
pub fn emit(report: &VerificationReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut v = serde_json::to_vec_pretty(report).expect("report serializes");
            v.push(b'\n');
            v
        }
        ReportFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            csv_rows(report, &mut out);
            out.into_bytes()
        }
        ReportFormat::Text => text_lines(std::slice::from_ref(report)).into_bytes(),
    }
}

/// Serialize a batch of reports (JSON array / one CSV table / text lines).
pub fn emit_all(reports: &[VerificationReport], format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut v = serde_json::to_vec_pretty(reports).expect("reports serialize");
            v.push(b'\n');
            v
        }
        ReportFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            for r in reports {
                csv_rows(r, &mut out);
            }
            out.into_bytes()
        }
        ReportFormat::Text => text_lines(reports).into_bytes(),
    }
}

const CSV_HEADER: &str =
    "identity,verdict,tolerance,x,y,params,series,quadrature,closed,closed_corrected,max_dev,skipped\n";

fn csv_cell(v: Option<f64>) -> String {
    v.map(|v| format!("{v}")).unwrap_or_default()
}

fn csv_rows(report: &VerificationReport, out: &mut String) {
    for p in &report.points {
        let params = if p.params.is_empty() {
            String::new()
        } else {
            p.params.to_string()
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            report.identity,
            report.verdict,
            report.tolerance,
            p.x,
            p.y,
            params,
            csv_cell(p.series),
            csv_cell(p.quadrature),
            csv_cell(p.closed),
            csv_cell(p.closed_corrected),
            csv_cell(p.max_dev),
            p.skipped,
        ));
    }
}

fn text_lines(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let max_dev = r.max_deviation();
        match r.verdict {
            Verdict::PrintedFormRejected => {
                out.push_str(&format!(
                    "{}: printed form rejected ({} evaluated, {} skipped, corrected max dev {:.2e}, tol {:.0e})\n",
                    r.identity,
                    r.evaluated(),
                    r.skipped(),
                    max_dev,
                    r.tolerance,
                ));
            }
            v => {
                out.push_str(&format!(
                    "{}: {} ({} evaluated, {} skipped, max dev {:.2e}, tol {:.0e})\n",
                    r.identity,
                    v,
                    r.evaluated(),
                    r.skipped(),
                    max_dev,
                    r.tolerance,
                ));
            }
        }
    }
    out
}
