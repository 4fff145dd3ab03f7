use std::path::PathBuf;

use kappa::algebra::{kappa_product, kappa_product_or_classical, kappa_sum};
use kappa::deformed::{differential_weight, from_kappa_number, kappa_exp, kappa_ln, to_kappa_number};
use kappa::harness::{
    convergence_on_ladder, error_report, series_error_curve, ConvergenceError, ConvergenceReport,
};
use kappa::ode::{
    logistic_closed_form, slope_field, solve, uniform_grid, DecayProblem, LogisticProblem, Method,
    Problem,
};
use kappa::series::{
    decay_series_solution, exp_kappa_taylor, ln_kappa_shifted_taylor, picard_iterate,
    sqrt_weight_series, PowerSeries,
};
use kappa::Kappa;
use serde::Serialize;

use crate::cli::{
    CompareArgs, EvalArgs, Format, Function, LogisticArgs, ProblemArgs, ProblemKind, SeriesArgs,
    SeriesTarget, SlopeFieldArgs, SolveArgs,
};
use crate::error::{CliError, Result};
use crate::format::{fmt17, to_json, Csv, Field};
use crate::output::{emit, output_dir, write_atomic};

fn kappa(v: f64) -> Result<Kappa> {
    Ok(Kappa::new(v)?)
}

fn parse_method(s: &str) -> Result<Method> {
    Ok(s.trim().parse::<Method>()?)
}

fn parse_list<T, F>(s: &str, what: &str, parse: F) -> Result<Vec<T>>
where
    F: Fn(&str) -> Result<T>,
{
    let items = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse)
        .collect::<Result<Vec<_>>>()?;
    if items.is_empty() {
        return Err(CliError::usage(format!("{what} must not be empty")));
    }
    Ok(items)
}

fn parse_f64(s: &str) -> Result<f64> {
    s.parse::<f64>().map_err(|_| CliError::usage(format!("not a number: {s:?}")))
}

/// Either problem, so commands can pick one at run time.
enum AnyProblem {
    Decay(DecayProblem),
    Logistic(LogisticProblem),
}

impl AnyProblem {
    fn from_args(a: &ProblemArgs) -> Result<Self> {
        let k = kappa(a.kappa)?;
        Ok(match a.problem {
            ProblemKind::Decay => {
                AnyProblem::Decay(DecayProblem::new(k, a.beta, a.f0.unwrap_or(1.0), a.x_max)?)
            }
            ProblemKind::Logistic => {
                AnyProblem::Logistic(LogisticProblem::new(k, a.f0.unwrap_or(0.5), a.x_max)?)
            }
        })
    }

    fn name(&self) -> &'static str {
        match self {
            AnyProblem::Decay(_) => "decay",
            AnyProblem::Logistic(_) => "logistic",
        }
    }
}

impl Problem for AnyProblem {
    fn rhs(&self, x: f64, f: f64) -> f64 {
        match self {
            AnyProblem::Decay(p) => p.rhs(x, f),
            AnyProblem::Logistic(p) => p.rhs(x, f),
        }
    }

    fn start(&self) -> (f64, f64) {
        match self {
            AnyProblem::Decay(p) => p.start(),
            AnyProblem::Logistic(p) => p.start(),
        }
    }

    fn end(&self) -> f64 {
        match self {
            AnyProblem::Decay(p) => p.end(),
            AnyProblem::Logistic(p) => p.end(),
        }
    }

    fn exact(&self, x: f64) -> f64 {
        match self {
            AnyProblem::Decay(p) => p.exact(x),
            AnyProblem::Logistic(p) => p.exact(x),
        }
    }
}

fn require(v: Option<f64>, flag: &str, function: Function) -> Result<f64> {
    v.ok_or_else(|| CliError::usage(format!("--fn {function:?} requires {flag}").to_lowercase()))
}

pub fn eval(a: &EvalArgs) -> Result<()> {
    let k = kappa(a.kappa)?;
    let x = require(a.x, "--x", a.function)?;
    let value = match a.function {
        Function::Exp => kappa_exp(k, x),
        Function::Ln => kappa_ln(k, x)?,
        Function::Weight => differential_weight(k, x),
        Function::Knum => to_kappa_number(k, x),
        Function::Dual => from_kappa_number(k, x),
        Function::Sum => kappa_sum(k, x, require(a.y, "--y", a.function)?),
        Function::Product => {
            let y = require(a.y, "--y", a.function)?;
            if a.classical_limit {
                kappa_product_or_classical(k, x, y)
            } else {
                kappa_product(k, x, y)?
            }
        }
    };
    emit(None, &format!("{}\n", fmt17(value)))
}

#[derive(Serialize)]
struct TraceRow<'a> {
    x: f64,
    f: f64,
    method: &'a str,
    kappa: f64,
    h: f64,
}

pub fn solve_cmd(a: &SolveArgs) -> Result<()> {
    let problem = AnyProblem::from_args(&a.problem)?;
    let method = parse_method(&a.method)?;
    let trace = solve(&problem, method, a.h)?;
    let kv = a.problem.kappa;
    let body = match a.output.format {
        Format::Csv => {
            let mut csv = Csv::new(&["x", "f", "method", "kappa", "h"]);
            for &(x, f) in &trace.samples {
                csv.row(&[
                    Field::Num(x),
                    Field::Num(f),
                    Field::Text(method.as_str()),
                    Field::Num(kv),
                    Field::Num(a.h),
                ]);
            }
            csv.finish()
        }
        Format::Json => {
            let rows: Vec<TraceRow<'_>> = trace
                .samples
                .iter()
                .map(|&(x, f)| TraceRow { x, f, method: method.as_str(), kappa: kv, h: a.h })
                .collect();
            to_json(&rows)?
        }
    };
    emit(a.output.out.as_deref(), &body)
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    variable: &'a str,
    kappa: f64,
    order: usize,
    coefficients: &'a [f64],
}

pub fn series(a: &SeriesArgs) -> Result<()> {
    let k = kappa(a.kappa)?;
    let s: PowerSeries = match a.target {
        SeriesTarget::Exp => exp_kappa_taylor(k, a.order)?,
        SeriesTarget::Ln1p => ln_kappa_shifted_taylor(k, a.order)?,
        SeriesTarget::Decay => decay_series_solution(k, a.order)?,
        SeriesTarget::Sqrt => sqrt_weight_series(k, a.order)?,
        SeriesTarget::Picard => picard_iterate(k, a.order)?.polynomial().clone(),
    };
    let body = to_json(&SeriesJson {
        variable: s.variable().as_str(),
        kappa: a.kappa,
        order: s.order(),
        coefficients: s.coefficients(),
    })?;
    emit(a.out.as_deref(), &body)
}

#[derive(Serialize)]
struct ReportSummary {
    method: String,
    h: f64,
    max_error: f64,
    rms_error: f64,
    file: String,
}

#[derive(Serialize)]
struct ConvergenceSummary {
    method: String,
    steps: Vec<f64>,
    max_errors: Vec<f64>,
    orders: Vec<f64>,
    floor_reached: bool,
}

impl ConvergenceSummary {
    fn new(r: ConvergenceReport, floor_reached: bool) -> Self {
        ConvergenceSummary {
            method: r.method.to_string(),
            steps: r.steps,
            max_errors: r.max_errors,
            orders: r.orders,
            floor_reached,
        }
    }
}

#[derive(Serialize)]
struct CompareSummary {
    problem: &'static str,
    kappa: f64,
    beta: f64,
    x_max: f64,
    reports: Vec<ReportSummary>,
    convergence: Vec<ConvergenceSummary>,
    series_error_file: Option<String>,
}

pub fn compare(a: &CompareArgs) -> Result<()> {
    let problem = AnyProblem::from_args(&a.problem)?;
    let mut methods = parse_list(&a.methods, "--methods", parse_method)?;
    methods.sort();
    methods.dedup();
    let ladder = parse_list(&a.h_ladder, "--h-ladder", parse_f64)?;
    let series_orders = a
        .series_orders
        .as_deref()
        .map(|s| {
            parse_list(s, "--series-orders", |t| {
                t.parse::<usize>().map_err(|_| CliError::usage(format!("not an order: {t:?}")))
            })
        })
        .transpose()?;

    let dir = output_dir(a.out_dir.as_deref());
    let mut written: Vec<PathBuf> = Vec::new();
    let mut reports = Vec::new();
    let mut convergence = Vec::new();

    for &method in &methods {
        for &h in &ladder {
            let r = error_report(&problem, method, h)?;
            let file = format!("errors_{method}_h{h}.csv");
            let mut csv = Csv::new(&["method", "h", "x", "abs_error"]);
            for &(x, e) in &r.points {
                csv.row(&[Field::Text(method.as_str()), Field::Num(h), Field::Num(x), Field::Num(e)]);
            }
            let path = dir.join(&file);
            write_atomic(&path, &csv.finish())?;
            written.push(path);
            reports.push(ReportSummary {
                method: method.to_string(),
                h,
                max_error: r.max_error,
                rms_error: r.rms_error,
                file,
            });
        }
        if ladder.len() >= 3 && method != Method::Analytic {
            match convergence_on_ladder(&problem, method, &ladder) {
                Ok(r) => convergence.push(ConvergenceSummary::new(r, false)),
                Err(ConvergenceError::Floor(partial)) => {
                    convergence.push(ConvergenceSummary::new(partial, true))
                }
                Err(e) => return Err(e.into()),
            }
        }
    }

    let series_error_file = match (&series_orders, &problem) {
        (Some(orders), AnyProblem::Decay(p)) => {
            let grid = uniform_grid(0.0, p.x_max, a.series_points.max(1));
            let curve = series_error_curve(p.kappa, orders, &grid)?;
            let mut csv = Csv::new(&["order", "x", "abs_error"]);
            for pt in &curve {
                csv.row(&[Field::Int(pt.order), Field::Num(pt.x), Field::Num(pt.abs_error)]);
            }
            let file = "series_error.csv".to_string();
            let path = dir.join(&file);
            write_atomic(&path, &csv.finish())?;
            written.push(path);
            Some(file)
        }
        (Some(_), AnyProblem::Logistic(_)) => {
            return Err(CliError::usage("--series-orders applies to the decay problem only"))
        }
        (None, _) => None,
    };

    let summary = CompareSummary {
        problem: problem.name(),
        kappa: a.problem.kappa,
        beta: a.problem.beta,
        x_max: a.problem.x_max,
        reports,
        convergence,
        series_error_file,
    };
    let path = dir.join("summary.json");
    write_atomic(&path, &to_json(&summary)?)?;
    written.push(path);

    let listing: String = written.iter().map(|p| format!("{}\n", p.display())).collect();
    emit(None, &listing)
}

#[derive(Serialize)]
struct SlopeRow {
    x: f64,
    f: f64,
    slope: f64,
}

pub fn slope_field_cmd(a: &SlopeFieldArgs) -> Result<()> {
    let p = DecayProblem::new(kappa(a.kappa)?, a.beta, 1.0, a.x_max)?;
    if a.nx == 0 || a.nf == 0 {
        return Err(CliError::usage("--nx and --nf must be at least 1"));
    }
    let xs = uniform_grid(0.0, a.x_max, a.nx);
    let fs = uniform_grid(a.f_min, a.f_max, a.nf);
    let nodes = slope_field(&p, &xs, &fs)?;
    let body = match a.output.format {
        Format::Csv => {
            let mut csv = Csv::new(&["x", "f", "slope"]);
            for n in &nodes {
                csv.row(&[Field::Num(n.x), Field::Num(n.f), Field::Num(n.slope)]);
            }
            csv.finish()
        }
        Format::Json => {
            let rows: Vec<SlopeRow> =
                nodes.iter().map(|n| SlopeRow { x: n.x, f: n.f, slope: n.slope }).collect();
            to_json(&rows)?
        }
    };
    emit(a.output.out.as_deref(), &body)
}

#[derive(Serialize)]
struct LogisticRow {
    x: f64,
    f_analytic: f64,
    f_method: f64,
    abs_error: f64,
}

pub fn logistic(a: &LogisticArgs) -> Result<()> {
    let lp = LogisticProblem::new(kappa(a.kappa)?, a.f0, a.x_max)?;
    let method = parse_method(&a.method)?;
    let trace = solve(&lp, method, a.h)?;
    let rows: Vec<LogisticRow> = trace
        .samples
        .iter()
        .map(|&(x, f)| {
            let exact = logistic_closed_form(&lp, x);
            LogisticRow { x, f_analytic: exact, f_method: f, abs_error: (f - exact).abs() }
        })
        .collect();
    let body = match a.output.format {
        Format::Csv => {
            let mut csv = Csv::new(&["x", "f_analytic", "f_method", "abs_error"]);
            for r in &rows {
                csv.row(&[
                    Field::Num(r.x),
                    Field::Num(r.f_analytic),
                    Field::Num(r.f_method),
                    Field::Num(r.abs_error),
                ]);
            }
            csv.finish()
        }
        Format::Json => to_json(&rows)?,
    };
    emit(a.output.out.as_deref(), &body)
}
