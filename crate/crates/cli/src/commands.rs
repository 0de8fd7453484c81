use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use trinoise_core::channels::{
    assemble_scenario, completeness_defect, evolve, Correlation, Normalization,
};
use trinoise_core::closed_forms::{
    compare_analytic_numeric, compare_forms, DiscrepancyReport, ScenarioKind, Verdict,
};
use trinoise_core::negativity::{
    detect_revival, find_death_point, linear_grid, sweep, StateLabel, SweepResult,
};
use trinoise_core::states::validate_density;

use crate::config::{CommandKind, RunConfig};
use crate::error::{CliError, CliResult};
use crate::format::sig12;
use crate::report::render_block;

pub const CSV_HEADER: [&str; 6] = ["p", "n_a_bc", "n_b_ac", "n_c_ab", "tripartite", "raw_trace"];
pub const VERIFY_SAMPLES: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
pub const COMPLETENESS_TOLERANCE: f64 = 1e-10;
/// Bisection width for `death`; well below the printed 4 decimals.
pub const DEATH_TOLERANCE: f64 = 1e-9;

/// Runs the configured command, writing summaries to `stdout`. Returns the
/// process exit status.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write) -> CliResult<i32> {
    let text = match cfg.command {
        CommandKind::Sweep => run_sweep(cfg)?,
        CommandKind::Death => run_death(cfg)?,
        CommandKind::Verify => {
            let (text, ok) = run_verify(cfg)?;
            emit(stdout, &text)?;
            return Ok(if ok { 0 } else { 1 });
        }
        CommandKind::Compare => run_compare(cfg)?,
    };
    emit(stdout, &text)?;
    Ok(0)
}

fn emit(stdout: &mut dyn Write, text: &str) -> CliResult<()> {
    stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn correlation_name(c: Correlation) -> &'static str {
    match c {
        Correlation::Correlated => "correlated",
        Correlation::NonCorrelated => "non_correlated",
    }
}

fn normalization_name(n: Normalization) -> &'static str {
    match n {
        Normalization::Literal => "literal",
        Normalization::Renormalize => "renormalize",
    }
}

fn scenario_line(cfg: &RunConfig) -> String {
    format!(
        "state={} sites={} correlation={} normalization={}",
        cfg.state,
        cfg.sites,
        correlation_name(cfg.correlation),
        normalization_name(cfg.normalization)
    )
}

pub fn grid(cfg: &RunConfig) -> Vec<f64> {
    if cfg.p_min == cfg.p_max {
        vec![cfg.p_min]
    } else {
        linear_grid(cfg.p_min, cfg.p_max, cfg.p_steps)
    }
}

pub fn sweep_result(cfg: &RunConfig) -> CliResult<SweepResult> {
    Ok(sweep(cfg.state, &cfg.template(), &grid(cfg))?)
}

/// CSV bytes for a sweep: fixed header, one row per grid point, LF endings.
pub fn sweep_csv(result: &SweepResult) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("write to Vec");
    for ((p, t), raw) in result
        .p_values
        .iter()
        .zip(&result.triples)
        .zip(&result.raw_traces)
    {
        w.write_record([
            sig12(*p),
            sig12(t.n_a_bc),
            sig12(t.n_b_ac),
            sig12(t.n_c_ab),
            sig12(t.tripartite),
            sig12(*raw),
        ])
        .expect("write to Vec");
    }
    w.into_inner().expect("flush to Vec")
}

pub fn sweep_summary(result: &SweepResult) -> String {
    let (min, max) = result
        .tripartite()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), t| {
            (lo.min(t), hi.max(t))
        });
    let opt = |x: Option<f64>| x.map(sig12).unwrap_or_else(|| "none".to_string());
    let revival = detect_revival(result).map(|(_, r)| r);
    format!(
        "points={} min_tripartite={} max_tripartite={} death_p={} revival_p={}",
        result.len(),
        sig12(min),
        sig12(max),
        opt(result.first_death()),
        opt(revival)
    )
}

pub fn run_sweep(cfg: &RunConfig) -> CliResult<String> {
    let result = sweep_result(cfg)?;
    write_file(&cfg.output_path, &sweep_csv(&result))?;
    Ok(format!(
        "{} {}\nwrote {}\n",
        scenario_line(cfg),
        sweep_summary(&result),
        cfg.output_path.display()
    ))
}

pub fn death_point(cfg: &RunConfig) -> CliResult<Option<f64>> {
    Ok(find_death_point(
        cfg.state,
        &cfg.template(),
        (cfg.p_min, cfg.p_max),
        DEATH_TOLERANCE,
    )?)
}

pub fn run_death(cfg: &RunConfig) -> CliResult<String> {
    Ok(match death_point(cfg)? {
        Some(p) => format!("death_p={p:.4}\n"),
        None => "death_p=none\n".to_string(),
    })
}

/// Verification text and whether every trace-preserving expectation held.
pub fn run_verify(cfg: &RunConfig) -> CliResult<(String, bool)> {
    let template = cfg.template();
    let expect_cptp = template.is_trace_preserving();
    let rho = cfg.state.initial_density();
    let mut text = format!(
        "{} trace_preserving_expected={}\n",
        scenario_line(cfg),
        if expect_cptp { "yes" } else { "no" }
    );
    let mut ok = true;
    let mut max_defect: f64 = 0.0;
    for p in VERIFY_SAMPLES {
        let scenario = template.at(p)?;
        let defect = completeness_defect(&assemble_scenario(&scenario)?);
        let diag = validate_density(&evolve(&rho, &scenario)?);
        max_defect = max_defect.max(defect);
        if expect_cptp && defect > COMPLETENESS_TOLERANCE {
            ok = false;
        }
        text.push_str(&format!(
            "p={} completeness_defect={} hermiticity_defect={} min_eigenvalue={} trace={}\n",
            sig12(p),
            sig12(defect),
            sig12(diag.hermiticity_defect),
            sig12(diag.min_eigenvalue),
            sig12(diag.trace)
        ));
    }
    if !expect_cptp && max_defect > COMPLETENESS_TOLERANCE {
        text.push_str("warning: correlated multi-site map is not trace preserving; nonzero completeness defect expected\n");
    }
    text.push_str(if ok { "status=ok\n" } else { "status=failed\n" });
    Ok((text, ok))
}

/// Audit blocks for every scenario kind of `state`; W also gets the
/// third-case cross check against the non-correlated sum.
pub fn compare_reports(state: StateLabel, samples: &[f64]) -> CliResult<Vec<DiscrepancyReport>> {
    let mut reports = ScenarioKind::ALL
        .iter()
        .map(|&k| compare_analytic_numeric(k, state, samples))
        .collect::<Result<Vec<_>, _>>()?;
    if state == StateLabel::W {
        reports.push(compare_forms(
            state,
            ScenarioKind::Corr3,
            ScenarioKind::Nc3,
            samples,
        )?);
    }
    Ok(reports)
}

pub fn compare_text(state: StateLabel, samples: &[f64], reports: &[DiscrepancyReport]) -> String {
    let mut text = format!(
        "# closed-form audit: state={} samples={}\n\n",
        state,
        samples
            .iter()
            .map(|&p| sig12(p))
            .collect::<Vec<_>>()
            .join(",")
    );
    for r in reports {
        text.push_str(&render_block(r));
    }
    text
}

pub fn run_compare(cfg: &RunConfig) -> CliResult<String> {
    let samples = grid(cfg);
    let reports = compare_reports(cfg.state, &samples)?;
    let text = compare_text(cfg.state, &samples, &reports);
    write_file(&cfg.output_path, text.as_bytes())?;
    let mut summary = String::new();
    for r in &reports {
        summary.push_str(&format!(
            "{} verdict={} max_abs_deviation={}\n",
            r.equation_label,
            r.verdict,
            sig12(r.max_abs_deviation)
        ));
    }
    let mismatches = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Mismatch)
        .count();
    summary.push_str(&format!(
        "wrote {} ({} blocks, {} mismatch)\n",
        cfg.output_path.display(),
        reports.len(),
        mismatches
    ));
    Ok(summary)
}
