//! Command implementations: `gb`, `stats`, `minpairs`, `compare`.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::json;

use mingb_core::engine::{run_buchberger, EngineConfig, GbOutcome};
use mingb_core::pairset::{build_pairs, gm_rules, sigma_bam, CriticalPair};
use mingb_core::reduction::{leading_monomial, LeadingData};
use mingb_core::{EngineError, OrderingSpec, Strategy};

use crate::problem::{ordering_name, ProblemFile};
use crate::render::{render_basis, render_vector};
use crate::report::{elim_records, render_elim_log, render_run_log, render_table, StatsRow};

/// Exit codes: 0 success, 1 usage, 2 parse, 3 math domain, 4 resource cap.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }

    pub fn resource(message: impl Into<String>) -> Self {
        CliError {
            code: 4,
            message: message.into(),
        }
    }
}

fn engine_error(e: EngineError) -> CliError {
    match e {
        EngineError::TimeLimitExceeded => CliError::resource(e.to_string()),
        _ => CliError::domain(e.to_string()),
    }
}

/// Options shared by the run commands.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub name: String,
    pub ordering: Option<OrderingSpec>,
    pub strategy: Strategy,
    pub truncate: Option<Vec<i64>>,
    pub json: bool,
    pub homogenize: bool,
    pub verbose: bool,
    pub time_limit: Option<Duration>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            name: "-".to_string(),
            ordering: None,
            strategy: Strategy::Ckr,
            truncate: None,
            json: false,
            homogenize: false,
            verbose: false,
            time_limit: None,
        }
    }
}

struct Prepared {
    problem: ProblemFile,
    ordering: OrderingSpec,
    config: EngineConfig,
}

fn prepare(problem: &ProblemFile, opts: &RunOptions) -> Result<Prepared, CliError> {
    let problem = if opts.homogenize {
        crate::gen::homogenize(problem).map_err(CliError::domain)?
    } else {
        problem.clone()
    };
    if !problem.degree_matrix().is_positive() {
        return Err(CliError::domain("the grading is not positive"));
    }
    let ordering = opts
        .ordering
        .or(problem.ordering)
        .unwrap_or_else(OrderingSpec::degrevlex);
    let mut config = EngineConfig::new(ordering).with_strategy(opts.strategy);
    if let Some(t) = &opts.truncate {
        if t.len() != problem.degree_len() {
            return Err(CliError::usage(format!(
                "truncation degree has {} entries, the grading has {} rows",
                t.len(),
                problem.degree_len()
            )));
        }
        config = config.with_truncation(mingb_core::MultiDegree(t.clone()));
    }
    config.time_limit = opts.time_limit;
    Ok(Prepared {
        problem,
        ordering,
        config,
    })
}

fn stats_row(
    name: &str,
    ordering: &OrderingSpec,
    outcome: &GbOutcome,
    truncated: &Option<Vec<i64>>,
    wall_ms: u128,
) -> StatsRow {
    let s = &outcome.stats;
    let (b, m23, m48, theta) = match outcome.strategy {
        Strategy::Naive => (None, None, None, None),
        Strategy::Gm => (Some(s.rule3_kills), None, None, None),
        Strategy::Ckr => (None, Some(s.m23_kills), Some(s.m48_kills), Some(s.theta)),
    };
    StatsRow {
        name: name.to_string(),
        strategy: outcome.strategy.name().to_string(),
        ordering: ordering_name(ordering),
        degree_compatible: outcome.degree_compatible,
        truncated: truncated
            .as_ref()
            .map(|t| mingb_core::MultiDegree(t.clone()).to_string()),
        g: outcome.basis.len(),
        sigma: s.sigma_total,
        sigma2: s.sigma2,
        b,
        m23,
        m48,
        gain: None,
        theta,
        treated: outcome.treated.len() as u64,
        wall_ms,
    }
}

fn run_engine(prepared: &Prepared) -> Result<(GbOutcome, u128), CliError> {
    let (_, vectors) = prepared.problem.vectors();
    let started = Instant::now();
    let outcome = run_buchberger(&vectors, &prepared.config).map_err(engine_error)?;
    Ok((outcome, started.elapsed().as_millis()))
}

/// `gb`: compute and print the basis.
pub fn cmd_gb(problem: &ProblemFile, opts: &RunOptions) -> Result<String, CliError> {
    let prepared = prepare(problem, opts)?;
    let (outcome, wall_ms) = run_engine(&prepared)?;
    let row = stats_row(
        &opts.name,
        &prepared.ordering,
        &outcome,
        &opts.truncate,
        wall_ms,
    );
    if opts.json {
        let basis: Vec<String> = outcome
            .basis
            .iter()
            .map(|g| render_vector(g, &prepared.problem.vars, &prepared.ordering))
            .collect();
        let payload = json!({
            "basis": basis,
            "count": outcome.basis.len(),
            "stats": row,
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&payload).unwrap()));
    }
    let mut out = String::new();
    if outcome.basis.is_empty() {
        out.push_str("empty basis\n");
    } else {
        out.push_str(&render_basis(
            &outcome.basis,
            &prepared.problem.vars,
            &prepared.ordering,
        ));
    }
    if opts.verbose {
        out.push_str(&render_run_log(&outcome.events));
        out.push_str(&render_elim_log(&outcome.eliminations));
    }
    out.push_str(&format!(
        "basis of {} elements, ordering {}, strategy {}\n",
        outcome.basis.len(),
        ordering_name(&prepared.ordering),
        outcome.strategy.name()
    ));
    Ok(out)
}

/// `stats`: compute and print one statistics row.
pub fn cmd_stats(problem: &ProblemFile, opts: &RunOptions) -> Result<String, CliError> {
    let prepared = prepare(problem, opts)?;
    let (outcome, wall_ms) = run_engine(&prepared)?;
    debug_assert!(
        outcome.strategy != Strategy::Ckr || outcome.stats.theta_identity_holds()
    );
    let row = stats_row(
        &opts.name,
        &prepared.ordering,
        &outcome,
        &opts.truncate,
        wall_ms,
    );
    if opts.json {
        let payload = json!({
            "stats": row,
            "eliminations": elim_records(&outcome.eliminations),
            "treated": outcome.treated.iter().map(|(i, j)| (i + 1, j + 1)).collect::<Vec<_>>(),
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&payload).unwrap()));
    }
    let mut out = render_table(std::slice::from_ref(&row));
    if opts.verbose {
        out.push_str(&render_elim_log(&outcome.eliminations));
    }
    Ok(out)
}

/// `compare`: run the rule-3 strategy and the minimalizing strategy on the
/// same input and print both rows plus the combined gain.
pub fn cmd_compare(problem: &ProblemFile, opts: &RunOptions) -> Result<String, CliError> {
    let gm_opts = RunOptions {
        strategy: Strategy::Gm,
        ..opts.clone()
    };
    let ckr_opts = RunOptions {
        strategy: Strategy::Ckr,
        ..opts.clone()
    };
    let gm_prepared = prepare(problem, &gm_opts)?;
    let ckr_prepared = prepare(problem, &ckr_opts)?;
    let (gm_outcome, gm_ms) = run_engine(&gm_prepared)?;
    let (ckr_outcome, ckr_ms) = run_engine(&ckr_prepared)?;

    let gm_row = stats_row(
        &opts.name,
        &gm_prepared.ordering,
        &gm_outcome,
        &opts.truncate,
        gm_ms,
    );
    let ckr_row = stats_row(
        &opts.name,
        &ckr_prepared.ordering,
        &ckr_outcome,
        &opts.truncate,
        ckr_ms,
    );
    let gain = ckr_outcome.stats.m23_kills as i64 + ckr_outcome.stats.m48_kills as i64
        - gm_outcome.stats.rule3_kills as i64;
    let combined = StatsRow {
        strategy: "gm+ckr".to_string(),
        b: Some(gm_outcome.stats.rule3_kills),
        m23: Some(ckr_outcome.stats.m23_kills),
        m48: Some(ckr_outcome.stats.m48_kills),
        gain: Some(gain),
        theta: Some(ckr_outcome.stats.theta),
        wall_ms: gm_ms + ckr_ms,
        ..ckr_row.clone()
    };
    if opts.json {
        let payload = json!({
            "gm": gm_row,
            "ckr": ckr_row,
            "combined": combined,
            "gain": gain,
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&payload).unwrap()));
    }
    Ok(render_table(&[gm_row, ckr_row, combined]))
}

#[derive(Debug, Serialize)]
pub struct MinPairsReport {
    pub sigma: Vec<(usize, usize)>,
    pub sigma2: Vec<(usize, usize)>,
    pub sigma3: Vec<(usize, usize)>,
    pub theta: Vec<(usize, usize)>,
    pub m23: u64,
    pub m48: u64,
    pub eliminations: Vec<crate::report::ElimRecord>,
}

fn one_based(pairs: &[CriticalPair]) -> Vec<(usize, usize)> {
    pairs.iter().map(|p| (p.i + 1, p.j + 1)).collect()
}

/// `minpairs`: the pair pipeline on the leading terms only, with no
/// polynomial arithmetic at all.
pub fn cmd_minpairs(problem: &ProblemFile, opts: &RunOptions) -> Result<String, CliError> {
    let prepared = prepare(problem, opts)?;
    let (ctx, vectors) = prepared.problem.vectors();
    let mut leading: Vec<LeadingData> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if v.is_zero() {
            return Err(CliError::domain(format!("generator #{} is zero", i + 1)));
        }
        leading.push(leading_monomial(v, &prepared.ordering).map_err(|e| {
            CliError::domain(format!("generator #{}: {e}", i + 1))
        })?);
    }
    let pairs = build_pairs(&leading, &ctx).map_err(|e| CliError::domain(e.to_string()))?;
    let rules = gm_rules(&pairs);
    let bam = sigma_bam(&rules.sigma2, &leading, &ctx);
    let report = MinPairsReport {
        sigma: one_based(&pairs),
        sigma2: one_based(&rules.sigma2),
        sigma3: one_based(&rules.sigma3),
        theta: one_based(&bam.theta),
        m23: bam.m23_kills,
        m48: bam.m48_kills,
        eliminations: elim_records(&bam.events),
    };
    if opts.json {
        return Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&report).unwrap()
        ));
    }
    let fmt = |pairs: &[(usize, usize)]| {
        pairs
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    out.push_str(&format!(
        "Sigma    = {:3}: {}\n",
        report.sigma.len(),
        fmt(&report.sigma)
    ));
    out.push_str(&format!(
        "Sigma''  = {:3}: {}\n",
        report.sigma2.len(),
        fmt(&report.sigma2)
    ));
    out.push_str(&format!(
        "Sigma''' = {:3}: {}\n",
        report.sigma3.len(),
        fmt(&report.sigma3)
    ));
    out.push_str(&format!(
        "Theta    = {:3}: {}\n",
        report.theta.len(),
        fmt(&report.theta)
    ));
    out.push_str(&render_elim_log(&bam.events));
    Ok(out)
}
