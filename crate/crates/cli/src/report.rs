//! Statistics rows and their table / JSON rendering.

use serde::Serialize;

use mingb_core::pairset::KillPath;
use mingb_core::EngineEvent;

/// One row of run statistics, mirroring the usual comparison table
/// columns: `#(G)`, `#(Sigma)`, `#(Sigma'')`, `B`, `M23`, `M48`, `Gain`,
/// `#(Theta)`.
#[derive(Debug, Clone, Serialize)]
pub struct StatsRow {
    pub name: String,
    pub strategy: String,
    pub ordering: String,
    pub degree_compatible: bool,
    pub truncated: Option<String>,
    pub g: usize,
    pub sigma: u64,
    pub sigma2: u64,
    pub b: Option<u64>,
    pub m23: Option<u64>,
    pub m48: Option<u64>,
    pub gain: Option<i64>,
    pub theta: Option<u64>,
    pub treated: u64,
    pub wall_ms: u128,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// Renders rows as an aligned table with the standard column order.
pub fn render_table(rows: &[StatsRow]) -> String {
    let headers = [
        "name", "strategy", "#(G)", "#(Sigma)", "#(Sigma'')", "B", "M23", "M48", "Gain",
        "#(Theta)", "treated", "ms",
    ];
    let mut cells: Vec<Vec<String>> = vec![headers.iter().map(|s| s.to_string()).collect()];
    for r in rows {
        cells.push(vec![
            r.name.clone(),
            r.strategy.clone(),
            r.g.to_string(),
            r.sigma.to_string(),
            r.sigma2.to_string(),
            opt(&r.b),
            opt(&r.m23),
            opt(&r.m48),
            opt(&r.gain),
            opt(&r.theta),
            r.treated.to_string(),
            r.wall_ms.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..headers.len())
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// One elimination, in printable form.
#[derive(Debug, Clone, Serialize)]
pub struct ElimRecord {
    pub pair: (usize, usize),
    pub degree: String,
    pub path: String,
    pub head_reductions: u32,
}

pub fn kill_path_name(path: KillPath) -> &'static str {
    match path {
        KillPath::DirectLtMatch => "direct-lt-match",
        KillPath::HeadReductionChain => "head-reduction-chain",
        KillPath::Rule3 => "rule3",
    }
}

pub fn elim_records(events: &[mingb_core::pairset::EliminationEvent]) -> Vec<ElimRecord> {
    events
        .iter()
        .map(|e| ElimRecord {
            pair: (e.pair.0 + 1, e.pair.1 + 1),
            degree: e.degree.to_string(),
            path: kill_path_name(e.path).to_string(),
            head_reductions: e.head_reductions,
        })
        .collect()
}

/// Human-readable elimination log lines.
pub fn render_elim_log(events: &[mingb_core::pairset::EliminationEvent]) -> String {
    let mut out = String::new();
    for e in events {
        let pair = format!("({},{})", e.pair.0 + 1, e.pair.1 + 1);
        match e.path {
            KillPath::DirectLtMatch => {
                out.push_str(&format!(
                    "killed {pair} in degree {}: leading term already covered\n",
                    e.degree
                ));
            }
            KillPath::HeadReductionChain => {
                out.push_str(&format!(
                    "killed {pair} in degree {}: found after {} head reduction step{}\n",
                    e.degree,
                    e.head_reductions,
                    if e.head_reductions == 1 { "" } else { "s" }
                ));
            }
            KillPath::Rule3 => {
                out.push_str(&format!(
                    "killed {pair} in degree {}: rule 3\n",
                    e.degree
                ));
            }
        }
    }
    out
}

/// Engine event log lines (verbose mode).
pub fn render_run_log(events: &[EngineEvent]) -> String {
    let mut out = String::new();
    for e in events {
        match e {
            EngineEvent::GeneratorAppended {
                index,
                degree,
                source,
            } => {
                let source = match source {
                    mingb_core::engine::BasisSource::Input { original_index } => {
                        format!("input #{}", original_index + 1)
                    }
                    mingb_core::engine::BasisSource::SPair { i, j } => {
                        format!("S-vector of ({},{})", i + 1, j + 1)
                    }
                };
                out.push_str(&format!(
                    "g{} appended in degree {degree} from {source}\n",
                    index + 1
                ));
            }
            EngineEvent::PairTreated {
                pair,
                degree,
                reduced_to_zero,
            } => {
                out.push_str(&format!(
                    "treated ({},{}) in degree {degree}{}\n",
                    pair.0 + 1,
                    pair.1 + 1,
                    if *reduced_to_zero {
                        ", reduced to zero"
                    } else {
                        ""
                    }
                ));
            }
        }
    }
    out
}
