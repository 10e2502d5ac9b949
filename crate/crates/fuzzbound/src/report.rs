//! Audit report rendering.
//!
//! The machine format is one JSON object per line: a header record, then one
//! record per claim in registry order. It carries no timings, so equal
//! configurations give byte-identical output. The human format is a
//! fixed-width table followed by the witnesses, and does include timings.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use fuzzbound_core::search::{AuditReport, ClaimRecord, PassMode, SearchConfig, Witness};
use fuzzbound_core::{ClaimKind, FuzzySet};

use crate::spacefile::render;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PassEcho {
    pub mode: &'static str,
    pub n: [usize; 2],
    pub d: [u32; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

/// The run configuration as echoed in report headers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub claims: String,
    pub passes: Vec<PassEcho>,
    pub budget: Option<usize>,
    pub generators: [usize; 2],
    pub args_per_space: usize,
    pub topology_cap: usize,
    pub grid_limit: u64,
    pub fixtures: bool,
    pub spaces: Vec<String>,
}

fn bounds<T: Copy>(r: &RangeInclusive<T>) -> [T; 2] {
    [*r.start(), *r.end()]
}

impl ConfigEcho {
    pub fn new(config: &SearchConfig, claims: &str, spaces: Vec<String>) -> Self {
        let passes = config
            .passes
            .iter()
            .map(|p| PassEcho {
                mode: match p.mode {
                    PassMode::Exhaustive => "exhaustive",
                    PassMode::Random { .. } => "random",
                },
                n: bounds(&p.carrier_sizes),
                d: bounds(&p.denominators),
                samples: match p.mode {
                    PassMode::Random { samples } => Some(samples),
                    PassMode::Exhaustive => None,
                },
            })
            .collect();
        ConfigEcho {
            claims: claims.to_owned(),
            passes,
            budget: config.claim_budget,
            generators: bounds(&config.generators),
            args_per_space: config.args_per_space,
            topology_cap: config.topology_cap,
            grid_limit: config.grid_limit,
            fixtures: config.fixtures,
            spaces,
        }
    }
}

#[derive(Serialize)]
struct HeaderRecord<'a> {
    record: &'static str,
    version: &'static str,
    seed: u64,
    config: &'a ConfigEcho,
    spaces: usize,
    unary_instances: usize,
    binary_instances: usize,
}

#[derive(Serialize)]
struct TranscriptLine<'a> {
    label: &'a str,
    value: &'a [u32],
}

#[derive(Serialize)]
struct WitnessRecord<'a> {
    space: String,
    args: Vec<&'a [u32]>,
    transcript: Vec<TranscriptLine<'a>>,
}

#[derive(Serialize)]
struct ClaimLine<'a> {
    record: &'static str,
    id: &'static str,
    kind: &'static str,
    arity: usize,
    statement: &'static str,
    status: &'static str,
    holds: u64,
    fails: u64,
    hypothesis_not_met: u64,
    witness: Option<WitnessRecord<'a>>,
}

fn kind_name(kind: ClaimKind) -> &'static str {
    match kind {
        ClaimKind::Universal => "universal",
        ClaimKind::Existential => "existential",
    }
}

fn witness_record(w: &Witness) -> WitnessRecord<'_> {
    WitnessRecord {
        space: render(&w.topology),
        args: w.args.iter().map(FuzzySet::values).collect(),
        transcript: w
            .transcript
            .iter()
            .map(|e| TranscriptLine {
                label: &e.label,
                value: e.value.values(),
            })
            .collect(),
    }
}

fn claim_line(r: &ClaimRecord) -> ClaimLine<'_> {
    ClaimLine {
        record: "claim",
        id: r.claim.id,
        kind: kind_name(r.claim.kind),
        arity: r.claim.arity,
        statement: r.claim.statement,
        status: r.status.as_str(),
        holds: r.tally.holds,
        fails: r.tally.fails,
        hypothesis_not_met: r.tally.hypothesis_not_met,
        witness: r.witness.as_ref().map(witness_record),
    }
}

pub fn render_machine(report: &AuditReport, seed: u64, config: &ConfigEcho) -> String {
    let header = HeaderRecord {
        record: "header",
        version: VERSION,
        seed,
        config,
        spaces: report.spaces,
        unary_instances: report.unary_instances,
        binary_instances: report.binary_instances,
    };
    let mut out = serde_json::to_string(&header).expect("header serializes");
    out.push('\n');
    for r in &report.records {
        out.push_str(&serde_json::to_string(&claim_line(r)).expect("record serializes"));
        out.push('\n');
    }
    out
}

const ARG_NAMES: [&str; 2] = ["A", "B"];

fn millis(nanos: u64) -> String {
    format!("{:.2}", nanos as f64 / 1e6)
}

pub fn render_human(report: &AuditReport, seed: u64, wall_nanos: u64) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "fuzzbound {VERSION}  seed {seed}  spaces {}  instances {} unary / {} binary",
        report.spaces, report.unary_instances, report.binary_instances
    )
    .unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "{:<20} {:<22} {:>9} {:>9} {:>9} {:>10}",
        "CLAIM", "STATUS", "HOLDS", "FAILS", "VACUOUS", "TIME(ms)"
    )
    .unwrap();
    for r in &report.records {
        writeln!(
            out,
            "{:<20} {:<22} {:>9} {:>9} {:>9} {:>10}",
            r.claim.id,
            r.status.as_str(),
            r.tally.holds,
            r.tally.fails,
            r.tally.hypothesis_not_met,
            millis(r.tally.elapsed_nanos)
        )
        .unwrap();
    }
    for r in report.records.iter().filter(|r| r.witness.is_some()) {
        let w = r.witness.as_ref().unwrap();
        writeln!(out).unwrap();
        writeln!(out, "{} {}: {}", r.claim.id, r.status.as_str(), r.claim.statement).unwrap();
        for line in render(&w.topology).lines() {
            writeln!(out, "    {line}").unwrap();
        }
        for (name, a) in ARG_NAMES.iter().zip(&w.args) {
            writeln!(out, "    {name} = {a}").unwrap();
        }
        for e in &w.transcript {
            writeln!(out, "    {:<12} = {}", e.label, e.value).unwrap();
        }
    }
    writeln!(out).unwrap();
    writeln!(out, "total {} ms", millis(wall_nanos)).unwrap();
    out
}
