//! Batch execution: run the verification pipeline over a list of group
//! documents and emit reports and graphs. Given identical inputs, seed, and
//! caps, two runs produce byte-identical files (timings are opt-in because
//! they would break that).

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::Context;
use serde::Serialize;

use normtop_core::lattice::enumerate_normal_subgroups;
use normtop_core::topology::coarse_lower_topology;
use normtop_core::verify::{verify_theorem_main, FamilyCheckReport, MaximalEntry, SpectralReport};
use normtop_core::{Caps, Error as CoreError};

use crate::document::{default_id, to_group, GroupDocument};
use crate::dot::{export_dot_hasse, export_dot_specialization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum EmitKind {
    #[value(name = "report-json")]
    ReportJson,
    #[value(name = "report-text")]
    ReportText,
    #[value(name = "dot-hasse")]
    DotHasse,
    #[value(name = "dot-specialization")]
    DotSpecialization,
}

impl fmt::Display for EmitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EmitKind::ReportJson => "report-json",
            EmitKind::ReportText => "report-text",
            EmitKind::DotHasse => "dot-hasse",
            EmitKind::DotSpecialization => "dot-specialization",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub inputs: Vec<(String, GroupDocument)>,
    pub caps: Caps,
    pub seed: u64,
    pub trials: usize,
    pub emit: Vec<EmitKind>,
    pub out_dir: PathBuf,
    pub timings: bool,
}

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct GroupEntry {
    group_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normal_subgroup_count: Option<usize>,
    maximal_normal_subgroups: Vec<MaximalEntry>,
    hypothesis_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_space: Option<SpectralReport>,
    n_plus_open: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_plus_space: Option<SpectralReport>,
    lemma_chain_valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    closure_identity: Option<normtop_core::verify::ClosureIdentityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    intersection_identity: Option<FamilyCheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    join_compactness: Option<FamilyCheckReport>,
    seed: u64,
    caps: Caps,
    timings_ms: Option<u128>,
}

#[derive(Serialize)]
struct ReportFile {
    schema_version: u32,
    groups: Vec<GroupEntry>,
}

fn safe_file_stem(id: &str) -> String {
    id.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

/// Execute a run. Returns the process exit code: 0 on success (including
/// hypothesis-failed groups, which are annotated, not errors), 1 on input
/// errors, 2 on any theorem assertion failure.
pub fn run(config: &RunConfig) -> anyhow::Result<i32> {
    let mut ids = HashSet::new();
    for (id, _) in &config.inputs {
        if !ids.insert(id.clone()) {
            eprintln!("duplicate group id: {}", id);
            return Ok(1);
        }
        if id.is_empty() {
            eprintln!("empty group id");
            return Ok(1);
        }
    }

    let mut entries = Vec::new();
    let mut dots: Vec<(String, String)> = Vec::new();
    let mut input_error = false;
    let mut assertion_failure = false;

    for (id, doc) in &config.inputs {
        let started = Instant::now();
        let group = match to_group(doc, &config.caps) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{}: {}", id, e);
                input_error = true;
                entries.push(error_entry(id, e.to_string(), config));
                continue;
            }
        };
        let report = verify_theorem_main(&group, id, &config.caps, config.seed, config.trials);
        let timings_ms = config.timings.then(|| started.elapsed().as_millis());
        match report {
            Ok(r) => {
                entries.push(GroupEntry {
                    group_id: r.group_id.clone(),
                    error: None,
                    order: Some(r.order),
                    normal_subgroup_count: Some(r.normal_subgroup_count),
                    maximal_normal_subgroups: r.maximal_normal_subgroups,
                    hypothesis_holds: r.hypothesis_holds,
                    n_space: Some(r.n_space_report),
                    n_plus_open: r.n_plus_open,
                    n_plus_space: Some(r.n_plus_report),
                    lemma_chain_valid: r.lemma_chain_valid,
                    closure_identity: Some(r.closure_identity),
                    intersection_identity: Some(r.intersection_identity),
                    join_compactness: Some(r.join_compactness),
                    seed: config.seed,
                    caps: config.caps.clone(),
                    timings_ms,
                });
            }
            Err(e @ CoreError::TheoremAssertionFailed { .. }) => {
                eprintln!("{}: {}", id, e);
                assertion_failure = true;
                entries.push(error_entry(id, e.to_string(), config));
            }
            Err(e) => {
                eprintln!("{}: {}", id, e);
                input_error = true;
                entries.push(error_entry(id, e.to_string(), config));
                continue;
            }
        }
        if config.emit.contains(&EmitKind::DotHasse)
            || config.emit.contains(&EmitKind::DotSpecialization)
        {
            let lat = enumerate_normal_subgroups(&group, &config.caps)?;
            if config.emit.contains(&EmitKind::DotHasse) {
                dots.push((format!("{}.hasse.dot", safe_file_stem(id)), export_dot_hasse(&lat)));
            }
            if config.emit.contains(&EmitKind::DotSpecialization) {
                let space = coarse_lower_topology(&lat, &config.caps)?;
                let plus = space.subspace(lat.proper_points().indices());
                dots.push((
                    format!("{}.specialization.dot", safe_file_stem(id)),
                    export_dot_specialization(&plus),
                ));
            }
        }
    }

    fs::create_dir_all(&config.out_dir)
        .with_context(|| format!("creating {}", config.out_dir.display()))?;
    if config.emit.contains(&EmitKind::ReportText) {
        let mut text = String::new();
        for e in &entries {
            text.push_str(&text_line(e));
            text.push('\n');
        }
        fs::write(config.out_dir.join("report.txt"), text)?;
    }
    if config.emit.contains(&EmitKind::ReportJson) {
        let file = ReportFile {
            schema_version: SCHEMA_VERSION,
            groups: entries,
        };
        let json = serde_json::to_string_pretty(&file)?;
        fs::write(config.out_dir.join("report.json"), json + "\n")?;
    }
    for (name, content) in dots {
        fs::write(config.out_dir.join(name), content)?;
    }

    Ok(if assertion_failure {
        2
    } else if input_error {
        1
    } else {
        0
    })
}

fn error_entry(id: &str, error: String, config: &RunConfig) -> GroupEntry {
    GroupEntry {
        group_id: id.to_string(),
        error: Some(error),
        order: None,
        normal_subgroup_count: None,
        maximal_normal_subgroups: Vec::new(),
        hypothesis_holds: false,
        n_space: None,
        n_plus_open: false,
        n_plus_space: None,
        lemma_chain_valid: false,
        closure_identity: None,
        intersection_identity: None,
        join_compactness: None,
        seed: config.seed,
        caps: config.caps.clone(),
        timings_ms: None,
    }
}

fn text_line(e: &GroupEntry) -> String {
    if let Some(err) = &e.error {
        return format!("{}: ERROR {}", e.group_id, err);
    }
    let verdict = |r: &Option<SpectralReport>| {
        r.as_ref()
            .map(|r| if r.verdict { "spectral" } else { "NOT-SPECTRAL" })
            .unwrap_or("?")
    };
    format!(
        "{}: order={} |N(G)|={} hypothesis={} N-space={} N+open={} N+-space={}{} identities={}",
        e.group_id,
        e.order.unwrap_or(0),
        e.normal_subgroup_count.unwrap_or(0),
        if e.hypothesis_holds { "holds" } else { "FAILED (no maximal normal subgroup)" },
        verdict(&e.n_space),
        e.n_plus_open,
        verdict(&e.n_plus_space),
        if e.n_plus_space.as_ref().map(|r| r.empty).unwrap_or(false) {
            " (empty space, spectral by convention)"
        } else {
            ""
        },
        e.closure_identity.as_ref().map(|c| c.holds).unwrap_or(false)
            && e.intersection_identity.as_ref().map(|c| c.holds).unwrap_or(false)
            && e.join_compactness.as_ref().map(|c| c.holds).unwrap_or(false)
    )
}

/// Convenience for tests and `main`: documents from catalog names.
pub fn catalog_inputs(names: &[&str]) -> Vec<(String, GroupDocument)> {
    names
        .iter()
        .map(|n| {
            let doc = GroupDocument {
                format_version: crate::document::FORMAT_VERSION,
                id: None,
                payload: crate::document::Payload::Catalog(n.to_string()),
            };
            (default_id(&doc), doc)
        })
        .collect()
}
