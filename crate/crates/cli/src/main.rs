use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use normtop_core::catalog::{catalog, catalog_descriptions};
use normtop_core::lattice::enumerate_normal_subgroups;
use normtop_core::topology::coarse_lower_topology;
use normtop_core::Caps;

use normtop_cli::document::{default_id, parse_group_document, GroupDocument, Payload};
use normtop_cli::dot::{export_dot_hasse, export_dot_specialization};
use normtop_cli::run::{run, EmitKind, RunConfig};

#[derive(Parser)]
#[command(name = "normtop", version, about = "Normal subgroup lattices and their spectral topology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the spectral-space properties for one or more groups.
    Verify {
        /// Catalog group name (repeatable), e.g. Z12, S4, D6, Q8, "Z2 x Z4".
        #[arg(long = "catalog")]
        catalogs: Vec<String>,
        /// Path to a group document JSON file (repeatable).
        #[arg(long = "file")]
        files: Vec<PathBuf>,
        /// Artifacts to write, comma-delimited.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "report-json,report-text"
        )]
        emit: Vec<EmitKind>,
        /// Seed for the randomized family checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random family trials when exhaustive checking is infeasible.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Maximum group order.
        #[arg(long, default_value_t = Caps::default().order_cap)]
        order_cap: usize,
        /// Maximum number of normal subgroups.
        #[arg(long, default_value_t = Caps::default().lattice_cap)]
        lattice_cap: usize,
        /// Largest point count for which the closed-set family is materialized.
        #[arg(long, default_value_t = Caps::default().exhaustive_point_cap)]
        exhaustive_point_cap: usize,
        /// Output directory for emitted artifacts.
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Record wall-clock timings in the report. Off by default so that
        /// identical runs produce byte-identical output.
        #[arg(long, default_value_t = false)]
        timings: bool,
    },
    /// Catalog operations.
    Catalog {
        /// List available catalog names.
        #[arg(long)]
        list: bool,
    },
    /// Print a DOT graph for one catalog group to stdout.
    ExportDot {
        #[arg(long)]
        catalog: String,
        /// Which graph: the lattice Hasse diagram or the specialization
        /// preorder of the proper-point space.
        #[arg(long, value_parser = ["hasse", "specialization"])]
        flavor: String,
    },
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}

fn dispatch() -> anyhow::Result<u8> {
    match Cli::parse().command {
        Command::Verify {
            catalogs,
            files,
            emit,
            seed,
            trials,
            order_cap,
            lattice_cap,
            exhaustive_point_cap,
            out,
            timings,
        } => {
            let mut inputs: Vec<(String, GroupDocument)> = Vec::new();
            for name in &catalogs {
                let doc = GroupDocument {
                    format_version: normtop_cli::document::FORMAT_VERSION,
                    id: None,
                    payload: Payload::Catalog(name.clone()),
                };
                inputs.push((default_id(&doc), doc));
            }
            for path in &files {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let doc = parse_group_document(&text)
                    .with_context(|| format!("parsing {}", path.display()))?;
                inputs.push((default_id(&doc), doc));
            }
            if inputs.is_empty() {
                anyhow::bail!("no inputs: pass at least one --catalog or --file");
            }
            let caps = Caps {
                order_cap,
                lattice_cap,
                exhaustive_point_cap,
                ..Caps::default()
            };
            let config = RunConfig {
                inputs,
                caps,
                seed,
                trials,
                emit,
                out_dir: out,
                timings,
            };
            let code = run(&config)?;
            Ok(code as u8)
        }
        Command::Catalog { list } => {
            if list {
                for line in catalog_descriptions() {
                    println!("{}", line);
                }
            }
            Ok(0)
        }
        Command::ExportDot { catalog: name, flavor } => {
            let g = catalog(&name)?;
            let caps = Caps::default();
            let lat = enumerate_normal_subgroups(&g, &caps)?;
            let dot = match flavor.as_str() {
                "hasse" => export_dot_hasse(&lat),
                "specialization" => {
                    let space = coarse_lower_topology(&lat, &caps)?;
                    let plus = space.subspace(lat.proper_points().indices());
                    export_dot_specialization(&plus)
                }
                other => anyhow::bail!("unknown flavor {}", other),
            };
            print!("{}", dot);
            Ok(0)
        }
    }
}
