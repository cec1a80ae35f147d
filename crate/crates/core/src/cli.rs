//! Argument parsing and report builders for the `zkmorse` binary.
//!
//! Every command reads one or more complex files (`{"m": .., "facets": ..}`)
//! and prints one JSON report per input; several inputs print a JSON array in
//! input order. Reports carry `"schema_version": 1`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgAction, ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cw_homology::{betti_moment_angle_with_budget, wedge_formula, CellModel, Prime, DEFAULT_CELL_BUDGET};
use crate::error::{Error, Result};
use crate::morse::{
    build_matching, critical_recursive, critical_sign_vectors, l_monotonicity_violations,
    morse_histogram, shedding_compatible_order, triangle, verify_acyclic, CritSet, DEFAULT_ORDER_BUDGET,
};
use crate::simplicial::generators::{all_complexes, random_complex, shifted_random, skeleton_complex};
use crate::simplicial::SimplicialComplex;
use crate::vertex_decomp::{shedding_sequence_with_budget, verify_shedding_sequence, VdSolver};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "zkmorse", version, about = "Morse matchings and homology of moment-angle complexes Z_K(D^n, S^{n-1})")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Sphere dimension parameter of Z_K(D^n, S^{n-1}).
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,
    /// Coefficient field GF(p), p in {2, 3, 5, 7}.
    #[arg(long, global = true, default_value_t = 2)]
    pub p: u32,
    /// Largest number of cells the explicit model may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CELL_BUDGET)]
    pub budget_cells: usize,
    /// Largest number of search nodes for decomposability and vertex orders.
    #[arg(long, global = true)]
    pub budget_nodes: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for `gen --random` and `gen --shifted`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// `vd verify` also requires the first vertex shed to be a shedding vertex.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    pub strict_shedding: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Build the cell model and the matching.
    Direct,
    /// Prefix/link recursion on sign vectors.
    Recursive,
    /// Both, and compare.
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander dual.
    Dual { files: Vec<PathBuf> },
    /// Vertex decomposability of the complex itself.
    Vd {
        #[command(subcommand)]
        action: VdAction,
    },
    /// Critical cells of the inductive matching.
    Crit {
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// Cellular Betti numbers of the explicit model.
    Betti { files: Vec<PathBuf> },
    /// Sphere counts predicted by the wedge formula over missing faces.
    Wedge { files: Vec<PathBuf> },
    /// Morse counts against cellular Betti numbers and wedge counts.
    Verify {
        files: Vec<PathBuf>,
        /// Judge the Morse counts after relabelling by a shedding-compatible order.
        #[arg(long)]
        relabel: bool,
    },
    /// Build the matching on the explicit model and check it.
    Matching {
        file: PathBuf,
        /// Write the matched edges to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Generate complex files.
    #[command(group(ArgGroup::new("family").required(true).args(["skeleton", "shifted", "random", "all"])))]
    Gen {
        /// All k-subsets of [m] as facets.
        #[arg(long, num_args = 2, value_names = ["M", "K"])]
        skeleton: Option<Vec<usize>>,
        /// A random shifted complex on [M].
        #[arg(long, value_name = "M")]
        shifted: Option<usize>,
        /// A random complex on [M].
        #[arg(long, value_name = "M")]
        random: Option<usize>,
        /// Every complex on [M] (a JSON array).
        #[arg(long, value_name = "M")]
        all: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VdAction {
    Check { files: Vec<PathBuf> },
    Sequence { files: Vec<PathBuf> },
    Verify {
        file: PathBuf,
        /// Comma-separated order `v_1,...,v_l`; `v_l` is shed first.
        #[arg(long, value_delimiter = ',')]
        order: Vec<usize>,
    },
}

/// Result of a check, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    HypothesisNotMet,
    Mismatch,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::HypothesisNotMet => 2,
            Status::Mismatch => 3,
        }
    }
}

/// Printed output and the worst status over all inputs.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

/// Runs a parsed command. Errors (bad files, budgets) map to exit code 1.
pub fn run(cli: &Cli) -> Result<Output> {
    let opts = &cli.options;
    let prime = Prime::new(opts.p)?;
    if opts.n == 0 {
        return Err(Error::InvalidSphereDimension);
    }
    let reports: Vec<(Value, Status)> = match &cli.command {
        Command::Dual { files } => each(files, |k| Ok((json!({ "dual": complex_json(&k.alexander_dual()) }), Status::Ok)))?,
        Command::Vd { action } => match action {
            VdAction::Check { files } => each(files, |k| vd_report(k, opts, false))?,
            VdAction::Sequence { files } => each(files, |k| vd_report(k, opts, true))?,
            VdAction::Verify { file, order } => {
                let k = read_complex(file)?;
                let valid = verify_shedding_sequence(&k, order, opts.strict_shedding);
                vec![(
                    with_input(json!({ "order": order, "strict": opts.strict_shedding, "valid": valid }), file),
                    Status::Ok,
                )]
            }
        },
        Command::Crit { files, method } => each(files, |k| crit_report(k, opts, *method))?,
        Command::Betti { files } => each(files, |k| {
            let table = betti_moment_angle_with_budget(k, opts.n, prime, opts.budget_cells)?;
            let cells: BTreeMap<String, usize> = table.cells.iter().enumerate().map(|(d, &c)| (d.to_string(), c)).collect();
            let report = json!({
                "betti": keyed(table.nonzero()),
                "cells_per_dim": cells,
                "chi": table.euler_from_cells(),
            });
            Ok((report, Status::Ok))
        })?,
        Command::Wedge { files } => each(files, |k| {
            let w = wedge_formula(k, opts.n, prime)?;
            let counts = w.unreduced(!k.is_void());
            let chi: i64 = counts.iter().map(|(&d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
            let report = json!({ "wedge": keyed(counts), "singletons_present": w.singletons_present, "chi": chi });
            Ok((report, Status::Ok))
        })?,
        Command::Verify { files, relabel } => each(files, |k| verify_report(k, opts, prime, *relabel))?,
        Command::Matching { file, dump } => vec![matching_report(file, dump.as_deref(), opts)?],
        Command::Gen { skeleton, shifted, random, all } => {
            let value = if let Some(mk) = skeleton {
                complex_json(&skeleton_complex(mk[0], mk[1])?)
            } else if let Some(m) = shifted {
                complex_json(&shifted_random(*m, opts.seed)?)
            } else if let Some(m) = random {
                complex_json(&random_complex(*m, opts.seed)?)
            } else {
                let m = all.expect("clap requires one family");
                Value::Array(all_complexes(m)?.iter().map(complex_json).collect())
            };
            return Ok(Output { text: format!("{value}\n"), status: Status::Ok });
        }
    };
    let status = reports.iter().map(|(_, s)| *s).max().unwrap_or(Status::Ok);
    let text = match opts.format {
        Format::Json => {
            let mut values: Vec<Value> = reports.into_iter().map(|(v, _)| v).collect();
            let out = if values.len() == 1 { values.pop().expect("one report") } else { Value::Array(values) };
            format!("{}\n", serde_json::to_string_pretty(&out).expect("reports serialise"))
        }
        Format::Table => reports.iter().map(|(v, _)| table(v)).collect::<Vec<_>>().join("\n"),
    };
    Ok(Output { text, status })
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    SimplicialComplex::from_json_str(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Applies `f` to every input in parallel; reports keep the input order.
fn each<F>(files: &[PathBuf], f: F) -> Result<Vec<(Value, Status)>>
where
    F: Fn(&SimplicialComplex) -> Result<(Value, Status)> + Sync,
{
    if files.is_empty() {
        return Err(Error::Io("no input files".into()));
    }
    files
        .par_iter()
        .map(|path| {
            let k = read_complex(path)?;
            let (report, status) = f(&k)?;
            Ok((with_input(report, path), status))
        })
        .collect()
}

fn with_input(mut report: Value, path: &Path) -> Value {
    let obj = report.as_object_mut().expect("reports are objects");
    obj.insert("input".into(), json!(path.display().to_string()));
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    report
}

fn complex_json(k: &SimplicialComplex) -> Value {
    serde_json::to_value(k.to_file()).expect("complex file serialises")
}

fn keyed<K: ToString>(map: BTreeMap<K, usize>) -> BTreeMap<String, usize> {
    map.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn node_budget(opts: &Options, m: usize) -> usize {
    opts.budget_nodes.unwrap_or_else(|| VdSolver::default_budget(m))
}

fn vd_report(k: &SimplicialComplex, opts: &Options, with_sequence: bool) -> Result<(Value, Status)> {
    let cert = shedding_sequence_with_budget(k, node_budget(opts, k.m()))?;
    let mut report = json!({ "vertex_decomposable": cert.is_some(), "sequence": Value::Null });
    if with_sequence {
        report["sequence"] = json!(cert.map(|c| c.order));
    }
    Ok((report, Status::Ok))
}

fn sign_strings(crit: &CritSet) -> Vec<String> {
    crit.iter().map(|c| c.to_string()).collect()
}

fn crit_report(k: &SimplicialComplex, opts: &Options, method: Method) -> Result<(Value, Status)> {
    let mut report = json!({ "method": format!("{method:?}").to_lowercase() });
    let recursive = matches!(method, Method::Recursive | Method::Both).then(|| critical_recursive(k));
    let mut status = Status::Ok;
    if matches!(method, Method::Direct | Method::Both) {
        let model = CellModel::moment_angle_with_budget(k, opts.n, opts.budget_cells)?;
        let matching = build_matching(&model);
        let direct = critical_sign_vectors(&model, &matching)?;
        report["acyclic"] = json!(verify_acyclic(&model, &matching));
        if let Some(rec) = &recursive {
            let agree = *rec == direct;
            report["routes_agree"] = json!(agree);
            if !agree {
                status = Status::Mismatch;
            }
        }
        report["critical"] = json!(sign_strings(&direct));
        report["dims"] = json!(keyed(morse_histogram(&direct, opts.n)));
    } else {
        let rec = recursive.expect("recursive route ran");
        report["critical"] = json!(sign_strings(&rec));
        report["dims"] = json!(keyed(morse_histogram(&rec, opts.n)));
    }
    Ok((report, status))
}

fn verify_report(k: &SimplicialComplex, opts: &Options, prime: Prime, relabel: bool) -> Result<(Value, Status)> {
    let t = triangle(k, opts.n, prime, opts.budget_cells, opts.budget_nodes.unwrap_or(DEFAULT_ORDER_BUDGET))?;
    let equal = if relabel { t.equal_compatible() } else { t.equal };
    let status = if !t.hypothesis_met {
        Status::HypothesisNotMet
    } else if equal {
        Status::Ok
    } else {
        Status::Mismatch
    };
    let report = json!({
        "relabel": relabel,
        "triangle": {
            "morse": keyed(t.morse.clone()),
            "oracle": keyed(t.oracle.clone()),
            "wedge": keyed(t.wedge.clone()),
            "equal": t.equal,
            "hypothesis_met": t.hypothesis_met,
            "morse_bounds_oracle": t.morse_bounds_oracle,
            "compatible_order": t.compatible_order,
            "morse_compatible": t.morse_compatible.clone().map(keyed),
            "equal_compatible": t.equal_compatible(),
        },
    });
    Ok((report, status))
}

fn matching_report(file: &Path, dump: Option<&Path>, opts: &Options) -> Result<(Value, Status)> {
    let k = read_complex(file)?;
    let model = CellModel::moment_angle_with_budget(&k, opts.n, opts.budget_cells)?;
    let matching = build_matching(&model);
    let critical = critical_sign_vectors(&model, &matching)?;
    let acyclic = verify_acyclic(&model, &matching);
    let l_violations = l_monotonicity_violations(&model, &matching).len();
    if let Some(path) = dump {
        let edges: Vec<Value> = matching
            .edges()
            .iter()
            .map(|e| {
                json!({
                    "source": model.cell(e.source).to_string(),
                    "target": model.cell(e.target).to_string(),
                    "coordinate": e.coordinate,
                })
            })
            .collect();
        let doc = json!({ "schema_version": SCHEMA_VERSION, "n": opts.n, "m": k.m(), "edges": edges });
        let text = serde_json::to_string_pretty(&doc).expect("edges serialise");
        fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    let report = json!({
        "cells": model.len(),
        "matched_pairs": matching.len(),
        "acyclic": acyclic,
        "l_violations": l_violations,
        "critical": sign_strings(&critical),
        "dims": keyed(morse_histogram(&critical, opts.n)),
        "compatible_order": shedding_compatible_order(&k, opts.budget_nodes.unwrap_or(DEFAULT_ORDER_BUDGET)).ok().flatten(),
    });
    let status = if acyclic && matching.is_valid(&model) { Status::Ok } else { Status::Mismatch };
    Ok((with_input(report, file), status))
}

/// `key: value` lines, nested values in compact JSON.
fn table(report: &Value) -> String {
    let mut out = String::new();
    if let Some(obj) = report.as_object() {
        let width = obj.keys().map(String::len).max().unwrap_or(0);
        for (key, value) in obj {
            let shown = match value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{key:<width$}  {shown}\n"));
        }
    }
    out
}

/// Caps the global rayon pool at `ZKMORSE_THREADS` when set.
pub fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("ZKMORSE_THREADS") {
        let threads: usize = v.parse().map_err(|_| Error::Parse(format!("ZKMORSE_THREADS={v:?} is not a count")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::Invariant(e.to_string()))?;
    }
    Ok(())
}
