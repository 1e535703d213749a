// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `mgcolor` command: argument parsing, JSON reports and report
//! verification.
//!
//! Every subcommand prints one [`Report`]. Its `verification` block is
//! always recomputed from the payload against the input graph, never
//! copied from the computation that produced the payload, so `verify` can
//! rebuild it from a saved report and compare.

pub mod mgf;

use std::path::{Path, PathBuf};

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::colorizer::{color_exact, color_vizing, Budget, ExactOutcome, DEFAULT_BUDGET};
use crate::decompose::{
    check_decomposition, decompose_class1_pair, decompose_maxsub, split_minimal_class, DecomposeError, Decomposition,
    Status,
};
use crate::graph::Multigraph;
use crate::oracle::{
    chromatic_index, classify, max_delta_colorable_subgraph_exact, probe_conjecture_pq, probe_matching_cover,
    replay_probe, Class, OracleError, ProbeOutcome, ProbeReport,
};
use crate::structures::{make_shannon, make_t, petersen, random_multigraph};

use self::mgf::{digest, parse_mgf, serialize_mgf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mgcolor", version, about = "Edge coloring and decomposition of multigraphs")]
pub struct Cli {
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search node limit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Compact JSON output; `--json false` pretty-prints, and prints MGF
    /// text for `gen`.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic index with an optimal coloring.
    Chi { file: PathBuf },
    /// A proper coloring with `--k` colors, or with Δ + μ colors if omitted.
    Color {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Decompose a class II graph into two parts.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Start `maxsub` from color classes instead of the exact optimum.
        #[arg(long)]
        heuristic: bool,
    },
    /// Probe a decomposition conjecture on one graph.
    Probe {
        file: PathBuf,
        #[arg(long, value_enum)]
        conjecture: ConjectureArg,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Recheck every claim of a saved report against a graph.
    Verify { file: PathBuf, report: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Split,
    Maxsub,
    Pair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConjectureArg {
    Pq,
    Matching,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    Shannon {
        #[arg(long)]
        d: usize,
    },
    T {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    Petersen,
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        mu: usize,
    },
}

/// Oracle facts about the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facts {
    pub delta: usize,
    pub mu: usize,
    pub chromatic_index: Option<usize>,
    pub k: Option<usize>,
    pub class: Option<Class>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    ChromaticIndex { value: usize, coloring: EdgeColoring },
    Coloring { colors: usize, coloring: Option<EdgeColoring> },
    Decomposition { mode: Mode, decomposition: Decomposition },
    Probe { report: ProbeReport },
    Graph { mgf: String },
    Verify { report_command: String, violations: Vec<String> },
    Error { error: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartCheck {
    pub edges: usize,
    pub max_degree: usize,
    pub chromatic_index: Option<usize>,
}

/// Final values of the descent counters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub class_size: Option<usize>,
    pub potential: Option<usize>,
    pub odd_cycles: Option<usize>,
    pub overlap_passes: usize,
    pub max_aux_swaps: usize,
    pub monotone: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub valid: bool,
    pub violations: Vec<String>,
    pub colors_used: Option<usize>,
    pub parts: Vec<PartCheck>,
    pub counters: Option<Counters>,
    pub max_subgraph_size: Option<usize>,
    pub replayed: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetUse {
    pub limit: u64,
    pub consumed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input_digest: Option<String>,
    pub facts: Option<Facts>,
    pub payload: Payload,
    pub verification: Option<Verification>,
    pub seed: u64,
    pub budget: BudgetUse,
}

/// A failed command: exit code plus the error payload.
struct Failure {
    code: i32,
    error: &'static str,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: EXIT_INPUT, error: "input", message: message.to_string() }
    }
}

impl From<OracleError> for Failure {
    fn from(err: OracleError) -> Self {
        match err {
            OracleError::Bracket { .. } | OracleError::Exhausted => {
                Failure { code: EXIT_BUDGET, error: "budget_exhausted", message: err.to_string() }
            }
            other => Failure::input(other),
        }
    }
}

impl From<DecomposeError> for Failure {
    fn from(err: DecomposeError) -> Self {
        match err {
            DecomposeError::Oracle(inner) => inner.into(),
            DecomposeError::Descent { .. } => Failure { code: EXIT_INPUT, error: "descent", message: err.to_string() },
            other => Failure::input(other),
        }
    }
}

fn read_graph(path: &Path) -> Result<(Multigraph, String), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let g = parse_mgf(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let d = digest(&g);
    Ok((g, d))
}

fn facts(g: &Multigraph, budget: &mut Budget) -> Facts {
    let chi = chromatic_index(g, budget).ok().map(|c| c.value);
    let label = chi.map(|c| classify(g, c));
    Facts {
        delta: g.max_degree(),
        mu: g.multiplicity(),
        chromatic_index: chi,
        k: label.map(|l| l.k),
        class: label.map(|l| l.class),
    }
}

fn counters(d: &Decomposition) -> Counters {
    let strictly_down = |v: &[usize]| v.windows(2).all(|w| w[1] < w[0]);
    let odd_ok = d.log.odd_cycles.windows(2).all(|w| w[1] + 1 == w[0]);
    let passes_ok = d.log.overlap_passes.iter().all(|p| p.after < p.before && p.aux_swaps() <= 3);
    Counters {
        class_size: d.log.class_sizes.last().copied(),
        potential: d.log.potentials.last().copied(),
        odd_cycles: d.log.odd_cycles.last().copied(),
        overlap_passes: d.log.overlap_passes.len(),
        max_aux_swaps: d.log.overlap_passes.iter().map(|p| p.aux_swaps()).max().unwrap_or(0),
        monotone: strictly_down(&d.log.class_sizes) && strictly_down(&d.log.potentials) && odd_ok && passes_ok,
    }
}

/// Recomputes the verification block of a payload against `g`, with a
/// fresh budget of `limit` nodes.
pub fn verify_payload(g: &Multigraph, payload: &Payload, limit: u64) -> Verification {
    let mut budget = Budget::new(limit);
    let mut v = Verification::default();
    let delta = g.max_degree();
    match payload {
        Payload::ChromaticIndex { value, coloring } => {
            check_coloring(g, coloring, &mut v);
            if coloring.palette() != *value {
                v.violations.push(format!("certificate palette {} differs from χ' = {value}", coloring.palette()));
            }
            match chromatic_index(g, &mut budget) {
                Ok(chi) if chi.value != *value => v.violations.push(format!("χ' is {}, report says {value}", chi.value)),
                Ok(_) => {}
                Err(e) => v.violations.push(format!("could not recompute χ': {e}")),
            }
        }
        Payload::Coloring { colors, coloring } => {
            if let Some(coloring) = coloring {
                check_coloring(g, coloring, &mut v);
                if coloring.palette() > *colors {
                    v.violations.push(format!("coloring uses palette {} above {colors}", coloring.palette()));
                }
            } else if *colors >= delta + g.multiplicity() {
                v.violations.push(format!("{colors} colors always suffice"));
            } else if let ExactOutcome::Found(_) = color_exact(g, *colors, &mut budget) {
                v.violations.push(format!("a {colors}-coloring exists"));
            }
        }
        Payload::Decomposition { mode, decomposition } => verify_decomposition(g, *mode, decomposition, &mut budget, &mut v),
        Payload::Probe { report } => {
            if report.instance != serialize_mgf(g) {
                v.violations.push("probe instance differs from the input graph".into());
            }
            match replay_probe(report) {
                Ok(same) => {
                    v.replayed = Some(same);
                    if !same {
                        v.violations.push("probe does not replay".into());
                    }
                }
                Err(e) => v.violations.push(format!("probe replay failed: {e}")),
            }
        }
        Payload::Graph { mgf } => match parse_mgf(mgf) {
            Ok(h) if h == *g => {}
            Ok(_) => v.violations.push("generated graph differs from the input graph".into()),
            Err(e) => v.violations.push(format!("generated graph does not parse: {e}")),
        },
        Payload::Verify { .. } | Payload::Error { .. } => v.violations.push("nothing to verify".into()),
    }
    v.valid = v.violations.is_empty();
    v
}

fn check_coloring(g: &Multigraph, coloring: &EdgeColoring, v: &mut Verification) {
    if let Err(err) = coloring.validate(g) {
        v.violations.push(format!("coloring is not proper: {err}"));
    }
    if !coloring.is_total() {
        v.violations.push(format!("{} edges are uncolored", coloring.uncolored_edges().len()));
    }
    v.colors_used = Some(coloring.used_color_count());
}

fn verify_decomposition(g: &Multigraph, mode: Mode, d: &Decomposition, budget: &mut Budget, v: &mut Verification) {
    let facts = match check_decomposition(g, d) {
        Ok(f) => f,
        Err(e) => {
            v.violations.push(e.to_string());
            return;
        }
    };
    let (p1, p2) = d.part_sets();
    for (part, fact) in [(p1, facts[0]), (p2, facts[1])] {
        let chi = g.edge_subgraph(&part).ok().and_then(|(sub, _)| chromatic_index(&sub, budget).ok()).map(|c| c.value);
        v.parts.push(PartCheck { edges: fact.edges, max_degree: fact.max_degree, chromatic_index: chi });
    }
    let c = counters(d);
    if !c.monotone {
        v.violations.push("descent counters are not strictly decreasing".into());
    }
    v.counters = Some(c);
    let delta = g.max_degree();
    let mu = g.multiplicity();
    let chi = chromatic_index(g, budget).map(|c| c.value);
    let Ok(chi) = chi else {
        v.violations.push("could not recompute χ'".into());
        return;
    };
    let class_one = |i: usize, v: &mut Verification| {
        if v.parts[i].chromatic_index != Some(v.parts[i].max_degree) {
            v.violations.push(format!("part {} is not class I", i + 1));
        }
    };
    match mode {
        Mode::Pair => {
            if d.targets != [delta, chi - delta] {
                v.violations.push(format!("maximum degrees {:?}, expected [{delta}, {}]", d.targets, chi - delta));
            }
            class_one(0, v);
            class_one(1, v);
        }
        Mode::Split => {
            class_one(0, v);
            class_one(1, v);
        }
        Mode::Maxsub => {
            if d.certificate1.palette() != delta {
                v.violations.push(format!("first part is colored with {} colors, Δ = {delta}", d.certificate1.palette()));
            }
            if d.targets[1] > mu {
                v.violations.push(format!("remainder has maximum degree {} above μ = {mu}", d.targets[1]));
            }
            if d.status != Status::NonCertified {
                let max = max_delta_colorable_subgraph_exact(g, budget);
                if !max.optimal {
                    v.violations.push("could not recompute the maximum Δ-colorable size".into());
                } else if max.edges.len() != d.part1.len() {
                    v.violations.push(format!("first part has {} edges, maximum is {}", d.part1.len(), max.edges.len()));
                }
                v.max_subgraph_size = Some(max.edges.len());
                if mu <= 2 && chi == delta + mu && !(d.targets[1] == mu && v.parts[1].chromatic_index == Some(mu)) {
                    v.violations.push(format!("remainder is not class I of maximum degree μ = {mu}"));
                }
            }
        }
    }
}

fn render(report: &Report, json: bool) -> String {
    let body = if json { serde_json::to_string(report) } else { serde_json::to_string_pretty(report) };
    body.expect("reports serialize") + "\n"
}

fn execute(cli: &Cli, budget: &mut Budget) -> Result<(i32, Report), Failure> {
    let mut report = Report {
        command: String::new(),
        input_digest: None,
        facts: None,
        payload: Payload::Error { error: String::new(), message: String::new() },
        verification: None,
        seed: cli.seed,
        budget: BudgetUse { limit: cli.budget, consumed: 0 },
    };
    let mut code = EXIT_OK;
    match &cli.command {
        Command::Chi { file } => {
            report.command = "chi".into();
            let (g, d) = read_graph(file)?;
            report.input_digest = Some(d);
            let chi = chromatic_index(&g, budget)?;
            report.facts = Some(facts(&g, &mut Budget::new(cli.budget)));
            report.payload = Payload::ChromaticIndex { value: chi.value, coloring: chi.certificate };
            report.verification = Some(verify_payload(&g, &report.payload, cli.budget));
        }
        Command::Color { file, k } => {
            report.command = "color".into();
            let (g, d) = read_graph(file)?;
            report.input_digest = Some(d);
            report.facts = Some(facts(&g, &mut Budget::new(cli.budget)));
            let (colors, coloring) = match k {
                None => {
                    let phi = color_vizing(&g).map_err(Failure::input)?;
                    (phi.palette(), Some(phi))
                }
                Some(k) => match color_exact(&g, *k, budget) {
                    ExactOutcome::Found(phi) => (*k, Some(phi)),
                    ExactOutcome::Infeasible => (*k, None),
                    ExactOutcome::BudgetExhausted => return Err(OracleError::Exhausted.into()),
                },
            };
            report.payload = Payload::Coloring { colors, coloring };
            report.verification = Some(verify_payload(&g, &report.payload, cli.budget));
        }
        Command::Decompose { file, mode, heuristic } => {
            report.command = "decompose".into();
            let (g, d) = read_graph(file)?;
            report.input_digest = Some(d);
            report.facts = Some(facts(&g, &mut Budget::new(cli.budget)));
            let decomposition = match mode {
                Mode::Split => split_minimal_class(&g, budget)?,
                Mode::Maxsub => decompose_maxsub(&g, budget, *heuristic)?,
                Mode::Pair => decompose_class1_pair(&g, budget)?,
            };
            report.payload = Payload::Decomposition { mode: *mode, decomposition };
            let v = verify_payload(&g, &report.payload, cli.budget);
            if !v.valid {
                code = EXIT_INPUT;
            }
            report.verification = Some(v);
        }
        Command::Probe { file, conjecture, p, q } => {
            report.command = "probe".into();
            let (g, d) = read_graph(file)?;
            report.input_digest = Some(d);
            report.facts = Some(facts(&g, &mut Budget::new(cli.budget)));
            let probe = match conjecture {
                ConjectureArg::Pq => {
                    let (Some(p), Some(q)) = (p, q) else {
                        return Err(Failure::input("--conjecture pq needs --p and --q"));
                    };
                    probe_conjecture_pq(&g, *p, *q, cli.budget, cli.seed)?
                }
                ConjectureArg::Matching => probe_matching_cover(&g, cli.budget, cli.seed)?,
            };
            budget.charge(probe.nodes);
            code = match probe.outcome {
                ProbeOutcome::Verified => EXIT_OK,
                ProbeOutcome::Counterexample => EXIT_COUNTEREXAMPLE,
                ProbeOutcome::BudgetExhausted => EXIT_BUDGET,
            };
            report.payload = Payload::Probe { report: probe };
            report.verification = Some(verify_payload(&g, &report.payload, cli.budget));
        }
        Command::Gen { family } => {
            report.command = "gen".into();
            let g = match family {
                Family::Shannon { d } => make_shannon(*d),
                Family::T { r, s, t } => make_t(*r, *s, *t),
                Family::Petersen => Ok(petersen()),
                Family::Random { n, m, mu } => random_multigraph(*n, *m, *mu, &mut ChaCha8Rng::seed_from_u64(cli.seed)),
            }
            .map_err(Failure::input)?;
            report.input_digest = Some(digest(&g));
            report.payload = Payload::Graph { mgf: serialize_mgf(&g) };
        }
        Command::Verify { file, report: path } => {
            report.command = "verify".into();
            let (g, d) = read_graph(file)?;
            let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let saved: Report = serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let mut violations = Vec::new();
            if saved.input_digest.as_deref() != Some(d.as_str()) {
                violations.push("input digest does not match the graph".to_string());
            } else {
                let fresh = verify_payload(&g, &saved.payload, saved.budget.limit);
                violations.extend(fresh.violations.iter().cloned());
                if saved.verification.as_ref() != Some(&fresh) && saved.command != "gen" {
                    violations.push("verification block differs from its recomputation".into());
                }
                if let Some(f) = &saved.facts {
                    let recomputed = facts(&g, &mut Budget::new(saved.budget.limit));
                    if *f != recomputed {
                        violations.push("oracle facts differ from their recomputation".into());
                    }
                }
            }
            report.input_digest = Some(d);
            if !violations.is_empty() {
                code = EXIT_INPUT;
            }
            report.payload = Payload::Verify { report_command: saved.command, violations };
        }
    }
    Ok((code, report))
}

/// Runs one command line; returns the exit code and the text for standard
/// output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return (code, err.to_string());
        }
    };
    let mut budget = Budget::new(cli.budget);
    let (code, mut report) = match execute(&cli, &mut budget) {
        Ok(done) => done,
        Err(f) => {
            let report = Report {
                command: command_name(&cli.command).into(),
                input_digest: None,
                facts: None,
                payload: Payload::Error { error: f.error.into(), message: f.message },
                verification: None,
                seed: cli.seed,
                budget: BudgetUse { limit: cli.budget, consumed: 0 },
            };
            (f.code, report)
        }
    };
    report.budget.consumed = budget.used();
    if !cli.json {
        if let Payload::Graph { mgf } = &report.payload {
            return (code, mgf.clone());
        }
    }
    (code, render(&report, cli.json))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Chi { .. } => "chi",
        Command::Color { .. } => "color",
        Command::Decompose { .. } => "decompose",
        Command::Probe { .. } => "probe",
        Command::Gen { .. } => "gen",
        Command::Verify { .. } => "verify",
    }
}
