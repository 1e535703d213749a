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

//! Decompositions of class II multigraphs into two edge-disjoint parts.
//!
//! - [`split_by_missing_pair`] and [`split_minimal_class`] split a total
//!   coloring along the colors present at one vertex.
//! - [`normalize_max_subgraph`] and [`eliminate_odd_cycles`] turn a maximum
//!   Δ-colorable subgraph into one whose remainder has maximum degree at
//!   most μ, and for `μ <= 2`, `χ' = Δ + μ` is itself class I.
//! - [`decompose_class1_pair`] produces class I parts with maximum degrees
//!   Δ and `k = χ' − Δ`, driving [`reduce_missing_overlap`] where needed.
//!
//! Every iterative step keeps a strictly decreasing counter; a step that
//! fails to decrease it is reported as [`DecomposeError::Descent`] rather
//! than retried.

mod descent;
mod overlap;
mod pair;
mod split;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, ColoringError, EdgeColoring};
use crate::fans::FanError;
use crate::graph::{EdgeId, GraphError, Multigraph};
use crate::oracle::OracleError;

pub use descent::{
    count_odd_cycles, decompose_maxsub, eliminate_odd_cycles, normalize_max_subgraph, remainder_potential, DescentState,
};
pub use overlap::{clear_missing_overlap, reduce_missing_overlap, PassTrace};
pub use pair::{decompose_class1_pair, decompose_class1_pair_with, PairOptions};
pub use split::{split_by_missing_pair, split_minimal_class};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph is class I")]
    ClassOne,
    #[error("color {0} is missing at both vertices")]
    SharedMissing(Color),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{what}; trace: {trace}")]
    Descent { what: String, trace: String },
    #[error("structure check failed: {0}")]
    Structure(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid decomposition: {0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Unverified,
    Verified,
    /// Built from a heuristic starting subgraph whose maximality is unknown.
    NonCertified,
}

/// Counter values recorded along a run, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentLog {
    /// |E_1| before each recoloring and at the fixpoint.
    pub class_sizes: Vec<usize>,
    /// t(H_2) before each exchange and at the end.
    pub potentials: Vec<usize>,
    /// Odd cycles of H_2 before each exchange and at the end.
    pub odd_cycles: Vec<usize>,
    pub overlap_passes: Vec<PassTrace>,
    /// Colour classes peeled off before the final split.
    pub peeled: usize,
    /// Set when the decomposition came from exhaustive search.
    pub fallback: bool,
}

/// Two edge-disjoint parts covering `E(G)`, each with a proper coloring of
/// exactly its edges. A part declared class I carries a coloring with as
/// many colors as its maximum degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub part1: Vec<EdgeId>,
    pub part2: Vec<EdgeId>,
    pub certificate1: EdgeColoring,
    pub certificate2: EdgeColoring,
    /// Declared maximum degrees of the parts.
    pub targets: [usize; 2],
    pub class_one: [bool; 2],
    pub status: Status,
    pub log: DescentLog,
}

/// Facts recomputed from a decomposition by [`check_decomposition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartFacts {
    pub max_degree: usize,
    pub colors: usize,
    pub edges: usize,
}

fn part_degree(g: &Multigraph, part: &[EdgeId]) -> usize {
    let mut deg = vec![0; g.vertex_count()];
    for &e in part {
        let (u, v) = g.endpoints(e);
        deg[u.0] += 1;
        deg[v.0] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

impl Decomposition {
    /// Splits a coloring by palette: colors `1..=p` form the first part and
    /// the rest, renumbered from 1, the second.
    pub fn from_palette_split(g: &Multigraph, phi: &EdgeColoring, p: usize) -> Decomposition {
        let k = phi.palette();
        let low = phi.recolor(p, |c| (c.get() <= p).then_some(c));
        let high = phi.recolor(k - p, |c| (c.get() > p).then(|| Color(c.0 - p as u32)));
        let part1: Vec<EdgeId> = low.colored_edges().into_iter().collect();
        let part2: Vec<EdgeId> = high.colored_edges().into_iter().collect();
        let targets = [part_degree(g, &part1), part_degree(g, &part2)];
        Decomposition {
            class_one: [targets[0] == p, targets[1] == k - p],
            part1,
            part2,
            certificate1: low,
            certificate2: high,
            targets,
            status: Status::Unverified,
            log: DescentLog::default(),
        }
    }

    /// Builds a decomposition from two certificates; the parts are their
    /// colored edges.
    pub fn from_certificates(g: &Multigraph, certificate1: EdgeColoring, certificate2: EdgeColoring) -> Decomposition {
        let part1: Vec<EdgeId> = certificate1.colored_edges().into_iter().collect();
        let part2: Vec<EdgeId> = certificate2.colored_edges().into_iter().collect();
        let targets = [part_degree(g, &part1), part_degree(g, &part2)];
        Decomposition {
            class_one: [certificate1.palette() == targets[0], certificate2.palette() == targets[1]],
            part1,
            part2,
            certificate1,
            certificate2,
            targets,
            status: Status::Unverified,
            log: DescentLog::default(),
        }
    }

    pub fn part_sets(&self) -> (BTreeSet<EdgeId>, BTreeSet<EdgeId>) {
        (self.part1.iter().copied().collect(), self.part2.iter().copied().collect())
    }
}

/// Checks that the parts partition `E(G)`, that each certificate is proper
/// and colors exactly its part, that the declared maximum degrees are the
/// actual ones, and that a part declared class I is colored with that many
/// colors. Returns the recomputed per-part facts.
pub fn check_decomposition(g: &Multigraph, d: &Decomposition) -> Result<[PartFacts; 2], DecomposeError> {
    let invalid = |msg: String| Err(DecomposeError::Invalid(msg));
    let m = g.edge_count();
    let mut owner = vec![0u8; m];
    for (i, part) in [&d.part1, &d.part2].into_iter().enumerate() {
        for &e in part {
            if e.0 >= m {
                return invalid(format!("part {} names unknown edge {e}", i + 1));
            }
            if owner[e.0] != 0 {
                return invalid(format!("edge {e} appears in both parts or twice"));
            }
            owner[e.0] = i as u8 + 1;
        }
    }
    if let Some(e) = owner.iter().position(|&o| o == 0) {
        return invalid(format!("edge e{e} is in neither part"));
    }
    let mut facts = [PartFacts { max_degree: 0, colors: 0, edges: 0 }; 2];
    for (i, (part, cert)) in [(&d.part1, &d.certificate1), (&d.part2, &d.certificate2)].into_iter().enumerate() {
        if cert.edge_count() != m {
            return invalid(format!("certificate {} has {} edges, graph has {m}", i + 1, cert.edge_count()));
        }
        if let Err(v) = cert.validate(g) {
            return invalid(format!("certificate {} is not proper: {v}", i + 1));
        }
        let colored: Vec<EdgeId> = cert.colored_edges().into_iter().collect();
        let mut sorted = part.clone();
        sorted.sort();
        if colored != sorted {
            return invalid(format!("certificate {} does not color exactly part {}", i + 1, i + 1));
        }
        let degree = part_degree(g, part);
        if degree != d.targets[i] {
            return invalid(format!("part {} has maximum degree {degree}, declared {}", i + 1, d.targets[i]));
        }
        if d.class_one[i] && cert.palette() != degree {
            return invalid(format!("part {} declared class I but colored with {} colors", i + 1, cert.palette()));
        }
        facts[i] = PartFacts { max_degree: degree, colors: cert.palette(), edges: part.len() };
    }
    Ok(facts)
}

/// Renders a counter sequence for error traces.
fn trace_of<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap_or_default()
}
