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

//! Exact answers on small instances: chromatic index, critical edges,
//! maximum Δ-edge-colorable subgraphs, and probes of open decomposition
//! questions. Every search runs against an explicit [`Budget`]; running out
//! is reported as such and never turned into an answer.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cli::mgf::{parse_mgf, serialize_mgf, MgfError};
use crate::coloring::{Color, EdgeColoring};
use crate::colorizer::{color_exact, color_vizing, degree_sum_order, Budget, EdgeSearch, ExactOutcome, Step};
use crate::decompose::Decomposition;
use crate::graph::{EdgeId, Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("budget exhausted; chromatic index lies in [{lower}, {upper}]")]
    Bracket { lower: usize, upper: usize },
    #[error("search budget exhausted")]
    Exhausted,
    #[error("probe not applicable: {0}")]
    NotApplicable(String),
    #[error("embedded instance: {0}")]
    Instance(#[from] MgfError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub value: usize,
    pub certificate: EdgeColoring,
}

/// `[Δ, min(⌊3Δ/2⌋, Δ + μ)]`.
pub fn chromatic_index_bounds(g: &Multigraph) -> (usize, usize) {
    let delta = g.max_degree();
    (delta, (3 * delta / 2).min(delta + g.multiplicity()))
}

/// χ'(G) by ascending exact search from Δ, with an optimal coloring.
pub fn chromatic_index(g: &Multigraph, budget: &mut Budget) -> Result<ChromaticIndex, OracleError> {
    let (lower, upper) = chromatic_index_bounds(g);
    for k in lower..=upper {
        match color_exact(g, k, budget) {
            ExactOutcome::Found(certificate) => return Ok(ChromaticIndex { value: k, certificate }),
            ExactOutcome::Infeasible => {}
            ExactOutcome::BudgetExhausted => return Err(OracleError::Bracket { lower: k, upper }),
        }
    }
    unreachable!("a {upper}-coloring always exists")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Class {
    #[serde(rename = "CLASS_I")]
    ClassOne,
    #[serde(rename = "CLASS_II")]
    ClassTwo,
}

/// Class and `k = χ' − Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLabel {
    pub class: Class,
    pub k: usize,
}

pub fn classify(g: &Multigraph, chromatic_index: usize) -> ClassLabel {
    let k = chromatic_index - g.max_degree();
    ClassLabel { class: if k == 0 { Class::ClassOne } else { Class::ClassTwo }, k }
}

/// Whether removing `e` lowers the chromatic index.
pub fn is_critical_edge(g: &Multigraph, e: EdgeId, budget: &mut Budget) -> Result<bool, OracleError> {
    let chi = chromatic_index(g, budget)?.value;
    is_critical_edge_given(g, chi, e, budget)
}

/// As [`is_critical_edge`] when χ'(G) is already known.
pub fn is_critical_edge_given(g: &Multigraph, chi: usize, e: EdgeId, budget: &mut Budget) -> Result<bool, OracleError> {
    let (rest, _) = g.remove_edges(&BTreeSet::from([e])).map_err(|_| OracleError::NotApplicable(format!("no edge {e}")))?;
    let lower = chromatic_index(&rest, budget)?.value;
    assert!(lower + 1 >= chi && lower <= chi, "removing one edge moved χ' from {chi} to {lower}");
    Ok(lower < chi)
}

/// A largest Δ(G)-edge-colorable subgraph, as a coloring of `G` whose
/// colored edges form the subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSubgraph {
    pub edges: BTreeSet<EdgeId>,
    pub coloring: EdgeColoring,
    /// False when the budget ran out before optimality was proven.
    pub optimal: bool,
}

/// The `Δ` largest color classes of the `Δ + μ` coloring, renumbered.
pub fn vizing_seed(g: &Multigraph) -> EdgeColoring {
    let delta = g.max_degree();
    let phi = color_vizing(g).expect("Δ + μ colors always suffice");
    let mut classes: Vec<(usize, Color)> = crate::coloring::palette_colors(phi.palette())
        .map(|c| (phi.color_class(c).map(|v| v.len()).unwrap_or(0), c))
        .collect();
    classes.sort_by_key(|&(size, c)| (std::cmp::Reverse(size), c));
    let kept: Vec<Color> = classes.into_iter().take(delta).map(|(_, c)| c).collect();
    phi.recolor(delta, |c| kept.iter().position(|&k| k == c).map(|i| Color(i as u32 + 1)))
}

/// Smallest number of edges that must be dropped for the odd-set bound
/// `|E(S)| <= k ⌊|S|/2⌋` to hold on every vertex set `S`. Only computed for
/// graphs with at most 16 vertices; returns 0 otherwise.
pub fn odd_set_deficit(g: &Multigraph, k: usize) -> usize {
    let n = g.vertex_count();
    if n > 16 {
        return 0;
    }
    let masks: Vec<(u32, u32)> = g.endpoint_pairs().map(|(u, v)| (1 << u, 1 << v)).collect();
    let mut best = 0;
    for set in 1u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size < 3 || size % 2 == 0 {
            continue;
        }
        let inside = masks.iter().filter(|(a, b)| set & a != 0 && set & b != 0).count();
        best = best.max(inside.saturating_sub(k * (size / 2)));
    }
    best
}

/// Finds a `k`-coloring of `g` leaving as few edges uncolored as possible,
/// between `lo` and `hi` of them, where only edges with `optional[e]` may
/// stay uncolored. Edges are decided in id order preferring to color, so
/// the colored set is the lexicographically smallest optimal one.
fn fewest_uncolored(
    g: &Multigraph,
    k: usize,
    optional: Vec<bool>,
    lo: usize,
    hi: usize,
    budget: &mut Budget,
) -> Result<Option<EdgeColoring>, OracleError> {
    for skips in lo..=hi {
        let mut search = EdgeSearch::new(g, k, g.edge_ids().collect(), optional.clone());
        match search.run(skips, budget) {
            Step::Found => return Ok(Some(search.coloring())),
            Step::Fail => {}
            Step::Exhausted => return Err(OracleError::Exhausted),
        }
    }
    Ok(None)
}

/// Exact maximum Δ-edge-colorable subgraph by branch and bound, seeded
/// with [`vizing_seed`]. On budget exhaustion the seed is returned with
/// `optimal = false`.
pub fn max_delta_colorable_subgraph_exact(g: &Multigraph, budget: &mut Budget) -> MaxSubgraph {
    let delta = g.max_degree();
    let seed = vizing_seed(g);
    let worst = g.edge_count() - seed.colored_count();
    let best = odd_set_deficit(g, delta).min(worst);
    match fewest_uncolored(g, delta, vec![true; g.edge_count()], best, worst, budget) {
        Ok(Some(coloring)) => MaxSubgraph { edges: coloring.colored_edges(), coloring, optimal: true },
        Ok(None) => unreachable!("the seed leaves {worst} edges uncolored"),
        Err(_) => MaxSubgraph { edges: seed.colored_edges(), coloring: seed, optimal: false },
    }
}

/// Every maximum matching, each as a sorted edge set, in lexicographic
/// order.
pub fn maximum_matchings(g: &Multigraph, budget: &mut Budget) -> Result<Vec<BTreeSet<EdgeId>>, OracleError> {
    fn rec(
        g: &Multigraph,
        i: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<EdgeId>,
        best: &mut (usize, Vec<BTreeSet<EdgeId>>),
        budget: &mut Budget,
    ) -> Result<(), OracleError> {
        if !budget.tick() {
            return Err(OracleError::Exhausted);
        }
        let free = used.iter().filter(|u| !**u).count();
        if current.len() + free / 2 < best.0 {
            return Ok(());
        }
        if i == g.edge_count() {
            if current.len() > best.0 {
                *best = (current.len(), Vec::new());
            }
            if current.len() == best.0 {
                best.1.push(current.iter().copied().collect());
            }
            return Ok(());
        }
        let e = EdgeId(i);
        let (u, v) = g.endpoints(e);
        if !used[u.0] && !used[v.0] {
            used[u.0] = true;
            used[v.0] = true;
            current.push(e);
            rec(g, i + 1, used, current, best, budget)?;
            current.pop();
            used[u.0] = false;
            used[v.0] = false;
        }
        rec(g, i + 1, used, current, best, budget)
    }
    let mut best = (0, Vec::new());
    rec(g, 0, &mut vec![false; g.vertex_count()], &mut Vec::new(), &mut best, budget)?;
    Ok(best.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "snake_case")]
pub enum Conjecture {
    /// Decomposition into class I parts of maximum degrees `p` and `q`
    /// with `p + q = χ'`.
    Pq { p: usize, q: usize },
    /// Every maximum matching extends to a maximum Δ-colorable subgraph
    /// covering the rest of the edges.
    Matching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeOutcome {
    Verified,
    Counterexample,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCase {
    pub matching: Vec<EdgeId>,
    pub outcome: ProbeOutcome,
    /// The covering subgraph when one was found.
    pub subgraph: Option<Vec<EdgeId>>,
}

/// Outcome of a probe. The embedded instance, parameters and budget are
/// enough to rerun it with [`replay_probe`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub conjecture: Conjecture,
    pub instance: String,
    pub seed: u64,
    pub budget: u64,
    pub nodes: u64,
    pub outcome: ProbeOutcome,
    pub chromatic_index: Option<usize>,
    pub witness: Option<Decomposition>,
    pub max_subgraph_size: Option<usize>,
    pub matchings: Vec<MatchingCase>,
}

impl ProbeReport {
    fn new(conjecture: Conjecture, g: &Multigraph, seed: u64, budget: u64) -> Self {
        ProbeReport {
            conjecture,
            instance: serialize_mgf(g),
            seed,
            budget,
            nodes: 0,
            outcome: ProbeOutcome::BudgetExhausted,
            chromatic_index: None,
            witness: None,
            max_subgraph_size: None,
            matchings: Vec::new(),
        }
    }
}

/// Proper `(p+q)`-colorings with colors `1..=p` forming one part and the
/// rest the other; accepts when some vertex sees all of `1..=p` and some
/// vertex sees all of `p+1..=p+q`. Fresh colors are taken in order within
/// each group.
struct SplitSearch<'a> {
    g: &'a Multigraph,
    p: usize,
    q: usize,
    order: Vec<EdgeId>,
    assign: Vec<u32>,
    busy: Vec<bool>,
    seen1: Vec<usize>,
    seen2: Vec<usize>,
    open: Vec<usize>,
    top1: usize,
    top2: usize,
}

impl<'a> SplitSearch<'a> {
    fn new(g: &'a Multigraph, p: usize, q: usize) -> Self {
        let n = g.vertex_count();
        SplitSearch {
            g,
            p,
            q,
            order: degree_sum_order(g),
            assign: vec![0; g.edge_count()],
            busy: vec![false; n * (p + q + 1)],
            seen1: vec![0; n],
            seen2: vec![0; n],
            open: g.degrees(),
            top1: 0,
            top2: p,
        }
    }

    fn reachable(&self) -> bool {
        let n = self.g.vertex_count();
        (0..n).any(|v| self.seen1[v] + self.open[v] >= self.p) && (0..n).any(|v| self.seen2[v] + self.open[v] >= self.q)
    }

    fn set(&mut self, e: EdgeId, c: usize, on: bool) {
        let (u, v) = self.g.endpoints(e);
        let k = self.p + self.q + 1;
        for w in [u, v] {
            self.busy[w.0 * k + c] = on;
            let seen = if c <= self.p { &mut self.seen1[w.0] } else { &mut self.seen2[w.0] };
            if on {
                *seen += 1;
                self.open[w.0] -= 1;
            } else {
                *seen -= 1;
                self.open[w.0] += 1;
            }
        }
    }

    fn dfs(&mut self, pos: usize, budget: &mut Budget) -> Step {
        if !budget.tick() {
            return Step::Exhausted;
        }
        if !self.reachable() {
            return Step::Fail;
        }
        if pos == self.order.len() {
            return Step::Found;
        }
        let e = self.order[pos];
        let (u, v) = self.g.endpoints(e);
        let k = self.p + self.q + 1;
        let group1 = 1..=self.p.min(self.top1 + 1);
        let group2 = self.p + 1..=(self.p + self.q).min(self.top2 + 1);
        for c in group1.chain(group2) {
            if self.busy[u.0 * k + c] || self.busy[v.0 * k + c] {
                continue;
            }
            let saved = (self.top1, self.top2);
            if c <= self.p {
                self.top1 = self.top1.max(c);
            } else {
                self.top2 = self.top2.max(c);
            }
            self.assign[e.0] = c as u32;
            self.set(e, c, true);
            match self.dfs(pos + 1, budget) {
                Step::Fail => {}
                done => return done,
            }
            self.set(e, c, false);
            self.assign[e.0] = 0;
            (self.top1, self.top2) = saved;
        }
        Step::Fail
    }
}

/// Exhaustive search for a decomposition into class I subgraphs with
/// maximum degrees `p` and `q`, where `p + q` is the chromatic index.
/// `Ok(None)` means no such decomposition exists.
pub fn search_class_one_split(
    g: &Multigraph,
    p: usize,
    q: usize,
    budget: &mut Budget,
) -> Result<Option<Decomposition>, OracleError> {
    let mut search = SplitSearch::new(g, p, q);
    match search.dfs(0, budget) {
        Step::Found => {
            let colors = search.assign.iter().map(|&c| Some(Color(c))).collect();
            let phi = EdgeColoring::from_colors(p + q, colors);
            Ok(Some(Decomposition::from_palette_split(g, &phi, p)))
        }
        Step::Fail => Ok(None),
        Step::Exhausted => Err(OracleError::Exhausted),
    }
}

/// Checks whether `g` splits into class I subgraphs with maximum degrees
/// `p` and `q`, for `p + q = χ'(G)`, `1 <= p, q <= Δ` and `G` class II.
pub fn probe_conjecture_pq(g: &Multigraph, p: usize, q: usize, limit: u64, seed: u64) -> Result<ProbeReport, OracleError> {
    let mut budget = Budget::new(limit);
    let mut report = ProbeReport::new(Conjecture::Pq { p, q }, g, seed, limit);
    let chi = match chromatic_index(g, &mut budget) {
        Ok(chi) => chi.value,
        Err(_) => {
            report.nodes = budget.used();
            return Ok(report);
        }
    };
    report.chromatic_index = Some(chi);
    let delta = g.max_degree();
    if chi == delta {
        return Err(OracleError::NotApplicable("graph is class I".into()));
    }
    if p + q != chi || p == 0 || q == 0 || p > delta || q > delta {
        return Err(OracleError::NotApplicable(format!("need p + q = {chi} with 1 <= p, q <= {delta}, got ({p}, {q})")));
    }
    report.outcome = match search_class_one_split(g, p, q, &mut budget) {
        Ok(Some(d)) => {
            report.witness = Some(d);
            ProbeOutcome::Verified
        }
        Ok(None) => ProbeOutcome::Counterexample,
        Err(_) => ProbeOutcome::BudgetExhausted,
    };
    report.nodes = budget.used();
    Ok(report)
}

/// For every maximum matching `M`, looks for a maximum Δ-colorable subgraph
/// `H` with `M ∪ E(H) = E(G)`. Applies to simple graphs and to regular
/// graphs with `χ' = Δ + 1`.
pub fn probe_matching_cover(g: &Multigraph, limit: u64, seed: u64) -> Result<ProbeReport, OracleError> {
    let mut budget = Budget::new(limit);
    let mut report = ProbeReport::new(Conjecture::Matching, g, seed, limit);
    let finish = |mut report: ProbeReport, budget: &Budget| {
        report.nodes = budget.used();
        Ok(report)
    };
    if !g.is_simple() {
        let regular = g.min_degree() == g.max_degree();
        let chi = match chromatic_index(g, &mut budget) {
            Ok(chi) => chi.value,
            Err(_) => return finish(report, &budget),
        };
        report.chromatic_index = Some(chi);
        if !(regular && chi == g.max_degree() + 1) {
            return Err(OracleError::NotApplicable("needs a simple graph or a regular graph with χ' = Δ + 1".into()));
        }
    }
    let max = max_delta_colorable_subgraph_exact(g, &mut budget);
    if !max.optimal {
        return finish(report, &budget);
    }
    let size = max.edges.len();
    report.max_subgraph_size = Some(size);
    let matchings = match maximum_matchings(g, &mut budget) {
        Ok(all) => all,
        Err(_) => return finish(report, &budget),
    };
    let skips = g.edge_count() - size;
    for matching in matchings {
        let optional: Vec<bool> = g.edge_ids().map(|e| matching.contains(&e)).collect();
        let case = match fewest_uncolored(g, g.max_degree(), optional, skips, skips, &mut budget) {
            Ok(Some(h)) => MatchingCase {
                matching: matching.iter().copied().collect(),
                outcome: ProbeOutcome::Verified,
                subgraph: Some(h.colored_edges().into_iter().collect()),
            },
            Ok(None) => MatchingCase { matching: matching.iter().copied().collect(), outcome: ProbeOutcome::Counterexample, subgraph: None },
            Err(_) => {
                MatchingCase { matching: matching.iter().copied().collect(), outcome: ProbeOutcome::BudgetExhausted, subgraph: None }
            }
        };
        let stop = case.outcome == ProbeOutcome::BudgetExhausted;
        report.matchings.push(case);
        if stop {
            break;
        }
    }
    report.outcome = if report.matchings.iter().any(|c| c.outcome == ProbeOutcome::Counterexample) {
        ProbeOutcome::Counterexample
    } else if report.matchings.iter().any(|c| c.outcome == ProbeOutcome::BudgetExhausted) {
        ProbeOutcome::BudgetExhausted
    } else {
        ProbeOutcome::Verified
    };
    finish(report, &budget)
}

/// Reruns a probe from its embedded instance and parameters; true when the
/// fresh run reproduces the report exactly.
pub fn replay_probe(report: &ProbeReport) -> Result<bool, OracleError> {
    let g = parse_mgf(&report.instance)?;
    let fresh = match report.conjecture {
        Conjecture::Pq { p, q } => probe_conjecture_pq(&g, p, q, report.budget, report.seed)?,
        Conjecture::Matching => probe_matching_cover(&g, report.budget, report.seed)?,
    };
    Ok(&fresh == report)
}

/// Vertices whose degree equals Δ.
pub fn max_degree_vertices(g: &Multigraph) -> Vec<VertexId> {
    g.vertices_of_degree_at_least(g.max_degree().max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{complete, make_shannon, petersen};

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn small_chromatic_indices() {
        assert_eq!(chromatic_index(&complete(3), &mut budget()).unwrap().value, 3);
        assert_eq!(chromatic_index(&petersen(), &mut budget()).unwrap().value, 4);
        for (d, chi) in [(3, 4), (4, 6), (5, 7)] {
            let g = make_shannon(d).unwrap();
            let found = chromatic_index(&g, &mut budget()).unwrap();
            assert_eq!(found.value, chi);
            assert_eq!(found.certificate.validate(&g), Ok(()));
        }
    }

    #[test]
    fn bracket_on_exhaustion() {
        let err = chromatic_index(&petersen(), &mut Budget::new(3)).unwrap_err();
        assert_eq!(err, OracleError::Bracket { lower: 3, upper: 4 });
    }

    #[test]
    fn classes() {
        assert_eq!(classify(&complete(3), 3), ClassLabel { class: Class::ClassTwo, k: 1 });
        assert_eq!(classify(&complete(4), 3), ClassLabel { class: Class::ClassOne, k: 0 });
    }

    #[test]
    fn critical_edges() {
        let k3 = complete(3);
        assert!(is_critical_edge(&k3, EdgeId(1), &mut budget()).unwrap());
        let s4 = make_shannon(4).unwrap();
        assert!(s4.edge_ids().all(|e| is_critical_edge(&s4, e, &mut budget()).unwrap()));
        // K4 is class I; deleting an edge leaves two vertices of degree 3
        let k4 = complete(4);
        assert!(!is_critical_edge(&k4, EdgeId(0), &mut budget()).unwrap());
    }

    #[test]
    fn max_subgraphs() {
        let k3 = max_delta_colorable_subgraph_exact(&complete(3), &mut budget());
        assert!(k3.optimal);
        assert_eq!(k3.edges, BTreeSet::from([EdgeId(0), EdgeId(1)]));
        let s4 = max_delta_colorable_subgraph_exact(&make_shannon(4).unwrap(), &mut budget());
        assert_eq!(s4.edges.len(), 4);
        assert_eq!(s4.coloring.palette(), 4);
    }

    #[test]
    fn odd_set_bound() {
        // S_4: six edges on three vertices, two fit per color... Δ·1 = 4
        assert_eq!(odd_set_deficit(&make_shannon(4).unwrap(), 4), 2);
        assert_eq!(odd_set_deficit(&petersen(), 3), 0);
    }

    #[test]
    fn matchings_of_triangle() {
        let all = maximum_matchings(&complete(3), &mut budget()).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|m| m.len() == 1));
    }

    #[test]
    fn pq_probe_triangle() {
        let r = probe_conjecture_pq(&complete(3), 2, 1, 1_000_000, 0).unwrap();
        assert_eq!(r.outcome, ProbeOutcome::Verified);
        assert!(replay_probe(&r).unwrap());
        assert!(probe_conjecture_pq(&complete(3), 3, 0, 1_000, 0).is_err());
        assert!(probe_conjecture_pq(&complete(4), 2, 1, 1_000, 0).is_err());
    }

    #[test]
    fn matching_probe_triangle() {
        let r = probe_matching_cover(&complete(3), 1_000_000, 0).unwrap();
        assert_eq!(r.outcome, ProbeOutcome::Verified);
        assert_eq!(r.matchings.len(), 3);
        assert_eq!(r.max_subgraph_size, Some(2));
        assert!(probe_matching_cover(&make_shannon(4).unwrap(), 1_000, 0).is_err());
    }
}
