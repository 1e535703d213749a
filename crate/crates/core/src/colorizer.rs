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

//! Producing proper edge colorings.
//!
//! [`color_exact`] decides `χ'(G) <= K` by backtracking and is meant for
//! small instances. [`color_vizing`] colors any graph with `Δ + μ` colors by
//! inserting one edge at a time through multi-fan shifting and Kempe swaps.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{kempe_chain, kempe_swap, Color, ColorSet, EdgeColoring};
use crate::fans::{build_maximal_multifan, extract_linear_sequence, shift, FanError, MultiFan};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Default node limit for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A count of search nodes that may still be expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    limit: u64,
    used: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exhausted")]
pub struct Exhausted {
    pub limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Spends one node; false once the limit is reached.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.used >= self.limit {
            return false;
        }
        self.used += 1;
        true
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.limit - self.used
    }

    /// Records nodes spent by a search that ran on its own budget.
    pub fn charge(&mut self, nodes: u64) {
        self.used = self.used.saturating_add(nodes).min(self.limit);
    }

    pub fn exhausted(&self) -> Exhausted {
        Exhausted { limit: self.limit }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactOutcome {
    Found(EdgeColoring),
    Infeasible,
    BudgetExhausted,
}

impl ExactOutcome {
    pub fn found(self) -> Option<EdgeColoring> {
        match self {
            ExactOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorizeError {
    #[error("no progress inserting {edge}; partial coloring {dump}")]
    Stalled { edge: EdgeId, dump: String },
    #[error(transparent)]
    Fan(#[from] FanError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Found,
    Fail,
    Exhausted,
}

/// Backtracking over edges in a fixed order. Each edge takes a color free at
/// both ends; a color not used so far may only be the smallest unused one.
/// Edges flagged skippable may instead be left uncolored, at most
/// `skips` of them.
pub(crate) struct EdgeSearch<'a> {
    g: &'a Multigraph,
    k: usize,
    order: Vec<EdgeId>,
    skippable: Vec<bool>,
    busy: Vec<bool>,
    assign: Vec<u32>,
    decided: Vec<bool>,
    max_used: usize,
}

impl<'a> EdgeSearch<'a> {
    pub(crate) fn new(g: &'a Multigraph, k: usize, order: Vec<EdgeId>, skippable: Vec<bool>) -> Self {
        EdgeSearch {
            g,
            k,
            order,
            skippable,
            busy: vec![false; g.vertex_count() * (k + 1)],
            assign: vec![0; g.edge_count()],
            decided: vec![false; g.edge_count()],
            max_used: 0,
        }
    }

    #[inline]
    fn free(&self, v: VertexId, c: usize) -> bool {
        !self.busy[v.0 * (self.k + 1) + c]
    }

    #[inline]
    fn mark(&mut self, e: EdgeId, c: usize, on: bool) {
        let (u, v) = self.g.endpoints(e);
        self.busy[u.0 * (self.k + 1) + c] = on;
        self.busy[v.0 * (self.k + 1) + c] = on;
    }

    fn must_color(&self, f: EdgeId, skips_left: usize) -> bool {
        !self.skippable[f.0] || skips_left == 0
    }

    /// Every undecided edge that has to be colored near `e` still has enough
    /// colors free at both of its ends.
    fn forward_ok(&self, e: EdgeId, skips_left: usize) -> bool {
        let (u, v) = self.g.endpoints(e);
        self.parallel_ok(u, skips_left) && self.parallel_ok(v, skips_left)
    }

    fn parallel_ok(&self, w: VertexId, skips_left: usize) -> bool {
        let g = self.g;
        let fresh = self.k - self.max_used;
        for &f in g.incident(w) {
            if self.decided[f.0] || !self.must_color(f, skips_left) {
                continue;
            }
            let z = g.opposite(f, w);
            let needed = g
                .incident(w)
                .iter()
                .filter(|&&h| !self.decided[h.0] && self.must_color(h, skips_left) && g.opposite(h, w) == z)
                .count();
            if needed <= fresh {
                continue;
            }
            let common = (1..=self.max_used).filter(|&c| self.free(w, c) && self.free(z, c)).count() + fresh;
            if common < needed {
                return false;
            }
        }
        true
    }

    pub(crate) fn run(&mut self, skips: usize, budget: &mut Budget) -> Step {
        self.dfs(0, skips, budget)
    }

    fn dfs(&mut self, pos: usize, skips_left: usize, budget: &mut Budget) -> Step {
        if !budget.tick() {
            return Step::Exhausted;
        }
        if pos == self.order.len() {
            return Step::Found;
        }
        let e = self.order[pos];
        let (u, v) = self.g.endpoints(e);
        self.decided[e.0] = true;
        let limit = self.k.min(self.max_used + 1);
        for c in 1..=limit {
            if !(self.free(u, c) && self.free(v, c)) {
                continue;
            }
            self.assign[e.0] = c as u32;
            self.mark(e, c, true);
            let saved = self.max_used;
            self.max_used = self.max_used.max(c);
            if self.forward_ok(e, skips_left) {
                match self.dfs(pos + 1, skips_left, budget) {
                    Step::Fail => {}
                    done => return done,
                }
            }
            self.max_used = saved;
            self.mark(e, c, false);
            self.assign[e.0] = 0;
        }
        if self.skippable[e.0] && skips_left > 0 {
            match self.dfs(pos + 1, skips_left - 1, budget) {
                Step::Fail => {}
                done => return done,
            }
        }
        self.decided[e.0] = false;
        Step::Fail
    }

    pub(crate) fn coloring(&self) -> EdgeColoring {
        let colors = self.assign.iter().map(|&c| (c != 0).then_some(Color(c))).collect();
        EdgeColoring::from_colors(self.k, colors)
    }
}

/// Edges by non-increasing endpoint degree sum, then id.
pub fn degree_sum_order(g: &Multigraph) -> Vec<EdgeId> {
    let mut order: Vec<_> = g.edge_ids().collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    order
}

/// Decides whether `g` has a proper edge coloring with `k` colors.
pub fn color_exact(g: &Multigraph, k: usize, budget: &mut Budget) -> ExactOutcome {
    if g.max_degree() > k {
        return if budget.tick() { ExactOutcome::Infeasible } else { ExactOutcome::BudgetExhausted };
    }
    let mut search = EdgeSearch::new(g, k, degree_sum_order(g), vec![false; g.edge_count()]);
    match search.run(0, budget) {
        Step::Found => ExactOutcome::Found(search.coloring()),
        Step::Fail => ExactOutcome::Infeasible,
        Step::Exhausted => ExactOutcome::BudgetExhausted,
    }
}

/// Colors `g` with palette `Δ + μ`.
pub fn color_vizing(g: &Multigraph) -> Result<EdgeColoring, ColorizeError> {
    let k = g.max_degree() + g.multiplicity();
    let mut phi = EdgeColoring::uncolored(k, g.edge_count());
    for e in degree_sum_order(g) {
        phi = match insert_edge(g, &phi, e)? {
            Some(next) => next,
            None => return Err(ColorizeError::Stalled { edge: e, dump: format!("{:?}", phi.colors()) }),
        };
    }
    Ok(phi)
}

/// Colors the uncolored edge `e` within the palette of `phi`, recoloring
/// along the maximal multi-fan at its first endpoint. Returns `None` when
/// that fan is elementary (fan vertices and the center have pairwise
/// disjoint missing sets), in which case no recoloring of this kind helps.
pub fn insert_edge(g: &Multigraph, phi: &EdgeColoring, e: EdgeId) -> Result<Option<EdgeColoring>, FanError> {
    let x = g.endpoints(e).0;
    let fan = build_maximal_multifan(g, phi, x, e)?;
    let missing_x = phi.missing(g, x);
    let mut seen: Vec<(VertexId, ColorSet)> = Vec::new();
    for entry in &fan.entries {
        if seen.iter().any(|(v, _)| *v == entry.vertex) {
            continue;
        }
        let missing = phi.missing(g, entry.vertex);
        if let Some(&alpha) = missing.intersection(&missing_x).next() {
            return finish(g, phi, &fan, entry.vertex, alpha).map(Some);
        }
        let shared = seen.iter().find_map(|(v, m)| m.intersection(&missing).next().map(|&b| (*v, b)));
        if let Some((earlier, beta)) = shared {
            let Some(&alpha) = missing_x.first() else { return Ok(None) };
            // x ends its (α,β)-chain; the other end is at most one of the two
            let px = kempe_chain(g, phi, x, alpha, beta).expect("colors within palette");
            let w = if px.contains(earlier) { entry.vertex } else { earlier };
            let pw = kempe_chain(g, phi, w, alpha, beta).expect("colors within palette");
            debug_assert!(!pw.contains(x));
            let swapped = kempe_swap(g, phi, &pw).expect("chain is fresh");
            return finish(g, &swapped, &fan, w, alpha).map(Some);
        }
        seen.push((entry.vertex, missing));
    }
    Ok(None)
}

fn finish(g: &Multigraph, phi: &EdgeColoring, fan: &MultiFan, w: VertexId, alpha: Color) -> Result<EdgeColoring, FanError> {
    let seq = extract_linear_sequence(fan, w)?;
    let mut out = shift(g, phi, &seq)?;
    let (last, _) = seq.last();
    for end in [fan.center, w] {
        if !out.is_missing(g, end, alpha) {
            return Err(FanError::InvalidSequence {
                position: seq.len(),
                reason: format!("color {alpha} not free at {end} after shifting"),
            });
        }
    }
    out.set(last, Some(alpha));
    Ok(out)
}
