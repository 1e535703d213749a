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

//! Exchanging edges between a maximum Δ-colorable subgraph `H_1` and its
//! remainder `H_2` along multi-fans.

use std::collections::BTreeSet;

use crate::coloring::EdgeColoring;
use crate::colorizer::{insert_edge, Budget};
use crate::fans::{build_maximal_multifan, extract_linear_sequence, find_high_degree_fan_vertex, shift};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::oracle::{chromatic_index, max_delta_colorable_subgraph_exact, vizing_seed, OracleError};

use super::{trace_of, DecomposeError, Decomposition, DescentLog, Status};

/// `H_1` as the colored edges of a Δ-coloring of `G`; `H_2` is the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentState {
    pub coloring: EdgeColoring,
    /// t(H_2): the sum of `d_{H_2}(v)` over vertices with `d_{H_2}(v) > μ`.
    pub potential: usize,
    pub odd_cycles: usize,
    /// False when `H_1` is not known to be maximum.
    pub certified: bool,
}

impl DescentState {
    pub fn new(g: &Multigraph, coloring: EdgeColoring, certified: bool) -> Self {
        let h2 = coloring.uncolored_edges();
        DescentState {
            potential: remainder_potential(g, &h2),
            odd_cycles: count_odd_cycles(g, &h2),
            coloring,
            certified,
        }
    }

    pub fn h1(&self) -> BTreeSet<EdgeId> {
        self.coloring.colored_edges()
    }

    pub fn h2(&self) -> BTreeSet<EdgeId> {
        self.coloring.uncolored_edges()
    }
}

fn degrees_in(g: &Multigraph, edges: &BTreeSet<EdgeId>) -> Vec<usize> {
    let mut deg = vec![0; g.vertex_count()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        deg[u.0] += 1;
        deg[v.0] += 1;
    }
    deg
}

/// t(H) = Σ_{d_H(v) > μ(G)} d_H(v).
pub fn remainder_potential(g: &Multigraph, h2: &BTreeSet<EdgeId>) -> usize {
    let mu = g.multiplicity();
    degrees_in(g, h2).into_iter().filter(|&d| d > mu).sum()
}

/// Components of the edge set `h` in which every vertex has degree two and
/// the number of edges is odd.
pub fn count_odd_cycles(g: &Multigraph, h: &BTreeSet<EdgeId>) -> usize {
    odd_cycle_edges(g, h).len()
}

/// For each odd cycle component of `h`, its edges in increasing order.
fn odd_cycle_edges(g: &Multigraph, h: &BTreeSet<EdgeId>) -> Vec<Vec<EdgeId>> {
    let deg = degrees_in(g, h);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &e in h {
        if seen.contains(&e) {
            continue;
        }
        let mut comp = BTreeSet::from([e]);
        let mut stack = vec![g.endpoints(e).0, g.endpoints(e).1];
        let mut verts = BTreeSet::new();
        while let Some(v) = stack.pop() {
            if !verts.insert(v) {
                continue;
            }
            for &f in g.incident(v) {
                if h.contains(&f) && comp.insert(f) {
                    stack.push(g.opposite(f, v));
                }
            }
        }
        seen.extend(comp.iter().copied());
        if comp.len() % 2 == 1 && verts.iter().all(|v| deg[v.0] == 2) {
            out.push(comp.into_iter().collect());
        }
    }
    out
}

/// Moves the remainder edge `e = xy` into `H_1` and some edge at `x` out of
/// it by shifting along the maximal multi-fan at `x`. In heuristic mode a
/// fan with no high-degree vertex is used to color `e` outright instead.
fn exchange(
    g: &Multigraph,
    coloring: &EdgeColoring,
    e: EdgeId,
    y: VertexId,
    heuristic: bool,
) -> Result<EdgeColoring, DecomposeError> {
    let x = g.opposite(e, y);
    let mut kept = coloring.colored_edges();
    kept.insert(e);
    let (sub, map) = g.edge_subgraph(&kept)?;
    let phi = coloring.pull_forward(&map);
    let anchor = map.forward(e).expect("e is kept");
    let fan = build_maximal_multifan(&sub, &phi, x, anchor)?;
    let shifted = match find_high_degree_fan_vertex(&sub, &fan, coloring.palette(), y) {
        Ok(z) => shift(&sub, &phi, &extract_linear_sequence(&fan, z)?)?,
        Err(err) if heuristic => match insert_edge(&sub, &phi, anchor)? {
            Some(grown) => grown,
            None => return Err(err.into()),
        },
        Err(err) => return Err(err.into()),
    };
    Ok(shifted.pull_back(&map))
}

/// Exchanges edges between `H_1` and `H_2` until every vertex has remainder
/// degree at most μ. The potential t(H_2) strictly decreases with each
/// exchange and `|H_1|` never shrinks.
pub fn normalize_max_subgraph(
    g: &Multigraph,
    state: DescentState,
    log: &mut DescentLog,
    heuristic: bool,
) -> Result<DescentState, DecomposeError> {
    let mu = g.multiplicity();
    let mut state = state;
    loop {
        log.potentials.push(state.potential);
        let h2 = state.h2();
        let deg = degrees_in(g, &h2);
        let Some(y) = g.vertices().find(|v| deg[v.0] > mu) else {
            return Ok(state);
        };
        let e = *h2.iter().find(|&&f| g.is_incident(f, y)).expect("y has remainder edges");
        let before = state.coloring.colored_count();
        let next = DescentState::new(g, exchange(g, &state.coloring, e, y, heuristic)?, state.certified);
        if next.potential >= state.potential || next.coloring.colored_count() < before {
            log.potentials.push(next.potential);
            return Err(DecomposeError::Descent { what: "t(H_2) did not decrease".into(), trace: trace_of(&log.potentials) });
        }
        state = next;
    }
}

/// For `μ <= 2` and `χ' = Δ + μ`, exchanges edges until `H_2` has no odd
/// cycle, removing exactly one odd cycle per exchange.
pub fn eliminate_odd_cycles(
    g: &Multigraph,
    state: DescentState,
    chromatic_index: usize,
    log: &mut DescentLog,
) -> Result<DescentState, DecomposeError> {
    let mu = g.multiplicity();
    if mu > 2 || chromatic_index != g.max_degree() + mu {
        return Err(DecomposeError::Precondition(format!("need μ <= 2 and χ' = Δ + μ, got μ = {mu}, χ' = {chromatic_index}")));
    }
    if state.potential != 0 {
        return Err(DecomposeError::Precondition(format!("t(H_2) = {} is not zero", state.potential)));
    }
    let mut state = state;
    loop {
        log.odd_cycles.push(state.odd_cycles);
        let cycles = odd_cycle_edges(g, &state.h2());
        let Some(&e) = cycles.iter().filter_map(|c| c.first()).min() else {
            return Ok(state);
        };
        let (u, v) = g.endpoints(e);
        let y = u.min(v);
        let next = DescentState::new(g, exchange(g, &state.coloring, e, y, false)?, state.certified);
        if next.odd_cycles + 1 != state.odd_cycles || next.potential != 0 {
            log.odd_cycles.push(next.odd_cycles);
            return Err(DecomposeError::Descent {
                what: "odd-cycle count did not drop by one".into(),
                trace: trace_of(&log.odd_cycles),
            });
        }
        state = next;
    }
}

/// Maximum Δ-colorable part plus a remainder of maximum degree at most μ,
/// with the odd cycles removed from the remainder when `μ <= 2` and
/// `χ' = Δ + μ`. The starting subgraph comes from the exact oracle, or
/// with `heuristic` from the largest color classes of a `Δ + μ` coloring,
/// in which case the result is marked non-certified.
pub fn decompose_maxsub(g: &Multigraph, budget: &mut Budget, heuristic: bool) -> Result<Decomposition, DecomposeError> {
    let chi = chromatic_index(g, budget)?.value;
    let delta = g.max_degree();
    if chi == delta {
        return Err(DecomposeError::ClassOne);
    }
    let start = if heuristic {
        DescentState::new(g, vizing_seed(g), false)
    } else {
        let max = max_delta_colorable_subgraph_exact(g, budget);
        if !max.optimal {
            return Err(OracleError::Exhausted.into());
        }
        DescentState::new(g, max.coloring, true)
    };
    let mut log = DescentLog::default();
    let mut state = normalize_max_subgraph(g, start, &mut log, heuristic)?;
    let mu = g.multiplicity();
    if mu <= 2 && chi == delta + mu && state.certified {
        state = eliminate_odd_cycles(g, state, chi, &mut log)?;
    }
    let (sub, map) = g.edge_subgraph(&state.h2())?;
    let rest = chromatic_index(&sub, budget)?.certificate.pull_back(&map);
    let mut d = Decomposition::from_certificates(g, state.coloring.clone(), rest);
    d.log = log;
    d.status = if state.certified { Status::Unverified } else { Status::NonCertified };
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::check_decomposition;
    use crate::structures::{complete, make_shannon, petersen};

    #[test]
    fn potentials() {
        let g = make_shannon(4).unwrap();
        let all: BTreeSet<EdgeId> = g.edge_ids().collect();
        // every vertex has degree 4 > μ = 2
        assert_eq!(remainder_potential(&g, &all), 12);
        assert_eq!(count_odd_cycles(&complete(3), &complete(3).edge_ids().collect()), 1);
        assert_eq!(count_odd_cycles(&g, &all), 0);
    }

    #[test]
    fn simple_remainder_is_matching() {
        for g in [complete(3), petersen(), complete(5)] {
            let d = decompose_maxsub(&g, &mut Budget::default(), false).unwrap();
            let facts = check_decomposition(&g, &d).unwrap();
            assert_eq!(facts[1].max_degree, 1);
            assert!(!d.part2.is_empty());
        }
    }

    #[test]
    fn shannon_remainder() {
        let g = make_shannon(4).unwrap();
        let d = decompose_maxsub(&g, &mut Budget::default(), false).unwrap();
        let facts = check_decomposition(&g, &d).unwrap();
        assert_eq!(d.part1.len(), 4);
        assert!(facts[1].max_degree <= 2);
        assert_eq!(facts[1].colors, 2);
    }

    #[test]
    fn fixpoint_is_identity() {
        let g = complete(3);
        let phi = EdgeColoring::from_values(2, &[1, 2, 0]);
        let state = DescentState::new(&g, phi.clone(), true);
        let mut log = DescentLog::default();
        let out = normalize_max_subgraph(&g, state, &mut log, false).unwrap();
        assert_eq!(out.coloring, phi);
        assert_eq!(log.potentials, vec![0]);
    }
}
