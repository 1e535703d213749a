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

//! Class I parts with maximum degrees Δ and `k = χ' − Δ`.

use std::collections::BTreeSet;

use crate::coloring::{partition_relative, Color, EdgeColoring};
use crate::colorizer::Budget;
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::oracle::{chromatic_index, search_class_one_split};

use super::{check_decomposition, clear_missing_overlap, split_by_missing_pair, DecomposeError, Decomposition, DescentLog, Status};

/// Splits `g` into class I subgraphs `H_1`, `H_2` with `Δ(H_1) = Δ` and
/// `Δ(H_2) = k`, where `χ'(G) = Δ + k` and `k >= 1`.
///
/// Works on an optimal coloring: a Δ-vertex and a vertex with disjoint
/// missing sets give the split directly; a pair sharing few edges is first
/// recolored until their missing sets are disjoint; otherwise the color
/// class at the heaviest edge of the first Δ-vertex is peeled off and the
/// rest is split recursively. If a structural check fails the split is
/// found by exhaustive search instead. Both parts are re-checked with the
/// oracle before returning.
pub fn decompose_class1_pair(g: &Multigraph, budget: &mut Budget) -> Result<Decomposition, DecomposeError> {
    let chi = chromatic_index(g, budget)?;
    decompose_class1_pair_with(g, &chi.certificate, PairOptions::default(), budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairOptions {
    /// Split at any Δ-vertex and vertex with disjoint missing sets as soon
    /// as one exists. When false this shortcut is only taken for Δ <= 2,
    /// so the overlap reduction and peeling run whenever they apply.
    pub direct_split: bool,
}

impl Default for PairOptions {
    fn default() -> Self {
        PairOptions { direct_split: true }
    }
}

/// As [`decompose_class1_pair`], starting from a given optimal coloring.
pub fn decompose_class1_pair_with(
    g: &Multigraph,
    phi: &EdgeColoring,
    options: PairOptions,
    budget: &mut Budget,
) -> Result<Decomposition, DecomposeError> {
    let chi = chromatic_index(g, budget)?.value;
    let delta = g.max_degree();
    if chi == delta {
        return Err(DecomposeError::ClassOne);
    }
    if phi.palette() != chi || !phi.is_total() || phi.validate(g).is_err() {
        return Err(DecomposeError::Precondition(format!("need a total proper {chi}-coloring")));
    }
    let k = chi - delta;
    let mut log = DescentLog::default();
    let mut d = match descend(g, phi.clone(), k, options, budget, &mut log) {
        Ok(d) => d,
        Err(DecomposeError::Structure(_)) => {
            log.fallback = true;
            search_class_one_split(g, delta, k, budget)?
                .ok_or_else(|| DecomposeError::Structure(format!("no ({delta}, {k}) split exists")))?
        }
        Err(err) => return Err(err),
    };
    d.log = log;
    let facts = check_decomposition(g, &d)?;
    if d.targets != [delta, k] || d.class_one != [true, true] {
        return Err(DecomposeError::Invalid(format!("parts have maximum degrees {:?}", d.targets)));
    }
    let (p1, p2) = d.part_sets();
    for (part, fact) in [(p1, facts[0]), (p2, facts[1])] {
        let (sub, _) = g.edge_subgraph(&part)?;
        let chi_part = chromatic_index(&sub, budget)?.value;
        if chi_part != fact.max_degree {
            return Err(DecomposeError::Invalid(format!("part with Δ = {} has χ' = {chi_part}", fact.max_degree)));
        }
    }
    d.status = Status::Verified;
    Ok(d)
}

fn descend(
    g: &Multigraph,
    phi: EdgeColoring,
    k: usize,
    options: PairOptions,
    budget: &mut Budget,
    log: &mut DescentLog,
) -> Result<Decomposition, DecomposeError> {
    let delta = g.max_degree();
    let tops = g.vertices_of_degree_at_least(delta);
    // a Δ-vertex and a vertex with disjoint missing sets
    for &x in tops.iter().filter(|_| options.direct_split || delta <= 2) {
        let missing_x = phi.missing(g, x);
        if let Some(v) = g.vertices().find(|&v| missing_x.is_disjoint(&phi.missing(g, v))) {
            return split_by_missing_pair(g, &phi, x, v);
        }
    }
    if delta <= 2 {
        return Err(DecomposeError::Structure(format!("no disjoint missing pair with Δ = {delta}")));
    }
    // a pair sharing fewer than d(y) − k + 1 edges
    let heavy = g.vertices_of_degree_at_least(delta - 1);
    for &x in &tops {
        for &y in heavy.iter().filter(|&&y| y != x) {
            if g.edges_between(x, y).len() + k < g.degree(y) + 1 {
                let (cleared, passes) = clear_missing_overlap(g, &phi, x, y, k)?;
                log.overlap_passes.extend(passes);
                debug_assert!(partition_relative(g, &cleared, x, y).c1.is_empty());
                return split_by_missing_pair(g, &cleared, x, y);
            }
        }
    }
    peel(g, &phi, tops[0], k, options, budget, log)
}

/// Removes the color class through the heaviest edge at `x` and recurses.
fn peel(
    g: &Multigraph,
    phi: &EdgeColoring,
    x: VertexId,
    k: usize,
    options: PairOptions,
    budget: &mut Budget,
    log: &mut DescentLog,
) -> Result<Decomposition, DecomposeError> {
    let delta = g.max_degree();
    let neighbors = g.neighbors(x);
    let heavy = g.vertices_of_degree_at_least(delta - 1);
    if let Some(v) = heavy.iter().find(|&&v| v != x && !neighbors.contains(&v)) {
        return Err(DecomposeError::Structure(format!("{v} has degree at least Δ − 1 but is not adjacent to {x}")));
    }
    let heavy_neighbors = heavy.iter().filter(|v| neighbors.contains(v)).count();
    if heavy_neighbors > 1 {
        return Err(DecomposeError::Structure(format!("{x} has {heavy_neighbors} neighbors of degree at least Δ − 1")));
    }
    let y = *neighbors.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))).expect("Δ-vertices have neighbors");
    let e = g.edges_between(x, y)[0];
    let alpha = phi.color(e).expect("coloring is total");
    let class: BTreeSet<EdgeId> = phi.color_class(alpha)?.into_iter().collect();
    let (rest, map) = g.remove_edges(&class)?;
    if rest.max_degree() + 1 != delta {
        return Err(DecomposeError::Structure(format!("removing color {alpha} leaves Δ = {}", rest.max_degree())));
    }
    let chi_rest = chromatic_index(&rest, budget)?.value;
    if chi_rest + 1 != delta + k {
        return Err(DecomposeError::Structure(format!("removing color {alpha} leaves χ' = {chi_rest}")));
    }
    let restricted = phi
        .pull_forward(&map)
        .recolor(phi.palette() - 1, |c| Some(if c.0 > alpha.0 { Color(c.0 - 1) } else { c }));
    log.peeled += 1;
    let inner = descend(&rest, restricted, k, options, budget, log)?;
    if inner.targets != [delta - 1, k] {
        return Err(DecomposeError::Structure(format!("inner split has maximum degrees {:?}", inner.targets)));
    }
    let mut first = inner.certificate1.pull_back(&map).with_palette(delta);
    for &f in &class {
        first.set(f, Some(Color(delta as u32)));
    }
    let second = inner.certificate2.pull_back(&map);
    let d = Decomposition::from_certificates(g, first, second);
    if d.targets != [delta, k] {
        return Err(DecomposeError::Structure(format!("lifted split has maximum degrees {:?}", d.targets)));
    }
    Ok(d)
}
