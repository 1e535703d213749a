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


//! Shared helpers for the integration suites: independent brute-force
//! oracles and ways of producing many different starting points.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use mgcolor::coloring::{kempe_chain, kempe_swap, Color, EdgeColoring};
use mgcolor::oracle::max_delta_colorable_subgraph_exact;
use mgcolor::{Budget, EdgeId, Multigraph};

/// Whether `g` has a proper `k`-coloring, by plain backtracking in edge id
/// order without symmetry breaking or pruning.
pub fn brute_colorable(g: &Multigraph, k: usize) -> bool {
    fn rec(g: &Multigraph, i: usize, k: usize, assign: &mut Vec<usize>) -> bool {
        if i == g.edge_count() {
            return true;
        }
        let (u, v) = g.endpoints(EdgeId(i));
        for c in 1..=k {
            let clash = (0..i).any(|j| {
                let (a, b) = g.endpoints(EdgeId(j));
                assign[j] == c && (a == u || a == v || b == u || b == v)
            });
            if !clash {
                assign[i] = c;
                if rec(g, i + 1, k, assign) {
                    return true;
                }
            }
        }
        false
    }
    rec(g, 0, k, &mut vec![0; g.edge_count()])
}

/// Chromatic index by trying every `k` upward with [`brute_colorable`].
pub fn brute_chromatic_index(g: &Multigraph) -> usize {
    (0..).find(|&k| brute_colorable(g, k)).expect("some k works")
}

/// Size of a largest `k`-colorable edge subset, over all subsets.
pub fn brute_max_colorable(g: &Multigraph, k: usize) -> usize {
    let m = g.edge_count();
    assert!(m <= 16, "exhaustive over subsets");
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let kept: BTreeSet<EdgeId> = (0..m).filter(|i| mask & (1 << i) != 0).map(EdgeId).collect();
        let (sub, _) = g.edge_subgraph(&kept).unwrap();
        if brute_colorable(&sub, k) {
            best = size;
        }
    }
    best
}

/// Applies `steps` random Kempe swaps to a total coloring.
pub fn kempe_shuffle<R: Rng>(g: &Multigraph, phi: &EdgeColoring, steps: usize, rng: &mut R) -> EdgeColoring {
    let mut phi = phi.clone();
    let k = phi.palette() as u32;
    if k < 2 || g.vertex_count() == 0 {
        return phi;
    }
    for _ in 0..steps {
        let v = g.vertices().nth(rng.gen_range(0..g.vertex_count())).unwrap();
        let a = rng.gen_range(1..=k);
        let mut b = rng.gen_range(1..k);
        if b >= a {
            b += 1;
        }
        let chain = kempe_chain(g, &phi, v, Color(a), Color(b)).unwrap();
        phi = kempe_swap(g, &phi, &chain).unwrap();
    }
    phi
}

/// A maximum Δ-colorable subgraph found after relabeling the edges at
/// random, so that different maximum subgraphs come out.
pub fn permuted_max_subgraph<R: Rng>(g: &Multigraph, rng: &mut R) -> EdgeColoring {
    let mut order: Vec<EdgeId> = g.edge_ids().collect();
    order.shuffle(rng);
    let shuffled = Multigraph::build(
        g.vertex_count(),
        order.iter().map(|&e| {
            let (u, v) = g.endpoints(e);
            (u.0, v.0)
        }),
    )
    .unwrap();
    let max = max_delta_colorable_subgraph_exact(&shuffled, &mut Budget::default());
    assert!(max.optimal);
    let mut colors = vec![None; g.edge_count()];
    for (i, &e) in order.iter().enumerate() {
        colors[e.0] = max.coloring.color(EdgeId(i));
    }
    EdgeColoring::from_colors(g.max_degree(), colors)
}

/// Every maximum Δ-colorable subgraph, each as a Δ-coloring of `g`, or
/// `None` when there are more than `limit` candidate complements to try.
pub fn all_max_subgraphs(g: &Multigraph, limit: usize) -> Option<Vec<EdgeColoring>> {
    let delta = g.max_degree();
    let max = max_delta_colorable_subgraph_exact(g, &mut Budget::default());
    let m = g.edge_count();
    let s = m - max.edges.len();
    let candidates = (0..s).fold(1usize, |acc, i| acc.saturating_mul(m - i) / (i + 1));
    if candidates > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut removed = Vec::new();
    fn rec(g: &Multigraph, delta: usize, start: usize, s: usize, removed: &mut Vec<EdgeId>, out: &mut Vec<EdgeColoring>) {
        if removed.len() == s {
            let gone: BTreeSet<EdgeId> = removed.iter().copied().collect();
            let (sub, map) = g.remove_edges(&gone).unwrap();
            if let mgcolor::colorizer::ExactOutcome::Found(phi) =
                mgcolor::colorizer::color_exact(&sub, delta, &mut Budget::default())
            {
                out.push(phi.with_palette(delta).pull_back(&map));
            }
            return;
        }
        for i in start..g.edge_count() {
            removed.push(EdgeId(i));
            rec(g, delta, i + 1, s, removed, out);
            removed.pop();
        }
    }
    rec(g, delta, 0, s, &mut removed, &mut out);
    Some(out)
}
