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

//! Shrinking the set of colors missing at both ends of a pair `x`, `y`
//! where `d(x) = Δ` and `x`, `y` share few edges.

use serde::{Deserialize, Serialize};

use crate::coloring::{kempe_chain, kempe_swap, partition_relative, Color, EdgeColoring, RelativePartition};
use crate::graph::{Multigraph, VertexId};

use super::{trace_of, DecomposeError};

/// Auxiliary swaps allowed in one pass before the reducing swap.
pub const MAX_AUX_SWAPS: usize = 3;

/// What one pass did: the shared-missing count before and after, and each
/// swap as `(step, start vertex, colors)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassTrace {
    pub before: usize,
    pub after: usize,
    pub swaps: Vec<(String, VertexId, [Color; 2])>,
}

impl PassTrace {
    pub fn aux_swaps(&self) -> usize {
        self.swaps.len().saturating_sub(1)
    }
}

struct Pass<'a> {
    g: &'a Multigraph,
    x: VertexId,
    y: VertexId,
    phi: EdgeColoring,
    trace: PassTrace,
}

impl Pass<'_> {
    fn fail(&self, what: impl Into<String>) -> DecomposeError {
        DecomposeError::Descent { what: what.into(), trace: trace_of(&self.trace) }
    }

    /// Swaps `P_start(a, b)`, first checking that it avoids `x` and `y`
    /// unless `may_touch` allows it.
    fn swap(&mut self, step: &str, start: VertexId, a: Color, b: Color, may_touch: bool) -> Result<(), DecomposeError> {
        let chain = kempe_chain(self.g, &self.phi, start, a, b)?;
        if !may_touch && (chain.contains(self.x) || chain.contains(self.y)) {
            return Err(self.fail(format!("step {step}: chain P_{start}({a}, {b}) meets x or y")));
        }
        self.phi = kempe_swap(self.g, &self.phi, &chain)?;
        self.trace.swaps.push((step.to_string(), start, [a, b]));
        Ok(())
    }

    fn parts(&self) -> RelativePartition {
        partition_relative(self.g, &self.phi, self.x, self.y)
    }

    /// Step 1: some `α ∈ C1`, `η ∈ C4` whose chain at `x` misses `y`.
    fn try_reduce(&mut self) -> Result<bool, DecomposeError> {
        let parts = self.parts();
        for &alpha in &parts.c1 {
            for &eta in &parts.c4 {
                if !kempe_chain(self.g, &self.phi, self.x, alpha, eta)?.contains(self.y) {
                    self.swap("1", self.y, alpha, eta, true)?;
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// One auxiliary move; after it step 1 is retried.
    fn auxiliary(&mut self) -> Result<(), DecomposeError> {
        let (g, x, y) = (self.g, self.x, self.y);
        let parts = self.parts();
        let beta = *parts.c1.first().expect("C1 is nonempty during a pass");
        let e1 = parts
            .c4
            .iter()
            .filter_map(|&eta| self.phi.edge_with_color(g, x, eta))
            .find(|&e| g.opposite(e, x) != y)
            .ok_or_else(|| self.fail("step 2: every C4 color at x is on an edge to y"))?;
        let z1 = g.opposite(e1, x);
        let miss1 = self.phi.missing(g, z1);
        if let Some(c) = miss1.intersection(&parts.c1).next() {
            return Err(self.fail(format!("step 3: {c} is missing at x, y and {z1}")));
        }
        if let Some(&alpha) = miss1.intersection(&parts.c4).next() {
            return self.swap("3", z1, beta, alpha, false);
        }
        let gamma = *miss1.intersection(&parts.c3).next().ok_or_else(|| self.fail(format!("step 4: no C3 color missing at {z1}")))?;
        let e2 = self.phi.edge_with_color(g, x, gamma).expect("C3 colors are present at x");
        let z2 = g.opposite(e2, x);
        if z2 == z1 || z2 == y {
            return Err(self.fail(format!("step 4: {e2} ends at {z2}")));
        }
        let miss2 = self.phi.missing(g, z2);
        if let Some(&alpha) = miss2.intersection(&parts.c1).next() {
            return self.swap("5a", z1, alpha, gamma, false);
        }
        if let Some(&alpha) = miss2.intersection(&parts.c4).next() {
            return self.swap("5b", z2, beta, alpha, false);
        }
        let shared = *miss1.intersection(&miss2).next().ok_or_else(|| self.fail(format!("step 6: {z1} and {z2} share no missing color")))?;
        let p1 = kempe_chain(g, &self.phi, z1, shared, beta)?;
        let start = if p1.contains(x) || p1.contains(y) { z2 } else { z1 };
        self.swap("6", start, shared, beta, false)
    }
}

/// One pass: a sequence of at most [`MAX_AUX_SWAPS`] auxiliary Kempe swaps
/// that leave the shared-missing set `C1 = φ̄(x) ∩ φ̄(y)` unchanged, then a
/// swap at `y` that removes one color from it.
///
/// Requires `d(x) = Δ`, `d(y) >= Δ − 1`, `|E(x,y)| < d(y) − k + 1`, a total
/// proper coloring with `Δ + k` colors, and `C1` nonempty.
pub fn reduce_missing_overlap(
    g: &Multigraph,
    phi: &EdgeColoring,
    x: VertexId,
    y: VertexId,
    k: usize,
) -> Result<(EdgeColoring, PassTrace), DecomposeError> {
    let pre = |msg: String| Err(DecomposeError::Precondition(msg));
    let delta = g.max_degree();
    if x == y {
        return pre("x and y coincide".into());
    }
    if g.degree(x) != delta {
        return pre(format!("d({x}) = {} is not Δ = {delta}", g.degree(x)));
    }
    if g.degree(y) + 1 < delta {
        return pre(format!("d({y}) = {} is below Δ − 1", g.degree(y)));
    }
    let shared = g.edges_between(x, y).len();
    if shared + k >= g.degree(y) + 1 {
        return pre(format!("|E({x},{y})| = {shared} is at least d({y}) − k + 1"));
    }
    if phi.palette() != delta + k || !phi.is_total() || phi.validate(g).is_err() {
        return pre(format!("need a total proper {}-coloring", delta + k));
    }
    let before = partition_relative(g, phi, x, y).c1.len();
    if before == 0 {
        return pre("no color is missing at both vertices".into());
    }
    let mut pass = Pass { g, x, y, phi: phi.clone(), trace: PassTrace { before, after: before, swaps: Vec::new() } };
    loop {
        if pass.try_reduce()? {
            break;
        }
        if pass.trace.swaps.len() == MAX_AUX_SWAPS {
            return Err(pass.fail("auxiliary swap cap reached"));
        }
        pass.auxiliary()?;
        if pass.parts().c1.len() != before {
            return Err(pass.fail("an auxiliary swap changed C1"));
        }
    }
    pass.trace.after = pass.parts().c1.len();
    if pass.trace.after >= before {
        return Err(pass.fail("C1 did not shrink"));
    }
    Ok((pass.phi, pass.trace))
}

/// Repeats [`reduce_missing_overlap`] until no color is missing at both
/// `x` and `y`, using at most the initial `|C1|` passes.
pub fn clear_missing_overlap(
    g: &Multigraph,
    phi: &EdgeColoring,
    x: VertexId,
    y: VertexId,
    k: usize,
) -> Result<(EdgeColoring, Vec<PassTrace>), DecomposeError> {
    let mut current = phi.clone();
    let mut passes = Vec::new();
    let start = partition_relative(g, phi, x, y).c1.len();
    while !partition_relative(g, &current, x, y).c1.is_empty() {
        if passes.len() == start {
            return Err(DecomposeError::Descent { what: "pass cap reached".into(), trace: trace_of(&passes) });
        }
        let (next, trace) = reduce_missing_overlap(g, &current, x, y, k)?;
        current = next;
        passes.push(trace);
    }
    Ok((current, passes))
}

#[cfg(test)]
mod tests {
    use super::*;

    // x = 0 with Δ = 3 and no edge to y = 1; K = 4
    fn star_pair() -> (Multigraph, EdgeColoring) {
        let g = Multigraph::build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]).unwrap();
        let phi = EdgeColoring::from_values(4, &[1, 2, 3, 2, 3]);
        (g, phi)
    }

    #[test]
    fn immediate_reduction() {
        let (g, phi) = star_pair();
        // C1 = {4} and P_0(4, 2) is the single edge 0-3, away from y
        let (out, trace) = reduce_missing_overlap(&g, &phi, VertexId(0), VertexId(1), 1).unwrap();
        assert_eq!(trace.before, 1);
        assert_eq!(trace.after, 0);
        assert_eq!(trace.swaps.len(), 1);
        assert_eq!(out.validate(&g), Ok(()));
    }

    #[test]
    fn empty_overlap_rejected() {
        let g = Multigraph::build(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let phi = EdgeColoring::from_values(3, &[1, 2, 3]);
        assert!(matches!(
            reduce_missing_overlap(&g, &phi, VertexId(0), VertexId(1), 1),
            Err(DecomposeError::Precondition(_))
        ));
    }
}
