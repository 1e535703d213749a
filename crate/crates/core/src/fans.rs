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

//! Multi-fans, linear sequences and shifting.
//!
//! A multi-fan at `x` with respect to an uncolored edge `e = xy` is a
//! sequence `(e_1, y_1, ..., e_p, y_p)` with `e_1 = e`, `y_1 = y`, distinct
//! edges `e_i` joining `x` and `y_i`, where the color of every later edge is
//! missing at some earlier fan vertex. Fans are grown greedily: scan colors
//! `1..=K` and append the edge at `x` carrying the first color that is
//! missing at a fan vertex and not yet used, then rescan.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::coloring::{ColorSet, EdgeColoring};
use crate::graph::{EdgeId, Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("anchor edge {0} is colored")]
    AnchorColored(EdgeId),
    #[error("anchor edge {edge} is not incident with {center}")]
    NotIncident { edge: EdgeId, center: VertexId },
    #[error("{0} is not a vertex of the fan")]
    NotInFan(VertexId),
    #[error("precondition failed: d({vertex}) = {degree} exceeds {bound}")]
    AnchorDegree { vertex: VertexId, degree: usize, bound: i64 },
    #[error("no fan vertex other than {anchor} has degree at least {bound}")]
    ContractBreach { anchor: VertexId, bound: i64 },
    #[error("linear sequence broken at position {position}: {reason}")]
    InvalidSequence { position: usize, reason: String },
}

/// One `(e_i, y_i)` entry with the index of an earlier entry whose vertex
/// misses `φ(e_i)` (none for the anchor).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FanEntry {
    pub edge: EdgeId,
    pub vertex: VertexId,
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiFan {
    pub center: VertexId,
    pub entries: Vec<FanEntry>,
    pub maximal: bool,
}

impl MultiFan {
    pub fn anchor(&self) -> FanEntry {
        self.entries[0]
    }

    /// V(F), in order of first appearance.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut seen = BTreeSet::new();
        self.entries.iter().map(|e| e.vertex).filter(|v| seen.insert(*v)).collect()
    }

    pub fn contains_vertex(&self, z: VertexId) -> bool {
        self.entries.iter().any(|e| e.vertex == z)
    }

    /// μ_F(x, z): fan edges ending at `z`.
    pub fn multiplicity_to(&self, z: VertexId) -> usize {
        self.entries.iter().filter(|e| e.vertex == z).count()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Index of the first entry at `z`.
    pub fn first_entry_at(&self, z: VertexId) -> Option<usize> {
        self.entries.iter().position(|e| e.vertex == z)
    }
}

/// Grows the deterministic maximal multi-fan at `x` for the uncolored edge
/// `e`. Other uncolored edges are ignored.
pub fn build_maximal_multifan(
    g: &Multigraph,
    phi: &EdgeColoring,
    x: VertexId,
    e: EdgeId,
) -> Result<MultiFan, FanError> {
    if !g.is_incident(e, x) {
        return Err(FanError::NotIncident { edge: e, center: x });
    }
    if phi.color(e).is_some() {
        return Err(FanError::AnchorColored(e));
    }
    let y = g.opposite(e, x);
    let mut entries = vec![FanEntry { edge: e, vertex: y, witness: None }];
    let mut missing: Vec<ColorSet> = vec![phi.missing(g, y)];
    let mut used: BTreeSet<EdgeId> = BTreeSet::from([e]);

    'grow: loop {
        for c in crate::coloring::palette_colors(phi.palette()) {
            let Some(j) = missing.iter().position(|m| m.contains(&c)) else { continue };
            let Some(f) = phi.edge_with_color(g, x, c) else { continue };
            if used.contains(&f) {
                continue;
            }
            let z = g.opposite(f, x);
            used.insert(f);
            entries.push(FanEntry { edge: f, vertex: z, witness: Some(j) });
            missing.push(phi.missing(g, z));
            continue 'grow;
        }
        break;
    }
    Ok(MultiFan { center: x, entries, maximal: true })
}

/// Σ_{z ∈ V(F)} (d(z) + μ_F(x,z) − K). Equals 2 when the anchor is a
/// critical edge and `palette = χ'(G) − 1`.
pub fn fan_equation_residual(g: &Multigraph, fan: &MultiFan, palette: usize) -> i64 {
    fan.vertices()
        .into_iter()
        .map(|z| g.degree(z) as i64 + fan.multiplicity_to(z) as i64 - palette as i64)
        .sum()
}

/// For a maximal fan at a critical edge with `d(y) <= K + 1 - μ`, returns the
/// smallest fan vertex `z != y` with `d(z) >= K + 1 - μ`.
pub fn find_high_degree_fan_vertex(
    g: &Multigraph,
    fan: &MultiFan,
    palette: usize,
    y: VertexId,
) -> Result<VertexId, FanError> {
    let bound = palette as i64 + 1 - g.multiplicity() as i64;
    if g.degree(y) as i64 > bound {
        return Err(FanError::AnchorDegree { vertex: y, degree: g.degree(y), bound });
    }
    fan.vertices()
        .into_iter()
        .filter(|&z| z != y && g.degree(z) as i64 >= bound)
        .min()
        .ok_or(FanError::ContractBreach { anchor: y, bound })
}

/// A linear sequence `(e_1, y_1, ..., e_s, y_s)` at `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSequence {
    pub center: VertexId,
    pub entries: Vec<(EdgeId, VertexId)>,
}

impl LinearSequence {
    pub fn last(&self) -> (EdgeId, VertexId) {
        *self.entries.last().expect("sequences are nonempty")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks the defining conditions against `phi`: distinct vertices and
    /// edges, `e_i` joins the center and `y_i`, `e_1` uncolored, and
    /// `φ(e_i) ∈ φ̄(y_{i-1})` for `2 <= i <= s`.
    pub fn check(&self, g: &Multigraph, phi: &EdgeColoring) -> Result<(), FanError> {
        let broken = |position: usize, reason: String| Err(FanError::InvalidSequence { position, reason });
        if self.entries.is_empty() {
            return broken(0, "empty sequence".into());
        }
        let mut verts = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for (i, &(e, y)) in self.entries.iter().enumerate() {
            if !verts.insert(y) || !edges.insert(e) {
                return broken(i + 1, format!("repeated entry ({e}, {y})"));
            }
            if !g.is_incident(e, self.center) || g.opposite(e, self.center) != y {
                return broken(i + 1, format!("{e} does not join {} and {y}", self.center));
            }
            if i == 0 {
                if phi.color(e).is_some() {
                    return broken(1, format!("first edge {e} is colored"));
                }
                continue;
            }
            let Some(c) = phi.color(e) else {
                return broken(i + 1, format!("{e} is uncolored"));
            };
            let prev = self.entries[i - 1].1;
            if !phi.is_missing(g, prev, c) {
                return broken(i + 1, format!("color {c} of {e} is not missing at {prev}"));
            }
        }
        Ok(())
    }
}

/// The linear sequence from the anchor vertex to `z` obtained by following
/// witnesses back from the first fan entry at `z`.
pub fn extract_linear_sequence(fan: &MultiFan, z: VertexId) -> Result<LinearSequence, FanError> {
    let mut i = fan.first_entry_at(z).ok_or(FanError::NotInFan(z))?;
    let mut rev = vec![(fan.entries[i].edge, fan.entries[i].vertex)];
    while let Some(j) = fan.entries[i].witness {
        i = j;
        rev.push((fan.entries[i].edge, fan.entries[i].vertex));
    }
    rev.reverse();
    Ok(LinearSequence { center: fan.center, entries: rev })
}

/// Shifting along `seq`: `e_t` takes the old color of `e_{t+1}` and the last
/// edge becomes uncolored.
pub fn shift(g: &Multigraph, phi: &EdgeColoring, seq: &LinearSequence) -> Result<EdgeColoring, FanError> {
    seq.check(g, phi)?;
    let mut out = phi.clone();
    for w in seq.entries.windows(2) {
        out.set(w[0].0, phi.color(w[1].0));
    }
    out.set(seq.last().0, None);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Color;

    // S_3 = T(1,1,2): x=0, y=1, z=2; e0 = xy, e1 = yz, e2/e3 = xz
    fn s3_setup() -> (Multigraph, EdgeColoring) {
        let g = Multigraph::build(3, [(0, 1), (1, 2), (0, 2), (0, 2)]).unwrap();
        let phi = EdgeColoring::from_values(3, &[0, 1, 2, 3]);
        (g, phi)
    }

    #[test]
    fn shannon_three_fan() {
        let (g, phi) = s3_setup();
        let fan = build_maximal_multifan(&g, &phi, VertexId(0), EdgeId(0)).unwrap();
        let got: Vec<_> = fan.entries.iter().map(|e| (e.edge.0, e.vertex.0, e.witness)).collect();
        assert_eq!(got, vec![(0, 1, None), (2, 2, Some(0)), (3, 2, Some(0))]);
        assert_eq!(fan.vertices(), vec![VertexId(1), VertexId(2)]);
        assert_eq!(fan_equation_residual(&g, &fan, 3), 2);
        assert_eq!(find_high_degree_fan_vertex(&g, &fan, 3, VertexId(1)), Ok(VertexId(2)));
    }

    #[test]
    fn sequences_and_shift() {
        let (g, phi) = s3_setup();
        let fan = build_maximal_multifan(&g, &phi, VertexId(0), EdgeId(0)).unwrap();
        let seq = extract_linear_sequence(&fan, VertexId(2)).unwrap();
        assert_eq!(seq.entries, vec![(EdgeId(0), VertexId(1)), (EdgeId(2), VertexId(2))]);
        seq.check(&g, &phi).unwrap();

        let shifted = shift(&g, &phi, &seq).unwrap();
        assert_eq!(shifted.color(EdgeId(0)), Some(Color(2)));
        assert_eq!(shifted.color(EdgeId(2)), None);
        assert_eq!(shifted.colored_count(), phi.colored_count());
        assert_eq!(shifted.validate(&g), Ok(()));

        let trivial = extract_linear_sequence(&fan, VertexId(1)).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(shift(&g, &phi, &trivial).unwrap(), phi);

        assert_eq!(extract_linear_sequence(&fan, VertexId(0)), Err(FanError::NotInFan(VertexId(0))));
    }

    #[test]
    fn rejects_broken_sequence() {
        let (g, phi) = s3_setup();
        // e1 = yz is not at the center
        let seq = LinearSequence { center: VertexId(0), entries: vec![(EdgeId(0), VertexId(1)), (EdgeId(1), VertexId(2))] };
        assert!(matches!(shift(&g, &phi, &seq), Err(FanError::InvalidSequence { position: 2, .. })));
        // e3 has color 3, which is missing at y = 1, so this one is fine
        let seq = LinearSequence { center: VertexId(0), entries: vec![(EdgeId(0), VertexId(1)), (EdgeId(3), VertexId(2))] };
        assert!(shift(&g, &phi, &seq).is_ok());
    }

    #[test]
    fn single_edge_fan() {
        let g = Multigraph::build(2, [(0, 1)]).unwrap();
        let phi = EdgeColoring::uncolored(1, 1);
        let fan = build_maximal_multifan(&g, &phi, VertexId(0), EdgeId(0)).unwrap();
        assert_eq!(fan.len(), 1);
        assert_eq!(fan.anchor().vertex, VertexId(1));
    }

    #[test]
    fn anchor_must_be_uncolored() {
        let (g, mut phi) = s3_setup();
        phi.set(EdgeId(0), Some(Color(3)));
        assert_eq!(build_maximal_multifan(&g, &phi, VertexId(0), EdgeId(0)), Err(FanError::AnchorColored(EdgeId(0))));
        assert!(matches!(
            build_maximal_multifan(&g, &phi, VertexId(0), EdgeId(1)),
            Err(FanError::NotIncident { .. })
        ));
    }

    #[test]
    fn high_degree_precondition() {
        let (g, phi) = s3_setup();
        let fan = build_maximal_multifan(&g, &phi, VertexId(0), EdgeId(0)).unwrap();
        // with K = 1 the bound is 0 and d(y) = 2 exceeds it
        assert!(matches!(find_high_degree_fan_vertex(&g, &fan, 1, VertexId(1)), Err(FanError::AnchorDegree { .. })));
        // a fan with only the anchor vertex has nothing to offer
        let lone = MultiFan { center: VertexId(0), entries: vec![fan.entries[0]], maximal: false };
        assert!(matches!(find_high_degree_fan_vertex(&g, &lone, 3, VertexId(1)), Err(FanError::ContractBreach { .. })));
    }
}
