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

//! Partial proper edge colorings and (α,β)-chain recoloring.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{EdgeId, EdgeMap, Multigraph, VertexId};

/// A color in `1..=K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u32);

impl Color {
    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type ColorSet = BTreeSet<Color>;

/// All colors of a palette of size `k`.
pub fn palette_colors(k: usize) -> impl Iterator<Item = Color> {
    (1..=k as u32).map(Color)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color {color} exceeds palette size {palette}")]
    PaletteOverflow { color: usize, palette: usize },
    #[error("chain colors must differ, got {0} twice")]
    SameColors(Color),
    #[error("chain from {start} no longer matches the coloring")]
    StaleChain { start: VertexId },
    #[error("coloring covers {coloring} edges but the graph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },
}

/// Why a coloring fails to be a proper partial edge coloring of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum Violation {
    #[error("edges {first} and {second} share color {color} at {vertex}")]
    Conflict { vertex: VertexId, first: EdgeId, second: EdgeId, color: Color },
    #[error("edge {edge} has color {color} outside palette of size {palette}")]
    OutOfPalette { edge: EdgeId, color: Color, palette: usize },
    #[error("coloring has {coloring} entries for a graph with {graph} edges")]
    SizeMismatch { coloring: usize, graph: usize },
}

/// Assignment of colors from `1..=palette` to some of the edges of a graph.
///
/// The value itself does not know the graph; every query that needs
/// incidence takes it as an argument. Nothing prevents building an improper
/// assignment, which is what [`EdgeColoring::validate`] is for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    palette: usize,
    colors: Vec<Option<Color>>,
}

impl EdgeColoring {
    /// All `m` edges uncolored.
    pub fn uncolored(palette: usize, m: usize) -> Self {
        EdgeColoring { palette, colors: vec![None; m] }
    }

    pub fn from_colors(palette: usize, colors: Vec<Option<Color>>) -> Self {
        EdgeColoring { palette, colors }
    }

    /// Shorthand for tests and examples: `0` means uncolored.
    pub fn from_values(palette: usize, values: &[u32]) -> Self {
        let colors = values.iter().map(|&c| (c != 0).then_some(Color(c))).collect();
        EdgeColoring { palette, colors }
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.colors[e.0]
    }

    pub fn set(&mut self, e: EdgeId, c: Option<Color>) {
        self.colors[e.0] = c;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().flatten().count()
    }

    pub fn colored_edges(&self) -> BTreeSet<EdgeId> {
        self.edge_ids_where(|c| c.is_some())
    }

    pub fn uncolored_edges(&self) -> BTreeSet<EdgeId> {
        self.edge_ids_where(|c| c.is_none())
    }

    fn edge_ids_where(&self, keep: impl Fn(Option<Color>) -> bool) -> BTreeSet<EdgeId> {
        self.colors.iter().enumerate().filter(|(_, c)| keep(**c)).map(|(i, _)| EdgeId(i)).collect()
    }

    /// Number of distinct colors actually used.
    pub fn used_color_count(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    /// Same assignment, different palette size.
    pub fn with_palette(mut self, palette: usize) -> Self {
        self.palette = palette;
        self
    }

    /// φ(v): colors on colored edges at `v`.
    pub fn present(&self, g: &Multigraph, v: VertexId) -> ColorSet {
        g.incident(v).iter().filter_map(|&e| self.colors[e.0]).collect()
    }

    /// φ̄(v) = C \ φ(v).
    pub fn missing(&self, g: &Multigraph, v: VertexId) -> ColorSet {
        let present = self.present(g, v);
        palette_colors(self.palette).filter(|c| !present.contains(c)).collect()
    }

    pub fn is_missing(&self, g: &Multigraph, v: VertexId, c: Color) -> bool {
        self.edge_with_color(g, v, c).is_none()
    }

    /// The edge at `v` colored `c`, if any. Returns the smallest id when the
    /// coloring is improper at `v`.
    pub fn edge_with_color(&self, g: &Multigraph, v: VertexId, c: Color) -> Option<EdgeId> {
        g.incident(v).iter().copied().find(|e| self.colors[e.0] == Some(c))
    }

    /// E_α.
    pub fn color_class(&self, c: Color) -> Result<Vec<EdgeId>, ColoringError> {
        if c.get() == 0 || c.get() > self.palette {
            return Err(ColoringError::PaletteOverflow { color: c.get(), palette: self.palette });
        }
        Ok(self.edge_ids_where(|x| x == Some(c)).into_iter().collect())
    }

    /// φ(E₀).
    pub fn colors_of(&self, edges: &[EdgeId]) -> ColorSet {
        edges.iter().filter_map(|e| self.colors[e.0]).collect()
    }

    /// Checks properness and palette bounds against `g`.
    pub fn validate(&self, g: &Multigraph) -> Result<(), Violation> {
        if self.colors.len() != g.edge_count() {
            return Err(Violation::SizeMismatch { coloring: self.colors.len(), graph: g.edge_count() });
        }
        for (i, c) in self.colors.iter().enumerate() {
            if let Some(c) = *c {
                if c.get() == 0 || c.get() > self.palette {
                    return Err(Violation::OutOfPalette { edge: EdgeId(i), color: c, palette: self.palette });
                }
            }
        }
        let mut seen: Vec<Option<EdgeId>> = vec![None; self.palette + 1];
        for v in g.vertices() {
            for &e in g.incident(v) {
                if let Some(c) = self.colors[e.0] {
                    if let Some(first) = seen[c.get()] {
                        return Err(Violation::Conflict { vertex: v, first, second: e, color: c });
                    }
                    seen[c.get()] = Some(e);
                }
            }
            for &e in g.incident(v) {
                if let Some(c) = self.colors[e.0] {
                    seen[c.get()] = None;
                }
            }
        }
        Ok(())
    }

    /// Coloring of the graph on the new side of `map`; edges without an old
    /// counterpart are uncolored.
    pub fn pull_forward(&self, map: &EdgeMap) -> EdgeColoring {
        let colors = (0..map.new_len()).map(|i| map.backward(EdgeId(i)).and_then(|old| self.colors[old.0])).collect();
        EdgeColoring { palette: self.palette, colors }
    }

    /// Coloring of the graph on the old side of `map`; removed edges are
    /// uncolored.
    pub fn pull_back(&self, map: &EdgeMap) -> EdgeColoring {
        self.pull_forward(&map.inverse())
    }

    /// Applies `rename` to every colored edge and sets the palette.
    pub fn recolor(&self, palette: usize, rename: impl Fn(Color) -> Option<Color>) -> EdgeColoring {
        EdgeColoring { palette, colors: self.colors.iter().map(|c| c.and_then(&rename)).collect() }
    }
}

/// Wire form: `{"palette": K, "assignment": [[edge, color], ...]}` with
/// `-1` marking an uncolored edge.
#[derive(Serialize, Deserialize)]
struct ColoringWire {
    palette: usize,
    assignment: Vec<(usize, i64)>,
}

impl Serialize for EdgeColoring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let assignment = self.colors.iter().enumerate().map(|(i, c)| (i, c.map_or(-1, |c| c.0 as i64))).collect();
        ColoringWire { palette: self.palette, assignment }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = ColoringWire::deserialize(deserializer)?;
        let mut colors = vec![None; wire.assignment.len()];
        for (e, c) in wire.assignment {
            let slot = colors.get_mut(e).ok_or_else(|| D::Error::custom(format!("edge id {e} out of range")))?;
            *slot = match c {
                -1 => None,
                c if c >= 1 && c <= u32::MAX as i64 => Some(Color(c as u32)),
                c => return Err(D::Error::custom(format!("invalid color {c}"))),
            };
        }
        Ok(EdgeColoring { palette: wire.palette, colors })
    }
}

/// One component of the subgraph spanned by two color classes.
///
/// Paths are listed from one end to the other, cycles from `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeChain {
    pub colors: (Color, Color),
    pub start: VertexId,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub closed: bool,
}

impl KempeChain {
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// Ends of a path chain; `None` for cycles.
    pub fn ends(&self) -> Option<(VertexId, VertexId)> {
        if self.closed {
            None
        } else {
            Some((self.vertices[0], *self.vertices.last().expect("chains are nonempty")))
        }
    }
}

fn check_palette(phi: &EdgeColoring, c: Color) -> Result<(), ColoringError> {
    if c.get() == 0 || c.get() > phi.palette {
        Err(ColoringError::PaletteOverflow { color: c.get(), palette: phi.palette })
    } else {
        Ok(())
    }
}

/// Follows alternating colors from `start`, beginning with `first`.
/// Returns the edges, the vertices reached after each edge, and whether the
/// walk closed up at `start`.
fn walk(
    g: &Multigraph,
    phi: &EdgeColoring,
    start: VertexId,
    first: Color,
    second: Color,
) -> (Vec<EdgeId>, Vec<VertexId>, bool) {
    let (mut edges, mut verts) = (Vec::new(), Vec::new());
    let (mut v, mut c) = (start, first);
    while let Some(e) = phi.edge_with_color(g, v, c) {
        edges.push(e);
        v = g.opposite(e, v);
        if v == start {
            return (edges, verts, true);
        }
        verts.push(v);
        c = if c == first { second } else { first };
    }
    (edges, verts, false)
}

/// P_v(α, β, φ): the (α,β)-chain through `v`. A vertex missing both colors
/// forms a chain by itself.
pub fn kempe_chain(
    g: &Multigraph,
    phi: &EdgeColoring,
    v: VertexId,
    alpha: Color,
    beta: Color,
) -> Result<KempeChain, ColoringError> {
    if alpha == beta {
        return Err(ColoringError::SameColors(alpha));
    }
    check_palette(phi, alpha)?;
    check_palette(phi, beta)?;
    let (a_edges, a_verts, closed) = walk(g, phi, v, alpha, beta);
    if closed {
        let mut vertices = vec![v];
        vertices.extend(a_verts);
        return Ok(KempeChain { colors: (alpha, beta), start: v, vertices, edges: a_edges, closed });
    }
    let (b_edges, b_verts, _) = walk(g, phi, v, beta, alpha);
    let mut vertices: Vec<_> = b_verts.into_iter().rev().collect();
    vertices.push(v);
    vertices.extend(a_verts);
    let mut edges: Vec<_> = b_edges.into_iter().rev().collect();
    edges.extend(a_edges);
    Ok(KempeChain { colors: (alpha, beta), start: v, vertices, edges, closed: false })
}

/// φ/P: exchanges the two chain colors on `chain`. Fails if the chain no
/// longer matches `phi`.
pub fn kempe_swap(g: &Multigraph, phi: &EdgeColoring, chain: &KempeChain) -> Result<EdgeColoring, ColoringError> {
    let (alpha, beta) = chain.colors;
    let current = kempe_chain(g, phi, chain.start, alpha, beta)?;
    if &current != chain {
        return Err(ColoringError::StaleChain { start: chain.start });
    }
    let mut out = phi.clone();
    for &e in &chain.edges {
        let c = phi.color(e).expect("chain edges are colored");
        out.set(e, Some(if c == alpha { beta } else { alpha }));
    }
    Ok(out)
}

/// Partition of the palette relative to two vertices `x`, `y`:
/// `c1` missing at both, `c2` present only at `y`, `c3` present only at
/// `x`, `c4` present at both.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RelativePartition {
    pub c1: ColorSet,
    pub c2: ColorSet,
    pub c3: ColorSet,
    pub c4: ColorSet,
}

pub fn partition_relative(g: &Multigraph, phi: &EdgeColoring, x: VertexId, y: VertexId) -> RelativePartition {
    let px = phi.present(g, x);
    let py = phi.present(g, y);
    let mut part = RelativePartition::default();
    for c in palette_colors(phi.palette) {
        let set = match (px.contains(&c), py.contains(&c)) {
            (false, false) => &mut part.c1,
            (false, true) => &mut part.c2,
            (true, false) => &mut part.c3,
            (true, true) => &mut part.c4,
        };
        set.insert(c);
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Multigraph {
        Multigraph::build(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn s4() -> Multigraph {
        Multigraph::build(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]).unwrap()
    }

    fn set(values: &[u32]) -> ColorSet {
        values.iter().map(|&c| Color(c)).collect()
    }

    #[test]
    fn validate_triangle() {
        let g = k3();
        assert_eq!(EdgeColoring::from_values(3, &[1, 2, 3]).validate(&g), Ok(()));
        let bad = EdgeColoring::from_values(3, &[1, 1, 2]).validate(&g);
        assert_eq!(
            bad,
            Err(Violation::Conflict { vertex: VertexId(1), first: EdgeId(0), second: EdgeId(1), color: Color(1) })
        );
        assert!(matches!(
            EdgeColoring::from_values(2, &[1, 2, 3]).validate(&g),
            Err(Violation::OutOfPalette { edge: EdgeId(2), .. })
        ));
    }

    #[test]
    fn all_distinct_on_shannon_four() {
        let g = s4();
        let phi = EdgeColoring::from_values(6, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(phi.validate(&g), Ok(()));
        // vertex 0 sees 1,2 (to 1) and 5,6 (to 2); the opposite pair 1-2 holds 3,4
        assert_eq!(phi.missing(&g, VertexId(0)), set(&[3, 4]));
        assert_eq!(phi.missing(&g, VertexId(1)), set(&[5, 6]));
        assert_eq!(phi.missing(&g, VertexId(2)), set(&[1, 2]));
    }

    #[test]
    fn missing_and_classes() {
        let g = k3();
        let phi = EdgeColoring::from_values(3, &[1, 2, 3]);
        // edge 1 (colored 2) joins 1 and 2; vertex 0 is opposite it
        assert_eq!(phi.missing(&g, VertexId(0)), set(&[2]));
        assert_eq!(phi.color_class(Color(3)), Ok(vec![EdgeId(2)]));
        assert_eq!(
            EdgeColoring::from_values(6, &[1; 3]).color_class(Color(7)),
            Err(ColoringError::PaletteOverflow { color: 7, palette: 6 })
        );
    }

    #[test]
    fn triangle_chain_and_swap() {
        let g = k3();
        let phi = EdgeColoring::from_values(3, &[1, 2, 3]);
        let chain = kempe_chain(&g, &phi, VertexId(1), Color(1), Color(2)).unwrap();
        assert_eq!(chain.edges.len(), 2);
        assert!(!chain.closed);
        assert_eq!(chain.ends(), Some((VertexId(2), VertexId(0))));

        let swapped = kempe_swap(&g, &phi, &chain).unwrap();
        assert_eq!(swapped, EdgeColoring::from_values(3, &[2, 1, 3]));
        assert_eq!(swapped.validate(&g), Ok(()));

        let again = kempe_chain(&g, &swapped, VertexId(1), Color(1), Color(2)).unwrap();
        assert_eq!(kempe_swap(&g, &swapped, &again).unwrap(), phi);

        assert_eq!(kempe_swap(&g, &swapped, &chain), Err(ColoringError::StaleChain { start: VertexId(1) }));
    }

    #[test]
    fn singleton_chain_is_identity() {
        let g = k3();
        let phi = EdgeColoring::from_values(4, &[1, 2, 3]);
        // vertex 0 misses 2 and 4
        let chain = kempe_chain(&g, &phi, VertexId(0), Color(2), Color(4)).unwrap();
        assert!(chain.is_trivial());
        assert_eq!(chain.vertices, vec![VertexId(0)]);
        assert_eq!(kempe_swap(&g, &phi, &chain).unwrap(), phi);
        assert_eq!(kempe_chain(&g, &phi, VertexId(0), Color(2), Color(2)), Err(ColoringError::SameColors(Color(2))));
    }

    #[test]
    fn even_cycle_chain_closes() {
        let g = Multigraph::build(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let phi = EdgeColoring::from_values(2, &[1, 2, 1, 2]);
        let chain = kempe_chain(&g, &phi, VertexId(2), Color(1), Color(2)).unwrap();
        assert!(chain.closed);
        assert_eq!(chain.edges.len(), 4);
        assert_eq!(chain.vertices.len(), 4);
        let swapped = kempe_swap(&g, &phi, &chain).unwrap();
        assert_eq!(swapped, EdgeColoring::from_values(2, &[2, 1, 2, 1]));
    }

    #[test]
    fn wire_format() {
        let phi = EdgeColoring::from_values(3, &[2, 0, 1]);
        let text = serde_json::to_string(&phi).unwrap();
        assert_eq!(text, r#"{"palette":3,"assignment":[[0,2],[1,-1],[2,1]]}"#);
        assert_eq!(serde_json::from_str::<EdgeColoring>(&text).unwrap(), phi);
        assert!(serde_json::from_str::<EdgeColoring>(r#"{"palette":3,"assignment":[[0,0]]}"#).is_err());
    }

    #[test]
    fn relative_partition() {
        let g = k3();
        let phi = EdgeColoring::from_values(3, &[1, 2, 3]);
        // edge 0 colored 1 joins 0 and 1: vertex 0 has {1,3}, vertex 1 has {1,2}
        let p = partition_relative(&g, &phi, VertexId(0), VertexId(1));
        assert_eq!(p.c1, set(&[]));
        assert_eq!(p.c4, set(&[1]));
        assert_eq!(p.c2, set(&[2]));
        assert_eq!(p.c3, set(&[3]));

        let lonely = Multigraph::empty(2);
        let phi = EdgeColoring::uncolored(4, 0);
        let p = partition_relative(&lonely, &phi, VertexId(0), VertexId(1));
        assert!(p.c2.is_empty() && p.c3.is_empty());
        assert_eq!(p.c1.len(), 4);
    }
}
