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

//! Loopless undirected multigraphs with stable edge identities.
//!
//! A [`Multigraph`] is an immutable value. Edges are numbered densely in the
//! order they were supplied; operations that change the edge set build a new
//! graph and hand back an [`EdgeMap`] relating old and new edge ids.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex, dense in `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

/// Index of an edge, dense in `0..m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} is a loop at vertex {vertex}")]
    Loop { index: usize, vertex: usize },
    #[error("edge {index} references vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("edge id {0} does not exist")]
    UnknownEdge(usize),
    #[error("multiplicity requested between {0} and itself")]
    SameVertex(usize),
}

/// Relation between the edge ids of a graph and those of a graph derived
/// from it by removing or adding edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMap {
    old_to_new: Vec<Option<EdgeId>>,
    new_to_old: Vec<Option<EdgeId>>,
}

impl EdgeMap {
    pub fn identity(m: usize) -> Self {
        let ids: Vec<_> = (0..m).map(|i| Some(EdgeId(i))).collect();
        EdgeMap { old_to_new: ids.clone(), new_to_old: ids }
    }

    /// New id of an old edge, `None` if it was removed.
    pub fn forward(&self, old: EdgeId) -> Option<EdgeId> {
        self.old_to_new.get(old.0).copied().flatten()
    }

    /// Old id of a new edge, `None` if it was added.
    pub fn backward(&self, new: EdgeId) -> Option<EdgeId> {
        self.new_to_old.get(new.0).copied().flatten()
    }

    pub fn inverse(&self) -> EdgeMap {
        EdgeMap { old_to_new: self.new_to_old.clone(), new_to_old: self.old_to_new.clone() }
    }

    pub fn old_len(&self) -> usize {
        self.old_to_new.len()
    }

    pub fn new_len(&self) -> usize {
        self.new_to_old.len()
    }

    /// Composition: `self` maps A to B, `next` maps B to C.
    pub fn then(&self, next: &EdgeMap) -> EdgeMap {
        let old_to_new = self.old_to_new.iter().map(|b| b.and_then(|b| next.forward(b))).collect();
        let new_to_old = next.new_to_old.iter().map(|b| b.and_then(|b| self.backward(b))).collect();
        EdgeMap { old_to_new, new_to_old }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<_> = self.edges.iter().map(|(u, v)| (u.0, v.0)).collect();
        f.debug_struct("Multigraph").field("n", &self.n).field("edges", &pairs).finish()
    }
}

impl Multigraph {
    /// Builds a graph on `n` vertices; edge `i` joins `pairs[i]`.
    pub fn build<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        let mut incidence = vec![Vec::new(); n];
        for (index, (u, v)) in pairs.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { index, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { index, vertex: u });
            }
            incidence[u].push(EdgeId(index));
            incidence[v].push(EdgeId(index));
            edges.push((VertexId(u), VertexId(v)));
        }
        Ok(Multigraph { n, edges, incidence })
    }

    pub fn empty(n: usize) -> Self {
        Multigraph { n, edges: Vec::new(), incidence: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Endpoint pairs in edge id order, as supplied at construction.
    pub fn endpoint_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u.0, v.0))
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        e.0 < self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e.0];
        debug_assert!(a == v || b == v, "{e} is not incident with {v}");
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_incident(&self, e: EdgeId, v: VertexId) -> bool {
        let (a, b) = self.edges[e.0];
        a == v || b == v
    }

    /// Edges incident with `v`, in increasing id order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v.0].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Δ(G); zero for a graph without vertices.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(G); zero for a graph without vertices.
    pub fn min_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges joining `u` and `v`, in increasing id order.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.incidence[u.0].iter().copied().filter(|&e| self.opposite(e, u) == v).collect()
    }

    pub fn multiplicity_between(&self, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
        if u == v {
            return Err(GraphError::SameVertex(u.0));
        }
        Ok(self.incidence[u.0].iter().filter(|&&e| self.opposite(e, u) == v).count())
    }

    /// μ(G), the largest number of parallel edges.
    pub fn multiplicity(&self) -> usize {
        let mut count = vec![0usize; self.n];
        let mut best = 0;
        for u in self.vertices() {
            for &e in &self.incidence[u.0] {
                let w = self.opposite(e, u);
                count[w.0] += 1;
                best = best.max(count[w.0]);
            }
            for &e in &self.incidence[u.0] {
                count[self.opposite(e, u).0] = 0;
            }
        }
        best
    }

    pub fn is_simple(&self) -> bool {
        self.multiplicity() <= 1
    }

    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.incidence[v.0].iter().map(|&e| self.opposite(e, v)).collect()
    }

    /// Sorted set `{ v : d(v) >= t }`.
    pub fn vertices_of_degree_at_least(&self, t: usize) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.degree(v) >= t).collect()
    }

    /// Drops the edges in `removed`; surviving edges keep their relative order.
    pub fn remove_edges(&self, removed: &BTreeSet<EdgeId>) -> Result<(Multigraph, EdgeMap), GraphError> {
        if let Some(bad) = removed.iter().find(|e| !self.contains_edge(**e)) {
            return Err(GraphError::UnknownEdge(bad.0));
        }
        let mut old_to_new = vec![None; self.edge_count()];
        let mut new_to_old = Vec::new();
        let mut pairs = Vec::new();
        for e in self.edge_ids() {
            if removed.contains(&e) {
                continue;
            }
            old_to_new[e.0] = Some(EdgeId(new_to_old.len()));
            new_to_old.push(Some(e));
            pairs.push((self.edges[e.0].0 .0, self.edges[e.0].1 .0));
        }
        let g = Multigraph::build(self.n, pairs).expect("subgraph of a valid graph");
        Ok((g, EdgeMap { old_to_new, new_to_old }))
    }

    /// Keeps exactly the edges in `kept`.
    pub fn edge_subgraph(&self, kept: &BTreeSet<EdgeId>) -> Result<(Multigraph, EdgeMap), GraphError> {
        if let Some(bad) = kept.iter().find(|e| !self.contains_edge(**e)) {
            return Err(GraphError::UnknownEdge(bad.0));
        }
        let removed: BTreeSet<_> = self.edge_ids().filter(|e| !kept.contains(e)).collect();
        self.remove_edges(&removed)
    }

    /// Appends edges after the existing ones.
    pub fn add_edges<I>(&self, pairs: I) -> Result<(Multigraph, EdgeMap), GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let m = self.edge_count();
        let all: Vec<_> = self.endpoint_pairs().chain(pairs).collect();
        let g = Multigraph::build(self.n, all.iter().copied()).map_err(|err| match err {
            GraphError::Loop { index, vertex } => GraphError::Loop { index: index - m, vertex },
            GraphError::VertexOutOfRange { index, vertex, n } => {
                GraphError::VertexOutOfRange { index: index - m, vertex, n }
            }
            other => other,
        })?;
        let old_to_new = (0..m).map(|i| Some(EdgeId(i))).collect();
        let new_to_old = (0..g.edge_count()).map(|i| (i < m).then_some(EdgeId(i))).collect();
        Ok((g, EdgeMap { old_to_new, new_to_old }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Multigraph {
        Multigraph::build(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn s3() -> Multigraph {
        Multigraph::build(3, [(0, 1), (1, 2), (0, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn triangle_basics() {
        let g = k3();
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.multiplicity(), 1);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert!(g.vertices_of_degree_at_least(3).is_empty());
    }

    #[test]
    fn shannon_three() {
        let g = s3();
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.multiplicity(), 2);
        assert_eq!(g.degree(VertexId(1)), 2);
        assert_eq!(g.multiplicity_between(VertexId(0), VertexId(2)), Ok(2));
        assert_eq!(g.multiplicity_between(VertexId(2), VertexId(2)), Err(GraphError::SameVertex(2)));
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Multigraph::build(2, [(0, 0)]), Err(GraphError::Loop { index: 0, vertex: 0 }));
        assert!(matches!(
            Multigraph::build(2, [(0, 1), (1, 5)]),
            Err(GraphError::VertexOutOfRange { index: 1, vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn remove_and_renumber() {
        let g = k3();
        let (p, map) = g.remove_edges(&BTreeSet::from([EdgeId(2)])).unwrap();
        assert_eq!(p.degrees(), vec![1, 2, 1]);
        assert_eq!(map.forward(EdgeId(2)), None);
        assert_eq!(map.backward(EdgeId(1)), Some(EdgeId(1)));

        let (t, _) = s3().remove_edges(&BTreeSet::from([EdgeId(3)])).unwrap();
        assert_eq!(t.multiplicity(), 1);
        assert_eq!(t.degrees(), vec![2, 2, 2]);

        let (same, map) = g.remove_edges(&BTreeSet::new()).unwrap();
        assert_eq!(same, g);
        assert_eq!(map, EdgeMap::identity(3));

        assert_eq!(g.remove_edges(&BTreeSet::from([EdgeId(9)])).unwrap_err(), GraphError::UnknownEdge(9));
    }

    #[test]
    fn add_reports_relative_index() {
        let g = k3();
        let (h, map) = g.add_edges([(0, 1)]).unwrap();
        assert_eq!(h.multiplicity(), 2);
        assert_eq!(map.backward(EdgeId(3)), None);
        assert_eq!(g.add_edges([(1, 1)]).unwrap_err(), GraphError::Loop { index: 0, vertex: 1 });
    }

    #[test]
    fn composed_maps() {
        let g = s3();
        let (a, m1) = g.remove_edges(&BTreeSet::from([EdgeId(0)])).unwrap();
        let (_, m2) = a.remove_edges(&BTreeSet::from([EdgeId(0)])).unwrap();
        let both = m1.then(&m2);
        assert_eq!(both.forward(EdgeId(2)), Some(EdgeId(0)));
        assert_eq!(both.backward(EdgeId(1)), Some(EdgeId(3)));
        assert_eq!(both.forward(EdgeId(1)), None);
    }
}
