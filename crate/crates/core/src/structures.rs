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

//! Named graph families, the Shannon-subgraph detector and test corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("multiplicities must be positive, got T({r}, {s}, {t})")]
    NonPositive { r: usize, s: usize, t: usize },
    #[error("Shannon graphs need degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("cannot place {m} edges on {n} vertices with multiplicity at most {mu}")]
    TooManyEdges { n: usize, m: usize, mu: usize },
}

/// T(r, s, t): vertices x=0, y=1, z=2 with μ(x,y)=r, μ(y,z)=s, μ(x,z)=t.
pub fn make_t(r: usize, s: usize, t: usize) -> Result<Multigraph, StructureError> {
    if r == 0 || s == 0 || t == 0 {
        return Err(StructureError::NonPositive { r, s, t });
    }
    let pairs = std::iter::repeat((0, 1))
        .take(r)
        .chain(std::iter::repeat((1, 2)).take(s))
        .chain(std::iter::repeat((0, 2)).take(t));
    Ok(Multigraph::build(3, pairs).expect("valid triangle"))
}

/// Multiplicities `(r, s, t)` of the Shannon graph of degree `d`.
pub fn shannon_multiplicities(d: usize) -> (usize, usize, usize) {
    (d / 2, d / 2, (d + 1) / 2)
}

/// S_d = T(⌊d/2⌋, ⌊d/2⌋, ⌊(d+1)/2⌋).
pub fn make_shannon(d: usize) -> Result<Multigraph, StructureError> {
    if d < 2 {
        return Err(StructureError::DegreeTooSmall(d));
    }
    let (r, s, t) = shannon_multiplicities(d);
    make_t(r, s, t)
}

pub fn complete(n: usize) -> Multigraph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Multigraph::build(n, pairs).expect("simple graph")
}

/// The Petersen graph: outer 5-cycle 0..4, spokes, inner pentagram 5..9.
pub fn petersen() -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    Multigraph::build(10, pairs).expect("valid")
}

/// Three vertices and the edges realizing a Shannon graph on them:
/// `edges[0]` joins `vertices[0]`,`vertices[1]`; `edges[1]` joins
/// `vertices[1]`,`vertices[2]`; `edges[2]` joins `vertices[0]`,`vertices[2]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShannonWitness {
    pub vertices: [VertexId; 3],
    pub edges: [Vec<EdgeId>; 3],
}

/// Searches all vertex triples for a subgraph containing S_d.
pub fn detect_shannon_subgraph(g: &Multigraph, d: usize) -> Result<Option<ShannonWitness>, StructureError> {
    if d < 2 {
        return Err(StructureError::DegreeTooSmall(d));
    }
    let (r, s, t) = shannon_multiplicities(d);
    let n = g.vertex_count();
    let take = |a: VertexId, b: VertexId, k: usize| -> Option<Vec<EdgeId>> {
        let edges = g.edges_between(a, b);
        (edges.len() >= k).then(|| edges[..k].to_vec())
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (a, b, c) = (VertexId(a), VertexId(b), VertexId(c));
                // the pair carrying t, then the apex y opposite it
                for (x, z, y) in [(a, c, b), (a, b, c), (b, c, a)] {
                    if let (Some(xy), Some(yz), Some(xz)) = (take(x, y, r), take(y, z, s), take(x, z, t)) {
                        return Ok(Some(ShannonWitness { vertices: [x, y, z], edges: [xy, yz, xz] }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Uniform random multigraph with exactly `m` edges and multiplicity at
/// most `mu`.
pub fn random_multigraph<R: Rng>(n: usize, m: usize, mu: usize, rng: &mut R) -> Result<Multigraph, StructureError> {
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    if m > all.len() * mu {
        return Err(StructureError::TooManyEdges { n, m, mu });
    }
    let mut count = vec![0usize; all.len()];
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let open: Vec<usize> = (0..all.len()).filter(|&i| count[i] < mu).collect();
        let &i = open.choose(rng).expect("capacity checked");
        count[i] += 1;
        pairs.push(all[i]);
    }
    Ok(Multigraph::build(n, pairs).expect("valid pairs"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Source {
    Exhaustive,
    Random,
    Named,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub source: Source,
    pub graph: Multigraph,
}

/// Bounds for [`gen_corpus`]. The exhaustive part lists every multigraph
/// without isolated vertices inside its bounds, once per sorted edge list;
/// the random part draws `count` graphs from a seeded stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub exhaustive_n_max: usize,
    pub exhaustive_m_max: usize,
    pub exhaustive_mu_max: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub mu_max: usize,
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn standard(seed: u64) -> Self {
        CorpusSpec {
            exhaustive_n_max: 4,
            exhaustive_m_max: 8,
            exhaustive_mu_max: 3,
            n_max: 7,
            m_max: 14,
            mu_max: 3,
            count: 500,
            seed,
        }
    }
}

/// Every multigraph on exactly `n` vertices, none isolated, with at most
/// `m_max` edges and multiplicity at most `mu_max`. Edge lists are sorted.
pub fn enumerate_multigraphs(n: usize, m_max: usize, mu_max: usize) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut mult = vec![0usize; pairs.len()];
    let mut out = Vec::new();
    loop {
        let m: usize = mult.iter().sum();
        if m >= 1 && m <= m_max {
            let mut covered = vec![false; n];
            for (i, &k) in mult.iter().enumerate() {
                if k > 0 {
                    covered[pairs[i].0] = true;
                    covered[pairs[i].1] = true;
                }
            }
            if covered.iter().all(|&c| c) {
                let edges = pairs.iter().zip(&mult).flat_map(|(&p, &k)| std::iter::repeat(p).take(k));
                out.push(Multigraph::build(n, edges).expect("valid"));
            }
        }
        // odometer over multiplicity vectors
        let mut i = 0;
        loop {
            if i == mult.len() {
                return out;
            }
            if mult[i] < mu_max {
                mult[i] += 1;
                break;
            }
            mult[i] = 0;
            i += 1;
        }
    }
}

/// The named graphs every corpus includes.
pub fn named_graphs() -> Vec<(String, Multigraph)> {
    let mut named = vec![("K3".to_string(), complete(3)), ("K4".to_string(), complete(4)), ("Petersen".to_string(), petersen())];
    for d in 3..=6 {
        named.push((format!("S{d}"), make_shannon(d).expect("d >= 2")));
    }
    named.push(("T(1,1,2)".to_string(), make_t(1, 1, 2).expect("positive")));
    named.push(("T(2,2,3)".to_string(), make_t(2, 2, 3).expect("positive")));
    named
}

/// Deterministic corpus: exhaustive small graphs, then seeded random
/// graphs, then named graphs.
pub fn gen_corpus(spec: &CorpusSpec) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 2..=spec.exhaustive_n_max {
        for (i, graph) in enumerate_multigraphs(n, spec.exhaustive_m_max, spec.exhaustive_mu_max).into_iter().enumerate() {
            out.push(CorpusEntry { name: format!("exhaustive-n{n}-{i}"), source: Source::Exhaustive, graph });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let lo = spec.n_max.min(3);
    for i in 0..spec.count {
        let n = rng.gen_range(lo..=spec.n_max);
        let capacity = n * (n - 1) / 2 * spec.mu_max;
        let m = rng.gen_range(1..=spec.m_max.min(capacity));
        let graph = random_multigraph(n, m, spec.mu_max, &mut rng).expect("within capacity");
        out.push(CorpusEntry { name: format!("random-{}-{i}", spec.seed), source: Source::Random, graph });
    }
    for (name, graph) in named_graphs() {
        out.push(CorpusEntry { name, source: Source::Named, graph });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shannon_shapes() {
        let s3 = make_shannon(3).unwrap();
        assert_eq!(s3, make_t(1, 1, 2).unwrap());
        assert_eq!(s3.degrees(), vec![3, 2, 3]);
        let s4 = make_shannon(4).unwrap();
        assert_eq!(s4.degrees(), vec![4, 4, 4]);
        assert_eq!(make_t(1, 1, 1).unwrap().multiplicity(), 1);
        assert_eq!(make_t(0, 1, 1), Err(StructureError::NonPositive { r: 0, s: 1, t: 1 }));
        assert_eq!(make_shannon(1), Err(StructureError::DegreeTooSmall(1)));
    }

    #[test]
    fn shannon_degrees_follow_formula() {
        for d in 2..=12 {
            let g = make_shannon(d).unwrap();
            let (r, s, t) = shannon_multiplicities(d);
            assert_eq!(g.degrees(), vec![r + t, r + s, s + t]);
            assert_eq!(g.max_degree(), d);
            if d % 2 == 0 {
                assert!(g.degrees().iter().all(|&x| x == d));
            }
        }
    }

    #[test]
    fn detector() {
        let s4 = make_shannon(4).unwrap();
        let w = detect_shannon_subgraph(&s4, 4).unwrap().unwrap();
        assert_eq!(w.edges.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2, 2]);
        assert_eq!(detect_shannon_subgraph(&petersen(), 3).unwrap(), None);
        for d in 2..=9 {
            assert!(detect_shannon_subgraph(&make_shannon(d).unwrap(), d).unwrap().is_some());
        }
        // the heavy pair may sit anywhere in the triangle
        let g = Multigraph::build(4, [(3, 1), (1, 2), (2, 3), (1, 2)]).unwrap();
        let w = detect_shannon_subgraph(&g, 3).unwrap().unwrap();
        assert_eq!(w.edges[2].len(), 2);
        assert_eq!(detect_shannon_subgraph(&g, 4).unwrap(), None);
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert_eq!(p.multiplicity(), 1);
        assert_eq!(p.vertices_of_degree_at_least(3).len(), 10);
    }

    #[test]
    fn enumeration_counts() {
        // n = 2: one pair, multiplicity 1..=3
        assert_eq!(enumerate_multigraphs(2, 8, 3).len(), 3);
        // n = 3, simple: the three 2-edge paths and the triangle
        assert_eq!(enumerate_multigraphs(3, 8, 1).len(), 4);
    }

    #[test]
    fn corpus_is_deterministic() {
        let spec = CorpusSpec { count: 40, ..CorpusSpec::standard(7) };
        let a = gen_corpus(&spec);
        let b = gen_corpus(&spec);
        assert_eq!(a.len(), b.len());
        assert!(a.iter().zip(&b).all(|(x, y)| x.graph == y.graph && x.name == y.name));
        for entry in a.iter().filter(|e| e.source == Source::Random) {
            assert!(entry.graph.edge_count() <= 14 && entry.graph.multiplicity() <= 3);
        }
        assert!(a.iter().any(|e| e.name == "Petersen"));
        let other = gen_corpus(&CorpusSpec { count: 40, ..CorpusSpec::standard(8) });
        assert!(a.iter().zip(&other).any(|(x, y)| x.graph != y.graph));
    }

    #[test]
    fn random_graph_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_multigraph(4, 12, 2, &mut rng).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.multiplicity(), 2);
        assert!(random_multigraph(3, 7, 2, &mut rng).is_err());
    }
}
