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

//! Exact routines checked against brute force on small instances, plus a
//! few frozen values on named graphs.

mod common;

use std::collections::BTreeSet;

use mgcolor::decompose::{check_decomposition, decompose_class1_pair, decompose_maxsub, split_minimal_class};
use mgcolor::oracle::{
    chromatic_index, classify, max_delta_colorable_subgraph_exact, maximum_matchings, odd_set_deficit,
    probe_conjecture_pq, probe_matching_cover, replay_probe, Class, ProbeOutcome,
};
use mgcolor::structures::{complete, enumerate_multigraphs, make_shannon, make_t, petersen};
use mgcolor::{Budget, EdgeId, Multigraph};

fn small_graphs() -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 2..=4 {
        out.extend(enumerate_multigraphs(n, 7, 3));
    }
    out
}

#[test]
fn chromatic_index_matches_brute_force() {
    for g in small_graphs() {
        let chi = chromatic_index(&g, &mut Budget::default()).unwrap();
        assert_eq!(chi.value, common::brute_chromatic_index(&g), "{g:?}");
        assert!(chi.certificate.is_total());
        chi.certificate.validate(&g).unwrap();
        assert!(chi.certificate.used_color_count() <= chi.value);
    }
}

#[test]
fn max_subgraph_matches_brute_force() {
    for g in small_graphs() {
        let max = max_delta_colorable_subgraph_exact(&g, &mut Budget::default());
        assert!(max.optimal);
        assert_eq!(max.edges.len(), common::brute_max_colorable(&g, g.max_degree()), "{g:?}");
        assert_eq!(max.coloring.colored_edges(), max.edges);
        max.coloring.validate(&g).unwrap();
    }
}

#[test]
fn matchings_match_brute_force() {
    for g in small_graphs() {
        let found = maximum_matchings(&g, &mut Budget::default()).unwrap();
        let size = common::brute_max_colorable(&g, 1);
        let m = g.edge_count();
        let mut expected = BTreeSet::new();
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let set: BTreeSet<EdgeId> = (0..m).filter(|i| mask & (1 << i) != 0).map(EdgeId).collect();
            let mut seen = BTreeSet::new();
            if set.iter().all(|&e| {
                let (u, v) = g.endpoints(e);
                seen.insert(u) && seen.insert(v)
            }) {
                expected.insert(set);
            }
        }
        assert_eq!(found.into_iter().collect::<BTreeSet<_>>(), expected, "{g:?}");
    }
}

#[test]
fn petersen_facts() {
    let g = petersen();
    let chi = chromatic_index(&g, &mut Budget::default()).unwrap().value;
    let label = classify(&g, chi);
    assert_eq!((chi, label.class, label.k), (4, Class::ClassTwo, 1));
    let max = max_delta_colorable_subgraph_exact(&g, &mut Budget::default());
    assert_eq!(max.edges.len(), 13);
    assert_eq!(odd_set_deficit(&g, 3), 0);
    assert_eq!(common::all_max_subgraphs(&g, 1000).unwrap().len(), 75);
    assert_eq!(maximum_matchings(&g, &mut Budget::default()).unwrap().len(), 6);
}

#[test]
fn shannon_and_t_graphs() {
    for d in 2..=7 {
        let g = make_shannon(d).unwrap();
        let chi = chromatic_index(&g, &mut Budget::default()).unwrap().value;
        assert_eq!((g.max_degree(), chi), (d, 3 * d / 2));
    }
    let g = make_t(2, 2, 1).unwrap();
    assert_eq!(chromatic_index(&g, &mut Budget::default()).unwrap().value, 5);
}

#[test]
fn decompositions_on_small_class_two() {
    let mut seen = 0;
    for g in small_graphs() {
        let chi = chromatic_index(&g, &mut Budget::default()).unwrap().value;
        let delta = g.max_degree();
        if chi == delta {
            assert!(decompose_class1_pair(&g, &mut Budget::default()).is_err());
            continue;
        }
        seen += 1;
        let d = decompose_class1_pair(&g, &mut Budget::default()).unwrap();
        assert_eq!(d.targets, [delta, chi - delta]);
        check_decomposition(&g, &d).unwrap();
        for part in [&d.part1, &d.part2] {
            let set: BTreeSet<EdgeId> = part.iter().copied().collect();
            let (sub, _) = g.edge_subgraph(&set).unwrap();
            assert_eq!(common::brute_chromatic_index(&sub), sub.max_degree());
        }
        let d = split_minimal_class(&g, &mut Budget::default()).unwrap();
        check_decomposition(&g, &d).unwrap();
        let d = decompose_maxsub(&g, &mut Budget::default(), false).unwrap();
        check_decomposition(&g, &d).unwrap();
        assert_eq!(d.part1.len(), common::brute_max_colorable(&g, delta));
    }
    assert!(seen > 50, "{seen}");
}

#[test]
fn probes() {
    let r = probe_conjecture_pq(&complete(3), 2, 1, 100_000, 0).unwrap();
    assert_eq!(r.outcome, ProbeOutcome::Verified);
    assert!(replay_probe(&r).unwrap());

    let g = make_shannon(4).unwrap();
    let r = probe_conjecture_pq(&g, 3, 3, 1_000_000, 0).unwrap();
    assert_eq!(r.outcome, ProbeOutcome::Verified);
    assert!(replay_probe(&r).unwrap());
    let r = probe_conjecture_pq(&g, 4, 2, 1_000_000, 0).unwrap();
    assert_eq!(r.outcome, ProbeOutcome::Verified);
    let r = probe_conjecture_pq(&g, 4, 2, 3, 0).unwrap();
    assert_eq!(r.outcome, ProbeOutcome::BudgetExhausted);

    let r = probe_matching_cover(&petersen(), 1_000_000, 0).unwrap();
    assert_eq!(r.outcome, ProbeOutcome::Verified);
    assert_eq!(r.matchings.len(), 6);
    assert!(replay_probe(&r).unwrap());
}
