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

//! Class statistics over the standard test corpus.
//!
//! cargo run --release --example corpus

use std::collections::BTreeMap;

use mgcolor::oracle::chromatic_index;
use mgcolor::structures::{gen_corpus, CorpusSpec};
use mgcolor::Budget;

fn main() {
    let corpus = gen_corpus(&CorpusSpec::standard(0));
    let mut by_k: BTreeMap<usize, usize> = BTreeMap::new();
    for entry in &corpus {
        let chi = chromatic_index(&entry.graph, &mut Budget::default()).unwrap().value;
        *by_k.entry(chi - entry.graph.max_degree()).or_default() += 1;
    }
    println!("{} graphs", corpus.len());
    for (k, count) in by_k {
        println!("  χ' = Δ + {k}: {count}");
    }
}
