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

//! Chromatic index and class of a few named multigraphs.
//!
//! cargo run --example chromatic_index

use mgcolor::oracle::{chromatic_index, classify};
use mgcolor::structures::named_graphs;
use mgcolor::Budget;

fn main() {
    println!("{:<12} {:>3} {:>3} {:>3}  class", "graph", "Δ", "μ", "χ'");
    for (name, g) in named_graphs() {
        let chi = chromatic_index(&g, &mut Budget::default()).expect("small graphs fit the default budget");
        let label = classify(&g, chi.value);
        println!(
            "{name:<12} {:>3} {:>3} {:>3}  {:?} (k = {})",
            g.max_degree(),
            g.multiplicity(),
            chi.value,
            label.class,
            label.k
        );
        chi.certificate.validate(&g).expect("certificates are proper");
    }
}
