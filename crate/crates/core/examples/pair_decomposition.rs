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

//! Splitting a class II multigraph with χ' = Δ + k into class I parts of
//! maximum degree Δ and k.
//!
//! cargo run --example pair_decomposition

use mgcolor::decompose::{check_decomposition, decompose_class1_pair_with, PairOptions};
use mgcolor::oracle::chromatic_index;
use mgcolor::structures::{make_shannon, make_t, petersen};
use mgcolor::{Budget, Multigraph};

fn main() {
    let fat_triangle = Multigraph::build(3, [(0, 1), (0, 1), (0, 1), (0, 2), (0, 2), (0, 2), (1, 2)]).unwrap();
    let graphs = [
        ("petersen", petersen()),
        ("S_5", make_shannon(5).unwrap()),
        ("T(2,2,1)", make_t(2, 2, 1).unwrap()),
        ("fat triangle", fat_triangle),
    ];
    for (name, g) in graphs {
        let phi = chromatic_index(&g, &mut Budget::default()).unwrap().certificate;
        // without the direct split the overlap reduction and peeling get used
        for direct_split in [true, false] {
            let d = decompose_class1_pair_with(&g, &phi, PairOptions { direct_split }, &mut Budget::default()).unwrap();
            let [a, b] = check_decomposition(&g, &d).unwrap();
            println!(
                "{name:<13} direct={direct_split:<5} parts {:>2}+{:<2} edges, Δ {} and {}, {} overlap passes, {} peels",
                a.edges,
                b.edges,
                a.max_degree,
                b.max_degree,
                d.log.overlap_passes.len(),
                d.log.peeled
            );
        }
    }
}
