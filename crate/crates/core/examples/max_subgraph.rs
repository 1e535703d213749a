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

//! A maximum Δ-colorable subgraph whose remainder has maximum degree at
//! most μ, from the exact optimum and from the heuristic seed.
//!
//! cargo run --example max_subgraph

use mgcolor::decompose::{check_decomposition, decompose_maxsub};
use mgcolor::oracle::max_delta_colorable_subgraph_exact;
use mgcolor::structures::{make_shannon, petersen, random_multigraph};
use mgcolor::Budget;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let dense = random_multigraph(5, 19, 2, &mut rng).unwrap();
    for (name, g) in [("petersen", petersen()), ("S_4", make_shannon(4).unwrap()), ("dense", dense)] {
        let max = max_delta_colorable_subgraph_exact(&g, &mut Budget::default());
        println!("{name}: {} of {} edges are Δ-colorable", max.edges.len(), g.edge_count());
        for heuristic in [false, true] {
            match decompose_maxsub(&g, &mut Budget::default(), heuristic) {
                Ok(d) => {
                    let [a, b] = check_decomposition(&g, &d).unwrap();
                    println!(
                        "  heuristic={heuristic}: |H_1| = {}, Δ(H_2) = {}, potentials {:?}, {:?}",
                        a.edges, b.max_degree, d.log.potentials, d.status
                    );
                }
                Err(e) => println!("  heuristic={heuristic}: {e}"),
            }
        }
    }
}
