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

//! Shannon triangles and the graphs T(r, s, t).
//!
//! cargo run --example shannon

use mgcolor::oracle::chromatic_index;
use mgcolor::structures::{detect_shannon_subgraph, make_shannon, make_t, shannon_multiplicities};
use mgcolor::Budget;

fn main() {
    for d in 2..=8 {
        let g = make_shannon(d).unwrap();
        let chi = chromatic_index(&g, &mut Budget::default()).unwrap().value;
        println!("S_{d}: multiplicities {:?}, χ' = {chi} = ⌊3Δ/2⌋", shannon_multiplicities(d));
    }
    let g = make_t(3, 3, 2).unwrap();
    let witness = detect_shannon_subgraph(&g, 5).unwrap();
    println!("T(3,3,2) contains S_5: {}", witness.is_some());
    if let Some(w) = witness {
        println!("  on vertices {:?}", w.vertices.map(|v| v.0));
    }
}
