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

//! A maximal multi-fan at a critical edge of the Shannon triangle S_4, its fan
//! equation, and one shift along a linear sequence.
//!
//! cargo run --example fans

use mgcolor::fans::{build_maximal_multifan, extract_linear_sequence, fan_equation_residual, shift};
use mgcolor::oracle::{chromatic_index, is_critical_edge};
use mgcolor::structures::make_shannon;
use mgcolor::{Budget, EdgeColoring, EdgeId};

fn main() {
    let g = make_shannon(4).unwrap();
    let e = EdgeId(0);
    assert!(is_critical_edge(&g, e, &mut Budget::default()).unwrap());

    // a 5-coloring of G - e, pulled back so that e is the only uncolored edge
    let (rest, map) = g.remove_edges(&[e].into()).unwrap();
    let chi = chromatic_index(&rest, &mut Budget::default()).unwrap();
    let phi: EdgeColoring = chi.certificate.with_palette(5).pull_back(&map);

    let (x, y) = g.endpoints(e);
    let fan = build_maximal_multifan(&g, &phi, x, e).unwrap();
    println!("fan at {} anchored at {}:", x.0, y.0);
    for entry in &fan.entries {
        println!("  edge {} to {} (witness {:?})", entry.edge.0, entry.vertex.0, entry.witness);
    }
    println!("fan equation residual with 5 colors: {}", fan_equation_residual(&g, &fan, 5));

    let z = fan.vertices().into_iter().find(|&z| z != y).unwrap();
    let seq = extract_linear_sequence(&fan, z).unwrap();
    let shifted = shift(&g, &phi, &seq).unwrap();
    shifted.validate(&g).unwrap();
    let (moved, _) = seq.last();
    println!("after shifting to {}, edge {} is uncolored instead of edge {}", z.0, moved.0, e.0);
}
