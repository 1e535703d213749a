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

//! Colorings: the Δ + μ colorer, the exact search, and a Kempe swap.
//!
//! cargo run --example coloring

use mgcolor::coloring::{kempe_chain, kempe_swap};
use mgcolor::colorizer::{color_exact, color_vizing, ExactOutcome};
use mgcolor::structures::make_shannon;
use mgcolor::{Budget, Color, VertexId};

fn main() {
    let g = make_shannon(4).unwrap();
    let phi = color_vizing(&g).unwrap();
    println!("S_4: Δ = {}, μ = {}, Δ + μ coloring uses {} colors", g.max_degree(), g.multiplicity(), phi.used_color_count());

    for k in [5, 6] {
        match color_exact(&g, k, &mut Budget::default()) {
            ExactOutcome::Found(psi) => println!("{k} colors: {:?}", psi.colors()),
            ExactOutcome::Infeasible => println!("{k} colors: impossible"),
            ExactOutcome::BudgetExhausted => println!("{k} colors: budget ran out"),
        }
    }

    let chain = kempe_chain(&g, &phi, VertexId(0), Color(1), Color(3)).unwrap();
    let swapped = kempe_swap(&g, &phi, &chain).unwrap();
    swapped.validate(&g).unwrap();
    println!("(1,3)-chain at 0 has {} edges, closed = {}", chain.edges.len(), chain.closed);
    println!("missing at 0 before {:?}, after {:?}", phi.missing(&g, VertexId(0)), swapped.missing(&g, VertexId(0)));
}
