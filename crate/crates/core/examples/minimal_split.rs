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

//! The split at a smallest color class of an optimal coloring.
//!
//! cargo run --example minimal_split

use mgcolor::decompose::{check_decomposition, split_minimal_class};
use mgcolor::structures::{complete, make_shannon};
use mgcolor::Budget;

fn main() {
    for (name, g) in [("K_3", complete(3)), ("K_5", complete(5)), ("S_6", make_shannon(6).unwrap())] {
        let d = split_minimal_class(&g, &mut Budget::default()).unwrap();
        let [a, b] = check_decomposition(&g, &d).unwrap();
        println!(
            "{name}: targets {:?}, parts of {} and {} edges, smallest class sizes {:?}",
            d.targets, a.edges, b.edges, d.log.class_sizes
        );
    }
}
