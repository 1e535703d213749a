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

//! Small-instance probes of two decomposition conjectures, and their replay.
//!
//! cargo run --example probe

use mgcolor::oracle::{probe_conjecture_pq, probe_matching_cover, replay_probe};
use mgcolor::structures::{make_shannon, petersen};

fn main() {
    let g = make_shannon(5).unwrap();
    for (p, q) in [(5, 2), (4, 3)] {
        let report = probe_conjecture_pq(&g, p, q, 1_000_000, 0).unwrap();
        println!("S_5 into class I parts of degree {p} and {q}: {:?} after {} nodes", report.outcome, report.nodes);
        assert!(replay_probe(&report).unwrap());
    }

    let report = probe_matching_cover(&petersen(), 1_000_000, 0).unwrap();
    println!("petersen, maximum matchings covered: {:?}", report.outcome);
    for case in &report.matchings {
        println!("  {:?}: {:?}", case.matching.iter().map(|e| e.0).collect::<Vec<_>>(), case.outcome);
    }
}
