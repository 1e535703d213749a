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

//! The MGF text format and the JSON reports of the `mgcolor` command, driven
//! in process: generate a graph, decompose it, and verify the saved report.
//!
//! cargo run --example command_line

use mgcolor::cli::mgf::{digest, parse_mgf, serialize_mgf};
use mgcolor::cli::run;
use mgcolor::structures::make_t;

fn main() {
    let g = make_t(2, 2, 2).unwrap();
    let text = serialize_mgf(&g);
    assert_eq!(parse_mgf(&text).unwrap(), g);
    print!("{text}");
    println!("digest {}", digest(&g));

    let dir = std::env::temp_dir().join(format!("mgcolor-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("t222.mgf");
    std::fs::write(&graph, text).unwrap();
    let graph = graph.to_str().unwrap();

    let (code, report) = run(["mgcolor", "--json", "false", "decompose", "--mode", "pair", graph]);
    println!("decompose exited with {code}");
    println!("{}", report.lines().take(12).collect::<Vec<_>>().join("\n"));

    let saved = dir.join("report.json");
    std::fs::write(&saved, &report).unwrap();
    let (code, verdict) = run(["mgcolor", "verify", graph, saved.to_str().unwrap()]);
    println!("verify exited with {code}: {verdict}");
    std::fs::remove_dir_all(&dir).unwrap();
}
