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

//! Edge coloring of loopless multigraphs and constructive decompositions of
//! class II graphs.
//!
//! A graph with maximum degree Δ is class I when its chromatic index χ'
//! equals Δ and class II otherwise. This crate provides:
//!
//! - [`graph`]: immutable multigraphs with stable edge ids,
//! - [`coloring`]: partial proper colorings, missing colors, Kempe chains,
//! - [`fans`]: multi-fans, linear sequences and shifting,
//! - [`colorizer`]: an exact decision search and a `Δ + μ` colorer,
//! - [`oracle`]: exact chromatic index, criticality, maximum Δ-colorable
//!   subgraphs and small-instance probes,
//! - [`decompose`]: splitting a class II graph with `χ' = Δ + k` into class I
//!   parts of maximum degree Δ and k, and into a maximum Δ-colorable part
//!   plus a remainder of maximum degree at most μ,
//! - [`structures`]: named graph families, the Shannon-subgraph detector and
//!   test corpora,
//! - [`cli`]: the MGF text format, JSON reports and the `mgcolor` command.

pub mod cli;
pub mod coloring;
pub mod colorizer;
pub mod decompose;
pub mod fans;
pub mod graph;
pub mod oracle;
pub mod structures;

pub use coloring::{Color, EdgeColoring};
pub use colorizer::Budget;
pub use graph::{EdgeId, Multigraph, VertexId};
