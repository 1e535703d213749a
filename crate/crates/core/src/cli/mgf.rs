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

//! The MGF multigraph text format.
//!
//! ```text
//! mgf <n> <m>
//! <u> <v>        one line per edge, edge ids in line order
//! ```
//!
//! `#` starts a comment that runs to the end of the line; blank lines are
//! ignored. Serialization is canonical: header, then edges in id order,
//! single spaces, one trailing newline.

use std::fmt::Write;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MgfError {
    #[error("line {line}: expected header `mgf <n> <m>`")]
    BadHeader { line: usize },
    #[error("missing header")]
    Empty,
    #[error("line {line}: expected `<u> <v>`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("header declares {declared} edges, found {found}")]
    CountMismatch { declared: usize, found: usize },
}

pub fn parse_mgf(text: &str) -> Result<Multigraph, MgfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((n, _)) = header else {
            match tokens.as_slice() {
                ["mgf", n, m] => match (n.parse(), m.parse()) {
                    (Ok(n), Ok(m)) => header = Some((n, m)),
                    _ => return Err(MgfError::BadHeader { line }),
                },
                _ => return Err(MgfError::BadHeader { line }),
            }
            continue;
        };
        let malformed = || MgfError::Malformed { line, text: content.to_string() };
        let [u, v] = tokens.as_slice() else { return Err(malformed()) };
        let (u, v): (usize, usize) = (u.parse().map_err(|_| malformed())?, v.parse().map_err(|_| malformed())?);
        for w in [u, v] {
            if w >= n {
                return Err(MgfError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(MgfError::Loop { line, vertex: u });
        }
        pairs.push((u, v));
    }
    let (n, m) = header.ok_or(MgfError::Empty)?;
    if pairs.len() != m {
        return Err(MgfError::CountMismatch { declared: m, found: pairs.len() });
    }
    Ok(Multigraph::build(n, pairs).expect("checked line by line"))
}

pub fn serialize_mgf(g: &Multigraph) -> String {
    let mut out = format!("mgf {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.endpoint_pairs() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

/// Hex SHA-256 of the canonical serialization.
pub fn digest(g: &Multigraph) -> String {
    hex::encode(Sha256::digest(serialize_mgf(g).as_bytes()))
}
