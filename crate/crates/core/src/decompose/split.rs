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


use crate::coloring::{Color, EdgeColoring};
use crate::colorizer::Budget;
use crate::graph::{Multigraph, VertexId};
use crate::oracle::chromatic_index;

use super::{trace_of, DecomposeError, Decomposition};

/// Splits a total coloring along the colors present at `x`, given a vertex
/// `v` missing none of the colors missing at `x`. The first part has
/// maximum degree `d(x)`, the second `K − d(x)`, and both are class I.
pub fn split_by_missing_pair(
    g: &Multigraph,
    phi: &EdgeColoring,
    x: VertexId,
    v: VertexId,
) -> Result<Decomposition, DecomposeError> {
    if !phi.is_total() {
        return Err(DecomposeError::Precondition("coloring is not total".into()));
    }
    if let Err(v) = phi.validate(g) {
        return Err(DecomposeError::Precondition(format!("coloring is not proper: {v}")));
    }
    let missing_x = phi.missing(g, x);
    if let Some(&c) = missing_x.intersection(&phi.missing(g, v)).next() {
        return Err(DecomposeError::SharedMissing(c));
    }
    // present colors at x first, then the rest, each in increasing order
    let present = phi.present(g, x);
    let order: Vec<Color> = present.iter().chain(missing_x.iter()).copied().collect();
    let mut rank = vec![0u32; phi.palette() + 1];
    for (i, c) in order.iter().enumerate() {
        rank[c.get()] = i as u32 + 1;
    }
    let renamed = phi.recolor(phi.palette(), |c| Some(Color(rank[c.get()])));
    Ok(Decomposition::from_palette_split(g, &renamed, g.degree(x)))
}

/// Splits a class II graph into two class I parts by minimizing the first
/// color class of an optimal coloring and splitting at an edge of it.
pub fn split_minimal_class(g: &Multigraph, budget: &mut Budget) -> Result<Decomposition, DecomposeError> {
    let chi = chromatic_index(g, budget)?;
    if chi.value == g.max_degree() {
        return Err(DecomposeError::ClassOne);
    }
    let mut phi = chi.certificate;
    let first = Color(1);
    let mut sizes = Vec::new();
    loop {
        let class = phi.color_class(first)?;
        if let Some(&last) = sizes.last() {
            if class.len() >= last {
                return Err(DecomposeError::Descent { what: "|E_1| did not decrease".into(), trace: trace_of(&sizes) });
            }
        }
        sizes.push(class.len());
        if class.is_empty() {
            return Err(DecomposeError::Descent {
                what: format!("color 1 vanished from an optimal {}-coloring", chi.value),
                trace: trace_of(&sizes),
            });
        }
        let movable = class.iter().find_map(|&e| {
            let (u, v) = g.endpoints(e);
            phi.missing(g, u).intersection(&phi.missing(g, v)).next().map(|&c| (e, c))
        });
        match movable {
            Some((e, c)) => phi.set(e, Some(c)),
            None => {
                let e = class[0];
                let (u, v) = g.endpoints(e);
                let (x, y) = if g.degree(v) > g.degree(u) { (v, u) } else { (u, v) };
                let mut d = split_by_missing_pair(g, &phi, x, y)?;
                d.log.class_sizes = sizes;
                return Ok(d);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::check_decomposition;
    use crate::structures::{complete, make_shannon, petersen};

    #[test]
    fn triangle_split() {
        let g = complete(3);
        // edges 01, 02, 12 colored 1, 2, 3; vertex 0 misses 3, vertex 1 sees it
        let phi = EdgeColoring::from_values(3, &[1, 2, 3]);
        let d = split_by_missing_pair(&g, &phi, VertexId(0), VertexId(1)).unwrap();
        assert_eq!(d.part1.len(), 2);
        assert_eq!(d.part2.len(), 1);
        assert_eq!(d.targets, [2, 1]);
        check_decomposition(&g, &d).unwrap();
    }

    #[test]
    fn shared_missing_rejected() {
        let g = Multigraph::build(4, [(0, 1), (2, 3)]).unwrap();
        let phi = EdgeColoring::from_values(2, &[1, 1]);
        let err = split_by_missing_pair(&g, &phi, VertexId(0), VertexId(2)).unwrap_err();
        assert_eq!(err, DecomposeError::SharedMissing(Color(2)));
    }

    #[test]
    fn minimal_class_on_named_graphs() {
        for (g, d1, d2) in [(complete(3), 2, 1), (petersen(), 3, 1), (make_shannon(4).unwrap(), 4, 2)] {
            let d = split_minimal_class(&g, &mut Budget::default()).unwrap();
            check_decomposition(&g, &d).unwrap();
            assert_eq!(d.targets, [d1, d2]);
            assert_eq!(d.class_one, [true, true]);
            assert!(d.log.class_sizes.windows(2).all(|w| w[1] < w[0]));
        }
        assert_eq!(split_minimal_class(&complete(4), &mut Budget::default()), Err(DecomposeError::ClassOne));
    }
}
