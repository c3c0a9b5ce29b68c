use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::GeneratedGroup;

/// Largest number of s-arcs enumerated explicitly.
pub const MAX_ARCS: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcOrbitReport {
    /// 0 for vertices, 1 for arcs, and so on
    pub s: usize,
    pub arc_count: usize,
    pub orbit_count: usize,
    pub transitive: bool,
}

/// All s-arcs `(v0, .., vs)`: consecutive vertices adjacent, `v(i-1) != v(i+1)`.
fn s_arcs(graph: &SimpleGraph, s: usize) -> Result<Vec<Vec<u32>>> {
    let mut arcs: Vec<Vec<u32>> = (0..graph.vertex_count() as u32).map(|v| alloc::vec![v]).collect();
    for _ in 0..s {
        let mut next = Vec::new();
        for arc in &arcs {
            let last = *arc.last().unwrap();
            let prev = if arc.len() >= 2 { Some(arc[arc.len() - 2]) } else { None };
            for &w in graph.neighbors(last as usize) {
                if Some(w) == prev {
                    continue;
                }
                let mut a = arc.clone();
                a.push(w);
                next.push(a);
            }
            if next.len() > MAX_ARCS {
                return Err(Error::CapExceeded {
                    what: "s-arc count",
                    size: next.len().into(),
                    cap: MAX_ARCS.into(),
                });
            }
        }
        arcs = next;
    }
    Ok(arcs)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbits of `group` on the s-arcs of `graph`, for `s <= 3`.
pub fn transitivity_tests(graph: &SimpleGraph, group: &GeneratedGroup, s: usize) -> Result<ArcOrbitReport> {
    if group.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch {
            left: graph.vertex_count(),
            right: group.degree(),
        });
    }
    if s > 3 {
        return Err(Error::InvalidParameter(alloc::format!("s = {s} exceeds 3")));
    }
    for (i, g) in group.generators().iter().enumerate() {
        if !graph.is_automorphism(g) {
            return Err(Error::NonAutomorphism { generator: i });
        }
    }
    let arcs = s_arcs(graph, s)?;
    let index: BTreeMap<&[u32], usize> = arcs.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..arcs.len()).collect();
    let mut image = alloc::vec![0u32; s + 1];
    for (i, arc) in arcs.iter().enumerate() {
        for g in group.generators() {
            for (slot, &v) in image.iter_mut().zip(arc) {
                *slot = g.apply(v);
            }
            let j = index[image.as_slice()];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let orbit_count = (0..arcs.len()).filter(|&i| find(&mut parent, i) == i).count();
    Ok(ArcOrbitReport {
        s,
        arc_count: arcs.len(),
        orbit_count,
        transitive: orbit_count == 1,
    })
}
