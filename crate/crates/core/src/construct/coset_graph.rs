use alloc::vec::Vec;

use super::CosetGraphSpec;
use crate::count::BigCount;
use crate::error::Result;
use crate::graph::SimpleGraph;
use crate::group::{CosetAction, GeneratedGroup};
use crate::perm::Permutation;

/// `Cos(G, H, g)` together with the coset enumeration behind its vertices.
#[derive(Debug, Clone)]
pub struct CosetGraph {
    pub graph: SimpleGraph,
    pub cosets: CosetAction,
}

/// `r ∈ HgH`, tested as `g⁻¹h⁻¹r ∈ H` over the listed elements `h` of `H`.
pub fn in_double_coset(
    h_elements: &[Permutation],
    h: &GeneratedGroup,
    g: &Permutation,
    r: &Permutation,
) -> Result<bool> {
    let g_inv = g.inverse();
    for x in h_elements {
        let candidate = g_inv.compose(&x.inverse())?.compose(r)?;
        if h.contains(&candidate)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Vertices are the cosets `Hx` in enumeration order; `Hx ~ Hy` iff
/// `yx⁻¹ ∈ HgH`, i.e. `Hy = H(ghx)` for some `h ∈ H`.
pub fn coset_graph(spec: &CosetGraphSpec, max_index: u64, cap: &BigCount) -> Result<CosetGraph> {
    let cosets = CosetAction::new(spec.group(), spec.subgroup(), max_index)?;
    let h_elements = spec.subgroup().enumerate(cap)?;
    let g = spec.element();
    let mut adjacency = Vec::with_capacity(cosets.index());
    for (i, rep) in cosets.representatives().iter().enumerate() {
        let mut nbrs = Vec::new();
        for h in &h_elements {
            let y = g.compose(h)?.compose(rep)?;
            let j = cosets.coset_of(&y).expect("ghx lies in G");
            if j != i {
                nbrs.push(j as u32);
            }
        }
        adjacency.push(nbrs);
    }
    let graph = SimpleGraph::from_adjacency(adjacency)?;
    Ok(CosetGraph { graph, cosets })
}
