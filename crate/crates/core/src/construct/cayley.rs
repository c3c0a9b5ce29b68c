use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{in_double_coset, CosetGraphSpec};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{automorphism_group, SimpleGraph};
use crate::group::{is_normal_in, CosetAction, GeneratedGroup};
use crate::perm::{Permutation, Point};

/// Inverse-closed, identity-free set of group elements, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionSet {
    degree: usize,
    elements: Vec<Permutation>,
}

impl ConnectionSet {
    pub fn new(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for e in &elements {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: e.degree(),
                });
            }
            if e.is_identity() {
                return Err(Error::InvalidConnectionSet("contains the identity"));
            }
            if !set.insert(e.clone()) {
                return Err(Error::InvalidConnectionSet("duplicate element"));
            }
        }
        if elements.iter().any(|e| !set.contains(&e.inverse())) {
            return Err(Error::InvalidConnectionSet("not closed under inverses"));
        }
        Ok(ConnectionSet {
            degree,
            elements: set.into_iter().collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `S^a = {a⁻¹ s a}`.
    pub fn conjugate_by(&self, a: &Permutation) -> Result<ConnectionSet> {
        let elements = self
            .elements
            .iter()
            .map(|s| s.conjugate_by(a))
            .collect::<Result<Vec<_>>>()?;
        ConnectionSet::new(self.degree, elements)
    }
}

/// `S = R ∩ HgH` for a subgroup `R ≤ G` acting regularly on `[G:H]`.
pub fn connection_set(
    r: &GeneratedGroup,
    spec: &CosetGraphSpec,
    max_index: u64,
    cap: &BigCount,
) -> Result<ConnectionSet> {
    let g = spec.group();
    for (i, x) in r.generators().iter().enumerate() {
        if !g.contains(x)? {
            return Err(Error::NotSubgroup { generator: i });
        }
    }
    let cosets = CosetAction::new(g, spec.subgroup(), max_index)?;
    let action = GeneratedGroup::new(
        cosets.index(),
        r.generators()
            .iter()
            .map(|x| cosets.action_of(x))
            .collect::<Result<Vec<_>>>()?,
    )?;
    if !action.is_transitive() || r.order() != BigCount::from(cosets.index()) {
        return Err(Error::NotRegular);
    }
    let h_elements = spec.subgroup().enumerate(cap)?;
    let mut s = Vec::new();
    for x in r.enumerate(cap)? {
        if !x.is_identity() && in_double_coset(&h_elements, spec.subgroup(), spec.element(), &x)? {
            s.push(x);
        }
    }
    ConnectionSet::new(g.degree(), s)
}

/// `Cay(R, S)` on the elements of `R`, identity first.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    pub graph: SimpleGraph,
    pub elements: Vec<Permutation>,
}

impl CayleyGraph {
    pub fn vertex_of(&self, x: &Permutation) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    /// Right multiplication by each generator of `R`, as vertex permutations.
    pub fn right_regular(&self, r: &GeneratedGroup) -> Result<GeneratedGroup> {
        let gens = r
            .generators()
            .iter()
            .map(|a| {
                let images = self
                    .elements
                    .iter()
                    .map(|x| {
                        let y = x.compose(a)?;
                        self.vertex_of(&y).map(|v| v as Point).ok_or(Error::NotMember)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        GeneratedGroup::new(self.elements.len(), gens)
    }
}

/// `x ~ y` iff `yx⁻¹ ∈ S`; the neighbours of `x` are `sx`.
pub fn cayley_graph(r: &GeneratedGroup, s: &ConnectionSet, cap: &BigCount) -> Result<CayleyGraph> {
    if s.degree() != r.degree() {
        return Err(Error::DegreeMismatch {
            left: r.degree(),
            right: s.degree(),
        });
    }
    for x in s.elements() {
        if !r.contains(x)? {
            return Err(Error::InvalidConnectionSet("element outside R"));
        }
    }
    let elements = r.enumerate(cap)?;
    let index: BTreeMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let adjacency = elements
        .iter()
        .map(|x| {
            s.elements()
                .iter()
                .map(|t| index[&t.compose_unchecked(x)] as u32)
                .collect()
        })
        .collect();
    let graph = SimpleGraph::from_adjacency(adjacency)?;
    Ok(CayleyGraph { graph, elements })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityReport {
    pub normal: bool,
    #[serde(with = "crate::count::decimal")]
    pub aut_order: BigCount,
    pub connected: bool,
    pub vertex_count: usize,
    pub valency: usize,
}

/// Whether the right-regular copy of `R` is normal in `Aut Cay(R, S)`.
pub fn normality_test(r: &GeneratedGroup, s: &ConnectionSet, vertex_cap: usize) -> Result<NormalityReport> {
    let order = r.order();
    if order > BigCount::from(vertex_cap) {
        return Err(Error::CapExceeded {
            what: "Cayley graph vertex count",
            size: order,
            cap: vertex_cap.into(),
        });
    }
    let cay = cayley_graph(r, s, &BigCount::from(vertex_cap))?;
    let aut = automorphism_group(&cay.graph, vertex_cap)?;
    let regular = cay.right_regular(r)?;
    Ok(NormalityReport {
        normal: is_normal_in(&regular, &aut)?,
        aut_order: aut.order(),
        connected: cay.graph.is_connected(),
        vertex_count: cay.graph.vertex_count(),
        valency: s.len(),
    })
}
