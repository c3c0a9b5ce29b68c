//! Coset graphs, Cayley graphs, normality and normal quotients.

mod cayley;
mod coset_graph;
mod feasibility;
mod quotient;
mod search;

pub use cayley::{cayley_graph, connection_set, normality_test, CayleyGraph, ConnectionSet, NormalityReport};
pub use coset_graph::{coset_graph, in_double_coset, CosetGraph};
pub use feasibility::{feasibility_check, feasibility_of, FeasibilityReport};
pub use quotient::{induced_action, normal_quotient, QuotientReport};
pub use search::{feasible_element_search, scan_candidates, two_element_candidates, SearchReport};

use crate::error::{Error, Result};
use crate::group::GeneratedGroup;
use crate::perm::Permutation;

/// The triple `(G, H, g)` defining `Cos(G, H, g)`: `H ≤ G`, `g ∈ G`, `g² ∈ H`.
#[derive(Debug, Clone)]
pub struct CosetGraphSpec {
    g: GeneratedGroup,
    h: GeneratedGroup,
    element: Permutation,
}

impl CosetGraphSpec {
    pub fn new(g: GeneratedGroup, h: GeneratedGroup, element: Permutation) -> Result<Self> {
        if h.degree() != g.degree() || element.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: if h.degree() != g.degree() {
                    h.degree()
                } else {
                    element.degree()
                },
            });
        }
        for (i, x) in h.generators().iter().enumerate() {
            if !g.contains(x)? {
                return Err(Error::NotSubgroup { generator: i });
            }
        }
        if !g.contains(&element)? {
            return Err(Error::NotMember);
        }
        if !h.contains(&(&element * &element))? {
            return Err(Error::InvalidCosetSpec("g² is not in H"));
        }
        Ok(CosetGraphSpec { g, h, element })
    }

    pub fn group(&self) -> &GeneratedGroup {
        &self.g
    }

    pub fn subgroup(&self) -> &GeneratedGroup {
        &self.h
    }

    pub fn element(&self) -> &Permutation {
        &self.element
    }
}
