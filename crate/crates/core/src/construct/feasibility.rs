use serde::{Deserialize, Serialize};

use super::CosetGraphSpec;
use crate::count::{self, BigCount};
use crate::error::{Error, Result};
use crate::group::{intersect_small, GeneratedGroup};
use crate::perm::Permutation;

/// Whether `g` is a feasible element for `(G, H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub witness: Permutation,
    pub is_two_element: bool,
    pub g_squared_in_h: bool,
    pub generates: bool,
    /// `g ∉ H`; otherwise `HgH = H` and the coset graph has no edges
    pub moves_h: bool,
    /// `|H : H ∩ H^g|`
    pub valency: usize,
    pub feasible: bool,
}

/// Evaluates every feasibility condition for `g` without requiring any of them.
pub fn feasibility_of(
    g_group: &GeneratedGroup,
    h: &GeneratedGroup,
    g: &Permutation,
    cap: &BigCount,
) -> Result<FeasibilityReport> {
    let is_two_element = g.is_two_element();
    let g_squared_in_h = h.contains(&(g * g))?;
    let moves_h = !h.contains(g)?;
    let generates = h.with_generator(g)?.order() == g_group.order();
    let common = intersect_small(h, &h.conjugate(g)?, cap)?;
    let valency = count::to_usize(&(h.order() / common.order())).ok_or(Error::CapExceeded {
        what: "valency",
        size: h.order(),
        cap: cap.clone(),
    })?;
    Ok(FeasibilityReport {
        witness: g.clone(),
        is_two_element,
        g_squared_in_h,
        generates,
        moves_h,
        valency,
        feasible: is_two_element && g_squared_in_h && generates && moves_h,
    })
}

pub fn feasibility_check(spec: &CosetGraphSpec, cap: &BigCount) -> Result<FeasibilityReport> {
    feasibility_of(spec.group(), spec.subgroup(), spec.element(), cap)
}
