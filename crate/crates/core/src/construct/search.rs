use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{feasibility_of, FeasibilityReport};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::group::GeneratedGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub witnesses: Vec<FeasibilityReport>,
    pub candidates: usize,
    pub scanned: usize,
    pub target_valency: Option<usize>,
    pub scope: String,
}

/// Elements `g ∈ G \ H` of 2-power order with `g² ∈ H`.
pub fn two_element_candidates(g: &GeneratedGroup, h: &GeneratedGroup, cap: &BigCount) -> Result<Vec<Permutation>> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: h.degree(),
        });
    }
    for (i, x) in h.generators().iter().enumerate() {
        if !g.contains(x)? {
            return Err(Error::NotSubgroup { generator: i });
        }
    }
    let mut out = Vec::new();
    for x in g.enumerate(cap)? {
        if x.is_two_element() && h.contains(&(&x * &x))? && !h.contains(&x)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// Feasible candidates, optionally restricted to one valency.
pub fn scan_candidates(
    g: &GeneratedGroup,
    h: &GeneratedGroup,
    candidates: &[Permutation],
    target_valency: Option<usize>,
    cap: &BigCount,
) -> Result<Vec<FeasibilityReport>> {
    let mut out = Vec::new();
    for x in candidates {
        let report = feasibility_of(g, h, x, cap)?;
        if report.feasible && target_valency.is_none_or(|k| k == report.valency) {
            out.push(report);
        }
    }
    Ok(out)
}

/// Exhaustive scan of `G` for feasible elements; refuses groups above `cap`.
pub fn feasible_element_search(
    g: &GeneratedGroup,
    h: &GeneratedGroup,
    target_valency: Option<usize>,
    cap: &BigCount,
) -> Result<SearchReport> {
    let candidates = two_element_candidates(g, h, cap)?;
    let witnesses = scan_candidates(g, h, &candidates, target_valency, cap)?;
    Ok(SearchReport {
        witnesses,
        candidates: candidates.len(),
        scanned: crate::count::to_usize(&g.order()).unwrap_or(usize::MAX),
        target_valency,
        scope: alloc::format!("exhaustive up to |G| <= {cap}"),
    })
}
