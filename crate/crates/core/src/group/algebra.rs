use alloc::vec::Vec;

use super::GeneratedGroup;
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Smallest-first greedy generating set for the group formed by `elements`.
pub(crate) fn group_from_elements(degree: usize, elements: &[Permutation]) -> Result<GeneratedGroup> {
    let mut group = GeneratedGroup::trivial(degree);
    let mut gens: Vec<Permutation> = Vec::new();
    for e in elements {
        if !group.contains(e)? {
            gens.push(e.clone());
            group = GeneratedGroup::new(degree, gens.clone())?;
        }
    }
    Ok(group)
}

/// `H ∩ K` by enumerating the smaller group and sifting into the other.
pub fn intersect_small(h: &GeneratedGroup, k: &GeneratedGroup, cap: &BigCount) -> Result<GeneratedGroup> {
    if h.degree() != k.degree() {
        return Err(Error::DegreeMismatch {
            left: h.degree(),
            right: k.degree(),
        });
    }
    for g in [h, k] {
        let order = g.order();
        if &order > cap {
            return Err(Error::CapExceeded {
                what: "intersection operand order",
                size: order,
                cap: cap.clone(),
            });
        }
    }
    let (small, large) = if h.order() <= k.order() { (h, k) } else { (k, h) };
    let mut common = Vec::new();
    for e in small.enumerate(cap)? {
        if large.contains(&e)? {
            common.push(e);
        }
    }
    group_from_elements(h.degree(), &common)
}

/// `H ⊴ G`: every generator of `H` lies in `G`, and `h^s ∈ H` for all
/// generators `h` of `H` and `s` of `G`.
pub fn is_normal_in(h: &GeneratedGroup, g: &GeneratedGroup) -> Result<bool> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: h.degree(),
            right: g.degree(),
        });
    }
    for x in h.generators() {
        if !g.contains(x)? {
            return Ok(false);
        }
    }
    for s in g.generators() {
        for x in h.generators() {
            if !h.contains(&x.conjugate_by(s)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
