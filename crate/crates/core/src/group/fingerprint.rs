use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::GeneratedGroup;
use crate::count::{self, BigCount};
use crate::error::Result;

/// Isomorphism-invariant summary used to tell small groups apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    #[serde(with = "crate::count::decimal")]
    pub order: BigCount,
    pub is_abelian: bool,
    #[serde(with = "crate::count::decimal")]
    pub center_order: BigCount,
    #[serde(with = "crate::count::decimal")]
    pub derived_order: BigCount,
    #[serde(with = "crate::count::decimal")]
    pub exponent: BigCount,
    /// sorted ascending
    pub orbit_lengths: Vec<usize>,
}

impl GroupFingerprint {
    pub fn of(group: &GeneratedGroup, cap: &BigCount) -> Result<Self> {
        let elements = group.enumerate(cap)?;
        let gens = group.generators();
        let center = elements
            .iter()
            .filter(|e| gens.iter().all(|s| e.commutes_with(s)))
            .count();
        let exponent = elements
            .iter()
            .fold(BigCount::from(1u32), |acc, e| count::lcm(&acc, &e.order()));
        Ok(GroupFingerprint {
            order: BigCount::from(elements.len()),
            is_abelian: group.is_abelian(),
            center_order: BigCount::from(center),
            derived_order: derived_subgroup(group)?.order(),
            exponent,
            orbit_lengths: group.orbit_lengths(),
        })
    }
}

/// Normal closure of the commutators of the generators.
pub fn derived_subgroup(group: &GeneratedGroup) -> Result<GeneratedGroup> {
    let gens = group.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator(b)?;
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(group, comms)
}

/// `⟨seeds⟩^G`.
pub fn normal_closure(group: &GeneratedGroup, seeds: Vec<crate::perm::Permutation>) -> Result<GeneratedGroup> {
    let degree = group.degree();
    let mut current = GeneratedGroup::new(degree, seeds)?;
    loop {
        let mut extra = None;
        'scan: for s in group.generators() {
            for d in current.generators() {
                let c = d.conjugate_by(s)?;
                if !current.contains(&c)? {
                    extra = Some(c);
                    break 'scan;
                }
            }
        }
        match extra {
            Some(c) => current = current.with_generator(&c)?,
            None => return Ok(current),
        }
    }
}
