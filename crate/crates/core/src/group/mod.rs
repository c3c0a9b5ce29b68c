//! Permutation groups given by generators, answered from a memoized
//! stabilizer chain.

mod algebra;
mod chain;
mod coset;
mod fingerprint;
mod standard;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

pub use algebra::{intersect_small, is_normal_in};
pub use chain::{Level, Sift, StabilizerChain};
pub use coset::{minimal_coset_rep, CosetAction};
pub use fingerprint::{derived_subgroup, normal_closure, GroupFingerprint};
pub use standard::{alternating, cyclic, dihedral, direct_product, frobenius_13, symmetric};

use crate::count::{self, BigCount};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};

/// Default bound on the number of elements any enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// A permutation group `⟨generators⟩` of fixed degree.
///
/// The stabilizer chain is built on first use and never rebuilt. Concurrent
/// first uses may each build a chain; one wins and the others are dropped.
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceBox<StabilizerChain>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AltSym {
    Alternating,
    Symmetric,
}

impl GeneratedGroup {
    /// Repeated generators are dropped; an empty list yields the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        let mut seen = BTreeSet::new();
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if seen.insert(g.clone()) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        Ok(GeneratedGroup {
            degree,
            generators: gens,
            chain: OnceBox::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| Box::new(StabilizerChain::build(self.degree, &self.generators, &[])))
    }

    /// A fresh chain whose base starts with `base_hint`; not memoized.
    pub fn build_chain(&self, base_hint: &[Point]) -> StabilizerChain {
        StabilizerChain::build(self.degree, &self.generators, base_hint)
    }

    pub fn order(&self) -> BigCount {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            })
        } else {
            Ok(())
        }
    }

    pub fn sift(&self, p: &Permutation) -> Result<Sift> {
        self.check_degree(p)?;
        Ok(self.chain().sift(p))
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        Ok(self.sift(p)?.is_member())
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn all_even(&self) -> bool {
        self.generators.iter().all(Permutation::is_even)
    }

    /// Orbits as sorted point lists, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let n = self.degree;
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = alloc::vec![start as Point];
            let mut k = 0;
            while k < orbit.len() {
                let beta = orbit[k];
                for g in &self.generators {
                    let gamma = g.apply(beta);
                    if !seen[gamma as usize] {
                        seen[gamma as usize] = true;
                        orbit.push(gamma);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn orbit(&self, alpha: Point) -> Result<Vec<Point>> {
        self.check_point(alpha)?;
        Ok(self
            .orbits()
            .into_iter()
            .find(|o| o.binary_search(&alpha).is_ok())
            .expect("orbits partition the domain"))
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.orbits().iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    fn check_point(&self, alpha: Point) -> Result<()> {
        if alpha as usize >= self.degree {
            Err(Error::PointOutOfRange {
                point: alpha as usize,
                degree: self.degree,
            })
        } else {
            Ok(())
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// `G_α`, generated by the strong generators below a chain based at `α`.
    pub fn point_stabilizer(&self, alpha: Point) -> Result<GeneratedGroup> {
        self.check_point(alpha)?;
        let chain = self.build_chain(&[alpha]);
        let gens: Vec<Permutation> = chain.strong_generators(1).cloned().collect();
        GeneratedGroup::new(self.degree, gens)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == BigCount::from(self.degree)
    }

    /// Every point stabilizer trivial, i.e. every orbit has length `|G|`.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| BigCount::from(o.len()) == order)
    }

    /// All elements, sorted by image array (so the identity comes first).
    pub fn enumerate(&self, cap: &BigCount) -> Result<Vec<Permutation>> {
        let order = self.order();
        if &order > cap {
            return Err(Error::CapExceeded {
                what: "group order",
                size: order,
                cap: cap.clone(),
            });
        }
        let chain = self.chain();
        let mut elements = alloc::vec![Permutation::identity(self.degree)];
        // g = u_m ⋯ u_1 with u_i from the level-i transversal
        for level in chain.levels().iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.orbit().len());
            for e in &elements {
                for &pt in level.orbit() {
                    next.push(e.compose_unchecked(level.representative(pt).unwrap()));
                }
            }
            elements = next;
        }
        elements.sort_unstable();
        Ok(elements)
    }

    /// `H^g = g⁻¹ H g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<GeneratedGroup> {
        self.check_degree(g)?;
        let gens = self
            .generators
            .iter()
            .map(|h| h.conjugate_by(g))
            .collect::<Result<Vec<_>>>()?;
        GeneratedGroup::new(self.degree, gens)
    }

    /// `⟨self, extra⟩`.
    pub fn with_generator(&self, extra: &Permutation) -> Result<GeneratedGroup> {
        self.check_degree(extra)?;
        let mut gens = self.generators.clone();
        gens.push(extra.clone());
        GeneratedGroup::new(self.degree, gens)
    }

    /// Alternating or symmetric on the full domain, decided by exact order.
    pub fn recognize_alt_sym(&self) -> Option<AltSym> {
        let n = self.degree as u64;
        let order = self.order();
        if order == count::factorial(n) {
            Some(AltSym::Symmetric)
        } else if order == count::alternating_order(n) && self.all_even() {
            Some(AltSym::Alternating)
        } else {
            None
        }
    }

    pub fn fingerprint(&self, cap: &BigCount) -> Result<GroupFingerprint> {
        GroupFingerprint::of(self, cap)
    }
}

impl Clone for GeneratedGroup {
    fn clone(&self) -> Self {
        let chain = OnceBox::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(Box::new(c.clone()));
        }
        GeneratedGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl core::fmt::Debug for GeneratedGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("GeneratedGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Parses 1-based disjoint-cycle generators.
pub fn group_from_cycles(degree: usize, generators: &[&str]) -> Result<GeneratedGroup> {
    let gens = generators
        .iter()
        .map(|s| crate::perm::parse_cycles(s, degree))
        .collect::<Result<Vec<_>>>()?;
    GeneratedGroup::new(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cap() -> BigCount {
        BigCount::from(DEFAULT_ENUMERATION_CAP)
    }

    #[test]
    fn klein_four_is_regular() {
        let k = group_from_cycles(4, &["(1,2)(3,4)", "(1,3)(2,4)"]).unwrap();
        assert_eq!(k.order(), BigCount::from(4u32));
        assert!(k.is_transitive());
        assert!(k.is_regular());
        assert!(k.is_semiregular());
        assert!(k.is_abelian());
    }

    #[test]
    fn trivial_group_actions() {
        let t = GeneratedGroup::trivial(5);
        assert_eq!(t.order(), BigCount::from(1u32));
        assert!(t.is_semiregular());
        assert!(!t.is_transitive());
        assert_eq!(t.enumerate(&cap()).unwrap(), alloc::vec![Permutation::identity(5)]);
        assert!(GeneratedGroup::trivial(1).is_transitive());
    }

    #[test]
    fn point_stabilizer_orders() {
        let s5 = group_from_cycles(5, &["(1,2)", "(1,2,3,4,5)"]).unwrap();
        for a in 0..5 {
            let st = s5.point_stabilizer(a).unwrap();
            assert_eq!(st.order(), BigCount::from(24u32));
            assert!(st.generators().iter().all(|g| g.apply(a) == a));
        }
        assert!(matches!(
            s5.point_stabilizer(5),
            Err(Error::PointOutOfRange { point: 5, degree: 5 })
        ));
    }

    #[test]
    fn enumerate_respects_cap() {
        let s5 = group_from_cycles(5, &["(1,2)", "(1,2,3,4,5)"]).unwrap();
        let all = s5.enumerate(&cap()).unwrap();
        assert_eq!(all.len(), 120);
        assert!(all[0].is_identity());
        let e = s5.enumerate(&BigCount::from(100u32)).unwrap_err();
        assert!(e.is_cap_exceeded());
    }

    #[test]
    fn membership_and_degree_errors() {
        let a4 = group_from_cycles(4, &["(1,2,3)", "(2,3,4)"]).unwrap();
        assert!(a4
            .contains(&crate::perm::parse_cycles("(1,2)(3,4)", 4).unwrap())
            .unwrap());
        assert!(!a4.contains(&crate::perm::parse_cycles("(1,2)", 4).unwrap()).unwrap());
        assert!(a4.contains(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn generators_are_deduplicated() {
        let g = group_from_cycles(3, &["(1,2)", "(1,2)", "()"]).unwrap();
        assert_eq!(g.generators().len(), 2);
        assert!(GeneratedGroup::new(3, alloc::vec![Permutation::identity(4)]).is_err());
    }

    #[test]
    fn alt_sym_recognition() {
        let s6 = group_from_cycles(6, &["(1,2)", "(1,2,3,4,5,6)"]).unwrap();
        assert_eq!(s6.recognize_alt_sym(), Some(AltSym::Symmetric));
        let a7 = group_from_cycles(7, &["(1,2,3)", "(1,2,3,4,5,6,7)"]).unwrap();
        assert_eq!(a7.recognize_alt_sym(), Some(AltSym::Alternating));
        let c7 = group_from_cycles(7, &["(1,2,3,4,5,6,7)"]).unwrap();
        assert_eq!(c7.recognize_alt_sym(), None);
    }
}
