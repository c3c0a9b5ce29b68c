//! Right cosets `Hx` of a subgroup and the action of `G` on them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{GeneratedGroup, StabilizerChain};
use crate::count::{self, BigCount};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};

/// The element of `Hx` whose images of `H`'s base points are
/// lexicographically least. Two cosets are equal iff these agree.
pub fn minimal_coset_rep(h_chain: &StabilizerChain, x: &Permutation) -> Permutation {
    let mut cur = x.clone();
    for level in h_chain.levels() {
        let best = level
            .orbit()
            .iter()
            .copied()
            .min_by_key(|&gamma| cur.apply(gamma))
            .expect("orbit contains the base point");
        let u = level.representative(best).expect("orbit point");
        cur = u.compose_unchecked(&cur);
    }
    cur
}

/// `G` acting by right multiplication on `[G:H]`.
#[derive(Debug, Clone)]
pub struct CosetAction {
    h_chain: StabilizerChain,
    /// canonical representative of each coset; coset 0 is `H`
    reps: Vec<Permutation>,
    index_of: BTreeMap<Vec<Point>, usize>,
    /// action of each generator of `G` on coset indices
    generator_actions: Vec<Permutation>,
}

impl CosetAction {
    /// Enumerates `[G:H]` when `|G:H| <= max_index`.
    pub fn new(g: &GeneratedGroup, h: &GeneratedGroup, max_index: u64) -> Result<Self> {
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
        let index = g.order() / h.order();
        if index > BigCount::from(max_index) {
            return Err(Error::CapExceeded {
                what: "coset index",
                size: index,
                cap: BigCount::from(max_index),
            });
        }
        let index = count::to_usize(&index).expect("bounded by max_index");

        let h_chain = h.chain().clone();
        let start = minimal_coset_rep(&h_chain, &Permutation::identity(g.degree()));
        let mut index_of = BTreeMap::new();
        index_of.insert(start.images().to_vec(), 0);
        let mut reps = alloc::vec![start];
        let mut images: Vec<Vec<Point>> = alloc::vec![Vec::with_capacity(index); g.generators().len()];
        let mut k = 0;
        while k < reps.len() {
            for (gi, s) in g.generators().iter().enumerate() {
                let next = minimal_coset_rep(&h_chain, &reps[k].compose_unchecked(s));
                let j = match index_of.get(next.images()) {
                    Some(&j) => j,
                    None => {
                        let j = reps.len();
                        index_of.insert(next.images().to_vec(), j);
                        reps.push(next);
                        j
                    }
                };
                images[gi].push(j as Point);
            }
            k += 1;
        }
        debug_assert_eq!(reps.len(), index);
        let generator_actions = images
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>>>()?;
        Ok(CosetAction {
            h_chain,
            reps,
            index_of,
            generator_actions,
        })
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    /// Action of `G`'s generators, in generator order.
    pub fn generator_actions(&self) -> &[Permutation] {
        &self.generator_actions
    }

    pub fn canonical(&self, x: &Permutation) -> Permutation {
        minimal_coset_rep(&self.h_chain, x)
    }

    /// Index of the coset `Hx`, or `None` if `x` lies outside `G`.
    pub fn coset_of(&self, x: &Permutation) -> Option<usize> {
        self.index_of.get(self.canonical(x).images()).copied()
    }

    /// Permutation of the coset indices induced by right multiplication by `x ∈ G`.
    pub fn action_of(&self, x: &Permutation) -> Result<Permutation> {
        let images = self
            .reps
            .iter()
            .map(|r| {
                self.coset_of(&r.compose(x)?)
                    .map(|j| j as Point)
                    .ok_or(Error::NotMember)
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    pub fn as_group(&self) -> Result<GeneratedGroup> {
        GeneratedGroup::new(self.index(), self.generator_actions.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_from_cycles;

    #[test]
    fn a5_on_cosets_of_s3() {
        let a5 = group_from_cycles(5, &["(1,2,3,4,5)", "(1,2,3)"]).unwrap();
        let s3 = group_from_cycles(5, &["(1,2,3)", "(2,3)(4,5)"]).unwrap();
        let act = CosetAction::new(&a5, &s3, 1000).unwrap();
        assert_eq!(act.index(), 10);
        let image = act.as_group().unwrap();
        assert_eq!(image.order(), BigCount::from(60u32));
        assert!(image.is_transitive());
    }

    #[test]
    fn whole_group_gives_one_coset() {
        let s4 = group_from_cycles(4, &["(1,2)", "(1,2,3,4)"]).unwrap();
        let act = CosetAction::new(&s4, &s4, 10).unwrap();
        assert_eq!(act.index(), 1);
        assert!(act.generator_actions().iter().all(Permutation::is_identity));
    }

    #[test]
    fn rejects_non_subgroup_and_large_index() {
        let a4 = group_from_cycles(4, &["(1,2,3)", "(2,3,4)"]).unwrap();
        let c2 = group_from_cycles(4, &["(1,2)"]).unwrap();
        assert_eq!(
            CosetAction::new(&a4, &c2, 100).unwrap_err(),
            Error::NotSubgroup { generator: 0 }
        );
        let t = GeneratedGroup::trivial(4);
        assert!(CosetAction::new(&a4, &t, 11).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn canonical_rep_is_coset_invariant() {
        let s4 = group_from_cycles(4, &["(1,2)", "(1,2,3,4)"]).unwrap();
        let h = group_from_cycles(4, &["(1,2)", "(1,2,3)"]).unwrap();
        let act = CosetAction::new(&s4, &h, 10).unwrap();
        let elems = s4.enumerate(&BigCount::from(100u32)).unwrap();
        let h_elems = h.enumerate(&BigCount::from(100u32)).unwrap();
        for x in &elems {
            let c = act.canonical(x);
            for y in &h_elems {
                assert_eq!(act.canonical(&(y * x)), c);
            }
        }
    }
}
