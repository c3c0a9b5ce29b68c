use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::{is_normal_in, GeneratedGroup};

/// The normal quotient `Γ_N` and how it relates to `Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub orbit_count: usize,
    pub quotient: SimpleGraph,
    /// `N` acts semiregularly on the vertices of `Γ`
    pub semiregular: bool,
    /// `Γ` and `Γ_N` have the same (regular) valency
    pub valency_preserved: bool,
    /// Orbit index of each vertex of `Γ`
    pub orbit_of: Vec<usize>,
}

/// Quotient of `graph` by the orbits of `n ⊴ x ≤ Aut Γ`. Vertices are the
/// `N`-orbits ordered by least element; two orbits are adjacent when some
/// edge joins them.
pub fn normal_quotient(graph: &SimpleGraph, x: &GeneratedGroup, n: &GeneratedGroup) -> Result<QuotientReport> {
    let v = graph.vertex_count();
    for grp in [x, n] {
        if grp.degree() != v {
            return Err(Error::DegreeMismatch {
                left: v,
                right: grp.degree(),
            });
        }
    }
    for (i, g) in x.generators().iter().enumerate() {
        if !graph.is_automorphism(g) {
            return Err(Error::NonAutomorphism { generator: i });
        }
    }
    if !is_normal_in(n, x)? {
        return Err(Error::NotNormal);
    }
    let orbits = n.orbits();
    let mut orbit_of = alloc::vec![0usize; v];
    for (i, orbit) in orbits.iter().enumerate() {
        for &p in orbit {
            orbit_of[p as usize] = i;
        }
    }
    let edges: Vec<(usize, usize)> = graph
        .edges()
        .into_iter()
        .map(|(a, b)| (orbit_of[a], orbit_of[b]))
        .filter(|(a, b)| a != b)
        .collect();
    let quotient = SimpleGraph::from_edges(orbits.len(), &edges)?;
    let valency_preserved = matches!(
        (graph.valency(), quotient.valency()),
        (crate::graph::Valency::Regular(a), crate::graph::Valency::Regular(b)) if a == b
    );
    Ok(QuotientReport {
        orbit_count: orbits.len(),
        quotient,
        semiregular: n.is_semiregular(),
        valency_preserved,
        orbit_of,
    })
}

/// The action of `x` on the `N`-orbits, as a group on the quotient vertices.
pub fn induced_action(x: &GeneratedGroup, report: &QuotientReport) -> Result<GeneratedGroup> {
    let mut reps = alloc::vec![usize::MAX; report.orbit_count];
    for (v, &o) in report.orbit_of.iter().enumerate() {
        if reps[o] == usize::MAX {
            reps[o] = v;
        }
    }
    let gens = x
        .generators()
        .iter()
        .map(|g| {
            let images = reps
                .iter()
                .map(|&v| report.orbit_of[g.apply(v as u32) as usize] as u32)
                .collect();
            crate::perm::Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratedGroup::new(report.orbit_count, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::BigCount;
    use crate::graph::named::{cube, cycle, petersen};
    use crate::graph::{automorphism_group, Valency, DEFAULT_VERTEX_CAP};
    use crate::group::group_from_cycles;

    #[test]
    fn cycle_by_rotation_subgroup() {
        let c12 = cycle(12);
        let aut = automorphism_group(&c12, DEFAULT_VERTEX_CAP).unwrap();
        let rot = group_from_cycles(12, &["(1,4,7,10)(2,5,8,11)(3,6,9,12)"]).unwrap();
        let r = normal_quotient(&c12, &aut, &rot).unwrap();
        assert_eq!(r.orbit_count, 3);
        assert_eq!(r.quotient.edge_count(), 3);
        assert!(r.semiregular);
        assert!(r.valency_preserved);
    }

    #[test]
    fn cube_by_antipodal_map_is_k4() {
        let q = cube();
        let aut = automorphism_group(&q, DEFAULT_VERTEX_CAP).unwrap();
        let antipodal: Vec<u32> = (0..8u32).map(|v| v ^ 7).collect();
        let n = GeneratedGroup::new(
            8,
            alloc::vec![crate::perm::Permutation::from_images(antipodal).unwrap()],
        )
        .unwrap();
        assert!(q.is_automorphism(&n.generators()[0]));
        let r = normal_quotient(&q, &aut, &n).unwrap();
        assert_eq!(r.orbit_count, 4);
        assert_eq!(r.quotient.valency(), Valency::Regular(3));
        let induced = induced_action(&aut, &r).unwrap();
        assert_eq!(induced.order(), BigCount::from(24u32));
        let arcs = crate::graph::transitivity_tests(&r.quotient, &induced, 1).unwrap();
        assert!(arcs.transitive);
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let p = petersen();
        let aut = automorphism_group(&p, DEFAULT_VERTEX_CAP).unwrap();
        let stab = aut.point_stabilizer(0).unwrap();
        assert_eq!(normal_quotient(&p, &aut, &stab).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn non_automorphism_rejected() {
        let c = cycle(5);
        let bad = group_from_cycles(5, &["(1,2)"]).unwrap();
        assert_eq!(
            normal_quotient(&c, &bad, &GeneratedGroup::trivial(5)).unwrap_err(),
            Error::NonAutomorphism { generator: 0 }
        );
    }
}
