//! Named groups in their natural actions.

use alloc::format;
use alloc::vec::Vec;

use super::GeneratedGroup;
use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};

fn n_cycle(degree: usize, points: core::ops::Range<usize>) -> Permutation {
    let pts: Vec<Point> = points.map(|p| p as Point).collect();
    Permutation::from_cycles(degree, &[&pts]).expect("points in range")
}

/// `Z_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<GeneratedGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("Z_0".into()));
    }
    GeneratedGroup::new(n, alloc::vec![n_cycle(n, 0..n)])
}

/// Dihedral group of order `2m` on the vertices of an `m`-gon (`m >= 3`).
pub fn dihedral(m: usize) -> Result<GeneratedGroup> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "dihedral group of order {} has no faithful m-gon action",
            2 * m
        )));
    }
    let rotation = n_cycle(m, 0..m);
    let reflection: Vec<Point> = (0..m).map(|i| ((m - i) % m) as Point).collect();
    GeneratedGroup::new(m, alloc::vec![rotation, Permutation::from_images(reflection)?])
}

/// `F_{13k} = Z_13 : Z_k` as affine maps `x ↦ ax + b` on `Z_13`, for `k | 12`.
pub fn frobenius_13(k: usize) -> Result<GeneratedGroup> {
    if k == 0 || 12 % k != 0 {
        return Err(Error::InvalidParameter(format!("F_{{13*{k}}} needs k | 12")));
    }
    let translation = n_cycle(13, 0..13);
    // 2 generates the multiplicative group mod 13
    let a = (0..12 / k).fold(1usize, |acc, _| acc * 2 % 13);
    let mut gens = alloc::vec![translation];
    if k > 1 {
        let images: Vec<Point> = (0..13).map(|x| (a * x % 13) as Point).collect();
        gens.push(Permutation::from_images(images)?);
    }
    GeneratedGroup::new(13, gens)
}

/// `S_n` on `n` points.
pub fn symmetric(n: usize) -> Result<GeneratedGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("S_0".into()));
    }
    if n == 1 {
        return Ok(GeneratedGroup::trivial(1));
    }
    let t = Permutation::from_cycles(n, &[&[0, 1]])?;
    GeneratedGroup::new(n, alloc::vec![t, n_cycle(n, 0..n)])
}

/// `A_n` on `n` points.
pub fn alternating(n: usize) -> Result<GeneratedGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("A_0".into()));
    }
    if n < 3 {
        return Ok(GeneratedGroup::trivial(n));
    }
    let three = Permutation::from_cycles(n, &[&[0, 1, 2]])?;
    // an odd-length cycle is even
    let long = if n % 2 == 1 { n_cycle(n, 0..n) } else { n_cycle(n, 1..n) };
    GeneratedGroup::new(n, alloc::vec![three, long])
}

/// `A × B` acting on the disjoint union of the two domains.
pub fn direct_product(a: &GeneratedGroup, b: &GeneratedGroup) -> Result<GeneratedGroup> {
    let (da, db) = (a.degree(), b.degree());
    let n = da + db;
    let shift = |p: &Permutation, left: bool| {
        let images: Vec<Point> = (0..n)
            .map(|i| {
                if left && i < da {
                    p.apply(i as Point)
                } else if !left && i >= da {
                    p.apply((i - da) as Point) + da as Point
                } else {
                    i as Point
                }
            })
            .collect();
        Permutation::from_images(images)
    };
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(shift(g, true)?);
    }
    for g in b.generators() {
        gens.push(shift(g, false)?);
    }
    GeneratedGroup::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{self, BigCount};

    #[test]
    fn orders_match_formulas() {
        assert_eq!(cyclic(1).unwrap().order(), BigCount::from(1u32));
        assert_eq!(cyclic(12).unwrap().order(), BigCount::from(12u32));
        assert_eq!(dihedral(7).unwrap().order(), BigCount::from(14u32));
        for n in 1..9u64 {
            assert_eq!(symmetric(n as usize).unwrap().order(), count::factorial(n));
            assert_eq!(alternating(n as usize).unwrap().order(), count::alternating_order(n));
        }
        for k in [1usize, 2, 3, 4, 6, 12] {
            let f = frobenius_13(k).unwrap();
            assert_eq!(f.order(), BigCount::from(13 * k));
            assert!(f.is_transitive());
            assert_eq!(f.point_stabilizer(0).unwrap().order(), BigCount::from(k));
        }
    }

    #[test]
    fn frobenius_rejects_bad_k() {
        assert!(frobenius_13(5).is_err());
        assert!(frobenius_13(0).is_err());
    }

    #[test]
    fn product_is_intransitive() {
        let p = direct_product(&frobenius_13(12).unwrap(), &cyclic(12).unwrap()).unwrap();
        assert_eq!(p.degree(), 25);
        assert_eq!(p.order(), BigCount::from(1872u32));
        assert_eq!(p.orbit_lengths(), alloc::vec![12, 13]);
    }
}
