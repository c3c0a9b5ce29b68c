//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Composition is a right action throughout the crate: `p * q` first applies
//! `p`, then `q`, so `(p * q)(i) = q(p(i))`. Conjugation is `p^q = q⁻¹ p q`.
//! Cayley graphs, coset spaces and group actions all assume this convention.

mod cycles;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use serde::{Deserialize, Serialize};

pub use cycles::{format_cycles, parse_cycle_product, parse_cycles, CycleForm};

use crate::count::{self, BigCount};
use crate::error::{Error, Result};

/// A point of the permutation domain (0-based).
pub type Point = u32;

/// A bijection of `{0, .., degree-1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct Permutation {
    images: Vec<Point>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Summary of the cycle structure of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermInvariants {
    pub order: BigCount,
    pub parity: Parity,
    /// cycle length -> multiplicity, fixed points included as length 1
    pub cycle_type: BTreeMap<usize, usize>,
    pub is_two_element: bool,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "permutation degree must be positive");
        Permutation {
            images: (0..degree as Point).collect(),
        }
    }

    pub fn from_images(images: Vec<Point>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        let mut seen = alloc::vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n || seen[i] {
                return Err(Error::NotBijection { degree: n });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<Point>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[Point]]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        let mut images: Vec<Point> = (0..degree as Point).collect();
        let mut used = alloc::vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let ai = a as usize;
                if ai >= degree {
                    return Err(Error::PointOutOfRange { point: ai, degree });
                }
                if used[ai] {
                    return Err(Error::NotBijection { degree });
                }
                used[ai] = true;
                images[ai] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[Point] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: Point) -> Point {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as Point == p)
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<Point> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &p)| i as Point != p)
            .map(|(i, _)| i as Point)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            })
        } else {
            Ok(())
        }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let images = self.images.iter().map(|&i| other.images[i as usize]).collect();
        Permutation { images }
    }

    /// Writes `self * other` into `out` without allocating.
    #[inline]
    pub(crate) fn compose_into(&self, other: &Permutation, out: &mut Permutation) {
        for (o, &i) in out.images.iter_mut().zip(&self.images) {
            *o = other.images[i as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as Point;
        }
        Permutation { images }
    }

    /// `self^k` for any integer `k`, by repeated squaring.
    pub fn pow(&self, k: i64) -> Permutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// `q⁻¹ · self · q`.
    pub fn conjugate_by(&self, q: &Permutation) -> Result<Permutation> {
        self.check_degree(q)?;
        // image of q(i) is q(self(i))
        let mut images = alloc::vec![0; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[q.images[i] as usize] = q.images[p as usize];
        }
        Ok(Permutation { images })
    }

    /// Commutator `[self, q] = self⁻¹ q⁻¹ self q`.
    pub fn commutator(&self, q: &Permutation) -> Result<Permutation> {
        self.check_degree(q)?;
        Ok(self
            .inverse()
            .compose_unchecked(&q.inverse())
            .compose_unchecked(self)
            .compose_unchecked(q))
    }

    pub fn commutes_with(&self, q: &Permutation) -> bool {
        self.degree() == q.degree()
            && self
                .images
                .iter()
                .zip(&q.images)
                .all(|(&a, &b)| q.images[a as usize] == self.images[b as usize])
    }

    /// Cycle lengths including fixed points, in order of smallest element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> BigCount {
        self.cycle_lengths()
            .into_iter()
            .fold(BigCount::from(1u32), |acc, l| count::lcm(&acc, &BigCount::from(l)))
    }

    pub fn parity(&self) -> Parity {
        let cycles = self.cycle_lengths().len();
        if (self.degree() - cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn is_two_element(&self) -> bool {
        count::is_power_of_two(&self.order())
    }

    pub fn invariants(&self) -> PermInvariants {
        let mut cycle_type = BTreeMap::new();
        for l in self.cycle_lengths() {
            *cycle_type.entry(l).or_insert(0) += 1;
        }
        let order = self.order();
        PermInvariants {
            is_two_element: count::is_power_of_two(&order),
            order,
            parity: self.parity(),
            cycle_type,
        }
    }

    /// Canonical 1-based cycle notation.
    pub fn to_cycle_string(&self) -> alloc::string::String {
        format_cycles(self)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl TryFrom<Vec<Point>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<Point>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<Point> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), format_cycles(self))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}
