//! Stabilizer chains built by Schreier–Sims.
//!
//! Construction runs a seeded random Schreier–Sims phase and then either
//! certifies the result against an a-priori order bound (full alternating or
//! symmetric group on the support) or completes it deterministically by
//! sifting every Schreier generator. Both routes give an exact chain; the
//! seeded generator keeps the output reproducible.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::count::{self, BigCount};
use crate::perm::{Permutation, Point};

const NOT_IN_ORBIT: u32 = u32::MAX;
const RANDOM_SEED: u64 = 0x5eed_c0de_2013;
/// Consecutive trivially-sifting random elements before leaving the random phase.
const QUIET_ROUNDS: usize = 24;

/// One level of the chain: the basic orbit of `base_point` under the
/// strong generators fixing all earlier base points.
#[derive(Debug, Clone)]
pub struct Level {
    base_point: Point,
    /// orbit points in discovery order; `orbit[0] == base_point`
    orbit: Vec<Point>,
    /// point -> position in `orbit`, or `NOT_IN_ORBIT`
    position: Vec<u32>,
    /// `reps[k]` maps `base_point` to `orbit[k]`
    reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
}

impl Level {
    fn new(base_point: Point, degree: usize) -> Self {
        let mut position = alloc::vec![NOT_IN_ORBIT; degree];
        position[base_point as usize] = 0;
        let id = Permutation::identity(degree);
        Level {
            base_point,
            orbit: alloc::vec![base_point],
            position,
            reps: alloc::vec![id.clone()],
            reps_inv: alloc::vec![id],
        }
    }

    pub fn base_point(&self) -> Point {
        self.base_point
    }

    pub fn orbit(&self) -> &[Point] {
        &self.orbit
    }

    pub fn contains(&self, point: Point) -> bool {
        self.position[point as usize] != NOT_IN_ORBIT
    }

    /// Transversal element mapping the base point to `point`.
    pub fn representative(&self, point: Point) -> Option<&Permutation> {
        match self.position[point as usize] {
            NOT_IN_ORBIT => None,
            k => Some(&self.reps[k as usize]),
        }
    }

    pub fn representative_inverse(&self, point: Point) -> Option<&Permutation> {
        match self.position[point as usize] {
            NOT_IN_ORBIT => None,
            k => Some(&self.reps_inv[k as usize]),
        }
    }

    fn push(&mut self, point: Point, rep: Permutation) {
        self.position[point as usize] = self.orbit.len() as u32;
        self.orbit.push(point);
        self.reps_inv.push(rep.inverse());
        self.reps.push(rep);
    }
}

/// Base, strong generating set and transversals of a permutation group.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    /// strong generators with the deepest level they belong to
    strong: Vec<(Permutation, usize)>,
}

/// Outcome of sifting an element through a chain.
#[derive(Debug, Clone)]
pub struct Sift {
    pub residue: Permutation,
    /// level at which sifting stopped; equals the chain length on success
    pub level: usize,
}

impl Sift {
    pub fn is_member(&self) -> bool {
        self.residue.is_identity()
    }
}

impl StabilizerChain {
    /// Builds a chain for `⟨generators⟩`. Base points listed in `base_hint`
    /// come first; further base points are the smallest point moved by the
    /// element that needed them.
    pub fn build(degree: usize, generators: &[Permutation], base_hint: &[Point]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
        };
        for &b in base_hint {
            if (b as usize) < degree && chain.levels.iter().all(|l| l.base_point != b) {
                chain.levels.push(Level::new(b, degree));
            }
        }
        let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            let sift = chain.sift(g);
            if !sift.is_member() {
                chain.add_strong(sift.residue, sift.level);
            }
        }

        let bound = order_upper_bound(degree, &gens);
        let mut rng = RandomElements::new(&gens);
        let mut quiet = 0;
        while quiet < QUIET_ROUNDS {
            if chain.order() == bound {
                return chain;
            }
            let r = rng.next();
            let sift = chain.sift(&r);
            if sift.is_member() {
                quiet += 1;
            } else {
                chain.add_strong(sift.residue, sift.level);
                quiet = 0;
            }
        }
        if chain.order() != bound {
            chain.complete();
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<Point> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Strong generators fixing the first `level` base points.
    pub fn strong_generators(&self, level: usize) -> impl Iterator<Item = &Permutation> + '_ {
        self.strong.iter().filter(move |(_, l)| *l >= level).map(|(g, _)| g)
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigCount {
        self.levels
            .iter()
            .fold(BigCount::from(1u32), |acc, l| acc * l.orbit.len())
    }

    pub fn sift(&self, g: &Permutation) -> Sift {
        self.sift_from(g, 0)
    }

    fn sift_from(&self, g: &Permutation, start: usize) -> Sift {
        let mut cur = g.clone();
        let mut scratch = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = cur.apply(level.base_point);
            match level.representative_inverse(beta) {
                None => return Sift { residue: cur, level: i },
                Some(u_inv) => {
                    cur.compose_into(u_inv, &mut scratch);
                    core::mem::swap(&mut cur, &mut scratch);
                }
            }
        }
        Sift {
            residue: cur,
            level: self.levels.len(),
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).is_member()
    }

    /// Adds `h`, which fixes the first `level` base points, as a strong generator.
    fn add_strong(&mut self, h: Permutation, level: usize) {
        debug_assert!(!h.is_identity());
        if level == self.levels.len() {
            let b = h.first_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(b, self.degree));
        }
        self.strong.push((h, level));
        let new = self.strong.len() - 1;
        for i in 0..=level {
            self.extend_orbit(i, new);
        }
    }

    /// Closes the orbit at level `i` after strong generator `new` joined it.
    fn extend_orbit(&mut self, i: usize, new: usize) {
        let StabilizerChain { levels, strong, .. } = self;
        let level = &mut levels[i];
        let h = &strong[new].0;
        let old_len = level.orbit.len();
        for k in 0..old_len {
            let gamma = h.apply(level.orbit[k]);
            if !level.contains(gamma) {
                let rep = level.reps[k].compose_unchecked(h);
                level.push(gamma, rep);
            }
        }
        let mut k = old_len;
        while k < level.orbit.len() {
            let beta = level.orbit[k];
            for (s, _) in strong.iter().filter(|(_, l)| *l >= i) {
                let gamma = s.apply(beta);
                if !level.contains(gamma) {
                    let rep = level.reps[k].compose_unchecked(s);
                    level.push(gamma, rep);
                }
            }
            k += 1;
        }
    }

    /// Deterministic completion: every Schreier generator at every level
    /// must sift through the levels below it.
    fn complete(&mut self) {
        'restart: loop {
            for i in (0..self.levels.len()).rev() {
                let gens: Vec<Permutation> = self.strong_generators(i).cloned().collect();
                let orbit_len = self.levels[i].orbit.len();
                for k in 0..orbit_len {
                    for s in &gens {
                        let level = &self.levels[i];
                        let beta = level.orbit[k];
                        let gamma = s.apply(beta);
                        let u_gamma_inv = level
                            .representative_inverse(gamma)
                            .expect("orbit closed under level generators");
                        let schreier = level.reps[k].compose_unchecked(s).compose_unchecked(u_gamma_inv);
                        if schreier.is_identity() {
                            continue;
                        }
                        let sift = self.sift_from(&schreier, i + 1);
                        if !sift.is_member() {
                            self.add_strong(sift.residue, sift.level);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }
}

/// `|Sym(Δ₁) × … × Sym(Δₖ)|` over the orbits `Δᵢ` of the generators, halved
/// when every generator is even.
fn order_upper_bound(degree: usize, gens: &[&Permutation]) -> BigCount {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for (i, &j) in g.images().iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j as usize));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut sizes = alloc::vec![0u64; degree];
    for i in 0..degree {
        let r = find(&mut parent, i);
        sizes[r] += 1;
    }
    let bound = sizes
        .iter()
        .filter(|&&s| s > 1)
        .fold(BigCount::from(1u32), |acc, &s| acc * count::factorial(s));
    if gens.iter().all(|g| g.is_even()) && bound > BigCount::from(1u32) {
        bound / 2u32
    } else {
        bound
    }
}

/// Product-replacement random elements from a fixed seed.
struct RandomElements {
    pool: Vec<Permutation>,
    accumulator: Permutation,
    rng: ChaCha8Rng,
}

impl RandomElements {
    fn new(gens: &[&Permutation]) -> Self {
        let size = gens.len().max(10);
        let pool: Vec<Permutation> = (0..size).map(|i| gens[i % gens.len()].clone()).collect();
        let mut r = RandomElements {
            accumulator: Permutation::identity(gens[0].degree()),
            pool,
            rng: ChaCha8Rng::seed_from_u64(RANDOM_SEED),
        };
        for _ in 0..50 {
            r.next();
        }
        r
    }

    fn below(&mut self, n: usize) -> usize {
        (self.rng.next_u64() % n as u64) as usize
    }

    fn next(&mut self) -> Permutation {
        let n = self.pool.len();
        let s = self.below(n);
        let mut t = self.below(n - 1);
        if t >= s {
            t += 1;
        }
        let flags = self.rng.next_u32();
        let other = if flags & 1 == 0 {
            self.pool[t].clone()
        } else {
            self.pool[t].inverse()
        };
        self.pool[s] = if flags & 2 == 0 {
            self.pool[s].compose_unchecked(&other)
        } else {
            other.compose_unchecked(&self.pool[s])
        };
        self.accumulator = self.accumulator.compose_unchecked(&self.pool[s]);
        self.accumulator.clone()
    }
}
