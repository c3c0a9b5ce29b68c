//! Automorphism groups by individualization and equitable refinement.
//!
//! Ordered partitions are refined by 1-dimensional Weisfeiler–Leman (each
//! vertex is re-coloured by its cell and the multiset of its neighbours'
//! cells) until stable. The search walks a first path that always
//! individualizes the smallest vertex of the first smallest non-singleton
//! cell. Then, from the deepest level upwards, it looks for an automorphism
//! sending that level's vertex to each other vertex of the target cell that
//! is not yet in its orbit. The automorphisms found generate the full group.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::GeneratedGroup;
use crate::perm::{Permutation, Point};

pub const DEFAULT_VERTEX_CAP: usize = 512;

type Cells = Vec<Vec<u32>>;

fn refine(graph: &SimpleGraph, mut cells: Cells) -> Cells {
    let n = graph.vertex_count();
    let mut cell_of = alloc::vec![0u32; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v as usize] = i as u32;
            }
        }
        let mut keyed: Vec<(u32, Vec<u32>, u32)> = (0..n as u32)
            .map(|v| {
                let mut sig: Vec<u32> = graph
                    .neighbors(v as usize)
                    .iter()
                    .map(|&w| cell_of[w as usize])
                    .collect();
                sig.sort_unstable();
                (cell_of[v as usize], sig, v)
            })
            .collect();
        keyed.sort_unstable();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for (k, (c, sig, v)) in keyed.iter().enumerate() {
            let same = k > 0 && keyed[k - 1].0 == *c && keyed[k - 1].1 == *sig;
            if same {
                next.last_mut().unwrap().push(*v);
            } else {
                next.push(alloc::vec![*v]);
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn individualize(cells: &Cells, target: usize, v: u32) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, cell) in cells.iter().enumerate() {
        if i == target {
            out.push(alloc::vec![v]);
            out.push(cell.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

/// Label-free description of an equitable partition: cell sizes and the
/// number of neighbours each cell's vertices have in every cell.
fn shape(graph: &SimpleGraph, cells: &Cells) -> Vec<u32> {
    let n = graph.vertex_count();
    let mut cell_of = alloc::vec![0u32; n];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            cell_of[v as usize] = i as u32;
        }
    }
    let mut out = Vec::new();
    for cell in cells {
        out.push(u32::MAX);
        out.push(cell.len() as u32);
        let mut hist: Vec<u32> = graph
            .neighbors(cell[0] as usize)
            .iter()
            .map(|&w| cell_of[w as usize])
            .collect();
        hist.sort_unstable();
        out.extend(hist);
    }
    out
}

fn first_smallest_cell(cells: &Cells) -> Option<usize> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|&(i, c)| (c.len(), i))
        .map(|(i, _)| i)
}

struct FirstPath {
    /// partitions before individualizing at each level
    partitions: Vec<Cells>,
    shapes: Vec<Vec<u32>>,
    targets: Vec<usize>,
    chosen: Vec<u32>,
    leaf: Vec<u32>,
}

struct Search<'a> {
    graph: &'a SimpleGraph,
    path: FirstPath,
}

impl<'a> Search<'a> {
    fn new(graph: &'a SimpleGraph) -> Self {
        let n = graph.vertex_count() as u32;
        let mut cells = refine(graph, alloc::vec![(0..n).collect()]);
        let mut path = FirstPath {
            partitions: Vec::new(),
            shapes: alloc::vec![shape(graph, &cells)],
            targets: Vec::new(),
            chosen: Vec::new(),
            leaf: Vec::new(),
        };
        while let Some(t) = first_smallest_cell(&cells) {
            let v = *cells[t].iter().min().unwrap();
            let next = refine(graph, individualize(&cells, t, v));
            path.partitions.push(cells);
            path.targets.push(t);
            path.chosen.push(v);
            path.shapes.push(shape(graph, &next));
            cells = next;
        }
        path.leaf = cells.iter().map(|c| c[0]).collect();
        Search { graph, path }
    }

    /// Extends a partial match at `depth` (partition `cells` already matches
    /// the first path's partition after `depth` individualizations).
    fn extend(&self, depth: usize, cells: Cells) -> Option<Permutation> {
        if depth == self.path.targets.len() {
            let n = self.graph.vertex_count();
            let mut images = alloc::vec![0 as Point; n];
            for (i, cell) in cells.iter().enumerate() {
                images[self.path.leaf[i] as usize] = cell[0];
            }
            let sigma = Permutation::from_images(images).ok()?;
            return self.graph.is_automorphism(&sigma).then_some(sigma);
        }
        let t = self.path.targets[depth];
        let mut candidates = cells[t].clone();
        candidates.sort_unstable();
        for u in candidates {
            let next = refine(self.graph, individualize(&cells, t, u));
            if shape(self.graph, &next) != self.path.shapes[depth + 1] {
                continue;
            }
            if let Some(sigma) = self.extend(depth + 1, next) {
                return Some(sigma);
            }
        }
        None
    }

    fn generators(&self) -> Vec<Permutation> {
        let n = self.graph.vertex_count();
        let mut gens: Vec<Permutation> = Vec::new();
        for level in (0..self.path.targets.len()).rev() {
            let cells = &self.path.partitions[level];
            let t = self.path.targets[level];
            let v = self.path.chosen[level];
            let mut orbit = orbit_of(n, &gens, v);
            let mut candidates = cells[t].clone();
            candidates.sort_unstable();
            for w in candidates {
                if orbit[w as usize] {
                    continue;
                }
                let next = refine(self.graph, individualize(cells, t, w));
                if shape(self.graph, &next) != self.path.shapes[level + 1] {
                    continue;
                }
                if let Some(sigma) = self.extend(level + 1, next) {
                    gens.push(sigma);
                    orbit = orbit_of(n, &gens, v);
                }
            }
        }
        gens
    }
}

fn orbit_of(n: usize, gens: &[Permutation], v: u32) -> Vec<bool> {
    let mut seen = alloc::vec![false; n];
    seen[v as usize] = true;
    let mut stack = alloc::vec![v];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Generators of `Aut Γ` for graphs with at most `vertex_cap` vertices.
pub fn automorphism_group(graph: &SimpleGraph, vertex_cap: usize) -> Result<GeneratedGroup> {
    let n = graph.vertex_count();
    if n > vertex_cap {
        return Err(Error::CapExceeded {
            what: "vertex count",
            size: n.into(),
            cap: vertex_cap.into(),
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let gens = Search::new(graph).generators();
    GeneratedGroup::new(n, gens)
}
