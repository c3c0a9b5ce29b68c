//! Finite simple undirected graphs.

mod arcs;
mod automorphism;

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

pub use arcs::{transitivity_tests, ArcOrbitReport, MAX_ARCS};
pub use automorphism::{automorphism_group, DEFAULT_VERTEX_CAP};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Vertices `0..n`, symmetric sorted adjacency, no loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Valency {
    Regular(usize),
    Nonregular,
}

impl SimpleGraph {
    /// Duplicate edges collapse; loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "endpoint out of range",
                });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "loop" });
            }
            adjacency[u].push(v as u32);
            adjacency[v].push(u as u32);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(SimpleGraph { adjacency })
    }

    /// From neighbor lists that must already be symmetric and loop-free.
    pub fn from_adjacency(mut adjacency: Vec<Vec<u32>>) -> Result<Self> {
        let n = adjacency.len();
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        for (u, list) in adjacency.iter().enumerate() {
            for &v in list {
                let v = v as usize;
                if v >= n {
                    return Err(Error::InvalidEdge {
                        u,
                        v,
                        reason: "endpoint out of range",
                    });
                }
                if v == u {
                    return Err(Error::InvalidEdge { u, v, reason: "loop" });
                }
                if adjacency[v].binary_search(&(u as u32)).is_err() {
                    return Err(Error::InvalidEdge {
                        u,
                        v,
                        reason: "adjacency not symmetric",
                    });
                }
            }
        }
        Ok(SimpleGraph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v as usize {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    pub fn valency(&self) -> Valency {
        match self.adjacency.first() {
            None => Valency::Regular(0),
            Some(first) => {
                let d = first.len();
                if self.adjacency.iter().all(|l| l.len() == d) {
                    Valency::Regular(d)
                } else {
                    Valency::Nonregular
                }
            }
        }
    }

    /// Breadth-first from vertex 0. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let dist = self.bfs(0);
        dist.iter().all(|d| d.is_some())
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let comp: Vec<usize> = self
                .bfs(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = alloc::vec![None; self.vertex_count()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adjacency[u] {
                if dist[v as usize].is_none() {
                    dist[v as usize] = Some(du + 1);
                    queue.push_back(v as usize);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = alloc::vec![usize::MAX; n];
            let mut parent = alloc::vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for &v in &self.adjacency[u] {
                    let v = v as usize;
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Whether `p` maps every edge to an edge.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count()
            && self.adjacency.iter().enumerate().all(|(u, list)| {
                let pu = p.apply(u as u32) as usize;
                self.adjacency[pu].len() == list.len()
                    && list.iter().all(|&v| self.is_adjacent(pu, p.apply(v) as usize))
            })
    }

    /// The graph with vertex `v` renamed `relabel[v]`.
    pub fn relabel(&self, relabel: &[usize]) -> Result<SimpleGraph> {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (relabel[u], relabel[v]))
            .collect();
        SimpleGraph::from_edges(self.vertex_count(), &edges)
    }
}

/// A few named graphs used throughout the tests.
pub mod named {
    use super::SimpleGraph;
    use alloc::vec::Vec;

    pub fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).expect("n >= 3")
    }

    pub fn path(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_edges(n, &edges).expect("valid path")
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::from_edges(n, &edges).expect("valid complete graph")
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `i ~ i+5`.
    pub fn petersen() -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        SimpleGraph::from_edges(10, &edges).expect("valid Petersen graph")
    }

    /// The 3-cube; vertices are 3-bit words, adjacent when they differ in one bit.
    pub fn cube() -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..8usize {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::from_edges(8, &edges).expect("valid cube")
    }
}
