//! Immutable simple undirected graphs on dense vertex indices `0..n`.

mod clique;
mod vertex_set;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use clique::{clique_number, maximum_clique};
pub use vertex_set::{Iter as VertexSetIter, VertexSet};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    nbr: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Builds a simple graph. Pairs are unordered, so `(0,1)` and `(1,0)`
    /// name the same edge and together count as a duplicate.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut nbr = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::Index { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if nbr[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            nbr[u].insert(v);
            nbr[v].insert(u);
        }
        let adj = nbr.iter().map(VertexSet::to_vec).collect();
        Ok(Graph {
            adj,
            nbr,
            m: edges.len(),
        })
    }

    /// Like [`Graph::new`] but silently merges repeated pairs. Loops and
    /// out-of-range indices are still errors.
    pub(crate) fn from_edge_iter<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Graph::new(n, &pairs)
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            nbr: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.nbr[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.nbr[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// Whether the members of `w` are pairwise adjacent.
    pub fn is_clique(&self, w: &VertexSet) -> bool {
        w.iter().all(|v| {
            let mut rest = w.clone();
            rest.remove(v);
            rest.is_subset(&self.nbr[v])
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = VertexSet::new(n);
        seen.insert(0);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == n
    }

    /// Subgraph induced by `w`. Vertices keep their relative order; the
    /// returned map sends an old index to its new index, or `None` if the
    /// vertex was dropped.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if w.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut relabel = vec![None; self.order()];
        for (new, old) in w.iter().enumerate() {
            relabel[old] = Some(new);
        }
        let edges: Vec<_> = self
            .edges()
            .filter_map(|(u, v)| Some((relabel[u]?, relabel[v]?)))
            .collect();
        Ok((Graph::new(w.len(), &edges)?, relabel))
    }

    pub fn clique_number(&self) -> usize {
        clique_number(self)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
