//! Shortest-path metric: distances, geodesic intervals, convexity, girth and
//! the local structures (simplicial vertices, isometric `P4`s) built on them.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// All-pairs hop distances of a connected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

/// One BFS per source.
pub fn all_pairs_distances(g: &Graph) -> Result<DistMatrix> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == u32::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if row.contains(&u32::MAX) {
            return Err(Error::Disconnected);
        }
    }
    let diameter = d.iter().copied().max().unwrap_or(0);
    Ok(DistMatrix { n, d, diameter })
}

impl DistMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    pub fn diameter(&self) -> usize {
        self.diameter as usize
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.d[v * self.n..(v + 1) * self.n]
            .iter()
            .copied()
            .max()
            .unwrap_or(0) as usize
    }

    /// `w` lies on some shortest `u,v`-path. Endpoints count as lying
    /// between.
    pub fn lies_between(&self, u: usize, w: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::DegeneratePair(u));
        }
        Ok(self.on_geodesic(u, w, v))
    }

    #[inline]
    pub(crate) fn on_geodesic(&self, u: usize, w: usize, v: usize) -> bool {
        self.dist(u, w) + self.dist(w, v) == self.dist(u, v)
    }

    /// The geodesic interval `I(u,v)`, endpoints included.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.n, (0..self.n).filter(|&w| self.on_geodesic(u, w, v)))
    }
}

impl fmt::Debug for DistMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.d.chunks(self.n.max(1)).collect();
        f.debug_struct("DistMatrix")
            .field("diameter", &self.diameter)
            .field("d", &rows)
            .finish()
    }
}

/// Precomputed geodesic intervals for every vertex pair.
pub struct Intervals {
    n: usize,
    sets: Vec<VertexSet>,
}

impl Intervals {
    pub fn new(d: &DistMatrix) -> Intervals {
        let n = d.order();
        let mut sets = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                sets.push(d.interval(u, v));
            }
        }
        Intervals { n, sets }
    }

    pub fn get(&self, u: usize, v: usize) -> &VertexSet {
        &self.sets[u * self.n + v]
    }

    /// Interior of `I(u,v)`: the interval without its endpoints.
    pub fn interior(&self, u: usize, v: usize) -> VertexSet {
        let mut s = self.get(u, v).clone();
        s.remove(u);
        s.remove(v);
        s
    }

    pub fn is_convex(&self, w: &VertexSet) -> bool {
        let members = w.to_vec();
        members.iter().enumerate().all(|(i, &u)| {
            members[i + 1..]
                .iter()
                .all(|&v| self.get(u, v).is_subset(w))
        })
    }
}

/// `w` contains every shortest path between any two of its vertices. Empty
/// sets and singletons are convex.
pub fn is_convex(g: &Graph, d: &DistMatrix, w: &VertexSet) -> bool {
    debug_assert_eq!(g.order(), d.order());
    let members = w.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if (0..d.order()).any(|x| !w.contains(x) && d.on_geodesic(u, x, v)) {
                return false;
            }
        }
    }
    true
}

/// Smallest convex set containing `w`.
pub fn convex_hull(d: &DistMatrix, w: &VertexSet) -> VertexSet {
    let mut hull = w.clone();
    loop {
        let members = hull.to_vec();
        let mut next = hull.clone();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                next.union_with(&d.interval(u, v));
            }
        }
        if next == hull {
            return hull;
        }
        hull = next;
    }
}

/// Every pair of vertices of `w` has the same distance in `G[w]` as in `G`.
pub fn is_isometric(g: &Graph, d: &DistMatrix, w: &VertexSet) -> bool {
    if w.is_empty() {
        return true;
    }
    let (sub, relabel) = g.induced_subgraph(w).expect("nonempty");
    let Ok(sd) = all_pairs_distances(&sub) else {
        return false;
    };
    let members = w.to_vec();
    members.iter().all(|&u| {
        members.iter().all(|&v| {
            let (a, b) = (relabel[u].unwrap(), relabel[v].unwrap());
            sd.dist(a, b) == d.dist(u, v)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Length of a shortest cycle.
///
/// For each root `r`, an edge `uv` with `d(r,u) = d(r,v)` closes an odd
/// cycle of length at most `2d(r,u)+1`, and a vertex with two neighbors one
/// level closer to `r` closes an even cycle of length at most `2d(r,v)`.
/// Rooting at a vertex of a shortest cycle attains its length exactly.
pub fn girth(g: &Graph, d: &DistMatrix) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    for r in 0..n {
        for v in 0..n {
            let dv = d.dist(r, v);
            let mut parents = 0;
            for &w in g.neighbors(v) {
                let dw = d.dist(r, w);
                if dw == dv && w > v {
                    best = best.min(2 * dv + 1);
                } else if dw + 1 == dv {
                    parents += 1;
                }
            }
            if parents >= 2 {
                best = best.min(2 * dv);
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// `S(G)`: vertices whose neighborhood is a clique.
pub fn simplicial_set(g: &Graph) -> VertexSet {
    VertexSet::from_vertices(
        g.order(),
        g.vertices().filter(|&v| g.is_clique(g.neighbor_set(v))),
    )
}

/// `S(G)` via the distance form: no two neighbors of `v` are at distance 2.
pub fn simplicial_set_by_distance(g: &Graph, d: &DistMatrix) -> VertexSet {
    VertexSet::from_vertices(
        g.order(),
        g.vertices().filter(|&v| {
            let ns = g.neighbors(v);
            ns.iter()
                .enumerate()
                .all(|(i, &a)| ns[i + 1..].iter().all(|&b| d.dist(a, b) != 2))
        }),
    )
}

/// `xy` is the middle edge of an isometric `P4`.
pub fn is_p4_inner_isometric(g: &Graph, d: &DistMatrix, (x, y): (usize, usize)) -> Result<bool> {
    if !g.has_edge(x, y) {
        return Err(Error::NotAnEdge(x, y));
    }
    Ok(g.neighbors(x).iter().any(|&xp| {
        xp != y
            && d.dist(xp, y) == 2
            && g
                .neighbors(y)
                .iter()
                .any(|&yp| yp != x && d.dist(x, yp) == 2 && d.dist(xp, yp) == 3)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn dm(g: &Graph) -> DistMatrix {
        all_pairs_distances(g).unwrap()
    }

    #[test]
    fn distance_examples() {
        let p4 = dm(&path(4));
        assert_eq!((p4.dist(0, 3), p4.diameter()), (3, 3));
        let k5 = dm(&complete(5));
        assert!((0..5).all(|u| (0..5).all(|v| k5.dist(u, v) == usize::from(u != v))));
        assert_eq!(k5.diameter(), 1);
        let c6 = dm(&cycle(6));
        assert_eq!((c6.dist(0, 3), c6.diameter()), (3, 3));
        assert_eq!(c6.eccentricity(2), 3);
    }

    #[test]
    fn distance_errors() {
        assert_eq!(all_pairs_distances(&Graph::empty(2)), Err(Error::Disconnected));
        assert_eq!(all_pairs_distances(&Graph::empty(0)), Err(Error::EmptyGraph));
        assert_eq!(dm(&Graph::empty(1)).diameter(), 0);
    }

    #[test]
    fn girth_examples() {
        let c7 = cycle(7);
        assert_eq!(girth(&c7, &dm(&c7)), Girth::Finite(7));
        let c6 = cycle(6);
        assert_eq!(girth(&c6, &dm(&c6)), Girth::Finite(6));
        let p5 = path(5);
        assert_eq!(girth(&p5, &dm(&p5)), Girth::Infinite);
        let k4 = complete(4);
        assert_eq!(girth(&k4, &dm(&k4)), Girth::Finite(3));
        // C4 with a chord-free tail still has girth 4
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        assert_eq!(girth(&g, &dm(&g)), Girth::Finite(4));
    }

    #[test]
    fn betweenness_examples() {
        let p5 = dm(&path(5));
        assert!(p5.lies_between(0, 2, 4).unwrap());
        assert!(!p5.lies_between(0, 4, 2).unwrap());
        let c4 = dm(&cycle(4));
        assert!(c4.lies_between(0, 1, 2).unwrap());
        assert!(c4.lies_between(0, 3, 2).unwrap());
        assert_eq!(c4.lies_between(1, 0, 1), Err(Error::DegeneratePair(1)));
    }

    #[test]
    fn convexity_examples() {
        let c6 = cycle(6);
        let d6 = dm(&c6);
        assert!(is_convex(&c6, &d6, &VertexSet::from_vertices(6, [0, 1, 2])));
        assert!(is_convex(&c6, &d6, &VertexSet::full(6)));
        assert!(is_convex(&c6, &d6, &VertexSet::new(6)));
        assert!(is_convex(&c6, &d6, &VertexSet::from_vertices(6, [4])));
        let c4 = cycle(4);
        let d4 = dm(&c4);
        assert!(!is_convex(&c4, &d4, &VertexSet::from_vertices(4, [0, 2])));
        assert_eq!(convex_hull(&d4, &VertexSet::from_vertices(4, [0, 2])), VertexSet::full(4));
        assert_eq!(
            convex_hull(&d6, &VertexSet::from_vertices(6, [0, 2])).to_vec(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn simplicial_examples() {
        for n in 2..8 {
            assert_eq!(simplicial_set(&path(n)).to_vec(), vec![0, n - 1]);
        }
        assert!(simplicial_set(&cycle(6)).is_empty());
        assert_eq!(simplicial_set(&complete(4)).len(), 4);
        assert_eq!(simplicial_set(&Graph::empty(1)).to_vec(), vec![0]);
    }

    #[test]
    fn p4_inner_examples() {
        let c6 = cycle(6);
        let d6 = dm(&c6);
        assert!(c6.edges().all(|e| is_p4_inner_isometric(&c6, &d6, e).unwrap()));
        let c5 = cycle(5);
        let d5 = dm(&c5);
        assert!(c5.edges().all(|e| !is_p4_inner_isometric(&c5, &d5, e).unwrap()));
        assert_eq!(is_p4_inner_isometric(&c5, &d5, (0, 2)), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn isometric_examples() {
        let c6 = cycle(6);
        let d6 = dm(&c6);
        assert!(is_isometric(&c6, &d6, &VertexSet::from_vertices(6, [0, 1, 2, 3])));
        assert!(!is_isometric(&c6, &d6, &VertexSet::from_vertices(6, [0, 1, 2, 3, 4])));
        assert!(!is_isometric(&c6, &d6, &VertexSet::from_vertices(6, [0, 2])));
    }
}
