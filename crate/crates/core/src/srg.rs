//! Mutually maximally distant pairs and the strong resolving graph.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, DistMatrix};

/// No neighbor of `u` is farther from `v` than `u` is.
pub fn is_maximally_distant(g: &Graph, d: &DistMatrix, u: usize, v: usize) -> bool {
    let duv = d.dist(u, v);
    g.neighbors(u).iter().all(|&w| d.dist(v, w) <= duv)
}

pub fn is_mmd(g: &Graph, d: &DistMatrix, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::DegeneratePair(u));
    }
    Ok(is_maximally_distant(g, d, u, v) && is_maximally_distant(g, d, v, u))
}

/// `G_SR`: same vertices as `G`, edges exactly the mutually maximally
/// distant pairs.
pub fn strong_resolving_graph(g: &Graph) -> Result<Graph> {
    let d = all_pairs_distances(g)?;
    Ok(strong_resolving_graph_with(g, &d))
}

pub fn strong_resolving_graph_with(g: &Graph, d: &DistMatrix) -> Graph {
    let n = g.order();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if is_maximally_distant(g, d, u, v) && is_maximally_distant(g, d, v, u) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    // pairs (u, v) with u < v, decided straight from the definition by
    // scanning every neighbor of both endpoints
    fn mmd_pairs_by_scan(g: &Graph) -> Vec<(usize, usize)> {
        let d = all_pairs_distances(g).unwrap();
        let mut out = Vec::new();
        for u in g.vertices() {
            for v in u + 1..g.order() {
                let mut ok = true;
                for &w in g.neighbors(u) {
                    ok &= d.dist(w, v) <= d.dist(u, v);
                }
                for &w in g.neighbors(v) {
                    ok &= d.dist(w, u) <= d.dist(u, v);
                }
                if ok {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[test]
    fn mmd_examples() {
        let k4 = complete(4);
        let d = all_pairs_distances(&k4).unwrap();
        assert!(is_mmd(&k4, &d, 1, 3).unwrap());

        let p4 = path(4);
        let d = all_pairs_distances(&p4).unwrap();
        assert!(is_mmd(&p4, &d, 0, 3).unwrap());
        assert!(!is_mmd(&p4, &d, 0, 1).unwrap());
        assert_eq!(is_mmd(&p4, &d, 2, 2), Err(Error::DegeneratePair(2)));

        let c6 = cycle(6);
        let d = all_pairs_distances(&c6).unwrap();
        assert!(is_mmd(&c6, &d, 0, 3).unwrap());
        assert!(!is_mmd(&c6, &d, 0, 2).unwrap());
    }

    #[test]
    fn srg_examples() {
        let p4 = strong_resolving_graph(&path(4)).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 3)]);
        assert_eq!(p4.degree(1) + p4.degree(2), 0);
        assert_eq!(mmd_pairs_by_scan(&path(4)), vec![(0, 3)]);

        assert_eq!(strong_resolving_graph(&complete(4)).unwrap(), complete(4));

        let c4 = strong_resolving_graph(&cycle(4)).unwrap();
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(mmd_pairs_by_scan(&cycle(4)), vec![(0, 2), (1, 3)]);

        assert_eq!(
            strong_resolving_graph(&Graph::empty(2)).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn diametral_pairs_are_mmd() {
        for seed in 0..40 {
            let g = crate::generators::random_connected(9, 0.35, seed).unwrap();
            let d = all_pairs_distances(&g).unwrap();
            let sr = strong_resolving_graph_with(&g, &d);
            assert!(sr.size() >= 1);
            for u in g.vertices() {
                for v in u + 1..g.order() {
                    if d.dist(u, v) == d.diameter() {
                        assert!(sr.has_edge(u, v));
                    }
                }
            }
            assert_eq!(sr.edges().collect::<Vec<_>>(), mmd_pairs_by_scan(&g));
        }
    }
}
