//! General position sets and their total, outer and dual variants.
//!
//! A pair `u, v` is *X-positionable* when no shortest `u,v`-path has an
//! interior vertex in `X`. The variants differ only in which pairs must be
//! positionable:
//!
//! | variant | pairs checked                   |
//! |---------|---------------------------------|
//! | gp      | both in `X`                     |
//! | total   | all of `V(G)`                   |
//! | outer   | both in `X`, or one in each side|
//! | dual    | both in `X`, or both outside    |

mod oracle;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{maximum_clique, Graph, VertexSet};
use crate::metric::{all_pairs_distances, simplicial_set, DistMatrix};
use crate::srg::strong_resolving_graph_with;

pub use oracle::{brute_force, optimal_sets, variant_sets, DEFAULT_MAX_N};
use search::Tables;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Gp,
    Total,
    Outer,
    Dual,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Gp, Variant::Total, Variant::Outer, Variant::Dual];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Gp => "gp",
            Variant::Total => "total",
            Variant::Outer => "outer",
            Variant::Dual => "dual",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Spec(format!("unknown invariant {s:?}")))
    }
}

/// How a certificate's value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Clique,
    BranchAndBound,
    Exhaustive,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Clique => "clique",
            Method::BranchAndBound => "branch_and_bound",
            Method::Exhaustive => "exhaustive",
        }
    }
}

/// An invariant value with a witnessing set of that size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub variant: Variant,
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
}

impl Certificate {
    /// Re-checks the witness against the definition of its variant.
    pub fn verify(&self, g: &Graph, d: &DistMatrix) -> bool {
        self.witness.len() == self.value && is_variant_set(g, d, &self.witness, self.variant)
    }
}

pub fn is_positionable(d: &DistMatrix, x: &VertexSet, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::DegeneratePair(u));
    }
    Ok(positionable(d, x, u, v))
}

fn positionable(d: &DistMatrix, x: &VertexSet, u: usize, v: usize) -> bool {
    x.iter()
        .all(|w| w == u || w == v || !d.on_geodesic(u, w, v))
}

fn all_pairs_within(d: &DistMatrix, x: &VertexSet, side: &[usize]) -> bool {
    side.iter()
        .enumerate()
        .all(|(i, &u)| side[i + 1..].iter().all(|&v| positionable(d, x, u, v)))
}

/// Tests `X` against the variant's definition, pair by pair.
pub fn is_variant_set(g: &Graph, d: &DistMatrix, x: &VertexSet, variant: Variant) -> bool {
    debug_assert_eq!(g.order(), d.order());
    let inside = x.to_vec();
    let outside = x.complement().to_vec();
    match variant {
        Variant::Gp => all_pairs_within(d, x, &inside),
        Variant::Total => {
            let all: Vec<usize> = g.vertices().collect();
            all_pairs_within(d, x, &all)
        }
        Variant::Outer => {
            all_pairs_within(d, x, &inside)
                && inside
                    .iter()
                    .all(|&u| outside.iter().all(|&v| positionable(d, x, u, v)))
        }
        Variant::Dual => all_pairs_within(d, x, &inside) && all_pairs_within(d, x, &outside),
    }
}

/// Exact solver for one connected graph; caches the distance matrix and
/// search tables across variants.
pub struct Solver<'g> {
    graph: &'g Graph,
    dist: DistMatrix,
    tables: Option<Tables>,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Solver<'g>> {
        let dist = all_pairs_distances(graph)?;
        Ok(Solver {
            graph,
            dist,
            tables: None,
        })
    }

    pub fn distances(&self) -> &DistMatrix {
        &self.dist
    }

    fn tables(&mut self) -> &Tables {
        let dist = &self.dist;
        self.tables.get_or_insert_with(|| Tables::new(dist))
    }

    pub fn solve(&mut self, variant: Variant) -> Certificate {
        let (witness, method) = match variant {
            Variant::Total => (simplicial_set(self.graph), Method::ClosedForm),
            Variant::Outer => {
                let sr = strong_resolving_graph_with(self.graph, &self.dist);
                (maximum_clique(&sr), Method::Clique)
            }
            Variant::Gp => (self.tables().max_gp_set(), Method::BranchAndBound),
            Variant::Dual => (self.tables().max_dual_set(), Method::BranchAndBound),
        };
        Certificate {
            variant,
            value: witness.len(),
            witness,
            method,
        }
    }
}

/// Exact value of `variant` on a connected graph, with a witness.
///
/// Total sets are the subsets of `S(G)`, outer sets of size at least two are
/// the cliques of the strong resolving graph, gp sets come from a
/// branch-and-bound over betweenness triples, and dual sets are the gp sets
/// whose complement is convex. Among maximum sets the lexicographically
/// least one is returned.
pub fn solve(g: &Graph, variant: Variant) -> Result<Certificate> {
    Ok(Solver::new(g)?.solve(variant))
}
