//! Branch and bound over betweenness triples.
//!
//! `X` is a gp set iff it contains no triple `{u, x, v}` with `x` on a
//! shortest `u,v`-path. For each pair `{a, b}` the table `forbid[a][b]`
//! holds every `c` completing such a triple, so adding `a` to a set that
//! holds `b` strikes `forbid[a][b]` from the candidates. Feasibility is
//! downward closed and `|X| + |candidates|` bounds every extension.
//!
//! Each solve runs twice: first over vertices sorted by descending
//! eccentricity to find the optimum quickly, then in index order with the
//! optimum as target, where the first hit is the lexicographically least
//! optimal set.

use crate::graph::VertexSet;
use crate::metric::DistMatrix;

/// Interval and conflict tables in a permuted vertex numbering.
struct Ranked {
    n: usize,
    /// `rank -> vertex`
    order: Vec<usize>,
    interior: Vec<VertexSet>,
    forbid: Vec<VertexSet>,
}

impl Ranked {
    fn new(d: &DistMatrix, order: Vec<usize>) -> Ranked {
        let n = d.order();
        let mut interior = vec![VertexSet::new(n); n * n];
        for a in 0..n {
            for b in a + 1..n {
                for w in 0..n {
                    if w != a && w != b && d.on_geodesic(order[a], order[w], order[b]) {
                        interior[a * n + b].insert(w);
                        interior[b * n + a].insert(w);
                    }
                }
            }
        }
        let mut forbid = vec![VertexSet::new(n); n * n];
        for a in 0..n {
            for b in a + 1..n {
                let mut f = interior[a * n + b].clone();
                for c in 0..n {
                    if c != a
                        && c != b
                        && (interior[b * n + c].contains(a) || interior[a * n + c].contains(b))
                    {
                        f.insert(c);
                    }
                }
                forbid[b * n + a] = f.clone();
                forbid[a * n + b] = f;
            }
        }
        Ranked {
            n,
            order,
            interior,
            forbid,
        }
    }

    fn interior(&self, a: usize, b: usize) -> &VertexSet {
        &self.interior[a * self.n + b]
    }

    fn extend(&self, chosen: &[usize], v: usize, rest: &VertexSet) -> VertexSet {
        let mut next = rest.clone();
        for &c in chosen {
            next.difference_with(&self.forbid[v * self.n + c]);
        }
        next
    }

    fn to_vertices(&self, ranks: &[usize]) -> VertexSet {
        VertexSet::from_vertices(self.n, ranks.iter().map(|&r| self.order[r]))
    }

    /// Vertices that must stay out of the set for every pair of `out` to be
    /// positionable.
    fn blocked_by(&self, out: &VertexSet) -> VertexSet {
        let members = out.to_vec();
        let mut blocked = VertexSet::new(self.n);
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                blocked.union_with(self.interior(u, v));
            }
        }
        blocked
    }

    /// Every pair outside `chosen` with at least one end in `fresh` avoids
    /// `chosen` on its geodesics. Pairs inside `settled` are checked
    /// elsewhere.
    fn complement_convex(&self, chosen: &VertexSet, fresh: &VertexSet, settled: &VertexSet) -> bool {
        let fresh = fresh.to_vec();
        let settled = settled.to_vec();
        fresh.iter().enumerate().all(|(i, &u)| {
            fresh[i + 1..]
                .iter()
                .chain(&settled)
                .all(|&v| self.interior(u, v).is_disjoint(chosen))
        })
    }
}

/// Search state shared by the two passes.
enum Goal {
    /// Improve on the best size seen so far.
    Maximize { best: usize },
    /// Stop at the first set of exactly this size.
    Reach { target: usize, found: Option<Vec<usize>> },
}

impl Goal {
    // smallest |X| + |candidates| that is still worth exploring
    fn needed(&self) -> usize {
        match self {
            Goal::Maximize { best, .. } => best + 1,
            Goal::Reach { target, .. } => *target,
        }
    }

    fn done(&self) -> bool {
        matches!(self, Goal::Reach { found: Some(_), .. })
    }

    fn offer(&mut self, chosen: &[usize]) {
        match self {
            Goal::Maximize { best } if chosen.len() > *best => *best = chosen.len(),
            Goal::Reach { target, found } if found.is_none() && chosen.len() == *target => {
                *found = Some(chosen.to_vec());
            }
            _ => {}
        }
    }
}

pub(super) struct Tables {
    by_eccentricity: Ranked,
    by_index: Ranked,
}

impl Tables {
    pub(super) fn new(d: &DistMatrix) -> Tables {
        let n = d.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(d.eccentricity(v)));
        Tables {
            by_eccentricity: Ranked::new(d, order),
            by_index: Ranked::new(d, (0..n).collect()),
        }
    }

    pub(super) fn max_gp_set(&self) -> VertexSet {
        let fast = &self.by_eccentricity;
        let mut goal = Goal::Maximize { best: 0 };
        gp_search(fast, &mut Vec::new(), VertexSet::full(fast.n), &mut goal);
        let Goal::Maximize { best } = goal else { unreachable!() };

        let lex = &self.by_index;
        let mut goal = Goal::Reach {
            target: best,
            found: None,
        };
        gp_search(lex, &mut Vec::new(), VertexSet::full(lex.n), &mut goal);
        match goal {
            Goal::Reach { found: Some(f), .. } => lex.to_vertices(&f),
            _ => unreachable!("an optimum found once is found again"),
        }
    }

    pub(super) fn max_dual_set(&self) -> VertexSet {
        let fast = &self.by_eccentricity;
        let mut goal = Goal::Maximize { best: 0 };
        dual_search(fast, &mut Vec::new(), VertexSet::full(fast.n), &mut goal);
        let Goal::Maximize { best } = goal else { unreachable!() };
        if best == 0 {
            return VertexSet::new(fast.n);
        }

        let lex = &self.by_index;
        let mut goal = Goal::Reach {
            target: best,
            found: None,
        };
        dual_search(lex, &mut Vec::new(), VertexSet::full(lex.n), &mut goal);
        match goal {
            Goal::Reach { found: Some(f), .. } => lex.to_vertices(&f),
            _ => unreachable!("an optimum found once is found again"),
        }
    }
}

fn gp_search(t: &Ranked, chosen: &mut Vec<usize>, cand: VertexSet, goal: &mut Goal) {
    goal.offer(chosen);
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if goal.done() || chosen.len() + rest.len() < goal.needed() {
            return;
        }
        rest.remove(v);
        let next = t.extend(chosen, v, &rest);
        chosen.push(v);
        gp_search(t, chosen, next, goal);
        chosen.pop();
    }
}

// Same enumeration of gp sets, but every node is a candidate answer (dual
// sets are not closed under subsets) and is accepted only when its
// complement is convex. Vertices already ruled out of the set stay in the
// complement for the whole subtree, so geodesics between them must avoid
// the set: such interiors are struck from the candidates, and a node whose
// set already meets one is abandoned.
fn dual_search(t: &Ranked, chosen: &mut Vec<usize>, cand: VertexSet, goal: &mut Goal) {
    let chosen_set = VertexSet::from_vertices(t.n, chosen.iter().copied());
    let out = chosen_set.union(&cand).complement();
    let blocked = t.blocked_by(&out);
    if !blocked.is_disjoint(&chosen_set) {
        return;
    }
    if chosen.len() >= goal.needed() && t.complement_convex(&chosen_set, &cand, &out) {
        goal.offer(chosen);
    }
    let mut rest = cand.difference(&blocked);
    while let Some(v) = rest.first() {
        if goal.done() || chosen.len() + rest.len() < goal.needed() {
            return;
        }
        rest.remove(v);
        let next = t.extend(chosen, v, &rest);
        chosen.push(v);
        dual_search(t, chosen, next, goal);
        chosen.pop();
    }
}
