//! Replays structural results about the four invariants on concrete graphs
//! and reports each check as a [`LawReport`].
//!
//! Subset quantifiers are exhaustive, so [`check_structural`] is limited to
//! small orders. The instance grids used by [`run_suite`] are fixed and
//! seeded.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{
    chain_cycles, complete, complete_bipartite, cycle, gm_join, path, product, product_index,
    random_connected, random_tree, theta, ProductKind,
};
use crate::graph::{clique_number, Graph, VertexSet};
use crate::metric::{
    all_pairs_distances, convex_hull, girth, is_convex, is_p4_inner_isometric, simplicial_set,
    DistMatrix, Girth,
};
use crate::position::{brute_force, is_variant_set, optimal_sets, Solver, Variant, DEFAULT_MAX_N};
use crate::srg::{is_mmd, strong_resolving_graph_with};

pub const STRUCTURAL_MAX_N: usize = 12;
pub const SUFFICIENT_MAX_N: usize = 18;
pub const PRODUCT_MAX_N: usize = 36;

/// Enough to replay a check: the graph and the sets involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub sets: Vec<Vec<usize>>,
}

impl Counterexample {
    pub fn new(g: &Graph, sets: &[&VertexSet]) -> Counterexample {
        Counterexample {
            n: g.order(),
            edges: g.edges().collect(),
            sets: sets.iter().map(|s| s.to_vec()).collect(),
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.n, &self.edges).expect("recorded from a valid graph")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instance: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
    pub counterexample: Option<Counterexample>,
}

impl LawReport {
    /// Passes iff the rendered values agree. Failures always carry the graph.
    fn compare<T: fmt::Display>(law: &str, instance: &str, g: &Graph, expected: T, actual: T) -> LawReport {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let passed = expected == actual;
        LawReport {
            law: law.to_string(),
            instance: instance.to_string(),
            passed,
            counterexample: (!passed).then(|| Counterexample::new(g, &[])),
            expected,
            actual,
        }
    }

    /// A law whose premise does not hold on this instance.
    fn vacuous(law: &str, instance: &str, premise: &str) -> LawReport {
        let text = format!("premise false ({premise})");
        LawReport {
            law: law.to_string(),
            instance: instance.to_string(),
            passed: true,
            expected: text.clone(),
            actual: text,
            counterexample: None,
        }
    }

    fn with_sets(mut self, g: &Graph, sets: &[&VertexSet]) -> LawReport {
        self.counterexample = Some(Counterexample::new(g, sets));
        self
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} [{}] expected {} actual {}",
            self.law, self.instance, self.expected, self.actual
        )
    }
}

/// Which sets of a small graph satisfy each variant, by sweeping all
/// `2^n` subsets.
struct Sweep {
    n: usize,
    gp: Vec<bool>,
    total: Vec<bool>,
    outer: Vec<bool>,
    dual: Vec<bool>,
}

impl Sweep {
    fn new(g: &Graph, d: &DistMatrix) -> Sweep {
        let n = g.order();
        let size = 1usize << n;
        let mut s = Sweep {
            n,
            gp: vec![false; size],
            total: vec![false; size],
            outer: vec![false; size],
            dual: vec![false; size],
        };
        for mask in 0..size {
            let x = VertexSet::from_mask(n, mask as u64);
            s.gp[mask] = is_variant_set(g, d, &x, Variant::Gp);
            s.total[mask] = is_variant_set(g, d, &x, Variant::Total);
            s.outer[mask] = is_variant_set(g, d, &x, Variant::Outer);
            s.dual[mask] = is_variant_set(g, d, &x, Variant::Dual);
        }
        s
    }

    fn flags(&self, variant: Variant) -> &[bool] {
        match variant {
            Variant::Gp => &self.gp,
            Variant::Total => &self.total,
            Variant::Outer => &self.outer,
            Variant::Dual => &self.dual,
        }
    }

    fn max(&self, variant: Variant) -> usize {
        self.flags(variant)
            .iter()
            .enumerate()
            .filter(|(_, &ok)| ok)
            .map(|(mask, _)| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn set(&self, mask: usize) -> VertexSet {
        VertexSet::from_mask(self.n, mask as u64)
    }

    /// First mask where the sweep disagrees with `predicate`.
    fn first_disagreement(&self, variant: Variant, mut predicate: impl FnMut(usize) -> Option<bool>) -> Option<usize> {
        self.flags(variant)
            .iter()
            .enumerate()
            .find(|&(mask, &ok)| predicate(mask).is_some_and(|want| want != ok))
            .map(|(mask, _)| mask)
    }
}

fn agreement(law: &str, instance: &str, g: &Graph, sweep: &Sweep, bad: Option<usize>) -> LawReport {
    let report = LawReport::compare(law, instance, g, "no disagreement", if bad.is_some() { "disagreement" } else { "no disagreement" });
    match bad {
        Some(mask) => report.with_sets(g, &[&sweep.set(mask)]),
        None => report,
    }
}

fn ensure_order(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        return Err(Error::Size {
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Exhaustive checks of the characterizations on one graph of order at
/// most [`STRUCTURAL_MAX_N`].
pub fn check_structural(g: &Graph, instance: &str) -> Result<Vec<LawReport>> {
    ensure_order(g, STRUCTURAL_MAX_N)?;
    let d = all_pairs_distances(g)?;
    let n = g.order();
    let sweep = Sweep::new(g, &d);
    let simplicial = simplicial_set(g);
    let s_mask: usize = simplicial.iter().map(|v| 1usize << v).sum();
    let mut out = Vec::new();

    // total sets are exactly the subsets of S(G)
    let bad = sweep.first_disagreement(Variant::Total, |mask| Some(mask & !s_mask == 0));
    out.push(agreement("total.subsets_of_simplicial", instance, g, &sweep, bad));
    out.push(LawReport::compare("total.value_is_s", instance, g, simplicial.len(), sweep.max(Variant::Total)));

    // outer sets of size >= 2 are the sets of pairwise mutually maximally distant vertices
    let mmd: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && is_mmd(g, &d, u, v).unwrap()).collect())
        .collect();
    let bad = sweep.first_disagreement(Variant::Outer, |mask| {
        (mask.count_ones() >= 2).then(|| {
            let x = sweep.set(mask).to_vec();
            x.iter().all(|&u| x.iter().all(|&v| u == v || mmd[u][v]))
        })
    });
    out.push(agreement("outer.mmd_cliques", instance, g, &sweep, bad));
    let sr = strong_resolving_graph_with(g, &d);
    let omega_sr = clique_number(&sr);
    out.push(LawReport::compare("outer.value_is_srg_clique", instance, g, omega_sr, sweep.max(Variant::Outer)));
    if n >= 2 {
        out.push(LawReport::compare("outer.at_least_two", instance, g, true, sweep.max(Variant::Outer) >= 2));
    }
    out.push(LawReport::compare("gp.at_least_srg_clique", instance, g, true, sweep.max(Variant::Gp) >= omega_sr));

    // a gp set is dual iff its complement is convex
    let bad = (0..1usize << n).find(|&mask| {
        sweep.gp[mask] && sweep.dual[mask] != is_convex(g, &d, &sweep.set(mask).complement())
    });
    out.push(agreement("dual.gp_with_convex_complement", instance, g, &sweep, bad));
    let bad = (0..1usize << n).find(|&mask| mask & !s_mask == 0 && !sweep.dual[mask]);
    out.push(agreement("dual.simplicial_subsets", instance, g, &sweep, bad));

    out.extend(adjacent_pair_laws(g, &d, instance));
    out.extend(nonadjacent_pair_laws(g, &d, &simplicial, instance));

    let dual = sweep.max(Variant::Dual);
    if dual == 1 {
        out.push(LawReport::compare("dual.one_implies_s_one", instance, g, 1, simplicial.len()));
    } else {
        out.push(LawReport::vacuous("dual.one_implies_s_one", instance, &format!("dual = {dual}")));
    }

    let (gp, outer, total) = (sweep.max(Variant::Gp), sweep.max(Variant::Outer), sweep.max(Variant::Total));
    out.push(LawReport::compare(
        "chain.inequalities",
        instance,
        g,
        true,
        gp >= outer && outer >= total && gp >= dual && dual >= total,
    ));

    // sets with at most one vertex have no pair inside X, so only the pairs
    // across or outside decide; the empty set qualifies for every variant
    let empty_ok = Variant::ALL.iter().all(|&v| sweep.flags(v)[0]);
    out.push(LawReport::compare("convention.empty_set", instance, g, true, empty_ok));
    let singles = |v: Variant| (0..n).filter(|&u| sweep.flags(v)[1 << u]).count();
    out.push(LawReport::compare(
        "convention.singletons",
        instance,
        g,
        format!("gp {n} total {} outer {n}", simplicial.len()),
        format!("gp {} total {} outer {}", singles(Variant::Gp), singles(Variant::Total), singles(Variant::Outer)),
    ));

    // observation only: whether gp and dual coincide here
    let relation = if gp == dual { "equal" } else { "differ" };
    out.push(LawReport::compare("record.gp_vs_dual", instance, g, relation, relation));

    let mut solver = Solver::new(g)?;
    for v in Variant::ALL {
        let cert = solver.solve(v);
        let report = LawReport::compare(&format!("solver.matches_sweep.{v}"), instance, g, sweep.max(v), cert.value);
        out.push(if report.passed { report } else { report.with_sets(g, &[&cert.witness]) });
    }
    Ok(out)
}

/// Conditions (i), (ii), (iii) for an adjacent pair agree on every edge.
fn adjacent_pair_laws(g: &Graph, d: &DistMatrix, instance: &str) -> Vec<LawReport> {
    let n = g.order();
    let mut bad = None;
    for (x, y) in g.edges() {
        let pair = VertexSet::from_vertices(n, [x, y]);
        let dual = is_variant_set(g, d, &pair, Variant::Dual);
        let convex = is_convex(g, d, &pair.complement());
        let around = g.neighbor_set(x).union(g.neighbor_set(y));
        let close = around.iter().all(|u| around.iter().all(|v| d.dist(u, v) <= 2));
        let mut nx = g.neighbor_set(x).clone();
        nx.remove(y);
        let mut ny = g.neighbor_set(y).clone();
        ny.remove(x);
        let literal = close && g.is_clique(&nx) && g.is_clique(&ny);
        if !(dual == convex && convex == literal) {
            bad = Some((pair, format!("(i)={dual} (ii)={convex} (iii)={literal}")));
            break;
        }
    }
    let actual = bad.as_ref().map_or("equivalent on every edge".to_string(), |(_, s)| s.clone());
    let report = LawReport::compare("dual.adjacent_pair", instance, g, "equivalent on every edge".to_string(), actual);
    match bad {
        Some((pair, _)) => vec![report.with_sets(g, &[&pair])],
        None => vec![report],
    }
}

fn nonadjacent_pair_laws(g: &Graph, d: &DistMatrix, simplicial: &VertexSet, instance: &str) -> Vec<LawReport> {
    let n = g.order();
    let mut bad = None;
    'outer: for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            let pair = VertexSet::from_vertices(n, [x, y]);
            let dual = is_variant_set(g, d, &pair, Variant::Dual);
            if dual != (simplicial.contains(x) && simplicial.contains(y)) {
                bad = Some(pair);
                break 'outer;
            }
        }
    }
    let report = LawReport::compare(
        "dual.nonadjacent_pair",
        instance,
        g,
        "dual iff both simplicial",
        if bad.is_some() { "disagreement" } else { "dual iff both simplicial" },
    );
    match bad {
        Some(pair) => vec![report.with_sets(g, &[&pair])],
        None => vec![report],
    }
}

/// A dual set together with a subset of it that is not dual, if the graph
/// has one. Searches dual sets by increasing size.
pub fn non_heredity_witness(g: &Graph) -> Result<Option<(VertexSet, VertexSet)>> {
    ensure_order(g, STRUCTURAL_MAX_N)?;
    let d = all_pairs_distances(g)?;
    let duals = crate::position::variant_sets(g, Variant::Dual, STRUCTURAL_MAX_N)?;
    for x in &duals {
        let members = x.to_vec();
        let k = members.len();
        for sub in 0..(1usize << k) - 1 {
            let y = VertexSet::from_vertices(g.order(), (0..k).filter(|i| sub >> i & 1 == 1).map(|i| members[i]));
            if !is_variant_set(g, &d, &y, Variant::Dual) {
                return Ok(Some((x.clone(), y)));
            }
        }
    }
    Ok(None)
}

/// Sufficient conditions for `dual = 0`.
pub fn check_sufficient(g: &Graph, instance: &str) -> Result<Vec<LawReport>> {
    ensure_order(g, SUFFICIENT_MAX_N)?;
    let mut solver = Solver::new(g)?;
    let dual = solver.solve(Variant::Dual);
    let d = solver.distances();
    let mut out = Vec::new();

    let inner = g
        .edges()
        .filter(|&e| is_p4_inner_isometric(g, d, e).expect("edge"))
        .count();
    if g.size() > 0 && inner == g.size() {
        out.push(LawReport::compare("sufficient.all_edges_p4_inner", instance, g, 0, dual.value));
    } else {
        out.push(LawReport::vacuous(
            "sufficient.all_edges_p4_inner",
            instance,
            &format!("{inner} of {} edges P4-inner isometric; dual = {}", g.size(), dual.value),
        ));
    }

    let gi = girth(g, d);
    let min_degree = g.min_degree().unwrap_or(0);
    if gi >= Girth::Finite(6) {
        let report = LawReport::compare(
            "sufficient.girth_six",
            instance,
            g,
            format!("dual=0 is {}", min_degree >= 2),
            format!("dual=0 is {}", dual.value == 0),
        );
        out.push(if report.passed { report } else { report.with_sets(g, &[&dual.witness]) });
    } else {
        out.push(LawReport::vacuous("sufficient.girth_six", instance, &format!("girth {gi}")));
    }
    Ok(out)
}

fn is_box(w: &VertexSet, nh: usize) -> Option<(VertexSet, VertexSet)> {
    let ng = w.universe() / nh;
    let pg = VertexSet::from_vertices(ng, w.iter().map(|v| v / nh));
    let ph = VertexSet::from_vertices(nh, w.iter().map(|v| v % nh));
    let boxed = VertexSet::from_vertices(
        w.universe(),
        pg.iter().flat_map(|a| ph.iter().map(move |b| product_index(nh, a, b))),
    );
    (boxed == *w).then_some((pg, ph))
}

fn dual_in_product(g: &Graph, h: &Graph) -> usize {
    let sg = !simplicial_set(g).is_empty();
    let sh = !simplicial_set(h).is_empty();
    match (g.is_complete(), h.is_complete()) {
        (true, true) => g.order().max(h.order()),
        (true, false) if sh => g.order(),
        (false, true) if sg => h.order(),
        _ => 0,
    }
}

/// Cartesian product laws for factors `g` and `h`, both connected of order
/// at least 2, product order at most [`PRODUCT_MAX_N`].
pub fn check_products(g: &Graph, h: &Graph, instance: &str) -> Result<Vec<LawReport>> {
    for f in [g, h] {
        if f.order() < 2 {
            return Err(Error::Spec("product factors need order at least 2".into()));
        }
        if !f.is_connected() {
            return Err(Error::Disconnected);
        }
    }
    let p = product(g, h, ProductKind::Cartesian);
    ensure_order(&p, PRODUCT_MAX_N)?;
    let mut out = Vec::new();
    let mut ps = Solver::new(&p)?;
    let mut gs = Solver::new(g)?;
    let mut hs = Solver::new(h)?;

    let total = ps.solve(Variant::Total);
    out.push(LawReport::compare("product.total_zero", instance, &p, 0, total.value));

    let (og, oh) = (gs.solve(Variant::Outer).value, hs.solve(Variant::Outer).value);
    let outer = ps.solve(Variant::Outer);
    out.push(LawReport::compare("product.outer_min", instance, &p, og.min(oh), outer.value));

    let dual = ps.solve(Variant::Dual);
    let report = LawReport::compare("product.dual", instance, &p, dual_in_product(g, h), dual.value);
    out.push(if report.passed { report } else { report.with_sets(&p, &[&dual.witness]) });

    let gp = ps.solve(Variant::Gp);
    if g.is_complete() && h.is_complete() {
        out.push(LawReport::compare("product.gp_rook", instance, &p, g.order() + h.order() - 2, gp.value));
    }
    out.push(LawReport::compare(
        "chain.inequalities",
        instance,
        &p,
        true,
        gp.value >= outer.value && outer.value >= total.value && gp.value >= dual.value && dual.value >= total.value,
    ));

    // (G □ H)_SR against G_SR × H_SR under the row-major identification
    let psr = strong_resolving_graph_with(&p, ps.distances());
    let gsr = strong_resolving_graph_with(g, gs.distances());
    let hsr = strong_resolving_graph_with(h, hs.distances());
    let direct = product(&gsr, &hsr, ProductKind::Direct);
    let same = psr.edges().eq(direct.edges());
    out.push(LawReport::compare("product.srg_is_direct_product", instance, &p, true, same));
    out.push(LawReport::compare(
        "product.direct_clique_min",
        instance,
        &p,
        clique_number(&gsr).min(clique_number(&hsr)),
        clique_number(&direct),
    ));

    out.push(convex_box_law(g, h, &p, &ps, &gs, &hs, instance));
    Ok(out)
}

// Convex sets of G □ H are exactly boxes of convex factor sets; checked on
// random subsets, random boxes, and hulls of a few random vertices.
fn convex_box_law(g: &Graph, h: &Graph, p: &Graph, ps: &Solver, gs: &Solver, hs: &Solver, instance: &str) -> LawReport {
    let (ng, nh, np) = (g.order(), h.order(), p.order());
    let mut rng = ChaCha8Rng::seed_from_u64((ng * 1000 + nh) as u64);
    let random_subset = |rng: &mut ChaCha8Rng, n: usize| {
        let density: f64 = rng.random_range(0.05..0.95);
        VertexSet::from_vertices(n, (0..n).filter(|_| rng.random_bool(density)).collect::<Vec<_>>())
    };
    let mut samples = Vec::new();
    for _ in 0..60 {
        samples.push(random_subset(&mut rng, np));
        let (a, b) = (random_subset(&mut rng, ng), random_subset(&mut rng, nh));
        let (a, b) = if rng.random_bool(0.5) {
            (convex_hull(gs.distances(), &a), convex_hull(hs.distances(), &b))
        } else {
            (a, b)
        };
        samples.push(VertexSet::from_vertices(
            np,
            a.iter().flat_map(|x| b.iter().map(move |y| product_index(nh, x, y))).collect::<Vec<_>>(),
        ));
        let k = rng.random_range(1..=3);
        let seeds = VertexSet::from_vertices(np, (0..k).map(|_| rng.random_range(0..np)).collect::<Vec<_>>());
        samples.push(convex_hull(ps.distances(), &seeds));
    }
    let bad = samples.iter().find(|w| {
        let lhs = is_convex(p, ps.distances(), w);
        let rhs = is_box(w, nh).is_some_and(|(a, b)| is_convex(g, gs.distances(), &a) && is_convex(h, hs.distances(), &b));
        lhs != rhs
    });
    let report = LawReport::compare(
        "product.convex_iff_convex_box",
        instance,
        p,
        "no disagreement",
        if bad.is_some() { "disagreement" } else { "no disagreement" },
    );
    match bad {
        Some(w) => report.with_sets(p, &[w]),
        None => report,
    }
}

/// Whether `Θ(lengths)` falls in one of the cases with no nonempty dual set.
pub fn theta_has_no_dual_set(lengths: &[usize]) -> bool {
    let k = lengths.len();
    let l1 = lengths[0];
    (k == 2 && l1 + lengths[1] >= 6)
        || (k >= 3 && l1 == 1 && lengths[1] >= 5)
        || (k >= 3 && l1 == 2 && lengths[1..].iter().all(|&l| l != 3))
        || (k >= 3 && l1 >= 3)
}

/// Every nondecreasing length vector with `ℓ1 >= 1`, `ℓ2 >= 2`, `k >= 2` and
/// theta order at most `max_order`.
pub fn theta_grid(max_order: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, budget: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let lo = match prefix.len() {
            0 => 1,
            1 => prefix[0].max(2),
            _ => *prefix.last().unwrap(),
        };
        let mut len = lo;
        while len - 1 <= budget {
            prefix.push(len);
            grow(prefix, budget - (len - 1), out);
            prefix.pop();
            len += 1;
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), max_order.saturating_sub(2), &mut out);
    out
}

/// Expected `dual(G_{k,ℓ})`.
pub fn chain_cycles_dual(len: usize) -> usize {
    match len {
        4 => 2,
        5 => 3,
        _ => 1,
    }
}

fn name_list(sets: &[VertexSet]) -> String {
    let parts: Vec<String> = sets
        .iter()
        .map(|s| {
            let v: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", v.join(","))
        })
        .collect();
    parts.join(" ")
}

fn path_laws(n: usize) -> Result<Vec<LawReport>> {
    let g = path(n);
    let instance = format!("P{n}");
    let mut out = Vec::new();
    let mut solver = Solver::new(&g)?;
    for v in Variant::ALL {
        out.push(LawReport::compare(&format!("family.path.{v}"), &instance, &g, 2, solver.solve(v).value));
    }
    let ends = VertexSet::from_vertices(n, [0, n - 1]);
    let mut dual_expected = vec![VertexSet::from_vertices(n, [0, 1]), ends.clone(), VertexSet::from_vertices(n, [n - 2, n - 1])];
    dual_expected.sort_by(|a, b| a.lex_cmp(b));
    dual_expected.dedup();
    let all_pairs: Vec<VertexSet> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| VertexSet::from_vertices(n, [u, v])))
        .collect();
    let expected = [
        (Variant::Gp, all_pairs),
        (Variant::Outer, vec![ends.clone()]),
        (Variant::Dual, dual_expected),
        (Variant::Total, vec![ends]),
    ];
    for (v, want) in expected {
        let got = optimal_sets(&g, v, DEFAULT_MAX_N)?;
        out.push(LawReport::compare(&format!("family.path.optimal_sets.{v}"), &instance, &g, name_list(&want), name_list(&got)));
    }
    Ok(out)
}

/// Closed forms for the named families, checked against the solver.
pub fn check_families() -> Result<Vec<LawReport>> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<Vec<LawReport>> + Send + Sync>> = Vec::new();

    for n in 2..=12 {
        jobs.push(Box::new(move || path_laws(n)));
    }

    jobs.push(Box::new(|| {
        let mut out = Vec::new();
        for n in 3..=12 {
            let g = cycle(n);
            let want = match n {
                3 => 3,
                4 | 5 => 2,
                _ => 0,
            };
            out.push(LawReport::compare("family.cycle.dual", &format!("C{n}"), &g, want, Solver::new(&g)?.solve(Variant::Dual).value));
        }
        Ok(out)
    }));

    for lengths in theta_grid(14) {
        jobs.push(Box::new(move || {
            let (g, _) = theta(&lengths)?;
            let dual = Solver::new(&g)?.solve(Variant::Dual);
            let instance = format!("theta:{}", lengths.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","));
            Ok(vec![LawReport::compare(
                "family.theta.dual_zero_cases",
                &instance,
                &g,
                format!("dual=0 is {}", theta_has_no_dual_set(&lengths)),
                format!("dual=0 is {}", dual.value == 0),
            )])
        }));
    }

    jobs.push(Box::new(|| {
        let mut out = Vec::new();
        for m in 3..=9 {
            let (g, _) = gm_join(m);
            let instance = format!("gm_join:{m}");
            let dual = Solver::new(&g)?.solve(Variant::Dual).value;
            if m >= 5 {
                out.push(LawReport::compare("family.gm_join.dual_zero", &instance, &g, 0, dual));
            }
            out.push(LawReport::compare("family.gm_join.matches_oracle", &instance, &g, brute_force(&g, Variant::Dual, DEFAULT_MAX_N)?.value, dual));
        }
        Ok(out)
    }));

    for k in 1..=3 {
        for len in 4..=7 {
            jobs.push(Box::new(move || {
                let (g, _) = chain_cycles(k, len);
                let dual = Solver::new(&g)?.solve(Variant::Dual);
                let report = LawReport::compare("family.chain_cycles.dual", &format!("chain_cycles:{k},{len}"), &g, chain_cycles_dual(len), dual.value);
                Ok(vec![if report.passed { report } else { report.with_sets(&g, &[&dual.witness]) }])
            }));
        }
    }

    for seed in 0..50u64 {
        jobs.push(Box::new(move || {
            let n = 2 + (seed as usize % 11);
            let g = random_tree(n, seed);
            let leaves = g.vertices().filter(|&v| g.degree(v) == 1).count();
            let instance = format!("random_tree({n},seed={seed})");
            let mut solver = Solver::new(&g)?;
            let mut out = vec![LawReport::compare("family.block_tree.s_is_leaves", &instance, &g, leaves, simplicial_set(&g).len())];
            for v in Variant::ALL {
                out.push(LawReport::compare(&format!("family.block_tree.{v}"), &instance, &g, leaves, solver.solve(v).value));
            }
            Ok(out)
        }));
    }

    jobs.push(Box::new(|| {
        let mut out = Vec::new();
        // with a K_{1,1} factor the value is 2r rather than r·r', so both
        // larger sides have at least two vertices
        for r in 2..=3 {
            for t in 1..=r {
                for r2 in 2..=3 {
                    for t2 in 1..=r2 {
                        let g = product(&complete_bipartite(r, t), &complete_bipartite(r2, t2), ProductKind::Strong);
                        if g.order() > 20 {
                            continue;
                        }
                        let instance = format!("K{r},{t} strong K{r2},{t2}");
                        let mut solver = Solver::new(&g)?;
                        out.push(LawReport::compare("family.strong_bipartite.outer", &instance, &g, r * r2, solver.solve(Variant::Outer).value));
                        out.push(LawReport::compare("family.strong_bipartite.gp", &instance, &g, r * r2, solver.solve(Variant::Gp).value));
                    }
                }
            }
        }
        Ok(out)
    }));

    let results: Vec<Result<Vec<LawReport>>> = jobs.par_iter().map(|job| job()).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Structural,
    Sufficient,
    Products,
    Families,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "structural" => Ok(Suite::Structural),
            "sufficient" => Ok(Suite::Sufficient),
            "products" => Ok(Suite::Products),
            "families" => Ok(Suite::Families),
            "all" => Ok(Suite::All),
            _ => Err(Error::Spec(format!("unknown suite {s:?}"))),
        }
    }
}

fn c4_with_pendant() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).expect("valid")
}

fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &e).expect("valid")
}

fn structural_suite(seed: u64) -> Result<Vec<LawReport>> {
    let mut named: Vec<(String, Graph)> = vec![
        ("C5".into(), cycle(5)),
        ("C4+pendant".into(), c4_with_pendant()),
        ("K1".into(), Graph::empty(1)),
        ("K4".into(), complete(4)),
        ("K2,3".into(), complete_bipartite(2, 3)),
        ("petersen".into(), petersen()),
        ("gm_join:5".into(), gm_join(5).0),
        ("chain_cycles:1,4".into(), chain_cycles(1, 4).0),
        ("chain_cycles:1,5".into(), chain_cycles(1, 5).0),
        ("chain_cycles:2,4".into(), chain_cycles(2, 4).0),
    ];
    for n in 2..=8 {
        named.push((format!("P{n}"), path(n)));
    }
    for n in 3..=10 {
        named.push((format!("C{n}"), cycle(n)));
    }
    for i in 0..100 {
        let s = seed + i;
        named.push((format!("random_connected(8,0.35,seed={s})"), random_connected(8, 0.35, s)?));
    }
    let chunks: Vec<Result<Vec<LawReport>>> = named
        .par_iter()
        .map(|(name, g)| check_structural(g, name))
        .collect();
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?);
    }

    // the converse of "dual = 1 implies s = 1" fails
    let g = c4_with_pendant();
    let dual = Solver::new(&g)?.solve(Variant::Dual).value;
    out.push(LawReport::compare(
        "dual.converse_fails",
        "C4+pendant",
        &g,
        "dual=2 s=1".to_string(),
        format!("dual={dual} s={}", simplicial_set(&g).len()),
    ));

    let c5 = cycle(5);
    out.push(match non_heredity_witness(&c5)? {
        Some((x, y)) => LawReport::compare(
            "dual.non_hereditary",
            "C5",
            &c5,
            "dual set of size 2 with non-dual subset of size 1".to_string(),
            format!("dual set of size {} with non-dual subset of size {}", x.len(), y.len()),
        )
        .with_sets(&c5, &[&x, &y]),
        None => LawReport::compare("dual.non_hereditary", "C5", &c5, "witness", "none"),
    });
    Ok(out)
}

fn sufficient_suite(seed: u64) -> Result<Vec<LawReport>> {
    let mut named: Vec<(String, Graph)> = Vec::new();
    for n in 3..=16 {
        named.push((format!("C{n}"), cycle(n)));
    }
    let mut c6p = cycle(6).edges().collect::<Vec<_>>();
    c6p.push((0, 6));
    named.push(("C6+pendant".into(), Graph::new(7, &c6p)?));
    for m in 3..=9 {
        named.push((format!("gm_join:{m}"), gm_join(m).0));
    }
    for lengths in theta_grid(14) {
        let name = format!("theta:{}", lengths.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","));
        named.push((name, theta(&lengths)?.0));
    }
    for k in 1..=3 {
        for len in 4..=7 {
            named.push((format!("chain_cycles:{k},{len}"), chain_cycles(k, len).0));
        }
    }
    named.push(("petersen".into(), petersen()));
    for i in 0..50 {
        let s = seed + i;
        named.push((format!("random_tree(12,seed={s})"), random_tree(12, s)));
        named.push((format!("random_connected(12,0.25,seed={s})"), random_connected(12, 0.25, s)?));
    }
    named.retain(|(_, g)| g.order() <= SUFFICIENT_MAX_N);
    let chunks: Vec<Result<Vec<LawReport>>> = named
        .par_iter()
        .map(|(name, g)| check_sufficient(g, name))
        .collect();
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?);
    }
    Ok(out)
}

/// Factor grid for the product suite: named small factors, paired whenever
/// the product stays within [`PRODUCT_MAX_N`].
pub fn product_grid() -> Vec<((String, Graph), (String, Graph))> {
    let factors: Vec<(String, Graph)> = vec![
        ("P2".into(), path(2)),
        ("P3".into(), path(3)),
        ("P4".into(), path(4)),
        ("C4".into(), cycle(4)),
        ("C5".into(), cycle(5)),
        ("K3".into(), complete(3)),
        ("K4".into(), complete(4)),
    ];
    let mut out = Vec::new();
    for a in &factors {
        for b in &factors {
            if a.1.order() * b.1.order() <= PRODUCT_MAX_N {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    for n in 2..=5 {
        for m in 2..=5 {
            out.push(((format!("K{n}"), complete(n)), (format!("K{m}"), complete(m))));
        }
    }
    out.push((("K3".into(), complete(3)), ("K6".into(), complete(6))));
    out.push((("K3".into(), complete(3)), ("K5".into(), complete(5))));
    out
}

fn products_suite() -> Result<Vec<LawReport>> {
    let chunks: Vec<Result<Vec<LawReport>>> = product_grid()
        .par_iter()
        .map(|((an, a), (bn, b))| check_products(a, b, &format!("{an}□{bn}")))
        .collect();
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?);
    }
    let p = product(&complete(3), &complete(6), ProductKind::Cartesian);
    let mut s = Solver::new(&p)?;
    let got: Vec<usize> = [Variant::Gp, Variant::Dual, Variant::Outer, Variant::Total]
        .into_iter()
        .map(|v| s.solve(v).value)
        .collect();
    out.push(LawReport::compare("product.quadruple", "K3□K6", &p, "[7, 6, 3, 0]".to_string(), format!("{got:?}")));
    Ok(out)
}

/// Runs a whole suite over its fixed instance grid. Reports are sorted by
/// law id; within a law they keep the grid order.
pub fn run_suite(suite: Suite, seed: u64) -> Result<Vec<LawReport>> {
    let mut out = match suite {
        Suite::Structural => structural_suite(seed)?,
        Suite::Sufficient => sufficient_suite(seed)?,
        Suite::Products => products_suite()?,
        Suite::Families => check_families()?,
        Suite::All => {
            let mut all = structural_suite(seed)?;
            all.extend(sufficient_suite(seed)?);
            all.extend(products_suite()?);
            all.extend(check_families()?);
            all
        }
    };
    out.sort_by(|a, b| a.law.cmp(&b.law));
    Ok(out)
}
