use super::{Graph, VertexSet};

/// Size of a largest complete subgraph; 0 for the empty graph.
///
/// Bron–Kerbosch with Tomita pivoting, pruned against the best clique found
/// so far.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    let mut current = 0;
    bron_kerbosch(g, &mut current, VertexSet::full(n), VertexSet::new(n), &mut best);
    best
}

fn bron_kerbosch(
    g: &Graph,
    depth: &mut usize,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    best: &mut usize,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            *best = (*best).max(*depth);
        }
        return;
    }
    if *depth + candidates.len() <= *best {
        return;
    }
    // pivot maximizing |candidates ∩ N(p)| over candidates ∪ excluded
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&p| candidates.intersection_len(g.neighbor_set(p)))
        .expect("candidates nonempty");
    let branch = candidates.difference(g.neighbor_set(pivot));
    for v in branch.iter() {
        let nv = g.neighbor_set(v);
        *depth += 1;
        bron_kerbosch(
            g,
            depth,
            candidates.intersection(nv),
            excluded.intersection(nv),
            best,
        );
        *depth -= 1;
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// A maximum clique; among all maximum cliques the one whose ascending
/// member list is lexicographically least.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let n = g.order();
    let target = clique_number(g);
    let mut chosen = VertexSet::new(n);
    let found = lex_first_clique(g, &mut chosen, VertexSet::full(n), target);
    debug_assert!(found);
    chosen
}

// Include-first search in index order visits cliques in lexicographic order,
// so the first clique of the target size is the least one.
fn lex_first_clique(g: &Graph, chosen: &mut VertexSet, candidates: VertexSet, target: usize) -> bool {
    if chosen.len() == target {
        return true;
    }
    if chosen.len() + candidates.len() < target {
        return false;
    }
    let mut rest = candidates;
    while let Some(v) = rest.first() {
        if chosen.len() + rest.len() < target {
            return false;
        }
        rest.remove(v);
        chosen.insert(v);
        if lex_first_clique(g, chosen, rest.intersection(g.neighbor_set(v)), target) {
            return true;
        }
        chosen.remove(v);
    }
    false
}
