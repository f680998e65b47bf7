//! Exhaustive baseline straight from the definitions: every subset is tested
//! with [`is_variant_set`], nothing structural is assumed.

use super::{is_variant_set, Certificate, Method, Variant};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::metric::all_pairs_distances;

pub const DEFAULT_MAX_N: usize = 18;

fn check_size(g: &Graph, max_n: usize) -> Result<()> {
    // masks are u64 and the enumeration is 2^n anyway
    let limit = max_n.min(63);
    if g.order() > limit {
        return Err(Error::Size {
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&VertexSet) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&VertexSet::from_vertices(n, idx.iter().copied())) {
            return true;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Largest set satisfying the definition of `variant`, scanning sizes from
/// `n` down; the witness is the lexicographically least set of that size.
pub fn brute_force(g: &Graph, variant: Variant, max_n: usize) -> Result<Certificate> {
    check_size(g, max_n)?;
    let d = all_pairs_distances(g)?;
    let n = g.order();
    for k in (0..=n).rev() {
        let mut hit = None;
        for_each_combination(n, k, |x| {
            if is_variant_set(g, &d, x, variant) {
                hit = Some(x.clone());
                true
            } else {
                false
            }
        });
        if let Some(witness) = hit {
            return Ok(Certificate {
                variant,
                value: k,
                witness,
                method: Method::Exhaustive,
            });
        }
    }
    unreachable!("the empty set satisfies every variant")
}

/// Every subset of `V(G)` satisfying `variant`, ordered by size and then
/// lexicographically.
pub fn variant_sets(g: &Graph, variant: Variant, max_n: usize) -> Result<Vec<VertexSet>> {
    check_size(g, max_n)?;
    let d = all_pairs_distances(g)?;
    let n = g.order();
    let mut out = Vec::new();
    for k in 0..=n {
        for_each_combination(n, k, |x| {
            if is_variant_set(g, &d, x, variant) {
                out.push(x.clone());
            }
            false
        });
    }
    Ok(out)
}

/// All sets of maximum size satisfying `variant`, lexicographically ordered.
pub fn optimal_sets(g: &Graph, variant: Variant, max_n: usize) -> Result<Vec<VertexSet>> {
    check_size(g, max_n)?;
    let d = all_pairs_distances(g)?;
    let n = g.order();
    for k in (0..=n).rev() {
        let mut found = Vec::new();
        for_each_combination(n, k, |x| {
            if is_variant_set(g, &d, x, variant) {
                found.push(x.clone());
            }
            false
        });
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("the empty set satisfies every variant")
}
