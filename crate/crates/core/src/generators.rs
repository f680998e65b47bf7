//! Graph families, products, joins and seeded random graphs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named vertices of a generated graph, e.g. the hubs `a`, `b` of a theta
/// graph.
pub type LabelMap = BTreeMap<String, usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Edgeless,
    Star,
    Theta,
    GmJoin,
    ChainCycles,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Edgeless,
        Family::Star,
        Family::Theta,
        Family::GmJoin,
        Family::ChainCycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Edgeless => "edgeless",
            Family::Star => "star",
            Family::Theta => "theta",
            Family::GmJoin => "gm_join",
            Family::ChainCycles => "chain_cycles",
        }
    }
}

/// A family tag with integer parameters; textual form `family:p1,p2,...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> FamilySpec {
        FamilySpec {
            family,
            params: params.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        let bad = |msg: &str| Err(Error::Spec(format!("{}: {msg}", self)));
        let want = |k: usize| -> Result<()> {
            if p.len() == k {
                Ok(())
            } else {
                Err(Error::Spec(format!(
                    "{} takes {k} parameter(s), got {}",
                    self.family.name(),
                    p.len()
                )))
            }
        };
        match self.family {
            Family::Path | Family::Complete | Family::Edgeless | Family::Star | Family::GmJoin => {
                want(1)?;
                if p[0] == 0 {
                    return bad("order must be positive");
                }
            }
            Family::Cycle => {
                want(1)?;
                if p[0] < 3 {
                    return bad("a cycle needs at least 3 vertices");
                }
            }
            Family::CompleteBipartite => {
                want(2)?;
                if p[0] == 0 || p[1] == 0 {
                    return bad("both sides must be nonempty");
                }
            }
            Family::Theta => {
                if p.len() < 2 {
                    return bad("theta needs at least two path lengths");
                }
                if p.windows(2).any(|w| w[0] > w[1]) {
                    return bad("path lengths must be nondecreasing");
                }
                if p[0] == 0 {
                    return bad("path lengths must be positive");
                }
                if p[1] < 2 {
                    return bad("at most one path of length 1 (second length must be >= 2)");
                }
            }
            Family::ChainCycles => {
                want(2)?;
                if p[0] == 0 {
                    return bad("need at least one cycle");
                }
                if p[1] < 4 {
                    return bad("cycle length must be at least 4");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.family.name(), ps.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Spec(format!("expected family:p1,p2,..., got {s:?}")))?;
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == name.trim())
            .ok_or_else(|| Error::Spec(format!("unknown family {name:?}")))?;
        let params = rest
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Spec(format!("bad parameter {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { family, params })
    }
}

/// Builds the graph for `spec` together with its named vertices.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, LabelMap)> {
    spec.validate()?;
    let p = &spec.params;
    let plain = |g: Graph| (g, LabelMap::new());
    Ok(match spec.family {
        Family::Path => plain(path(p[0])),
        Family::Cycle => plain(cycle(p[0])),
        Family::Complete => plain(complete(p[0])),
        Family::CompleteBipartite => plain(complete_bipartite(p[0], p[1])),
        Family::Edgeless => plain(Graph::empty(p[0])),
        Family::Star => plain(complete_bipartite(1, p[0])),
        Family::Theta => theta(p)?,
        Family::GmJoin => gm_join(p[0]),
        Family::ChainCycles => chain_cycles(p[0], p[1]),
    })
}

pub fn path(n: usize) -> Graph {
    Graph::from_edge_iter(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edge_iter(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_iter(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph is simple")
}

/// `K_{r,t}` with parts `0..r` and `r..r+t`.
pub fn complete_bipartite(r: usize, t: usize) -> Graph {
    Graph::from_edge_iter(r + t, (0..r).flat_map(|u| (r..r + t).map(move |v| (u, v))))
        .expect("complete bipartite graph is simple")
}

/// `Θ(ℓ1,…,ℓk)`: hubs `a = 0` and `b = 1` joined by internally disjoint
/// paths of the given lengths; interior vertices follow path by path.
pub fn theta(lengths: &[usize]) -> Result<(Graph, LabelMap)> {
    FamilySpec::new(Family::Theta, lengths).validate()?;
    let n = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    let g = Graph::new(n, &edges)?;
    let labels = LabelMap::from([("a".to_string(), 0), ("b".to_string(), 1)]);
    Ok((g, labels))
}

/// `G_m = P_m ⊕ 2K_1`: path `p_1..p_m` on `0..m`, then `x = m`, `x' = m+1`.
pub fn gm_join(m: usize) -> (Graph, LabelMap) {
    let g = join(&path(m), &Graph::empty(2));
    let labels = LabelMap::from([
        ("p_1".to_string(), 0),
        ("p_m".to_string(), m - 1),
        ("x".to_string(), m),
        ("x'".to_string(), m + 1),
    ]);
    (g, labels)
}

/// `G_{k,ℓ}`: a chain of `k` copies of `C_ℓ`, consecutive copies sharing
/// one vertex, followed by a pendant vertex.
///
/// Copy `i` occupies positions `0..ℓ` around its cycle; its position
/// `⌊ℓ/2⌋` is position `0` of copy `i+1`. The pendant `u` hangs off position
/// `⌊ℓ/2⌋` of the last copy, labelled `v`, which is where a further copy
/// would be glued.
pub fn chain_cycles(k: usize, len: usize) -> (Graph, LabelMap) {
    assert!(k >= 1 && len >= 4, "chain_cycles needs k >= 1 and len >= 4");
    let half = len / 2;
    let n = k * (len - 1) + 2;
    let mut edges = Vec::with_capacity(k * len + 1);
    let mut start = 0;
    let mut next = 1;
    let mut attach = 0;
    for _ in 0..k {
        // vertex index for each position of this copy
        let mut pos = Vec::with_capacity(len);
        pos.push(start);
        for _ in 1..len {
            pos.push(next);
            next += 1;
        }
        for i in 0..len {
            edges.push((pos[i], pos[(i + 1) % len]));
        }
        start = pos[half];
        attach = pos[half];
    }
    let pendant = next;
    edges.push((attach, pendant));
    debug_assert_eq!(pendant + 1, n);
    let g = Graph::new(n, &edges).expect("chain of cycles is simple");
    let labels = LabelMap::from([("u".to_string(), pendant), ("v".to_string(), attach)]);
    (g, labels)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProductKind> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "direct" => Ok(ProductKind::Direct),
            "strong" => Ok(ProductKind::Strong),
            _ => Err(Error::Spec(format!("unknown product kind {s:?}"))),
        }
    }
}

/// Product vertex `(g, h)` is index `g * n(H) + h`.
pub fn product_index(h_order: usize, g: usize, h: usize) -> usize {
    g * h_order + h
}

pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Graph {
    let (ng, nh) = (g.order(), h.order());
    let idx = |a, b| product_index(nh, a, b);
    let mut edges = Vec::new();
    if kind != ProductKind::Direct {
        for (a, b) in g.edges() {
            for x in 0..nh {
                edges.push((idx(a, x), idx(b, x)));
            }
        }
        for (x, y) in h.edges() {
            for a in 0..ng {
                edges.push((idx(a, x), idx(a, y)));
            }
        }
    }
    if kind != ProductKind::Cartesian {
        for (a, b) in g.edges() {
            for (x, y) in h.edges() {
                edges.push((idx(a, x), idx(b, y)));
                edges.push((idx(a, y), idx(b, x)));
            }
        }
    }
    Graph::new(ng * nh, &edges).expect("product edges are distinct")
}

/// Disjoint union of `g` (first) and `h` (shifted by `n(G)`) plus every edge
/// between them.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let ng = g.order();
    let n = ng + h.order();
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (u + ng, v + ng)));
    for u in 0..ng {
        for v in ng..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("join edges are distinct")
}

const RETRY_BUDGET: usize = 10_000;

/// Erdős–Rényi `G(n, p)` redrawn until connected. Deterministic in
/// `(n, p, seed)`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 || !(p > 0.0 && p <= 1.0) {
        return Err(Error::Spec(format!("random_connected needs n >= 1 and 0 < p <= 1 (n = {n}, p = {p})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("pairs are distinct");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Generation {
        n,
        p,
        attempts: RETRY_BUDGET,
    })
}

/// Uniform labelled tree on `n` vertices, decoded from a random Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return path(2);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] = 0;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("Prüfer decoding yields a tree")
}
