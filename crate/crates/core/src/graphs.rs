//! Finite simple graphs, the families studied here, and the cover-theoretic
//! machinery on top of them: minimal vertex covers, the cover number,
//! parallelization, decomposability and the squarefree symbolic Rees
//! generators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomials::{Monomial, MAX_VARS};

/// Vertex count up to which covers are enumerated by scanning all subsets.
pub const EXHAUSTIVE_COVER_LIMIT: usize = 20;

/// Default vertex bound for the partition searches.
pub const DECOMPOSITION_BOUND: usize = 12;

/// An undirected graph without loops or multi-edges on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// Validates and normalizes an edge list. Each edge is stored as `(u, v)`
    /// with `u < v`, and the list is sorted.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        if n > MAX_VARS {
            return Err(Error::BoundExceeded {
                what: "vertex count",
                size: n,
                bound: MAX_VARS,
            });
        }
        let mut adj = vec![0u64; n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a},{b}}} has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if adj[a] >> b & 1 == 1 {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{a},{b}}}")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        Ok(SimpleGraph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidFamily(format!("cycle length {k} < 3")));
        }
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        SimpleGraph::new(k, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!(
                "complete graph on {n} < 2 vertices"
            )));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        SimpleGraph::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::new(n, &edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn full_mask(&self) -> u64 {
        mask_of_len(self.n)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in iter_bits(self.adj[u]) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// True when `mask` meets every edge.
    pub fn is_cover(&self, mask: u64) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| (mask >> u | mask >> v) & 1 == 1)
    }

    /// Number of edges with both endpoints in `mask`.
    pub fn induced_edge_count(&self, mask: u64) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count()
    }
}

fn mask_of_len(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn bits_to_vec(mask: u64) -> Vec<usize> {
    iter_bits(mask).collect()
}

fn vec_to_mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |acc, &v| acc | 1 << v)
}

/// Requested graph family, as written in a family spec string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Cycle(usize),
    Complete(usize),
    CliqueSum {
        n: usize,
        m: usize,
    },
    EdgeList {
        n_vertices: usize,
        edges: Vec<(usize, usize)>,
    },
}

/// Which family a built graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyId {
    Cycle { k: usize },
    Complete { n: usize },
    CliqueSum { n: usize, m: usize },
    EdgeList,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Cycle { k } => write!(f, "cycle:{k}"),
            FamilyId::Complete { n } => write!(f, "complete:{n}"),
            FamilyId::CliqueSum { n, m } => write!(f, "cliquesum:{n},{m}"),
            FamilyId::EdgeList => write!(f, "edges"),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// Parses `cycle:5`, `complete:4` or `cliquesum:2,3`. Edge lists come
    /// from [`parse_edge_list`].
    fn from_str(spec: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(spec.to_string());
        let (kind, params) = spec.trim().split_once(':').ok_or_else(bad)?;
        let ints = params
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (kind.trim(), ints.as_slice()) {
            ("cycle", &[k]) => Ok(FamilyKind::Cycle(k)),
            ("complete", &[n]) => Ok(FamilyKind::Complete(n)),
            ("cliquesum", &[n, m]) => Ok(FamilyKind::CliqueSum { n, m }),
            _ => Err(bad()),
        }
    }
}

/// Reads the edge-list format: one `u v` pair per line, 0-based, with `#`
/// starting a comment. The vertex count is one more than the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<FamilyKind> {
    let mut edges = Vec::new();
    let mut max_vertex = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::EdgeList {
            line: idx + 1,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(bad("expected two vertex indices"));
        };
        let a: usize = a
            .parse()
            .map_err(|_| bad("vertex is not a non-negative integer"))?;
        let b: usize = b
            .parse()
            .map_err(|_| bad("vertex is not a non-negative integer"))?;
        if a == b {
            return Err(bad("loop"));
        }
        if edges.contains(&(a.min(b), a.max(b))) {
            return Err(bad("duplicate edge"));
        }
        edges.push((a.min(b), a.max(b)));
        max_vertex = Some(max_vertex.unwrap_or(0).max(a).max(b));
    }
    let n_vertices = max_vertex.map(|v| v + 1).ok_or_else(|| Error::EdgeList {
        line: 0,
        msg: "no edges".into(),
    })?;
    Ok(FamilyKind::EdgeList { n_vertices, edges })
}

/// The two odd cycles glued at `x_1`, with their cycle monomials.
///
/// Index 0 is `x_1`, indices `1..=2n` are `x_2..x_{2n+1}` and indices
/// `2n+1..=2n+2m` are `y_2..y_{2m+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueSumSpec {
    pub n: usize,
    pub m: usize,
    c1: Monomial,
    c2: Monomial,
}

impl CliqueSumSpec {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 1 || n > m {
            return Err(Error::InvalidFamily(format!(
                "cliquesum:{n},{m} needs 1 <= n <= m"
            )));
        }
        let total = 2 * n + 2 * m + 1;
        let first: Vec<usize> = (0..=2 * n).collect();
        let second: Vec<usize> = std::iter::once(0).chain(2 * n + 1..total).collect();
        Ok(CliqueSumSpec {
            n,
            m,
            c1: Monomial::squarefree(&first, total),
            c2: Monomial::squarefree(&second, total),
        })
    }

    pub fn n_vertices(&self) -> usize {
        2 * self.n + 2 * self.m + 1
    }

    /// `x_1 x_2 ... x_{2n+1}`.
    pub fn c1(&self) -> &Monomial {
        &self.c1
    }

    /// `x_1 y_2 ... y_{2m+1}`.
    pub fn c2(&self) -> &Monomial {
        &self.c2
    }

    /// Vertices of the first cycle in cyclic order, starting at `x_1`.
    pub fn first_cycle(&self) -> Vec<usize> {
        (0..=2 * self.n).collect()
    }

    /// Vertices of the second cycle in cyclic order, starting at `x_1`.
    pub fn second_cycle(&self) -> Vec<usize> {
        std::iter::once(0)
            .chain(2 * self.n + 1..self.n_vertices())
            .collect()
    }

    pub fn graph(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for cycle in [self.first_cycle(), self.second_cycle()] {
            for (i, &u) in cycle.iter().enumerate() {
                edges.push((u, cycle[(i + 1) % cycle.len()]));
            }
        }
        SimpleGraph::new(self.n_vertices(), &edges).expect("clique-sum edges are valid")
    }

    pub fn labels(&self) -> Vec<String> {
        let xs = (1..=2 * self.n + 1).map(|i| format!("x{i}"));
        let ys = (2..=2 * self.m + 1).map(|i| format!("y{i}"));
        xs.chain(ys).collect()
    }
}

/// A graph together with where it came from and how its variables are named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltFamily {
    pub id: FamilyId,
    pub graph: SimpleGraph,
    pub clique_sum: Option<CliqueSumSpec>,
    pub labels: Vec<String>,
}

impl BuiltFamily {
    /// Wraps an arbitrary graph with labels `x1..xn`.
    pub fn from_graph(graph: SimpleGraph) -> Self {
        let labels = default_labels(graph.n_vertices());
        BuiltFamily {
            id: FamilyId::EdgeList,
            graph,
            clique_sum: None,
            labels,
        }
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub fn build_family(kind: &FamilyKind) -> Result<BuiltFamily> {
    match *kind {
        FamilyKind::Cycle(k) => {
            let graph = SimpleGraph::cycle(k)?;
            Ok(BuiltFamily {
                id: FamilyId::Cycle { k },
                labels: default_labels(k),
                graph,
                clique_sum: None,
            })
        }
        FamilyKind::Complete(n) => {
            let graph = SimpleGraph::complete(n)?;
            Ok(BuiltFamily {
                id: FamilyId::Complete { n },
                labels: default_labels(n),
                graph,
                clique_sum: None,
            })
        }
        FamilyKind::CliqueSum { n, m } => {
            let spec = CliqueSumSpec::new(n, m)?;
            Ok(BuiltFamily {
                id: FamilyId::CliqueSum { n, m },
                graph: spec.graph(),
                labels: spec.labels(),
                clique_sum: Some(spec),
            })
        }
        FamilyKind::EdgeList {
            n_vertices,
            ref edges,
        } => {
            let graph = SimpleGraph::new(n_vertices, edges)?;
            Ok(BuiltFamily::from_graph(graph))
        }
    }
}

/// The inclusion-minimal vertex covers of a graph, each sorted ascending, the
/// list sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoverSet {
    covers: Vec<Vec<usize>>,
}

impl CoverSet {
    pub fn covers(&self) -> &[Vec<usize>] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn masks(&self) -> Vec<u64> {
        self.covers.iter().map(|c| vec_to_mask(c)).collect()
    }

    /// Smallest cover size.
    pub fn min_size(&self) -> usize {
        self.covers.iter().map(Vec::len).min().unwrap_or(0)
    }

    fn from_masks(masks: Vec<u64>) -> Self {
        let mut covers: Vec<Vec<usize>> = masks.into_iter().map(bits_to_vec).collect();
        covers.sort();
        CoverSet { covers }
    }
}

pub fn minimal_vertex_covers(g: &SimpleGraph) -> CoverSet {
    if g.n_vertices() <= EXHAUSTIVE_COVER_LIMIT {
        CoverSet::from_masks(exhaustive_minimal_covers(g))
    } else {
        CoverSet::from_masks(covers_via_independent_sets(g))
    }
}

/// A cover is minimal iff every vertex in it has a neighbor outside it.
fn is_minimal_cover(g: &SimpleGraph, mask: u64) -> bool {
    g.is_cover(mask) && iter_bits(mask).all(|v| g.adj[v] & !mask != 0)
}

fn exhaustive_minimal_covers(g: &SimpleGraph) -> Vec<u64> {
    (0..=g.full_mask())
        .filter(|&mask| is_minimal_cover(g, mask))
        .collect()
}

/// Complements of the maximal independent sets, enumerated by Bron-Kerbosch
/// with pivoting on the complement graph.
fn covers_via_independent_sets(g: &SimpleGraph) -> Vec<u64> {
    fn bron_kerbosch(g: &SimpleGraph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        // Non-neighbors in g are neighbors in the complement.
        let full = g.full_mask();
        let non_adj = |v: usize| full & !g.adj[v] & !(1u64 << v);
        let pivot = iter_bits(p | x)
            .max_by_key(|&u| (p & non_adj(u)).count_ones())
            .expect("p | x is nonempty");
        for v in iter_bits(p & !non_adj(pivot)) {
            let nv = non_adj(v);
            bron_kerbosch(g, r | 1 << v, p & nv, x & nv, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut independent = Vec::new();
    bron_kerbosch(g, 0, g.full_mask(), 0, &mut independent);
    independent
        .into_iter()
        .map(|s| g.full_mask() & !s)
        .collect()
}

/// Vertex cover number.
pub fn cover_number(g: &SimpleGraph) -> usize {
    minimal_vertex_covers(g).min_size()
}

/// Copy counts for each vertex of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParallelizationVector(Vec<usize>);

impl ParallelizationVector {
    pub fn new(g: &SimpleGraph, v: Vec<usize>) -> Result<Self> {
        if v.len() != g.n_vertices() {
            return Err(Error::VectorLength {
                got: v.len(),
                expected: g.n_vertices(),
            });
        }
        Ok(ParallelizationVector(v))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// The parallelization `G^v`: vertex `i` is deleted when `v_i = 0` and
/// otherwise replaced by `v_i` pairwise non-adjacent copies, each adjacent to
/// every copy of every original neighbor. Copies are numbered in vertex order.
///
/// Fails when `v` is zero everywhere, or when the result would exceed the
/// vertex limit.
pub fn parallelize(g: &SimpleGraph, v: &ParallelizationVector) -> Result<SimpleGraph> {
    let counts = v.as_slice();
    if counts.len() != g.n_vertices() {
        return Err(Error::VectorLength {
            got: counts.len(),
            expected: g.n_vertices(),
        });
    }
    let mut first = Vec::with_capacity(counts.len());
    let mut total = 0usize;
    for &c in counts {
        first.push(total);
        total += c;
    }
    let mut edges = Vec::new();
    for &(a, b) in g.edges() {
        for i in 0..counts[a] {
            for j in 0..counts[b] {
                edges.push((first[a] + i, first[b] + j));
            }
        }
    }
    SimpleGraph::new(total, &edges)
}

/// Cover numbers of all induced subgraphs, indexed by vertex mask.
struct InducedCoverNumbers {
    tau: Vec<u8>,
}

impl InducedCoverNumbers {
    fn new(g: &SimpleGraph) -> Self {
        let size = 1usize << g.n_vertices();
        // Maximum independent set of G[S], then tau = |S| - mis.
        let mut mis = vec![0u8; size];
        for s in 1..size {
            let v = s.trailing_zeros() as usize;
            let without = s & !(1 << v);
            let closed = (g.adj[v] as usize) | (1 << v);
            let with = 1 + mis[s & !closed];
            mis[s] = mis[without].max(with);
        }
        let tau = (0..size).map(|s| s.count_ones() as u8 - mis[s]).collect();
        InducedCoverNumbers { tau }
    }

    fn get(&self, mask: u64) -> usize {
        self.tau[mask as usize] as usize
    }

    /// A proper 2-block split of `mask` with additive cover number, if any.
    ///
    /// A decomposition into any number of blocks can be coarsened to two
    /// blocks: cover numbers are superadditive over disjoint vertex sets, so
    /// merging blocks keeps the sum equal to the total.
    fn split(&self, mask: u64) -> Option<(u64, u64)> {
        let low = mask & mask.wrapping_neg();
        let rest = mask & !low;
        let total = self.get(mask);
        // Enumerate the block that contains the lowest vertex.
        let mut sub = rest;
        loop {
            let a = sub | low;
            if a != mask {
                let b = mask & !a;
                if self.get(a) + self.get(b) == total {
                    return Some((a, b));
                }
            }
            if sub == 0 {
                return None;
            }
            sub = (sub - 1) & rest;
        }
    }
}

/// Outcome of a decomposability search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub decomposable: bool,
    /// Witness blocks when decomposable.
    pub partition: Option<Vec<Vec<usize>>>,
}

pub fn is_decomposable(g: &SimpleGraph) -> Result<Decomposition> {
    is_decomposable_bounded(g, DECOMPOSITION_BOUND)
}

pub fn is_decomposable_bounded(g: &SimpleGraph, bound: usize) -> Result<Decomposition> {
    check_bound(g, bound)?;
    let table = InducedCoverNumbers::new(g);
    Ok(match table.split(g.full_mask()) {
        Some((a, b)) => Decomposition {
            decomposable: true,
            partition: Some(vec![bits_to_vec(a), bits_to_vec(b)]),
        },
        None => Decomposition {
            decomposable: false,
            partition: None,
        },
    })
}

fn check_bound(g: &SimpleGraph, bound: usize) -> Result<()> {
    // The induced cover table is indexed by masks and stored densely.
    let bound = bound.min(24);
    if g.n_vertices() > bound {
        Err(Error::BoundExceeded {
            what: "vertex count",
            size: g.n_vertices(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// A squarefree generator `x^v t^b` of the symbolic Rees algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReesGenerator {
    /// Vertices with `v_i = 1`.
    pub support: Vec<usize>,
    /// Cover number of the induced subgraph, the `t`-degree.
    pub b: usize,
}

impl ReesGenerator {
    pub fn monomial(&self, n: usize) -> Monomial {
        Monomial::squarefree(&self.support, n)
    }
}

/// All 0/1 vectors whose induced subgraph has an edge and is indecomposable,
/// with its cover number. Only meaningful for implosive graphs, whose symbolic
/// Rees algebra is generated by exactly these. Sorted by `b`, then support.
pub fn rees_generators_01(g: &SimpleGraph) -> Result<Vec<ReesGenerator>> {
    rees_generators_01_bounded(g, DECOMPOSITION_BOUND)
}

pub fn rees_generators_01_bounded(g: &SimpleGraph, bound: usize) -> Result<Vec<ReesGenerator>> {
    check_bound(g, bound)?;
    let table = InducedCoverNumbers::new(g);
    let mut out: Vec<ReesGenerator> = (1..=g.full_mask())
        .filter(|&mask| g.induced_edge_count(mask) > 0 && table.split(mask).is_none())
        .map(|mask| ReesGenerator {
            support: bits_to_vec(mask),
            b: table.get(mask),
        })
        .collect();
    out.sort_by(|a, b| (a.b, &a.support).cmp(&(b.b, &b.support)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_covers(g: &SimpleGraph) -> Vec<Vec<usize>> {
        let n = g.n_vertices();
        let covers: Vec<u64> = (0..1u64 << n)
            .filter(|&s| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1)
            })
            .collect();
        let mut minimal: Vec<Vec<usize>> = covers
            .iter()
            .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
            .map(|&s| bits_to_vec(s))
            .collect();
        minimal.sort();
        minimal
    }

    #[test]
    fn complete_three_is_a_triangle() {
        let g = SimpleGraph::complete(3).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn family_errors() {
        assert!(SimpleGraph::cycle(2).is_err());
        assert!(SimpleGraph::complete(1).is_err());
        assert!(CliqueSumSpec::new(3, 2).is_err());
        assert!(CliqueSumSpec::new(0, 2).is_err());
        assert!(SimpleGraph::new(3, &[(0, 0)]).is_err());
        assert!(SimpleGraph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn clique_sum_layout() {
        let spec = CliqueSumSpec::new(2, 3).unwrap();
        let g = spec.graph();
        assert_eq!(g.n_vertices(), 11);
        assert_eq!(g.edges().len(), 12);
        assert_eq!(spec.c1().degree(), 5);
        assert_eq!(spec.c2().degree(), 7);
        let both = spec.c1().checked_mul(spec.c2()).unwrap();
        assert_eq!(both.exponent(0), 2);
        assert!(both.exponents()[1..].iter().all(|&e| e == 1));
        assert_eq!(
            spec.labels(),
            ["x1", "x2", "x3", "x4", "x5", "y2", "y3", "y4", "y5", "y6", "y7"]
        );
        assert!(g.has_edge(0, 5) && g.has_edge(0, 10) && g.has_edge(0, 4));
    }

    #[test]
    fn family_spec_strings() {
        assert_eq!(
            "cycle:5".parse::<FamilyKind>().unwrap(),
            FamilyKind::Cycle(5)
        );
        assert_eq!(
            "complete:4".parse::<FamilyKind>().unwrap(),
            FamilyKind::Complete(4)
        );
        assert_eq!(
            "cliquesum:2,3".parse::<FamilyKind>().unwrap(),
            FamilyKind::CliqueSum { n: 2, m: 3 }
        );
        for bad in ["cycle", "cycle:x", "torus:3", "cliquesum:2", "complete:1,2"] {
            assert!(bad.parse::<FamilyKind>().is_err(), "{bad}");
        }
    }

    #[test]
    fn edge_list_parsing() {
        let kind = parse_edge_list("# square\n0 1\n1 2 # tail comment\n\n2 3\n3 0\n").unwrap();
        let fam = build_family(&kind).unwrap();
        assert_eq!(fam.graph, SimpleGraph::cycle(4).unwrap());
        assert!(matches!(
            parse_edge_list("0 1\n1\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("0 1\n1 0\n").is_err());
        assert!(parse_edge_list("0 -1\n").is_err());
        assert!(parse_edge_list("2 2\n").is_err());
        assert!(parse_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn covers_of_small_graphs() {
        let k4 = SimpleGraph::complete(4).unwrap();
        let covers = minimal_vertex_covers(&k4);
        assert_eq!(covers.len(), 4);
        assert!(covers.covers().iter().all(|c| c.len() == 3));
        assert_eq!(cover_number(&k4), 3);

        let edge = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(minimal_vertex_covers(&edge).covers(), &[vec![0], vec![1]]);
        assert_eq!(cover_number(&edge), 1);

        let c5 = SimpleGraph::cycle(5).unwrap();
        let covers = minimal_vertex_covers(&c5);
        assert_eq!(covers.covers(), brute_force_covers(&c5).as_slice());
        assert_eq!(covers.len(), 5);
        assert!(covers.covers().iter().all(|c| c.len() == 3));
        assert_eq!(cover_number(&c5), 3);

        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_eq!(
            minimal_vertex_covers(&c4).covers(),
            &[vec![0, 2], vec![1, 3]]
        );
    }

    #[test]
    fn edgeless_graph_has_the_empty_cover() {
        let g = SimpleGraph::new(3, &[]).unwrap();
        assert_eq!(minimal_vertex_covers(&g).covers(), &[Vec::<usize>::new()]);
        assert_eq!(cover_number(&g), 0);
    }

    #[test]
    fn complete_graph_covers_are_all_co_singletons() {
        for n in 2..=8 {
            let g = SimpleGraph::complete(n).unwrap();
            let covers = minimal_vertex_covers(&g);
            assert_eq!(covers.len(), n);
            assert!(covers.covers().iter().all(|c| c.len() == n - 1));
        }
    }

    #[test]
    fn both_cover_routes_agree() {
        let spec = CliqueSumSpec::new(2, 3).unwrap();
        for g in [
            spec.graph(),
            SimpleGraph::cycle(7).unwrap(),
            SimpleGraph::complete(5).unwrap(),
            SimpleGraph::path(6).unwrap(),
        ] {
            let mut a = exhaustive_minimal_covers(&g);
            let mut b = covers_via_independent_sets(&g);
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn large_graphs_use_independent_sets() {
        let g = SimpleGraph::cycle(24).unwrap();
        let covers = minimal_vertex_covers(&g);
        assert_eq!(cover_number(&g), 12);
        let masks = covers.masks();
        assert!(masks.iter().all(|&m| is_minimal_cover(&g, m)));
    }

    #[test]
    fn parallelization_cases() {
        let tri = SimpleGraph::complete(3).unwrap();
        let same = parallelize(
            &tri,
            &ParallelizationVector::new(&tri, vec![1, 1, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(same, tri);

        let edge = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        let dup = parallelize(
            &edge,
            &ParallelizationVector::new(&edge, vec![2, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(dup.n_vertices(), 3);
        assert_eq!(dup.edges(), &[(0, 2), (1, 2)]);
        assert!(!dup.has_edge(0, 1));

        let del = parallelize(
            &tri,
            &ParallelizationVector::new(&tri, vec![0, 1, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(del.edges(), &[(0, 1)]);

        assert!(ParallelizationVector::new(&tri, vec![1, 1]).is_err());
    }

    #[test]
    fn decomposability_examples() {
        let edge = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        assert!(!is_decomposable(&edge).unwrap().decomposable);

        let c4 = SimpleGraph::cycle(4).unwrap();
        let d = is_decomposable(&c4).unwrap();
        assert!(d.decomposable);
        let parts = d.partition.unwrap();
        let sum: usize = parts.iter().map(|p| g_induced_tau(&c4, p)).sum();
        assert_eq!(sum, 2);

        assert!(
            !is_decomposable(&SimpleGraph::cycle(5).unwrap())
                .unwrap()
                .decomposable
        );
        assert!(is_decomposable(&SimpleGraph::cycle(13).unwrap()).is_err());
        assert!(is_decomposable_bounded(&SimpleGraph::cycle(13).unwrap(), 14).is_ok());
    }

    fn g_induced_tau(g: &SimpleGraph, part: &[usize]) -> usize {
        let mask = vec_to_mask(part);
        (0..1u64 << g.n_vertices())
            .filter(|&s| s & !mask == 0)
            .filter(|&s| {
                g.edges().iter().all(|&(u, v)| {
                    !(mask >> u & 1 == 1 && mask >> v & 1 == 1)
                        || s >> u & 1 == 1
                        || s >> v & 1 == 1
                })
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn induced_cover_numbers_match_brute_force() {
        let spec = CliqueSumSpec::new(1, 2).unwrap();
        let g = spec.graph();
        let table = InducedCoverNumbers::new(&g);
        for mask in 0..1u64 << g.n_vertices() {
            assert_eq!(table.get(mask), g_induced_tau(&g, &bits_to_vec(mask)));
        }
    }

    #[test]
    fn rees_generators_of_k4() {
        let k4 = SimpleGraph::complete(4).unwrap();
        let gens = rees_generators_01(&k4).unwrap();
        let count = |b| gens.iter().filter(|g| g.b == b).count();
        assert_eq!((count(1), count(2), count(3)), (6, 4, 1));
        assert_eq!(gens.len(), 11);
        assert!(gens.iter().all(|g| g.b + 1 == g.support.len()));
    }

    #[test]
    fn rees_generators_of_an_edge() {
        let edge = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            rees_generators_01(&edge).unwrap(),
            vec![ReesGenerator {
                support: vec![0, 1],
                b: 1
            }]
        );
    }

    #[test]
    fn bipartite_graphs_only_have_edge_generators() {
        for g in [
            SimpleGraph::cycle(4).unwrap(),
            SimpleGraph::cycle(6).unwrap(),
            SimpleGraph::cycle(8).unwrap(),
            SimpleGraph::path(5).unwrap(),
        ] {
            assert!(g.is_bipartite());
            let gens = rees_generators_01(&g).unwrap();
            assert!(gens.iter().all(|r| r.b == 1 && r.support.len() == 2));
            assert_eq!(gens.len(), g.edges().len());
        }
        assert!(!SimpleGraph::cycle(5).unwrap().is_bipartite());
    }
}
