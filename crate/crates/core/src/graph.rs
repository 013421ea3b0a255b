//! The game board: an immutable simple undirected graph with canonically
//! indexed edges, its generators and the edge-list text format.
//!
//! Edges are stored as `(min, max)` endpoint pairs sorted lexicographically,
//! so edge indices are reproducible for a given edge set. Every "arbitrary"
//! tie-break elsewhere in the crate resolves to the lowest edge index.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based ids, `u < v`, sorted. Blank lines and `#` comments are
//! ignored when parsing and never emitted.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::math::fnv1a64;

pub type Vertex = usize;
pub type EdgeId = usize;

/// Whole-sample rejection budget for [`random_regular`].
pub const RANDOM_REGULAR_RETRY_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Syntax { line: usize, message: String },
    Loop { line: Option<usize>, vertex: Vertex },
    DuplicateEdge { line: Option<usize>, u: Vertex, v: Vertex },
    VertexOutOfRange { line: Option<usize>, vertex: Vertex, n: usize },
    EdgeCountMismatch { declared: usize, found: usize },
    OddDegreeSum { n: usize, d: usize },
    InvalidParameter(String),
    RetryBudgetExhausted { attempts: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = |line: &Option<usize>| match line {
            Some(l) => alloc::format!("line {l}: "),
            None => String::new(),
        };
        match self {
            GraphError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            GraphError::Loop { line, vertex } => write!(f, "{}loop at vertex {vertex}", at(line)),
            GraphError::DuplicateEdge { line, u, v } => {
                write!(f, "{}duplicate edge {u} {v}", at(line))
            }
            GraphError::VertexOutOfRange { line, vertex, n } => {
                write!(f, "{}vertex {vertex} out of range for n = {n}", at(line))
            }
            GraphError::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges but {found} were listed")
            }
            GraphError::OddDegreeSum { n, d } => {
                write!(f, "no {d}-regular graph on {n} vertices: n*d is odd")
            }
            GraphError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            GraphError::RetryBudgetExhausted { attempts } => {
                write!(f, "no simple pairing found in {attempts} attempts")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Simple undirected graph with indexed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // Sorted by neighbor; each entry is (neighbor, edge index).
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Endpoint order and edge order in
    /// the input do not matter; the result is canonical.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, edges.into_iter().map(|e| (e, None)))
    }

    fn build<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = ((Vertex, Vertex), Option<usize>)>,
    {
        let mut list = Vec::new();
        for ((a, b), line) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop { line, vertex: a });
            }
            list.push(((a.min(b), a.max(b)), line));
        }
        list.sort_by_key(|&(e, _)| e);
        for w in list.windows(2) {
            if w[0].0 == w[1].0 {
                let (u, v) = w[1].0;
                return Err(GraphError::DuplicateEdge { line: w[1].1, u, v });
            }
        }
        let edges: Vec<(Vertex, Vertex)> = list.into_iter().map(|(e, _)| e).collect();
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Neighbors of `v` in increasing order, with the connecting edge index.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let row = self.adj.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Component id per vertex (ids are assigned in order of the lowest
    /// vertex of each component) and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Canonical edge-list document.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses an edge-list document. Lines may appear in any order and with
    /// endpoints in either order; the result is canonical.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, strip_comment(l).trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(GraphError::Syntax {
            line: 1,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut pairs = Vec::with_capacity(m);
        for (line, body) in lines {
            pairs.push((parse_pair(line, body)?, Some(line)));
        }
        if pairs.len() != m {
            return Err(GraphError::EdgeCountMismatch { declared: m, found: pairs.len() });
        }
        Self::build(n, pairs)
    }

    /// 64-bit content fingerprint of the canonical edge list.
    pub fn fingerprint(&self) -> u64 {
        fnv1a64(self.to_edge_list().into_bytes())
    }

    /// Subgraph induced on `vertices` (listed without repeats). Vertex `i` of
    /// the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &v in vertices {
            for &(w, _) in &self.adj[v] {
                if v < w && local[w] != usize::MAX {
                    edges.push((local[v], local[w]));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges).expect("union of simple graphs is simple")
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize), GraphError> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Syntax {
            line,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Syntax {
            line,
            message: alloc::format!("not a non-negative integer: {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(GraphError::Syntax { line, message: "trailing tokens".into() });
    }
    Ok((a, b))
}

/// Uniform simple `d`-regular graph from the pairing model, rejecting the
/// whole sample on the first loop or parallel edge.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    if d == 0 || d >= n {
        return Err(GraphError::InvalidParameter(alloc::format!(
            "need 1 <= d < n, got n = {n}, d = {d}"
        )));
    }
    if (n * d) % 2 == 1 {
        return Err(GraphError::OddDegreeSum { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<Vertex> = Vec::with_capacity(n * d);
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::with_capacity(d); n];
    'attempt: for _ in 0..RANDOM_REGULAR_RETRY_BUDGET {
        stubs.clear();
        stubs.extend((0..n).flat_map(|v| core::iter::repeat_n(v, d)));
        for row in &mut adj {
            row.clear();
        }
        let len = stubs.len();
        let mut pos = 0;
        while pos < len {
            // Pair the first unpaired stub with a uniform unpaired partner.
            let j = rng.random_range(pos + 1..len);
            stubs.swap(pos + 1, j);
            let (a, b) = (stubs[pos], stubs[pos + 1]);
            if a == b || adj[a].contains(&b) {
                continue 'attempt;
            }
            adj[a].push(b);
            adj[b].push(a);
            pos += 2;
        }
        let edges = stubs.chunks_exact(2).map(|p| (p[0], p[1]));
        return Ok(Graph::from_edges(n, edges).expect("pairing checked for simplicity"));
    }
    Err(GraphError::RetryBudgetExhausted { attempts: RANDOM_REGULAR_RETRY_BUDGET })
}

pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(alloc::format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Complete `r`-ary tree with `k` levels (the root alone is level 1).
/// Vertices are numbered breadth first: the children of `i` are
/// `r*i + 1 ..= r*i + r`.
pub fn complete_ary_tree(r: usize, k: usize) -> Result<Graph, GraphError> {
    if r < 2 || k < 1 {
        return Err(GraphError::InvalidParameter(alloc::format!(
            "complete r-ary tree needs r >= 2 and k >= 1, got r = {r}, k = {k}"
        )));
    }
    let mut n = 0usize;
    let mut level = 1usize;
    for _ in 0..k {
        n = n
            .checked_add(level)
            .ok_or_else(|| GraphError::InvalidParameter("tree too large".into()))?;
        level = level
            .checked_mul(r)
            .ok_or_else(|| GraphError::InvalidParameter("tree too large".into()))?;
    }
    Graph::from_edges(n, (1..n).map(|c| ((c - 1) / r, c)))
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner
/// pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GraphValidationReport {
    pub is_simple: bool,
    pub is_regular: Option<usize>,
    pub min_degree: usize,
    pub connected_components: usize,
}

pub fn validate(g: &Graph) -> GraphValidationReport {
    let simple = g.edges.iter().all(|&(u, v)| u < v)
        && g.edges.windows(2).all(|w| w[0] < w[1])
        && (0..g.n).all(|u| {
            g.adj[u]
                .iter()
                .all(|&(v, e)| g.edges[e] == (u.min(v), u.max(v)))
        });
    let (min, max) = (g.min_degree(), g.max_degree());
    GraphValidationReport {
        is_simple: simple,
        is_regular: (g.n > 0 && min == max).then_some(min),
        min_degree: min,
        connected_components: g.components().1,
    }
}
