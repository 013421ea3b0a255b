//! Orientations with positive out-degree and certifiably short directed
//! paths.
//!
//! [`short_orientation`] builds a maximal collection of pairwise nonadjacent
//! short induced cycles, orients each cycle cyclically and every edge that
//! touches a cycle into it, layers the remaining vertices by their distance
//! to the cycles, points edges between consecutive layers downward, and
//! orients edges inside a layer along a proper coloring of that layer.
//! Every simple directed path then descends through the layers and ends
//! with a walk around one cycle, which bounds its length.

use alloc::collections::{BinaryHeap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt::Write as _;

use crate::analysis::{
    degeneracy_order, dsatur_coloring, greedy_coloring, longest_directed_path_structured,
    AnalysisError, Coloring, CycleSearch,
};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::math::{ceil_log, fnv1a64};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrientationError {
    #[error("minimum degree {min_degree} is below 3")]
    MinDegree { min_degree: usize },
    #[error("orientation does not match the graph: {0}")]
    Mismatch(String),
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// A direction for every edge of a graph: `arcs[e] = (tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Orientation {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    /// Arcs listed by edge index.
    pub fn from_arcs(n: usize, arcs: Vec<(Vertex, Vertex)>) -> Result<Self, OrientationError> {
        for (e, &(a, b)) in arcs.iter().enumerate() {
            if a >= n || b >= n || a == b {
                return Err(OrientationError::Mismatch(format!("arc {e} = ({a}, {b}) is invalid")));
            }
        }
        Ok(Orientation { n, arcs })
    }

    /// Orients edge `e` of `g` from its lower endpoint iff `forward(e)`.
    pub fn from_graph(g: &Graph, mut forward: impl FnMut(EdgeId) -> bool) -> Self {
        let arcs = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| if forward(e) { (u, v) } else { (v, u) })
            .collect();
        Orientation { n: g.n(), arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.arcs[e]
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn tail(&self, e: EdgeId) -> Vertex {
        self.arcs[e].0
    }

    pub fn head(&self, e: EdgeId) -> Vertex {
        self.arcs[e].1
    }

    /// True when the arcs are exactly the edges of `g`, in edge-index order.
    pub fn matches(&self, g: &Graph) -> bool {
        self.n == g.n()
            && self.arcs.len() == g.edge_count()
            && self
                .arcs
                .iter()
                .zip(g.edges())
                .all(|(&(a, b), &e)| (a.min(b), a.max(b)) == e)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for &(a, _) in &self.arcs {
            out[a] += 1;
        }
        out
    }

    pub fn min_out_degree(&self) -> usize {
        self.out_degrees().into_iter().min().unwrap_or(0)
    }

    /// Out-neighbors per vertex, sorted, with the edge index of each arc.
    pub fn out_adjacency(&self) -> Vec<Vec<(Vertex, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(a, b)) in self.arcs.iter().enumerate() {
            adj[a].push((b, e));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    /// Orientation file: `n m` header, then one `u v` line per arc `u -> v`
    /// in edge-index order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.arcs.len());
        for &(a, b) in &self.arcs {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, OrientationError> {
        let mut rows = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = rows.next().ok_or(OrientationError::Parse {
            line: 1,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_two(hline, header)?;
        let mut arcs = Vec::with_capacity(m);
        for (line, body) in rows {
            arcs.push(parse_two(line, body)?);
        }
        if arcs.len() != m {
            return Err(OrientationError::Parse {
                line: hline,
                message: format!("header declares {m} arcs but {} were listed", arcs.len()),
            });
        }
        Self::from_arcs(n, arcs)
    }

    pub fn fingerprint(&self) -> u64 {
        fnv1a64(self.to_text().into_bytes())
    }
}

fn parse_two(line: usize, body: &str) -> Result<(usize, usize), OrientationError> {
    let bad = || OrientationError::Parse { line, message: "expected two integers".into() };
    let mut it = body.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(bad()),
    }
}

/// Pairwise vertex-disjoint, nonadjacent induced cycles.
///
/// Each cycle is stored in traversal order starting at its lowest vertex and
/// continuing toward the lower of that vertex's two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CycleCollection {
    pub cycles: Vec<Vec<Vertex>>,
    pub length_bound: usize,
}

impl CycleCollection {
    /// Cycle index per vertex.
    pub fn membership(&self, n: usize) -> Vec<Option<usize>> {
        let mut member = vec![None; n];
        for (i, c) in self.cycles.iter().enumerate() {
            for &v in c {
                if v < n {
                    member[v] = Some(i);
                }
            }
        }
        member
    }

    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }
}

/// Decomposition behind a [`short_orientation`] result.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OrientationCertificate {
    pub collection: CycleCollection,
    pub k: usize,
    pub gamma_delta: usize,
    pub gamma_k: usize,
    /// Distance to the nearest collection cycle; cycle vertices have level 0.
    pub levels: Vec<u32>,
    /// `level_colorings[i - 1]` colors level `i`; its entries follow the
    /// level's vertices in increasing order.
    pub level_colorings: Vec<Coloring>,
    pub chi_ub: u32,
    pub certified_bound: usize,
}

impl OrientationCertificate {
    /// Vertices of level `i`, increasing.
    pub fn level_vertices(&self, i: u32) -> Vec<Vertex> {
        (0..self.levels.len()).filter(|&v| self.levels[v] == i).collect()
    }

    pub fn max_level(&self) -> u32 {
        self.levels.iter().copied().max().unwrap_or(0)
    }
}

/// `max(3, ceil(log2 d / log2 log2 d))`.
pub fn degree_parameter(min_degree: usize) -> usize {
    if min_degree < 4 {
        return 3;
    }
    let l = libm::log2(min_degree as f64);
    let ll = libm::log2(l);
    if ll <= 0.0 {
        return 3;
    }
    (libm::ceil(l / ll) as usize).max(3)
}

/// Greedy maximal collection of nonadjacent induced cycles of length at most
/// `max_len`: repeatedly takes a shortest cycle (lowest start vertex on
/// ties) among vertices that are neither on nor next to a chosen cycle.
pub fn max_cycle_collection(g: &Graph, max_len: usize) -> CycleCollection {
    let n = g.n();
    let mut allowed = vec![true; n];
    let mut search = CycleSearch::new(n);
    // Keys are lower bounds: removing vertices never shortens a cycle.
    let mut heap = BinaryHeap::new();
    for v in 0..n {
        if let Some(c) = search.shortest_through(g, &allowed, v, max_len) {
            heap.push(Reverse((c.len(), v)));
        }
    }
    let mut cycles = Vec::new();
    while let Some(Reverse((len, v))) = heap.pop() {
        if !allowed[v] {
            continue;
        }
        let Some(cycle) = search.shortest_through(g, &allowed, v, max_len) else {
            continue;
        };
        if cycle.len() > len {
            heap.push(Reverse((cycle.len(), v)));
            continue;
        }
        for &x in &cycle {
            allowed[x] = false;
            for &(y, _) in g.neighbors(x) {
                allowed[y] = false;
            }
        }
        cycles.push(normalize_cycle(g, cycle));
    }
    CycleCollection { cycles, length_bound: max_len }
}

fn normalize_cycle(g: &Graph, mut cycle: Vec<Vertex>) -> Vec<Vertex> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    if cycle[len - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    debug_assert!(g.has_edge(cycle[0], cycle[len - 1]));
    cycle
}

/// Orientation in which every vertex has positive out-degree and every
/// simple directed path is short, with its certificate.
///
/// Requires minimum degree at least 3. Components are handled together: the
/// cycle search and the layering never cross between components.
pub fn short_orientation(
    g: &Graph,
) -> Result<(Orientation, OrientationCertificate), OrientationError> {
    let n = g.n();
    let delta = g.min_degree();
    if n == 0 || delta < 3 {
        return Err(OrientationError::MinDegree { min_degree: delta });
    }
    let k = degree_parameter(delta);
    let gamma_delta = ceil_log(delta - 1, n) as usize;
    let gamma_k = ceil_log(k - 1, n) as usize;
    let collection = max_cycle_collection(g, 2 * gamma_k);
    let member = collection.membership(n);

    let levels = bfs_levels(g, &collection);
    if let Some(v) = (0..n).find(|&v| levels[v] == u32::MAX) {
        return Err(AnalysisError::Precondition(format!(
            "vertex {v} is in a component without a short cycle"
        ))
        .into());
    }
    let max_level = levels.iter().copied().max().unwrap_or(0);

    let mut colors = vec![0u32; n];
    let mut level_colorings = Vec::with_capacity(max_level as usize);
    let mut by_level: Vec<Vec<Vertex>> = vec![Vec::new(); max_level as usize + 1];
    for v in 0..n {
        by_level[levels[v] as usize].push(v);
    }
    for (i, vertices) in by_level.iter().enumerate().skip(1) {
        let sub = g.induced(vertices);
        let coloring = if i == 1 {
            dsatur_coloring(&sub)
        } else {
            let (mut order, _) = degeneracy_order(&sub);
            order.reverse();
            greedy_coloring(&sub, &order)?
        };
        for (local, &v) in vertices.iter().enumerate() {
            colors[v] = coloring.colors[local];
        }
        level_colorings.push(coloring);
    }
    let chi_ub = level_colorings.first().map_or(0, |c| c.num_colors);

    let mut next_on_cycle = vec![usize::MAX; n];
    for c in &collection.cycles {
        for i in 0..c.len() {
            next_on_cycle[c[i]] = c[(i + 1) % c.len()];
        }
    }
    let orientation = Orientation::from_graph(g, |e| {
        let (u, v) = g.edge(e);
        match (member[u], member[v]) {
            (Some(_), Some(_)) => next_on_cycle[u] == v,
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (None, None) => {
                if levels[u] != levels[v] {
                    levels[u] > levels[v]
                } else {
                    colors[u] > colors[v]
                }
            }
        }
    });
    let certified_bound = chi_ub as usize + k * gamma_delta + 2 * gamma_k;
    let cert = OrientationCertificate {
        collection,
        k,
        gamma_delta,
        gamma_k,
        levels,
        level_colorings,
        chi_ub,
        certified_bound,
    };
    Ok((orientation, cert))
}

/// Multi-source BFS distance to the collection; `u32::MAX` if unreachable.
fn bfs_levels(g: &Graph, collection: &CycleCollection) -> Vec<u32> {
    let mut levels = vec![u32::MAX; g.n()];
    let mut queue = VecDeque::new();
    for c in &collection.cycles {
        for &v in c {
            levels[v] = 0;
            queue.push_back(v);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.neighbors(x) {
            if levels[y] == u32::MAX {
                levels[y] = levels[x] + 1;
                queue.push_back(y);
            }
        }
    }
    levels
}

/// Acyclic orientation from higher color to lower; directed paths have at
/// most `num_colors - 1` edges.
pub fn gallai_roy_orient(g: &Graph, c: &Coloring) -> Result<Orientation, OrientationError> {
    if !c.is_proper(g) {
        return Err(OrientationError::ImproperColoring);
    }
    Ok(Orientation::from_graph(g, |e| {
        let (u, v) = g.edge(e);
        c.colors[u] > c.colors[v]
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OrientationReport {
    pub checks: Vec<Check>,
    /// Longest simple directed path, when the certificate allowed computing it.
    pub longest_path: Option<usize>,
}

impl OrientationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, failure: Option<String>) {
        let passed = failure.is_none();
        self.checks.push(Check { name, passed, detail: failure.unwrap_or_default() });
    }
}

/// Checks an orientation and its certificate against `g`. Never fails; each
/// check is reported separately.
pub fn verify_orientation(
    g: &Graph,
    o: &Orientation,
    cert: &OrientationCertificate,
) -> OrientationReport {
    let mut report = OrientationReport::default();
    let n = g.n();
    if !o.matches(g) {
        report.push("matches_graph", Some("arcs do not cover the graph's edges".into()));
        return report;
    }
    report.push("matches_graph", None);

    let out = o.out_degrees();
    report.push(
        "positive_out_degree",
        (0..n).find(|&v| out[v] == 0).map(|v| format!("vertex {v} is a sink")),
    );

    let delta = g.min_degree();
    let params = if delta < 3 {
        Some(format!("minimum degree {delta} < 3"))
    } else {
        let k = degree_parameter(delta);
        let gd = ceil_log(delta - 1, n) as usize;
        let gk = ceil_log(k - 1, n) as usize;
        if (cert.k, cert.gamma_delta, cert.gamma_k) != (k, gd, gk) {
            Some(format!(
                "expected k, gamma_delta, gamma_k = {k}, {gd}, {gk}; certificate has {}, {}, {}",
                cert.k, cert.gamma_delta, cert.gamma_k
            ))
        } else if cert.collection.length_bound != 2 * gk {
            Some(format!("length bound {} != 2 * gamma_k", cert.collection.length_bound))
        } else {
            None
        }
    };
    report.push("parameters", params);

    let collection_ok = check_collection(g, &cert.collection);
    let collection_valid = collection_ok.is_none();
    report.push("collection_cycles", collection_ok);
    if !collection_valid {
        return report;
    }
    let member = cert.collection.membership(n);
    report.push("collection_maximal", check_maximal(g, &cert.collection, &member));
    report.push("cycle_arcs", check_cycle_arcs(g, o, &cert.collection, &member));

    let levels_ok = check_levels(g, cert, &member);
    let levels_valid = levels_ok.is_none();
    report.push("levels", levels_ok);
    if levels_valid {
        report.push("inter_level_arcs", check_downward(o, cert));
        report.push("level_colorings", check_colorings(g, cert));
        report.push("intra_level_arcs", check_intra_level(g, o, cert, &member));
    }

    let expected = cert.chi_ub as usize + cert.k * cert.gamma_delta + 2 * cert.gamma_k;
    report.push(
        "certified_bound",
        (cert.certified_bound != expected)
            .then(|| format!("certified bound {} != {expected}", cert.certified_bound)),
    );

    match longest_directed_path_structured(o, cert) {
        Ok(l) => {
            report.longest_path = Some(l);
            report.push(
                "longest_path",
                (l > cert.certified_bound)
                    .then(|| format!("longest path {l} exceeds {}", cert.certified_bound)),
            );
        }
        Err(e) => report.push("longest_path", Some(format!("{e}"))),
    }
    report
}

fn check_collection(g: &Graph, c: &CycleCollection) -> Option<String> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, cycle) in c.cycles.iter().enumerate() {
        let len = cycle.len();
        if len < 3 || len > c.length_bound {
            return Some(format!("cycle {i} has length {len}"));
        }
        for &v in cycle {
            if v >= n || owner[v] != usize::MAX {
                return Some(format!("cycle {i} repeats or reuses vertex {v}"));
            }
            owner[v] = i;
        }
        for j in 0..len {
            if !g.has_edge(cycle[j], cycle[(j + 1) % len]) {
                return Some(format!("cycle {i} is not a cycle of the graph"));
            }
        }
    }
    for (i, cycle) in c.cycles.iter().enumerate() {
        for &v in cycle {
            for &(w, _) in g.neighbors(v) {
                if owner[w] == i {
                    let len = cycle.len();
                    let pos = |x| cycle.iter().position(|&y| y == x).unwrap();
                    let gap = pos(v).abs_diff(pos(w));
                    if gap != 1 && gap != len - 1 {
                        return Some(format!("cycle {i} has chord {v} {w}"));
                    }
                } else if owner[w] != usize::MAX {
                    return Some(format!("cycles {i} and {} are adjacent", owner[w]));
                }
            }
        }
    }
    None
}

fn check_maximal(g: &Graph, c: &CycleCollection, member: &[Option<usize>]) -> Option<String> {
    let n = g.n();
    let mut allowed = vec![true; n];
    for v in 0..n {
        if member[v].is_some() {
            allowed[v] = false;
            for &(w, _) in g.neighbors(v) {
                allowed[w] = false;
            }
        }
    }
    let mut search = CycleSearch::new(n);
    (0..n).find_map(|v| {
        search
            .shortest_through(g, &allowed, v, c.length_bound)
            .map(|cy| format!("residual cycle of length {} through {v}", cy.len()))
    })
}

fn check_cycle_arcs(
    g: &Graph,
    o: &Orientation,
    c: &CycleCollection,
    member: &[Option<usize>],
) -> Option<String> {
    for cycle in &c.cycles {
        for j in 0..cycle.len() {
            let (a, b) = (cycle[j], cycle[(j + 1) % cycle.len()]);
            let e = g.edge_between(a, b)?;
            if o.arc(e) != (a, b) {
                return Some(format!("cycle edge {a} {b} is not oriented along the cycle"));
            }
        }
    }
    for (e, &(a, b)) in o.arcs().iter().enumerate() {
        if member[a].is_some() && member[b].is_none() {
            return Some(format!("arc {e} leaves the collection: {a} -> {b}"));
        }
    }
    None
}

fn check_levels(
    g: &Graph,
    cert: &OrientationCertificate,
    member: &[Option<usize>],
) -> Option<String> {
    let n = g.n();
    if cert.levels.len() != n {
        return Some(format!("level map has {} entries for {n} vertices", cert.levels.len()));
    }
    let expected = bfs_levels(g, &cert.collection);
    if let Some(v) = (0..n).find(|&v| cert.levels[v] != expected[v]) {
        return Some(format!(
            "vertex {v} has level {} but distance {}",
            cert.levels[v], expected[v]
        ));
    }
    if let Some(v) = (0..n).find(|&v| (cert.levels[v] == 0) != member[v].is_some()) {
        return Some(format!("vertex {v}: level 0 must mean cycle vertex"));
    }
    for &(u, v) in g.edges() {
        if cert.levels[u].abs_diff(cert.levels[v]) > 1 {
            return Some(format!("edge {u} {v} skips a level"));
        }
    }
    let cap = 1 + cert.gamma_delta as u32;
    if let Some(v) = (0..n).find(|&v| cert.levels[v] > cap) {
        return Some(format!("vertex {v} has level {} > 1 + gamma_delta", cert.levels[v]));
    }
    None
}

fn check_downward(o: &Orientation, cert: &OrientationCertificate) -> Option<String> {
    o.arcs().iter().enumerate().find_map(|(e, &(a, b))| {
        let (la, lb) = (cert.levels[a], cert.levels[b]);
        (la < lb).then(|| format!("arc {e} points up: {a} (level {la}) -> {b} (level {lb})"))
    })
}

fn check_colorings(g: &Graph, cert: &OrientationCertificate) -> Option<String> {
    let max_level = cert.max_level();
    if cert.level_colorings.len() != max_level as usize {
        return Some(format!(
            "{} level colorings for {max_level} levels",
            cert.level_colorings.len()
        ));
    }
    for i in 1..=max_level {
        let vertices = cert.level_vertices(i);
        let sub = g.induced(&vertices);
        let c = &cert.level_colorings[i as usize - 1];
        if !c.is_proper(&sub) {
            return Some(format!("coloring of level {i} is not proper"));
        }
        if i == 1 && c.num_colors != cert.chi_ub {
            return Some(format!("level 1 uses {} colors, chi_ub = {}", c.num_colors, cert.chi_ub));
        }
        if i >= 2 {
            if c.num_colors as usize > cert.k {
                return Some(format!("level {i} uses {} > k colors", c.num_colors));
            }
            let (_, degeneracy) = degeneracy_order(&sub);
            if degeneracy + 1 > cert.k {
                return Some(format!("level {i} has degeneracy {degeneracy} > k - 1"));
            }
        }
    }
    None
}

fn check_intra_level(
    g: &Graph,
    o: &Orientation,
    cert: &OrientationCertificate,
    member: &[Option<usize>],
) -> Option<String> {
    let n = g.n();
    let mut color = vec![0u32; n];
    for i in 1..=cert.max_level() {
        let c = &cert.level_colorings[i as usize - 1];
        for (local, v) in cert.level_vertices(i).into_iter().enumerate() {
            color[v] = c.colors[local];
        }
    }
    for (e, &(a, b)) in o.arcs().iter().enumerate() {
        if member[a].is_none() && cert.levels[a] == cert.levels[b] && color[a] <= color[b] {
            return Some(format!("arc {e} = {a} -> {b} does not go from higher color to lower"));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{girth, longest_directed_path_exact};
    use crate::graph::{complete_graph, cycle_graph, path_graph, petersen, random_regular};

    #[test]
    fn degree_parameter_values() {
        for d in 3..=16 {
            assert_eq!(degree_parameter(d), 3, "d = {d}");
        }
        // log2 256 = 8, log2 8 = 3.
        assert_eq!(degree_parameter(256), 3);
        // log2 2^16 = 16, log2 16 = 4.
        assert_eq!(degree_parameter(1 << 16), 4);
        assert!((3..5000).all(|d| degree_parameter(d) <= d));
    }

    #[test]
    fn collection_examples() {
        let k4 = complete_graph(4).unwrap();
        let c = max_cycle_collection(&k4, 4);
        assert_eq!(c.cycles, vec![vec![0, 1, 2]]);

        let two = complete_graph(3).unwrap().disjoint_union(&complete_graph(3).unwrap());
        let c = max_cycle_collection(&two, 4);
        assert_eq!(c.cycles.len(), 2);

        let p = petersen();
        let c = max_cycle_collection(&p, 8);
        assert!(!c.cycles.is_empty());
        assert!(c.cycles.iter().all(|cy| cy.len() == 5));
        assert!(check_collection(&p, &c).is_none());
        let member = c.membership(10);
        assert!(check_maximal(&p, &c, &member).is_none());
    }

    #[test]
    fn collection_residual_has_no_short_cycle() {
        for seed in 0..20 {
            let g = random_regular(60, 3, seed).unwrap();
            let c = max_cycle_collection(&g, 12);
            assert!(check_collection(&g, &c).is_none());
            let member = c.membership(g.n());
            let mut keep = Vec::new();
            for v in 0..g.n() {
                if member[v].is_none() && g.neighbors(v).iter().all(|&(w, _)| member[w].is_none()) {
                    keep.push(v);
                }
            }
            let residual = g.induced(&keep);
            assert!(girth(&residual).is_none_or(|len| len > 12));
        }
    }

    #[test]
    fn k4_orientation() {
        let g = complete_graph(4).unwrap();
        let (o, cert) = short_orientation(&g).unwrap();
        assert_eq!((cert.k, cert.gamma_delta, cert.gamma_k), (3, 2, 2));
        assert!(o.min_out_degree() >= 1);
        let exact = longest_directed_path_exact(&o).unwrap();
        // Vertex 3 points into the directed triangle, then two more arcs.
        assert_eq!(exact, 3);
        assert!(exact <= cert.certified_bound && cert.certified_bound <= 14);
        let report = verify_orientation(&g, &o, &cert);
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn random_graph_orientations_verify() {
        for (n, d, seed) in [(20, 3, 3), (24, 4, 1), (30, 5, 2), (40, 6, 9), (200, 3, 5)] {
            let g = random_regular(n, d, seed).unwrap();
            let (o, cert) = short_orientation(&g).unwrap();
            let report = verify_orientation(&g, &o, &cert);
            assert!(report.all_passed(), "{n} {d} {seed}: {report:?}");
            if n <= 40 {
                let exact = longest_directed_path_exact(&o).unwrap();
                assert_eq!(Some(exact), report.longest_path);
                assert!(exact <= cert.certified_bound);
            }
        }
    }

    #[test]
    fn disjoint_components_orient_independently() {
        let g = complete_graph(4).unwrap().disjoint_union(&complete_graph(4).unwrap());
        let (o, cert) = short_orientation(&g).unwrap();
        assert_eq!(cert.collection.cycles.len(), 2);
        assert!(verify_orientation(&g, &o, &cert).all_passed());
        for e in 0..6 {
            let (a, b) = o.arc(e);
            let (c, d) = o.arc(e + 6);
            assert_eq!((a + 4, b + 4), (c, d));
        }
    }

    #[test]
    fn rejects_low_degree() {
        assert!(matches!(
            short_orientation(&cycle_graph(5).unwrap()),
            Err(OrientationError::MinDegree { min_degree: 2 })
        ));
    }

    #[test]
    fn verifier_catches_tampering() {
        let g = random_regular(30, 3, 4).unwrap();
        let (o, cert) = short_orientation(&g).unwrap();

        let mut sink = o.clone();
        let v = 0;
        for &(_, e) in g.neighbors(v) {
            let (a, b) = sink.arcs[e];
            if a == v {
                sink.arcs[e] = (b, a);
            }
        }
        let report = verify_orientation(&g, &sink, &cert);
        assert!(report.failed().any(|c| c.name == "positive_out_degree"));

        let mut bad = cert.clone();
        let w = (0..30).find(|&v| bad.levels[v] == 2).unwrap();
        bad.levels[w] = 4;
        let report = verify_orientation(&g, &o, &bad);
        assert!(report.failed().any(|c| c.name == "levels"));

        let mut bad = cert.clone();
        bad.certified_bound += 1;
        assert!(verify_orientation(&g, &o, &bad).failed().any(|c| c.name == "certified_bound"));
    }

    #[test]
    fn gallai_roy_examples() {
        let p3 = path_graph(3).unwrap();
        let c = Coloring { colors: vec![1, 2, 1], num_colors: 2 };
        let o = gallai_roy_orient(&p3, &c).unwrap();
        assert_eq!(o.arcs(), &[(1, 0), (1, 2)]);
        assert_eq!(longest_directed_path_exact(&o).unwrap(), 1);

        let k4 = complete_graph(4).unwrap();
        let c = dsatur_coloring(&k4);
        let o = gallai_roy_orient(&k4, &c).unwrap();
        assert_eq!(longest_directed_path_exact(&o).unwrap(), 3);

        let c5 = cycle_graph(5).unwrap();
        let c = dsatur_coloring(&c5);
        assert_eq!(c.num_colors, 3);
        let o = gallai_roy_orient(&c5, &c).unwrap();
        assert!(longest_directed_path_exact(&o).unwrap() <= 2);

        let bad = Coloring { colors: vec![1, 1, 2], num_colors: 2 };
        assert_eq!(gallai_roy_orient(&p3, &bad), Err(OrientationError::ImproperColoring));
    }

    #[test]
    fn gallai_roy_is_acyclic_and_short() {
        for seed in 0..20 {
            let g = random_regular(16, 4, seed).unwrap();
            let c = dsatur_coloring(&g);
            let o = gallai_roy_orient(&g, &c).unwrap();
            assert!(longest_directed_path_exact(&o).unwrap() < c.num_colors as usize);
        }
    }

    #[test]
    fn text_round_trip() {
        let g = random_regular(20, 3, 2).unwrap();
        let (o, _) = short_orientation(&g).unwrap();
        let back = Orientation::from_text(&o.to_text()).unwrap();
        assert_eq!(back, o);
        assert!(back.matches(&g));
        assert!(Orientation::from_text("2 1\n0 0\n").is_err());
        assert!(Orientation::from_text("3 2\n0 1\n").is_err());
    }
}
