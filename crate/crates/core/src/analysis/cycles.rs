use alloc::vec;
use alloc::vec::Vec;

use super::AnalysisError;
use crate::graph::{Graph, Vertex};
use crate::math::ceil_log;

const UNSEEN: usize = usize::MAX;

/// Reusable scratch space for breadth-first shortest-cycle searches.
///
/// A search from `v` labels every reached vertex with the neighbor of `v`
/// it descends from. A non-tree edge between two different branches closes
/// a cycle through `v`; the shortest such closure is a shortest cycle
/// through `v`.
pub(crate) struct CycleSearch {
    stamp: Vec<u32>,
    epoch: u32,
    dist: Vec<usize>,
    parent: Vec<usize>,
    branch: Vec<usize>,
    queue: Vec<Vertex>,
}

impl CycleSearch {
    pub(crate) fn new(n: usize) -> Self {
        CycleSearch {
            stamp: vec![0; n],
            epoch: 0,
            dist: vec![0; n],
            parent: vec![UNSEEN; n],
            branch: vec![UNSEEN; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn seen(&self, v: Vertex) -> bool {
        self.stamp[v] == self.epoch
    }

    fn mark(&mut self, v: Vertex, dist: usize, parent: usize, branch: usize) {
        self.stamp[v] = self.epoch;
        self.dist[v] = dist;
        self.parent[v] = parent;
        self.branch[v] = branch;
        self.queue.push(v);
    }

    /// Shortest cycle through `v` inside the subgraph induced on `allowed`,
    /// if one of length at most `limit` exists. The cycle starts at `v`.
    pub(crate) fn shortest_through(
        &mut self,
        g: &Graph,
        allowed: &[bool],
        v: Vertex,
        limit: usize,
    ) -> Option<Vec<Vertex>> {
        if !allowed[v] || limit < 3 {
            return None;
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.queue.clear();
        self.mark(v, 0, UNSEEN, UNSEEN);
        let mut best: Option<(usize, Vertex, Vertex)> = None;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            let t = self.dist[x];
            // Closures found from depth t have length >= 2t + 1.
            let floor = 2 * t + 1;
            if floor > limit || best.is_some_and(|(len, _, _)| len <= floor) {
                break;
            }
            for &(y, _) in g.neighbors(x) {
                if !allowed[y] || y == self.parent[x] {
                    continue;
                }
                if !self.seen(y) {
                    let branch = if x == v { y } else { self.branch[x] };
                    self.mark(y, t + 1, x, branch);
                } else if y != v && self.branch[y] != self.branch[x] {
                    let len = t + self.dist[y] + 1;
                    if len <= limit && best.is_none_or(|(b, _, _)| len < b) {
                        best = Some((len, x, y));
                    }
                }
            }
        }
        let (_, x, y) = best?;
        let mut cycle = self.root_path(x);
        let mut back = self.root_path(y);
        back.remove(0);
        back.reverse();
        cycle.extend(back);
        Some(cycle)
    }

    fn root_path(&self, mut x: Vertex) -> Vec<Vertex> {
        let mut path = vec![x];
        while self.parent[x] != UNSEEN {
            x = self.parent[x];
            path.push(x);
        }
        path.reverse();
        path
    }
}

/// Shortest cycle inside the subgraph induced on `allowed` (`None` = every
/// vertex). Ties go to the lowest start vertex; the returned sequence starts
/// there. A shortest cycle is always chordless.
pub fn shortest_cycle(g: &Graph, allowed: Option<&[bool]>) -> Option<Vec<Vertex>> {
    let all = vec![true; g.n()];
    let allowed = allowed.unwrap_or(&all);
    let mut search = CycleSearch::new(g.n());
    let mut best: Option<Vec<Vertex>> = None;
    for v in 0..g.n() {
        let limit = best.as_ref().map_or(g.n(), |c| c.len() - 1);
        if let Some(c) = search.shortest_through(g, allowed, v, limit) {
            if c.len() == 3 {
                return Some(c);
            }
            best = Some(c);
        }
    }
    best
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g, None).map(|c| c.len())
}

/// A simple path `v_1 .. v_k` whose last vertex is adjacent to `v_i` for
/// some `i <= k - 2`. `v_1 .. v_{i-1}` is the tail and `v_i .. v_k` the body,
/// which closes into a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SelfCollidingPath {
    pub vertices: Vec<Vertex>,
    /// 1-based position `i` of the vertex the last vertex collides with.
    pub collision_index: usize,
}

impl SelfCollidingPath {
    /// Length in edges (the closing edge is not counted).
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn tail(&self) -> &[Vertex] {
        &self.vertices[..self.collision_index - 1]
    }

    pub fn body(&self) -> &[Vertex] {
        &self.vertices[self.collision_index - 1..]
    }

    /// Edge closing the body: `(v_k, v_i)`.
    pub fn closing_edge(&self) -> (Vertex, Vertex) {
        (*self.vertices.last().unwrap(), self.vertices[self.collision_index - 1])
    }

    /// Largest distance from `v_1` to a body vertex, measured inside the
    /// path together with its closing edge.
    pub fn max_body_distance(&self) -> usize {
        let k = self.vertices.len();
        let i = self.collision_index;
        (i..=k).map(|j| (i - 1) + (j - i).min(k - j + 1)).max().unwrap_or(0)
    }

    /// Checks the structural definition against `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        let i = self.collision_index;
        if i < 1 || k < 3 || i + 2 > k {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && g.has_edge(self.vertices[k - 1], self.vertices[i - 1])
    }
}

/// Self-colliding path starting with the edge `(u, v)`, found by exploring
/// non-backtracking walks from `(u, v)` breadth first. With minimum degree at
/// least `k`, its length is at most `2 * ceil(log_{k-1} n)`.
pub fn self_colliding_path(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    k: usize,
) -> Result<SelfCollidingPath, AnalysisError> {
    if k < 3 {
        return Err(AnalysisError::Precondition(alloc::format!("k = {k} < 3")));
    }
    if g.min_degree() < k {
        return Err(AnalysisError::Precondition(alloc::format!(
            "minimum degree {} < k = {k}",
            g.min_degree()
        )));
    }
    if !g.has_edge(u, v) {
        return Err(AnalysisError::Precondition(alloc::format!("({u}, {v}) is not an edge")));
    }
    let n = g.n();
    let mut depth = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    depth[u] = 0;
    depth[v] = 1;
    parent[v] = u;
    let mut level = vec![v];
    let mut t = 1;
    loop {
        let mut next = Vec::new();
        // (max body depth, discovery order) -> (x, y)
        let mut best: Option<((usize, usize), Vertex, Vertex)> = None;
        let mut order = 0;
        for &x in &level {
            for &(y, _) in g.neighbors(x) {
                if y == parent[x] {
                    continue;
                }
                if depth[y] == UNSEEN {
                    depth[y] = t + 1;
                    parent[y] = x;
                    next.push(y);
                } else {
                    let key = (depth[x].max(depth[y]), order);
                    order += 1;
                    if best.is_none_or(|(b, _, _)| key < b) {
                        best = Some((key, x, y));
                    }
                }
            }
        }
        if let Some((_, x, y)) = best {
            return Ok(build_lollipop(&depth, &parent, x, y));
        }
        if next.is_empty() {
            // Unreachable when the minimum degree is at least 3.
            return Err(AnalysisError::Precondition("no cycle reachable from (u, v)".into()));
        }
        level = next;
        t += 1;
    }
}

fn build_lollipop(depth: &[usize], parent: &[usize], x: Vertex, y: Vertex) -> SelfCollidingPath {
    let root_path = |mut z: Vertex| {
        let mut p = vec![z];
        while parent[z] != UNSEEN {
            z = parent[z];
            p.push(z);
        }
        p.reverse();
        p
    };
    // Lowest common ancestor of x and y in the search tree.
    let (mut a, mut b) = (x, y);
    while depth[a] > depth[b] {
        a = parent[a];
    }
    while depth[b] > depth[a] {
        b = parent[b];
    }
    while a != b {
        a = parent[a];
        b = parent[b];
    }
    let w = a;
    let mut vertices = root_path(x);
    if w != y {
        let mut z = y;
        while z != w {
            vertices.push(z);
            z = parent[z];
        }
    }
    let collision_index = depth[w] + 1;
    SelfCollidingPath { vertices, collision_index }
}

/// `2 * ceil(log_{k-1} n)`, the length bound for self-colliding paths.
pub fn collision_length_bound(k: usize, n: usize) -> usize {
    2 * ceil_log(k - 1, n) as usize
}
