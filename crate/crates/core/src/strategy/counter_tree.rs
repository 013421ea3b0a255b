use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{lowest_free, Decision, ReactiveBreaker, Strategy};
use crate::analysis::{self_colliding_path, AnalysisError, SelfCollidingPath};
use crate::game::{GameState, Player};
use crate::graph::{EdgeId, Graph, Vertex};

/// One self-colliding path per neighbor `v` of `source`, each starting with
/// the edge `(source, v)`. `edges` holds every path edge and every closing
/// edge, increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub source: Vertex,
    pub paths: Vec<SelfCollidingPath>,
    pub edges: Vec<EdgeId>,
}

impl PathFamily {
    pub fn build(g: &Graph, source: Vertex, k: usize) -> Result<Self, AnalysisError> {
        let mut paths = Vec::new();
        let mut edges = Vec::new();
        for &(v, _) in g.neighbors(source) {
            let p = self_colliding_path(g, source, v, k)?;
            for w in p.vertices.windows(2) {
                edges.push(g.edge_between(w[0], w[1]).unwrap());
            }
            let (a, b) = p.closing_edge();
            edges.push(g.edge_between(a, b).unwrap());
            paths.push(p);
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(PathFamily { source, paths, edges })
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Vertices covered by the family.
    pub fn vertex_count(&self) -> usize {
        let mut all: Vec<Vertex> = self.paths.iter().flat_map(|p| p.vertices.iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }
}

/// Lets Maker extend his tree only along a fixed family of self-colliding
/// paths through the first vertex he touched.
///
/// Every step claims the lowest free edge that leaves Maker's tree and is
/// not in the family, then pads with the lowest free edge outside the
/// family. If Maker claims an edge that is outside the family or does not
/// extend his tree, the strategy records the deviation and plays
/// [`ReactiveBreaker`] for the rest of the game.
#[derive(Debug, Clone, Default)]
pub struct CounterTreeBreaker {
    family: Option<PathFamily>,
    in_p: Vec<bool>,
    in_tree: Vec<bool>,
    tree: Vec<Vertex>,
    seen_steps: usize,
    pad_cursor: EdgeId,
    fallback: Option<ReactiveBreaker>,
    deviated: bool,
}

impl CounterTreeBreaker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn family(&self) -> Option<&PathFamily> {
        self.family.as_ref()
    }

    pub fn deviated(&self) -> bool {
        self.deviated
    }

    /// True once the strategy plays reactively.
    pub fn fell_back(&self) -> bool {
        self.fallback.is_some()
    }

    fn start(&mut self, g: &Graph, e: EdgeId) {
        let (u, _) = g.edge(e);
        match PathFamily::build(g, u, g.min_degree()) {
            Ok(family) => {
                self.in_p = vec![false; g.edge_count()];
                for &f in &family.edges {
                    self.in_p[f] = true;
                }
                self.in_tree = vec![false; g.n()];
                self.in_tree[u] = true;
                self.tree = vec![u];
                self.family = Some(family);
            }
            Err(_) => self.fallback = Some(ReactiveBreaker::new()),
        }
    }

    // Follows Maker's new steps; false on a deviation.
    fn track(&mut self, st: &GameState<'_>) -> bool {
        let g = st.graph();
        let history = st.history();
        while self.seen_steps < history.len() {
            let step = history[self.seen_steps];
            self.seen_steps += 1;
            if step.player != Player::Maker {
                continue;
            }
            if self.family.is_none() {
                self.start(g, step.edge);
                if self.fallback.is_some() {
                    return true;
                }
            }
            let (a, b) = g.edge(step.edge);
            if !self.in_p[step.edge] || self.in_tree[a] == self.in_tree[b] {
                return false;
            }
            let outside = if self.in_tree[a] { b } else { a };
            self.in_tree[outside] = true;
            self.tree.push(outside);
        }
        true
    }
}

impl Strategy for CounterTreeBreaker {
    fn name(&self) -> String {
        "counter-tree".into()
    }

    fn decide(&mut self, st: &GameState<'_>, steps: usize) -> Decision {
        if self.fallback.is_none() && !self.track(st) {
            self.deviated = true;
            self.fallback = Some(ReactiveBreaker::new());
        }
        if let Some(r) = &mut self.fallback {
            return r.decide(st, steps);
        }
        if self.family.is_none() {
            return lowest_free(st);
        }
        let g = st.graph();
        let leaving = self
            .tree
            .iter()
            .flat_map(|&x| g.neighbors(x).iter())
            .filter(|&&(y, e)| !self.in_tree[y] && !self.in_p[e] && st.is_free(e))
            .map(|&(_, e)| e)
            .min();
        if let Some(e) = leaving {
            return Decision::Claim(vec![e]);
        }
        while self.pad_cursor < g.edge_count()
            && (self.in_p[self.pad_cursor] || !st.is_free(self.pad_cursor))
        {
            self.pad_cursor += 1;
        }
        if self.pad_cursor < g.edge_count() {
            return Decision::Claim(vec![self.pad_cursor]);
        }
        lowest_free(st)
    }
}
