use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Decision, Strategy};
use crate::game::GameState;
use crate::graph::{EdgeId, Vertex};

/// Grows one tree from `root`: every step claims the lowest free edge
/// leaving the tree, and the strategy forfeits when none is left.
#[derive(Debug, Clone)]
pub struct TreeMaker {
    root: Vertex,
    in_tree: Vec<bool>,
    // Edges with exactly one endpoint in the tree; may hold claimed edges,
    // which are skipped lazily.
    frontier: BTreeSet<EdgeId>,
}

impl TreeMaker {
    pub fn new(root: Vertex) -> Self {
        TreeMaker { root, in_tree: Vec::new(), frontier: BTreeSet::new() }
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    fn add(&mut self, st: &GameState<'_>, v: Vertex) {
        self.in_tree[v] = true;
        for &(w, e) in st.graph().neighbors(v) {
            if self.in_tree[w] {
                self.frontier.remove(&e);
            } else {
                self.frontier.insert(e);
            }
        }
    }
}

impl Default for TreeMaker {
    fn default() -> Self {
        Self::new(0)
    }
}

impl Strategy for TreeMaker {
    fn name(&self) -> String {
        alloc::format!("tree[root={}]", self.root)
    }

    fn decide(&mut self, st: &GameState<'_>, steps: usize) -> Decision {
        let g = st.graph();
        if self.in_tree.is_empty() {
            self.in_tree = vec![false; g.n()];
            if self.root < g.n() {
                self.add(st, self.root);
            }
        }
        let mut picked = Vec::new();
        while picked.len() < steps {
            let next = self.frontier.iter().copied().find(|&e| st.is_free(e));
            let Some(e) = next else { break };
            // Drop the claimed edges the search skipped over.
            while self.frontier.first().is_some_and(|&f| f != e) {
                self.frontier.pop_first();
            }
            self.frontier.remove(&e);
            let (u, v) = g.edge(e);
            let outside = if self.in_tree[u] { v } else { u };
            self.add(st, outside);
            picked.push(e);
        }
        if picked.is_empty() {
            Decision::Forfeit
        } else {
            Decision::Claim(picked)
        }
    }
}
