use alloc::string::String;
use alloc::vec;

use super::{lowest_free, Decision, Strategy};
use crate::game::GameState;

/// Claims a free edge joining two live components with the largest combined
/// size. Components are scanned largest first (ties by id) and each one's
/// free edges in increasing order; the first best pair wins. Falls back to
/// the lowest free edge when no free edge joins two components.
#[derive(Debug, Clone, Default)]
pub struct GreedyMergeMaker;

impl GreedyMergeMaker {
    pub fn new() -> Self {
        GreedyMergeMaker
    }
}

impl Strategy for GreedyMergeMaker {
    fn name(&self) -> String {
        "greedy-merge".into()
    }

    fn decide(&mut self, st: &GameState<'_>, _steps: usize) -> Decision {
        let g = st.graph();
        let mut best: Option<(usize, usize)> = None;
        for (size, id) in st.live_components() {
            if best.is_some_and(|(total, _)| total >= 2 * size) {
                break;
            }
            for &e in st.free_incident_edges(id) {
                let (u, v) = g.edge(e);
                if st.same_component(u, v) {
                    continue;
                }
                let other = if st.same_component(u, id) { v } else { u };
                let total = size + st.component_size(other);
                if best.is_none_or(|(t, _)| total > t) {
                    best = Some((total, e));
                }
            }
        }
        match best {
            Some((_, e)) => Decision::Claim(vec![e]),
            None => lowest_free(st),
        }
    }
}
