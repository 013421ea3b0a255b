use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{lowest_free, Decision, Strategy};
use crate::game::GameState;
use crate::graph::EdgeId;
use crate::orientation::Orientation;

/// Breaker strategy driven by a positive out-degree orientation; the game
/// must be created with [`GameState::new_oriented`] for the same
/// orientation.
///
/// Each step looks at the tree `T` Maker touched last. It claims a free arc
/// entering `T` whose head is highest, otherwise a free arc leaving `T`
/// whose tail is lowest (ties to the lower edge index). When neither exists
/// it pads, in order of preference, with a free edge inside `T`, a free edge
/// inside any tree, a lowest out-arc of a tree no free arc enters, or a
/// lowest out-arc of any tree.
#[derive(Debug, Clone)]
pub struct GlobalBreaker {
    orientation_hash: u64,
}

impl GlobalBreaker {
    pub fn new(o: &Orientation) -> Self {
        GlobalBreaker { orientation_hash: o.fingerprint() }
    }

    fn pad(st: &GameState<'_>, o: &Orientation) -> Option<EdgeId> {
        let g = st.graph();
        let free: Vec<EdgeId> = (st.lowest_free_edge()?..g.edge_count())
            .filter(|&e| st.is_free(e))
            .collect();
        if let Some(&e) = free.iter().find(|&&e| {
            let (u, v) = g.edge(e);
            st.same_component(u, v)
        }) {
            return Some(e);
        }
        // Free in-arcs per tree, and each tree's lowest out-arc height.
        let n = g.n();
        let mut entering = vec![0usize; n];
        let mut lowest_out = vec![usize::MAX; n];
        for &e in &free {
            let (x, y) = o.arc(e);
            entering[st.component_of(y)] += 1;
            let c = st.component_of(x);
            lowest_out[c] = lowest_out[c].min(st.height(x));
        }
        let lowest = |e: EdgeId| {
            let x = o.tail(e);
            st.height(x) == lowest_out[st.component_of(x)]
        };
        free.iter()
            .copied()
            .find(|&e| entering[st.component_of(o.tail(e))] == 0 && lowest(e))
            .or_else(|| free.iter().copied().find(|&e| lowest(e)))
    }
}

impl Strategy for GlobalBreaker {
    fn name(&self) -> String {
        alloc::format!("global[orient={:016x}]", self.orientation_hash)
    }

    fn decide(&mut self, st: &GameState<'_>, _steps: usize) -> Decision {
        let Some(o) = st.orientation() else {
            return lowest_free(st);
        };
        if let Some(t) = st.last_touched() {
            let mut best_in: Option<(usize, EdgeId)> = None;
            let mut best_out: Option<(usize, EdgeId)> = None;
            let mut inside: Option<EdgeId> = None;
            for &e in st.free_incident_edges(t) {
                let (x, y) = o.arc(e);
                match (st.component_of(x) == t, st.component_of(y) == t) {
                    (false, true) => {
                        let h = st.height(y);
                        if best_in.is_none_or(|(bh, _)| h > bh) {
                            best_in = Some((h, e));
                        }
                    }
                    (true, false) => {
                        let h = st.height(x);
                        if best_out.is_none_or(|(bh, _)| h < bh) {
                            best_out = Some((h, e));
                        }
                    }
                    _ => {
                        inside.get_or_insert(e);
                    }
                }
            }
            if let Some((_, e)) = best_in.or(best_out) {
                return Decision::Claim(vec![e]);
            }
            if let Some(e) = inside {
                return Decision::Claim(vec![e]);
            }
        }
        match Self::pad(st, o) {
            Some(e) => Decision::Claim(vec![e]),
            None => lowest_free(st),
        }
    }
}
