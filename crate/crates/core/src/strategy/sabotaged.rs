use alloc::string::String;
use alloc::vec;

use super::{lowest_free, Decision, Strategy};
use crate::game::GameState;
use crate::graph::EdgeId;

/// Deliberately broken Breakers, used as negative controls for the
/// monitors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sabotage {
    /// Claims the lowest free edge not incident to Maker's last touched
    /// component.
    AwayFromTouched,
    /// In oriented games, answers like the global strategy but with the
    /// height preferences reversed: lowest in-arc head first, then highest
    /// out-arc tail.
    InvertedHeights,
}

#[derive(Debug, Clone)]
pub struct SabotagedBreaker {
    mode: Sabotage,
}

impl SabotagedBreaker {
    pub fn new(mode: Sabotage) -> Self {
        SabotagedBreaker { mode }
    }
}

impl Strategy for SabotagedBreaker {
    fn name(&self) -> String {
        match self.mode {
            Sabotage::AwayFromTouched => "sabotaged[away]".into(),
            Sabotage::InvertedHeights => "sabotaged[inverted]".into(),
        }
    }

    fn decide(&mut self, st: &GameState<'_>, _steps: usize) -> Decision {
        let Some(t) = st.last_touched() else {
            return lowest_free(st);
        };
        let g = st.graph();
        let pick: Option<EdgeId> = match (self.mode, st.orientation()) {
            (Sabotage::AwayFromTouched, _) | (Sabotage::InvertedHeights, None) => {
                (0..g.edge_count()).find(|&e| {
                    let (u, v) = g.edge(e);
                    st.is_free(e) && st.component_of(u) != t && st.component_of(v) != t
                })
            }
            (Sabotage::InvertedHeights, Some(o)) => {
                let edges = st.free_incident_edges(t);
                let entering = edges
                    .iter()
                    .filter(|&&e| st.component_of(o.tail(e)) != t)
                    .min_by_key(|&&e| (st.height(o.head(e)), e));
                let leaving = edges
                    .iter()
                    .filter(|&&e| st.component_of(o.head(e)) != t)
                    .max_by_key(|&&e| (st.height(o.tail(e)), usize::MAX - e));
                entering.or(leaving).copied()
            }
        };
        match pick {
            Some(e) => Decision::Claim(vec![e]),
            None => lowest_free(st),
        }
    }
}
