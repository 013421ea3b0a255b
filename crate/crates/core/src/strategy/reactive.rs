use alloc::string::String;
use alloc::vec;

use super::{lowest_free, Decision, Strategy};
use crate::game::GameState;

/// Claims the lowest free edge incident to the component Maker touched
/// last, or the lowest free edge anywhere when that component is dead.
///
/// When Maker's move has several steps it may touch several components;
/// each step then goes to the live one with the largest
/// `m * F(S) + (b - m(d - 2)) * |S|`, where `F(S)` counts free incident
/// edges, ties going to the most recently touched. With `m = 1` this is the
/// last touched component.
#[derive(Debug, Clone, Default)]
pub struct ReactiveBreaker;

impl ReactiveBreaker {
    pub fn new() -> Self {
        ReactiveBreaker
    }
}

impl Strategy for ReactiveBreaker {
    fn name(&self) -> String {
        "reactive".into()
    }

    fn decide(&mut self, st: &GameState<'_>, _steps: usize) -> Decision {
        let cfg = st.config();
        let (m, b) = (cfg.m as i64, cfg.b as i64);
        let d = st.graph().max_degree() as i64;
        let mut best: Option<(i64, usize)> = None;
        for id in st.touched_in_last_maker_move() {
            let f = st.free_incident(id) as i64;
            if f == 0 {
                continue;
            }
            let score = m * f + (b - m * (d - 2)) * st.component_size(id) as i64;
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, id));
            }
        }
        match best {
            Some((_, id)) => {
                let e = *st.free_incident_edges(id).first().unwrap();
                Decision::Claim(vec![e])
            }
            None => lowest_free(st),
        }
    }
}
