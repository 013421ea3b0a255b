//! Maker and Breaker strategies, and monitors that check structural
//! invariants during play.
//!
//! Strategies see the game state and the number of steps left in the
//! current move and return edges to claim in order. The driver keeps asking
//! until the move is complete, so returning one edge at a time is fine.

mod counter_tree;
mod global;
mod greedy;
pub mod monitors;
mod random;
mod reactive;
mod sabotaged;
mod tree;

pub use counter_tree::{CounterTreeBreaker, PathFamily};
pub use global::GlobalBreaker;
pub use greedy::GreedyMergeMaker;
pub use random::RandomStrategy;
pub use reactive::ReactiveBreaker;
pub use sabotaged::{Sabotage, SabotagedBreaker};
pub use tree::TreeMaker;

use alloc::string::String;
use alloc::vec::Vec;

use crate::game::GameState;
use crate::graph::EdgeId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// Free edges to claim, in order; at most the number of steps left.
    Claim(Vec<EdgeId>),
    Forfeit,
}

pub trait Strategy {
    /// Name as it appears in transcripts and CSV rows.
    fn name(&self) -> String;

    fn decide(&mut self, st: &GameState<'_>, steps: usize) -> Decision;
}

impl<S: Strategy + ?Sized> Strategy for alloc::boxed::Box<S> {
    fn name(&self) -> String {
        (**self).name()
    }

    fn decide(&mut self, st: &GameState<'_>, steps: usize) -> Decision {
        (**self).decide(st, steps)
    }
}

/// Lowest free edge, if any.
pub(crate) fn lowest_free(st: &GameState<'_>) -> Decision {
    match st.lowest_free_edge() {
        Some(e) => Decision::Claim(alloc::vec![e]),
        None => Decision::Claim(Vec::new()),
    }
}
