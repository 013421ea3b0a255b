use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Decision, Strategy};
use crate::game::GameState;
use crate::graph::EdgeId;

/// Claims a uniformly random free edge. Works for either player and never
/// forfeits while a free edge exists.
#[derive(Debug, Clone)]
pub struct RandomStrategy {
    seed: u64,
    rng: ChaCha8Rng,
    pool: Option<Vec<EdgeId>>,
}

impl RandomStrategy {
    pub fn new(seed: u64) -> Self {
        RandomStrategy { seed, rng: ChaCha8Rng::seed_from_u64(seed), pool: None }
    }
}

impl Strategy for RandomStrategy {
    fn name(&self) -> String {
        alloc::format!("random[seed={}]", self.seed)
    }

    fn decide(&mut self, st: &GameState<'_>, steps: usize) -> Decision {
        let pool = self.pool.get_or_insert_with(|| (0..st.graph().edge_count()).collect());
        let mut picked = Vec::new();
        while picked.len() < steps && !pool.is_empty() {
            let i = self.rng.random_range(0..pool.len());
            let e = pool.swap_remove(i);
            if st.is_free(e) {
                picked.push(e);
            }
        }
        Decision::Claim(picked)
    }
}
