//! Exact solver for the s-component game on boards with at most
//! [`MINIMAX_MAX_EDGES`] edges.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::game::{GameConfig, GameError, Player};
use crate::graph::Graph;

pub const MINIMAX_MAX_EDGES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinimaxError {
    #[error("board has {edges} edges, the solver handles at most {MINIMAX_MAX_EDGES}")]
    TooLarge { edges: usize },
    #[error("target component size must be at least 2")]
    BadTarget,
    #[error(transparent)]
    Config(#[from] GameError),
}

/// Winner of the game in which Maker wants a component with at least `s`
/// vertices, under optimal play. The biases and first player come from
/// `cfg`; its own target is ignored.
pub fn minimax_solve(g: &Graph, cfg: &GameConfig, s: usize) -> Result<Player, MinimaxError> {
    cfg.validate()?;
    let m = g.edge_count();
    if m > MINIMAX_MAX_EDGES {
        return Err(MinimaxError::TooLarge { edges: m });
    }
    if s < 2 {
        return Err(MinimaxError::BadTarget);
    }
    let mut solver = Solver { g, cfg: *cfg, s, memo: HashMap::new(), all: (1u32 << m) - 1 };
    let first = cfg.first_player;
    let steps = cfg.bias(first).min(m);
    Ok(if solver.maker_wins(0, 0, first, steps, 0) { Player::Maker } else { Player::Breaker })
}

struct Solver<'g> {
    g: &'g Graph,
    cfg: GameConfig,
    s: usize,
    memo: HashMap<u64, bool>,
    all: u32,
}

impl Solver<'_> {
    /// Largest component of the subgraph formed by the edges in `mask`.
    fn largest(&self, mask: u32) -> usize {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut size = vec![1usize; n];
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut best = usize::from(n > 0);
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            if mask & (1 << e) != 0 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    size[b] += size[a];
                    best = best.max(size[b]);
                }
            }
        }
        best
    }

    // `next` is the lowest edge index the mover may still claim this move:
    // within one move only the set claimed matters, so claims are made in
    // increasing index order.
    fn maker_wins(&mut self, maker: u32, breaker: u32, turn: Player, steps: usize, next: usize) -> bool {
        if self.largest(maker) >= self.s {
            return true;
        }
        let free = self.all & !(maker | breaker);
        if free == 0 || self.largest(self.all & !breaker) < self.s {
            return false;
        }
        let key = u64::from(maker)
            | u64::from(breaker) << 16
            | (steps as u64) << 32
            | (next as u64) << 40
            | u64::from(turn == Player::Maker) << 48;
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let m = self.g.edge_count();
        let mut result = turn == Player::Breaker;
        for e in next..m {
            if free & (1 << e) == 0 {
                continue;
            }
            let (mk, bk) = match turn {
                Player::Maker => (maker | 1 << e, breaker),
                Player::Breaker => (maker, breaker | 1 << e),
            };
            let remaining = (free & !(1 << e)).count_ones() as usize;
            let win = if steps > 1 && remaining > 0 {
                self.maker_wins(mk, bk, turn, steps - 1, e + 1)
            } else {
                let other = turn.other();
                self.maker_wins(mk, bk, other, self.cfg.bias(other).min(remaining), 0)
            };
            if win == (turn == Player::Maker) {
                result = win;
                break;
            }
        }
        // A mover with steps left but no free edge above `next` must have
        // skipped a claim it could have made; that line is covered by the
        // sibling that claims the lower edge instead, so it counts as a loss
        // for the mover here.
        self.memo.insert(key, result);
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, petersen};

    /// Oracle: plain game tree without memo or move-order pruning.
    fn naive(g: &Graph, cfg: &GameConfig, s: usize) -> Player {
        fn largest(g: &Graph, owned: &[bool]) -> usize {
            let n = g.n();
            let mut comp: Vec<usize> = (0..n).collect();
            let mut changed = true;
            while changed {
                changed = false;
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    if owned[e] && comp[u] != comp[v] {
                        let m = comp[u].min(comp[v]);
                        comp[u] = m;
                        comp[v] = m;
                        changed = true;
                    }
                }
            }
            (0..n).map(|c| comp.iter().filter(|&&x| x == c).count()).max().unwrap_or(0)
        }
        fn go(g: &Graph, cfg: &GameConfig, s: usize, own: &mut Vec<Option<Player>>, turn: Player, steps: usize) -> bool {
            let maker: Vec<bool> = own.iter().map(|o| *o == Some(Player::Maker)).collect();
            if largest(g, &maker) >= s {
                return true;
            }
            let free: Vec<usize> = (0..own.len()).filter(|&e| own[e].is_none()).collect();
            if free.is_empty() {
                return false;
            }
            let mut any = false;
            let mut all = true;
            for &e in &free {
                own[e] = Some(turn);
                let (t, st) = if steps > 1 && free.len() > 1 {
                    (turn, steps - 1)
                } else {
                    (turn.other(), cfg.bias(turn.other()).min(free.len() - 1))
                };
                let w = go(g, cfg, s, own, t, st);
                own[e] = None;
                any |= w;
                all &= w;
            }
            if turn == Player::Maker { any } else { all }
        }
        let mut own = vec![None; g.edge_count()];
        let first = cfg.first_player;
        if go(g, cfg, s, &mut own, first, cfg.bias(first)) { Player::Maker } else { Player::Breaker }
    }

    #[test]
    fn spec_examples() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(minimax_solve(&k3, &GameConfig::new(1, 1), 3).unwrap(), Player::Maker);
        let k4 = complete_graph(4).unwrap();
        assert_eq!(minimax_solve(&k4, &GameConfig::new(1, 4), 3).unwrap(), Player::Breaker);
        let w = minimax_solve(&k4, &GameConfig::new(1, 1).first(Player::Breaker), 4).unwrap();
        assert_eq!(w, naive(&k4, &GameConfig::new(1, 1).first(Player::Breaker), 4));
    }

    #[test]
    fn agrees_with_naive_search() {
        let boards = [
            complete_graph(3).unwrap(),
            complete_graph(4).unwrap(),
            cycle_graph(5).unwrap(),
            cycle_graph(6).unwrap(),
            path_graph(5).unwrap(),
        ];
        for g in &boards {
            for (m, b) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
                for first in [Player::Maker, Player::Breaker] {
                    for s in 2..=g.n() {
                        let cfg = GameConfig::new(m, b).first(first);
                        assert_eq!(
                            minimax_solve(g, &cfg, s).unwrap(),
                            naive(g, &cfg, s),
                            "{m}:{b} {first:?} s={s} n={}",
                            g.n()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn guards() {
        assert!(minimax_solve(&petersen(), &GameConfig::new(1, 1), 3).is_ok());
        assert!(matches!(
            minimax_solve(&complete_graph(7).unwrap(), &GameConfig::new(1, 1), 3),
            Err(MinimaxError::TooLarge { edges: 21 })
        ));
        assert!(minimax_solve(&complete_graph(3).unwrap(), &GameConfig::new(1, 1), 1).is_err());
    }
}
