//! Plays two strategies against each other and records the game.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::game::{GameConfig, GameError, GameState, Player};
use crate::graph::{EdgeId, Graph};
use crate::strategy::monitors::{Monitor, Violation};
use crate::strategy::{Decision, Strategy};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Header {
    pub graph_hash: String,
    pub n: usize,
    pub m_edges: usize,
    pub m: usize,
    pub b: usize,
    pub first: Player,
    pub maker: String,
    pub breaker: String,
    pub seed: u64,
    pub target: Option<usize>,
}

/// One complete (or forfeited, possibly empty) move.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MoveRecord {
    pub round: usize,
    pub player: Player,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Outcome {
    pub max_component: usize,
    pub rounds: usize,
    pub forfeited: Option<Player>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub header: Header,
    pub moves: Vec<MoveRecord>,
    pub outcome: Outcome,
}

/// A transcript line, for line-delimited storage.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "record", rename_all = "lowercase"))]
pub enum Record {
    Header(Header),
    Move(MoveRecord),
    Outcome(Outcome),
}

impl Transcript {
    pub fn records(&self) -> Vec<Record> {
        let mut out = Vec::with_capacity(self.moves.len() + 2);
        out.push(Record::Header(self.header.clone()));
        out.extend(self.moves.iter().cloned().map(Record::Move));
        out.push(Record::Outcome(self.outcome));
        out
    }

    /// Inverse of [`Transcript::records`]; `None` unless the records are a
    /// header, any number of moves, then an outcome.
    pub fn from_records(records: Vec<Record>) -> Option<Self> {
        let mut it = records.into_iter();
        let Some(Record::Header(header)) = it.next() else {
            return None;
        };
        let mut moves = Vec::new();
        for r in it {
            match r {
                Record::Move(m) => moves.push(m),
                Record::Outcome(outcome) => return Some(Transcript { header, moves, outcome }),
                Record::Header(_) => return None,
            }
        }
        None
    }

    pub fn config(&self) -> GameConfig {
        let h = &self.header;
        GameConfig {
            m: h.m,
            b: h.b,
            first_player: h.first,
            target_s: h.target,
            seed: h.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlayError {
    #[error("{strategy} made an illegal step: {source}")]
    IllegalStep { strategy: String, source: GameError },
    #[error("{strategy} claimed nothing while edges were free")]
    EmptyClaim { strategy: String },
    #[error("{strategy} claimed {claimed} edges with {allowed} steps left")]
    TooManySteps { strategy: String, claimed: usize, allowed: usize },
    #[error("monitor {0}")]
    Monitor(Violation),
    #[error("replay diverged: {0}")]
    ReplayMismatch(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

fn outcome(st: &GameState<'_>) -> Outcome {
    let last = st.history().last().map_or(0, |s| s.round);
    let rounds = if st.forfeited().is_some() { st.round().max(last) } else { last };
    Outcome { max_component: st.max_component_size(), rounds, forfeited: st.forfeited() }
}

fn run_monitors(
    st: &GameState<'_>,
    monitors: &mut [Box<dyn Monitor + '_>],
) -> Result<(), PlayError> {
    for m in monitors.iter_mut() {
        m.check(st).map_err(PlayError::Monitor)?;
    }
    Ok(())
}

/// Plays `state` to the end. Monitors run after every complete Breaker move
/// and once more when the game ends.
pub fn play(
    state: &mut GameState<'_>,
    maker: &mut dyn Strategy,
    breaker: &mut dyn Strategy,
    monitors: &mut [Box<dyn Monitor + '_>],
) -> Result<Transcript, PlayError> {
    let cfg = *state.config();
    let g = state.graph();
    let header = Header {
        graph_hash: format!("{:016x}", g.fingerprint()),
        n: g.n(),
        m_edges: g.edge_count(),
        m: cfg.m,
        b: cfg.b,
        first: cfg.first_player,
        maker: maker.name(),
        breaker: breaker.name(),
        seed: cfg.seed,
        target: cfg.target_s,
    };
    let mut moves = Vec::new();
    while !state.is_over() {
        let player = state.turn();
        let round = state.round();
        let strategy: &mut dyn Strategy = match player {
            Player::Maker => &mut *maker,
            Player::Breaker => &mut *breaker,
        };
        let mut edges = Vec::new();
        while !state.is_over() && state.turn() == player && state.round() == round {
            let steps = state.steps_left();
            match strategy.decide(state, steps) {
                Decision::Forfeit => {
                    state.forfeit(player)?;
                }
                Decision::Claim(claim) => {
                    if claim.is_empty() {
                        return Err(PlayError::EmptyClaim { strategy: strategy.name() });
                    }
                    if claim.len() > steps {
                        return Err(PlayError::TooManySteps {
                            strategy: strategy.name(),
                            claimed: claim.len(),
                            allowed: steps,
                        });
                    }
                    for e in claim {
                        state.apply_step(player, e).map_err(|source| PlayError::IllegalStep {
                            strategy: strategy.name(),
                            source,
                        })?;
                        edges.push(e);
                        if state.is_over() {
                            break;
                        }
                    }
                }
            }
        }
        moves.push(MoveRecord { round, player, edges });
        if player == Player::Breaker && !state.is_over() {
            run_monitors(state, monitors)?;
        }
    }
    run_monitors(state, monitors)?;
    Ok(Transcript { header, moves, outcome: outcome(state) })
}

/// Replays `t` on a fresh game over `g` and checks the recorded outcome.
pub fn replay<'g>(g: &'g Graph, t: &Transcript) -> Result<GameState<'g>, PlayError> {
    let hash = format!("{:016x}", g.fingerprint());
    if hash != t.header.graph_hash {
        return Err(PlayError::ReplayMismatch(format!(
            "graph hash {hash}, transcript has {}",
            t.header.graph_hash
        )));
    }
    let mut st = GameState::new(g, t.config())?;
    for mv in &t.moves {
        if st.round() != mv.round {
            return Err(PlayError::ReplayMismatch(format!(
                "move recorded in round {} replayed in round {}",
                mv.round,
                st.round()
            )));
        }
        for &e in &mv.edges {
            st.apply_step(mv.player, e)?;
        }
    }
    if let Some(p) = t.outcome.forfeited {
        st.forfeit(p)?;
    }
    let got = outcome(&st);
    if got != t.outcome {
        return Err(PlayError::ReplayMismatch(format!(
            "outcome {got:?}, transcript has {:?}",
            t.outcome
        )));
    }
    Ok(st)
}
