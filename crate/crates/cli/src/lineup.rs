//! Strategies and monitors by name, and a one-call game runner.
//!
//! Maker names: `tree`, `tree[root=R]`, `random`, `random[seed=S]`,
//! `greedy-merge`. Breaker names: `reactive`, `counter-tree`, `global`,
//! `random`, `random[seed=S]`, `sabotaged[away]`, `sabotaged[inverted]`.
//! A bare `random` draws from the game seed (Breaker uses a derived stream).
//!
//! Monitor names: `claim31`, `directed_tree`, `out_arc_height`, `width`,
//! plus the group `tree` for the last three.

use std::time::Instant;

use mbgames_core::game::GameState;
use mbgames_core::play::{play, PlayError, Transcript};
use mbgames_core::strategy::monitors::{
    Claim31Monitor, DirectedTreeMonitor, Monitor, OutArcHeightMonitor, WidthMonitor,
};
use mbgames_core::strategy::{
    CounterTreeBreaker, GlobalBreaker, GreedyMergeMaker, RandomStrategy, ReactiveBreaker,
    Sabotage, SabotagedBreaker, Strategy, TreeMaker,
};
use mbgames_core::{GameConfig, GameError, Graph, Orientation, Player};

const BREAKER_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Debug, thiserror::Error)]
pub enum LineupError {
    #[error("unknown {role} strategy {name:?}")]
    UnknownStrategy { role: &'static str, name: String },
    #[error("unknown monitor {0:?}")]
    UnknownMonitor(String),
    #[error("{0} needs an orientation of the graph")]
    NeedsOrientation(String),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Play(#[from] PlayError),
}

fn bracket<'a>(name: &'a str, base: &str, key: &str) -> Option<&'a str> {
    name.strip_prefix(base)?
        .strip_prefix('[')?
        .strip_suffix(']')?
        .strip_prefix(key)?
        .strip_prefix('=')
}

pub fn maker(name: &str, seed: u64) -> Result<Box<dyn Strategy>, LineupError> {
    let unknown = || LineupError::UnknownStrategy { role: "Maker", name: name.into() };
    Ok(match name {
        "tree" => Box::new(TreeMaker::default()),
        "random" => Box::new(RandomStrategy::new(seed)),
        "greedy-merge" => Box::new(GreedyMergeMaker::new()),
        _ => {
            if let Some(r) = bracket(name, "tree", "root") {
                Box::new(TreeMaker::new(r.parse().map_err(|_| unknown())?))
            } else if let Some(s) = bracket(name, "random", "seed") {
                Box::new(RandomStrategy::new(s.parse().map_err(|_| unknown())?))
            } else {
                return Err(unknown());
            }
        }
    })
}

pub fn breaker(
    name: &str,
    seed: u64,
    orientation: Option<&Orientation>,
) -> Result<Box<dyn Strategy>, LineupError> {
    let unknown = || LineupError::UnknownStrategy { role: "Breaker", name: name.into() };
    Ok(match name {
        "reactive" => Box::new(ReactiveBreaker::new()),
        "counter-tree" => Box::new(CounterTreeBreaker::new()),
        "global" => match orientation {
            Some(o) => Box::new(GlobalBreaker::new(o)),
            None => return Err(LineupError::NeedsOrientation(name.into())),
        },
        "random" => Box::new(RandomStrategy::new(seed ^ BREAKER_STREAM)),
        "sabotaged[away]" => Box::new(SabotagedBreaker::new(Sabotage::AwayFromTouched)),
        "sabotaged[inverted]" => Box::new(SabotagedBreaker::new(Sabotage::InvertedHeights)),
        _ => match bracket(name, "random", "seed") {
            Some(s) => Box::new(RandomStrategy::new(s.parse().map_err(|_| unknown())?)),
            None => return Err(unknown()),
        },
    })
}

fn expand(monitors: &[String]) -> Vec<&str> {
    let mut out = Vec::new();
    for m in monitors {
        match m.as_str() {
            "tree" => out.extend(["directed_tree", "out_arc_height", "width"]),
            "" => {}
            other => out.push(other),
        }
    }
    out
}

pub fn monitors(
    names: &[String],
    g: &Graph,
    cfg: &GameConfig,
) -> Result<Vec<Box<dyn Monitor>>, LineupError> {
    let d = g.max_degree();
    expand(names)
        .into_iter()
        .map(|name| -> Result<Box<dyn Monitor>, LineupError> {
            Ok(match name {
                "claim31" => Box::new(Claim31Monitor::new(d, cfg.b)),
                "directed_tree" => Box::new(DirectedTreeMonitor::new()),
                "out_arc_height" => Box::new(OutArcHeightMonitor::new()),
                "width" => Box::new(WidthMonitor::new(d)),
                other => return Err(LineupError::UnknownMonitor(other.into())),
            })
        })
        .collect()
}

/// True when the Breaker or one of the monitors works on an orientation.
pub fn needs_orientation(breaker: &str, monitors: &[String]) -> bool {
    breaker == "global"
        || breaker == "sabotaged[inverted]"
        || expand(monitors).iter().any(|m| *m != "claim31")
}

#[derive(Debug, Clone)]
pub struct GameRun {
    pub transcript: Transcript,
    pub wall_time_ms: f64,
}

/// Plays one game. The game runs in oriented mode whenever `orientation`
/// is given.
pub fn play_game(
    g: &Graph,
    cfg: GameConfig,
    maker_name: &str,
    breaker_name: &str,
    monitor_names: &[String],
    orientation: Option<&Orientation>,
) -> Result<GameRun, LineupError> {
    if orientation.is_none() && needs_orientation(breaker_name, monitor_names) {
        return Err(LineupError::NeedsOrientation(breaker_name.into()));
    }
    let mut mk = maker(maker_name, cfg.seed)?;
    let mut br = breaker(breaker_name, cfg.seed, orientation)?;
    let mut mons = monitors(monitor_names, g, &cfg)?;
    let start = Instant::now();
    let mut st = match orientation {
        Some(o) => GameState::new_oriented(g, cfg, o)?,
        None => GameState::new(g, cfg)?,
    };
    let transcript = play(&mut st, &mut mk, &mut br, &mut mons)?;
    Ok(GameRun { transcript, wall_time_ms: start.elapsed().as_secs_f64() * 1e3 })
}

pub fn parse_player(s: &str) -> Option<Player> {
    match s.to_ascii_lowercase().as_str() {
        "maker" => Some(Player::Maker),
        "breaker" => Some(Player::Breaker),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbgames_core::graph::complete_graph;

    #[test]
    fn names_round_trip() {
        for name in ["tree[root=0]", "random[seed=7]", "greedy-merge"] {
            assert_eq!(maker(name, 7).unwrap().name(), name);
        }
        assert_eq!(maker("tree", 0).unwrap().name(), "tree[root=0]");
        assert_eq!(breaker("reactive", 0, None).unwrap().name(), "reactive");
        assert!(matches!(breaker("global", 0, None), Err(LineupError::NeedsOrientation(_))));
        assert!(maker("reactive", 0).is_err());
        assert!(maker("tree[root=x]", 0).is_err());
    }

    #[test]
    fn plays_on_k4() {
        let g = complete_graph(4).unwrap();
        let run = play_game(&g, GameConfig::new(1, 4), "random", "reactive", &["claim31".into()], None)
            .unwrap();
        assert_eq!(run.transcript.outcome.max_component, 2);
        assert!(play_game(&g, GameConfig::new(1, 1), "tree", "reactive", &["width".into()], None).is_err());
    }
}
