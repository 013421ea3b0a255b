use mbgames_core::analysis::collision_length_bound;
use mbgames_core::game::GameState;
use mbgames_core::graph::{complete_graph, petersen, random_regular, Graph};
use mbgames_core::minimax::minimax_solve;
use mbgames_core::orientation::short_orientation;
use mbgames_core::play::{play, replay, PlayError};
use mbgames_core::strategy::monitors::{
    Claim31Monitor, DirectedTreeMonitor, Monitor, OutArcHeightMonitor, Violation, WidthMonitor,
};
use mbgames_core::strategy::{
    CounterTreeBreaker, Decision, GlobalBreaker, GreedyMergeMaker, RandomStrategy,
    ReactiveBreaker, Sabotage, SabotagedBreaker, Strategy, TreeMaker,
};
use mbgames_core::{GameConfig, Owner, Player};

/// Compares incremental component tracking against a rebuild.
struct Bookkeeping;

impl Monitor for Bookkeeping {
    fn name(&self) -> &'static str {
        "bookkeeping"
    }

    fn check(&mut self, st: &GameState<'_>) -> Result<(), Violation> {
        if st.tracked_components() == st.recompute_components() {
            Ok(())
        } else {
            Err(Violation { monitor: "bookkeeping", round: st.round(), detail: String::new() })
        }
    }
}

fn makers(seed: u64) -> Vec<Box<dyn Strategy>> {
    vec![
        Box::new(TreeMaker::default()),
        Box::new(RandomStrategy::new(seed)),
        Box::new(GreedyMergeMaker::new()),
    ]
}

#[test]
fn triangle_tree_maker_reaches_three() {
    let g = complete_graph(3).unwrap();
    let cfg = GameConfig::new(1, 1).target(3);
    let mut st = GameState::new(&g, cfg).unwrap();
    let t = play(&mut st, &mut TreeMaker::default(), &mut ReactiveBreaker::new(), &mut []).unwrap();
    assert_eq!(t.outcome.max_component, 3);
    assert_eq!(t.outcome.forfeited, None);
}

#[test]
fn k4_heavy_bias_isolates_every_maker_edge() {
    let g = complete_graph(4).unwrap();
    let cfg = GameConfig::new(1, 4);
    assert_eq!(minimax_solve(&g, &cfg, 3).unwrap(), Player::Breaker);
    for seed in 0..20 {
        for mut maker in makers(seed) {
            let mut st = GameState::new(&g, cfg.seed(seed)).unwrap();
            let t = play(&mut st, &mut maker, &mut ReactiveBreaker::new(), &mut []).unwrap();
            assert_eq!(t.outcome.max_component, 2, "{}", maker.name());
        }
    }
}

#[test]
fn k4_one_one_lasts_three_rounds() {
    let g = complete_graph(4).unwrap();
    let mut st = GameState::new(&g, GameConfig::new(1, 1)).unwrap();
    let t = play(&mut st, &mut RandomStrategy::new(3), &mut RandomStrategy::new(4), &mut []).unwrap();
    assert_eq!(t.outcome.rounds, 3);
    assert_eq!(t.moves.len(), 6);
}

#[test]
fn reactive_keeps_components_small() {
    for d in 3..=5usize {
        for k in [1, 2, d] {
            let b = d - 2 + k;
            let bound = 2 * d.div_ceil(k);
            for seed in 0..5u64 {
                let g = random_regular(50, d, seed).unwrap();
                for mut maker in makers(seed) {
                    let mut st = GameState::new(&g, GameConfig::new(1, b).seed(seed)).unwrap();
                    let mut monitors: Vec<Box<dyn Monitor>> =
                        vec![Box::new(Claim31Monitor::new(d, b)), Box::new(Bookkeeping)];
                    let t = play(&mut st, &mut maker, &mut ReactiveBreaker::new(), &mut monitors)
                        .unwrap();
                    assert!(t.outcome.max_component <= bound, "d={d} k={k} {}", maker.name());
                }
            }
        }
    }
}

#[test]
fn reactive_with_maker_bias_two() {
    let m = 2;
    for d in 3..=4usize {
        for k in [1, 2, d] {
            let b = m * (d - 2) + k;
            let bound = (m + 1) * (m * d).div_ceil(k);
            for seed in 0..5u64 {
                let g = random_regular(50, d, seed).unwrap();
                for mut maker in makers(seed) {
                    let mut st = GameState::new(&g, GameConfig::new(m, b).seed(seed)).unwrap();
                    let t = play(&mut st, &mut maker, &mut ReactiveBreaker::new(), &mut []).unwrap();
                    assert!(t.outcome.max_component <= bound);
                }
            }
        }
    }
}

#[test]
fn counter_tree_contains_tree_maker() {
    for seed in 0..10u64 {
        let g = random_regular(50, 3, seed).unwrap();
        let mut st = GameState::new(&g, GameConfig::new(1, 1)).unwrap();
        let mut breaker = CounterTreeBreaker::new();
        let t = play(&mut st, &mut TreeMaker::default(), &mut breaker, &mut []).unwrap();
        assert_eq!(t.outcome.forfeited, Some(Player::Maker));
        assert!(t.outcome.max_component <= 3 * collision_length_bound(3, 50));
        assert!(!breaker.deviated());
        let family = breaker.family().unwrap();
        for (e, &o) in st.owners().iter().enumerate() {
            if o == Owner::Maker {
                assert!(family.contains(e));
            }
        }
    }
}

#[test]
fn counter_tree_falls_back_against_random() {
    let g = random_regular(30, 3, 1).unwrap();
    let mut st = GameState::new(&g, GameConfig::new(1, 1)).unwrap();
    let mut breaker = CounterTreeBreaker::new();
    play(&mut st, &mut RandomStrategy::new(5), &mut breaker, &mut []).unwrap();
    assert!(breaker.deviated() && breaker.fell_back());
}

fn global_monitors(d: usize) -> Vec<Box<dyn Monitor>> {
    vec![
        Box::new(DirectedTreeMonitor::new()),
        Box::new(WidthMonitor::new(d)),
        Box::new(Bookkeeping),
    ]
}

#[test]
fn global_breaker_respects_structure_and_bound() {
    for (n, d) in [(60, 3), (200, 4), (100, 5)] {
        for seed in 0..4u64 {
            let g = random_regular(n, d, seed).unwrap();
            let (o, cert) = short_orientation(&g).unwrap();
            let bound = 1 + cert.certified_bound * (2 * d - 2);
            for first in [Player::Maker, Player::Breaker] {
                for mut maker in makers(seed) {
                    let cfg = GameConfig::new(1, d - 2).first(first).seed(seed);
                    let mut st = GameState::new_oriented(&g, cfg, &o).unwrap();
                    let t = play(&mut st, &mut maker, &mut GlobalBreaker::new(&o), &mut global_monitors(d))
                        .unwrap_or_else(|e| panic!("n={n} d={d} seed={seed} {}: {e}", maker.name()));
                    assert!(t.outcome.max_component <= bound);
                }
            }
        }
    }
}

#[test]
fn out_arc_heights_hold_against_tree_maker() {
    for (n, d) in [(60, 3), (200, 4)] {
        for seed in 0..4u64 {
            let g = random_regular(n, d, seed).unwrap();
            let (o, _) = short_orientation(&g).unwrap();
            let mut st = GameState::new_oriented(&g, GameConfig::new(1, d - 2), &o).unwrap();
            let mut monitors: Vec<Box<dyn Monitor>> = vec![Box::new(OutArcHeightMonitor::new())];
            play(&mut st, &mut TreeMaker::default(), &mut GlobalBreaker::new(&o), &mut monitors).unwrap();
        }
    }
}

// An in-arc Breaker must take for the tree Maker just built can be a high
// out-arc of an unrelated tree whose lower out-arcs are still free.
#[test]
fn out_arc_heights_fail_for_arcs_taken_as_in_arcs_elsewhere() {
    let g = random_regular(60, 3, 0).unwrap();
    let (o, _) = short_orientation(&g).unwrap();
    let mut st = GameState::new_oriented(&g, GameConfig::new(1, 1), &o).unwrap();
    let mut monitors: Vec<Box<dyn Monitor>> = vec![Box::new(OutArcHeightMonitor::new())];
    let err = play(&mut st, &mut RandomStrategy::new(0), &mut GlobalBreaker::new(&o), &mut monitors)
        .unwrap_err();
    let PlayError::Monitor(v) = err else { panic!("{err}") };
    assert_eq!(v.monitor, "out_arc_height");
    let last = *st.history().last().unwrap();
    assert_eq!(last.player, Player::Breaker);
    let (x, y) = o.arc(last.edge);
    // Breaker answered Maker's merge by taking an arc into the new tree...
    assert_eq!(st.component_of(y), st.last_touched().unwrap());
    // ...whose tail sits above a free out-arc of its own tree.
    let tail_tree = st.component_of(x);
    assert_ne!(tail_tree, st.component_of(y));
    let lowest_free = st
        .free_incident_edges(tail_tree)
        .iter()
        .filter(|&&e| st.component_of(o.tail(e)) == tail_tree)
        .map(|&e| st.height(o.tail(e)))
        .min()
        .unwrap();
    assert!(lowest_free < st.height(x));
}

#[test]
fn sabotaged_breakers_trip_monitors() {
    let g = random_regular(40, 4, 2).unwrap();
    let mut st = GameState::new(&g, GameConfig::new(1, 2)).unwrap();
    let mut monitors: Vec<Box<dyn Monitor>> = vec![Box::new(Claim31Monitor::new(4, 2))];
    let err = play(
        &mut st,
        &mut TreeMaker::default(),
        &mut SabotagedBreaker::new(Sabotage::AwayFromTouched),
        &mut monitors,
    )
    .unwrap_err();
    assert!(matches!(err, PlayError::Monitor(ref v) if v.monitor == "claim31"), "{err}");

    let (o, _) = short_orientation(&g).unwrap();
    let mut st = GameState::new_oriented(&g, GameConfig::new(1, 2), &o).unwrap();
    let mut monitors = global_monitors(4);
    monitors.push(Box::new(OutArcHeightMonitor::new()));
    let err = play(
        &mut st,
        &mut TreeMaker::default(),
        &mut SabotagedBreaker::new(Sabotage::InvertedHeights),
        &mut monitors,
    )
    .unwrap_err();
    assert!(matches!(err, PlayError::Monitor(_)), "{err}");
}

#[test]
fn tree_monitors_need_orientation() {
    let g = petersen();
    let mut st = GameState::new(&g, GameConfig::new(1, 1)).unwrap();
    let mut monitors: Vec<Box<dyn Monitor>> = vec![Box::new(DirectedTreeMonitor::new())];
    let err = play(&mut st, &mut TreeMaker::default(), &mut ReactiveBreaker::new(), &mut monitors);
    assert!(matches!(err, Err(PlayError::Monitor(_))));
}

fn run(g: &Graph, seed: u64) -> mbgames_core::Transcript {
    let mut st = GameState::new(g, GameConfig::new(1, 1).seed(seed)).unwrap();
    play(&mut st, &mut RandomStrategy::new(seed), &mut RandomStrategy::new(seed + 1), &mut []).unwrap()
}

#[test]
fn transcripts_are_deterministic_and_replay() {
    let g = random_regular(30, 3, 9).unwrap();
    for seed in 0..5 {
        let a = run(&g, seed);
        assert_eq!(a, run(&g, seed));
        let st = replay(&g, &a).unwrap();
        assert_eq!(st.max_component_size(), a.outcome.max_component);
    }
    let mut st = GameState::new(&g, GameConfig::new(1, 1)).unwrap();
    let t = play(&mut st, &mut TreeMaker::default(), &mut CounterTreeBreaker::new(), &mut []).unwrap();
    let again = replay(&g, &t).unwrap();
    assert_eq!(again.owners(), st.owners());

    let mut tampered = t.clone();
    tampered.outcome.max_component += 1;
    assert!(matches!(replay(&g, &tampered), Err(PlayError::ReplayMismatch(_))));
}

struct Greedy(usize);

impl Strategy for Greedy {
    fn name(&self) -> String {
        "overclaim".into()
    }

    fn decide(&mut self, st: &GameState<'_>, _steps: usize) -> Decision {
        Decision::Claim((0..st.graph().edge_count()).filter(|&e| st.is_free(e)).take(self.0).collect())
    }
}

#[test]
fn illegal_claims_are_attributed() {
    let g = complete_graph(4).unwrap();
    let mut st = GameState::new(&g, GameConfig::new(1, 1)).unwrap();
    let err = play(&mut st, &mut Greedy(2), &mut ReactiveBreaker::new(), &mut []).unwrap_err();
    assert!(matches!(err, PlayError::TooManySteps { claimed: 2, allowed: 1, .. }));
    let mut st = GameState::new(&g, GameConfig::new(1, 1)).unwrap();
    let err = play(&mut st, &mut Greedy(0), &mut ReactiveBreaker::new(), &mut []).unwrap_err();
    assert!(matches!(err, PlayError::EmptyClaim { .. }));
}
