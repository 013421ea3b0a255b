//! The verification suite behind `mbgames verify`. Each check is also
//! available as a function so larger runs can reuse it.

use mbgames_core::analysis::{
    collision_length_bound, isoperimetric_profile, longest_directed_path_exact,
    longest_directed_path_structured, EXACT_LONGEST_PATH_MAX_N,
};
use mbgames_core::graph::{complete_graph, cycle_graph, path_graph, petersen, random_regular};
use mbgames_core::minimax::minimax_solve;
use mbgames_core::orientation::{short_orientation, verify_orientation};
use mbgames_core::strategy::CounterTreeBreaker;
use mbgames_core::{play, GameConfig, GameState, Graph, Owner, Player};
use serde::Serialize;

use crate::lineup::{maker, play_game};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    All,
    Orientation,
    Oracle,
    Formulas,
    Monitors,
    Bounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, result: Result<String, String>) -> SuiteCheck {
    match result {
        Ok(detail) => SuiteCheck { name: name.into(), passed: true, detail },
        Err(detail) => SuiteCheck { name: name.into(), passed: false, detail },
    }
}

/// Longest directed path of a short orientation of `g`: the structured
/// value, and the exhaustive value when `g` is small enough.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientationOutcome {
    pub structured: usize,
    pub exact: Option<usize>,
    pub certified_bound: usize,
}

/// Builds a short orientation, verifies its certificate, checks the bound
/// and compares with the exhaustive longest path for `n <= exact_up_to`.
pub fn orientation_check(g: &Graph, exact_up_to: usize) -> Result<OrientationOutcome, String> {
    let (o, cert) = short_orientation(g).map_err(|e| e.to_string())?;
    let report = verify_orientation(g, &o, &cert);
    if let Some(c) = report.failed().next() {
        return Err(format!("certificate check {} failed: {}", c.name, c.detail));
    }
    if o.min_out_degree() < 1 {
        return Err("a vertex has out-degree 0".into());
    }
    let structured = longest_directed_path_structured(&o, &cert).map_err(|e| e.to_string())?;
    if structured > cert.certified_bound {
        return Err(format!("longest path {structured} exceeds bound {}", cert.certified_bound));
    }
    let exact = if g.n() <= exact_up_to.min(EXACT_LONGEST_PATH_MAX_N) {
        let e = longest_directed_path_exact(&o).map_err(|e| e.to_string())?;
        if e != structured {
            return Err(format!("structured longest path {structured}, exhaustive {e}"));
        }
        Some(e)
    } else {
        None
    };
    Ok(OrientationOutcome { structured, exact, certified_bound: cert.certified_bound })
}

/// Bias monotonicity and first-player advantage of the exact solver on
/// `g` for target `s`, over `m, b` in `1..=max_bias`. Returns the number of
/// solved positions.
pub fn oracle_consistency(g: &Graph, s: usize, max_bias: usize) -> Result<usize, String> {
    let top = max_bias + 1;
    let mut win = vec![vec![[false; 2]; top + 1]; top + 1];
    let mut solved = 0;
    for m in 1..=top {
        for b in 1..=top {
            for (i, first) in [Player::Maker, Player::Breaker].into_iter().enumerate() {
                let cfg = GameConfig::new(m, b).first(first);
                let w = minimax_solve(g, &cfg, s).map_err(|e| e.to_string())?;
                win[m][b][i] = w == Player::Maker;
                solved += 1;
            }
        }
    }
    for m in 1..=max_bias {
        for b in 1..=max_bias {
            for i in 0..2 {
                let tag = if i == 0 { "Maker first" } else { "Breaker first" };
                if win[m][b][i] && !win[m + 1][b][i] {
                    return Err(format!("s={s}: Maker wins ({m}:{b}) but not ({}:{b}), {tag}", m + 1));
                }
                if win[m][b + 1][i] && !win[m][b][i] {
                    return Err(format!("s={s}: Maker wins ({m}:{}) but not ({m}:{b}), {tag}", b + 1));
                }
            }
            if win[m][b][1] && !win[m][b][0] {
                return Err(format!("s={s}: ({m}:{b}) Maker wins second but not first"));
            }
        }
    }
    Ok(solved)
}

/// `|E| / (b + 1)` rounded up must equal the rounds of a (1:b) game that
/// runs to the end.
pub fn round_count(g: &Graph, b: usize, seed: u64) -> Result<usize, String> {
    let run = play_game(g, GameConfig::new(1, b).seed(seed), "random", "random", &[], None)
        .map_err(|e| e.to_string())?;
    let want = g.edge_count().div_ceil(b + 1);
    if run.transcript.outcome.rounds != want {
        return Err(format!("{} rounds, expected {want}", run.transcript.outcome.rounds));
    }
    Ok(want)
}

/// Counter-tree Breaker against the tree Maker at `b = d - 2`. Maker must
/// forfeit, stay within the path family and within `d * 2 ceil(log_{d-1} n)`.
pub fn counter_tree_check(g: &Graph) -> Result<usize, String> {
    let d = g.min_degree();
    let mut st = GameState::new(g, GameConfig::new(1, d - 2)).map_err(|e| e.to_string())?;
    let mut tree = maker("tree", 0).map_err(|e| e.to_string())?;
    let mut breaker = CounterTreeBreaker::new();
    let t = play(&mut st, &mut tree, &mut breaker, &mut []).map_err(|e| e.to_string())?;
    let bound = d * collision_length_bound(d, g.n());
    if t.outcome.forfeited != Some(Player::Maker) {
        return Err("Maker did not forfeit".into());
    }
    if breaker.deviated() {
        return Err("tree Maker was flagged as deviating".into());
    }
    if t.outcome.max_component > bound {
        return Err(format!("component {} exceeds {bound}", t.outcome.max_component));
    }
    let family = breaker.family().ok_or("no path family")?;
    if let Some(e) = (0..g.edge_count()).find(|&e| st.owner(e) == Owner::Maker && !family.contains(e)) {
        return Err(format!("Maker edge {e} is outside the path family"));
    }
    Ok(t.outcome.max_component)
}

/// Every game given must finish with the named monitors silent and the
/// component bound met.
fn games(
    boards: &[(Graph, u64)],
    b_of: impl Fn(usize) -> usize,
    makers: &[&str],
    breaker: &str,
    monitors: &[&str],
    bound: impl Fn(&Graph, usize) -> usize,
) -> Result<String, String> {
    let monitors: Vec<String> = monitors.iter().map(|s| s.to_string()).collect();
    let mut played = 0;
    let mut largest = 0;
    for (g, seed) in boards {
        let d = g.max_degree();
        let b = b_of(d);
        let o = if breaker == "global" || monitors.iter().any(|m| m != "claim31") {
            Some(short_orientation(g).map_err(|e| e.to_string())?)
        } else {
            None
        };
        let limit = bound(g, b);
        for mk in makers {
            let cfg = GameConfig::new(1, b).seed(*seed);
            let run = play_game(g, cfg, mk, breaker, &monitors, o.as_ref().map(|(o, _)| o))
                .map_err(|e| format!("n={} d={d} seed={seed} {mk}: {e}", g.n()))?;
            let size = run.transcript.outcome.max_component;
            if size > limit {
                return Err(format!("n={} d={d} seed={seed} {mk}: component {size} > {limit}", g.n()));
            }
            played += 1;
            largest = largest.max(size);
        }
    }
    Ok(format!("{played} games, largest component {largest}"))
}

fn random_boards(ds: &[usize], n: usize, seeds: u64) -> Result<Vec<(Graph, u64)>, String> {
    let mut out = Vec::new();
    for &d in ds {
        for seed in 0..seeds {
            out.push((random_regular(n, d, seed).map_err(|e| e.to_string())?, seed));
        }
    }
    Ok(out)
}

const MAKERS: [&str; 3] = ["tree", "random", "greedy-merge"];

fn orientation_suite(out: &mut Vec<SuiteCheck>) {
    let run = || -> Result<String, String> {
        let mut count = 0;
        let mut exact = 0;
        for d in 3..=6 {
            for (i, n) in [20, 24, 30, 40, 60, 100].into_iter().enumerate() {
                let g = random_regular(n, d, 1000 + i as u64).map_err(|e| e.to_string())?;
                let r = orientation_check(&g, 40).map_err(|e| format!("n={n} d={d}: {e}"))?;
                count += 1;
                exact += usize::from(r.exact.is_some());
            }
        }
        Ok(format!("{count} graphs, {exact} compared exhaustively"))
    };
    out.push(check("orientation.short_orientations", run()));
}

fn oracle_suite(out: &mut Vec<SuiteCheck>) {
    let run = || -> Result<String, String> {
        let mut boards = vec![complete_graph(3).unwrap(), complete_graph(4).unwrap()];
        boards.extend((4..=6).map(|n| cycle_graph(n).unwrap()));
        boards.push(path_graph(6).unwrap());
        let mut solved = 0;
        for g in &boards {
            for s in [3, 4] {
                solved += oracle_consistency(g, s, 2)?;
            }
        }
        Ok(format!("{solved} positions solved"))
    };
    out.push(check("oracle.monotonicity", run()));
    let k4 = || -> Result<String, String> {
        let g = complete_graph(4).unwrap();
        let w = minimax_solve(&g, &GameConfig::new(1, 4), 3).map_err(|e| e.to_string())?;
        if w != Player::Breaker {
            return Err(format!("oracle says {w:?} for K4 (1:4), s=3"));
        }
        let boards: Vec<(Graph, u64)> = (0..10).map(|s| (g.clone(), s)).collect();
        games(&boards, |_| 4, &MAKERS, "reactive", &[], |_, _| 2)
    };
    out.push(check("oracle.k4_heavy_bias", k4()));
}

fn formula_suite(out: &mut Vec<SuiteCheck>) {
    let psi = || -> Result<String, String> {
        for size in 4..=10usize {
            let g = complete_graph(size).unwrap();
            let kmax = (size - 1) / 2;
            let p = isoperimetric_profile(&g, kmax).map_err(|e| e.to_string())?;
            for k in 1..=kmax {
                let v = p.get(k).unwrap();
                if *v.denom() != 1 || *v.numer() != (size - k) as u64 {
                    return Err(format!("K{size}, k={k}: got {v}, expected {}", size - k));
                }
            }
        }
        Ok("K4..K10".into())
    };
    out.push(check("formulas.profile_of_complete_graphs", psi()));
    let rounds = || -> Result<String, String> {
        let pairs = [
            (complete_graph(4).unwrap(), 1),
            (complete_graph(5).unwrap(), 2),
            (cycle_graph(7).unwrap(), 1),
            (petersen(), 2),
            (petersen(), 4),
        ];
        for (i, (g, b)) in pairs.iter().enumerate() {
            round_count(g, *b, i as u64)?;
        }
        Ok(format!("{} boards", pairs.len()))
    };
    out.push(check("formulas.round_count", rounds()));
}

fn monitor_suite(out: &mut Vec<SuiteCheck>, inject_fault: bool) {
    let reactive = if inject_fault { "sabotaged[away]" } else { "reactive" };
    let claim31 = || -> Result<String, String> {
        let boards = random_boards(&[3, 4, 5], 60, 3)?;
        let mut summary = Vec::new();
        for (label, bias) in [("d-2", 0usize), ("d-1", 1), ("2d-2", 2)] {
            let b_of = |d: usize| match bias {
                0 => d - 2,
                1 => d - 1,
                _ => 2 * d - 2,
            };
            let r = games(&boards, b_of, &MAKERS, reactive, &["claim31"], |_, _| usize::MAX)?;
            summary.push(format!("b={label}: {r}"));
        }
        Ok(summary.join("; "))
    };
    out.push(check("monitors.claim31", claim31()));
    let boards = random_boards(&[3, 4], 80, 3);
    for (name, monitor) in [
        ("monitors.directed_tree", "directed_tree"),
        ("monitors.out_arc_height", "out_arc_height"),
        ("monitors.width", "width"),
    ] {
        let r = boards.clone().and_then(|boards| {
            games(&boards, |d| d - 2, &MAKERS, "global", &[monitor], |_, _| usize::MAX)
        });
        out.push(check(name, r));
    }
    let controls = || -> Result<String, String> {
        let g = random_regular(40, 4, 2).map_err(|e| e.to_string())?;
        let (o, _) = short_orientation(&g).map_err(|e| e.to_string())?;
        for (mk, breaker, monitors, o) in [
            ("tree", "sabotaged[away]", vec!["claim31".to_string()], None),
            ("random", "sabotaged[inverted]", vec!["directed_tree".to_string(), "width".to_string()], Some(&o)),
        ] {
            match play_game(&g, GameConfig::new(1, 2), mk, breaker, &monitors, o) {
                Err(crate::LineupError::Play(mbgames_core::PlayError::Monitor(_))) => {}
                Err(e) => return Err(format!("{breaker}: unexpected error {e}")),
                Ok(_) => return Err(format!("{breaker}: no monitor fired")),
            }
        }
        Ok("both sabotaged Breakers detected".into())
    };
    out.push(check("monitors.negative_controls", controls()));
}

fn bounds_suite(out: &mut Vec<SuiteCheck>) {
    let prop11 = || -> Result<String, String> {
        let mut last = String::new();
        for k in [1usize, 2, 3] {
            let boards = random_boards(&[3], 50, 3)?;
            last = games(&boards, |d| d - 2 + k, &MAKERS, "reactive", &[], |g, b| {
                let d = g.max_degree();
                2 * d.div_ceil(b + 2 - d)
            })?;
        }
        Ok(last)
    };
    out.push(check("bounds.prop1_1", prop11()));
    let prop34 = || -> Result<String, String> {
        let mut largest = 0;
        for seed in 0..10 {
            let g = random_regular(50, 3, seed).map_err(|e| e.to_string())?;
            largest = largest.max(counter_tree_check(&g).map_err(|e| format!("seed {seed}: {e}"))?);
        }
        Ok(format!("10 games, largest component {largest}"))
    };
    out.push(check("bounds.prop3_4", prop34()));
    let thm12 = || -> Result<String, String> {
        let boards = random_boards(&[4], 300, 2)?;
        games(&boards, |d| d - 2, &MAKERS, "global", &[], |g, _| {
            let d = g.max_degree();
            let (_, cert) = short_orientation(g).unwrap();
            1 + cert.certified_bound * (2 * d - 2)
        })
    };
    out.push(check("bounds.thm1_2", thm12()));
}

/// Runs the checks in `scope`. With `inject_fault`, the Claim 3.1 suite
/// plays a sabotaged Breaker in place of the reactive one.
pub fn run(scope: Scope, inject_fault: bool) -> Vec<SuiteCheck> {
    let mut out = Vec::new();
    let all = scope == Scope::All;
    if all || scope == Scope::Orientation {
        orientation_suite(&mut out);
    }
    if all || scope == Scope::Oracle {
        oracle_suite(&mut out);
    }
    if all || scope == Scope::Formulas {
        formula_suite(&mut out);
    }
    if all || scope == Scope::Monitors {
        monitor_suite(&mut out, inject_fault);
    }
    if all || scope == Scope::Bounds {
        bounds_suite(&mut out);
    }
    out
}
