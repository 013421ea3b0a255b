use std::path::Path;
use std::process::{Command, Output};

use mbgames::CSV_HEADER;

fn mbgames(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbgames")).args(args).output().unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a.el"), path(dir.path(), "b.el"));
    for p in [&a, &b] {
        let out = mbgames(&["gen", "--n", "100", "--d", "4", "--seed", "7", "-o", p]);
        assert!(out.status.success());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("100 200\n"));
}

#[test]
fn orient_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (g, o, c) = (path(dir.path(), "g.el"), path(dir.path(), "g.or"), path(dir.path(), "g.cert"));
    assert!(mbgames(&["gen", "--n", "60", "--d", "5", "--seed", "3", "-o", &g]).status.success());
    assert!(mbgames(&["orient", "-i", &g, "-o", &o, "--cert", &c]).status.success());
    let out = mbgames(&["verify", "-i", &g, "--orientation", &o, "--cert", &c]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));

    // Reverse one arc: the certificate no longer describes the orientation.
    let text = std::fs::read_to_string(&o).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let (u, v) = lines[1].split_once(' ').unwrap();
    lines[1] = format!("{v} {u}");
    std::fs::write(&o, lines.join("\n") + "\n").unwrap();
    let out = mbgames(&["verify", "-i", &g, "--orientation", &o, "--cert", &c]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn oracle_on_k4() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = path(dir.path(), "k4.el");
    std::fs::write(&k4, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let out = mbgames(&["oracle", "-i", &k4, "--mb", "1:4", "--first", "maker", "--target", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Breaker");
}

#[test]
fn play_writes_replayable_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let (g, t) = (path(dir.path(), "g.el"), path(dir.path(), "t.jsonl"));
    assert!(mbgames(&["gen", "--n", "50", "--d", "4", "--seed", "1", "-o", &g]).status.success());
    let out = mbgames(&[
        "play", "-i", &g, "--mb", "1:2", "--maker", "random", "--breaker", "global", "--monitors",
        "directed_tree,width", "--seed", "4", "-o", &t,
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&t).unwrap();
    assert!(text.lines().next().unwrap().contains("\"record\":\"header\""));
    assert!(text.lines().last().unwrap().contains("\"record\":\"outcome\""));
    assert!(mbgames(&["verify", "-i", &g, "--transcript", &t]).status.success());

    let tampered = text.replacen("\"max_component\":", "\"max_component\":1", 1);
    std::fs::write(&t, tampered).unwrap();
    assert_eq!(mbgames(&["verify", "-i", &g, "--transcript", &t]).status.code(), Some(1));
}

#[test]
fn monitor_violation_exits_one() {
    let out = mbgames(&[
        "play", "--n", "40", "--d", "4", "--seed", "2", "--mb", "1:2", "--breaker", "sabotaged[away]",
        "--monitors", "claim31",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("claim31"));
}

#[test]
fn sweep_csv() {
    let out = mbgames(&["sweep", "--n", "30", "--d", "3", "--b", "1,4", "--seeds", "0..0"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), format!("{CSV_HEADER}\n"));

    let run = |jobs: &str| {
        let out = mbgames(&[
            "sweep", "--n", "40", "--d", "4", "--b", "1..5", "--seeds", "0..4", "--makers",
            "tree,random,greedy-merge", "--jobs", jobs,
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        // Drop the wall time column.
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect::<Vec<_>>()
    };
    let one = run("1");
    assert_eq!(one.len(), 1 + 4 * 4 * 3);
    assert_eq!(one, run("4"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mbgames(&["play", "--mb", "1-1", "--n", "10", "--d", "3"]).status.code(), Some(2));
    assert_eq!(mbgames(&["gen", "--n", "5", "--d", "3"]).status.code(), Some(2));
    assert_eq!(mbgames(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mbgames(&["play", "--n", "10", "--d", "3", "--maker", "nobody"]).status.code(), Some(2));
}

#[test]
fn suite_scopes_and_fault_injection() {
    let out = mbgames(&["verify", "--scope", "orientation"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{stdout}");
    assert!(stdout.lines().all(|l| l.contains(" orientation.")));

    let out = mbgames(&["verify", "--scope", "monitors", "--inject-fault", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let checks: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let claim31 = checks.as_array().unwrap().iter().find(|c| c["name"] == "monitors.claim31").unwrap();
    assert_eq!(claim31["passed"], false);
}
