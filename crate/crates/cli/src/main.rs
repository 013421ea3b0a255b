use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use mbgames::experiment::{self, MakerTrack, ScaleConfig, SweepConfig};
use mbgames::lineup::{needs_orientation, parse_player};
use mbgames::suite::{self, Scope};
use mbgames::{io as files, play_game};
use mbgames_core::analysis::{
    degeneracy_order, dsatur_coloring, exact_chromatic, girth, isoperimetric_profile,
};
use mbgames_core::graph::{random_regular, validate};
use mbgames_core::minimax::minimax_solve;
use mbgames_core::orientation::{short_orientation, verify_orientation};
use mbgames_core::play::replay;
use mbgames_core::{GameConfig, Graph, Player};
use serde_json::json;

/// Maker-Breaker component games on regular graphs.
#[derive(Parser)]
#[command(name = "mbgames", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a random d-regular graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        o: Option<PathBuf>,
    },
    /// Print structural facts about a graph as JSON.
    Analyze {
        #[arg(short, long)]
        i: PathBuf,
        /// Also compute the edge isoperimetric profile up to this set size.
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Build a short positive out-degree orientation and its certificate.
    Orient {
        #[arg(short, long)]
        i: PathBuf,
        #[arg(short, long)]
        o: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Check an orientation against its certificate, or run the suite.
    Verify(VerifyArgs),
    /// Play one game and write its transcript.
    Play(PlayArgs),
    /// Solve a small game exactly.
    Oracle {
        #[arg(short, long)]
        i: PathBuf,
        #[arg(long, default_value = "1:1")]
        mb: String,
        #[arg(long, default_value = "maker")]
        first: String,
        #[arg(long)]
        target: usize,
    },
    /// Play every (seed, bias, Maker) combination on random regular graphs.
    Sweep(SweepArgs),
    /// Component sizes against n at the threshold bias, with bound reports.
    Scale(ScaleArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(short, long)]
    i: Option<PathBuf>,
    #[arg(long)]
    orientation: Option<PathBuf>,
    #[arg(long)]
    cert: Option<PathBuf>,
    /// Replay a transcript against the graph instead.
    #[arg(long)]
    transcript: Option<PathBuf>,
    /// Which part of the built-in suite to run when no files are given.
    #[arg(long, value_enum, default_value = "all")]
    scope: Scope,
    /// Swap the reactive Breaker for a sabotaged one in the suite.
    #[arg(long)]
    inject_fault: bool,
    /// Print the suite result as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PlayArgs {
    /// Graph file; otherwise a random regular graph from --n, --d, --seed.
    #[arg(short, long)]
    i: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "1:1")]
    mb: String,
    #[arg(long, default_value = "maker")]
    first: String,
    #[arg(long, default_value = "tree")]
    maker: String,
    #[arg(long, default_value = "reactive")]
    breaker: String,
    #[arg(long, value_delimiter = ',')]
    monitors: Vec<String>,
    #[arg(long)]
    target: Option<usize>,
    /// Transcript output (JSON lines); stdout when absent.
    #[arg(short, long)]
    o: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Breaker biases, e.g. `1,2,3` or `1..6`.
    #[arg(long)]
    b: String,
    /// Seeds, e.g. `0..20` or `3,5,7`.
    #[arg(long, default_value = "0..10")]
    seeds: String,
    #[arg(long, value_delimiter = ',', default_value = "tree")]
    makers: Vec<String>,
    /// Breaker for every row; chosen per bias when absent.
    #[arg(long)]
    breaker: Option<String>,
    #[arg(long, default_value = "maker")]
    first: String,
    #[arg(long, value_delimiter = ',')]
    monitors: Vec<String>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ScaleArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000")]
    ns: Vec<usize>,
    #[arg(long, default_value = "0..20")]
    seeds: String,
    #[arg(long, value_delimiter = ',', default_value = "tree,random,greedy-merge")]
    makers: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    monitors: Vec<String>,
    /// CSV of the Breaker-track games.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// CSV of the Maker-track games.
    #[arg(long)]
    maker_csv: Option<PathBuf>,
    /// JSON bound reports.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

/// Failures that map to exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

fn parse_list(spec: &str) -> Result<Vec<u64>> {
    if let Some((a, b)) = spec.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| Usage(format!("bad range {spec:?}")))?;
        let b: u64 = b.trim().parse().map_err(|_| Usage(format!("bad range {spec:?}")))?;
        return Ok((a..b).collect());
    }
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Usage(format!("bad number {s:?}")).into()))
        .collect()
}

fn parse_mb(s: &str) -> Result<(usize, usize)> {
    let parsed = s.split_once(':').and_then(|(m, b)| Some((m.parse().ok()?, b.parse().ok()?)));
    match parsed {
        Some(p) => Ok(p),
        None => usage(format!("--mb expects M:B, got {s:?}")),
    }
}

fn player(s: &str) -> Result<Player> {
    match parse_player(s) {
        Some(p) => Ok(p),
        None => usage(format!("--first expects maker or breaker, got {s:?}")),
    }
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn threads(jobs: Option<usize>) -> Result<()> {
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
    }
    Ok(())
}

fn print_checks<'a>(checks: impl Iterator<Item = (&'a str, bool, &'a str)>) -> bool {
    let mut ok = true;
    for (name, passed, detail) in checks {
        println!("{} {name}: {detail}", if passed { "PASS" } else { "FAIL" });
        ok &= passed;
    }
    ok
}

fn analyze(g: &Graph, kmax: Option<usize>) -> Result<serde_json::Value> {
    let report = validate(g);
    let (_, degeneracy) = degeneracy_order(g);
    let mut v = json!({
        "n": g.n(),
        "m": g.edge_count(),
        "fingerprint": format!("{:016x}", g.fingerprint()),
        "validation": report,
        "max_degree": g.max_degree(),
        "girth": girth(g),
        "degeneracy": degeneracy,
        "dsatur_colors": dsatur_coloring(g).num_colors,
        "chromatic_number": exact_chromatic(g).ok(),
    });
    if let Some(k) = kmax {
        let p = isoperimetric_profile(g, k)?;
        let values: Vec<String> = p.values.iter().map(|r| r.to_string()).collect();
        v["isoperimetric_profile"] = json!(values);
    }
    Ok(v)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Gen { n, d, seed, o } => {
            let g = random_regular(n, d, seed).map_err(|e| Usage(e.to_string()))?;
            output(&o)?.write_all(g.to_edge_list().as_bytes())?;
            Ok(true)
        }
        Cmd::Analyze { i, kmax } => {
            let g = files::read_graph(&i)?;
            println!("{}", serde_json::to_string_pretty(&analyze(&g, kmax)?)?);
            Ok(true)
        }
        Cmd::Orient { i, o, cert } => {
            let g = files::read_graph(&i)?;
            let (orientation, certificate) = short_orientation(&g)?;
            files::write_orientation(&o, &orientation)?;
            files::write_certificate(&cert, &certificate)?;
            println!(
                "k={} gamma_delta={} gamma_k={} chi_ub={} certified_bound={}",
                certificate.k,
                certificate.gamma_delta,
                certificate.gamma_k,
                certificate.chi_ub,
                certificate.certified_bound
            );
            Ok(true)
        }
        Cmd::Verify(a) => verify(a),
        Cmd::Play(a) => play_cmd(a),
        Cmd::Oracle { i, mb, first, target } => {
            let g = files::read_graph(&i)?;
            let (m, b) = parse_mb(&mb)?;
            let cfg = GameConfig::new(m, b).first(player(&first)?);
            let w = minimax_solve(&g, &cfg, target).map_err(|e| Usage(e.to_string()))?;
            println!("{}", if w == Player::Maker { "Maker" } else { "Breaker" });
            Ok(true)
        }
        Cmd::Sweep(a) => {
            threads(a.jobs)?;
            let cfg = SweepConfig {
                n: a.n,
                d: a.d,
                m: a.m,
                biases: parse_list(&a.b)?.into_iter().map(|b| b as usize).collect(),
                makers: a.makers,
                breaker: a.breaker,
                seeds: parse_list(&a.seeds)?,
                first: player(&a.first)?,
                monitors: a.monitors,
            };
            let rows = experiment::sweep(&cfg)?;
            experiment::write_csv(&rows, output(&a.csv)?)?;
            let failed: Vec<_> = experiment::reactive_reports(&rows).into_iter().filter(|r| !r.pass).collect();
            for r in &failed {
                eprintln!("bound {} violated: {r:?}", r.bound_name);
            }
            Ok(failed.is_empty())
        }
        Cmd::Scale(a) => {
            threads(a.jobs)?;
            let cfg = ScaleConfig {
                d: a.d,
                ns: a.ns,
                seeds: parse_list(&a.seeds)?,
                makers: a.makers,
                monitors: a.monitors,
            };
            let res = experiment::scale(&cfg)?;
            experiment::write_csv(&res.breaker_rows, output(&a.csv)?)?;
            match &res.maker_track {
                MakerTrack::Skipped(why) => eprintln!("maker track skipped: {why}"),
                MakerTrack::Rows(rows) => {
                    if let Some(p) = &a.maker_csv {
                        experiment::write_csv(rows, output(&Some(p.clone()))?)?;
                    }
                    for &n in &cfg.ns {
                        let fr: Vec<f64> = rows
                            .iter()
                            .filter(|r| r.n == n)
                            .map(|r| r.max_component as f64 / n as f64)
                            .collect();
                        if let Some(med) = experiment::median(fr) {
                            eprintln!("maker track n={n}: median max_component/n = {med:.4}");
                        }
                    }
                }
            }
            if let Some(p) = &a.report {
                let mut w = output(&Some(p.clone()))?;
                serde_json::to_writer_pretty(&mut w, &res.reports)?;
                w.write_all(b"\n")?;
            }
            let failed = res.reports.iter().filter(|r| !r.pass).count();
            eprintln!("{} bound reports, {failed} failed", res.reports.len());
            Ok(failed == 0)
        }
    }
}

fn verify(a: VerifyArgs) -> Result<bool> {
    match (&a.i, &a.orientation, &a.cert, &a.transcript) {
        (Some(i), Some(o), Some(c), None) => {
            let g = files::read_graph(i)?;
            let o = files::read_orientation(o)?;
            let cert = files::read_certificate(c)?;
            let report = verify_orientation(&g, &o, &cert);
            let ok = print_checks(report.checks.iter().map(|c| (c.name, c.passed, c.detail.as_str())));
            if let Some(l) = report.longest_path {
                println!("longest directed path {l}, certified bound {}", cert.certified_bound);
            }
            Ok(ok)
        }
        (Some(i), None, None, Some(t)) => {
            let g = files::read_graph(i)?;
            let file = File::open(t).with_context(|| format!("opening {}", t.display()))?;
            let transcript = files::read_transcript(BufReader::new(file))?;
            match replay(&g, &transcript) {
                Ok(_) => {
                    println!("PASS replay: outcome {:?}", transcript.outcome);
                    Ok(true)
                }
                Err(e) => {
                    println!("FAIL replay: {e}");
                    Ok(false)
                }
            }
        }
        (None, None, None, None) => {
            let checks = suite::run(a.scope, a.inject_fault);
            if a.json {
                println!("{}", serde_json::to_string_pretty(&checks)?);
                Ok(checks.iter().all(|c| c.passed))
            } else {
                Ok(print_checks(checks.iter().map(|c| (c.name.as_str(), c.passed, c.detail.as_str()))))
            }
        }
        _ => usage("verify takes -i with --orientation and --cert, -i with --transcript, or no files"),
    }
}

fn play_cmd(a: PlayArgs) -> Result<bool> {
    let g = match (&a.i, a.n, a.d) {
        (Some(i), None, None) => files::read_graph(i)?,
        (None, Some(n), Some(d)) => random_regular(n, d, a.seed).map_err(|e| Usage(e.to_string()))?,
        _ => return usage("play takes either -i or both --n and --d"),
    };
    let (m, b) = parse_mb(&a.mb)?;
    let mut cfg = GameConfig::new(m, b).first(player(&a.first)?).seed(a.seed);
    if let Some(s) = a.target {
        cfg = cfg.target(s);
    }
    cfg.validate().map_err(|e| Usage(e.to_string()))?;
    let oriented = needs_orientation(&a.breaker, &a.monitors);
    let o = if oriented { Some(short_orientation(&g)?.0) } else { None };
    let run = play_game(&g, cfg, &a.maker, &a.breaker, &a.monitors, o.as_ref());
    let run = match run {
        Ok(r) => r,
        Err(mbgames::LineupError::Play(e)) => {
            eprintln!("{e}");
            return Ok(false);
        }
        Err(e) => return usage(e.to_string()),
    };
    files::write_transcript(output(&a.o)?, &run.transcript)?;
    eprintln!("{}", serde_json::to_string(&run.transcript.outcome)?);
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
