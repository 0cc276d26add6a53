//! Command-line front end: shape parsing, subcommand dispatch, text/JSON
//! output. All numeric output is exact (rationals printed as `p/q`).

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use skewhook::config::Config;
use skewhook::error::Error;
use skewhook::excited::{count_excited_wachs, excited_diagrams, excited_diagrams_shifted};
use skewhook::pleasant::{count_pleasant, enumerate_pleasant, rpp_series_nhlf};
use skewhook::qseries::ssyt_series_nhlf;
use skewhook::schur::{check_lp_factorial, check_multivariate_nhlf, LpFactorialMode};
use skewhook::shapes::{Cell, ShiftedKind, ShiftedShape, SkewShape};
use skewhook::strips::{kreiman_decomposition, lp_decomposition};
use skewhook::tableaux::{count_syt_aitken, count_syt_brute, rpp_series, ssyt_series};
use skewhook::verify::{conjecture_suite, multivariate_suite, run_suite, VerificationReport};

/// Exact hook-length combinatorics for skew shapes.
///
/// The shape grammar: compact digits `5441/21` when all parts are at most 9,
/// comma form `10,9,1/3,2` otherwise, `d5` for the staircase (4,3,2,1), `t3`
/// for the shifted triangle (5,3,1). `OUTER/INNER` denotes a skew shape.
#[derive(Parser)]
#[command(name = "skewhook", version, about)]
struct Cli {
    /// Path to a key=value config file (brute caps, truncation order, seed).
    #[arg(long, global = true)]
    config: Option<String>,
    /// Seed for randomized checkers (overrides SKEWHOOK_SEED and the config).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShiftedKindArg {
    B,
    D,
}

impl From<ShiftedKindArg> for ShiftedKind {
    fn from(k: ShiftedKindArg) -> Self {
        match k {
            ShiftedKindArg::B => ShiftedKind::B,
            ShiftedKindArg::D => ShiftedKind::D,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the hook lengths of the outer shape (optionally shifted).
    Hooks {
        shape: String,
        /// Use shifted hooks of the given kind.
        #[arg(long, value_enum)]
        shifted: Option<ShiftedKindArg>,
    },
    /// Excited diagrams of a skew shape: count or full list.
    Excited {
        shape: String,
        /// List the diagrams (default prints the count).
        #[arg(long)]
        list: bool,
        /// Print the count only.
        #[arg(long)]
        count: bool,
        /// Shifted diagrams of the given kind.
        #[arg(long, value_enum)]
        shifted: Option<ShiftedKindArg>,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Pleasant diagrams: count or reverse-plane-partition series.
    Pleasant {
        shape: String,
        /// Print the count (excited-peak formula; default).
        #[arg(long)]
        count: bool,
        /// Cross-check by the subset scan as well.
        #[arg(long)]
        brute: bool,
        /// Print the reverse-plane series to this order instead.
        #[arg(long)]
        series: Option<usize>,
    },
    /// Border-strip and path decompositions of a connected skew shape.
    Strips {
        shape: String,
        /// Print the border-strip decomposition (default).
        #[arg(long)]
        lp: bool,
        /// Print the non-intersecting path decomposition.
        #[arg(long)]
        kreiman: bool,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Number of standard Young tableaux (determinant formula).
    Syt {
        shape: String,
        /// Also enumerate and cross-check (subject to the brute cap).
        #[arg(long)]
        brute: bool,
    },
    /// Generating series of semistandard tableaux or reverse plane
    /// partitions.
    Series {
        shape: String,
        /// Truncation order.
        #[arg(long, default_value_t = 20)]
        order: usize,
        /// Which series.
        #[arg(long, value_enum, default_value_t = SeriesKind::Ssyt)]
        kind: SeriesKind,
        /// Evaluation route.
        #[arg(long, value_enum, default_value_t = SeriesRoute::Nhlf)]
        via: SeriesRoute,
    },
    /// Randomized identity checks for Schur-function determinants.
    Schur {
        #[command(subcommand)]
        cmd: SchurCmd,
    },
    /// Run the identity verification battery.
    Verify {
        /// Suite name: all|nhlf|qnhlf1|qnhlf2|lp|thick|ec|ec-b|tree|typebd|schroeder.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Maximum outer-shape size for exhaustive sweeps.
        #[arg(long, default_value_t = 6)]
        max: usize,
        /// q-series truncation order.
        #[arg(long)]
        trunc: Option<usize>,
        /// Write the reports as JSON to this file ("-" for stdout).
        #[arg(long)]
        json: Option<String>,
    },
    /// Execute the open-conjecture runners (report-only).
    Conjecture {
        /// Maximum outer-shape size for the factorial-Schur conjecture.
        #[arg(long, default_value_t = 5)]
        max: usize,
        /// Random trials per shape.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Staircase parameter bound for the determinant conjectures.
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// q-series truncation order.
        #[arg(long)]
        trunc: Option<usize>,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Ssyt,
    Rpp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesRoute {
    Brute,
    Nhlf,
}

#[derive(Subcommand)]
enum SchurCmd {
    /// Check one identity at random rational points.
    Check {
        /// Identity: nhlf-mv | lp-eval | lp-conj.
        #[arg(long)]
        identity: String,
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Random-point battery over all connected shapes up to a size.
    Battery {
        #[arg(long, default_value_t = 5)]
        max: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
}

fn cell_pairs(cells: impl IntoIterator<Item = Cell>) -> Vec<[usize; 2]> {
    cells.into_iter().map(|c| [c.row, c.col]).collect()
}

fn load_config(cli: &Cli) -> Result<Config, Error> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let body = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read config {}: {}", path, e)))?;
            Config::parse(&body)?
        }
        None => Config::default(),
    };
    if let Ok(s) = std::env::var("SKEWHOOK_SEED") {
        cfg.seed = s
            .parse()
            .map_err(|_| Error::Parse(format!("SKEWHOOK_SEED: bad number `{}`", s)))?;
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn print_reports(reports: &[VerificationReport], json_to: Option<&str>) -> Result<bool, Error> {
    let mut all_ok = true;
    let json_stdout = json_to == Some("-");
    for rep in reports {
        if json_stdout {
            all_ok &= rep.passed();
            continue;
        }
        for inst in &rep.instances {
            let tag = match inst.status {
                skewhook::verify::Status::Pass => "PASS",
                skewhook::verify::Status::Fail => "FAIL",
                skewhook::verify::Status::Skip => "SKIP",
            };
            let extra = inst
                .witness
                .as_deref()
                .filter(|w| !w.is_empty())
                .map(|w| format!(" [{}]", w))
                .unwrap_or_default();
            println!("[{}] {} {}{}", rep.id, tag, inst.label, extra);
        }
        let verdict = if rep.passed() { "ok" } else { "FAILED" };
        println!(
            "suite {}: {} ({} instances, {} failures{}, {} ms)",
            rep.id,
            verdict,
            rep.instances.len(),
            rep.failures(),
            if rep.conjecture { ", report-only" } else { "" },
            rep.runtime_ms
        );
        all_ok &= rep.passed();
    }
    if let Some(path) = json_to {
        let body = serde_json::to_string_pretty(reports)
            .map_err(|e| Error::Parse(format!("json: {}", e)))?;
        if path == "-" {
            println!("{}", body);
        } else {
            std::fs::write(path, body)
                .map_err(|e| Error::Parse(format!("cannot write {}: {}", path, e)))?;
        }
    }
    Ok(all_ok)
}

fn dispatch(cli: &Cli, cfg: &Config) -> Result<i32, Error> {
    match &cli.command {
        Command::Hooks { shape, shifted } => match shifted {
            None => {
                let s = SkewShape::parse(shape)?;
                let lam = s.outer();
                for i in 1..=lam.len() {
                    let row: Vec<String> = (1..=lam.part(i))
                        .map(|j| lam.hook(Cell::new(i, j)).unwrap().to_string())
                        .collect();
                    println!("{}", row.join(" "));
                }
                Ok(0)
            }
            Some(kind) => {
                let (outer, _) = ShiftedShape::parse_skew(shape)?;
                for i in 1..=outer.len() {
                    let mut row = vec![" ".to_string(); i - 1];
                    for j in i..i + outer.part(i) {
                        row.push(outer.hook(Cell::new(i, j), (*kind).into())?.to_string());
                    }
                    println!("{}", row.join(" "));
                }
                Ok(0)
            }
        },
        Command::Excited {
            shape,
            list,
            count: _,
            shifted,
            json,
        } => {
            match shifted {
                None => {
                    let s = SkewShape::parse(shape)?;
                    let ds = excited_diagrams(&s)?;
                    if *json {
                        let items: Vec<_> = ds
                            .iter()
                            .map(|d| {
                                json!({
                                    "cells": cell_pairs(d.cells().iter().copied()),
                                    "peaks": cell_pairs(d.peaks().iter().copied()),
                                })
                            })
                            .collect();
                        let body = json!({
                            "shape": s.to_string(),
                            "count": ds.len(),
                            "wachs": count_excited_wachs(&s)?.to_string(),
                            "diagrams": if *list { serde_json::Value::Array(items) } else { serde_json::Value::Null },
                        });
                        println!("{}", serde_json::to_string_pretty(&body).unwrap());
                    } else if *list {
                        for d in &ds {
                            let cs: Vec<String> =
                                d.cells().iter().map(|c| c.to_string()).collect();
                            let ps: Vec<String> =
                                d.peaks().iter().map(|c| c.to_string()).collect();
                            println!("cells {{{}}} peaks {{{}}}", cs.join(","), ps.join(","));
                        }
                        println!("{}", ds.len());
                    } else {
                        println!("{}", ds.len());
                    }
                    Ok(0)
                }
                Some(kind) => {
                    let (outer, inner) = ShiftedShape::parse_skew(shape)?;
                    let ds = excited_diagrams_shifted(&outer, &inner, (*kind).into())?;
                    if *json {
                        let items: Vec<_> = ds
                            .iter()
                            .map(|d| json!({ "cells": cell_pairs(d.iter().copied()) }))
                            .collect();
                        let body = json!({
                            "shape": format!("{}/{}", outer, inner),
                            "kind": ShiftedKind::from(*kind).to_string(),
                            "count": ds.len(),
                            "diagrams": if *list { serde_json::Value::Array(items) } else { serde_json::Value::Null },
                        });
                        println!("{}", serde_json::to_string_pretty(&body).unwrap());
                    } else if *list {
                        for d in &ds {
                            let cs: Vec<String> = d.iter().map(|c| c.to_string()).collect();
                            println!("cells {{{}}}", cs.join(","));
                        }
                        println!("{}", ds.len());
                    } else {
                        println!("{}", ds.len());
                    }
                    Ok(0)
                }
            }
        }
        Command::Pleasant {
            shape,
            count: _,
            brute,
            series,
        } => {
            let s = SkewShape::parse(shape)?;
            match series {
                Some(order) => {
                    println!("{}", rpp_series_nhlf(&s, *order, cfg.pleasant_cap.min(12))?);
                }
                None => {
                    let p = count_pleasant(&s)?;
                    if *brute {
                        let scan = enumerate_pleasant(&s, cfg.pleasant_cap)?;
                        if scan != p {
                            return Err(Error::Consistency(format!(
                                "pleasant count mismatch: formula {}, scan {}",
                                p, scan
                            )));
                        }
                    }
                    println!("{}", p);
                }
            }
            Ok(0)
        }
        Command::Strips {
            shape,
            lp: _,
            kreiman,
            json,
        } => {
            let s = SkewShape::parse(shape)?;
            if *kreiman {
                let t = kreiman_decomposition(&s)?;
                if *json {
                    let paths: Vec<_> = t
                        .paths()
                        .iter()
                        .map(|p| {
                            json!({
                                "cells": cell_pairs(p.iter().copied()),
                                "start_content": p.first().unwrap().content(),
                                "end_content": p.last().unwrap().content(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "shape": s.to_string(), "paths": paths
                        }))
                        .unwrap()
                    );
                } else {
                    for p in t.paths() {
                        let cs: Vec<String> = p.iter().map(|c| c.to_string()).collect();
                        println!("path {}", cs.join(" "));
                    }
                }
            } else {
                let dec = lp_decomposition(&s)?;
                if *json {
                    let strips: Vec<_> = dec
                        .iter()
                        .map(|st| {
                            json!({
                                "cells": cell_pairs(st.cells().iter().copied()),
                                "start_content": st.start_content(),
                                "end_content": st.end_content(),
                                "as_skew": st.to_skew_shape().to_string(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "shape": s.to_string(), "strips": strips
                        }))
                        .unwrap()
                    );
                } else {
                    for st in &dec {
                        println!(
                            "strip {} contents [{}, {}]",
                            st.to_skew_shape(),
                            st.start_content(),
                            st.end_content()
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Syt { shape, brute } => {
            let s = SkewShape::parse(shape)?;
            let det = count_syt_aitken(&s);
            if *brute {
                let b = count_syt_brute(&s)?;
                if b != det {
                    return Err(Error::Consistency(format!(
                        "tableau count mismatch: determinant {}, enumeration {}",
                        det, b
                    )));
                }
            }
            println!("{}", det);
            Ok(0)
        }
        Command::Series {
            shape,
            order,
            kind,
            via,
        } => {
            let s = SkewShape::parse(shape)?;
            let out = match (kind, via) {
                (SeriesKind::Ssyt, SeriesRoute::Brute) => ssyt_series(&s, *order)?,
                (SeriesKind::Ssyt, SeriesRoute::Nhlf) => ssyt_series_nhlf(&s, *order)?,
                (SeriesKind::Rpp, SeriesRoute::Brute) => rpp_series(&s, *order)?,
                (SeriesKind::Rpp, SeriesRoute::Nhlf) => {
                    rpp_series_nhlf(&s, *order, cfg.pleasant_cap.min(12))?
                }
            };
            println!("{}", out);
            Ok(0)
        }
        Command::Schur { cmd } => match cmd {
            SchurCmd::Check {
                identity,
                shape,
                trials,
                json,
            } => {
                let s = SkewShape::parse(shape)?;
                let rep = match identity.as_str() {
                    "nhlf-mv" => check_multivariate_nhlf(&s, *trials, cfg.seed)?,
                    "lp-eval" => check_lp_factorial(&s, LpFactorialMode::Evaluated, *trials, cfg.seed)?,
                    "lp-conj" => {
                        check_lp_factorial(&s, LpFactorialMode::Conjecture, *trials, cfg.seed)?
                    }
                    other => {
                        return Err(Error::Parse(format!(
                            "unknown identity `{}` (expected nhlf-mv|lp-eval|lp-conj)",
                            other
                        )))
                    }
                };
                if *json {
                    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
                } else {
                    println!(
                        "{} at {}: {}/{} trials passed (seed {}){}",
                        rep.identity,
                        rep.shape,
                        rep.passes,
                        rep.trials,
                        rep.seed,
                        if rep.conjecture { " [conjecture]" } else { "" }
                    );
                    for f in &rep.failures {
                        println!("  failure: {}", f);
                    }
                }
                let ok = rep.all_passed() || rep.conjecture;
                Ok(if ok { 0 } else { 1 })
            }
            SchurCmd::Battery { max, trials, json } => {
                let rep = multivariate_suite(*max, *trials, cfg.seed)?;
                let ok = print_reports(
                    std::slice::from_ref(&rep),
                    if *json { Some("-") } else { None },
                )?;
                Ok(if ok { 0 } else { 1 })
            }
        },
        Command::Verify {
            suite,
            max,
            trunc,
            json,
        } => {
            let order = trunc.unwrap_or(cfg.trunc_order);
            let reports = run_suite(suite, *max, order, cfg.seed)?;
            let ok = print_reports(&reports, json.as_deref())?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Conjecture {
            max,
            trials,
            n_max,
            trunc,
            json,
        } => {
            let order = trunc.unwrap_or(cfg.trunc_order);
            let reports = conjecture_suite(*max, *trials, *n_max, order, cfg.seed)?;
            print_reports(&reports, if *json { Some("-") } else { None })?;
            // conjecture runners never affect the exit code
            Ok(0)
        }
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let cfg = match load_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}", e);
            return 2;
        }
    };
    match dispatch(&cli, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", e);
            match e {
                Error::Parse(_) | Error::Domain(_) | Error::Resource(_) => 2,
                Error::Consistency(_) => 1,
            }
        }
    }
}
