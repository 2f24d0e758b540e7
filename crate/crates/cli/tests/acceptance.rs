//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p irrspec-cli --test acceptance`.
//!
//! The index-data criterion reads daily closes from the paths in
//! `IRRSPEC_TOPIX`, `IRRSPEC_SP500` and `IRRSPEC_FTSE100`, and is skipped
//! when they are unset.

#[path = "../../core/tests/common/oracles.rs"]
mod oracles;

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use irr_spectra::irr::{self, PassageIndex, RhoGrid};
use irr_spectra::leadlag::{self, synthesize_gbm, synthesize_pair, SynthSpec, DEFAULT_TAUS};
use irr_spectra::returns::{self, histogram, histogram_difference, log_returns};
use irr_spectra::series::{align_series, ingest_csv, PriceSeries};
use irr_spectra::strategy::{self, MaConfig, SignalKind};
use oracles::*;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn gbm(n: usize, mu: f64, sigma: f64, seed: u64) -> PriceSeries {
    synthesize_gbm(&SynthSpec::gbm(n, mu, sigma, seed)).unwrap()
}

/// 1,000 GBM series of 500 points; every (start, rho, tau) on a 20-point
/// grid and tau in {0, 1, 3} must agree exactly with a naive scan.
fn oracle_equivalence() -> Outcome {
    let started = Instant::now();
    let grid = RhoGrid::linspace(0.0, 0.02, 20).unwrap();
    let taus = [0usize, 1, 3];
    let (checked, mismatches) = (0..1000u64)
        .into_par_iter()
        .map(|seed| {
            let s = gbm(500, 0.0, 0.01, 10_000 + seed);
            let prices = s.prices();
            let index = PassageIndex::new(&s);
            let mut checked = 0usize;
            let mut bad = 0usize;
            for &tau in &taus {
                for &rho in grid.values() {
                    for start in 0..prices.len() - 1 {
                        let expected = naive_first_passage(prices, start, rho, tau);
                        if index.first_passage(start, rho, tau) != expected
                            || irr::first_passage_time(&s, start, rho, tau).unwrap() != expected
                        {
                            bad += 1;
                        }
                        checked += 1;
                    }
                }
            }
            (checked, bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let elapsed = started.elapsed();
    outcome(
        mismatches == 0 && elapsed < Duration::from_secs(300),
        format!(
            "{checked} queries, {mismatches} mismatches, {:.1}s",
            elapsed.as_secs_f64()
        ),
    )
}

/// Deterministic geometric series, growth g = 0.01 per tick, N = 1,000.
fn analytic_spectrum() -> Outcome {
    let g = 0.01;
    let prices: Vec<f64> = (0..1000).map(|i| 100.0 * (g * i as f64).exp()).collect();
    let s = PriceSeries::from_prices("geometric", prices).unwrap();
    let mut problems = Vec::new();
    for grid in [
        RhoGrid::default(),
        RhoGrid::linspace(0.0, 0.02, 200).unwrap(),
    ] {
        let spec = irr::irr_transform(&s, &grid, 0).unwrap();
        for (k, &rho) in grid.values().iter().enumerate() {
            if rho <= g - 1e-6 && !(spec.p[k] == 1.0 && spec.density[k] == rho) {
                problems.push(format!("rho={rho}: p={} I={}", spec.p[k], spec.density[k]));
            }
            if rho >= g + 1e-6 && spec.p[k] != 0.0 {
                problems.push(format!("rho={rho}: p={} (want 0)", spec.p[k]));
            }
        }
        let below = grid
            .values()
            .iter()
            .copied()
            .filter(|&r| r < g)
            .fold(f64::MIN, f64::max);
        let (rho_star, _) = irr::optimal_rho(&spec);
        if rho_star != below {
            problems.push(format!("rho*={rho_star}, expected {below}"));
        }
    }
    let detail = if problems.is_empty() {
        "I(rho)=rho below g, p=0 above g, rho* is the grid point just below g".to_string()
    } else {
        problems.join("; ")
    };
    outcome(problems.is_empty(), detail)
}

fn monotonicity_series() -> Vec<PriceSeries> {
    (0..100u64)
        .map(|seed| gbm(500, 0.0002, 0.01, 20_000 + seed))
        .collect()
}

const MONO_TAUS: [usize; 8] = [0, 1, 2, 3, 6, 9, 12, 15];

/// Pointwise p(rho) for every series, tau and grid point.
fn pointwise_tables(series: &[PriceSeries], grid: &RhoGrid) -> Vec<Vec<Vec<f64>>> {
    series
        .par_iter()
        .map(|s| {
            MONO_TAUS
                .iter()
                .map(|&tau| {
                    grid.values()
                        .iter()
                        .map(|&rho| irr::success_probability(s, rho, tau).unwrap().0)
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn tau_monotonicity(tables: &[Vec<Vec<f64>>]) -> Outcome {
    let mut violations = 0;
    let mut checks = 0;
    for table in tables {
        for pair in table.windows(2) {
            for (lo_tau, hi_tau) in pair[0].iter().zip(&pair[1]) {
                checks += 1;
                if hi_tau > lo_tau {
                    violations += 1;
                }
            }
        }
    }
    outcome(
        violations == 0,
        format!("{checks} comparisons, {violations} violations"),
    )
}

fn rho_monotonicity(tables: &[Vec<Vec<f64>>]) -> Outcome {
    let mut violations = 0;
    let mut checks = 0;
    for row in tables.iter().flatten() {
        for w in row.windows(2) {
            checks += 1;
            if w[1] > w[0] {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{checks} comparisons, {violations} violations"),
    )
}

/// 200 GBM series with 2,458 points: detected signals against the
/// condition checker, Monte Carlo round trips against exhaustive start
/// enumeration.
fn strategy_oracle() -> Outcome {
    let windows = [25usize, 75, 200];
    let (signals, txs, bad) = (0..200u64)
        .into_par_iter()
        .map(|seed| {
            let s = gbm(2458, 0.0002, 0.012, 30_000 + seed);
            let prices = s.prices();
            let mut bad = 0usize;
            let mut n_signals = 0usize;
            let mut n_txs = 0usize;
            for long in windows {
                let cfg = MaConfig::new(5, long).unwrap();
                let events = strategy::detect_signals(&s, cfg).unwrap();
                let got: Vec<(usize, bool)> = events
                    .iter()
                    .map(|e| (e.index, e.kind == SignalKind::Buy))
                    .collect();
                let expected = brute_force_signals(prices, 5, long);
                if got != expected {
                    bad += 1;
                }
                n_signals += got.len();

                let reachable = reachable_round_trips(prices.len(), &expected);
                let mc = strategy::monte_carlo_from_signals(&s, &events, 10_000, seed).unwrap();
                n_txs += mc.len();
                for t in &mc {
                    let rho = (prices[t.i_s] / prices[t.i_b]).ln() / (t.i_s - t.i_b) as f64;
                    if !reachable.contains(&(t.i_b, t.i_s)) || t.rho != rho {
                        bad += 1;
                    }
                }
            }
            (n_signals, n_txs, bad)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    outcome(
        bad == 0 && signals > 0 && txs > 0,
        format!(
            "{signals} signals, {txs} sampled transactions, L in {windows:?}, {bad} discrepancies"
        ),
    )
}

fn worked_fixture() -> Outcome {
    let s = PriceSeries::from_prices("fixture", vec![10.0, 9.0, 8.0, 9.0, 11.0, 14.0]).unwrap();
    let events = strategy::detect_signals(&s, MaConfig::new(2, 3).unwrap()).unwrap();
    let summary: Vec<(usize, SignalKind)> = events.iter().map(|e| (e.index, e.kind)).collect();
    outcome(
        summary == [(4, SignalKind::Buy)],
        format!("events {summary:?}"),
    )
}

fn histogram_conservation() -> Outcome {
    let mut fixtures = vec![
        PriceSeries::from_prices("e", vec![1.0, std::f64::consts::E, 7.389_056_098_930_65])
            .unwrap(),
        PriceSeries::from_prices("flat", vec![42.0; 50]).unwrap(),
        PriceSeries::from_prices("jumps", vec![100.0, 150.0, 60.0, 61.0, 59.0, 300.0]).unwrap(),
    ];
    fixtures.extend((0..20).map(|k| gbm(3000, 0.0, 0.0005 * (k + 1) as f64, 40_000 + k)));
    let mut failures = 0;
    for s in &fixtures {
        let r = log_returns(s);
        for edges in [
            returns::minute_return_edges(),
            returns::daily_return_edges(),
        ] {
            let h = histogram(&r, &edges, false).unwrap();
            let total = h.counts.iter().sum::<f64>() as usize + h.out_of_range;
            let self_diff = histogram_difference(&h, &h).unwrap();
            if total != s.len() - 1 || self_diff.nodes_in_fwhm != 0 {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!(
            "{} fixtures x 2 binnings, {failures} failures",
            fixtures.len()
        ),
    )
}

/// 100 GBM pairs of 30,000 ticks, follower = lagged_copy(leader, 1, 0.0005).
/// Per-tick volatility 0.0005 with a rate grid on [0, 0.002].
fn leadlag_tendency() -> Outcome {
    let started = Instant::now();
    let grid = RhoGrid::linspace(0.0, 0.002, 200).unwrap();
    let reports: Vec<(usize, usize, f64, f64)> = (0..100u64)
        .map(|seed| {
            let spec = SynthSpec::lagged(30_000, 0.0, 0.0005, 1, 0.0005, 50_000 + seed);
            let (a, b) = synthesize_pair(&spec).unwrap();
            let pair = align_series(&a, &b).unwrap();
            let r = leadlag::tau_series_analysis(&pair, &grid, &DEFAULT_TAUS).unwrap();
            (r.nodes[0], r.nodes[1], r.sup_norm[0], r.sup_norm[1])
        })
        .collect();
    let elapsed = started.elapsed();
    let holds = reports.iter().filter(|r| r.0 >= r.1).count();
    let mean = |f: fn(&(usize, usize, f64, f64)) -> f64| {
        reports.iter().map(f).sum::<f64>() / reports.len() as f64
    };
    outcome(
        holds >= 60 && elapsed < Duration::from_secs(600),
        format!(
            "nodes(tau=0) >= nodes(tau=3) in {holds}/100; mean nodes {:.2} vs {:.2}; mean sup|dI| {:.2e} vs {:.2e}; {:.1}s",
            mean(|r| r.0 as f64),
            mean(|r| r.1 as f64),
            mean(|r| r.2),
            mean(|r| r.3),
            elapsed.as_secs_f64()
        ),
    )
}

fn cli(args: &[&str]) -> bool {
    Command::new(env!("CARGO_BIN_EXE_irrspec"))
        .args(args)
        .output()
        .map(|o| o.status.success())
        .unwrap_or(false)
}

type Artifacts = Vec<(String, Vec<u8>)>;

/// Runs every subcommand into `dir` and returns the sorted artifact bytes.
fn cli_artifacts(dir: &Path, threads: &str) -> Option<Artifacts> {
    let f = |name: &str| dir.join(name).to_str().unwrap().to_string();
    let t = ["--threads", threads];
    let runs: Vec<Vec<String>> = vec![
        vec![
            "synth",
            "--kind",
            "gbm",
            "--n",
            "4000",
            "--mu",
            "0.0001",
            "--sigma",
            "0.001",
            "--seed",
            "7",
            "--output",
            &f("a.csv"),
        ],
        vec![
            "synth",
            "--kind",
            "lagged",
            "--input",
            &f("a.csv"),
            "--lag",
            "1",
            "--noise",
            "0.0005",
            "--seed",
            "7",
            "--output",
            &f("b.csv"),
        ],
        vec![
            "irr",
            "--input",
            &f("a.csv"),
            "--rho-max",
            "0.005",
            "--steps",
            "100",
            "--tau",
            "2",
            "--output",
            &f("spec.csv"),
        ],
        vec![
            "strategy",
            "--input",
            &f("a.csv"),
            "--samples",
            "5000",
            "--seed",
            "3",
            "--clamp",
            "--output",
            &f("strat.csv"),
            "--transactions",
            &f("tx.csv"),
        ],
        vec![
            "logret",
            "--input",
            &f("a.csv"),
            "--input-b",
            &f("b.csv"),
            "--scale",
            "minute",
            "--normalize",
            "--output",
            &f("diff.csv"),
        ],
        vec![
            "leadlag",
            "--input",
            &f("a.csv"),
            "--input-b",
            &f("b.csv"),
            "--rho-max",
            "0.004",
            "--steps",
            "80",
            "--output",
            &f("report.json"),
        ],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    for run in runs {
        let mut args: Vec<&str> = t.to_vec();
        args.extend(run.iter().map(String::as_str));
        if !cli(&args) {
            return None;
        }
    }
    let mut files: Artifacts = fs::read_dir(dir)
        .ok()?
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    Some(files)
}

fn cli_determinism() -> Outcome {
    let runs: Vec<Option<Artifacts>> = ["1", "1", "4"]
        .iter()
        .map(|threads| {
            let dir = tempfile::tempdir().unwrap();
            cli_artifacts(dir.path(), threads)
        })
        .collect();
    let Some(first) = &runs[0] else {
        return outcome(false, "a CLI invocation failed");
    };
    let identical = runs.iter().all(|r| r.as_ref() == Some(first));
    outcome(
        identical && first.len() >= 14,
        format!(
            "{} artifacts, threads 1/1/4, identical={identical}",
            first.len()
        ),
    )
}

/// Returns `None` (skip) when no index data are configured.
fn index_data() -> Option<Outcome> {
    let vars = ["IRRSPEC_TOPIX", "IRRSPEC_SP500", "IRRSPEC_FTSE100"];
    let paths: Vec<(&str, String)> = vars
        .iter()
        .filter_map(|v| std::env::var(v).ok().map(|p| (*v, p)))
        .collect();
    if paths.is_empty() {
        return None;
    }
    let mut pass = paths.len() == vars.len();
    let mut details = Vec::new();
    if !pass {
        details.push(format!("need all of {vars:?}"));
    }
    for (var, path) in paths {
        let result = fs::File::open(&path)
            .map_err(irr_spectra::Error::from)
            .and_then(|f| ingest_csv(f, var));
        let s = match result {
            Ok(s) => s,
            Err(e) => {
                pass = false;
                details.push(format!("{var}: {e}"));
                continue;
            }
        };
        let spec = irr::irr_transform(&s, &RhoGrid::default(), 0).unwrap();
        let (rho_star, _) = irr::optimal_rho(&spec);
        let (_, stats) = irr::success_probability(&s, rho_star, 0).unwrap();
        let frac = irr::multi_period_fraction(&stats).unwrap_or(0.0);
        let ok = (0.005..=0.009).contains(&rho_star) && frac > 0.30;
        pass &= ok;
        details.push(format!(
            "{var}: N={} rho*={rho_star:.5} dt>=2 fraction={frac:.3}",
            s.len()
        ));
    }
    Some(outcome(pass, details.join("; ")))
}

fn main() {
    let mut failed = 0;
    let mut report = |name: &str, o: Outcome| {
        println!(
            "[{}] {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed += 1;
        }
    };

    report("oracle equivalence", oracle_equivalence());
    report("analytic spectrum", analytic_spectrum());
    let series = monotonicity_series();
    let tables = pointwise_tables(&series, &RhoGrid::linspace(0.0, 0.03, 20).unwrap());
    report("tau monotonicity", tau_monotonicity(&tables));
    report("rho monotonicity", rho_monotonicity(&tables));
    report("strategy oracle", strategy_oracle());
    report("worked signal fixture", worked_fixture());
    report("histogram conservation", histogram_conservation());
    report("lead-lag tendency", leadlag_tendency());
    report("CLI determinism", cli_determinism());
    match index_data() {
        Some(o) => report("index data (rho*, multi-period share)", o),
        None => println!(
            "[SKIP] index data (rho*, multi-period share): set IRRSPEC_TOPIX, IRRSPEC_SP500 and IRRSPEC_FTSE100 to daily-close CSV files"
        ),
    }

    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
