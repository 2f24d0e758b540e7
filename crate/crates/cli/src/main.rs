mod args;
mod output;

use std::fs::File;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use irr_spectra::bins::uniform_edges;
use irr_spectra::irr::{self, RhoGrid, SpectrumSidecar};
use irr_spectra::leadlag::{self, SynthSpec};
use irr_spectra::returns;
use irr_spectra::series::{self, PriceSeries};
use irr_spectra::strategy::{self, MaConfig, OutOfRange, SignalKind};
use serde::Serialize;

use args::{Cli, Command, Format, GridArgs, Kind, PairingMode, Scale};
use output::{sidecar_path, tau_csv_path, write_atomic};

enum Failure {
    /// Bad flags or flag combinations; exit status 2.
    Usage(String),
    /// Unreadable or invalid data; exit status 1.
    Data(String),
}

type CmdResult = Result<String, Failure>;

fn usage(flag: &str, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {msg}"))
}

fn data_err(path: &Path) -> impl Fn(irr_spectra::Error) -> Failure + '_ {
    move |e| Failure::Data(format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<PriceSeries, Failure> {
    let file = File::open(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    series::ingest_csv(file, &id).map_err(data_err(path))
}

fn grid(args: &GridArgs) -> Result<RhoGrid, Failure> {
    RhoGrid::linspace(args.rho_min, args.rho_max, args.steps)
        .map_err(|e| usage("--rho-min/--rho-max/--steps", e))
}

fn edges(lo: f64, hi: f64, bins: usize) -> Result<Vec<f64>, Failure> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || bins == 0 {
        return Err(usage(
            "--bin-min/--bin-max/--bins",
            format!("need bin-min < bin-max and bins >= 1, got [{lo}, {hi}] x {bins}"),
        ));
    }
    Ok(uniform_edges(lo, hi, bins))
}

#[derive(Serialize)]
struct IrrJson<'a> {
    #[serde(flatten)]
    meta: &'a SpectrumSidecar,
    rho: &'a [f64],
    p: &'a [f64],
    i: &'a [f64],
}

fn run_irr(a: &args::IrrArgs) -> CmdResult {
    let grid = grid(&a.grid)?;
    let series = load(&a.input)?;
    let err = data_err(&a.input);
    let spectrum = irr::irr_transform(&series, &grid, a.tau).map_err(&err)?;
    let (rho_star, i_star) = irr::optimal_rho(&spectrum);
    let (_, stats) = irr::success_probability(&series, rho_star, a.tau).map_err(&err)?;
    let meta = SpectrumSidecar {
        series_id: series.id().to_string(),
        tau: a.tau,
        eligible_starts: spectrum.eligible_starts,
        rho_star,
        i_star,
        multi_period_fraction: irr::multi_period_fraction(&stats).ok(),
    };
    match a.format {
        Format::Csv => {
            write_atomic(&a.output, |w| irr::write_spectrum_csv(&spectrum, w))?;
            write_atomic(&sidecar_path(&a.output), |w| output::json(w, &meta))?;
        }
        Format::Json => {
            let doc = IrrJson {
                meta: &meta,
                rho: spectrum.grid.values(),
                p: &spectrum.p,
                i: &spectrum.density,
            };
            write_atomic(&a.output, |w| output::json(w, &doc))?;
        }
    }
    let mpf = meta
        .multi_period_fraction
        .map_or_else(|| "undefined".to_string(), |f| f.to_string());
    Ok(format!(
        "series={} tau={} rho*={rho_star} I(rho*)={i_star} multi_period_fraction={mpf}",
        meta.series_id, a.tau
    ))
}

fn run_strategy(a: &args::StrategyArgs) -> CmdResult {
    let cfg = MaConfig::new(a.short, a.long).map_err(|e| usage("--short/--long", e))?;
    if a.mode == PairingMode::Mc && a.samples == 0 {
        return Err(usage("--samples", "must be at least 1"));
    }
    let edges = edges(a.bin_min, a.bin_max, a.bins)?;
    let series = load(&a.input)?;
    let err = data_err(&a.input);
    let signals = strategy::detect_signals(&series, cfg).map_err(&err)?;
    let txs = match a.mode {
        PairingMode::Scan => strategy::extract_transactions_scan(&series, &signals),
        PairingMode::Mc => strategy::monte_carlo_from_signals(&series, &signals, a.samples, a.seed),
    }
    .map_err(&err)?;
    let policy = if a.clamp {
        OutOfRange::Clamp
    } else {
        OutOfRange::Error
    };
    let spectrum = strategy::strategy_spectrum(&txs, &edges, policy).map_err(&err)?;
    match a.format {
        Format::Csv => write_atomic(&a.output, |w| {
            strategy::write_strategy_spectrum_csv(&spectrum, w)
        })?,
        Format::Json => write_atomic(&a.output, |w| output::json(w, &spectrum))?,
    }
    if let Some(path) = &a.transactions {
        write_atomic(path, |w| strategy::write_transactions_csv(&txs, w))?;
    }
    let buys = signals.iter().filter(|s| s.kind == SignalKind::Buy).count();
    let losses = txs.iter().filter(|t| t.rho < 0.0).count();
    Ok(format!(
        "S={} L={} buys={buys} sells={} transactions={} losses={losses}",
        cfg.short,
        cfg.long,
        signals.len() - buys,
        txs.len()
    ))
}

fn run_logret(a: &args::LogretArgs) -> CmdResult {
    let edges = match (a.bin_min, a.bin_max, a.bins) {
        (Some(lo), Some(hi), Some(n)) => edges(lo, hi, n)?,
        _ => match a.scale {
            Scale::Minute => returns::minute_return_edges(),
            Scale::Daily => returns::daily_return_edges(),
        },
    };
    if !(a.epsilon.is_finite() && a.epsilon >= 0.0) {
        return Err(usage("--epsilon", "must be finite and >= 0"));
    }
    let sa = load(&a.input)?;
    let ha = returns::histogram(&returns::log_returns(&sa), &edges, a.normalize)
        .map_err(data_err(&a.input))?;
    let Some(path_b) = &a.input_b else {
        write_atomic(&a.output, |w| returns::write_histogram_csv(&ha, w))?;
        return Ok(format!(
            "series={} returns={} out_of_range={}",
            sa.id(),
            sa.len() - 1,
            ha.out_of_range
        ));
    };
    let sb = load(path_b)?;
    let hb = returns::histogram(&returns::log_returns(&sb), &edges, a.normalize)
        .map_err(data_err(path_b))?;
    let diff = returns::histogram_difference_eps(&ha, &hb, a.epsilon).map_err(data_err(path_b))?;
    let meta = returns::DiffSidecar {
        fwhm_span: diff.fwhm_span,
        nodes_in_fwhm: diff.nodes_in_fwhm,
        epsilon: a.epsilon,
        peak_ratio: diff.peak_ratio,
        fwhm_width: diff.fwhm_width,
        out_of_range_a: ha.out_of_range,
        out_of_range_b: hb.out_of_range,
    };
    write_atomic(&a.output, |w| returns::write_diff_csv(&ha, &diff, w))?;
    write_atomic(&sidecar_path(&a.output), |w| output::json(w, &meta))?;
    Ok(format!(
        "nodes_in_fwhm={} fwhm_span={}..={} peak_ratio={} fwhm_width={}",
        diff.nodes_in_fwhm, diff.fwhm_span.0, diff.fwhm_span.1, diff.peak_ratio, diff.fwhm_width
    ))
}

fn run_leadlag(a: &args::LeadlagArgs) -> CmdResult {
    let grid = grid(&a.grid)?;
    if a.taus.is_empty() || a.taus.windows(2).any(|w| w[1] <= w[0]) {
        return Err(usage(
            "--taus",
            "must be a non-empty, strictly increasing list",
        ));
    }
    if !(a.node_floor.is_finite() && a.node_floor >= 0.0) {
        return Err(usage("--node-floor", "must be finite and >= 0"));
    }
    let sa = load(&a.input)?;
    let sb = load(&a.input_b)?;
    let pair = series::align_series(&sa, &sb).map_err(|e| {
        Failure::Data(format!(
            "{} / {}: {e}",
            a.input.display(),
            a.input_b.display()
        ))
    })?;
    let report = leadlag::tau_series_analysis_with_floor(&pair, &grid, &a.taus, a.node_floor)
        .map_err(data_err(&a.input))?;
    write_atomic(&a.output, |w| leadlag::write_report_json(&report, w))?;
    for (k, &tau) in report.taus.iter().enumerate() {
        write_atomic(&tau_csv_path(&a.output, tau), |w| {
            leadlag::write_tau_csv(&report, k, w)
        })?;
    }
    let join = |v: Vec<String>| v.join(",");
    Ok(format!(
        "aligned={} dropped={}/{} taus={} nodes={} sup_norm={}",
        pair.len(),
        pair.dropped_a,
        pair.dropped_b,
        join(report.taus.iter().map(ToString::to_string).collect()),
        join(report.nodes.iter().map(ToString::to_string).collect()),
        join(report.sup_norm.iter().map(ToString::to_string).collect()),
    ))
}

fn run_synth(a: &args::SynthArgs) -> CmdResult {
    if a.n < 2 {
        return Err(usage("--n", "must be at least 2"));
    }
    if !(a.sigma.is_finite() && a.sigma >= 0.0) {
        return Err(usage("--sigma", "must be finite and >= 0"));
    }
    if !a.mu.is_finite() {
        return Err(usage("--mu", "must be finite"));
    }
    if !(a.noise.is_finite() && a.noise >= 0.0) {
        return Err(usage("--noise", "must be finite and >= 0"));
    }
    let series = match (a.kind, &a.input) {
        (Kind::Gbm, Some(_)) => return Err(usage("--input", "only valid with --kind lagged")),
        (Kind::Gbm, None) => leadlag::synthesize_gbm(&SynthSpec::gbm(a.n, a.mu, a.sigma, a.seed)),
        (Kind::Lagged, Some(path)) => {
            let source = load(path)?;
            if a.lag >= source.len() {
                return Err(usage(
                    "--lag",
                    format!("must be below the input length {}", source.len()),
                ));
            }
            leadlag::lagged_copy(&source, a.lag, a.noise, a.seed)
        }
        (Kind::Lagged, None) => {
            if a.lag >= a.n {
                return Err(usage("--lag", "must be below --n"));
            }
            let spec = SynthSpec::lagged(a.n, a.mu, a.sigma, a.lag, a.noise, a.seed);
            leadlag::synthesize_pair(&spec).map(|(_, follower)| follower)
        }
    }
    .map_err(|e| Failure::Data(e.to_string()))?;
    write_atomic(&a.output, |w| series::write_csv(&series, w, a.header))?;
    Ok(format!(
        "wrote {} points to {}",
        series.len(),
        a.output.display()
    ))
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Irr(a) => run_irr(a),
        Command::Strategy(a) => run_strategy(a),
        Command::Logret(a) => run_logret(a),
        Command::Leadlag(a) => run_leadlag(a),
        Command::Synth(a) => run_synth(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.threads {
        Some(0) => Err(usage("--threads", "must be at least 1")),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(Failure::Data(format!("thread pool: {e}"))),
        },
        None => run(&cli),
    };
    match result {
        Ok(summary) => {
            println!("{summary}");
            ExitCode::SUCCESS
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
