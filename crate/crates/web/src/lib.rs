//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export synthesizes its own input from a seed and returns a JSON
//! string, so the page needs no file handling.

use irr_spectra::irr::{self, RhoGrid};
use irr_spectra::leadlag::{self, synthesize_gbm, synthesize_pair, SynthSpec};
use irr_spectra::series::align_series;
use irr_spectra::strategy::{self, MaConfig, OutOfRange, SignalEvent, SignalKind};
use irr_spectra::Result;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Curve {
    tau: usize,
    density: Vec<f64>,
    rho_star: f64,
    i_star: f64,
}

#[derive(Serialize)]
struct SpectraView {
    prices: Vec<f64>,
    grid: Vec<f64>,
    curves: Vec<Curve>,
}

#[derive(Serialize)]
struct StrategyView {
    prices: Vec<f64>,
    buys: Vec<usize>,
    sells: Vec<usize>,
    centers: Vec<f64>,
    weighted: Vec<f64>,
    counts: Vec<usize>,
    n_transactions: usize,
}

#[derive(Serialize)]
struct LeadLagView {
    grid: Vec<f64>,
    taus: Vec<usize>,
    deltas: Vec<Vec<f64>>,
    nodes: Vec<usize>,
    sup_norm: Vec<f64>,
}

fn parse_taus(taus: &str) -> Result<Vec<usize>> {
    taus.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| irr_spectra::Error::InvalidConfig(format!("bad tau {t:?}")))
        })
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

/// IRR spectra of one GBM path at several holding thresholds.
pub fn spectra_json(
    n: usize,
    sigma: f64,
    seed: u64,
    rho_max: f64,
    steps: usize,
    taus: &str,
) -> Result<String> {
    let series = synthesize_gbm(&SynthSpec::gbm(n, 0.0, sigma, seed))?;
    let grid = RhoGrid::linspace(0.0, rho_max, steps)?;
    let taus = parse_taus(taus)?;
    let spectra = irr::irr_transform_taus(&series, &grid, &taus)?;
    let curves = spectra
        .into_iter()
        .map(|s| {
            let (rho_star, i_star) = irr::optimal_rho(&s);
            Curve {
                tau: s.tau,
                density: s.density,
                rho_star,
                i_star,
            }
        })
        .collect();
    to_json(&SpectraView {
        prices: series.prices().to_vec(),
        grid: grid.values().to_vec(),
        curves,
    })
}

/// Moving-average crossover signals and the Monte Carlo strategy spectrum.
pub fn strategy_json(
    n: usize,
    sigma: f64,
    seed: u64,
    short: usize,
    long: usize,
    samples: usize,
) -> Result<String> {
    let series = synthesize_gbm(&SynthSpec::gbm(n, 0.0, sigma, seed))?;
    let cfg = MaConfig::new(short, long)?;
    let signals = strategy::detect_signals(&series, cfg)?;
    let txs = strategy::monte_carlo_from_signals(&series, &signals, samples, seed)?;
    let spectrum =
        strategy::strategy_spectrum(&txs, &strategy::default_bin_edges(), OutOfRange::Clamp)?;
    let (buys, sells): (Vec<&SignalEvent>, Vec<&SignalEvent>) =
        signals.iter().partition(|e| e.kind == SignalKind::Buy);
    to_json(&StrategyView {
        prices: series.prices().to_vec(),
        buys: buys.iter().map(|e| e.index).collect(),
        sells: sells.iter().map(|e| e.index).collect(),
        centers: spectrum.bin_centers(),
        weighted: spectrum.weighted,
        counts: spectrum.counts,
        n_transactions: spectrum.n_transactions,
    })
}

/// Spectrum difference between a GBM leader and its lagged, noisy copy.
pub fn leadlag_json(
    n: usize,
    sigma: f64,
    lag: usize,
    noise: f64,
    seed: u64,
    rho_max: f64,
    steps: usize,
) -> Result<String> {
    let (a, b) = synthesize_pair(&SynthSpec::lagged(n, 0.0, sigma, lag, noise, seed))?;
    let pair = align_series(&a, &b)?;
    let grid = RhoGrid::linspace(0.0, rho_max, steps)?;
    let report = leadlag::tau_series_analysis(&pair, &grid, &leadlag::DEFAULT_TAUS)?;
    to_json(&LeadLagView {
        grid: grid.values().to_vec(),
        taus: report.taus,
        deltas: report.deltas,
        nodes: report.nodes,
        sup_norm: report.sup_norm,
    })
}

fn js<T>(r: Result<T>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = irrSpectra)]
pub fn irr_spectra(
    n: usize,
    sigma: f64,
    seed: u32,
    rho_max: f64,
    steps: usize,
    taus: &str,
) -> Result<String, JsError> {
    js(spectra_json(n, sigma, seed.into(), rho_max, steps, taus))
}

#[wasm_bindgen(js_name = strategySpectrum)]
pub fn strategy_spectrum(
    n: usize,
    sigma: f64,
    seed: u32,
    short: usize,
    long: usize,
    samples: usize,
) -> Result<String, JsError> {
    js(strategy_json(n, sigma, seed.into(), short, long, samples))
}

#[wasm_bindgen(js_name = leadLag)]
pub fn lead_lag(
    n: usize,
    sigma: f64,
    lag: usize,
    noise: f64,
    seed: u32,
    rho_max: f64,
    steps: usize,
) -> Result<String, JsError> {
    js(leadlag_json(
        n,
        sigma,
        lag,
        noise,
        seed.into(),
        rho_max,
        steps,
    ))
}
