//! Tau-series difference spectra between two aligned markets.
//!
//! For each minimal holding period `tau` both series are transformed on the
//! same rate grid and `I_a - I_b` is inspected for nodes (sign changes).
//! Nodes that appear at `tau = 0` and vanish once `tau >= 2` point to a
//! short lead-lag between the markets; the report stops at that indicator
//! and does not estimate a lag.

mod io;
mod synth;

use crate::error::{Error, Result};
use crate::irr::{irr_transform_taus, IrrSpectrum, RhoGrid};
use crate::returns::count_nodes;
use crate::series::AlignedPair;

pub use io::{read_report_json, write_report_json, write_tau_csv, ReportJson, TauEntry};
pub use synth::{lagged_copy, synthesize_gbm, synthesize_pair, SynthKind, SynthSpec};

/// Thresholds used when none are given.
pub const DEFAULT_TAUS: [usize; 6] = [0, 3, 6, 9, 12, 15];

/// Node floor relative to the largest `|I|` of either spectrum at a tau.
pub const DEFAULT_RELATIVE_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct TauSeriesReport {
    pub taus: Vec<usize>,
    pub grid: RhoGrid,
    pub spectra_a: Vec<IrrSpectrum>,
    pub spectra_b: Vec<IrrSpectrum>,
    /// `I_a - I_b` on the grid, one list per tau.
    pub deltas: Vec<Vec<f64>>,
    pub nodes: Vec<usize>,
    pub sup_norm: Vec<f64>,
    /// Absolute node floor applied at each tau.
    pub epsilons: Vec<f64>,
}

pub fn tau_series_analysis(
    pair: &AlignedPair,
    grid: &RhoGrid,
    taus: &[usize],
) -> Result<TauSeriesReport> {
    tau_series_analysis_with_floor(pair, grid, taus, DEFAULT_RELATIVE_FLOOR)
}

pub fn tau_series_analysis_with_floor(
    pair: &AlignedPair,
    grid: &RhoGrid,
    taus: &[usize],
    relative_floor: f64,
) -> Result<TauSeriesReport> {
    if taus.is_empty() {
        return Err(Error::InvalidConfig("tau list is empty".into()));
    }
    if taus.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidConfig(
            "taus must be strictly increasing".into(),
        ));
    }
    if !(relative_floor.is_finite() && relative_floor >= 0.0) {
        return Err(Error::InvalidConfig(format!(
            "relative node floor must be finite and >= 0, got {relative_floor}"
        )));
    }
    let spectra_a = irr_transform_taus(&pair.a, grid, taus)?;
    let spectra_b = irr_transform_taus(&pair.b, grid, taus)?;

    let mut deltas = Vec::with_capacity(taus.len());
    let mut nodes = Vec::with_capacity(taus.len());
    let mut sup_norm = Vec::with_capacity(taus.len());
    let mut epsilons = Vec::with_capacity(taus.len());
    for (sa, sb) in spectra_a.iter().zip(&spectra_b) {
        let delta: Vec<f64> = sa
            .density
            .iter()
            .zip(&sb.density)
            .map(|(a, b)| a - b)
            .collect();
        let scale = sa
            .density
            .iter()
            .chain(&sb.density)
            .fold(0.0f64, |m, v| m.max(v.abs()));
        let eps = relative_floor * scale;
        nodes.push(count_nodes(&delta, 0..=delta.len() - 1, eps));
        sup_norm.push(delta.iter().fold(0.0f64, |m, d| m.max(d.abs())));
        epsilons.push(eps);
        deltas.push(delta);
    }
    Ok(TauSeriesReport {
        taus: taus.to_vec(),
        grid: grid.clone(),
        spectra_a,
        spectra_b,
        deltas,
        nodes,
        sup_norm,
        epsilons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::align_series;

    fn pair(lag: usize, noise: f64, seed: u64) -> AlignedPair {
        let (a, b) =
            synthesize_pair(&SynthSpec::lagged(800, 0.0, 0.004, lag, noise, seed)).unwrap();
        align_series(&a, &b).unwrap()
    }

    #[test]
    fn identical_markets() {
        let p = pair(0, 0.0, 1);
        let grid = RhoGrid::linspace(0.0, 0.01, 50).unwrap();
        let r = tau_series_analysis(&p, &grid, &DEFAULT_TAUS).unwrap();
        assert_eq!(r.taus, DEFAULT_TAUS);
        assert!(r.deltas.iter().flatten().all(|&d| d == 0.0));
        assert!(r.nodes.iter().all(|&n| n == 0));
        assert!(r.sup_norm.iter().all(|&s| s == 0.0));
    }

    #[test]
    fn single_tau_and_shapes() {
        let p = pair(1, 0.001, 2);
        let grid = RhoGrid::linspace(0.0, 0.01, 30).unwrap();
        let r = tau_series_analysis(&p, &grid, &[0]).unwrap();
        assert_eq!(r.deltas.len(), 1);
        assert_eq!(r.deltas[0].len(), 30);
        assert_eq!(r.spectra_a[0].tau, 0);
        let agree = r.spectra_a[0].density == r.spectra_b[0].density;
        assert_eq!(r.sup_norm[0] == 0.0, agree);
    }

    #[test]
    fn rejects_bad_taus() {
        let p = pair(0, 0.0, 3);
        let grid = RhoGrid::linspace(0.0, 0.01, 5).unwrap();
        assert!(tau_series_analysis(&p, &grid, &[]).is_err());
        assert!(tau_series_analysis(&p, &grid, &[3, 1]).is_err());
        assert!(tau_series_analysis(&p, &grid, &[1, 1]).is_err());
    }
}
