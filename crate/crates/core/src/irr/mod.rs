//! The market IRR transform.
//!
//! For a rate `rho` (continuous compounding, per tick) a position opened at
//! tick `i` is closed at the first tick `i + t` with
//! `P[i+t] >= P[i] * exp(rho * t)` and `t >= max(1, tau)`. Starts that never
//! reach the barrier are right-censored failures. Every start `0..=N-2` is
//! eligible and the denominator stays `N-1` for every `tau`, so spectra with
//! different minimal periods are directly comparable.

mod io;
mod passage;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::series::PriceSeries;

pub use io::{read_spectrum, read_spectrum_csv, write_spectrum_csv, SpectrumSidecar};
pub use passage::{first_passage_time, min_holding, PassageIndex};

/// Ascending, non-negative grid of per-tick rates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct RhoGrid(Vec<f64>);

impl RhoGrid {
    pub const DEFAULT_MAX: f64 = 0.05;
    pub const DEFAULT_STEPS: usize = 200;

    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::InvalidGrid(format!(
                "rates must be finite and >= 0, got {v}"
            )));
        }
        if values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(
                "values must be strictly increasing".into(),
            ));
        }
        Ok(Self(values))
    }

    /// `steps` evenly spaced points from `min` to `max` inclusive.
    // The negated comparison also rejects NaN bounds.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn linspace(min: f64, max: f64, steps: usize) -> Result<Self> {
        if !(min < max) || steps < 2 {
            return Err(Error::InvalidGrid(format!(
                "need min < max and steps >= 2, got [{min}, {max}] x {steps}"
            )));
        }
        let span = max - min;
        let last = (steps - 1) as f64;
        let values = (0..steps)
            .map(|k| {
                if k + 1 == steps {
                    max
                } else {
                    min + span * k as f64 / last
                }
            })
            .collect();
        Self::new(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Default for RhoGrid {
    /// 200 points on `[0, 0.05]`.
    fn default() -> Self {
        Self::linspace(0.0, Self::DEFAULT_MAX, Self::DEFAULT_STEPS).unwrap()
    }
}

impl TryFrom<Vec<f64>> for RhoGrid {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<RhoGrid> for Vec<f64> {
    fn from(grid: RhoGrid) -> Self {
        grid.0
    }
}

/// Success probabilities and densities over a rate grid.
#[derive(Debug, Clone, PartialEq)]
pub struct IrrSpectrum {
    pub grid: RhoGrid,
    /// `p[k]`: fraction of eligible starts reaching the barrier at `grid[k]`.
    pub p: Vec<f64>,
    /// `density[k] = grid[k] * p[k]`, the expected rate `I(rho)`.
    pub density: Vec<f64>,
    pub tau: usize,
    pub eligible_starts: usize,
    pub series_id: String,
}

impl IrrSpectrum {
    fn from_successes(
        series: &PriceSeries,
        grid: &RhoGrid,
        tau: usize,
        successes: &[usize],
    ) -> Self {
        let eligible = series.len() - 1;
        let p: Vec<f64> = successes
            .iter()
            .map(|&s| s as f64 / eligible as f64)
            .collect();
        let density = grid.values().iter().zip(&p).map(|(r, p)| r * p).collect();
        Self {
            grid: grid.clone(),
            p,
            density,
            tau,
            eligible_starts: eligible,
            series_id: series.id().to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }
}

/// Passage outcomes collected by [`success_probability`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassageStats {
    pub successes: usize,
    /// Successes with holding period `t >= 2`.
    pub multi_period: usize,
    /// Passage time of every success, in start order.
    pub durations: Vec<usize>,
}

impl PassageStats {
    pub fn from_durations(durations: Vec<usize>) -> Self {
        Self {
            successes: durations.len(),
            multi_period: durations.iter().filter(|&&t| t >= 2).count(),
            durations,
        }
    }
}

/// Converts a per-tick simple rate `r` into its continuous equivalent
/// `ln(1 + r)`, so that `(1+r)^t` and `exp(rho t)` barriers coincide.
pub fn rho_from_discrete_rate(r: f64) -> Result<f64> {
    if r.is_nan() || r <= -1.0 {
        return Err(Error::InvalidRate(format!(
            "simple rate must exceed -1, got {r}"
        )));
    }
    Ok(r.ln_1p())
}

/// `p(rho)` over all starts `0..=N-2`, with denominator `N-1`.
pub fn success_probability(
    series: &PriceSeries,
    rho: f64,
    tau: usize,
) -> Result<(f64, PassageStats)> {
    passage::check_rate(rho)?;
    let index = PassageIndex::new(series);
    let starts = series.len() - 1;
    let outcomes = par::map_range(starts, |i| index.first_passage(i, rho, tau));
    let stats = PassageStats::from_durations(outcomes.into_iter().flatten().collect());
    Ok((stats.successes as f64 / starts as f64, stats))
}

/// Evaluates `p` and `I = rho * p` at every grid point for one `tau`.
pub fn irr_transform(series: &PriceSeries, grid: &RhoGrid, tau: usize) -> Result<IrrSpectrum> {
    Ok(irr_transform_taus(series, grid, &[tau])?.pop().unwrap())
}

/// One spectrum per entry of `taus`, sharing the range-max index.
///
/// For each start the number of grid points with a passage is found by
/// bisection; `successes[k]` then counts starts whose prefix covers `k`.
/// The counts are integers, so the result does not depend on scheduling.
pub fn irr_transform_taus(
    series: &PriceSeries,
    grid: &RhoGrid,
    taus: &[usize],
) -> Result<Vec<IrrSpectrum>> {
    let index = PassageIndex::new(series);
    let starts = series.len() - 1;
    let rates = grid.values();
    let mut spectra = Vec::with_capacity(taus.len());
    for &tau in taus {
        let prefixes = par::map_range(starts, |i| index.success_prefix(i, rates, tau));
        // successes[k] = #{ i : prefix(i) > k }
        let mut tally = vec![0usize; rates.len() + 1];
        for prefix in prefixes {
            tally[prefix] += 1;
        }
        let mut successes = vec![0usize; rates.len()];
        let mut above = 0;
        for k in (0..rates.len()).rev() {
            above += tally[k + 1];
            successes[k] = above;
        }
        spectra.push(IrrSpectrum::from_successes(series, grid, tau, &successes));
    }
    Ok(spectra)
}

/// Grid point maximising `I(rho)`; ties go to the smallest rate.
pub fn optimal_rho(spectrum: &IrrSpectrum) -> (f64, f64) {
    let mut best = 0;
    for (k, &v) in spectrum.density.iter().enumerate() {
        if v > spectrum.density[best] {
            best = k;
        }
    }
    (spectrum.grid.values()[best], spectrum.density[best])
}

/// Share of successful passages that needed two or more ticks.
pub fn multi_period_fraction(stats: &PassageStats) -> Result<f64> {
    if stats.successes == 0 {
        return Err(Error::ZeroSuccesses);
    }
    Ok(stats.multi_period as f64 / stats.successes as f64)
}
