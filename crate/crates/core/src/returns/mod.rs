//! Log-return histograms and their differences.

mod io;

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::bins::{bin_of, check_edges, uniform_edges};
use crate::error::{Error, Result};
use crate::series::PriceSeries;

pub use io::{
    read_diff_csv, read_histogram_csv, write_diff_csv, write_histogram_csv, DiffRow, DiffSidecar,
};

/// `ln(P[j+1] / P[j])` for `j` in `0..N-1`.
pub fn log_returns(series: &PriceSeries) -> Vec<f64> {
    series
        .prices()
        .windows(2)
        .map(|w| (w[1] / w[0]).ln())
        .collect()
}

/// 101 bins over `[-0.005, 0.005]`, sized for minute ticks.
pub fn minute_return_edges() -> Vec<f64> {
    uniform_edges(-0.005, 0.005, 101)
}

/// 101 bins over `[-0.05, 0.05]`, sized for daily closes.
pub fn daily_return_edges() -> Vec<f64> {
    uniform_edges(-0.05, 0.05, 101)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<f64>,
    pub normalized: bool,
    /// Values outside `[first edge, last edge]`, not included in `counts`.
    pub out_of_range: usize,
}

impl Histogram {
    pub fn bins(&self) -> usize {
        self.counts.len()
    }
}

/// Left-closed bins with the last bin also closed on the right. With
/// `normalize`, in-range counts are scaled to unit mass.
pub fn histogram(values: &[f64], bin_edges: &[f64], normalize: bool) -> Result<Histogram> {
    check_edges(bin_edges)?;
    let mut counts = vec![0.0; bin_edges.len() - 1];
    let mut out_of_range = 0;
    for &v in values {
        match bin_of(bin_edges, v) {
            Some(b) => counts[b] += 1.0,
            None => out_of_range += 1,
        }
    }
    if normalize {
        let total = (values.len() - out_of_range) as f64;
        if total == 0.0 {
            return Err(Error::EmptyHistogram);
        }
        counts.iter_mut().for_each(|c| *c /= total);
    }
    Ok(Histogram {
        bin_edges: bin_edges.to_vec(),
        counts,
        normalized: normalize,
        out_of_range,
    })
}

/// `h1 - h2` per bin, read against the FWHM region of `h1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffProfile {
    pub bin_edges: Vec<f64>,
    pub delta: Vec<f64>,
    /// Inclusive bin range of the reference FWHM region.
    pub fwhm_span: (usize, usize),
    pub nodes_in_fwhm: usize,
    /// `max |delta|` inside the FWHM region over the reference peak height.
    pub peak_ratio: f64,
    /// Width of the FWHM region in value units.
    pub fwhm_width: f64,
}

/// Contiguous run of bins with `count >= max / 2` around the first mode.
pub fn fwhm_span(counts: &[f64]) -> (usize, usize) {
    let mode = (0..counts.len()).fold(0, |best, k| if counts[k] > counts[best] { k } else { best });
    let half = counts[mode] / 2.0;
    let mut lo = mode;
    while lo > 0 && counts[lo - 1] >= half {
        lo -= 1;
    }
    let mut hi = mode;
    while hi + 1 < counts.len() && counts[hi + 1] >= half {
        hi += 1;
    }
    (lo, hi)
}

pub fn histogram_difference(h1: &Histogram, h2: &Histogram) -> Result<DiffProfile> {
    histogram_difference_eps(h1, h2, 0.0)
}

/// As [`histogram_difference`], treating `|delta| <= epsilon` as zero when
/// counting nodes.
pub fn histogram_difference_eps(
    h1: &Histogram,
    h2: &Histogram,
    epsilon: f64,
) -> Result<DiffProfile> {
    if h1.bin_edges != h2.bin_edges {
        return Err(Error::HistogramMismatch("bin edges differ".into()));
    }
    if h1.normalized != h2.normalized {
        return Err(Error::HistogramMismatch(
            "normalization flags differ".into(),
        ));
    }
    let delta: Vec<f64> = h1
        .counts
        .iter()
        .zip(&h2.counts)
        .map(|(a, b)| a - b)
        .collect();
    let (lo, hi) = fwhm_span(&h1.counts);
    let peak = h1.counts[lo..=hi].iter().copied().fold(0.0, f64::max);
    let max_delta = delta[lo..=hi].iter().fold(0.0, |m: f64, d| m.max(d.abs()));
    Ok(DiffProfile {
        nodes_in_fwhm: count_nodes(&delta, lo..=hi, epsilon),
        peak_ratio: if peak > 0.0 { max_delta / peak } else { 0.0 },
        fwhm_width: h1.bin_edges[hi + 1] - h1.bin_edges[lo],
        bin_edges: h1.bin_edges.clone(),
        delta,
        fwhm_span: (lo, hi),
    })
}

/// Sign changes between consecutive non-zero entries of `delta[span]`,
/// where `|d| <= epsilon` counts as zero. `+, 0, -` is one node.
///
/// Panics if `span` is outside `delta`.
pub fn count_nodes(delta: &[f64], span: RangeInclusive<usize>, epsilon: f64) -> usize {
    let mut nodes = 0;
    let mut last_positive: Option<bool> = None;
    for &d in &delta[span] {
        if d.abs() <= epsilon || d.is_nan() {
            continue;
        }
        let positive = d > 0.0;
        if last_positive.is_some_and(|p| p != positive) {
            nodes += 1;
        }
        last_positive = Some(positive);
    }
    nodes
}
