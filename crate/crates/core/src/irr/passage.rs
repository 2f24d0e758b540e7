//! First passage of a price path through the exponential barrier
//! `P_i * exp(rho * t)`.

use crate::error::{Error, Result};
use crate::series::PriceSeries;

/// Smallest admissible holding period for a minimal period `tau`.
/// Instant resale (`t = 0`) never counts.
#[inline]
pub fn min_holding(tau: usize) -> usize {
    tau.max(1)
}

#[inline]
fn barrier(start_price: f64, rho: f64, t: usize) -> f64 {
    start_price * (rho * t as f64).exp()
}

pub(crate) fn check_rate(rho: f64) -> Result<()> {
    if rho.is_finite() && rho >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidRate(format!(
            "rho must be finite and non-negative, got {rho}"
        )))
    }
}

/// Smallest `t` with `max(1, tau) <= t <= N-1-start` and
/// `P[start+t] >= P[start] * exp(rho*t)`, or `None` when the barrier is
/// never met before the series ends.
///
/// The scan stops as soon as the barrier exceeds the series maximum.
pub fn first_passage_time(
    series: &PriceSeries,
    start: usize,
    rho: f64,
    tau: usize,
) -> Result<Option<usize>> {
    let prices = series.prices();
    if start + 1 >= prices.len() {
        return Err(Error::IndexOutOfRange {
            index: start,
            len: prices.len(),
        });
    }
    check_rate(rho)?;
    let max = prices.iter().copied().fold(f64::MIN, f64::max);
    let p0 = prices[start];
    for t in min_holding(tau)..prices.len() - start {
        let b = barrier(p0, rho, t);
        if prices[start + t] >= b {
            return Ok(Some(t));
        }
        if b > max {
            break;
        }
    }
    Ok(None)
}

/// Precomputed range maxima over one series, shared by every
/// `(start, rho, tau)` query.
///
/// `levels[k][j]` is the maximum of `prices[j .. j + 2^k]`. A query gallops
/// over blocks whose maximum stays below the current barrier; since the
/// barrier is non-decreasing in `t`, no price inside such a block can meet
/// its own barrier. The acceptance test itself is the same `>=` comparison
/// a naive scan performs, so results agree exactly.
#[derive(Debug, Clone)]
pub struct PassageIndex<'a> {
    prices: &'a [f64],
    levels: Vec<Vec<f64>>,
}

impl<'a> PassageIndex<'a> {
    pub fn new(series: &'a PriceSeries) -> Self {
        let prices = series.prices();
        let mut levels = vec![prices.to_vec()];
        let mut width = 1;
        while width * 2 <= prices.len() {
            let prev = levels.last().unwrap();
            let next: Vec<f64> = (0..=prices.len() - width * 2)
                .map(|j| prev[j].max(prev[j + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        Self { prices, levels }
    }

    pub fn len(&self) -> usize {
        self.prices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prices.is_empty()
    }

    /// Same contract as [`first_passage_time`]; `start` must be `<= N-2`
    /// and `rho >= 0`, checked only in debug builds.
    pub fn first_passage(&self, start: usize, rho: f64, tau: usize) -> Option<usize> {
        debug_assert!(start + 1 < self.prices.len() && rho >= 0.0);
        let n = self.prices.len();
        let p0 = self.prices[start];
        let mut pos = start + min_holding(tau);
        while pos < n {
            let b = barrier(p0, rho, pos - start);
            if self.prices[pos] >= b {
                return Some(pos - start);
            }
            // prices[pos] < b, so the 1-block fails; extend while possible.
            let mut k = 0;
            while k + 1 < self.levels.len()
                && pos + (1 << (k + 1)) <= n
                && self.levels[k + 1][pos] < b
            {
                k += 1;
            }
            pos += 1 << k;
        }
        None
    }

    /// Number of leading grid points (ascending rates) at which `start`
    /// reaches its barrier. Success is monotone in `rho`: a path that meets
    /// a steeper barrier also meets every flatter one, no later.
    pub fn success_prefix(&self, start: usize, grid: &[f64], tau: usize) -> usize {
        let (mut lo, mut hi) = (0, grid.len());
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.first_passage(start, grid[mid], tau).is_some() {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        lo
    }
}
