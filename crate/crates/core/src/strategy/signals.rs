use serde::{Deserialize, Serialize};

use super::MaConfig;
use crate::error::{Error, Result};
use crate::series::PriceSeries;

/// Trailing arithmetic mean over `window` prices, defined from tick
/// `window - 1` on.
#[derive(Debug, Clone, PartialEq)]
pub struct MovingAverage {
    window: usize,
    values: Vec<f64>,
}

impl MovingAverage {
    pub fn window(&self) -> usize {
        self.window
    }

    /// First tick with a defined value.
    pub fn first_index(&self) -> usize {
        self.window - 1
    }

    /// Defined values, starting at [`first_index`](Self::first_index).
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn at(&self, t: usize) -> Option<f64> {
        t.checked_sub(self.window - 1)
            .and_then(|k| self.values.get(k).copied())
    }
}

/// Each value is summed afresh over its window so that no rounding drift
/// accumulates along long series.
pub fn moving_average(series: &PriceSeries, window: usize) -> Result<MovingAverage> {
    let prices = series.prices();
    if window == 0 || window > prices.len() {
        return Err(Error::InvalidConfig(format!(
            "window {window} outside 1..={}",
            prices.len()
        )));
    }
    let values = prices
        .windows(window)
        .map(|w| w.iter().sum::<f64>() / window as f64)
        .collect();
    Ok(MovingAverage { window, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignalKind {
    Buy,
    Sell,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignalEvent {
    pub index: usize,
    pub kind: SignalKind,
    /// Short moving average at `index`.
    pub theta: f64,
    /// Long moving average at `index`.
    pub lambda: f64,
}

/// Scans ticks `L..N` for Golden Cross (buy) and Dead Cross (sell) events.
pub fn detect_signals(series: &PriceSeries, cfg: MaConfig) -> Result<Vec<SignalEvent>> {
    let cfg = MaConfig::new(cfg.short, cfg.long)?;
    if series.len() < cfg.long + 1 {
        return Err(Error::InvalidConfig(format!(
            "series of length {} is shorter than L+1 = {}",
            series.len(),
            cfg.long + 1
        )));
    }
    let short = moving_average(series, cfg.short)?;
    let long = moving_average(series, cfg.long)?;
    let mut events = Vec::new();
    for i in cfg.long..series.len() {
        let (th, th_prev) = (short.at(i).unwrap(), short.at(i - 1).unwrap());
        let (la, la_prev) = (long.at(i).unwrap(), long.at(i - 1).unwrap());
        let cross = (th - la) * (th_prev - la_prev) < 0.0;
        if !cross {
            continue;
        }
        let long_trend = la - la_prev;
        let short_trend = th - th_prev;
        let accel = (th + la_prev) - (th_prev + la);
        let kind = if long_trend > 0.0 && short_trend > 0.0 && accel > 0.0 {
            SignalKind::Buy
        } else if long_trend < 0.0 && short_trend < 0.0 && accel < 0.0 {
            SignalKind::Sell
        } else {
            continue;
        };
        events.push(SignalEvent {
            index: i,
            kind,
            theta: th,
            lambda: la,
        });
    }
    Ok(events)
}
