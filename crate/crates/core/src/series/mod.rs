//! Price series data model, CSV ingestion and timestamp alignment.

mod align;
mod csv;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use align::{align_series, AlignedPair};
pub use csv::{ingest_csv, write_csv};

/// One observation. Timestamps are opaque ordered integers (ticks, epoch
/// seconds, ...); only their order matters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub timestamp: i64,
    pub price: f64,
}

/// A validated price series: at least two points, strictly increasing
/// timestamps, positive finite prices. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceSeries {
    id: String,
    timestamps: Vec<i64>,
    prices: Vec<f64>,
}

impl PriceSeries {
    pub fn new(id: impl Into<String>, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let (timestamps, prices) = points.into_iter().map(|p| (p.timestamp, p.price)).unzip();
        Self::from_parts(id, timestamps, prices)
    }

    /// Builds a series from parallel timestamp and price vectors. Errors
    /// report 1-based point positions in the `line` field.
    pub fn from_parts(
        id: impl Into<String>,
        timestamps: Vec<i64>,
        prices: Vec<f64>,
    ) -> Result<Self> {
        if timestamps.len() != prices.len() {
            return Err(Error::InvalidConfig(format!(
                "{} timestamps but {} prices",
                timestamps.len(),
                prices.len()
            )));
        }
        for (k, &price) in prices.iter().enumerate() {
            if !(price.is_finite() && price > 0.0) {
                return Err(Error::InvalidPrice { line: k + 1, price });
            }
        }
        for (k, w) in timestamps.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(Error::NonIncreasingTimestamp {
                    line: k + 2,
                    timestamp: w[1],
                });
            }
        }
        if prices.len() < 2 {
            return Err(Error::TooShort { len: prices.len() });
        }
        Ok(Self {
            id: id.into(),
            timestamps,
            prices,
        })
    }

    /// Series with timestamps `0..prices.len()`.
    pub fn from_prices(id: impl Into<String>, prices: Vec<f64>) -> Result<Self> {
        let timestamps = (0..prices.len() as i64).collect();
        Self::from_parts(id, timestamps, prices)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn len(&self) -> usize {
        self.prices.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.prices.is_empty()
    }

    pub fn prices(&self) -> &[f64] {
        &self.prices
    }

    pub fn timestamps(&self) -> &[i64] {
        &self.timestamps
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.timestamps
            .iter()
            .zip(&self.prices)
            .map(|(&timestamp, &price)| Point { timestamp, price })
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_prices() {
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            let err = PriceSeries::from_prices("x", vec![1.0, bad]).unwrap_err();
            assert!(matches!(err, Error::InvalidPrice { line: 2, .. }), "{err}");
        }
    }

    #[test]
    fn rejects_short_and_unordered() {
        assert!(matches!(
            PriceSeries::from_prices("x", vec![1.0]),
            Err(Error::TooShort { len: 1 })
        ));
        assert!(matches!(
            PriceSeries::from_parts("x", vec![3, 2], vec![1.0, 1.0]),
            Err(Error::NonIncreasingTimestamp {
                line: 2,
                timestamp: 2
            })
        ));
    }
}
