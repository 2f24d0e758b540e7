use serde::{Deserialize, Serialize};

use super::Transaction;
use crate::bins::{bin_of, check_edges, uniform_edges};
use crate::error::{Error, Result};

/// What to do with a transaction rate outside the bin range.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutOfRange {
    #[default]
    Error,
    /// Fold into the first or last bin.
    Clamp,
}

/// Signed, rate-weighted histogram of transaction rates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategySpectrum {
    pub bin_edges: Vec<f64>,
    /// Per bin: sum of member rates divided by `n_transactions`.
    pub weighted: Vec<f64>,
    pub counts: Vec<usize>,
    pub n_transactions: usize,
}

impl StrategySpectrum {
    pub fn bin_centers(&self) -> Vec<f64> {
        self.bin_edges
            .windows(2)
            .map(|w| 0.5 * (w[0] + w[1]))
            .collect()
    }
}

/// 200 bins of width 5e-4 over `[-0.05, 0.05]`.
pub fn default_bin_edges() -> Vec<f64> {
    uniform_edges(-0.05, 0.05, 200)
}

pub fn strategy_spectrum(
    transactions: &[Transaction],
    bin_edges: &[f64],
    policy: OutOfRange,
) -> Result<StrategySpectrum> {
    check_edges(bin_edges)?;
    let bins = bin_edges.len() - 1;
    let (lo, hi) = (bin_edges[0], bin_edges[bins]);
    let mut sums = vec![0.0; bins];
    let mut counts = vec![0usize; bins];
    for tx in transactions {
        let bin = match (bin_of(bin_edges, tx.rho), policy) {
            (Some(b), _) => b,
            (None, OutOfRange::Clamp) if tx.rho < lo => 0,
            (None, OutOfRange::Clamp) if tx.rho > hi => bins - 1,
            _ => {
                return Err(Error::OutOfBinRange {
                    rho: tx.rho,
                    lo,
                    hi,
                })
            }
        };
        sums[bin] += tx.rho;
        counts[bin] += 1;
    }
    let n = transactions.len();
    let weighted = if n == 0 {
        sums
    } else {
        sums.into_iter().map(|s| s / n as f64).collect()
    };
    Ok(StrategySpectrum {
        bin_edges: bin_edges.to_vec(),
        weighted,
        counts,
        n_transactions: n,
    })
}
