//! Shared binning rules: left-closed bins, last bin closed on the right.

use crate::error::{Error, Result};

/// `bins` equal-width bins from `lo` to `hi`; the last edge is exactly `hi`.
pub fn uniform_edges(lo: f64, hi: f64, bins: usize) -> Vec<f64> {
    (0..=bins)
        .map(|k| {
            if k == bins {
                hi
            } else {
                lo + (hi - lo) * k as f64 / bins as f64
            }
        })
        .collect()
}

pub fn check_edges(edges: &[f64]) -> Result<()> {
    if edges.len() < 2 {
        return Err(Error::InvalidConfig("need at least two bin edges".into()));
    }
    if edges.iter().any(|e| !e.is_finite()) || edges.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidConfig(
            "bin edges must be finite and strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Bin holding `x`, or `None` outside `[first edge, last edge]` (and for NaN).
pub fn bin_of(edges: &[f64], x: f64) -> Option<usize> {
    let (lo, hi) = (edges[0], edges[edges.len() - 1]);
    if !(x >= lo && x <= hi) {
        return None;
    }
    Some((edges.partition_point(|&e| e <= x) - 1).min(edges.len() - 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bin_boundaries() {
        let edges = [0.0, 0.5, 1.0];
        assert_eq!(bin_of(&edges, 0.0), Some(0));
        assert_eq!(bin_of(&edges, 0.5), Some(1));
        assert_eq!(bin_of(&edges, 1.0), Some(1));
        assert_eq!(bin_of(&edges, 1.0000001), None);
        assert_eq!(bin_of(&edges, f64::NAN), None);
    }
}
