//! Spectrum CSV (`rho,p,i`) and its JSON sidecar.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::{IrrSpectrum, RhoGrid};
use crate::error::{Error, Result};
use crate::table;

const HEADER: [&str; 3] = ["rho", "p", "i"];

/// Metadata written next to a spectrum CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSidecar {
    pub series_id: String,
    pub tau: usize,
    pub eligible_starts: usize,
    pub rho_star: f64,
    pub i_star: f64,
    /// `None` when no start reached the barrier at `rho_star`.
    pub multi_period_fraction: Option<f64>,
}

pub fn write_spectrum_csv<W: Write>(spectrum: &IrrSpectrum, mut out: W) -> Result<()> {
    writeln!(out, "{}", HEADER.join(","))?;
    for ((rho, p), i) in spectrum
        .grid
        .values()
        .iter()
        .zip(&spectrum.p)
        .zip(&spectrum.density)
    {
        writeln!(out, "{rho},{p},{i}")?;
    }
    Ok(())
}

/// Rows of a spectrum CSV as `(rho, p, i)`.
pub fn read_spectrum_csv<R: Read>(source: R) -> Result<Vec<(f64, f64, f64)>> {
    Ok(table::read_numeric(source, &HEADER)?
        .into_iter()
        .map(|r| (r[0], r[1], r[2]))
        .collect())
}

/// Rebuilds a spectrum from its CSV and sidecar.
pub fn read_spectrum<R: Read>(csv: R, sidecar: &SpectrumSidecar) -> Result<IrrSpectrum> {
    let rows = read_spectrum_csv(csv)?;
    let grid = RhoGrid::new(rows.iter().map(|r| r.0).collect())?;
    let p: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let density: Vec<f64> = rows.iter().map(|r| r.2).collect();
    if let Some(k) = (0..p.len()).find(|&k| density[k] != grid.values()[k] * p[k]) {
        return Err(Error::parse(k + 2, "column i differs from rho * p"));
    }
    Ok(IrrSpectrum {
        grid,
        p,
        density,
        tau: sidecar.tau,
        eligible_starts: sidecar.eligible_starts,
        series_id: sidecar.series_id.clone(),
    })
}
