//! Report JSON and per-tau CSV (`rho,i_a,i_b,delta`).

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::TauSeriesReport;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TauEntry {
    pub tau: usize,
    pub delta: Vec<f64>,
    pub nodes: usize,
    pub sup_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub taus: Vec<usize>,
    pub grid: Vec<f64>,
    pub per_tau: Vec<TauEntry>,
}

impl From<&TauSeriesReport> for ReportJson {
    fn from(r: &TauSeriesReport) -> Self {
        Self {
            taus: r.taus.clone(),
            grid: r.grid.values().to_vec(),
            per_tau: r
                .taus
                .iter()
                .enumerate()
                .map(|(k, &tau)| TauEntry {
                    tau,
                    delta: r.deltas[k].clone(),
                    nodes: r.nodes[k],
                    sup_norm: r.sup_norm[k],
                })
                .collect(),
        }
    }
}

pub fn write_report_json<W: Write>(report: &TauSeriesReport, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, &ReportJson::from(report))?;
    writeln!(out)?;
    Ok(())
}

pub fn read_report_json<R: Read>(source: R) -> Result<ReportJson> {
    Ok(serde_json::from_reader(source)?)
}

/// CSV for the tau at position `k` of the report.
pub fn write_tau_csv<W: Write>(report: &TauSeriesReport, k: usize, mut out: W) -> Result<()> {
    writeln!(out, "rho,i_a,i_b,delta")?;
    let (a, b) = (&report.spectra_a[k].density, &report.spectra_b[k].density);
    for (j, rho) in report.grid.values().iter().enumerate() {
        writeln!(out, "{rho},{},{},{}", a[j], b[j], report.deltas[k][j])?;
    }
    Ok(())
}
