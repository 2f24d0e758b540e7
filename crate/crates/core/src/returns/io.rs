//! Histogram CSV (`bin_left,bin_right,count`), difference CSV
//! (`bin_left,bin_right,count,delta`, where `count` is the reference
//! histogram) and the difference sidecar.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::{DiffProfile, Histogram};
use crate::error::Result;
use crate::table;

const HIST_HEADER: [&str; 3] = ["bin_left", "bin_right", "count"];
const DIFF_HEADER: [&str; 4] = ["bin_left", "bin_right", "count", "delta"];

/// JSON metadata accompanying a difference CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffSidecar {
    pub fwhm_span: (usize, usize),
    pub nodes_in_fwhm: usize,
    pub epsilon: f64,
    pub peak_ratio: f64,
    pub fwhm_width: f64,
    pub out_of_range_a: usize,
    pub out_of_range_b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffRow {
    pub bin_left: f64,
    pub bin_right: f64,
    pub count: f64,
    pub delta: f64,
}

pub fn write_histogram_csv<W: Write>(hist: &Histogram, mut out: W) -> Result<()> {
    writeln!(out, "{}", HIST_HEADER.join(","))?;
    for (w, c) in hist.bin_edges.windows(2).zip(&hist.counts) {
        writeln!(out, "{},{},{c}", w[0], w[1])?;
    }
    Ok(())
}

/// Reads a histogram CSV back. The out-of-range count is not part of the
/// file and comes back as zero; `normalized` is supplied by the caller.
pub fn read_histogram_csv<R: Read>(source: R, normalized: bool) -> Result<Histogram> {
    let rows = table::read_numeric(source, &HIST_HEADER)?;
    let mut bin_edges: Vec<f64> = rows.iter().map(|r| r[0]).collect();
    if let Some(last) = rows.last() {
        bin_edges.push(last[1]);
    }
    crate::bins::check_edges(&bin_edges)?;
    Ok(Histogram {
        bin_edges,
        counts: rows.iter().map(|r| r[2]).collect(),
        normalized,
        out_of_range: 0,
    })
}

pub fn write_diff_csv<W: Write>(
    reference: &Histogram,
    diff: &DiffProfile,
    mut out: W,
) -> Result<()> {
    writeln!(out, "{}", DIFF_HEADER.join(","))?;
    for ((w, c), d) in diff
        .bin_edges
        .windows(2)
        .zip(&reference.counts)
        .zip(&diff.delta)
    {
        writeln!(out, "{},{},{c},{d}", w[0], w[1])?;
    }
    Ok(())
}

pub fn read_diff_csv<R: Read>(source: R) -> Result<Vec<DiffRow>> {
    Ok(table::read_numeric(source, &DIFF_HEADER)?
        .into_iter()
        .map(|r| DiffRow {
            bin_left: r[0],
            bin_right: r[1],
            count: r[2],
            delta: r[3],
        })
        .collect())
}
