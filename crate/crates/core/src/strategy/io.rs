//! Strategy spectrum CSV (`rho_bin_center,weighted,count`) and the
//! transaction audit CSV (`i_b,i_s,duration,rho`).

use std::io::{Read, Write};

use super::{StrategySpectrum, Transaction};
use crate::error::{Error, Result};
use crate::table;

const SPECTRUM_HEADER: [&str; 3] = ["rho_bin_center", "weighted", "count"];
const TX_HEADER: [&str; 4] = ["i_b", "i_s", "duration", "rho"];

pub fn write_strategy_spectrum_csv<W: Write>(
    spectrum: &StrategySpectrum,
    mut out: W,
) -> Result<()> {
    writeln!(out, "{}", SPECTRUM_HEADER.join(","))?;
    for ((c, w), n) in spectrum
        .bin_centers()
        .iter()
        .zip(&spectrum.weighted)
        .zip(&spectrum.counts)
    {
        writeln!(out, "{c},{w},{n}")?;
    }
    Ok(())
}

/// Rows as `(bin_center, weighted, count)`.
pub fn read_strategy_spectrum_csv<R: Read>(source: R) -> Result<Vec<(f64, f64, usize)>> {
    table::read_numeric(source, &SPECTRUM_HEADER)?
        .into_iter()
        .enumerate()
        .map(|(k, r)| Ok((r[0], r[1], as_count(r[2], k + 2)?)))
        .collect()
}

pub fn write_transactions_csv<W: Write>(transactions: &[Transaction], mut out: W) -> Result<()> {
    writeln!(out, "{}", TX_HEADER.join(","))?;
    for t in transactions {
        writeln!(out, "{},{},{},{}", t.i_b, t.i_s, t.duration, t.rho)?;
    }
    Ok(())
}

pub fn read_transactions_csv<R: Read>(source: R) -> Result<Vec<Transaction>> {
    table::read_numeric(source, &TX_HEADER)?
        .into_iter()
        .enumerate()
        .map(|(k, r)| {
            Ok(Transaction {
                i_b: as_count(r[0], k + 2)?,
                i_s: as_count(r[1], k + 2)?,
                duration: as_count(r[2], k + 2)?,
                rho: r[3],
            })
        })
        .collect()
}

fn as_count(x: f64, line: usize) -> Result<usize> {
    if x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64 {
        Ok(x as usize)
    } else {
        Err(Error::parse(
            line,
            format!("expected a non-negative integer, got {x}"),
        ))
    }
}
