use std::io::{BufRead, BufReader, Read, Write};

use super::PriceSeries;
use crate::error::{Error, Result};

/// Parses `timestamp,price` rows. A single leading header row is skipped
/// when its price field is not numeric; blank lines are ignored. Errors
/// carry the 1-based line number in the source.
pub fn ingest_csv<R: Read>(source: R, id: &str) -> Result<PriceSeries> {
    let mut timestamps = Vec::new();
    let mut prices = Vec::new();
    let mut first_row = true;
    for (idx, line) in BufReader::new(source).lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| match e.kind() {
            std::io::ErrorKind::InvalidData => Error::parse(line_no, "not valid UTF-8"),
            _ => Error::Io(e),
        })?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let is_first = std::mem::replace(&mut first_row, false);
        let mut fields = line.split(',');
        let (Some(ts_field), Some(price_field), None) =
            (fields.next(), fields.next(), fields.next())
        else {
            return Err(Error::parse(line_no, "expected `timestamp,price`"));
        };
        let price = match price_field.trim().parse::<f64>() {
            Ok(p) => p,
            Err(_) if is_first => continue,
            Err(_) => {
                return Err(Error::parse(
                    line_no,
                    format!("invalid price `{}`", price_field.trim()),
                ))
            }
        };
        let timestamp = ts_field.trim().parse::<i64>().map_err(|_| {
            Error::parse(line_no, format!("invalid timestamp `{}`", ts_field.trim()))
        })?;
        if !(price.is_finite() && price > 0.0) {
            return Err(Error::InvalidPrice {
                line: line_no,
                price,
            });
        }
        if timestamps.last().is_some_and(|&last| timestamp <= last) {
            return Err(Error::NonIncreasingTimestamp {
                line: line_no,
                timestamp,
            });
        }
        timestamps.push(timestamp);
        prices.push(price);
    }
    PriceSeries::from_parts(id, timestamps, prices)
}

/// Writes `timestamp,price` rows with LF endings. Prices use the shortest
/// decimal form that parses back to the same `f64`.
pub fn write_csv<W: Write>(series: &PriceSeries, mut out: W, header: bool) -> Result<()> {
    if header {
        writeln!(out, "timestamp,price")?;
    }
    for p in series.points() {
        writeln!(out, "{},{}", p.timestamp, p.price)?;
    }
    Ok(())
}
