//! Minimal reader for the numeric CSV tables this crate writes.

use std::io::{BufRead, BufReader, Read};

use crate::error::{Error, Result};

/// Reads a CSV table whose first line must equal `header` and whose
/// remaining lines hold exactly `header.len()` numeric fields.
pub(crate) fn read_numeric<R: Read>(source: R, header: &[&str]) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    let mut saw_header = false;
    for (idx, line) in BufReader::new(source).lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if !saw_header {
            if fields != header {
                return Err(Error::parse(
                    line_no,
                    format!("expected header `{}`", header.join(",")),
                ));
            }
            saw_header = true;
            continue;
        }
        if fields.len() != header.len() {
            return Err(Error::parse(
                line_no,
                format!("expected {} fields, found {}", header.len(), fields.len()),
            ));
        }
        let row = fields
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| Error::parse(line_no, format!("invalid number `{f}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if !saw_header {
        return Err(Error::parse(1, "missing header"));
    }
    Ok(rows)
}
