use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use tempfile::NamedTempFile;

use crate::Failure;

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never observe a partial artifact.
pub fn write_atomic<F>(path: &Path, fill: F) -> Result<(), Failure>
where
    F: FnOnce(&mut BufWriter<&mut NamedTempFile>) -> irr_spectra::Result<()>,
{
    let fail = |e: &dyn std::fmt::Display| Failure::Data(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| fail(&e))?;
    {
        let mut w = BufWriter::new(&mut tmp);
        fill(&mut w).map_err(|e| fail(&e))?;
        w.flush().map_err(|e| fail(&e))?;
    }
    tmp.persist(path).map_err(|e| fail(&e.error))?;
    Ok(())
}

pub fn json<W: Write, T: Serialize>(mut w: W, value: &T) -> irr_spectra::Result<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

/// `spec.csv` -> `spec.json`; an output already ending in `.json` gets
/// `.meta.json` instead.
pub fn sidecar_path(output: &Path) -> PathBuf {
    let candidate = output.with_extension("json");
    if candidate == output {
        output.with_extension("meta.json")
    } else {
        candidate
    }
}

/// `report.json` -> `report_tau3.csv`.
pub fn tau_csv_path(output: &Path, tau: usize) -> PathBuf {
    let stem = output
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "report".into());
    output.with_file_name(format!("{stem}_tau{tau}.csv"))
}
