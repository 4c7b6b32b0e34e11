//! JSON and CSV writers.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::config::UsageError;

fn io_error(path: &Path, e: std::io::Error) -> UsageError {
    UsageError(format!("cannot write {}: {e}", path.display()))
}

/// 17 significant digits, enough to round-trip any f64.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv_string(header: &[&str], rows: &[[f64; 3]]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for r in rows {
        let cells: Vec<String> = r.iter().map(|&v| format_f64(v)).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

pub fn write_csv(path: &Path, header: &[&str], rows: &[[f64; 3]]) -> Result<(), UsageError> {
    fs::write(path, csv_string(header, rows)).map_err(|e| io_error(path, e))
}

/// Writes `text` to `path`, or to `stdout` when no path is given.
pub fn write_json(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), UsageError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_error(p, e)),
        None => stdout.write_all(text.as_bytes()).map_err(|e| UsageError(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_precision() {
        let x = 0.1f64 + 0.2;
        let s = format_f64(x);
        assert_eq!(s.parse::<f64>().unwrap(), x);
        assert_eq!(s.trim_start_matches('-').split('e').next().unwrap().replace('.', "").len(), 17);
        assert_eq!(csv_string(&["a", "b", "c"], &[[1.0, -2.0, 0.5]]).lines().count(), 2);
    }
}
