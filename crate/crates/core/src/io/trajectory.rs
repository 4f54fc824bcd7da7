use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::geometry::{TrajectoryPoint, TrajectoryPolyline};
use crate::io::format::format_significant;

/// Significant digits per value in trajectory CSV.
pub const TRAJECTORY_DIGITS: usize = 9;

pub const TRAJECTORY_HEADER: &str = "theta,r,x,y";

/// Writes `theta,r,x,y` rows, one per sample.
pub fn write_trajectory_csv<W: Write>(poly: &TrajectoryPolyline, mut sink: W) -> Result<()> {
    let f = |v: f64| format_significant(v, TRAJECTORY_DIGITS);
    writeln!(sink, "{TRAJECTORY_HEADER}")?;
    for p in poly.points() {
        writeln!(sink, "{},{},{},{}", f(p.theta), f(p.r), f(p.x), f(p.y))?;
    }
    sink.flush()?;
    Ok(())
}

/// Reads the output of [`write_trajectory_csv`] back into points.
pub fn read_trajectory_csv<R: BufRead>(reader: R) -> Result<Vec<TrajectoryPoint>> {
    let mut lines = reader.lines();
    let header = lines.next().transpose()?;
    if header.as_deref().map(str::trim_end) != Some(TRAJECTORY_HEADER) {
        return Err(Error::Argument(format!(
            "expected header `{TRAJECTORY_HEADER}`"
        )));
    }
    let mut points = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let values: Vec<f64> = line
            .split(',')
            .map(|v| v.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Argument(format!("row {}: {e}", i + 1)))?;
        let [theta, r, x, y] = values[..] else {
            return Err(Error::Argument(format!("row {}: expected 4 fields", i + 1)));
        };
        points.push(TrajectoryPoint { theta, r, x, y });
    }
    Ok(points)
}
