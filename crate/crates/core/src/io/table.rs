use std::io::Write;
use std::str::FromStr;

use crate::elements::{element_info, ElementInfo};
use crate::error::{Error, Result};
use crate::io::format::format_significant;
use crate::model::OrbitParameters;
use crate::reference::Field;

/// Significant digits for lossless binary64 output.
pub const LOSSLESS_DIGITS: usize = 17;

/// Significant digits shown in text tables, as many as the printed tables carry.
const TEXT_DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::Argument(format!("unknown format `{other}`"))),
        }
    }
}

/// One ion: its parameters and, when `92 <= z <= 137`, its registry entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub params: OrbitParameters,
    pub element: Option<&'static ElementInfo>,
}

impl TableRow {
    pub fn new(params: OrbitParameters) -> Self {
        TableRow {
            params,
            element: element_info(params.z()).ok(),
        }
    }

    pub fn ion_label(&self) -> String {
        self.element
            .map(ElementInfo::ion_label)
            .unwrap_or_else(|| format!("Z={}", self.params.z()))
    }

    fn checked(&self) -> Result<()> {
        for field in Field::ALL {
            if !field.of_params(&self.params).is_finite() {
                return Err(Error::NonFinite(field.name()));
            }
        }
        Ok(())
    }
}

pub fn write_parameter_table<W: Write>(
    rows: &[TableRow],
    format: TableFormat,
    mut sink: W,
) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::Argument(
            "parameter table needs at least one row".into(),
        ));
    }
    for row in rows {
        row.checked()?;
    }
    match format {
        TableFormat::Text => write_text(rows, &mut sink)?,
        TableFormat::Csv => write_csv(rows, &mut sink)?,
        TableFormat::Json => {
            writeln!(sink, "[")?;
            for (i, row) in rows.iter().enumerate() {
                let sep = if i + 1 < rows.len() { "," } else { "" };
                writeln!(sink, "  {}{sep}", json_object(row))?;
            }
            writeln!(sink, "]")?;
        }
    }
    sink.flush()?;
    Ok(())
}

/// A single row as one JSON object.
pub fn write_parameters_json<W: Write>(row: &TableRow, mut sink: W) -> Result<()> {
    row.checked()?;
    writeln!(sink, "{}", json_object(row))?;
    sink.flush()?;
    Ok(())
}

/// A single row as nine `label value` lines, formatted like the text table.
pub fn write_parameter_column<W: Write>(row: &TableRow, mut sink: W) -> Result<()> {
    row.checked()?;
    let width = Field::ALL
        .iter()
        .map(|f| f.label().chars().count())
        .max()
        .unwrap_or(0);
    for field in Field::ALL {
        let label = field.label();
        let pad = width - label.chars().count();
        writeln!(
            sink,
            "{label}{}  {}",
            " ".repeat(pad),
            text_cell(field, &row.params)
        )?;
    }
    sink.flush()?;
    Ok(())
}

fn lossless(x: f64) -> String {
    format_significant(x, LOSSLESS_DIGITS)
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization cannot fail")
}

fn json_object(row: &TableRow) -> String {
    let p = &row.params;
    let mut parts = vec![
        format!("\"z\":{}", p.z()),
        format!("\"n_r\":{}", p.ion.qn().n_r()),
        format!("\"n_theta\":{}", p.ion.qn().n_theta()),
    ];
    match row.element {
        Some(e) => {
            parts.push(format!("\"symbol\":{}", json_string(e.symbol)));
            parts.push(format!("\"name\":{}", json_string(e.name)));
            parts.push(format!("\"ion\":{}", json_string(&e.ion_label())));
            parts.push(format!("\"hypothetical\":{}", e.hypothetical));
        }
        None => {
            for key in ["symbol", "name", "ion", "hypothetical"] {
                parts.push(format!("\"{key}\":null"));
            }
        }
    }
    for field in Field::ALL {
        parts.push(format!(
            "\"{}\":{}",
            field.name(),
            lossless(field.of_params(p))
        ));
    }
    parts.push(format!("\"winding\":{}", p.winding));
    format!("{{{}}}", parts.join(","))
}

fn write_csv<W: Write>(rows: &[TableRow], sink: &mut W) -> Result<()> {
    let fields: Vec<&str> = Field::ALL.iter().map(|f| f.name()).collect();
    writeln!(
        sink,
        "z,symbol,ion,n_r,n_theta,{},winding",
        fields.join(",")
    )?;
    for row in rows {
        let p = &row.params;
        let values: Vec<String> = Field::ALL
            .iter()
            .map(|f| lossless(f.of_params(p)))
            .collect();
        writeln!(
            sink,
            "{},{},{},{},{},{},{}",
            p.z(),
            row.element.map_or("", |e| e.symbol),
            row.ion_label(),
            p.ion.qn().n_r(),
            p.ion.qn().n_theta(),
            values.join(","),
            p.winding
        )?;
    }
    Ok(())
}

fn text_cell(field: Field, p: &OrbitParameters) -> String {
    match field {
        Field::WindingRaw => format!("{:.3} ({})", p.winding_raw, p.winding),
        Field::VGround => format!("{:.3}", p.ground_speed),
        f => format_significant(f.of_params(p), TEXT_DIGITS),
    }
}

/// Printed-table layout: one column per ion, one row per parameter.
fn write_text<W: Write>(rows: &[TableRow], sink: &mut W) -> Result<()> {
    let corner = "Parameters vs Z";
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(Field::ALL.len() + 1);
    let mut header = vec![corner.to_string()];
    header.extend(rows.iter().map(TableRow::ion_label));
    grid.push(header);
    for field in Field::ALL {
        let mut line = vec![field.label().to_string()];
        line.extend(rows.iter().map(|r| text_cell(field, &r.params)));
        grid.push(line);
    }

    let columns = rows.len() + 1;
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            grid.iter()
                .map(|line| line[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for line in &grid {
        let mut out = String::new();
        for (c, cell) in line.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if c + 1 < columns {
                let pad = widths[c] - cell.chars().count();
                out.extend(std::iter::repeat_n(' ', pad));
            }
        }
        writeln!(sink, "{out}")?;
    }
    Ok(())
}
