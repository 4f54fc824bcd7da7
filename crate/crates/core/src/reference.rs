//! The published orbit-parameter tables as golden data, and validation of
//! recomputed values against them.
//!
//! The tables are embedded from `data/golden_tables.csv`, one record per
//! printed column:
//!
//! | column | meaning |
//! |---|---|
//! | `table` | table number, 1..=9 |
//! | `column` | column position in the printed table (2..=6; column 1 holds row labels) |
//! | `z` | nuclear charge the column describes |
//! | `ion` | ion label exactly as printed in the header |
//! | `omega` .. `winding_raw` | printed values with typesetting spaces removed |
//! | `rotation` | `CW` or `CCW`, kept as metadata only |
//!
//! Which cells are misprints is hard-coded in [`KNOWN_ERRATA`], not in the asset.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::elements::{classify, element_info, FIRST_Z, LAST_Z};
use crate::io::format::format_significant;
use crate::model::{orbit_parameters, IonSpec, OrbitParameters};

const GOLDEN_CSV: &str = include_str!("../data/golden_tables.csv");

/// One row of a printed table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    Omega,
    Epsilon,
    AOverA0,
    RMin,
    RMax,
    DeltaTheta,
    VGround,
    EnergyRatio,
    WindingRaw,
}

impl Field {
    /// Printed row order.
    pub const ALL: [Field; 9] = [
        Field::Omega,
        Field::Epsilon,
        Field::AOverA0,
        Field::RMin,
        Field::RMax,
        Field::DeltaTheta,
        Field::VGround,
        Field::EnergyRatio,
        Field::WindingRaw,
    ];

    /// Machine name, as used for CSV and JSON keys.
    pub fn name(self) -> &'static str {
        match self {
            Field::Omega => "omega",
            Field::Epsilon => "epsilon",
            Field::AOverA0 => "a_over_a0",
            Field::RMin => "r_min",
            Field::RMax => "r_max",
            Field::DeltaTheta => "delta_theta",
            Field::VGround => "v_ground",
            Field::EnergyRatio => "energy_ratio",
            Field::WindingRaw => "winding_raw",
        }
    }

    /// Row label for text tables.
    pub fn label(self) -> &'static str {
        match self {
            Field::Omega => "ω",
            Field::Epsilon => "ε",
            Field::AOverA0 => "a/a₀",
            Field::RMin => "r_min",
            Field::RMax => "r_max",
            Field::DeltaTheta => "Δθ",
            Field::VGround => "v_ground/c",
            Field::EnergyRatio => "E/mc²",
            Field::WindingRaw => "winding",
        }
    }

    pub fn of_params(self, p: &OrbitParameters) -> f64 {
        match self {
            Field::Omega => p.omega,
            Field::Epsilon => p.epsilon,
            Field::AOverA0 => p.a_over_a0,
            Field::RMin => p.r_min,
            Field::RMax => p.r_max,
            Field::DeltaTheta => p.delta_theta,
            Field::VGround => p.ground_speed,
            Field::EnergyRatio => p.energy_ratio,
            Field::WindingRaw => p.winding_raw,
        }
    }

    pub fn of_column(self, c: &ReferenceColumn) -> f64 {
        match self {
            Field::Omega => c.omega,
            Field::Epsilon => c.epsilon,
            Field::AOverA0 => c.a_over_a0,
            Field::RMin => c.r_min,
            Field::RMax => c.r_max,
            Field::DeltaTheta => c.delta_theta,
            Field::VGround => c.v_ground,
            Field::EnergyRatio => c.energy_ratio,
            Field::WindingRaw => c.winding_raw,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rotation {
    #[serde(rename = "CW")]
    Clockwise,
    #[serde(rename = "CCW")]
    Counterclockwise,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceColumn {
    #[serde(rename = "table")]
    pub table_no: u8,
    pub column: u8,
    pub z: u32,
    #[serde(rename = "ion")]
    pub ion_label: String,
    pub omega: f64,
    pub epsilon: f64,
    pub a_over_a0: f64,
    pub r_min: f64,
    pub r_max: f64,
    pub delta_theta: f64,
    pub v_ground: f64,
    pub energy_ratio: f64,
    pub winding_raw: f64,
    pub rotation: Rotation,
}

impl ReferenceColumn {
    pub fn printed(&self, field: Field) -> f64 {
        field.of_column(self)
    }

    /// Cells of this column known to be misprinted.
    pub fn erratum_fields(&self) -> &'static [Field] {
        KNOWN_ERRATA
            .iter()
            .find(|(z, _)| *z == self.z)
            .map_or(&[], |(_, fields)| fields)
    }

    pub fn known_erratum(&self) -> bool {
        !self.erratum_fields().is_empty()
    }

    pub fn is_known_erratum(&self, field: Field) -> bool {
        self.erratum_fields().contains(&field)
    }
}

/// Misprinted cells: Z=103's eccentricity repeats Z=98's, and every row
/// of the Z=120 column except the winding repeats Z=115.
pub const KNOWN_ERRATA: &[(u32, &[Field])] = &[
    (103, &[Field::Epsilon]),
    (
        120,
        &[
            Field::Omega,
            Field::Epsilon,
            Field::AOverA0,
            Field::RMin,
            Field::RMax,
            Field::DeltaTheta,
            Field::VGround,
            Field::EnergyRatio,
        ],
    ),
];

pub fn parse_columns(csv_text: &str) -> Result<Vec<ReferenceColumn>, csv::Error> {
    csv::Reader::from_reader(csv_text.as_bytes())
        .deserialize()
        .collect()
}

pub fn write_columns(columns: &[ReferenceColumn]) -> Result<String, csv::Error> {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    for c in columns {
        w.serialize(c)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv writer emits UTF-8"))
}

/// All embedded columns in ascending `z`.
pub fn golden_columns() -> &'static [ReferenceColumn] {
    static COLUMNS: OnceLock<Vec<ReferenceColumn>> = OnceLock::new();
    COLUMNS.get_or_init(|| {
        let mut cols = parse_columns(GOLDEN_CSV).expect("embedded golden table is well-formed");
        cols.sort_by_key(|c| c.z);
        cols
    })
}

pub fn golden_column(z: u32) -> Option<&'static ReferenceColumn> {
    golden_columns().iter().find(|c| c.z == z)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    Relative(f64),
    Absolute(f64),
}

impl Tolerance {
    pub fn accepts(self, printed: f64, recomputed: f64) -> bool {
        let diff = (printed - recomputed).abs();
        match self {
            Tolerance::Relative(tol) => diff <= tol * recomputed.abs(),
            Tolerance::Absolute(tol) => diff <= tol,
        }
    }
}

/// Per-field acceptance thresholds for [`validate_all`].
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances(BTreeMap<Field, Tolerance>);

impl Tolerances {
    pub fn uniform(tol: Tolerance) -> Self {
        Tolerances(Field::ALL.iter().map(|&f| (f, tol)).collect())
    }

    pub fn with(mut self, field: Field, tol: Tolerance) -> Self {
        self.0.insert(field, tol);
        self
    }

    pub fn get(&self, field: Field) -> Tolerance {
        self.0[&field]
    }
}

impl Default for Tolerances {
    /// Relative 5e-5 everywhere except the ground speed, which is printed
    /// with three decimals and gets absolute 5e-4.
    fn default() -> Self {
        Tolerances::uniform(Tolerance::Relative(5e-5))
            .with(Field::VGround, Tolerance::Absolute(5e-4))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    WithinTolerance,
    KnownErratum,
    NewDiscrepancy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub z: u32,
    pub field: Field,
    pub printed: f64,
    pub recomputed: f64,
    pub relative_error: f64,
    pub verdict: Verdict,
}

impl Discrepancy {
    pub fn absolute_error(&self) -> f64 {
        (self.printed - self.recomputed).abs()
    }
}

/// Compares every printed cell with `orbit_parameters(z, (1, 1))`.
///
/// Returns one entry per (column, field), ordered by `z` then printed row.
pub fn validate_all(tolerances: &Tolerances) -> Vec<Discrepancy> {
    let mut out = Vec::with_capacity(golden_columns().len() * Field::ALL.len());
    for col in golden_columns() {
        let ion = IonSpec::excited(col.z).expect("golden columns lie in 92..=137");
        let params = orbit_parameters(ion);
        for field in Field::ALL {
            let printed = col.printed(field);
            let recomputed = field.of_params(&params);
            let verdict = if tolerances.get(field).accepts(printed, recomputed) {
                Verdict::WithinTolerance
            } else if col.is_known_erratum(field) {
                Verdict::KnownErratum
            } else {
                Verdict::NewDiscrepancy
            };
            out.push(Discrepancy {
                z: col.z,
                field,
                printed,
                recomputed,
                relative_error: (printed - recomputed).abs() / recomputed.abs(),
                verdict,
            });
        }
    }
    out
}

pub fn has_new_discrepancies(results: &[Discrepancy]) -> bool {
    results.iter().any(|d| d.verdict == Verdict::NewDiscrepancy)
}

/// Other columns whose printed value for `field` equals this column's.
fn printed_duplicates(z: u32, field: Field) -> Vec<u32> {
    let Some(col) = golden_column(z) else {
        return Vec::new();
    };
    let value = col.printed(field);
    golden_columns()
        .iter()
        .filter(|c| c.z != z && c.printed(field) == value)
        .map(|c| c.z)
        .collect()
}

fn ion(z: u32) -> String {
    golden_column(z)
        .map(|c| c.ion_label.clone())
        .or_else(|| element_info(z).ok().map(|e| e.ion_label()))
        .unwrap_or_else(|| format!("Z={z}"))
}

fn cell_line(d: &Discrepancy) -> String {
    format!(
        "{:<12} printed {:<11} recomputed {:<11} rel. error {}",
        d.field.name(),
        format_significant(d.printed, 6),
        format_significant(d.recomputed, 6),
        format_significant(d.relative_error, 3),
    )
}

/// Human-readable summary of the validation run: every known erratum and
/// new discrepancy, followed by notes on inconsistencies that are not
/// table cells.
pub fn errata_report(results: &[Discrepancy]) -> String {
    let count = |v: Verdict| results.iter().filter(|d| d.verdict == v).count();
    let mut cells: Vec<&Discrepancy> = results.iter().collect();
    cells.sort_by_key(|d| (d.z, d.field));

    let mut s = String::new();
    let columns: std::collections::BTreeSet<u32> = results.iter().map(|d| d.z).collect();
    writeln!(
        s,
        "Golden table validation: {} columns, {} cells",
        columns.len(),
        results.len()
    )
    .unwrap();
    writeln!(
        s,
        "  within tolerance:  {}",
        count(Verdict::WithinTolerance)
    )
    .unwrap();
    writeln!(s, "  known errata:      {}", count(Verdict::KnownErratum)).unwrap();
    writeln!(s, "  new discrepancies: {}", count(Verdict::NewDiscrepancy)).unwrap();

    writeln!(s, "\nKnown errata").unwrap();
    let mut known: BTreeMap<u32, Vec<&Discrepancy>> = BTreeMap::new();
    for d in cells.iter().filter(|d| d.verdict == Verdict::KnownErratum) {
        known.entry(d.z).or_default().push(d);
    }
    if known.is_empty() {
        writeln!(s, "  (none)").unwrap();
    }
    for (z, group) in &known {
        let table = golden_column(*z).map_or(0, |c| c.table_no);
        // A source column that every flagged cell duplicates.
        let mut sources: Option<Vec<u32>> = None;
        for d in group {
            let dup = printed_duplicates(*z, d.field);
            sources = Some(match sources {
                None => dup,
                Some(prev) => prev.into_iter().filter(|x| dup.contains(x)).collect(),
            });
        }
        let source = sources.unwrap_or_default().first().copied();
        match (group.len(), source) {
            (1, Some(src)) => writeln!(
                s,
                "  Z={z} {} (table {table}): {} cell repeats the printed Z={src} value",
                ion(*z),
                group[0].field.name()
            ),
            (_, Some(src)) => writeln!(
                s,
                "  Z={z} {} (table {table}): column duplicates Z={src} {} in {} rows",
                ion(*z),
                ion(src),
                group.len()
            ),
            (_, None) => writeln!(s, "  Z={z} {} (table {table}):", ion(*z)),
        }
        .unwrap();
        for d in group {
            writeln!(s, "    {}", cell_line(d)).unwrap();
        }
        if group.len() > 1 {
            if let (Some(col), Some(src)) = (golden_column(*z), source) {
                for d in results
                    .iter()
                    .filter(|d| d.z == *z && !col.is_known_erratum(d.field))
                {
                    writeln!(
                        s,
                        "    {:<12} printed {:<11} recomputed {:<11} (not copied from Z={src}; abs. error {})",
                        d.field.name(),
                        format_significant(d.printed, 6),
                        format_significant(d.recomputed, 6),
                        format_significant(d.absolute_error(), 2),
                    )
                    .unwrap();
                }
            }
        }
    }

    writeln!(s, "\nNew discrepancies").unwrap();
    let new: Vec<_> = cells
        .iter()
        .filter(|d| d.verdict == Verdict::NewDiscrepancy)
        .collect();
    if new.is_empty() {
        writeln!(s, "  (none)").unwrap();
    }
    for d in new {
        writeln!(s, "  Z={:<3} {:<10} {}", d.z, ion(d.z), cell_line(d)).unwrap();
    }

    writeln!(s, "\nNotes").unwrap();
    for note in notes() {
        writeln!(s, "  - {note}").unwrap();
    }
    s
}

/// Inconsistencies that do not live in a single table cell.
pub fn notes() -> Vec<String> {
    let mut notes = Vec::new();

    let utq = orbit_parameters(IonSpec::excited(134).expect("134 is valid"));
    notes.push(format!(
        "Z=134 {}: the published rosette caption gives winding number 7, but the tabulated raw value {} \
         (recomputed {}) rounds to {}.",
        ion(134),
        golden_column(134).map_or(String::from("?"), |c| format_significant(c.winding_raw, 4)),
        format_significant(utq.winding_raw, 5),
        utq.winding
    ));
    notes.push(
        "Table 8: matching printed omega against recomputation places its columns at \
         Z=127..131 (headers Ubs..Utu), while the element-by-element text assigns column 5 to \
         Z=131 and column 6 to Z=132."
            .to_string(),
    );
    notes.push("Z=132 has no printed column; its values are computed only.".to_string());

    let mut off_tier = Vec::new();
    for z in FIRST_Z..=LAST_Z {
        let p = orbit_parameters(IonSpec::excited(z).expect("registry Z is valid"));
        let class = classify(z).expect("registry Z is classified");
        if !class.admits_winding(p.winding) {
            off_tier.push(format!("{z} ({}, {})", class.label(), p.winding));
        }
    }
    if !off_tier.is_empty() {
        notes.push(format!(
            "Rounded winding number disagrees with the tier's loop count for Z = {}.",
            off_tier.join(", ")
        ));
    }
    notes
}
