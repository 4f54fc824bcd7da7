//! Relativistic Bohr-Sommerfeld orbits of hydrogen-like ions.
//!
//! Closed-form orbit parameters for `1 <= Z <= 137`, sampled rosette
//! trajectories with a self-intersection count, the transuranium element
//! registry with its field-strength tiers, the published reference tables,
//! and text/CSV/JSON/SVG output.
//!
//! ```
//! use sommerfeld_core::{orbit_parameters, IonSpec};
//!
//! let og = orbit_parameters(IonSpec::excited(118).unwrap());
//! assert_eq!(og.winding, 2);
//! ```

pub mod constants;
pub mod elements;
pub mod error;
pub mod geometry;
pub mod io;
pub mod model;
pub mod reference;

pub use constants::{PhysicalConstants, ALPHA, INV_ALPHA, Z_MAX};
pub use elements::{classify, element_info, registry, ElementInfo, FieldStrengthClass};
pub use error::{DomainReason, Error, Result};
pub use geometry::{
    count_self_intersections, radius_at, sample_trajectory, IntersectionReport, PeriodLimit,
    TrajectoryPoint, TrajectoryPolyline,
};
pub use model::{
    azimuthal_frequency, eccentricity, energy_ratio, ground_speed, orbit_parameters,
    perihelion_advance, semi_major_axis, winding_number, IonSpec, OrbitParameters, QuantumNumbers,
    Winding,
};
pub use reference::{
    errata_report, golden_column, golden_columns, has_new_discrepancies, validate_all, Discrepancy,
    Field, ReferenceColumn, Tolerance, Tolerances, Verdict,
};
