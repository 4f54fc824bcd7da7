//! Serialization of parameter tables and trajectories, and SVG rendering.
//!
//! All writers are deterministic: no timestamps, no locale, `.` as the
//! decimal point and `\n` line endings.

pub mod format;
pub mod svg;
pub mod table;
pub mod trajectory;

pub use svg::{default_revolutions, render_orbit_svg, render_svg, RenderOptions, Viewport};
pub use table::{
    write_parameter_column, write_parameter_table, write_parameters_json, TableFormat, TableRow,
};
pub use trajectory::{read_trajectory_csv, write_trajectory_csv};
