//! Physical constants.
//!
//! Everything in this crate is expressed in natural atomic units: lengths in
//! Bohr radii, energies in units of the electron rest energy `mc²`, speeds in
//! units of `c`. The only dimensionless number that has to be stored is the
//! fine-structure constant.

/// CODATA-2018 fine-structure constant.
pub const ALPHA: f64 = 7.297_352_569_3e-3;

/// `1 / ALPHA`, derived from [`ALPHA`] so the pair is consistent to the last place.
pub const INV_ALPHA: f64 = 1.0 / ALPHA;

/// Largest nuclear charge for which the `n_theta = 1` states stay real.
pub const Z_MAX: u32 = 137;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub alpha: f64,
    pub inv_alpha: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        alpha: ALPHA,
        inv_alpha: INV_ALPHA,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}
