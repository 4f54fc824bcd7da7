//! Closed-form Bohr-Sommerfeld orbit formulas for a single electron bound to
//! a nucleus of charge `Z`.
//!
//! The public functions take an integer nuclear charge and validate it. The
//! [`closed_form`] submodule holds the same formulas written in terms of the
//! coupling `alpha * Z` as a real number, which is what the validated
//! functions call and what the non-relativistic limit tests use.

use std::f64::consts::PI;

use crate::constants::{ALPHA, Z_MAX};
use crate::error::{DomainReason, Result};

const TWO_PI: f64 = 2.0 * PI;

/// Radial and azimuthal quantum numbers `(n_r, n_theta)`.
///
/// `n_r = 0` is admitted: it is the circular ground-state orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    n_r: u32,
    n_theta: u32,
}

impl QuantumNumbers {
    /// `n_r = n_theta = 1`, the state every published table uses.
    pub const EXCITED: QuantumNumbers = QuantumNumbers { n_r: 1, n_theta: 1 };
    /// `n_r = 0, n_theta = 1`, the circular ground state.
    pub const GROUND: QuantumNumbers = QuantumNumbers { n_r: 0, n_theta: 1 };

    pub fn new(n_r: u32, n_theta: u32) -> Result<Self> {
        if n_theta == 0 {
            return Err(DomainReason::AzimuthalZero.into());
        }
        debug_assert!(n_r + n_theta >= 1);
        Ok(QuantumNumbers { n_r, n_theta })
    }

    pub fn n_r(&self) -> u32 {
        self.n_r
    }

    pub fn n_theta(&self) -> u32 {
        self.n_theta
    }
}

impl Default for QuantumNumbers {
    fn default() -> Self {
        Self::EXCITED
    }
}

/// A hydrogen-like ion in a definite state. Construction enforces
/// `1 <= z <= 137` and `alpha * z < n_theta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IonSpec {
    z: u32,
    qn: QuantumNumbers,
}

impl IonSpec {
    pub fn new(z: u32, qn: QuantumNumbers) -> Result<Self> {
        check_charge(z)?;
        check_real(z, qn.n_theta)?;
        Ok(IonSpec { z, qn })
    }

    /// Shorthand for `IonSpec::new(z, QuantumNumbers::EXCITED)`.
    pub fn excited(z: u32) -> Result<Self> {
        Self::new(z, QuantumNumbers::EXCITED)
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn coupling(&self) -> f64 {
        ALPHA * self.z as f64
    }
}

fn check_charge(z: u32) -> Result<()> {
    if !(1..=Z_MAX).contains(&z) {
        return Err(DomainReason::ChargeOutOfRange { z }.into());
    }
    Ok(())
}

fn check_real(z: u32, n_theta: u32) -> Result<()> {
    if n_theta == 0 {
        return Err(DomainReason::AzimuthalZero.into());
    }
    if ALPHA * z as f64 >= n_theta as f64 {
        return Err(DomainReason::OmegaNotReal { z, n_theta }.into());
    }
    Ok(())
}

fn check_omega(omega: f64) -> Result<()> {
    // NaN fails both comparisons and lands here too.
    if !(omega > 0.0 && omega <= 1.0) {
        return Err(DomainReason::OmegaOutOfRange(omega).into());
    }
    Ok(())
}

/// The formulas as functions of the real coupling `alpha_z = alpha * Z`.
/// Callers are responsible for `0 <= alpha_z < n_theta`.
pub mod closed_form {
    /// `sqrt(n_theta² - (alpha Z)²)`, shared by every other formula.
    pub fn reduced_azimuthal(alpha_z: f64, n_theta: u32) -> f64 {
        let nt = n_theta as f64;
        (nt * nt - alpha_z * alpha_z).sqrt()
    }

    pub fn omega(alpha_z: f64, n_theta: u32) -> f64 {
        reduced_azimuthal(alpha_z, n_theta) / n_theta as f64
    }

    pub fn eccentricity(alpha_z: f64, n_r: u32, n_theta: u32) -> f64 {
        let s = reduced_azimuthal(alpha_z, n_theta);
        let nr = n_r as f64;
        nr.sqrt() * (nr + 2.0 * s).sqrt() / (nr + s)
    }

    /// Semi-major axis times `Z`, in Bohr radii. Finite as `alpha_z -> 0`.
    pub fn scaled_semi_major_axis(alpha_z: f64, n_r: u32, n_theta: u32) -> f64 {
        let sum = n_r as f64 + reduced_azimuthal(alpha_z, n_theta);
        sum * (alpha_z * alpha_z + sum * sum).sqrt()
    }

    pub fn energy_ratio(alpha_z: f64, n_r: u32, n_theta: u32) -> f64 {
        let sum = n_r as f64 + reduced_azimuthal(alpha_z, n_theta);
        let x = alpha_z / sum;
        1.0 / (1.0 + x * x).sqrt()
    }
}

/// Ratio `omega` of the angular variable of the orbit's conic to the true
/// polar angle.
pub fn azimuthal_frequency(z: u32, n_theta: u32) -> Result<f64> {
    check_charge(z)?;
    check_real(z, n_theta)?;
    Ok(closed_form::omega(ALPHA * z as f64, n_theta))
}

pub fn eccentricity(z: u32, qn: QuantumNumbers) -> Result<f64> {
    let ion = IonSpec::new(z, qn)?;
    Ok(closed_form::eccentricity(
        ion.coupling(),
        qn.n_r,
        qn.n_theta,
    ))
}

/// Semi-major axis `a / a0`.
pub fn semi_major_axis(z: u32, qn: QuantumNumbers) -> Result<f64> {
    let ion = IonSpec::new(z, qn)?;
    Ok(closed_form::scaled_semi_major_axis(ion.coupling(), qn.n_r, qn.n_theta) / z as f64)
}

/// Total energy over rest energy, `E / mc²`.
pub fn energy_ratio(z: u32, qn: QuantumNumbers) -> Result<f64> {
    let ion = IonSpec::new(z, qn)?;
    Ok(closed_form::energy_ratio(
        ion.coupling(),
        qn.n_r,
        qn.n_theta,
    ))
}

/// Nearest integer, ties away from zero.
fn nearest_winding(raw: f64) -> u32 {
    raw.round() as u32
}

/// `1/omega - 1`. Exact subtraction for `omega >= 1/2`.
fn excess_turns(omega: f64) -> f64 {
    (1.0 - omega) / omega
}

/// Angle by which the perihelion advances per radial period, in radians.
pub fn perihelion_advance(omega: f64) -> Result<f64> {
    check_omega(omega)?;
    Ok(TWO_PI * excess_turns(omega))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Winding {
    pub raw: f64,
    pub rounded: u32,
}

/// `2 (1/omega - 1)` and its nearest integer (ties away from zero).
pub fn winding_number(omega: f64) -> Result<Winding> {
    check_omega(omega)?;
    let raw = 2.0 * excess_turns(omega);
    Ok(Winding {
        raw,
        rounded: nearest_winding(raw),
    })
}

/// Ground-state electron speed over `c`, which is `alpha * Z`.
pub fn ground_speed(z: u32) -> Result<f64> {
    check_charge(z)?;
    Ok(ALPHA * z as f64)
}

/// Every derived quantity for one ion and state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitParameters {
    pub ion: IonSpec,
    pub omega: f64,
    pub epsilon: f64,
    pub a_over_a0: f64,
    pub r_min: f64,
    pub r_max: f64,
    pub delta_theta: f64,
    pub energy_ratio: f64,
    pub winding_raw: f64,
    pub winding: u32,
    pub ground_speed: f64,
}

impl OrbitParameters {
    pub fn z(&self) -> u32 {
        self.ion.z()
    }

    /// Polar angle swept between consecutive perihelia, `2 pi / omega`.
    pub fn radial_period(&self) -> f64 {
        TWO_PI / self.omega
    }

    /// Semi-latus rectum `a (1 - eps²)`.
    pub fn semi_latus_rectum(&self) -> f64 {
        self.a_over_a0 * (1.0 - self.epsilon * self.epsilon)
    }
}

pub fn orbit_parameters(ion: IonSpec) -> OrbitParameters {
    let alpha_z = ion.coupling();
    let QuantumNumbers { n_r, n_theta } = ion.qn;
    let z = ion.z as f64;

    let omega = closed_form::omega(alpha_z, n_theta);
    let epsilon = closed_form::eccentricity(alpha_z, n_r, n_theta);
    let a_over_a0 = closed_form::scaled_semi_major_axis(alpha_z, n_r, n_theta) / z;
    let energy_ratio = closed_form::energy_ratio(alpha_z, n_r, n_theta);

    // 1/omega - 1 = (n_theta - s)/s, with n_theta - s formed without cancellation.
    let s = closed_form::reduced_azimuthal(alpha_z, n_theta);
    let excess = alpha_z * alpha_z / (s * (n_theta as f64 + s));
    let delta_theta = TWO_PI * excess;
    let raw = 2.0 * excess;

    OrbitParameters {
        ion,
        omega,
        epsilon,
        a_over_a0,
        r_min: a_over_a0 * (1.0 - epsilon),
        r_max: a_over_a0 * (1.0 + epsilon),
        delta_theta,
        energy_ratio,
        winding_raw: raw,
        winding: nearest_winding(raw),
        ground_speed: alpha_z,
    }
}
