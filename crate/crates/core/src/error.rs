use std::fmt;

use thiserror::Error;

/// Why an ion or quantum-number combination was rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainReason {
    /// Nuclear charge outside `1..=137`.
    ChargeOutOfRange { z: u32 },
    /// `alpha * z >= n_theta`: the orbit collapses and omega has no real value.
    OmegaNotReal { z: u32, n_theta: u32 },
    /// Azimuthal quantum number must be at least one.
    AzimuthalZero,
    /// A frequency ratio outside `(0, 1]` was passed in.
    OmegaOutOfRange(f64),
}

impl fmt::Display for DomainReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DomainReason::ChargeOutOfRange { z } => {
                write!(f, "nuclear charge Z={z} outside 1..=137")
            }
            DomainReason::OmegaNotReal { z, n_theta } => write!(
                f,
                "alpha*Z >= n_theta for Z={z}, n_theta={n_theta}; omega is not real"
            ),
            DomainReason::AzimuthalZero => write!(f, "n_theta must be >= 1"),
            DomainReason::OmegaOutOfRange(w) => write!(f, "omega={w} outside (0, 1]"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(DomainReason),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("{samples_per_rev} samples per radial period is below the floor of {floor}")]
    Resolution {
        samples_per_rev: usize,
        floor: usize,
    },
    #[error("circular orbit (eccentricity 0) has no transversal self-intersections")]
    Degenerate,
    #[error("no registry entry for Z={0} (registry covers 92..=137)")]
    NotFound(u32),
    #[error("non-finite value in field `{0}` cannot be serialized")]
    NonFinite(&'static str),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<DomainReason> for Error {
    fn from(reason: DomainReason) -> Self {
        Error::Domain(reason)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
