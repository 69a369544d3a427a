use thiserror::Error;

/// Everything that can go wrong when building triangle parts or feeding them
/// to the solver and verifier.
///
/// Geometric impossibility of a well-formed input (for example an SSA spec
/// whose side is shorter than the altitude) is *not* an error; the solver
/// reports it as [`crate::SolveOutcome::NoSolution`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("angle {0}° is outside the open interval (0°, 180°)")]
    AngleOutOfRange(f64),

    #[error("side length {0} is not strictly positive")]
    NonPositiveSide(f64),

    #[error("angles {0}° and {1}° sum to 180° or more, no third angle exists")]
    NoThirdAngle(f64, f64),

    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),

    #[error("rotation index {0} is not in 0..=2")]
    InvalidRotation(usize),

    #[error("proof figure needs a >= b, got a = {a}, b = {b}")]
    SideOrder { a: f64, b: f64 },

    #[error("tolerance must be finite and positive, got {0}")]
    InvalidTolerance(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
