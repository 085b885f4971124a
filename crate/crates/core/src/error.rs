use thiserror::Error;

/// Errors for domain violations and failed numeric procedures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("chord length {0} outside [0, 2]")]
    ChordLength(f64),

    #[error("detour gain {0} outside [0, pi/2 - 1]")]
    DetourGain(f64),

    #[error("degenerate shortcut: endpoints coincide")]
    DegenerateShortcut,

    #[error("strip half-height {0} outside [0, pi - 2]")]
    StripHalfHeight(f64),

    #[error("strip coordinate xi = {xi} outside [-{half_height}, {half_height}]")]
    StripCoordinate { xi: f64, half_height: f64 },

    #[error("rectangles do not share the same strip half-height")]
    StripMismatch,

    #[error("grid step {0} must be positive")]
    GridStep(f64),

    #[error("no construction for k = {0}")]
    UnsupportedK(usize),

    #[error("asymptotic family needs m >= 4, got {0}")]
    AsymptoticSize(usize),

    #[error("numeric procedure failed: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
