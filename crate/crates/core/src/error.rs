use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate packet: norm is zero or not finite")]
    DegeneratePacket,

    #[error("incompatible grids")]
    IncompatibleGrids,

    #[error("wraparound: packet mass {mass:.3e} within {shift} of the right grid edge exceeds {tail_tol:.1e}")]
    Wraparound { shift: f64, mass: f64, tail_tol: f64 },

    #[error("non-unitary plate: |r|^2 + |t|^2 = {0}")]
    NonUnitaryPlate(f64),

    #[error("degenerate preparation: normalizer^2 = {0:.3e}")]
    DegeneratePreparation(f64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
