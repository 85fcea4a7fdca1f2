//! Error type shared by all modules.

/// Errors reported by validated operations.
///
/// Elementary constructors reject non-finite parameters by panicking (they
/// indicate a programming error); everything that depends on the *values*
/// of otherwise-valid inputs reports through this enum.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OpticsError {
    /// A group-element argument failed the unit-determinant check.
    #[error("matrix is not unimodular: |det - 1| = {excess:.3e}")]
    NonUnimodular { excess: f64 },

    /// A core-form operation was handed a matrix with unequal diagonals.
    #[error("matrix is not equi-diagonal: |a - d| = {diff:.3e}")]
    NotEquiDiagonal { diff: f64 },

    /// A Hermitian argument failed the symmetry check.
    #[error("matrix is not Hermitian: residue {residue:.3e}")]
    NotHermitian { residue: f64 },

    /// A matrix expected to be real carried an imaginary residue.
    #[error("matrix is not real: imaginary residue {residue:.3e}")]
    NotReal { residue: f64 },

    /// A four-momentum expected to be timelike was not.
    #[error("four-vector is not timelike: invariant mass squared = {mass_squared:.3e}")]
    NotTimelike { mass_squared: f64 },

    /// A cavity was specified with non-positive radius or separation.
    #[error("invalid cavity geometry: {0}")]
    InvalidGeometry(String),

    /// A multilayer was specified with a non-positive refractive index.
    #[error("invalid refractive index: {0}")]
    InvalidIndex(String),

    /// A field amplitude was negative or non-finite.
    #[error("invalid amplitude: {0}")]
    InvalidAmplitude(f64),

    /// A decoherence parameter was negative or NaN.
    #[error("invalid decoherence parameter: {0}")]
    InvalidSigma(f64),

    /// A Jones vector had zero intensity where a field is required.
    #[error("zero field")]
    ZeroField,

    /// A coherency matrix had zero trace where intensity is required.
    #[error("zero intensity")]
    ZeroIntensity,
}

/// Convenience alias for results of validated operations.
pub type Result<T> = std::result::Result<T, OpticsError>;
