//! Ray and polarization optics through the Lorentz group.
//!
//! One algebra runs through all of paraxial and polarization optics: the
//! group of unimodular two-by-two matrices. This crate implements that
//! observation as a working toolkit:
//!
//!   * [`mat2`] — real and complex two-by-two carriers and the elementary
//!     rotation, boost, squeeze and phase elements;
//!   * [`generators`] — the six generators in two-by-two and four-by-four
//!     form, with their closed commutation relations;
//!   * [`decompose`] — trace classification, equi-diagonalization, the
//!     squeeze-kernel-squeeze and rotation-squeeze-rotation
//!     factorizations, and decomposition-based matrix powers;
//!   * [`periodic`] — laser cavities and multilayer stacks reduced to
//!     kernel form, with stability analysis and fast n-cycle evaluation;
//!   * [`spacetime`] — the two-by-two / four-by-four correspondence,
//!     Hermitian four-vector carriers, and the little groups fixing a
//!     four-momentum;
//!   * [`polarization`] — Jones calculus extended by the squeeze element,
//!     squeeze composition, optical activity, and polarization ellipses;
//!   * [`stokes`] — coherency matrices, Stokes vectors, the Mueller map,
//!     the extended Poincare sphere pair, and entropy.
//!
//! A walk-through of the theory with runnable examples lives in the
//! `book/` directory of the repository; its code blocks compile and run
//! as part of `cargo test`.
//!
//! # Example
//!
//! ```
//! use lorentz_optics::decompose::{classify, MatrixClass};
//! use lorentz_optics::mat2::RealMat2;
//!
//! let cycle = RealMat2::rotation(0.4) * RealMat2::boost(1.2) * RealMat2::rotation(-0.4);
//! assert_eq!(classify(&cycle).unwrap(), MatrixClass::Hyperbolic);
//! ```

pub mod decompose;
pub mod error;
pub mod generators;
pub mod mat2;
pub mod mat4;
pub mod periodic;
pub mod polarization;
pub mod spacetime;
pub mod stokes;

pub use error::{OpticsError, Result};

/// Default absolute tolerance for algebraic identity checks.
pub const ATOL: f64 = 1e-12;

/// Tolerance for the unit-determinant validation of group elements.
pub const DET_TOL: f64 = 1e-9;

/// Half-width of the trace band treated as parabolic: `||trace| - 2|`
/// at or below this counts as the boundary class, whose parameters are
/// ill-conditioned to extract any closer.
pub const PARABOLIC_BAND: f64 = 1e-9;

// Compile and run every code block in the book as doctests, one module
// per chapter so a failure names its source file.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(ch01_building_blocks, "../../../book/src/ch01_building_blocks.md");
    chapter!(ch02_core_decompositions, "../../../book/src/ch02_core_decompositions.md");
    chapter!(ch03_laser_cavities, "../../../book/src/ch03_laser_cavities.md");
    chapter!(ch04_multilayers, "../../../book/src/ch04_multilayers.md");
    chapter!(ch05_spacetime, "../../../book/src/ch05_spacetime.md");
    chapter!(ch06_jones_calculus, "../../../book/src/ch06_jones_calculus.md");
    chapter!(ch07_stokes_poincare, "../../../book/src/ch07_stokes_poincare.md");
}
