//! Classification and decomposition of real unimodular two-by-two matrices.
//!
//! Any beam-transfer matrix can be rotated into an *equi-diagonal* form
//! (both diagonal entries equal), here called its core. The core falls into
//! one of three trace classes and factors as a similarity transformation
//!
//! ```text
//! core = B(eta) W(gamma) B(-eta)
//! ```
//!
//! where the kernel `W` is a rotation, a symmetric squeeze, or a shear.
//! Powers of the original matrix then reduce to scaling `gamma` by the
//! exponent, which is what makes periodic optical systems tractable.
//!
//! The alternative rotation-squeeze-rotation factorization
//! `core = R(alpha) S(-2 chi) R(alpha)` is available as
//! [`bargmann_decompose`].

use crate::error::{OpticsError, Result};
use crate::mat2::RealMat2;
use crate::{DET_TOL, PARABOLIC_BAND};

/// Trace class of a unimodular matrix: `|trace|` below, above, or at 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixClass {
    /// `|trace| < 2`; the kernel is a rotation and powers stay bounded.
    Elliptic,
    /// `|trace| > 2`; the kernel is a squeeze and powers grow.
    Hyperbolic,
    /// `|trace| = 2` within the tolerance band; the kernel is a shear.
    Parabolic,
}

/// Parameters of an equi-diagonal core.
///
/// `matrix()` rebuilds the core itself; `kernel()` rebuilds the bare
/// kernel `W(gamma)` with the squeeze conjugation stripped. Cores with
/// negative trace at or beyond the parabolic boundary carry a `negated`
/// flag (they are `-1` times a printable form, which the rotation kernel
/// absorbs but the other two cannot).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoreForm {
    /// `[[cos(g/2), -e^eta sin(g/2)], [e^-eta sin(g/2), cos(g/2)]]`.
    Elliptic {
        /// Rotation angle of the kernel; covers `(-2pi, 2pi)` so that both
        /// signs of the off-diagonal pair and both trace signs fit.
        gamma: f64,
        /// Squeeze rapidity of the conjugation.
        eta: f64,
    },
    /// `sign * [[cosh(g/2), e^eta sinh(g/2)], [e^-eta sinh(g/2), cosh(g/2)]]`.
    Hyperbolic {
        /// Squeeze rapidity of the kernel (sign carries the off-diagonal sign).
        gamma: f64,
        /// Squeeze rapidity of the conjugation.
        eta: f64,
        /// Whether the core is the negative of the printable form.
        negated: bool,
    },
    /// `sign * [[1, -gamma], [0, 1]]`, or its transpose when `lower`.
    Parabolic {
        /// Shear parameter.
        gamma: f64,
        /// Whether the shear sits below the diagonal.
        lower: bool,
        /// Whether the core is the negative of the printable form.
        negated: bool,
    },
}

impl CoreForm {
    /// The trace class of this core.
    pub fn class(&self) -> MatrixClass {
        match self {
            Self::Elliptic { .. } => MatrixClass::Elliptic,
            Self::Hyperbolic { .. } => MatrixClass::Hyperbolic,
            Self::Parabolic { .. } => MatrixClass::Parabolic,
        }
    }

    /// Kernel parameter `gamma`.
    pub fn gamma(&self) -> f64 {
        match *self {
            Self::Elliptic { gamma, .. }
            | Self::Hyperbolic { gamma, .. }
            | Self::Parabolic { gamma, .. } => gamma,
        }
    }

    /// Conjugation rapidity; zero for parabolic cores.
    pub fn eta(&self) -> f64 {
        match *self {
            Self::Elliptic { eta, .. } | Self::Hyperbolic { eta, .. } => eta,
            Self::Parabolic { .. } => 0.0,
        }
    }

    /// The bare kernel `W(gamma)`.
    pub fn kernel(&self) -> RealMat2 {
        self.kernel_scaled(1)
    }

    /// The core form of the n-th power: `gamma` scales by `n` while the
    /// conjugation rapidity stays put.
    ///
    /// Unlike re-decomposing the powered matrix, this keeps the class
    /// honest at the double cover: squaring an elliptic core with
    /// `gamma = pi` yields `Elliptic { gamma: 2 pi }` (minus the
    /// identity), not a spurious boundary form.
    pub fn repeated(&self, n: u64) -> CoreForm {
        let n_f = n as f64;
        let odd = n % 2 == 1;
        match *self {
            Self::Elliptic { gamma, eta } => Self::Elliptic { gamma: n_f * gamma, eta },
            Self::Hyperbolic { gamma, eta, negated } => {
                Self::Hyperbolic { gamma: n_f * gamma, eta, negated: negated && odd }
            }
            Self::Parabolic { gamma, lower, negated } => {
                Self::Parabolic { gamma: n_f * gamma, lower, negated: negated && odd }
            }
        }
    }

    /// The kernel with its parameter scaled by `n`, `W(n gamma)`.
    ///
    /// For the rotation kernel this is the n-cycle workhorse: scaling the
    /// angle replaces n matrix multiplications.
    pub fn kernel_scaled(&self, n: u64) -> RealMat2 {
        let n_f = n as f64;
        let sign = |neg: bool| if neg && n % 2 == 1 { -1.0 } else { 1.0 };
        match *self {
            Self::Elliptic { gamma, .. } => RealMat2::rotation(n_f * gamma),
            Self::Hyperbolic { gamma, negated, .. } => {
                RealMat2::squeeze(n_f * gamma) * sign(negated)
            }
            Self::Parabolic { gamma, lower, negated } => {
                let m = if lower {
                    RealMat2::shear_lower(-n_f * gamma)
                } else {
                    RealMat2::shear(-n_f * gamma)
                };
                m * sign(negated)
            }
        }
    }

    /// Rebuilds the equi-diagonal core, `B(eta) W(gamma) B(-eta)`.
    pub fn matrix(&self) -> RealMat2 {
        self.matrix_scaled(1)
    }

    /// Rebuilds the core with its kernel parameter scaled by `n`; this is
    /// the n-th power of the core.
    pub fn matrix_scaled(&self, n: u64) -> RealMat2 {
        let b = RealMat2::boost(self.eta());
        b * self.kernel_scaled(n) * b.inverse()
    }
}

/// Classifies a unimodular matrix by its trace.
///
/// Traces within [`PARABOLIC_BAND`] of `|trace| = 2` count as parabolic;
/// the boundary is numerically ill-conditioned for parameter extraction,
/// so a band is mandatory rather than optional.
pub fn classify(m: &RealMat2) -> Result<MatrixClass> {
    classify_with_tol(m, DET_TOL)
}

/// [`classify`] with an explicit unimodularity tolerance.
pub fn classify_with_tol(m: &RealMat2, det_tol: f64) -> Result<MatrixClass> {
    let excess = m.unimodularity();
    if excess > det_tol {
        return Err(OpticsError::NonUnimodular { excess });
    }
    let t = m.trace().abs();
    Ok(if (t - 2.0).abs() <= PARABOLIC_BAND {
        MatrixClass::Parabolic
    } else if t < 2.0 {
        MatrixClass::Elliptic
    } else {
        MatrixClass::Hyperbolic
    })
}

/// Rotates a matrix into equi-diagonal form.
///
/// Returns `(phi, core)` with `core = R(-phi) m R(phi)` having equal
/// diagonal entries. The angle solves `tan(phi) = -(a - d)/(b + c)`; when
/// `b + c = 0` the quarter-turn branch `phi = pi/2` applies. Among the
/// valid angles the one of smallest magnitude is returned (ties toward
/// `+pi/2`), so the output is deterministic.
///
/// Rotation similarity preserves trace and determinant exactly.
pub fn equidiagonalize(m: &RealMat2) -> (f64, RealMat2) {
    let num = -(m.a - m.d);
    let den = m.b + m.c;
    let mut phi = if den == 0.0 && num == 0.0 {
        0.0
    } else if den == 0.0 {
        std::f64::consts::FRAC_PI_2
    } else {
        num.atan2(den)
    };
    // atan2 lands in (-pi, pi]; fold into [-pi/2, pi/2] (the similarity is
    // pi-periodic up to an equi-diagonal-preserving flip).
    if phi > std::f64::consts::FRAC_PI_2 {
        phi -= std::f64::consts::PI;
    } else if phi < -std::f64::consts::FRAC_PI_2 {
        phi += std::f64::consts::PI;
    }
    if phi == -std::f64::consts::FRAC_PI_2 {
        phi = std::f64::consts::FRAC_PI_2;
    }
    let r = RealMat2::rotation(phi);
    let core = r.inverse() * *m * r;
    // The rotation zeroes a - d up to rounding; split the residue evenly so
    // the result is exactly equi-diagonal and the trace is untouched.
    let h = 0.5 * (core.a + core.d);
    (phi, RealMat2::new(h, core.b, core.c, h))
}

/// Exponential core `exp(0.5 [[0, -x-y], [x-y, 0]])`.
///
/// One expression covering all three classes: elliptic for `x > y` with
/// `gamma = sqrt(x^2 - y^2)` and `e^eta = sqrt((x+y)/(x-y))`, hyperbolic
/// for `x < y`, and the shear `[[1, -x], [0, 1]]` at `x = y`.
pub fn core_from_xy(x: f64, y: f64) -> RealMat2 {
    assert!(x.is_finite() && y.is_finite(), "parameters must be finite");
    RealMat2::exp_offdiag(-0.5 * (x + y), 0.5 * (x - y))
}

/// A core factored as `pre_transform * W(gamma) * pre_transform^-1`.
#[derive(Clone, Copy, Debug)]
pub struct WignerDecomp {
    /// Conjugation rapidity (zero for parabolic kernels).
    pub eta: f64,
    /// Classified kernel parameters.
    pub form: CoreForm,
    /// The conjugating matrix; `B(eta)` when produced from a bare core.
    pub pre_transform: RealMat2,
}

impl WignerDecomp {
    /// Rebuilds the decomposed matrix.
    pub fn reconstruct(&self) -> RealMat2 {
        self.reconstruct_power(1)
    }

    /// The n-th power of the decomposed matrix via kernel scaling.
    pub fn reconstruct_power(&self, n: u64) -> RealMat2 {
        self.pre_transform * self.form.kernel_scaled(n) * self.pre_transform.inverse()
    }
}

/// Factors an equi-diagonal unimodular core as `B(eta) W(gamma) B(-eta)`.
///
/// Fails with [`OpticsError::NotEquiDiagonal`] when the diagonals differ
/// by more than `1e-9` and with [`OpticsError::NonUnimodular`] when the
/// determinant is off.
pub fn wigner_decompose(core: &RealMat2) -> Result<WignerDecomp> {
    let diff = (core.a - core.d).abs();
    if diff > 1e-9 {
        return Err(OpticsError::NotEquiDiagonal { diff });
    }
    let excess = core.unimodularity();
    if excess > DET_TOL {
        return Err(OpticsError::NonUnimodular { excess });
    }

    let h = 0.5 * (core.a + core.d);
    let b = core.b;
    let c = core.c;
    let trace_gap = (h.abs() - 1.0).abs();

    // Unimodularity ties bc to h^2 - 1, so the off-diagonal product sign
    // selects the branch without risking a NaN square root when the trace
    // sits right at the boundary of the parabolic band.
    let form = if 2.0 * trace_gap <= PARABOLIC_BAND || b * c == 0.0 {
        // Shear: det = h^2 - bc = 1 forces bc ~ 0; keep the dominant side.
        let negated = h < 0.0;
        let s = if negated { -1.0 } else { 1.0 };
        if b.abs() >= c.abs() {
            CoreForm::Parabolic { gamma: -s * b, lower: false, negated }
        } else {
            CoreForm::Parabolic { gamma: -s * c, lower: true, negated }
        }
    } else if b * c < 0.0 {
        // Opposite-sign off-diagonals (bc = h^2 - 1 < 0): rotation kernel.
        let s = (-b * c).sqrt();
        let gamma = 2.0 * s.atan2(h) * if b < 0.0 { 1.0 } else { -1.0 };
        let eta = 0.5 * (-b / c).ln();
        CoreForm::Elliptic { gamma, eta }
    } else {
        // Same-sign off-diagonals (bc = h^2 - 1 > 0): squeeze kernel.
        let negated = h < 0.0;
        let sg = if negated { -1.0 } else { 1.0 };
        let (b0, c0) = (sg * b, sg * c);
        let sinh_half = b0.signum() * (b0 * c0).sqrt();
        let gamma = 2.0 * sinh_half.asinh();
        let eta = 0.5 * (b0 / c0).ln();
        CoreForm::Hyperbolic { gamma, eta, negated }
    };

    Ok(WignerDecomp { eta: form.eta(), form, pre_transform: RealMat2::boost(form.eta()) })
}

/// Rotation-squeeze-rotation parameters of a core,
/// `core = R(alpha) S(-2 chi) R(alpha)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BargmannDecomp {
    /// Rotation angle (half-angle convention inside the matrices).
    pub alpha: f64,
    /// Squeeze parameter; the middle factor carries `-2 chi`.
    pub chi: f64,
}

impl BargmannDecomp {
    /// Rebuilds `R(alpha) S(-2 chi) R(alpha)`.
    pub fn reconstruct(&self) -> RealMat2 {
        let r = RealMat2::rotation(self.alpha);
        r * RealMat2::squeeze(-2.0 * self.chi) * r
    }
}

/// Factors an equi-diagonal unimodular core as `R(alpha) S(-2 chi) R(alpha)`.
///
/// Multiplying out gives entries `(cosh chi cos alpha, -sinh chi -+ cosh
/// chi sin alpha)`, so `sinh chi = -(b + c)/2` and `(cosh chi cos alpha,
/// cosh chi sin alpha) = (h, (c - b)/2)`. Unimodularity makes the system
/// consistent for every valid core, hyperbolic ones included; `alpha` is
/// taken in `(-pi, pi]`, the other branch being `(alpha +- pi, -chi)`.
pub fn bargmann_decompose(core: &RealMat2) -> Result<BargmannDecomp> {
    let diff = (core.a - core.d).abs();
    if diff > 1e-9 {
        return Err(OpticsError::NotEquiDiagonal { diff });
    }
    let excess = core.unimodularity();
    if excess > DET_TOL {
        return Err(OpticsError::NonUnimodular { excess });
    }
    let h = 0.5 * (core.a + core.d);
    let chi = (-0.5 * (core.b + core.c)).asinh();
    let alpha = (0.5 * (core.c - core.b)).atan2(h);
    Ok(BargmannDecomp { alpha, chi })
}

/// The n-th power of a unimodular matrix through its decomposition:
/// equi-diagonalize, factor, scale `gamma` by `n`, reassemble.
pub fn power(m: &RealMat2, n: u64) -> Result<RealMat2> {
    let (phi, core) = equidiagonalize(m);
    let w = wigner_decompose(&core)?;
    let r = RealMat2::rotation(phi);
    let pre = r * w.pre_transform;
    Ok(pre * w.form.kernel_scaled(n) * pre.inverse())
}
