//! Jones calculus extended by the squeeze element.
//!
//! The classic toolkit of phase shifters and rotations only reaches the
//! rotation subgroup. Adding an attenuator with two different absorption
//! rates contributes a squeeze: its isotropic loss factors out as a
//! scalar, and what acts on the polarization state is the unimodular
//! `B(mu) = diag(e^{mu/2}, e^{-mu/2})` with `mu = mu2 - mu1`. With the
//! squeeze on board the element group is the full six-parameter group of
//! two-by-two unimodular matrices.


use crate::error::{OpticsError, Result};
use crate::mat2::{C64, ComplexMat2, RealMat2};

/// Transverse field state: a pair of complex amplitudes.
///
/// The complex pair is the stored representation, so conversions to and
/// from it are exact; amplitudes and phases are derived views.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JonesVector {
    /// Complex x field component.
    pub ex: C64,
    /// Complex y field component.
    pub ey: C64,
}

impl JonesVector {
    /// Builds a state directly from the complex pair.
    pub const fn new(ex: C64, ey: C64) -> Self {
        Self { ex, ey }
    }

    /// Builds a state from nonnegative amplitudes and phases.
    pub fn from_amplitudes(ax: f64, ay: f64, phase_x: f64, phase_y: f64) -> Result<Self> {
        for a in [ax, ay] {
            if !a.is_finite() || a < 0.0 {
                return Err(OpticsError::InvalidAmplitude(a));
            }
        }
        assert!(phase_x.is_finite() && phase_y.is_finite(), "phases must be finite");
        Ok(Self::new(
            C64::from_polar(ax, phase_x),
            C64::from_polar(ay, phase_y),
        ))
    }

    /// Linear polarization along x with unit amplitude.
    pub fn horizontal() -> Self {
        Self::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0))
    }

    /// Circular polarization `(1, -i)` (the y component lags by a quarter
    /// wave), unnormalized.
    pub fn circular() -> Self {
        Self::new(C64::new(1.0, 0.0), C64::new(0.0, -1.0))
    }

    /// Amplitude of the x component.
    pub fn amplitude_x(&self) -> f64 {
        self.ex.norm()
    }

    /// Amplitude of the y component.
    pub fn amplitude_y(&self) -> f64 {
        self.ey.norm()
    }

    /// Phase of the x component.
    pub fn phase_x(&self) -> f64 {
        self.ex.arg()
    }

    /// Phase of the y component.
    pub fn phase_y(&self) -> f64 {
        self.ey.arg()
    }

    /// Total intensity `|ex|^2 + |ey|^2`.
    pub fn intensity(&self) -> f64 {
        self.ex.norm_sqr() + self.ey.norm_sqr()
    }

    /// Largest componentwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (self.ex - other.ex).norm().max((self.ey - other.ey).norm())
    }
}

/// One element of an optical train.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OpticalElement {
    /// Anisotropic attenuator reduced to its unimodular squeeze, with the
    /// squeeze axis rotated by `axis`.
    Squeeze { mu: f64, axis: f64 },
    /// Phase shifter of retardation `delta` with its fast axis rotated by
    /// `axis`.
    PhaseShift { delta: f64, axis: f64 },
    /// Rotation of the polarization plane.
    Rotation { theta: f64 },
    /// Attenuator with absorption exponents `mu1` (x) and `mu2` (y); the
    /// full matrix is `e^{-(mu1+mu2)/2} B(mu2 - mu1)`.
    Attenuator { mu1: f64, mu2: f64 },
}

impl OpticalElement {
    /// The unimodular matrix of the element together with its scalar loss
    /// factor (one for everything but the attenuator).
    ///
    /// Keeping the loss separate preserves the unit determinant, so every
    /// group-theoretic identity stays available along a lossy train.
    pub fn matrix(&self) -> (ComplexMat2, f64) {
        match *self {
            Self::Squeeze { mu, axis } => {
                (ComplexMat2::from_real(&RealMat2::rotated_squeeze(axis, mu)), 1.0)
            }
            Self::PhaseShift { delta, axis } => (ComplexMat2::rotated_phase(axis, delta), 1.0),
            Self::Rotation { theta } => (ComplexMat2::rotation(theta), 1.0),
            Self::Attenuator { mu1, mu2 } => {
                assert!(mu1.is_finite() && mu2.is_finite(), "attenuations must be finite");
                (ComplexMat2::boost(mu2 - mu1), (-0.5 * (mu1 + mu2)).exp())
            }
        }
    }
}

/// Applies a train of elements to a field state, first element first.
///
/// Element lists read in beam order, so the matrix product runs right to
/// left: `apply([e1, e2], v) = M2 M1 v`. The scalar losses multiply into
/// the returned factor and never touch the unimodular algebra.
pub fn apply(pipeline: &[OpticalElement], v: &JonesVector) -> (JonesVector, f64) {
    let mut state = [v.ex, v.ey];
    let mut loss = 1.0;
    for element in pipeline {
        let (m, l) = element.matrix();
        state = m.apply(state);
        loss *= l;
    }
    (JonesVector::new(state[0], state[1]), loss)
}

/// Result of composing two squeezes: a squeeze followed by a rotation,
/// `B(theta, lambda) B(0, mu) = B(phi, xi) R(omega)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SqueezeComposition {
    /// Axis of the combined squeeze.
    pub phi: f64,
    /// Rapidity of the combined squeeze (nonnegative).
    pub xi: f64,
    /// Angle of the trailing rotation.
    pub omega: f64,
}

impl SqueezeComposition {
    /// Rebuilds `B(phi, xi) R(omega)`.
    pub fn reconstruct(&self) -> RealMat2 {
        RealMat2::rotated_squeeze(self.phi, self.xi) * RealMat2::rotation(self.omega)
    }
}

/// Composes two squeezes in different directions.
///
/// Two squeezes do not make a squeeze; the closed forms are
///
/// ```text
/// cosh(xi)   = cosh(mu) cosh(lambda) + sinh(mu) sinh(lambda) cos(theta)
/// tan(phi)   = sin(theta) [sinh(lambda) + tanh(mu)(cosh(lambda)-1) cos(theta)]
///            / (sinh(lambda) cos(theta) + tanh(mu)[1 + (cosh(lambda)-1) cos^2(theta)])
/// tan(omega) = 2 sin(theta) [sinh(lambda) sinh(mu) + C- cos(theta)]
///            / (C+ + C- cos(2 theta) + 2 sinh(lambda) sinh(mu) cos(theta))
/// ```
///
/// with `C+- = (cosh(lambda) +- 1)(cosh(mu) +- 1)`. The leftover rotation
/// `omega` is the same angle an interferometric rotation measurement
/// would see; see [`rotation_from_squeezes`].
pub fn squeeze_compose(theta: f64, lambda: f64, mu: f64) -> SqueezeComposition {
    assert!(
        theta.is_finite() && lambda.is_finite() && mu.is_finite(),
        "parameters must be finite"
    );
    let (ct, st) = (theta.cos(), theta.sin());
    let (chl, shl) = (lambda.cosh(), lambda.sinh());
    let (chm, shm) = (mu.cosh(), mu.sinh());
    let thm = mu.tanh();

    let cosh_xi = chm * chl + shm * shl * ct;
    let xi = cosh_xi.max(1.0).acosh();

    let phi_num = st * (shl + thm * (chl - 1.0) * ct);
    let phi_den = shl * ct + thm * (1.0 + (chl - 1.0) * ct * ct);
    let phi = if phi_num == 0.0 && phi_den == 0.0 { 0.0 } else { phi_num.atan2(phi_den) };

    let c_plus = (chl + 1.0) * (chm + 1.0);
    let c_minus = (chl - 1.0) * (chm - 1.0);
    let omega_num = 2.0 * st * (shl * shm + c_minus * ct);
    let omega_den = c_plus + c_minus * (2.0 * theta).cos() + 2.0 * shl * shm * ct;
    let omega =
        if omega_num == 0.0 && omega_den == 0.0 { 0.0 } else { omega_num.atan2(omega_den) };

    SqueezeComposition { phi, xi, omega }
}

/// [`squeeze_compose`] for perpendicular squeeze directions
/// (`theta = pi/2`), where the closed forms collapse to
///
/// ```text
/// cosh(xi)   = cosh(mu) cosh(lambda)
/// tan(phi)   = sinh(lambda) / tanh(mu)
/// tan(omega) = sinh(lambda) sinh(mu) / (cosh(mu) + cosh(lambda))
/// ```
///
/// `cosh(xi)` is the exact product, free of the vanishing cross term.
pub fn squeeze_compose_crossed(lambda: f64, mu: f64) -> SqueezeComposition {
    assert!(lambda.is_finite() && mu.is_finite(), "parameters must be finite");
    let (chl, shl) = (lambda.cosh(), lambda.sinh());
    let (chm, shm) = (mu.cosh(), mu.sinh());
    let xi = (chm * chl).acosh();
    let phi = if shl == 0.0 && mu == 0.0 { 0.0 } else { shl.atan2(mu.tanh()) };
    let omega = (shl * shm).atan2(chm + chl);
    SqueezeComposition { phi, xi, omega }
}

/// The rotation produced by three squeezes,
/// `R(omega) = B(phi, -xi) B(theta, lambda) B(0, mu)`.
///
/// Computed by multiplying the three squeezes out and reading the angle
/// off the (numerically orthogonal) product, which cross-checks the
/// closed-form `omega` of [`squeeze_compose`].
pub fn rotation_from_squeezes(theta: f64, lambda: f64, mu: f64) -> f64 {
    let c = squeeze_compose(theta, lambda, mu);
    let product = RealMat2::rotated_squeeze(c.phi, -c.xi)
        * RealMat2::rotated_squeeze(theta, lambda)
        * RealMat2::boost(mu);
    2.0 * product.c.atan2(product.a)
}

/// Optical activity with a saturable squeeze: `exp(H z)` with
///
/// ```text
/// H = | 0              -(alpha + beta) |
///     | alpha - beta    0              |
/// ```
///
/// accumulated from alternating microscopic squeezes and rotations. The
/// rotary power `alpha` and squeeze rate `beta` select the regime:
/// rotation-like for `alpha > beta`, squeeze-like for `beta > alpha`, and
/// the shear `[[1, -2 alpha z], [0, 1]]` on the boundary. One entire
/// expression covers all three, so nothing blows up near `alpha = beta`.
pub fn optical_activity(alpha: f64, beta: f64, z: f64) -> RealMat2 {
    assert!(
        alpha.is_finite() && beta.is_finite() && z.is_finite(),
        "parameters must be finite"
    );
    assert!(z >= 0.0, "propagation length must be nonnegative");
    RealMat2::exp_offdiag(-(alpha + beta) * z, (alpha - beta) * z)
}

/// Geometry of the ellipse traced by the real field over one period.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipseReport {
    /// Semi-major axis length, in field units.
    pub semi_major: f64,
    /// Semi-minor axis length; zero for linear polarization.
    pub semi_minor: f64,
    /// Angle of the major axis against x, in `(-pi/2, pi/2]`.
    pub orientation: f64,
    /// `+1` for counterclockwise rotation of the field point, `-1` for
    /// clockwise, `0` for linear polarization.
    pub handedness: i8,
}

/// Extracts the polarization ellipse of a field state.
///
/// With amplitudes `(ax, ay)` and relative phase `delta = phase_x -
/// phase_y`, the quadratic invariants `ax^2 - ay^2` and `2 ax ay
/// cos(delta)` fix the orientation and the axis lengths, while `2 ax ay
/// sin(delta)` signs the circulation.
pub fn ellipse(v: &JonesVector) -> Result<EllipseReport> {
    let total = v.intensity();
    if total <= 0.0 {
        return Err(OpticsError::ZeroField);
    }
    let ax = v.amplitude_x();
    let ay = v.amplitude_y();
    let delta = v.phase_x() - v.phase_y();
    let s1 = ax * ax - ay * ay;
    let s2 = 2.0 * ax * ay * delta.cos();
    let s3 = 2.0 * ax * ay * delta.sin();
    let linear = s1.hypot(s2);
    let semi_major = (0.5 * (total + linear)).sqrt();
    let semi_minor = (0.5 * (total - linear)).max(0.0).sqrt();
    let mut orientation = if s1 == 0.0 && s2 == 0.0 { 0.0 } else { 0.5 * s2.atan2(s1) };
    if orientation <= -0.5 * std::f64::consts::PI {
        orientation += std::f64::consts::PI;
    }
    let handedness = if s3 > 0.0 {
        1
    } else if s3 < 0.0 {
        -1
    } else {
        0
    };
    Ok(EllipseReport { semi_major, semi_minor, orientation, handedness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn jones_round_trips_with_complex_pair() {
        let v = JonesVector::new(c(0.3, -0.4), c(-1.1, 0.2));
        let w = JonesVector::new(v.ex, v.ey);
        assert_eq!(v, w);
        let u =
            JonesVector::from_amplitudes(v.amplitude_x(), v.amplitude_y(), v.phase_x(), v.phase_y())
                .unwrap();
        assert!(u.max_diff(&v) <= 1e-15);
    }

    #[test]
    fn negative_amplitude_rejected() {
        assert!(matches!(
            JonesVector::from_amplitudes(-1.0, 0.0, 0.0, 0.0),
            Err(OpticsError::InvalidAmplitude(_))
        ));
    }

    #[test]
    fn squeeze_scales_amplitudes() {
        let mu = 0.8;
        let v = JonesVector::from_amplitudes(2.0, 3.0, 0.1, -0.2).unwrap();
        let (out, loss) = apply(&[OpticalElement::Squeeze { mu, axis: 0.0 }], &v);
        assert_eq!(loss, 1.0);
        assert!((out.amplitude_x() - 2.0 * (0.5 * mu).exp()).abs() <= 1e-12);
        assert!((out.amplitude_y() - 3.0 * (-0.5 * mu).exp()).abs() <= 1e-12);
        // The amplitude product is untouched.
        assert!((out.amplitude_x() * out.amplitude_y() - 6.0).abs() <= 1e-12);
    }

    #[test]
    fn attenuator_factors_loss_from_squeeze() {
        let (m, loss) = OpticalElement::Attenuator { mu1: 0.3, mu2: 0.9 }.matrix();
        assert!((loss - (-0.6_f64).exp()).abs() <= 1e-15);
        assert!(m.max_diff(&ComplexMat2::boost(0.6)) <= 1e-15);
        // Equal rates: pure scalar loss, identity matrix.
        let (m, loss) = OpticalElement::Attenuator { mu1: 0.5, mu2: 0.5 }.matrix();
        assert!((loss - (-0.5_f64).exp()).abs() <= 1e-15);
        assert!(m.max_diff(&ComplexMat2::identity()) <= 1e-15);
    }

    #[test]
    fn attenuator_projection_limit() {
        // mu1 = 0, mu2 large: loss * matrix approaches the projector onto x.
        let (m, loss) = OpticalElement::Attenuator { mu1: 0.0, mu2: 60.0 }.matrix();
        let full = m.scale(c(loss, 0.0));
        assert!((full.e[0][0].re - 1.0).abs() <= 1e-12);
        assert!(full.e[1][1].norm() <= 1e-12);
    }

    #[test]
    fn empty_and_inverse_pipelines() {
        let v = JonesVector::new(c(0.6, 0.1), c(-0.3, 0.8));
        let (out, loss) = apply(&[], &v);
        assert_eq!(out, v);
        assert_eq!(loss, 1.0);
        let pipeline = [
            OpticalElement::Rotation { theta: 0.7 },
            OpticalElement::Rotation { theta: -0.7 },
        ];
        let (out, _) = apply(&pipeline, &v);
        assert!(out.max_diff(&v) <= 1e-15);
    }

    #[test]
    fn pipeline_order_is_beam_order() {
        // A squeeze then a rotation must equal R * B * v, not B * R * v.
        let v = JonesVector::horizontal();
        let pipeline = [
            OpticalElement::Squeeze { mu: 0.8, axis: 0.0 },
            OpticalElement::Rotation { theta: 1.0 },
        ];
        let (out, _) = apply(&pipeline, &v);
        let expect =
            (ComplexMat2::rotation(1.0) * ComplexMat2::boost(0.8)).apply([v.ex, v.ey]);
        assert!((out.ex - expect[0]).norm() <= 1e-15);
        assert!((out.ey - expect[1]).norm() <= 1e-15);
    }

    #[test]
    fn quarter_frame_phase_shift_deforms_circle() {
        // A circular state through the 45-degree phase shifter becomes an
        // ellipse with semi-axes sqrt(2)|cos(a)|, sqrt(2)|sin(a)|,
        // a = delta/2 + pi/4.
        for delta in [0.3, 0.9, -0.7] {
            let (out, _) = apply(
                &[OpticalElement::PhaseShift { delta, axis: FRAC_PI_2 }],
                &JonesVector::circular(),
            );
            let a = 0.5 * delta + FRAC_PI_4;
            let big = 2.0_f64.sqrt() * a.cos().abs().max(a.sin().abs());
            let small = 2.0_f64.sqrt() * a.cos().abs().min(a.sin().abs());
            let e = ellipse(&out).unwrap();
            assert!((e.semi_major - big).abs() <= 1e-12, "delta={delta}");
            assert!((e.semi_minor - small).abs() <= 1e-12, "delta={delta}");
        }
    }

    #[test]
    fn squeeze_compose_identity_factor() {
        let comp = squeeze_compose(0.9, 1.2, 0.0);
        assert!((comp.xi - 1.2).abs() <= 1e-12);
        assert!((comp.phi - 0.9).abs() <= 1e-12);
        assert!(comp.omega.abs() <= 1e-12);
    }

    #[test]
    fn squeeze_compose_reconstructs() {
        for (theta, lambda, mu) in [
            (0.9, 1.2, 0.7),
            (2.4, -0.8, 1.5),
            (-1.3, 0.6, -0.9),
            (FRAC_PI_2, 1.0, 1.0),
            (0.0, 0.5, 0.8),
            (PI, 1.1, 0.4),
        ] {
            let direct = RealMat2::rotated_squeeze(theta, lambda) * RealMat2::boost(mu);
            let comp = squeeze_compose(theta, lambda, mu);
            assert!(
                comp.reconstruct().max_diff(&direct) <= 1e-10,
                "theta={theta} lambda={lambda} mu={mu} comp={comp:?}"
            );
        }
    }

    #[test]
    fn crossed_composition_exact_product() {
        let (lambda, mu) = (1.0, 1.0);
        let comp = squeeze_compose_crossed(lambda, mu);
        // cosh(xi) literally equals cosh(mu) cosh(lambda).
        assert_eq!(comp.xi.cosh(), lambda.cosh() * mu.cosh());
        assert!((comp.xi.cosh() - 1.0_f64.cosh().powi(2)).abs() <= 1e-12);
        // And it agrees with the general form.
        let general = squeeze_compose(FRAC_PI_2, lambda, mu);
        assert!((comp.xi - general.xi).abs() <= 1e-12);
        assert!((comp.phi - general.phi).abs() <= 1e-12);
        assert!((comp.omega - general.omega).abs() <= 1e-12);
        let direct = RealMat2::squeeze(lambda) * RealMat2::boost(mu);
        assert!(comp.reconstruct().max_diff(&direct) <= 1e-12);
    }

    #[test]
    fn three_squeezes_make_a_rotation() {
        for (theta, lambda, mu) in [(FRAC_PI_2, 1.0, 1.0), (0.8, 0.5, 1.2), (2.1, -0.7, 0.9)] {
            let omega = rotation_from_squeezes(theta, lambda, mu);
            let comp = squeeze_compose(theta, lambda, mu);
            assert!((omega - comp.omega).abs() <= 1e-10, "theta={theta}");
            // The product really is orthogonal.
            let product = RealMat2::rotated_squeeze(comp.phi, -comp.xi)
                * RealMat2::rotated_squeeze(theta, lambda)
                * RealMat2::boost(mu);
            assert!(product.max_diff(&RealMat2::rotation(omega)) <= 1e-10);
        }
        assert!(rotation_from_squeezes(1.1, 0.0, 0.7).abs() <= 1e-12);
        assert!(rotation_from_squeezes(1.1, 0.7, 0.0).abs() <= 1e-12);
    }

    #[test]
    fn optical_activity_regimes() {
        // beta = 0: pure rotation by 2 alpha z.
        let m = optical_activity(1.3, 0.0, 0.4);
        assert!(m.max_diff(&RealMat2::rotation(2.0 * 1.3 * 0.4)) <= 1e-13);
        // alpha = beta: triangular.
        let m = optical_activity(0.9, 0.9, 0.5);
        assert!(m.max_diff(&RealMat2::shear(-2.0 * 0.9 * 0.5)) <= 1e-13);
        // Determinant one in every regime.
        for (a, b) in [(2.0, 1.0), (1.0, 2.0), (1.0, 1.0), (1.0, 1.0 + 1e-9)] {
            assert!(optical_activity(a, b, 0.3).unimodularity() <= 1e-12);
        }
    }

    #[test]
    fn optical_activity_additive_in_length() {
        let (a, b) = (1.7, 0.6);
        let m = optical_activity(a, b, 0.4) * optical_activity(a, b, 0.9);
        assert!(m.max_diff(&optical_activity(a, b, 1.3)) <= 1e-12);
    }

    #[test]
    fn ellipse_circle_and_line() {
        // Equal amplitudes, quarter-wave phase: a circle.
        let v = JonesVector::from_amplitudes(1.0, 1.0, FRAC_PI_2, 0.0).unwrap();
        let e = ellipse(&v).unwrap();
        assert!((e.semi_major - 1.0).abs() <= 1e-12);
        assert!((e.semi_minor - 1.0).abs() <= 1e-12);
        assert_eq!(e.handedness, 1);
        // Zero phase difference: a degenerate line.
        let v = JonesVector::from_amplitudes(1.0, 0.5, 0.3, 0.3).unwrap();
        let e = ellipse(&v).unwrap();
        assert!(e.semi_minor <= 1e-12);
        assert_eq!(e.handedness, 0);
        assert!((e.orientation - 0.5_f64.atan2(1.0)).abs() <= 1e-12);
    }

    #[test]
    fn ellipse_of_shifted_circular_input() {
        // The phase shifter turns circular light elliptic with axes
        // sqrt(2)|cos a|, sqrt(2)|sin a| along the diagonal frame.
        let delta = 0.6;
        let (out, _) =
            apply(&[OpticalElement::PhaseShift { delta, axis: 0.0 }], &JonesVector::circular());
        let e = ellipse(&out).unwrap();
        let a = 0.5 * delta + FRAC_PI_4;
        let expect_major = 2.0_f64.sqrt() * a.cos().abs().max(a.sin().abs());
        let expect_minor = 2.0_f64.sqrt() * a.cos().abs().min(a.sin().abs());
        assert!((e.semi_major - expect_major).abs() <= 1e-12);
        assert!((e.semi_minor - expect_minor).abs() <= 1e-12);
        // Axes sit in the 45-degree frame.
        assert!((e.orientation.abs() - FRAC_PI_4).abs() <= 1e-12);
    }

    #[test]
    fn ellipse_axes_invariant_under_rotation() {
        let v = JonesVector::from_amplitudes(1.3, 0.4, 0.9, 0.1).unwrap();
        let e0 = ellipse(&v).unwrap();
        let (rotated, _) = apply(&[OpticalElement::Rotation { theta: 0.8 }], &v);
        let e1 = ellipse(&rotated).unwrap();
        assert!((e0.semi_major - e1.semi_major).abs() <= 1e-12);
        assert!((e0.semi_minor - e1.semi_minor).abs() <= 1e-12);
        // Orientation shifts by the half-angle of the rotation element.
        let delta = e1.orientation - e0.orientation;
        let wrapped = (delta - 0.4).rem_euclid(PI).min((0.4 - delta).rem_euclid(PI));
        assert!(wrapped <= 1e-12);
    }

    #[test]
    fn ellipse_rejects_zero_field() {
        let v = JonesVector::new(c(0.0, 0.0), c(0.0, 0.0));
        assert!(matches!(ellipse(&v), Err(OpticsError::ZeroField)));
    }
}
