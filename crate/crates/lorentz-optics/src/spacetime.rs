//! The two-by-two / four-by-four correspondence.
//!
//! A four-vector `(t, z, x, y)` is carried by the Hermitian matrix
//!
//! ```text
//! X = | t + z   x - iy |
//!     | x + iy  t - z  |
//! ```
//!
//! whose determinant is the Minkowski norm. A unimodular `G` acts as
//! `X' = G X G^dagger`, and the induced linear map on `(t, z, x, y)` is an
//! honest Lorentz matrix, recovered here by conjugating the Kronecker
//! product `G (x) G*` with the constant component-ordering matrix. Both
//! `G` and `-G` map to the same four-by-four matrix.

use num_complex::Complex64;

use crate::error::{OpticsError, Result};
use crate::mat2::{C64, ComplexMat2};
use crate::mat4::{ComplexMat4, Mat4};
use crate::DET_TOL;

/// Minkowski four-vector with components ordered `(t, z, x, y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub z: f64,
    pub x: f64,
    pub y: f64,
}

impl FourVector {
    /// Builds a four-vector from its components.
    pub const fn new(t: f64, z: f64, x: f64, y: f64) -> Self {
        Self { t, z, x, y }
    }

    /// Minkowski norm `t^2 - z^2 - x^2 - y^2` (any sign).
    pub fn minkowski_norm(&self) -> f64 {
        self.t * self.t - self.z * self.z - self.x * self.x - self.y * self.y
    }

    /// The Hermitian carrier matrix of this four-vector.
    pub fn herm(&self) -> HermMat2 {
        HermMat2 {
            m: ComplexMat2::new(
                C64::new(self.t + self.z, 0.0),
                C64::new(self.x, -self.y),
                C64::new(self.x, self.y),
                C64::new(self.t - self.z, 0.0),
            ),
        }
    }

    /// Components as an array in `(t, z, x, y)` order.
    pub fn components(&self) -> [f64; 4] {
        [self.t, self.z, self.x, self.y]
    }

    /// Builds a four-vector from `(t, z, x, y)` components.
    pub fn from_components(v: [f64; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    /// Largest componentwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (self.t - other.t)
            .abs()
            .max((self.z - other.z).abs())
            .max((self.x - other.x).abs())
            .max((self.y - other.y).abs())
    }
}

/// Hermitian 2x2 matrix carrying a four-vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HermMat2 {
    m: ComplexMat2,
}

impl HermMat2 {
    /// Wraps a complex matrix, checking Hermiticity to `1e-9` and then
    /// symmetrizing the rounding residue away.
    pub fn new(m: ComplexMat2) -> Result<Self> {
        let residue = m.hermiticity();
        if residue > 1e-9 {
            return Err(OpticsError::NotHermitian { residue });
        }
        Ok(Self::symmetrize(m))
    }

    fn symmetrize(m: ComplexMat2) -> Self {
        let sym = (m + m.adjoint()).scale(C64::new(0.5, 0.0));
        Self { m: sym }
    }

    /// The underlying complex matrix.
    pub fn matrix(&self) -> ComplexMat2 {
        self.m
    }

    /// Determinant; equals the Minkowski norm of the four-vector.
    pub fn det(&self) -> f64 {
        self.m.det().re
    }

    /// Trace (twice the time component).
    pub fn trace(&self) -> f64 {
        self.m.trace().re
    }

    /// The four-vector carried by this matrix (exact linear inversion).
    pub fn four_vector(&self) -> FourVector {
        let e = &self.m.e;
        FourVector::new(
            0.5 * (e[0][0].re + e[1][1].re),
            0.5 * (e[0][0].re - e[1][1].re),
            0.5 * (e[0][1].re + e[1][0].re),
            0.5 * (e[1][0].im - e[0][1].im),
        )
    }

    /// Largest elementwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.m.max_diff(&other.m)
    }
}

/// Applies `X' = G X G^dagger` to a Hermitian carrier.
///
/// `G` must be unimodular within [`DET_TOL`]; the output is Hermitian by
/// construction and has the same determinant (the Minkowski norm is
/// invariant).
pub fn g_transform(g: &ComplexMat2, x: &HermMat2) -> Result<HermMat2> {
    g_transform_with_tol(g, x, DET_TOL)
}

/// [`g_transform`] with an explicit unimodularity tolerance.
pub fn g_transform_with_tol(g: &ComplexMat2, x: &HermMat2, det_tol: f64) -> Result<HermMat2> {
    let excess = g.unimodularity();
    if excess > det_tol {
        return Err(OpticsError::NonUnimodular { excess });
    }
    Ok(HermMat2::symmetrize(*g * x.matrix() * g.adjoint()))
}

/// Kronecker product `G (x) G*` in the component ordering
/// `(t+z, x-iy, x+iy, t-z)`.
pub(crate) fn kron_with_conj(g: &ComplexMat2) -> ComplexMat4 {
    let mut out = ComplexMat4::zero();
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    out.e[2 * i + k][2 * j + l] = g.e[i][j] * g.e[k][l].conj();
                }
            }
        }
    }
    out
}

/// Constant matrix sending `(t, z, x, y)` to `(t+z, x-iy, x+iy, t-z)`.
fn component_ordering() -> ComplexMat4 {
    let r = |x: f64| Complex64::new(x, 0.0);
    let i = |x: f64| Complex64::new(0.0, x);
    ComplexMat4::new([
        [r(1.0), r(1.0), r(0.0), r(0.0)],
        [r(0.0), r(0.0), r(1.0), i(-1.0)],
        [r(0.0), r(0.0), r(1.0), i(1.0)],
        [r(1.0), r(-1.0), r(0.0), r(0.0)],
    ])
}

/// Inverse of [`component_ordering`]; the one-half prefactor folds the
/// sums back into `(t, z, x, y)`.
fn component_ordering_inv() -> ComplexMat4 {
    let r = |x: f64| Complex64::new(0.5 * x, 0.0);
    let i = |x: f64| Complex64::new(0.0, 0.5 * x);
    ComplexMat4::new([
        [r(1.0), r(0.0), r(0.0), r(1.0)],
        [r(1.0), r(0.0), r(0.0), r(-1.0)],
        [r(0.0), r(1.0), r(1.0), r(0.0)],
        [r(0.0), i(1.0), i(-1.0), r(0.0)],
    ])
}

/// The four-by-four Lorentz matrix induced by a unimodular `G` on
/// `(t, z, x, y)`.
///
/// This is a group homomorphism with kernel `{1, -1}`: products map to
/// products and `G` and `-G` give the same matrix.
pub fn sl2c_to_so31(g: &ComplexMat2) -> Result<Mat4> {
    sl2c_to_so31_with_tol(g, DET_TOL)
}

/// [`sl2c_to_so31`] with an explicit unimodularity tolerance.
pub fn sl2c_to_so31_with_tol(g: &ComplexMat2, det_tol: f64) -> Result<Mat4> {
    let excess = g.unimodularity();
    if excess > det_tol {
        return Err(OpticsError::NonUnimodular { excess });
    }
    let lambda = component_ordering_inv() * kron_with_conj(g) * component_ordering();
    let residue = lambda.imag_norm();
    if residue > 1e-9 {
        return Err(OpticsError::NotReal { residue });
    }
    Ok(lambda.real_part())
}

/// Gauge transformation of the massless little group.
///
/// Returns the pair of a triangular two-by-two and a four-by-four matrix:
///
///   * the two-by-two `[[1, gamma], [0, 1]]` leaves the light-like carrier
///     `[[2w, 0], [0, 0]]` (momentum along `+z`) invariant exactly;
///   * the four-by-four leaves the momentum `(p, -p, 0, 0)` of a particle
///     moving along `-z` invariant and preserves the metric.
///
/// The two conventions mirror each other through a `z`-reflection: the
/// homomorphism image of the triangular matrix equals the returned
/// four-by-four conjugated by `diag(1, -1, 1, 1)`.
pub fn little_group_massless(gamma: f64) -> (ComplexMat2, Mat4) {
    assert!(gamma.is_finite(), "gauge parameter must be finite");
    let two = ComplexMat2::new(
        C64::new(1.0, 0.0),
        C64::new(gamma, 0.0),
        C64::new(0.0, 0.0),
        C64::new(1.0, 0.0),
    );
    let g2 = 0.5 * gamma * gamma;
    let four = Mat4::new([
        [1.0 + g2, g2, gamma, 0.0],
        [-g2, 1.0 - g2, -gamma, 0.0],
        [gamma, gamma, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);
    (two, four)
}

/// Rotation and boost bringing a massive four-momentum to rest.
///
/// The sequence is: a phase alignment `Z(phase)` folding the `y` momentum
/// component into `x`, a rotation `R(-tilt)` aligning the momentum with
/// `z`, and a boost `B(-rapidity)` with `e^rapidity` equal to
/// `sqrt((p0+|p|)/(p0-|p|))`, after which the momentum carrier is
/// `mass * identity`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RestFrame {
    /// Phase-alignment angle about `z` (zero when `p_y = 0`).
    pub phase: f64,
    /// Polar rotation angle; satisfies `tan(tilt) = p_x / p_z` once the
    /// phase alignment has folded the transverse momentum into `x`.
    pub tilt: f64,
    /// Boost rapidity.
    pub rapidity: f64,
    /// Invariant mass, the square root of the Minkowski norm.
    pub mass: f64,
}

impl RestFrame {
    /// The composite transformation `B(-rapidity) R(-tilt) Z(phase)`.
    pub fn transform(&self) -> ComplexMat2 {
        ComplexMat2::boost(-self.rapidity)
            * ComplexMat2::rotation(-self.tilt)
            * ComplexMat2::phase(self.phase)
    }
}

/// Finds the transformation taking a timelike four-momentum to its rest
/// frame.
///
/// Fails with [`OpticsError::NotTimelike`] when the Minkowski norm is not
/// positive (relative to the vector scale) or the energy is not positive.
pub fn boost_to_rest(p: &FourVector) -> Result<RestFrame> {
    let norm = p.minkowski_norm();
    let scale = p.t * p.t + p.z * p.z + p.x * p.x + p.y * p.y;
    if norm <= 1e-12 * scale || p.t <= 0.0 {
        return Err(OpticsError::NotTimelike { mass_squared: norm });
    }
    let transverse = p.x.hypot(p.y);
    let phase = if transverse == 0.0 { 0.0 } else { p.y.atan2(p.x) };
    let momentum = transverse.hypot(p.z);
    let tilt = if momentum == 0.0 { 0.0 } else { transverse.atan2(p.z) };
    let rapidity = 0.5 * ((p.t + momentum) / (p.t - momentum)).ln();
    Ok(RestFrame { phase, tilt, rapidity, mass: norm.sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn herm_round_trip() {
        let v = FourVector::new(1.3, -0.4, 0.2, 0.9);
        let back = v.herm().four_vector();
        assert!(back.max_diff(&v) <= 1e-15);
        assert!((v.herm().det() - v.minkowski_norm()).abs() <= 1e-14);
    }

    #[test]
    fn herm_of_lightlike_vector() {
        let x = FourVector::new(1.0, 1.0, 0.0, 0.0).herm();
        assert_eq!(x.matrix().e[0][0], C64::new(2.0, 0.0));
        assert_eq!(x.matrix().e[1][1], C64::new(0.0, 0.0));
        assert!(x.det().abs() <= 1e-15);
    }

    #[test]
    fn herm_rejects_asymmetric() {
        let m = ComplexMat2::new(
            C64::new(1.0, 0.0),
            C64::new(0.5, 0.1),
            C64::new(0.5, 0.1),
            C64::new(1.0, 0.0),
        );
        assert!(matches!(HermMat2::new(m), Err(OpticsError::NotHermitian { .. })));
    }

    #[test]
    fn g_transform_preserves_norm() {
        let g = ComplexMat2::rotated_phase(0.6, 1.1) * ComplexMat2::boost(0.8);
        let x = FourVector::new(2.0, 0.3, -0.7, 0.5).herm();
        let x2 = g_transform(&g, &x).unwrap();
        assert!((x2.det() - x.det()).abs() <= 1e-12);
    }

    #[test]
    fn g_transform_rejects_non_unimodular() {
        let g = ComplexMat2::identity().scale(C64::new(2.0, 0.0));
        let x = FourVector::new(1.0, 0.0, 0.0, 0.0).herm();
        assert!(matches!(
            g_transform(&g, &x),
            Err(OpticsError::NonUnimodular { .. })
        ));
    }

    #[test]
    fn homomorphism_on_elementary_elements() {
        // The boost, rotation and symmetric squeeze map onto their printed
        // four-by-four forms.
        for eta in [-1.0, 0.4, 1.7] {
            let lhs = sl2c_to_so31(&ComplexMat2::boost(eta)).unwrap();
            assert!(lhs.max_diff(&Mat4::boost_z(eta)) <= 1e-13);
            let lhs = sl2c_to_so31(&ComplexMat2::squeeze(eta)).unwrap();
            assert!(lhs.max_diff(&Mat4::boost_x(eta)) <= 1e-13);
            let lhs = sl2c_to_so31(&ComplexMat2::rotation(eta)).unwrap();
            assert!(lhs.max_diff(&Mat4::rotation_y(eta)) <= 1e-13);
        }
    }

    #[test]
    fn phase_maps_to_transposed_z_rotation() {
        // The diagonal phase and the z-rotation matrix are printed with
        // opposite senses; the homomorphism lands on the transpose.
        for delta in [0.3, -1.2] {
            let lhs = sl2c_to_so31(&ComplexMat2::phase(delta)).unwrap();
            assert!(lhs.max_diff(&Mat4::rotation_z(delta).transpose()) <= 1e-13);
            assert!(lhs.max_diff(&Mat4::rotation_z(-delta)) <= 1e-13);
        }
    }

    #[test]
    fn plus_minus_g_same_image() {
        let g = ComplexMat2::rotated_phase(0.3, 0.9) * ComplexMat2::squeeze(0.5);
        let a = sl2c_to_so31(&g).unwrap();
        let b = sl2c_to_so31(&(-g)).unwrap();
        assert_eq!(a.max_diff(&b), 0.0);
    }

    #[test]
    fn little_group_invariances() {
        let (two, four) = little_group_massless(2.0);
        // Four-by-four: fixes (1, -1, 0, 0) and preserves the metric.
        let p = four.apply([1.0, -1.0, 0.0, 0.0]);
        assert!((p[0] - 1.0).abs() <= 1e-15 && (p[1] + 1.0).abs() <= 1e-15);
        assert!(p[2].abs() <= 1e-15 && p[3].abs() <= 1e-15);
        assert!(four.metric_residue() <= 1e-12);
        // Two-by-two: fixes the light-like carrier exactly.
        let x = FourVector::new(1.0, 1.0, 0.0, 0.0).herm();
        let x2 = g_transform(&two, &x).unwrap();
        assert_eq!(x2.max_diff(&x), 0.0);
    }

    #[test]
    fn little_group_conventions_mirror_in_z() {
        // Image of the triangular matrix = z-reflection conjugate of the
        // returned four-by-four.
        let (two, four) = little_group_massless(1.3);
        let image = sl2c_to_so31(&two).unwrap();
        let refl = Mat4::new([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]);
        assert!(image.max_diff(&(refl * four * refl)) <= 1e-15);
    }

    #[test]
    fn rest_frame_of_resting_particle() {
        let f = boost_to_rest(&FourVector::new(3.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(f.tilt, 0.0);
        assert_eq!(f.rapidity, 0.0);
        assert!((f.mass - 3.0).abs() <= 1e-15);
    }

    #[test]
    fn rest_frame_of_z_boosted_particle() {
        let m = 2.5;
        let p = FourVector::new(m * 1.0_f64.cosh(), m * 1.0_f64.sinh(), 0.0, 0.0);
        let f = boost_to_rest(&p).unwrap();
        assert!((f.rapidity - 1.0).abs() <= 1e-12);
        assert!((f.mass - m).abs() <= 1e-12);
        assert_eq!(f.tilt, 0.0);
    }

    #[test]
    fn rest_frame_diagonalizes_general_momentum() {
        let p = FourVector::new(3.0, 0.7, -1.1, 0.6);
        let f = boost_to_rest(&p).unwrap();
        let rest = g_transform(&f.transform(), &p.herm()).unwrap();
        let expect = FourVector::new(f.mass, 0.0, 0.0, 0.0).herm();
        assert!(rest.max_diff(&expect) <= 1e-10);
        assert!((f.tilt.tan() - p.x.hypot(p.y) / p.z).abs() <= 1e-12);
    }

    #[test]
    fn rest_frame_rejects_lightlike() {
        let err = boost_to_rest(&FourVector::new(1.0, 1.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, OpticsError::NotTimelike { .. }));
    }

    #[test]
    fn z_rotation_of_transverse_vector() {
        // Check the g-transform of the phase element against the
        // z-rotation matrix with the matching sense.
        let delta = 0.8;
        let v = FourVector::new(0.0, 0.0, 1.0, 0.0);
        let out = g_transform(&ComplexMat2::phase(delta), &v.herm()).unwrap().four_vector();
        let expect = FourVector::from_components(Mat4::rotation_z(-delta).apply(v.components()));
        assert!(out.max_diff(&expect) <= 1e-15);
        // (t, z) untouched, (x, y) turned by the full angle.
        assert!((out.x - delta.cos()).abs() <= 1e-15);
        assert!((out.y + delta.sin()).abs() <= 1e-15);
        let _ = FRAC_PI_2;
    }
}
