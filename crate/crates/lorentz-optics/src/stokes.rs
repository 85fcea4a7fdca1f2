//! Coherency matrices, Stokes parameters, the Mueller map, Poincare
//! spheres, and entropy.
//!
//! A partially coherent two-component beam is summarized by the Hermitian
//! coherency matrix
//!
//! ```text
//! C = | a^2                  a b e^{-(sigma + i delta)} |
//!     | a b e^{-(sigma - i delta)}  b^2                 |
//! ```
//!
//! with amplitudes `a, b`, relative phase `delta` and decoherence
//! parameter `sigma >= 0`. Writing `cos(chi) = e^{-sigma}` defines the
//! decoherence angle `chi`. Element matrices act by `C' = G C G^dagger`,
//! which preserves `det C = (a b sin chi)^2`: no element can change the
//! decoherence angle, exactly as no Lorentz transformation can change a
//! mass. The Stokes parameters are the four-vector components of `C`, the
//! Mueller matrix the four-by-four image of `G`, and enlarging the
//! symmetry by one more time-like direction (a second, partner sphere)
//! finally makes `chi` a rotation angle.

use num_complex::Complex64;

use crate::error::{OpticsError, Result};
use crate::mat2::{C64, ComplexMat2};
use crate::mat4::{ComplexMat4, Mat4};
use crate::spacetime::kron_with_conj;
use crate::DET_TOL;

/// Coherency matrix in the `(a, b, sigma, delta)` parameterization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoherencyMatrix {
    a: f64,
    b: f64,
    sigma: f64,
    delta: f64,
}

impl CoherencyMatrix {
    /// Validates and stores the parameters. `sigma` may be infinite
    /// (fully incoherent); amplitudes must be finite and nonnegative.
    pub fn new(a: f64, b: f64, sigma: f64, delta: f64) -> Result<Self> {
        for amp in [a, b] {
            if !amp.is_finite() || amp < 0.0 {
                return Err(OpticsError::InvalidAmplitude(amp));
            }
        }
        if sigma.is_nan() || sigma < 0.0 {
            return Err(OpticsError::InvalidSigma(sigma));
        }
        assert!(delta.is_finite(), "relative phase must be finite");
        Ok(Self { a, b, sigma, delta })
    }

    /// Amplitude of the first component.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Amplitude of the second component.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Decoherence parameter.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Relative phase.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Decoherence angle `chi = arccos(e^{-sigma})`, in `[0, pi/2]`.
    pub fn chi(&self) -> f64 {
        (-self.sigma).exp().acos()
    }

    /// The Hermitian matrix itself.
    pub fn matrix(&self) -> ComplexMat2 {
        let off = self.a * self.b * (-self.sigma).exp();
        let e01 = C64::from_polar(off, -self.delta);
        ComplexMat2::new(
            C64::new(self.a * self.a, 0.0),
            e01,
            e01.conj(),
            C64::new(self.b * self.b, 0.0),
        )
    }

    /// Trace `a^2 + b^2` (total intensity).
    pub fn trace(&self) -> f64 {
        self.a * self.a + self.b * self.b
    }

    /// Determinant `(a b)^2 (1 - e^{-2 sigma}) = (a b sin chi)^2 >= 0`.
    pub fn det(&self) -> f64 {
        let ab = self.a * self.b;
        ab * ab * (1.0 - (-2.0 * self.sigma).exp())
    }

    /// Outer-sphere radius `s = (a^2 + b^2) / 2`.
    pub fn outer_radius(&self) -> f64 {
        0.5 * self.trace()
    }

    /// Poincare-sphere radius
    /// `r = sqrt((a^2 - b^2)^2 + 4 (a b)^2 cos^2(chi)) / 2`.
    ///
    /// Shrinks from `s` at full coherence to `|a^2 - b^2| / 2` at
    /// `chi = pi/2`; the eigenvalues of the matrix are `s +- r`.
    pub fn inner_radius(&self) -> f64 {
        let rz = 0.5 * (self.a * self.a - self.b * self.b);
        let transverse = self.a * self.b * self.chi().cos();
        rz.hypot(transverse)
    }

    /// Eigenvalues `(s + r, s - r)` of the coherency matrix.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let s = self.outer_radius();
        let r = self.inner_radius();
        (s + r, s - r)
    }
}

/// Degree of polarization `sqrt(1 - 4 det C / tr(C)^2)`, in `[0, 1]`.
///
/// One for a fully coherent beam; `(a^2 - b^2)/(a^2 + b^2)` at maximum
/// decoherence, hence zero for balanced amplitudes.
pub fn degree_of_polarization(c: &CoherencyMatrix) -> Result<f64> {
    let tr = c.trace();
    if tr <= 0.0 {
        return Err(OpticsError::ZeroIntensity);
    }
    Ok((1.0 - 4.0 * c.det() / (tr * tr)).max(0.0).sqrt())
}

/// Stokes parameters in the order `(s0, s3, s1, s2)`, mirroring the
/// four-vector ordering `(t, z, x, y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StokesVector {
    /// Total intensity component, `(C11 + C22) / sqrt(2)`.
    pub s0: f64,
    /// Linear x/y imbalance, `(C11 - C22) / sqrt(2)`.
    pub s3: f64,
    /// Diagonal linear component, `(C12 + C21) / sqrt(2)`.
    pub s1: f64,
    /// Circular component, `(C12 - C21) / (sqrt(2) i)`.
    pub s2: f64,
}

impl StokesVector {
    /// Minkowski form `s0^2 - s3^2 - s1^2 - s2^2`; equals `2 det C` in
    /// this normalization.
    pub fn norm_squared(&self) -> f64 {
        self.s0 * self.s0 - self.s3 * self.s3 - self.s1 * self.s1 - self.s2 * self.s2
    }

    /// Components as an array in `(s0, s3, s1, s2)` order.
    pub fn components(&self) -> [f64; 4] {
        [self.s0, self.s3, self.s1, self.s2]
    }

    /// Largest componentwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()))
    }
}

impl std::ops::Mul<StokesVector> for Mat4 {
    type Output = StokesVector;
    fn mul(self, s: StokesVector) -> StokesVector {
        let v = self.apply(s.components());
        StokesVector { s0: v[0], s3: v[1], s1: v[2], s2: v[3] }
    }
}

/// Stokes parameters of a coherency matrix (carries the `1/sqrt(2)`
/// normalization written above; multiply by `sqrt(2)` for the
/// conventional unnormalized set).
pub fn stokes(c: &CoherencyMatrix) -> StokesVector {
    stokes_of_matrix(&c.matrix())
}

/// Stokes parameters of a raw Hermitian matrix.
pub fn stokes_of_matrix(m: &ComplexMat2) -> StokesVector {
    let inv_rt2 = std::f64::consts::FRAC_1_SQRT_2;
    let c11 = m.e[0][0].re;
    let c22 = m.e[1][1].re;
    let c12 = m.e[0][1];
    let c21 = m.e[1][0];
    StokesVector {
        s0: (c11 + c22) * inv_rt2,
        s3: (c11 - c22) * inv_rt2,
        s1: (c12 + c21).re * inv_rt2,
        // (c12 - c21)/(sqrt(2) i): purely imaginary difference for
        // Hermitian input, so dividing by i lands on the real axis.
        s2: (c12 - c21).im * inv_rt2,
    }
}

/// Unitary change of basis from `(C11, C12, C21, C22)` to the Stokes
/// ordering `(s0, s3, s1, s2)`.
fn stokes_basis() -> ComplexMat4 {
    let k = std::f64::consts::FRAC_1_SQRT_2;
    let r = |x: f64| Complex64::new(k * x, 0.0);
    let i = |x: f64| Complex64::new(0.0, k * x);
    ComplexMat4::new([
        [r(1.0), r(0.0), r(0.0), r(1.0)],
        [r(1.0), r(0.0), r(0.0), r(-1.0)],
        [r(0.0), r(1.0), r(1.0), r(0.0)],
        [r(0.0), i(-1.0), i(1.0), r(0.0)],
    ])
}

/// Adjoint of [`stokes_basis`] (its inverse, since the basis is unitary).
fn stokes_basis_adjoint() -> ComplexMat4 {
    let b = stokes_basis();
    let mut out = ComplexMat4::zero();
    for i in 0..4 {
        for j in 0..4 {
            out.e[i][j] = b.e[j][i].conj();
        }
    }
    out
}

/// Mueller matrix of a unimodular element: the four-by-four map of the
/// Stokes parameters, `basis (G (x) G*) basis^-1` in the `(s0, s3, s1,
/// s2)` ordering.
pub fn mueller(g: &ComplexMat2) -> Result<Mat4> {
    mueller_with_tol(g, DET_TOL)
}

/// [`mueller`] with an explicit unimodularity tolerance.
pub fn mueller_with_tol(g: &ComplexMat2, det_tol: f64) -> Result<Mat4> {
    let excess = g.unimodularity();
    if excess > det_tol {
        return Err(OpticsError::NonUnimodular { excess });
    }
    let m = stokes_basis() * kron_with_conj(g) * stokes_basis_adjoint();
    let residue = m.imag_norm();
    if residue > 1e-9 {
        return Err(OpticsError::NotReal { residue });
    }
    Ok(m.real_part())
}

/// Transforms a coherency matrix by `C' = G C G^dagger`.
///
/// The result is returned as a raw Hermitian matrix; the `(a, b, sigma,
/// delta)` parameterization is generally not preserved, but the
/// determinant (and with it the decoherence angle) is.
pub fn transform_coherency(g: &ComplexMat2, c: &CoherencyMatrix) -> Result<ComplexMat2> {
    transform_coherency_matrix(g, &c.matrix())
}

/// [`transform_coherency`] acting on a raw matrix, for chaining.
pub fn transform_coherency_matrix(g: &ComplexMat2, m: &ComplexMat2) -> Result<ComplexMat2> {
    let excess = g.unimodularity();
    if excess > DET_TOL {
        return Err(OpticsError::NonUnimodular { excess });
    }
    let out = *g * *m * g.adjoint();
    // Hermitian input gives Hermitian output; fold rounding away.
    Ok((out + out.adjoint()).scale(C64::new(0.5, 0.0)))
}

/// Point of the extended Poincare construction: outer radius `s`, partner
/// radius `u`, and the inner-sphere vector `(r_z, r_x, r_y)`.
///
/// Doubles as the five-component state the partner-sphere rotation
/// [`o32_rotate`] acts on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoincareState {
    /// Outer-sphere radius.
    pub s: f64,
    /// Partner-sphere radius.
    pub u: f64,
    /// Inner-sphere z component (independent of decoherence).
    pub r_z: f64,
    /// Inner-sphere x component.
    pub r_x: f64,
    /// Inner-sphere y component.
    pub r_y: f64,
}

impl PoincareState {
    /// Inner-sphere radius `r = sqrt(r_z^2 + r_x^2 + r_y^2)`.
    pub fn inner_radius(&self) -> f64 {
        (self.r_z * self.r_z + self.r_x * self.r_x + self.r_y * self.r_y).sqrt()
    }

    /// Polar ratio `cos(theta) = r_z / r`.
    pub fn polar_cosine(&self) -> f64 {
        self.r_z / self.inner_radius()
    }

    /// The quadratic form `s^2 + u^2 - r_z^2 - r_x^2 - r_y^2` preserved by
    /// the two-time rotation group of the coupled spheres.
    pub fn two_sphere_form(&self) -> f64 {
        self.s * self.s + self.u * self.u
            - self.r_z * self.r_z
            - self.r_x * self.r_x
            - self.r_y * self.r_y
    }

    /// Components as `[s, u, r_z, r_x, r_y]`.
    pub fn components(&self) -> [f64; 5] {
        [self.s, self.u, self.r_z, self.r_x, self.r_y]
    }

    /// Largest componentwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()))
    }
}

/// The extended Poincare state of a coherency matrix:
///
/// ```text
/// s   = (a^2 + b^2) / 2          r_x = a b cos(delta) cos(chi)
/// r_z = (a^2 - b^2) / 2          r_y = a b sin(delta) cos(chi)
/// ```
///
/// The partner radius `u` equals `s` here: the partner coherency matrix
/// swaps `cos(chi)` for `sin(chi)` but keeps the amplitudes, so both
/// spheres share the same outer radius.
pub fn poincare(c: &CoherencyMatrix) -> PoincareState {
    let s = c.outer_radius();
    let ab = c.a() * c.b();
    let cos_chi = c.chi().cos();
    PoincareState {
        s,
        u: s,
        r_z: 0.5 * (c.a() * c.a() - c.b() * c.b()),
        r_x: ab * c.delta().cos() * cos_chi,
        r_y: ab * c.delta().sin() * cos_chi,
    }
}

/// Where the four-vector `(s, r, 0, 0)` of a Poincare state lands under
/// the boost that removes its inner radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PoincareOrbit {
    /// `s > r`: the boost with `tanh(eta) = r/s` yields the rest form
    /// `(sqrt(s^2 - r^2), 0, 0, 0)`.
    Timelike(crate::spacetime::FourVector),
    /// `s = r` (fully coherent): the orbit is light-like, every boost just
    /// rescales `(s, s, 0, 0)`; the unscaled representative is returned.
    Lightlike(crate::spacetime::FourVector),
}

/// Aligns the inner-sphere vector with `z` and boosts it away.
///
/// For a strictly partially coherent state the invariant content is the
/// single number `sqrt(s^2 - r^2) = a b sin(chi)`; at full coherence the
/// boost degenerates and the light-like representative is reported
/// instead.
pub fn boost_to_invariant(p: &PoincareState) -> PoincareOrbit {
    use crate::spacetime::FourVector;
    let s = p.s;
    let r = p.inner_radius();
    if s - r <= crate::ATOL * s.abs().max(1.0) {
        PoincareOrbit::Lightlike(FourVector::new(s, s, 0.0, 0.0))
    } else {
        PoincareOrbit::Timelike(FourVector::new((s * s - r * r).sqrt(), 0.0, 0.0, 0.0))
    }
}

/// The coupled pair of coherency matrices: the physical one carrying
/// `cos(chi)` off-diagonals and the partner carrying `sin(chi)`.
///
/// Their determinants split `(a b)^2` between them,
/// `det C_s = (a b)^2 sin^2(chi)` and `det C_u = (a b)^2 cos^2(chi)`,
/// so the sum is independent of the decoherence angle.
pub fn o32_pair(
    a: f64,
    b: f64,
    sigma: f64,
    delta: f64,
) -> Result<(CoherencyMatrix, CoherencyMatrix)> {
    let physical = CoherencyMatrix::new(a, b, sigma, delta)?;
    let sin_chi = physical.chi().sin();
    // e^{-sigma_u} = sin(chi); fully coherent input gives a fully
    // incoherent partner (sigma_u = infinity).
    let sigma_u = -sin_chi.ln();
    let partner = CoherencyMatrix::new(a, b, sigma_u, delta)?;
    Ok((physical, partner))
}

/// Rotates a five-component state in the `(s, u)` plane by `chi`,
/// trading coherence between the two spheres while fixing the inner
/// vector. Preserves [`PoincareState::two_sphere_form`].
pub fn o32_rotate(state: &PoincareState, chi: f64) -> PoincareState {
    assert!(chi.is_finite(), "rotation angle must be finite");
    let (sin, cos) = chi.sin_cos();
    PoincareState {
        s: cos * state.s - sin * state.u,
        u: sin * state.s + cos * state.u,
        r_z: state.r_z,
        r_x: state.r_x,
        r_y: state.r_y,
    }
}

/// Purity parameters, entropies and determinants of the coupled pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyReport {
    /// Purity of the physical sphere,
    /// `f_s = sqrt(1 - 4 (a b)^2 sin^2(chi) / (a^2 + b^2)^2)`;
    /// coincides with the degree of polarization.
    pub f_s: f64,
    /// Purity of the partner sphere (same with `cos^2(chi)`).
    pub f_u: f64,
    /// Entropy of the physical sphere, in nats.
    pub entropy_s: f64,
    /// Entropy of the partner sphere, in nats.
    pub entropy_u: f64,
    /// `det C_s = (a b)^2 sin^2(chi)`.
    pub det_s: f64,
    /// `det C_u = (a b)^2 cos^2(chi)`.
    pub det_u: f64,
}

/// Von Neumann entropy of the normalized pair at decoherence angle `chi`.
///
/// The normalized density matrices have eigenvalues `(1 +- f)/2`, so
/// `S = -sum p ln p` over the pair. `S_s` grows from zero at `chi = 0`
/// to its maximum at `chi = pi/2`, which is `ln 2` for balanced
/// amplitudes; `S_u` runs the opposite way. Their *sum* is not conserved;
/// the conserved quantity is `det C_s + det C_u = (a b)^2`.
pub fn entropy(a: f64, b: f64, chi: f64) -> Result<EntropyReport> {
    for amp in [a, b] {
        if !amp.is_finite() || amp < 0.0 {
            return Err(OpticsError::InvalidAmplitude(amp));
        }
    }
    assert!(chi.is_finite(), "decoherence angle must be finite");
    let intensity = a * a + b * b;
    if intensity <= 0.0 {
        return Err(OpticsError::ZeroIntensity);
    }
    let ab2 = (a * b) * (a * b);
    let (sin2, cos2) = (chi.sin() * chi.sin(), chi.cos() * chi.cos());
    let purity = |det_part: f64| (1.0 - 4.0 * det_part / (intensity * intensity)).max(0.0).sqrt();
    let f_s = purity(ab2 * sin2);
    let f_u = purity(ab2 * cos2);
    Ok(EntropyReport {
        f_s,
        f_u,
        entropy_s: mixing_entropy(f_s),
        entropy_u: mixing_entropy(f_u),
        det_s: ab2 * sin2,
        det_u: ab2 * cos2,
    })
}

/// `-p ln p - q ln q` for `p, q = (1 +- f)/2`, with `0 ln 0 = 0`.
fn mixing_entropy(f: f64) -> f64 {
    let plogp = |p: f64| if p <= 0.0 { 0.0 } else { p * p.ln() };
    -plogp(0.5 * (1.0 + f)) - plogp(0.5 * (1.0 - f))
}
