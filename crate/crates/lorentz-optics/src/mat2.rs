//! Real and complex two-by-two matrices and the elementary group elements
//! built from them.
//!
//! The whole library runs on two carriers: [`RealMat2`] for beam-transfer
//! (ABCD) matrices and [`ComplexMat2`] for Jones and coherency transforms.
//! Group elements are unimodular (determinant one); plain matrices relax
//! this so that generators and intermediate products fit the same types.
//!
//! All elementary constructors take the *full* group parameter and place
//! half-angles or half-rapidities in the entries, so `rotation(theta)`
//! covers the double sheet: `rotation(2.0 * PI)` is minus the identity.

use num_complex::Complex64;

use crate::error::OpticsError;

/// Complex scalar used throughout: a pair of binary64 reals.
pub type C64 = Complex64;

/// Real unimodular 2x2 matrix in beam-transfer form.
///
/// Fields follow the conventional element names:
///
/// ```text
/// | a  b |
/// | c  d |
/// ```
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealMat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl RealMat2 {
    /// Builds a matrix from its four entries in row-major order.
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    /// The identity matrix.
    pub const fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0)
    }

    /// Rotation by the full angle `theta` (entries carry `theta/2`):
    ///
    /// ```text
    /// |  cos(theta/2)  -sin(theta/2) |
    /// |  sin(theta/2)   cos(theta/2) |
    /// ```
    pub fn rotation(theta: f64) -> Self {
        assert!(theta.is_finite(), "rotation angle must be finite");
        let (s, c) = (0.5 * theta).sin_cos();
        Self::new(c, -s, s, c)
    }

    /// Boost (diagonal squeeze) with rapidity `eta`: `diag(e^{eta/2}, e^{-eta/2})`.
    pub fn boost(eta: f64) -> Self {
        assert!(eta.is_finite(), "boost rapidity must be finite");
        Self::new((0.5 * eta).exp(), 0.0, 0.0, (-0.5 * eta).exp())
    }

    /// Squeeze along the diagonal axes with rapidity `lambda`:
    ///
    /// ```text
    /// |  cosh(lambda/2)  sinh(lambda/2) |
    /// |  sinh(lambda/2)  cosh(lambda/2) |
    /// ```
    pub fn squeeze(lambda: f64) -> Self {
        assert!(lambda.is_finite(), "squeeze rapidity must be finite");
        let h = 0.5 * lambda;
        Self::new(h.cosh(), h.sinh(), h.sinh(), h.cosh())
    }

    /// Squeeze of rapidity `mu` along an axis rotated by `theta`, i.e.
    /// `R(theta) B(mu) R(-theta)` in closed form:
    ///
    /// ```text
    /// | cosh(mu/2) + sinh(mu/2) cos(theta)   sinh(mu/2) sin(theta)              |
    /// | sinh(mu/2) sin(theta)                cosh(mu/2) - sinh(mu/2) cos(theta) |
    /// ```
    pub fn rotated_squeeze(theta: f64, mu: f64) -> Self {
        assert!(theta.is_finite() && mu.is_finite(), "parameters must be finite");
        let ch = (0.5 * mu).cosh();
        let sh = (0.5 * mu).sinh();
        let (st, ct) = theta.sin_cos();
        Self::new(ch + sh * ct, sh * st, sh * st, ch - sh * ct)
    }

    /// Upper-triangular shear `[[1, s], [0, 1]]` (a translation in ray optics).
    pub fn shear(s: f64) -> Self {
        assert!(s.is_finite(), "shear must be finite");
        Self::new(1.0, s, 0.0, 1.0)
    }

    /// Lower-triangular shear `[[1, 0], [s, 1]]` (a thin lens / mirror kick).
    pub fn shear_lower(s: f64) -> Self {
        assert!(s.is_finite(), "shear must be finite");
        Self::new(1.0, 0.0, s, 1.0)
    }

    /// Exponential of the off-diagonal matrix `[[0, upper], [lower, 0]]`.
    ///
    /// Evaluated through the invariant `w = upper * lower`: trigonometric
    /// for `w < 0`, hyperbolic for `w > 0`, with a series fallback near
    /// `w = 0` so the shear limit carries no cancellation.
    pub fn exp_offdiag(upper: f64, lower: f64) -> Self {
        assert!(upper.is_finite() && lower.is_finite(), "entries must be finite");
        let w = upper * lower;
        let (even, odd) = cosh_sinhc(w);
        Self::new(even, upper * odd, lower * odd, even)
    }

    /// Determinant `ad - bc`.
    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Trace `a + d`.
    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::new(self.a, self.c, self.b, self.d)
    }

    /// Inverse through the adjugate; exact up to the determinant division.
    pub fn inverse(&self) -> Self {
        let det = self.det();
        Self::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }

    /// `|det - 1|`, the distance from the group condition.
    pub fn unimodularity(&self) -> f64 {
        (self.det() - 1.0).abs()
    }

    /// Whether the matrix is a group element within `tol`.
    pub fn is_unimodular(&self, tol: f64) -> bool {
        self.unimodularity() <= tol
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs())
    }

    /// Largest elementwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
            .max((self.d - other.d).abs())
    }

    /// Entries as a row-major array.
    pub fn entries(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }
}

impl std::ops::Mul for RealMat2 {
    type Output = RealMat2;
    fn mul(self, rhs: RealMat2) -> RealMat2 {
        RealMat2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

impl std::ops::Add for RealMat2 {
    type Output = RealMat2;
    fn add(self, rhs: RealMat2) -> RealMat2 {
        RealMat2::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl std::ops::Neg for RealMat2 {
    type Output = RealMat2;
    fn neg(self) -> RealMat2 {
        RealMat2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl std::ops::Mul<f64> for RealMat2 {
    type Output = RealMat2;
    fn mul(self, k: f64) -> RealMat2 {
        RealMat2::new(k * self.a, k * self.b, k * self.c, k * self.d)
    }
}

/// `(cosh(sqrt(w)), sinh(sqrt(w))/sqrt(w))` continued through `w <= 0`.
///
/// For `w < 0` these are `cos` and `sin(x)/x`; both are entire functions of
/// `w`, evaluated by series inside `|w| <= 1e-6`.
fn cosh_sinhc(w: f64) -> (f64, f64) {
    if w.abs() <= 1e-6 {
        // cosh(sqrt w) = sum w^k/(2k)!, sinh(sqrt w)/sqrt w = sum w^k/(2k+1)!
        let even = 1.0 + w * (1.0 / 2.0 + w * (1.0 / 24.0 + w / 720.0));
        let odd = 1.0 + w * (1.0 / 6.0 + w * (1.0 / 120.0 + w / 5040.0));
        (even, odd)
    } else if w > 0.0 {
        let r = w.sqrt();
        (r.cosh(), r.sinh() / r)
    } else {
        let r = (-w).sqrt();
        (r.cos(), r.sin() / r)
    }
}

/// Complex 2x2 matrix, the carrier of Jones matrices, coherency matrices
/// and the two-by-two representation of Lorentz transformations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMat2 {
    /// Entries in row-major order.
    pub e: [[C64; 2]; 2],
}

impl ComplexMat2 {
    /// Builds a matrix from four complex entries in row-major order.
    pub const fn new(e00: C64, e01: C64, e10: C64, e11: C64) -> Self {
        Self { e: [[e00, e01], [e10, e11]] }
    }

    /// Builds a matrix from real entries.
    pub fn from_real(m: &RealMat2) -> Self {
        Self::new(
            C64::new(m.a, 0.0),
            C64::new(m.b, 0.0),
            C64::new(m.c, 0.0),
            C64::new(m.d, 0.0),
        )
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        Self::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0))
    }

    /// The zero matrix.
    pub fn zero() -> Self {
        Self::new(C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0))
    }

    /// Phase shifter `diag(e^{i delta/2}, e^{-i delta/2})`, introducing a
    /// phase difference `delta` between the two field components.
    pub fn phase(delta: f64) -> Self {
        assert!(delta.is_finite(), "phase must be finite");
        let h = C64::new(0.0, 0.5 * delta).exp();
        Self::new(h, C64::new(0.0, 0.0), C64::new(0.0, 0.0), h.conj())
    }

    /// Layer propagation phase `diag(e^{-i delta/2}, e^{i delta/2})`, the
    /// convention used for multilayer chains (the inverse of [`Self::phase`]).
    pub fn layer_phase(delta: f64) -> Self {
        Self::phase(-delta)
    }

    /// Phase shifter whose fast axis is rotated by `theta/2`, i.e.
    /// `R(theta) Z(delta) R(-theta)` in closed form:
    ///
    /// ```text
    /// | cos(d/2) + i sin(d/2) cos(theta)    i sin(d/2) sin(theta)            |
    /// | i sin(d/2) sin(theta)               cos(d/2) - i sin(d/2) cos(theta) |
    /// ```
    pub fn rotated_phase(theta: f64, delta: f64) -> Self {
        assert!(theta.is_finite() && delta.is_finite(), "parameters must be finite");
        let cd = (0.5 * delta).cos();
        let sd = (0.5 * delta).sin();
        let (st, ct) = theta.sin_cos();
        Self::new(
            C64::new(cd, sd * ct),
            C64::new(0.0, sd * st),
            C64::new(0.0, sd * st),
            C64::new(cd, -sd * ct),
        )
    }

    /// Rotation by `theta` with real entries, promoted to the complex carrier.
    pub fn rotation(theta: f64) -> Self {
        Self::from_real(&RealMat2::rotation(theta))
    }

    /// Boost `diag(e^{eta/2}, e^{-eta/2})` on the complex carrier.
    pub fn boost(eta: f64) -> Self {
        Self::from_real(&RealMat2::boost(eta))
    }

    /// Symmetric squeeze on the complex carrier.
    pub fn squeeze(lambda: f64) -> Self {
        Self::from_real(&RealMat2::squeeze(lambda))
    }

    /// Determinant.
    pub fn det(&self) -> C64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    /// Trace.
    pub fn trace(&self) -> C64 {
        self.e[0][0] + self.e[1][1]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new(
            self.e[0][0].conj(),
            self.e[1][0].conj(),
            self.e[0][1].conj(),
            self.e[1][1].conj(),
        )
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(
            self.e[0][0].conj(),
            self.e[0][1].conj(),
            self.e[1][0].conj(),
            self.e[1][1].conj(),
        )
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::new(self.e[0][0], self.e[1][0], self.e[0][1], self.e[1][1])
    }

    /// Inverse through the adjugate.
    pub fn inverse(&self) -> Self {
        let det = self.det();
        Self::new(
            self.e[1][1] / det,
            -self.e[0][1] / det,
            -self.e[1][0] / det,
            self.e[0][0] / det,
        )
    }

    /// Scales every entry by `k`.
    pub fn scale(&self, k: C64) -> Self {
        Self::new(k * self.e[0][0], k * self.e[0][1], k * self.e[1][0], k * self.e[1][1])
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `|det - 1|`, the distance from the group condition.
    pub fn unimodularity(&self) -> f64 {
        (self.det() - C64::new(1.0, 0.0)).norm()
    }

    /// Whether the matrix is a group element within `tol`.
    pub fn is_unimodular(&self, tol: f64) -> bool {
        self.unimodularity() <= tol
    }

    /// Largest deviation from Hermitian symmetry, `max |e_ij - conj(e_ji)|`.
    pub fn hermiticity(&self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                r = r.max((self.e[i][j] - self.e[j][i].conj()).norm());
            }
        }
        r
    }

    /// Whether the matrix is Hermitian within `tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity() <= tol
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        let mut r: f64 = 0.0;
        for row in &self.e {
            for v in row {
                r = r.max(v.norm());
            }
        }
        r
    }

    /// Largest elementwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                r = r.max((self.e[i][j] - other.e[i][j]).norm());
            }
        }
        r
    }

    /// Largest imaginary residue over the entries.
    pub fn imag_norm(&self) -> f64 {
        let mut r: f64 = 0.0;
        for row in &self.e {
            for v in row {
                r = r.max(v.im.abs());
            }
        }
        r
    }

    /// Real part as a [`RealMat2`], failing when the imaginary residue
    /// exceeds `tol`.
    pub fn real_part(&self, tol: f64) -> Result<RealMat2, OpticsError> {
        let residue = self.imag_norm();
        if residue > tol {
            return Err(OpticsError::NotReal { residue });
        }
        Ok(RealMat2::new(self.e[0][0].re, self.e[0][1].re, self.e[1][0].re, self.e[1][1].re))
    }

    /// Applies the matrix to a complex column vector.
    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.e[0][0] * v[0] + self.e[0][1] * v[1],
            self.e[1][0] * v[0] + self.e[1][1] * v[1],
        ]
    }
}

impl std::ops::Mul for ComplexMat2 {
    type Output = ComplexMat2;
    fn mul(self, rhs: ComplexMat2) -> ComplexMat2 {
        let mut out = [[C64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.e[i][0] * rhs.e[0][j] + self.e[i][1] * rhs.e[1][j];
            }
        }
        ComplexMat2 { e: out }
    }
}

impl std::ops::Add for ComplexMat2 {
    type Output = ComplexMat2;
    fn add(self, rhs: ComplexMat2) -> ComplexMat2 {
        let mut out = self.e;
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] += rhs.e[i][j];
            }
        }
        ComplexMat2 { e: out }
    }
}

impl std::ops::Sub for ComplexMat2 {
    type Output = ComplexMat2;
    fn sub(self, rhs: ComplexMat2) -> ComplexMat2 {
        let mut out = self.e;
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] -= rhs.e[i][j];
            }
        }
        ComplexMat2 { e: out }
    }
}

impl std::ops::Neg for ComplexMat2 {
    type Output = ComplexMat2;
    fn neg(self) -> ComplexMat2 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl From<RealMat2> for ComplexMat2 {
    fn from(m: RealMat2) -> Self {
        ComplexMat2::from_real(&m)
    }
}
