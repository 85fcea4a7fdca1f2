//! Real and complex four-by-four matrices.
//!
//! [`Mat4`] carries Lorentz-transformation matrices acting on the
//! four-vector ordering `(t, z, x, y)`; [`ComplexMat4`] carries the
//! four-by-four generators and the Kronecker-product intermediates of the
//! two-by-two / four-by-four correspondence.

use num_complex::Complex64;

use crate::mat2::C64;

/// Real 4x4 matrix, row-major, acting on `(t, z, x, y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4 {
    /// Entries in row-major order.
    pub e: [[f64; 4]; 4],
}

impl Mat4 {
    /// Builds a matrix from row-major entries.
    pub const fn new(e: [[f64; 4]; 4]) -> Self {
        Self { e }
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        let mut e = [[0.0; 4]; 4];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { e }
    }

    /// The Minkowski metric `diag(1, -1, -1, -1)` in `(t, z, x, y)` order.
    pub fn metric() -> Self {
        Self::new([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ])
    }

    /// Rotation about the y axis, mixing `(z, x)` by the full angle `theta`.
    pub fn rotation_y(theta: f64) -> Self {
        assert!(theta.is_finite(), "rotation angle must be finite");
        let (s, c) = theta.sin_cos();
        Self::new([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, c, -s, 0.0],
            [0.0, s, c, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
    }

    /// Rotation about the z axis, mixing `(x, y)` by the full angle `phi`.
    pub fn rotation_z(phi: f64) -> Self {
        assert!(phi.is_finite(), "rotation angle must be finite");
        let (s, c) = phi.sin_cos();
        Self::new([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, c, -s],
            [0.0, 0.0, s, c],
        ])
    }

    /// Boost along the z axis with rapidity `eta`.
    pub fn boost_z(eta: f64) -> Self {
        assert!(eta.is_finite(), "rapidity must be finite");
        let (s, c) = (eta.sinh(), eta.cosh());
        Self::new([
            [c, s, 0.0, 0.0],
            [s, c, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
    }

    /// Boost along the x axis with rapidity `lambda`.
    pub fn boost_x(lambda: f64) -> Self {
        assert!(lambda.is_finite(), "rapidity must be finite");
        let (s, c) = (lambda.sinh(), lambda.cosh());
        Self::new([
            [c, 0.0, s, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [s, 0.0, c, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in self.e.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out[j][i] = v;
            }
        }
        Self { e: out }
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.e.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Largest elementwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                r = r.max((self.e[i][j] - other.e[i][j]).abs());
            }
        }
        r
    }

    /// Residue of the defining relation of the Lorentz group,
    /// `max |(L^T g L - g)_ij|`.
    pub fn metric_residue(&self) -> f64 {
        let g = Mat4::metric();
        (self.transpose() * g * *self).max_diff(&g)
    }

    /// Whether the matrix preserves the Minkowski metric within `tol`.
    pub fn preserves_metric(&self, tol: f64) -> bool {
        self.metric_residue() <= tol
    }

    /// Applies the matrix to a column of four components.
    pub fn apply(&self, v: [f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, row) in self.e.iter().enumerate() {
            out[i] = row.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
        }
        out
    }
}

impl std::ops::Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.e[i][k] * rhs.e[k][j]).sum();
            }
        }
        Mat4 { e: out }
    }
}

/// Complex 4x4 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMat4 {
    /// Entries in row-major order.
    pub e: [[C64; 4]; 4],
}

impl ComplexMat4 {
    /// Builds a matrix from row-major entries.
    pub const fn new(e: [[C64; 4]; 4]) -> Self {
        Self { e }
    }

    /// The zero matrix.
    pub fn zero() -> Self {
        Self { e: [[Complex64::new(0.0, 0.0); 4]; 4] }
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.e[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a complex matrix from a real one.
    pub fn from_real(m: &Mat4) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] = Complex64::new(m.e[i][j], 0.0);
            }
        }
        out
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Scales every entry by `k`.
    pub fn scale(&self, k: C64) -> Self {
        let mut out = self.e;
        for row in &mut out {
            for v in row {
                *v *= k;
            }
        }
        Self { e: out }
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.e.iter().flatten().fold(0.0_f64, |m, v| m.max(v.norm()))
    }

    /// Largest elementwise difference from `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                r = r.max((self.e[i][j] - other.e[i][j]).norm());
            }
        }
        r
    }

    /// Largest imaginary residue over the entries.
    pub fn imag_norm(&self) -> f64 {
        self.e.iter().flatten().fold(0.0_f64, |m, v| m.max(v.im.abs()))
    }

    /// Real part as a [`Mat4`]; the caller is responsible for checking
    /// [`Self::imag_norm`] first when that matters.
    pub fn real_part(&self) -> Mat4 {
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = self.e[i][j].re;
            }
        }
        Mat4 { e: out }
    }
}

impl std::ops::Mul for ComplexMat4 {
    type Output = ComplexMat4;
    fn mul(self, rhs: ComplexMat4) -> ComplexMat4 {
        let mut out = ComplexMat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..4 {
                    acc += self.e[i][k] * rhs.e[k][j];
                }
                out.e[i][j] = acc;
            }
        }
        out
    }
}

impl std::ops::Add for ComplexMat4 {
    type Output = ComplexMat4;
    fn add(self, rhs: ComplexMat4) -> ComplexMat4 {
        let mut out = self.e;
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] += rhs.e[i][j];
            }
        }
        ComplexMat4 { e: out }
    }
}

impl std::ops::Sub for ComplexMat4 {
    type Output = ComplexMat4;
    fn sub(self, rhs: ComplexMat4) -> ComplexMat4 {
        let mut out = self.e;
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] -= rhs.e[i][j];
            }
        }
        ComplexMat4 { e: out }
    }
}
