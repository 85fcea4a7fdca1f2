//! The six generators of rotations and boosts in their two-by-two and
//! four-by-four forms.
//!
//! The two-by-two rotation generators are half the Pauli matrices; the
//! boost generators are `i` times the rotation generators. Both sets close
//! under the same commutation relations,
//!
//! ```text
//! [J_i, J_j] =  i e_ijk J_k
//! [J_i, K_j] =  i e_ijk K_k
//! [K_i, K_j] = -i e_ijk J_k
//! ```
//!
//! with `e_ijk` the totally antisymmetric symbol. The four-by-four forms
//! act on four-vectors ordered `(t, z, x, y)`.

use num_complex::Complex64;

use crate::mat2::ComplexMat2;
use crate::mat4::ComplexMat4;

/// Labels for the six generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Rotation about the x axis.
    J1,
    /// Rotation about the y axis.
    J2,
    /// Rotation about the z axis.
    J3,
    /// Boost along the x axis.
    K1,
    /// Boost along the y axis.
    K2,
    /// Boost along the z axis.
    K3,
}

impl Generator {
    /// All six generators, rotations first.
    pub const ALL: [Generator; 6] =
        [Self::J1, Self::J2, Self::J3, Self::K1, Self::K2, Self::K3];

    /// The three rotation generators.
    pub const ROTATIONS: [Generator; 3] = [Self::J1, Self::J2, Self::J3];

    /// The three boost generators.
    pub const BOOSTS: [Generator; 3] = [Self::K1, Self::K2, Self::K3];

    /// The two-by-two form. Rotations are Hermitian (half-Pauli), boosts
    /// are the anti-Hermitian `i J_i`.
    pub fn two_by_two(self) -> ComplexMat2 {
        let r = |x: f64| Complex64::new(x, 0.0);
        let i = |x: f64| Complex64::new(0.0, x);
        match self {
            Self::J1 => ComplexMat2::new(r(0.0), r(0.5), r(0.5), r(0.0)),
            Self::J2 => ComplexMat2::new(r(0.0), i(-0.5), i(0.5), r(0.0)),
            Self::J3 => ComplexMat2::new(r(0.5), r(0.0), r(0.0), r(-0.5)),
            Self::K1 => ComplexMat2::new(r(0.0), i(0.5), i(0.5), r(0.0)),
            Self::K2 => ComplexMat2::new(r(0.0), r(0.5), r(-0.5), r(0.0)),
            Self::K3 => ComplexMat2::new(i(0.5), r(0.0), r(0.0), i(-0.5)),
        }
    }

    /// The four-by-four form acting on `(t, z, x, y)`.
    pub fn four_by_four(self) -> ComplexMat4 {
        let mut m = ComplexMat4::zero();
        let mut put = |row: usize, col: usize, im: f64| {
            m.e[row][col] = Complex64::new(0.0, im);
        };
        // Component indices: t = 0, z = 1, x = 2, y = 3.
        match self {
            Self::J1 => {
                put(1, 3, 1.0);
                put(3, 1, -1.0);
            }
            Self::J2 => {
                put(1, 2, -1.0);
                put(2, 1, 1.0);
            }
            Self::J3 => {
                put(2, 3, -1.0);
                put(3, 2, 1.0);
            }
            Self::K1 => {
                put(0, 2, 1.0);
                put(2, 0, 1.0);
            }
            Self::K2 => {
                put(0, 3, 1.0);
                put(3, 0, 1.0);
            }
            Self::K3 => {
                put(0, 1, 1.0);
                put(1, 0, 1.0);
            }
        }
        m
    }

    /// Whether this is a rotation generator.
    pub fn is_rotation(self) -> bool {
        matches!(self, Self::J1 | Self::J2 | Self::J3)
    }

    /// Axis index 1, 2 or 3.
    pub fn axis(self) -> usize {
        match self {
            Self::J1 | Self::K1 => 1,
            Self::J2 | Self::K2 => 2,
            Self::J3 | Self::K3 => 3,
        }
    }
}

/// Commutator `a b - b a` of two-by-two matrices.
pub fn commutator(a: &ComplexMat2, b: &ComplexMat2) -> ComplexMat2 {
    a.commutator(b)
}

/// Totally antisymmetric symbol on indices 1..=3.
pub fn epsilon(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn pauli_halves_as_printed() {
        let j3 = Generator::J3.two_by_two();
        assert_eq!(j3.e[0][0], Complex64::new(0.5, 0.0));
        assert_eq!(j3.e[1][1], Complex64::new(-0.5, 0.0));
        let k3 = Generator::K3.two_by_two();
        assert_eq!(k3.e[0][0], Complex64::new(0.0, 0.5));
        assert_eq!(k3.e[1][1], Complex64::new(0.0, -0.5));
    }

    #[test]
    fn boosts_are_i_times_rotations() {
        for (j, k) in [
            (Generator::J1, Generator::K1),
            (Generator::J2, Generator::K2),
            (Generator::J3, Generator::K3),
        ] {
            let diff = k.two_by_two() - j.two_by_two().scale(Complex64::new(0.0, 1.0));
            assert_eq!(diff.max_abs(), 0.0);
        }
    }

    #[test]
    fn hermiticity_split() {
        for g in Generator::ROTATIONS {
            assert_eq!(g.two_by_two().hermiticity(), 0.0);
        }
        for g in Generator::BOOSTS {
            // Anti-Hermitian: m + m^dagger = 0.
            let m = g.two_by_two();
            assert_eq!((m + m.adjoint()).max_abs(), 0.0);
        }
    }

    #[test]
    fn sample_commutators() {
        let i = Complex64::new(0.0, 1.0);
        // [J1, J2] = i J3
        let c = commutator(&Generator::J1.two_by_two(), &Generator::J2.two_by_two());
        assert!(c.max_diff(&Generator::J3.two_by_two().scale(i)) <= 1e-15);
        // [K1, K2] = -i J3
        let c = commutator(&Generator::K1.two_by_two(), &Generator::K2.two_by_two());
        assert!(c.max_diff(&Generator::J3.two_by_two().scale(-i)) <= 1e-15);
        // [J2, K3] = i K1
        let c = commutator(&Generator::J2.two_by_two(), &Generator::K3.two_by_two());
        assert!(c.max_diff(&Generator::K1.two_by_two().scale(i)) <= 1e-15);
        // [J2, K1] = -i K3 and [K1, K3] = i J2 close the real subgroup.
        let c = commutator(&Generator::J2.two_by_two(), &Generator::K1.two_by_two());
        assert!(c.max_diff(&Generator::K3.two_by_two().scale(-i)) <= 1e-15);
        let c = commutator(&Generator::K1.two_by_two(), &Generator::K3.two_by_two());
        assert!(c.max_diff(&Generator::J2.two_by_two().scale(i)) <= 1e-15);
    }

    #[test]
    fn k_minus_i_j_vanishes() {
        let k1 = Generator::K1.two_by_two();
        let j1 = Generator::J1.two_by_two();
        let diff = k1 - j1.scale(Complex64::new(0.0, 1.0));
        assert_eq!(diff.max_abs(), 0.0);
    }
}
