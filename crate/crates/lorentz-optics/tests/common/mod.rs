//! Shared oracles for the integration and acceptance suites.
//!
//! Everything here is deliberately independent of the library's own
//! closed forms: exponentials by scaling-and-squaring Taylor series,
//! powers by binary exponentiation, polar factors and eigenvalues from
//! first principles. The library is checked *against* these, never the
//! other way around.

#![allow(dead_code)]

use lorentz_optics::mat2::{C64, ComplexMat2, RealMat2};
use lorentz_optics::mat4::ComplexMat4;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic RNG for reproducible sampling.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Matrix exponential of a real 2x2 by scaling-and-squaring Taylor.
pub fn exp_real2(m: RealMat2) -> RealMat2 {
    let mut squarings = 0u32;
    let mut norm = m.max_abs();
    while norm > 0.25 {
        norm *= 0.5;
        squarings += 1;
    }
    let scaled = m * 0.5_f64.powi(squarings as i32);
    let mut term = RealMat2::identity();
    let mut sum = RealMat2::identity();
    for k in 1..=24 {
        term = term * scaled * (1.0 / k as f64);
        sum = sum + term;
    }
    let mut out = sum;
    for _ in 0..squarings {
        out = out * out;
    }
    out
}

/// Matrix exponential of a complex 4x4 by scaling-and-squaring Taylor.
pub fn exp_complex4(m: ComplexMat4) -> ComplexMat4 {
    let mut squarings = 0u32;
    let mut norm = m.max_abs();
    while norm > 0.25 {
        norm *= 0.5;
        squarings += 1;
    }
    let scaled = m.scale(C64::new(0.5_f64.powi(squarings as i32), 0.0));
    let mut term = ComplexMat4::identity();
    let mut sum = ComplexMat4::identity();
    for k in 1..=24 {
        term = (term * scaled).scale(C64::new(1.0 / k as f64, 0.0));
        sum = sum + term;
    }
    let mut out = sum;
    for _ in 0..squarings {
        out = out * out;
    }
    out
}

/// n-th power by binary exponentiation (repeated squaring).
pub fn binary_power(m: RealMat2, mut n: u64) -> RealMat2 {
    let mut base = m;
    let mut acc = RealMat2::identity();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base;
        }
        base = base * base;
        n >>= 1;
    }
    acc
}

/// Square root of a symmetric positive-definite 2x2:
/// `sqrt(A) = (A + sqrt(det A) I) / sqrt(tr A + 2 sqrt(det A))`.
pub fn sqrt_spd2(a: RealMat2) -> RealMat2 {
    let root_det = a.det().sqrt();
    let denom = (a.trace() + 2.0 * root_det).sqrt();
    (a + RealMat2::identity() * root_det) * (1.0 / denom)
}

/// Polar factors of a unimodular matrix: `(phi, xi, omega)` such that
/// `m = B(phi, xi) R(omega)` with `B(phi, xi)` the symmetric
/// positive-definite part and `R` orthogonal.
pub fn polar_decompose(m: RealMat2) -> (f64, f64, f64) {
    let p = sqrt_spd2(m * m.transpose());
    let r = p.inverse() * m;
    let omega = 2.0 * r.c.atan2(r.a);
    // p = [[cosh(xi/2) + sinh(xi/2) cos phi, sinh(xi/2) sin phi], ...]
    let cosh_half = 0.5 * p.trace();
    let xi = 2.0 * cosh_half.max(1.0).acosh();
    let phi = p.b.atan2(0.5 * (p.a - p.d));
    (phi, xi, omega)
}

/// Eigenvalues of a Hermitian 2x2 from its characteristic polynomial.
pub fn eig2_hermitian(m: &ComplexMat2) -> (f64, f64) {
    let tr = m.trace().re;
    let det = m.det().re;
    let disc = (0.25 * tr * tr - det).max(0.0).sqrt();
    (0.5 * tr + disc, 0.5 * tr - disc)
}

/// Eigenvalues of a real 2x2 with real spectrum.
pub fn eig2_real(m: &RealMat2) -> (f64, f64) {
    let tr = m.trace();
    let disc = (0.25 * tr * tr - m.det()).max(0.0).sqrt();
    (0.5 * tr + disc, 0.5 * tr - disc)
}

/// Random element of the real unimodular group: Gaussian entries
/// normalized to unit determinant (columns swapped first when the
/// determinant comes out negative).
pub fn random_sl2r(rng: &mut ChaCha8Rng) -> RealMat2 {
    loop {
        let g = RealMat2::new(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
        let det = g.det();
        if det.abs() < 1e-3 {
            continue;
        }
        let g = if det < 0.0 { RealMat2::new(g.b, g.a, g.d, g.c) } else { g };
        let k = 1.0 / g.det().sqrt();
        return g * k;
    }
}

/// Random element of the complex unimodular group: Gaussian complex
/// entries normalized by a complex square root of the determinant.
pub fn random_sl2c(rng: &mut ChaCha8Rng) -> ComplexMat2 {
    loop {
        let g = ComplexMat2::new(
            cgauss(rng),
            cgauss(rng),
            cgauss(rng),
            cgauss(rng),
        );
        let det = g.det();
        if det.norm() < 1e-3 {
            continue;
        }
        let k = det.sqrt().inv();
        return g.scale(k);
    }
}

/// Standard normal sample (Box-Muller).
pub fn gauss(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    (-2.0 * u1.ln()).sqrt() * u2.cos()
}

/// Standard complex normal sample.
pub fn cgauss(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(gauss(rng), gauss(rng))
}

/// Relative elementwise distance between two matrices.
pub fn rel_diff(a: &RealMat2, b: &RealMat2) -> f64 {
    a.max_diff(b) / a.max_abs().max(b.max_abs()).max(1.0)
}
