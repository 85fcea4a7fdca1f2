//! Periodic optical systems: laser cavities and multilayer stacks.
//!
//! Both reduce to the same scheme. One cycle of the system is a
//! unimodular matrix `M`; writing `M = P W(gamma) P^-1` with an
//! elementary kernel `W` turns the N-cycle into `P W(N gamma) P^-1`.
//! An elliptic kernel keeps `M^N` bounded (a stable cavity, a pass band);
//! a hyperbolic kernel makes it grow like `cosh(N gamma / 2)` (an
//! unstable cavity, a stop band).

use crate::decompose::{wigner_decompose, CoreForm, MatrixClass, WignerDecomp};
use crate::error::{OpticsError, Result};
use crate::mat2::{C64, ComplexMat2, RealMat2};

/// Two-mirror cavity: identical concave mirrors of radius `radius`
/// separated by `distance`, traversed for `cycles` round trips.
///
/// Only the ratio `distance / radius` enters the cycle kernel; the two
/// lengths must simply share one unit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CavitySpec {
    /// Mirror radius of curvature (may be infinite for flat mirrors).
    pub radius: f64,
    /// Mirror separation.
    pub distance: f64,
    /// Number of round trips for the n-cycle matrix.
    pub cycles: u64,
}

impl CavitySpec {
    /// Validates the geometry: positive separation, positive radius.
    pub fn new(radius: f64, distance: f64, cycles: u64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(OpticsError::InvalidGeometry(format!(
                "mirror radius must be positive, got {radius}"
            )));
        }
        if !distance.is_finite() || distance <= 0.0 {
            return Err(OpticsError::InvalidGeometry(format!(
                "mirror separation must be positive and finite, got {distance}"
            )));
        }
        if cycles == 0 {
            return Err(OpticsError::InvalidGeometry("cycles must be at least 1".into()));
        }
        Ok(Self { radius, distance, cycles })
    }

    /// Geometric stability condition `0 < d < 2R`.
    pub fn is_stable(&self) -> bool {
        self.distance > 0.0 && self.distance < 2.0 * self.radius
    }

    /// The mirror kick matrix `[[1, 0], [-2/R, 1]]`.
    pub fn mirror(&self) -> RealMat2 {
        RealMat2::shear_lower(-2.0 / self.radius)
    }

    /// The free-flight translation matrix `[[1, d], [0, 1]]`.
    pub fn translation(&self) -> RealMat2 {
        RealMat2::shear(self.distance)
    }
}

/// One round trip of the beam: mirror, translation, mirror, translation.
pub fn cavity_round_trip(spec: &CavitySpec) -> RealMat2 {
    let m = spec.mirror();
    let t = spec.translation();
    m * t * m * t
}

/// A periodic system reduced to kernel form.
///
/// The defining relation is
/// `n_cycle = similarity * W(cycles * gamma) * similarity^-1`,
/// with `W` the kernel of `core` and `similarity` absorbing both the
/// squeeze conjugation and any change of section.
#[derive(Clone, Debug)]
pub struct PeriodicAnalysis {
    /// The one-cycle matrix.
    pub one_cycle: RealMat2,
    /// Classified kernel parameters of the cycle.
    pub core: CoreForm,
    /// Conjugator from the bare kernel to the one-cycle matrix.
    pub similarity: RealMat2,
    /// The `cycles`-th power of the one-cycle matrix.
    pub n_cycle: RealMat2,
    /// Whether repeated cycles stay bounded.
    pub stable: bool,
    /// Number of cycles the analysis was evaluated for.
    pub cycles: u64,
}

impl PeriodicAnalysis {
    fn from_kernel(
        one_cycle: RealMat2,
        w: &WignerDecomp,
        section: RealMat2,
        cycles: u64,
        stable: bool,
    ) -> Self {
        let similarity = section * w.pre_transform;
        let n_cycle = similarity * w.form.kernel_scaled(cycles) * similarity.inverse();
        Self { one_cycle, core: w.form, similarity, n_cycle, stable, cycles }
    }

    /// Natural log of `|trace|` of the n-cycle matrix, evaluated in
    /// log-space so stop bands report a growth rate even when the matrix
    /// entries themselves would overflow.
    pub fn log_trace_n(&self) -> f64 {
        let n = self.cycles as f64;
        match self.core {
            CoreForm::Elliptic { gamma, .. } => (2.0 * (0.5 * n * gamma).cos()).abs().ln(),
            CoreForm::Hyperbolic { gamma, .. } => {
                // ln(2 cosh(x)) = |x| + ln(1 + e^{-2|x|})
                let x = (0.5 * n * gamma).abs();
                x + (1.0 + (-2.0 * x).exp()).ln()
            }
            CoreForm::Parabolic { .. } => 2.0_f64.ln(),
        }
    }
}

/// Analysis of a cavity: escort matrix, its conjugator, and the reduced
/// kernel of the round trip.
#[derive(Clone, Debug)]
pub struct CavityAnalysis {
    /// The dimensionless half-trip matrix `C`; the round trip core is `C^2`.
    pub escort: RealMat2,
    /// Conjugator `E` with `round_trip = E C^2 E^-1`.
    pub conjugator: RealMat2,
    /// Rotation angle per half trip, `cos(gamma/2) = 1 - d/R`; absent for
    /// unstable geometry.
    pub gamma: Option<f64>,
    /// Squeeze rapidity, `e^eta = sqrt((2R - d)/(4 d))`; absent when the
    /// square root turns imaginary (`d >= 2R`).
    pub eta: Option<f64>,
    /// The reduced periodic analysis of the round trip.
    pub analysis: PeriodicAnalysis,
}

/// Decomposes the round trip as `E C^2 E^-1` and reduces `C^2` to kernel
/// form.
///
/// An unstable geometry is a status, not a failure: the analysis comes
/// back with a hyperbolic (or boundary parabolic) core and
/// `stable = false`.
pub fn cavity_analyze(spec: &CavitySpec) -> Result<CavityAnalysis> {
    let r = spec.radius;
    let d = spec.distance;
    let ratio = d / r;
    let escort = RealMat2::new(1.0 - ratio, 1.0 - 0.5 * ratio, -2.0 * ratio, 1.0 - ratio);
    let conjugator = RealMat2::shear(-0.5 * d) * RealMat2::boost(d.ln());
    // Decompose the half trip and square its form. The half trip
    // classifies faithfully over the whole geometry range, whereas the
    // round-trip core itself degenerates to minus the identity at the
    // confocal point and would land in the boundary trace band.
    let half = wigner_decompose(&escort)?;
    let w = WignerDecomp {
        eta: half.eta,
        form: half.form.repeated(2),
        pre_transform: half.pre_transform,
    };
    let one_cycle = cavity_round_trip(spec);
    let analysis =
        PeriodicAnalysis::from_kernel(one_cycle, &w, conjugator, spec.cycles, spec.is_stable());
    let cos_half = 1.0 - ratio;
    let gamma = (cos_half.abs() <= 1.0).then(|| 2.0 * cos_half.acos());
    let eta = (d < 2.0 * r).then(|| 0.5 * ((2.0 * r - d) / (4.0 * d)).ln());
    Ok(CavityAnalysis { escort, conjugator, gamma, eta, analysis })
}

/// Periodic two-medium stack: refractive indices `n1`, `n2` and phase
/// thicknesses `delta1`, `delta2`, cycled `cycles` times starting from the
/// midpoint of the second medium.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MultilayerSpec {
    pub n1: f64,
    pub n2: f64,
    pub delta1: f64,
    pub delta2: f64,
    /// Number of cycles for the n-cycle matrix.
    pub cycles: u64,
}

impl MultilayerSpec {
    /// Validates the spec: positive finite indices, finite phases.
    pub fn new(n1: f64, n2: f64, delta1: f64, delta2: f64, cycles: u64) -> Result<Self> {
        for (name, n) in [("n1", n1), ("n2", n2)] {
            if !n.is_finite() || n <= 0.0 {
                return Err(OpticsError::InvalidIndex(format!(
                    "{name} must be positive and finite, got {n}"
                )));
            }
        }
        if !delta1.is_finite() || !delta2.is_finite() {
            return Err(OpticsError::InvalidIndex("phase thicknesses must be finite".into()));
        }
        if cycles == 0 {
            return Err(OpticsError::InvalidIndex("cycles must be at least 1".into()));
        }
        Ok(Self { n1, n2, delta1, delta2, cycles })
    }

    /// Boundary rapidity: `cosh(sigma/2) = (n1 + n2) / (2 sqrt(n1 n2))`
    /// and `sinh(sigma/2) = (n1 - n2) / (2 sqrt(n1 n2))`, which combine to
    /// `sigma = ln(n1 / n2)`.
    pub fn sigma(&self) -> f64 {
        (self.n1 / self.n2).ln()
    }

    /// Boundary matrix `Q(sigma)`, a symmetric squeeze.
    pub fn boundary(&self) -> RealMat2 {
        RealMat2::squeeze(self.sigma())
    }
}

/// One complete cycle of the complex chain,
/// `P(d2/2) Q(sigma) P(d1) Q(-sigma) P(d2/2)`.
pub fn multilayer_cycle(spec: &MultilayerSpec) -> ComplexMat2 {
    let sigma = spec.sigma();
    let p_half = ComplexMat2::layer_phase(0.5 * spec.delta2);
    let p1 = ComplexMat2::layer_phase(spec.delta1);
    let q = ComplexMat2::squeeze(sigma);
    let q_inv = ComplexMat2::squeeze(-sigma);
    p_half * q * p1 * q_inv * p_half
}

/// The constant conjugation turning the complex chain real.
///
/// The first factor maps layer phases to rotations while fixing the
/// boundary squeeze; the second turns the symmetric squeeze diagonal
/// without disturbing rotations.
pub fn realizing_conjugation() -> ComplexMat2 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let c1 = ComplexMat2::new(
        C64::new(s, 0.0),
        C64::new(0.0, s),
        C64::new(0.0, s),
        C64::new(s, 0.0),
    );
    let c2 = ComplexMat2::new(
        C64::new(s, 0.0),
        C64::new(s, 0.0),
        C64::new(-s, 0.0),
        C64::new(s, 0.0),
    );
    c2 * c1
}

/// Conjugates the complex chain into the real chain
/// `R(d2/2) B(sigma) R(d1) B(-sigma) R(d2/2)`.
pub fn multilayer_realize(spec: &MultilayerSpec) -> Result<RealMat2> {
    let c = realizing_conjugation();
    let real = c * multilayer_cycle(spec) * c.inverse();
    real.real_part(1e-12)
}

/// Reduces one multilayer cycle to kernel form through the
/// rotation-squeeze-rotation route.
///
/// The middle of the chain satisfies `cos(d1/2) = cosh(chi) cos(alpha)`
/// with `sinh(chi) = sinh(sigma) sin(d1/2)`; shifting `alpha` by `d2/2`
/// absorbs the outer rotations, and the resulting equi-diagonal matrix
/// factors as usual. Inside a stop band (`|cosh(chi) cos(alpha + d2/2)| >
/// 1`) the kernel comes back hyperbolic rather than failing: the growth
/// rate is the physically meaningful output there.
pub fn multilayer_wigner(spec: &MultilayerSpec) -> Result<WignerDecomp> {
    let sigma = spec.sigma();
    let half_d1 = 0.5 * spec.delta1;
    let chi = (sigma.sinh() * half_d1.sin()).asinh();
    let alpha = (sigma.cosh() * half_d1.sin()).atan2(half_d1.cos());
    let shifted = alpha + 0.5 * spec.delta2;
    let (ch, sh) = (chi.cosh(), chi.sinh());
    let h = ch * shifted.cos();
    let b = -sh - ch * shifted.sin();
    let c = -sh + ch * shifted.sin();
    wigner_decompose(&RealMat2::new(h, b, c, h))
}

/// Full periodic analysis of a multilayer: one cycle, kernel, n-cycle.
pub fn multilayer_analyze(spec: &MultilayerSpec) -> Result<PeriodicAnalysis> {
    let one_cycle = multilayer_realize(spec)?;
    let w = multilayer_wigner(spec)?;
    let stable = w.form.class() == MatrixClass::Elliptic;
    Ok(PeriodicAnalysis::from_kernel(
        one_cycle,
        &w,
        RealMat2::identity(),
        spec.cycles,
        stable,
    ))
}
