//! Zero-temperature Lifshitz pressure between two half-spaces across a gap.
//!
//! With κ = ζ/ħc the imaginary wavenumber,
//!
//! F = (ħc / 2π²) Σ_ν ∫₀^∞ dκ ∫₀^∞ dQ Q k₃ r₁₃ r₂₃ e^(−2k₃d) / (1 − r₁₃ r₂₃ e^(−2k₃d)),
//!
//! with k_m = √(ε_m(iζ) κ² + Q²). Attraction is positive.
//!
//! For each κ the inner integral is taken in y = 2k₃d, where
//! Q dQ = y dy / 4d² and the integrand becomes y²/(8d³) · K(y) with
//! K = rr e^(−y)/(1 − rr e^(−y)). The outer integral runs in ln κ from a
//! κ_min whose contribution is bounded below the tolerance to
//! κ_max = cutoff/2d; both neglected pieces are bounded using |r r| ≤ 1.

mod curve;

pub use curve::{delta_curve, force_curve, percent_difference, CurveRecord, ForceCurve, ValueKind};

use std::f64::consts::PI;

use crate::constants::{APERY, EV_PER_NM3_IN_PA, HBAR_C};
use crate::dielectric::DielectricModel;
use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_log, integrate_to_infinity, Estimate, QuadratureSpec, Tolerance,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarization {
    S,
    P,
}

impl Polarization {
    pub const BOTH: [Polarization; 2] = [Polarization::S, Polarization::P];
}

/// Slab 1 | gap | slab 2, with the gap width in nm.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerStack {
    pub eps1: DielectricModel,
    pub eps2: DielectricModel,
    pub eps3: DielectricModel,
    pub separation: f64,
}

impl LayerStack {
    pub fn new(
        eps1: DielectricModel,
        eps2: DielectricModel,
        eps3: DielectricModel,
        separation: f64,
    ) -> Result<Self> {
        let stack = Self {
            eps1,
            eps2,
            eps3,
            separation,
        };
        stack.validate()?;
        Ok(stack)
    }

    /// Two identical slabs across the given gap.
    pub fn symmetric(slab: DielectricModel, gap: DielectricModel, separation: f64) -> Result<Self> {
        Self::new(slab.clone(), slab, gap, separation)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.separation > 0.0 && self.separation.is_finite()) {
            return Err(Error::invalid("separation", self.separation, "must be > 0"));
        }
        self.eps1.validate()?;
        self.eps2.validate()?;
        self.eps3.validate()
    }

    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        let mut s = self.clone();
        s.separation = separation;
        s.validate()?;
        Ok(s)
    }

    pub fn describe(&self) -> String {
        format!(
            "{} | {} | {}",
            self.eps1.describe(),
            self.eps3.describe(),
            self.eps2.describe()
        )
    }
}

/// Normal wavevector component k = √(ε (ζ/ħc)² + Q²) in nm⁻¹.
pub fn kz(eps: f64, zeta: f64, q: f64) -> f64 {
    let kappa = zeta / HBAR_C;
    (eps * kappa * kappa + q * q).sqrt()
}

#[inline]
fn reflection(pol: Polarization, eps_i: f64, k_i: f64, eps_j: f64, k_j: f64) -> f64 {
    match pol {
        Polarization::S => (k_i - k_j) / (k_i + k_j),
        Polarization::P => (eps_j * k_i - eps_i * k_j) / (eps_j * k_i + eps_i * k_j),
    }
}

/// Imaginary-axis Fresnel coefficient of the i|j interface.
pub fn fresnel(pol: Polarization, eps_i: f64, eps_j: f64, zeta: f64, q: f64) -> f64 {
    reflection(pol, eps_i, kz(eps_i, zeta, q), eps_j, kz(eps_j, zeta, q))
}

/// r r e^(−y) / (1 − r r e^(−y)) without ever forming e^(+y).
#[inline]
fn round_trip(rr: f64, y: f64) -> f64 {
    let a = rr * (-y).exp();
    a / (1.0 - a)
}

/// Q k₃ r₁₃ r₂₃ e^(−2k₃d)/(1 − r₁₃ r₂₃ e^(−2k₃d)) for one polarization, nm⁻².
pub fn integrand(
    stack: &LayerStack,
    pol: Polarization,
    zeta: f64,
    q: f64,
    quad: &QuadratureSpec,
) -> Result<f64> {
    let e1 = stack.eps1.eval(zeta, quad)?;
    let e2 = stack.eps2.eval(zeta, quad)?;
    let e3 = stack.eps3.eval(zeta, quad)?;
    let k1 = kz(e1, zeta, q);
    let k2 = kz(e2, zeta, q);
    let k3 = kz(e3, zeta, q);
    let rr = reflection(pol, e1, k1, e3, k3) * reflection(pol, e2, k2, e3, k3);
    Ok(q * k3 * round_trip(rr, 2.0 * k3 * stack.separation))
}

/// Inner-integral kernel at fixed κ, in the variable y = 2k₃d.
struct Kernel {
    e1: f64,
    e2: f64,
    e3: f64,
    kappa_sq: f64,
    y0: f64,
    d: f64,
}

impl Kernel {
    fn new(e1: f64, e2: f64, e3: f64, kappa: f64, d: f64) -> Self {
        Self {
            e1,
            e2,
            e3,
            kappa_sq: kappa * kappa,
            y0: 2.0 * d * e3.sqrt() * kappa,
            d,
        }
    }

    /// k_m from k₃ at the same (κ, Q); exactly k₃ for an index-matched medium.
    fn normal_k(&self, eps: f64, k3: f64) -> f64 {
        if eps == self.e3 {
            k3
        } else {
            (k3 * k3 + (eps - self.e3) * self.kappa_sq).max(0.0).sqrt()
        }
    }

    /// Σ_ν y²/(8d³) K_ν(y).
    fn at(&self, y: f64) -> f64 {
        let two_d = 2.0 * self.d;
        let k3 = y / two_d;
        let k1 = self.normal_k(self.e1, k3);
        let k2 = self.normal_k(self.e2, k3);
        let weight = y * y / (8.0 * self.d.powi(3));
        Polarization::BOTH
            .iter()
            .map(|&pol| {
                let rr = reflection(pol, self.e1, k1, self.e3, k3)
                    * reflection(pol, self.e2, k2, self.e3, k3);
                weight * round_trip(rr, y)
            })
            .sum()
    }
}

/// Zero-temperature Lifshitz pressure in Pa.
pub fn force_per_area(stack: &LayerStack, quad: &QuadratureSpec) -> Result<f64> {
    force_estimate(stack, quad).map(|e| e.value)
}

/// [`force_per_area`] with its error bound (Pa) and integrand count.
pub fn force_estimate(stack: &LayerStack, quad: &QuadratureSpec) -> Result<Estimate> {
    quad.validate()?;
    stack.validate()?;
    let d = stack.separation;
    let nested = quad.nested();
    let prefactor = HBAR_C / (2.0 * PI * PI) * EV_PER_NM3_IN_PA;

    // Per-unit-κ bound on the inner integral (both polarizations, |rr| ≤ 1),
    // and the perfect-mirror value of the full double integral.
    let inner_bound = APERY / (2.0 * d.powi(3));
    let ideal = PI.powi(4) / (120.0 * d.powi(4));
    let abs_floor = quad.abs_tol / prefactor;

    let mut kappa_min = 1e-3 * quad.rel_tol * ideal / inner_bound;
    if abs_floor > 0.0 {
        kappa_min = kappa_min.min(abs_floor / inner_bound);
    }
    let kappa_min = kappa_min.max(f64::MIN_POSITIVE.sqrt());
    let kappa_max = quad.decay_cutoff / (2.0 * d);

    let inner_tol = Tolerance::new(
        nested.rel_tol,
        1e-4 * quad.rel_tol * ideal * 2.0 * d / quad.decay_cutoff,
        quad.max_evals,
    );
    let mut inner_evals = 0usize;
    let mut inner = |kappa: f64| -> Result<f64> {
        let zeta = kappa * HBAR_C;
        let kernel = Kernel::new(
            stack.eps1.eval(zeta, &nested)?,
            stack.eps2.eval(zeta, &nested)?,
            stack.eps3.eval(zeta, &nested)?,
            kappa,
            d,
        );
        let est = integrate_to_infinity(|y| Ok(kernel.at(y)), kernel.y0, inner_tol)?;
        inner_evals += est.evals;
        Ok(est.value)
    };

    let head = Estimate {
        value: kappa_min * inner(kappa_min)?,
        abs_err: kappa_min * inner_bound,
        evals: 0,
    };
    let body = integrate_log(
        &mut inner,
        kappa_min,
        kappa_max,
        Tolerance::new(quad.rel_tol, abs_floor, quad.max_evals),
    )?;
    let c = quad.decay_cutoff;
    let tail_bound = (c * c + 4.0 * c + 6.0) * (-c).exp() / (-(-c).exp_m1()) / (8.0 * d.powi(4));

    let total = head.merge(body);
    Ok(Estimate {
        value: total.value * prefactor,
        abs_err: (total.abs_err + tail_bound) * prefactor,
        evals: total.evals + inner_evals,
    })
}

/// Perfect-conductor Casimir pressure π²ħc/(240 d⁴) in Pa.
pub fn ideal_mirror_force(d: f64) -> Result<f64> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::invalid("separation", d, "must be > 0"));
    }
    Ok(PI * PI * HBAR_C / (240.0 * d.powi(4)) * EV_PER_NM3_IN_PA)
}
