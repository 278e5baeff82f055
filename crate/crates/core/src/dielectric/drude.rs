//! Drude metal with frequency-dependent damping and its rotation onto the
//! imaginary frequency axis.

use std::f64::consts::FRAC_2_PI;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_log, Estimate, QuadratureSpec, Tolerance};

/// Drude parameters of a metal as measured in a given ambient medium.
///
/// Frequencies in eV, `omega_p_sq` in eV², `beta` in eV⁻¹.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrudeParams {
    /// Core-polarization background ε_∞.
    pub eps_inf: f64,
    /// Squared plasma frequency ω_p².
    pub omega_p_sq: f64,
    /// Zero-frequency damping γ₀.
    pub gamma0: f64,
    /// Curvature of the damping, γ(ω) = γ₀ + βω².
    pub beta: f64,
    /// Refractive index of the medium the parameters were measured in.
    pub ambient_index: f64,
}

impl DrudeParams {
    pub fn new(
        eps_inf: f64,
        omega_p_sq: f64,
        gamma0: f64,
        beta: f64,
        ambient_index: f64,
    ) -> Result<Self> {
        let p = Self {
            eps_inf,
            omega_p_sq,
            gamma0,
            beta,
            ambient_index,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps_inf >= 1.0 && self.eps_inf.is_finite()) {
            return Err(Error::invalid("eps_inf", self.eps_inf, "must be >= 1"));
        }
        if !(self.omega_p_sq > 0.0 && self.omega_p_sq.is_finite()) {
            return Err(Error::invalid("omega_p_sq", self.omega_p_sq, "must be > 0"));
        }
        if !(self.gamma0 > 0.0 && self.gamma0.is_finite()) {
            return Err(Error::invalid("gamma0", self.gamma0, "must be > 0"));
        }
        if !(self.beta >= 0.0 && self.beta.is_finite()) {
            return Err(Error::invalid("beta", self.beta, "must be >= 0"));
        }
        if !(self.ambient_index >= 1.0 && self.ambient_index.is_finite()) {
            return Err(Error::invalid(
                "ambient_index",
                self.ambient_index,
                "must be >= 1",
            ));
        }
        Ok(())
    }

    /// Plasma frequency ω_p in eV.
    pub fn plasma_frequency(&self) -> f64 {
        self.omega_p_sq.sqrt()
    }
}

/// γ(ω) = γ₀ + βω².
pub fn drude_damping(p: &DrudeParams, omega: f64) -> f64 {
    p.gamma0 + p.beta * omega * omega
}

/// Imaginary part of the real-frequency Drude permittivity,
/// ε″(ω) = ω_p² γ(ω) / (ω (ω² + γ(ω)²)).
pub fn drude_eps_imag(p: &DrudeParams, omega: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Domain(format!(
            "Drude loss is singular at omega = {omega}; need omega > 0"
        )));
    }
    let gamma = drude_damping(p, omega);
    Ok(p.omega_p_sq * gamma / (omega * (omega * omega + gamma * gamma)))
}

/// Rotate a causal permittivity onto the imaginary axis:
/// ε(iζ) = ε_∞ + (2/π) ∫₀^∞ ω ε″(ω) / (ω² + ζ²) dω.
///
/// The half-line is cut at ζ and at every positive entry of `scales` (the
/// frequencies where `eps_imag` changes character). The innermost piece is
/// integrated directly, the middle pieces in ln ω, and the unbounded piece
/// in u = 1/ω.
pub fn kk_rotate<F>(
    eps_imag: F,
    eps_inf: f64,
    zeta: f64,
    scales: &[f64],
    quad: &QuadratureSpec,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    kk_rotate_estimate(eps_imag, eps_inf, zeta, scales, quad).map(|e| e.value)
}

/// As [`kk_rotate`], also returning the quadrature error and cost.
pub fn kk_rotate_estimate<F>(
    eps_imag: F,
    eps_inf: f64,
    zeta: f64,
    scales: &[f64],
    quad: &QuadratureSpec,
) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    if !(zeta > 0.0 && zeta.is_finite()) {
        return Err(Error::Domain(format!(
            "Kramers-Kronig rotation needs zeta > 0, got {zeta}"
        )));
    }
    let z2 = zeta * zeta;
    let integrand = |w: f64| Ok(w * eps_imag(w) / (w * w + z2));

    let mut cuts: Vec<f64> = scales
        .iter()
        .copied()
        .filter(|s| *s > 0.0 && s.is_finite())
        .chain(std::iter::once(zeta))
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());

    let tol = Tolerance::new(quad.rel_tol, 0.0, quad.max_evals);
    let lowest = cuts[0];
    let highest = cuts[cuts.len() - 1];

    let mut total = integrate(integrand, 0.0, lowest, tol)?;
    for pair in cuts.windows(2) {
        total = total.merge(integrate_log(integrand, pair[0], pair[1], tol)?);
    }
    let tail = integrate(
        |u: f64| {
            let w = 1.0 / u;
            Ok(integrand(w)? * w * w)
        },
        0.0,
        1.0 / highest,
        tol,
    )?;
    total = total.merge(tail);

    Ok(Estimate {
        value: eps_inf + FRAC_2_PI * total.value,
        abs_err: FRAC_2_PI * total.abs_err,
        evals: total.evals,
    })
}

/// ε(iζ) of a Drude metal by numerical Kramers–Kronig rotation.
pub fn drude_eps_izeta(p: &DrudeParams, zeta: f64, quad: &QuadratureSpec) -> Result<f64> {
    let mut scales = vec![p.gamma0];
    if p.beta > 0.0 {
        scales.push(1.0 / p.beta);
    }
    let params = *p;
    kk_rotate(
        move |w| {
            let gamma = drude_damping(&params, w);
            params.omega_p_sq * gamma / (w * (w * w + gamma * gamma))
        },
        p.eps_inf,
        zeta,
        &scales,
        quad,
    )
}

/// Closed-form rotation for constant damping (β = 0):
/// ε(iζ) = ε_∞ + ω_p² / (ζ (ζ + γ₀)).
pub fn drude_eps_izeta_constant_damping(p: &DrudeParams, zeta: f64) -> f64 {
    p.eps_inf + p.omega_p_sq / (zeta * (zeta + p.gamma0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row_dry() -> DrudeParams {
        DrudeParams::new(7.76, 71.53, 0.0041, 0.0123, 1.0).unwrap()
    }

    fn simple() -> DrudeParams {
        DrudeParams::new(1.0, 1.0, 0.1, 0.0, 1.0).unwrap()
    }

    #[test]
    fn damping_values() {
        let p = row_dry();
        assert_eq!(drude_damping(&p, 0.0), 0.0041);
        assert!((drude_damping(&p, 1.0) - 0.0164).abs() < 1e-15);
        let q = DrudeParams::new(10.30, 88.33, 0.0097, 0.0072, 1.60).unwrap();
        assert!((drude_damping(&q, 2.0) - 0.0385).abs() < 1e-15);
    }

    #[test]
    fn loss_values() {
        let p = simple();
        let v = drude_eps_imag(&p, 1.0).unwrap();
        assert!((v - 0.1 / 1.01).abs() < 1e-15);
        let far = drude_eps_imag(&p, 100.0).unwrap();
        assert!((far - 0.1 / (100.0 * (1e4 + 0.01))).abs() < 1e-22);
        assert!((far - 1.0e-7).abs() / 1.0e-7 < 1e-5);
        assert!(drude_eps_imag(&p, 0.0).is_err());
    }

    #[test]
    fn vanishing_oscillator_strength() {
        let p = DrudeParams {
            omega_p_sq: 0.0,
            ..simple()
        };
        assert_eq!(drude_eps_imag(&p, 3.0).unwrap(), 0.0);
        let e = kk_rotate(
            |w| drude_eps_imag(&p, w).unwrap(),
            2.5,
            1.0,
            &[0.1],
            &QuadratureSpec::default(),
        )
        .unwrap();
        assert_eq!(e, 2.5);
    }

    #[test]
    fn rotation_matches_contour_integral() {
        let p = simple();
        let v = drude_eps_izeta(&p, 1.0, &QuadratureSpec::default()).unwrap();
        let exact = 1.0 + 1.0 / 1.1;
        assert!((v - exact).abs() / exact < 1e-9, "{v} vs {exact}");
    }

    #[test]
    fn high_frequency_limit() {
        let v = drude_eps_izeta(&simple(), 1e4, &QuadratureSpec::default()).unwrap();
        assert!((v - 1.0).abs() < 1e-6);
        // With βω² damping the residual at 10⁴ eV is ≈ 1.42e-6 (log-grid
        // trapezoid over 18 decades).
        let p = row_dry();
        let v = drude_eps_izeta(&p, 1e4, &QuadratureSpec::default()).unwrap();
        assert!(
            (v - p.eps_inf - 1.4247e-6).abs() < 1e-9,
            "{}",
            v - p.eps_inf
        );
    }

    #[test]
    fn rotation_rejects_nonpositive_zeta() {
        assert!(drude_eps_izeta(&simple(), 0.0, &QuadratureSpec::default()).is_err());
        assert!(drude_eps_izeta(&simple(), -1.0, &QuadratureSpec::default()).is_err());
    }

    #[test]
    fn rotation_is_decreasing_in_zeta() {
        let p = row_dry();
        let q = QuadratureSpec::default();
        let grid = crate::quadrature::log_grid(1e-4, 1e4, 60);
        let vals: Vec<f64> = grid
            .iter()
            .map(|&z| drude_eps_izeta(&p, z, &q).unwrap())
            .collect();
        assert!(vals.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn validation_names_fields() {
        let err = DrudeParams::new(0.5, 1.0, 0.1, 0.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("eps_inf"));
        let err = DrudeParams::new(1.0, 1.0, 0.1, -0.1, 1.0).unwrap_err();
        assert!(err.to_string().contains("beta"));
        let err = DrudeParams::new(1.0, 1.0, 0.0, 0.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("gamma0"));
        let err = DrudeParams::new(1.0, 1.0, 0.1, 0.0, 0.9).unwrap_err();
        assert!(err.to_string().contains("ambient_index"));
    }
}
