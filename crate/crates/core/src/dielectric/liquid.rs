//! Closed-form imaginary-axis permittivities for the gap liquids.

use crate::error::{Error, Result};

/// One Lorentz-type oscillator of a Ninham–Parsegian representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NinhamTerm {
    /// Dimensionless strength Cᵢ.
    pub strength: f64,
    /// Resonance frequency ωᵢ in eV.
    pub frequency: f64,
    /// Damping gᵢ in eV.
    pub damping: f64,
}

/// ε(iζ) = 1 + B/(1 + ζτ) + Σᵢ Cᵢ / (1 + (ζ/ωᵢ)² + gᵢζ/ωᵢ²).
#[derive(Debug, Clone, PartialEq)]
pub struct NinhamParams {
    /// Microwave (Debye) relaxation strength B.
    pub relaxation_strength: f64,
    /// Debye relaxation time τ in eV⁻¹.
    pub tau: f64,
    pub terms: Vec<NinhamTerm>,
}

impl NinhamParams {
    pub fn new(relaxation_strength: f64, tau: f64, terms: Vec<NinhamTerm>) -> Result<Self> {
        let p = Self {
            relaxation_strength,
            tau,
            terms,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.relaxation_strength >= 0.0 && self.relaxation_strength.is_finite()) {
            return Err(Error::invalid(
                "B",
                self.relaxation_strength,
                "must be >= 0",
            ));
        }
        if !(self.tau > 0.0 && self.tau.is_finite()) {
            return Err(Error::invalid("tau", self.tau, "must be > 0"));
        }
        for t in &self.terms {
            if !(t.strength >= 0.0 && t.strength.is_finite()) {
                return Err(Error::invalid("term.C", t.strength, "must be >= 0"));
            }
            if !(t.frequency > 0.0 && t.frequency.is_finite()) {
                return Err(Error::invalid("term.omega", t.frequency, "must be > 0"));
            }
            if !(t.damping >= 0.0 && t.damping.is_finite()) {
                return Err(Error::invalid("term.g", t.damping, "must be >= 0"));
            }
        }
        Ok(())
    }
}

pub fn ninham_eps_izeta(p: &NinhamParams, zeta: f64) -> Result<f64> {
    if !(zeta >= 0.0) {
        return Err(Error::Domain(format!("need zeta >= 0, got {zeta}")));
    }
    let oscillators: f64 = p
        .terms
        .iter()
        .map(|t| {
            let w2 = t.frequency * t.frequency;
            t.strength / (1.0 + zeta * zeta / w2 + t.damping * zeta / w2)
        })
        .sum();
    Ok(1.0 + p.relaxation_strength / (1.0 + zeta * p.tau) + oscillators)
}

/// Which limit the static permittivity controls in the Cole–Cole formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColeColeForm {
    /// ε(i·0) = ε_static, ε(i∞) = ε_high.
    #[default]
    Standard,
    /// Roles exchanged: ε_static + (ε_high − ε_static)/(1 + (ζτ)^(1−α)), so
    /// ε(i·0) = ε_high. Not monotone decreasing when ε_static > ε_high.
    Literal,
}

/// Single-relaxation Cole–Cole liquid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColeColeParams {
    pub eps_static: f64,
    pub eps_high: f64,
    /// Relaxation time τ in eV⁻¹.
    pub tau: f64,
    /// Distribution parameter α ∈ [0, 1).
    pub alpha: f64,
    pub form: ColeColeForm,
}

impl ColeColeParams {
    pub fn new(eps_static: f64, eps_high: f64, tau: f64, alpha: f64) -> Result<Self> {
        let p = Self {
            eps_static,
            eps_high,
            tau,
            alpha,
            form: ColeColeForm::Standard,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_form(self, form: ColeColeForm) -> Self {
        Self { form, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps_high >= 1.0 && self.eps_high.is_finite()) {
            return Err(Error::invalid("eps_high", self.eps_high, "must be >= 1"));
        }
        if !(self.eps_static >= self.eps_high && self.eps_static.is_finite()) {
            return Err(Error::invalid(
                "eps_static",
                self.eps_static,
                "must be >= eps_high",
            ));
        }
        if !(self.tau > 0.0 && self.tau.is_finite()) {
            return Err(Error::invalid("tau", self.tau, "must be > 0"));
        }
        if !((0.0..1.0).contains(&self.alpha)) {
            return Err(Error::invalid("alpha", self.alpha, "must lie in [0, 1)"));
        }
        Ok(())
    }
}

pub fn cole_cole_eps_izeta(p: &ColeColeParams, zeta: f64) -> Result<f64> {
    if !(zeta >= 0.0) {
        return Err(Error::Domain(format!("need zeta >= 0, got {zeta}")));
    }
    let denom = 1.0 + (zeta * p.tau).powf(1.0 - p.alpha);
    Ok(match p.form {
        ColeColeForm::Standard => p.eps_high + (p.eps_static - p.eps_high) / denom,
        ColeColeForm::Literal => p.eps_static + (p.eps_high - p.eps_static) / denom,
    })
}
