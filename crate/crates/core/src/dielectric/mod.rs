//! Dielectric response on the imaginary frequency axis.
//!
//! Every model here is evaluated at ω = iζ, where causal permittivities are
//! real, at least one, and non-increasing in ζ. Frequencies are in eV.
//!
//! The Drude rotation keeps the core-polarization offset:
//! ε(iζ) = ε_∞ + (2/π) ∫₀^∞ ω ε″(ω)/(ω² + ζ²) dω. For constant damping this
//! reduces to ε_∞ + ω_p²/(ζ(ζ + γ₀)), which is what the tests check against.

mod bruggeman;
mod drude;
mod liquid;
mod tabulated;

pub use bruggeman::{bruggeman_mix, bruggeman_residual};
pub use drude::{
    drude_damping, drude_eps_imag, drude_eps_izeta, drude_eps_izeta_constant_damping, kk_rotate,
    kk_rotate_estimate, DrudeParams,
};
pub use liquid::{
    cole_cole_eps_izeta, ninham_eps_izeta, ColeColeForm, ColeColeParams, NinhamParams, NinhamTerm,
};
pub use tabulated::{Interpolation, Tabulated};

use crate::error::{Error, Result};
use crate::quadrature::QuadratureSpec;

#[derive(Debug, Clone, PartialEq)]
pub enum DielectricModel {
    Vacuum,
    Constant(f64),
    Drude(DrudeParams),
    Ninham(NinhamParams),
    ColeCole(ColeColeParams),
    Bruggeman {
        metal: Box<DielectricModel>,
        fluid: Box<DielectricModel>,
        metal_fraction: f64,
    },
    Tabulated(Tabulated),
}

impl DielectricModel {
    pub fn bruggeman(metal: DielectricModel, fluid: DielectricModel, metal_fraction: f64) -> Self {
        DielectricModel::Bruggeman {
            metal: Box::new(metal),
            fluid: Box::new(fluid),
            metal_fraction,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            DielectricModel::Vacuum => Ok(()),
            DielectricModel::Constant(v) => {
                if *v >= 1.0 && v.is_finite() {
                    Ok(())
                } else {
                    Err(Error::invalid("value", *v, "must be >= 1"))
                }
            }
            DielectricModel::Drude(p) => p.validate(),
            DielectricModel::Ninham(p) => p.validate(),
            DielectricModel::ColeCole(p) => p.validate(),
            DielectricModel::Bruggeman {
                metal,
                fluid,
                metal_fraction,
            } => {
                if !((0.0..=1.0).contains(metal_fraction)) {
                    return Err(Error::invalid(
                        "metal_fraction",
                        *metal_fraction,
                        "must lie in [0, 1]",
                    ));
                }
                metal.validate()?;
                fluid.validate()
            }
            // Construction already enforces the sample invariants.
            DielectricModel::Tabulated(_) => Ok(()),
        }
    }

    /// ε(iζ). Drude models need ζ > 0; the closed forms accept ζ = 0.
    pub fn eval(&self, zeta: f64, quad: &QuadratureSpec) -> Result<f64> {
        match self {
            DielectricModel::Vacuum => Ok(1.0),
            DielectricModel::Constant(v) => Ok(*v),
            DielectricModel::Drude(p) => drude_eps_izeta(p, zeta, quad),
            DielectricModel::Ninham(p) => ninham_eps_izeta(p, zeta),
            DielectricModel::ColeCole(p) => cole_cole_eps_izeta(p, zeta),
            DielectricModel::Bruggeman {
                metal,
                fluid,
                metal_fraction,
            } => bruggeman_mix(
                metal.eval(zeta, quad)?,
                fluid.eval(zeta, quad)?,
                *metal_fraction,
            ),
            DielectricModel::Tabulated(t) => t.eval(zeta),
        }
    }

    /// Short human-readable label.
    pub fn describe(&self) -> String {
        match self {
            DielectricModel::Vacuum => "vacuum".into(),
            DielectricModel::Constant(v) => format!("constant({v})"),
            DielectricModel::Drude(p) => format!("drude(n={})", p.ambient_index),
            DielectricModel::Ninham(p) => format!("ninham({} terms)", p.terms.len()),
            DielectricModel::ColeCole(_) => "cole-cole".into(),
            DielectricModel::Bruggeman {
                metal,
                fluid,
                metal_fraction,
            } => format!(
                "bruggeman({}, {}, f={metal_fraction})",
                metal.describe(),
                fluid.describe()
            ),
            DielectricModel::Tabulated(t) => format!("tabulated({} samples)", t.samples().len()),
        }
    }
}

/// Free-function form of [`DielectricModel::eval`].
pub fn eval_model(m: &DielectricModel, zeta: f64, quad: &QuadratureSpec) -> Result<f64> {
    m.eval(zeta, quad)
}
