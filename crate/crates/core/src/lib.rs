//! Lifshitz–van der Waals pressure between two metal slabs across a liquid
//! gap, with Drude parameters that depend on the liquid the metal touches.
//!
//! Units: frequencies and energies in eV, lengths in nm, pressures in Pa.
//!
//! ```
//! use lifshitz_core::{force_per_area, ideal_mirror_force, DielectricModel, LayerStack, QuadratureSpec};
//!
//! let mirrors = LayerStack::symmetric(DielectricModel::Constant(1e8), DielectricModel::Vacuum, 100.0)?;
//! let f = force_per_area(&mirrors, &QuadratureSpec::default())?;
//! assert!((f / ideal_mirror_force(100.0)? - 1.0).abs() < 5e-3);
//! # Ok::<(), lifshitz_core::Error>(())
//! ```

pub mod constants;
pub mod dielectric;
pub mod error;
pub mod lifshitz;
pub mod materials;
pub mod quadrature;

pub use constants::{PhysicalConstants, EV_PER_NM3_IN_PA, HBAR_C};
pub use dielectric::{
    bruggeman_mix, eval_model, ColeColeForm, ColeColeParams, DielectricModel, DrudeParams,
    Interpolation, NinhamParams, NinhamTerm, Tabulated,
};
pub use error::{Error, Result};
pub use lifshitz::{
    delta_curve, force_curve, force_estimate, force_per_area, ideal_mirror_force,
    percent_difference, CurveRecord, ForceCurve, LayerStack, Polarization, ValueKind,
};
pub use materials::{builtin_table1, MaterialDatabase, MaterialRecord};
pub use quadrature::{log_grid, Estimate, QuadratureSpec};
