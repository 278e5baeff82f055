//! Physical constants in the eV / nm unit system used throughout the crate.
//!
//! Frequencies and energies are both expressed in eV (ħ = 1), lengths in nm.

/// ħc in eV·nm.
pub const HBAR_C: f64 = 197.326_980_4;

/// Pascals per eV/nm³.
pub const EV_PER_NM3_IN_PA: f64 = 1.602_176_634e8;

/// Apéry's constant ζ(3), used in integrand bounds.
pub(crate) const APERY: f64 = 1.202_056_903_159_594_3;

/// Named bundle of the constants entering the pressure prefactor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar_c: f64,
    pub pressure_conversion: f64,
}

impl PhysicalConstants {
    pub const CODATA: Self = Self {
        hbar_c: HBAR_C,
        pressure_conversion: EV_PER_NM3_IN_PA,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA
    }
}
