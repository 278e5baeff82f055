//! Drude parameters of Au films measured while immersed in media of refractive
//! index n (Chen & Lynch ellipsometry). n = 1 is the dry film.

use crate::dielectric::DrudeParams;
use crate::error::{Error, Result};

const fn row(
    ambient_index: f64,
    eps_inf: f64,
    omega_p_sq: f64,
    gamma0: f64,
    beta: f64,
) -> DrudeParams {
    DrudeParams {
        eps_inf,
        omega_p_sq,
        gamma0,
        beta,
        ambient_index,
    }
}

/// Rows in increasing ambient index.
pub const AU_DRUDE_ROWS: [DrudeParams; 5] = [
    row(1.00, 7.76, 71.53, 0.0041, 0.0123),
    row(1.33, 8.71, 79.97, 0.0049, 0.0153),
    row(1.42, 9.17, 82.52, 0.0062, 0.0055),
    row(1.51, 9.65, 85.60, 0.0066, 0.0059),
    row(1.60, 10.30, 88.33, 0.0097, 0.0072),
];

/// The Au row measured in a medium of index `ambient_index` (exact match).
pub fn builtin_table1(ambient_index: f64) -> Result<DrudeParams> {
    AU_DRUDE_ROWS
        .iter()
        .find(|r| r.ambient_index == ambient_index)
        .copied()
        .ok_or_else(|| Error::UnknownTableRow {
            index: ambient_index,
            valid: AU_DRUDE_ROWS
                .iter()
                .map(|r| format!("{}", r.ambient_index))
                .collect::<Vec<_>>()
                .join(", "),
        })
}

/// The dry (n = 1) row.
pub fn dry_gold() -> DrudeParams {
    AU_DRUDE_ROWS[0]
}
