//! Criterion benchmarks for `lifshitz-core`; see `benches/`.
//!
//! Shared fixtures live here so the bench targets stay short.

use lifshitz_core::materials::builtin_table1;
use lifshitz_core::{DielectricModel, LayerStack};

/// Au (dry row) | constant fluid | Au.
pub fn gold_in_constant_fluid(eps_fluid: f64, separation: f64) -> LayerStack {
    let au = DielectricModel::Drude(builtin_table1(1.0).expect("dry row"));
    LayerStack::symmetric(au, DielectricModel::Constant(eps_fluid), separation)
        .expect("valid stack")
}
