mod common;

use common::{drude_rotated, ninham, pressure, AU_DRY, AU_WATER};
use lifshitz_core::dielectric::drude_eps_izeta;
use lifshitz_core::{
    builtin_table1, force_per_area, DielectricModel, LayerStack, MaterialDatabase, QuadratureSpec,
};

// Recorded from the reference evaluations in `common` before the adaptive
// code existed.
const ROW1_AT_1EV: f64 = 79.859_752_986_27;
const WATER_GAP: [(f64, f64); 3] = [
    (10.0, 3.076_569_103_761e4),
    (50.0, 6.097_268_873_372e1),
    (100.0, 4.958_981_587_823e0),
];

fn water() -> DielectricModel {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../materials");
    MaterialDatabase::load_dir(&dir)
        .unwrap()
        .get("water")
        .unwrap()
        .model
        .clone()
}

#[test]
fn reference_rotation_reproduces_frozen_value() {
    let v = drude_rotated(&AU_DRY, 1.0, 20_000);
    assert!((v - ROW1_AT_1EV).abs() < 1e-10 * ROW1_AT_1EV, "{v}");
}

#[test]
fn rotation_matches_frozen_value() {
    let p = builtin_table1(1.0).unwrap();
    let v = drude_eps_izeta(&p, 1.0, &QuadratureSpec::default()).unwrap();
    assert!((v - ROW1_AT_1EV).abs() / ROW1_AT_1EV < 1e-6, "{v}");
    let tight = QuadratureSpec {
        rel_tol: 1e-9,
        max_evals: 500_000,
        ..Default::default()
    };
    let v = drude_eps_izeta(&p, 1.0, &tight).unwrap();
    assert!((v - ROW1_AT_1EV).abs() / ROW1_AT_1EV < 1e-11, "{v}");
}

#[test]
fn reference_pressure_reproduces_frozen_values() {
    let DielectricModel::Ninham(w) = water() else {
        panic!("water is not a Ninham model");
    };
    let terms: Vec<_> = w
        .terms
        .iter()
        .map(|t| (t.strength, t.frequency, t.damping))
        .collect();
    let metal = |z: f64| drude_rotated(&AU_WATER, z, 20_000);
    let fluid = |z: f64| ninham(w.relaxation_strength, w.tau, &terms, z);
    for (d, frozen) in WATER_GAP {
        let v = pressure(&metal, &fluid, d, 2000);
        assert!((v - frozen).abs() < 1e-9 * frozen, "d = {d}: {v}");
    }
}

#[test]
fn pressure_matches_frozen_values() {
    let au = DielectricModel::Drude(builtin_table1(1.33).unwrap());
    for (d, frozen) in WATER_GAP {
        let stack = LayerStack::symmetric(au.clone(), water(), d).unwrap();
        let v = force_per_area(&stack, &QuadratureSpec::default()).unwrap();
        assert!(v > 0.0);
        assert!(
            (v - frozen).abs() / frozen < 1e-4,
            "d = {d}: {v} vs {frozen}"
        );
    }
}
