use lifshitz_core::dielectric::{
    bruggeman_residual, drude_eps_izeta, drude_eps_izeta_constant_damping,
};
use lifshitz_core::lifshitz::fresnel;
use lifshitz_core::materials::{parse_material_file, serialize_material};
use lifshitz_core::{
    bruggeman_mix, builtin_table1, force_per_area, ideal_mirror_force, log_grid, DielectricModel,
    DrudeParams, LayerStack, MaterialDatabase, Polarization, QuadratureSpec,
};
use proptest::prelude::*;

fn constant(e: f64) -> DielectricModel {
    DielectricModel::Constant(e)
}

fn materials_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../materials")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn swapping_slabs_leaves_force_unchanged(
        e1 in 1.0f64..200.0,
        e2 in 1.0f64..200.0,
        e3 in 1.0f64..20.0,
        d in 10.0f64..1000.0,
    ) {
        let q = QuadratureSpec::default();
        let a = force_per_area(&LayerStack::new(constant(e1), constant(e2), constant(e3), d).unwrap(), &q).unwrap();
        let b = force_per_area(&LayerStack::new(constant(e2), constant(e1), constant(e3), d).unwrap(), &q).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300), "{a} vs {b}");
    }

    #[test]
    fn reflection_is_bounded(
        ei in 1.0f64..1e8,
        ej in 1.0f64..1e8,
        zeta in 1e-4f64..1e3,
        q in 0.0f64..1e3,
    ) {
        for pol in Polarization::BOTH {
            let r = fresnel(pol, ei, ej, zeta, q);
            prop_assert!(r.is_finite() && r.abs() < 1.0, "{pol:?}: {r}");
        }
    }

    #[test]
    fn repulsion_between_bracketing_media(
        e1 in 1.0f64..3.0,
        gap in 0.05f64..0.95,
        e2 in 4.0f64..50.0,
        d in 10.0f64..1000.0,
    ) {
        let e3 = e1 + gap * (e2 - e1);
        let f = force_per_area(
            &LayerStack::new(constant(e1), constant(e2), constant(e3), d).unwrap(),
            &QuadratureSpec::default(),
        ).unwrap();
        prop_assert!(f < 0.0, "{f}");
    }

    #[test]
    fn mirror_force_scales_as_inverse_fourth_power(d in 10.0f64..100.0) {
        let q = QuadratureSpec::default();
        let mirrors = |d| LayerStack::symmetric(constant(1e8), DielectricModel::Vacuum, d).unwrap();
        let near = force_per_area(&mirrors(d), &q).unwrap();
        let far = force_per_area(&mirrors(10.0 * d), &q).unwrap();
        prop_assert!((near / far / 1e4 - 1.0).abs() < 1e-2);
    }

    #[test]
    fn rotation_matches_closed_form(
        eps_inf in 1.0f64..12.0,
        omega_p_sq in 1.0f64..120.0,
        gamma0 in 1e-3f64..0.5,
        zeta in 1e-3f64..1e2,
    ) {
        let p = DrudeParams::new(eps_inf, omega_p_sq, gamma0, 0.0, 1.0).unwrap();
        let v = drude_eps_izeta(&p, zeta, &QuadratureSpec::default()).unwrap();
        let exact = drude_eps_izeta_constant_damping(&p, zeta);
        prop_assert!((v - exact).abs() / exact < 1e-6, "{v} vs {exact}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn tighter_quadrature_moves_force_less_than_tolerance(
        d in 10.0f64..1000.0,
        row in prop::sample::select(vec![1.0, 1.33, 1.42, 1.51, 1.60]),
        fluid in 1.0f64..2.6,
    ) {
        let q = QuadratureSpec::default();
        let stack = LayerStack::symmetric(
            DielectricModel::Drude(builtin_table1(row).unwrap()),
            constant(fluid),
            d,
        ).unwrap();
        let base = force_per_area(&stack, &q).unwrap();
        let doubled = force_per_area(&stack, &QuadratureSpec { max_evals: 2 * q.max_evals, ..q }).unwrap();
        let halved = force_per_area(&stack, &QuadratureSpec { rel_tol: 0.5 * q.rel_tol, ..q }).unwrap();
        prop_assert!((doubled - base).abs() / base < q.rel_tol);
        prop_assert!((halved - base).abs() / base < q.rel_tol);
    }

    #[test]
    fn halving_tolerance_moves_rotation_less_than_tolerance(
        row in prop::sample::select(vec![1.0, 1.33, 1.42, 1.51, 1.60]),
        zeta in 1e-3f64..1e2,
    ) {
        let p = builtin_table1(row).unwrap();
        let q = QuadratureSpec::default();
        let a = drude_eps_izeta(&p, zeta, &q).unwrap();
        let b = drude_eps_izeta(&p, zeta, &QuadratureSpec { rel_tol: 0.5 * q.rel_tol, ..q }).unwrap();
        prop_assert!((a - b).abs() / a < q.rel_tol);
    }
}

#[test]
fn bruggeman_residual_on_grid() {
    let eps = log_grid(1.0, 1e4, 25);
    for &em in &eps {
        for &ef in &eps {
            let mut last = ef;
            for k in 0..=10 {
                let f = k as f64 / 10.0;
                let mix = bruggeman_mix(em, ef, f).unwrap();
                let r = bruggeman_residual(mix, em, ef, f);
                assert!(r.abs() < 1e-12, "{em} {ef} {f}: {mix} {r}");
                assert!(
                    mix >= em.min(ef) && mix <= em.max(ef),
                    "{em} {ef} {f}: {mix}"
                );
                if em >= ef {
                    assert!(mix >= last);
                } else {
                    assert!(mix <= last);
                }
                last = mix;
            }
            assert_eq!(last, em);
        }
    }
}

#[test]
fn attraction_decreases_with_separation() {
    let q = QuadratureSpec::default();
    let stacks = [
        LayerStack::symmetric(constant(1e8), DielectricModel::Vacuum, 10.0).unwrap(),
        LayerStack::symmetric(
            DielectricModel::Drude(builtin_table1(1.0).unwrap()),
            DielectricModel::Vacuum,
            10.0,
        )
        .unwrap(),
        LayerStack::symmetric(
            DielectricModel::Drude(builtin_table1(1.42).unwrap()),
            constant(2.0164),
            10.0,
        )
        .unwrap(),
    ];
    for stack in stacks {
        let mut last = f64::INFINITY;
        for d in log_grid(10.0, 1000.0, 12) {
            let f = force_per_area(&stack.with_separation(d).unwrap(), &q).unwrap();
            assert!(f > 0.0 && f < last, "{} at {d}: {f}", stack.describe());
            last = f;
        }
    }
}

#[test]
fn mirrors_approach_ideal_limit_from_below() {
    let q = QuadratureSpec::default();
    let ideal = ideal_mirror_force(100.0).unwrap();
    let mut last = 0.0;
    for e in [1e2, 1e4, 1e6, 1e8] {
        let f = force_per_area(
            &LayerStack::symmetric(constant(e), DielectricModel::Vacuum, 100.0).unwrap(),
            &q,
        )
        .unwrap();
        assert!(f > last && f < ideal, "eps = {e}: {f}");
        last = f;
    }
}

#[test]
fn shipped_materials_parse_and_validate() {
    let db = MaterialDatabase::load_dir(&materials_dir()).unwrap();
    assert_eq!(db.names().collect::<Vec<_>>(), ["cbr3f", "ccl3f", "water"]);
    for name in db.names() {
        let record = db.get(name).unwrap();
        record.model.validate().unwrap();
        assert!(!record.source.trim().is_empty());
        let back = parse_material_file(&serialize_material(record).unwrap()).unwrap();
        assert_eq!(&back, record);
    }
}

#[test]
fn database_load_is_deterministic() {
    let a = MaterialDatabase::load_dir(&materials_dir())
        .unwrap()
        .serialize()
        .unwrap();
    let b = MaterialDatabase::load_dir(&materials_dir())
        .unwrap()
        .serialize()
        .unwrap();
    assert_eq!(a, b);
}

#[test]
fn low_frequency_ratio_tends_to_conductivity_ratio() {
    let q = QuadratureSpec::default();
    let dry = builtin_table1(1.0).unwrap();
    let zeta = 1e-7;
    let base = drude_eps_izeta(&dry, zeta, &q).unwrap();
    for n in [1.33, 1.42, 1.51, 1.60] {
        let p = builtin_table1(n).unwrap();
        let ratio = drude_eps_izeta(&p, zeta, &q).unwrap() / base;
        let limit = (p.omega_p_sq / p.gamma0) / (dry.omega_p_sq / dry.gamma0);
        assert!(limit < 1.0);
        assert!(
            (ratio / limit - 1.0).abs() < 1e-3,
            "n = {n}: {ratio} vs {limit}"
        );
    }
}
