//! Bruggeman effective-medium mixing of a metal and a liquid.

use crate::error::{Error, Result};

/// Effective permittivity ⟨ε⟩ solving
/// f_M (ε_M − ⟨ε⟩)/(ε_M + 2⟨ε⟩) + f_F (ε_F − ⟨ε⟩)/(ε_F + 2⟨ε⟩) = 0
/// with f_F = 1 − f_M.
///
/// Clearing denominators gives 2⟨ε⟩² + b⟨ε⟩ − ε_M ε_F = 0 with
/// b = ε_M(1 − 3f_M) + ε_F(3f_M − 2). The constant term is negative, so exactly
/// one root is positive; it is computed in the cancellation-free form.
pub fn bruggeman_mix(eps_metal: f64, eps_fluid: f64, f_metal: f64) -> Result<f64> {
    if !(eps_metal > 0.0 && eps_metal.is_finite()) {
        return Err(Error::Domain(format!(
            "metal permittivity must be positive, got {eps_metal}"
        )));
    }
    if !(eps_fluid > 0.0 && eps_fluid.is_finite()) {
        return Err(Error::Domain(format!(
            "fluid permittivity must be positive, got {eps_fluid}"
        )));
    }
    if !((0.0..=1.0).contains(&f_metal)) {
        return Err(Error::invalid("f_metal", f_metal, "must lie in [0, 1]"));
    }
    if f_metal == 1.0 {
        return Ok(eps_metal);
    }
    if f_metal == 0.0 || eps_metal == eps_fluid {
        return Ok(eps_fluid);
    }
    let b = eps_metal * (1.0 - 3.0 * f_metal) + eps_fluid * (3.0 * f_metal - 2.0);
    let product = eps_metal * eps_fluid;
    let root = (b * b + 8.0 * product).sqrt();
    let mix = if b >= 0.0 {
        2.0 * product / (b + root)
    } else {
        (root - b) / 4.0
    };
    Ok(mix.clamp(eps_metal.min(eps_fluid), eps_metal.max(eps_fluid)))
}

/// Left-hand side of the Bruggeman condition at a trial ⟨ε⟩.
pub fn bruggeman_residual(eps_eff: f64, eps_metal: f64, eps_fluid: f64, f_metal: f64) -> f64 {
    f_metal * (eps_metal - eps_eff) / (eps_metal + 2.0 * eps_eff)
        + (1.0 - f_metal) * (eps_fluid - eps_eff) / (eps_fluid + 2.0 * eps_eff)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent route: bisection on the residual, which is strictly
    // decreasing in ⟨ε⟩ between min(ε) and max(ε).
    fn bisect(em: f64, ef: f64, f: f64) -> f64 {
        let (mut lo, mut hi) = (em.min(ef), em.max(ef));
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if bruggeman_residual(mid, em, ef, f) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn hand_solved_quadratic() {
        let v = bruggeman_mix(1.0, 4.0, 0.5).unwrap();
        let exact = (5.0 + 153f64.sqrt()) / 8.0;
        assert!((v - exact).abs() < 1e-15);
        assert!((v - 2.171_16).abs() < 1e-5);
        assert!((v - bisect(1.0, 4.0, 0.5)).abs() < 1e-13);
    }

    #[test]
    fn single_phase_and_homogeneous() {
        assert_eq!(bruggeman_mix(7.0, 2.0, 1.0).unwrap(), 7.0);
        assert_eq!(bruggeman_mix(7.0, 2.0, 0.0).unwrap(), 2.0);
        for f in [0.0, 0.3, 0.5, 0.9, 1.0] {
            assert!((bruggeman_mix(3.3, 3.3, f).unwrap() - 3.3).abs() < 1e-14);
        }
    }

    #[test]
    fn symmetric_in_phase_labels() {
        let a = bruggeman_mix(4.0, 1.0, 0.5).unwrap();
        let b = bruggeman_mix(1.0, 4.0, 0.5).unwrap();
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn matches_bisection_across_contrast() {
        for &(em, ef) in &[(1e4, 1.0), (50.0, 1.77), (1.0, 1e4), (2.0, 2.5)] {
            for i in 0..=10 {
                let f = i as f64 / 10.0;
                let v = bruggeman_mix(em, ef, f).unwrap();
                let w = bisect(em, ef, f);
                assert!((v - w).abs() <= 1e-12 * w, "{em} {ef} {f}: {v} vs {w}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bruggeman_mix(0.0, 1.0, 0.5).is_err());
        assert!(bruggeman_mix(1.0, -2.0, 0.5).is_err());
        assert!(bruggeman_mix(1.0, 2.0, 1.5).is_err());
    }
}
