//! Brute-force reference evaluations shared by the integration suites.
//!
//! Nothing here calls into the adaptive quadrature or the library's Fresnel
//! and Kramers–Kronig code: every integral is a fixed-grid trapezoid on a
//! mapped variable.

#![allow(dead_code)]

use std::f64::consts::PI;

pub const HBAR_C: f64 = 197.326_980_4;
pub const PA_PER_EV_NM3: f64 = 1.602_176_634e8;

#[derive(Clone, Copy)]
pub struct Drude {
    pub eps_inf: f64,
    pub omega_p_sq: f64,
    pub gamma0: f64,
    pub beta: f64,
}

pub const AU_DRY: Drude = Drude {
    eps_inf: 7.76,
    omega_p_sq: 71.53,
    gamma0: 0.0041,
    beta: 0.0123,
};
pub const AU_WATER: Drude = Drude {
    eps_inf: 8.71,
    omega_p_sq: 79.97,
    gamma0: 0.0049,
    beta: 0.0153,
};

fn trapezoid(values: &[f64], step: f64) -> f64 {
    let n = values.len();
    step * (values[1..n - 1].iter().sum::<f64>() + 0.5 * (values[0] + values[n - 1]))
}

/// ε(iζ) by a trapezoid in ln ω over [1e-14, 1e10] eV.
pub fn drude_rotated(p: &Drude, zeta: f64, points: usize) -> f64 {
    let (lo, hi) = (1e-14f64.ln(), 1e10f64.ln());
    let h = (hi - lo) / (points - 1) as f64;
    let vals: Vec<f64> = (0..points)
        .map(|i| {
            let w = (lo + h * i as f64).exp();
            let g = p.gamma0 + p.beta * w * w;
            let loss = p.omega_p_sq * g / (w * (w * w + g * g));
            w * w * loss / (w * w + zeta * zeta)
        })
        .collect();
    p.eps_inf + 2.0 / PI * trapezoid(&vals, h)
}

/// Parsegian–Ninham form with (C, ω, g) triples.
pub fn ninham(b: f64, tau: f64, terms: &[(f64, f64, f64)], zeta: f64) -> f64 {
    1.0 + b / (1.0 + zeta * tau)
        + terms
            .iter()
            .map(|&(c, w, g)| c / (1.0 + (zeta / w).powi(2) + g * zeta / (w * w)))
            .sum::<f64>()
}

/// Symmetric metal | fluid | metal pressure in Pa on an n×n trapezoid grid:
/// outer variable ln κ, inner variable t = 2k₃d − 2d√ε₃κ ∈ [0, 50].
pub fn pressure(metal: &dyn Fn(f64) -> f64, fluid: &dyn Fn(f64) -> f64, d: f64, n: usize) -> f64 {
    let (lo, hi) = ((1e-9 / d).ln(), (60.0 / d).ln());
    let hk = (hi - lo) / (n - 1) as f64;
    let ht = 50.0 / (n - 1) as f64;
    let outer: Vec<f64> = (0..n)
        .map(|i| {
            let kappa = (lo + hk * i as f64).exp();
            let zeta = kappa * HBAR_C;
            let em = metal(zeta);
            let ef = fluid(zeta);
            let y0 = 2.0 * d * ef.sqrt() * kappa;
            let inner: Vec<f64> = (0..n)
                .map(|j| {
                    let y = y0 + ht * j as f64;
                    let k3 = y / (2.0 * d);
                    let q2 = (k3 * k3 - ef * kappa * kappa).max(0.0);
                    let km = (em * kappa * kappa + q2).sqrt();
                    let rs = (km - k3) / (km + k3);
                    let rp = (ef * km - em * k3) / (ef * km + em * k3);
                    let e = (-y).exp();
                    let k = |r: f64| r * r * e / (1.0 - r * r * e);
                    y * y / (8.0 * d * d * d) * (k(rs) + k(rp))
                })
                .collect();
            kappa * trapezoid(&inner, ht)
        })
        .collect();
    HBAR_C / (2.0 * PI * PI) * trapezoid(&outer, hk) * PA_PER_EV_NM3
}
