//! Globally adaptive Gauss–Kronrod quadrature on finite and semi-infinite
//! intervals.
//!
//! Only open rules are used: no integrand is ever evaluated at an interval
//! endpoint, which lets callers integrate functions with removable or
//! integrable endpoint singularities (ω = 0 in the Kramers–Kronig rotation,
//! Q = 0 and κ = 0 in the Lifshitz integral).

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Tolerances and budgets shared by every integral in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Relative tolerance on each reported integral.
    pub rel_tol: f64,
    /// Absolute floor on the pressure integral, in Pa.
    pub abs_tol: f64,
    /// Integrand evaluations allowed per integral.
    pub max_evals: usize,
    /// Value of the exponent 2k₃d beyond which the outer frequency integral is
    /// truncated (κ_max = cutoff / 2d). The remainder is bounded analytically.
    pub decay_cutoff: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-6,
            abs_tol: 1e-12,
            max_evals: 50_000,
            decay_cutoff: 100.0,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::invalid(
                "rel_tol",
                self.rel_tol,
                "must lie in (0, 1)",
            ));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::invalid(
                "abs_tol",
                self.abs_tol,
                "must be non-negative",
            ));
        }
        if self.max_evals < KRONROD_POINTS {
            return Err(Error::invalid(
                "max_evals",
                self.max_evals as f64,
                "smaller than one 15-point rule",
            ));
        }
        if !(self.decay_cutoff >= 20.0 && self.decay_cutoff.is_finite()) {
            return Err(Error::invalid(
                "decay_cutoff",
                self.decay_cutoff,
                "must be at least 20",
            ));
        }
        Ok(())
    }

    /// Spec for an integral nested inside another: a hundred times tighter so
    /// that inner noise stays well below the outer error estimate.
    pub fn nested(&self) -> Self {
        Self {
            rel_tol: (self.rel_tol * 1e-2).max(1e-13),
            ..*self
        }
    }

    /// Stable 64-bit fingerprint of the spec, recorded alongside curves.
    pub fn fingerprint(&self) -> u64 {
        // FNV-1a over the bit patterns; stable across platforms and releases.
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        let words = [
            self.rel_tol.to_bits(),
            self.abs_tol.to_bits(),
            self.max_evals as u64,
            self.decay_cutoff.to_bits(),
        ];
        for word in words {
            for byte in word.to_le_bytes() {
                hash ^= u64::from(byte);
                hash = hash.wrapping_mul(0x0100_0000_01b3);
            }
        }
        hash
    }
}

/// Stopping rule for a single call into the integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    pub max_evals: usize,
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64, max_evals: usize) -> Self {
        Self {
            rel,
            abs,
            max_evals,
        }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

/// Result of an integration with its error estimate and cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub abs_err: f64,
    pub evals: usize,
}

impl Estimate {
    pub fn zero() -> Self {
        Self {
            value: 0.0,
            abs_err: 0.0,
            evals: 0,
        }
    }

    /// Combine estimates of disjoint pieces.
    pub fn merge(self, other: Estimate) -> Estimate {
        Estimate {
            value: self.value + other.value,
            abs_err: self.abs_err + other.abs_err,
            evals: self.evals + other.evals,
        }
    }

    pub fn scale(self, factor: f64) -> Estimate {
        Estimate {
            value: self.value * factor,
            abs_err: self.abs_err * factor.abs(),
            evals: self.evals,
        }
    }
}

const KRONROD_POINTS: usize = 15;

// 15-point Kronrod abscissae (positive half, descending) and weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Embedded 7-point Gauss weights, paired with XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn check(x: f64, y: f64) -> Result<f64> {
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite(x))
    }
}

/// One 15-point Gauss–Kronrod panel with the QUADPACK error heuristic.
fn kronrod_panel<F>(f: &mut F, a: f64, b: f64) -> Result<Segment>
where
    F: FnMut(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = check(center, f(center)?)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = kronrod.abs();
    let mut fvals = [(0.0, 0.0); 7];
    for (j, &x) in XGK[..7].iter().enumerate() {
        let dx = half * x;
        let (xl, xr) = (center - dx, center + dx);
        let fl = check(xl, f(xl)?)?;
        let fr = check(xr, f(xr)?)?;
        fvals[j] = (fl, fr);
        kronrod += WGK[j] * (fl + fr);
        abs_sum += WGK[j] * (fl.abs() + fr.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (fl + fr);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for (j, &(fl, fr)) in fvals.iter().enumerate() {
        asc += WGK[j] * ((fl - mean).abs() + (fr - mean).abs());
    }
    let value = kronrod * half;
    let resasc = asc * half.abs();
    let resabs = abs_sum * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Segment { a, b, value, err })
}

/// Integrate `f` over the finite interval `[a, b]`.
pub fn integrate<F>(mut f: F, a: f64, b: f64, tol: Tolerance) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a == b {
        return Ok(Estimate::zero());
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!(
            "finite interval required, got [{a}, {b}]"
        )));
    }
    if b < a {
        return integrate(f, b, a, tol).map(|e| e.scale(-1.0));
    }

    let first = kronrod_panel(&mut f, a, b)?;
    let mut evals = KRONROD_POINTS;
    let mut total = first.value;
    let mut total_err = first.err;
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Segment> = Vec::new();
    heap.push(first);

    while total_err > tol.target(total) {
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        // Stop splitting segments that have shrunk to the rounding scale.
        if !(worst.a < mid && mid < worst.b)
            || (worst.b - worst.a) <= 1e3 * f64::EPSILON * worst.a.abs().max(worst.b.abs())
        {
            frozen.push(worst);
            continue;
        }
        if evals + 2 * KRONROD_POINTS > tol.max_evals {
            heap.push(worst);
            let all: Vec<Segment> = heap.into_iter().chain(frozen).collect();
            let (value, abs_err) = sum_segments(all);
            return Err(Error::NotConverged {
                what: "adaptive quadrature",
                value,
                abs_err,
                evals,
            });
        }
        let left = kronrod_panel(&mut f, worst.a, mid)?;
        let right = kronrod_panel(&mut f, mid, worst.b)?;
        evals += 2 * KRONROD_POINTS;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }

    let all: Vec<Segment> = heap.into_iter().chain(frozen).collect();
    let (value, abs_err) = sum_segments(all);
    if abs_err > tol.target(value) {
        return Err(Error::NotConverged {
            what: "adaptive quadrature",
            value,
            abs_err,
            evals,
        });
    }
    Ok(Estimate {
        value,
        abs_err,
        evals,
    })
}

// Left-to-right summation keeps the result independent of heap layout.
fn sum_segments(mut segments: Vec<Segment>) -> (f64, f64) {
    segments.sort_by(|p, q| p.a.total_cmp(&q.a));
    segments
        .iter()
        .fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.err))
}

/// Integrate `f` over `[a, ∞)` through the map x = a + (1 − t)/t, t ∈ (0, 1].
pub fn integrate_to_infinity<F>(mut f: F, a: f64, tol: Tolerance) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    integrate(
        |t| {
            let x = a + (1.0 - t) / t;
            Ok(f(x)? / (t * t))
        },
        0.0,
        1.0,
        tol,
    )
}

/// Integrate `f` over `[a, b]` with `0 < a < b` in the variable ln x.
///
/// Suited to integrands whose features are spread over many decades.
pub fn integrate_log<F>(mut f: F, a: f64, b: f64, tol: Tolerance) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::Domain(format!(
            "logarithmic map needs positive limits, got [{a}, {b}]"
        )));
    }
    integrate(
        |t| {
            let x = t.exp();
            Ok(f(x)? * x)
        },
        a.ln(),
        b.ln(),
        tol,
    )
}

/// `n` logarithmically spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let (l0, l1) = (lo.ln(), hi.ln());
            (0..n)
                .map(|i| {
                    if i == 0 {
                        lo
                    } else if i == n - 1 {
                        hi
                    } else {
                        (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp()
                    }
                })
                .collect()
        }
    }
}
