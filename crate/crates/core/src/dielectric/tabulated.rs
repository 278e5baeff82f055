use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Interpolation {
    /// Linear in ζ.
    Linear,
    /// Linear in ln ζ.
    #[default]
    LogZeta,
}

impl Interpolation {
    pub fn as_str(self) -> &'static str {
        match self {
            Interpolation::Linear => "linear",
            Interpolation::LogZeta => "log",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "linear" => Some(Interpolation::Linear),
            "log" => Some(Interpolation::LogZeta),
            _ => None,
        }
    }
}

/// Sampled ε(iζ) on a strictly increasing ζ grid. No extrapolation.
#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated {
    samples: Vec<(f64, f64)>,
    interpolation: Interpolation,
}

impl Tabulated {
    pub fn new(samples: Vec<(f64, f64)>, interpolation: Interpolation) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Domain(
                "tabulated model needs at least one sample".into(),
            ));
        }
        for &(z, e) in &samples {
            if !(z > 0.0 && z.is_finite()) {
                return Err(Error::invalid("sample.zeta", z, "must be > 0"));
            }
            if !(e >= 1.0 && e.is_finite()) {
                return Err(Error::invalid("sample.eps", e, "must be >= 1"));
            }
        }
        if let Some(w) = samples.windows(2).find(|w| w[1].0 <= w[0].0) {
            return Err(Error::invalid(
                "sample.zeta",
                w[1].0,
                "must be strictly increasing",
            ));
        }
        Ok(Self {
            samples,
            interpolation,
        })
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn interpolation(&self) -> Interpolation {
        self.interpolation
    }

    pub fn eval(&self, zeta: f64) -> Result<f64> {
        let min = self.samples[0].0;
        let max = self.samples[self.samples.len() - 1].0;
        if !(zeta >= min && zeta <= max) {
            return Err(Error::OutOfRange { zeta, min, max });
        }
        let hi = self.samples.partition_point(|s| s.0 < zeta);
        if self.samples[hi].0 == zeta {
            return Ok(self.samples[hi].1);
        }
        let (z0, e0) = self.samples[hi - 1];
        let (z1, e1) = self.samples[hi];
        let t = match self.interpolation {
            Interpolation::Linear => (zeta - z0) / (z1 - z0),
            Interpolation::LogZeta => (zeta / z0).ln() / (z1 / z0).ln(),
        };
        Ok(e0 + t * (e1 - e0))
    }
}
