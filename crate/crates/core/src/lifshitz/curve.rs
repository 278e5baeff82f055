//! Pressure and percent-difference curves over a separation grid.

use rayon::prelude::*;

use super::{force_per_area, LayerStack};
use crate::dielectric::{DielectricModel, DrudeParams};
use crate::error::{Error, Result};
use crate::quadrature::QuadratureSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueKind {
    PressurePa,
    DeltaPercent,
}

impl ValueKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ValueKind::PressurePa => "pressure_Pa",
            ValueKind::DeltaPercent => "delta_percent",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pressure_Pa" => Some(ValueKind::PressurePa),
            "delta_percent" => Some(ValueKind::DeltaPercent),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRecord {
    pub separation_nm: f64,
    pub value: f64,
    pub kind: ValueKind,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ForceCurve {
    pub records: Vec<CurveRecord>,
    pub description: String,
    pub quad_fingerprint: u64,
}

impl ForceCurve {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn separations(&self) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.separation_nm)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.value)
    }

    pub fn validate(&self) -> Result<()> {
        for r in &self.records {
            if !(r.separation_nm > 0.0 && r.separation_nm.is_finite()) {
                return Err(Error::invalid(
                    "separation_nm",
                    r.separation_nm,
                    "must be > 0",
                ));
            }
        }
        check_increasing(&self.separations().collect::<Vec<_>>())
    }
}

fn check_increasing(separations: &[f64]) -> Result<()> {
    if let Some(&d) = separations.iter().find(|d| !(**d > 0.0 && d.is_finite())) {
        return Err(Error::invalid("separation", d, "must be > 0"));
    }
    if let Some(w) = separations.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::invalid(
            "separation",
            w[1],
            "separations must be strictly increasing",
        ));
    }
    Ok(())
}

fn at_separation<T>(separation: f64, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::AtSeparation {
        separation,
        source: Box::new(e),
    })
}

/// Pressure at every separation; the template's own separation is ignored.
///
/// Points are evaluated in parallel and gathered by index.
pub fn force_curve(
    template: &LayerStack,
    separations: &[f64],
    quad: &QuadratureSpec,
) -> Result<ForceCurve> {
    check_increasing(separations)?;
    quad.validate()?;
    let records = separations
        .par_iter()
        .map(|&d| {
            let value = at_separation(
                d,
                template
                    .with_separation(d)
                    .and_then(|s| force_per_area(&s, quad)),
            )?;
            Ok(CurveRecord {
                separation_nm: d,
                value,
                kind: ValueKind::PressurePa,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ForceCurve {
        records,
        description: template.describe(),
        quad_fingerprint: quad.fingerprint(),
    })
}

/// Δ% = |(F_dry − F_wet)/F_dry| × 100.
pub fn percent_difference(f_dry: f64, f_wet: f64) -> Result<f64> {
    if f_dry == 0.0 {
        return Err(Error::Domain(
            "percent difference undefined for a vanishing reference force".into(),
        ));
    }
    Ok(((f_dry - f_wet) / f_dry).abs() * 100.0)
}

fn delta_at(
    d: f64,
    liquid: &DielectricModel,
    dry: &DielectricModel,
    wet: &DielectricModel,
    quad: &QuadratureSpec,
) -> Result<f64> {
    let f_dry = force_per_area(
        &LayerStack::symmetric(dry.clone(), liquid.clone(), d)?,
        quad,
    )?;
    if dry == wet {
        return Ok(0.0);
    }
    let f_wet = force_per_area(
        &LayerStack::symmetric(wet.clone(), liquid.clone(), d)?,
        quad,
    )?;
    percent_difference(f_dry, f_wet)
}

/// Δ% between Au-like slabs with `dry` and `wet` Drude parameters, both
/// across the same `liquid` gap.
pub fn delta_curve(
    liquid: &DielectricModel,
    dry: &DrudeParams,
    wet: &DrudeParams,
    separations: &[f64],
    quad: &QuadratureSpec,
) -> Result<ForceCurve> {
    check_increasing(separations)?;
    quad.validate()?;
    liquid.validate()?;
    dry.validate()?;
    wet.validate()?;
    let dry_model = DielectricModel::Drude(*dry);
    let wet_model = DielectricModel::Drude(*wet);
    let records = separations
        .par_iter()
        .map(|&d| {
            let value = at_separation(d, delta_at(d, liquid, &dry_model, &wet_model, quad))?;
            Ok(CurveRecord {
                separation_nm: d,
                value,
                kind: ValueKind::DeltaPercent,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ForceCurve {
        records,
        description: format!(
            "delta: Au n={} vs n={} across {}",
            dry.ambient_index,
            wet.ambient_index,
            liquid.describe()
        ),
        quad_fingerprint: quad.fingerprint(),
    })
}
