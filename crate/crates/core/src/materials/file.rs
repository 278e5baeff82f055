//! Line-oriented material files.
//!
//! ```text
//! # comment
//! [material]
//! name = water
//! kind = ninham            # drude | ninham | colecole | constant | tabulated
//! source = where the numbers come from (mandatory)
//! ambient_index = 1.33     # optional, required for drude
//! B = 74.8
//! tau = 15384.6
//! term = C, omega, g       # repeated, one per oscillator
//! ```
//!
//! Comments start with `#` at the beginning of a line.

use std::collections::BTreeMap;

use super::MaterialRecord;
use crate::dielectric::{
    ColeColeForm, ColeColeParams, DielectricModel, DrudeParams, Interpolation, NinhamParams,
    NinhamTerm, Tabulated,
};
use crate::error::{Error, Result};

const SECTION: &str = "[material]";

fn allowed_keys(kind: &str) -> Option<&'static [&'static str]> {
    Some(match kind {
        "constant" => &["value"],
        "drude" => &["eps_inf", "omega_p_sq", "gamma0", "beta"],
        "ninham" => &["B", "tau", "term"],
        "colecole" => &["eps_static", "eps_high", "tau", "alpha", "form"],
        "tabulated" => &["interpolation", "sample"],
        _ => return None,
    })
}

const COMMON_KEYS: [&str; 4] = ["name", "kind", "source", "ambient_index"];
const REPEATED_KEYS: [&str; 2] = ["term", "sample"];

struct Entry {
    line: usize,
    value: String,
}

struct Fields {
    single: BTreeMap<String, Entry>,
    repeated: BTreeMap<String, Vec<Entry>>,
}

impl Fields {
    fn text(&self, key: &'static str) -> Result<&str> {
        self.single
            .get(key)
            .map(|e| e.value.as_str())
            .ok_or(Error::MissingField(key))
    }

    fn number(&self, key: &'static str) -> Result<f64> {
        let entry = self.single.get(key).ok_or(Error::MissingField(key))?;
        parse_number(&entry.value, entry.line, key)
    }

    fn optional_number(&self, key: &'static str) -> Result<Option<f64>> {
        match self.single.get(key) {
            Some(e) => parse_number(&e.value, e.line, key).map(Some),
            None => Ok(None),
        }
    }

    fn tuples(&self, key: &'static str, width: usize) -> Result<Vec<Vec<f64>>> {
        self.repeated
            .get(key)
            .map(|entries| {
                entries
                    .iter()
                    .map(|e| {
                        let parts: Vec<&str> = e.value.split(',').map(str::trim).collect();
                        if parts.len() != width {
                            return Err(Error::Parse {
                                line: e.line,
                                message: format!("`{key}` expects {width} comma-separated numbers"),
                            });
                        }
                        parts.iter().map(|p| parse_number(p, e.line, key)).collect()
                    })
                    .collect()
            })
            .unwrap_or_else(|| Ok(Vec::new()))
    }
}

fn parse_number(text: &str, line: usize, key: &str) -> Result<f64> {
    text.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::Parse {
            line,
            message: format!("`{key}`: `{text}` is not a finite number"),
        })
}

fn split_lines(text: &str) -> Result<Fields> {
    let mut in_section = false;
    let mut fields = Fields {
        single: BTreeMap::new(),
        repeated: BTreeMap::new(),
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.starts_with('[') {
            if trimmed != SECTION {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown section `{trimmed}`"),
                });
            }
            if in_section {
                return Err(Error::Parse {
                    line,
                    message: "only one [material] section per file".into(),
                });
            }
            in_section = true;
            continue;
        }
        if !in_section {
            return Err(Error::Parse {
                line,
                message: "key outside the [material] section".into(),
            });
        }
        let Some((key, value)) = trimmed.split_once('=') else {
            return Err(Error::Parse {
                line,
                message: "expected `key = value`".into(),
            });
        };
        let key = key.trim().to_string();
        let entry = Entry {
            line,
            value: value.trim().to_string(),
        };
        if REPEATED_KEYS.contains(&key.as_str()) {
            fields.repeated.entry(key).or_default().push(entry);
        } else if fields.single.contains_key(&key) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate key `{key}`"),
            });
        } else {
            fields.single.insert(key, entry);
        }
    }
    if !in_section {
        return Err(Error::Parse {
            line: 0,
            message: "missing [material] section".into(),
        });
    }
    Ok(fields)
}

/// Parse and validate one material file.
pub fn parse_material_file(text: &str) -> Result<MaterialRecord> {
    let fields = split_lines(text)?;
    let kind = fields.text("kind")?.to_string();
    let kind_line = fields.single["kind"].line;
    let allowed = allowed_keys(&kind).ok_or_else(|| Error::Parse {
        line: kind_line,
        message: format!("unknown kind `{kind}`"),
    })?;
    for (key, entry) in fields.single.iter().chain(
        fields
            .repeated
            .iter()
            .flat_map(|(k, v)| v.iter().map(move |e| (k, e))),
    ) {
        if !COMMON_KEYS.contains(&key.as_str()) && !allowed.contains(&key.as_str()) {
            return Err(Error::Parse {
                line: entry.line,
                message: format!("key `{key}` is not valid for kind `{kind}`"),
            });
        }
    }

    let name = fields.text("name")?.to_string();
    if name.is_empty() {
        return Err(Error::MissingField("name"));
    }
    let source = fields.text("source")?.to_string();
    if source.is_empty() {
        return Err(Error::MissingField("source"));
    }
    let ambient_index = fields.optional_number("ambient_index")?;
    if let Some(n) = ambient_index {
        if !(n >= 1.0) {
            return Err(Error::invalid("ambient_index", n, "must be >= 1"));
        }
    }

    let model = match kind.as_str() {
        "constant" => DielectricModel::Constant(fields.number("value")?),
        "drude" => DielectricModel::Drude(DrudeParams {
            eps_inf: fields.number("eps_inf")?,
            omega_p_sq: fields.number("omega_p_sq")?,
            gamma0: fields.number("gamma0")?,
            beta: fields.number("beta")?,
            ambient_index: ambient_index.ok_or(Error::MissingField("ambient_index"))?,
        }),
        "ninham" => DielectricModel::Ninham(NinhamParams {
            relaxation_strength: fields.number("B")?,
            tau: fields.number("tau")?,
            terms: fields
                .tuples("term", 3)?
                .into_iter()
                .map(|t| NinhamTerm {
                    strength: t[0],
                    frequency: t[1],
                    damping: t[2],
                })
                .collect(),
        }),
        "colecole" => {
            let form = match fields.single.get("form") {
                None => ColeColeForm::Standard,
                Some(e) => match e.value.as_str() {
                    "standard" => ColeColeForm::Standard,
                    "literal" => ColeColeForm::Literal,
                    other => {
                        return Err(Error::Parse {
                            line: e.line,
                            message: format!("unknown Cole-Cole form `{other}`"),
                        })
                    }
                },
            };
            DielectricModel::ColeCole(ColeColeParams {
                eps_static: fields.number("eps_static")?,
                eps_high: fields.number("eps_high")?,
                tau: fields.number("tau")?,
                alpha: fields.number("alpha")?,
                form,
            })
        }
        "tabulated" => {
            let interpolation = match fields.single.get("interpolation") {
                None => Interpolation::default(),
                Some(e) => Interpolation::parse(&e.value).ok_or_else(|| Error::Parse {
                    line: e.line,
                    message: format!("unknown interpolation `{}`", e.value),
                })?,
            };
            let samples = fields
                .tuples("sample", 2)?
                .into_iter()
                .map(|t| (t[0], t[1]))
                .collect();
            DielectricModel::Tabulated(Tabulated::new(samples, interpolation)?)
        }
        _ => unreachable!("kind checked above"),
    };
    model.validate()?;
    Ok(MaterialRecord {
        name,
        model,
        source,
        ambient_index,
    })
}

fn num(v: f64) -> String {
    format!("{v:.14e}")
}

/// Canonical text form: fixed key order, 15 significant digits.
pub fn serialize_material(record: &MaterialRecord) -> Result<String> {
    let mut out = String::from("[material]\n");
    let mut kv = |k: &str, v: String| {
        out.push_str(k);
        out.push_str(" = ");
        out.push_str(&v);
        out.push('\n');
    };
    kv("name", record.name.clone());
    let kind = match &record.model {
        DielectricModel::Vacuum | DielectricModel::Constant(_) => "constant",
        DielectricModel::Drude(_) => "drude",
        DielectricModel::Ninham(_) => "ninham",
        DielectricModel::ColeCole(_) => "colecole",
        DielectricModel::Tabulated(_) => "tabulated",
        DielectricModel::Bruggeman { .. } => {
            return Err(Error::Domain(
                "composite models have no material-file representation".into(),
            ))
        }
    };
    kv("kind", kind.into());
    kv("source", record.source.clone());
    if let Some(n) = record.ambient_index {
        kv("ambient_index", num(n));
    }
    match &record.model {
        DielectricModel::Vacuum => kv("value", num(1.0)),
        DielectricModel::Constant(v) => kv("value", num(*v)),
        DielectricModel::Drude(p) => {
            kv("eps_inf", num(p.eps_inf));
            kv("omega_p_sq", num(p.omega_p_sq));
            kv("gamma0", num(p.gamma0));
            kv("beta", num(p.beta));
        }
        DielectricModel::Ninham(p) => {
            kv("B", num(p.relaxation_strength));
            kv("tau", num(p.tau));
            for t in &p.terms {
                kv(
                    "term",
                    format!(
                        "{}, {}, {}",
                        num(t.strength),
                        num(t.frequency),
                        num(t.damping)
                    ),
                );
            }
        }
        DielectricModel::ColeCole(p) => {
            kv("eps_static", num(p.eps_static));
            kv("eps_high", num(p.eps_high));
            kv("tau", num(p.tau));
            kv("alpha", num(p.alpha));
            if p.form == ColeColeForm::Literal {
                kv("form", "literal".into());
            }
        }
        DielectricModel::Tabulated(t) => {
            kv("interpolation", t.interpolation().as_str().into());
            for (z, e) in t.samples() {
                kv("sample", format!("{}, {}", num(*z), num(*e)));
            }
        }
        DielectricModel::Bruggeman { .. } => unreachable!(),
    }
    Ok(out)
}
