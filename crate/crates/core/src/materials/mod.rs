//! Material records, the on-disk material database, and CSV output.

mod csv_io;
mod file;
mod table;

pub use csv_io::{
    read_curve_csv, write_curve_csv, write_eps_csv, write_eps_ratio_csv, write_labelled_curves_csv,
    EpsRatioRecord, CURVE_HEADER, EPS_HEADER, EPS_RATIO_HEADER, LABELLED_CURVE_HEADER,
};
pub use file::{parse_material_file, serialize_material};
pub use table::{builtin_table1, dry_gold, AU_DRUDE_ROWS};

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::dielectric::DielectricModel;
use crate::error::{Error, Result};

/// File extension of material files inside a database directory.
pub const MATERIAL_EXTENSION: &str = "material";

#[derive(Debug, Clone, PartialEq)]
pub struct MaterialRecord {
    pub name: String,
    pub model: DielectricModel,
    /// Where the numbers come from. Never empty.
    pub source: String,
    pub ambient_index: Option<f64>,
}

/// Immutable set of named materials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MaterialDatabase {
    records: BTreeMap<String, MaterialRecord>,
}

impl MaterialDatabase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_records(records: impl IntoIterator<Item = MaterialRecord>) -> Result<Self> {
        let mut db = Self::new();
        for r in records {
            if db.records.contains_key(&r.name) {
                return Err(Error::DuplicateMaterial(r.name));
            }
            db.records.insert(r.name.clone(), r);
        }
        Ok(db)
    }

    /// Load every `*.material` file in `dir` (non-recursive).
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let mut paths: Vec<_> = fs::read_dir(dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == MATERIAL_EXTENSION))
            .collect();
        paths.sort();
        let mut records = Vec::with_capacity(paths.len());
        for path in paths {
            let text = fs::read_to_string(&path)?;
            let record = parse_material_file(&text)
                .map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
            records.push(record);
        }
        Self::from_records(records)
    }

    pub fn get(&self, name: &str) -> Result<&MaterialRecord> {
        self.records
            .get(name)
            .ok_or_else(|| Error::UnknownMaterial(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Canonical serialization of all records in name order.
    pub fn serialize(&self) -> Result<String> {
        let parts = self
            .records
            .values()
            .map(serialize_material)
            .collect::<Result<Vec<_>>>()?;
        Ok(parts.join("\n"))
    }
}
