//! CSI domain types, dataset container and file ingestion.
//!
//! A dataset is a JSON manifest naming one binary file per record (see
//! [`binfile`] for the byte layout) plus the record's gesture label and
//! physical factors. Records are loaded in manifest order and are
//! immutable afterwards, so a loaded [`Dataset`] can be shared freely
//! across worker threads.

mod binfile;
mod manifest;
mod split;

pub use binfile::{read_record_file, write_record_file, RECORD_MAGIC};
pub use manifest::{load_manifest, write_manifest, Manifest, ManifestRecord};
pub use split::split_leave_one_out;

use ndarray::Array3;
use num_complex::Complex64;

use crate::error::CsiError;

/// Physical factor axes attached to every sample.
pub const FACTOR_NAMES: [&str; 4] = ["user", "location", "orientation", "environment"];

/// Gesture label plus the physical conditions a sample was captured under.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SampleMeta {
    pub gesture: String,
    pub user: String,
    pub location: String,
    pub orientation: String,
    pub environment: String,
    pub repetition: u32,
}

impl SampleMeta {
    /// Value of a physical factor by name. Gesture is intentionally not a
    /// factor: factors describe capture conditions, not class labels.
    pub fn factor(&self, name: &str) -> Option<&str> {
        match name {
            "user" => Some(&self.user),
            "location" => Some(&self.location),
            "orientation" => Some(&self.orientation),
            "environment" => Some(&self.environment),
            _ => None,
        }
    }
}

/// One CSI capture: complex channel estimates indexed `[antenna][subcarrier][time]`.
#[derive(Debug, Clone)]
pub struct CsiRecord {
    /// Stable identifier (the manifest file stem).
    pub id: String,
    /// Complex CSI, shape `[A][C][T]`.
    pub data: Array3<Complex64>,
    pub sample_rate_hz: f64,
    pub carrier_wavelength_m: f64,
    pub meta: SampleMeta,
}

impl CsiRecord {
    pub fn antennas(&self) -> usize {
        self.data.shape()[0]
    }

    pub fn subcarriers(&self) -> usize {
        self.data.shape()[1]
    }

    pub fn samples(&self) -> usize {
        self.data.shape()[2]
    }

    /// Check the structural invariants every ingested record must satisfy.
    pub fn validate(&self) -> Result<(), CsiError> {
        let fail = |detail: String| CsiError::InvalidRecord {
            record_id: self.id.clone(),
            detail,
        };
        if self.antennas() < 2 {
            return Err(fail(format!("A = {} < 2", self.antennas())));
        }
        if self.subcarriers() < 1 {
            return Err(fail("C = 0".into()));
        }
        if self.samples() < 2 {
            return Err(fail(format!("T = {} < 2", self.samples())));
        }
        if !(self.sample_rate_hz > 0.0) {
            return Err(fail(format!("sample_rate_hz = {}", self.sample_rate_hz)));
        }
        if !(self.carrier_wavelength_m > 0.0) {
            return Err(fail(format!(
                "carrier_wavelength_m = {}",
                self.carrier_wavelength_m
            )));
        }
        if self.data.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(fail("non-finite CSI entry".into()));
        }
        Ok(())
    }
}

/// Declared categorical schemas: which values each factor may take.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FactorSchema {
    pub user: Vec<String>,
    pub location: Vec<String>,
    pub orientation: Vec<String>,
    pub environment: Vec<String>,
}

impl FactorSchema {
    pub fn values(&self, factor: &str) -> Option<&[String]> {
        match factor {
            "user" => Some(&self.user),
            "location" => Some(&self.location),
            "orientation" => Some(&self.orientation),
            "environment" => Some(&self.environment),
            _ => None,
        }
    }

    /// Build the schema observed in a list of metas (sorted, deduplicated).
    pub fn from_metas<'a>(metas: impl Iterator<Item = &'a SampleMeta>) -> Self {
        let mut schema = FactorSchema::default();
        for m in metas {
            for (field, store) in [
                (&m.user, &mut schema.user),
                (&m.location, &mut schema.location),
                (&m.orientation, &mut schema.orientation),
                (&m.environment, &mut schema.environment),
            ] {
                if !store.contains(field) {
                    store.push(field.clone());
                }
            }
        }
        schema.user.sort();
        schema.location.sort();
        schema.orientation.sort();
        schema.environment.sort();
        schema
    }
}

/// An ordered collection of records with their declared label set and
/// factor schemas. Factor values are interned to integer codes at load
/// so grouping never re-hashes strings.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub records: Vec<CsiRecord>,
    pub label_set: Vec<String>,
    pub factor_schema: FactorSchema,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Integer code of a record's gesture within the declared label set.
    pub fn gesture_code(&self, idx: usize) -> usize {
        let g = &self.records[idx].meta.gesture;
        self.label_set.iter().position(|l| l == g).expect("validated at load")
    }

    /// Integer code of a record's value on a physical factor, within the
    /// declared schema for that factor.
    pub fn factor_code(&self, idx: usize, factor: &str) -> Option<usize> {
        let value = self.records[idx].meta.factor(factor)?;
        self.factor_schema
            .values(factor)?
            .iter()
            .position(|v| v == value)
    }

    pub fn metas(&self) -> Vec<SampleMeta> {
        self.records.iter().map(|r| r.meta.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array3;

    pub(crate) fn meta(gesture: &str) -> SampleMeta {
        SampleMeta {
            gesture: gesture.to_string(),
            user: "u1".into(),
            location: "l1".into(),
            orientation: "o1".into(),
            environment: "e1".into(),
            repetition: 1,
        }
    }

    pub(crate) fn record(id: &str, a: usize, c: usize, t: usize) -> CsiRecord {
        CsiRecord {
            id: id.to_string(),
            data: Array3::from_elem((a, c, t), Complex64::new(1.0, 0.5)),
            sample_rate_hz: 1000.0,
            carrier_wavelength_m: 0.05,
            meta: meta("g1"),
        }
    }

    #[test]
    fn validate_accepts_wellformed() {
        assert!(record("r", 2, 30, 100).validate().is_ok());
    }

    #[test]
    fn validate_rejects_single_antenna() {
        let err = record("r", 1, 30, 100).validate().unwrap_err();
        assert!(err.to_string().contains("A = 1"));
    }

    #[test]
    fn validate_rejects_nan() {
        let mut r = record("r", 2, 2, 4);
        r.data[[0, 0, 0]] = Complex64::new(f64::NAN, 0.0);
        assert!(r.validate().is_err());
    }

    #[test]
    fn factor_lookup() {
        let m = meta("g1");
        assert_eq!(m.factor("orientation"), Some("o1"));
        assert_eq!(m.factor("gesture"), None);
    }
}
