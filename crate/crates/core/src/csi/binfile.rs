//! Binary CSI record files.
//!
//! Layout (all little-endian):
//!
//! ```text
//! offset  size  field
//! 0       4     magic "CSIB"
//! 4       4     u32 format version (currently 1)
//! 8       4     u32 A  (antennas)
//! 12      4     u32 C  (subcarriers)
//! 16      4     u32 T  (time samples)
//! 20      4     f32 sample_rate_hz
//! 24      4     f32 carrier_wavelength_m
//! 28      4     reserved (zero)
//! 32      8*A*C*T  payload: f32 pairs (re, im), row-major [a][c][t]
//! ```
//!
//! The 32-byte header keeps the payload 8-byte aligned. Values are f32 on
//! disk; in memory CSI is f64 complex.

use std::fs;
use std::path::Path;

use ndarray::Array3;
use num_complex::Complex64;

use crate::error::CsiError;

pub const RECORD_MAGIC: [u8; 4] = *b"CSIB";
const HEADER_LEN: usize = 32;
const VERSION: u32 = 1;

/// Shape and rates parsed from a record header.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecordHeader {
    pub antennas: usize,
    pub subcarriers: usize,
    pub samples: usize,
    pub sample_rate_hz: f64,
    pub carrier_wavelength_m: f64,
}

fn io_err(path: &Path, source: std::io::Error) -> CsiError {
    if source.kind() == std::io::ErrorKind::NotFound {
        CsiError::MissingFile { path: path.to_path_buf() }
    } else {
        CsiError::Io { path: path.to_path_buf(), source }
    }
}

/// Write one record's CSI tensor to `path`.
pub fn write_record_file(
    path: &Path,
    data: &Array3<Complex64>,
    sample_rate_hz: f64,
    carrier_wavelength_m: f64,
) -> Result<(), CsiError> {
    let (a, c, t) = (data.shape()[0], data.shape()[1], data.shape()[2]);
    let mut buf = Vec::with_capacity(HEADER_LEN + a * c * t * 8);
    buf.extend_from_slice(&RECORD_MAGIC);
    buf.extend_from_slice(&VERSION.to_le_bytes());
    buf.extend_from_slice(&(a as u32).to_le_bytes());
    buf.extend_from_slice(&(c as u32).to_le_bytes());
    buf.extend_from_slice(&(t as u32).to_le_bytes());
    buf.extend_from_slice(&(sample_rate_hz as f32).to_le_bytes());
    buf.extend_from_slice(&(carrier_wavelength_m as f32).to_le_bytes());
    buf.extend_from_slice(&0u32.to_le_bytes());
    for v in data.iter() {
        buf.extend_from_slice(&(v.re as f32).to_le_bytes());
        buf.extend_from_slice(&(v.im as f32).to_le_bytes());
    }
    fs::write(path, buf).map_err(|e| io_err(path, e))
}

/// Read one record file back into a complex tensor.
///
/// `record_id` is used only for error reporting.
pub fn read_record_file(
    path: &Path,
    record_id: &str,
) -> Result<(Array3<Complex64>, RecordHeader), CsiError> {
    let bytes = fs::read(path).map_err(|e| io_err(path, e))?;
    let corrupt = |detail: String| CsiError::CorruptedRecord {
        record_id: record_id.to_string(),
        detail,
    };
    if bytes.len() < HEADER_LEN {
        return Err(corrupt(format!("file shorter than header ({} bytes)", bytes.len())));
    }
    if bytes[0..4] != RECORD_MAGIC {
        return Err(corrupt("bad magic".into()));
    }
    let u32_at = |off: usize| u32::from_le_bytes(bytes[off..off + 4].try_into().unwrap());
    let f32_at = |off: usize| f32::from_le_bytes(bytes[off..off + 4].try_into().unwrap());
    let version = u32_at(4);
    if version != VERSION {
        return Err(corrupt(format!("unsupported version {version}")));
    }
    let header = RecordHeader {
        antennas: u32_at(8) as usize,
        subcarriers: u32_at(12) as usize,
        samples: u32_at(16) as usize,
        sample_rate_hz: f32_at(20) as f64,
        carrier_wavelength_m: f32_at(24) as f64,
    };
    let n = header.antennas * header.subcarriers * header.samples;
    let expected = HEADER_LEN + n * 8;
    if bytes.len() != expected {
        return Err(corrupt(format!(
            "payload length {} != expected {} ({}x{}x{} complex values)",
            bytes.len() - HEADER_LEN.min(bytes.len()),
            expected - HEADER_LEN,
            header.antennas,
            header.subcarriers,
            header.samples
        )));
    }
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let off = HEADER_LEN + i * 8;
        let re = f32_at(off) as f64;
        let im = f32_at(off + 4) as f64;
        values.push(Complex64::new(re, im));
    }
    let data = Array3::from_shape_vec(
        (header.antennas, header.subcarriers, header.samples),
        values,
    )
    .map_err(|e| corrupt(e.to_string()))?;
    Ok((data, header))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    #[test]
    fn round_trip_preserves_payload_bytes() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("r.csib");
        let data = Array3::from_shape_fn((2, 3, 5), |(a, c, t)| {
            Complex64::new((a * 100 + c * 10 + t) as f64, -(t as f64))
        });
        write_record_file(&path, &data, 1000.0, 0.05).unwrap();
        let first = fs::read(&path).unwrap();

        let (loaded, header) = read_record_file(&path, "r").unwrap();
        assert_eq!(header.antennas, 2);
        assert_eq!(header.samples, 5);
        write_record_file(&path, &loaded, header.sample_rate_hz, header.carrier_wavelength_m)
            .unwrap();
        let second = fs::read(&path).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn truncated_file_reports_corrupted_record() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("r.csib");
        let data = Array3::from_elem((2, 2, 4), Complex64::new(1.0, 0.0));
        write_record_file(&path, &data, 1000.0, 0.05).unwrap();
        let mut bytes = fs::read(&path).unwrap();
        bytes.truncate(bytes.len() - 3);
        fs::write(&path, bytes).unwrap();
        let err = read_record_file(&path, "rec7").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("corrupted record rec7"), "{msg}");
    }

    #[test]
    fn missing_file_is_distinct_error() {
        let err = read_record_file(Path::new("/nonexistent/x.csib"), "x").unwrap_err();
        assert!(matches!(err, CsiError::MissingFile { .. }));
    }
}
