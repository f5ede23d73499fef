//! JSON documents: structure-constant files, subspace files and
//! re-verifiable certificates.

mod certificate;
mod hopf_file;
mod subspace_file;

pub use certificate::{
    CertificateFileV1, CertificateKind, FactorRecord, IsoRecord, SeriesRecord, VerifyReport,
    CERT_FORMAT,
};
pub use hopf_file::{load_hopf, parse_hopf, save_hopf, Conventions, HopfFileV1, HOPF_FORMAT};
pub use subspace_file::{load_subspace, parse_subspace, SubspaceFileV1, SUBSPACE_FORMAT};

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactalg::serial::{decode_scalar, encode_scalar};
use crate::exactalg::{CyclotomicField, Matrix, Scalar};

type Field = Option<Arc<CyclotomicField>>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Deserializes with the failing JSON path in the error.
fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de)
        .map_err(|e| Error::Schema(format!("{}: {}", e.path(), e.inner())))
}

/// Pretty JSON with a trailing newline; key order follows field order.
fn to_json<T: serde::Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("documents serialize");
    s.push('\n');
    s
}

fn scalar(v: &Value, field: &Field, path: impl FnOnce() -> String) -> Result<Scalar> {
    decode_scalar(v, field).map_err(|e| Error::Schema(format!("{}: {e}", path())))
}

fn encode_rows(rows: impl Iterator<Item = Vec<Scalar>>, field: &Field) -> Vec<Vec<Value>> {
    rows.map(|r| r.iter().map(|s| encode_scalar(s, field)).collect())
        .collect()
}

fn encode_matrix(m: &Matrix, field: &Field) -> Vec<Vec<Value>> {
    encode_rows(m.row_vecs().into_iter(), field)
}

fn decode_rows(
    rows: &[Vec<Value>],
    cols: usize,
    field: &Field,
    path: &str,
) -> Result<Vec<Vec<Scalar>>> {
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            if row.len() != cols {
                return Err(Error::Schema(format!(
                    "{path}[{r}]: expected {cols} entries, found {}",
                    row.len()
                )));
            }
            row.iter()
                .enumerate()
                .map(|(c, v)| scalar(v, field, || format!("{path}[{r}][{c}]")))
                .collect()
        })
        .collect()
}

fn decode_matrix(
    rows: &[Vec<Value>],
    shape: (usize, usize),
    field: &Field,
    path: &str,
) -> Result<Matrix> {
    if rows.len() != shape.0 {
        return Err(Error::Schema(format!(
            "{path}: expected {} rows, found {}",
            shape.0,
            rows.len()
        )));
    }
    Ok(Matrix::from_rows(
        shape.1,
        decode_rows(rows, shape.1, field, path)?,
    ))
}
