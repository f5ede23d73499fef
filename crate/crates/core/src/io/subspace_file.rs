use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactalg::serial::{field_handle, FieldSpec};
use crate::exactalg::Subspace;

use super::{decode_rows, encode_rows, from_json, read, to_json};

pub const SUBSPACE_FORMAT: &str = "subspace-v1";

/// A subspace of `k^n` by a spanning set; saved in reduced echelon form.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFileV1 {
    pub format: String,
    pub field: FieldSpec,
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Value>>,
}

impl SubspaceFileV1 {
    pub fn from_subspace(s: &Subspace, field: FieldSpec) -> Self {
        SubspaceFileV1 {
            format: SUBSPACE_FORMAT.into(),
            field,
            ambient_dim: s.ambient_dim(),
            basis: encode_rows(s.basis_vectors().map(<[_]>::to_vec), &field_handle(field)),
        }
    }

    pub fn to_subspace(&self) -> Result<Subspace> {
        if self.format != SUBSPACE_FORMAT {
            return Err(Error::Schema(format!(
                "format: expected {SUBSPACE_FORMAT:?}, found {:?}",
                self.format
            )));
        }
        let rows = decode_rows(
            &self.basis,
            self.ambient_dim,
            &field_handle(self.field),
            "basis",
        )?;
        Ok(Subspace::from_vectors(self.ambient_dim, rows))
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

pub fn parse_subspace(text: &str) -> Result<Subspace> {
    from_json::<SubspaceFileV1>(text)?.to_subspace()
}

pub fn load_subspace(path: impl AsRef<Path>) -> Result<Subspace> {
    parse_subspace(&read(path.as_ref())?)
}
