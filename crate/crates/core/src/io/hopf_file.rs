use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactalg::serial::{encode_scalar, field_handle, FieldSpec};
use crate::exactalg::{Scalar, SparseVec};
use crate::hopfcore::{build_validate, HopfAlgebra, RawHopf};

use super::{decode_matrix, decode_rows, encode_matrix, from_json, read, scalar, to_json, write};

pub const HOPF_FORMAT: &str = "hopf-sc-v1";

/// Index conventions, written out so files are self-describing. Files
/// may omit the block; a present block must match exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Conventions {
    pub indices: String,
    pub mult: String,
    pub comult: String,
    pub antipode: String,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            indices: "0-based".into(),
            mult: "mult[i][j] = coordinates of e_i e_j".into(),
            comult: "comult[k] = [c, i, j] terms of Δ(e_k) = Σ c e_i ⊗ e_j; e_i ⊗ e_j is row-major index i*dim + j".into(),
            antipode: "antipode[r][c] = coefficient of e_r in S(e_c)".into(),
        }
    }
}

/// The `hopf-sc-v1` document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFileV1 {
    pub format: String,
    #[serde(default)]
    pub conventions: Conventions,
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Vec<Value>>>,
    pub unit: Vec<Value>,
    pub comult: Vec<Vec<(Value, usize, usize)>>,
    pub counit: Vec<Value>,
    pub antipode: Vec<Vec<Value>>,
}

impl HopfFileV1 {
    pub fn from_algebra(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        let f = field_handle(h.field());
        let enc = |s: &Scalar| encode_scalar(s, &f);
        let mult = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| h.mult_basis(i, j).to_dense(n).iter().map(enc).collect())
                    .collect()
            })
            .collect();
        let comult = (0..n)
            .map(|k| {
                h.comult_basis(k)
                    .iter()
                    .map(|(t, c)| (enc(c), t / n, t % n))
                    .collect()
            })
            .collect();
        HopfFileV1 {
            format: HOPF_FORMAT.into(),
            conventions: Conventions::default(),
            field: h.field(),
            dim: n,
            labels: h.labels().to_vec(),
            mult,
            unit: h.unit().iter().map(enc).collect(),
            comult,
            counit: h.counit().iter().map(enc).collect(),
            antipode: encode_matrix(h.antipode(), &f),
        }
    }

    /// Shape and scalar checks only; axioms are left to [`build_validate`].
    pub fn to_raw(&self) -> Result<RawHopf> {
        if self.format != HOPF_FORMAT {
            return Err(Error::Schema(format!(
                "format: expected {HOPF_FORMAT:?}, found {:?}",
                self.format
            )));
        }
        if self.conventions != Conventions::default() {
            return Err(Error::Schema(
                "conventions: unsupported index conventions".into(),
            ));
        }
        let n = self.dim;
        let f = field_handle(self.field);
        let count = |path: &str, found: usize| {
            if found == n {
                Ok(())
            } else {
                Err(Error::Schema(format!(
                    "{path}: expected {n} entries, found {found}"
                )))
            }
        };
        count("labels", self.labels.len())?;
        count("mult", self.mult.len())?;
        count("comult", self.comult.len())?;
        let mut mult = Vec::with_capacity(n * n);
        for (i, row) in self.mult.iter().enumerate() {
            count(&format!("mult[{i}]"), row.len())?;
            for v in decode_rows(row, n, &f, &format!("mult[{i}]"))? {
                mult.push(SparseVec::from_dense(&v));
            }
        }
        let mut comult = Vec::with_capacity(n);
        for (k, terms) in self.comult.iter().enumerate() {
            let mut v = SparseVec::new();
            for (t, (c, i, j)) in terms.iter().enumerate() {
                if *i >= n || *j >= n {
                    return Err(Error::Schema(format!(
                        "comult[{k}][{t}]: index out of range for dim {n}"
                    )));
                }
                v.add_term(
                    i * n + j,
                    &scalar(c, &f, || format!("comult[{k}][{t}][0]"))?,
                );
            }
            comult.push(v);
        }
        let vector = |path: &str, vals: &[Value]| -> Result<Vec<Scalar>> {
            count(path, vals.len())?;
            vals.iter()
                .enumerate()
                .map(|(i, v)| scalar(v, &f, || format!("{path}[{i}]")))
                .collect()
        };
        Ok(RawHopf {
            field: self.field,
            labels: self.labels.clone(),
            mult,
            unit: vector("unit", &self.unit)?,
            comult,
            counit: vector("counit", &self.counit)?,
            antipode: decode_matrix(&self.antipode, (n, n), &f, "antipode")?,
        })
    }

    pub fn to_algebra(&self) -> Result<HopfAlgebra> {
        Ok(build_validate(self.to_raw()?)?)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

pub fn parse_hopf(text: &str) -> Result<HopfAlgebra> {
    from_json::<HopfFileV1>(text)?.to_algebra()
}

pub fn load_hopf(path: impl AsRef<Path>) -> Result<HopfAlgebra> {
    parse_hopf(&read(path.as_ref())?)
}

pub fn save_hopf(h: &HopfAlgebra, path: impl AsRef<Path>) -> Result<()> {
    write(path.as_ref(), &HopfFileV1::from_algebra(h).to_json())
}
