use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactalg::serial::field_handle;
use crate::exactalg::Subspace;
use crate::hopfcore::{Hopf, HopfAlgebra, StructuredMap};
use crate::isothms::{IsoCertificate, Subquotient, Theorem};
use crate::lattice::{Picture, QuantumSubgroup};
use crate::series::{validate_series, SeriesEquivalenceCertificate, SubnormalSeries};

use super::{
    decode_matrix, decode_rows, encode_matrix, encode_rows, from_json, read, to_json, write,
    HopfFileV1,
};

pub const CERT_FORMAT: &str = "qlattice-cert-v1";

type Basis = Vec<Vec<Value>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Iso,
    SeriesEquivalence,
}

/// A Hopf algebra, with the subgroups `top ≥ bottom` of the ambient that
/// present it as `top/bottom` when it is a subquotient.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorRecord {
    pub algebra: HopfFileV1,
    pub top: Option<Basis>,
    pub bottom: Option<Basis>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsoRecord {
    pub theorem: Theorem,
    pub source: FactorRecord,
    pub target: FactorRecord,
    /// `target.dim × source.dim`, column `c` is the image of basis vector `c`.
    pub matrix: Basis,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesRecord {
    pub first: Vec<Basis>,
    pub second: Vec<Basis>,
    pub refined_first: Vec<Basis>,
    pub refined_second: Vec<Basis>,
    /// `pairing[f]`: factor of `refined_second` matched with factor `f` of `refined_first`.
    pub pairing: Vec<usize>,
}

/// The `qlattice-cert-v1` document. Subgroups are given by the bases of
/// their presenting subspaces (kernels in `QG`, subalgebras in `DQG`).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFileV1 {
    pub format: String,
    pub kind: CertificateKind,
    pub picture: Picture,
    pub ambient: HopfFileV1,
    pub isos: Vec<IsoRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn record(&mut self, check: impl Into<String>, ok: bool) -> bool {
        self.checks.push(Check {
            check: check.into(),
            ok,
        });
        ok
    }
}

fn basis(s: &Subspace, h: &HopfAlgebra) -> Basis {
    encode_rows(
        s.basis_vectors().map(<[_]>::to_vec),
        &field_handle(h.field()),
    )
}

fn factor(
    algebra: &HopfAlgebra,
    ambient: &HopfAlgebra,
    presented: Option<&Subquotient>,
) -> FactorRecord {
    FactorRecord {
        algebra: HopfFileV1::from_algebra(algebra),
        top: presented.map(|s| basis(s.top.space(), ambient)),
        bottom: presented.map(|s| basis(s.bottom.space(), ambient)),
    }
}

fn iso_record(
    cert: &IsoCertificate,
    ambient: &HopfAlgebra,
    s: Option<&Subquotient>,
    t: Option<&Subquotient>,
) -> IsoRecord {
    IsoRecord {
        theorem: cert.theorem(),
        source: factor(cert.source(), ambient, s),
        target: factor(cert.target(), ambient, t),
        matrix: encode_matrix(cert.map().matrix(), &field_handle(ambient.field())),
    }
}

impl CertificateFileV1 {
    /// `source`/`target` name the subquotients of `ambient` the isomorphism
    /// connects, when it connects subquotients.
    pub fn from_iso(
        ambient: &HopfAlgebra,
        picture: Picture,
        cert: &IsoCertificate,
        source: Option<&Subquotient>,
        target: Option<&Subquotient>,
    ) -> Self {
        CertificateFileV1 {
            format: CERT_FORMAT.into(),
            kind: CertificateKind::Iso,
            picture,
            ambient: HopfFileV1::from_algebra(ambient),
            isos: vec![iso_record(cert, ambient, source, target)],
            series: None,
        }
    }

    pub fn from_series(
        first: &SubnormalSeries,
        second: &SubnormalSeries,
        cert: &SeriesEquivalenceCertificate,
    ) -> Self {
        let amb = first.ambient();
        let bases = |c: &[QuantumSubgroup]| c.iter().map(|x| basis(x.space(), amb)).collect();
        let isos = cert
            .isos
            .iter()
            .enumerate()
            .map(|(f, iso)| {
                iso_record(
                    iso,
                    amb,
                    Some(&cert.first.factors[f]),
                    Some(&cert.second.factors[cert.pairing[f]]),
                )
            })
            .collect();
        CertificateFileV1 {
            format: CERT_FORMAT.into(),
            kind: CertificateKind::SeriesEquivalence,
            picture: first.picture(),
            ambient: HopfFileV1::from_algebra(amb),
            isos,
            series: Some(SeriesRecord {
                first: bases(first.chain()),
                second: bases(second.chain()),
                refined_first: bases(&cert.first.chain),
                refined_second: bases(&cert.second.chain),
                pairing: cert.pairing.clone(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let c: CertificateFileV1 = from_json(text)?;
        if c.format != CERT_FORMAT {
            return Err(Error::Schema(format!(
                "format: expected {CERT_FORMAT:?}, found {:?}",
                c.format
            )));
        }
        Ok(c)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&read(path.as_ref())?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        write(path.as_ref(), &self.to_json())
    }

    /// Rebuilds every algebra from its tables and every subquotient from the
    /// ambient, then rechecks each map and the series bookkeeping. Schema
    /// and axiom failures are errors; mathematical failures are reported.
    pub fn verify(&self) -> Result<VerifyReport> {
        let ambient: Hopf = Arc::new(self.ambient.to_algebra()?);
        let f = field_handle(ambient.field());
        let space = |b: &Basis, path: &str| -> Result<Subspace> {
            Ok(Subspace::from_vectors(
                ambient.dim(),
                decode_rows(b, ambient.dim(), &f, path)?,
            ))
        };
        let subgroup = |b: &Basis, path: &str| -> Result<Option<QuantumSubgroup>> {
            Ok(QuantumSubgroup::new(&ambient, self.picture, space(b, path)?).ok())
        };
        let mut report = VerifyReport::default();
        let mut presented = Vec::new();
        for (i, iso) in self.isos.iter().enumerate() {
            let src: Hopf = Arc::new(iso.source.algebra.to_algebra()?);
            let tgt: Hopf = Arc::new(iso.target.algebra.to_algebra()?);
            let m = decode_matrix(
                &iso.matrix,
                (tgt.dim(), src.dim()),
                &f,
                &format!("isos[{i}].matrix"),
            )?;
            let map = StructuredMap::new(src.clone(), tgt.clone(), m);
            report.record(
                format!("isos[{i}]: bijective Hopf algebra map"),
                map.flags().is_hopf_iso(),
            );
            let mut ends = Vec::new();
            for (side, rec, alg) in [("source", &iso.source, &src), ("target", &iso.target, &tgt)] {
                let (Some(top), Some(bottom)) = (&rec.top, &rec.bottom) else {
                    ends.push(None);
                    continue;
                };
                let path = format!("isos[{i}].{side}");
                let pair = (
                    space(top, &format!("{path}.top"))?,
                    space(bottom, &format!("{path}.bottom"))?,
                );
                let rebuilt = match (subgroup(top, &path)?, subgroup(bottom, &path)?) {
                    (Some(t), Some(b)) => Subquotient::new(&t, &b).ok(),
                    _ => None,
                };
                report.record(
                    format!("{path}: presented subquotient of the ambient"),
                    rebuilt.is_some_and(|s| s.algebra.same_structure(alg)),
                );
                ends.push(Some(pair));
            }
            presented.push(ends);
        }
        if let Some(s) = &self.series {
            let chain = |bs: &[Basis], name: &str| -> Result<Option<Vec<QuantumSubgroup>>> {
                let mut out = Vec::new();
                for (k, b) in bs.iter().enumerate() {
                    match subgroup(b, &format!("series.{name}[{k}]"))? {
                        Some(x) => out.push(x),
                        None => return Ok(None),
                    }
                }
                Ok(Some(out))
            };
            let mut chains = Vec::new();
            for (name, bs) in [
                ("first", &s.first),
                ("second", &s.second),
                ("refined_first", &s.refined_first),
                ("refined_second", &s.refined_second),
            ] {
                let c = chain(bs, name)?.filter(|c| validate_series(c).is_ok());
                report.record(
                    format!("series.{name}: valid subnormal series"),
                    c.is_some(),
                );
                chains.push(c.unwrap_or_default());
            }
            let [first, second, r1, r2] =
                <[Vec<QuantumSubgroup>; 4]>::try_from(chains).expect("four chains");
            report.record(
                "series: first refines to refined_first",
                first.iter().all(|x| r1.contains(x)),
            );
            report.record(
                "series: second refines to refined_second",
                second.iter().all(|x| r2.contains(x)),
            );
            let n = s.pairing.len();
            let lengths = r1.len() == n + 1 && r2.len() == n + 1 && self.isos.len() == n;
            report.record("series: refinements and pairing have equal length", lengths);
            let mut seen = vec![false; n];
            let bijective = s
                .pairing
                .iter()
                .all(|&p| p < n && !std::mem::replace(&mut seen[p], true));
            report.record("series: pairing is a bijection", bijective);
            if lengths && bijective {
                for (k, &p) in s.pairing.iter().enumerate() {
                    let want = |c: &[QuantumSubgroup], at: usize| {
                        Some((c[at].space().clone(), c[at + 1].space().clone()))
                    };
                    let ok = presented[k][0] == want(&r1, k) && presented[k][1] == want(&r2, p);
                    report.record(
                        format!("isos[{k}]: connects factor {k} with paired factor {p}"),
                        ok,
                    );
                }
            }
        }
        report.valid = report.checks.iter().all(|c| c.ok);
        Ok(report)
    }
}
