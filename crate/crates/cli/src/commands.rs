use std::path::Path;

use qlattice::corpus::all_corpus;
use qlattice::duality::{
    cd_of_quotient, cd_of_subalgebra, largest_cocommutative, Normality, QuotientMap,
};
use qlattice::error::{Error, Result};
use qlattice::hopfcore::{self, format_combination};
use qlattice::integrals;
use qlattice::io::{CertificateFileV1, HopfFileV1};
use qlattice::isothms::{self, Subquotient};
use qlattice::lattice::{
    check_modular_law, enumerate_subgroups, join, meet, modular_survey, normality_in,
    ModularChecker, ModularMode, Picture, QuantumSubgroup,
};
use qlattice::series::{self, enumerable_subgroups, validate_series};
use serde_json::{json, Value};

use crate::input::{self, Ambient};
use crate::render;
use crate::Outcome;

fn frame(algebra: &str, picture: Option<Picture>) -> Result<(Ambient, Picture)> {
    let a = input::algebra(algebra)?;
    let p = input::picture(&a, picture);
    Ok((a, p))
}

fn certify(path: Option<&Path>, cert: Option<CertificateFileV1>) -> Result<Value> {
    match (path, cert) {
        (Some(p), Some(c)) => {
            c.save(p)?;
            Ok(json!(p.display().to_string()))
        }
        _ => Ok(Value::Null),
    }
}

pub fn validate(algebra: &str) -> Result<Outcome> {
    let a = input::algebra(algebra)?;
    Ok(json!({ "valid": true, "dim": a.hopf.dim(), "labels": a.hopf.labels() }).into())
}

pub fn info(algebra: &str) -> Result<Outcome> {
    let h = input::algebra(algebra)?.hopf;
    let ints = integrals::integral(&h).ok();
    let g = hopfcore::grouplikes(&h);
    Ok(json!({
        "dim": h.dim(),
        "field": h.field(),
        "labels": h.labels(),
        "commutative": h.is_commutative(),
        "cocommutative": h.is_cocommutative(),
        "semisimple": ints.as_ref().map(|d| d.semisimple),
        "cosemisimple": ints.as_ref().map(|d| d.cosemisimple),
        "grouplikes": g.len(),
    })
    .into())
}

pub fn export(algebra: &str, out: Option<&Path>, dual: bool) -> Result<Outcome> {
    let h = input::algebra(algebra)?.hopf;
    let file = HopfFileV1::from_algebra(&if dual {
        hopfcore::dual(&h)
    } else {
        (*h).clone()
    });
    match out {
        Some(p) => {
            std::fs::write(p, file.to_json())
                .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            Ok(json!({ "dim": file.dim, "written": p.display().to_string() }).into())
        }
        None => Ok(serde_json::to_value(&file).expect("json").into()),
    }
}

pub fn grouplikes(algebra: &str) -> Result<Outcome> {
    let h = input::algebra(algebra)?.hopf;
    let g = hopfcore::grouplikes(&h);
    let elements: Vec<String> = g
        .elements
        .iter()
        .map(|e| format_combination(h.labels(), e.coords()))
        .collect();
    Ok(json!({
        "count": g.len(),
        "complete": g.complete,
        "elements": elements,
        "table": g.multiplication_table(),
    })
    .into())
}

pub fn cd(algebra: &str, picture: Option<Picture>, spec: &str) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    let x = input::subgroup(&a, p, spec)?;
    let h = &a.hopf;
    let body = match p {
        Picture::Qg => {
            let sub = cd_of_quotient(x.quotient().expect("Qg subgroup"));
            json!({ "picture": p, "kernel": render::subgroup(&x), "subalgebra": render::subspace(h, &sub) })
        }
        Picture::Dqg => {
            let q = cd_of_subalgebra(h, x.space())?;
            json!({
                "picture": p,
                "subalgebra": render::subgroup(&x),
                "kernel": render::subspace(h, q.kernel()),
                "quotient_dim": q.dim(),
                "hopf_quotient": q.is_hopf(),
            })
        }
    };
    Ok(body.into())
}

pub fn normal(algebra: &str, picture: Option<Picture>, spec: &str) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    let x = input::subgroup(&a, p, spec)?;
    let body = match normality_in(&x, &QuantumSubgroup::whole(&a.hopf, p))? {
        Normality::Normal(w) => json!({
            "normal": true,
            "quotient_dim": w.quot.dim(),
            "exact": w.is_valid(),
        }),
        Normality::NotNormal(r) => json!({
            "normal": false,
            "reason": r.reason,
            "witness": r.ad_witness.map(|w| json!({
                "x": w.x_label,
                "a": format_combination(a.hopf.labels(), &w.a),
                "image": format_combination(a.hopf.labels(), &w.image),
            })),
        }),
    };
    Ok(body.into())
}

pub fn lattice_op(
    algebra: &str,
    picture: Option<Picture>,
    specs: &[String],
    is_meet: bool,
) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    let [x, y] = input::subgroups::<2>(&a, p, specs)?;
    let z = if is_meet {
        meet(&x, &y)?
    } else {
        join(&x, &y)?
    };
    Ok(json!({ "picture": p, "result": render::subgroup(&z) }).into())
}

pub fn cocomm_max(algebra: &str) -> Result<Outcome> {
    let h = input::algebra(algebra)?.hopf;
    Ok(json!({ "dim": largest_cocommutative(&h)?.dim() }).into())
}

pub fn haar(algebra: &str) -> Result<Outcome> {
    let h = input::algebra(algebra)?.hopf;
    let d = integrals::integral(&h)?;
    Ok(json!({
        "semisimple": d.semisimple,
        "cosemisimple": d.cosemisimple,
        "left_integral": render::vector(&h, &d.left_integral),
        "haar": d.cosemisimple.then(|| render::vector(&h, &d.haar_functional)),
    })
    .into())
}

pub fn expectation(algebra: &str, picture: Option<Picture>, spec: &str) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    if p != Picture::Qg {
        return Err(Error::PictureMismatch(
            "expectations are taken onto quotients; use --picture qg".into(),
        ));
    }
    let k = input::subgroup(&a, p, spec)?;
    let e = integrals::expectation(k.quotient().expect("Qg subgroup"))?;
    let m = e.matrix();
    Ok(json!({
        "matrix": render::matrix(&a.hopf, m),
        "rank": m.rank(),
        "idempotent": m.mul(m) == *m,
    })
    .into())
}

pub fn second_iso(
    algebra: &str,
    picture: Option<Picture>,
    specs: &[String],
    out: Option<&Path>,
) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    let [h, k] = input::subgroups::<2>(&a, p, specs)?;
    let s = isothms::second_iso(&h, &k)?;
    let cert = s
        .certificate
        .as_ref()
        .map(|c| CertificateFileV1::from_iso(&a.hopf, p, c, Some(&s.source), Some(&s.target)));
    Ok(json!({
        "picture": p,
        "meet_dim": s.meet.dim(),
        "source_dim": s.source.dim(),
        "target_dim": s.target.dim(),
        "generation": s.generation,
        "injective": s.injective,
        "surjective": s.surjective,
        "isomorphism": s.certificate.is_some(),
        "certificate": certify(out, cert)?,
    })
    .into())
}

pub fn third_iso(
    algebra: &str,
    picture: Option<Picture>,
    specs: &[String],
    out: Option<&Path>,
) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    let [n, h] = input::subgroups::<2>(&a, p, specs)?;
    let t = isothms::third_iso(&n, &h)?;
    let target = Subquotient::new(&QuantumSubgroup::whole(&a.hopf, p), &h)?;
    let cert = CertificateFileV1::from_iso(&a.hopf, p, &t.certificate, None, Some(&target));
    Ok(json!({
        "picture": p,
        "double_quotient_dim": t.double_quotient.dim(),
        "quotient_dim": t.quotient.dim(),
        "certificate": certify(out, Some(cert))?,
    })
    .into())
}

pub fn zassenhaus(
    algebra: &str,
    picture: Option<Picture>,
    specs: &[String],
    out: Option<&Path>,
) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    let [x, x1, y, y1] = input::subgroups::<4>(&a, p, specs)?;
    let z = isothms::zassenhaus(&x, &x1, &y, &y1)?;
    let cert =
        CertificateFileV1::from_iso(&a.hopf, p, &z.certificate, Some(&z.left), Some(&z.right));
    let n = &z.nodes;
    Ok(json!({
        "picture": p,
        "left_dim": z.left.dim(),
        "middle_dim": z.middle.dim(),
        "right_dim": z.right.dim(),
        "modular_identity": z.modular_identity,
        "node_dims": {
            "meet": n.meet.dim(),
            "left_top": n.left_top.dim(),
            "left_bottom": n.left_bottom.dim(),
            "right_top": n.right_top.dim(),
            "right_bottom": n.right_bottom.dim(),
            "middle_bottom": n.middle_bottom.dim(),
        },
        "certificate": certify(out, Some(cert))?,
    })
    .into())
}

fn series_json(s: &series::SubnormalSeries) -> Value {
    json!({ "length": s.len(), "factor_dims": s.factor_dims(), "normal_series": s.is_normal_series() })
}

pub fn refine(
    algebra: &str,
    picture: Option<Picture>,
    chains: &[String],
    out: Option<&Path>,
    composition: bool,
) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    let [c1, c2] = <[&String; 2]>::try_from(chains.iter().collect::<Vec<_>>())
        .map_err(|v| Error::Schema(format!("expected 2 --chain arguments, found {}", v.len())))?;
    let s1 = validate_series(&input::chain(&a, p, c1)?)?;
    let s2 = validate_series(&input::chain(&a, p, c2)?)?;
    let mut maximality = Value::Null;
    let cert = if composition {
        let candidates = match enumerable_subgroups(&a.hopf, p) {
            Ok(c) => {
                maximality = json!("lattice");
                c
            }
            Err(Error::Unsupported(_)) => {
                maximality = json!("chain-terms");
                s1.chain().iter().chain(s2.chain()).cloned().collect()
            }
            Err(e) => return Err(e),
        };
        series::jordan_holder(&s1, &s2, &candidates)?
    } else {
        series::schreier_refine(&s1, &s2)?
    };
    let file = CertificateFileV1::from_series(&s1, &s2, &cert);
    Ok(json!({
        "picture": p,
        "first": series_json(&s1),
        "second": series_json(&s2),
        "refined_length": cert.len(),
        "factor_dims": cert.first.factor_dims(),
        "paired_factor_dims": cert.pairing.iter().map(|&q| cert.second.factors[q].dim()).collect::<Vec<_>>(),
        "pairing": cert.pairing,
        "maximality_checked_against": maximality,
        "verified": cert.verify(),
        "certificate": certify(out, Some(file))?,
    })
    .into())
}

pub fn modular(
    algebra: &str,
    picture: Option<Picture>,
    specs: &[String],
    survey: bool,
) -> Result<Outcome> {
    let (a, p) = frame(algebra, picture)?;
    let [h, l, m] = input::subgroups::<3>(&a, p, specs)?;
    let mode = if survey {
        ModularMode::Survey
    } else {
        ModularMode::Theorem
    };
    let r = check_modular_law(&h, &l, &m, mode)?;
    Ok(json!({
        "picture": p,
        "equal": r.equal,
        "lhs_dim": r.lhs.dim(),
        "rhs_dim": r.rhs.dim(),
        "m_normal": r.m_normal,
        "l_normalizes_m": r.l_normalizes_m,
        "cosemisimple": r.cosemisimple,
        "hypotheses_hold": r.hypotheses_hold(),
    })
    .into())
}

pub fn corpus(survey: bool) -> Result<Outcome> {
    let mut algebras = Vec::new();
    let mut surveys = Vec::new();
    let mut violation = false;
    for (name, h) in all_corpus() {
        algebras.push(json!({
            "name": name,
            "dim": h.dim(),
            "commutative": h.is_commutative(),
            "cocommutative": h.is_cocommutative(),
        }));
        let Some((g, r)) = qlattice::corpus::realization(&name).filter(|_| survey && name != "k")
        else {
            continue;
        };
        let p = match r {
            qlattice::corpus::Realization::GroupAlgebra => Picture::Dqg,
            qlattice::corpus::Realization::FunctionAlgebra => Picture::Qg,
        };
        let subs = enumerate_subgroups(&h, p, Some((&g, r)))?;
        let s = modular_survey(&ModularChecker::new(&h), &subs)?;
        violation |= !s.violations.is_empty();
        surveys.push(json!({
            "name": name,
            "picture": p,
            "subgroups": s.subgroups,
            "triples": s.triples,
            "equal": s.equal,
            "with_hypotheses": s.with_hypotheses,
            "violations": s.violations.len(),
            "unconstrained_failures": s.unconstrained_failures.len(),
            "first_unconstrained_failure": s.unconstrained_failures.first().map(|&(i, j, k)| {
                json!({ "h_dim": subs[i].dim(), "l_dim": subs[j].dim(), "m_dim": subs[k].dim() })
            }),
        }));
    }
    let mut body = json!({ "algebras": algebras });
    if survey {
        body["modular_survey"] = Value::Array(surveys);
    }
    Ok(Outcome { body, violation })
}

pub fn verify_cert(path: &Path) -> Result<Outcome> {
    let report = CertificateFileV1::load(path)?.verify()?;
    let violation = !report.valid;
    Ok(Outcome {
        body: serde_json::to_value(&report).expect("json"),
        violation,
    })
}
