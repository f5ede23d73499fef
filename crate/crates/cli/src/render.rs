use qlattice::error::Error;
use qlattice::exactalg::serial::{encode_scalar, field_handle};
use qlattice::exactalg::{Matrix, Scalar, Subspace};
use qlattice::hopfcore::HopfAlgebra;
use qlattice::io::SubspaceFileV1;
use qlattice::lattice::QuantumSubgroup;
use serde_json::{json, Value};

pub fn vector(h: &HopfAlgebra, v: &[Scalar]) -> Value {
    let f = field_handle(h.field());
    Value::Array(v.iter().map(|s| encode_scalar(s, &f)).collect())
}

pub fn matrix(h: &HopfAlgebra, m: &Matrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| vector(h, r)).collect())
}

pub fn subspace(h: &HopfAlgebra, s: &Subspace) -> Value {
    serde_json::to_value(SubspaceFileV1::from_subspace(s, h.field())).expect("json")
}

pub fn subgroup(q: &QuantumSubgroup) -> Value {
    json!({ "dim": q.dim(), "space": subspace(q.ambient(), q.space()) })
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Axioms(_) => "axioms",
        Error::Ambient(_) => "ambient-mismatch",
        Error::NotHopfIdeal(_) => "not-hopf-ideal",
        Error::NotHopfSubalgebra(_) => "not-hopf-subalgebra",
        Error::NotCoidealSubalgebra(_) => "not-coideal-subalgebra",
        Error::NotNormal(_) => "not-normal",
        Error::NotContained(_) => "not-contained",
        Error::PictureMismatch(_) => "picture-mismatch",
        Error::NotCosemisimple => "not-cosemisimple",
        Error::IntegralDimension(_) => "integral-dimension",
        Error::InvalidSeries { .. } => "invalid-series",
        Error::NotComposition { .. } => "not-composition",
        Error::Unsupported(_) => "unsupported",
        Error::DescentFailure(_) => "descent-failure",
        Error::TheoremViolation(_) => "theorem-violation",
        Error::Io(_) => "io",
        Error::Schema(_) => "schema",
    }
}
