use crate::error::{Error, Result};
use crate::exactalg::{EchelonBuilder, Scalar, SparseVec, Subspace};
use crate::hopfcore::Hopf;
use crate::subobj::{classify, minus_part, quotient_by_hopf_ideal, QuotientPresentation};

use super::adjoint::{ad_invariance, AdSide, AdWitness};
use super::codual::cd_of_quotient;

/// `k → A → H → C → k` with every exactness check recorded.
#[derive(Clone, Debug)]
pub struct ExactSequenceWitness {
    pub ambient: Hopf,
    pub sub: Subspace,
    pub quot: QuotientPresentation,
    /// `cd(π) = A`
    pub cd_matches: bool,
    /// `HA⁻ = ker π`
    pub kernel_matches: bool,
    /// `A⁻H = HA⁻`
    pub sides_agree: bool,
}

impl ExactSequenceWitness {
    pub fn is_valid(&self) -> bool {
        self.cd_matches && self.kernel_matches && self.sides_agree
    }
}

#[derive(Clone, Debug)]
pub struct NotNormalReport {
    pub reason: String,
    pub ad_witness: Option<AdWitness>,
}

#[derive(Clone, Debug)]
pub enum Normality {
    Normal(Box<ExactSequenceWitness>),
    NotNormal(NotNormalReport),
}

impl Normality {
    pub fn is_normal(&self) -> bool {
        matches!(self, Normality::Normal(_))
    }

    pub fn witness(&self) -> Option<&ExactSequenceWitness> {
        match self {
            Normality::Normal(w) => Some(w),
            Normality::NotNormal(_) => None,
        }
    }
}

pub enum NormalityInput<'a> {
    Subalgebra(&'a Subspace),
    Quotient(&'a QuotientPresentation),
}

fn span_products(h: &Hopf, gens: &Subspace, left: bool) -> Subspace {
    let n = h.dim();
    let mut b = EchelonBuilder::new(n);
    for g in gens.basis_vectors() {
        let g = SparseVec::from_dense(g);
        for i in 0..n {
            let v = if left {
                h.left_mul_basis(i, &g)
            } else {
                h.right_mul_basis(&g, i)
            };
            b.insert(v.to_dense(n));
        }
    }
    b.finish()
}

fn not_normal(reason: impl Into<String>, ad_witness: Option<AdWitness>) -> Normality {
    Normality::NotNormal(NotNormalReport {
        reason: reason.into(),
        ad_witness,
    })
}

fn subalgebra_normality(h: &Hopf, a: &Subspace) -> Result<Normality> {
    if !classify(h, a).hopf_subalgebra() {
        return Ok(not_normal("not a Hopf subalgebra", None));
    }
    for side in [AdSide::Right, AdSide::Left] {
        let inv = ad_invariance(h, a, side);
        if !inv.invariant {
            return Ok(not_normal(
                format!(
                    "not invariant under the {} adjoint action",
                    format!("{side:?}").to_lowercase()
                ),
                inv.witness,
            ));
        }
    }
    let minus = minus_part(h, a);
    let left_ideal = span_products(h, &minus, true);
    let right_ideal = span_products(h, &minus, false);
    let quot = quotient_by_hopf_ideal(h, &left_ideal)?;
    let w = ExactSequenceWitness {
        ambient: h.clone(),
        sub: a.clone(),
        cd_matches: cd_of_quotient(&quot) == *a,
        kernel_matches: quot.ideal == left_ideal,
        sides_agree: left_ideal == right_ideal,
        quot,
    };
    if !w.is_valid() {
        return Err(Error::TheoremViolation(
            "ad-invariant Hopf subalgebra without an exact sequence".into(),
        ));
    }
    Ok(Normality::Normal(Box::new(w)))
}

pub fn normality(h: &Hopf, x: NormalityInput<'_>) -> Result<Normality> {
    match x {
        NormalityInput::Subalgebra(a) => subalgebra_normality(h, a),
        NormalityInput::Quotient(q) => {
            let a = cd_of_quotient(q);
            match subalgebra_normality(h, &a)? {
                Normality::Normal(w) if w.quot.ideal == q.ideal => {
                    Ok(Normality::Normal(Box::new(ExactSequenceWitness {
                        quot: q.clone(),
                        ..*w
                    })))
                }
                Normality::Normal(_) => Ok(not_normal("cd(cd(π)) differs from π", None)),
                Normality::NotNormal(r) => {
                    Ok(not_normal(format!("cd(π) is {}", r.reason), r.ad_witness))
                }
            }
        }
    }
}

/// Kernel of `x ↦ (id⊗(Δ−Δᵒᵖ))Δ(x)`, verified to be a Hopf subalgebra.
pub fn largest_cocommutative(h: &Hopf) -> Result<Subspace> {
    let n = h.dim();
    if h.is_cocommutative() {
        return Ok(Subspace::full(n));
    }
    let skew: Vec<SparseVec> = (0..n)
        .map(|k| {
            let mut v = h.comult_basis(k).clone();
            v.axpy(&Scalar::from_int(-1), &h.comult_op_basis(k));
            v
        })
        .collect();
    let nn = n * n;
    let m = Subspace::full(n).kernel_of(|x| {
        let mut out = SparseVec::new();
        for (p, c) in h.comult_of(x).iter() {
            for (q, y) in skew[p % n].iter() {
                out.add_term((p / n) * nn + q, &(c * y));
            }
        }
        out
    });
    if !classify(h, &m).hopf_subalgebra() {
        return Err(Error::TheoremViolation(
            "cocommutative part is not a Hopf subalgebra".into(),
        ));
    }
    Ok(m)
}
