use rayon::prelude::*;

use crate::duality::{ExactSequenceWitness, Normality};
use crate::error::{Error, Result};
use crate::hopfcore::Hopf;
use crate::isothms::Subquotient;
use crate::lattice::{normality_in, Picture, QuantumSubgroup};

/// `G = G₀ ▷ G₁ ▷ … ▷ G_k = 1`, every step proper and verified normal.
#[derive(Clone, Debug)]
pub struct SubnormalSeries {
    chain: Vec<QuantumSubgroup>,
    links: Vec<ExactSequenceWitness>,
    normal_in_ambient: Vec<bool>,
    factors: Vec<Subquotient>,
}

impl SubnormalSeries {
    pub fn ambient(&self) -> &Hopf {
        self.chain[0].ambient()
    }

    pub fn picture(&self) -> Picture {
        self.chain[0].picture()
    }

    pub fn chain(&self) -> &[QuantumSubgroup] {
        &self.chain
    }

    /// Number of factors `k`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exact sequence for `G_i ⊴ G_{i-1}`, indexed by `i - 1`.
    pub fn links(&self) -> &[ExactSequenceWitness] {
        &self.links
    }

    /// Whether `G_i ⊴ G`, indexed by `i`.
    pub fn normal_in_ambient(&self) -> &[bool] {
        &self.normal_in_ambient
    }

    pub fn is_normal_series(&self) -> bool {
        self.normal_in_ambient.iter().all(|&b| b)
    }

    /// `G_{i-1} / G_i`, indexed by `i - 1`.
    pub fn factors(&self) -> &[Subquotient] {
        &self.factors
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(Subquotient::dim).collect()
    }
}

fn invalid(link: usize, reason: impl Into<String>) -> Error {
    Error::InvalidSeries {
        link,
        reason: reason.into(),
        witness: None,
    }
}

/// Checks a chain running from the whole ambient down to the trivial
/// subgroup, one proper normal step at a time.
pub fn validate_series(chain: &[QuantumSubgroup]) -> Result<SubnormalSeries> {
    let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
        return Err(invalid(0, "empty chain"));
    };
    for x in &chain[1..] {
        first.same_frame(x)?;
    }
    if !first.is_whole() {
        return Err(invalid(0, "chain does not start at the ambient"));
    }
    if !last.is_trivial() {
        return Err(invalid(
            chain.len() - 1,
            "chain does not end at the trivial subgroup",
        ));
    }
    let links: Vec<(ExactSequenceWitness, Subquotient)> = (1..chain.len())
        .into_par_iter()
        .map(|i| {
            let (upper, lower) = (&chain[i - 1], &chain[i]);
            if upper == lower {
                return Err(invalid(i, "repeated term"));
            }
            let witness = match normality_in(lower, upper) {
                Ok(Normality::Normal(w)) => *w,
                Ok(Normality::NotNormal(r)) => {
                    return Err(Error::InvalidSeries {
                        link: i,
                        reason: r.reason,
                        witness: r.ad_witness.map(Box::new),
                    })
                }
                Err(Error::NotContained(_)) => {
                    return Err(invalid(i, "term is not contained in its predecessor"))
                }
                Err(e) => return Err(e),
            };
            Ok((witness, Subquotient::new(upper, lower)?))
        })
        .collect::<Result<_>>()?;
    let (links, factors) = links.into_iter().unzip();
    Ok(SubnormalSeries {
        normal_in_ambient: chain.iter().map(QuantumSubgroup::is_normal).collect(),
        chain: chain.to_vec(),
        links,
        factors,
    })
}
