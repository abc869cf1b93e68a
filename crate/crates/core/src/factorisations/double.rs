use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::monotone::{enumerate_monotone_length, MonotoneCounts};
use crate::error::{Error, Result};
use crate::perm::{check_degree, product_of, Permutation, TotalOrder, Transposition};

/// `c(ω) - 1 + 2g`, the tail length.
pub fn md_length(target: &Permutation, genus: u32) -> usize {
    target.num_cycles() - 1 + 2 * genus as usize
}

pub fn md_genus(target: &Permutation, length: usize) -> Option<u32> {
    let base = target.num_cycles() - 1;
    if length < base || !(length - base).is_multiple_of(2) {
        None
    } else {
        Some(((length - base) / 2) as u32)
    }
}

/// `σ τ_1 ⋯ τ_m = ω` with `σ` a full cycle and the tail monotone under the
/// natural order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonotoneDoubleFactorisation {
    pub n: usize,
    pub sigma: Permutation,
    pub factors: Vec<Transposition>,
    pub target: Permutation,
    pub genus: u32,
}

impl MonotoneDoubleFactorisation {
    /// Validates H0, H2, the product and H1, in that order.
    pub fn new(target: Permutation, sigma: Permutation, factors: Vec<Transposition>) -> Result<Self> {
        let n = target.degree();
        if sigma.degree() != n {
            return Err(Error::DegreeMismatch { left: n, right: sigma.degree() });
        }
        if let Some(t) = factors.iter().find(|t| t.hi() > n) {
            return Err(Error::SymbolOutOfRange { symbol: t.hi(), n });
        }
        if !sigma.is_full_cycle() {
            return Err(Error::Condition {
                condition: "H0",
                detail: format!("{sigma} is not an {n}-cycle"),
            });
        }
        if !TotalOrder::natural(n).is_monotone(&factors) {
            return Err(Error::Condition {
                condition: "H2",
                detail: "larger symbols of the tail do not weakly increase".into(),
            });
        }
        let product = sigma.then(&product_of(n, &factors));
        if product != target {
            return Err(Error::Condition {
                condition: "product",
                detail: format!("factors multiply to {product}, not {target}"),
            });
        }
        let genus = md_genus(&target, factors.len()).ok_or_else(|| Error::Condition {
            condition: "H1",
            detail: format!("{} factors after the cycle but c({target}) = {}", factors.len(), target.num_cycles()),
        })?;
        Ok(MonotoneDoubleFactorisation {
            n,
            sigma,
            factors,
            target,
            genus,
        })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(1 2 3) (1 3)`: the cycle, then the tail.
    pub fn to_line(&self) -> String {
        let mut parts = vec![self.sigma.to_string()];
        parts.extend(self.factors.iter().map(ToString::to_string));
        parts.join(" ")
    }
}

/// `MD_g(ω)`, sorted by `σ` then by tail.
pub fn enumerate_monotone_double(target: &Permutation, genus: u32) -> Result<Vec<MonotoneDoubleFactorisation>> {
    let n = target.degree();
    check_degree(n)?;
    let m = md_length(target, genus);
    let natural = TotalOrder::natural(n);
    let mut out: Vec<MonotoneDoubleFactorisation> = Permutation::full_cycles(n)
        .into_par_iter()
        .map(|sigma| -> Result<Vec<MonotoneDoubleFactorisation>> {
            let rest = sigma.inverse().then(target);
            Ok(enumerate_monotone_length(&rest, m, &natural)?
                .into_iter()
                .map(|factors| MonotoneDoubleFactorisation {
                    n,
                    sigma,
                    factors,
                    target: *target,
                    genus,
                })
                .collect())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort();
    Ok(out)
}

/// `md_g` for every target of one degree, built on a single natural-order
/// monotone table.
pub struct MdCounts {
    cycles: Vec<Permutation>,
    table: MonotoneCounts,
}

impl MdCounts {
    pub fn new(n: usize, max_genus: u32) -> Result<Self> {
        check_degree(n)?;
        let max_len = n - 1 + 2 * max_genus as usize;
        Ok(MdCounts {
            cycles: Permutation::full_cycles(n),
            table: MonotoneCounts::natural(n, max_len)?,
        })
    }

    pub fn count(&self, target: &Permutation, genus: u32) -> BigUint {
        let len = md_length(target, genus);
        self.cycles
            .iter()
            .map(|sigma| self.table.count_length(&sigma.inverse().then(target), len))
            .sum()
    }
}

/// `md_g(ω)`.
pub fn count_md(target: &Permutation, genus: u32) -> Result<BigUint> {
    let n = target.degree();
    check_degree(n)?;
    let len = md_length(target, genus);
    let table = MonotoneCounts::natural(n, len)?;
    Ok(Permutation::full_cycles(n)
        .iter()
        .map(|sigma| table.count_length(&sigma.inverse().then(target), len))
        .sum())
}
