use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{check_degree, product_of, Permutation, TotalOrder, Transposition};

/// `n - c(ω) + 2g`.
pub fn monotone_length(target: &Permutation, genus: u32) -> usize {
    target.degree() - target.num_cycles() + 2 * genus as usize
}

pub fn monotone_genus(target: &Permutation, length: usize) -> Option<u32> {
    let base = target.degree() - target.num_cycles();
    if length < base || !(length - base).is_multiple_of(2) {
        None
    } else {
        Some(((length - base) / 2) as u32)
    }
}

/// A factorisation of `target` into transpositions whose `order`-larger
/// symbols weakly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonotoneFactorisation {
    pub n: usize,
    pub order: TotalOrder,
    pub factors: Vec<Transposition>,
    pub target: Permutation,
    pub genus: u32,
}

impl MonotoneFactorisation {
    /// Checks monotonicity under `order` and derives target and genus from
    /// the factors. Any length of the right parity has a genus; a length
    /// below `n - c(target)` cannot occur for a genuine product.
    pub fn from_factors(order: TotalOrder, factors: Vec<Transposition>) -> Result<Self> {
        let n = order.degree();
        if let Some(t) = factors.iter().find(|t| t.hi() > n) {
            return Err(Error::SymbolOutOfRange { symbol: t.hi(), n });
        }
        if !order.is_monotone(&factors) {
            return Err(Error::Condition {
                condition: "H2",
                detail: format!(
                    "larger symbols under {order} do not weakly increase in {}",
                    factors.iter().map(|t| order.display_transposition(*t)).collect::<String>()
                ),
            });
        }
        let target = product_of(n, &factors);
        let genus = monotone_genus(&target, factors.len()).expect("a product of m transpositions has n - c <= m of equal parity");
        Ok(MonotoneFactorisation {
            n,
            order,
            factors,
            target,
            genus,
        })
    }

    /// Like [`MonotoneFactorisation::from_factors`] but also insists on the
    /// product.
    pub fn new(target: Permutation, order: TotalOrder, factors: Vec<Transposition>) -> Result<Self> {
        if target.degree() != order.degree() {
            return Err(Error::DegreeMismatch {
                left: target.degree(),
                right: order.degree(),
            });
        }
        let f = MonotoneFactorisation::from_factors(order, factors)?;
        if f.target != target {
            return Err(Error::Condition {
                condition: "product",
                detail: format!("factors multiply to {}, not {target}", f.target),
            });
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors written `(a b)` with `a ≺ b`.
    pub fn to_line(&self) -> String {
        self.factors
            .iter()
            .map(|t| self.order.display_transposition(*t))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All monotone factorisations of `target` relative to `order` with exactly
/// `length` factors, sorted lexicographically by factor sequence.
pub fn enumerate_monotone_length(target: &Permutation, length: usize, order: &TotalOrder) -> Result<Vec<Vec<Transposition>>> {
    let n = target.degree();
    if order.degree() != n {
        return Err(Error::DegreeMismatch { left: n, right: order.degree() });
    }
    // candidate factors grouped by the rank of their larger symbol
    let by_rank: Vec<Vec<Transposition>> = (1..=n)
        .map(|r| {
            let b = order.at(r);
            (1..r)
                .map(|q| Transposition::new(order.at(q), b).expect("distinct"))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(length);
    monotone_dfs(n, target, &by_rank, Permutation::identity(n), 1, length, &mut stack, &mut out);
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn monotone_dfs(
    n: usize,
    target: &Permutation,
    by_rank: &[Vec<Transposition>],
    cur: Permutation,
    min_rank: usize,
    remaining: usize,
    stack: &mut Vec<Transposition>,
    out: &mut Vec<Vec<Transposition>>,
) {
    if remaining == 0 {
        if cur == *target {
            out.push(stack.clone());
        }
        return;
    }
    let dist = n - cur.inverse().then(target).num_cycles();
    if dist > remaining || !(remaining - dist).is_multiple_of(2) {
        return;
    }
    for rank in min_rank..=n {
        for &t in &by_rank[rank - 1] {
            stack.push(t);
            monotone_dfs(n, target, by_rank, cur.then_transposition(t), rank, remaining - 1, stack, out);
            stack.pop();
        }
    }
}

/// `M_g^≺(target)`: all genus-`genus` monotone factorisations relative to
/// `order`.
pub fn enumerate_monotone(target: &Permutation, genus: u32, order: &TotalOrder) -> Result<Vec<MonotoneFactorisation>> {
    let m = monotone_length(target, genus);
    Ok(enumerate_monotone_length(target, m, order)?
        .into_iter()
        .map(|factors| MonotoneFactorisation {
            n: target.degree(),
            order: order.clone(),
            factors,
            target: *target,
            genus,
        })
        .collect())
}

/// Monotone factorisation counts relative to an order, for every target and
/// every length up to a bound. The dynamic programme walks the symbols in
/// `≺`-increasing order and, at symbol `b`, appends any number of factors
/// whose larger symbol is `b`.
pub struct MonotoneCounts {
    n: usize,
    by_length: Vec<HashMap<Permutation, BigUint>>,
}

impl MonotoneCounts {
    pub fn build(order: &TotalOrder, max_len: usize) -> Result<Self> {
        let n = order.degree();
        check_degree(n)?;
        // layers[len]: prefix products of length len
        let mut layers: Vec<HashMap<Permutation, BigUint>> = vec![HashMap::new(); max_len + 1];
        layers[0].insert(Permutation::identity(n), BigUint::one());
        for rank in 2..=n {
            let b = order.at(rank);
            let factors: Vec<Transposition> = (1..rank)
                .map(|q| Transposition::new(order.at(q), b).expect("distinct"))
                .collect();
            // appending one factor with larger symbol b at a time keeps every
            // length layer closed under "more factors at the current maximum"
            for len in 0..max_len {
                let (lower, upper) = layers.split_at_mut(len + 1);
                let src = &lower[len];
                let dst = &mut upper[0];
                for (p, c) in src {
                    for &t in &factors {
                        *dst.entry(p.then_transposition(t)).or_default() += c;
                    }
                }
            }
        }
        Ok(MonotoneCounts { n, by_length: layers })
    }

    pub fn natural(n: usize, max_len: usize) -> Result<Self> {
        MonotoneCounts::build(&TotalOrder::natural(n), max_len)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn max_len(&self) -> usize {
        self.by_length.len() - 1
    }

    pub fn count_length(&self, target: &Permutation, len: usize) -> BigUint {
        assert!(len <= self.max_len(), "length {len} beyond the table");
        self.by_length[len].get(target).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn genus(&self, target: &Permutation, genus: u32) -> BigUint {
        self.count_length(target, monotone_length(target, genus))
    }
}

/// `m_g^≺(target)` by dynamic programming.
pub fn count_monotone(target: &Permutation, genus: u32, order: &TotalOrder) -> Result<BigUint> {
    let len = monotone_length(target, genus);
    Ok(MonotoneCounts::build(order, len)?.count_length(target, len))
}
