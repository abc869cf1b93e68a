use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorisations::{b_value, count_star};
use crate::perm::Partition;

use super::numbers::factorial;

/// Largest `|α|` accepted by [`double_hurwitz_relation`] unless overridden;
/// the left side lives in `S_{2|α|-1}`.
pub const RELATION_DEFAULT_BOUND: usize = 3;

/// Both sides of `b_g(α ∪ 1^{n-1}) = n! (2n-1)^{n + ℓ(α) + 2g - 3} a_g(α)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub alpha: Partition,
    pub genus: u32,
    #[serde(serialize_with = "crate::numeric::serialize_biguint")]
    pub b: BigUint,
    #[serde(serialize_with = "crate::numeric::serialize_biguint")]
    pub star: BigUint,
    #[serde(serialize_with = "crate::numeric::serialize_biguint")]
    pub rhs: BigUint,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.b == self.rhs
    }
}

/// Computes the left side by exhaustive double Hurwitz counting in
/// `S_{2n-1}`; refuses `|α| > bound`.
pub fn double_hurwitz_relation(alpha: &Partition, genus: u32, bound: usize) -> Result<RelationCheck> {
    let n = alpha.size();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "n",
            requested: n,
            limit: bound,
        });
    }
    if n == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let mut beta = alpha.clone();
    for _ in 1..n {
        beta = beta.with_part(1);
    }
    let b = b_value(&beta, genus)?;
    let star = count_star(&alpha.representative()?, genus, n)?;
    // the exponent is -1 only for α = (1), g = 0, where the base is 1
    let exponent = (n + alpha.len() + 2 * genus as usize).saturating_sub(3);
    let power = num_traits::pow(BigUint::from(2 * n - 1), exponent);
    let rhs = factorial(n) * power * &star;
    Ok(RelationCheck {
        alpha: alpha.clone(),
        genus,
        b,
        star,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_relations() {
        let r = double_hurwitz_relation(&part("[2]"), 0, 3).unwrap();
        assert_eq!(r.b, BigUint::from(2u32));
        assert!(r.holds());
        assert!(double_hurwitz_relation(&part("[1,1]"), 0, 3).unwrap().holds());
        assert!(double_hurwitz_relation(&part("[1]"), 0, 3).unwrap().holds());
        assert!(double_hurwitz_relation(&part("[2]"), 1, 3).unwrap().holds());
        match double_hurwitz_relation(&part("[2,2]"), 0, 3) {
            Err(Error::BoundExceeded { requested: 4, limit: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
