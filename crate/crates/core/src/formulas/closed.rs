use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::numbers::{binomial, catalan, central_factorial, factorial, stirling2};
use super::series::RationalSeries;
use crate::error::{Error, Result};
use crate::perm::Partition;

/// Féray's formula for `a_g(λ)`:
/// `(2g + n + ℓ(λ) - 2)! / n! · ∏ λ_i · [t^{2g}] f(t)^{n-2} ∏ f(λ_i t)`
/// with `f(t) = 2 t^{-1} sinh(t/2)`. For `n = 1` the negative power is
/// taken through the series reciprocal.
pub fn feray_count(lambda: &Partition, genus: u32) -> Result<BigUint> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let order = 2 * genus as usize;
    let f = RationalSeries::sinh_ratio(order);
    let mut series = if n >= 2 {
        f.pow(n - 2)
    } else {
        f.reciprocal().expect("f(0) = 1")
    };
    for &part in lambda.parts() {
        series = &series * &RationalSeries::sinh_ratio_scaled(order, part);
    }
    let prefactor = BigRational::new(
        BigInt::from(factorial(2 * genus as usize + n + lambda.len() - 2)) * lambda.parts().iter().product::<usize>(),
        BigInt::from(factorial(n)),
    );
    let value = prefactor * series.coefficient(order);
    if !value.is_integer() || value.is_negative() {
        return Err(Error::InexactDivision(format!("Féray formula for {lambda}, g = {genus} gives {value}")));
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

fn exact_div(num: BigUint, den: BigUint, what: impl FnOnce() -> String) -> Result<BigUint> {
    if den.is_zero() {
        return Err(Error::InexactDivision(what()));
    }
    let (q, r) = num.div_rem(&den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision(what()))
    }
}

/// `md_g((n)) = S(2g + n, n - 1) / C(n, 2)`, for `n ≥ 2`.
pub fn md_full_cycle(n: usize, genus: u32) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::UnsupportedDegree(n));
    }
    let num = stirling2(2 * genus as usize + n, n - 1);
    exact_div(num, binomial(n, 2), || format!("S({}, {}) / C({n}, 2)", 2 * genus as usize + n, n - 1))
}

/// `md_g((1^n)) = (n - 1)! Cat(n - 1) T(g + n - 1, n - 1)`.
pub fn md_identity(n: usize, genus: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    Ok(factorial(n - 1) * catalan(n - 1) * central_factorial(genus as usize + n - 1, n - 1))
}

/// Both sides of
/// `n md_g((1^n)) = n (n-1)^2 md_{g-1}((1^n)) + 2 (n-1)(2n-3) md_g((1^{n-1}))`.
pub fn md_identity_recurrence(n: usize, genus: u32) -> Result<(BigUint, BigUint)> {
    if n < 2 {
        return Err(Error::UnsupportedDegree(n));
    }
    let lhs = md_identity(n, genus)? * n;
    let previous_genus = match genus {
        0 => BigUint::zero(),
        g => md_identity(n, g - 1)? * (n * (n - 1) * (n - 1)),
    };
    let smaller = md_identity(n - 1, genus)? * (2 * (n - 1) * (2 * n - 3));
    Ok((lhs, previous_genus + smaller))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(x: u32) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn feray_examples() {
        assert_eq!(feray_count(&part("[2]"), 0).unwrap(), big(1));
        assert_eq!(feray_count(&part("[2,1]"), 0).unwrap(), big(2));
        assert_eq!(feray_count(&part("[3]"), 1).unwrap(), big(5));
        assert_eq!(feray_count(&part("[1]"), 0).unwrap(), big(1));
        for g in 1..=3 {
            assert_eq!(feray_count(&part("[1]"), g).unwrap(), big(0));
        }
        assert!(feray_count(&Partition::empty(), 0).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(md_full_cycle(3, 0).unwrap(), big(1));
        assert_eq!(md_full_cycle(3, 1).unwrap(), big(5));
        assert_eq!(md_full_cycle(2, 0).unwrap(), big(1));
        assert!(md_full_cycle(1, 0).is_err());
        assert_eq!(md_identity(3, 0).unwrap(), big(4));
        assert_eq!(md_identity(3, 1).unwrap(), big(20));
        assert_eq!(md_identity(1, 0).unwrap(), big(1));
        assert_eq!(md_identity(1, 2).unwrap(), big(0));
    }

    #[test]
    fn closed_forms_follow_from_feray() {
        for n in 2..=7 {
            for g in 0..=3 {
                assert_eq!(md_full_cycle(n, g).unwrap(), feray_count(&Partition::single(n), g).unwrap());
                assert_eq!(md_identity(n, g).unwrap(), feray_count(&Partition::ones(n), g).unwrap());
            }
        }
    }

    #[test]
    fn identity_recurrence() {
        let (l, r) = md_identity_recurrence(3, 1).unwrap();
        assert_eq!((l, r), (big(60), big(60)));
        let (l, r) = md_identity_recurrence(2, 0).unwrap();
        assert_eq!((l, r), (big(2), big(2)));
        for n in 2..=7 {
            for g in 0..=4 {
                let (l, r) = md_identity_recurrence(n, g).unwrap();
                assert_eq!(l, r, "n={n} g={g}");
            }
        }
    }
}
