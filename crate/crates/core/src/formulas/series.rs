use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::numbers::factorial;

/// A power series with exact rational coefficients, truncated after `t^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coefficients: Vec<BigRational>,
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coefficients: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = RationalSeries::zero(order);
        s.coefficients[0] = BigRational::one();
        s
    }

    /// Coefficients beyond `order` are dropped.
    pub fn from_coefficients(order: usize, mut coefficients: Vec<BigRational>) -> Self {
        coefficients.resize(order + 1, BigRational::zero());
        RationalSeries { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `[t^k]`, zero beyond the truncation.
    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coefficients.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalSeries {
            coefficients: self.coefficients.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(RationalSeries::one(self.order()), |acc, _| &acc * self)
    }

    /// The multiplicative inverse; `None` when the constant term is zero.
    pub fn reciprocal(&self) -> Option<Self> {
        let c0 = self.coefficients[0].clone();
        if c0.is_zero() {
            return None;
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len()];
        out[0] = c0.recip();
        for k in 1..out.len() {
            let s: BigRational = (1..=k).map(|j| &self.coefficients[j] * &out[k - j]).sum();
            out[k] = -s / &c0;
        }
        Some(RationalSeries { coefficients: out })
    }

    /// `f(t) = 2 t^{-1} sinh(t/2) = Σ t^{2k} / (4^k (2k+1)!)`.
    pub fn sinh_ratio(order: usize) -> Self {
        RationalSeries::sinh_ratio_scaled(order, 1)
    }

    /// `f(λ t)`.
    pub fn sinh_ratio_scaled(order: usize, lambda: usize) -> Self {
        let coefficients = (0..=order)
            .map(|j| {
                if j % 2 == 1 {
                    return BigRational::zero();
                }
                let k = j / 2;
                let num = BigInt::from(lambda).pow(j as u32);
                let den = BigInt::from(4u32).pow(k as u32) * BigInt::from(factorial(2 * k + 1));
                BigRational::new(num, den)
            })
            .collect();
        RationalSeries { coefficients }
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, other: &RationalSeries) -> RationalSeries {
        let order = self.order().min(other.order());
        RationalSeries {
            coefficients: (0..=order).map(|k| &self.coefficients[k] + &other.coefficients[k]).collect(),
        }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;

    fn mul(self, other: &RationalSeries) -> RationalSeries {
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|k| (0..=k).map(|j| &self.coefficients[j] * &other.coefficients[k - j]).sum())
            .collect();
        RationalSeries { coefficients }
    }
}
