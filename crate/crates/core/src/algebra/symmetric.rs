use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::{check_degree, Partition};

/// Exponents of `x_2, …, x_n`; index 0 is the slot of `x_2`.
pub type Exponents = Vec<u32>;

/// An integer polynomial in the variable slots `x_2, …, x_n`, the ones
/// that `J_2, …, J_n` are substituted into. `x_1` is absent because
/// `J_1 = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(vec![0; n.saturating_sub(1)], c);
        p
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, BigInt::one())
    }

    /// `x_k`; `x_1` is the zero polynomial.
    pub fn variable(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::SymbolOutOfRange { symbol: k, n });
        }
        let mut p = Polynomial::zero(n);
        if k >= 2 {
            let mut e = vec![0; n - 1];
            e[k - 2] = 1;
            p.add_term(e, BigInt::one());
        }
        Ok(p)
    }

    pub fn monomial(n: usize, exponents: Exponents) -> Result<Self> {
        if exponents.len() != n.saturating_sub(1) {
            return Err(Error::DegreeMismatch {
                left: n.saturating_sub(1),
                right: exponents.len(),
            });
        }
        let mut p = Polynomial::zero(n);
        p.add_term(exponents, BigInt::one());
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n, other.n, "polynomials over different slot sets");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n, other.n, "polynomials over different slot sets");
        let mut out = Polynomial::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Exponents = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(self.n), |acc, _| acc.multiply(self))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (slot, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*x{}", slot + 2)?,
                    _ => write!(f, "*x{}^{a}", slot + 2)?,
                }
            }
        }
        Ok(())
    }
}

/// Every exponent vector over `slots` variables summing to `k` with entries
/// at most `cap`, in lexicographic order.
fn compositions(slots: usize, k: u32, cap: u32) -> Vec<Exponents> {
    fn rec(slot: usize, slots: usize, left: u32, cap: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if slot == slots {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=left.min(cap) {
            cur.push(a);
            rec(slot + 1, slots, left - a, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, slots, k, cap, &mut Vec::with_capacity(slots), &mut out);
    out
}

/// `e_k` over the `n - 1` slots: one monomial per `k`-subset.
pub fn elementary(n: usize, k: u32) -> Polynomial {
    monomial_sum(n, compositions(n - 1, k, 1))
}

/// `h_k` over the `n - 1` slots: one monomial per `k`-multiset.
pub fn complete(n: usize, k: u32) -> Polynomial {
    monomial_sum(n, compositions(n - 1, k, k))
}

/// `p_k = Σ x_i^k`; `p_0` is the constant `n - 1`.
pub fn power_sum(n: usize, k: u32) -> Polynomial {
    let slots = n - 1;
    monomial_sum(
        n,
        (0..slots).map(|i| {
            let mut e = vec![0; slots];
            e[i] = k;
            e
        }),
    )
}

fn monomial_sum(n: usize, monomials: impl IntoIterator<Item = Exponents>) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for e in monomials {
        p.add_term(e, BigInt::one());
    }
    p
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    Elementary,
    Complete,
    PowerSum,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Elementary, Basis::Complete, Basis::PowerSum];

    pub fn letter(self) -> char {
        match self {
            Basis::Elementary => 'e',
            Basis::Complete => 'h',
            Basis::PowerSum => 'p',
        }
    }

    fn single(self, n: usize, k: u32) -> Polynomial {
        match self {
            Basis::Elementary => elementary(n, k),
            Basis::Complete => complete(n, k),
            Basis::PowerSum => power_sum(n, k),
        }
    }

    /// `b_λ = ∏ b_{λ_i}`, with `b_ε = 1`.
    pub fn polynomial(self, n: usize, lambda: &Partition) -> Polynomial {
        lambda
            .parts()
            .iter()
            .fold(Polynomial::one(n), |acc, &k| acc.multiply(&self.single(n, k as u32)))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BasisTerm {
    Basis(Basis, Partition),
    /// Exponents of `x_2, …, x_n`.
    Monomial(Exponents),
}

impl fmt::Display for BasisTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisTerm::Basis(b, lambda) => write!(f, "{}{lambda}", b.letter()),
            BasisTerm::Monomial(e) => {
                let mut first = true;
                for (slot, &a) in e.iter().enumerate().filter(|(_, &a)| a > 0) {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "J[{}]^{a}", slot + 2)?;
                }
                if first {
                    write!(f, "1")?;
                }
                Ok(())
            }
        }
    }
}

/// A formal integer combination of basis terms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymmetricFunctionExpr {
    pub terms: Vec<(BigInt, BasisTerm)>,
}

impl SymmetricFunctionExpr {
    pub fn basis(b: Basis, lambda: Partition) -> Self {
        SymmetricFunctionExpr {
            terms: vec![(BigInt::one(), BasisTerm::Basis(b, lambda))],
        }
    }

    pub fn e(lambda: Partition) -> Self {
        SymmetricFunctionExpr::basis(Basis::Elementary, lambda)
    }

    pub fn h(lambda: Partition) -> Self {
        SymmetricFunctionExpr::basis(Basis::Complete, lambda)
    }

    pub fn p(lambda: Partition) -> Self {
        SymmetricFunctionExpr::basis(Basis::PowerSum, lambda)
    }

    pub fn monomial(exponents: Exponents) -> Self {
        SymmetricFunctionExpr {
            terms: vec![(BigInt::one(), BasisTerm::Monomial(exponents))],
        }
    }

    pub fn plus(mut self, c: BigInt, term: BasisTerm) -> Self {
        self.terms.push((c, term));
        self
    }

    /// The expansion into monomials over the `n - 1` slots.
    pub fn to_polynomial(&self, n: usize) -> Result<Polynomial> {
        check_degree(n)?;
        let mut out = Polynomial::zero(n);
        for (c, term) in &self.terms {
            let p = match term {
                BasisTerm::Basis(b, lambda) => b.polynomial(n, lambda),
                BasisTerm::Monomial(e) => Polynomial::monomial(n, e.clone())?,
            };
            out = out.add(&p.scale(c));
        }
        Ok(out)
    }
}

impl fmt::Display for SymmetricFunctionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, t)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{abs}*{t}")?;
            }
        }
        Ok(())
    }
}
