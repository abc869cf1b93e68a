use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{check_degree, Permutation, Transposition};

/// An integer combination of permutations of `[n]`. Zero coefficients are
/// never stored, so two elements are equal exactly when their maps are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    /// The identity permutation with coefficient 1.
    pub fn one(n: usize) -> Self {
        AlgebraElement::from_permutation(Permutation::identity(n))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, BigInt::one());
        AlgebraElement { n: p.degree(), terms }
    }

    /// Sums `(p, c)` pairs; repeated permutations accumulate.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, BigInt)>) -> Result<Self> {
        check_degree(n)?;
        let mut x = AlgebraElement::zero(n);
        for (p, c) in terms {
            if p.degree() != n {
                return Err(Error::DegreeMismatch { left: n, right: p.degree() });
            }
            x.add_term(p, c);
        }
        Ok(x)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of permutations with a nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    /// `[ω]x`.
    pub fn coefficient_of(&self, omega: &Permutation) -> BigInt {
        self.terms.get(omega).cloned().unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn add_term(&mut self, p: Permutation, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    fn same_degree(&self, other: &AlgebraElement) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DegreeMismatch { left: self.n, right: other.n })
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.same_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*p, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> AlgebraElement {
        if k.is_zero() {
            return AlgebraElement::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (*p, c * k)).collect(),
        }
    }

    /// Convolution product, `(Σ a_p p)(Σ b_q q) = Σ a_p b_q (p then q)`.
    /// Left terms are processed in parallel and merged in key order.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.same_degree(other)?;
        let left: Vec<(&Permutation, &BigInt)> = self.terms.iter().collect();
        let partials: Vec<BTreeMap<Permutation, BigInt>> = left
            .par_chunks(64)
            .map(|chunk| {
                let mut acc: BTreeMap<Permutation, BigInt> = BTreeMap::new();
                for (p, a) in chunk {
                    for (q, b) in &other.terms {
                        *acc.entry(p.then(q)).or_insert_with(BigInt::zero) += *a * b;
                    }
                }
                acc
            })
            .collect();
        let mut out = AlgebraElement::zero(self.n);
        for part in partials {
            for (p, c) in part {
                out.add_term(p, c);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> AlgebraElement {
        let mut out = AlgebraElement::one(self.n);
        for _ in 0..e {
            out = out.multiply(self).expect("same degree");
        }
        out
    }

    /// Right multiplication by a transposition; cheaper than
    /// [`AlgebraElement::multiply`].
    pub fn then_transposition(&self, t: Transposition) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (p.then_transposition(t), c.clone())).collect(),
        }
    }

    /// `x · J_k`.
    pub fn times_jm(&self, k: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for j in 1..k {
            let t = Transposition::new(j, k).expect("j < k");
            for (p, c) in &self.terms {
                out.add_term(p.then_transposition(t), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    /// `3*(1 2)(3) - (1 2 3)`, terms in permutation order; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{abs}*{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `J_k = (1 k) + (2 k) + ⋯ + (k-1 k)` in the group algebra of `S_n`.
pub fn jm_element(n: usize, k: usize) -> Result<AlgebraElement> {
    check_degree(n)?;
    if k == 0 || k > n {
        return Err(Error::SymbolOutOfRange { symbol: k, n });
    }
    Ok(AlgebraElement::one(n).times_jm(k))
}
