use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::element::AlgebraElement;
use super::symmetric::{Exponents, Polynomial};
use crate::error::Result;
use crate::perm::{orbits_of_transpositions, product_of, OrbitState, Permutation, Transposition};

/// `x_2^{a_2} ⋯ x_n^{a_n}` at the Jucys-Murphy elements, multiplied in
/// ascending slot order.
pub fn evaluate_monomial(n: usize, exponents: &[u32]) -> AlgebraElement {
    let mut x = AlgebraElement::one(n);
    for (slot, &a) in exponents.iter().enumerate() {
        for _ in 0..a {
            x = x.times_jm(slot + 2);
        }
    }
    x
}

fn sum_all(n: usize, parts: Vec<AlgebraElement>) -> AlgebraElement {
    parts
        .into_iter()
        .fold(AlgebraElement::zero(n), |acc, x| acc.add(&x).expect("same degree"))
}

/// `f(Ξ_n)` for a polynomial in the slots `x_2, …, x_n`.
pub fn evaluate(f: &Polynomial) -> Result<AlgebraElement> {
    let n = f.degree();
    let terms: Vec<(&Exponents, &BigInt)> = f.terms().collect();
    let parts: Vec<AlgebraElement> = terms
        .par_iter()
        .map(|(e, c)| evaluate_monomial(n, e).scale(c))
        .collect();
    Ok(sum_all(n, parts))
}

/// `T_n` of one monomial: the sum of the products of those expanded
/// transposition tuples that act transitively on `[n]`.
pub fn transitive_monomial(n: usize, exponents: &[u32]) -> AlgebraElement {
    let mut word = Vec::new();
    for (slot, &a) in exponents.iter().enumerate() {
        word.extend(std::iter::repeat_n(slot + 2, a as usize));
    }
    transitive_word(n, &word)
}

/// `T_n(J_{w_1} J_{w_2} ⋯)` with the factors expanded in the order written.
/// Computed by a dynamic programme over (partial product, orbit partition
/// of the factors so far).
pub fn transitive_word(n: usize, word: &[usize]) -> AlgebraElement {
    let mut layer: HashMap<(Permutation, OrbitState), BigInt> = HashMap::new();
    layer.insert((Permutation::identity(n), OrbitState::discrete(n)), BigInt::one());
    for &k in word {
        let mut next: HashMap<(Permutation, OrbitState), BigInt> = HashMap::with_capacity(layer.len() * 2);
        for ((p, orb), c) in &layer {
            for j in 1..k {
                let t = Transposition::new(j, k).expect("j < k");
                *next
                    .entry((p.then_transposition(t), orb.merge(j, k)))
                    .or_insert_with(BigInt::zero) += c;
            }
        }
        layer = next;
    }
    let mut out = AlgebraElement::zero(n);
    for ((p, orb), c) in layer {
        if orb.is_transitive() {
            out.add_term(p, c);
        }
    }
    out
}

/// `T_n(f(Ξ_n))`, with `T_n` applied to the canonical monomial expansion of
/// `f` and extended linearly.
pub fn transitive_evaluate(f: &Polynomial) -> Result<AlgebraElement> {
    let n = f.degree();
    let terms: Vec<(&Exponents, &BigInt)> = f.terms().collect();
    let parts: Vec<AlgebraElement> = terms
        .par_iter()
        .map(|(e, c)| transitive_monomial(n, e).scale(c))
        .collect();
    Ok(sum_all(n, parts))
}

/// `T_n(J_n^t)`.
pub fn transitive_power(n: usize, t: u32) -> AlgebraElement {
    let mut e = vec![0; n.saturating_sub(1)];
    if n >= 2 {
        e[n - 2] = t;
    } else if t > 0 {
        return AlgebraElement::zero(n);
    }
    transitive_monomial(n, &e)
}

/// One term of an expanded product of Jucys-Murphy elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TranspositionTuple {
    pub factors: Vec<Transposition>,
}

impl TranspositionTuple {
    pub fn product(&self, n: usize) -> Permutation {
        product_of(n, &self.factors)
    }

    pub fn is_transitive(&self, n: usize) -> bool {
        orbits_of_transpositions(n, &self.factors)
            .expect("symbols in range")
            .is_transitive()
    }
}

/// Every tuple in the expansion of `J_2^{a_2} ⋯ J_n^{a_n}`, one per term.
pub fn expand_monomial(exponents: &[u32]) -> Vec<TranspositionTuple> {
    let mut slots: Vec<usize> = Vec::new();
    for (slot, &a) in exponents.iter().enumerate() {
        slots.extend(std::iter::repeat_n(slot + 2, a as usize));
    }
    let mut out = vec![TranspositionTuple { factors: Vec::new() }];
    for k in slots {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..k).map(move |j| {
                    let mut f = t.factors.clone();
                    f.push(Transposition::new(j, k).expect("j < k"));
                    TranspositionTuple { factors: f }
                })
            })
            .collect();
    }
    out
}

/// [`transitive_evaluate`] by listing every tuple; exponential, for
/// cross-checking only.
pub fn transitive_evaluate_by_tuples(f: &Polynomial) -> AlgebraElement {
    let n = f.degree();
    let mut out = AlgebraElement::zero(n);
    for (e, c) in f.terms() {
        for t in expand_monomial(e) {
            if t.is_transitive(n) {
                out.add_term(t.product(n), c.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symmetric::{complete, elementary, power_sum};
    use crate::algebra::{decompose, jm_element};
    use crate::perm::Partition;

    #[test]
    fn monomials_match_direct_products() {
        let n = 4;
        let direct = jm_element(n, 2)
            .unwrap()
            .multiply(&jm_element(n, 4).unwrap().pow(2))
            .unwrap();
        assert_eq!(evaluate_monomial(n, &[1, 0, 2]), direct);
        assert_eq!(evaluate(&elementary(4, 0)).unwrap(), AlgebraElement::one(4));
    }

    #[test]
    fn tuple_oracle_agrees_with_dp() {
        for n in 1..=4 {
            for k in 0..=4 {
                for f in [elementary(n, k), complete(n, k), power_sum(n, k)] {
                    assert_eq!(transitive_evaluate(&f).unwrap(), transitive_evaluate_by_tuples(&f));
                }
            }
        }
    }

    #[test]
    fn small_transitive_values() {
        assert!(transitive_evaluate(&elementary(3, 1)).unwrap().is_zero());
        let e2 = elementary(3, 2);
        let k3 = crate::algebra::class_sum(&Partition::single(3)).unwrap();
        assert_eq!(transitive_evaluate(&e2).unwrap(), k3);
        assert_eq!(evaluate(&e2).unwrap(), k3);
        let t = decompose(&transitive_power(4, 4)).unwrap();
        assert_eq!(t.to_string(), "3*K[3,1] + 4*K[2,2]");
        assert_eq!(transitive_power(2, 1), jm_element(2, 2).unwrap());
        assert_eq!(transitive_power(1, 0), AlgebraElement::one(1));
    }
}
