use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::classes::{class_sum, decompose, ClassSumDecomposition};
use super::element::AlgebraElement;
use super::evaluate::{evaluate, transitive_evaluate, transitive_power, transitive_word};
use super::linear::{integer_kernel, Echelon};
use super::symmetric::{complete, elementary, power_sum, Basis, BasisTerm, SymmetricFunctionExpr};
use crate::error::{Error, Result};
use crate::perm::{check_degree, Partition, Permutation};

/// Both sides of `T_n(J_n^{n-1+k}) = J_2 ⋯ J_n · h_k(Ξ_n)`, plus the
/// power-sum form `T_n(p_{n-1+k}(Ξ_n))`.
#[derive(Clone, Debug)]
pub struct TransitivePowerCheck {
    pub n: usize,
    pub k: u32,
    pub jm_power: AlgebraElement,
    pub power_sum: AlgebraElement,
    pub product: AlgebraElement,
}

impl TransitivePowerCheck {
    pub fn holds(&self) -> bool {
        self.jm_power == self.product && self.power_sum == self.product
    }
}

pub fn check_transitive_power_expression(n: usize, k: u32) -> Result<TransitivePowerCheck> {
    check_degree(n)?;
    if n < 2 {
        return Err(Error::UnsupportedDegree(n));
    }
    let t = (n - 1) as u32 + k;
    let product = evaluate(&elementary(n, (n - 1) as u32).multiply(&complete(n, k)))?;
    Ok(TransitivePowerCheck {
        n,
        k,
        jm_power: transitive_power(n, t),
        power_sum: transitive_evaluate(&power_sum(n, t))?,
        product,
    })
}

/// `Σ K_λ` over `λ ⊢ n` with `n - k` parts.
pub fn elementary_class_expansion(n: usize, k: usize) -> Result<AlgebraElement> {
    check_degree(n)?;
    let mut out = AlgebraElement::zero(n);
    for lambda in Partition::all(n) {
        if lambda.len() + k == n {
            out = out.add(&class_sum(&lambda)?)?;
        }
    }
    Ok(out)
}

/// Whether `e_k(Ξ_n)` equals [`elementary_class_expansion`].
pub fn check_elementary_identity(n: usize, k: usize) -> Result<bool> {
    Ok(evaluate(&elementary(n, k as u32))? == elementary_class_expansion(n, k)?)
}

/// `(T_n(e_{n-1} e_1), T_n(e_{n-1}) · T_n(e_1))`. The first is nonzero and
/// the second vanishes for `n ≥ 3`.
pub fn non_homomorphism_witness(n: usize) -> Result<(AlgebraElement, AlgebraElement)> {
    check_degree(n)?;
    let top = elementary(n, (n - 1) as u32);
    let one = elementary(n, 1);
    let together = transitive_evaluate(&top.multiply(&one))?;
    let apart = transitive_evaluate(&top)?.multiply(&transitive_evaluate(&one)?)?;
    Ok((together, apart))
}

/// Whether `[ω] T_n(J_n^t) = [ω] J_n^t` for every fixed-point-free `ω`.
pub fn check_fixed_point_free(n: usize, t: u32) -> Result<bool> {
    check_degree(n)?;
    let transitive = transitive_power(n, t);
    let plain = evaluate_word(n, &vec![n; t as usize]);
    Ok(Permutation::all(n)
        .filter(|w| (1..=n).all(|s| w.image(s) != s))
        .all(|w| transitive.coefficient_of(&w) == plain.coefficient_of(&w)))
}

fn evaluate_word(n: usize, word: &[usize]) -> AlgebraElement {
    word.iter().fold(AlgebraElement::one(n), |x, &k| x.times_jm(k))
}

/// A formal sum of words in the Jucys-Murphy elements, each kept in the
/// order written.
type Words = Vec<(BigInt, Vec<usize>)>;

fn words_product(a: &Words, b: &Words) -> Words {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (c, u) in a {
        for (d, v) in b {
            let mut w = u.clone();
            w.extend(v);
            out.push((c * d, w));
        }
    }
    out
}

fn elementary_words(n: usize, k: usize) -> Words {
    fn rec(from: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Words) {
        if cur.len() == k {
            out.push((BigInt::one(), cur.clone()));
            return;
        }
        for s in from..=n {
            cur.push(s);
            rec(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(2, n, k, &mut Vec::new(), &mut out);
    out
}

fn power_sum_words(n: usize, k: usize) -> Words {
    (2..=n).map(|s| (BigInt::one(), vec![s; k])).collect()
}

/// `p_k` as a signed sum of ordered products `e_{i_1} e_{i_2} ⋯`, from
/// Newton's identity `p_k = Σ_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k`.
fn newton_expansion(k: usize) -> Vec<(BigInt, Vec<usize>)> {
    let sign = |i: usize| if i % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let mut out = vec![(sign(k) * BigInt::from(k), vec![k])];
    for i in 1..k {
        for (c, rest) in newton_expansion(k - i) {
            let mut seq = vec![i];
            seq.extend(rest);
            out.push((sign(i) * c, seq));
        }
    }
    out
}

fn transitive_words(n: usize, words: &Words) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(n);
    for (c, w) in words {
        out = out.add(&transitive_word(n, w).scale(c))?;
    }
    Ok(out)
}

/// One row of the expression comparison: `T_n(p_λ(Ξ_n))` computed from the
/// power-sum words as written, from the elementary words given by Newton's
/// identity, and from the canonical ascending expansion.
#[derive(Clone, Debug, Serialize)]
pub struct ExpressionRow {
    pub n: usize,
    pub lambda: Partition,
    pub power_sum_words: usize,
    pub elementary_words: usize,
    pub agree: bool,
}

/// A symmetric function whose value at `Ξ_n` vanishes but whose image under
/// `T_n` does not.
#[derive(Clone, Debug, Serialize)]
pub struct KernelWitness {
    pub n: usize,
    pub f: String,
    pub transitive_value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WellDefinednessReport {
    pub max_n: usize,
    pub max_degree: usize,
    pub rows: Vec<ExpressionRow>,
    /// Independent linear relations among the `e_λ(Ξ_n)`, summed over `n`.
    pub relations: usize,
    /// Those relations whose `T_n` image is nonzero.
    pub relations_not_preserved: usize,
    pub witnesses: Vec<KernelWitness>,
}

impl WellDefinednessReport {
    pub fn expansions_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

fn coordinates(x: &AlgebraElement, perms: &[Permutation]) -> Vec<BigInt> {
    perms.iter().map(|p| x.coefficient_of(p)).collect()
}

/// Compares `T_n` across different expressions of the same element, for
/// `2 ≤ n ≤ max_n` and `|λ| ≤ max_degree`. Two things are measured: whether
/// reordering and re-expanding words (power sums against elementary
/// functions through Newton's identity) changes `T_n`, and whether
/// symmetric functions with equal values at `Ξ_n` have equal `T_n` images.
pub fn well_definedness_experiment(max_n: usize, max_degree: usize) -> Result<WellDefinednessReport> {
    check_degree(max_n)?;
    let mut rows = Vec::new();
    let mut relations = 0;
    let mut relations_not_preserved = 0;
    let mut witnesses = Vec::new();
    for n in 2..=max_n {
        for lambda in Partition::all_up_to(max_degree).into_iter().filter(|l| !l.is_empty()) {
            let mut direct: Words = vec![(BigInt::one(), Vec::new())];
            let mut via_e: Words = vec![(BigInt::one(), Vec::new())];
            for &k in lambda.parts() {
                direct = words_product(&direct, &power_sum_words(n, k));
                let mut pk: Words = Vec::new();
                for (c, seq) in newton_expansion(k) {
                    let mut w: Words = vec![(c, Vec::new())];
                    for i in seq {
                        w = words_product(&w, &elementary_words(n, i));
                    }
                    pk.extend(w);
                }
                via_e = words_product(&via_e, &pk);
            }
            let canonical = transitive_evaluate(&Basis::PowerSum.polynomial(n, &lambda))?;
            let agree = transitive_words(n, &direct)? == canonical && transitive_words(n, &via_e)? == canonical;
            rows.push(ExpressionRow {
                n,
                lambda,
                power_sum_words: direct.len(),
                elementary_words: via_e.len(),
                agree,
            });
        }

        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let generators: Vec<Partition> = Partition::all_up_to(max_degree)
            .into_iter()
            .filter(|l| l.parts().iter().all(|&p| p < n))
            .collect();
        let plain: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|l| Ok(coordinates(&evaluate(&Basis::Elementary.polynomial(n, l))?, &perms)))
            .collect::<Result<_>>()?;
        let images: Vec<AlgebraElement> = generators
            .iter()
            .map(|l| transitive_evaluate(&Basis::Elementary.polynomial(n, l)))
            .collect::<Result<_>>()?;
        for relation in integer_kernel(&plain) {
            relations += 1;
            let mut image = AlgebraElement::zero(n);
            let mut f = SymmetricFunctionExpr::default();
            for ((c, l), x) in relation.iter().zip(&generators).zip(&images) {
                if !c.is_zero() {
                    image = image.add(&x.scale(c))?;
                    f = f.plus(c.clone(), BasisTerm::Basis(Basis::Elementary, l.clone()));
                }
            }
            if !image.is_zero() {
                relations_not_preserved += 1;
                let transitive_value = match decompose(&image) {
                    Ok(d) => d.to_string(),
                    Err(_) => image.to_string(),
                };
                witnesses.push(KernelWitness {
                    n,
                    f: f.to_string(),
                    transitive_value,
                });
            }
        }
    }
    Ok(WellDefinednessReport {
        max_n,
        max_degree,
        rows,
        relations,
        relations_not_preserved,
        witnesses,
    })
}

/// Dimensions attached to `{T_n(f(Ξ_n)) : deg f ≤ max_degree}`.
#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub n: usize,
    pub max_degree: usize,
    pub span: usize,
    /// The subalgebra generated by the span (including the identity).
    pub generated: usize,
    pub centre: usize,
    pub basis: Vec<ClassSumDecomposition>,
}

pub fn span_experiment(n: usize, max_degree: usize) -> Result<SpanReport> {
    check_degree(n)?;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let to_rational = |x: &AlgebraElement| {
        coordinates(x, &perms)
            .into_iter()
            .map(num_rational::BigRational::from_integer)
            .collect::<Vec<_>>()
    };
    let mut echelon = Echelon::default();
    let mut basis: Vec<AlgebraElement> = Vec::new();
    for lambda in Partition::all_up_to(max_degree) {
        if lambda.parts().iter().any(|&p| p >= n) {
            continue;
        }
        let x = transitive_evaluate(&Basis::Elementary.polynomial(n, &lambda))?;
        if echelon.insert(to_rational(&x)) {
            basis.push(x);
        }
    }
    let span = echelon.rank();
    let mut generated: Vec<AlgebraElement> = basis.clone();
    if echelon.insert(to_rational(&AlgebraElement::one(n))) {
        generated.push(AlgebraElement::one(n));
    }
    let mut frontier = 0;
    while frontier < generated.len() {
        let x = generated[frontier].clone();
        for y in basis.clone() {
            let z = x.multiply(&y)?;
            if echelon.insert(to_rational(&z)) {
                generated.push(z);
            }
        }
        frontier += 1;
    }
    Ok(SpanReport {
        n,
        max_degree,
        span,
        generated: generated.len(),
        centre: Partition::all(n).len(),
        basis: basis.iter().map(decompose).collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::jm_element;

    #[test]
    fn transitive_power_expression_small_cases() {
        let c = check_transitive_power_expression(3, 0).unwrap();
        assert!(c.holds());
        let j2j3 = jm_element(3, 2).unwrap().multiply(&jm_element(3, 3).unwrap()).unwrap();
        assert_eq!(c.product, j2j3);
        let c = check_transitive_power_expression(2, 0).unwrap();
        assert_eq!(c.jm_power.to_string(), "(1 2)");
        assert!(check_transitive_power_expression(4, 1).unwrap().holds());
        assert!(check_transitive_power_expression(1, 0).is_err());
    }

    #[test]
    fn elementary_identity_small() {
        for n in 1..=5 {
            for k in 0..n + 2 {
                assert!(check_elementary_identity(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn transitivity_is_not_multiplicative() {
        for n in 3..=4 {
            let (together, apart) = non_homomorphism_witness(n).unwrap();
            assert!(!together.is_zero());
            assert!(apart.is_zero());
        }
    }

    #[test]
    fn fixed_point_free_coefficients_agree() {
        for n in 2..=4 {
            for t in 0..=n as u32 + 2 {
                assert!(check_fixed_point_free(n, t).unwrap());
            }
        }
    }

    #[test]
    fn newton_expansion_matches_polynomials() {
        for n in 2..=4 {
            for k in 1..=4 {
                let mut sum = crate::algebra::Polynomial::zero(n);
                for (c, seq) in newton_expansion(k) {
                    let mut term = crate::algebra::Polynomial::one(n);
                    for i in seq {
                        term = term.multiply(&elementary(n, i as u32));
                    }
                    sum = sum.add(&term.scale(&c));
                }
                assert_eq!(sum, power_sum(n, k as u32));
            }
        }
    }

    #[test]
    fn jm_square_in_degree_two_is_a_witness() {
        let r = well_definedness_experiment(2, 2).unwrap();
        assert!(r.expansions_agree());
        // e_1^2 - 1 vanishes at Ξ_2 but T_2 sends it to the identity
        assert_eq!(r.relations, 1);
        assert_eq!(r.relations_not_preserved, 1);
        assert_eq!(r.witnesses[0].f, "e[] - e[1,1]");
        assert_eq!(r.witnesses[0].transitive_value, "-1*K[1,1]");
    }

    #[test]
    fn span_in_small_degree() {
        let r = span_experiment(3, 3).unwrap();
        assert!(r.span <= r.generated && r.generated <= r.centre);
    }
}
