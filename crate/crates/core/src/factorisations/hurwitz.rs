use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{check_degree, OrbitState, Partition, Permutation, Transposition};

/// `ℓ(α) + ℓ(β) - 2 + 2g`.
pub fn double_hurwitz_length(alpha: &Partition, beta: &Partition, genus: u32) -> usize {
    alpha.len() + beta.len() + 2 * genus as usize - 2
}

/// Number of tuples `(σ, τ_1, …, τ_m)` with `σ` of type `alpha`, the product
/// of type `beta`, `m = ℓ(α) + ℓ(β) - 2 + 2g`, and the group they generate
/// transitive on `[n]`. Every `σ` in the class is visited.
pub fn count_double_hurwitz(alpha: &Partition, beta: &Partition, genus: u32) -> Result<BigUint> {
    let n = alpha.size();
    if beta.size() != n {
        return Err(Error::DegreeMismatch { left: n, right: beta.size() });
    }
    check_degree(n)?;
    let m = double_hurwitz_length(alpha, beta, genus);
    let all: Vec<Transposition> = (2..=n)
        .flat_map(|b| (1..b).map(move |a| Transposition::new(a, b).expect("a < b")))
        .collect();
    let sources: Vec<Permutation> = Permutation::all(n).filter(|p| p.cycle_type() == *alpha).collect();
    Ok(sources
        .par_iter()
        .map(|sigma| {
            let mut layer: HashMap<(Permutation, OrbitState), BigUint> = HashMap::new();
            layer.insert((*sigma, OrbitState::of_permutation(sigma)), BigUint::one());
            for _ in 0..m {
                let mut next: HashMap<(Permutation, OrbitState), BigUint> = HashMap::with_capacity(layer.len());
                for ((p, orb), c) in &layer {
                    for &t in &all {
                        *next.entry((p.then_transposition(t), orb.merge(t.lo(), t.hi()))).or_default() += c;
                    }
                }
                layer = next;
            }
            layer
                .into_iter()
                .filter(|((p, orb), _)| orb.is_transitive() && p.cycle_type() == *beta)
                .map(|(_, c)| c)
                .sum::<BigUint>()
        })
        .sum())
}

/// `b_g(β) = |H^g_{(n),β}| / |C_β|`; the division is checked.
pub fn b_value(beta: &Partition, genus: u32) -> Result<BigUint> {
    let n = beta.size();
    let count = count_double_hurwitz(&Partition::single(n), beta, genus)?;
    let class = beta.class_size();
    let (q, r) = count.div_rem(&class);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!("{count} tuples over class {beta} of size {class}")));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::orbits_of_transpositions;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(count_double_hurwitz(&part("[3]"), &part("[2,1]"), 0).unwrap(), BigUint::from(6u32));
        assert_eq!(b_value(&part("[2,1]"), 0).unwrap(), BigUint::from(2u32));
        assert_eq!(count_double_hurwitz(&part("[2]"), &part("[2]"), 0).unwrap(), BigUint::one());
        assert_eq!(b_value(&part("[2]"), 0).unwrap(), BigUint::one());
        // ℓ(α) + ℓ(β) - 2 = 2 here, and σ τ_1 τ_2 = e has 2 · 3 solutions
        assert_eq!(count_double_hurwitz(&part("[3]"), &part("[1,1,1]"), 0).unwrap(), BigUint::from(6u32));
    }

    fn brute(alpha: &Partition, beta: &Partition, genus: u32) -> usize {
        let n = alpha.size();
        let m = double_hurwitz_length(alpha, beta, genus);
        let all: Vec<Transposition> = (2..=n)
            .flat_map(|b| (1..b).map(move |a| Transposition::new(a, b).unwrap()))
            .collect();
        let mut total = 0;
        if all.is_empty() && m > 0 {
            return 0;
        }
        for sigma in Permutation::all(n).filter(|p| p.cycle_type() == *alpha) {
            let mut idx = vec![0usize; m];
            loop {
                let tuple: Vec<Transposition> = idx.iter().map(|&i| all[i]).collect();
                let prod = tuple.iter().fold(sigma, |acc, &t| acc.then_transposition(t));
                let mut gens: Vec<Transposition> = tuple.clone();
                for c in sigma.cycles() {
                    for w in c.windows(2) {
                        gens.push(Transposition::new(w[0], w[1]).unwrap());
                    }
                }
                if prod.cycle_type() == *beta && orbits_of_transpositions(n, &gens).unwrap().is_transitive() {
                    total += 1;
                }
                let mut k = 0;
                while k < m {
                    idx[k] += 1;
                    if idx[k] < all.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == m {
                    break;
                }
            }
        }
        total
    }

    #[test]
    fn dp_matches_brute_force() {
        for n in 1..=4 {
            for alpha in Partition::all(n) {
                for beta in Partition::all(n) {
                    for g in 0..=1 {
                        if n == 4 && g == 1 && alpha.len() + beta.len() > 4 {
                            continue;
                        }
                        let dp = count_double_hurwitz(&alpha, &beta, g).unwrap();
                        assert_eq!(dp, BigUint::from(brute(&alpha, &beta, g)), "{alpha} {beta} g={g}");
                    }
                }
            }
        }
    }
}
