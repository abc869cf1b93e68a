//! The library's counters and evaluators against naive enumeration written
//! here from the definitions, with its own 0-based permutation arithmetic.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use starfact::algebra::{class_sum, complete, decompose, elementary, evaluate, power_sum, transitive_evaluate};
use starfact::factorisations::{count_double_hurwitz, count_md, count_monotone, count_star, enumerate_star};
use starfact::{Partition, Permutation, TotalOrder};

type Images = Vec<usize>;

fn identity(n: usize) -> Images {
    (0..n).collect()
}

/// `p` followed by the transposition `(a b)`.
fn then_swap(p: &Images, a: usize, b: usize) -> Images {
    p.iter()
        .map(|&x| if x == a { b } else if x == b { a } else { x })
        .collect()
}

fn to_perm(p: &Images) -> Permutation {
    Permutation::from_images(&p.iter().map(|x| x + 1).collect::<Vec<_>>()).unwrap()
}

fn cycle_count(p: &Images) -> usize {
    let mut seen = vec![false; p.len()];
    let mut c = 0;
    for s in 0..p.len() {
        if !seen[s] {
            c += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
            }
        }
    }
    c
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
        comp[ra] = rb;
    }
    let r = find(&mut comp, 0);
    (0..n).all(|x| find(&mut comp, x) == r)
}

fn all_transpositions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect()
}

/// Every sequence of `len` items from `alphabet`, with its running product.
fn sequences<T: Copy>(n: usize, alphabet: &[T], len: usize, apply: impl Fn(&Images, T) -> Images + Copy) -> Vec<(Vec<T>, Images)> {
    let mut out = vec![(Vec::new(), identity(n))];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|(seq, p)| {
                alphabet.iter().map(move |&t| {
                    let mut s = seq.clone();
                    s.push(t);
                    (s, apply(&p, t))
                })
            })
            .collect();
    }
    out
}

fn all_perms(n: usize) -> Vec<Images> {
    Permutation::all(n)
        .map(|p| (1..=n).map(|s| p.image(s) - 1).collect())
        .collect()
}

#[test]
fn star_counts_match_naive_enumeration() {
    for n in 1..=4 {
        let root = n - 1;
        let legs: Vec<usize> = (0..n).filter(|&a| a != root).collect();
        for g in 0..=1u32 {
            let mut by_target: HashMap<Images, usize> = HashMap::new();
            for target in all_perms(n) {
                let m = n + cycle_count(&target) + 2 * g as usize - 2;
                let count = sequences(n, &legs, m, |p, a| then_swap(p, a, root))
                    .into_iter()
                    .filter(|(seq, p)| *p == target && legs.iter().all(|l| seq.contains(l)))
                    .count();
                by_target.insert(target, count);
            }
            for (target, count) in by_target {
                let w = to_perm(&target);
                assert_eq!(count_star(&w, g, n).unwrap(), BigUint::from(count), "{w} g={g}");
                assert_eq!(enumerate_star(&w, g, n).unwrap().len(), count, "{w} g={g}");
            }
        }
    }
}

#[test]
fn monotone_counts_match_naive_enumeration() {
    let orders = ["1<2<3<4", "4<3<2<1", "2<4<1<3"];
    for order in orders {
        let order: TotalOrder = order.parse().unwrap();
        let n = order.degree();
        let rank = |s: usize| order.rank(s + 1);
        let ts = all_transpositions(n);
        for m in 0..=5 {
            let mut counts: HashMap<Images, usize> = HashMap::new();
            for (seq, p) in sequences(n, &ts, m, |p, (a, b)| then_swap(p, a, b)) {
                let tops: Vec<usize> = seq.iter().map(|&(a, b)| rank(a).max(rank(b))).collect();
                if tops.windows(2).all(|w| w[0] <= w[1]) {
                    *counts.entry(p).or_default() += 1;
                }
            }
            for target in all_perms(n) {
                let w = to_perm(&target);
                let c = n - cycle_count(&target);
                if m < c || !(m - c).is_multiple_of(2) {
                    continue;
                }
                let g = ((m - c) / 2) as u32;
                let want = counts.get(&target).copied().unwrap_or(0);
                assert_eq!(count_monotone(&w, g, &order).unwrap(), BigUint::from(want), "{w} under {order}, m={m}");
            }
        }
    }
}

#[test]
fn monotone_double_counts_match_naive_enumeration() {
    for n in 2..=4 {
        let ts = all_transpositions(n);
        let cycles: Vec<Images> = all_perms(n).into_iter().filter(|p| cycle_count(p) == 1).collect();
        for g in 0..=1u32 {
            for target in all_perms(n) {
                let m = cycle_count(&target) - 1 + 2 * g as usize;
                let mut count = 0usize;
                for sigma in &cycles {
                    for (seq, p) in sequences(n, &ts, m, |p, (a, b)| then_swap(p, a, b)) {
                        let monotone = seq.windows(2).all(|w| w[0].1 <= w[1].1);
                        // σ then the tail
                        let total: Images = (0..n).map(|x| p[sigma[x]]).collect();
                        if monotone && total == target {
                            count += 1;
                        }
                    }
                }
                let w = to_perm(&target);
                assert_eq!(count_md(&w, g).unwrap(), BigUint::from(count), "{w} g={g}");
            }
        }
    }
}

#[test]
fn double_hurwitz_counts_match_naive_enumeration() {
    for n in 2..=4 {
        let ts = all_transpositions(n);
        for alpha in Partition::all(n) {
            for beta in Partition::all(n) {
                for g in 0..=1u32 {
                    let m = alpha.len() + beta.len() + 2 * g as usize - 2;
                    if n == 4 && m > 5 {
                        continue;
                    }
                    let mut count = 0usize;
                    for sigma in all_perms(n).into_iter().filter(|p| to_perm(p).cycle_type() == alpha) {
                        for (seq, p) in sequences(n, &ts, m, |p, (a, b)| then_swap(p, a, b)) {
                            let total: Images = (0..n).map(|x| p[sigma[x]]).collect();
                            if to_perm(&total).cycle_type() != beta {
                                continue;
                            }
                            let mut edges: Vec<(usize, usize)> = seq.clone();
                            edges.extend((0..n).map(|x| (x, sigma[x])));
                            if connected(n, &edges) {
                                count += 1;
                            }
                        }
                    }
                    assert_eq!(
                        count_double_hurwitz(&alpha, &beta, g).unwrap(),
                        BigUint::from(count),
                        "{alpha} {beta} g={g}"
                    );
                }
            }
        }
    }
}

/// `Σ` over all tuples `(j_1 k_1) ⋯ (j_t k_t)` drawn from the expansion of
/// `f(J_2, …, J_n)` for a product of power sums, tracking transitivity.
fn naive_power_sum_product(n: usize, parts: &[usize], transitive_only: bool) -> HashMap<Images, BigInt> {
    // a word is a choice of slot per power-sum factor, repeated part times
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    for &k in parts {
        words = words
            .into_iter()
            .flat_map(|w| {
                (1..n).map(move |slot| {
                    let mut w = w.clone();
                    w.extend(std::iter::repeat_n(slot, k));
                    w
                })
            })
            .collect();
    }
    let mut out: HashMap<Images, BigInt> = HashMap::new();
    for word in words {
        let mut tuples: Vec<(Images, Vec<(usize, usize)>)> = vec![(identity(n), Vec::new())];
        for &k in &word {
            tuples = tuples
                .into_iter()
                .flat_map(|(p, e)| {
                    (0..k).map(move |j| {
                        let mut e = e.clone();
                        e.push((j, k));
                        (then_swap(&p, j, k), e)
                    })
                })
                .collect();
        }
        for (p, e) in tuples {
            if !transitive_only || connected(n, &e) {
                *out.entry(p).or_default() += 1;
            }
        }
    }
    out
}

#[test]
fn power_sum_evaluation_matches_naive_expansion() {
    for n in 2..=4 {
        for parts in [vec![1], vec![2], vec![3], vec![2, 1], vec![1, 1, 1], vec![4]] {
            let lambda = Partition::new(parts.clone());
            let f = parts
                .iter()
                .fold(starfact::algebra::Polynomial::one(n), |acc, &k| acc.multiply(&power_sum(n, k as u32)));
            assert_eq!(f, starfact::algebra::Basis::PowerSum.polynomial(n, &lambda));
            for transitive_only in [false, true] {
                let naive = naive_power_sum_product(n, &parts, transitive_only);
                let x = if transitive_only {
                    transitive_evaluate(&f).unwrap()
                } else {
                    evaluate(&f).unwrap()
                };
                assert_eq!(x.support_len(), naive.values().filter(|c| **c != BigInt::from(0)).count());
                for (p, c) in naive {
                    assert_eq!(x.coefficient_of(&to_perm(&p)), c, "n={n} p{lambda} transitive={transitive_only}");
                }
            }
        }
    }
}

#[test]
fn symmetric_functions_of_jm_elements_are_central() {
    for n in 2..=5 {
        for k in 0..=4u32 {
            for f in [elementary(n, k), complete(n, k), power_sum(n, k)] {
                decompose(&evaluate(&f).unwrap()).unwrap();
                decompose(&transitive_evaluate(&f).unwrap()).unwrap();
            }
        }
        // e_k(Ξ_n) is the sum of the classes with n - k cycles
        for k in 0..n {
            let mut want = starfact::algebra::AlgebraElement::zero(n);
            for lambda in Partition::all(n).into_iter().filter(|l| l.len() == n - k) {
                want = want.add(&class_sum(&lambda).unwrap()).unwrap();
            }
            assert_eq!(evaluate(&elementary(n, k as u32)).unwrap(), want, "n={n} k={k}");
        }
    }
}
