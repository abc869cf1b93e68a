use crate::perm::{orbits, orbits_of_transpositions, product_of, Permutation, Transposition};

/// The unique `(j_1 i_1) ⋯ (j_k i_k) = target` with `j_t < i_t`,
/// `i_1 < ⋯ < i_k` and `k = n - c(target)`.
///
/// Built from the right: the last factor must carry the largest moved
/// symbol `i`, and removing it forces `j = target(i)`.
pub fn strictly_monotone_factorisation(target: &Permutation) -> Vec<Transposition> {
    let n = target.degree();
    let mut rest = *target;
    let mut factors = Vec::with_capacity(n - target.num_cycles());
    while let Some(i) = (1..=n).rev().find(|&s| rest.image(s) != s) {
        let j = rest.image(i);
        let t = Transposition::new(j, i).expect("moved symbol");
        factors.push(t);
        rest = rest.then_transposition(t);
    }
    factors.reverse();
    assert_eq!(factors.len(), n - target.num_cycles(), "strict factorisation of {target} has the wrong length");
    assert_eq!(product_of(n, &factors), *target, "strict factorisation of {target} does not multiply back");
    assert_eq!(
        orbits_of_transpositions(n, &factors).expect("symbols in range"),
        orbits(n, &[*target]).expect("degree matches"),
        "strict factorisation of {target} has the wrong orbits"
    );
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_transpositions;

    #[test]
    fn examples() {
        let p = |s: &str| Permutation::parse(s, Some(3)).unwrap();
        assert_eq!(strictly_monotone_factorisation(&p("(1 2 3)")), parse_transpositions("(1 2)(1 3)").unwrap());
        assert!(strictly_monotone_factorisation(&Permutation::identity(3)).is_empty());
        assert_eq!(strictly_monotone_factorisation(&p("(1 2)")), parse_transpositions("(1 2)").unwrap());
    }

    #[test]
    fn unique_among_all_tuples() {
        // brute force over all strictly increasing i-sequences on S_4
        let n = 4;
        let mut seen = std::collections::HashMap::new();
        fn rec(n: usize, min_i: usize, cur: Permutation, stack: &mut Vec<Transposition>, seen: &mut std::collections::HashMap<Permutation, Vec<Vec<Transposition>>>) {
            seen.entry(cur).or_default().push(stack.clone());
            for i in min_i..=n {
                for j in 1..i {
                    let t = Transposition::new(j, i).unwrap();
                    stack.push(t);
                    rec(n, i + 1, cur.then_transposition(t), stack, seen);
                    stack.pop();
                }
            }
        }
        rec(n, 2, Permutation::identity(n), &mut Vec::new(), &mut seen);
        assert_eq!(seen.len(), 24);
        for (w, list) in seen {
            assert_eq!(list.len(), 1, "{w}");
            assert_eq!(list[0], strictly_monotone_factorisation(&w));
        }
    }
}
