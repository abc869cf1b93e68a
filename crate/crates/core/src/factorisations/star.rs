use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{check_degree, Permutation, Transposition};

/// Number of factors of a genus-`g` star factorisation: `n + c(ω) - 2 + 2g`.
pub fn star_length(target: &Permutation, genus: u32) -> usize {
    target.degree() + target.num_cycles() + 2 * genus as usize - 2
}

/// Inverse of [`star_length`], `None` when `length` is not of that form.
pub fn star_genus(target: &Permutation, length: usize) -> Option<u32> {
    let base = target.degree() + target.num_cycles() - 2;
    if length < base || !(length - base).is_multiple_of(2) {
        None
    } else {
        Some(((length - base) / 2) as u32)
    }
}

/// A transitive star factorisation `(a_1 r)(a_2 r)...(a_m r) = target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StarFactorisation {
    pub n: usize,
    pub root: usize,
    pub legs: Vec<usize>,
    pub target: Permutation,
    pub genus: u32,
}

impl StarFactorisation {
    /// Validates the legs against the target and derives the genus.
    pub fn new(target: Permutation, root: usize, legs: Vec<usize>) -> Result<Self> {
        let n = target.degree();
        check_root(n, root)?;
        for &a in &legs {
            if a == 0 || a > n {
                return Err(Error::SymbolOutOfRange { symbol: a, n });
            }
            if a == root {
                return Err(Error::Condition {
                    condition: "star",
                    detail: format!("leg {a} equals the root"),
                });
            }
        }
        if let Some(missing) = (1..=n).find(|&s| s != root && !legs.contains(&s)) {
            return Err(Error::Condition {
                condition: "S2'",
                detail: format!("({missing} {root}) never appears"),
            });
        }
        let product = legs
            .iter()
            .fold(Permutation::identity(n), |acc, &a| acc.then_transposition(leg(a, root)));
        if product != target {
            return Err(Error::Condition {
                condition: "product",
                detail: format!("factors multiply to {product}, not {target}"),
            });
        }
        let genus = star_genus(&target, legs.len()).ok_or_else(|| Error::Condition {
            condition: "S1",
            detail: format!(
                "{} factors is not n + c(ω) - 2 + 2g for n = {n}, c(ω) = {}",
                legs.len(),
                target.num_cycles()
            ),
        })?;
        Ok(StarFactorisation {
            n,
            root,
            legs,
            target,
            genus,
        })
    }

    pub fn factors(&self) -> Vec<Transposition> {
        self.legs.iter().map(|&a| leg(a, self.root)).collect()
    }

    pub fn len(&self) -> usize {
        self.legs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.legs.is_empty()
    }

    /// Factors in cycle notation with the root written last.
    pub fn to_line(&self) -> String {
        self.legs.iter().map(|a| format!("({a} {})", self.root)).collect::<Vec<_>>().join(" ")
    }
}

fn leg(a: usize, root: usize) -> Transposition {
    Transposition::new(a, root).expect("leg differs from root")
}

fn check_root(n: usize, root: usize) -> Result<()> {
    if root == 0 || root > n {
        Err(Error::SymbolOutOfRange { symbol: root, n })
    } else {
        Ok(())
    }
}

/// All genus-`genus` transitive star factorisations of `target` with the
/// given root, in lexicographic order of the leg sequence.
pub fn enumerate_star(target: &Permutation, genus: u32, root: usize) -> Result<Vec<StarFactorisation>> {
    let n = target.degree();
    check_root(n, root)?;
    let m = star_length(target, genus);
    let mut out = Vec::new();
    let mut legs = Vec::with_capacity(m);
    let others: Vec<usize> = (1..=n).filter(|&s| s != root).collect();
    let ctx = StarSearch {
        n,
        root,
        target,
        others: &others,
        full: full_mask(n, root),
    };
    ctx.dfs(Permutation::identity(n), 0, m, &mut legs, &mut |legs| {
        out.push(StarFactorisation {
            n,
            root,
            legs: legs.to_vec(),
            target: *target,
            genus,
        })
    });
    Ok(out)
}

struct StarSearch<'a> {
    n: usize,
    root: usize,
    target: &'a Permutation,
    others: &'a [usize],
    full: u32,
}

impl StarSearch<'_> {
    fn dfs(&self, cur: Permutation, mask: u32, remaining: usize, legs: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        if remaining == 0 {
            if mask == self.full && cur == *self.target {
                emit(legs);
            }
            return;
        }
        // transposition distance from cur to target is a lower bound on the steps left
        let rest = cur.inverse().then(self.target);
        let dist = self.n - rest.num_cycles();
        let uncovered = (self.full & !mask).count_ones() as usize;
        if dist > remaining || uncovered > remaining || !(remaining - dist).is_multiple_of(2) {
            return;
        }
        for &a in self.others {
            legs.push(a);
            self.dfs(
                cur.then_transposition(leg(a, self.root)),
                mask | (1 << (a - 1)),
                remaining - 1,
                legs,
                emit,
            );
            legs.pop();
        }
    }
}

fn full_mask(n: usize, root: usize) -> u32 {
    ((1u32 << n) - 1) & !(1 << (root - 1))
}

/// Star factorisation counts for every target in `S_n` and every length up
/// to a bound, computed by dynamic programming over (prefix product, set of
/// legs used so far).
pub struct StarCounts {
    n: usize,
    root: usize,
    transitive: Vec<HashMap<Permutation, BigUint>>,
    unconstrained: Vec<HashMap<Permutation, BigUint>>,
}

impl StarCounts {
    pub fn build(n: usize, root: usize, max_len: usize) -> Result<Self> {
        check_degree(n)?;
        check_root(n, root)?;
        let full = full_mask(n, root);
        let mut states: HashMap<(Permutation, u32), BigUint> = HashMap::new();
        states.insert((Permutation::identity(n), 0), BigUint::one());
        let mut transitive = Vec::with_capacity(max_len + 1);
        let mut unconstrained = Vec::with_capacity(max_len + 1);
        let legs: Vec<(usize, Transposition)> = (1..=n).filter(|&a| a != root).map(|a| (a, leg(a, root))).collect();
        for len in 0..=max_len {
            let mut tr: HashMap<Permutation, BigUint> = HashMap::new();
            let mut un: HashMap<Permutation, BigUint> = HashMap::new();
            for ((p, mask), c) in &states {
                *un.entry(*p).or_default() += c;
                if *mask == full {
                    *tr.entry(*p).or_default() += c;
                }
            }
            transitive.push(tr);
            unconstrained.push(un);
            if len == max_len {
                break;
            }
            let mut next: HashMap<(Permutation, u32), BigUint> = HashMap::with_capacity(states.len());
            for ((p, mask), c) in &states {
                for &(a, t) in &legs {
                    *next.entry((p.then_transposition(t), mask | (1 << (a - 1)))).or_default() += c;
                }
            }
            states = next;
        }
        Ok(StarCounts {
            n,
            root,
            transitive,
            unconstrained,
        })
    }

    /// Enough lengths to cover every target of `S_n` up to `max_genus`.
    pub fn for_genus(n: usize, root: usize, max_genus: u32) -> Result<Self> {
        StarCounts::build(n, root, 2 * n - 2 + 2 * max_genus as usize)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn max_len(&self) -> usize {
        self.transitive.len() - 1
    }

    fn lookup(table: &[HashMap<Permutation, BigUint>], target: &Permutation, len: usize) -> BigUint {
        assert!(len < table.len(), "length {len} beyond the table");
        table[len].get(target).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Transitive star factorisations of `target` with `len` factors.
    pub fn transitive(&self, target: &Permutation, len: usize) -> BigUint {
        Self::lookup(&self.transitive, target, len)
    }

    /// Star factorisations of `target` with `len` factors, transitivity not
    /// required; this is `[target] J_r^len` for root `r = n`.
    pub fn unconstrained(&self, target: &Permutation, len: usize) -> BigUint {
        Self::lookup(&self.unconstrained, target, len)
    }

    /// `a_g(target)` for this root.
    pub fn genus(&self, target: &Permutation, genus: u32) -> BigUint {
        self.transitive(target, star_length(target, genus))
    }
}

/// Number of genus-`genus` transitive star factorisations of `target` with
/// the given root, by dynamic programming.
pub fn count_star(target: &Permutation, genus: u32, root: usize) -> Result<BigUint> {
    let len = star_length(target, genus);
    Ok(StarCounts::build(target.degree(), root, len)?.transitive(target, len))
}

/// Length-`length` star products equal to `target`, ignoring transitivity.
pub fn count_star_unconstrained(target: &Permutation, length: usize, root: usize) -> Result<BigUint> {
    Ok(StarCounts::build(target.degree(), root, length)?.unconstrained(target, length))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pn(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn s3_example_lists_two() {
        let omega = pn("(1 2)", 3);
        let list = enumerate_star(&omega, 0, 3).unwrap();
        let legs: Vec<_> = list.iter().map(|f| f.legs.clone()).collect();
        assert_eq!(legs, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert_eq!(count_star(&omega, 0, 3).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn small_degrees() {
        let t = pn("(1 2)", 2);
        let list = enumerate_star(&t, 0, 2).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].legs, vec![1]);
        let e1 = Permutation::identity(1);
        let list = enumerate_star(&e1, 0, 1).unwrap();
        assert_eq!(list.len(), 1);
        assert!(list[0].is_empty());
        assert_eq!(count_star(&e1, 1, 1).unwrap(), BigUint::zero());
    }

    #[test]
    fn unconstrained_counts() {
        assert_eq!(count_star_unconstrained(&pn("(1 2)", 3), 3, 3).unwrap(), BigUint::from(2u32));
        assert_eq!(count_star_unconstrained(&pn("(2 3)", 3), 3, 3).unwrap(), BigUint::from(3u32));
        assert_eq!(count_star_unconstrained(&Permutation::identity(4), 4, 4).unwrap(), BigUint::from(15u32));
        assert_eq!(count_star_unconstrained(&Permutation::identity(3), 0, 3).unwrap(), BigUint::one());
        assert_eq!(count_star_unconstrained(&pn("(1 2)", 3), 0, 3).unwrap(), BigUint::zero());
    }

    #[test]
    fn root_out_of_range() {
        assert!(enumerate_star(&Permutation::identity(3), 0, 4).is_err());
        assert!(count_star(&Permutation::identity(3), 0, 0).is_err());
    }

    #[test]
    fn listing_matches_dp_on_s4() {
        for root in 1..=4 {
            let table = StarCounts::for_genus(4, root, 1).unwrap();
            for omega in Permutation::all(4) {
                for g in 0..=1 {
                    let listed = enumerate_star(&omega, g, root).unwrap();
                    assert_eq!(BigUint::from(listed.len()), table.genus(&omega, g), "{omega} g={g} root={root}");
                    for f in &listed {
                        assert_eq!(StarFactorisation::new(omega, root, f.legs.clone()).unwrap(), *f);
                    }
                }
            }
        }
    }

    #[test]
    fn validation_names_the_condition() {
        let err = StarFactorisation::new(pn("(2 3)", 3), 3, vec![1, 1]).unwrap_err();
        assert_eq!(err.to_string(), "condition S2' violated: (2 3) never appears");
        let err = StarFactorisation::new(pn("(1 2)", 3), 3, vec![1, 2, 2]).unwrap_err();
        assert!(matches!(err, Error::Condition { condition: "product", .. }));
    }
}
