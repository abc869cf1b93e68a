use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};

/// `a_g(i, α)`: star factorisations of a permutation whose root `n` lies
/// in an `i`-cycle and whose other cycles have type `α`, from
///
/// `a_g(i, α) = a_g(i-1, α) + Σ_t α_t a_g(i + α_t, α ∖ α_t) + Σ_{t<i} a_{g-1}(i - t, α ∪ t)`
///
/// with `a_0(1, ε) = 1` and zero whenever `i = 0`. Each call strictly
/// lowers `(g, i + |α|, ℓ(α))` lexicographically, so the memoised
/// evaluation terminates.
#[derive(Default)]
pub struct StarRecurrence {
    memo: Mutex<HashMap<(usize, Partition, u32), BigUint>>,
}

impl StarRecurrence {
    pub fn new() -> Self {
        StarRecurrence::default()
    }

    pub fn value(&self, i: usize, alpha: &Partition, genus: u32) -> BigUint {
        if i == 0 {
            return BigUint::zero();
        }
        if i == 1 && alpha.is_empty() && genus == 0 {
            return BigUint::one();
        }
        let key = (i, alpha.clone(), genus);
        if let Some(v) = self.memo.lock().expect("memo poisoned").get(&key) {
            return v.clone();
        }
        let mut v = self.value(i - 1, alpha, genus);
        for (t, &part) in alpha.parts().iter().enumerate() {
            v += self.value(i + part, &alpha.without_index(t), genus) * part;
        }
        if genus > 0 {
            for t in 1..i {
                v += self.value(i - t, &alpha.with_part(t), genus - 1);
            }
        }
        // recomputation by another thread writes the same value
        self.memo.lock().expect("memo poisoned").insert(key, v.clone());
        v
    }

    pub fn len(&self) -> usize {
        self.memo.lock().expect("memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `a_g(i, α)` with a fresh memo table.
pub fn recurrence_star(i: usize, alpha: &Partition, genus: u32) -> BigUint {
    StarRecurrence::new().value(i, alpha, genus)
}

/// A permutation of `[i + |α|]` with `n` in an `i`-cycle and the remaining
/// cycles of type `α`.
pub fn recurrence_representative(i: usize, alpha: &Partition) -> Result<Permutation> {
    if i == 0 {
        return Err(Error::Condition {
            condition: "cycle length",
            detail: "the cycle through n must have positive length".into(),
        });
    }
    let n = i + alpha.size();
    let mut cycles = Vec::new();
    let mut next = 1;
    for &part in alpha.parts() {
        cycles.push((next..next + part).collect::<Vec<_>>());
        next += part;
    }
    cycles.push((next..=n).collect());
    Permutation::from_cycles(n, &cycles)
}
