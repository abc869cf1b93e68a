use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::perm::{check_degree, Partition, Permutation};

/// Conjugacy classes of `S_n`, each listed in permutation order.
pub struct ClassTable {
    classes: BTreeMap<Partition, Vec<Permutation>>,
}

impl ClassTable {
    fn build(n: usize) -> Self {
        let mut classes: BTreeMap<Partition, Vec<Permutation>> = BTreeMap::new();
        for p in Permutation::all(n) {
            classes.entry(p.cycle_type()).or_default().push(p);
        }
        ClassTable { classes }
    }

    pub fn members(&self, lambda: &Partition) -> &[Permutation] {
        self.classes.get(lambda).map_or(&[], Vec::as_slice)
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.classes.keys()
    }
}

/// The class table of `S_n`, computed once per degree.
pub fn class_table(n: usize) -> Result<Arc<ClassTable>> {
    check_degree(n)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ClassTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("class cache poisoned").get(&n) {
        return Ok(Arc::clone(t));
    }
    // built outside the lock; a concurrent duplicate build is harmless
    let table = Arc::new(ClassTable::build(n));
    Ok(Arc::clone(cache.lock().expect("class cache poisoned").entry(n).or_insert(table)))
}

/// `K_λ`, the sum of all permutations of cycle type `λ`.
pub fn class_sum(lambda: &Partition) -> Result<AlgebraElement> {
    let n = lambda.size();
    let table = class_table(n)?;
    AlgebraElement::from_terms(n, table.members(lambda).iter().map(|p| (*p, BigInt::one())))
}

/// Coordinates of a central element in the class-sum basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassSumDecomposition {
    pub n: usize,
    pub coefficients: BTreeMap<Partition, BigInt>,
}

impl ClassSumDecomposition {
    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.coefficients.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `Σ c_λ K_λ` as an algebra element.
    pub fn to_element(&self) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(self.n);
        for (lambda, c) in &self.coefficients {
            out = out.add(&class_sum(lambda)?.scale(c))?;
        }
        Ok(out)
    }

    /// Terms in display order: more parts first, then reverse
    /// lexicographic.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut v: Vec<_> = self.coefficients.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }
}

impl Serialize for ClassSumDecomposition {
    /// A map from partition strings to coefficients, in display order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.sorted_terms();
        let mut map = s.serialize_map(Some(terms.len()))?;
        for (lambda, c) in terms {
            map.serialize_entry(&lambda.to_string(), &crate::numeric::JsonInt(c))?;
        }
        map.end()
    }
}

impl fmt::Display for ClassSumDecomposition {
    /// `22*K[1,1,1,1] + 8*K[3,1] + 4*K[2,2]`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (lambda, c)) in terms.into_iter().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{abs}*K{lambda}")?;
        }
        Ok(())
    }
}

/// Class-sum coordinates of `x`, or `NotCentral` naming the first
/// conjugate pair (in permutation order) whose coefficients differ.
pub fn decompose(x: &AlgebraElement) -> Result<ClassSumDecomposition> {
    let table = class_table(x.degree())?;
    let mut coefficients = BTreeMap::new();
    for lambda in table.partitions() {
        let members = table.members(lambda);
        let reference = members[0];
        let c = x.coefficient_of(&reference);
        if let Some(other) = members[1..].iter().find(|p| x.coefficient_of(p) != c) {
            return Err(Error::NotCentral {
                omega: reference,
                gamma: *other,
                omega_coefficient: c,
                gamma_coefficient: x.coefficient_of(other),
            });
        }
        if !c.is_zero() {
            coefficients.insert(lambda.clone(), c);
        }
    }
    Ok(ClassSumDecomposition { n: x.degree(), coefficients })
}

pub fn is_central(x: &AlgebraElement) -> bool {
    decompose(x).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::jm_element;

    #[test]
    fn class_sums_decompose_to_themselves() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                let k = class_sum(&lambda).unwrap();
                assert_eq!(BigInt::from(k.support_len()), BigInt::from(lambda.class_size()));
                let d = decompose(&k).unwrap();
                assert_eq!(d.coefficients.len(), 1);
                assert_eq!(d.coefficient(&lambda), BigInt::one());
                assert_eq!(d.to_element().unwrap(), k);
            }
        }
    }

    #[test]
    fn jm_power_is_not_central() {
        let x = jm_element(4, 4).unwrap().pow(4);
        match decompose(&x) {
            Err(Error::NotCentral {
                omega,
                gamma,
                omega_coefficient,
                gamma_coefficient,
            }) => {
                assert_eq!(omega.cycle_type(), gamma.cycle_type());
                assert_ne!(omega_coefficient, gamma_coefficient);
                assert_eq!(x.coefficient_of(&omega), omega_coefficient);
            }
            other => panic!("expected NotCentral, got {other:?}"),
        }
        assert!(!is_central(&x));
    }

    #[test]
    fn display() {
        let mut coefficients = BTreeMap::new();
        coefficients.insert("[2,2]".parse().unwrap(), BigInt::from(4));
        coefficients.insert("[3,1]".parse().unwrap(), BigInt::from(-3));
        coefficients.insert("[1,1,1,1]".parse().unwrap(), BigInt::from(22));
        let d = ClassSumDecomposition { n: 4, coefficients };
        assert_eq!(d.to_string(), "22*K[1,1,1,1] - 3*K[3,1] + 4*K[2,2]");
        let zero = ClassSumDecomposition { n: 4, coefficients: BTreeMap::new() };
        assert_eq!(zero.to_string(), "0");
    }
}
