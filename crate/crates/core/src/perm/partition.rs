use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_degree, Permutation};
use crate::error::{parse_error, Error, Result};

/// An integer partition, parts kept weakly decreasing. The empty partition
/// is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into weakly decreasing order. Zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(n)`.
    pub fn single(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition::new(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ ∪ i`: one more part equal to `i`.
    pub fn with_part(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(i);
        Partition::new(parts)
    }

    /// `λ ∖ λ_t` for the 0-based index `t`.
    pub fn without_index(&self, t: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.remove(t);
        Partition { parts }
    }

    /// All partitions of `n`, largest first part first (reverse lexicographic).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `max_size`, the empty one included.
    pub fn all_up_to(max_size: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(Partition::all).collect()
    }

    /// Multiplicities `m_i` of each part size, indexed by part size.
    fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the centraliser order of a permutation of this
    /// cycle type.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::from(1u32);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigUint::from(i) * BigUint::from(k);
            }
        }
        z
    }

    /// Number of permutations with this cycle type, `n!/z_λ`.
    pub fn class_size(&self) -> BigUint {
        let mut fact = BigUint::from(1u32);
        for k in 2..=self.size() {
            fact *= BigUint::from(k);
        }
        fact / self.z()
    }

    /// The permutation whose cycles are runs of consecutive symbols:
    /// `[3,1]` gives `(1 2 3)(4)`.
    pub fn representative(&self) -> Result<Permutation> {
        let n = self.size();
        check_degree(n)?;
        let mut cycles = Vec::with_capacity(self.len());
        let mut next = 1;
        for &p in &self.parts {
            cycles.push((next..next + p).collect());
            next += p;
        }
        Permutation::from_cycles(n, &cycles)
    }

    /// Ordering used when printing class-sum expansions: more parts first,
    /// then reverse lexicographic, so `[1,1,1,1]`, `[3,1]`, `[2,2]`, `[4]`.
    pub fn display_cmp(&self, other: &Partition) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"[3,1,1]"`, `"[]"`, and the bare forms `"3,1,1"` / `"3 1 1"`.
    fn from_str(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        let inner = match (trimmed.strip_prefix('['), trimmed.ends_with(']')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => trimmed,
            _ => return Err(parse_error(input, 0, "unbalanced brackets")),
        };
        let mut parts = Vec::new();
        for token in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let part: usize = token.parse().map_err(|_| {
                let pos = input.find(token).unwrap_or(0);
                parse_error(input, pos, format!("{token:?} is not a positive integer"))
            })?;
            if part == 0 {
                return Err(parse_error(input, input.find(token).unwrap_or(0), "parts must be positive"));
            }
            parts.push(part);
        }
        let sorted = Partition::new(parts.clone());
        if sorted.parts != parts {
            return Err(parse_error(input, 0, "parts must be weakly decreasing"));
        }
        Ok(sorted)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: Partition = "[3,1,1]".parse().unwrap();
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.to_string(), "[3,1,1]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("[3,0]".parse::<Partition>().is_err());
    }

    #[test]
    fn counts_and_class_sizes() {
        let counts: Vec<usize> = (0..=7).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        for n in 1..=6 {
            let total: BigUint = Partition::all(n).iter().map(Partition::class_size).sum();
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(total, fact);
        }
        let lam: Partition = "[2,2]".parse().unwrap();
        assert_eq!(lam.class_size(), BigUint::from(3u32));
    }

    #[test]
    fn union_and_removal() {
        let a: Partition = "[2,1]".parse().unwrap();
        assert_eq!(a.with_part(3).to_string(), "[3,2,1]");
        assert_eq!(a.without_index(0).to_string(), "[1]");
        assert_eq!(Partition::empty().with_part(2), Partition::single(2));
    }

    #[test]
    fn representative_has_the_type() {
        for n in 1..=6 {
            for lam in Partition::all(n) {
                assert_eq!(lam.representative().unwrap().cycle_type(), lam);
            }
        }
    }

    #[test]
    fn display_order() {
        let mut v = Partition::all(4);
        v.sort_by(Partition::display_cmp);
        let s: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["[1,1,1,1]", "[2,1,1]", "[3,1]", "[2,2]", "[4]"]);
    }
}
