use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_degree, Permutation, Transposition, MAX_DEGREE};
use crate::error::{parse_error, Error, Result};

/// A linear order `i_1 ≺ i_2 ≺ ... ≺ i_n` on `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TotalOrder {
    sequence: Vec<usize>,
    // rank[s - 1] = 1-based position of s in `sequence`
    rank: [u8; MAX_DEGREE],
}

impl TotalOrder {
    pub fn natural(n: usize) -> Self {
        TotalOrder::from_sequence((1..=n).collect()).expect("natural order is valid")
    }

    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        check_degree(n)?;
        let mut rank = [0u8; MAX_DEGREE];
        for (pos, &s) in sequence.iter().enumerate() {
            if s == 0 || s > n {
                return Err(Error::SymbolOutOfRange { symbol: s, n });
            }
            if rank[s - 1] != 0 {
                return Err(Error::NotAPermutation(format!("{s} occurs twice in the order")));
            }
            rank[s - 1] = (pos + 1) as u8;
        }
        Ok(TotalOrder { sequence, rank })
    }

    pub fn degree(&self) -> usize {
        self.sequence.len()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// `i_j` for the 1-based position `j`.
    pub fn at(&self, j: usize) -> usize {
        self.sequence[j - 1]
    }

    /// 1-based position of `s`.
    pub fn rank(&self, s: usize) -> usize {
        self.rank[s - 1] as usize
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.rank(a) < self.rank(b)
    }

    pub fn is_natural(&self) -> bool {
        self.sequence.iter().enumerate().all(|(i, &s)| s == i + 1)
    }

    /// `≺_j`: the order with `i_j` and `i_{j+1}` exchanged.
    pub fn swap_adjacent(&self, j: usize) -> TotalOrder {
        assert!(j >= 1 && j < self.degree(), "adjacent swap index {j} out of range");
        let mut sequence = self.sequence.clone();
        sequence.swap(j - 1, j);
        TotalOrder::from_sequence(sequence).expect("swap keeps a permutation")
    }

    /// The `≺`-larger symbol of `t`.
    pub fn max_of(&self, t: Transposition) -> usize {
        let (a, b) = t.symbols();
        if self.less(a, b) {
            b
        } else {
            a
        }
    }

    /// The `≺`-smaller symbol of `t`.
    pub fn min_of(&self, t: Transposition) -> usize {
        let (a, b) = t.symbols();
        if self.less(a, b) {
            a
        } else {
            b
        }
    }

    /// `(a b)` written with `a ≺ b`.
    pub fn display_transposition(&self, t: Transposition) -> String {
        format!("({} {})", self.min_of(t), self.max_of(t))
    }

    /// Whether the `≺`-larger symbols of `factors` weakly increase.
    pub fn is_monotone(&self, factors: &[Transposition]) -> bool {
        factors
            .windows(2)
            .all(|w| self.rank(self.max_of(w[0])) <= self.rank(self.max_of(w[1])))
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.sequence.iter().enumerate() {
            if k > 0 {
                write!(f, "<")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TotalOrder {
    type Err = Error;

    /// Parses `"3<2<1"`.
    fn from_str(input: &str) -> Result<Self> {
        let mut sequence = Vec::new();
        let mut offset = 0;
        for token in input.split('<') {
            let trimmed = token.trim();
            let s: usize = trimmed
                .parse()
                .map_err(|_| parse_error(input, offset, format!("{trimmed:?} is not a symbol")))?;
            sequence.push(s);
            offset += token.len() + 1;
        }
        TotalOrder::from_sequence(sequence)
    }
}

impl Serialize for TotalOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TotalOrder {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The order `δ⁻¹(1) ≺ δ⁻¹(2) ≺ ... ≺ δ⁻¹(n)`; the rank of `s` is `δ(s)`.
pub fn order_from_conjugator(delta: &Permutation) -> TotalOrder {
    let inv = delta.inverse();
    TotalOrder::from_sequence((1..=delta.degree()).map(|s| inv.image(s)).collect()).expect("inverse is a bijection")
}

/// Adjacent swaps (1-based positions) that bubble-sort `sequence` into
/// increasing order, in the order bubble sort performs them.
pub fn bubble_sort_swaps(sequence: &[usize]) -> Vec<usize> {
    let mut seq = sequence.to_vec();
    let mut swaps = Vec::new();
    let n = seq.len();
    for pass in 0..n {
        for k in 0..n.saturating_sub(1 + pass) {
            if seq[k] > seq[k + 1] {
                seq.swap(k, k + 1);
                swaps.push(k + 1);
            }
        }
    }
    swaps
}

/// Indices `j_1, ..., j_r` such that applying the adjacent swaps `(j j+1)`
/// to the natural order, in that order, produces `target`. This is the
/// bubble-sort decomposition read backwards.
pub fn simple_reflection_decomposition(target: &TotalOrder) -> Vec<usize> {
    let mut swaps = bubble_sort_swaps(target.sequence());
    swaps.reverse();
    swaps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_print_and_rank() {
        let o: TotalOrder = "3<2<1".parse().unwrap();
        assert_eq!(o.to_string(), "3<2<1");
        assert_eq!(o.rank(3), 1);
        assert!(o.less(2, 1));
        assert!("1<1<2".parse::<TotalOrder>().is_err());
        assert!("1<x".parse::<TotalOrder>().is_err());
    }

    #[test]
    fn order_from_conjugator_examples() {
        assert!(order_from_conjugator(&Permutation::identity(4)).is_natural());
        let delta = Permutation::parse("(1 3)", Some(3)).unwrap();
        assert_eq!(order_from_conjugator(&delta).to_string(), "3<2<1");
    }

    #[test]
    fn relabelling_by_conjugator_sorts_pairs() {
        // (a b) with a ≺ b is sent to (δ(a) δ(b)) with δ(a) < δ(b).
        for delta in Permutation::all(4) {
            let order = order_from_conjugator(&delta);
            for a in 1..=4 {
                for b in 1..=4 {
                    if !order.less(a, b) {
                        continue;
                    }
                    let t = Transposition::new(a, b).unwrap();
                    let moved = t.conjugate(&delta.inverse());
                    assert_eq!(moved.symbols(), (delta.image(a), delta.image(b)));
                    assert!(delta.image(a) < delta.image(b));
                }
            }
        }
    }

    #[test]
    fn simple_reflections_replay() {
        assert!(simple_reflection_decomposition(&TotalOrder::natural(4)).is_empty());
        assert_eq!(simple_reflection_decomposition(&"2<1<3".parse().unwrap()), vec![1]);
        for p in Permutation::all(4) {
            let target = TotalOrder::from_sequence(p.images()).unwrap();
            let mut cur = TotalOrder::natural(4);
            for j in simple_reflection_decomposition(&target) {
                cur = cur.swap_adjacent(j);
            }
            assert_eq!(cur, target);
        }
    }

    #[test]
    fn monotone_check() {
        let nat = TotalOrder::natural(3);
        let f = crate::perm::parse_transpositions("(1 2)(2 3)").unwrap();
        assert!(nat.is_monotone(&f));
        let g = crate::perm::parse_transpositions("(1 3)(1 2)").unwrap();
        assert!(!nat.is_monotone(&g));
        let rev: TotalOrder = "3<2<1".parse().unwrap();
        assert!(rev.is_monotone(&g));
    }
}
