//! Permutations of `[n] = {1, ..., n}` and the small amount of structure the
//! rest of the crate needs on top of them: partitions, total orders, orbit
//! partitions and the join/cut classification.
//!
//! Products are read left to right everywhere: `p.then(&q)` applies `p`
//! first and `q` second, so `(p.then(&q)).image(x) == q.image(p.image(x))`.

mod orbit;
mod order;
mod partition;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{parse_error, Error, Result};

pub use orbit::{orbits, orbits_of_transpositions, OrbitPartition, OrbitState};
pub use order::{bubble_sort_swaps, order_from_conjugator, simple_reflection_decomposition, TotalOrder};
pub use partition::Partition;

/// Largest degree a [`Permutation`] can have.
pub const MAX_DEGREE: usize = 16;

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        Err(Error::UnsupportedDegree(n))
    } else {
        Ok(())
    }
}

/// A bijection of `[n]`, stored as a fixed-size image table so that it is
/// `Copy` and cheap to hash.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    // 0-based images; slots past `n` stay zero.
    images: [u8; MAX_DEGREE],
}

impl Permutation {
    /// Identity of `S_n`. Panics when `n` is outside `1..=MAX_DEGREE`.
    pub fn identity(n: usize) -> Self {
        check_degree(n).expect("degree out of range");
        let mut images = [0u8; MAX_DEGREE];
        for (i, slot) in images.iter_mut().enumerate().take(n) {
            *slot = i as u8;
        }
        Permutation { n: n as u8, images }
    }

    /// Builds a permutation from its 1-based image list.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = [false; MAX_DEGREE];
        let mut table = [0u8; MAX_DEGREE];
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(Error::SymbolOutOfRange { symbol: img, n });
            }
            if seen[img - 1] {
                return Err(Error::NotAPermutation(format!("{img} appears twice in {images:?}")));
            }
            seen[img - 1] = true;
            table[i] = (img - 1) as u8;
        }
        Ok(Permutation { n: n as u8, images: table })
    }

    /// Builds a permutation of degree `n` from disjoint cycles (1-based).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        check_degree(n)?;
        let mut p = Permutation::identity(n);
        let mut seen = [false; MAX_DEGREE];
        for cycle in cycles {
            for &s in cycle {
                if s == 0 || s > n {
                    return Err(Error::SymbolOutOfRange { symbol: s, n });
                }
                if seen[s - 1] {
                    return Err(Error::NotAPermutation(format!("symbol {s} occurs in two cycles")));
                }
                seen[s - 1] = true;
            }
            for (k, &s) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                p.images[s - 1] = (next - 1) as u8;
            }
        }
        Ok(p)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Transposition::new(a, b)?.to_permutation(n)
    }

    /// The cycle `(s_1 s_2 ... s_k)` in `S_n`.
    pub fn cycle(n: usize, symbols: &[usize]) -> Result<Self> {
        Permutation::from_cycles(n, &[symbols.to_vec()])
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// Image of the 1-based symbol `s`.
    pub fn image(&self, s: usize) -> usize {
        assert!(s >= 1 && s <= self.degree(), "symbol {s} outside [1, {}]", self.n);
        self.images[s - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images[..self.degree()].iter().map(|&x| x as usize + 1).collect()
    }

    fn same_degree(&self, other: &Permutation) -> Result<()> {
        if self.n != other.n {
            Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            })
        } else {
            Ok(())
        }
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.same_degree(other)?;
        Ok(self.then(other))
    }

    /// Unchecked form of [`Permutation::compose`]; panics on a degree mismatch.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut images = [0u8; MAX_DEGREE];
        for i in 0..self.degree() {
            images[i] = other.images[self.images[i] as usize];
        }
        Permutation { n: self.n, images }
    }

    /// `self` followed by the transposition `t`.
    pub fn then_transposition(&self, t: Transposition) -> Permutation {
        let (a, b) = (t.lo() as u8 - 1, t.hi() as u8 - 1);
        assert!((t.hi()) <= self.degree(), "transposition {t} outside S_{}", self.n);
        let mut out = *self;
        for slot in out.images[..self.degree()].iter_mut() {
            if *slot == a {
                *slot = b;
            } else if *slot == b {
                *slot = a;
            }
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; MAX_DEGREE];
        for i in 0..self.degree() {
            images[self.images[i] as usize] = i as u8;
        }
        Permutation { n: self.n, images }
    }

    /// `by · self · by⁻¹` in the left-to-right product. As a map on cycle
    /// notation this renames every symbol `s` of `self` to `by⁻¹(s)`.
    pub fn conjugate(&self, by: &Permutation) -> Result<Permutation> {
        self.same_degree(by)?;
        Ok(by.then(self).then(&by.inverse()))
    }

    /// Renames every symbol `s` in the cycles of `self` to `map(s)`.
    pub fn relabel(&self, map: &Permutation) -> Result<Permutation> {
        self.same_degree(map)?;
        let mut images = [0u8; MAX_DEGREE];
        for i in 0..self.degree() {
            images[map.images[i] as usize] = map.images[self.images[i] as usize];
        }
        Ok(Permutation { n: self.n, images })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|i| self.images[i] as usize == i)
    }

    /// Disjoint cycles in canonical form: each cycle starts at its smallest
    /// symbol, cycles are sorted by that symbol, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// `c(p)`: the number of cycles, fixed points included.
    pub fn num_cycles(&self) -> usize {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur] as usize;
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Length of the cycle containing `s`.
    pub fn cycle_length_of(&self, s: usize) -> usize {
        let start = s - 1;
        let mut cur = self.images[start] as usize;
        let mut len = 1;
        while cur != start {
            cur = self.images[cur] as usize;
            len += 1;
        }
        len
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycle_length_of(1) == self.degree()
    }

    /// All of `S_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }

    /// The `(n-1)!` permutations of `S_n` consisting of a single `n`-cycle,
    /// in lexicographic order of their canonical cycle word.
    pub fn full_cycles(n: usize) -> Vec<Permutation> {
        if n == 1 {
            return vec![Permutation::identity(1)];
        }
        Permutation::all(n - 1)
            .map(|p| {
                let mut word = vec![1];
                word.extend(p.images().iter().map(|&x| x + 1));
                Permutation::cycle(n, &word).expect("valid cycle")
            })
            .collect()
    }

    /// Parses cycle notation such as `"(1 2)(3)"`. Without an explicit
    /// degree, `n` is the largest symbol mentioned.
    pub fn parse(input: &str, degree: Option<usize>) -> Result<Permutation> {
        let cycles = parse_cycles(input)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = match degree {
            Some(n) => {
                if max > n {
                    return Err(Error::SymbolOutOfRange { symbol: max, n });
                }
                n
            }
            None => max,
        };
        if n == 0 {
            return Err(parse_error(input, 0, "cannot infer a degree from an empty cycle list"));
        }
        Permutation::from_cycles(n, &cycles)
    }
}

/// Parses a sequence of parenthesised groups of positive integers. Symbols
/// may be separated by spaces or commas.
pub(crate) fn parse_cycles(input: &str) -> Result<Vec<Vec<usize>>> {
    let bytes = input.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' => i += 1,
            b'(' => {
                i += 1;
                let mut cycle = Vec::new();
                loop {
                    while i < bytes.len() && matches!(bytes[i], b' ' | b',' | b'\t') {
                        i += 1;
                    }
                    if i >= bytes.len() {
                        return Err(parse_error(input, i, "unterminated cycle"));
                    }
                    if bytes[i] == b')' {
                        i += 1;
                        break;
                    }
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(parse_error(input, i, "expected a symbol"));
                    }
                    let sym: usize = input[start..i]
                        .parse()
                        .map_err(|_| parse_error(input, start, "symbol too large"))?;
                    if sym == 0 {
                        return Err(parse_error(input, start, "symbols start at 1"));
                    }
                    cycle.push(sym);
                }
                if cycle.is_empty() {
                    return Err(parse_error(input, i - 1, "empty cycle"));
                }
                cycles.push(cycle);
            }
            _ => return Err(parse_error(input, i, "expected '('")),
        }
    }
    Ok(cycles)
}

impl std::ops::Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        self.then(&rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (k, s) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s, None)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next?;
        let n = current.degree();
        let mut succ = current;
        let a = &mut succ.images[..n];
        // standard next-permutation step
        let mut i = n.saturating_sub(1);
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            self.next = None;
        } else {
            let mut j = n - 1;
            while a[j] <= a[i - 1] {
                j -= 1;
            }
            a.swap(i - 1, j);
            a[i..].reverse();
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// An unordered pair of distinct symbols, viewed as the transposition
/// swapping them. Which symbol is displayed first is a property of the
/// order it is read under, see [`TotalOrder::display_transposition`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    lo: u8,
    hi: u8,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateTransposition(a));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if lo == 0 {
            return Err(Error::SymbolOutOfRange { symbol: 0, n: MAX_DEGREE });
        }
        if hi > MAX_DEGREE {
            return Err(Error::SymbolOutOfRange { symbol: hi, n: MAX_DEGREE });
        }
        Ok(Transposition {
            lo: lo as u8,
            hi: hi as u8,
        })
    }

    /// Smaller symbol in the natural order.
    pub fn lo(&self) -> usize {
        self.lo as usize
    }

    /// Larger symbol in the natural order.
    pub fn hi(&self) -> usize {
        self.hi as usize
    }

    pub fn symbols(&self) -> (usize, usize) {
        (self.lo(), self.hi())
    }

    pub fn contains(&self, s: usize) -> bool {
        self.lo() == s || self.hi() == s
    }

    /// The partner of `s`, if `s` is one of the two symbols.
    pub fn other(&self, s: usize) -> Option<usize> {
        if self.lo() == s {
            Some(self.hi())
        } else if self.hi() == s {
            Some(self.lo())
        } else {
            None
        }
    }

    pub fn is_disjoint(&self, other: &Transposition) -> bool {
        !self.contains(other.lo()) && !self.contains(other.hi())
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        check_degree(n)?;
        if self.hi() > n {
            return Err(Error::SymbolOutOfRange { symbol: self.hi(), n });
        }
        Ok(Permutation::identity(n).then_transposition(*self))
    }

    /// Renames both symbols through `map`.
    pub fn relabel(&self, map: &Permutation) -> Transposition {
        Transposition::new(map.image(self.lo()), map.image(self.hi())).expect("bijection keeps symbols distinct")
    }

    /// `by · self · by⁻¹` (left-to-right), i.e. `(by⁻¹(a) by⁻¹(b))`.
    pub fn conjugate(&self, by: &Permutation) -> Transposition {
        self.relabel(&by.inverse())
    }

    /// Image of a single symbol under the transposition.
    pub fn apply(&self, s: usize) -> usize {
        self.other(s).unwrap_or(s)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.lo, self.hi)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Transposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        match cycles.as_slice() {
            [c] if c.len() == 2 => Transposition::new(c[0], c[1]),
            _ => Err(parse_error(s, 0, "expected a single transposition such as (1 2)")),
        }
    }
}

impl Serialize for Transposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Transposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a list of transpositions written back to back, e.g. `"(1 2)(1 3)"`.
pub fn parse_transpositions(input: &str) -> Result<Vec<Transposition>> {
    parse_cycles(input)?
        .into_iter()
        .map(|c| match c.as_slice() {
            [a, b] => Transposition::new(*a, *b),
            _ => Err(parse_error(input, 0, format!("{c:?} is not a transposition"))),
        })
        .collect()
}

/// Left-to-right product of a sequence of transpositions in `S_n`.
pub fn product_of(n: usize, factors: &[Transposition]) -> Permutation {
    factors
        .iter()
        .fold(Permutation::identity(n), |acc, t| acc.then_transposition(*t))
}

/// Whether a transposition merges two cycles of `nu` or splits one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinCut {
    /// The two symbols lie in different cycles; `c(ν τ) = c(ν) - 1`.
    Join,
    /// The two symbols share a cycle; `c(ν τ) = c(ν) + 1`.
    Cut,
}

pub fn join_cut(nu: &Permutation, tau: Transposition) -> Result<JoinCut> {
    let n = nu.degree();
    if tau.hi() > n {
        return Err(Error::SymbolOutOfRange { symbol: tau.hi(), n });
    }
    let target = tau.hi() - 1;
    let mut cur = nu.images[tau.lo() - 1] as usize;
    loop {
        if cur == target {
            return Ok(JoinCut::Cut);
        }
        if cur == tau.lo() - 1 {
            return Ok(JoinCut::Join);
        }
        cur = nu.images[cur] as usize;
    }
}
