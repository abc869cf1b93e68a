use std::fmt;

use super::{check_degree, Permutation, Transposition, MAX_DEGREE};
use crate::error::{Error, Result};

/// A set partition of `[n]` in canonical form: each block sorted, blocks
/// sorted by their least element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrbitPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// True iff there is a single block, i.e. the generators act
    /// transitively on `[n]`.
    pub fn is_transitive(&self) -> bool {
        self.blocks.len() == 1
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (i, s) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Orbits of `[n]` under the group generated by `generators`.
pub fn orbits(n: usize, generators: &[Permutation]) -> Result<OrbitPartition> {
    check_degree(n)?;
    let mut state = OrbitState::discrete(n);
    for g in generators {
        if g.degree() != n {
            return Err(Error::DegreeMismatch { left: n, right: g.degree() });
        }
        for s in 1..=n {
            state = state.merge(s, g.image(s));
        }
    }
    Ok(state.to_partition())
}

/// Orbits under the group generated by a list of transpositions.
pub fn orbits_of_transpositions(n: usize, factors: &[Transposition]) -> Result<OrbitPartition> {
    check_degree(n)?;
    let mut state = OrbitState::discrete(n);
    for t in factors {
        if t.hi() > n {
            return Err(Error::SymbolOutOfRange { symbol: t.hi(), n });
        }
        state = state.merge(t.lo(), t.hi());
    }
    Ok(state.to_partition())
}

/// Compact set partition used as dynamic-programming state: block labels in
/// restricted-growth form, so equal partitions compare and hash equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrbitState {
    n: u8,
    labels: [u8; MAX_DEGREE],
}

impl OrbitState {
    /// All singletons.
    pub fn discrete(n: usize) -> Self {
        let mut labels = [0u8; MAX_DEGREE];
        for (i, l) in labels.iter_mut().enumerate().take(n) {
            *l = i as u8;
        }
        OrbitState { n: n as u8, labels }
    }

    /// The cycles of `p` as blocks.
    pub fn of_permutation(p: &Permutation) -> Self {
        let mut state = OrbitState::discrete(p.degree());
        for s in 1..=p.degree() {
            state = state.merge(s, p.image(s));
        }
        state
    }

    /// Joins the blocks of the 1-based symbols `a` and `b`.
    pub fn merge(mut self, a: usize, b: usize) -> Self {
        let (la, lb) = (self.labels[a - 1], self.labels[b - 1]);
        if la == lb {
            return self;
        }
        let n = self.n as usize;
        for l in self.labels[..n].iter_mut() {
            if *l == lb {
                *l = la;
            }
        }
        self.canonicalise();
        self
    }

    fn canonicalise(&mut self) {
        let n = self.n as usize;
        let mut remap = [u8::MAX; MAX_DEGREE];
        let mut next = 0u8;
        for l in self.labels[..n].iter_mut() {
            let slot = &mut remap[*l as usize];
            if *slot == u8::MAX {
                *slot = next;
                next += 1;
            }
            *l = *slot;
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.labels[..self.n as usize].iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn is_transitive(&self) -> bool {
        self.num_blocks() == 1
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.labels[a - 1] == self.labels[b - 1]
    }

    pub fn to_partition(&self) -> OrbitPartition {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); self.num_blocks()];
        for s in 0..self.n as usize {
            blocks[self.labels[s] as usize].push(s + 1);
        }
        OrbitPartition { blocks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let gens = [
            Permutation::transposition(3, 1, 3).unwrap(),
            Permutation::transposition(3, 2, 3).unwrap(),
        ];
        assert!(orbits(3, &gens).unwrap().is_transitive());
        assert_eq!(orbits(3, &[]).unwrap().to_string(), "{{1},{2},{3}}");
        let single = orbits(3, &[Permutation::transposition(3, 1, 2).unwrap()]).unwrap();
        assert_eq!(single.to_string(), "{{1,2},{3}}");
        assert!(!single.is_transitive());
    }

    #[test]
    fn star_generators_are_transitive() {
        for n in 2..=8 {
            let star: Vec<_> = (1..n).map(|i| t(i, n)).collect();
            assert!(orbits_of_transpositions(n, &star).unwrap().is_transitive());
            assert!(!orbits_of_transpositions(n, &star[1..]).unwrap().is_transitive());
        }
        assert!(orbits_of_transpositions(1, &[]).unwrap().is_transitive());
    }

    #[test]
    fn orbit_state_matches_cycles() {
        for p in Permutation::all(5) {
            let st = OrbitState::of_permutation(&p);
            assert_eq!(st.num_blocks(), p.num_cycles());
            assert_eq!(st.to_partition().blocks(), p.cycles().iter().map(|c| {
                let mut c = c.clone();
                c.sort();
                c
            }).collect::<Vec<_>>().as_slice());
        }
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        assert!(orbits(3, &[Permutation::identity(4)]).is_err());
    }
}
