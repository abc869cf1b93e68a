use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{product_of, Transposition};

/// `σ^τ` for transpositions: `σ` with the two symbols of `τ` exchanged.
fn swap_by(sigma: Transposition, tau: Transposition) -> Transposition {
    let (a, b) = sigma.symbols();
    Transposition::new(tau.apply(a), tau.apply(b)).expect("relabelling keeps symbols distinct")
}

/// Rightward move: `τσ ↦ σ^τ τ`.
pub fn rhm(tau: Transposition, sigma: Transposition) -> (Transposition, Transposition) {
    (swap_by(sigma, tau), tau)
}

/// Leftward move: `τσ ↦ σ τ^σ`.
pub fn lhm(tau: Transposition, sigma: Transposition) -> (Transposition, Transposition) {
    (sigma, swap_by(tau, sigma))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    #[serde(rename = "RHM")]
    Rhm,
    #[serde(rename = "LHM")]
    Lhm,
    /// A rightward move that relocates an `(i_j i_{j+1})` factor in the
    /// second stage of `Λ_j`.
    #[serde(rename = "S2")]
    Stage2,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Rhm => "RHM",
            MoveKind::Lhm => "LHM",
            MoveKind::Stage2 => "S2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// 1-based position of the left factor of the pair.
    pub pos: usize,
    pub kind: MoveKind,
    pub before: (Transposition, Transposition),
    pub after: (Transposition, Transposition),
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pos={} move={} before={}{} after={}{}",
            self.pos, self.kind, self.before.0, self.before.1, self.after.0, self.after.1
        )
    }
}

/// The Hurwitz moves a bijection performed, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HurwitzMoveTrace {
    pub steps: Vec<TraceStep>,
}

impl HurwitzMoveTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the steps on `input`, checking at each step that the pair
    /// found matches `before`, that `after` is what the move produces, and
    /// that the product of the whole sequence in `S_n` is unchanged.
    pub fn replay(&self, n: usize, input: &[Transposition]) -> Result<Vec<Transposition>> {
        let mut seq = input.to_vec();
        let product = product_of(n, &seq);
        for (k, step) in self.steps.iter().enumerate() {
            let bad = |what: &str| Error::Condition {
                condition: "trace",
                detail: format!("step {} ({step}): {what}", k + 1),
            };
            if step.pos == 0 || step.pos >= seq.len() {
                return Err(bad("position out of range"));
            }
            let i = step.pos - 1;
            if (seq[i], seq[i + 1]) != step.before {
                return Err(bad("pair does not match the sequence"));
            }
            let expected = match step.kind {
                MoveKind::Lhm => lhm(step.before.0, step.before.1),
                MoveKind::Rhm | MoveKind::Stage2 => rhm(step.before.0, step.before.1),
            };
            if expected != step.after {
                return Err(bad("recorded output is not the move's output"));
            }
            seq[i] = step.after.0;
            seq[i + 1] = step.after.1;
            if product_of(n, &seq) != product {
                return Err(bad("product changed"));
            }
        }
        Ok(seq)
    }
}

impl fmt::Display for HurwitzMoveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// A factor sequence being rewritten in place, with the moves logged.
/// `offset` is added to every recorded position so that a tail can be
/// traced in the coordinates of a longer sequence.
pub(crate) struct Tape<'a> {
    pub seq: &'a mut [Transposition],
    pub trace: &'a mut Vec<TraceStep>,
    pub offset: usize,
}

impl Tape<'_> {
    /// Applies a move to the pair at 0-based `i`, `i + 1`.
    pub fn apply(&mut self, i: usize, kind: MoveKind) {
        let before = (self.seq[i], self.seq[i + 1]);
        let after = match kind {
            MoveKind::Lhm => lhm(before.0, before.1),
            MoveKind::Rhm | MoveKind::Stage2 => rhm(before.0, before.1),
        };
        self.seq[i] = after.0;
        self.seq[i + 1] = after.1;
        self.trace.push(TraceStep {
            pos: self.offset + i + 1,
            kind,
            before,
            after,
        });
    }
}
