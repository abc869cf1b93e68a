use std::ops::Range;

use super::moves::{HurwitzMoveTrace, MoveKind, Tape, TraceStep};
use crate::error::{Error, Result};
use crate::factorisations::MonotoneFactorisation;
use crate::perm::{bubble_sort_swaps, TotalOrder, Transposition};

fn require_monotone(order: &TotalOrder, seq: &[Transposition]) -> Result<()> {
    if order.is_monotone(seq) {
        Ok(())
    } else {
        Err(Error::Condition {
            condition: "H2",
            detail: format!("factors are not monotone under {order}"),
        })
    }
}

fn check_index(order: &TotalOrder, j: usize) -> Result<()> {
    let n = order.degree();
    if j == 0 || j >= n {
        Err(Error::BoundExceeded {
            what: "adjacent swap index",
            requested: j,
            limit: n.saturating_sub(1),
        })
    } else {
        Ok(())
    }
}

/// Range of factors whose `order`-larger symbol is `b`. In a monotone
/// sequence these are contiguous; when there are none the empty range sits
/// where they would go.
fn block(order: &TotalOrder, seq: &[Transposition], b: usize) -> Range<usize> {
    let rank = order.rank(b);
    let start = seq.iter().position(|t| order.rank(order.max_of(*t)) >= rank).unwrap_or(seq.len());
    let end = start + seq[start..].iter().take_while(|t| order.max_of(**t) == b).count();
    start..end
}

/// `Λ_j` on a raw sequence monotone under `order`. Returns `≺_j`.
pub(crate) fn lambda_j_raw(tape: &mut Tape<'_>, order: &TotalOrder, j: usize) -> TotalOrder {
    let x = order.at(j);
    let y = order.at(j + 1);
    let s1 = block(order, tape.seq, x);
    let s2 = block(order, tape.seq, y);
    debug_assert_eq!(s1.end, s2.start);
    let start = s1.start;
    let (p, q) = (s1.len(), s2.len());

    // Stage 1: string-1 factors, rightmost first, each pass all of string 2.
    if p > 0 && q > 0 {
        for idx in (0..p).rev() {
            let mut cur = start + idx;
            for _ in 0..q {
                tape.apply(cur, MoveKind::Rhm);
                cur += 1;
            }
        }
    }

    // Stage 2: string 1' now spans start..start+q.
    let s1_end = start + q;
    let xy: Vec<usize> = (start..s1_end)
        .filter(|&k| tape.seq[k].contains(x) && tape.seq[k].contains(y))
        .collect();
    for &k in xy.iter().rev() {
        let mut pos = k;
        while pos + 1 < s1_end && tape.seq[pos + 1].contains(y) && !tape.seq[pos + 1].contains(x) {
            tape.apply(pos, MoveKind::Stage2);
            pos += 1;
        }
    }
    order.swap_adjacent(j)
}

/// Inverse of [`lambda_j_raw`]: `seq` is monotone under `order` (which
/// plays the role of `≺_j`). Returns `≺`.
pub(crate) fn lambda_j_inverse_raw(tape: &mut Tape<'_>, order: &TotalOrder, j: usize) -> TotalOrder {
    let prev = order.swap_adjacent(j);
    let x = prev.at(j);
    let y = prev.at(j + 1);
    let yb = block(order, tape.seq, y);
    let xb = block(order, tape.seq, x);
    debug_assert_eq!(yb.end, xb.start);
    let start = yb.start;
    let end = xb.end;
    let s2_start = (xb.start..xb.end)
        .rev()
        .find(|&k| tape.seq[k].contains(y))
        .map_or(xb.start, |k| k + 1);

    let xy: Vec<usize> = (start..s2_start)
        .filter(|&k| tape.seq[k].contains(x) && tape.seq[k].contains(y))
        .collect();
    for &k in &xy {
        let mut pos = k;
        while pos > start && tape.seq[pos - 1].contains(x) && !tape.seq[pos - 1].contains(y) {
            tape.apply(pos - 1, MoveKind::Lhm);
            pos -= 1;
        }
    }

    let q = s2_start - start;
    let p = end - s2_start;
    if p > 0 && q > 0 {
        for idx in 0..p {
            let mut cur = s2_start + idx;
            for _ in 0..q {
                tape.apply(cur - 1, MoveKind::Lhm);
                cur -= 1;
            }
        }
    }
    prev
}

/// `Λ^≺` on a raw sequence: the `Λ_j` along the bubble-sort swaps of `order`.
pub(crate) fn lambda_order_raw(tape: &mut Tape<'_>, order: &TotalOrder) {
    let mut cur = order.clone();
    for j in bubble_sort_swaps(order.sequence()) {
        cur = lambda_j_raw(tape, &cur, j);
    }
    debug_assert!(cur.is_natural());
}

/// Inverse of [`lambda_order_raw`]: from natural-order monotone to
/// `order`-monotone.
pub(crate) fn lambda_order_inverse_raw(tape: &mut Tape<'_>, order: &TotalOrder) {
    let swaps = bubble_sort_swaps(order.sequence());
    let mut orders = Vec::with_capacity(swaps.len() + 1);
    orders.push(order.clone());
    for &j in &swaps {
        let next = orders.last().expect("nonempty").swap_adjacent(j);
        orders.push(next);
    }
    for (k, &j) in swaps.iter().enumerate().rev() {
        let back = lambda_j_inverse_raw(tape, &orders[k + 1], j);
        debug_assert_eq!(back, orders[k]);
    }
}

fn rebuild(order: TotalOrder, factors: Vec<Transposition>, like: &MonotoneFactorisation) -> MonotoneFactorisation {
    debug_assert!(order.is_monotone(&factors), "bijection left the monotone set");
    MonotoneFactorisation {
        n: like.n,
        order,
        factors,
        target: like.target,
        genus: like.genus,
    }
}

/// `Λ_j : M_g^≺(ω) → M_g^{≺_j}(ω)` with its trace.
pub fn lambda_j_traced(f: &MonotoneFactorisation, j: usize) -> Result<(MonotoneFactorisation, HurwitzMoveTrace)> {
    check_index(&f.order, j)?;
    require_monotone(&f.order, &f.factors)?;
    let mut seq = f.factors.clone();
    let mut steps: Vec<TraceStep> = Vec::new();
    let order = lambda_j_raw(&mut Tape { seq: &mut seq, trace: &mut steps, offset: 0 }, &f.order, j);
    Ok((rebuild(order, seq, f), HurwitzMoveTrace { steps }))
}

pub fn lambda_j(f: &MonotoneFactorisation, j: usize) -> Result<MonotoneFactorisation> {
    lambda_j_traced(f, j).map(|(g, _)| g)
}

/// `Λ_j⁻¹`; `f` is monotone under `≺_j` (its own order) and the result is
/// monotone under `≺_j` with positions `j, j+1` swapped back.
pub fn lambda_j_inverse_traced(f: &MonotoneFactorisation, j: usize) -> Result<(MonotoneFactorisation, HurwitzMoveTrace)> {
    check_index(&f.order, j)?;
    require_monotone(&f.order, &f.factors)?;
    let mut seq = f.factors.clone();
    let mut steps: Vec<TraceStep> = Vec::new();
    let order = lambda_j_inverse_raw(&mut Tape { seq: &mut seq, trace: &mut steps, offset: 0 }, &f.order, j);
    Ok((rebuild(order, seq, f), HurwitzMoveTrace { steps }))
}

pub fn lambda_j_inverse(f: &MonotoneFactorisation, j: usize) -> Result<MonotoneFactorisation> {
    lambda_j_inverse_traced(f, j).map(|(g, _)| g)
}

/// `Λ^≺ : M_g^≺(ω) → M_g(ω)`.
pub fn lambda_order_traced(f: &MonotoneFactorisation) -> Result<(MonotoneFactorisation, HurwitzMoveTrace)> {
    require_monotone(&f.order, &f.factors)?;
    let mut seq = f.factors.clone();
    let mut steps: Vec<TraceStep> = Vec::new();
    lambda_order_raw(&mut Tape { seq: &mut seq, trace: &mut steps, offset: 0 }, &f.order);
    Ok((rebuild(TotalOrder::natural(f.n), seq, f), HurwitzMoveTrace { steps }))
}

pub fn lambda_order(f: &MonotoneFactorisation) -> Result<MonotoneFactorisation> {
    lambda_order_traced(f).map(|(g, _)| g)
}

/// `(Λ^≺)⁻¹ : M_g(ω) → M_g^≺(ω)`; `f` must be under the natural order.
pub fn lambda_order_inverse(f: &MonotoneFactorisation, order: &TotalOrder) -> Result<MonotoneFactorisation> {
    if !f.order.is_natural() {
        return Err(Error::Condition {
            condition: "H2",
            detail: format!("expected a factorisation under the natural order, got {}", f.order),
        });
    }
    if order.degree() != f.n {
        return Err(Error::DegreeMismatch { left: f.n, right: order.degree() });
    }
    require_monotone(&f.order, &f.factors)?;
    let mut seq = f.factors.clone();
    let mut steps: Vec<TraceStep> = Vec::new();
    lambda_order_inverse_raw(&mut Tape { seq: &mut seq, trace: &mut steps, offset: 0 }, order);
    Ok(rebuild(order.clone(), seq, f))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::factorisations::enumerate_monotone;
    use crate::perm::{orbits_of_transpositions, parse_transpositions, Permutation};

    fn mono(order: &str, factors: &str) -> MonotoneFactorisation {
        MonotoneFactorisation::from_factors(order.parse().unwrap(), parse_transpositions(factors).unwrap()).unwrap()
    }

    #[test]
    fn worked_example() {
        let f = mono("1<2<3", "(1 2)(1 3)");
        let (g, trace) = lambda_j_traced(&f, 2).unwrap();
        assert_eq!(g.order.to_string(), "1<3<2");
        assert_eq!(g.factors, parse_transpositions("(2 3)(1 2)").unwrap());
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.replay(3, &f.factors).unwrap(), g.factors);
        assert_eq!(lambda_j_inverse(&g, 2).unwrap(), f);
    }

    #[test]
    fn untouched_when_neither_symbol_is_a_maximum() {
        let f = mono("1<2<3<4", "(1 2)(1 2)");
        let (g, trace) = lambda_j_traced(&f, 3).unwrap();
        assert!(trace.is_empty());
        assert_eq!(g.factors, f.factors);
    }

    #[test]
    fn lambda_order_example() {
        let f = mono("2<1<3", "(1 2)(2 3)");
        assert_eq!(f.target, Permutation::parse("(1 3 2)", Some(3)).unwrap());
        let g = lambda_order(&f).unwrap();
        let allowed = [parse_transpositions("(1 2)(2 3)").unwrap(), parse_transpositions("(2 3)(1 3)").unwrap()];
        assert!(allowed.contains(&g.factors));
        assert_eq!(g.factors, parse_transpositions("(1 2)(2 3)").unwrap());
    }

    #[test]
    fn non_monotone_input_is_rejected() {
        let f = MonotoneFactorisation {
            n: 3,
            order: TotalOrder::natural(3),
            factors: parse_transpositions("(1 3)(1 2)").unwrap(),
            target: Permutation::parse("(1 3 2)", Some(3)).unwrap(),
            genus: 0,
        };
        assert!(lambda_j(&f, 1).is_err());
    }

    #[test]
    fn exhaustive_round_trips_in_s4() {
        let orders: Vec<TotalOrder> = Permutation::all(4)
            .map(|p| TotalOrder::from_sequence(p.images()).unwrap())
            .collect();
        for order in &orders {
            for w in Permutation::all(4) {
                for g in 0..=1 {
                    let list = enumerate_monotone(&w, g, order).unwrap();
                    for j in 1..4 {
                        let target_order = order.swap_adjacent(j);
                        let mut image = HashSet::new();
                        for f in &list {
                            let (h, trace) = lambda_j_traced(f, j).unwrap();
                            assert_eq!(h.order, target_order);
                            assert!(h.order.is_monotone(&h.factors));
                            assert_eq!(trace.replay(4, &f.factors).unwrap(), h.factors);
                            assert_eq!(
                                orbits_of_transpositions(4, &h.factors).unwrap(),
                                orbits_of_transpositions(4, &f.factors).unwrap()
                            );
                            assert_eq!(&lambda_j_inverse(&h, j).unwrap(), f);
                            image.insert(h.factors);
                        }
                        assert_eq!(image.len(), list.len());
                        assert_eq!(image.len(), enumerate_monotone(&w, g, &target_order).unwrap().len());
                    }
                    let mut image = HashSet::new();
                    for f in &list {
                        let h = lambda_order(f).unwrap();
                        assert_eq!(&lambda_order_inverse(&h, order).unwrap(), f);
                        image.insert(h.factors);
                    }
                    assert_eq!(image.len(), enumerate_monotone(&w, g, &TotalOrder::natural(4)).unwrap().len());
                }
            }
        }
    }
}
