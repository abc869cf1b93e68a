use super::lambda::{lambda_order_inverse_raw, lambda_order_raw};
use super::moves::{HurwitzMoveTrace, MoveKind, Tape, TraceStep};
use crate::error::{Error, Result};
use crate::factorisations::{MonotoneDoubleFactorisation, StarFactorisation};
use crate::perm::{Permutation, TotalOrder, Transposition};

/// `Γ : A_g^r(ω) → MD_g(ω)` for a star factorisation with any root `r`.
pub fn gamma_traced(f: &StarFactorisation) -> (MonotoneDoubleFactorisation, HurwitzMoveTrace) {
    let n = f.n;
    let r = f.root;
    let mut seq = f.factors();
    let mut steps: Vec<TraceStep> = Vec::new();

    // first appearances, left to right
    let mut seen = vec![false; n + 1];
    let mut marked: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    for (pos, &a) in f.legs.iter().enumerate() {
        if !seen[a] {
            seen[a] = true;
            marked.push((a, pos));
        }
    }
    debug_assert_eq!(marked.len(), n - 1, "validated factorisations are transitive");

    {
        let mut tape = Tape { seq: &mut seq, trace: &mut steps, offset: 0 };
        for (p, &(_, from)) in marked.iter().enumerate().skip(1) {
            let mut pos = from;
            while pos > p {
                tape.apply(pos - 1, MoveKind::Lhm);
                pos -= 1;
            }
        }
    }

    let mut cycle: Vec<usize> = marked.iter().map(|&(a, _)| a).collect();
    cycle.push(r);
    let sigma = Permutation::cycle(n, &cycle).expect("distinct symbols");
    let order = TotalOrder::from_sequence(cycle).expect("a permutation of [n]");
    debug_assert_eq!(crate::perm::product_of(n, &seq[..n - 1]), sigma);

    let mut tail = seq.split_off(n - 1);
    debug_assert!(order.is_monotone(&tail));
    lambda_order_raw(&mut Tape { seq: &mut tail, trace: &mut steps, offset: n - 1 }, &order);

    let out = MonotoneDoubleFactorisation {
        n,
        sigma,
        factors: tail,
        target: f.target,
        genus: f.genus,
    };
    (out, HurwitzMoveTrace { steps })
}

pub fn gamma(f: &StarFactorisation) -> MonotoneDoubleFactorisation {
    gamma_traced(f).0
}

/// `Γ⁻¹` landing on star factorisations with root `root`: `σ` is written
/// as `(i_1 ⋯ i_n)` with `i_n = root`.
pub fn gamma_inverse_traced(f: &MonotoneDoubleFactorisation, root: usize) -> Result<(StarFactorisation, HurwitzMoveTrace)> {
    let n = f.n;
    if root == 0 || root > n {
        return Err(Error::SymbolOutOfRange { symbol: root, n });
    }
    if !f.sigma.is_full_cycle() {
        return Err(Error::Condition {
            condition: "H0",
            detail: format!("{} is not an {n}-cycle", f.sigma),
        });
    }
    let mut cycle = Vec::with_capacity(n);
    let mut s = f.sigma.image(root);
    for _ in 1..n {
        cycle.push(s);
        s = f.sigma.image(s);
    }
    cycle.push(root);
    let order = TotalOrder::from_sequence(cycle.clone()).expect("a permutation of [n]");

    let mut steps: Vec<TraceStep> = Vec::new();
    let mut tail = f.factors.clone();
    lambda_order_inverse_raw(&mut Tape { seq: &mut tail, trace: &mut steps, offset: n - 1 }, &order);

    let mut seq: Vec<Transposition> = cycle[..n - 1]
        .iter()
        .map(|&a| Transposition::new(a, root).expect("distinct"))
        .collect();
    seq.extend(tail);
    {
        let len = seq.len();
        let mut tape = Tape { seq: &mut seq, trace: &mut steps, offset: 0 };
        for j in (1..n).rev() {
            let mut pos = j - 1;
            while pos + 1 < len && !tape.seq[pos + 1].contains(root) {
                tape.apply(pos, MoveKind::Rhm);
                pos += 1;
            }
        }
    }
    let legs = seq
        .iter()
        .map(|t| {
            t.other(root).ok_or_else(|| Error::Condition {
                condition: "star",
                detail: format!("{t} does not contain the root {root}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((StarFactorisation::new(f.target, root, legs)?, HurwitzMoveTrace { steps }))
}

pub fn gamma_inverse(f: &MonotoneDoubleFactorisation, root: usize) -> Result<StarFactorisation> {
    gamma_inverse_traced(f, root).map(|(s, _)| s)
}

/// `A_g^r(ω) → A_g^i(ω)` through `Γ` and `Γ⁻¹` with the new root.
pub fn reroot_traced(f: &StarFactorisation, i: usize) -> Result<(StarFactorisation, HurwitzMoveTrace)> {
    let (md, mut first) = gamma_traced(f);
    let (out, second) = gamma_inverse_traced(&md, i)?;
    first.steps.extend(second.steps);
    Ok((out, first))
}

pub fn reroot(f: &StarFactorisation, i: usize) -> Result<StarFactorisation> {
    reroot_traced(f, i).map(|(s, _)| s)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::factorisations::{enumerate_monotone_double, enumerate_star};

    fn pn(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn worked_examples() {
        let w = pn("(1 2)(3)", 3);
        let f = StarFactorisation::new(w, 3, vec![1, 2, 1]).unwrap();
        let (md, trace) = gamma_traced(&f);
        assert_eq!(md.to_line(), "(1 2 3) (1 3)");
        assert!(trace.is_empty());
        let f = StarFactorisation::new(w, 3, vec![2, 1, 2]).unwrap();
        assert_eq!(gamma(&f).to_line(), "(1 3 2) (2 3)");
        let f = StarFactorisation::new(pn("(1 2)", 2), 2, vec![1]).unwrap();
        let md = gamma(&f);
        assert_eq!(md.sigma, pn("(1 2)", 2));
        assert!(md.is_empty());
        let one = StarFactorisation::new(Permutation::identity(1), 1, vec![]).unwrap();
        assert_eq!(gamma_inverse(&gamma(&one), 1).unwrap(), one);
    }

    #[test]
    fn bijective_onto_md_in_s4() {
        for n in 1..=4 {
            for w in Permutation::all(n) {
                for g in 0..=1 {
                    let md: HashSet<_> = enumerate_monotone_double(&w, g).unwrap().into_iter().collect();
                    for root in 1..=n {
                        let stars = enumerate_star(&w, g, root).unwrap();
                        let mut image = HashSet::new();
                        for f in &stars {
                            let (h, trace) = gamma_traced(f);
                            assert_eq!(h.genus, g);
                            assert_eq!(h.factors.len(), w.num_cycles() - 1 + 2 * g as usize);
                            assert!(md.contains(&h), "{} -> {}", f.to_line(), h.to_line());
                            let replayed = trace.replay(n, &f.factors()).unwrap();
                            assert_eq!(&replayed[n - 1..], h.factors.as_slice());
                            assert_eq!(&gamma_inverse(&h, root).unwrap(), f);
                            image.insert(h);
                        }
                        assert_eq!(image.len(), stars.len());
                        assert_eq!(image, md);
                    }
                }
            }
        }
    }

    #[test]
    fn reroot_round_trips() {
        let w = pn("(1 2)(3)", 3);
        assert_eq!(enumerate_star(&w, 0, 1).unwrap().len(), 2);
        for n in 2..=4 {
            for w in Permutation::all(n) {
                for g in 0..=1 {
                    for f in enumerate_star(&w, g, n).unwrap() {
                        assert_eq!(reroot(&f, n).unwrap(), f);
                        for i in 1..=n {
                            let h = reroot(&f, i).unwrap();
                            assert_eq!(h.root, i);
                            assert_eq!(reroot(&h, n).unwrap(), f);
                        }
                    }
                }
            }
        }
    }
}
