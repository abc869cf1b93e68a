use super::gamma::{gamma_inverse_traced, gamma_traced};
use super::lambda::lambda_order_raw;
use super::moves::{HurwitzMoveTrace, Tape, TraceStep};
use crate::error::{Error, Result};
use crate::factorisations::{md_genus, monotone_genus, MonotoneDoubleFactorisation, MonotoneFactorisation, StarFactorisation};
use crate::perm::{order_from_conjugator, product_of, Permutation, Transposition};

/// A `δ` with `gamma = δ omega δ⁻¹`; the identity when the two are equal.
/// Cycles of equal length are matched in canonical order.
pub fn find_conjugator(omega: &Permutation, gamma: &Permutation) -> Result<Permutation> {
    if omega.degree() != gamma.degree() {
        return Err(Error::DegreeMismatch {
            left: omega.degree(),
            right: gamma.degree(),
        });
    }
    if omega == gamma {
        return Ok(Permutation::identity(omega.degree()));
    }
    if omega.cycle_type() != gamma.cycle_type() {
        return Err(Error::NotConjugate {
            left: *omega,
            right: *gamma,
        });
    }
    let sorted = |p: &Permutation| {
        let mut c = p.cycles();
        c.sort_by_key(|c| std::cmp::Reverse(c.len()));
        c
    };
    let n = omega.degree();
    // rho sends each cycle of omega onto the matching cycle of gamma
    let mut rho = vec![0; n];
    for (c, d) in sorted(omega).iter().zip(sorted(gamma).iter()) {
        for (&a, &b) in c.iter().zip(d.iter()) {
            rho[a - 1] = b;
        }
    }
    let delta = Permutation::from_images(&rho)?.inverse();
    debug_assert_eq!(omega.conjugate(&delta)?, *gamma);
    Ok(delta)
}

fn check_delta(n: usize, delta: &Permutation) -> Result<()> {
    if delta.degree() != n {
        Err(Error::DegreeMismatch { left: n, right: delta.degree() })
    } else {
        Ok(())
    }
}

/// `Δ = Λ^≺ ∘ Φ : M_g(ω) → M_g(δωδ⁻¹)` where `Φ` conjugates each factor by
/// `δ` and `≺` is read off `δ`.
pub fn delta_traced(f: &MonotoneFactorisation, delta: &Permutation) -> Result<(MonotoneFactorisation, HurwitzMoveTrace)> {
    check_delta(f.n, delta)?;
    if !f.order.is_natural() || !f.order.is_monotone(&f.factors) {
        return Err(Error::Condition {
            condition: "H2",
            detail: "expected a monotone factorisation under the natural order".into(),
        });
    }
    let order = order_from_conjugator(delta);
    let mut seq: Vec<Transposition> = f.factors.iter().map(|t| t.conjugate(delta)).collect();
    debug_assert!(order.is_monotone(&seq));
    let mut steps: Vec<TraceStep> = Vec::new();
    lambda_order_raw(&mut Tape { seq: &mut seq, trace: &mut steps, offset: 0 }, &order);
    let target = f.target.conjugate(delta)?;
    let out = MonotoneFactorisation {
        n: f.n,
        order: crate::perm::TotalOrder::natural(f.n),
        factors: seq,
        target,
        genus: f.genus,
    };
    Ok((out, HurwitzMoveTrace { steps }))
}

pub fn delta(f: &MonotoneFactorisation, delta: &Permutation) -> Result<MonotoneFactorisation> {
    delta_traced(f, delta).map(|(g, _)| g)
}

/// `Θ : MD_g(ω) → MD_g(δωδ⁻¹)`. Trace positions count within the tail.
pub fn theta_traced(f: &MonotoneDoubleFactorisation, delta: &Permutation) -> Result<(MonotoneDoubleFactorisation, HurwitzMoveTrace)> {
    let n = f.n;
    check_delta(n, delta)?;
    let sigma = f.sigma.conjugate(delta)?;
    let target = f.target.conjugate(delta)?;
    let order = order_from_conjugator(delta);
    let mut seq: Vec<Transposition> = f.factors.iter().map(|t| t.conjugate(delta)).collect();
    let beta = sigma.inverse().then(&target);
    debug_assert_eq!(product_of(n, &seq), beta);
    // the tail's own genus, which need not be g
    let tail_genus = monotone_genus(&beta, seq.len());
    debug_assert!(tail_genus.is_some());
    let mut steps: Vec<TraceStep> = Vec::new();
    lambda_order_raw(&mut Tape { seq: &mut seq, trace: &mut steps, offset: 0 }, &order);
    let genus = md_genus(&target, seq.len()).expect("conjugation keeps the cycle count");
    debug_assert_eq!(genus, f.genus);
    let out = MonotoneDoubleFactorisation {
        n,
        sigma,
        factors: seq,
        target,
        genus,
    };
    Ok((out, HurwitzMoveTrace { steps }))
}

pub fn theta(f: &MonotoneDoubleFactorisation, delta: &Permutation) -> Result<MonotoneDoubleFactorisation> {
    theta_traced(f, delta).map(|(g, _)| g)
}

/// `Γ⁻¹ ∘ Θ ∘ Γ : A_g(ω) → A_g(γ)`, keeping the root.
pub fn centrality_witness(f: &StarFactorisation, gamma: &Permutation) -> Result<StarFactorisation> {
    let delta = find_conjugator(&f.target, gamma)?;
    let (md, _) = gamma_traced(f);
    let moved = theta(&md, &delta)?;
    debug_assert_eq!(moved.target, *gamma);
    gamma_inverse_traced(&moved, f.root).map(|(s, _)| s)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::factorisations::{enumerate_monotone, enumerate_monotone_double, enumerate_star};
    use crate::perm::{parse_transpositions, TotalOrder};

    fn pn(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn conjugator_examples() {
        let w = pn("(1 2)(3)", 3);
        assert!(find_conjugator(&w, &w).unwrap().is_identity());
        let g = pn("(2 3)", 3);
        let d = find_conjugator(&w, &g).unwrap();
        assert_eq!(w.conjugate(&d).unwrap(), g);
        assert!(matches!(
            find_conjugator(&w, &pn("(1 2 3)", 3)),
            Err(Error::NotConjugate { .. })
        ));
    }

    #[test]
    fn delta_example() {
        let w = pn("(1 3 2)", 3);
        let d = pn("(1 2)", 3);
        let target = w.conjugate(&d).unwrap();
        assert_eq!(target, pn("(1 2 3)", 3));
        let src = enumerate_monotone(&w, 0, &TotalOrder::natural(3)).unwrap();
        let dst: HashSet<_> = enumerate_monotone(&target, 0, &TotalOrder::natural(3)).unwrap().into_iter().collect();
        let image: HashSet<_> = src.iter().map(|f| delta(f, &d).unwrap()).collect();
        assert_eq!(src.len(), 2);
        assert_eq!(image, dst);
        for f in &src {
            assert_eq!(&delta(f, &Permutation::identity(3)).unwrap(), f);
        }
    }

    #[test]
    fn theta_example() {
        let w = pn("(1 2)(3)", 3);
        let d = pn("(1 3)", 3);
        let f = MonotoneDoubleFactorisation::new(w, pn("(1 2 3)", 3), parse_transpositions("(1 3)").unwrap()).unwrap();
        let h = theta(&f, &d).unwrap();
        assert_eq!(h.target, pn("(2 3)", 3));
        assert!(enumerate_monotone_double(&h.target, 0).unwrap().contains(&h));
        assert_eq!(h.to_line(), "(1 3 2) (1 3)");
    }

    #[test]
    fn witnesses_are_bijections_in_s4() {
        for n in 1..=4 {
            let perms: Vec<_> = Permutation::all(n).collect();
            for w in &perms {
                for g in perms.iter().filter(|g| g.cycle_type() == w.cycle_type()) {
                    let d = find_conjugator(w, g).unwrap();
                    for genus in 0..=1 {
                        let stars = enumerate_star(w, genus, n).unwrap();
                        let image: HashSet<_> = stars.iter().map(|f| centrality_witness(f, g).unwrap()).collect();
                        let expected: HashSet<_> = enumerate_star(g, genus, n).unwrap().into_iter().collect();
                        assert_eq!(image, expected);

                        let md = enumerate_monotone_double(w, genus).unwrap();
                        let image: HashSet<_> = md.iter().map(|f| theta(f, &d).unwrap()).collect();
                        let expected: HashSet<_> = enumerate_monotone_double(g, genus).unwrap().into_iter().collect();
                        assert_eq!(image, expected);

                        let mono = enumerate_monotone(w, genus, &TotalOrder::natural(n)).unwrap();
                        let image: HashSet<_> = mono.iter().map(|f| delta(f, &d).unwrap()).collect();
                        let expected: HashSet<_> =
                            enumerate_monotone(g, genus, &TotalOrder::natural(n)).unwrap().into_iter().collect();
                        assert_eq!(image, expected);
                    }
                }
            }
        }
    }
}
