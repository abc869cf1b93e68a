use std::collections::HashSet;

use super::{CheckResult, SuiteConfig, Tally};
use crate::bijections::{
    centrality_witness, delta, find_conjugator, gamma_inverse, gamma_traced, lambda_j_inverse, lambda_j_traced,
    lambda_order, lambda_order_inverse, reroot, theta_traced,
};
use crate::error::Result;
use crate::factorisations::{enumerate_monotone, enumerate_monotone_double, enumerate_star};
use crate::perm::{orbits_of_transpositions, Permutation, TotalOrder};

/// Six orders spread evenly over all orders of `[n]` in lexicographic
/// order, or all of them when there are at most six.
pub fn order_panel(n: usize) -> Vec<TotalOrder> {
    let mut all: Vec<TotalOrder> = Permutation::all(n)
        .map(|p| TotalOrder::from_sequence(p.images()).expect("images form a permutation"))
        .collect();
    all.sort_by(|a, b| a.sequence().cmp(b.sequence()));
    if all.len() <= 6 {
        return all;
    }
    let last = all.len() - 1;
    (0..6).map(|k| all[k * last / 5].clone()).collect()
}

pub(super) fn bijections(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let natural = TotalOrder::natural(n);
        for g in 0..=cfg.genus {
            let case = format!("n={n}, g={g}");

            let mut lj = Tally::new();
            let mut lo = Tally::new();
            for order in order_panel(n) {
                for w in &perms {
                    let list = enumerate_monotone(w, g, &order)?;
                    for j in 1..n {
                        let target_order = order.swap_adjacent(j);
                        let expected = enumerate_monotone(w, g, &target_order)?.len();
                        let mut image = HashSet::new();
                        let mut ok = true;
                        for f in &list {
                            let (h, trace) = lambda_j_traced(f, j)?;
                            ok &= h.order == target_order && h.order.is_monotone(&h.factors);
                            ok &= trace.replay(n, &f.factors).ok().as_ref() == Some(&h.factors);
                            ok &= orbits_of_transpositions(n, &h.factors)? == orbits_of_transpositions(n, &f.factors)?;
                            ok &= lambda_j_inverse(&h, j)? == *f;
                            image.insert(h.factors);
                        }
                        ok &= image.len() == list.len() && image.len() == expected;
                        lj.record(ok, || format!("order {order}, ω = {w}, j = {j}"));
                    }
                    let natural_count = enumerate_monotone(w, g, &natural)?.len();
                    let mut image = HashSet::new();
                    let mut ok = true;
                    for f in &list {
                        let h = lambda_order(f)?;
                        ok &= lambda_order_inverse(&h, &order)? == *f;
                        image.insert(h.factors);
                    }
                    ok &= image.len() == list.len() && image.len() == natural_count;
                    lo.record(ok, || format!("order {order}, ω = {w}"));
                }
            }
            out.push(lj.finish("Λ_j is a bijection onto the swapped order, moves keep the product", case.clone()));
            out.push(lo.finish("Λ^≺ is a bijection onto the natural order", case.clone()));

            let mut t_delta = Tally::new();
            let mut t_theta = Tally::new();
            let mut t_witness = Tally::new();
            for w in &perms {
                let mono = enumerate_monotone(w, g, &natural)?;
                let md = enumerate_monotone_double(w, g)?;
                let stars = enumerate_star(w, g, n)?;
                for c in perms.iter().filter(|c| c.cycle_type() == w.cycle_type()) {
                    let d = find_conjugator(w, c)?;
                    let image: HashSet<_> = mono.iter().map(|f| delta(f, &d)).collect::<Result<_>>()?;
                    let expected: HashSet<_> = enumerate_monotone(c, g, &natural)?.into_iter().collect();
                    t_delta.record(image.len() == mono.len() && image == expected, || format!("{w} → {c}"));

                    let mut ok = true;
                    let mut image = HashSet::new();
                    for f in &md {
                        let (h, trace) = theta_traced(f, &d)?;
                        let start: Vec<_> = f.factors.iter().map(|t| t.conjugate(&d)).collect();
                        ok &= trace.replay(n, &start).ok().as_ref() == Some(&h.factors);
                        image.insert(h);
                    }
                    let expected: HashSet<_> = enumerate_monotone_double(c, g)?.into_iter().collect();
                    ok &= image.len() == md.len() && image == expected;
                    t_theta.record(ok, || format!("{w} → {c}"));

                    let image: HashSet<_> = stars.iter().map(|f| centrality_witness(f, c)).collect::<Result<_>>()?;
                    let expected: HashSet<_> = enumerate_star(c, g, n)?.into_iter().collect();
                    t_witness.record(image.len() == stars.len() && image == expected, || format!("{w} → {c}"));
                }
            }
            out.push(t_delta.finish("Δ is a bijection M_g(ω) → M_g(δωδ⁻¹)", case.clone()));
            out.push(t_theta.finish("Θ is a bijection MD_g(ω) → MD_g(δωδ⁻¹)", case.clone()));
            out.push(t_witness.finish("Γ⁻¹ ∘ Θ ∘ Γ is a bijection A_g(ω) → A_g(γ)", case.clone()));

            let mut t_gamma = Tally::new();
            let mut t_reroot = Tally::new();
            for w in &perms {
                let md: HashSet<_> = enumerate_monotone_double(w, g)?.into_iter().collect();
                for root in 1..=n {
                    let stars = enumerate_star(w, g, root)?;
                    let mut ok = true;
                    let mut image = HashSet::new();
                    for f in &stars {
                        let (h, trace) = gamma_traced(f);
                        let replayed = trace.replay(n, &f.factors());
                        ok &= replayed.map(|r| r[n - 1..] == h.factors[..]).unwrap_or(false);
                        ok &= gamma_inverse(&h, root)? == *f;
                        image.insert(h);
                    }
                    ok &= image.len() == stars.len() && image == md;
                    t_gamma.record(ok, || format!("ω = {w}, root {root}"));

                    let mut ok = true;
                    for f in &stars {
                        for i in 1..=n {
                            let h = reroot(f, i)?;
                            ok &= h.root == i && reroot(&h, root)? == *f;
                        }
                    }
                    t_reroot.record(ok, || format!("ω = {w}, root {root}"));
                }
            }
            out.push(t_gamma.finish("Γ is a bijection A_g^r(ω) → MD_g(ω) for every root r", case.clone()));
            out.push(t_reroot.finish("rerooting is invertible", case));
        }
    }
    Ok(out)
}
