use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;

use super::{CheckResult, SuiteConfig, Tally};
use crate::bijections::gamma;
use crate::error::Result;
use crate::factorisations::{enumerate_monotone_double, enumerate_star, MdCounts, StarCounts};
use crate::formulas::{self,
    feray_count, md_full_cycle, md_identity,
    recurrence_representative, StarRecurrence,
};
use crate::perm::{Partition, Permutation};

pub(super) fn star_md_equality(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let star = StarCounts::for_genus(n, n, cfg.genus)?;
        let md = MdCounts::new(n, cfg.genus)?;
        for g in 0..=cfg.genus {
            let mut equal = Tally::new();
            let mut central = Tally::new();
            let mut by_class: BTreeMap<Partition, BigUint> = BTreeMap::new();
            for w in &perms {
                let a = star.genus(w, g);
                let m = md.count(w, g);
                equal.record(a == m, || format!("{w}: a_g = {a}, md_g = {m}"));
                let first = by_class.entry(w.cycle_type()).or_insert_with(|| a.clone());
                central.record(*first == a, || format!("{w}: {a} vs {first} on its class"));
            }
            let case = format!("n={n}, g={g}, dynamic programme");
            out.push(equal.finish("a_g(ω) = md_g(ω)", case.clone()));
            out.push(central.finish("a_g is a class function", case));
        }
    }
    let list_n = cfg.n.min(4);
    let list_g = cfg.genus.min(1);
    for n in 1..=list_n {
        for g in 0..=list_g {
            let mut t = Tally::new();
            for w in Permutation::all(n) {
                let stars = enumerate_star(&w, g, n)?;
                let md: HashSet<_> = enumerate_monotone_double(&w, g)?.into_iter().collect();
                let image: HashSet<_> = stars.iter().map(gamma).collect();
                t.record(image.len() == stars.len() && image == md, || {
                    format!("{w}: {} stars, {} images, {} md", stars.len(), image.len(), md.len())
                });
            }
            out.push(t.finish("Γ maps A_g(ω) onto MD_g(ω)", format!("n={n}, g={g}, listing")));
        }
    }
    Ok(out)
}

pub(super) fn star_recurrence(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let memo = StarRecurrence::new();
    let mut out = Vec::new();
    let mut t = Tally::new();
    let base = memo.value(1, &Partition::empty(), 0);
    t.record(base == BigUint::from(1u32), || format!("a_0(1, ε) = {base}"));
    out.push(t.finish("a_0(1, ε) = 1", "initial condition".into()));
    for n in 1..=cfg.n {
        let star = StarCounts::for_genus(n, n, cfg.genus)?;
        for g in 0..=cfg.genus {
            let mut t = Tally::new();
            for i in 1..=n {
                for alpha in Partition::all(n - i) {
                    let w = recurrence_representative(i, &alpha)?;
                    let r = memo.value(i, &alpha, g);
                    let d = star.genus(&w, g);
                    t.record(r == d, || format!("i={i}, α={alpha}: recurrence {r}, count {d}"));
                }
            }
            out.push(t.finish("recurrence for a_g(i, α) = star count", format!("i + |α| = {n}, g={g}")));
        }
    }
    Ok(out)
}

pub(super) fn closed_forms(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        let star = StarCounts::for_genus(n, n, cfg.genus)?;
        let md = MdCounts::new(n, cfg.genus)?;
        for g in 0..=cfg.genus {
            let mut t = Tally::new();
            for lambda in Partition::all(n) {
                let w = lambda.representative()?;
                let a = star.genus(&w, g);
                let m = md.count(&w, g);
                match feray_count(&lambda, g) {
                    Ok(f) => t.record(f == a && a == m, || format!("{lambda}: Féray {f}, star {a}, md {m}")),
                    Err(e) => t.record(false, || format!("{lambda}: {e}")),
                }
            }
            out.push(t.finish("Féray formula = a_g(λ) = md_g(λ)", format!("n={n}, g={g}")));

            let case = format!("n={n}, g={g}, listing");
            let identity_list = enumerate_monotone_double(&Permutation::identity(n), g)?.len();
            let mut t = Tally::new();
            match md_identity(n, g) {
                Ok(v) => t.record(v == BigUint::from(identity_list), || format!("formula {v}, listed {identity_list}")),
                Err(e) => t.record(false, || e.to_string()),
            }
            out.push(t.finish("md_g((1^n)) = (n-1)! Cat(n-1) T(g+n-1, n-1)", case.clone()));
            if n >= 2 {
                let cycle = Permutation::cycle(n, &(1..=n).collect::<Vec<_>>())?;
                let listed = enumerate_monotone_double(&cycle, g)?.len();
                let mut t = Tally::new();
                match md_full_cycle(n, g) {
                    Ok(v) => t.record(v == BigUint::from(listed), || format!("formula {v}, listed {listed}")),
                    Err(e) => t.record(false, || e.to_string()),
                }
                out.push(t.finish("md_g((n)) = S(2g+n, n-1) / C(n, 2)", case));
            }
        }
    }
    Ok(out)
}

pub(super) fn md_identity_recurrence(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 2..=cfg.n {
        let mut t = Tally::new();
        for g in 0..=cfg.genus {
            let r = formulas::md_identity_recurrence(n, g).map(|(l, r)| l == r);
            t.record_result(r, || format!("g={g}"));
        }
        out.push(t.finish(
            "n md_g((1^n)) = n(n-1)^2 md_{g-1}((1^n)) + 2(n-1)(2n-3) md_g((1^{n-1}))",
            format!("n={n}, g ≤ {}", cfg.genus),
        ));
    }
    Ok(out)
}

pub(super) fn double_hurwitz_relation(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        for g in 0..=cfg.genus {
            let mut t = Tally::new();
            for alpha in Partition::all(n) {
                let r = formulas::double_hurwitz_relation(&alpha, g, cfg.n)?;
                t.record(r.holds(), || format!("α={alpha}: b = {}, right side {}", r.b, r.rhs));
            }
            out.push(t.finish(
                "b_g(α ∪ 1^{n-1}) = n! (2n-1)^{n+ℓ(α)+2g-3} a_g(α)",
                format!("|α| = {n}, g={g}, in S_{}", 2 * n - 1),
            ));
        }
    }
    Ok(out)
}
