use super::{CheckResult, SuiteConfig, Tally};
use crate::algebra::{
    check_elementary_identity, check_fixed_point_free, check_transitive_power_expression, complete, elementary,
    evaluate, is_central, non_homomorphism_witness, transitive_evaluate, transitive_power, AlgebraElement, Basis,
};
use crate::error::Result;
use crate::factorisations::{md_length, monotone_length, star_length, MdCounts, MonotoneCounts, StarCounts};
use crate::perm::{Partition, Permutation};

pub(super) fn jucys_elementary(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        let mut t = Tally::new();
        for k in 0..=n {
            t.record_result(check_elementary_identity(n, k), || format!("k={k}"));
        }
        out.push(t.finish("e_k(Ξ_n) = Σ_{ℓ(λ)=n-k} K_λ", format!("n={n}, 0 ≤ k ≤ n")));
    }
    for n in 1..=cfg.n {
        for basis in Basis::ALL {
            let mut t = Tally::new();
            for lambda in Partition::all_up_to(cfg.k as usize) {
                let r = evaluate(&basis.polynomial(n, &lambda)).map(|x| is_central(&x));
                t.record_result(r, || format!("{}{lambda}", basis.letter()));
            }
            out.push(t.finish(
                "f(Ξ_n) is central",
                format!("n={n}, f = {}_λ, |λ| ≤ {}", basis.letter(), cfg.k),
            ));
        }
    }
    Ok(out)
}

/// `[ω] x` as an unsigned count, `None` when negative.
fn coefficient(x: &AlgebraElement, w: &Permutation) -> Option<num_bigint::BigUint> {
    x.coefficient_of(w).to_biguint()
}

pub(super) fn jm_coefficients(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let max_len = n - 1 + 2 * cfg.genus as usize;
        let monotone = MonotoneCounts::natural(n, max_len)?;
        let md = MdCounts::new(n, cfg.genus)?;
        let star = StarCounts::for_genus(n, n, cfg.genus)?;
        let top = evaluate(&elementary(n, (n - 1) as u32))?;
        let longest = 2 * n - 2 + 2 * cfg.genus as usize;
        let h: Vec<AlgebraElement> = (0..=max_len)
            .map(|k| evaluate(&complete(n, k as u32)))
            .collect::<Result<_>>()?;
        let top_h: Vec<AlgebraElement> = h.iter().map(|x| top.multiply(x)).collect::<Result<_>>()?;
        let transitive: Vec<AlgebraElement> = (0..=longest).map(|t| transitive_power(n, t as u32)).collect();
        let mut plain = vec![AlgebraElement::one(n)];
        for t in 1..=longest {
            let next = plain[t - 1].times_jm(n);
            plain.push(next);
        }
        for g in 0..=cfg.genus {
            let case = format!("n={n}, g={g}");
            let mut t_mono = Tally::new();
            let mut t_md = Tally::new();
            let mut t_star = Tally::new();
            let mut t_free = Tally::new();
            for w in &perms {
                let len = monotone_length(w, g);
                let lhs = monotone.count_length(w, len);
                let rhs = coefficient(&h[len], w);
                t_mono.record(Some(&lhs) == rhs.as_ref(), || format!("{w}: {lhs} vs {rhs:?}"));

                let lhs = md.count(w, g);
                let rhs = coefficient(&top_h[md_length(w, g)], w);
                t_md.record(Some(&lhs) == rhs.as_ref(), || format!("{w}: {lhs} vs {rhs:?}"));

                let len = star_length(w, g);
                let lhs = star.transitive(w, len);
                let rhs = coefficient(&transitive[len], w);
                t_star.record(Some(&lhs) == rhs.as_ref(), || format!("{w}: {lhs} vs {rhs:?}"));

                let lhs = star.unconstrained(w, len);
                let rhs = coefficient(&plain[len], w);
                t_free.record(Some(&lhs) == rhs.as_ref(), || format!("{w}: {lhs} vs {rhs:?}"));
            }
            out.push(t_mono.finish("m_g(ω) = [ω] h_{n-c(ω)+2g}(Ξ_n)", case.clone()));
            out.push(t_md.finish("md_g(ω) = [ω] J_2 ⋯ J_n h_{c(ω)-1+2g}(Ξ_n)", case.clone()));
            out.push(t_star.finish("a_g(ω) = [ω] T_n(J_n^{n+c(ω)-2+2g})", case.clone()));
            out.push(t_free.finish("star products without transitivity = [ω] J_n^m", case));
        }
        let mut t = Tally::new();
        for len in 0..=longest {
            t.record_result(check_fixed_point_free(n, len as u32), || format!("t={len}"));
        }
        out.push(t.finish(
            "[ω] T_n(J_n^t) = [ω] J_n^t for fixed-point-free ω",
            format!("n={n}, t ≤ {longest}"),
        ));
    }
    Ok(out)
}

pub(super) fn transitive_centrality(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=cfg.n {
        for basis in Basis::ALL {
            let mut t = Tally::new();
            for lambda in Partition::all_up_to(cfg.k as usize) {
                let r = transitive_evaluate(&basis.polynomial(n, &lambda)).map(|x| is_central(&x));
                t.record_result(r, || format!("{}{lambda}", basis.letter()));
            }
            out.push(t.finish(
                "T_n(f(Ξ_n)) is central",
                format!("n={n}, f = {}_λ, |λ| ≤ {}", basis.letter(), cfg.k),
            ));
        }
        let mut t = Tally::new();
        for m in 0..=cfg.k {
            t.record_result(transitive_evaluate(&complete(n, m)).map(|x| is_central(&x)), || format!("m={m}"));
        }
        out.push(t.finish("T_n(h_m(Ξ_n)) is central", format!("n={n}, m ≤ {}", cfg.k)));
        let mut t = Tally::new();
        for power in 0..=n as u32 + 4 {
            t.record(is_central(&transitive_power(n, power)), || format!("t={power}"));
        }
        out.push(t.finish("T_n(J_n^t) is central", format!("n={n}, t ≤ {}", n + 4)));
    }
    for n in 3..=cfg.n {
        let mut t = Tally::new();
        let (together, apart) = non_homomorphism_witness(n)?;
        t.record(!together.is_zero() && apart.is_zero(), || {
            format!("T_n(e_{{n-1}} e_1) = {together}, T_n(e_{{n-1}}) T_n(e_1) = {apart}")
        });
        out.push(t.finish(
            "T_n(e_{n-1} e_1) ≠ 0 = T_n(e_{n-1}) T_n(e_1)",
            format!("n={n}"),
        ));
    }
    Ok(out)
}

pub(super) fn transitive_power_expression(cfg: SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 2..=cfg.n {
        for k in 0..=cfg.k {
            let mut jm = Tally::new();
            let mut ps = Tally::new();
            let c = check_transitive_power_expression(n, k)?;
            jm.record(c.jm_power == c.product, || format!("T_n(J_n^t) = {}", c.jm_power));
            ps.record(c.power_sum == c.product, || format!("T_n(p_t) = {}", c.power_sum));
            let case = format!("n={n}, k={k}");
            out.push(jm.finish("T_n(J_n^{n-1+k}) = J_2 ⋯ J_n h_k(Ξ_n)", case.clone()));
            out.push(ps.finish("T_n(p_{n-1+k}(Ξ_n)) = J_2 ⋯ J_n h_k(Ξ_n)", case));
        }
    }
    Ok(out)
}
