//! Acceptance criteria, run with `cargo test -p starfact --test acceptance`.
//! One PASS/FAIL line per criterion; any failure exits nonzero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use starfact::algebra::{decompose, jm_element, power_sum, evaluate, transitive_power};
use starfact::factorisations::{count_star, count_star_unconstrained, star_length};
use starfact::formulas::double_hurwitz_relation;
use starfact::verify::{run_suite, Suite, SuiteConfig};
use starfact::{Error, Partition, Permutation};

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn suite(s: Suite, n: usize, genus: u32, k: u32) -> Outcome {
    let report = run_suite(s, SuiteConfig { n, genus, k }).map_err(|e| format!("{s}: {e}"))?;
    let failed: Vec<String> = report.checks.iter().filter(|c| !c.pass).map(|c| c.to_string()).collect();
    ensure(failed.is_empty(), || format!("{s}: {}", failed.join("; ")))
}

fn part(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn worked_example() -> Outcome {
    let p4 = decompose(&evaluate(&power_sum(4, 4)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(
        p4.coefficients.len() == 3
            && p4.coefficient(&part("[1,1,1,1]")) == BigInt::from(22)
            && p4.coefficient(&part("[3,1]")) == BigInt::from(8)
            && p4.coefficient(&part("[2,2]")) == BigInt::from(4),
        || format!("p_4(Ξ_4) = {p4}"),
    )?;
    let t = decompose(&transitive_power(4, 4)).map_err(|e| e.to_string())?;
    ensure(
        t.coefficients.len() == 2
            && t.coefficient(&part("[3,1]")) == BigInt::from(3)
            && t.coefficient(&part("[2,2]")) == BigInt::from(4),
        || format!("T_4(J_4^4) = {t}"),
    )?;
    let j = jm_element(4, 4).map_err(|e| e.to_string())?.pow(4);
    ensure(j.coefficient_of(&Permutation::identity(4)) == BigInt::from(15), || {
        format!("[e] J_4^4 = {}", j.coefficient_of(&Permutation::identity(4)))
    })?;
    ensure(matches!(decompose(&j), Err(Error::NotCentral { .. })), || "J_4^4 reported central".into())
}

fn s3_example() -> Outcome {
    let w = Permutation::parse("(1 2)(3)", Some(3)).map_err(|e| e.to_string())?;
    let c = Permutation::parse("(1)(2 3)", Some(3)).map_err(|e| e.to_string())?;
    let two = BigUint::from(2u32);
    for x in [&w, &c] {
        let a = count_star(x, 0, 3).map_err(|e| e.to_string())?;
        ensure(a == two, || format!("a_0({x}) = {a}"))?;
    }
    let len = star_length(&w, 0);
    let uw = count_star_unconstrained(&w, len, 3).map_err(|e| e.to_string())?;
    let uc = count_star_unconstrained(&c, len, 3).map_err(|e| e.to_string())?;
    ensure(uw == two && uc == BigUint::from(3u32), || format!("unconstrained counts {uw} and {uc}"))
}

fn relation() -> Outcome {
    for (n, genera) in [(1usize, 0..=1u32), (2, 0..=1), (3, 0..=0)] {
        for g in genera {
            for alpha in Partition::all(n) {
                let r = double_hurwitz_relation(&alpha, g, 3).map_err(|e| e.to_string())?;
                ensure(r.holds(), || format!("α = {alpha}, g = {g}: b = {}, right side {}", r.b, r.rhs))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, u64, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "worked example in S_4: p_4, T_4(J_4^4), [e] J_4^4, non-centrality", 1, Box::new(worked_example)),
        (2, "S_3 star counts with and without transitivity", 1, Box::new(s3_example)),
        (3, "a_g = md_g for n ≤ 5, g ≤ 2; listing and Γ for n ≤ 4, g ≤ 1", 300, Box::new(|| suite(Suite::StarMdEquality, 5, 2, 0))),
        (4, "bijections and their inverses for n ≤ 4, g ≤ 1", 300, Box::new(|| suite(Suite::Bijections, 4, 1, 0))),
        (
            5,
            "e_k(Ξ_n) for n ≤ 6; coefficient identities for n ≤ 5, g ≤ 2",
            120,
            Box::new(|| suite(Suite::JucysElementary, 6, 0, 5).and(suite(Suite::JmCoefficients, 5, 2, 0))),
        ),
        (6, "T_n(J_n^{n-1+k}) in both forms for n ≤ 5, k ≤ 3", 120, Box::new(|| suite(Suite::TransitivePowerExpression, 5, 0, 3))),
        (7, "T_n(f(Ξ_n)) central for e, h, p with |λ| ≤ 5, n ≤ 5", 120, Box::new(|| suite(Suite::TransitiveCentrality, 5, 0, 5))),
        (8, "star recurrence for i + |α| ≤ 6, g ≤ 2", 60, Box::new(|| suite(Suite::StarRecurrence, 6, 2, 0))),
        (
            9,
            "Féray formula, closed forms and the (1^n) recurrence",
            120,
            Box::new(|| suite(Suite::ClosedForms, 5, 2, 0).and(suite(Suite::MdIdentityRecurrence, 5, 3, 0))),
        ),
        (10, "double Hurwitz relation in S_3 (g ≤ 1) and S_5 (g = 0)", 600, Box::new(relation)),
    ];
    let mut all = true;
    for (id, what, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(limit), || format!("took {elapsed:?}, limit {limit} s"))
        });
        match outcome {
            Ok(()) => println!("criterion {id}: PASS ({elapsed:.2?}) {what}"),
            Err(e) => {
                all = false;
                println!("criterion {id}: FAIL ({elapsed:.2?}) {what}: {e}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
