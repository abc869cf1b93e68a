//! Named verification suites. Each suite recomputes one family of
//! identities exhaustively up to configured bounds and reports every check.

mod algebraic;
mod bijective;
mod counting;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    JucysElementary,
    JmCoefficients,
    StarMdEquality,
    Bijections,
    TransitiveCentrality,
    TransitivePowerExpression,
    StarRecurrence,
    ClosedForms,
    MdIdentityRecurrence,
    DoubleHurwitzRelation,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::JucysElementary,
        Suite::JmCoefficients,
        Suite::StarMdEquality,
        Suite::Bijections,
        Suite::TransitiveCentrality,
        Suite::TransitivePowerExpression,
        Suite::StarRecurrence,
        Suite::ClosedForms,
        Suite::MdIdentityRecurrence,
        Suite::DoubleHurwitzRelation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::JucysElementary => "jucys-elementary",
            Suite::JmCoefficients => "jm-coefficients",
            Suite::StarMdEquality => "star-md-equality",
            Suite::Bijections => "bijections",
            Suite::TransitiveCentrality => "transitive-centrality",
            Suite::TransitivePowerExpression => "transitive-power-expression",
            Suite::StarRecurrence => "star-recurrence",
            Suite::ClosedForms => "closed-forms",
            Suite::MdIdentityRecurrence => "md-identity-recurrence",
            Suite::DoubleHurwitzRelation => "double-hurwitz-relation",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::JucysElementary => "e_k(Ξ_n) as a sum of class sums; f(Ξ_n) central for e, h, p",
            Suite::JmCoefficients => "monotone, monotone double and star counts as coefficients of Jucys-Murphy expressions",
            Suite::StarMdEquality => "a_g(ω) = md_g(ω) by counting, by listing and through Γ",
            Suite::Bijections => "Λ_j, Λ^≺, Δ, Θ, Γ, rerooting and the centrality witness are bijections",
            Suite::TransitiveCentrality => "T_n(f(Ξ_n)) central for e, h, p and for powers of J_n",
            Suite::TransitivePowerExpression => "T_n(J_n^{n-1+k}) = T_n(p_{n-1+k}(Ξ_n)) = J_2 ⋯ J_n h_k(Ξ_n)",
            Suite::StarRecurrence => "the join-cut recurrence for a_g(i, α) against star counts",
            Suite::ClosedForms => "Féray's formula and the closed forms for (n) and (1^n) against counts",
            Suite::MdIdentityRecurrence => "the recurrence for md_g((1^n)) in n and g",
            Suite::DoubleHurwitzRelation => "b_g(α ∪ 1^{n-1}) = n! (2n-1)^{n+ℓ(α)+2g-3} a_g(α)",
        }
    }

    /// `n` is the largest degree, `genus` the largest genus and `k` a
    /// suite-specific extra bound (largest `k` for the power expression,
    /// largest `|λ|` for the centrality suites).
    pub fn default_config(self) -> SuiteConfig {
        let (n, genus, k) = match self {
            Suite::JucysElementary => (6, 0, 5),
            Suite::JmCoefficients => (5, 2, 0),
            Suite::StarMdEquality => (5, 2, 0),
            Suite::Bijections => (4, 1, 0),
            Suite::TransitiveCentrality => (5, 0, 5),
            Suite::TransitivePowerExpression => (5, 0, 3),
            Suite::StarRecurrence => (6, 2, 0),
            Suite::ClosedForms => (5, 2, 0),
            Suite::MdIdentityRecurrence => (5, 3, 0),
            Suite::DoubleHurwitzRelation => (3, 1, 0),
        };
        SuiteConfig { n, genus, k }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Parse {
                input: s.to_string(),
                position: 0,
                message: format!("unknown suite; available: {}", names.join(", ")),
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub n: usize,
    pub genus: u32,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub identity: &'static str,
    pub case: String,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} [{}] {}", self.identity, self.case, self.detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: SuiteConfig,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

pub fn run_suite(suite: Suite, config: SuiteConfig) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::JucysElementary => algebraic::jucys_elementary(config)?,
        Suite::JmCoefficients => algebraic::jm_coefficients(config)?,
        Suite::TransitiveCentrality => algebraic::transitive_centrality(config)?,
        Suite::TransitivePowerExpression => algebraic::transitive_power_expression(config)?,
        Suite::StarMdEquality => counting::star_md_equality(config)?,
        Suite::StarRecurrence => counting::star_recurrence(config)?,
        Suite::ClosedForms => counting::closed_forms(config)?,
        Suite::MdIdentityRecurrence => counting::md_identity_recurrence(config)?,
        Suite::DoubleHurwitzRelation => counting::double_hurwitz_relation(config)?,
        Suite::Bijections => bijective::bijections(config)?,
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(SuiteReport {
        suite,
        config,
        checks,
        pass,
    })
}

/// Counts the cases behind one reported check and keeps the first failure.
pub(crate) struct Tally {
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    pub(crate) fn new() -> Self {
        Tally {
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub(crate) fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    /// Records an error as a failed case.
    pub(crate) fn record_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }

    pub(crate) fn finish(self, identity: &'static str, case: String) -> CheckResult {
        let detail = match self.first_failure {
            None => format!("{} cases", self.cases),
            Some(first) => format!("{} of {} cases failed; first: {first}", self.failures, self.cases),
        };
        CheckResult {
            identity,
            case,
            pass: self.failures == 0,
            detail,
        }
    }
}
