use clap::Args;
use rayon::prelude::*;
use serde::Serialize;
use starfact::verify::{run_suite, Suite, SuiteConfig, SuiteReport};

use crate::bounds::{CliResult, Limits};
use crate::config_of;
use crate::output::Report;

#[derive(Args, Serialize, Debug)]
pub struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(long)]
    pub suite: String,

    /// Degree bound; each suite has its own default.
    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long)]
    pub gmax: Option<u32>,

    #[arg(long)]
    pub kmax: Option<u32>,
}

fn suites(name: &str) -> CliResult<Vec<Suite>> {
    if name == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![name.parse()?])
    }
}

pub fn verify(a: &VerifyArgs, limits: Limits) -> CliResult<Report> {
    let mut plan: Vec<(Suite, SuiteConfig)> = Vec::new();
    for suite in suites(&a.suite)? {
        let d = suite.default_config();
        let cfg = SuiteConfig {
            n: a.n.unwrap_or(d.n),
            genus: a.gmax.unwrap_or(d.genus),
            k: a.kmax.unwrap_or(d.k),
        };
        limits.suite(suite, cfg.n, cfg.genus)?;
        plan.push((suite, cfg));
    }
    // suites run concurrently; collect keeps the plan order
    let reports: Vec<SuiteReport> = plan
        .par_iter()
        .map(|(s, c)| run_suite(*s, *c))
        .collect::<Result<_, _>>()?;

    let mut report = Report::new("verify", config_of(a));
    report.columns = vec!["suite", "identity", "case", "pass", "detail"];
    for r in &reports {
        report.pass &= r.pass;
        for c in &r.checks {
            report.text.push_str(&format!("{c}\n"));
            report.rows.push(vec![
                r.suite.to_string(),
                c.identity.to_string(),
                c.case.clone(),
                c.pass.to_string(),
                c.detail.clone(),
            ]);
        }
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        report.text.push_str(&format!(
            "suite {} (n={}, g={}, k={}): {verdict}, {} checks\n",
            r.suite,
            r.config.n,
            r.config.genus,
            r.config.k,
            r.checks.len()
        ));
        report.results.push(serde_json::to_value(r).expect("reports serialise"));
    }
    Ok(report)
}
