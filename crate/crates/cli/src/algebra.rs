use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use starfact::algebra::{decompose, span_experiment, well_definedness_experiment, Expr};
use starfact::numeric::JsonInt;
use starfact::Error;

use crate::bounds::{CliResult, Limits};
use crate::config_of;
use crate::output::Report;

#[derive(Args, Serialize, Debug)]
pub struct AlgebraArgs {
    #[arg(long)]
    pub n: usize,

    /// Expression over J[k], e[λ], h[λ], p[λ] and T(...), e.g. "T(J[4]^4)".
    #[arg(long)]
    pub expr: String,

    /// Also print the element itself, term by term.
    #[arg(long)]
    pub element: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    /// Whether the transitivity operator respects the relations among
    /// symmetric functions in n - 1 variables.
    WellDefinedness,
    /// Dimensions of the span of the transitive images and of the
    /// subalgebra they generate.
    Span,
}

#[derive(Args, Serialize, Debug)]
pub struct ExperimentArgs {
    #[arg(value_enum)]
    pub kind: ExperimentKind,

    #[arg(long, default_value_t = 4)]
    pub n: usize,

    /// Largest degree of the symmetric functions used.
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
}

pub fn algebra(a: &AlgebraArgs, limits: Limits) -> CliResult<Report> {
    limits.dp(a.n, "algebra")?;
    let expr = Expr::parse(&a.expr)?;
    let x = expr.evaluate(a.n)?;
    let mut report = Report::new("algebra", config_of(a));
    report.columns = vec!["expr", "central", "value"];
    let mut result = match decompose(&x) {
        Ok(d) => {
            report.text.push_str(&format!("{d}\n"));
            report.rows.push(vec![a.expr.clone(), "true".into(), d.to_string()]);
            json!({"expr": a.expr, "central": true, "decomposition": d, "display": d.to_string()})
        }
        Err(Error::NotCentral {
            omega,
            gamma,
            omega_coefficient,
            gamma_coefficient,
        }) => {
            let msg = format!("not central: [{omega}] = {omega_coefficient} but [{gamma}] = {gamma_coefficient}");
            report.text.push_str(&format!("{msg}\n"));
            report.rows.push(vec![a.expr.clone(), "false".into(), msg]);
            json!({
                "expr": a.expr,
                "central": false,
                "witness": {
                    "omega": omega.to_string(),
                    "gamma": gamma.to_string(),
                    "omega_coefficient": JsonInt(&omega_coefficient),
                    "gamma_coefficient": JsonInt(&gamma_coefficient),
                },
            })
        }
        Err(e) => return Err(e.into()),
    };
    if a.element {
        report.text.push_str(&format!("element: {x}\n"));
        result["element"] = Value::from(x.to_string());
    }
    report.results.push(result);
    Ok(report)
}

pub fn experiment(a: &ExperimentArgs, limits: Limits) -> CliResult<Report> {
    limits.check("n", a.n, crate::bounds::LISTING_N, "experiment")?;
    let mut report = Report::new("experiment", config_of(a));
    match a.kind {
        ExperimentKind::WellDefinedness => {
            let r = well_definedness_experiment(a.n, a.degree)?;
            report.columns = vec!["n", "lambda", "power_sum_words", "elementary_words", "agree"];
            for row in &r.rows {
                report.rows.push(vec![
                    row.n.to_string(),
                    row.lambda.to_string(),
                    row.power_sum_words.to_string(),
                    row.elementary_words.to_string(),
                    row.agree.to_string(),
                ]);
            }
            report.text.push_str(&format!(
                "expansions by word order and by Newton's identities agree: {}\n",
                r.expansions_agree()
            ));
            report.text.push_str(&format!(
                "relations among e_1..e_{{n-1}} tested: {}, not preserved: {}\n",
                r.relations, r.relations_not_preserved
            ));
            for w in &r.witnesses {
                report.text.push_str(&format!("n={}: f = {} vanishes at the JM elements, T(f) = {}\n", w.n, w.f, w.transitive_value));
            }
            report.results.push(serde_json::to_value(&r).expect("reports serialise"));
        }
        ExperimentKind::Span => {
            let r = span_experiment(a.n, a.degree)?;
            report.columns = vec!["n", "max_degree", "span", "generated", "centre"];
            report.rows.push(vec![
                r.n.to_string(),
                r.max_degree.to_string(),
                r.span.to_string(),
                r.generated.to_string(),
                r.centre.to_string(),
            ]);
            report.text.push_str(&format!(
                "n={} degree<={}: span {} generated {} centre {}\n",
                r.n, r.max_degree, r.span, r.generated, r.centre
            ));
            report.results.push(serde_json::to_value(&r).expect("reports serialise"));
        }
    }
    Ok(report)
}
