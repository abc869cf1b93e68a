use clap::{Args, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};
use starfact::algebra::{complete, evaluate};
use starfact::factorisations::{
    count_double_hurwitz, count_md, count_monotone, count_star, enumerate_monotone, enumerate_monotone_double,
    enumerate_star, monotone_length, FactorisationRecord, MdCounts, StarCounts,
};
use starfact::formulas::{feray_count, md_full_cycle, md_identity, recurrence_star};
use starfact::{Partition, Permutation, TotalOrder};

use crate::bounds::{CliError, CliResult, Limits};
use crate::output::Report;
use crate::{config_of, TargetArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountFamily {
    Star,
    Monotone,
    Md,
    DoubleHurwitz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ListFamily {
    Star,
    Monotone,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Every method that applies and is within bounds.
    All,
    Dp,
    Listing,
    Formula,
}

#[derive(Args, Serialize, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub family: CountFamily,

    #[command(flatten)]
    #[serde(flatten)]
    pub target: TargetArgs,

    #[arg(long, default_value_t = 0)]
    pub genus: u32,

    /// Root symbol of the star factorisations; defaults to n.
    #[arg(long)]
    pub root: Option<usize>,

    /// Total order for monotone factorisations, e.g. "3<1<2"; defaults to
    /// the natural order.
    #[arg(long)]
    pub order: Option<String>,

    /// Cycle type of the first factor for the double Hurwitz family;
    /// defaults to a full cycle.
    #[arg(long)]
    pub source: Option<String>,

    #[arg(long, value_enum, default_value = "all")]
    pub method: Method,
}

#[derive(Args, Serialize, Debug)]
pub struct ListArgs {
    #[arg(long, value_enum)]
    pub family: ListFamily,

    #[command(flatten)]
    #[serde(flatten)]
    pub target: TargetArgs,

    #[arg(long, default_value_t = 0)]
    pub genus: u32,

    #[arg(long)]
    pub root: Option<usize>,

    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Args, Serialize, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 5)]
    pub nmax: usize,

    #[arg(long, default_value_t = 2)]
    pub gmax: u32,
}

pub fn big(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

fn root_of(root: Option<usize>, n: usize) -> usize {
    root.unwrap_or(n)
}

fn order_of(order: &Option<String>, n: usize) -> CliResult<TotalOrder> {
    match order {
        None => Ok(TotalOrder::natural(n)),
        Some(s) => {
            let o: TotalOrder = s.parse()?;
            if o.degree() != n {
                return Err(CliError::Usage(format!("order {o} has degree {} but the target has degree {n}", o.degree())));
            }
            Ok(o)
        }
    }
}

struct Outcome {
    quantity: String,
    method: &'static str,
    value: BigUint,
}

fn wants(method: Method, m: Method) -> bool {
    method == Method::All || method == m
}

/// Runs the listing method when it was asked for (bounds enforced) or when
/// every method was asked for and listing is within bounds.
fn listing_wanted(a: &CountArgs, limits: Limits, n: usize) -> CliResult<bool> {
    match a.method {
        Method::Listing => {
            limits.listing(n, a.genus, "listing")?;
            Ok(true)
        }
        Method::All => Ok(limits.listing_allowed(n, a.genus)),
        _ => Ok(false),
    }
}

/// Star count for the remaining cycles after removing the cycle through
/// `root`, by the cut-and-join recurrence.
fn star_by_recurrence(target: &Permutation, root: usize, genus: u32) -> BigUint {
    let i = target.cycle_length_of(root);
    let ty = target.cycle_type();
    let at = ty.parts().iter().position(|&p| p == i).expect("the root's cycle is a part");
    recurrence_star(i, &ty.without_index(at), genus)
}

pub fn count(a: &CountArgs, limits: Limits) -> CliResult<Report> {
    let target = a.target.resolve()?;
    let n = target.degree();
    let g = a.genus;
    limits.dp(n, "count")?;
    let listing = listing_wanted(a, limits, n)?;
    let ty = target.cycle_type();
    let mut out: Vec<Outcome> = Vec::new();
    let mut push = |quantity: &str, method: &'static str, value: BigUint| {
        out.push(Outcome {
            quantity: quantity.to_string(),
            method,
            value,
        })
    };
    match a.family {
        CountFamily::Star => {
            let root = root_of(a.root, n);
            let q = format!("a_{g}");
            if wants(a.method, Method::Dp) {
                push(&q, "dp", count_star(&target, g, root)?);
                push(&q, "recurrence", star_by_recurrence(&target, root, g));
            }
            if listing {
                push(&q, "listing", BigUint::from(enumerate_star(&target, g, root)?.len()));
            }
            if wants(a.method, Method::Formula) {
                push(&q, "formula", feray_count(&ty, g)?);
            }
        }
        CountFamily::Monotone => {
            let order = order_of(&a.order, n)?;
            let q = format!("m_{g}");
            if wants(a.method, Method::Dp) {
                push(&q, "dp", count_monotone(&target, g, &order)?);
            }
            if listing {
                push(&q, "listing", BigUint::from(enumerate_monotone(&target, g, &order)?.len()));
            }
            if wants(a.method, Method::Formula) {
                // [ω] h_k(Ξ_n) counts natural-order factorisations; the count
                // does not depend on the order
                let k = monotone_length(&target, g) as u32;
                let c = evaluate(&complete(n, k))?.coefficient_of(&target);
                push(&q, "algebra", c.to_biguint().expect("coefficients of h_k are nonnegative"));
            }
        }
        CountFamily::Md => {
            let q = format!("md_{g}");
            if wants(a.method, Method::Dp) {
                push(&q, "dp", count_md(&target, g)?);
            }
            if listing {
                push(&q, "listing", BigUint::from(enumerate_monotone_double(&target, g)?.len()));
            }
            if wants(a.method, Method::Formula) {
                push(&q, "formula", feray_count(&ty, g)?);
                if target.is_full_cycle() && n >= 2 {
                    push(&q, "closed-form", md_full_cycle(n, g)?);
                }
                if target.is_identity() {
                    push(&q, "closed-form", md_identity(n, g)?);
                }
            }
        }
        CountFamily::DoubleHurwitz => {
            let alpha: Partition = match &a.source {
                Some(s) => s.parse()?,
                None => Partition::single(n),
            };
            if alpha.size() != n {
                return Err(CliError::Usage(format!("source {alpha} is not a partition of {n}")));
            }
            if !wants(a.method, Method::Dp) {
                return Err(CliError::Usage("the double Hurwitz family is only counted by dp".into()));
            }
            let h = count_double_hurwitz(&alpha, &ty, g)?;
            if alpha == Partition::single(n) {
                let class = ty.class_size();
                if &h % &class == BigUint::from(0u32) {
                    push(&format!("b_{g}"), "dp", &h / &class);
                }
            }
            push(&format!("H_{g}{alpha}"), "dp", h);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!("no method applies with --method {:?}", a.method).to_lowercase()));
    }

    let mut report = Report::new("count", config_of(a));
    report.columns = vec!["quantity", "method", "value"];
    let mut quantities: Vec<&str> = Vec::new();
    for o in &out {
        if !quantities.contains(&o.quantity.as_str()) {
            quantities.push(&o.quantity);
        }
    }
    for q in &quantities {
        let values: Vec<&Outcome> = out.iter().filter(|o| o.quantity == *q).collect();
        let agree = values.iter().all(|o| o.value == values[0].value);
        report.pass &= agree;
        if agree {
            report.text.push_str(&format!("{q}({target}) = {}\n", values[0].value));
        } else {
            report.text.push_str(&format!("{q}({target}): methods disagree\n"));
        }
        for o in values {
            report.text.push_str(&format!("  method={} {}\n", o.method, o.value));
        }
    }
    for o in &out {
        report.rows.push(vec![o.quantity.clone(), o.method.to_string(), o.value.to_string()]);
        report
            .results
            .push(json!({"quantity": o.quantity, "method": o.method, "value": big(&o.value)}));
    }
    Ok(report)
}

pub fn list(a: &ListArgs, limits: Limits) -> CliResult<Report> {
    let target = a.target.resolve()?;
    let n = target.degree();
    limits.listing(n, a.genus, "list")?;
    let records: Vec<FactorisationRecord> = match a.family {
        ListFamily::Star => enumerate_star(&target, a.genus, root_of(a.root, n))?
            .iter()
            .map(FactorisationRecord::from)
            .collect(),
        ListFamily::Monotone => enumerate_monotone(&target, a.genus, &order_of(&a.order, n)?)?
            .iter()
            .map(FactorisationRecord::from)
            .collect(),
        ListFamily::Md => enumerate_monotone_double(&target, a.genus)?
            .iter()
            .map(FactorisationRecord::from)
            .collect(),
    };
    let mut report = Report::new("list", config_of(a));
    report.columns = vec!["index", "factors"];
    for (k, r) in records.iter().enumerate() {
        report.text.push_str(&r.to_line());
        report.text.push('\n');
        report.rows.push(vec![(k + 1).to_string(), r.to_line()]);
        report.results.push(serde_json::to_value(r).expect("records serialise"));
    }
    if records.is_empty() {
        report.text = "no factorisations\n".into();
    }
    Ok(report)
}

pub fn table(a: &TableArgs, limits: Limits) -> CliResult<Report> {
    limits.dp(a.nmax, "table")?;
    let mut report = Report::new("table", config_of(a));
    report.columns = vec!["lambda", "g", "count_star", "md_count", "feray", "md_closed_form", "all_agree"];
    for n in 1..=a.nmax {
        let stars = StarCounts::for_genus(n, n, a.gmax)?;
        let mds = MdCounts::new(n, a.gmax)?;
        for lambda in Partition::all(n) {
            let rep = lambda.representative()?;
            for g in 0..=a.gmax {
                let star = stars.genus(&rep, g);
                let md = mds.count(&rep, g);
                let feray = feray_count(&lambda, g)?;
                let closed = if n >= 2 && lambda == Partition::single(n) {
                    Some(md_full_cycle(n, g)?)
                } else if lambda == Partition::ones(n) {
                    Some(md_identity(n, g)?)
                } else {
                    None
                };
                let agree = star == md && md == feray && closed.as_ref().is_none_or(|c| *c == md);
                report.pass &= agree;
                report.rows.push(vec![
                    lambda.to_string(),
                    g.to_string(),
                    star.to_string(),
                    md.to_string(),
                    feray.to_string(),
                    closed.as_ref().map_or(String::new(), ToString::to_string),
                    agree.to_string(),
                ]);
                report.results.push(json!({
                    "lambda": lambda.to_string(),
                    "g": g,
                    "count_star": big(&star),
                    "md_count": big(&md),
                    "feray": big(&feray),
                    "md_closed_form": closed.as_ref().map(big),
                    "all_agree": agree,
                }));
            }
        }
    }
    Ok(report)
}
