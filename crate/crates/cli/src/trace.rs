use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::json;
use starfact::bijections::{
    centrality_witness, delta_traced, find_conjugator, gamma_inverse_traced, gamma_traced, lambda_j_inverse_traced,
    lambda_j_traced, lambda_order_traced, reroot_traced, theta_traced, HurwitzMoveTrace,
};
use starfact::factorisations::{MonotoneDoubleFactorisation, MonotoneFactorisation, StarFactorisation};
use starfact::perm::parse_transpositions;
use starfact::{Permutation, TotalOrder, Transposition};

use crate::bounds::{CliError, CliResult};
use crate::config_of;
use crate::output::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Map {
    /// Star factorisation to monotone double factorisation.
    Gamma,
    GammaInverse,
    /// Star factorisation to the same target with another root.
    Reroot,
    LambdaJ,
    LambdaJInverse,
    /// Monotone under --order to monotone under the natural order.
    LambdaOrder,
    /// Monotone factorisation of ω to one of δωδ⁻¹.
    Delta,
    /// Monotone double factorisation of ω to one of δωδ⁻¹.
    Theta,
    /// Star factorisation of ω to one of a conjugate target; no trace.
    Witness,
}

#[derive(Args, Serialize, Debug)]
pub struct TraceArgs {
    #[arg(long, value_enum)]
    pub map: Map,

    /// Target permutation of the input factorisation.
    #[arg(long)]
    pub target: Option<String>,

    #[arg(long)]
    pub n: Option<usize>,

    /// Legs of a star factorisation, e.g. "1,2,1".
    #[arg(long)]
    pub legs: Option<String>,

    /// Root of the input star factorisation, or of the output for
    /// gamma-inverse; defaults to n.
    #[arg(long)]
    pub root: Option<usize>,

    /// Root to move to, for reroot.
    #[arg(long)]
    pub new_root: Option<usize>,

    /// Full cycle of a monotone double factorisation.
    #[arg(long)]
    pub sigma: Option<String>,

    /// Transposition factors, e.g. "(1 3)(2 3)".
    #[arg(long)]
    pub factors: Option<String>,

    /// Total order of a monotone input, e.g. "2<1<3".
    #[arg(long)]
    pub order: Option<String>,

    /// Index of the adjacent pair of the order exchanged by lambda-j.
    #[arg(long)]
    pub j: Option<usize>,

    /// Conjugating permutation for delta and theta.
    #[arg(long)]
    pub by: Option<String>,

    /// Conjugate target to reach; a conjugator is chosen when --by is absent.
    #[arg(long)]
    pub to: Option<String>,
}

fn need<'a, T>(value: &'a Option<T>, flag: &str, map: Map) -> CliResult<&'a T> {
    value
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("--{flag} is required for --map {}", map_name(map))))
}

fn map_name(map: Map) -> String {
    map.to_possible_value().expect("no skipped variants").get_name().to_string()
}

impl TraceArgs {
    /// Degree from --n, else the order, the cycle, the target or the
    /// largest symbol mentioned anywhere.
    fn degree(&self) -> CliResult<usize> {
        if let Some(n) = self.n {
            return Ok(n);
        }
        if let Some(o) = &self.order {
            return Ok(o.parse::<TotalOrder>()?.degree());
        }
        if let Some(s) = &self.sigma {
            return Ok(Permutation::parse(s, None)?.degree());
        }
        if let Some(t) = &self.target {
            return Ok(Permutation::parse(t, None)?.degree());
        }
        if let Some(f) = &self.factors {
            if let Some(m) = parse_transpositions(f)?.iter().map(|t| t.hi()).max() {
                return Ok(m);
            }
        }
        Err(CliError::Usage("cannot infer the degree; pass --n".into()))
    }

    fn permutation(&self, s: &str, n: usize) -> CliResult<Permutation> {
        Ok(Permutation::parse(s, Some(n))?)
    }

    fn star(&self, n: usize) -> CliResult<StarFactorisation> {
        let target = self.permutation(need(&self.target, "target", self.map)?, n)?;
        let legs: Vec<usize> = need(&self.legs, "legs", self.map)?
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{:?} is not a leg", s.trim())))
            })
            .collect::<CliResult<_>>()?;
        Ok(StarFactorisation::new(target, self.root.unwrap_or(n), legs)?)
    }

    fn factors(&self) -> CliResult<Vec<Transposition>> {
        Ok(parse_transpositions(self.factors.as_deref().unwrap_or(""))?)
    }

    fn monotone(&self, n: usize) -> CliResult<MonotoneFactorisation> {
        let order = match &self.order {
            Some(o) => o.parse()?,
            None => TotalOrder::natural(n),
        };
        let factors = self.factors()?;
        Ok(match &self.target {
            Some(t) => MonotoneFactorisation::new(self.permutation(t, n)?, order, factors)?,
            None => MonotoneFactorisation::from_factors(order, factors)?,
        })
    }

    fn monotone_double(&self, n: usize) -> CliResult<MonotoneDoubleFactorisation> {
        let sigma = self.permutation(need(&self.sigma, "sigma", self.map)?, n)?;
        let factors = self.factors()?;
        let target = match &self.target {
            Some(t) => self.permutation(t, n)?,
            None => sigma.then(&starfact::perm::product_of(n, &factors)),
        };
        Ok(MonotoneDoubleFactorisation::new(target, sigma, factors)?)
    }

    fn conjugator(&self, omega: &Permutation, n: usize) -> CliResult<Permutation> {
        match (&self.by, &self.to) {
            (Some(d), _) => self.permutation(d, n),
            (None, Some(g)) => Ok(find_conjugator(omega, &self.permutation(g, n)?)?),
            (None, None) => Err(CliError::Usage(format!("--by or --to is required for --map {}", map_name(self.map)))),
        }
    }
}

fn conjugated(factors: &[Transposition], by: &Permutation) -> String {
    factors.iter().map(|t| t.conjugate(by).to_string()).collect::<Vec<_>>().join(" ")
}

fn nonempty(line: String) -> String {
    if line.is_empty() || line.starts_with(" under") {
        format!("(empty){line}")
    } else {
        line
    }
}

struct Traced {
    input: String,
    /// The sequence the move positions refer to, when it is not the input.
    moved: Option<String>,
    output: String,
    trace: Option<HurwitzMoveTrace>,
}

pub fn trace(a: &TraceArgs) -> CliResult<Report> {
    let n = a.degree()?;
    let t = match a.map {
        Map::Gamma => {
            let f = a.star(n)?;
            let (out, tr) = gamma_traced(&f);
            Traced {
                input: f.to_line(),
                moved: None,
                output: out.to_line(),
                trace: Some(tr),
            }
        }
        Map::GammaInverse => {
            let f = a.monotone_double(n)?;
            let (out, tr) = gamma_inverse_traced(&f, a.root.unwrap_or(n))?;
            Traced {
                input: f.to_line(),
                moved: None,
                output: out.to_line(),
                trace: Some(tr),
            }
        }
        Map::Reroot => {
            let f = a.star(n)?;
            let (out, tr) = reroot_traced(&f, *need(&a.new_root, "new-root", a.map)?)?;
            Traced {
                input: f.to_line(),
                moved: None,
                output: out.to_line(),
                trace: Some(tr),
            }
        }
        Map::LambdaJ | Map::LambdaJInverse => {
            let f = a.monotone(n)?;
            let j = *need(&a.j, "j", a.map)?;
            let (out, tr) = if a.map == Map::LambdaJ {
                lambda_j_traced(&f, j)?
            } else {
                lambda_j_inverse_traced(&f, j)?
            };
            Traced {
                input: format!("{} under {}", f.to_line(), f.order),
                moved: None,
                output: format!("{} under {}", out.to_line(), out.order),
                trace: Some(tr),
            }
        }
        Map::LambdaOrder => {
            let f = a.monotone(n)?;
            let (out, tr) = lambda_order_traced(&f)?;
            Traced {
                input: format!("{} under {}", f.to_line(), f.order),
                moved: None,
                output: out.to_line(),
                trace: Some(tr),
            }
        }
        Map::Delta => {
            let f = a.monotone(n)?;
            if !f.order.is_natural() {
                return Err(CliError::Usage("delta takes a factorisation monotone under the natural order".into()));
            }
            let d = a.conjugator(&f.target, n)?;
            let (out, tr) = delta_traced(&f, &d)?;
            Traced {
                input: f.to_line(),
                moved: Some(conjugated(&f.factors, &d)),
                output: out.to_line(),
                trace: Some(tr),
            }
        }
        Map::Theta => {
            let f = a.monotone_double(n)?;
            let d = a.conjugator(&f.target, n)?;
            let (out, tr) = theta_traced(&f, &d)?;
            Traced {
                input: f.to_line(),
                moved: Some(conjugated(&f.factors, &d)),
                output: out.to_line(),
                trace: Some(tr),
            }
        }
        Map::Witness => {
            let f = a.star(n)?;
            let to = a.permutation(need(&a.to, "to", a.map)?, n)?;
            let out = centrality_witness(&f, &to)?;
            Traced {
                input: f.to_line(),
                moved: None,
                output: out.to_line(),
                trace: None,
            }
        }
    };

    let t = Traced {
        input: nonempty(t.input),
        moved: t.moved.map(nonempty),
        output: nonempty(t.output),
        trace: t.trace,
    };
    let mut report = Report::new("trace", config_of(a));
    report.columns = vec!["pos", "move", "before", "after"];
    report.text.push_str(&format!("input: {}\n", t.input));
    if let Some(m) = &t.moved {
        report.text.push_str(&format!("conjugated: {m}\n"));
    }
    let steps = t.trace.as_ref().map_or(&[][..], |tr| tr.steps.as_slice());
    for s in steps {
        report.text.push_str(&format!("{s}\n"));
        report.rows.push(vec![
            s.pos.to_string(),
            s.kind.to_string(),
            format!("{}{}", s.before.0, s.before.1),
            format!("{}{}", s.after.0, s.after.1),
        ]);
    }
    report.text.push_str(&format!("output: {}\n", t.output));
    let steps_json: Vec<_> = steps
        .iter()
        .map(|s| {
            json!({
                "pos": s.pos,
                "move": s.kind.to_string(),
                "before": format!("{}{}", s.before.0, s.before.1),
                "after": format!("{}{}", s.after.0, s.after.1),
            })
        })
        .collect();
    report.results.push(json!({
        "map": map_name(a.map),
        "input": t.input,
        "conjugated": t.moved,
        "output": t.output,
        "steps": steps_json,
    }));
    Ok(report)
}
