use serde::Serialize;

use super::{MonotoneDoubleFactorisation, MonotoneFactorisation, StarFactorisation};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Star,
    Monotone,
    MonotoneDouble,
    DoubleHurwitz,
}

/// The structured form of a listed factorisation. For the monotone double
/// family the full cycle is the first entry of `factors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorisationRecord {
    pub family: Family,
    pub n: usize,
    pub root: Option<usize>,
    pub genus: u32,
    pub target: Permutation,
    pub factors: Vec<String>,
}

impl FactorisationRecord {
    /// The line-oriented form: factors in cycle notation separated by spaces.
    pub fn to_line(&self) -> String {
        self.factors.join(" ")
    }
}

impl From<&StarFactorisation> for FactorisationRecord {
    fn from(f: &StarFactorisation) -> Self {
        FactorisationRecord {
            family: Family::Star,
            n: f.n,
            root: Some(f.root),
            genus: f.genus,
            target: f.target,
            factors: f.legs.iter().map(|a| format!("({a} {})", f.root)).collect(),
        }
    }
}

impl From<&MonotoneFactorisation> for FactorisationRecord {
    fn from(f: &MonotoneFactorisation) -> Self {
        FactorisationRecord {
            family: Family::Monotone,
            n: f.n,
            root: None,
            genus: f.genus,
            target: f.target,
            factors: f.factors.iter().map(|t| f.order.display_transposition(*t)).collect(),
        }
    }
}

impl From<&MonotoneDoubleFactorisation> for FactorisationRecord {
    fn from(f: &MonotoneDoubleFactorisation) -> Self {
        let mut factors = vec![f.sigma.to_string()];
        factors.extend(f.factors.iter().map(ToString::to_string));
        FactorisationRecord {
            family: Family::MonotoneDouble,
            n: f.n,
            root: None,
            genus: f.genus,
            target: f.target,
            factors,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_record_round_trips_through_json() {
        let w = Permutation::parse("(1 2)(3)", Some(3)).unwrap();
        let f = StarFactorisation::new(w, 3, vec![1, 2, 1]).unwrap();
        let rec = FactorisationRecord::from(&f);
        assert_eq!(rec.to_line(), "(1 3) (2 3) (1 3)");
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["family"], "star");
        assert_eq!(json["target"], "(1 2)(3)");
        assert_eq!(json["factors"][1], "(2 3)");
    }
}
