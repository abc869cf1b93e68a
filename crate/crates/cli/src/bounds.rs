use std::fmt;

use starfact::verify::Suite;

/// Largest degree for which factorisations are listed one by one.
pub const LISTING_N: usize = 5;
pub const LISTING_G: u32 = 2;
/// Largest degree for the dynamic-programming counters and group-algebra
/// computations.
pub const DP_N: usize = 6;
/// Largest `|α|` for the double Hurwitz relation.
pub const RELATION_N: usize = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(starfact::Error),
    Bound {
        what: &'static str,
        value: usize,
        limit: usize,
        context: String,
    },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Bound {
                what,
                value,
                limit,
                context,
            } => write!(
                f,
                "refusing {context}: {what} = {value} exceeds the bound {what} <= {limit}; pass --unsafe-bounds to run anyway"
            ),
        }
    }
}

impl From<starfact::Error> for CliError {
    fn from(e: starfact::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Bound enforcement, switched off by `--unsafe-bounds`.
#[derive(Clone, Copy)]
pub struct Limits {
    pub enforce: bool,
}

impl Limits {
    pub fn check(&self, what: &'static str, value: usize, limit: usize, context: impl Into<String>) -> CliResult<()> {
        if self.enforce && value > limit {
            Err(CliError::Bound {
                what,
                value,
                limit,
                context: context.into(),
            })
        } else {
            Ok(())
        }
    }

    pub fn listing(&self, n: usize, genus: u32, context: &str) -> CliResult<()> {
        self.check("n", n, LISTING_N, context)?;
        self.check("g", genus as usize, LISTING_G as usize, context)
    }

    pub fn dp(&self, n: usize, context: &str) -> CliResult<()> {
        self.check("n", n, DP_N, context)
    }

    /// Whether listing is within bounds; used to decide if a listing
    /// cross-check is attempted without being asked for.
    pub fn listing_allowed(&self, n: usize, genus: u32) -> bool {
        !self.enforce || (n <= LISTING_N && genus <= LISTING_G)
    }

    pub fn suite(&self, suite: Suite, n: usize, genus: u32) -> CliResult<()> {
        let context = format!("suite {suite}");
        match suite {
            Suite::DoubleHurwitzRelation => self.check("n", n, RELATION_N, context),
            Suite::Bijections | Suite::ClosedForms => self.listing(n, genus, &context),
            _ => self.dp(n, &context),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refusals_name_the_bound() {
        let strict = Limits { enforce: true };
        let err = strict.suite(Suite::DoubleHurwitzRelation, 4, 0).unwrap_err();
        assert!(err.to_string().contains("n = 4 exceeds the bound n <= 3"));
        assert!(strict.suite(Suite::DoubleHurwitzRelation, 3, 1).is_ok());
        assert!(strict.listing(5, 3, "list").is_err());
        assert!(Limits { enforce: false }.listing(7, 9, "list").is_ok());
    }
}
