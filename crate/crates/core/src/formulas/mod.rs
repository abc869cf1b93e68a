//! Closed forms, recurrences and series formulas for star and monotone
//! double Hurwitz counts.

mod closed;
mod numbers;
mod recurrence;
mod relation;
mod series;

pub use closed::{feray_count, md_full_cycle, md_identity, md_identity_recurrence};
pub use numbers::{binomial, catalan, central_factorial, factorial, stirling2};
pub use recurrence::{recurrence_representative, recurrence_star, StarRecurrence};
pub use relation::{double_hurwitz_relation, RelationCheck, RELATION_DEFAULT_BOUND};
pub use series::RationalSeries;
