//! The four factorisation families: validated record types, exhaustive
//! listers, and dynamic-programming counters. Listing and counting are
//! separate code paths and are tested against each other.

mod double;
mod hurwitz;
mod monotone;
mod record;
mod star;
mod strict;

pub use double::{count_md, enumerate_monotone_double, md_genus, md_length, MdCounts, MonotoneDoubleFactorisation};
pub use hurwitz::{b_value, count_double_hurwitz, double_hurwitz_length};
pub use monotone::{
    count_monotone, enumerate_monotone, enumerate_monotone_length, monotone_genus, monotone_length, MonotoneCounts,
    MonotoneFactorisation,
};
pub use record::{FactorisationRecord, Family};
pub use star::{
    count_star, count_star_unconstrained, enumerate_star, star_genus, star_length, StarCounts, StarFactorisation,
};
pub use strict::strictly_monotone_factorisation;
