//! Semigroup membership, ranking lattices and candidate strata.

mod membership;
mod parameter;
mod ranking;
mod strata;

pub use membership::{quotient_contains, semigroup_contains, QuotientMembership};
pub use parameter::{parse_rational, ParseParameterError, Parameter};
pub use ranking::{RankingContext, RankingPair};
pub use strata::{candidate_strata, Stratum, StratumOrigin};
