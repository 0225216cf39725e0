//! Exact counts of 3-core partitions, partition pairs and partition triples.
//!
//! Each count is available four ways, which the crate keeps independent of
//! one another so they can check each other:
//!
//! - [`series`]: expanding the eta quotient `(q^3;q^3)^(3k) / (q;q)^k`,
//! - [`lambert`]: expanding the folded Lambert-series representations,
//! - [`arith`]: divisor-sum and factorization formulas,
//! - [`partitions`]: enumerating partitions and testing hook lengths.
//!
//! [`identities`] sweeps the known arithmetic relations and congruences for
//! these counts and reports any counterexample.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub mod arith;
pub mod counts;
pub mod error;
pub mod identities;
pub mod lambert;
pub mod partitions;
pub mod series;

pub use counts::{Evaluator, Method};
pub use error::{Error, Result};
pub use identities::IdentityReport;
pub use series::TruncatedSeries;

/// Which count: single 3-cores (`a3`), pairs (`A3`) or triples (`B3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoreKind {
    #[serde(rename = "a3")]
    Single,
    #[serde(rename = "A3")]
    Pair,
    #[serde(rename = "B3")]
    Triple,
}

impl CoreKind {
    pub const ALL: [CoreKind; 3] = [CoreKind::Single, CoreKind::Pair, CoreKind::Triple];

    /// Number of partitions in the tuple.
    pub fn tuple_size(self) -> u32 {
        match self {
            CoreKind::Single => 1,
            CoreKind::Pair => 2,
            CoreKind::Triple => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CoreKind::Single => "a3",
            CoreKind::Pair => "A3",
            CoreKind::Triple => "B3",
        }
    }
}

impl fmt::Display for CoreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CoreKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a3" => Ok(CoreKind::Single),
            "A3" => Ok(CoreKind::Pair),
            "B3" => Ok(CoreKind::Triple),
            _ => Err(Error::InvalidArgument(format!(
                "unknown kind {s:?} (expected a3, A3 or B3)"
            ))),
        }
    }
}
