//! Dispatch from (kind, method) to a table of counts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{self, SpfSieve};
use crate::error::{Error, Result};
use crate::lambert::FoldedBilateralSum;
use crate::partitions::{self, DEFAULT_BRUTE_CAP};
use crate::series::{self, TruncatedSeries};
use crate::CoreKind;

pub const DEFAULT_ORDER_BUDGET: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Series,
    Lambert,
    Brute,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Formula, Method::Series, Method::Lambert, Method::Brute];

    pub fn label(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Series => "series",
            Method::Lambert => "lambert",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.label() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown method {s:?} (expected formula, series, lambert or brute)"
                ))
            })
    }
}

/// One computed count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoreCountRecord {
    pub kind: CoreKind,
    pub n: u64,
    pub value: u128,
    pub method: Method,
}

/// Shared state for computing counts: the factorization sieve and the
/// limits on the series and brute-force methods.
#[derive(Debug, Clone)]
pub struct Evaluator {
    pub sieve: SpfSieve,
    pub brute_cap: u64,
    pub order_budget: usize,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self {
            sieve: SpfSieve::default(),
            brute_cap: DEFAULT_BRUTE_CAP,
            order_budget: DEFAULT_ORDER_BUDGET,
        }
    }
}

fn nonnegative(series: TruncatedSeries) -> Result<Vec<u128>> {
    series
        .into_coeffs()
        .into_iter()
        .map(|c| {
            u128::try_from(c)
                .map_err(|_| Error::Internal(format!("negative count coefficient {c}")))
        })
        .collect()
}

impl Evaluator {
    pub fn new(sieve: SpfSieve, brute_cap: u64, order_budget: usize) -> Self {
        Self { sieve, brute_cap, order_budget }
    }

    /// Closed-form value for a single `n`.
    pub fn formula(&self, kind: CoreKind, n: u64) -> Result<u128> {
        match kind {
            CoreKind::Single => arith::a3_closed(n, &self.sieve).map(u128::from),
            CoreKind::Pair => arith::pair_count_closed(n, &self.sieve),
            CoreKind::Triple => arith::triple_count_closed(n, &self.sieve),
        }
    }

    fn check_budget(&self, len: usize, method: Method) -> Result<()> {
        if len > self.order_budget {
            return Err(Error::InvalidArgument(format!(
                "{method} method needs n < order budget {}",
                self.order_budget
            )));
        }
        Ok(())
    }

    /// Values for `n = 0 .. len` by the chosen method.
    pub fn values(&self, kind: CoreKind, method: Method, len: usize) -> Result<Vec<u128>> {
        if len == 0 {
            return Ok(Vec::new());
        }
        match method {
            Method::Formula => (0..len as u64).map(|n| self.formula(kind, n)).collect(),
            Method::Series => {
                self.check_budget(len, method)?;
                nonnegative(series::core_tuple_series(3, kind.tuple_size(), len)?)
            }
            Method::Lambert => {
                self.check_budget(len, method)?;
                nonnegative(FoldedBilateralSum::new(kind, len).evaluate()?)
            }
            Method::Brute => partitions::brute_tuple_counts(
                len as u64 - 1,
                3,
                kind.tuple_size(),
                self.brute_cap,
            ),
        }
    }

    pub fn value(&self, kind: CoreKind, method: Method, n: u64) -> Result<u128> {
        if method == Method::Formula {
            return self.formula(kind, n);
        }
        let len = usize::try_from(n)
            .ok()
            .and_then(|n| n.checked_add(1))
            .ok_or(Error::Overflow("n"))?;
        if method == Method::Brute && n > self.brute_cap {
            return Err(Error::CapExceeded { n, cap: self.brute_cap });
        }
        Ok(self.values(kind, method, len)?[n as usize])
    }

    pub fn record(&self, kind: CoreKind, method: Method, n: u64) -> Result<CoreCountRecord> {
        Ok(CoreCountRecord { kind, n, value: self.value(kind, method, n)?, method })
    }

    pub fn table(&self, kind: CoreKind, method: Method, len: usize) -> Result<Vec<CoreCountRecord>> {
        Ok(self
            .values(kind, method, len)?
            .into_iter()
            .enumerate()
            .map(|(n, value)| CoreCountRecord { kind, n: n as u64, value, method })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval() -> Evaluator {
        Evaluator::new(SpfSieve::new(10_000).unwrap(), 40, 2000)
    }

    #[test]
    fn methods_agree_on_small_tables() {
        let e = eval();
        for kind in CoreKind::ALL {
            let reference = e.values(kind, Method::Formula, 20).unwrap();
            for method in Method::ALL {
                assert_eq!(e.values(kind, method, 20).unwrap(), reference, "{kind} {method}");
            }
        }
    }

    #[test]
    fn single_values() {
        let e = eval();
        assert_eq!(e.value(CoreKind::Pair, Method::Formula, 6).unwrap(), 14);
        assert_eq!(e.value(CoreKind::Triple, Method::Brute, 0).unwrap(), 1);
        assert_eq!(e.value(CoreKind::Single, Method::Series, 3).unwrap(), 0);
        assert_eq!(e.value(CoreKind::Triple, Method::Lambert, 4).unwrap(), 24);
    }

    #[test]
    fn limits() {
        let e = eval();
        assert!(e.values(CoreKind::Single, Method::Formula, 0).unwrap().is_empty());
        assert!(e.value(CoreKind::Single, Method::Brute, 41).is_err());
        assert!(e.value(CoreKind::Single, Method::Series, 2000).is_err());
        assert!(e.value(CoreKind::Single, Method::Lambert, 1999).is_ok());
    }

    #[test]
    fn parse_labels() {
        assert_eq!("lambert".parse::<Method>().unwrap(), Method::Lambert);
        assert!("Lambert".parse::<Method>().is_err());
        assert_eq!("A3".parse::<CoreKind>().unwrap(), CoreKind::Pair);
        assert!("a2".parse::<CoreKind>().is_err());
    }
}
