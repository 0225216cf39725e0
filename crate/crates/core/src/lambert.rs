//! Lambert-series expansions of the 3-core generating functions.
//!
//! The bilateral sums over `n in Z` are folded onto `m >= 0` with the
//! substitution `m -> -m - 1`, and each geometric kernel `1/(1 - q^j)` is
//! expanded as a sum over multiples of `j`. None of this touches the
//! eta-quotient code in [`crate::series`], so the two make independent oracles.

use crate::error::{Error, Result};
use crate::series::{div, mul, Coeff, TruncatedSeries};
use crate::CoreKind;

/// One of the folded bilateral sums, evaluated to a fixed truncation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FoldedBilateralSum {
    pub kind: CoreKind,
    pub order: usize,
}

impl FoldedBilateralSum {
    pub fn new(kind: CoreKind, order: usize) -> Self {
        Self { kind, order }
    }

    pub fn evaluate(&self) -> Result<TruncatedSeries> {
        match self.kind {
            CoreKind::Single => lambert_a3(self.order),
            CoreKind::Pair => lambert_pairs(self.order),
            CoreKind::Triple => lambert_triples(self.order),
        }
    }
}

fn add_at(coeffs: &mut [Coeff], idx: usize, delta: Coeff) -> Result<()> {
    coeffs[idx] = coeffs[idx]
        .checked_add(delta)
        .ok_or(Error::Overflow("lambert coefficient"))?;
    Ok(())
}

/// Visits every `(m, k) >= 0` with `(3m + r) (3k + s) <= bound`, passing the
/// product along with `m`.
fn for_each_product(
    r: usize,
    s: usize,
    bound: usize,
    mut visit: impl FnMut(usize, usize) -> Result<()>,
) -> Result<()> {
    debug_assert!(r >= 1 && s >= 1);
    let mut m = 0;
    while (3 * m + r) * s <= bound {
        let a = 3 * m + r;
        let mut b = s;
        while a * b <= bound {
            visit(m, a * b)?;
            b += 3;
        }
        m += 1;
    }
    Ok(())
}

/// `sum_n a3(n) q^n` from
/// `sum_{m,k >= 0} q^((3m+1)(3k+1)) - q^((3m+2)(3k+2))`, which lives on
/// exponents `3n + 1`.
pub fn lambert_a3(order: usize) -> Result<TruncatedSeries> {
    let mut c = TruncatedSeries::zero(order)?.into_coeffs();
    let bound = 3 * (order - 1) + 1;
    for_each_product(1, 1, bound, |_, e| add_at(&mut c, (e - 1) / 3, 1))?;
    for_each_product(2, 2, bound, |_, e| add_at(&mut c, (e - 1) / 3, -1))?;
    TruncatedSeries::from_coeffs(c)
}

/// `sum_n A3(n) q^n` from
/// `sum_{m,k >= 0} m q^((3m+1)(3k+2)) + (m+1) q^((3m+2)(3k+1))`, which lives
/// on exponents `3n + 2`.
pub fn lambert_pairs(order: usize) -> Result<TruncatedSeries> {
    let mut c = TruncatedSeries::zero(order)?.into_coeffs();
    let bound = 3 * (order - 1) + 2;
    for_each_product(1, 2, bound, |m, e| add_at(&mut c, (e - 2) / 3, m as Coeff))?;
    for_each_product(2, 1, bound, |m, e| {
        add_at(&mut c, (e - 2) / 3, m as Coeff + 1)
    })?;
    TruncatedSeries::from_coeffs(c)
}

/// `sum_n B3(n) q^n` from
/// `sum_{m >= 0} sum_{k >= 1} k^2 (q^((3m+1)k) - q^((3m+2)k))`, which lives on
/// exponents `n + 1`.
pub fn lambert_triples(order: usize) -> Result<TruncatedSeries> {
    let mut c = TruncatedSeries::zero(order)?.into_coeffs();
    for (start, sign) in [(1usize, 1 as Coeff), (2, -1)] {
        for j in (start..=order).step_by(3) {
            for k in 1..=order / j {
                let sq = (k as Coeff) * (k as Coeff);
                add_at(&mut c, j * k - 1, sign * sq)?;
            }
        }
    }
    TruncatedSeries::from_coeffs(c)
}

/// Truncation of the cross term
/// `sum_{m,k >= 0} q^((3m+2)(3k+1)) - q^((3m+1)(3k+2))` to `order`;
/// swapping `m` and `k` maps one half onto the other, so it is zero.
pub fn cross_term(order: usize) -> Result<TruncatedSeries> {
    let mut c = TruncatedSeries::zero(order)?.into_coeffs();
    let bound = order - 1;
    for_each_product(2, 1, bound, |_, e| add_at(&mut c, e, 1))?;
    for_each_product(1, 2, bound, |_, e| add_at(&mut c, e, -1))?;
    TruncatedSeries::from_coeffs(c)
}

/// Checks `x (1 + x) / (1 - x)^3 = sum_k k^2 x^k` through exponent `order - 1`,
/// using series division.
pub fn square_kernel_check(order: usize) -> Result<bool> {
    if order < 2 {
        return Err(Error::InvalidArgument(format!(
            "square kernel check needs order >= 2, got {order}"
        )));
    }
    let numerator = TruncatedSeries::from_prefix(order, &[0, 1, 1])?;
    let cube = TruncatedSeries::from_prefix(order, &[1, -3, 3, -1])?;
    let kernel = div(&numerator, &cube)?;
    // sanity: multiplying back reproduces the numerator
    if mul(&kernel, &cube)? != numerator {
        return Ok(false);
    }
    Ok(kernel
        .coeffs()
        .iter()
        .enumerate()
        .all(|(k, &c)| c == (k as Coeff) * (k as Coeff)))
}
