//! Truncated formal power series in `q` with exact `i128` coefficients.
//!
//! A series of order `N` stores the coefficients of `q^0 .. q^(N-1)`. Every
//! operation keeps the order of its inputs, and every coefficient update is
//! overflow-checked.

use crate::error::{Error, Result};

pub type Coeff = i128;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Coeff>,
}

fn checked_mul_add(acc: Coeff, x: Coeff, y: Coeff) -> Result<Coeff> {
    x.checked_mul(y)
        .and_then(|p| acc.checked_add(p))
        .ok_or(Error::Overflow("series coefficient"))
}

impl TruncatedSeries {
    /// Wraps a coefficient vector; its length becomes the truncation order.
    pub fn from_coeffs(coeffs: Vec<Coeff>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::from_coeffs(vec![0; order])
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::monomial(order, 0, 1)
    }

    /// `coeff * q^exp`, which is the zero series if `exp >= order`.
    pub fn monomial(order: usize, exp: usize, coeff: Coeff) -> Result<Self> {
        let mut s = Self::zero(order)?;
        if exp < order {
            s.coeffs[exp] = coeff;
        }
        Ok(s)
    }

    /// Builds a series from a short list of leading coefficients, padding with zeros.
    pub fn from_prefix(order: usize, prefix: &[Coeff]) -> Result<Self> {
        let mut s = Self::zero(order)?;
        for (c, &p) in s.coeffs.iter_mut().zip(prefix) {
            *c = p;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coeff> {
        self.coeffs
    }

    /// Coefficient of `q^exp`; `None` beyond the truncation order.
    pub fn coeff(&self, exp: usize) -> Option<Coeff> {
        self.coeffs.get(exp).copied()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Multiplies in place by the binomial `1 - q^exp`.
    pub fn mul_one_minus_q_pow(&mut self, exp: usize) -> Result<()> {
        if exp == 0 {
            self.coeffs.iter_mut().for_each(|c| *c = 0);
            return Ok(());
        }
        for i in (exp..self.order()).rev() {
            self.coeffs[i] = self.coeffs[i]
                .checked_sub(self.coeffs[i - exp])
                .ok_or(Error::Overflow("series coefficient"))?;
        }
        Ok(())
    }

    /// Raises the series to a nonnegative power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Result<Self> {
        let mut result = Self::one(self.order())?;
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = mul(&result, &base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = mul(&base, &base)?;
            }
        }
        Ok(result)
    }
}

/// Cauchy product truncated to the common order.
pub fn mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check_order(b)?;
    let n = a.order();
    let mut out = vec![0 as Coeff; n];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.coeffs[..n - i].iter().enumerate() {
            if y != 0 {
                out[i + j] = checked_mul_add(out[i + j], x, y)?;
            }
        }
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// The unique `c` with `b * c == a` to the truncation order.
///
/// `b` must have constant term `+1` or `-1`, so each coefficient of `c` is
/// solved for directly from the ones before it.
pub fn div(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check_order(b)?;
    let b0 = b.coeffs[0];
    if b0 != 1 && b0 != -1 {
        return Err(Error::NonUnitConstant(b0));
    }
    let n = a.order();
    // Only the nonzero tail of b takes part in the recurrence.
    let support: Vec<(usize, Coeff)> = b
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    let mut out = vec![0 as Coeff; n];
    for k in 0..n {
        let mut acc = a.coeffs[k];
        for &(i, bi) in &support {
            if i > k {
                break;
            }
            acc = checked_mul_add(acc, -bi, out[k - i])?;
        }
        // b0 is its own inverse.
        out[k] = acc * b0;
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// `(q^a; q^m)_inf = prod_{j >= 0} (1 - q^(a + j m))` truncated to `order`.
pub fn euler_product(a: usize, m: usize, order: usize) -> Result<TruncatedSeries> {
    if a == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "euler_product needs a >= 1 and m >= 1, got a = {a}, m = {m}"
        )));
    }
    let mut s = TruncatedSeries::one(order)?;
    for exp in (a..order).step_by(m) {
        s.mul_one_minus_q_pow(exp)?;
    }
    Ok(s)
}

/// Generating function `(q^t; q^t)_inf^(k t) / (q; q)_inf^k` of partition
/// `k`-tuples whose components are all `t`-cores.
pub fn core_tuple_series(t: usize, k: u32, order: usize) -> Result<TruncatedSeries> {
    if t < 2 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "core_tuple_series needs t >= 2 and k >= 1, got t = {t}, k = {k}"
        )));
    }
    let kt = u32::try_from(t)
        .ok()
        .and_then(|t| t.checked_mul(k))
        .ok_or(Error::Overflow("eta exponent"))?;
    let numerator = euler_product(t, t, order)?.pow(kt)?;
    let euler = euler_product(1, 1, order)?;
    (0..k).try_fold(numerator, |acc, _| div(&acc, &euler))
}

/// Checks `(q;q)_inf = (q;q^3)_inf (q^2;q^3)_inf (q^3;q^3)_inf` to the given order.
pub fn verify_q_split(order: usize) -> Result<bool> {
    let whole = euler_product(1, 1, order)?;
    let split = mul(
        &mul(&euler_product(1, 3, order)?, &euler_product(2, 3, order)?)?,
        &euler_product(3, 3, order)?,
    )?;
    Ok(whole == split)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[Coeff]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(c.to_vec()).unwrap()
    }

    #[test]
    fn mul_identity_and_telescoping() {
        let x = s(&[3, -1, 4, 1, -5]);
        assert_eq!(mul(&TruncatedSeries::one(5).unwrap(), &x).unwrap(), x);
        let geom = s(&[1, 1, 1, 1, 1]);
        let one_minus_q = s(&[1, -1, 0, 0, 0]);
        assert_eq!(mul(&one_minus_q, &geom).unwrap(), s(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn euler_square_coefficient() {
        // (1 - q - q^2 + ...)^2: the q^3 term is 2 * (-1)(-1).
        let e = euler_product(1, 1, 8).unwrap();
        let sq = mul(&e, &e).unwrap();
        assert_eq!(&sq.coeffs()[..6], &[1, -2, -1, 2, 1, 2]);
        assert_eq!(sq.coeff(3), Some(2));
    }

    #[test]
    fn order_mismatch_and_non_unit() {
        let a = s(&[1, 2]);
        let b = s(&[1, 2, 3]);
        assert_eq!(
            mul(&a, &b),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
        assert!(matches!(div(&a, &b), Err(Error::OrderMismatch { .. })));
        assert_eq!(div(&a, &s(&[2, 1])), Err(Error::NonUnitConstant(2)));
        assert_eq!(div(&a, &s(&[0, 1])), Err(Error::NonUnitConstant(0)));
        assert_eq!(TruncatedSeries::from_coeffs(vec![]), Err(Error::ZeroOrder));
    }

    #[test]
    fn div_by_negative_unit() {
        let a = s(&[2, 3, 5, 7]);
        let b = s(&[-1, 1, 0, 2]);
        let c = div(&a, &b).unwrap();
        assert_eq!(mul(&b, &c).unwrap(), a);
    }

    #[test]
    fn overflow_is_reported() {
        let big = s(&[1, Coeff::MAX / 2 + 1]);
        assert_eq!(
            mul(&big, &big),
            Err(Error::Overflow("series coefficient"))
        );
        let mut c = s(&[1, Coeff::MIN, 1]);
        assert!(c.mul_one_minus_q_pow(1).is_err());
    }

    #[test]
    fn euler_product_small_cases() {
        let e = euler_product(1, 1, 13).unwrap();
        assert_eq!(e.coeffs(), &[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        assert_eq!(euler_product(3, 3, 4).unwrap().coeffs(), &[1, 0, 0, -1]);
        assert_eq!(euler_product(5, 3, 5).unwrap(), TruncatedSeries::one(5).unwrap());
        assert!(euler_product(0, 3, 5).is_err());
        assert!(euler_product(1, 0, 5).is_err());
    }

    #[test]
    fn core_tuple_series_small_cases() {
        assert_eq!(core_tuple_series(3, 1, 5).unwrap().coeffs(), &[1, 1, 2, 0, 2]);
        assert_eq!(core_tuple_series(3, 2, 3).unwrap().coeffs(), &[1, 2, 5]);
        assert_eq!(core_tuple_series(3, 3, 4).unwrap().coeffs(), &[1, 3, 9, 13]);
        assert!(core_tuple_series(1, 1, 4).is_err());
        assert!(core_tuple_series(3, 0, 4).is_err());
    }

    #[test]
    fn q_split() {
        assert!(verify_q_split(1).unwrap());
        assert!(verify_q_split(50).unwrap());
        assert!(verify_q_split(500).unwrap());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let e = euler_product(1, 1, 30).unwrap();
        let cube = mul(&mul(&e, &e).unwrap(), &e).unwrap();
        assert_eq!(e.pow(3).unwrap(), cube);
        assert_eq!(e.pow(0).unwrap(), TruncatedSeries::one(30).unwrap());
    }
}
