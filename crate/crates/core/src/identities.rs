//! Sweeps of the arithmetic relations and congruences satisfied by `a3`,
//! `A3` and `B3`.
//!
//! Every check evaluates both sides independently through the closed forms in
//! [`crate::arith`] and records a failure whenever they differ. A passing
//! report has no failures; a meaningful one has `checked > 0`.

use serde::Serialize;

use crate::arith::{self, SpfSieve};
use crate::counts::{Evaluator, Method};
use crate::error::{Error, Result};
use crate::lambert;
use crate::series;
use crate::CoreKind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub family: String,
    pub params: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn new(family: impl Into<String>, params: impl Into<String>) -> Self {
        Self {
            family: family.into(),
            params: params.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts one instance and records it as a failure when `lhs != rhs`.
    pub fn check<T: PartialEq + ToString>(
        &mut self,
        inputs: impl FnOnce() -> String,
        lhs: T,
        rhs: T,
    ) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Folds another report's counts and failures into this one.
    pub fn absorb(&mut self, other: IdentityReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

fn overflow() -> Error {
    Error::Overflow("identity argument")
}

fn pow_u64(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or_else(overflow)
}

/// `scale * n + offset`
fn affine(scale: u64, n: u64, offset: u64) -> Result<u64> {
    scale
        .checked_mul(n)
        .and_then(|x| x.checked_add(offset))
        .ok_or_else(overflow)
}

fn wide(x: u64) -> i128 {
    x as i128
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("identity value"))
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("identity value"))
}

fn exact_div(a: i128, b: i128) -> Result<i128> {
    if b == 0 || a % b != 0 {
        return Err(Error::Internal(format!("{a} is not divisible by {b}")));
    }
    Ok(a / b)
}

fn sign(k: u32) -> i128 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn a3(n: u64, sieve: &SpfSieve) -> Result<i128> {
    arith::a3_closed(n, sieve).map(wide)
}

fn pairs(n: u64, sieve: &SpfSieve) -> Result<i128> {
    let v = arith::pair_count_closed(n, sieve)?;
    i128::try_from(v).map_err(|_| Error::Overflow("A3 value"))
}

fn triples(n: u64, sieve: &SpfSieve) -> Result<i128> {
    let v = arith::triple_count_closed(n, sieve)?;
    i128::try_from(v).map_err(|_| Error::Overflow("B3 value"))
}

fn require_prime(p: u64, sieve: &SpfSieve) -> Result<()> {
    if !sieve.is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    Ok(())
}

/// `a3(p^k n + (p^k - 1)/3) = a3(n)` for primes `p = 2 (mod 3)` and even `k`
/// (including the trivial `k = 0`).
pub fn check_a3_even_power(p: u64, k_max: u32, n_max: u64, sieve: &SpfSieve) -> Result<IdentityReport> {
    require_prime(p, sieve)?;
    if p % 3 != 2 {
        return Err(Error::UnsupportedPrime { p, reason: "needs p = 2 (mod 3)" });
    }
    let mut report = IdentityReport::new("a3-even-power", format!("p={p} k<={k_max} n<={n_max}"));
    for k in (0..=k_max).step_by(2) {
        let pk = pow_u64(p, k)?;
        for n in 0..=n_max {
            let lhs = a3(affine(pk, n, (pk - 1) / 3)?, sieve)?;
            report.check(|| format!("k={k} n={n}"), lhs, a3(n, sieve)?);
        }
    }
    Ok(report)
}

/// `A3(8n + 6) = 7 A3(2n + 1)`.
pub fn check_lin(n_max: u64, sieve: &SpfSieve) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("lin", format!("n<={n_max}"));
    for n in 0..=n_max {
        let lhs = pairs(affine(8, n, 6)?, sieve)?;
        let rhs = mul(7, pairs(affine(2, n, 1)?, sieve)?)?;
        report.check(|| format!("n={n}"), lhs, rhs);
    }
    Ok(report)
}

/// The three power-of-two families for `A3`:
///
/// - `BN-1`: `A3(4^(k+1) n + 2(4^k - 1)/3) = (4^(k+1) - 1)/3 A3(4n)`
/// - `BN-2`: `A3(4^(k+1) n + 2(4^(k+1) - 1)/3) = (4^(k+1) - 1)/3 A3(4n+2) - (4^(k+1) - 4)/3 A3(n)`
/// - `BN-3`: `A3(2 4^k n + (5 4^k - 2)/3) = (2 4^k - 1) A3(2n+1)`
pub fn check_baruah_nath(k_max: u32, n_max: u64, sieve: &SpfSieve) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("BN", format!("k<={k_max} n<={n_max}"));
    for k in 0..=k_max {
        let q = pow_u64(4, k)?;
        let q1 = pow_u64(4, k + 1)?;
        let third = wide((q1 - 1) / 3);
        for n in 0..=n_max {
            let lhs = pairs(affine(q1, n, 2 * (q - 1) / 3)?, sieve)?;
            let rhs = mul(third, pairs(4 * n, sieve)?)?;
            report.check(|| format!("BN-1 k={k} n={n}"), lhs, rhs);

            let lhs = pairs(affine(q1, n, 2 * (q1 - 1) / 3)?, sieve)?;
            let rhs = add(
                mul(third, pairs(affine(4, n, 2)?, sieve)?)?,
                -mul(wide((q1 - 4) / 3), pairs(n, sieve)?)?,
            )?;
            report.check(|| format!("BN-2 k={k} n={n}"), lhs, rhs);

            let lhs = pairs(affine(2 * q, n, (5 * q - 2) / 3)?, sieve)?;
            let rhs = mul(wide(2 * q - 1), pairs(affine(2, n, 1)?, sieve)?)?;
            report.check(|| format!("BN-3 k={k} n={n}"), lhs, rhs);
        }
    }
    Ok(report)
}

/// The relation theorems for `A3` at a prime `p != 3`.
///
/// With `step = p` for `p = 1 (mod 3)` and `step = p^2` for `p = 2 (mod 3)`,
/// and `P = step^k`, the general form is
/// `A3(P n + (2P-2)/3) = (P-1)/(step-1) A3(step n + (2 step-2)/3) - (P-step)/(step-1) A3(n)`.
/// The coprime form, for `p` not dividing `3n+2`, is
/// `A3(P n + (2P-2)/3) = sigma(P) A3(n)`.
pub fn check_pair_relations(
    p: u64,
    k_max: u32,
    n_max: u64,
    coprime: bool,
    sieve: &SpfSieve,
) -> Result<IdentityReport> {
    if p == 3 {
        return Err(Error::UnsupportedPrime { p, reason: "the relation needs p = 1 or 2 (mod 3)" });
    }
    require_prime(p, sieve)?;
    let family = if coprime { "relation-coprime" } else { "relation-general" };
    let mut report = IdentityReport::new(family, format!("p={p} k<={k_max} n<={n_max}"));
    let step = if p % 3 == 1 { p } else { p * p };
    for k in 0..=k_max {
        let big = pow_u64(step, k)?;
        let sigma_big = exact_div(mul(wide(big), wide(p))? - 1, wide(p) - 1)?;
        let c1 = exact_div(wide(big) - 1, wide(step) - 1)?;
        let c2 = exact_div(wide(big) - wide(step), wide(step) - 1)?;
        for n in 0..=n_max {
            if coprime && (3 * n + 2) % p == 0 {
                continue;
            }
            let lhs = pairs(affine(big, n, (2 * big - 2) / 3)?, sieve)?;
            let rhs = if coprime {
                mul(sigma_big, pairs(n, sieve)?)?
            } else {
                let mid = pairs(affine(step, n, (2 * step - 2) / 3)?, sieve)?;
                add(mul(c1, mid)?, -mul(c2, pairs(n, sieve)?)?)?
            };
            report.check(|| format!("k={k} n={n}"), lhs, rhs);
        }
    }
    Ok(report)
}

/// The worked `p = 2, 5, 7` instances of the `A3` relations, including the
/// residue-class forms for `5n + r` and `7n + r`.
pub fn check_pair_corollaries(k_max: u32, n_max: u64, sieve: &SpfSieve) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("relation-corollaries", format!("k<={k_max} n<={n_max}"));
    for k in 0..=k_max {
        let four = pow_u64(4, k)?;
        let twenty_five = pow_u64(25, k)?;
        let seven = pow_u64(7, k)?;
        for n in 0..=n_max {
            let lhs = pairs(affine(four, n, (2 * four - 2) / 3)?, sieve)?;
            let rhs = add(
                mul(wide((four - 1) / 3), pairs(affine(4, n, 2)?, sieve)?)?,
                -mul((wide(four) - 4) / 3, pairs(n, sieve)?)?,
            )?;
            report.check(|| format!("p=2 k={k} n={n}"), lhs, rhs);

            let lhs = pairs(affine(twenty_five, n, (2 * twenty_five - 2) / 3)?, sieve)?;
            let rhs = add(
                mul(wide((twenty_five - 1) / 24), pairs(affine(25, n, 16)?, sieve)?)?,
                -mul((wide(twenty_five) - 25) / 24, pairs(n, sieve)?)?,
            )?;
            report.check(|| format!("p=5 k={k} n={n}"), lhs, rhs);

            let lhs = pairs(affine(seven, n, (2 * seven - 2) / 3)?, sieve)?;
            let rhs = add(
                mul(wide((seven - 1) / 6), pairs(affine(7, n, 4)?, sieve)?)?,
                -mul((wide(seven) - 7) / 6, pairs(n, sieve)?)?,
            )?;
            report.check(|| format!("p=7 k={k} n={n}"), lhs, rhs);

            for r in [0u64, 2, 3, 4] {
                let base = affine(5, n, r)?;
                let lhs = pairs(affine(twenty_five, base, (2 * twenty_five - 2) / 3)?, sieve)?;
                let rhs = mul(wide((5 * twenty_five - 1) / 4), pairs(base, sieve)?)?;
                report.check(|| format!("p=5 r={r} k={k} n={n}"), lhs, rhs);
            }
            for r in [0u64, 1, 2, 3, 5, 6] {
                let base = affine(7, n, r)?;
                let lhs = pairs(affine(seven, base, (2 * seven - 2) / 3)?, sieve)?;
                let rhs = mul(wide((7 * seven - 1) / 6), pairs(base, sieve)?)?;
                report.check(|| format!("p=7 r={r} k={k} n={n}"), lhs, rhs);
            }
        }
    }
    Ok(report)
}

/// The three classical `B3` families:
///
/// - `B3-3`: `B3(3^k n + 3^k - 1) = 9^k B3(n)`
/// - `B3-2even`: `B3(2^(k+1) n + 2^k - 1) = (4^(k+1) + (-1)^k)/5 B3(2n)`
/// - `B3-2odd`: `B3(2^(k+1) n + 2^(k+1) - 1) = (4^(k+1) + (-1)^k)/5 B3(2n+1) + (4^(k+1) - 4(-1)^k)/5 B3(n)`
pub fn check_triple_classical(k_max: u32, n_max: u64, sieve: &SpfSieve) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("B3-classical", format!("k<={k_max} n<={n_max}"));
    for k in 0..=k_max {
        let t = pow_u64(3, k)?;
        let nine = wide(pow_u64(9, k)?);
        let two = pow_u64(2, k)?;
        let four1 = wide(pow_u64(4, k + 1)?);
        let c1 = exact_div(four1 + sign(k), 5)?;
        let c2 = exact_div(four1 - 4 * sign(k), 5)?;
        for n in 0..=n_max {
            let lhs = triples(affine(t, n, t - 1)?, sieve)?;
            report.check(|| format!("B3-3 k={k} n={n}"), lhs, mul(nine, triples(n, sieve)?)?);

            let lhs = triples(affine(2 * two, n, two - 1)?, sieve)?;
            let rhs = mul(c1, triples(2 * n, sieve)?)?;
            report.check(|| format!("B3-2even k={k} n={n}"), lhs, rhs);

            let lhs = triples(affine(2 * two, n, 2 * two - 1)?, sieve)?;
            let rhs = add(
                mul(c1, triples(affine(2, n, 1)?, sieve)?)?,
                mul(c2, triples(n, sieve)?)?,
            )?;
            report.check(|| format!("B3-2odd k={k} n={n}"), lhs, rhs);
        }
    }
    Ok(report)
}

/// The relation theorems for `B3` at a prime `p`.
///
/// General form (`p != 3`), with `P = p^k`:
/// `B3(P n + P - 1) = c1 B3(p n + p - 1) + c2 B3(n)` where
/// `c1 = (P^2 - 1)/(p^2 - 1)`, `c2 = -(P^2 - p^2)/(p^2 - 1)` for `p = 1 (mod 3)` and
/// `c1 = (P^2 - (-1)^k)/(p^2 + 1)`, `c2 = (P^2 + (-1)^k p^2)/(p^2 + 1)` for `p = 2 (mod 3)`.
/// For `p = 3` both forms use the unconditional `B3(3^k n + 3^k - 1) = 9^k B3(n)`.
///
/// Coprime form, for `p` not dividing `n + 1`: `B3(P n + P - 1) = f(p^k) B3(n)`.
pub fn check_triple_relations(
    p: u64,
    k_max: u32,
    n_max: u64,
    coprime: bool,
    sieve: &SpfSieve,
) -> Result<IdentityReport> {
    require_prime(p, sieve)?;
    let family = if coprime { "B3-relation-coprime" } else { "B3-relation-general" };
    let mut report = IdentityReport::new(family, format!("p={p} k<={k_max} n<={n_max}"));
    let pp = wide(p) * wide(p);
    for k in 0..=k_max {
        let big = pow_u64(p, k)?;
        let big2 = mul(wide(big), wide(big))?;
        let (c1, c2) = match p % 3 {
            1 => (exact_div(big2 - 1, pp - 1)?, -exact_div(big2 - pp, pp - 1)?),
            2 => (
                exact_div(big2 - sign(k), pp + 1)?,
                exact_div(add(big2, sign(k) * pp)?, pp + 1)?,
            ),
            _ => (0, 0),
        };
        let local = arith::f_prime_power(p, k)?;
        for n in 0..=n_max {
            if coprime && p != 3 && (n + 1) % p == 0 {
                continue;
            }
            let lhs = triples(affine(big, n, big - 1)?, sieve)?;
            let rhs = if p == 3 || coprime {
                mul(local, triples(n, sieve)?)?
            } else {
                add(
                    mul(c1, triples(affine(p, n, p - 1)?, sieve)?)?,
                    mul(c2, triples(n, sieve)?)?,
                )?
            };
            report.check(|| format!("k={k} n={n}"), lhs, rhs);
        }
    }
    Ok(report)
}

/// The worked `p = 5, 7` instances of the `B3` relations, including the
/// residue-class forms for `5n + r` and `7n + r`.
pub fn check_triple_corollaries(k_max: u32, n_max: u64, sieve: &SpfSieve) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("B3-corollaries", format!("k<={k_max} n<={n_max}"));
    for k in 0..=k_max {
        let five = pow_u64(5, k)?;
        let seven = pow_u64(7, k)?;
        let five2 = wide(five) * wide(five);
        let seven2 = wide(seven) * wide(seven);
        for n in 0..=n_max {
            let lhs = triples(affine(five, n, five - 1)?, sieve)?;
            let rhs = add(
                mul(exact_div(five2 - sign(k), 26)?, triples(affine(5, n, 4)?, sieve)?)?,
                mul(exact_div(five2 + 25 * sign(k), 26)?, triples(n, sieve)?)?,
            )?;
            report.check(|| format!("p=5 k={k} n={n}"), lhs, rhs);

            let lhs = triples(affine(seven, n, seven - 1)?, sieve)?;
            let rhs = add(
                mul(exact_div(seven2 - 1, 48)?, triples(affine(7, n, 6)?, sieve)?)?,
                -mul(exact_div(seven2 - 49, 48)?, triples(n, sieve)?)?,
            )?;
            report.check(|| format!("p=7 k={k} n={n}"), lhs, rhs);

            for r in 0..4u64 {
                let lhs = triples(affine(5 * five, n, five * (r + 1) - 1)?, sieve)?;
                let factor = exact_div(25 * five2 + sign(k), 26)?;
                let rhs = mul(factor, triples(affine(5, n, r)?, sieve)?)?;
                report.check(|| format!("p=5 r={r} k={k} n={n}"), lhs, rhs);
            }
            for r in 0..6u64 {
                let lhs = triples(affine(7 * seven, n, seven * (r + 1) - 1)?, sieve)?;
                let factor = exact_div(49 * seven2 - 1, 48)?;
                let rhs = mul(factor, triples(affine(7, n, r)?, sieve)?)?;
                report.check(|| format!("p=7 r={r} k={k} n={n}"), lhs, rhs);
            }
        }
    }
    Ok(report)
}

/// `A3(8n + 4) = 0 (mod 4)` and `A3(16n + 4) = 0 (mod 8)`.
pub fn check_xia_congruences(n_max: u64, sieve: &SpfSieve) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("xia-congruence", format!("n<={n_max}"));
    for n in 0..=n_max {
        let v = pairs(affine(8, n, 4)?, sieve)?;
        report.check(|| format!("A3(8n+4) mod 4, n={n}"), v % 4, 0);
        let v = pairs(affine(16, n, 4)?, sieve)?;
        report.check(|| format!("A3(16n+4) mod 8, n={n}"), v % 8, 0);
    }
    Ok(report)
}

/// Parameters for the power-of-four congruence family modulo `p^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct XiaParams {
    pub p: u64,
    pub j: u32,
    /// `p^j (p - 1) / 2`
    pub k0: u64,
}

impl XiaParams {
    pub fn new(p: u64, j: u32, sieve: &SpfSieve) -> Result<Self> {
        if p == 2 {
            return Err(Error::UnsupportedPrime {
                p,
                reason: "the modulus must be odd for 2 to be invertible",
            });
        }
        require_prime(p, sieve)?;
        if j == 0 {
            return Err(Error::InvalidArgument("j must be positive".into()));
        }
        let pj = pow_u64(p, j)?;
        let k0 = pj.checked_mul((p - 1) / 2).ok_or_else(overflow)?;
        Ok(Self { p, j, k0 })
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.j)
    }

    /// The exponent `2 k0 (alpha + 1)` of two in the closed form.
    pub fn exponent(&self, alpha: u32) -> Result<u64> {
        self.k0
            .checked_mul(2 * (alpha as u64 + 1))
            .ok_or_else(overflow)
    }
}

fn pow_mod(mut base: u128, mut exp: u64, modulus: u128) -> u128 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// `(2^e - 1) / 3 mod p^j` for even `e`, through `2^e mod 3 p^j`.
fn scaled_power_residue(e: u64, pj: u64) -> u128 {
    let m = 3 * pj as u128;
    let t = pow_mod(2, e, m);
    // 2^e = 1 (mod 3) for even e, so t - 1 is divisible by 3 and stays in range
    (t + m - 1) % m / 3
}

/// The power-of-four family
/// `A3(4^(k0 (alpha+1)) n + (2^(2 k0 (alpha+1) - 1) - 2)/3) = 0 (mod p^j)`.
///
/// The modular path uses
/// `A3(...) = (2^(2 k0 (alpha+1)) - 1)/3 * sigma(6n + 1)` with the power taken
/// modulo `3 p^j`. Whenever the argument fits in 64 bits the instance is also
/// evaluated directly, and the two paths must agree.
pub fn check_xia_conjecture(
    params: XiaParams,
    alpha_max: u32,
    n_max: u64,
    sieve: &SpfSieve,
) -> Result<IdentityReport> {
    let XiaParams { p, j, k0 } = params;
    let pj = params.modulus();
    let mut report = IdentityReport::new(
        "xia-conjecture",
        format!("p={p} j={j} k0={k0} alpha<={alpha_max} n<={n_max}"),
    );
    for alpha in 0..=alpha_max {
        let e = params.exponent(alpha)?;
        let power_part = scaled_power_residue(e, pj);
        for n in 0..=n_max {
            let sig = arith::sigma(affine(6, n, 1)?, sieve)?;
            let modular = power_part * (sig % pj as u128) % pj as u128;
            report.check(|| format!("modular alpha={alpha} n={n}"), modular, 0);

            if let Some(direct) = direct_instance(e, n, sig, sieve)? {
                report.check(|| format!("closed form alpha={alpha} n={n}"), direct.value, direct.closed);
                report.check(
                    || format!("direct residue alpha={alpha} n={n}"),
                    direct.value % pj as u128,
                    modular,
                );
            }
        }
    }
    Ok(report)
}

struct DirectInstance {
    value: u128,
    closed: u128,
}

/// Evaluates `A3` at the family's argument when it and `3 arg + 2` fit in
/// 64 bits.
fn direct_instance(e: u64, n: u64, sig: u128, sieve: &SpfSieve) -> Result<Option<DirectInstance>> {
    let Ok(e32) = u32::try_from(e) else { return Ok(None) };
    let (Some(scale), Some(half)) = (2u64.checked_pow(e32), 2u64.checked_pow(e32 - 1)) else {
        return Ok(None);
    };
    let arg = match scale.checked_mul(n).and_then(|x| x.checked_add((half - 2) / 3)) {
        Some(a) if a.checked_mul(3).and_then(|x| x.checked_add(2)).is_some() => a,
        _ => return Ok(None),
    };
    let value = arith::pair_count_closed(arg, sieve)?;
    let closed = ((scale as u128 - 1) / 3)
        .checked_mul(sig)
        .ok_or(Error::Overflow("closed form"))?;
    Ok(Some(DirectInstance { value, closed }))
}

/// Agreement of every available method for `a3`, `A3` and `B3` on `0 <= n < n_max`.
/// The brute-force lane covers `n <= brute_cap`.
pub fn cross_validate(n_max: usize, evaluator: &Evaluator) -> Result<IdentityReport> {
    let brute_len = n_max.min(evaluator.brute_cap as usize + 1);
    let mut report = IdentityReport::new(
        "cross-validate",
        format!("n<{n_max} brute n<{brute_len}"),
    );
    for kind in CoreKind::ALL {
        let reference = evaluator.values(kind, Method::Formula, n_max)?;
        for (method, len) in [
            (Method::Series, n_max),
            (Method::Lambert, n_max),
            (Method::Brute, brute_len),
        ] {
            let values = evaluator.values(kind, method, len)?;
            for (n, (v, r)) in values.iter().zip(&reference).enumerate() {
                report.check(|| format!("{kind} n={n} {method} vs formula"), *v, *r);
            }
        }
    }
    Ok(report)
}

/// Generalized pentagonal exponents `g(3g-1)/2`, `g(3g+1)/2` with sign `(-1)^g`, below `order`.
fn pentagonal_terms(order: usize) -> Vec<(usize, i128)> {
    let mut terms = vec![(0, 1)];
    for g in 1.. {
        let lo = g * (3 * g - 1) / 2;
        if lo >= order {
            break;
        }
        let s = if g % 2 == 0 { 1 } else { -1 };
        terms.push((lo, s));
        let hi = g * (3 * g + 1) / 2;
        if hi < order {
            terms.push((hi, s));
        }
    }
    terms
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Structural facts behind the formulas: multiplicativity of `f` and
/// `sigma`, exactness of `sigma(3n+2)/3`, agreement of the two `a3` closed
/// forms, the split of `(q;q)_inf` by residue mod 3, the pentagonal
/// expansion, the `k^2` kernel and the vanishing cross term.
pub fn check_structure(pair_max: u64, divisibility_max: u64, order: usize, sieve: &SpfSieve) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(
        "structure",
        format!("pairs<={pair_max} sigma n<={divisibility_max} order={order}"),
    );
    for m in 1..=pair_max {
        for n in 1..=pair_max {
            if gcd(m, n) != 1 {
                continue;
            }
            let lhs = arith::f_weighted(m * n, sieve)?;
            let rhs = mul(arith::f_weighted(m, sieve)?, arith::f_weighted(n, sieve)?)?;
            report.check(|| format!("f multiplicative m={m} n={n}"), lhs, rhs);
            let lhs = arith::sigma(m * n, sieve)?;
            let rhs = arith::sigma(m, sieve)? * arith::sigma(n, sieve)?;
            report.check(|| format!("sigma multiplicative m={m} n={n}"), lhs, rhs);
        }
    }
    for n in 0..=divisibility_max {
        let s = arith::sigma(affine(3, n, 2)?, sieve)?;
        report.check(|| format!("3 | sigma(3n+2) n={n}"), s % 3, 0);
    }
    for n in 0..=divisibility_max.min(10_000) {
        report.check(
            || format!("a3 closed forms n={n}"),
            arith::a3_closed(n, sieve)?,
            arith::a3_product(n, sieve)?,
        );
    }

    let euler = series::euler_product(1, 1, order)?;
    let mut pentagonal = vec![0i128; order];
    for (exp, s) in pentagonal_terms(order) {
        pentagonal[exp] = s;
    }
    report.check(|| "pentagonal expansion".into(), euler.coeffs() == pentagonal.as_slice(), true);
    report.check(|| "q split".into(), series::verify_q_split(order)?, true);
    report.check(|| "square kernel".into(), lambert::square_kernel_check(order.max(2))?, true);
    let cross = lambert::cross_term(order)?;
    report.check(|| "cross term vanishes".into(), cross.coeffs().iter().all(|&c| c == 0), true);
    Ok(report)
}
