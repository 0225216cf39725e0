//! Sieve, factorization and the divisor-sum evaluators for `a3`, `A3` and `B3`.

use crate::error::{Error, Result};

pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;

/// Smallest-prime-factor table for `2..=limit`.
#[derive(Debug, Clone)]
pub struct SpfSieve {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn new(limit: u64) -> Result<Self> {
        if limit > u32::MAX as u64 {
            return Err(Error::InvalidArgument(format!(
                "sieve limit {limit} exceeds {}",
                u32::MAX
            )));
        }
        let size = limit as usize + 1;
        let mut spf = vec![0u32; size];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..size {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > si || m >= size {
                    break;
                }
                spf[m] = p;
            }
        }
        Ok(Self { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `m` for `2 <= m <= limit`.
    pub fn spf(&self, m: u64) -> Option<u64> {
        if m < 2 || m > self.limit {
            return None;
        }
        Some(self.spf[m as usize] as u64)
    }

    /// Canonical factorization; falls back to trial division above the limit.
    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(Error::InvalidArgument("cannot factorize 0".into()));
        }
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut push = |p: u64| match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        };
        let mut rest = n;
        let mut d = 2u64;
        while rest > self.limit {
            if d.checked_mul(d).is_none_or(|dd| dd > rest) {
                // rest is prime
                push(rest);
                rest = 1;
                break;
            }
            while rest % d == 0 {
                push(d);
                rest /= d;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        while rest > 1 {
            let p = self.spf[rest as usize] as u64;
            push(p);
            rest /= p;
        }
        Ok(Factorization { n, factors })
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2
            && self
                .factorize(n)
                .map(|f| f.factors == [(n, 1)])
                .unwrap_or(false)
    }
}

impl Default for SpfSieve {
    fn default() -> Self {
        Self::new(DEFAULT_SIEVE_LIMIT).expect("default sieve limit fits in u32")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// All positive divisors, unsorted.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs
    }
}

fn overflow(what: &'static str) -> Error {
    Error::Overflow(what)
}

/// `1 + p + ... + p^e`
fn geometric_sum(p: u128, e: u32) -> Result<u128> {
    let mut sum = 1u128;
    let mut pk = 1u128;
    for _ in 0..e {
        pk = pk.checked_mul(p).ok_or(overflow("sigma"))?;
        sum = sum.checked_add(pk).ok_or(overflow("sigma"))?;
    }
    Ok(sum)
}

/// Sum of the positive divisors of `n`.
pub fn sigma(n: u64, sieve: &SpfSieve) -> Result<u128> {
    sieve
        .factorize(n)?
        .factors()
        .iter()
        .try_fold(1u128, |acc, &(p, e)| {
            acc.checked_mul(geometric_sum(p as u128, e)?)
                .ok_or(overflow("sigma"))
        })
}

/// `d_{r,3}(n)`: number of divisors of `n` congruent to `r` mod 3.
pub fn divisor_count_mod3(n: u64, r: u8, sieve: &SpfSieve) -> Result<u64> {
    if r != 1 && r != 2 {
        return Err(Error::InvalidArgument(format!(
            "residue must be 1 or 2, got {r}"
        )));
    }
    Ok(sieve
        .factorize(n)?
        .divisors()
        .into_iter()
        .filter(|d| d % 3 == r as u64)
        .count() as u64)
}

fn shifted(n: u64, scale: u64, offset: u64) -> Result<u64> {
    n.checked_mul(scale)
        .and_then(|x| x.checked_add(offset))
        .ok_or(overflow("argument"))
}

/// Number of 3-core partitions of `n`, as `d_{1,3}(3n+1) - d_{2,3}(3n+1)`.
pub fn a3_closed(n: u64, sieve: &SpfSieve) -> Result<u64> {
    let m = shifted(n, 3, 1)?;
    let ones = divisor_count_mod3(m, 1, sieve)?;
    let twos = divisor_count_mod3(m, 2, sieve)?;
    ones.checked_sub(twos)
        .ok_or_else(|| Error::Internal(format!("d_1,3({m}) < d_2,3({m})")))
}

/// Number of 3-core partitions of `n` from the factorization of `3n+1`:
/// the product of `alpha + 1` over primes `= 1 mod 3`, or zero when some
/// prime `= 2 mod 3` has odd exponent.
pub fn a3_product(n: u64, sieve: &SpfSieve) -> Result<u64> {
    let fac = sieve.factorize(shifted(n, 3, 1)?)?;
    let mut count = 1u64;
    for &(p, e) in fac.factors() {
        match p % 3 {
            1 => count = count.checked_mul(e as u64 + 1).ok_or(overflow("a3"))?,
            2 if e % 2 == 1 => return Ok(0),
            _ => {}
        }
    }
    Ok(count)
}

/// Number of partition pairs of `n` with 3-cores: `sigma(3n+2) / 3`.
pub fn pair_count_closed(n: u64, sieve: &SpfSieve) -> Result<u128> {
    let m = shifted(n, 3, 2)?;
    let s = sigma(m, sieve)?;
    if s % 3 != 0 {
        return Err(Error::Internal(format!("sigma({m}) = {s} is not divisible by 3")));
    }
    Ok(s / 3)
}

/// `f(n) = sum_{d | n, d = 1 (3)} (n/d)^2 - sum_{d | n, d = 2 (3)} (n/d)^2`,
/// by direct divisor enumeration.
pub fn f_weighted(n: u64, sieve: &SpfSieve) -> Result<i128> {
    sieve
        .factorize(n)?
        .divisors()
        .into_iter()
        .try_fold(0i128, |acc, d| {
            let co = (n / d) as i128;
            let sq = co.checked_mul(co).ok_or(overflow("f"))?;
            match d % 3 {
                1 => acc.checked_add(sq),
                2 => acc.checked_sub(sq),
                _ => Some(acc),
            }
            .ok_or(overflow("f"))
        })
}

/// `f(p^k)` for a prime `p`, in closed form:
/// `9^k` for `p = 3`, `(p^(2k+2) - 1) / (p^2 - 1)` for `p = 1 (3)` and
/// `(p^(2k+2) + (-1)^k) / (p^2 + 1)` for `p = 2 (3)`.
pub fn f_prime_power(p: u64, k: u32) -> Result<i128> {
    let p = p as i128;
    let p2 = p.checked_mul(p).ok_or(overflow("f"))?;
    let top = p2.checked_pow(k + 1).ok_or(overflow("f"))?;
    let value = match p % 3 {
        0 => 9i128.checked_pow(k).ok_or(overflow("f"))?,
        1 => (top - 1) / (p2 - 1),
        _ => {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (top + sign) / (p2 + 1)
        }
    };
    Ok(value)
}

/// Number of partition triples of `n` with 3-cores: `f(n+1)` evaluated
/// multiplicatively over the factorization of `n+1`.
pub fn triple_count_closed(n: u64, sieve: &SpfSieve) -> Result<u128> {
    let fac = sieve.factorize(shifted(n, 1, 1)?)?;
    let value = fac.factors().iter().try_fold(1i128, |acc, &(p, e)| {
        acc.checked_mul(f_prime_power(p, e)?).ok_or(overflow("f"))
    })?;
    u128::try_from(value).map_err(|_| Error::Internal(format!("f({}) = {value} < 0", n + 1)))
}
