//! Brute-force enumeration of partitions and their hook lengths.
//!
//! This is the ground truth the formulas are checked against: it uses only
//! the definition of a `t`-core (no hook length divisible by `t`).

use crate::error::{Error, Result};

pub const DEFAULT_BRUTE_CAP: u64 = 60;

/// A partition stored as its nonincreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "not a partition: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count() as u32)
            .collect();
        Self { parts }
    }

    /// Hook lengths `arm + leg + 1`, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let cols = self.conjugate();
        let mut hooks = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = cols.parts[j as usize] - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    pub fn is_t_core(&self, t: u32) -> bool {
        self.hook_lengths().iter().all(|h| h % t != 0)
    }
}

/// Partitions of `n` in reverse lexicographic order, starting from `[n]`.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    next: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut parts = current.clone();
        let mut freed = 0u32;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > cap {
                parts.push(cap);
                freed -= cap;
            }
            if freed > 0 {
                parts.push(freed);
            }
            self.next = Some(parts);
        }
        Some(Partition { parts: current })
    }
}

fn check_cap(n: u64, cap: u64) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Every partition of `n` exactly once; `n = 0` yields the empty partition.
pub fn enumerate_partitions(n: u64, cap: u64) -> Result<PartitionIter> {
    check_cap(n, cap)?;
    let n = u32::try_from(n).map_err(|_| Error::CapExceeded { n, cap: u32::MAX as u64 })?;
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Ok(PartitionIter { next: Some(first) })
}

fn check_t(t: u32) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidArgument(format!("t must be >= 2, got {t}")));
    }
    Ok(())
}

/// Number of `t`-core partitions of `n`, by enumeration.
pub fn brute_core_count(n: u64, t: u32, cap: u64) -> Result<u64> {
    check_t(t)?;
    Ok(enumerate_partitions(n, cap)?
        .filter(|p| p.is_t_core(t))
        .count() as u64)
}

/// `t`-core counts for every `0 <= n <= n_max`.
pub fn brute_core_counts(n_max: u64, t: u32, cap: u64) -> Result<Vec<u64>> {
    check_cap(n_max, cap)?;
    (0..=n_max).map(|n| brute_core_count(n, t, cap)).collect()
}

/// Ordered `k`-tuples of `t`-core partitions with total weight `n`, for
/// every total `0..=n_max`, as the `k`-fold convolution of the single counts.
pub fn brute_tuple_counts(n_max: u64, t: u32, k: u32, cap: u64) -> Result<Vec<u128>> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidArgument(format!("k must be 1, 2 or 3, got {k}")));
    }
    let single: Vec<u128> = brute_core_counts(n_max, t, cap)?
        .into_iter()
        .map(u128::from)
        .collect();
    let mut acc = single.clone();
    for _ in 1..k {
        acc = (0..single.len())
            .map(|n| (0..=n).map(|i| acc[i] * single[n - i]).sum())
            .collect();
    }
    Ok(acc)
}

pub fn brute_tuple_count(n: u64, t: u32, k: u32, cap: u64) -> Result<u128> {
    Ok(brute_tuple_counts(n, t, k, cap)?[n as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sorted(mut v: Vec<u32>) -> Vec<u32> {
        v.sort_unstable();
        v
    }

    #[test]
    fn enumeration_counts() {
        let all: Vec<_> = enumerate_partitions(0, 60).unwrap().collect();
        assert_eq!(all, vec![Partition::empty()]);
        let four: Vec<_> = enumerate_partitions(4, 60).unwrap().collect();
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(6, 60).unwrap().count(), 11);
        assert_eq!(enumerate_partitions(20, 60).unwrap().count(), 627);
        for part in enumerate_partitions(12, 60).unwrap() {
            assert_eq!(part.weight(), 12);
            assert!(Partition::new(part.parts().to_vec()).is_ok());
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_partitions(61, 60).err(),
            Some(Error::CapExceeded { n: 61, cap: 60 })
        );
        assert!(brute_core_count(41, 3, 40).is_err());
        assert!(brute_tuple_count(41, 3, 2, 40).is_err());
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn hooks() {
        assert_eq!(p(&[1]).hook_lengths(), vec![1]);
        assert_eq!(sorted(p(&[2, 1]).hook_lengths()), vec![1, 1, 3]);
        assert_eq!(sorted(p(&[3, 2, 1]).hook_lengths()), vec![1, 1, 1, 3, 3, 5]);
        assert_eq!(sorted(p(&[3, 1]).hook_lengths()), vec![1, 1, 2, 4]);
        assert!(Partition::empty().hook_lengths().is_empty());
    }

    #[test]
    fn core_tests() {
        assert!(Partition::empty().is_t_core(3));
        assert!(!p(&[2, 1]).is_t_core(3));
        assert!(p(&[3, 1]).is_t_core(3));
        assert!(p(&[2, 1]).is_t_core(2));
    }

    #[test]
    fn brute_counts() {
        assert_eq!(brute_core_count(2, 3, 60).unwrap(), 2);
        assert_eq!(brute_core_count(3, 3, 60).unwrap(), 0);
        assert_eq!(brute_core_count(3, 2, 60).unwrap(), 1);
        assert!(brute_core_count(3, 1, 60).is_err());
        assert_eq!(brute_core_counts(5, 3, 60).unwrap(), vec![1, 1, 2, 0, 2, 1]);
        assert_eq!(brute_tuple_count(1, 3, 3, 60).unwrap(), 3);
        assert_eq!(brute_tuple_count(2, 3, 3, 60).unwrap(), 9);
        assert_eq!(brute_tuple_count(5, 3, 2, 60).unwrap(), 6);
        assert!(brute_tuple_count(5, 3, 4, 60).is_err());
        assert!(brute_tuple_count(5, 3, 0, 60).is_err());
    }

    #[test]
    fn conjugation_preserves_hooks() {
        for n in 0..=20 {
            for part in enumerate_partitions(n, 60).unwrap() {
                let conj = part.conjugate();
                assert_eq!(conj.conjugate(), part);
                assert_eq!(sorted(conj.hook_lengths()), sorted(part.hook_lengths()));
                for t in 2..6 {
                    assert_eq!(conj.is_t_core(t), part.is_t_core(t));
                }
            }
        }
    }
}
