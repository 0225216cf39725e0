//! Named identity families and their default sweep ranges.

use threecore::identities::{self, IdentityReport, XiaParams};
use threecore::{Error, Evaluator, Result};

pub const FAMILIES: &[&str] = &[
    "a3-even-power",
    "lin",
    "BN",
    "relation-general",
    "relation-coprime",
    "relation-corollaries",
    "B3-classical",
    "B3-relation-general",
    "B3-relation-coprime",
    "B3-corollaries",
    "xia-congruence",
    "xia-conjecture",
    "structure",
    "cross-validate",
];

/// Optional overrides; `None` means the family's default.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub p: Option<u64>,
    pub k_max: Option<u32>,
    pub n_max: Option<u64>,
    pub j: Option<u32>,
    pub alpha_max: Option<u32>,
}

const RELATION_PRIMES: &[u64] = &[2, 5, 7, 11, 13];

/// Runs `check` for the given prime, or for each default prime merged into
/// one report.
fn per_prime(
    p: Option<u64>,
    defaults: &[u64],
    mut check: impl FnMut(u64) -> Result<IdentityReport>,
) -> Result<IdentityReport> {
    if let Some(p) = p {
        return check(p);
    }
    let mut reports = defaults.iter().map(|&p| check(p));
    let mut merged = reports.next().expect("at least one default prime")?;
    let mut params = vec![merged.params.clone()];
    for r in reports {
        let r = r?;
        params.push(r.params.clone());
        merged.absorb(r);
    }
    merged.params = params.join("; ");
    Ok(merged)
}

pub fn run(family: &str, params: &FamilyParams, eval: &Evaluator) -> Result<IdentityReport> {
    let sieve = &eval.sieve;
    let k = |default| params.k_max.unwrap_or(default);
    let n = |default| params.n_max.unwrap_or(default);
    match family {
        "a3-even-power" => per_prime(params.p, &[2, 5, 11, 17], |p| {
            identities::check_a3_even_power(p, k(4), n(200), sieve)
        }),
        "lin" => identities::check_lin(n(500), sieve),
        "BN" => identities::check_baruah_nath(k(5), n(200), sieve),
        "relation-general" | "relation-coprime" => {
            let coprime = family == "relation-coprime";
            per_prime(params.p, RELATION_PRIMES, |p| {
                identities::check_pair_relations(p, k(4), n(200), coprime, sieve)
            })
        }
        "relation-corollaries" => identities::check_pair_corollaries(k(4), n(200), sieve),
        "B3-classical" => identities::check_triple_classical(k(5), n(200), sieve),
        "B3-relation-general" | "B3-relation-coprime" => {
            let coprime = family == "B3-relation-coprime";
            per_prime(params.p, &[2, 3, 5, 7, 11, 13], |p| {
                identities::check_triple_relations(p, k(4), n(200), coprime, sieve)
            })
        }
        "B3-corollaries" => identities::check_triple_corollaries(k(4), n(200), sieve),
        "xia-congruence" => identities::check_xia_congruences(n(1000), sieve),
        "xia-conjecture" => {
            let alpha = params.alpha_max.unwrap_or(1);
            let js: Vec<u32> = params.j.map_or_else(|| vec![1, 2], |j| vec![j]);
            per_prime(params.p, &[3, 5, 7], |p| {
                let mut merged: Option<IdentityReport> = None;
                for &j in &js {
                    let r = identities::check_xia_conjecture(XiaParams::new(p, j, sieve)?, alpha, n(50), sieve)?;
                    match merged.as_mut() {
                        None => merged = Some(r),
                        Some(m) => {
                            m.params = format!("{}; {}", m.params, r.params);
                            m.absorb(r);
                        }
                    }
                }
                Ok(merged.expect("at least one j"))
            })
        }
        "structure" => identities::check_structure(300, n(100_000), 500, sieve),
        "cross-validate" => {
            let len = usize::try_from(n(eval.order_budget as u64))
                .map_err(|_| Error::Overflow("n"))?;
            identities::cross_validate(len, eval)
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown family {other:?}; known families: {}",
            FAMILIES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use threecore::arith::SpfSieve;

    fn eval() -> Evaluator {
        Evaluator::new(SpfSieve::new(100_000).unwrap(), 40, 2000)
    }

    #[test]
    fn every_family_passes_on_small_ranges() {
        let e = eval();
        let params = FamilyParams { k_max: Some(2), n_max: Some(30), ..Default::default() };
        for family in FAMILIES {
            let r = run(family, &params, &e).unwrap();
            assert!(r.passed(), "{family}: {:?}", r.failures);
            assert!(r.checked > 0, "{family}");
        }
    }

    #[test]
    fn unknown_family_and_bad_prime() {
        let e = eval();
        assert!(matches!(
            run("nope", &FamilyParams::default(), &e),
            Err(Error::InvalidArgument(_))
        ));
        let p3 = FamilyParams { p: Some(3), ..Default::default() };
        assert!(matches!(
            run("relation-general", &p3, &e),
            Err(Error::UnsupportedPrime { p: 3, .. })
        ));
        let p2 = FamilyParams { p: Some(2), ..Default::default() };
        assert!(matches!(
            run("xia-conjecture", &p2, &e),
            Err(Error::UnsupportedPrime { p: 2, .. })
        ));
    }
}
