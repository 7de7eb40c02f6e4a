//! Prime-window checks: among r consecutive integers n+1..n+r (with
//! n >= r >= 2) one is divisible by a prime larger than r, and the
//! interval (n+1, 2n+1] always contains a prime. Both are verified
//! empirically over bounded ranges, with witness extraction.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nt;
use crate::sieve::SpfSieve;

/// A prime p > r dividing n+i and, because p exceeds the window
/// spread, no other element of n+1..n+r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowWitness {
    pub n: u64,
    pub r: u64,
    pub index: u64,
    pub prime: u64,
}

fn theorem_violation(what: &str, n: u64, r: u64) -> Error {
    Error::Invariant(format!("THEOREM-VIOLATION: {what} failed at n={n}, r={r}"))
}

/// Smallest index i, then smallest prime p > r with p | n+i.
pub fn sylvester_witness(n: u64, r: u64) -> Result<WindowWitness> {
    if !(n >= r && r >= 2) {
        return Err(Error::Precondition("sylvester_witness requires n >= r >= 2"));
    }
    for i in 1..=r {
        let primes = nt::factor_u64(n + i);
        if let Some(&(p, _)) = primes.iter().find(|(p, _)| *p > r) {
            return Ok(WindowWitness { n, r, index: i, prime: p });
        }
    }
    Err(theorem_violation("Sylvester window scan", n, r))
}

/// Smallest prime strictly greater than n+1 and at most 2n+1.
pub fn bertrand_prime(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::Precondition("bertrand_prime requires n >= 1"));
    }
    (n + 2..=2 * n + 1)
        .find(|&m| nt::is_prime_u64(m))
        .ok_or_else(|| theorem_violation("Bertrand interval scan", n, 0))
}

/// Range-verification report, rendered as JSON by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylvesterReport {
    pub checked: u64,
    pub violations: u64,
    pub max_prime: u64,
}

/// Check every window (n, r) with 2 <= n <= n_max, 2 <= r <= min(n, r_max).
pub fn verify_sylvester_range(n_max: u64, r_max: u64) -> Result<SylvesterReport> {
    if n_max < 2 || r_max < 2 {
        return Err(Error::Precondition("verify_sylvester_range requires n_max, r_max >= 2"));
    }
    let sieve = SpfSieve::new(n_max + r_max);
    let report = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let top = r_max.min(n);
            // distinct prime factors of n+1 .. n+top, sorted ascending
            let factors: Vec<Vec<u64>> = (1..=top)
                .map(|i| sieve.distinct_prime_factors(n + i))
                .collect();
            let mut local = SylvesterReport { checked: 0, violations: 0, max_prime: 0 };
            for r in 2..=top {
                local.checked += 1;
                let witness = (1..=r).find_map(|i| {
                    factors[(i - 1) as usize].iter().find(|&&p| p > r).copied()
                });
                match witness {
                    Some(p) => local.max_prime = local.max_prime.max(p),
                    None => local.violations += 1,
                }
            }
            local
        })
        .reduce(
            || SylvesterReport { checked: 0, violations: 0, max_prime: 0 },
            |a, b| SylvesterReport {
                checked: a.checked + b.checked,
                violations: a.violations + b.violations,
                max_prime: a.max_prime.max(b.max_prime),
            },
        );
    Ok(report)
}

/// Check bertrand_prime over 1..=n_max using one shared prime sieve.
pub fn verify_bertrand_range(n_max: u64) -> Result<u64> {
    let sieve = SpfSieve::new(2 * n_max + 1);
    let mut checked = 0u64;
    for n in 1..=n_max {
        let p = (n + 2..=2 * n + 1)
            .find(|&m| sieve.is_prime(m))
            .ok_or_else(|| theorem_violation("Bertrand interval scan", n, 0))?;
        debug_assert!(p > n + 1 && p <= 2 * n + 1);
        checked += 1;
    }
    Ok(checked)
}
