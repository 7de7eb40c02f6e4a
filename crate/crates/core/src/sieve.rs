//! Segmented smallest-prime-factor sieve.
//!
//! Built once, then queried read-only; range verification over prime
//! windows is the hot path, so factoring a sieved value is a chain of
//! table lookups.

const SEGMENT: usize = 1 << 16;

/// Smallest-prime-factor table for 2..=limit. Entry 0 means the value
/// is prime (its own smallest factor).
pub struct SpfSieve {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn new(limit: u64) -> Self {
        assert!(limit >= 2 && limit <= u32::MAX as u64);
        let n = limit as usize;
        // base primes up to sqrt(limit), simple sieve
        let root = (limit as f64).sqrt() as usize + 1;
        let mut base_composite = vec![false; root + 1];
        let mut base_primes = Vec::new();
        for p in 2..=root {
            if !base_composite[p] {
                base_primes.push(p);
                let mut q = p * p;
                while q <= root {
                    base_composite[q] = true;
                    q += p;
                }
            }
        }

        let mut spf = vec![0u32; n + 1];
        // process segments; marking primes in ascending order means the
        // first mark on a composite is its smallest prime factor
        let mut lo = 2usize;
        while lo <= n {
            let hi = (lo + SEGMENT - 1).min(n);
            for &p in &base_primes {
                if p * p > hi {
                    break;
                }
                let start = ((lo + p - 1) / p).max(p) * p;
                let mut q = start;
                while q <= hi {
                    if spf[q] == 0 {
                        spf[q] = p as u32;
                    }
                    q += p;
                }
            }
            lo = hi + 1;
        }
        SpfSieve { limit, spf }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of x, 2 <= x <= limit.
    pub fn spf(&self, x: u64) -> u64 {
        assert!(x >= 2 && x <= self.limit);
        match self.spf[x as usize] {
            0 => x,
            p => p as u64,
        }
    }

    pub fn is_prime(&self, x: u64) -> bool {
        x >= 2 && x <= self.limit && self.spf[x as usize] == 0
    }

    /// Distinct prime factors of x in increasing order.
    pub fn distinct_prime_factors(&self, x: u64) -> Vec<u64> {
        assert!(x >= 2 && x <= self.limit);
        let mut out = Vec::with_capacity(4);
        let mut x = x;
        while x > 1 {
            let p = self.spf(x);
            out.push(p);
            while x % p == 0 {
                x /= p;
            }
        }
        out
    }

    pub fn largest_prime_factor(&self, x: u64) -> u64 {
        *self.distinct_prime_factors(x).last().unwrap()
    }
}
