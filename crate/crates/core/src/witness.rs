//! Non-integrality certificates for S(n,r).
//!
//! A certificate names a prime p and a negative bound B with the claim
//! v_p(S(n,r)) <= B, so non-integrality is machine-checkable without
//! re-deriving the case analysis that produced it. Construction is one
//! of several constructive routes (keyed by r and by n relative to r),
//! with exact computation plus denominator factoring as a fallback for
//! the region no constructive argument covers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{s_direct, s_lemma};
use crate::error::{Error, Result};
use crate::nt;
use crate::rational::{Rational, Valuation};
use crate::windows::bertrand_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    #[serde(rename = "R1_GCD")]
    R1Gcd,
    #[serde(rename = "R_ODD_INDEX")]
    ROddIndex,
    #[serde(rename = "R3_TWO_ADIC")]
    R3TwoAdic,
    #[serde(rename = "R5_TWO_ADIC_MOD4")]
    R5TwoAdicMod4,
    #[serde(rename = "R5_TWO_ADIC_MOD8")]
    R5TwoAdicMod8,
    #[serde(rename = "SMALL_N_SYLVESTER")]
    SmallNSylvester,
    #[serde(rename = "SMALL_N_BERTRAND")]
    SmallNBertrand,
    #[serde(rename = "N1_DENOM")]
    N1Denom,
    #[serde(rename = "FALLBACK_FACTORED")]
    FallbackFactored,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::R1Gcd => "R1_GCD",
            Route::ROddIndex => "R_ODD_INDEX",
            Route::R3TwoAdic => "R3_TWO_ADIC",
            Route::R5TwoAdicMod4 => "R5_TWO_ADIC_MOD4",
            Route::R5TwoAdicMod8 => "R5_TWO_ADIC_MOD8",
            Route::SmallNSylvester => "SMALL_N_SYLVESTER",
            Route::SmallNBertrand => "SMALL_N_BERTRAND",
            Route::N1Denom => "N1_DENOM",
            Route::FallbackFactored => "FALLBACK_FACTORED",
        }
    }
}

/// Claim: v_{witness_prime}(S(n,r)) <= claimed_bound <= -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: u64,
    pub r: u64,
    pub witness_prime: BigUint,
    pub claimed_bound: i64,
    pub route: Route,
    pub witness_index: Option<u64>,
    pub verified: bool,
}

/// Wire form: big integers as decimal strings so consumers without
/// arbitrary precision never truncate.
#[derive(Serialize, Deserialize)]
struct CertificateJson {
    n: String,
    r: String,
    p: String,
    bound: i64,
    route: Route,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    index: Option<u64>,
    verified: bool,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let wire = CertificateJson {
            n: self.n.to_string(),
            r: self.r.to_string(),
            p: self.witness_prime.to_string(),
            bound: self.claimed_bound,
            route: self.route,
            index: self.witness_index,
            verified: self.verified,
        };
        serde_json::to_string(&wire).expect("certificate serialization")
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        let wire: CertificateJson =
            serde_json::from_str(s).map_err(|_| Error::Precondition("malformed certificate JSON"))?;
        let parse = |t: &str, what: &'static str| -> Result<u64> {
            t.parse::<u64>().map_err(|_| Error::Precondition(what))
        };
        let p = wire
            .p
            .parse::<BigUint>()
            .map_err(|_| Error::Precondition("malformed witness prime"))?;
        Ok(Certificate {
            n: parse(&wire.n, "malformed n")?,
            r: parse(&wire.r, "malformed r")?,
            witness_prime: p,
            claimed_bound: wire.bound,
            route: wire.route,
            witness_index: wire.index,
            verified: wire.verified,
        })
    }
}

/// Verification verdict; failures are reported distinctly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyOutcome {
    Valid,
    /// The stored witness is not a prime number.
    WitnessNotPrime,
    /// The stored bound does not claim non-integrality (bound > -1).
    BoundNotNegative,
    /// v_p(S(n,r)) is larger than the claimed bound.
    ValuationClaimFails,
    /// Direct and closed-form evaluations disagree; arithmetic is broken.
    ValueMismatch,
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid)
    }

    pub fn message(&self) -> &'static str {
        match self {
            VerifyOutcome::Valid => "certificate valid",
            VerifyOutcome::WitnessNotPrime => "witness not prime",
            VerifyOutcome::BoundNotNegative => "claimed bound does not imply non-integrality",
            VerifyOutcome::ValuationClaimFails => "valuation claim fails",
            VerifyOutcome::ValueMismatch => "direct and closed-form values disagree",
        }
    }
}

/// Recompute S(n,r) by both independent routes and check the stored
/// claim against the recomputed value. Trusts no stored field.
pub fn verify_certificate(cert: &Certificate) -> VerifyOutcome {
    if cert.n < 1 || cert.r < 1 {
        return VerifyOutcome::ValuationClaimFails;
    }
    if !nt::is_prime(&cert.witness_prime) {
        return VerifyOutcome::WitnessNotPrime;
    }
    if cert.claimed_bound > -1 {
        return VerifyOutcome::BoundNotNegative;
    }
    let direct = match s_direct(cert.n, cert.r) {
        Ok(s) => s.value,
        Err(_) => return VerifyOutcome::ValuationClaimFails,
    };
    let lemma = match s_lemma(cert.n, cert.r) {
        Ok(s) => s.value,
        Err(_) => return VerifyOutcome::ValuationClaimFails,
    };
    if direct != lemma {
        return VerifyOutcome::ValueMismatch;
    }
    match direct.vp(&cert.witness_prime) {
        Ok(v) if v <= Valuation::Finite(cert.claimed_bound) => VerifyOutcome::Valid,
        _ => VerifyOutcome::ValuationClaimFails,
    }
}

/// (2^m - 1) mod m via modular exponentiation.
fn mersenne_mod(m: u64) -> u64 {
    debug_assert!(m >= 2);
    (nt::mod_pow_u64(2, m, m) + m - 1) % m
}

/// The "deficient part" of m with respect to 2^m - 1: m / gcd(m, 2^m - 1).
/// Strictly greater than 1 for every m >= 2 (the classic fact).
fn deficient_part(m: u64) -> Result<u64> {
    let g = m.gcd(&mersenne_mod(m));
    let d = m / g;
    if d == 1 {
        return Err(Error::Invariant(format!(
            "m = {m} divides 2^m - 1; arithmetic layer is broken"
        )));
    }
    Ok(d)
}

/// r = 1: S(n,1) = (2^{n+1}-1)/(n+1); the denominator keeps a prime
/// because n+1 never divides 2^{n+1}-1.
pub fn certify_r1(n: u64) -> Result<Certificate> {
    if n < 1 {
        return Err(Error::Precondition("certify_r1 requires n >= 1"));
    }
    let m = n + 1;
    let d = deficient_part(m)?;
    let p = nt::smallest_prime_factor(d);
    let bound = -((nt::int_valuation_u64(m, p) - nt::valuation_of_2pow_minus_1(m, p)) as i64);
    Ok(Certificate {
        n,
        r: 1,
        witness_prime: BigUint::from(p),
        claimed_bound: bound,
        route: Route::R1Gcd,
        witness_index: None,
        verified: false,
    })
}

/// Small primes that the witness element n+i must avoid, per r.
fn coprime_set(r: u64) -> Result<&'static [u64]> {
    match r {
        2 => Ok(&[2]),
        3 | 4 => Ok(&[2, 3]),
        5 | 6 => Ok(&[2, 3, 5]),
        _ => Err(Error::Precondition("odd-index route requires r in 2..=6")),
    }
}

/// r in 2..=6: pick the smallest odd window element n+i coprime to the
/// route's small-prime set; its deficient part carries a prime p > r,
/// which therefore divides no other window element.
pub fn certify_odd_index(n: u64, r: u64) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::Precondition("certify_odd_index requires n >= 2"));
    }
    let small = coprime_set(r)?;
    let i = (1..=r)
        .find(|i| {
            let m = n + i;
            m % 2 == 1 && small.iter().all(|&p| m % p != 0)
        })
        .ok_or(Error::Precondition(
            "no odd window element coprime to the route's prime set",
        ))?;
    let d = deficient_part(n + i)?;
    let p = nt::smallest_prime_factor(d);
    debug_assert!(p > r, "witness prime must exceed the window length");
    Ok(Certificate {
        n,
        r,
        witness_prime: BigUint::from(p),
        claimed_bound: -1,
        route: Route::ROddIndex,
        witness_index: Some(i),
        verified: false,
    })
}

/// r in {3, 5} with n+1 even: the 2-adic minimum among the closed-form
/// terms is unique, so 2 divides the reduced denominator.
pub fn certify_two_adic(n: u64, r: u64) -> Result<Certificate> {
    if n < 1 {
        return Err(Error::Precondition("certify_two_adic requires n >= 1"));
    }
    if (n + 1) % 2 != 0 {
        return Err(Error::Precondition("certify_two_adic requires n+1 even"));
    }
    let (route, bound) = match r {
        // one of n+1, n+3 is 0 mod 4: that term alone reaches v_2 <= -2
        3 => (Route::R3TwoAdic, -2),
        5 if (n + 1) % 4 == 2 => (Route::R5TwoAdicMod4, -1),
        // one of n+1, n+5 is 4 mod 8 and the other 0 mod 8
        5 => (Route::R5TwoAdicMod8, -3),
        _ => return Err(Error::Precondition("two-adic route requires r in {3, 5}")),
    };
    Ok(Certificate {
        n,
        r,
        witness_prime: BigUint::from(2u32),
        claimed_bound: bound,
        route,
        witness_index: None,
        verified: false,
    })
}

/// n <= r-1 (and all of n = 1): work with 1 + Σ r/(r+j)·C(n,j). A prime
/// p > n inside the window r+1..r+n divides no binomial coefficient and
/// not r, so it survives into the denominator.
pub fn certify_small_n(n: u64, r: u64) -> Result<Certificate> {
    if n < 1 || r < 1 {
        return Err(Error::Precondition("certify_small_n requires n, r >= 1"));
    }
    if n == 1 {
        // S(1,r) = (2r+1)/(r+1) with coprime parts
        let m = r + 1;
        let p = nt::smallest_prime_factor(m);
        let bound = -(nt::int_valuation_u64(m, p) as i64);
        return Ok(Certificate {
            n,
            r,
            witness_prime: BigUint::from(p),
            claimed_bound: bound,
            route: Route::N1Denom,
            witness_index: Some(1),
            verified: false,
        });
    }
    if r < n + 1 {
        return Err(Error::Precondition("certify_small_n requires n <= r - 1"));
    }
    if r == n + 1 {
        // Bertrand: a prime p in (n+1, 2n+1] = (r, r+n] is itself a
        // window element and divides nothing else in sight
        let p = bertrand_prime(n)?;
        return Ok(Certificate {
            n,
            r,
            witness_prime: BigUint::from(p),
            claimed_bound: -1,
            route: Route::SmallNBertrand,
            witness_index: Some(p - r),
            verified: false,
        });
    }
    // Sylvester on the window r+1..r+n: smallest element with a prime
    // factor exceeding n, then the smallest such prime
    for j in 1..=n {
        let m = r + j;
        if let Some(&(p, e)) = nt::factor_u64(m).iter().find(|(p, _)| *p > n) {
            return Ok(Certificate {
                n,
                r,
                witness_prime: BigUint::from(p),
                claimed_bound: -(e as i64),
                route: Route::SmallNSylvester,
                witness_index: Some(j),
                verified: false,
            });
        }
    }
    Err(Error::Invariant(format!(
        "THEOREM-VIOLATION: no prime > {n} in window {}..={}",
        r + 1,
        r + n
    )))
}

/// Factoring fallback for the open region (r >= 7, n >= r): compute
/// S(n,r) exactly and read a witness off the reduced denominator.
/// Returns None when the denominator is 1, i.e. a counterexample.
pub fn certify_fallback(n: u64, r: u64) -> Result<Option<Certificate>> {
    let s = crate::binomial::s_auto(n, r)?;
    let den = s.value.denom_magnitude();
    if den.is_one() {
        return Ok(None);
    }
    // every prime factor of the denominator is <= n + r
    let p = smallest_prime_factor_big(&den, n + r)?;
    let bound = -(nt::int_valuation(&den, &p) as i64);
    Ok(Some(Certificate {
        n,
        r,
        witness_prime: p,
        claimed_bound: bound,
        route: Route::FallbackFactored,
        witness_index: None,
        verified: false,
    }))
}

fn smallest_prime_factor_big(den: &BigUint, search_bound: u64) -> Result<BigUint> {
    if let Some(small) = den.to_u64() {
        return Ok(BigUint::from(nt::smallest_prime_factor(small)));
    }
    for p in 2..=search_bound {
        if nt::is_prime_u64(p) && (den % p).is_zero() {
            return Ok(BigUint::from(p));
        }
    }
    // should not happen for S(n,r) denominators; fall back to full factoring
    let factors = nt::factor(den)?;
    Ok(factors[0].0.clone())
}

/// Factors of the reduced denominator of S(n,r); the audit-mode oracle
/// for constructive routes.
pub fn fallback_denominator_factors(n: u64, r: u64) -> Result<Vec<(BigUint, u32)>> {
    let s = crate::binomial::s_auto(n, r)?;
    let den = s.value.denom_magnitude();
    if den.is_one() {
        return Ok(Vec::new());
    }
    nt::factor(&den)
}

/// Either a verified non-integrality certificate or the distinguished
/// counterexample signal: S(n,r) came out an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certified {
    Proof(Certificate),
    Counterexample { n: u64, r: u64, value: Rational },
}

/// Route dispatcher. Every certificate is self-verified before being
/// returned; `verified` is false only if verification failed (which the
/// soundness tests treat as a bug).
pub fn certify(n: u64, r: u64) -> Result<Certified> {
    if n < 1 || r < 1 {
        return Err(Error::Precondition("certify requires n >= 1 and r >= 1"));
    }
    let mut cert = if n == 1 || n <= r - 1 {
        certify_small_n(n, r)?
    } else if r == 1 {
        certify_r1(n)?
    } else if matches!(r, 2 | 4 | 6) {
        certify_odd_index(n, r)?
    } else if matches!(r, 3 | 5) {
        if (n + 1) % 2 == 1 {
            certify_odd_index(n, r)?
        } else {
            certify_two_adic(n, r)?
        }
    } else {
        match certify_fallback(n, r)? {
            Some(c) => c,
            None => {
                let value = crate::binomial::s_auto(n, r)?.value;
                return Ok(Certified::Counterexample { n, r, value });
            }
        }
    };
    cert.verified = verify_certificate(&cert).is_valid();
    Ok(Certified::Proof(cert))
}
