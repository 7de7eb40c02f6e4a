//! Number-theoretic primitives: modular exponentiation, primality,
//! factorization and valuations over machine words and big integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Strong-probable-prime witnesses making Miller-Rabin deterministic
/// for all inputs below 2^64 (in fact below 3.3 * 10^24).
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// base^exp mod m for machine words; m >= 1.
pub fn mod_pow_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// base^exp mod m by square-and-multiply; m >= 2.
pub fn mod_pow(base: &BigUint, exp: &BigUint, m: &BigUint) -> Result<BigUint> {
    if *m < BigUint::from(2u32) {
        return Err(Error::ModulusTooSmall(m.clone()));
    }
    Ok(base.modpow(exp, m))
}

/// true iff n divides 2^n - 1. Never true for n >= 2 (the classic
/// fact); n = 1 trivially divides everything.
pub fn divides_2n_minus_1(n: u64) -> bool {
    assert!(n >= 1);
    if n == 1 {
        return true;
    }
    // gcd trick: test 2^n ≡ 1 (mod n) without materializing 2^n - 1
    mod_pow_u64(2, n, n) == 1
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = mod_pow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test: exact below 2^64; above that a fixed-base strong
/// probable-prime test (no pseudoprime is known for this base set, but
/// exactness is not proven there).
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(n) = n.to_u64() {
        return is_prime_u64(n);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_WITNESSES {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime factor by 6k±1 trial division with a rho fallback
/// for large composites.
pub fn smallest_prime_factor(n: u64) -> u64 {
    assert!(n >= 2);
    for &p in &[2u64, 3] {
        if n % p == 0 {
            return p;
        }
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n && d < 1 << 21 {
        if n % d == 0 {
            return d;
        }
        if n % (d + 2) == 0 {
            return d + 2;
        }
        d += 6;
    }
    if d.saturating_mul(d) > n || is_prime_u64(n) {
        return n;
    }
    factor_u64(n).into_iter().map(|(p, _)| p).min().unwrap()
}

fn pollard_rho_u64(n: u64) -> u64 {
    // Brent's variant; n must be odd, composite, not a prime power of 2
    debug_assert!(n > 1 && !is_prime_u64(n) && n % 2 == 1);
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
            count += 1;
            if count > 1 << 22 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
    }
}

/// Complete factorization of a u64 into (prime, exponent) pairs,
/// sorted by prime.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 2);
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut n = n;
    let push = |p: u64, factors: &mut Vec<(u64, u32)>, n: &mut u64| {
        let mut e = 0u32;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut factors, &mut n);
    push(3, &mut factors, &mut n);
    let mut d = 5u64;
    while d.saturating_mul(d) <= n && d < 1 << 16 {
        push(d, &mut factors, &mut n);
        push(d + 2, &mut factors, &mut n);
        d += 6;
    }
    let mut stack = Vec::new();
    if n > 1 {
        stack.push(n);
    }
    let mut large: Vec<u64> = Vec::new();
    while let Some(m) = stack.pop() {
        if is_prime_u64(m) {
            large.push(m);
        } else {
            let d = pollard_rho_u64(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    large.sort_unstable();
    for p in large {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    factors.sort_unstable();
    factors
}

fn pollard_rho_big(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        loop {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x >= y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without factor; retry with new c
            }
            let d = diff.gcd(n);
            if d > one {
                if &d < n {
                    return d;
                }
                break;
            }
        }
        c += 1u32;
    }
}

/// Complete prime factorization of m >= 2. Trial division by small
/// primes first, then Miller-Rabin plus Pollard rho on what remains.
pub fn factor(m: &BigUint) -> Result<Vec<(BigUint, u32)>> {
    if *m < BigUint::from(2u32) {
        return Err(Error::Precondition("factor requires m >= 2"));
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = m.clone();

    let strip = |p: u64, rest: &mut BigUint, factors: &mut Vec<(BigUint, u32)>| {
        let mut e = 0u32;
        while (&*rest % p).is_zero() {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((BigUint::from(p), e));
        }
    };

    strip(2, &mut rest, &mut factors);
    strip(3, &mut rest, &mut factors);
    let mut d = 5u64;
    while d < 1_000_000 && BigUint::from(d) * d <= rest {
        strip(d, &mut rest, &mut factors);
        strip(d + 2, &mut rest, &mut factors);
        d += 6;
    }

    let mut stack = Vec::new();
    if !rest.is_one() {
        stack.push(rest);
    }
    let mut large: Vec<BigUint> = Vec::new();
    while let Some(x) = stack.pop() {
        if let Some(small) = x.to_u64() {
            for (p, e) in factor_u64(small) {
                for _ in 0..e {
                    large.push(BigUint::from(p));
                }
            }
        } else if is_prime(&x) {
            large.push(x);
        } else {
            let d = pollard_rho_big(&x);
            stack.push(&x / &d);
            stack.push(d);
        }
    }
    large.sort();
    for p in large {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    factors.sort();
    Ok(factors)
}

/// v_p(n) for a positive integer n, by repeated division.
pub fn int_valuation(n: &BigUint, p: &BigUint) -> u64 {
    assert!(!n.is_zero());
    let mut v = 0u64;
    let mut n = n.clone();
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

pub fn int_valuation_u64(n: u64, p: u64) -> u64 {
    assert!(n != 0 && p >= 2);
    let mut v = 0;
    let mut n = n;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// v_p(2^m - 1): largest k with 2^m ≡ 1 (mod p^k), computed without
/// materializing 2^m - 1.
pub fn valuation_of_2pow_minus_1(m: u64, p: u64) -> u64 {
    assert!(p >= 2);
    if p == 2 {
        return 0; // 2^m - 1 is odd
    }
    let two = BigUint::from(2u32);
    let exp = BigUint::from(m);
    let mut k = 0u64;
    let mut pk = BigUint::from(p);
    loop {
        if two.modpow(&exp, &pk).is_one() {
            k += 1;
            pk *= p;
        } else {
            return k;
        }
    }
}

/// lcm(lo, lo+1, ..., hi).
pub fn lcm_range(lo: u64, hi: u64) -> BigUint {
    assert!(lo >= 1 && hi >= lo);
    let mut acc = BigUint::one();
    for k in lo..=hi {
        acc = acc.lcm(&BigUint::from(k));
    }
    acc
}
