//! The binomial sum S(n,r) = Σ_{k=0}^{n} r/(k+r)·C(n,k), computed by
//! three independent routes, plus its complement Σ k/(k+r)·C(n,k) and
//! the integer coefficient table behind the closed form
//!
//!   S(n,r) = Σ_{j=0}^{r-1} c_j · (2^{n+j+1} - 1)/(n+j+1),
//!   c_j = (-1)^{r-1-j} · r · C(r-1, j).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nt::lcm_range;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Direct,
    Lemma,
    SmallNForm,
}

/// S(n,r) together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumValue {
    pub n: u64,
    pub r: u64,
    pub value: Rational,
    pub method: Method,
}

/// Coefficients c_0..c_{r-1} of the closed form for a given r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    pub r: u64,
    pub coeffs: Vec<BigInt>,
}

pub fn coefficient_table(r: u64) -> CoefficientTable {
    assert!(r >= 1);
    let mut coeffs = Vec::with_capacity(r as usize);
    let mut binom = BigUint::one(); // C(r-1, j), incrementally
    for j in 0..r {
        if j > 0 {
            binom = binom * (r - j) / j; // C(r-1,j) = C(r-1,j-1)*(r-j)/j
        }
        let mag = BigInt::from(&binom * r);
        let c = if (r - 1 - j) % 2 == 0 { mag } else { -mag };
        coeffs.push(c);
    }
    CoefficientTable { r, coeffs }
}

/// lcm(n+1, ..., n+r); every term denominator of the closed form
/// divides it, so the reduced denominator of S(n,r) does too.
pub fn denominator_bound(n: u64, r: u64) -> BigUint {
    assert!(r >= 1);
    lcm_range(n + 1, n + r)
}

/// Direct summation of the definition. Binomials are built
/// incrementally; all terms accumulate over one common denominator and
/// reduce once.
pub fn s_direct(n: u64, r: u64) -> Result<SumValue> {
    if r == 0 {
        return Err(Error::Precondition("s_direct requires r >= 1"));
    }
    let lcd = lcm_range(r, n + r);
    let mut numer = BigUint::zero();
    let mut binom = BigUint::one(); // C(n, k)
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) / k;
        }
        numer += &binom * r * (&lcd / (k + r));
    }
    let value = Rational::new(BigInt::from(numer), BigInt::from(lcd))?;
    Ok(SumValue { n, r, value, method: Method::Direct })
}

/// The closed form: r big-rational terms instead of n+1, preferred for
/// n much larger than r.
pub fn s_lemma(n: u64, r: u64) -> Result<SumValue> {
    if n == 0 || r == 0 {
        return Err(Error::Precondition("s_lemma requires n >= 1 and r >= 1"));
    }
    let lcd = lcm_range(n + 1, n + r);
    let table = coefficient_table(r);
    let mut numer = BigInt::zero();
    for (j, c) in table.coeffs.iter().enumerate() {
        let m = n + j as u64 + 1;
        let mersenne = (BigUint::one() << (m as usize)) - 1u32; // 2^{n+j+1} - 1
        numer += c * BigInt::from(mersenne * (&lcd / m));
    }
    let value = Rational::new(numer, BigInt::from(lcd))?;
    Ok(SumValue { n, r, value, method: Method::Lemma })
}

/// 1 + Σ_{j=1}^{n} r/(r+j)·C(n,j): the same sum with the k=0 term
/// split off, accumulated term by term with intermediate reduction.
/// Kept as an independent implementation path for cross-checks.
pub fn s_small_n_form(n: u64, r: u64) -> Result<SumValue> {
    if n == 0 || r == 0 {
        return Err(Error::Precondition("s_small_n_form requires n >= 1 and r >= 1"));
    }
    let mut acc = Rational::one();
    let mut binom = BigUint::one(); // C(n, j)
    for j in 1..=n {
        binom = binom * (n - j + 1) / j;
        let term = Rational::new(BigInt::from(&binom * r), BigInt::from(r + j))?;
        acc = &acc + &term;
    }
    Ok(SumValue { n, r, value: acc, method: Method::SmallNForm })
}

/// Method auto-selection: direct when n <= r, closed form otherwise.
pub fn s_auto(n: u64, r: u64) -> Result<SumValue> {
    if n <= r {
        s_direct(n, r)
    } else {
        s_lemma(n, r)
    }
}

/// Σ_{k=0}^{n} k/(k+r)·C(n,k) = 2^n - S(n,r).
pub fn t_complement(n: u64, r: u64) -> Result<Rational> {
    if n == 0 || r == 0 {
        return Err(Error::Precondition("t_complement requires n >= 1 and r >= 1"));
    }
    let two_n = Rational::from_integer(BigInt::from(BigUint::one() << (n as usize)));
    let s = s_auto(n, r)?;
    Ok(&two_n - &s.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    fn coeffs(r: u64) -> Vec<i64> {
        coefficient_table(r)
            .coeffs
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn direct_examples() {
        for r in 1..=8 {
            assert_eq!(s_direct(0, r).unwrap().value, rat(1, 1));
        }
        assert_eq!(s_direct(1, 1).unwrap().value, rat(3, 2));
        assert_eq!(s_direct(2, 2).unwrap().value, rat(17, 6));
        assert_eq!(s_direct(2, 3).unwrap().value, rat(31, 10));
        assert!(s_direct(5, 0).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(s_lemma(3, 1).unwrap().value, rat(15, 4));
        assert_eq!(s_lemma(2, 2).unwrap().value, rat(17, 6));
        // -(2^2-1)*2/2 + 2*(2^3-1)/3 = -3 + 14/3 = 5/3
        assert_eq!(s_lemma(1, 2).unwrap().value, rat(5, 3));
        assert!(s_lemma(0, 1).is_err());
    }

    #[test]
    fn small_n_form_examples() {
        assert_eq!(s_small_n_form(1, 4).unwrap().value, rat(9, 5));
        assert_eq!(s_small_n_form(2, 3).unwrap().value, rat(31, 10));
        assert_eq!(s_small_n_form(2, 2).unwrap().value, rat(17, 6));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(t_complement(2, 1).unwrap(), rat(5, 3));
        assert_eq!(t_complement(1, 1).unwrap(), rat(1, 2));
        assert_eq!(t_complement(2, 2).unwrap(), rat(7, 6));
    }

    #[test]
    fn coefficient_tables_r1_to_r6() {
        assert_eq!(coeffs(1), vec![1]);
        assert_eq!(coeffs(2), vec![-2, 2]);
        assert_eq!(coeffs(3), vec![3, -6, 3]);
        assert_eq!(coeffs(4), vec![-4, 12, -12, 4]);
        assert_eq!(coeffs(5), vec![5, -20, 30, -20, 5]);
        assert_eq!(coeffs(6), vec![-6, 30, -60, 60, -30, 6]);
    }

    #[test]
    fn coefficient_sum() {
        assert_eq!(coefficient_table(1).coeffs.iter().sum::<BigInt>(), BigInt::one());
        for r in 2..=100 {
            let sum: BigInt = coefficient_table(r).coeffs.iter().sum();
            assert!(sum.is_zero(), "r = {r}");
        }
    }

    #[test]
    fn coefficient_magnitudes() {
        // |c_j| = r * C(r-1, j)
        for r in 1u64..=20 {
            let table = coefficient_table(r);
            let mut binom = BigUint::one();
            for (j, c) in table.coeffs.iter().enumerate() {
                if j > 0 {
                    binom = binom * (r - j as u64) / (j as u64);
                }
                assert_eq!(c.abs().magnitude(), &(&binom * r));
            }
        }
    }

    #[test]
    fn denominator_bound_examples() {
        assert_eq!(denominator_bound(2, 2), BigUint::from(12u32));
        assert_eq!(denominator_bound(1, 1), BigUint::from(2u32));
        assert_eq!(denominator_bound(2, 3), BigUint::from(60u32));
    }

    #[test]
    fn three_routes_agree_on_grid() {
        for n in 1..=25u64 {
            for r in 1..=25u64 {
                let d = s_direct(n, r).unwrap().value;
                assert_eq!(d, s_lemma(n, r).unwrap().value, "lemma (n,r)=({n},{r})");
                assert_eq!(d, s_small_n_form(n, r).unwrap().value, "small-n (n,r)=({n},{r})");
                assert_eq!(
                    &d + &t_complement(n, r).unwrap(),
                    Rational::from_integer(BigInt::from(BigUint::one() << n as usize)),
                    "complement (n,r)=({n},{r})"
                );
                // reduced denominator divides lcm(n+1..n+r)
                let bound = denominator_bound(n, r);
                assert!((&bound % d.denom_magnitude()).is_zero(), "bound (n,r)=({n},{r})");
            }
        }
    }

    #[test]
    fn n1_values_stay_in_open_unit_interval_above_one() {
        // S(1,r) = 1 + r/(r+1), strictly between 1 and 2
        let one = Rational::one();
        let two = rat(2, 1);
        for r in 1..=10_000u64 {
            let s = s_direct(1, r).unwrap().value;
            let above = &s - &one;
            let below = &two - &s;
            assert!(above.numer().is_positive() && below.numer().is_positive(), "r = {r}");
        }
    }
}
