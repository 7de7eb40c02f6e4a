//! Exact-arithmetic library for the binomial sum
//! S(n,r) = Σ_{k=0}^{n} r/(k+r)·C(n,k): closed-form evaluation,
//! non-integrality certificates with independent verification, and
//! empirical prime-window checks backing the constructive arguments.

pub mod binomial;
pub mod error;
pub mod nt;
pub mod rational;
pub mod sieve;
pub mod windows;
pub mod witness;

pub use binomial::{
    coefficient_table, denominator_bound, s_auto, s_direct, s_lemma, s_small_n_form,
    t_complement, CoefficientTable, Method, SumValue,
};
pub use error::{Error, Result};
pub use rational::{reduce, Rational, Valuation};
pub use windows::{
    bertrand_prime, sylvester_witness, verify_bertrand_range, verify_sylvester_range,
    SylvesterReport, WindowWitness,
};
pub use witness::{
    certify, certify_fallback, certify_odd_index, certify_r1, certify_small_n,
    certify_two_adic, fallback_denominator_factors, verify_certificate, Certificate,
    Certified, Route, VerifyOutcome,
};
