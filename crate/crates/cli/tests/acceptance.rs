//! Acceptance suite. Each test covers one criterion at its stated
//! bound and prints a single pass line (visible with --nocapture);
//! a panic means the criterion failed. All arithmetic checks are
//! exact; the only tolerances are wall-clock budgets.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use binsum_core::{
    certify, coefficient_table, s_direct, s_lemma, s_small_n_form, verify_certificate,
    Certificate, Certified, Rational, Route, Valuation,
};

fn binsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binsum"))
        .args(args)
        .output()
        .expect("spawn binsum")
}

fn unwrap_proof(c: Certified) -> Certificate {
    match c {
        Certified::Proof(c) => c,
        Certified::Counterexample { n, r, value } => {
            panic!("counterexample at ({n},{r}): {value}")
        }
    }
}

fn within(budget: Duration, started: Instant, what: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn criterion_01_closed_form_identity() {
    let started = Instant::now();
    for n in 1..=60u64 {
        for r in 1..=60u64 {
            assert_eq!(
                s_direct(n, r).unwrap().value,
                s_lemma(n, r).unwrap().value,
                "(n,r)=({n},{r})"
            );
        }
    }
    within(Duration::from_secs(30), started, "criterion 1");
    println!("ACCEPTANCE 1 (closed-form identity, 60x60 grid, exact): PASS");
}

#[test]
fn criterion_02_coefficient_transcription() {
    let expected: [&[i64]; 6] = [
        &[1],
        &[-2, 2],
        &[3, -6, 3],
        &[-4, 12, -12, 4],
        &[5, -20, 30, -20, 5],
        &[-6, 30, -60, 60, -30, 6],
    ];
    for (idx, row) in expected.iter().enumerate() {
        let r = idx as u64 + 1;
        let got: Vec<BigInt> = coefficient_table(r).coeffs;
        let want: Vec<BigInt> = row.iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(got, want, "r = {r}");
    }
    println!("ACCEPTANCE 2 (hard-coded coefficient vectors r=1..6, exact): PASS");
}

#[test]
fn criterion_03_proven_region_small_r() {
    let started = Instant::now();
    for n in 2..=300u64 {
        for r in 1..=6u64 {
            let cert = unwrap_proof(certify(n, r).unwrap());
            assert!(cert.verified, "({n},{r})");
            assert!(verify_certificate(&cert).is_valid(), "({n},{r})");
            let s = s_direct(n, r).unwrap().value;
            assert!(!s.is_integer(), "({n},{r})");
            let v = s.vp(&cert.witness_prime).unwrap();
            assert!(
                v <= Valuation::Finite(cert.claimed_bound),
                "({n},{r}): v = {v}, bound {}",
                cert.claimed_bound
            );
        }
    }
    within(Duration::from_secs(60), started, "criterion 3");
    println!("ACCEPTANCE 3 (r in 1..6, n in 2..300: verified certificates): PASS");
}

#[test]
fn criterion_04_proven_region_small_n() {
    let started = Instant::now();
    for n in 1..=40u64 {
        for r in (n + 1)..=200 {
            let cert = unwrap_proof(certify(n, r).unwrap());
            assert!(cert.verified, "({n},{r})");
            assert!(
                matches!(
                    cert.route,
                    Route::N1Denom | Route::SmallNSylvester | Route::SmallNBertrand
                ),
                "({n},{r}): route {:?}",
                cert.route
            );
        }
    }
    within(Duration::from_secs(120), started, "criterion 4");
    println!("ACCEPTANCE 4 (n <= r-1 up to (40,200): small-n certificates): PASS");
}

#[test]
fn criterion_05_classic_fact_to_1e6() {
    let started = Instant::now();
    let out = binsum(&["factcheck", "--max", "1000000"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    within(Duration::from_secs(60), started, "criterion 5");
    println!("ACCEPTANCE 5 (no n <= 10^6 divides 2^n - 1): PASS");
}

#[test]
fn criterion_06_sylvester_range() {
    let started = Instant::now();
    let out = binsum(&["sylvester", "--n-max", "200000", "--r-max", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(report["violations"], 0, "{report}");
    within(Duration::from_secs(120), started, "criterion 6");
    println!("ACCEPTANCE 6 (prime windows to n=2*10^5, r=100: zero violations): PASS");
}

#[test]
fn criterion_07_conjecture_sweep() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("sweep.jsonl");
    let out = binsum(&[
        "sweep", "--n-max", "200", "--r-max", "200",
        "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let body = fs::read_to_string(&out_path).unwrap();
    let mut records = 0u64;
    for line in body.lines() {
        let rec: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(rec["is_integer"], false, "{line}");
        assert_eq!(rec["verified"], true, "{line}");
        records += 1;
    }
    assert_eq!(records, 200 * 200);
    within(Duration::from_secs(600), started, "criterion 7");
    println!("ACCEPTANCE 7 (sweep 200x200: no integer S(n,r), all verified): PASS");
}

#[test]
fn criterion_08_oracle_equivalence() {
    // naive oracle over the explicit product denominator r(r+1)...(n+r),
    // factorial binomials, one reduction at the end
    fn brute(n: u64, r: u64) -> Rational {
        let fact = |m: u64| (1..=m).fold(BigUint::one(), |acc, x| acc * x);
        let mut lcd = BigUint::one();
        for k in 0..=n {
            lcd *= k + r;
        }
        let mut numer = BigUint::zero();
        for k in 0..=n {
            let binom = fact(n) / (fact(k) * fact(n - k));
            numer += binom * r * (&lcd / (k + r));
        }
        Rational::new(BigInt::from(numer), BigInt::from(lcd)).unwrap()
    }
    for n in 1..=25u64 {
        for r in 1..=25u64 {
            let expected = brute(n, r);
            assert_eq!(s_direct(n, r).unwrap().value, expected, "({n},{r})");
            assert_eq!(s_small_n_form(n, r).unwrap().value, expected, "({n},{r})");
        }
    }
    println!("ACCEPTANCE 8 (brute-force oracle equals s_direct on 25x25, exact): PASS");
}

#[test]
fn criterion_09_audit_agreement() {
    for n in 2..=100u64 {
        for r in 1..=6u64 {
            let cert = unwrap_proof(certify(n, r).unwrap());
            let factors = binsum_core::fallback_denominator_factors(n, r).unwrap();
            assert!(
                factors.iter().any(|(p, _)| *p == cert.witness_prime),
                "({n},{r}): witness {} not in factored denominator",
                cert.witness_prime
            );
        }
    }
    println!("ACCEPTANCE 9 (audit: factored denominators contain every constructive witness): PASS");
}

#[test]
fn criterion_10_determinism_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let sweep = |path: &Path, resume: bool| {
        let mut args = vec![
            "sweep", "--n-max", "60", "--r-max", "25", "--jobs", "4", "--out",
            path.to_str().unwrap(),
        ];
        if resume {
            args.push("--resume");
        }
        binsum(&args)
    };
    assert!(sweep(&a, false).status.success());
    assert!(sweep(&b, false).status.success());
    let full = fs::read(&a).unwrap();
    assert_eq!(full, fs::read(&b).unwrap(), "two identical runs must be byte-identical");

    // kill simulation: keep a prefix that ends mid-line, then resume
    let cut = full.len() / 2 + 13;
    fs::write(&b, &full[..cut]).unwrap();
    assert!(sweep(&b, true).status.success());
    assert_eq!(fs::read(&b).unwrap(), full, "resume must reproduce the uninterrupted file");
    println!("ACCEPTANCE 10 (byte-identical determinism and resume): PASS");
}
