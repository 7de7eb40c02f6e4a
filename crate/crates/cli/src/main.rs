//! binsum: compute the binomial sum S(n,r), emit and check
//! non-integrality certificates, and sweep the conjecture region.
//!
//! Exit codes: 0 all claims verified, 1 counterexample or verification
//! failure, 2 usage/config error.

mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use binsum_core::{
    certify, nt, s_direct, s_lemma, verify_certificate, verify_sylvester_range, Certificate,
    Certified,
};
use sweep::{run_sweep, SweepConfig, SweepError, SweepOutcome};

#[derive(Parser)]
#[command(name = "binsum", version, about = "Exact S(n,r) computation and non-integrality certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Lemma,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate S(n,r) exactly and print it as "num/den"
    Compute {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        /// Evaluation route; "both" prints both values and a
        /// MATCH/MISMATCH verdict (mismatch exits nonzero)
        #[arg(long, value_enum, default_value = "direct")]
        method: MethodArg,
    },
    /// Construct, self-verify and print a non-integrality certificate
    Certify {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Re-verify a certificate JSON file from scratch
    Verify {
        cert_file: PathBuf,
    },
    /// Sweep a rectangle of (n, r), writing one JSONL record per pair
    Sweep {
        #[arg(long = "n-min", default_value_t = 1)]
        n_min: u64,
        #[arg(long = "n-max")]
        n_max: u64,
        #[arg(long = "r-min", default_value_t = 1)]
        r_min: u64,
        #[arg(long = "r-max")]
        r_max: u64,
        /// Worker count; defaults to available parallelism
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        /// Reuse verified records already present in the output file
        #[arg(long)]
        resume: bool,
        /// Also factor every denominator and cross-check the
        /// constructive witness against it
        #[arg(long = "audit-fallback")]
        audit_fallback: bool,
    },
    /// Check that no 2 <= n <= max divides 2^n - 1
    Factcheck {
        #[arg(long)]
        max: u64,
    },
    /// Verify the prime-window theorem over a bounded range
    Sylvester {
        #[arg(long = "n-max")]
        n_max: u64,
        #[arg(long = "r-max")]
        r_max: u64,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_CLAIM_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn cmd_compute(n: u64, r: u64, method: MethodArg) -> u8 {
    let eval = |which: MethodArg| match which {
        MethodArg::Direct => s_direct(n, r),
        MethodArg::Lemma => s_lemma(n, r),
        MethodArg::Both => unreachable!(),
    };
    match method {
        MethodArg::Both => {
            let (d, l) = match (s_direct(n, r), s_lemma(n, r)) {
                (Ok(d), Ok(l)) => (d, l),
                (Err(e), _) | (_, Err(e)) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            };
            let verdict = if d.value == l.value { "MATCH" } else { "MISMATCH" };
            println!("{} {} {}", d.value, l.value, verdict);
            if verdict == "MATCH" {
                EXIT_OK
            } else {
                EXIT_CLAIM_FAILED
            }
        }
        one => match eval(one) {
            Ok(s) => {
                println!("{}", s.value);
                EXIT_OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        },
    }
}

fn cmd_certify(n: u64, r: u64) -> u8 {
    match certify(n, r) {
        Ok(Certified::Proof(cert)) => {
            println!("{}", cert.to_json());
            if cert.verified {
                EXIT_OK
            } else {
                eprintln!("error: certificate failed self-verification");
                EXIT_CLAIM_FAILED
            }
        }
        Ok(Certified::Counterexample { n, r, value }) => {
            eprintln!("COUNTEREXAMPLE: S({n},{r}) = {value} is an integer");
            EXIT_CLAIM_FAILED
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_verify(cert_file: &PathBuf) -> u8 {
    let raw = match std::fs::read_to_string(cert_file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", cert_file.display());
            return EXIT_USAGE;
        }
    };
    let cert = match Certificate::from_json(raw.trim()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = verify_certificate(&cert);
    println!("{}", outcome.message());
    if outcome.is_valid() {
        EXIT_OK
    } else {
        EXIT_CLAIM_FAILED
    }
}

fn cmd_sweep(config: SweepConfig) -> u8 {
    match run_sweep(&config) {
        Ok(SweepOutcome::Clean(summary)) => {
            println!("{}", serde_json::to_string(&summary).unwrap());
            EXIT_OK
        }
        Ok(SweepOutcome::Counterexample { n, r, summary }) => {
            println!("{}", serde_json::to_string(&summary).unwrap());
            eprintln!("==================== COUNTEREXAMPLE ====================");
            eprintln!("S({n},{r}) is an integer; sweep halted");
            eprintln!("========================================================");
            EXIT_CLAIM_FAILED
        }
        Ok(SweepOutcome::VerificationFailure(summary)) => {
            println!("{}", serde_json::to_string(&summary).unwrap());
            eprintln!("error: {} record(s) failed verification", summary.failures);
            EXIT_CLAIM_FAILED
        }
        Err(e @ (SweepError::Config(_) | SweepError::Io(_) | SweepError::CorruptResume { .. })) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_factcheck(max: u64) -> u8 {
    if max < 2 {
        eprintln!("error: --max must be >= 2");
        return EXIT_USAGE;
    }
    for n in 2..=max {
        if nt::divides_2n_minus_1(n) {
            println!("FAIL: {n} divides 2^{n} - 1");
            return EXIT_CLAIM_FAILED;
        }
    }
    println!("OK: no n in 2..={max} divides 2^n - 1");
    EXIT_OK
}

fn cmd_sylvester(n_max: u64, r_max: u64) -> u8 {
    match verify_sylvester_range(n_max, r_max) {
        Ok(report) => {
            println!("{}", serde_json::to_string(&report).unwrap());
            if report.violations == 0 {
                EXIT_OK
            } else {
                EXIT_CLAIM_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute { n, r, method } => cmd_compute(n, r, method),
        Command::Certify { n, r } => cmd_certify(n, r),
        Command::Verify { cert_file } => cmd_verify(&cert_file),
        Command::Sweep {
            n_min,
            n_max,
            r_min,
            r_max,
            jobs,
            out,
            resume,
            audit_fallback,
        } => cmd_sweep(SweepConfig {
            n_min,
            n_max,
            r_min,
            r_max,
            jobs: jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
            }),
            out_path: out,
            resume,
            audit_fallback,
        }),
        Command::Factcheck { max } => cmd_factcheck(max),
        Command::Sylvester { n_max, r_max } => cmd_sylvester(n_max, r_max),
    };
    ExitCode::from(code)
}
