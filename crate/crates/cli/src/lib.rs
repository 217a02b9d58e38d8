//! Command implementations behind the `hmix` binary. Each command returns
//! its output and exit code so tests can drive it without a subprocess.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use hermitian_mixed::census::{derive_scattered_catalog, verify_main_theorem, CensusConfig};
use hermitian_mixed::census::verify::{DEFAULT_SAMPLES, DEFAULT_SEED};
use hermitian_mixed::classifier::threshold::{exact_root_label, relation_phrase, Sqrt2Family};
use hermitian_mixed::classifier::{classify_sqrt2, classify_threshold, Catalog, Verdict};
use hermitian_mixed::format::parse_mg;
use hermitian_mixed::graph::MixedGraph;
use hermitian_mixed::spectra::{compare_min_root, graph_spectrum, Threshold};
use hermitian_mixed::switching::switching_equivalent;

#[derive(Debug, Parser)]
#[command(name = "hmix", version, about = "Hermitian spectra of mixed graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sqrt2Mode {
    Strict,
    NonStrict,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, characteristic polynomial and exact threshold comparisons
    Spectrum { path: PathBuf },
    /// Decide λ_min > -(1+√5)/2 (or the -√2 variants) with a certificate
    Classify {
        path: PathBuf,
        /// classify against -√2 instead
        #[arg(long, value_enum)]
        sqrt2: Option<Sqrt2Mode>,
    },
    /// Find a diagonal switching the first graph into the second
    Equiv { a: PathBuf, b: PathBuf },
    /// Census of every connected graph up to --nmax vertices
    Verify {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        /// exhaust all 6-vertex graphs instead of sampling
        #[arg(long)]
        deep: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derive the scattered catalog from scratch
    Catalog {
        /// write the catalog here; the derivation report goes to stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Text destined for stdout and stderr, plus the process exit code.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Spectrum { path } => cmd_spectrum(&path),
        Command::Classify { path, sqrt2 } => cmd_classify(&path, sqrt2),
        Command::Equiv { a, b } => cmd_equiv(&a, &b),
        Command::Verify { nmax, deep, jobs, seed, samples, out } => cmd_verify(
            &CensusConfig {
                n_max: nmax,
                deep,
                jobs,
                seed,
                samples,
            },
            out.as_deref(),
        ),
        Command::Catalog { out } => cmd_catalog(out.as_deref()),
    }
}

fn load(path: &Path) -> Result<MixedGraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_mg(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Ten decimals with a Unicode minus; values within rounding of zero print
/// as zero.
pub fn fixed10(x: f64) -> String {
    let x = if x.abs() < 5e-11 { 0.0 } else { x };
    format!("{x:.10}").replacen('-', "−", 1)
}

pub fn cmd_spectrum(path: &Path) -> Outcome {
    let g = match load(path) {
        Ok(g) => g,
        Err(e) => return Outcome::error(e),
    };
    let spec = graph_spectrum(&g);
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", g.n());
    let _ = writeln!(out, "char-poly: {}", spec.char_poly);
    let eig: Vec<String> = spec.eigenvalues.iter().map(|&x| fixed10(x)).collect();
    let _ = writeln!(out, "eigenvalues: {}", eig.join(" "));
    if let Some(lmin) = spec.lambda_min() {
        let _ = writeln!(
            out,
            "lambda-min: {} ({})",
            fixed10(lmin),
            exact_root_label(&spec.char_poly, lmin)
        );
        for th in Threshold::ALL {
            let o = compare_min_root(&spec.char_poly, &th.value());
            let _ = writeln!(out, "verdict {}: {}", th.symbol(), relation_phrase(o, th));
        }
    }
    Outcome::ok(out)
}

pub fn cmd_classify(path: &Path, sqrt2: Option<Sqrt2Mode>) -> Outcome {
    let g = match load(path) {
        Ok(g) => g,
        Err(e) => return Outcome::error(e),
    };
    let mut out = String::new();
    if let Some(mode) = sqrt2 {
        let cert = match classify_sqrt2(&g, mode == Sqrt2Mode::Strict) {
            Ok(c) => c,
            Err(e) => return Outcome::error(e),
        };
        let what = match &cert.family {
            Some(Sqrt2Family::Knst(m)) => format!("accept K_n[s,t] s={} t={}", m.s, m.t),
            Some(Sqrt2Family::C4(q)) => format!("accept {}", q.class),
            None => "reject".to_string(),
        };
        let _ = writeln!(out, "{what}");
        let _ = writeln!(out, "exact: {}", relation_phrase(cert.exact, Threshold::NegSqrt2));
        if let Some(note) = &cert.note {
            let _ = writeln!(out, "note: {note}");
        }
        return Outcome {
            code: if cert.accepted { 0 } else { 1 },
            stdout: out,
            stderr: String::new(),
        };
    }
    let cert = match classify_threshold(&g) {
        Ok(c) => c,
        Err(e) => return Outcome::error(e),
    };
    let _ = writeln!(out, "{}", cert.summary(&g));
    let _ = writeln!(out, "exact: {}", relation_phrase(cert.exact, Threshold::NegGolden));
    let check = match cert.verify(&g, Catalog::builtin()) {
        Ok(()) => "verified".to_string(),
        Err(e) => format!("FAILED ({e})"),
    };
    let _ = writeln!(out, "certificate: {check}");
    Outcome {
        code: if cert.verdict() == Verdict::Accept { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    }
}

pub fn cmd_equiv(a: &Path, b: &Path) -> Outcome {
    let (ga, gb) = match (load(a), load(b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return Outcome::error(e),
    };
    match switching_equivalent(&ga, &gb) {
        Some(d) => Outcome::ok(format!("{d}\n")),
        None => Outcome {
            code: 1,
            stdout: "not equivalent\n".into(),
            stderr: String::new(),
        },
    }
}

fn emit(text: String, out: Option<&Path>) -> Result<String, String> {
    match out {
        Some(p) => {
            fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display()))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn cmd_verify(config: &CensusConfig, out: Option<&Path>) -> Outcome {
    let report = match verify_main_theorem(config) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let verified = report.verified();
    match emit(report.to_text(), out) {
        Ok(stdout) => Outcome {
            code: if verified { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome::error(e),
    }
}

pub fn cmd_catalog(out: Option<&Path>) -> Outcome {
    let derivation = match derive_scattered_catalog() {
        Ok(d) => d,
        Err(e) => return Outcome::error(e),
    };
    let text = derivation.catalog.to_text();
    match out {
        Some(p) => match fs::write(p, &text) {
            Ok(()) => Outcome::ok(derivation.report()),
            Err(e) => Outcome::error(format!("{}: {e}", p.display())),
        },
        None => Outcome::ok(text),
    }
}

#[cfg(test)]
mod tests {
    use std::cmp::Ordering;

    use super::*;

    #[test]
    fn formats_fixed_width() {
        assert_eq!(fixed10(-2.0), "−2.0000000000");
        assert_eq!(fixed10(-1e-13), "0.0000000000");
        assert_eq!(fixed10(1.5), "1.5000000000");
    }

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from(["hmix", "verify", "--nmax", "4", "--jobs", "2", "--seed", "7"]).unwrap();
        match cli.command {
            Command::Verify { nmax, jobs, seed, deep, .. } => assert_eq!((nmax, jobs, seed, deep), (4, 2, 7, false)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn relation_ordering_words() {
        assert_eq!(relation_phrase(Ordering::Less, Threshold::NegSqrt3), "Less than −√3");
    }
}
