use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use torelli_cli::suites::{depth_of, standard_chooser};
use torelli_cli::{run_suite, Params, Suite, REPORT_SCHEMA_VERSION};
use torelli_core::autf::FreeAutomorphism;
use torelli_core::bnscert::{
    assemble_certificate, check_certificate, BnsCertificate, CertificateJson, Character,
};
use torelli_core::rational::parse_fraction;

#[derive(Parser)]
#[command(
    name = "torelli",
    version,
    about = "Exact checks for automorphisms of free groups and their Johnson images"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Debug, Default)]
struct Flags {
    /// Rank of the free group (suite default when omitted)
    #[arg(long)]
    n: Option<usize>,
    /// Degree; suites sweep k = 2, 3 when omitted
    #[arg(long)]
    k: Option<usize>,
    /// Genus for the symplectic suite (default: 3 and 4)
    #[arg(long)]
    g: Option<usize>,
    /// Subgroup size for the commuting graph (default 2)
    #[arg(long)]
    m: Option<usize>,
    /// Number of sampled cases
    #[arg(long)]
    trials: Option<usize>,
    /// Seed for sampled cases (default 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Saturate under symplectic transvections as well as σ_i, τ_ij
    #[arg(long)]
    extended_sp_generators: bool,
}

impl Flags {
    fn params(&self) -> Params {
        Params {
            n: self.n,
            k: self.k,
            g: self.g,
            m: self.m,
            trials: self.trials,
            seed: self.seed,
            extended_sp_generators: self.extended_sp_generators,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite
    Verify {
        /// iaab, tau-identities, kernel-claim, sp-orbit, sl-reduction, paths, certificates or depth-table
        suite: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// Johnson depth of each automorphism in a file, one per line
    Depth {
        file: PathBuf,
        /// Degree cutoff; depths beyond it are reported as ">=K"
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certificate tools
    Cert {
        #[command(subcommand)]
        command: CertCommand,
    },
}

#[derive(Subcommand)]
enum CertCommand {
    /// Check a certificate JSON file
    Check {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Assemble a certificate from {n, m, T, chi?}
    Assemble {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Deserialize)]
struct AssembleInput {
    n: usize,
    #[serde(default = "default_m")]
    m: usize,
    #[serde(rename = "T")]
    ts: Vec<String>,
    /// Character values on elements of T, keyed by position in `T`.
    #[serde(default)]
    chi: Vec<String>,
}

fn default_m() -> usize {
    2
}

fn emit(value: &Value, out: Option<&Path>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    match out {
        Some(p) => fs::write(p, text + "\n").map_err(|e| format!("{}: {e}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn verify(suite: &str, flags: &Flags) -> Result<bool, String> {
    let suite: Suite = suite.parse().map_err(|e| format!("{e}"))?;
    let report = run_suite(suite, &flags.params()).map_err(|e| e.to_string())?;
    for c in &report.checks {
        eprintln!(
            "{:<12} {} ({:.0} ms)",
            c.status.as_str(),
            c.name,
            c.wall_time_ms
        );
    }
    emit(
        &serde_json::to_value(&report).expect("report serializes"),
        flags.out.as_deref(),
    )?;
    Ok(!report.failed())
}

fn depth(file: &Path, k: usize, out: Option<&Path>) -> Result<bool, String> {
    let mut results = Vec::new();
    for line in read(file)?.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g: FreeAutomorphism = line.parse().map_err(|e| format!("{line}: {e}"))?;
        results.push(depth_of(&g, k).map_err(|e| e.to_string())?);
    }
    emit(
        &json!({ "schema_version": REPORT_SCHEMA_VERSION, "command": "depth", "cutoff": k, "results": results }),
        out,
    )?;
    Ok(true)
}

fn cert_check(file: &Path, out: Option<&Path>) -> Result<bool, String> {
    let j: CertificateJson = serde_json::from_str(&read(file)?).map_err(|e| e.to_string())?;
    let c = BnsCertificate::from_json(&j).map_err(|e| e.to_string())?;
    let v = check_certificate(&c).map_err(|e| e.to_string())?;
    emit(
        &json!({ "schema_version": REPORT_SCHEMA_VERSION, "command": "cert check", "verdict": v }),
        out,
    )?;
    Ok(v.valid)
}

fn cert_assemble(file: &Path, out: Option<&Path>) -> Result<bool, String> {
    let input: AssembleInput = serde_json::from_str(&read(file)?).map_err(|e| e.to_string())?;
    let ts = input
        .ts
        .iter()
        .map(|s| {
            s.parse::<FreeAutomorphism>()
                .map_err(|e| format!("{s}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut chi = Character::new();
    for (t, v) in ts.iter().zip(&input.chi) {
        chi.set(t, parse_fraction(v).map_err(|e| e.to_string())?);
    }
    let a = assemble_certificate(input.n, &ts, input.m, &chi, &mut standard_chooser(input.n))
        .map_err(|e| e.to_string())?;
    let v = check_certificate(&a.certificate).map_err(|e| e.to_string())?;
    emit(
        &json!({
            "schema_version": REPORT_SCHEMA_VERSION,
            "command": "cert assemble",
            "certificate": a.certificate.to_json(),
            "vertex_order": a.vertex_order,
            "verdict": v,
        }),
        out,
    )?;
    Ok(v.valid)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { suite, flags } => verify(suite, flags),
        Command::Depth { file, k, out } => depth(file, *k, out.as_deref()),
        Command::Cert {
            command: CertCommand::Check { file, out },
        } => cert_check(file, out.as_deref()),
        Command::Cert {
            command: CertCommand::Assemble { file, out },
        } => cert_assemble(file, out.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
