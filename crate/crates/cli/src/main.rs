mod classes;
mod input;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use compsub::generators::{
    complementary_prism, gi_gadget, matched_complement, matched_complement_certificate,
    prism_of_clique, random_split_graph, rho_candidates, seeded_permutation, RHO_ORDER_LIMIT,
};
use compsub::graph::io::to_graph6;
use compsub::solver::{DecompositionCertificate, BRUTE_DEFAULT_LIMIT};
use compsub::{decide, Graph, SolverConfig, Strategy, Verdict};
use serde::Serialize;

use classes::Class;
use input::{emit, read_instances, read_single, render, Format, Instance};

/// Exit code for errors; verdicts use 0, 1 and 2.
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "compsub",
    version,
    about = "Split a graph into H and the complement of H joined by a perfect matching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide instances. Exit status 0 = YES, 1 = NO, 2 = UNKNOWN, 3 = error;
    /// for a batch, the largest status over all instances.
    Decide(DecideArgs),
    /// Check a certificate against a graph; exit 0 iff it is valid.
    Certify(CertifyArgs),
    /// Build instances.
    Generate(GenerateArgs),
    /// Report class memberships with witnesses, one JSON record per graph.
    Recognize(RecognizeArgs),
    /// List distance-hereditary YES instances that are not prisms of cliques.
    DeriveRho(DeriveRhoArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// auto, brute, cograph, p5free, holefree or characterization.
    #[arg(long, default_value = "auto")]
    strategy: Strategy,
    /// Largest order handed to exhaustive search (0 disables it).
    #[arg(long, env = "COMPSUB_BRUTE_LIMIT", default_value_t = BRUTE_DEFAULT_LIMIT)]
    brute_limit: usize,
    /// Worker threads (1 runs everything serially).
    #[arg(long)]
    threads: Option<usize>,
}

impl SolveArgs {
    fn config(&self) -> SolverConfig {
        let parallel = compsub::parallel_available() && self.threads != Some(1);
        SolverConfig::default()
            .with_strategy(self.strategy)
            .with_brute_limit(self.brute_limit)
            .with_parallel(parallel)
    }
}

#[derive(Args)]
struct DecideArgs {
    /// Input file; stdin when absent or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[command(flatten)]
    solve: SolveArgs,
    /// Certificate file for a single instance, directory for a batch.
    #[arg(long)]
    cert_out: Option<PathBuf>,
    /// JSON-lines report. Without --cert-out, certificates go to `<report>.certs/`.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    graph: PathBuf,
    certificate: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    kind: GenerateKind,
    /// Output file; stdout when absent. A provenance sidecar `<out>.json` is
    /// written next to it (to stderr without --out).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "g6")]
    format: Format,
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Complementary prism of a graph (identity matching).
    Prism {
        #[arg(long)]
        h: PathBuf,
    },
    /// Graph, complement and a seeded random perfect matching between them.
    Matched {
        #[arg(long)]
        h: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reduction instance from two connected split graphs of equal order.
    Gadget {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Prism of the complete graph K_n.
    CliquePrism {
        #[arg(long)]
        n: usize,
    },
    /// Random connected split graph.
    Split {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct RecognizeArgs {
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Classes to test (all when omitted).
    #[arg(long = "class", value_enum)]
    classes: Vec<Class>,
}

#[derive(Args)]
struct DeriveRhoArgs {
    /// Largest order searched (at most 12).
    #[arg(long, default_value_t = 10)]
    max_order: usize,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Serialize)]
struct ReportRow<'a> {
    id: &'a str,
    verdict: &'a str,
    method: Option<String>,
    elapsed_ms: f64,
    certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Decide(args) => cmd_decide(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Generate(args) => cmd_generate(args).map(|_| 0),
        Command::Recognize(args) => cmd_recognize(args).map(|_| 0),
        Command::DeriveRho(args) => cmd_derive_rho(args).map(|_| 0),
    }
}

fn init_threads(threads: Option<usize>) -> Result<()> {
    let Some(n) = threads else { return Ok(()) };
    if n == 0 {
        bail!("--threads must be at least 1");
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring the thread pool")?;
    Ok(())
}

/// Solves every instance; a pool spreads the batch when built with rayon.
fn solve_all(instances: &[Instance], cfg: &SolverConfig) -> Vec<(compsub::Result<Verdict>, f64)> {
    let one = |inst: &Instance| {
        let t = Instant::now();
        let v = decide(&inst.graph, cfg);
        (v, t.elapsed().as_secs_f64() * 1000.0)
    };
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        use rayon::prelude::*;
        return instances.par_iter().map(one).collect();
    }
    instances.iter().map(one).collect()
}

fn cmd_decide(args: DecideArgs) -> Result<u8> {
    init_threads(args.solve.threads)?;
    let cfg = args.solve.config();
    let instances = read_instances(args.input.as_deref(), args.format)?;
    let batch = instances.len() > 1;
    let cert_dir = match (&args.cert_out, &args.report) {
        (Some(p), _) if batch => Some(p.clone()),
        (None, Some(r)) => Some(PathBuf::from(format!("{}.certs", r.display()))),
        _ => None,
    };
    if let Some(dir) = &cert_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let mut report = match &args.report {
        Some(p) => Some(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => None,
    };
    let results = solve_all(&instances, &cfg);
    let mut status = 0u8;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (index, (inst, (verdict, elapsed_ms))) in instances.iter().zip(results).enumerate() {
        let mut cert_path = None;
        let mut inline = None;
        let (label, method, error, code) = match &verdict {
            Ok(v) => {
                if let Some(c) = v.certificate() {
                    let path = match (&cert_dir, &args.cert_out) {
                        (Some(dir), _) => Some(dir.join(format!("{}.json", index + 1))),
                        (None, Some(p)) => Some(p.clone()),
                        (None, None) => None,
                    };
                    if let Some(p) = &path {
                        write_certificate(p, c)?;
                    } else if !batch {
                        inline = Some(c.to_json_pretty());
                    }
                    cert_path = path.map(|p| p.display().to_string());
                }
                (
                    v.label(),
                    v.method().map(|m| m.to_string()),
                    None,
                    v.exit_code() as u8,
                )
            }
            Err(e) => ("ERROR", None, Some(e.to_string()), EXIT_ERROR),
        };
        status = status.max(code);
        match (&verdict, &error) {
            (_, Some(e)) => eprintln!("{}: error: {e}", inst.id),
            (Ok(Verdict::Unknown(why)), _) => writeln!(out, "{}\tUNKNOWN\t{why}", inst.id)?,
            _ => writeln!(
                out,
                "{}\t{label}\t{}",
                inst.id,
                method.as_deref().unwrap_or("-")
            )?,
        }
        if let Some(text) = inline {
            writeln!(out, "{text}")?;
        }
        if let Some(file) = report.as_mut() {
            let row = ReportRow {
                id: &inst.id,
                verdict: label,
                method,
                elapsed_ms,
                certificate: cert_path,
                error,
            };
            writeln!(file, "{}", serde_json::to_string(&row)?)?;
        }
    }
    Ok(status)
}

fn write_certificate(path: &Path, c: &DecompositionCertificate) -> Result<()> {
    fs::write(path, c.to_json_pretty() + "\n")
        .with_context(|| format!("writing {}", path.display()))
}

fn cmd_certify(args: CertifyArgs) -> Result<u8> {
    let g = read_single(&args.graph, args.format)?;
    let text = fs::read_to_string(&args.certificate)
        .with_context(|| format!("reading {}", args.certificate.display()))?;
    let cert = DecompositionCertificate::from_json(&text).with_context(|| {
        format!(
            "certificate {} does not match the schema",
            args.certificate.display()
        )
    })?;
    match cert.verify(&g) {
        Ok(()) => {
            println!("valid");
            Ok(0)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(1)
        }
    }
}

fn sidecar(out: Option<&PathBuf>, value: serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(&value)? + "\n";
    match out {
        Some(p) => {
            let path = PathBuf::from(format!("{}.json", p.display()));
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            eprint!("{text}");
            Ok(())
        }
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<()> {
    let out = args.out.as_ref();
    let (g, provenance): (Graph, serde_json::Value) = match &args.kind {
        GenerateKind::Prism { h } => {
            let h = read_single(h, None)?;
            let g = complementary_prism(&h);
            let pi = compsub::iso::IsoMapping::identity(h.order());
            let cert = matched_complement_certificate(&h, &pi)?;
            (
                g,
                serde_json::json!({ "kind": "prism", "h": to_graph6(&h), "certificate": cert }),
            )
        }
        GenerateKind::Matched { h, seed } => {
            let h = read_single(h, None)?;
            let pi = seeded_permutation(h.order(), *seed);
            let g = matched_complement(&h, &pi)?;
            let cert = matched_complement_certificate(&h, &pi)?;
            let prov = serde_json::json!({
                "kind": "matched",
                "h": to_graph6(&h),
                "seed": seed,
                "permutation": pi.as_slice(),
                "certificate": cert,
            });
            (g, prov)
        }
        GenerateKind::Gadget { a, b, seed } => {
            let a = read_single(a, None)?;
            let b = read_single(b, None)?;
            let inst = gi_gadget(&a, &b, *seed)?;
            let prov: serde_json::Value = serde_json::from_str(&inst.provenance_json())?;
            (
                inst.g,
                serde_json::json!({ "kind": "gadget", "gadget": prov }),
            )
        }
        GenerateKind::CliquePrism { n } => {
            if *n == 0 {
                bail!("--n must be at least 1");
            }
            let h = Graph::complete(*n);
            let cert = matched_complement_certificate(&h, &compsub::iso::IsoMapping::identity(*n))?;
            (
                prism_of_clique(*n),
                serde_json::json!({ "kind": "clique-prism", "n": n, "certificate": cert }),
            )
        }
        GenerateKind::Split { n, seed } => {
            let g = random_split_graph(*n, *seed)?;
            (
                g,
                serde_json::json!({ "kind": "split", "n": n, "seed": seed }),
            )
        }
    };
    emit(out, &render(&g, args.format))?;
    sidecar(out, provenance)
}

fn cmd_recognize(args: RecognizeArgs) -> Result<()> {
    for inst in read_instances(args.input.as_deref(), args.format)? {
        let mut record = serde_json::Map::new();
        record.insert("id".into(), inst.id.clone().into());
        record.insert(
            "classes".into(),
            classes::report(&inst.graph, &args.classes),
        );
        println!("{}", serde_json::Value::Object(record));
    }
    Ok(())
}

fn cmd_derive_rho(args: DeriveRhoArgs) -> Result<()> {
    if args.max_order > RHO_ORDER_LIMIT {
        bail!(
            "--max-order {} exceeds the limit {RHO_ORDER_LIMIT}",
            args.max_order
        );
    }
    init_threads(args.threads)?;
    let cfg = SolverConfig::default()
        .with_parallel(compsub::parallel_available() && args.threads != Some(1));
    let found = rho_candidates(args.max_order, &cfg)?;
    for g in &found {
        println!("{}", to_graph6(g));
    }
    eprintln!(
        "{} isomorphism class(es) up to order {}",
        found.len(),
        args.max_order
    );
    Ok(())
}
