use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rhs5::cover::{cover_diagnostic, CoverDiagnostic};
use rhs5::verify::{verify, VerifyConfig, VerifyReport};
use rhs5::{
    build_cover_with, is_unique_realization, link_invariants, primes_4l_minus_1, realize_with,
    search_weight_systems, smale_decompositions, CoverLink, CoverOptions, Error, LinkInvariants,
    RealizationCertificate, SmaleManifold, WeightSystem,
};

const MAX_VERIFY_DEGREE: u64 = 60;
const MAX_VERIFY_K: u64 = 30;
const MAX_SEARCH_DEGREE: u64 = 150;
const MAX_PRIME_LIMIT: u64 = 50_000_000;

#[derive(Parser)]
#[command(
    name = "rhs5",
    version,
    about = "Invariants of weighted homogeneous links and rational homology 5-spheres"
)]
struct Cli {
    /// Output format; JSON is the stable interface.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct SystemArgs {
    /// Comma-separated weights, e.g. 1,2,3.
    #[arg(long, value_delimiter = ',', required = true)]
    weights: Vec<u64>,
    #[arg(long)]
    degree: u64,
}

impl SystemArgs {
    fn system(&self) -> Result<WeightSystem, Error> {
        WeightSystem::new(self.weights.clone(), self.degree)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Genus of the curve cut out by three weights and a degree.
    Genus(SystemArgs),
    /// Divisor, Betti number and characteristic polynomial of a link.
    Link(SystemArgs),
    /// The k-fold cover z0^k + f(z1, z2, z3).
    Cover {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(short = 'k')]
        k: u64,
        /// Only compute the cover divisor from the base divisor.
        #[arg(long)]
        skip_direct_path: bool,
        /// Report the cover divisor without requiring gcd(d, k) = 1.
        #[arg(long)]
        diagnostic: bool,
    },
    /// Realize |H2| = k^2 by a cover of a genus-one family member.
    Realize {
        k: u64,
        /// Family prime p = 3 mod 4 to use instead of the smallest coprime one.
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        skip_direct_path: bool,
    },
    /// Smale manifolds with |H2| = k^2.
    SmaleEnum { k: u64 },
    /// Primes p = 3 mod 4 up to a bound.
    Primes {
        #[arg(long)]
        limit: u64,
    },
    /// Three-weight systems of a given genus.
    Search {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        max_degree: u64,
    },
    /// Cross-validate every pipeline over a grid of weight systems.
    Verify {
        #[arg(long, default_value_t = 40)]
        max_degree: u64,
        #[arg(long, default_value_t = 12)]
        max_k: u64,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

#[derive(Serialize)]
struct GenusReport {
    weights: Vec<u64>,
    degree: u64,
    genus: u64,
    positive_genus_bound: bool,
}

#[derive(Serialize)]
struct SmaleReport {
    k: u64,
    unique: bool,
    candidates: Vec<SmaleManifold>,
}

#[derive(Serialize)]
struct PrimesReport {
    limit: u64,
    primes: Vec<u64>,
}

#[derive(Serialize)]
struct SearchReport {
    genus: u64,
    max_degree: u64,
    systems: Vec<WeightSystem>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Report {
    Genus(GenusReport),
    Link(LinkInvariants),
    Cover(CoverLink),
    Diagnostic(CoverDiagnostic),
    Realize(RealizationCertificate),
    Smale(SmaleReport),
    Primes(PrimesReport),
    Search(SearchReport),
    Verify(VerifyReport),
}

fn check_bound(name: &str, value: u64, max: u64) -> Result<(), Failure> {
    if value > max {
        return Err(Failure::Input(format!("{name} {value} exceeds the supported maximum {max}")));
    }
    Ok(())
}

fn cover_options(skip_direct_path: bool) -> CoverOptions {
    CoverOptions {
        direct_path: !skip_direct_path,
        ..CoverOptions::default()
    }
}

fn run(command: &Command) -> Result<Report, Failure> {
    Ok(match command {
        Command::Genus(args) => {
            let ws = args.system()?;
            Report::Genus(GenusReport {
                weights: ws.weights().to_vec(),
                degree: ws.degree(),
                genus: ws.genus()?,
                positive_genus_bound: ws.positive_genus_bound_check()?,
            })
        }
        Command::Link(args) => Report::Link(link_invariants(&args.system()?)?),
        Command::Cover {
            system,
            k,
            skip_direct_path,
            diagnostic,
        } => {
            let ws = system.system()?;
            if *diagnostic {
                Report::Diagnostic(cover_diagnostic(&ws, *k)?)
            } else {
                Report::Cover(build_cover_with(&ws, *k, &cover_options(*skip_direct_path))?)
            }
        }
        Command::Realize {
            k,
            prime,
            skip_direct_path,
        } => Report::Realize(realize_with(*k, *prime, &cover_options(*skip_direct_path))?),
        Command::SmaleEnum { k } => {
            if *k == 0 {
                return Err(Failure::Input("k must be positive".into()));
            }
            Report::Smale(SmaleReport {
                k: *k,
                unique: is_unique_realization(*k),
                candidates: smale_decompositions(*k),
            })
        }
        Command::Primes { limit } => {
            check_bound("limit", *limit, MAX_PRIME_LIMIT)?;
            Report::Primes(PrimesReport {
                limit: *limit,
                primes: primes_4l_minus_1(*limit),
            })
        }
        Command::Search { genus, max_degree } => {
            check_bound("max degree", *max_degree, MAX_SEARCH_DEGREE)?;
            Report::Search(SearchReport {
                genus: *genus,
                max_degree: *max_degree,
                systems: search_weight_systems(*genus, *max_degree),
            })
        }
        Command::Verify { max_degree, max_k } => {
            check_bound("max degree", *max_degree, MAX_VERIFY_DEGREE)?;
            check_bound("max k", *max_k, MAX_VERIFY_K)?;
            Report::Verify(verify(&VerifyConfig {
                max_degree: *max_degree,
                max_k: *max_k,
                ..VerifyConfig::default()
            }))
        }
    })
}

fn link_text(out: &mut String, label: &str, inv: &LinkInvariants) {
    let _ = writeln!(out, "{label}: {}", inv.system());
    let _ = writeln!(out, "  divisor: {}", inv.divisor());
    let _ = writeln!(out, "  {}: {}", inv.betti_label(), inv.multiplicity_of_unity());
    if let Some(g) = inv.genus() {
        let _ = writeln!(out, "  genus: {g}");
    }
    match inv.char_poly() {
        Some(p) => {
            let _ = writeln!(out, "  delta: {p}");
        }
        None => {
            let _ = writeln!(out, "  delta: (degree {} not expanded)", inv.divisor().degree());
        }
    }
    if let Some(v) = inv.delta_at_one() {
        let _ = writeln!(out, "  delta(1): {v}");
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Genus(r) => {
            let ws = r.weights.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            let _ = writeln!(out, "({ws}; {}): genus {}", r.degree, r.genus);
        }
        Report::Link(inv) => link_text(&mut out, "link", inv),
        Report::Cover(c) => {
            link_text(&mut out, "base", c.base());
            link_text(&mut out, &format!("cover (k = {})", c.k()), c.invariants());
            let check = if c.direct_path_checked() { "agree" } else { "skipped" };
            let _ = writeln!(out, "direct path: {check}");
            let _ = writeln!(out, "|H2| = {}", c.h2_order());
        }
        Report::Diagnostic(d) => {
            let _ = writeln!(out, "cover (k = {}): {}", d.k, d.cover);
            let _ = writeln!(out, "  coprime: {}", d.coprime);
            let _ = writeln!(out, "  divisor: {}", d.divisor);
            match d.b2 {
                Some(b2) => {
                    let _ = writeln!(out, "  b2: {b2}");
                }
                None => {
                    let _ = writeln!(out, "  b2: pole at t = 1");
                }
            }
            if let Some(v) = &d.delta_at_one {
                let _ = writeln!(out, "  delta(1): {v}");
            }
        }
        Report::Realize(c) => {
            let _ = writeln!(out, "k = {}, p = {}", c.k(), c.chosen_p());
            let _ = writeln!(out, "base: {}", c.family().system());
            let _ = writeln!(out, "cover: {}", c.cover().cover_system());
            let _ = writeln!(out, "|H2| = {}, b2 = {}", c.h2_order(), c.cover().b2());
            if c.group_undetermined() {
                let _ = writeln!(out, "candidates:");
                for m in c.candidates() {
                    let _ = writeln!(out, "  {m}");
                }
            } else {
                let _ = writeln!(out, "manifold: {}", c.candidates()[0]);
            }
        }
        Report::Smale(r) => {
            for m in &r.candidates {
                let _ = writeln!(out, "{m}");
            }
        }
        Report::Primes(r) => {
            let ps = r.primes.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "{ps}");
        }
        Report::Search(r) => {
            for ws in &r.systems {
                let _ = writeln!(out, "{ws}");
            }
        }
        Report::Verify(r) => {
            let _ = writeln!(out, "grid: {} systems", r.grid_size);
            for p in &r.properties {
                let status = if p.failed == 0 { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{status} {}: {} passed, {} failed, {} excluded",
                    p.name, p.passed, p.failed, p.excluded
                );
                for f in &p.failures {
                    let _ = writeln!(out, "  {f}");
                }
            }
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            return ExitCode::from(2);
        }
    };

    let rendered = match cli.format {
        Format::Json => match serde_json::to_string_pretty(&report) {
            Ok(s) => s + "\n",
            Err(e) => {
                eprintln!("internal error: {e}");
                return ExitCode::from(2);
            }
        },
        Format::Text => render_text(&report),
    };
    print!("{rendered}");

    if let Report::Verify(r) = &report {
        if !r.all_passed() {
            eprintln!("verification failed");
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}
