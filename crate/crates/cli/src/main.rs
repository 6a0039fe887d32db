//! Command-line front end: validate wedge-map documents, compute invariant
//! tables, and scan companion-map families.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 structural validation
//! error, 3 realizability obstruction failure, 4 internal cross-check
//! disagreement (formula paths diverging would indicate a bug and is never
//! expected). Results go to stdout, diagnostics to stderr.

mod doc;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lefwedge::invariants;
use lefwedge::numtheory::is_prime;
use lefwedge::torus::{
    check_h1_realizability, corollary_nprime_scan, trace_period, ObstructionReport,
};
use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use doc::{MapSpecDocument, ValidatedSpec};
use report::*;

const DEFAULT_M_MAX: u64 = 24;

#[derive(Parser)]
#[command(
    name = "lefwedge",
    about = "Exact Lefschetz numbers, zeta functions, Dold coefficients and algebraic periods \
             for self-maps of wedge sums",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a wedge-map document: schema, dimensions, and (for wedges of
    /// tori) the realizability obstruction on the degree-1 matrix
    Validate {
        /// Path to a wedge-map/1 JSON document
        file: PathBuf,
    },
    /// Compute invariant tables for a wedge-map document
    Invariants {
        /// Path to a wedge-map/1 JSON document
        file: PathBuf,
        /// Lefschetz numbers L(f^m) for m = 1..=M
        #[arg(long, value_name = "M")]
        lefschetz: Option<u64>,
        /// Dold coefficients for m = 1..=M
        #[arg(long, value_name = "M")]
        dold: Option<u64>,
        /// Lefschetz zeta function in canonical rational form
        #[arg(long)]
        zeta: bool,
        /// Algebraic periods up to M
        #[arg(long, value_name = "M")]
        aper: Option<u64>,
        /// All tables up to M
        #[arg(long, value_name = "M")]
        all: Option<u64>,
        /// Emit a wedge-result/1 JSON document (integers as decimal strings)
        #[arg(long)]
        json: bool,
    },
    /// Scan Dold coefficients of cyclic wedges of companion maps with
    /// characteristic polynomial t^n - c
    ScanGc {
        /// Torus dimension n
        #[arg(long)]
        n: usize,
        /// Companion constants, one per summand or a single shared value
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<i64>,
        /// Number of summands in the wedge
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Largest iterate to scan
        #[arg(long, default_value_t = 24)]
        max: u64,
        /// Emit JSON (integers as decimal strings)
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            // help and version leave through the error path with success
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let outcome = match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Invariants {
            file,
            lefschetz,
            dold,
            zeta,
            aper,
            all,
            json,
        } => cmd_invariants(&file, lefschetz, dold, zeta, aper, all, json),
        Command::ScanGc { n, c, s, max, json } => cmd_scan_gc(n, &c, s, max, json),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &Path) -> Result<(MapSpecDocument, String), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(1, format!("cannot read {}: {e}", path.display())))?;
    let digest = format!("sha256:{:x}", Sha256::digest(text.as_bytes()));
    let doc = MapSpecDocument::parse(&text)
        .map_err(|e| Failure::new(1, format!("cannot parse {}: {e}", path.display())))?;
    Ok((doc, digest))
}

fn validate_spec(doc: &MapSpecDocument) -> Result<ValidatedSpec, Failure> {
    doc.validate().map_err(|e| Failure::new(2, e.to_string()))
}

/// Runs the obstruction check when the wedge is fully toral.
fn obstruction_gate(spec: &ValidatedSpec) -> Result<Option<ObstructionReport>, Failure> {
    let Some(dims) = &spec.toral_dims else {
        return Ok(None);
    };
    if spec.wedge.max_degree() == 0 {
        return Ok(None);
    }
    let report = check_h1_realizability(spec.wedge.assembled(1), dims)
        .map_err(|e| Failure::new(2, e.to_string()))?;
    Ok(Some(report))
}

fn cmd_validate(file: &Path) -> Result<(), Failure> {
    let (doc, _digest) = load(file)?;
    let spec = validate_spec(&doc)?;
    let structure = structure_json(&spec.wedge, &spec.wedge.classify());
    match obstruction_gate(&spec)? {
        Some(ObstructionReport::Fail { witness }) => {
            println!("obstruction: FAIL - {}", describe_witness(&witness));
            println!("no continuous map on this wedge of tori induces the given degree-1 matrix");
            Err(Failure::new(3, "realizability obstruction failed"))
        }
        Some(ObstructionReport::Pass { .. }) => {
            println!("valid: {}", describe_structure(&structure));
            println!("obstruction: pass");
            for w in known_input_warnings(&spec.wedge) {
                eprintln!("note: {w}");
            }
            Ok(())
        }
        None => {
            println!("valid: {}", describe_structure(&structure));
            Ok(())
        }
    }
}

fn cmd_invariants(
    file: &Path,
    lefschetz: Option<u64>,
    dold: Option<u64>,
    zeta: bool,
    aper: Option<u64>,
    all: Option<u64>,
    json: bool,
) -> Result<(), Failure> {
    let (doc, digest) = load(file)?;
    let spec = validate_spec(&doc)?;
    let obstruction = match obstruction_gate(&spec)? {
        Some(ObstructionReport::Fail { witness }) => {
            return Err(Failure::new(
                3,
                format!(
                    "realizability obstruction failed: {}",
                    describe_witness(&witness)
                ),
            ));
        }
        other => other,
    };
    let w = &spec.wedge;

    let no_flags = lefschetz.is_none() && dold.is_none() && !zeta && aper.is_none();
    let all_m = all.or(if no_flags { Some(DEFAULT_M_MAX) } else { None });
    let want_lefschetz = lefschetz.or(all_m);
    let want_dold = dold.or(all_m);
    let want_zeta = zeta || all_m.is_some();
    let want_aper = aper.or(all_m);

    // both computation paths always run; disagreement is exit code 4
    let check_depth = want_lefschetz
        .unwrap_or(0)
        .max(want_dold.unwrap_or(0))
        .max(want_aper.unwrap_or(0))
        .clamp(8, 24);
    invariants::cross_validate(w, check_depth).map_err(|e| Failure::new(4, e.to_string()))?;

    let structure = structure_json(w, &w.classify());
    let warnings = known_input_warnings(w);
    let lefschetz_table = want_lefschetz.map(|m| invariants::lefschetz_sequence(w, m));
    let dold_table = want_dold.map(|m| invariants::dold_sequence(w, m));
    let zeta_fn = want_zeta.then(|| invariants::zeta_det(w));
    let euler = want_zeta.then(|| invariants::euler_product_check(w, check_depth));
    if let Some(e) = &euler {
        if !e.matches {
            return Err(Failure::new(
                4,
                "euler product disagrees with the zeta function",
            ));
        }
    }
    let aper_set = want_aper.map(|m| invariants::aper_upto(w, m));
    let period = aper_set.as_ref().and_then(|_| trace_period(w));

    if json {
        let out = ResultDocument {
            format: "wedge-result/1".into(),
            input_digest: digest,
            structure,
            lefschetz: lefschetz_table.as_deref().map(bigint_strings),
            dold: dold_table.as_deref().map(bigint_strings),
            zeta: zeta_fn.as_ref().map(zeta_json),
            euler_exponents: euler.as_ref().map(euler_json),
            aper: aper_set.as_ref().map(|a| aper_json(a, period)),
            obstruction: obstruction.as_ref().map(obstruction_json),
            warnings,
        };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(());
    }

    println!("structure: {}", describe_structure(&structure));
    if let Some(table) = &lefschetz_table {
        println!("L(f^m), m = 1..{}:", table.len());
        println!("  {}", join_ints(table));
    }
    if let Some(table) = &dold_table {
        println!("dold(f^m), m = 1..{}:", table.len());
        println!("  {}", join_ints(table));
    }
    if let Some(z) = &zeta_fn {
        println!("zeta: {z}");
        if let Some(e) = &euler {
            println!("euler product: {}", euler_display(e));
        }
    }
    if let Some(a) = &aper_set {
        let members: Vec<String> = a.members.iter().map(|m| m.to_string()).collect();
        println!("APer up to {}: {{{}}}", a.m_max, members.join(", "));
        if let Some(p) = period {
            println!("quasi-unipotent in every degree; trace period divides {p}");
        }
    }
    for w in &warnings {
        eprintln!("note: {w}");
    }
    Ok(())
}

fn join_ints(values: &[BigInt]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_scan_gc(n: usize, c: &[i64], s: usize, max: u64, json: bool) -> Result<(), Failure> {
    if n == 0 || s == 0 || max == 0 {
        return Err(Failure::new(1, "n, s and max must be positive"));
    }
    if c.len() != 1 && c.len() != s {
        return Err(Failure::new(
            1,
            format!("expected 1 or {s} companion constants, got {}", c.len()),
        ));
    }
    let cs: Vec<BigInt> = c.iter().map(|&v| BigInt::from(v)).collect();
    let scan =
        corollary_nprime_scan(n, &cs, s, max).map_err(|e| Failure::new(2, e.to_string()))?;

    if json {
        #[derive(serde::Serialize)]
        struct ScanJson {
            format: String,
            n: usize,
            s: usize,
            m_max: u64,
            preconditions_ok: bool,
            precondition_notes: Vec<String>,
            wedge_dold: Vec<String>,
            single_dold: Vec<SingleJson>,
            single_all_negative: bool,
            certified_periods: Vec<u64>,
            observations: Vec<String>,
        }
        #[derive(serde::Serialize)]
        struct SingleJson {
            c: String,
            dold: Vec<String>,
        }
        let out = ScanJson {
            format: "wedge-scan/1".into(),
            n: scan.n,
            s: scan.s,
            m_max: scan.m_max,
            preconditions_ok: scan.preconditions_ok,
            precondition_notes: scan.precondition_notes.clone(),
            wedge_dold: bigint_strings(&scan.wedge_dold),
            single_dold: scan
                .single_dold
                .iter()
                .map(|(cv, table)| SingleJson {
                    c: cv.to_string(),
                    dold: bigint_strings(table),
                })
                .collect(),
            single_all_negative: scan.single_all_negative,
            certified_periods: scan.certified.clone(),
            observations: scan.observations.clone(),
        };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(());
    }

    println!(
        "companion scan: n = {}, s = {}, c = {:?}, m <= {}",
        scan.n, scan.s, c, scan.m_max
    );
    if !scan.preconditions_ok {
        for note in &scan.precondition_notes {
            println!("precondition: {note} (scan reported as observation only)");
        }
    } else if is_prime(n as u64) {
        println!("preconditions hold (n an odd prime, every c > 2)");
    }
    println!("dold(f^m) for the wedge, m = 1..{}:", scan.m_max);
    println!("  {}", join_ints(&scan.wedge_dold));
    for (cv, table) in &scan.single_dold {
        println!("dold(g^m) on one torus, c = {cv}:");
        println!("  {}", join_ints(table));
    }
    let negatives = scan
        .wedge_dold
        .iter()
        .filter(|v| v.sign() == num_bigint::Sign::Minus)
        .count();
    let zeros = scan
        .wedge_dold
        .iter()
        .filter(|v| v.sign() == num_bigint::Sign::NoSign)
        .count();
    println!(
        "signs: {negatives} negative, {zeros} zero, {} positive",
        scan.wedge_dold.len() - negatives - zeros
    );
    if !scan.certified.is_empty() {
        let list: Vec<String> = scan.certified.iter().map(|m| m.to_string()).collect();
        println!("certified algebraic periods: {{{}}}", list.join(", "));
    }
    for obs in &scan.observations {
        println!("observation: {obs}");
    }
    Ok(())
}
