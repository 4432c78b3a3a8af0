//! Thin command-line front end: `list`, `verify`, `sample`, `classify`,
//! `search`. All actual work lives in the library; this binary only parses
//! arguments, resolves tolerances (flag > `ZMC_TOL` env > built-in default),
//! opens files, and maps errors to exit codes:
//!
//! * 0 — success / all checks passed
//! * 1 — a verification check or mesh audit failed
//! * 2 — usage error or unknown entry
//! * 3 — numeric failure (no convergence, empty level set, I/O)

use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zmc_separable::catalog;
use zmc_separable::constraints;
use zmc_separable::mesh::{extract, MeshConfig};
use zmc_separable::report::{self, VerifyConfig};
use zmc_separable::types::{CaseK, CoeffRow, ConstantsTriple, ZmcError, LIGHTLIKE_TOL};

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(
    name = "zmc",
    version,
    about = "Separable zero-mean-curvature surfaces in Lorentz-Minkowski 3-space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog: name, section key, causal class, implicit equation.
    List,
    /// Run the verification battery on one entry (default: whole catalog).
    Verify {
        /// Entry name, alias, or section key.
        name: Option<String>,
        /// Verify every catalog entry explicitly.
        #[arg(long)]
        all: bool,
        /// Lightlike-margin tolerance (also settable via env ZMC_TOL).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Triangulate an entry's level set and write a mesh file.
    Sample {
        /// Entry name, alias, or section key.
        name: String,
        /// Grid cells per axis (minimum 8).
        #[arg(long, default_value_t = 96)]
        res: usize,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = SampleFormat::Obj)]
        format: SampleFormat,
    },
    /// Classify on-surface points over an (x, y) grid and write a CSV table.
    Classify {
        /// Entry name, alias, or section key.
        name: String,
        /// Grid points per axis (must be positive).
        #[arg(long, default_value_t = 96)]
        res: usize,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve the coefficient constraint system from a seed, holding chosen
    /// constants fixed, and print the resulting record.
    Search {
        /// Profile family: the sign of the common third-derivative ratio.
        #[arg(long, value_enum)]
        case: SearchCase,
        /// JSON file holding the nine seed values
        /// [a1,b1,c1,a2,b2,c2,a3,b3,c3].
        #[arg(long)]
        seed: PathBuf,
        /// Comma-separated constants to freeze, e.g. "a1,b1,c3" (at least 3).
        #[arg(long)]
        freeze: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleFormat {
    Obj,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchCase {
    Pos,
    Neg,
    Zero,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::List => cmd_list(),
        Command::Verify { name, all, tol } => cmd_verify(name, all, resolve_tol(tol)),
        Command::Sample { name, res, out, format } => {
            cmd_sample(&name, res, &out, format, resolve_tol(None))
        }
        Command::Classify { name, res, out } => cmd_classify(&name, res, &out, resolve_tol(None)),
        Command::Search { case, seed, freeze } => cmd_search(case, &seed, &freeze),
    };
    ExitCode::from(code)
}

/// Tolerance resolution: explicit flag, then the ZMC_TOL environment
/// variable, then the built-in default.
fn resolve_tol(flag: Option<f64>) -> f64 {
    if let Some(t) = flag {
        return t;
    }
    match std::env::var("ZMC_TOL") {
        Ok(s) => match s.parse::<f64>() {
            Ok(t) if t > 0.0 => t,
            _ => {
                eprintln!("warning: ignoring unparsable ZMC_TOL={s:?}");
                LIGHTLIKE_TOL
            }
        },
        Err(_) => LIGHTLIKE_TOL,
    }
}

fn cmd_list() -> u8 {
    for e in catalog::entries() {
        println!(
            "{:24} {:10} {:10} {}",
            e.name,
            e.section_ref,
            e.expected_class.name(),
            e.implicit_string
        );
    }
    EXIT_OK
}

fn cmd_verify(name: Option<String>, all: bool, tol: f64) -> u8 {
    let cfg = VerifyConfig { lightlike_tol: tol, ..Default::default() };
    let reports = match (&name, all) {
        (Some(n), false) => match catalog::find(n) {
            None => {
                eprintln!("error: unknown entry `{n}`");
                return EXIT_USAGE;
            }
            Some(e) => vec![report::check_entry(e, &cfg)],
        },
        _ => report::check_all(&cfg),
    };

    let mut all_passed = true;
    for r in &reports {
        println!("{} ({})", r.entry, r.section_ref);
        for c in &r.checks {
            println!(
                "  {:28} {:>12.3e}  tol {:>8.0e}  {}",
                c.check,
                c.residual,
                c.tolerance,
                if c.passed { "PASS" } else { "FAIL" }
            );
            if !c.passed {
                all_passed = false;
                println!("    {}", c.detail);
            }
        }
    }
    let n = reports.len();
    println!("{}: {n} entr{} checked", if all_passed { "PASS" } else { "FAIL" }, if n == 1 { "y" } else { "ies" });
    if all_passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn cmd_sample(name: &str, res: usize, out: &PathBuf, format: SampleFormat, tol: f64) -> u8 {
    if res < 8 {
        eprintln!("error: --res must be at least 8 (got {res})");
        return EXIT_USAGE;
    }
    let Some(entry) = catalog::find(name) else {
        eprintln!("error: unknown entry `{name}`");
        return EXIT_USAGE;
    };
    let surface = match entry.surface() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_NUMERIC;
        }
    };
    let mesh = match extract(&surface, &MeshConfig { resolution: res, lightlike_tol: tol }) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_NUMERIC;
        }
    };

    let file = match fs::File::create(out) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: cannot create {}: {e}", out.display());
            return EXIT_NUMERIC;
        }
    };
    let mut w = BufWriter::new(file);
    let written = match format {
        SampleFormat::Obj => mesh.write_obj(&mut w),
        SampleFormat::Csv => mesh.write_csv(&mut w),
    };
    if let Err(e) = written.and_then(|()| w.flush()) {
        eprintln!("error: writing {}: {e}", out.display());
        return EXIT_NUMERIC;
    }

    match mesh.audit(&surface) {
        Ok(audit) => {
            println!(
                "{}: {} vertices, {} triangles -> {} (audit worst |F| ratio {:.3})",
                entry.name,
                mesh.vertices.len(),
                mesh.triangles.len(),
                out.display(),
                audit.worst_ratio
            );
            if !audit.passes() {
                eprintln!("error: mesh audit failed (worst ratio {:.3} > 1)", audit.worst_ratio);
                return EXIT_CHECK_FAILED;
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: mesh audit failed to evaluate: {e}");
            EXIT_NUMERIC
        }
    }
}

fn cmd_classify(name: &str, res: usize, out: &PathBuf, tol: f64) -> u8 {
    if res == 0 {
        eprintln!("error: --res must be positive");
        return EXIT_USAGE;
    }
    let Some(entry) = catalog::find(name) else {
        eprintln!("error: unknown entry `{name}`");
        return EXIT_USAGE;
    };
    let surface = match entry.surface() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_NUMERIC;
        }
    };
    let file = match fs::File::create(out) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: cannot create {}: {e}", out.display());
            return EXIT_NUMERIC;
        }
    };
    let mut w = BufWriter::new(file);
    match report::classification_csv(&surface, res, tol, &mut w).and_then(|rows| {
        w.flush()?;
        Ok(rows)
    }) {
        Ok(rows) => {
            println!("{}: {rows} on-surface rows -> {}", entry.name, out.display());
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_NUMERIC
        }
    }
}

/// Freeze-spec slot names in packed order.
const SLOT_NAMES: [&str; 9] = ["a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3"];

fn parse_freeze(spec: &str) -> Result<[bool; 9], String> {
    let mut mask = [false; 9];
    for token in spec.split(',') {
        let t = token.trim().to_ascii_lowercase();
        if t.is_empty() {
            continue;
        }
        match SLOT_NAMES.iter().position(|&s| s == t) {
            Some(i) => mask[i] = true,
            None => return Err(format!("unknown constant `{t}` (expected one of {SLOT_NAMES:?})")),
        }
    }
    Ok(mask)
}

fn cmd_search(case: SearchCase, seed_path: &PathBuf, freeze: &str) -> u8 {
    let case = match case {
        SearchCase::Pos => CaseK::positive(),
        SearchCase::Neg => CaseK::negative(),
        SearchCase::Zero => CaseK::Zero,
    };
    let text = match fs::read_to_string(seed_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", seed_path.display());
            return EXIT_USAGE;
        }
    };
    let vals: Vec<f64> = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: seed file must be a JSON array of 9 numbers: {e}");
            return EXIT_USAGE;
        }
    };
    if vals.len() != 9 {
        eprintln!("error: seed file must hold exactly 9 values, got {}", vals.len());
        return EXIT_USAGE;
    }
    let mask = match parse_freeze(freeze) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };

    let seed = ConstantsTriple::new(
        case,
        [
            CoeffRow::new(vals[0], vals[1], vals[2]),
            CoeffRow::new(vals[3], vals[4], vals[5]),
            CoeffRow::new(vals[6], vals[7], vals[8]),
        ],
    );
    match constraints::solve_from_seed(case, &seed, mask) {
        Ok(c) => {
            if c.case == CaseK::Zero && c.rows.iter().all(|r| r.c.abs() < 1e-12) {
                eprintln!(
                    "warning: every quadratic coefficient vanished — this is the rotational \
                     surface family (linear profile curvature), outside the separable catalog"
                );
            }
            let k = match c.case {
                CaseK::Positive { k } => format!("positive k={k}"),
                CaseK::Negative { k } => format!("negative k={k}"),
                CaseK::Zero => "zero".to_string(),
            };
            for (axis, row) in ["X", "Y", "Z"].iter().zip(&c.rows) {
                println!("{axis}: a={:+.12e} b={:+.12e} c={:+.12e}", row.a, row.b, row.c);
            }
            println!("record: {k}|({:.12e},{:.12e},{:.12e})|({:.12e},{:.12e},{:.12e})|({:.12e},{:.12e},{:.12e})",
                c.rows[0].a, c.rows[0].b, c.rows[0].c,
                c.rows[1].a, c.rows[1].b, c.rows[1].c,
                c.rows[2].a, c.rows[2].b, c.rows[2].c);
            println!(
                "residual max-norm: {:.3e}",
                constraints::residual_max_norm(&c)
            );
            match serde_json::to_string(&c) {
                Ok(j) => println!("json: {j}"),
                Err(e) => eprintln!("warning: could not serialize record: {e}"),
            }
            EXIT_OK
        }
        Err(e @ ZmcError::NoConvergence { .. }) => {
            eprintln!("error: {e}");
            EXIT_NUMERIC
        }
        Err(e @ ZmcError::InvalidConstants(_)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_NUMERIC
        }
    }
}
