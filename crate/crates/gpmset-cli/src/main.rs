//! `gpmset` — decide unitary (U) and unitary-conjugate (UC) equivalence of
//! generalized Pauli matrix sets, enumerate their equivalence classes, and
//! reproduce the reference classification tables.
//!
//! Exit codes: 0 success (or "equivalent"), 1 inequivalent / failed check,
//! 2 usage or parse error, 3 resource cap exceeded.

mod parse;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gpmset::catalog::{golden_rows, table_content, table_spec, to_csv_row};
use gpmset::classify::{
    classify_all, decide_u, decide_uc, u_class, uc_orbit, ClassifyOptions, Orbit, Partition,
};
use gpmset::gpm::GpmSet;
use gpmset::oracle::verification_suite;
use gpmset::Error;

const EXIT_INEQUIVALENT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gpmset",
    version,
    about = "Unitary-equivalence classification of generalized Pauli matrix sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecideKind {
    /// Unitary-conjugate equivalence of two standard sets.
    Uc,
    /// Unitary equivalence of two sets.
    U,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ascending essential power vector of a set
    Power {
        /// Dimension (optional when SET is a named alias)
        #[arg(long)]
        d: Option<u32>,
        /// Set literal like "{(0,0),(0,1)}" or "{I,Z,X^2Z}", or an alias
        /// like C3 or K
        set: String,
    },
    /// List all standard sets UC-equivalent to a standard set
    UcOrbit {
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print only the number of sets
        #[arg(long)]
        count_only: bool,
        /// Write the output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        set: String,
    },
    /// List all standard sets U-equivalent to a set
    UClass {
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        set: String,
    },
    /// Decide whether two sets are equivalent
    Decide {
        #[arg(value_enum)]
        kind: DecideKind,
        #[arg(long)]
        d: Option<u32>,
        set_a: String,
        set_b: String,
    },
    /// Partition all standard n-sets of a dimension into equivalence classes
    Classify {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
        /// Worker threads; the result is identical for any count
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Refuse to enumerate more standard sets than this
        #[arg(long, default_value_t = 10_000_000)]
        cap: u64,
        /// Include the full member list of every class
        #[arg(long)]
        members: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a reference table (1..=10), recomputed from its generator
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=10))]
        id: u8,
        /// Diff the recomputed content against the shipped golden file
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the numeric verification suite
    Verify,
}

struct Failure {
    code: u8,
    message: String,
}

fn lib_err(e: Error) -> Failure {
    let code = match e {
        Error::ResourceCap { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn parse_err(e: parse::ParseError) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    }
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => fs::write(path, payload).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
    }
}

fn orbit_payload(orbit: &Orbit, format: Format, count_only: bool) -> String {
    if count_only && format != Format::Json {
        return format!("{}\n", orbit.len());
    }
    match format {
        Format::Text => {
            let mut s = String::new();
            for set in orbit.sets() {
                let _ = writeln!(s, "{set}");
            }
            let _ = writeln!(s, "count: {}", orbit.len());
            s
        }
        Format::Csv => {
            let mut s = String::new();
            for set in orbit.sets() {
                let _ = writeln!(s, "{}", to_csv_row(set));
            }
            s
        }
        Format::Json => {
            let value = serde_json::json!({
                "d": orbit.d(),
                "count": orbit.len(),
                "sets": if count_only {
                    serde_json::Value::Null
                } else {
                    orbit.sets().iter().map(|s| s.to_string()).collect()
                },
            });
            format!("{value:#}\n")
        }
    }
}

fn partition_payload(p: &Partition, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = String::new();
            for (i, class) in p.classes.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "class {:>2}: {}  standard={} total={}",
                    i + 1,
                    class.representative,
                    class.size_standard,
                    class.size_total
                );
                if let Some(members) = &class.members {
                    for m in members {
                        let _ = writeln!(s, "    {m}");
                    }
                }
            }
            let _ = writeln!(
                s,
                "classes: {}  standard sets: {}  total sets: {}",
                p.classes.len(),
                p.total_standard(),
                p.total_sets()
            );
            s
        }
        Format::Csv => {
            let mut s = String::from("representative,size_standard,size_total\n");
            for class in &p.classes {
                let _ = writeln!(
                    s,
                    "{},{},{}",
                    to_csv_row(&class.representative),
                    class.size_standard,
                    class.size_total
                );
            }
            s
        }
        Format::Json => {
            let classes: Vec<serde_json::Value> = p
                .classes
                .iter()
                .map(|class| {
                    let mut obj = serde_json::json!({
                        "representative": class.representative.to_string(),
                        "size": class.size_standard,
                        "size_total": class.size_total,
                    });
                    if let Some(members) = &class.members {
                        obj["members"] = members.iter().map(|m| m.to_string()).collect();
                    }
                    obj
                })
                .collect();
            let value = serde_json::json!({
                "d": p.d,
                "n": p.n,
                "classes": classes,
            });
            format!("{value:#}\n")
        }
    }
}

/// Standardize when needed, warning on the diagnostic stream.
fn standardized_for_orbit(set: GpmSet, what: &str) -> GpmSet {
    if set.is_standard() {
        set
    } else {
        let std_set = set.standardize_all().swap_remove(0);
        eprintln!(
            "warning: {what} {set} is not standard; using its standardization {std_set}"
        );
        std_set
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Power { d, set } => {
            let set = parse::parse_set_arg(&set, d).map_err(parse_err)?;
            println!("{}", set.power_vector());
            Ok(0)
        }
        Command::UcOrbit {
            d,
            format,
            count_only,
            out,
            set,
        } => {
            let set = parse::parse_set_arg(&set, d).map_err(parse_err)?;
            let set = standardized_for_orbit(set, "input set");
            let orbit = uc_orbit(&set).map_err(lib_err)?;
            emit(&out, &orbit_payload(&orbit, format, count_only))?;
            Ok(0)
        }
        Command::UClass {
            d,
            format,
            count_only,
            out,
            set,
        } => {
            let set = parse::parse_set_arg(&set, d).map_err(parse_err)?;
            let orbit = u_class(&set).map_err(lib_err)?;
            emit(&out, &orbit_payload(&orbit, format, count_only))?;
            Ok(0)
        }
        Command::Decide {
            kind,
            d,
            set_a,
            set_b,
        } => {
            // An alias on either side fixes the dimension for a literal on
            // the other.
            let d = d
                .or_else(|| parse::alias_dimension(&set_a))
                .or_else(|| parse::alias_dimension(&set_b));
            let a = parse::parse_set_arg(&set_a, d).map_err(parse_err)?;
            let b = parse::parse_set_arg(&set_b, d).map_err(parse_err)?;
            let equivalent = match kind {
                DecideKind::Uc => {
                    let a = standardized_for_orbit(a.clone(), "first set");
                    let b = standardized_for_orbit(b.clone(), "second set");
                    let eq = decide_uc(&a, &b).map_err(lib_err)?;
                    if !eq && a.power_vector() != b.power_vector() {
                        println!(
                            "power vectors differ: {} vs {}",
                            a.power_vector(),
                            b.power_vector()
                        );
                    }
                    eq
                }
                DecideKind::U => decide_u(&a, &b).map_err(lib_err)?,
            };
            if equivalent {
                println!("equivalent");
                Ok(0)
            } else {
                println!("inequivalent");
                Ok(EXIT_INEQUIVALENT)
            }
        }
        Command::Classify {
            d,
            n,
            workers,
            cap,
            members,
            format,
            out,
        } => {
            let options = ClassifyOptions {
                cap,
                workers,
                with_members: members,
            };
            let partition = classify_all(d, n, &options).map_err(lib_err)?;
            emit(&out, &partition_payload(&partition, format))?;
            Ok(0)
        }
        Command::Tables { id, check, out } => {
            let computed = table_content(id).map_err(lib_err)?;
            if check {
                let golden = golden_rows(id).map_err(lib_err)?;
                let title = table_spec(id).map_err(lib_err)?.title;
                if computed == golden {
                    println!("table {id}: OK ({} rows) — {title}", computed.len());
                    Ok(0)
                } else {
                    let mut diffs = 0usize;
                    for (i, (c, g)) in computed.iter().zip(golden.iter()).enumerate() {
                        if c != g {
                            println!("row {i}: computed {c} vs golden {g}");
                            diffs += 1;
                        }
                    }
                    if computed.len() != golden.len() {
                        println!(
                            "row count: computed {} vs golden {}",
                            computed.len(),
                            golden.len()
                        );
                        diffs += 1;
                    }
                    println!("table {id}: {diffs} differences");
                    Ok(EXIT_INEQUIVALENT)
                }
            } else {
                let mut payload = String::new();
                for set in &computed {
                    let _ = writeln!(payload, "{}", to_csv_row(set));
                }
                emit(&out, &payload)?;
                Ok(0)
            }
        }
        Command::Verify => {
            let reports = verification_suite();
            let mut failures = 0usize;
            for r in &reports {
                let status = if r.passed { "ok  " } else { "FAIL" };
                println!("{status} {} — {}", r.name, r.detail);
                if !r.passed {
                    failures += 1;
                }
            }
            println!("{} checks, {} failures", reports.len(), failures);
            Ok(if failures == 0 { 0 } else { EXIT_INEQUIVALENT })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
