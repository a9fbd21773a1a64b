use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use leibniz::classify::catalog_grid;
use leibniz::lattice::LatticeBudget;
use leibniz::{Error, FieldSpec, LeibnizAlgebra};
use leibniz_cli::report::{lattice_dump, structure_report, EngineChoice};
use leibniz_cli::verify::{self, Outcome, Selection, Target};
use leibniz_cli::{catalog, exit_code, format, EXIT_OK, EXIT_PARSE, EXIT_VIOLATION};

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact structure theory of finite-dimensional Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the left Leibniz identity on every basis triple.
    Validate {
        file: PathBuf,
        /// Read the table in the right Leibniz convention.
        #[arg(long)]
        right_leibniz: bool,
    },
    /// Print the structure report as JSON.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        engine: EngineChoice,
        /// Largest number of subspaces the lattice engine may scan.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        right_leibniz: bool,
        /// Include wall-clock timing (makes the output non-deterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Emit a catalog algebra in canonical file form.
    Catalog {
        /// Family name; see --list.
        name: Option<String>,
        /// Parameters as key=value.
        params: Vec<String>,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Build over Q, then reduce the table mod p.
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        /// List the families and their parameters.
        #[arg(long)]
        list: bool,
    },
    /// Run verifiers and print one JSON record per target and claim.
    Verify {
        /// A claim name, a group (jacobson, e-algebra, unique-ideal,
        /// extension, minimal) or `all`.
        claim: String,
        /// Algebra files, or `catalog:NAME[:key=value,...]`.
        targets: Vec<String>,
        /// Add every instance of the catalog grid.
        #[arg(long)]
        catalog: bool,
        /// Field for catalog targets.
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        budget: Option<u64>,
        /// Coordinates of x for the extension group, comma separated.
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        right_leibniz: bool,
    },
    /// Dump the subalgebra lattice of an algebra over GF(p) as JSON.
    Lattice {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        right_leibniz: bool,
    },
}

/// A failure already reported on stderr, carrying the exit status.
struct Exit(u8);

fn fail(e: &Error) -> Exit {
    eprintln!("error: {e}");
    if let Error::NonSplit { operator, .. } = e {
        eprintln!("operator: {operator}");
    }
    Exit(exit_code(e))
}

fn usage(msg: impl std::fmt::Display) -> Exit {
    eprintln!("error: {msg}");
    Exit(EXIT_PARSE)
}

fn load(path: &Path, right_leibniz: bool) -> Result<LeibnizAlgebra, Exit> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    format::parse(&text, right_leibniz).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn budget(max: Option<u64>) -> Result<LatticeBudget, Exit> {
    let d = LatticeBudget::default();
    LatticeBudget::new(max.unwrap_or(d.max_subspaces), d.max_seconds).map_err(|e| fail(&e))
}

fn field(text: &str) -> Result<FieldSpec, Exit> {
    catalog::parse_field(text).map_err(usage)
}

fn print_json(v: &serde_json::Value) {
    let text = serde_json::to_string_pretty(v).expect("json values serialize");
    writeln!(std::io::stdout().lock(), "{text}").ok();
}

fn validate(path: &Path, right_leibniz: bool) -> Result<u8, Exit> {
    let alg = load(path, right_leibniz)?;
    match alg.validate() {
        Ok(()) => {
            println!("ok: dim {} over {}, Leibniz identity holds", alg.dim(), alg.field());
            Ok(EXIT_OK)
        }
        Err(v) => {
            let l = alg.labels();
            let (i, j, k) = v.triple;
            println!(
                "violation at ({}, {}, {}): {}({}{}) = {} but ({}{}){} + {}({}{}) = {}",
                l[i], l[j], l[k], l[i], l[j], l[k], alg.describe(&v.lhs),
                l[i], l[j], l[k], l[j], l[i], l[k], alg.describe(&v.rhs)
            );
            Ok(EXIT_VIOLATION)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Exit> {
    match cli.command {
        Command::Validate { file, right_leibniz } => validate(&file, right_leibniz),
        Command::Report { file, engine, budget: max, right_leibniz, timing } => {
            let alg = load(&file, right_leibniz)?;
            let b = budget(max)?;
            let start = Instant::now();
            let mut report = structure_report(&alg, engine, &b).map_err(|e| fail(&e))?;
            if timing {
                report["timing_ms"] = serde_json::json!(start.elapsed().as_millis() as u64);
            }
            print_json(&report);
            Ok(EXIT_OK)
        }
        Command::Catalog { name, params, field: f, modulus, output, list } => {
            if list {
                for (name, params) in catalog::FAMILIES {
                    println!("{name:<18} {params}");
                }
                return Ok(EXIT_OK);
            }
            let name = name.ok_or_else(|| usage("a family name is required (see --list)"))?;
            let spec = catalog::family(&name, &params).map_err(|e| fail(&e))?;
            let f = field(&f)?;
            let alg = match modulus {
                Some(_) if !f.is_char_zero() => return Err(usage("--mod reduces a table over Q; drop --field")),
                Some(p) => {
                    let target = FieldSpec::prime(p).map_err(|e| fail(&e))?;
                    spec.build(FieldSpec::Rationals).and_then(|a| a.to_field(target))
                }
                None => spec.build(f),
            }
            .map_err(|e| fail(&e))?;
            let text = format::emit(&alg);
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => {
                    std::io::stdout().lock().write_all(text.as_bytes()).ok();
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { claim, targets, catalog: grid, field: f, budget: max, x, right_leibniz } => {
            let sel = Selection::parse(&claim).map_err(usage)?;
            let f = field(&f)?;
            let mut list = Vec::new();
            let mut skipped = Vec::new();
            for t in &targets {
                if let Some(rest) = t.strip_prefix("catalog:") {
                    let (name, params) = rest.split_once(':').unwrap_or((rest, ""));
                    let params: Vec<String> = params.split(',').filter(|p| !p.is_empty()).map(String::from).collect();
                    let spec = catalog::family(name, &params).map_err(|e| fail(&e))?;
                    list.push(Target::Catalog(Box::new(spec.instance(f).map_err(|e| fail(&e))?)));
                } else {
                    list.push(Target::File { name: t.clone(), algebra: load(Path::new(t), right_leibniz)? });
                }
            }
            if grid {
                for spec in catalog_grid() {
                    match spec.instance(f) {
                        Ok(inst) => list.push(Target::Catalog(Box::new(inst))),
                        Err(e) => skipped.push(verify::Record {
                            target: format!("{spec} over {f}"),
                            claim: "build".into(),
                            status: "not-applicable".into(),
                            detail: e.to_string(),
                        }),
                    }
                }
            }
            if list.is_empty() && skipped.is_empty() {
                return Err(usage("no targets: give files, catalog:NAME targets or --catalog"));
            }
            let opts = verify::Options { budget: budget(max)?, x };
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            let mut worst = Outcome::Ok;
            for r in &skipped {
                writeln!(out, "{}", serde_json::to_string(r).expect("records serialize")).ok();
            }
            for t in &list {
                let (records, outcome) = if let Err(v) = validate_target(t) {
                    let rec = verify::Record { target: t.name(), claim: "identity".into(), status: "fail".into(), detail: v };
                    (vec![rec], Outcome::Failed)
                } else {
                    verify::run(t, &sel, &opts)
                };
                worst = worst.min(outcome);
                for r in &records {
                    writeln!(out, "{}", serde_json::to_string(r).expect("records serialize")).ok();
                }
            }
            Ok(match worst {
                Outcome::Failed => EXIT_VIOLATION,
                Outcome::Budget => leibniz_cli::EXIT_BUDGET,
                Outcome::NonSplit => leibniz_cli::EXIT_NON_SPLIT,
                Outcome::Undecidable => leibniz_cli::EXIT_UNDECIDABLE,
                Outcome::Ok => EXIT_OK,
            })
        }
        Command::Lattice { file, budget: max, right_leibniz } => {
            let alg = load(&file, right_leibniz)?;
            let b = budget(max)?;
            print_json(&lattice_dump(&alg, &b).map_err(|e| fail(&e))?);
            Ok(EXIT_OK)
        }
    }
}

fn validate_target(t: &Target) -> Result<(), String> {
    match t {
        Target::File { algebra, .. } => algebra.validate().map_err(|v| v.to_string()),
        Target::Catalog(_) => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) | Err(Exit(code)) => ExitCode::from(code),
    }
}
