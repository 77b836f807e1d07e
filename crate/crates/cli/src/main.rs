//! `lunasmooth`: command-line front end.
//!
//! Exit codes: 0 valid or smooth, 1 I/O or parse error, 2 invalid input,
//! 3 valid but not smooth.

mod report;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use lunasmooth::catalog::{entries, entry, instantiate, Params};
use lunasmooth::datum::{decompose, validate_colored_cone, HomogeneousSphericalDatum, SphericalSystem};
use lunasmooth::diagram::luna_diagram;
use lunasmooth::document::{Document, EntryRef};
use lunasmooth::error::Error;
use lunasmooth::roots::SimpleRootId;
use lunasmooth::smooth::{check_condition1, is_smooth};

#[derive(Parser)]
#[command(name = "lunasmooth", version, about = "Smoothness of simple spherical varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a datum (and its colored cone, if present).
    Validate { path: PathBuf },
    /// Decide smoothness of the simple embedding in the document.
    Smooth {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        explain: bool,
    },
    /// Check local factoriality only.
    Factorial {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Localize at a set of simple roots, e.g. `--at 1.1,1.2,2.1`.
    Localize {
        path: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<String>,
    },
    /// Spherical closure, as a system document.
    Closure { path: PathBuf },
    /// Split a spherical system (or the closure of a datum) into indecomposable
    /// factors; prints one document per factor.
    Decompose { path: PathBuf },
    /// The catalog of multiplicity-free spaces.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Render the Luna diagram of a document.
    Diagram {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        id: usize,
        /// Parameter assignment such as `n=3` or `n'=4`; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

/// An error with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Document(_)) { 1 } else { 2 };
        Failure { code, error: e.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure { code: 2, error: anyhow::anyhow!(msg.into()) }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Document::parse(&text).map_err(|e| Failure { code: 1, error: anyhow::anyhow!("{}: {e}", path.display()) })
}

/// The datum together with marks, if the document carries any.
fn load_datum(path: &Path) -> Result<(Document, HomogeneousSphericalDatum), Failure> {
    let doc = load(path)?;
    let d = doc.datum();
    let findings = d.validation_findings();
    if !findings.is_empty() {
        for f in &findings {
            eprintln!("invalid: {f}");
        }
        return Err(invalid(format!("{} findings", findings.len())));
    }
    Ok((doc, d))
}

/// The datum read as a system: Sigma with D^a pairings, no closure.
fn as_system(d: &HomogeneousSphericalDatum) -> SphericalSystem {
    SphericalSystem {
        root_system: d.root_system.clone(),
        sigma: d.sigma.iter().map(|g| g.coeffs.clone()).collect(),
        s_p: d.s_p.clone(),
        d_a: d
            .d_a
            .iter()
            .map(|c| {
                let p = d.sigma.iter().map(|g| i64::try_from(c.rho.dot(&g.m_coords)).unwrap_or(i64::MAX)).collect();
                (c.label.clone(), p)
            })
            .collect(),
    }
}

fn system_doc(system: SphericalSystem) -> Document {
    Document::System { system, marked: None, entry: None }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate { path } => {
            let (doc, d) = load_datum(&path)?;
            if let Some(c) = doc.cone() {
                let findings = validate_colored_cone(&d, c)?;
                if !findings.is_empty() {
                    for f in &findings {
                        eprintln!("invalid cone: {f}");
                    }
                    return Err(invalid(format!("{} cone findings", findings.len())));
                }
            }
            println!("valid: {}", d.root_system.describe());
            Ok(0)
        }
        Command::Smooth { path, json, explain } => {
            let (doc, d) = load_datum(&path)?;
            let cone = doc.cone().ok_or_else(|| invalid("the document has no colored_cone"))?;
            let r = is_smooth(&d, cone)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report::json(&r)).expect("json"));
            } else {
                print!("{}", report::text(&r, explain));
            }
            Ok(if r.verdict { 0 } else { 3 })
        }
        Command::Factorial { path, json } => {
            let (doc, d) = load_datum(&path)?;
            let cone = doc.cone().ok_or_else(|| invalid("the document has no colored_cone"))?;
            let r = check_condition1(&d, cone)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report::factorial_json(&r)).expect("json"));
            } else {
                print!("{}", report::factorial_text(&r));
            }
            Ok(if r.pass { 0 } else { 3 })
        }
        Command::Localize { path, at } => {
            let (_, d) = load_datum(&path)?;
            let ids = at.iter().map(|s| s.trim().parse()).collect::<Result<BTreeSet<SimpleRootId>, _>>()?;
            let l = d.localize(&ids)?;
            print!("{}", Document::Datum { datum: l, cone: None }.to_json());
            Ok(0)
        }
        Command::Closure { path } => {
            let (_, d) = load_datum(&path)?;
            print!("{}", system_doc(d.spherical_closure()?).to_json());
            Ok(0)
        }
        Command::Decompose { path } => {
            let (doc, d) = load_datum(&path)?;
            let system = match doc {
                Document::System { system, .. } => system,
                Document::Datum { .. } => d.spherical_closure()?,
            };
            for part in decompose(&system)? {
                print!("{}", system_doc(part).to_json());
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::List } => {
            for e in entries() {
                let params = if e.params.is_empty() { "-".to_string() } else { e.params.join(", ") };
                println!("{:>2}  {:<45}  params: {:<7}  {}", e.id, e.description, params, e.domain);
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::Show { id, params, format } } => {
            let e = entry(id)?;
            let p: Params = if params.is_empty() {
                e.smallest_params(1).into_iter().next().unwrap_or_default()
            } else {
                params.join(",").parse().map_err(|e: String| invalid(format!("bad --param: {e}")))?
            };
            let inst = instantiate(id, &p)?;
            match format {
                Format::Json => {
                    let entry = Some(EntryRef { id, params: p.to_string() });
                    print!("{}", Document::System { system: inst.system, marked: Some(inst.marked), entry }.to_json());
                }
                Format::Text => {
                    println!("entry {id}: {} [{p}]", e.description);
                    print!("{}", luna_diagram(&inst.system, &inst.marked)?.to_text());
                }
                Format::Svg => print!("{}", luna_diagram(&inst.system, &inst.marked)?.to_svg()),
            }
            Ok(0)
        }
        Command::Diagram { path, format } => {
            let (doc, d) = load_datum(&path)?;
            let (system, marked) = match doc {
                Document::System { system, marked, .. } => (system, marked.unwrap_or_default()),
                Document::Datum { .. } => (as_system(&d), BTreeSet::new()),
            };
            let diagram = luna_diagram(&system, &marked)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&diagram).expect("json")),
                Format::Text => print!("{}", diagram.to_text()),
                Format::Svg => print!("{}", diagram.to_svg()),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
