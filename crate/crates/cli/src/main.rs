//! `sbgdd`: construct, verify, and search Sarvate-Beam group divisible
//! designs from the command line.
//!
//! Exit codes are stable: 0 success, 1 verification failure, 2 the
//! parameters admit no design, 3 outside the implemented range, 4 bad
//! input or IO.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sb_assemble::{construct_with_manifest, AssembleError};
use sb_core::{
    admissible, format, pair_frequencies, verify, Admissibility, Design, GroupedPointSet,
    HoleSpec,
};
use sb_ingredients::catalog;
use sb_search::{search_design, SearchOutcome, SearchSpec, Target};

const OK: u8 = 0;
const VERIFY_FAIL: u8 = 1;
const NONEXISTENT: u8 = 2;
const OUTSIDE_RANGE: u8 = 3;
const BAD_INPUT: u8 = 4;

#[derive(Parser)]
#[command(name = "sbgdd", version, about = "Sarvate-Beam group divisible designs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an SBGDD_mu of type g^u and verify it before writing.
    Construct {
        #[arg(short)]
        g: usize,
        #[arg(short)]
        u: usize,
        #[arg(long)]
        mu: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Reserved for randomized subcommands; construction is
        /// deterministic and ignores it.
        #[arg(long, default_value = "0")]
        seed: u64,
        /// Also write the strategy manifest (JSON) to this path.
        #[arg(long)]
        emit_manifest: Option<PathBuf>,
        /// Print the tile schedule (start frequency per piece) to stdout.
        #[arg(long)]
        emit_schedule: bool,
    },
    /// Check a design file against its own claims.
    Verify { path: PathBuf },
    /// Report whether an SBGDD_mu of type g^u exists.
    Admissible { g: u64, u: u64, mu: u64 },
    /// Run a declarative search from a JSON spec file.
    Search {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Inspect the pinned ingredient catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// One line per entry: id, provenance, type, block count.
    List,
    /// Re-verify every entry against its stored claims.
    Check,
    /// Re-run every pinned generator into a directory and diff the output
    /// against the shipped catalog.
    Regen {
        #[arg(long, default_value = "catalog-regen")]
        dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version requests are successes, everything else is bad input
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(BAD_INPUT);
            }
            print!("{e}");
            return ExitCode::from(OK);
        }
    };
    let code = match cli.cmd {
        Cmd::Construct {
            g,
            u,
            mu,
            out,
            format,
            seed: _,
            emit_manifest,
            emit_schedule,
        } => cmd_construct(g, u, mu, out, format, emit_manifest, emit_schedule),
        Cmd::Verify { path } => cmd_verify(&path),
        Cmd::Admissible { g, u, mu } => cmd_admissible(g, u, mu),
        Cmd::Search { spec, out, seed } => cmd_search(&spec, out, seed),
        Cmd::Catalog { action } => cmd_catalog(action),
    };
    ExitCode::from(code)
}

/// Write through a temporary file in the target directory so readers never
/// observe a half-written design.
fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))?;
    tmp.write_all(content.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn render(d: &Design, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => format::to_text(d),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&format::to_json(d)).expect("json renders");
            s.push('\n');
            s
        }
    }
}

fn summary_line(d: &Design, mu: u64) -> String {
    let blocks = d.blocks.total_multiplicity();
    let end = mu + d.grouping.num_cross_pairs() as u64 - 1;
    format!(
        "type {} mu={mu} blocks={blocks} frequencies=[{mu}, {end}]",
        d.grouping.type_string()
    )
}

fn cmd_construct(
    g: usize,
    u: usize,
    mu: u64,
    out: Option<PathBuf>,
    fmt: OutputFormat,
    emit_manifest: Option<PathBuf>,
    emit_schedule: bool,
) -> u8 {
    if g < 1 || u < 3 {
        eprintln!("need g >= 1 and u >= 3");
        return BAD_INPUT;
    }
    let built = match construct_with_manifest(g, u, mu) {
        Ok(b) => b,
        Err(AssembleError::Nonexistent(reason)) => {
            eprintln!("no SBGDD_{mu} of type {g}^{u} exists: {reason}");
            return NONEXISTENT;
        }
        Err(AssembleError::OutsideRange(msg)) => {
            eprintln!("not constructed: {msg}");
            return OUTSIDE_RANGE;
        }
        Err(AssembleError::Defect(msg)) => {
            eprintln!("internal defect: {msg}");
            return VERIFY_FAIL;
        }
    };
    if let Some(path) = emit_manifest {
        let json = serde_json::to_string_pretty(&built.manifest.to_json()).expect("manifest");
        if let Err(e) = write_atomic(&path, &(json + "\n")) {
            eprintln!("cannot write {}: {e}", path.display());
            return BAD_INPUT;
        }
    }
    if emit_schedule {
        for p in &built.manifest.pieces {
            match &p.block {
                Some(b) => println!("start={} {} on [{}]", p.start, p.name, b),
                None => println!("start={} {}", p.start, p.name),
            }
        }
    }
    let text = render(&built.design, fmt);
    match out {
        Some(path) => {
            if let Err(e) = write_atomic(&path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return BAD_INPUT;
            }
            println!("{}", summary_line(&built.design, mu));
        }
        None => {
            print!("{text}");
            eprintln!("{}", summary_line(&built.design, mu));
        }
    }
    OK
}

fn parse_design(text: &str) -> Result<Design, String> {
    if text.trim_start().starts_with('{') {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
        format::from_json(&v).map_err(|e| e.to_string())
    } else {
        format::from_text(text).map_err(|e| e.to_string())
    }
}

fn cmd_verify(path: &Path) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", path.display());
            return BAD_INPUT;
        }
    };
    let design = match parse_design(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("cannot parse {}: {e}", path.display());
            return BAD_INPUT;
        }
    };
    let report = verify(&design);
    let observed = &report.observed;
    let freq_note = match (observed.first(), observed.last()) {
        (Some(a), Some(b)) => format!(" frequencies=[{a}, {b}]"),
        _ => String::new(),
    };
    if report.pass {
        println!(
            "ok: type {} blocks={}{freq_note}",
            design.grouping.type_string(),
            design.blocks.total_multiplicity()
        );
        OK
    } else {
        let why = report
            .violation
            .map(|v| v.to_string())
            .unwrap_or_else(|| "unknown violation".into());
        println!(
            "FAIL: type {} blocks={}{freq_note}: {why}",
            design.grouping.type_string(),
            design.blocks.total_multiplicity()
        );
        VERIFY_FAIL
    }
}

fn cmd_admissible(g: u64, u: u64, mu: u64) -> u8 {
    if g < 1 || u < 3 {
        eprintln!("need g >= 1 and u >= 3");
        return BAD_INPUT;
    }
    match admissible(g, u, mu) {
        Admissibility::Admissible => {
            println!("yes");
            OK
        }
        Admissibility::Nonexistent(reason) => {
            println!("no: {reason}");
            NONEXISTENT
        }
    }
}

/// Search spec file: {"groups": [sizes], "target": {"interval": mu} or
/// {"constant": lambda}, "hole": bool, "cap": n?, "seed": n?, "budget": n?}.
fn parse_search_spec(v: &serde_json::Value, seed_override: Option<u64>) -> Result<SearchSpec, String> {
    let groups = v
        .get("groups")
        .and_then(|g| g.as_array())
        .ok_or("missing \"groups\" array")?
        .iter()
        .map(|x| x.as_u64().map(|n| n as usize))
        .collect::<Option<Vec<usize>>>()
        .ok_or("group sizes must be nonnegative integers")?;
    if groups.is_empty() || groups.iter().any(|&s| s == 0) {
        return Err("group sizes must be positive".into());
    }
    let grouping = GroupedPointSet::new(groups);
    let t = v.get("target").ok_or("missing \"target\"")?;
    let target = if let Some(mu) = t.get("interval").and_then(|x| x.as_u64()) {
        Target::Interval { mu }
    } else if let Some(lambda) = t.get("constant").and_then(|x| x.as_u64()) {
        Target::Constant { lambda }
    } else {
        return Err("target must be {\"interval\": mu} or {\"constant\": lambda}".into());
    };
    let hole = match v.get("hole").and_then(|x| x.as_bool()).unwrap_or(false) {
        true => Some(HoleSpec::first_slots(grouping.num_groups())),
        false => None,
    };
    let mut spec = SearchSpec::interval(grouping, 0, 0);
    spec.target = target;
    spec.hole = hole;
    spec.cap = v.get("cap").and_then(|x| x.as_u64());
    spec.seed = seed_override
        .or_else(|| v.get("seed").and_then(|x| x.as_u64()))
        .unwrap_or(7);
    if let Some(b) = v.get("budget").and_then(|x| x.as_u64()) {
        spec.node_budget = b;
    }
    Ok(spec)
}

fn cmd_search(path: &Path, out: Option<PathBuf>, seed: Option<u64>) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", path.display());
            return BAD_INPUT;
        }
    };
    let v: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("cannot parse {}: {e}", path.display());
            return BAD_INPUT;
        }
    };
    let spec = match parse_search_spec(&v, seed) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("bad search spec: {e}");
            return BAD_INPUT;
        }
    };
    match search_design(&spec) {
        SearchOutcome::Found(d) => {
            let report = verify(&d);
            if !report.pass {
                eprintln!("search returned an invalid design (bug)");
                return VERIFY_FAIL;
            }
            let rendered = format::to_text(&d);
            match out {
                Some(p) => {
                    if let Err(e) = write_atomic(&p, &rendered) {
                        eprintln!("cannot write {}: {e}", p.display());
                        return BAD_INPUT;
                    }
                }
                None => print!("{rendered}"),
            }
            let f = pair_frequencies(&d.blocks, &d.grouping).expect("verified design");
            let vals = f.value_multiset();
            eprintln!(
                "found: type {} blocks={} frequencies=[{}, {}]",
                d.grouping.type_string(),
                d.blocks.total_multiplicity(),
                vals.first().unwrap_or(&0),
                vals.last().unwrap_or(&0)
            );
            OK
        }
        SearchOutcome::Infeasible => {
            eprintln!("infeasible: no design within the searched bounds");
            NONEXISTENT
        }
        SearchOutcome::BudgetExhausted => {
            eprintln!("budget exhausted before a conclusion");
            OUTSIDE_RANGE
        }
    }
}

fn cmd_catalog(action: CatalogCmd) -> u8 {
    let cat = match catalog::global() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("catalog failed to load: {e}");
            return VERIFY_FAIL;
        }
    };
    match action {
        CatalogCmd::List => {
            for e in cat.iter() {
                println!(
                    "{:<14} {:<11} type {:<8} blocks={}",
                    e.id,
                    format!("{:?}", e.provenance).to_lowercase(),
                    e.design.grouping.type_string(),
                    e.design.blocks.total_multiplicity()
                );
            }
            OK
        }
        CatalogCmd::Check => {
            let mut bad = 0;
            for e in cat.iter() {
                match catalog::check_entry(e.id, &e.design) {
                    Ok(()) => println!("{}: ok", e.id),
                    Err(msg) => {
                        println!("{}: FAIL ({msg})", e.id);
                        bad += 1;
                    }
                }
            }
            if bad == 0 {
                OK
            } else {
                VERIFY_FAIL
            }
        }
        CatalogCmd::Regen { dir } => {
            if let Err(e) = catalog::regenerate(&dir) {
                eprintln!("regeneration failed: {e}");
                return VERIFY_FAIL;
            }
            let mut differs = 0;
            for e in cat.iter() {
                let path = dir.join(format!("{}.txt", e.id));
                let regenerated = match std::fs::read_to_string(&path) {
                    Ok(t) => t,
                    Err(err) => {
                        eprintln!("cannot read {}: {err}", path.display());
                        return BAD_INPUT;
                    }
                };
                if regenerated == format::to_text(&e.design) {
                    println!("{}: unchanged", e.id);
                } else {
                    println!("{}: DIFFERS", e.id);
                    differs += 1;
                }
            }
            if differs == 0 {
                OK
            } else {
                VERIFY_FAIL
            }
        }
    }
}
