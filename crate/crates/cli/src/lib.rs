//! `hyperring-lab`: load hyperring tables, classify hyperideals, compute
//! closedness profiles and fundamental rings, evaluate the residue models,
//! and run the theorem suite, optionally recording results in a catalog.

pub mod catalog;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use hyperring_core::closedness::{closed_profile, weakly_closed_witness_unchecked};
use hyperring_core::fundamental::{fundamental_ring, ideal_in_fundamental};
use hyperring_core::harness::{run_suite, SuiteConfig};
use hyperring_core::ideal::{
    classify, enumerate_hyperideals, has_i_set, nilpotents, power_members_d, radical, units,
    weak_zero_divisors, Hyperideal,
};
use hyperring_core::json::{hyperring_to_json, parse_doc, HyperringDoc};
use hyperring_core::residue::ZxResidueModel;
use hyperring_core::{
    make_zx_mod, product_ring, validate_axioms, ElementSet, Error, FiniteHyperring, MAX_ORDER,
};
use serde_json::{json, Value};

use catalog::{CatalogEntry, Stored};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// 1 for findings about a well-formed input, 2 for unusable input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(
                Error::AxiomFailure(_)
                | Error::WellDefinednessFailure { .. }
                | Error::FundamentalRingAxiom { .. }
                | Error::ImageNotIdeal(_)
                | Error::QuotientNotWellDefined { .. },
            ) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hyperring-lab",
    version,
    about = "Finite multiplicative hyperrings and (s,n)-closed hyperideals"
)]
pub struct Cli {
    /// Record every result in this directory.
    #[arg(long, global = true, value_name = "DIR")]
    pub catalog: Option<PathBuf>,
    /// Print JSON.
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Print a plain-text table.
    #[arg(long, global = true)]
    pub table: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the table file of a residue hyperring or a product of two table files.
    #[command(subcommand)]
    Define(Define),
    /// Check the hyperring axioms of a table file.
    Validate { path: PathBuf },
    /// Classify hyperideals (prime, maximal, C, strong C) and ring-level sets.
    Classify {
        path: PathBuf,
        /// Comma-separated members, or `@enumerate` for every hyperideal.
        #[arg(long, default_value = "@enumerate")]
        ideal: String,
    },
    /// ω/Ω profile of proper hyperideals.
    Profile {
        path: PathBuf,
        #[arg(long, default_value = "@enumerate")]
        ideal: String,
        #[arg(long, default_value_t = 6)]
        smax: usize,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Also tabulate weak (s,n)-closedness.
        #[arg(long)]
        weakly: bool,
    },
    /// The fundamental ring G/γ* and the closedness transfer of each proper hyperideal.
    Fundamental {
        path: PathBuf,
        #[arg(long, default_value_t = 6)]
        smax: usize,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
    /// Closedness of dℤ in ℤ_X for s = 1..S at a fixed n.
    Zx {
        d: u64,
        /// Comma-separated multipliers, e.g. `2,4`.
        x: String,
        s_max: usize,
        n: usize,
        #[arg(long)]
        weakly: bool,
    },
    /// Run the theorem suite.
    Verify {
        /// JSON suite configuration; omitted fields take their defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        smax: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Random multiplication tables to try.
        #[arg(long)]
        random: Option<usize>,
        /// Restrict to these check ids (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Define {
    /// ℤ_m with a∘b = {a·x·b mod m : x ∈ X}.
    Zx {
        m: u64,
        /// Comma-separated multipliers.
        x: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Componentwise product of two table files.
    Product { left: PathBuf, right: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

/// What a command produced, before any catalog bookkeeping.
struct Rendered {
    command: &'static str,
    instance: String,
    content: Value,
    params: Value,
    json: Value,
    table: String,
    code: u8,
    default: Format,
    warnings: String,
}

#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let r = match &cli.command {
        Command::Define(d) => define(d)?,
        Command::Validate { path } => validate(path)?,
        Command::Classify { path, ideal } => classify_cmd(path, ideal)?,
        Command::Profile {
            path,
            ideal,
            smax,
            nmax,
            weakly,
        } => profile(path, ideal, *smax, *nmax, *weakly)?,
        Command::Fundamental { path, smax, nmax } => fundamental(path, *smax, *nmax)?,
        Command::Zx {
            d,
            x,
            s_max,
            n,
            weakly,
        } => zx(*d, x, *s_max, *n, *weakly)?,
        Command::Verify {
            config,
            seed,
            smax,
            nmax,
            random,
            checks,
        } => verify(config.as_deref(), *seed, *smax, *nmax, *random, checks)?,
    };
    let format = if cli.json {
        Format::Json
    } else if cli.table {
        Format::Table
    } else {
        r.default
    };
    let mut out = Output {
        stdout: match format {
            Format::Json => serde_json::to_string_pretty(&r.json).expect("plain data") + "\n",
            Format::Table => r.table.clone(),
        },
        stderr: r.warnings.clone(),
        code: r.code,
    };
    if let Some(dir) = &cli.catalog {
        let entry = CatalogEntry::new(&r.instance, &r.content, r.command, r.params, r.json);
        match catalog::store(dir, &entry)? {
            Stored::New(p) => {
                let _ = writeln!(out.stderr, "catalog: wrote {}", p.display());
            }
            Stored::Reproduced(p) => {
                let _ = writeln!(out.stderr, "catalog: reproduced {}", p.display());
            }
            Stored::Mismatch { path, stored } => {
                let _ = writeln!(
                    out.stderr,
                    "catalog: result hash {} differs from stored {} in {}",
                    entry.result_hash,
                    stored,
                    path.display()
                );
                out.code = out.code.max(1);
            }
        }
    }
    Ok(out)
}

fn read_doc(path: &Path) -> Result<HyperringDoc, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let doc = parse_doc(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    doc.check_shape()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(doc)
}

fn load_ring(path: &Path) -> Result<(FiniteHyperring, Value), CliError> {
    let doc = read_doc(path)?;
    let content = serde_json::to_value(&doc).expect("plain data");
    Ok((doc.into_ring()?, content))
}

/// `@enumerate` or a comma-separated member list.
fn parse_ideals(
    h: &FiniteHyperring,
    spec: &str,
    proper_only: bool,
) -> Result<Vec<Hyperideal>, CliError> {
    let spec = spec.trim();
    if spec == "@enumerate" {
        let all = enumerate_hyperideals(h, MAX_ORDER)?;
        return Ok(all
            .into_iter()
            .filter(|i| !proper_only || i.is_proper())
            .collect());
    }
    let mut members = ElementSet::default();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let a: usize = part.parse().map_err(|_| {
            CliError::Input(format!(
                "ideal member `{part}` is not a non-negative integer"
            ))
        })?;
        h.check_elem(a)?;
        members.insert(a);
    }
    if members.is_empty() {
        return Err(CliError::Input("empty ideal specification".into()));
    }
    let ideal = Hyperideal::new(h, members)?;
    if proper_only && !ideal.is_proper() {
        return Err(Error::ProperIdealRequired.into());
    }
    Ok(vec![ideal])
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map_or("-", yes)
}

fn define(d: &Define) -> Result<Rendered, CliError> {
    let (h, params) = match d {
        Define::Zx { m, x, name } => {
            let h = make_zx_mod(*m, &parse_multipliers(x)?)?;
            let h = match name {
                Some(n) => h.with_name(n.clone()),
                None => h,
            };
            (h, json!({ "zx": { "m": m, "x": x } }))
        }
        Define::Product { left, right } => {
            let (a, _) = load_ring(left)?;
            let (b, _) = load_ring(right)?;
            let h = product_ring(&Arc::new(a), &Arc::new(b))?;
            (h, json!({ "product": [left, right] }))
        }
    };
    let json = hyperring_to_json(&h);
    Ok(Rendered {
        command: "define",
        instance: h.name().to_string(),
        content: json.clone(),
        params,
        table: serde_json::to_string(&json).expect("plain data") + "\n",
        json,
        code: 0,
        default: Format::Json,
        warnings: String::new(),
    })
}

fn validate(path: &Path) -> Result<Rendered, CliError> {
    let doc = read_doc(path)?;
    let report = validate_axioms(&doc.raw_tables())?;
    let mut table = String::new();
    for c in &report.checks {
        let status = if c.skipped {
            "skipped"
        } else if c.passed {
            "ok"
        } else {
            "FAILED"
        };
        let witness = c
            .witness
            .as_ref()
            .map(|w| format!("  at {w:?}"))
            .unwrap_or_default();
        let _ = writeln!(table, "{:<28} {status}{witness}", format!("{:?}", c.axiom));
    }
    let f = report.flags;
    let _ = writeln!(
        table,
        "hyperring: {}; strongly distributive: {}; identity: {}; scalar identity: {}",
        yes(f.is_hyperring),
        yes(f.strongly_distributive),
        yes(f.has_identity),
        yes(f.has_scalar_identity)
    );
    Ok(Rendered {
        command: "validate",
        instance: doc.name.clone(),
        content: serde_json::to_value(&doc).expect("plain data"),
        params: json!({}),
        json: serde_json::to_value(&report).expect("plain data"),
        table,
        code: if report.is_hyperring() { 0 } else { 1 },
        default: Format::Json,
        warnings: String::new(),
    })
}

fn classify_cmd(path: &Path, spec: &str) -> Result<Rendered, CliError> {
    let (h, content) = load_ring(path)?;
    let ideals = parse_ideals(&h, spec, false)?;
    let mut rows = Vec::new();
    let mut table = format!(
        "{:<24} {:>6} {:>6} {:>8} {:>3} {:>8} {:<16} {}\n",
        "ideal", "proper", "prime", "maximal", "C", "strong C", "rad", "D"
    );
    for ideal in &ideals {
        let q = ideal.members();
        let class = classify(&h, ideal);
        let (rad, d) = (radical(&h, q), power_members_d(&h, q));
        let _ = writeln!(
            table,
            "{:<24} {:>6} {:>6} {:>8} {:>3} {:>8} {:<16} {}",
            q.to_string(),
            yes(class.proper),
            opt(class.prime),
            opt(class.maximal),
            yes(class.c_hyperideal),
            yes(class.strong_c_hyperideal),
            rad.to_string(),
            d
        );
        let mut row = serde_json::to_value(class).expect("plain data");
        row["ideal"] = json!(q);
        row["radical"] = json!(rad);
        row["power_members_d"] = json!(d);
        rows.push(row);
    }
    let nil = nilpotents(&h);
    let wzd = weak_zero_divisors(&h);
    let _ = writeln!(
        table,
        "identities {:?}; nilpotents {nil}; weak zero-divisors {wzd}",
        h.identities()
    );
    let json = json!({
        "name": h.name(),
        "order": h.order(),
        "flags": h.flags(),
        "identities": h.identities(),
        "scalar_identity": h.scalar_identity(),
        "nilpotents": nil,
        "units": units(&h),
        "weak_zero_divisors": wzd,
        "has_i_set": has_i_set(&h),
        "ideals": rows,
    });
    Ok(Rendered {
        command: "classify",
        instance: h.name().to_string(),
        content,
        params: json!({ "ideal": spec }),
        json,
        table,
        code: 0,
        default: Format::Json,
        warnings: String::new(),
    })
}

fn profile(
    path: &Path,
    spec: &str,
    smax: usize,
    nmax: usize,
    weakly: bool,
) -> Result<Rendered, CliError> {
    if smax == 0 || nmax == 0 {
        return Err(Error::ZeroExponent.into());
    }
    let (h, content) = load_ring(path)?;
    let ideals = parse_ideals(&h, spec, true)?;
    let mut out = Vec::new();
    let mut table = String::new();
    for ideal in &ideals {
        let q = ideal.members();
        let p = closed_profile(&h, q, Some(smax), Some(nmax))?;
        let mut v = p.to_json();
        let omega: Vec<String> = p.omega_table().iter().map(|x| x.to_string()).collect();
        let big: Vec<String> = p.Omega_table().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(table, "{q}  L = {}", p.bound());
        let _ = writeln!(table, "  omega = [{}]", omega.join(", "));
        let _ = writeln!(table, "  Omega = [{}]", big.join(", "));
        if weakly {
            let grid: Vec<Vec<bool>> = (1..=smax)
                .map(|s| {
                    (1..=nmax)
                        .map(|n| weakly_closed_witness_unchecked(&h, q, s, n).is_none())
                        .collect()
                })
                .collect();
            let _ = writeln!(
                table,
                "  weakly closed (rows s = 1..{smax}, columns n = 1..{nmax}):"
            );
            for (s, row) in grid.iter().enumerate() {
                let cells: String = row.iter().map(|&b| if b { 'x' } else { '.' }).collect();
                let _ = writeln!(table, "  {:>3} {cells}", s + 1);
            }
            v["weakly_closed"] = json!(grid);
        }
        out.push(v);
    }
    let json = if spec.trim() == "@enumerate" {
        Value::Array(out)
    } else {
        out.pop().expect("one ideal")
    };
    Ok(Rendered {
        command: "profile",
        instance: h.name().to_string(),
        content,
        params: json!({ "ideal": spec, "smax": smax, "nmax": nmax, "weakly": weakly }),
        json,
        table,
        code: 0,
        default: Format::Json,
        warnings: String::new(),
    })
}

fn fundamental(path: &Path, smax: usize, nmax: usize) -> Result<Rendered, CliError> {
    if smax == 0 || nmax == 0 {
        return Err(Error::ZeroExponent.into());
    }
    let (h, content) = load_ring(path)?;
    let ring = fundamental_ring(&h)?;
    let mut code = 0;
    let mut ideals = Vec::new();
    let mut table = String::new();
    let classes: Vec<String> = ring.classes().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(
        table,
        "G/γ* has order {}: {}",
        ring.order(),
        classes.join(" ")
    );
    for ideal in parse_ideals(&h, "@enumerate", true)? {
        let q = ideal.members();
        match ideal_in_fundamental(&h, &ring, q, smax, nmax) {
            Ok(fi) => {
                let first = fi.first_disagreement().cloned();
                let line = match &first {
                    None => format!("{q} ↦ {}: transfer holds up to ({smax},{nmax})", fi.image),
                    Some(e) => {
                        code = 1;
                        format!(
                            "{q} ↦ {}: differs at ({},{}): closed in G {}, in G/γ* {}",
                            fi.image,
                            e.s,
                            e.n,
                            yes(e.closed_in_ring),
                            yes(e.closed_in_fundamental)
                        )
                    }
                };
                let _ = writeln!(table, "{line}");
                ideals.push(json!({
                    "ideal": q,
                    "image": fi.image,
                    "image_proper": fi.image_proper,
                    "transfer_holds": fi.transfer_holds(),
                    "first_disagreement": first,
                }));
            }
            Err(e) => {
                code = 1;
                let _ = writeln!(table, "{q}: {e}");
                ideals.push(json!({ "ideal": q, "error": e.to_string() }));
            }
        }
    }
    let mut json = ring.to_json();
    json["ideals"] = Value::Array(ideals);
    Ok(Rendered {
        command: "fundamental",
        instance: h.name().to_string(),
        content,
        params: json!({ "smax": smax, "nmax": nmax }),
        json,
        table,
        code,
        default: Format::Json,
        warnings: String::new(),
    })
}

fn parse_multipliers(x: &str) -> Result<Vec<i64>, CliError> {
    x.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse()
                .map_err(|_| CliError::Input(format!("multiplier `{p}` is not an integer")))
        })
        .collect()
}

fn zx(d: u64, x: &str, s_max: usize, n: usize, weakly: bool) -> Result<Rendered, CliError> {
    if s_max == 0 || n == 0 {
        return Err(Error::ZeroExponent.into());
    }
    let xs = parse_multipliers(x)?;
    let model = ZxResidueModel::new(d, &xs)?;
    let word = if weakly { "weakly closed" } else { "closed" };
    let label: Vec<String> = model.x().iter().map(|v| v.to_string()).collect();
    let mut table = format!("{d}ℤ in ℤ_X, X = {{{}}}, n = {n}\n", label.join(","));
    let mut rows = Vec::new();
    let mut all = true;
    for s in 1..=s_max {
        let w = if weakly {
            model.weakly_closed_witness(s, n)?
        } else {
            model.closed_witness(s, n)?
        };
        all &= w.is_none();
        let _ = match w {
            None => writeln!(table, "  s = {s:>2}: {word}"),
            Some(r) => writeln!(table, "  s = {s:>2}: not {word}, witness residue {r}"),
        };
        rows.push(json!({ "s": s, "holds": w.is_none(), "witness": w }));
    }
    let _ = writeln!(table, "{word} for all s ≤ {s_max}: {}", yes(all));
    let content = json!({ "d": d, "x": model.x() });
    Ok(Rendered {
        command: "zx",
        instance: format!("Z_X[{d}; {}]", label.join(",")),
        content,
        params: json!({ "s_max": s_max, "n": n, "weakly": weakly }),
        json: json!({ "d": d, "x": model.x(), "n": n, "s_max": s_max, "weakly": weakly, "verdicts": rows, "all": all }),
        table,
        code: 0,
        default: Format::Table,
        warnings: String::new(),
    })
}

fn read_config(path: &Path) -> Result<SuiteConfig, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::Core(Error::Parse {
            line: e.line(),
            column: e.column(),
            message: format!("{}: {e}", path.display()),
        })
    })
}

fn verify(
    config: Option<&Path>,
    seed: Option<u64>,
    smax: Option<usize>,
    nmax: Option<usize>,
    random: Option<usize>,
    checks: &[String],
) -> Result<Rendered, CliError> {
    let mut cfg = match config {
        Some(p) => read_config(p)?,
        None => SuiteConfig::default(),
    };
    if let Some(v) = seed {
        cfg.seed = v;
    }
    if let Some(v) = smax {
        cfg.s_max = v;
    }
    if let Some(v) = nmax {
        cfg.n_max = v;
    }
    if let Some(v) = random {
        cfg.random_tables = v;
    }
    if !checks.is_empty() {
        cfg.checks = checks.to_vec();
    }
    let report = run_suite(&cfg)?;
    let mut table = report.summary_table();
    for c in report.checks.iter() {
        if let Some(cx) = &c.counterexample {
            let ideals: Vec<String> = cx.witness.ideals.iter().map(|i| i.to_string()).collect();
            let sn = match (cx.witness.s, cx.witness.n) {
                (Some(s), Some(n)) => format!(" (s,n) = ({s},{n})"),
                _ => String::new(),
            };
            let _ = writeln!(
                table,
                "{}: {} ideals [{}] elements {:?}{sn} {}",
                c.id,
                cx.instance,
                ideals.join(" "),
                cx.witness.elements,
                cx.witness.note
            );
        }
    }
    let mut warnings = String::new();
    for id in &report.vacuous {
        let _ = writeln!(
            warnings,
            "warning: {id} is vacuous (no instance satisfies its hypothesis)"
        );
    }
    let content = serde_json::to_value(&cfg).expect("plain data");
    Ok(Rendered {
        command: "verify",
        instance: "suite".into(),
        content,
        params: json!({}),
        json: report.to_json(),
        table,
        code: report.exit_code() as u8,
        default: Format::Table,
        warnings,
    })
}
