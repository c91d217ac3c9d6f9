//! Command-line front end. [`run`] takes the argument vector and two sinks and returns the exit
//! code: 0 on success, 1 when a verification fails, 2 when flags or inputs are rejected.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::algebra::{parse_poly_json, Poly};
use crate::dessins::{
    enumerate_trees, render_svg, Dessin, DessinError, EnumerateOptions, Passport,
};
use crate::families::{
    default_params, family_report, summary_table, Family, FamilyParams, FamilyReport,
};
use crate::monodromy::{group_report, monodromy_group};
use crate::verify::{critical_values, equivalent, is_shabat, passport_from_poly, CriticalValues};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dessin-forge",
    version,
    about = "Shabat polynomials, plane trees and their monodromy groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a family member and write its polynomials, trees and report.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Shabat check of a polynomial file, optionally with an equivalence test.
    Verify(VerifyArgs),
    /// Passport of a dessin, a polynomial, or a normalized passport string.
    Passport(PassportArgs),
    /// All plane trees realizing a passport, up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Monodromy group report of a family tree or of a dessin file.
    Monodromy(MonodromyArgs),
    /// Summary table of all families with every repair and discrepancy.
    Report(ReportArgs),
    /// Radial SVG drawing of a plane tree.
    Render(RenderArgs),
}

#[derive(Debug, Subcommand)]
enum FamilyAction {
    Build {
        #[command(flatten)]
        params: ParamArgs,
        /// Output directory.
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// F1 … F12.
    family: Family,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Second polynomial to test for affine equivalence.
    #[arg(long)]
    against: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PassportArgs {
    #[arg(long)]
    dessin: Option<PathBuf>,
    #[arg(long)]
    poly: Option<PathBuf>,
    #[arg(long)]
    passport: Option<String>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    passport: String,
    /// Enumerate past the size limit.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct MonodromyArgs {
    #[arg(long, conflicts_with = "dessin")]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    r: Option<u64>,
    #[arg(long, requires = "family")]
    s: Option<u64>,
    #[arg(long, requires = "family")]
    t: Option<u64>,
    #[arg(long, requires = "family", value_parser = clap::value_parser!(u8).range(1..=2))]
    tree: Option<u8>,
    #[arg(long, required_unless_present = "family")]
    dessin: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[arg(long, conflicts_with = "family")]
    all: bool,
    #[arg(long, required_unless_present = "all")]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    r: Option<u64>,
    #[arg(long, requires = "family")]
    s: Option<u64>,
    #[arg(long, requires = "family")]
    t: Option<u64>,
    #[arg(long)]
    json: bool,
    /// Also write one JSON report per family into this directory.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long)]
    dessin: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

/// A rejected input (exit 2) or a failed check (exit 1), with its message.
struct Exit(i32, String);

fn usage(msg: impl std::fmt::Display) -> Exit {
    Exit(EXIT_USAGE, msg.to_string())
}

fn params_from(
    family: Family,
    r: Option<u64>,
    s: Option<u64>,
    t: Option<u64>,
) -> Result<FamilyParams, Exit> {
    let given = [("r", r), ("s", s), ("t", t)];
    let names = family.param_names();
    let mut values = Vec::new();
    for (name, v) in given {
        match (names.contains(&name), v) {
            (true, Some(v)) => values.push(v),
            (true, None) => return Err(usage(format!("{family} needs --{name}"))),
            (false, Some(_)) => return Err(usage(format!("{family} takes no --{name}"))),
            (false, None) => {}
        }
    }
    FamilyParams::new(family, &values).map_err(usage)
}

fn read(path: &Path) -> Result<String, Exit> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Exit> {
    std::fs::write(path, contents)
        .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn load_poly(path: &Path) -> Result<Poly, Exit> {
    parse_poly_json(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_dessin(path: &Path) -> Result<Dessin, Exit> {
    Dessin::from_json(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn exit_for(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Runs the command line `args` (program name first), writing results to `out` and diagnostics
/// to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut text = String::new();
    let result = dispatch(cli.command, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> Result<i32, Exit> {
    match command {
        Command::Family {
            action: FamilyAction::Build { params, out: dir },
        } => {
            let params = params_from(params.family, params.r, params.s, params.t)?;
            family_build(&params, &dir, out)
        }
        Command::Verify(a) => verify(&a, out),
        Command::Passport(a) => passport(&a, out),
        Command::Enumerate(a) => enumerate(&a, out),
        Command::Monodromy(a) => monodromy(&a, out),
        Command::Report(a) => report(&a, out),
        Command::Render(a) => {
            let svg = render_svg(&load_dessin(&a.dessin)?);
            match &a.out {
                Some(path) => {
                    write_file(path, &svg)?;
                    let _ = writeln!(out, "wrote {}", path.display());
                }
                None => out.push_str(&svg),
            }
            Ok(EXIT_OK)
        }
    }
}

fn family_build(params: &FamilyParams, dir: &Path, out: &mut String) -> Result<i32, Exit> {
    std::fs::create_dir_all(dir)
        .map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
    let report = family_report(params);
    write_file(&dir.join("report.json"), &report.to_json())?;
    write_file(&dir.join("report.txt"), &report.to_text())?;
    for t in &report.trees {
        write_file(&dir.join(format!("tree{}.json", t.index)), &json(&t.dessin))?;
        if let Some(p) = &t.polynomial {
            write_file(&dir.join(format!("p{}.json", t.index)), &json(p))?;
        }
    }
    out.push_str(&report.to_text());
    let _ = writeln!(out, "wrote {}", dir.display());
    Ok(exit_for(report.ok))
}

fn verify(a: &VerifyArgs, out: &mut String) -> Result<i32, Exit> {
    let p = load_poly(&a.input)?;
    let report = is_shabat(&p).map_err(usage)?;
    let mut ok = report.is_shabat;
    if a.json {
        let _ = writeln!(out, "{}", json(&report));
    } else {
        let _ = writeln!(
            out,
            "shabat: {}, values: {}",
            report.is_shabat, report.value_count
        );
        match critical_values(&p).map_err(usage)? {
            CriticalValues::InField(v) => {
                let shown: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "critical values: {}", shown.join(", "));
            }
            CriticalValues::Extension { minimal_polynomial }
            | CriticalValues::Many {
                minimal_polynomial, ..
            } => {
                let _ = writeln!(out, "critical values: roots of {minimal_polynomial}");
            }
        }
        if let Ok(pp) = passport_from_poly(&p) {
            let _ = writeln!(out, "passport: {pp}");
        }
    }
    if let Some(path) = &a.against {
        let q = load_poly(path)?;
        match equivalent(&p, &q).map_err(usage)? {
            Some(w) => {
                let _ = writeln!(out, "equivalent: true");
                let _ = writeln!(out, "{}", json(&w.to_document()));
            }
            None => {
                ok = false;
                let _ = writeln!(out, "equivalent: false");
            }
        }
    }
    Ok(exit_for(ok))
}

fn passport(a: &PassportArgs, out: &mut String) -> Result<i32, Exit> {
    let p = if let Some(path) = &a.dessin {
        load_dessin(path)?.passport()
    } else if let Some(path) = &a.poly {
        passport_from_poly(&load_poly(path)?).map_err(|e| Exit(EXIT_FAILED, e.to_string()))?
    } else {
        parse_passport(a.passport.as_deref().unwrap_or_default())?
    };
    let _ = writeln!(out, "passport: {p}");
    let _ = writeln!(out, "n: {}", p.n());
    let _ = writeln!(out, "tree-shaped: {}", p.is_tree_shaped());
    Ok(EXIT_OK)
}

fn parse_passport(s: &str) -> Result<Passport, Exit> {
    s.parse().map_err(|e: DessinError| usage(e))
}

fn enumerate(a: &EnumerateArgs, out: &mut String) -> Result<i32, Exit> {
    let p = parse_passport(&a.passport)?;
    let mut opts = EnumerateOptions::from_env();
    if a.force {
        opts = opts.forced();
    }
    let trees = enumerate_trees(&p, opts).map_err(usage)?;
    if a.json {
        let docs: Vec<_> = trees.iter().map(Dessin::to_document).collect();
        let _ = writeln!(
            out,
            "{}",
            json(
                &serde_json::json!({ "passport": p.to_string(), "count": trees.len(), "trees": docs })
            )
        );
        return Ok(EXIT_OK);
    }
    let _ = writeln!(out, "passport: {p}");
    let _ = writeln!(out, "count: {}", trees.len());
    for (i, d) in trees.iter().enumerate() {
        let _ = writeln!(
            out,
            "tree {}: sigma0 = {}, sigma1 = {}",
            i + 1,
            d.sigma0(),
            d.sigma1()
        );
    }
    Ok(EXIT_OK)
}

fn monodromy(a: &MonodromyArgs, out: &mut String) -> Result<i32, Exit> {
    let Some(family) = a.family else {
        let d = load_dessin(
            a.dessin
                .as_deref()
                .expect("clap requires --dessin without --family"),
        )?;
        let _ = writeln!(out, "{}", json(&group_report(&monodromy_group(&d))));
        return Ok(EXIT_OK);
    };
    let params = params_from(family, a.r, a.s, a.t)?;
    let report = family_report(&params);
    let mut ok = true;
    let groups: Vec<_> = report
        .trees
        .iter()
        .filter(|t| a.tree.is_none_or(|k| t.index == k as usize))
        .map(|t| {
            ok &= t.group.order_matches != Some(false);
            &t.group
        })
        .collect();
    if groups.is_empty() {
        return Err(Exit(EXIT_FAILED, report.failures.join("; ")));
    }
    let _ = match groups.as_slice() {
        [g] => writeln!(out, "{}", json(g)),
        _ => writeln!(out, "{}", json(&groups)),
    };
    Ok(exit_for(ok))
}

fn report(a: &ReportArgs, out: &mut String) -> Result<i32, Exit> {
    let params: Vec<FamilyParams> = match a.family {
        Some(f) => vec![params_from(f, a.r, a.s, a.t)?],
        None => Family::ALL.into_iter().map(default_params).collect(),
    };
    let reports: Vec<FamilyReport> = params.par_iter().map(family_report).collect();
    if let Some(dir) = &a.out {
        std::fs::create_dir_all(dir)
            .map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
        for r in &reports {
            write_file(&dir.join(format!("{}.json", r.family)), &r.to_json())?;
        }
    }
    if a.json {
        let _ = writeln!(out, "{}", json(&reports));
    } else {
        out.push_str(&summary_table(&reports));
        let _ = writeln!(out);
        for r in &reports {
            out.push_str(&r.to_text());
        }
    }
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.ok)
        .map(|r| r.params.clone())
        .collect();
    if !failed.is_empty() {
        let _ = writeln!(out, "\nfailed: {}", failed.join(", "));
    }
    Ok(exit_for(failed.is_empty()))
}
