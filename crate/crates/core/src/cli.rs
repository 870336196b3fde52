//! Batch command-line surface: `eval`, `jones`, `verify`, `scan-pretzels`,
//! `catalog`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bracket::{bracket_library, jones};
use crate::error::Error;
use crate::linkcat::{catalog, lookup, scan_pretzels, Evaluator, LinkEntry, PretzelRow};
use crate::polyring::format::{self, serialize, Format, QP, T};
use crate::rmatrix::{run_suite, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "links-gould", version, about = "Exact Links–Gould and Jones polynomials from tangle tensor networks")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct LinkArgs {
    /// Catalog name or alias, `all`, or `pretzel p,q,r`.
    #[arg(long, required_unless_present = "recipe", conflicts_with = "recipe")]
    link: Option<String>,
    /// File holding a tangle: `NAME[outs] = factors` lines, then `T = factors`.
    #[arg(long)]
    recipe: Option<PathBuf>,
    /// Writhe of a `--recipe` diagram (used by `jones`).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    writhe: i32,
    /// Component count of a `--recipe` diagram.
    #[arg(long, default_value_t = 1)]
    components: u32,
    #[arg(long, default_value = "plain")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Links–Gould invariant LG(q, p).
    Eval(LinkArgs),
    /// Jones polynomial V(t) from the bracket model.
    Jones(LinkArgs),
    /// Exact R-matrix verification suites.
    Verify {
        /// Comma-separated suites, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Inversion-symmetry and chirality checks over pretzels up to `max`.
    ScanPretzels {
        #[arg(long)]
        max: u32,
        /// Comma-separated subset of `inversion,chirality`.
        #[arg(long, default_value = "inversion,chirality")]
        check: String,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Catalog entries with writhe and symmetry flags.
    Catalog {
        #[arg(long, default_value = "plain")]
        format: Format,
    },
}

enum Outcome {
    Ok,
    Failed,
}

fn fail(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::UnknownLink { .. } | Error::Invalid(_) | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn select(a: &LinkArgs) -> Result<Vec<LinkEntry>, Error> {
    match (&a.link, &a.recipe) {
        (Some(l), _) if l == "all" => Ok(catalog()),
        (Some(l), _) => Ok(vec![lookup(l)?]),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(vec![LinkEntry::custom(&name, &text, a.writhe, a.components)?])
        }
        (None, None) => Err(Error::Invalid("one of --link or --recipe is required".into())),
    }
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn emit_polys(
    out: &mut dyn Write,
    entries: &[LinkEntry],
    polys: Vec<crate::polyring::LaurentPoly<i128>>,
    fmt: Format,
    vars: format::Vars,
) -> std::io::Result<()> {
    match (fmt, entries.len()) {
        (_, 1) => {
            let text = serialize(&polys[0], fmt, vars);
            write!(out, "{text}")?;
            if text.ends_with('\n') {
                Ok(())
            } else {
                writeln!(out)
            }
        }
        (Format::Json, _) => {
            let rows: Vec<_> = entries
                .iter()
                .zip(&polys)
                .map(|(e, p)| json!({ "link": e.name, "polynomial": format::to_json_value(p) }))
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))
        }
        (Format::Plain, _) => {
            for (e, p) in entries.iter().zip(&polys) {
                writeln!(out, "{}\t{}", e.name, serialize(p, fmt, vars))?;
            }
            Ok(())
        }
        (Format::Csv, _) => {
            for (e, p) in entries.iter().zip(&polys) {
                writeln!(out, "# {}", e.name)?;
                write!(out, "{}", serialize(p, fmt, vars))?;
            }
            Ok(())
        }
    }
}

fn eval_verb(a: &LinkArgs, out: &mut dyn Write) -> Result<Outcome, Error> {
    let entries = select(a)?;
    let ev = Evaluator::default();
    let polys = ev.eval_all(&entries).into_iter().map(|r| r.map(|r| r.polynomial)).collect::<Result<Vec<_>, _>>()?;
    emit_polys(out, &entries, polys, a.format, QP).map_err(io)?;
    Ok(Outcome::Ok)
}

fn jones_verb(a: &LinkArgs, out: &mut dyn Write) -> Result<Outcome, Error> {
    use rayon::prelude::*;
    let entries = select(a)?;
    let lib = bracket_library();
    let polys = entries.par_iter().map(|e| jones(e, &lib)).collect::<Result<Vec<_>, _>>()?;
    emit_polys(out, &entries, polys, a.format, T).map_err(io)?;
    Ok(Outcome::Ok)
}

fn io(e: std::io::Error) -> Error {
    Error::Diagnostic { link: "output".into(), what: e.to_string() }
}

fn split_list<'a>(s: &'a str, valid: &[&str], what: &str) -> Result<Vec<&'a str>, Error> {
    let items: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
    for i in &items {
        if !valid.contains(i) {
            return Err(Error::Invalid(format!("unknown {what} `{i}`; valid: {}", valid.join(", "))));
        }
    }
    if items.is_empty() {
        return Err(Error::Invalid(format!("empty {what} list")));
    }
    Ok(items)
}

fn verify_verb(suite: &str, points: usize, seed: u64, fmt: Format, out: &mut dyn Write) -> Result<Outcome, Error> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { split_list(suite, &SUITES, "suite")? };
    let reports = names.iter().map(|n| run_suite(n, points, seed)).collect::<Result<Vec<_>, _>>()?;
    match fmt {
        Format::Json => {
            let v: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            writeln!(out, "{}", serde_json::Value::Array(v)).map_err(io)?;
        }
        Format::Plain | Format::Csv => {
            let sep = if fmt == Format::Csv { "," } else { "\t" };
            if fmt == Format::Csv {
                writeln!(out, "check,result,points,residual_nonzero_entries").map_err(io)?;
            }
            for r in &reports {
                let res = if r.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{}{sep}{res}{sep}{}{sep}{}", r.check, r.points, r.residual_nonzero_entries).map_err(io)?;
            }
        }
    }
    Ok(if reports.iter().all(|r| r.pass) { Outcome::Ok } else { Outcome::Failed })
}

fn scan_verb(max: u32, check: &str, fmt: Format, out: &mut dyn Write) -> Result<Outcome, Error> {
    if max < 7 || max % 2 == 0 {
        return Err(Error::Invalid(format!("--max must be odd and at least 7 (got {max})")));
    }
    let checks = split_list(check, &["inversion", "chirality"], "check")?;
    let (inv, chi) = (checks.contains(&"inversion"), checks.contains(&"chirality"));
    let report = scan_pretzels(&Evaluator::default(), max)?;
    let row_ok = |r: &PretzelRow| (!inv || r.inversion_symmetric) && (!chi || r.chirality_detected);
    let count_ok = report.rows.len() == report.expected;
    let pass = count_ok && report.rows.iter().all(row_ok);
    match fmt {
        Format::Json => {
            let rows: Vec<_> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "pretzel": [r.p, r.q, r.r],
                        "inversion_symmetric": r.inversion_symmetric,
                        "chirality_detected": r.chirality_detected,
                    })
                })
                .collect();
            let v = json!({ "max": max, "count": report.rows.len(), "expected": report.expected, "rows": rows, "pass": pass });
            writeln!(out, "{v}").map_err(io)?;
        }
        Format::Plain | Format::Csv => {
            let sep = if fmt == Format::Csv { "," } else { "\t" };
            if fmt == Format::Csv {
                writeln!(out, "p,q,r,inversion_symmetric,chirality_detected").map_err(io)?;
            }
            for r in &report.rows {
                writeln!(out, "{}{sep}{}{sep}{}{sep}{}{sep}{}", r.p, r.q, r.r, r.inversion_symmetric, r.chirality_detected)
                    .map_err(io)?;
            }
            if fmt == Format::Plain {
                let res = if pass { "PASS" } else { "FAIL" };
                writeln!(out, "count {} (expected {})\t{res}", report.rows.len(), report.expected).map_err(io)?;
            }
        }
    }
    Ok(if pass { Outcome::Ok } else { Outcome::Failed })
}

fn catalog_verb(fmt: Format, out: &mut dyn Write) -> Result<Outcome, Error> {
    let cat = catalog();
    match fmt {
        Format::Json => writeln!(out, "{}", crate::linkcat::manifest()).map_err(io)?,
        Format::Plain | Format::Csv => {
            let sep = if fmt == Format::Csv { "," } else { "\t" };
            writeln!(out, "name{sep}aliases{sep}components{sep}writhe{sep}amphichiral{sep}invertible").map_err(io)?;
            for e in &cat {
                writeln!(
                    out,
                    "{}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}",
                    e.name,
                    e.aliases.join(" "),
                    e.components,
                    e.writhe,
                    flag(Some(e.amphichiral)),
                    flag(e.invertible)
                )
                .map_err(io)?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn dispatch(verb: &Verb, out: &mut dyn Write) -> Result<Outcome, Error> {
    match verb {
        Verb::Eval(a) => eval_verb(a, out),
        Verb::Jones(a) => jones_verb(a, out),
        Verb::Verify { suite, points, seed, format } => verify_verb(suite, *points, *seed, *format, out),
        Verb::ScanPretzels { max, check, format } => scan_verb(*max, check, *format, out),
        Verb::Catalog { format } => catalog_verb(*format, out),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return fail(err, &Error::Invalid(format!("thread pool: {e}"))),
    };
    let mut buf = Vec::new();
    let res = pool.install(|| dispatch(&cli.verb, &mut buf));
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        return fail(err, &io(e));
    }
    match res {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Failed) => EXIT_FAILED,
        Err(e) => fail(err, &e),
    }
}

pub fn main_with_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run(args, &mut out, &mut err)
}
