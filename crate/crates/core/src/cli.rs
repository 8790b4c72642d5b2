//! The `socx` command line: argument parsing and the six subcommands.
//!
//! Every command writes to caller-supplied streams and returns an exit
//! code, so the binary is a one-line wrapper and the commands can be driven
//! in-process. Exit codes: 0 success, 1 mathematical failure (invalid
//! complex, unsupported product, certification mismatch), 2 usage or parse
//! error, 3 IO error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::charvar::{enumerate_components, find_extension_components, handle_bounds, Irrep};
use crate::exactalg::Rational;
use crate::gamma::{
    gamma_oracle, gamma_table, render_table, render_witness, verify_witness, GammaError, GammaValue,
    TableJson,
};
use crate::socx::json::{from_json, to_json};
use crate::socx::{build_yn, rank_yn, tensor, SOComplex, SocxError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Default size guards, overridable with `--force`.
pub const MAX_BUILD_N: u32 = 5;
pub const MAX_GAMMA_RANK: usize = 1562;
pub const MAX_CENSUS_N: u32 = 12;
pub const MAX_CERTIFY_GAMMA_N: u32 = 5;

#[derive(Parser, Debug)]
#[command(name = "socx", version, about = "I-graded SO-complexes and the Γ invariant")]
pub struct Cli {
    /// Suppress the version banner.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print witnesses, certificates and per-check details.
    #[arg(long, short, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the complex of the connected sum of n Poincaré spheres.
    BuildYn {
        n: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Allow n above the default size guard.
        #[arg(long)]
        force: bool,
    },
    /// Check the SO-complex axioms of a socx-v1 file.
    Validate { path: PathBuf },
    /// Tensor product A ⊗ B (A must have d = 0 and D2 = 0).
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Γ(i) for a single i or an inclusive range.
    Gamma {
        path: PathBuf,
        #[command(flatten)]
        index: IndexArgs,
        /// Recompute with the brute-force oracle and compare.
        #[arg(long)]
        oracle: bool,
        /// Omit witnesses from JSON output.
        #[arg(long)]
        no_witness: bool,
        #[arg(long)]
        force: bool,
    },
    /// Component census and extension certificate for #_n Σ(2,3,5).
    Charvar {
        n: u32,
        /// First Betti number for the handle bounds.
        #[arg(long, default_value_t = 0)]
        b1: u32,
        #[arg(long)]
        force: bool,
    },
    /// End-to-end certification report for #_n Σ(2,3,5).
    Certify {
        n: u32,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct IndexArgs {
    #[arg(long = "i", allow_hyphen_values = true)]
    pub i: Option<i64>,
    /// Inclusive range `A..B`.
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<String>,
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn math(message: impl Into<String>) -> Self {
        Self { code: EXIT_MATH, message: message.into() }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Self { code: EXIT_IO, message: format!("{}: {e}", path.display()) }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `A..B` (inclusive, either end may be negative).
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: i64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn banner(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    if !cli.quiet && !cli.json {
        emit(out, &format!("# socx {}\n", env!("CARGO_PKG_VERSION")))?;
    }
    Ok(())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure { code: EXIT_IO, message: format!("stdout: {e}") })
}

fn emit_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<(), Failure> {
    emit(out, &format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::BuildYn { n, output, force } => cmd_build_yn(*n, output.as_deref(), *force, out, err),
        Command::Validate { path } => cmd_validate(cli, path, out),
        Command::Tensor { a, b, output } => cmd_tensor(cli, a, b, output.as_deref(), out, err),
        Command::Gamma { path, index, oracle, no_witness, force } => {
            let (imin, imax) = match (&index.i, &index.range) {
                (Some(i), None) => (*i, *i),
                (None, Some(r)) => parse_range(r).map_err(Failure::usage)?,
                _ => return Err(Failure::usage("exactly one of --i and --range is required")),
            };
            cmd_gamma(cli, path, imin, imax, *oracle, !*no_witness, *force, out)
        }
        Command::Charvar { n, b1, force } => cmd_charvar(cli, *n, *b1, *force, out),
        Command::Certify { n, force } => cmd_certify(cli, *n, *force, out),
    }
}

fn load(path: &Path) -> Result<SOComplex, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_document(path: Option<&Path>, doc: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, doc).map_err(|e| Failure::io(p, e)),
        None => emit(out, doc),
    }
}

fn math_error(e: SocxError) -> Failure {
    match e {
        SocxError::Argument(m) => Failure::usage(m),
        SocxError::Format(m) => Failure::usage(m),
        other => Failure::math(other.to_string()),
    }
}

fn cmd_build_yn(
    n: u32,
    output: Option<&Path>,
    force: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if n == 0 {
        return Err(Failure::usage("n must be at least 1"));
    }
    if n > MAX_BUILD_N && !force {
        return Err(Failure::usage(format!(
            "n = {n} exceeds the size guard n <= {MAX_BUILD_N} (rank {}); pass --force",
            rank_yn(n)
        )));
    }
    let y = build_yn(n).map_err(math_error)?;
    write_document(output, &to_json(&y), out)?;
    if let Some(p) = output {
        let _ = writeln!(err, "wrote {} (rank {}) to {}", y.name(), y.rank(), p.display());
    }
    Ok(EXIT_OK)
}

fn cmd_validate(cli: &Cli, path: &Path, out: &mut dyn Write) -> CmdResult {
    let s = load(path)?;
    let report = s.validation();
    if cli.json {
        emit_json(out, &json!({ "complex": s.name(), "rank": s.rank(), "report": report }))?;
    } else {
        banner(cli, out)?;
        emit(out, &format!("{} (rank {}): {report}", s.name(), s.rank()))?;
        if !report.ok {
            emit(out, &format!("failed identities: {}\n", report.failed_axioms().join(", ")))?;
        }
    }
    Ok(if report.ok { EXIT_OK } else { EXIT_MATH })
}

fn cmd_tensor(
    cli: &Cli,
    a: &Path,
    b: &Path,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let (sa, sb) = (load(a)?, load(b)?);
    let p = tensor(&sa, &sb).map_err(math_error)?;
    let (ra, rb, r) = (sa.rank(), sb.rank(), p.rank());
    let identity = format!(
        "rank identity: 2·{r}+1 = {} = (2·{ra}+1)(2·{rb}+1) = {}",
        2 * r + 1,
        (2 * ra + 1) * (2 * rb + 1)
    );
    let holds = 2 * r + 1 == (2 * ra + 1) * (2 * rb + 1);
    write_document(output, &to_json(&p), out)?;
    // When the document goes to stdout, the summary goes to stderr.
    let summary: &mut dyn Write = if output.is_some() { out } else { err };
    if output.is_some() && !cli.json {
        banner(cli, summary)?;
    }
    let _ = writeln!(summary, "{identity}");
    Ok(if holds { EXIT_OK } else { EXIT_MATH })
}

#[allow(clippy::too_many_arguments)]
fn cmd_gamma(
    cli: &Cli,
    path: &Path,
    imin: i64,
    imax: i64,
    oracle: bool,
    with_witness: bool,
    force: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let s = load(path)?;
    if s.rank() > MAX_GAMMA_RANK && !force {
        return Err(Failure::usage(format!(
            "rank {} exceeds the size guard {MAX_GAMMA_RANK}; pass --force",
            s.rank()
        )));
    }
    let table = gamma_table(&s, imin, imax).map_err(|e| match e {
        GammaError::Complex(e) => Failure::math(format!("{e}\n{}", s.validation())),
        other => Failure::math(other.to_string()),
    })?;
    let mut code = EXIT_OK;
    for row in &table.rows {
        if let Err(e) = verify_witness(&s, row) {
            code = EXIT_MATH;
            emit(out, &format!("witness check failed at i = {}: {e}\n", row.i))?;
        }
    }

    let mut oracle_lines = Vec::new();
    let mut oracle_json = Vec::new();
    if oracle {
        for row in &table.rows {
            let (status, value) = if row.i < 1 {
                ("skipped", None)
            } else {
                match gamma_oracle(&s, row.i) {
                    Ok(o) if o.value == row.value => ("agrees", Some(o.value)),
                    Ok(o) => {
                        code = EXIT_MATH;
                        ("DISAGREES", Some(o.value))
                    }
                    Err(GammaError::OracleTooLarge { .. }) => ("skipped", None),
                    Err(e) => return Err(Failure::math(e.to_string())),
                }
            };
            let shown = value.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            oracle_lines.push(format!("oracle i = {}: {shown} ({status})\n", row.i));
            oracle_json.push(json!({ "i": row.i, "value": value, "status": status }));
        }
    }

    if cli.json {
        let mut v = serde_json::to_value(TableJson { table: &table, module: s.module(), with_witness })
            .expect("serializable");
        if oracle {
            v["oracle"] = serde_json::Value::Array(oracle_json);
        }
        emit_json(out, &v)?;
    } else {
        banner(cli, out)?;
        emit(out, &render_table(&table))?;
        if cli.verbose {
            for row in &table.rows {
                if let Some(w) = &row.witness {
                    emit(out, &format!("witness i = {}: {}\n", row.i, render_witness(w, s.module())))?;
                    for (j, a) in &w.a_coeffs {
                        emit(out, &format!("  a_{j} = {a}\n"))?;
                    }
                }
            }
        }
        for line in oracle_lines {
            emit(out, &line)?;
        }
    }
    Ok(code)
}

fn census_guard(n: u32, force: bool) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::usage("n must be at least 1"));
    }
    if n > MAX_CENSUS_N && !force {
        return Err(Failure::usage(format!(
            "n = {n} exceeds the census guard n <= {MAX_CENSUS_N}; pass --force"
        )));
    }
    Ok(())
}

fn cmd_charvar(cli: &Cli, n: u32, b1: u32, force: bool, out: &mut dyn Write) -> CmdResult {
    census_guard(n, force)?;
    let census = enumerate_components(n).map_err(|e| Failure::usage(e.to_string()))?;
    let cert = find_extension_components(n).map_err(|e| Failure::usage(e.to_string()))?;
    let bounds = handle_bounds(n, b1).map_err(|e| Failure::usage(e.to_string()))?;
    let ok = census.matches_binomial_law() && cert.is_unique_beta();
    if cli.json {
        let mut v = json!({
            "census": census.to_json(cli.verbose),
            "extension": cert.components.iter().map(|c| json!({
                "sigma": c.signature.to_string(),
                "l": c.l,
                "cs_lift": c.cs_lift(),
                "gr_lift": c.gr_lift(),
            })).collect::<Vec<_>>(),
            "handle_bounds": bounds,
        });
        if cli.verbose {
            v["candidates"] = serde_json::to_value(&cert.candidates).expect("serializable");
        }
        emit_json(out, &v)?;
    } else {
        banner(cli, out)?;
        let mut text = format!("components of χ(Y_{n}): {} = 3^{n}\n", census.total());
        for d in &census.by_dim {
            let dim = if d.i == 0 { 0 } else { 3 * (d.i - 1) };
            text.push_str(&format!("  i = {:>2} (dim {dim:>2}): {}\n", d.i, d.count));
        }
        if cli.verbose {
            text.push_str("extension candidates:\n");
            for c in &cert.candidates {
                text.push_str(&format!("  {c}\n"));
            }
        }
        text.push_str("extension components:\n");
        for c in &cert.components {
            text.push_str(&format!("  {} l={} CS={} gr={}\n", c.signature, c.l, c.cs_lift(), c.gr_lift()));
        }
        let (h1, h2, h23) = bounds.as_tuple();
        text.push_str(&format!(
            "handle bounds (b1 = {b1}): 1-handles >= {h1}, 2-handles >= {h2}, 2/3-handles >= {h23}\n"
        ));
        emit(out, &text)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_MATH })
}

/// One line of the certification report.
struct Check {
    name: String,
    status: &'static str,
    detail: String,
}

fn cmd_certify(cli: &Cli, n: u32, force: bool, out: &mut dyn Write) -> CmdResult {
    census_guard(n, force)?;
    let mut checks: Vec<Check> = Vec::new();
    let mut push = |name: &str, ok: Option<bool>, detail: String| {
        let status = match ok {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "skipped",
        };
        checks.push(Check { name: name.into(), status, detail });
    };
    let target = Rational::new(49 * n as i64, 120).expect("nonzero denominator");

    if n <= MAX_CERTIFY_GAMMA_N {
        let y = build_yn(n).map_err(math_error)?;
        let i = 2 * n as i64;
        let t = gamma_table(&y, i, i).map_err(|e| Failure::math(e.to_string()))?;
        let row = &t.rows[0];
        let matches = row.value == GammaValue::Finite(target.clone()) && verify_witness(&y, row).is_ok();
        push("gamma", Some(matches), format!("Γ_Y{n}({i}) = {}, expected 49·{n}/120 = {target}", row.value));
    } else {
        push("gamma", None, format!("n = {n} > {MAX_CERTIFY_GAMMA_N}; Γ_Y{n}({}) not recomputed", 2 * n));
    }

    let census = enumerate_components(n).map_err(|e| Failure::usage(e.to_string()))?;
    let counts: Vec<String> = census.by_dim.iter().map(|d| format!("{}:{}", d.i, d.count)).collect();
    push(
        "census",
        Some(census.matches_binomial_law()),
        format!("total {} = 3^{n}; counts 2^i·C(n,i) by i = [{}]", census.total(), counts.join(" ")),
    );

    let cert = find_extension_components(n).map_err(|e| Failure::usage(e.to_string()))?;
    let found: Vec<String> = cert.components.iter().map(|c| format!("{} l={}", c.signature, c.l)).collect();
    let unique = cert.is_unique_beta() && cert.components[0].cs_lift() == target;
    push(
        "extension",
        Some(unique),
        format!("{} candidates (j,k) examined; qualifying: [{}]", cert.candidates.len(), found.join(", ")),
    );
    if let Some(c) = cert.components.first() {
        let dim_r = 3 * c.signature.i();
        let beta = c.signature.sigma().iter().all(|&r| r == Irrep::Beta);
        push(
            "dimension",
            Some(beta && dim_r == 3 * n as usize),
            format!("dim R = {dim_r}, expected 3n = {}", 3 * n),
        );
    }

    for b1 in 0..=2 {
        let b = handle_bounds(n, b1).map_err(|e| Failure::usage(e.to_string()))?;
        let ok = b.as_tuple() == (n + b1, n, n + b1);
        let (h1, h2, h23) = b.as_tuple();
        push(&format!("bounds b1={b1}"), Some(ok), format!("({h1}, {h2}, {h23})"));
    }

    let failed = checks.iter().any(|c| c.status == "FAIL");
    if cli.json {
        let list: Vec<_> = checks
            .iter()
            .map(|c| json!({ "check": c.name, "status": c.status, "detail": c.detail }))
            .collect();
        emit_json(out, &json!({ "n": n, "ok": !failed, "checks": list }))?;
    } else {
        banner(cli, out)?;
        let mut text = format!("certificate for Y_{n} = #_{n} Σ(2,3,5)\n");
        for c in &checks {
            text.push_str(&format!("[{}] {}: {}\n", c.status, c.name, c.detail));
        }
        if cli.verbose {
            text.push_str("extension candidates:\n");
            for c in &cert.candidates {
                text.push_str(&format!("  {c}\n"));
            }
            text.push_str(&format!("{}\n", handle_bounds(n, 0).expect("n >= 1").report()));
        }
        text.push_str(if failed { "result: FAILED\n" } else { "result: certified\n" });
        emit(out, &text)?;
    }
    Ok(if failed { EXIT_MATH } else { EXIT_OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("socx").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-1..3"), Ok((-1, 3)));
        assert_eq!(parse_range("2..=4"), Ok((2, 4)));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn build_guard_and_zero() {
        assert_eq!(run_args(&["build-yn", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["build-yn", "6"]).0, EXIT_USAGE);
        let (code, out, _) = run_args(&["build-yn", "1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("socx-v1"));
    }

    #[test]
    fn certify_small() {
        let (code, out, _) = run_args(&["--quiet", "certify", "2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("(β,β) l=0"));
        assert!(out.contains("[pass] bounds b1=0: (2, 2, 2)"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["gamma", "x.json"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }
}
