//! The `schubert-mult` command line: `compute`, `enumerate`, `render` and
//! `verify`.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 mathematical
//! disagreement or failed verification, 3 enumeration guard exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::document::{compute_document, InstanceDocument, ResultDocument};
use crate::error::Error;
use crate::guard::Guard;
use crate::multiplicity::Method;
use crate::paths::{for_each_nonintersecting, p_spec, q_spec, r_spec, FamilySpec, PathFamily};
use crate::render::{ascii_array, ascii_family, svg_array, svg_family, Format};
use crate::schubert::SchubertDatum;
use crate::tableaux::{for_each_array, shape_of, UnusualArray, UnusualShape};
use crate::verify::{self, Fault, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "schubert-mult",
    version,
    about = "Multiplicities of points on Grassmannian Schubert varieties"
)]
struct Cli {
    /// Enumeration guard; defaults to $SCHUBERT_MULT_GUARD or 10000000.
    #[arg(long, global = true)]
    guard: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the multiplicity by several methods and compare them.
    Compute(ComputeArgs),
    /// List nonintersecting path families or arrays.
    Enumerate(EnumerateArgs),
    /// Draw path families or arrays as ASCII or SVG.
    Render(RenderArgs),
    /// Run the cross-verification sweep.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    i: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    j: Vec<i64>,
    #[arg(long)]
    label: Option<String>,
}

impl InstanceArgs {
    fn document(&self) -> Result<InstanceDocument, Error> {
        let (Some(n), Some(d)) = (self.n, self.d) else {
            return Err(Error::Parse("--n and --d are required".into()));
        };
        Ok(InstanceDocument::new(
            n,
            d,
            self.i.clone(),
            self.j.clone(),
            self.label.clone(),
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DocFormat {
    /// Pretty-printed JSON document.
    Doc,
    /// One JSON document per line.
    Line,
    /// Plain text summary.
    Text,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Comma-separated method names, or `all`.
    #[arg(long, default_value = "all")]
    method: String,
    #[arg(long, value_enum, default_value_t = DocFormat::Doc)]
    format: DocFormat,
    /// Batch file with one instance document per line.
    #[arg(long, conflicts_with_all = ["n", "d", "i", "j", "label"])]
    input: Option<PathBuf>,
    /// Record per-method wall-clock time in the output.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Q,
    P,
    R,
    Tableaux,
}

impl ModelArg {
    fn name(self) -> &'static str {
        match self {
            ModelArg::Q => "q",
            ModelArg::P => "p",
            ModelArg::R => "r",
            ModelArg::Tableaux => "tableaux",
        }
    }
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum)]
    model: ModelArg,
    /// List at most this many objects; the count is always complete.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum)]
    model: ModelArg,
    /// One-based position in the enumeration listing.
    #[arg(long, conflicts_with = "all")]
    index: Option<usize>,
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
    format: RenderFormat,
    /// Directory for `<label>.<model>.<index>.<ext>` files; stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of random instances.
    #[arg(long, default_value_t = 200)]
    counts: usize,
    /// Bounds for random instances, as `n=12,d=5`.
    #[arg(long, default_value = "n=12,d=5")]
    bounds: String,
    /// Bounds for the exhaustive corpus, as `n=7,d=3`.
    #[arg(long, default_value = "n=7,d=3")]
    exhaustive: String,
    /// Inject a known-bad formula to exercise the detector.
    #[arg(long)]
    fault: Option<String>,
    /// Print the per-instance CSV table instead of the summary.
    #[arg(long)]
    csv: bool,
    /// Also write the per-instance CSV table to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let guard = cli.guard.map(Guard).unwrap_or_else(Guard::from_env);
    let result = match &cli.command {
        Command::Compute(a) => compute(a, guard, out, err),
        Command::Enumerate(a) => enumerate(a, guard, out),
        Command::Render(a) => render(a, guard, out),
        Command::Verify(a) => run_verify(a, guard, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DisagreementDetected(_) => EXIT_DISAGREEMENT,
        Error::GuardExceeded { .. } => EXIT_GUARD,
        _ => EXIT_INPUT,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn parse_methods(list: &str) -> Result<(Vec<Method>, bool), Error> {
    if list.trim() == "all" {
        return Ok((Method::ALL.to_vec(), true));
    }
    let methods = list
        .split(',')
        .map(|m| m.trim().parse::<Method>())
        .collect::<Result<Vec<_>, _>>()?;
    if methods.is_empty() {
        return Err(Error::Parse("no methods given".into()));
    }
    Ok((methods, false))
}

fn compute(
    a: &ComputeArgs,
    guard: Guard,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    let (methods, all) = parse_methods(&a.method)?;
    match &a.input {
        None => {
            let doc = compute_one(&a.instance.document()?, &methods, all, guard, a.timing)?;
            out.write_all(format_result(&doc, a.format).as_bytes())
                .map_err(io)?;
            Ok(result_code(&doc, all))
        }
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(io)?;
            let mut worst = EXIT_OK;
            for (k, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let outcome = InstanceDocument::parse(line)
                    .and_then(|inst| compute_one(&inst, &methods, all, guard, a.timing));
                let code = match outcome {
                    Ok(doc) => {
                        out.write_all(format_result(&doc, a.format).as_bytes())
                            .map_err(io)?;
                        result_code(&doc, all)
                    }
                    Err(e) => {
                        let _ = writeln!(err, "line {}: error: {e}", k + 1);
                        exit_code(&e)
                    }
                };
                worst = worst.max(code);
            }
            Ok(worst)
        }
    }
}

fn compute_one(
    instance: &InstanceDocument,
    methods: &[Method],
    all: bool,
    guard: Guard,
    timing: bool,
) -> Result<ResultDocument, Error> {
    let datum = instance.datum()?;
    if !all {
        if let Some(m) = methods.iter().find(|m| !m.applies_to(&datum)) {
            return Err(Error::MethodInapplicable {
                method: m.name().to_string(),
                reason: "requires j = (1, ..., d)".to_string(),
            });
        }
    }
    compute_document(instance, methods, guard, timing)
}

fn result_code(doc: &ResultDocument, all: bool) -> i32 {
    if !doc.agreement {
        EXIT_DISAGREEMENT
    } else if !all && !doc.skipped.is_empty() {
        EXIT_GUARD
    } else {
        EXIT_OK
    }
}

fn format_result(doc: &ResultDocument, format: DocFormat) -> String {
    match format {
        DocFormat::Doc => doc.to_pretty() + "\n",
        DocFormat::Line => doc.to_line() + "\n",
        DocFormat::Text => {
            let inst = &doc.instance;
            let mut s = String::new();
            if let Some(l) = &inst.label {
                let _ = writeln!(s, "label: {l}");
            }
            let _ = writeln!(
                s,
                "n={} d={} i={} j={}",
                inst.n,
                inst.d,
                comma(&inst.i),
                comma(&inst.j)
            );
            let _ = writeln!(s, "s: {}", comma(&doc.s));
            if let (Some(p), Some(f)) = (&doc.partition, &doc.frobenius) {
                let _ = writeln!(s, "partition: {}", comma(p));
                let _ = writeln!(s, "frobenius: ({} | {})", comma(&f.alpha), comma(&f.beta));
            }
            for (m, v) in &doc.values {
                let _ = writeln!(s, "{m}: {v}");
            }
            for (m, why) in &doc.skipped {
                let _ = writeln!(s, "{m}: skipped ({why})");
            }
            let _ = writeln!(s, "thm5_printed: {}", doc.thm5_printed);
            if let Some(t) = &doc.timing_us {
                for (m, us) in t {
                    let _ = writeln!(s, "time {m}: {us} us");
                }
            }
            let _ = writeln!(s, "agreement: {}", doc.agreement);
            if let Some(m) = &doc.multiplicity {
                let _ = writeln!(s, "multiplicity: {m}");
            }
            s
        }
    }
}

fn comma(v: &[i64]) -> String {
    crate::schubert::join(v)
}

enum Item<'a> {
    Family(&'a FamilySpec, &'a [usize], &'a PathFamily),
    Array(&'a UnusualShape, &'a UnusualArray),
}

/// Walks the objects of `model` in listing order, numbering them from 1, and
/// returns how many there are.
fn walk<F>(
    datum: &SchubertDatum,
    model: ModelArg,
    guard: Guard,
    mut visit: F,
) -> Result<usize, Error>
where
    F: FnMut(usize, Item<'_>),
{
    let mut count = 0;
    let spec = match model {
        ModelArg::Q => q_spec(datum),
        ModelArg::P => p_spec(datum)?,
        ModelArg::R => r_spec(datum),
        ModelArg::Tableaux => {
            let shape = shape_of(datum)?;
            for_each_array(&shape, guard, |arr| {
                count += 1;
                visit(count, Item::Array(&shape, arr));
            })?;
            return Ok(count);
        }
    };
    for_each_nonintersecting(&spec, guard, |perm, fam| {
        count += 1;
        visit(count, Item::Family(&spec, perm, fam));
    })?;
    Ok(count)
}

fn enumerate(a: &EnumerateArgs, guard: Guard, out: &mut dyn Write) -> Result<i32, Error> {
    let datum = a.instance.document()?.datum()?;
    let limit = a.limit.unwrap_or(usize::MAX);
    let mut s = String::new();
    let _ = writeln!(s, "# model {} on {datum}", a.model.name());
    let count = walk(&datum, a.model, guard, |k, item| {
        if k > limit {
            return;
        }
        match item {
            Item::Family(_, perm, fam) => {
                let steps: Vec<String> = fam
                    .paths()
                    .iter()
                    .map(|p| {
                        let t = p.step_string();
                        if t.is_empty() {
                            "-".to_string()
                        } else {
                            t
                        }
                    })
                    .collect();
                let perm: Vec<String> = perm.iter().map(|p| (p + 1).to_string()).collect();
                let _ = writeln!(s, "{k}: sigma=({}) {}", perm.join(","), steps.join(" "));
            }
            Item::Array(_, arr) => {
                let _ = writeln!(s, "{k}: {arr}");
            }
        }
    })?;
    let _ = writeln!(s, "count: {count}");
    out.write_all(s.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn render(a: &RenderArgs, guard: Guard, out: &mut dyn Write) -> Result<i32, Error> {
    let instance = a.instance.document()?;
    let datum = instance.datum()?;
    let format = match a.format {
        RenderFormat::Ascii => Format::Ascii,
        RenderFormat::Svg => Format::Svg,
    };
    let wanted = if a.all {
        None
    } else {
        Some(a.index.unwrap_or(1))
    };
    let mut drawings = Vec::new();
    let count = walk(&datum, a.model, guard, |k, item| {
        if wanted.is_some_and(|w| w != k) {
            return;
        }
        let drawing = match (item, format) {
            (Item::Family(spec, _, fam), Format::Ascii) => ascii_family(spec, fam),
            (Item::Family(spec, _, fam), Format::Svg) => svg_family(spec, fam),
            (Item::Array(shape, arr), Format::Ascii) => ascii_array(shape, arr),
            (Item::Array(shape, arr), Format::Svg) => svg_array(shape, arr),
        };
        drawings.push((k, drawing));
    })?;
    if let Some(index) = wanted {
        if drawings.is_empty() {
            return Err(Error::IndexOutOfRange { index, count });
        }
    }
    for (index, drawing) in drawings {
        match &a.out {
            Some(dir) => {
                let path = output_path(dir, &instance, a.model, index, format);
                std::fs::create_dir_all(dir).map_err(io)?;
                std::fs::write(&path, drawing).map_err(io)?;
                writeln!(out, "{}", path.display()).map_err(io)?;
            }
            None => {
                if a.all && format == Format::Ascii {
                    writeln!(out, "# {} {}", a.model.name(), index).map_err(io)?;
                }
                out.write_all(drawing.as_bytes()).map_err(io)?
            }
        }
    }
    Ok(EXIT_OK)
}

fn output_path(
    dir: &Path,
    instance: &InstanceDocument,
    model: ModelArg,
    index: usize,
    format: Format,
) -> PathBuf {
    dir.join(format!(
        "{}.{}.{index}.{}",
        instance.file_label(),
        model.name(),
        format.extension()
    ))
}

/// Parses `n=12,d=5` into `(12, 5)`.
fn parse_bounds(text: &str) -> Result<(i64, i64), Error> {
    let (mut n, mut d) = (None, None);
    for part in text.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad bound {part:?}, expected key=value")))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad bound value in {part:?}")))?;
        match key.trim() {
            "n" => n = Some(value),
            "d" => d = Some(value),
            other => return Err(Error::Parse(format!("unknown bound {other:?}"))),
        }
    }
    match (n, d) {
        (Some(n), Some(d)) if n >= 1 && (1..=n).contains(&d) => Ok((n, d)),
        _ => Err(Error::Parse(format!("bounds {text:?} need 1 <= d <= n"))),
    }
}

fn run_verify(a: &VerifyArgs, guard: Guard, out: &mut dyn Write) -> Result<i32, Error> {
    let (random_max_n, random_max_d) = parse_bounds(&a.bounds)?;
    let (exhaustive_max_n, exhaustive_max_d) = parse_bounds(&a.exhaustive)?;
    let fault = a.fault.as_deref().map(str::parse::<Fault>).transpose()?;
    let config = VerifyConfig {
        seed: a.seed,
        random_count: a.counts,
        random_max_n,
        random_max_d,
        exhaustive_max_n,
        exhaustive_max_d,
        guard,
        fault,
    };
    let report = verify::run(&config);
    if let Some(path) = &a.out {
        std::fs::write(path, report.to_csv()).map_err(io)?;
    }
    let text = if a.csv {
        report.to_csv()
    } else {
        report.to_table()
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(
            std::iter::once("schubert-mult").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn bounds_parse() {
        assert_eq!(parse_bounds("n=12,d=5").unwrap(), (12, 5));
        assert_eq!(parse_bounds("d=3, n=7").unwrap(), (7, 3));
        assert!(parse_bounds("n=3").is_err());
        assert!(parse_bounds("n=3,d=4").is_err());
        assert!(parse_bounds("x=1").is_err());
    }

    #[test]
    fn missing_instance_is_an_input_error() {
        let (code, _, err) = run(&["compute", "--n", "4"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--n and --d"));
    }

    #[test]
    fn unknown_flag_is_an_input_error() {
        assert_eq!(run(&["compute", "--bogus"]).0, EXIT_INPUT);
        assert_eq!(run(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn explicit_lw_on_general_datum_is_rejected() {
        let (code, _, err) = run(&[
            "compute", "--n", "4", "--d", "2", "--i", "2,4", "--j", "2,3", "--method", "lw",
        ]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("lw"));
    }

    #[test]
    fn tiny_guard_on_explicit_enumeration_exits_three() {
        let (code, out, _) = run(&[
            "--guard",
            "0",
            "compute",
            "--n",
            "4",
            "--d",
            "2",
            "--i",
            "2,4",
            "--j",
            "1,2",
            "--method",
            "rz,enum_q",
        ]);
        assert_eq!(code, EXIT_GUARD);
        assert!(out.contains("\"skipped\""));
        let (code, _, _) = run(&[
            "--guard",
            "0",
            "enumerate",
            "--n",
            "4",
            "--d",
            "2",
            "--i",
            "2,4",
            "--j",
            "1,2",
            "--model",
            "q",
        ]);
        assert_eq!(code, EXIT_GUARD);
    }
}
