//! Command-line front end.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! code together with everything that should go to stdout and stderr, so the
//! binary is a thin wrapper and the whole surface is testable in-process.
//!
//! Exit codes: 0 success, 1 domain error (`error: <Name>: <detail>`),
//! 2 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::gaussian::GaussianElement;
use crate::gf::Field;
use crate::hartley::TransformPlan;
use crate::ktrig::TrigTable;
use crate::spectra::{cyclotomic_classes, expand_spectrum, is_valid_spectrum};
use crate::text::{self, parse_element, parse_gaussian, parse_poly, parse_vector};

#[derive(Parser, Debug)]
#[command(
    name = "gf-hartley",
    version,
    about = "Trigonometry and the Hartley transform over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe GF(p^r)
    FieldInfo {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// First element of a given order in GF(q^m)
    FindAlpha {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        ext: ExtArgs,
        /// Required multiplicative order
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// cos_k(i) and sin_k(i) tables, k indexing rows
    TrigTable {
        #[command(flatten)]
        plan: PlanArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Forward Hartley transform of a signal
    Forward {
        #[command(flatten)]
        plan: PlanArgs,
        #[command(flatten)]
        input: SignalInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Inverse Hartley transform of a spectrum
    Inverse {
        #[command(flatten)]
        plan: PlanArgs,
        #[command(flatten)]
        input: SpectrumInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cyclic convolution computed in the Hartley domain
    Conv {
        #[command(flatten)]
        plan: PlanArgs,
        /// First signal
        #[arg(long)]
        g: String,
        /// Second signal
        #[arg(long)]
        v: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Spectrum of the signal delayed by d samples
    Shift {
        #[command(flatten)]
        plan: PlanArgs,
        #[command(flatten)]
        input: SpectrumInput,
        /// Delay
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Whether a spectrum comes from a base-field signal
    Validate {
        #[command(flatten)]
        plan: PlanArgs,
        #[command(flatten)]
        input: SpectrumInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cyclotomic classes of k -> -q*k mod N
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Valid spectrum from one value per class representative
    Expand {
        #[command(flatten)]
        plan: PlanArgs,
        /// `k=value`, one per representative
        #[arg(long = "assign", required = true)]
        assign: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Characteristic
    #[arg(long)]
    p: u64,
    /// Degree of the base field over GF(p)
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Base field modulus, e.g. "x^5+x^4+x^2+1"
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args, Debug)]
struct ExtArgs {
    /// Degree of the extension holding the kernel
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Modulus of GF(q^m) over GF(p)
    #[arg(long)]
    ext_modulus: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = true)]
struct KernelArgs {
    /// Kernel element in GF(q^m)
    #[arg(long)]
    alpha: Option<String>,
    /// Block length; defaults to the order of --alpha
    #[arg(long)]
    n: Option<u64>,
}

#[derive(Args, Debug)]
struct PlanArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    ext: ExtArgs,
    #[command(flatten)]
    kernel: KernelArgs,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SignalInput {
    /// Comma-separated values, e.g. "1,2,0,0,0,0"
    #[arg(long)]
    signal: Option<String>,
    /// Read the values from a file
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SpectrumInput {
    /// Comma-separated values, e.g. "3,2+2j,2j"
    #[arg(long)]
    spectrum: Option<String>,
    /// Read the values from a file
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = Result<T, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let (output, result) = execute(cli.command);
    let failure = match result {
        Ok(text) => match &output.out {
            None => {
                return Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            }
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => {
                    return Outcome {
                        code: 0,
                        stdout: String::new(),
                        stderr: String::new(),
                    }
                }
                Err(e) => Failure::Io(format!("{}: {e}", path.display())),
            },
        },
        Err(f) => f,
    };
    let (code, stderr) = match failure {
        Failure::Domain(e) => (1, format!("error: {}: {e}\n", e.name())),
        Failure::Io(msg) => (1, format!("error: Io: {msg}\n")),
        Failure::Usage(msg) => (2, format!("error: usage: {msg}\n")),
    };
    Outcome {
        code,
        stdout: String::new(),
        stderr,
    }
}

fn execute(command: Command) -> (OutputArgs, CliResult<String>) {
    match command {
        Command::FieldInfo { field, output } => {
            let r = field_info(&field, output.format);
            (output, r)
        }
        Command::FindAlpha {
            field,
            ext,
            n,
            output,
        } => {
            let r = find_alpha(&field, &ext, n, output.format);
            (output, r)
        }
        Command::TrigTable { plan, output } => {
            let r = build_plan(&plan).map(|plan| render_table(&plan.trig().table(), output.format));
            (output, r)
        }
        Command::Forward {
            plan,
            input,
            output,
        } => {
            let r = (|| {
                let plan = build_plan(&plan)?;
                let text = read_values(input.signal, input.input)?;
                let signal = plan.signal(parse_vector(&text, plan.gaussian_field())?)?;
                let spectrum = plan.forward(&signal)?;
                Ok(render_values(&plan, spectrum.values(), output.format))
            })();
            (output, r)
        }
        Command::Inverse {
            plan,
            input,
            output,
        } => {
            let r = (|| {
                let plan = build_plan(&plan)?;
                let text = read_values(input.spectrum, input.input)?;
                let spectrum = plan.spectrum(parse_vector(&text, plan.gaussian_field())?)?;
                let signal = plan.inverse(&spectrum)?;
                Ok(render_values(&plan, signal.values(), output.format))
            })();
            (output, r)
        }
        Command::Conv { plan, g, v, output } => {
            let r = (|| {
                let plan = build_plan(&plan)?;
                let gi = plan.gaussian_field();
                let g = plan.signal(parse_vector(&g, gi)?)?;
                let v = plan.signal(parse_vector(&v, gi)?)?;
                let w = plan.convolve_spectral(&g, &v)?;
                Ok(render_values(&plan, w.values(), output.format))
            })();
            (output, r)
        }
        Command::Shift {
            plan,
            input,
            d,
            output,
        } => {
            let r = (|| {
                let plan = build_plan(&plan)?;
                let text = read_values(input.spectrum, input.input)?;
                let spectrum = plan.spectrum(parse_vector(&text, plan.gaussian_field())?)?;
                let shifted = plan.shift_spectrum(&spectrum, d)?;
                Ok(render_values(&plan, shifted.values(), output.format))
            })();
            (output, r)
        }
        Command::Validate {
            plan,
            input,
            output,
        } => {
            let r = (|| {
                let plan = build_plan(&plan)?;
                let text = read_values(input.spectrum, input.input)?;
                let spectrum = plan.spectrum(parse_vector(&text, plan.gaussian_field())?)?;
                let valid = is_valid_spectrum(&plan, &spectrum)?;
                Ok(match output.format {
                    Format::Text => format!("{}\n", if valid { "valid" } else { "invalid" }),
                    Format::Json => to_json(&json!({
                        "plan": PlanJson::from(&plan),
                        "valid": valid,
                    })),
                })
            })();
            (output, r)
        }
        Command::Classes { n, q, output } => {
            let r = cyclotomic_classes(n, q)
                .map(|c| match output.format {
                    Format::Text => format!("{c}\n"),
                    Format::Json => to_json(&c),
                })
                .map_err(Failure::from);
            (output, r)
        }
        Command::Expand {
            plan,
            assign,
            output,
        } => {
            let r = (|| {
                let plan = build_plan(&plan)?;
                let mut assignments = BTreeMap::new();
                for item in &assign {
                    let (k, value) = item.split_once('=').ok_or_else(|| {
                        Failure::Usage(format!("--assign expects k=value, got '{item}'"))
                    })?;
                    let k: usize = k.trim().parse().map_err(|_| {
                        Failure::Usage(format!("--assign index '{k}' is not a number"))
                    })?;
                    assignments.insert(k, parse_gaussian(value, plan.gaussian_field())?);
                }
                let spectrum = expand_spectrum(&plan, &assignments)?;
                Ok(render_values(&plan, spectrum.values(), output.format))
            })();
            (output, r)
        }
    }
}

fn build_field(args: &FieldArgs) -> CliResult<Field> {
    let modulus = args
        .modulus
        .as_deref()
        .map(|m| parse_poly(m, args.p))
        .transpose()?;
    Ok(Field::new(args.p, args.r, modulus.as_deref())?)
}

fn build_ext(base: &Field, args: &ExtArgs) -> CliResult<Field> {
    if args.m == 0 {
        return Err(Failure::Usage("--m must be at least 1".into()));
    }
    if args.m == 1 && args.ext_modulus.is_none() {
        return Ok(base.clone());
    }
    let p = base.characteristic();
    let modulus = args
        .ext_modulus
        .as_deref()
        .map(|m| parse_poly(m, p))
        .transpose()?;
    Ok(Field::new(p, base.degree() * args.m, modulus.as_deref())?)
}

fn build_plan(args: &PlanArgs) -> CliResult<TransformPlan> {
    let base = build_field(&args.field)?;
    let ext = build_ext(&base, &args.ext)?;
    match (&args.kernel.alpha, args.kernel.n) {
        (Some(alpha), n) => {
            let alpha = parse_element(alpha, &ext)?;
            if let Some(n) = n {
                let order = alpha.order()?;
                if order != n {
                    return Err(Failure::Usage(format!(
                        "--alpha {alpha} has order {order}, but --n is {n}"
                    )));
                }
            }
            Ok(TransformPlan::new(base, ext, alpha)?)
        }
        (None, Some(n)) => Ok(TransformPlan::with_length(base, ext, n)?),
        (None, None) => Err(Failure::Usage("one of --alpha or --n is required".into())),
    }
}

fn read_values(inline: Option<String>, path: Option<PathBuf>) -> CliResult<String> {
    match (inline, path) {
        (Some(text), _) => Ok(text),
        (None, Some(path)) => std::fs::read_to_string(&path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        (None, None) => Err(Failure::Usage("no input values given".into())),
    }
}

#[derive(Serialize)]
struct FieldJson {
    p: u64,
    r: usize,
    size: u64,
    modulus: String,
    unit_factors: Vec<u64>,
    modulus_primitive: bool,
}

impl From<&Field> for FieldJson {
    fn from(f: &Field) -> Self {
        FieldJson {
            p: f.characteristic(),
            r: f.degree(),
            size: f.size(),
            modulus: text::render_poly(f.modulus()),
            unit_factors: f.unit_group_factors().to_vec(),
            modulus_primitive: f.modulus_is_primitive(),
        }
    }
}

#[derive(Serialize)]
struct PlanJson {
    p: u64,
    r: usize,
    m: usize,
    base_modulus: String,
    ext_modulus: String,
    alpha: String,
    #[serde(rename = "N")]
    n: usize,
}

impl From<&TransformPlan> for PlanJson {
    fn from(plan: &TransformPlan) -> Self {
        PlanJson {
            p: plan.base().characteristic(),
            r: plan.base().degree(),
            m: plan.m(),
            base_modulus: text::render_poly(plan.base().modulus()),
            ext_modulus: text::render_poly(plan.ext().modulus()),
            alpha: plan.alpha().to_string(),
            n: plan.len(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output types always serialize");
    s.push('\n');
    s
}

fn field_info(args: &FieldArgs, format: Format) -> CliResult<String> {
    let field = build_field(args)?;
    let info = FieldJson::from(&field);
    Ok(match format {
        Format::Json => to_json(&info),
        Format::Text => {
            let factors: Vec<String> = info.unit_factors.iter().map(u64::to_string).collect();
            let mut out = String::new();
            let _ = writeln!(out, "field: {field}");
            let _ = writeln!(out, "p: {}", info.p);
            let _ = writeln!(out, "r: {}", info.r);
            let _ = writeln!(out, "size: {}", info.size);
            let _ = writeln!(out, "modulus: {}", info.modulus);
            let _ = writeln!(out, "unit-factors: {}", factors.join(","));
            let _ = writeln!(out, "modulus-primitive: {}", info.modulus_primitive);
            out
        }
    })
}

fn find_alpha(field: &FieldArgs, ext: &ExtArgs, n: u64, format: Format) -> CliResult<String> {
    let base = build_field(field)?;
    let ext = build_ext(&base, ext)?;
    let alpha = ext.find_element_of_order(n)?;
    Ok(match format {
        Format::Text => format!("{alpha}\n"),
        Format::Json => to_json(&json!({
            "field": FieldJson::from(&ext),
            "N": n,
            "alpha": alpha.to_string(),
        })),
    })
}

fn render_values(plan: &TransformPlan, values: &[GaussianElement], format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", text::render_vector(values)),
        Format::Json => {
            let values: Vec<String> = values.iter().map(ToString::to_string).collect();
            to_json(&json!({ "plan": PlanJson::from(plan), "values": values }))
        }
    }
}

fn render_table(table: &TrigTable, format: Format) -> String {
    let strings = |grid: &[Vec<GaussianElement>]| -> Vec<Vec<String>> {
        grid.iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    };
    let cos = strings(&table.cos);
    let sin = strings(&table.sin);
    match format {
        Format::Json => to_json(&json!({ "cos": cos, "sin": sin })),
        Format::Text => {
            let n = cos.len();
            let corner = "k\\i";
            let cell = cos
                .iter()
                .chain(&sin)
                .flatten()
                .map(String::len)
                .chain(std::iter::once((n - 1).to_string().len()))
                .max()
                .unwrap_or(1);
            let label = corner.len().max((n - 1).to_string().len());
            let mut out = String::new();
            for (title, grid) in [("cos_k(i)", &cos), ("sin_k(i)", &sin)] {
                if !out.is_empty() {
                    out.push('\n');
                }
                let _ = writeln!(out, "{title}");
                let _ = write!(out, "{corner:>label$}");
                for i in 0..n {
                    let _ = write!(out, " {i:>cell$}");
                }
                out.push('\n');
                for (k, row) in grid.iter().enumerate() {
                    let _ = write!(out, "{k:>label$}");
                    for value in row {
                        let _ = write!(out, " {value:>cell$}");
                    }
                    out.push('\n');
                }
            }
            out
        }
    }
}
