//! Command-line front end for `braidq`: representation images, closure invariants
//! and the verification suites, rendered as text, JSON or LaTeX.

use std::fmt::Write as _;

use braidq::braid::{check_braid_relations, parse_word};
use braidq::invariants::{alexander, krammer_fraction, markov1_test, markov2_probe};
use braidq::report::{Check, Report};
use braidq::reps::{
    burau_reduced, burau_unreduced, gl_sym_power_module, lie_rep, lk, qpascal_rep, qpascal_sigma1_at, sym2_quantized,
    verify_ext_square_identity, verify_lk_equivalence, verify_spectrum, verify_stability, BurauForm, LambdaSpec,
    LkNotation,
};
use braidq::{BraidWord, LaurentPoly, PolyMatrix, Representation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const SCHEMA: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "braidq", version, about = "Exact braid group representations over Z[t^±1, q^±1]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print generator images, or the image of a word
    Rep(RepArgs),
    /// Alexander polynomial or Krammer fraction of a braid closure
    Invariant(InvariantArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepName {
    Burau,
    ReducedBurau,
    Lk,
    LkOrig,
    Sym2q,
    Qpascal,
    Lie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Notation {
    New,
    Bigelow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Conjugated,
    Standard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantName {
    Alexander,
    Krammer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    BraidRelations,
    LkEquivalence,
    Spectrum,
    Markov1,
    Markov2Probe,
    Stability,
    ExtSquare,
    Humphry,
}

/// Constructor selection shared by `rep` and `verify`.
#[derive(Debug, Clone, Args)]
pub struct RepOptions {
    /// Representation constructor
    #[arg(long = "rep", value_enum, default_value = "lk")]
    pub rep: RepName,
    /// Dimension parameter: q-Pascal matrices are (dim+1)×(dim+1); for `lie` the symmetric power
    #[arg(long)]
    pub dim: Option<usize>,
    /// q-Pascal weights `l0,l1,...,l_dim`, each a Laurent monomial
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Lawrence–Krammer parameterization
    #[arg(long, value_enum, default_value = "new")]
    pub notation: Notation,
    /// Reduced Burau form
    #[arg(long, value_enum, default_value = "conjugated")]
    pub form: Form,
}

#[derive(Debug, Clone, Args)]
pub struct RepArgs {
    #[arg(long)]
    pub strands: usize,
    #[command(flatten)]
    pub options: RepOptions,
    /// Braid word, e.g. "1 -2 1" or "s1 s2^-1"
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct InvariantArgs {
    #[arg(long)]
    pub strands: usize,
    #[arg(long, value_enum)]
    pub invariant: InvariantName,
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub check: CheckName,
    /// Required except for `ext-square` (fixed at 4) and `humphry` (fixed at 3)
    #[arg(long)]
    pub strands: Option<usize>,
    #[command(flatten)]
    pub options: RepOptions,
    /// Word for the Markov checks; defaults to the trefoil `1 1 1 2 … (n-1)`
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Rendered output together with the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

/// Failures that map to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<braidq::Error> for UsageError {
    fn from(e: braidq::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, UsageError>;

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Rep(args) => cmd_rep(args),
        Command::Invariant(args) => cmd_invariant(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn require_strands(strands: usize) -> CliResult<()> {
    if strands < 2 {
        return Err(UsageError(format!("--strands must be at least 2, got {strands}")));
    }
    Ok(())
}

fn parse_lambda(text: &str) -> CliResult<Vec<LaurentPoly>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<LaurentPoly>()
                .map_err(|e| UsageError(format!("bad --lambda entry {:?}: {e}", s.trim())))
        })
        .collect()
}

pub fn build_rep(strands: usize, opts: &RepOptions) -> CliResult<Representation> {
    require_strands(strands)?;
    let rep = match opts.rep {
        RepName::Burau => burau_unreduced(strands)?,
        RepName::ReducedBurau => burau_reduced(
            strands,
            match opts.form {
                Form::Conjugated => BurauForm::Conjugated,
                Form::Standard => BurauForm::Standard,
            },
        )?,
        RepName::Lk => lk(
            strands,
            match opts.notation {
                Notation::New => LkNotation::New,
                Notation::Bigelow => LkNotation::Bigelow,
            },
        )?,
        RepName::LkOrig => lk(strands, LkNotation::Bigelow)?,
        RepName::Sym2q => sym2_quantized(strands)?,
        RepName::Lie => lie_rep(strands, opts.dim.unwrap_or(1))?,
        RepName::Qpascal => {
            if strands != 3 {
                return Err(UsageError(format!("qpascal is a representation of B_3, got --strands {strands}")));
            }
            let lambda = match (&opts.lambda, opts.dim) {
                (Some(text), dim) => {
                    let entries = parse_lambda(text)?;
                    if let Some(d) = dim {
                        if entries.len() != d + 1 {
                            return Err(UsageError(format!(
                                "--dim {d} needs {} lambda entries, got {}",
                                d + 1,
                                entries.len()
                            )));
                        }
                    }
                    LambdaSpec::new(entries)?
                }
                (None, dim) => LambdaSpec::identity(dim.unwrap_or(2)),
            };
            qpascal_rep(&lambda)?
        }
    };
    Ok(rep)
}

fn parse(word: &str, strands: usize) -> CliResult<BraidWord> {
    parse_word(word, strands).map_err(|e| UsageError(format!("bad --word: {e}")))
}

fn matrix_text(name: &str, m: &PolyMatrix) -> String {
    format!("{name} =\n{m}\n")
}

fn matrix_latex(name: &str, m: &PolyMatrix) -> String {
    format!("{name}\\mapsto {}\n", m.to_latex())
}

pub fn cmd_rep(args: &RepArgs) -> CliResult<Outcome> {
    let rep = build_rep(args.strands, &args.options)?;
    let images: Vec<(String, String, PolyMatrix)> = match &args.word {
        Some(text) => {
            let w = parse(text, args.strands)?;
            vec![(format!("[{w}]"), w.to_string(), rep.image_of_word(&w)?)]
        }
        None => (1..args.strands)
            .map(|r| (format!("s{r}"), format!("\\sigma_{{{r}}}"), rep.generator(r).clone()))
            .collect(),
    };
    let output = match args.format {
        Format::Text => {
            let mut out = format!("{} on {} strands, dimension {}\n", rep.label(), rep.strands(), rep.dim());
            for (name, _, m) in &images {
                out.push_str(&matrix_text(name, m));
            }
            out
        }
        Format::Latex => images
            .iter()
            .map(|(name, tex, m)| {
                let lhs = if args.word.is_some() { format!("\\rho({})", name.trim_matches(['[', ']'])) } else { tex.clone() };
                matrix_latex(&lhs, m)
            })
            .collect(),
        Format::Json => {
            let mut doc = json!({
                "schema": SCHEMA,
                "rep": rep.label(),
                "strands": rep.strands(),
                "dim": rep.dim(),
            });
            match &args.word {
                Some(_) => {
                    let (_, word, m) = &images[0];
                    doc["word"] = json!(word);
                    doc["image"] = m.to_json();
                }
                None => {
                    doc["generators"] = Value::Array(images.iter().map(|(_, _, m)| m.to_json()).collect());
                }
            }
            json_text(&doc)
        }
    };
    Ok(Outcome { output, code: 0 })
}

fn json_text(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn cmd_invariant(args: &InvariantArgs) -> CliResult<Outcome> {
    require_strands(args.strands)?;
    let w = parse(&args.word, args.strands)?;
    let output = match args.invariant {
        InvariantName::Alexander => {
            let a = alexander(&w)?;
            match args.format {
                Format::Text => format!("{}\n", a.normalized),
                Format::Latex => format!("{}\n", a.normalized.to_latex()),
                Format::Json => json_text(&with_schema(a.to_json())),
            }
        }
        InvariantName::Krammer => {
            let k = krammer_fraction(&w)?;
            match args.format {
                Format::Text => match &k.collapsed {
                    Some(p) => format!("{p}\n"),
                    None => format!("{}\n", k.fraction),
                },
                Format::Latex => match &k.collapsed {
                    Some(p) => format!("{}\n", p.to_latex()),
                    None => format!(
                        "\\frac{{{}}}{{{}}}\n",
                        k.fraction.num().to_latex(),
                        k.fraction.den().to_latex()
                    ),
                },
                Format::Json => json_text(&with_schema(k.to_json())),
            }
        }
    };
    Ok(Outcome { output, code: 0 })
}

fn with_schema(mut v: Value) -> Value {
    v["schema"] = json!(SCHEMA);
    v
}

/// `σ_1³ σ_2 ⋯ σ_{n-1}`, whose closure is the trefoil.
fn default_markov_word(strands: usize) -> BraidWord {
    let mut letters = vec![1, 1];
    letters.extend(1..strands as i64);
    BraidWord::new(strands, letters).expect("valid letters")
}

fn conjugators(strands: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for i in 1..strands as i64 {
        out.push(BraidWord::new(strands, vec![i]).expect("valid letter"));
        out.push(BraidWord::new(strands, vec![-i]).expect("valid letter"));
        if i + 1 < strands as i64 {
            out.push(BraidWord::new(strands, vec![i, -(i + 1)]).expect("valid letters"));
        }
    }
    out
}

fn humphry_report(max_dim: usize) -> CliResult<Report> {
    let mut report = Report::new(format!("humphry dims 2..{}", max_dim + 1));
    let u = PolyMatrix::from_ints(&[&[1, 1], &[0, 1]]);
    let one = LaurentPoly::one();
    for m in 1..=max_dim {
        report.push(Check::matrices(
            format!("S^{m}([[1,1],[0,1]]) = sigma_1(1,{m})"),
            &u.sym_power(m)?,
            &qpascal_sigma1_at(m, &one)?,
        ));
        let module = gl_sym_power_module(2, m)?;
        let at_one = qpascal_rep(&LambdaSpec::identity(m))?.substitute(&LaurentPoly::t(), &one)?;
        report.push(Check::matrices(
            format!("sigma_1(1,{m}) = exp(X) on S^{m}"),
            at_one.generator(1),
            &module.x[0].exp_nilpotent()?,
        ));
        report.push(Check::matrices(
            format!("sigma_2(1,{m}) = exp(-Y) on S^{m}"),
            at_one.generator(2),
            &(-&module.y[0]).exp_nilpotent()?,
        ));
    }
    Ok(report)
}

fn fixed_strands(given: Option<usize>, fixed: usize, check: &str) -> CliResult<usize> {
    match given {
        None => Ok(fixed),
        Some(n) if n == fixed => Ok(n),
        Some(n) => Err(UsageError(format!("{check} runs on {fixed} strands, got --strands {n}"))),
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> CliResult<Outcome> {
    let strands = || {
        args.strands
            .ok_or_else(|| UsageError("--strands is required for this check".into()))
            .and_then(|n| require_strands(n).map(|_| n))
    };
    let word = |n: usize| match &args.word {
        Some(text) => parse(text, n),
        None => Ok(default_markov_word(n)),
    };
    let mut always_pass = false;
    let reports = match args.check {
        CheckName::BraidRelations => vec![check_braid_relations(&build_rep(strands()?, &args.options)?)],
        CheckName::LkEquivalence => vec![verify_lk_equivalence(strands()?)?],
        CheckName::Spectrum => vec![verify_spectrum(strands()?)?],
        CheckName::Markov1 => {
            let n = strands()?;
            vec![markov1_test(&word(n)?, &conjugators(n))?]
        }
        CheckName::Markov2Probe => {
            always_pass = true;
            vec![markov2_probe(&word(strands()?)?)?.to_report()]
        }
        CheckName::Stability => {
            let n = strands()?;
            vec![
                verify_stability(n, BurauForm::Conjugated)?,
                verify_stability(n, BurauForm::Standard)?,
            ]
        }
        CheckName::ExtSquare => {
            fixed_strands(args.strands, 4, "ext-square")?;
            vec![verify_ext_square_identity()?]
        }
        CheckName::Humphry => {
            fixed_strands(args.strands, 3, "humphry")?;
            vec![humphry_report(args.options.dim.unwrap_or(7))?]
        }
    };
    let passed = reports.iter().all(Report::all_passed);
    let code = if passed || always_pass { 0 } else { 1 };
    let output = match args.format {
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                writeln!(out, "{r}").expect("write to string");
            }
            out
        }
        Format::Json => json_text(&json!({
            "schema": SCHEMA,
            "check": args.check.to_possible_value().map(|v| v.get_name().to_string()),
            "passed": passed,
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
        })),
        Format::Latex => reports.iter().map(report_latex).collect(),
    };
    Ok(Outcome { output, code })
}

fn report_json(r: &Report) -> Value {
    json!({
        "title": r.title,
        "passed": r.all_passed(),
        "checks": r.checks.iter().map(|c| json!({
            "label": c.label,
            "passed": c.passed,
            "detail": c.detail,
            "difference": c.difference.as_ref().map(PolyMatrix::to_json),
        })).collect::<Vec<_>>(),
    })
}

fn report_latex(r: &Report) -> String {
    let mut out = format!("% {}\n\\begin{{tabular}}{{ll}}\n", r.title);
    for c in &r.checks {
        writeln!(
            out,
            "{} & \\verb!{}! \\\\",
            if c.passed { "PASS" } else { "FAIL" },
            c.label.replace('!', "")
        )
        .expect("write to string");
    }
    out.push_str("\\end{tabular}\n");
    out
}
