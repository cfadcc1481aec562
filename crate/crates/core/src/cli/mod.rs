//! Command-line surface: an expression language over words, compositions,
//! bicompositions and tensors, plus subcommands for relation tables,
//! regularization and numerics.
//!
//! [`run_command`] does all the work and returns the exit code and both
//! output streams, so the binary is a thin wrapper and tests call it
//! directly.

mod ast;
mod eval;
mod parser;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

pub use ast::{Expr, Kind, Node, Op, Span};
pub use eval::{evaluate, Value};
pub use parser::{parse, ParseError, ParseErrorKind};

use crate::algebra::{format_ratio, TPoly};
use crate::compositions::{BiComposition, Composition};
use crate::error::Error;
use crate::numerics::{li_eval, mzv_eval, z_directional, zeta_nonpos, zeta_pos, Estimate, PrecisionContext};
use crate::regularization::{
    beta_apply, build_rho, dsh_relations, eds_relations, regpoly_json, relation_rank, relations_csv,
    zsh_reduce, zst_reduce, RegPoly, RegPolyDisplay, Relation,
};
use crate::verify::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_SYNTAX: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, ClapParser)]
#[command(name = "rota-mzv", version, about = "Shuffle algebra, regularization and numerics for multiple zeta values")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Decimal digits requested (binary64 supports at most 16).
    #[arg(long, global = true, default_value_t = 15)]
    digits: u32,
    /// Largest summation index used by numeric evaluation.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: u64,
    /// Target absolute error.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    /// Write the result to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression such as `sh([1],[2]) - st([1],[2])`.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Double shuffle relations of a weight.
    Dsh {
        #[arg(long)]
        weight: u32,
    },
    /// Extended double shuffle relations of a weight.
    Eds {
        #[arg(long)]
        weight: u32,
    },
    /// Rank of the extended double shuffle relations and the dimension bound.
    Rank {
        #[arg(long)]
        weight: u32,
    },
    /// Shuffle regularization of a positive composition.
    Zsh { composition: String },
    /// Stuffle regularization of a positive composition.
    Zst { composition: String },
    /// Apply ρ to a numeric polynomial `c0,c1,...` in T, or list its coefficients.
    #[command(allow_negative_numbers = true)]
    Rho {
        coeffs: Option<String>,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Apply β = ρ^-1 to a numeric polynomial `c0,c1,...` in T, or list its coefficients.
    #[command(allow_negative_numbers = true)]
    Beta {
        coeffs: Option<String>,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// ζ(n) for an integer n (exact for n <= 0) or a convergent composition.
    #[command(allow_negative_numbers = true)]
    Zeta { arg: String },
    /// Multiple polylogarithm Li_s(z).
    #[command(allow_negative_numbers = true)]
    Li {
        composition: String,
        #[arg(long)]
        z: f64,
    },
    /// Directional regularized value Z(s; r; eps) of `[s1,... | r1,...]`.
    #[command(allow_negative_numbers = true)]
    Zdir {
        bicomposition: String,
        #[arg(long)]
        eps: f64,
    },
    /// Run self-check suites (`all` or one suite name).
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
    },
}

/// Exit code with the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(ParseError),
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

type CmdResult = Result<(i32, String), Failure>;

/// Runs one command line (without the program name).
pub fn run_command<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("rota-mzv")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { code: EXIT_SYNTAX, stdout: String::new(), stderr: text }
            } else {
                CommandOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = PrecisionContext::new(cli.digits, cli.budget, cli.tol)
        .map_err(Failure::from)
        .and_then(|ctx| dispatch(&cli, &ctx));
    match result {
        Ok((code, text)) => match &cli.out {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => CommandOutput { code, stdout: String::new(), stderr: String::new() },
                Err(e) => CommandOutput {
                    code: EXIT_DOMAIN,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
            None => CommandOutput { code, stdout: text, stderr: String::new() },
        },
        Err(f) => {
            let (code, msg) = match f {
                Failure::Parse(e) => (EXIT_SYNTAX, e.to_string()),
                Failure::Usage(m) => (EXIT_SYNTAX, m),
                Failure::Lib(e @ Error::PrecisionUnreachable(_)) => (EXIT_PRECISION, e.to_string()),
                Failure::Lib(e) => (EXIT_DOMAIN, e.to_string()),
            };
            CommandOutput { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}

fn parse_kind(text: &str, kind: Kind) -> Result<Expr, Failure> {
    let e = parse(text)?;
    if e.kind != kind {
        return Err(Failure::Parse(ParseError {
            kind: ParseErrorKind::KindMismatch,
            offset: 0,
            message: format!("expected a {kind}, found a {}", e.kind),
        }));
    }
    Ok(e)
}

fn composition_arg(text: &str) -> Result<Composition, Failure> {
    match parse_kind(text, Kind::Composition)?.node {
        Node::Composition(c) => Ok(c),
        _ => Err(Failure::Usage(format!("expected a composition literal such as [1,2], got `{text}`"))),
    }
}

fn bicomposition_arg(text: &str) -> Result<BiComposition, Failure> {
    match parse_kind(text, Kind::BiComposition)?.node {
        Node::BiComposition(b) => Ok(b),
        _ => Err(Failure::Usage(format!("expected a literal such as [1,2 | 1,0], got `{text}`"))),
    }
}

fn lines(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn json_text(v: &Json) -> String {
    lines(serde_json::to_string_pretty(v).expect("serializable"))
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Usage(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn dispatch(cli: &Cli, ctx: &PrecisionContext) -> CmdResult {
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Eval { expr } => {
            let value = evaluate(&parse(expr)?)?;
            match fmt {
                Format::Text => lines(value.to_string()),
                Format::Json => json_text(&value.to_json()),
                Format::Csv => csv_text(
                    &["basis", "coefficient"],
                    value.terms().into_iter().map(|(b, c)| vec![b, format_ratio(&c)]),
                )?,
            }
        }
        Command::Dsh { weight } => relations_out(&dsh_relations(*weight), fmt)?,
        Command::Eds { weight } => relations_out(&eds_relations(*weight), fmt)?,
        Command::Rank { weight } => {
            let (rank, bound) = relation_rank(*weight)?;
            match fmt {
                Format::Text => format!("weight {weight}: rank {rank}, dimension bound {bound}\n"),
                Format::Json => json_text(&json!({ "weight": weight, "rank": rank, "bound": bound })),
                Format::Csv => csv_text(
                    &["weight", "rank", "bound"],
                    [vec![weight.to_string(), rank.to_string(), bound.to_string()]],
                )?,
            }
        }
        Command::Zsh { composition } => regpoly_out(&zsh_reduce(&composition_arg(composition)?)?, fmt)?,
        Command::Zst { composition } => regpoly_out(&zst_reduce(&composition_arg(composition)?)?, fmt)?,
        Command::Rho { coeffs, order } => rho_out(coeffs.as_deref(), *order, false, ctx, fmt)?,
        Command::Beta { coeffs, order } => rho_out(coeffs.as_deref(), *order, true, ctx, fmt)?,
        Command::Zeta { arg } => {
            if arg.trim_start().starts_with('[') {
                estimate_out(mzv_eval(&composition_arg(arg)?, ctx)?, fmt)
            } else {
                let n: i64 = arg
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("expected an integer or a composition, got `{arg}`")))?;
                if n <= 0 {
                    let exact = zeta_nonpos((-n) as u32);
                    match fmt {
                        Format::Json => json_text(&json!({ "exact": format_ratio(&exact) })),
                        _ => format!("{}\n", crate::algebra::format_short(&exact)),
                    }
                } else if n == 1 {
                    return Err(Error::Divergent("ζ(1) is the harmonic series".into()).into());
                } else {
                    estimate_out(zeta_pos(n as u32, ctx)?, fmt)
                }
            }
        }
        Command::Li { composition, z } => estimate_out(li_eval(&composition_arg(composition)?, *z, ctx)?, fmt),
        Command::Zdir { bicomposition, eps } => {
            estimate_out(z_directional(&bicomposition_arg(bicomposition)?, *eps, ctx)?, fmt)
        }
        Command::Verify { suite, max_weight } => {
            let reports = run_suite(suite, *max_weight, ctx)?;
            let ok = reports.iter().all(|r| r.passed);
            let body = match fmt {
                Format::Json => json_text(&Json::Array(
                    reports
                        .iter()
                        .map(|r| json!({ "suite": r.name, "passed": r.passed, "detail": r.detail }))
                        .collect(),
                )),
                Format::Csv => csv_text(
                    &["suite", "passed", "detail"],
                    reports.iter().map(|r| vec![r.name.to_string(), r.passed.to_string(), r.detail.clone()]),
                )?,
                Format::Text => reports.iter().fold(String::new(), |mut s, r| {
                    let _ = writeln!(s, "{r}");
                    s
                }),
            };
            return Ok((if ok { EXIT_OK } else { EXIT_DOMAIN }, body));
        }
    };
    Ok((EXIT_OK, text))
}

fn relations_out(rels: &[Relation], fmt: Format) -> Result<String, Failure> {
    Ok(match fmt {
        Format::Text => rels.iter().fold(String::new(), |mut s, r| {
            let _ = writeln!(s, "{r}");
            s
        }),
        Format::Csv => relations_csv(rels)?,
        Format::Json => json_text(&Json::Array(
            rels.iter()
                .map(|r| {
                    let terms: Vec<Json> = r
                        .combination
                        .iter()
                        .map(|(c, q)| json!({ "composition": c.entries(), "coeff": format_ratio(q) }))
                        .collect();
                    json!({
                        "weight": r.weight,
                        "source_pair": [r.source.0.entries(), r.source.1.entries()],
                        "terms": terms,
                    })
                })
                .collect(),
        )),
    })
}

fn regpoly_out(p: &RegPoly, fmt: Format) -> Result<String, Failure> {
    Ok(match fmt {
        Format::Text => lines(RegPolyDisplay(p).to_string()),
        Format::Json => json_text(&regpoly_json(p)),
        Format::Csv => {
            let mut rows = Vec::new();
            for (k, e) in p.iter().rev() {
                for (symbols, c) in e.iter() {
                    let names: Vec<String> = symbols.iter().map(ToString::to_string).collect();
                    rows.push(vec![k.to_string(), names.join("*"), format_ratio(c)]);
                }
            }
            csv_text(&["t_power", "symbols", "coefficient"], rows)?
        }
    })
}

/// Shortest fixed-point rendering with at most ten decimals.
fn num(x: f64) -> String {
    let s = format!("{x:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

fn rho_out(coeffs: Option<&str>, order: usize, inverse: bool, ctx: &PrecisionContext, fmt: Format) -> Result<String, Failure> {
    let Some(list) = coeffs else {
        let rho = build_rho(order, ctx)?;
        let rows: Vec<(usize, f64, f64)> = (0..=order).map(|k| (k, rho.gamma[k], rho.delta[k])).collect();
        return Ok(match fmt {
            Format::Text => rows.iter().fold(String::from("k gamma delta\n"), |mut s, (k, g, d)| {
                let _ = writeln!(s, "{k} {} {}", num(*g), num(*d));
                s
            }),
            Format::Json => json_text(&json!({ "gamma": rho.gamma, "delta": rho.delta })),
            Format::Csv => csv_text(
                &["k", "gamma", "delta"],
                rows.iter().map(|(k, g, d)| vec![k.to_string(), g.to_string(), d.to_string()]),
            )?,
        });
    };
    let values: Vec<f64> = list
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("expected comma-separated coefficients c0,c1,..., got `{list}`")))?;
    let p = TPoly::from_coeffs(values.iter().enumerate().map(|(k, c)| (k as u32, *c)));
    let rho = build_rho(order.max(values.len().saturating_sub(1)), ctx)?;
    let image = if inverse { beta_apply(&p, &rho)? } else { crate::regularization::rho_apply(&p, &rho)? };
    Ok(match fmt {
        Format::Text => lines(image.to_string()),
        Format::Json => json_text(&Json::Object(image.iter().map(|(k, c)| (format!("T^{k}"), json!(c))).collect())),
        Format::Csv => csv_text(&["t_power", "coefficient"], image.iter().map(|(k, c)| vec![k.to_string(), c.to_string()]))?,
    })
}

fn estimate_out(e: Estimate, fmt: Format) -> String {
    match fmt {
        Format::Json => json_text(&json!({ "value": e.value, "error": e.error })),
        Format::Csv => format!("value,error\n{},{}\n", e.value, e.error),
        Format::Text => format!("{e}\n"),
    }
}
