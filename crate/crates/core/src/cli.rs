//! Command-line front end.

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bracket::{jones, kauffman_bracket_with_cache, kauffman_polynomial, max_cache_from_env};
use crate::conway::conway;
use crate::expr::{self, ExprError};
use crate::families::{self, CSelector};
use crate::tangle::OrientationClass;
use crate::verify::{self, Options, Suite};
use crate::{parse_pd, render_pd, LinkDiagram};

#[derive(Debug, Parser)]
#[command(name = "skein", version, about = "Exact bracket, Jones and Conway invariants of links and tangles")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Refuse direct diagram evaluation above this many crossings.
    #[arg(long, default_value_t = 64, global = true)]
    pub max_crossings: usize,
    /// Include direct checks on the larger links.
    #[arg(long, global = true)]
    pub deep: bool,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kauffman bracket of a PD file or a closed expression such as `C(1*0)`.
    Bracket { input: String },
    /// Writhe-normalized bracket of an oriented diagram.
    Kauffman { input: String },
    /// Jones polynomial in `t`.
    Jones { input: String },
    /// Conway polynomial in `z`.
    Conway { input: String },
    /// Invariants of a tangle expression.
    Tangle {
        #[arg(value_enum)]
        what: TangleInvariant,
        expr: String,
    },
    /// Generate a member of one of the link families.
    Family(FamilyArgs),
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TangleInvariant {
    Br,
    Con,
    Frac,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub tangle: Option<String>,
    /// Meridian direction for `C`: `+` or `-`. Omitted means unoriented.
    #[arg(long, allow_hyphen_values = true)]
    pub orient: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    #[value(name = "C")]
    C,
    #[value(name = "U")]
    U,
    #[value(name = "jslink")]
    JsLink,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    if let Some(n) = cli.threads {
        // a second call in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let json_out = cli.format == Format::Json;
    match &cli.command {
        Command::Bracket { input } => {
            let d = load(input, cli.max_crossings)?;
            let p = kauffman_bracket_with_cache(&d, max_cache_from_env());
            Ok(emit(json_out, &p, || json!({ "bracket": p })))
        }
        Command::Kauffman { input } => {
            let d = oriented(load(input, cli.max_crossings)?);
            let p = kauffman_polynomial(&d).map_err(usage)?;
            Ok(emit(json_out, &p, || json!({ "kauffman": p })))
        }
        Command::Jones { input } => {
            let d = oriented(load(input, cli.max_crossings)?);
            let v = jones(&d).map_err(usage)?;
            Ok(emit(json_out, &v, || json!({ "jones": v.render_t(), "q": v.poly })))
        }
        Command::Conway { input } => {
            let d = oriented(load(input, cli.max_crossings)?);
            let c = conway(&d).map_err(usage)?;
            Ok(emit(json_out, &c, || json!({ "conway": c })))
        }
        Command::Tangle { what, expr: text } => {
            let e = expr::parse_tangle(text)?;
            let direct_cap = |n: usize| -> Result<(), Failure> {
                if n > cli.max_crossings {
                    return Err(Failure::Usage(format!("{n} crossings exceed --max-crossings {}", cli.max_crossings)));
                }
                Ok(())
            };
            match what {
                TangleInvariant::Br => {
                    let br = e.bracket_vector();
                    Ok(emit(json_out, &br, || json!(br)))
                }
                TangleInvariant::Con => {
                    let c = e.conway_vector().or_else(|err| {
                        direct_cap(e.num_crossings())?;
                        Err(Failure::from(err))
                    })?;
                    Ok(emit(json_out, &c, || json!(c)))
                }
                TangleInvariant::Frac => {
                    let f = e.fraction().or_else(|err| {
                        direct_cap(e.num_crossings())?;
                        Err(Failure::from(err))
                    })?;
                    Ok(emit(json_out, &f, || json!(f)))
                }
            }
        }
        Command::Family(args) => {
            let d = family(args)?;
            Ok(if json_out { d.to_json() + "\n" } else { render_pd(&d) })
        }
        Command::Verify { suite, json } => {
            let suite: Suite = suite.parse().map_err(Failure::Usage)?;
            let opts = Options { deep: cli.deep, max_crossings: cli.max_crossings, ..Options::default() };
            let report = verify::run_suite(suite, &opts);
            let out = if *json || json_out { report.to_json() + "\n" } else { report.render_text() };
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn emit<T: std::fmt::Display>(json_out: bool, value: &T, as_json: impl FnOnce() -> serde_json::Value) -> String {
    if json_out {
        format!("{}\n", as_json())
    } else {
        format!("{value}\n")
    }
}

/// A PD file, or failing that a closed expression.
fn load(input: &str, max_crossings: usize) -> Result<LinkDiagram, Failure> {
    let d = if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
        if text.trim_start().starts_with('{') {
            LinkDiagram::from_json(&text).map_err(usage)?
        } else {
            parse_pd(&text).map_err(usage)?
        }
    } else if input.ends_with(".pd") || input.ends_with(".json") {
        return Err(Failure::Usage(format!("{input}: no such file")));
    } else {
        expr::parse(input)?.link()?
    };
    if d.num_crossings() > max_crossings {
        return Err(Failure::Usage(format!("{} crossings exceed --max-crossings {max_crossings}", d.num_crossings())));
    }
    Ok(d)
}

/// Unoriented input gets an arbitrary orientation.
fn oriented(d: LinkDiagram) -> LinkDiagram {
    if d.is_oriented() {
        d
    } else {
        d.oriented()
    }
}

fn family(args: &FamilyArgs) -> Result<LinkDiagram, Failure> {
    let need = |v: Option<i64>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("--{flag} is required")));
    match args.family {
        FamilyName::C => {
            let text = args.tangle.as_deref().ok_or_else(|| Failure::Usage("--tangle is required".into()))?;
            let e = expr::parse_tangle(text)?;
            let sel = match args.orient.as_deref() {
                None => CSelector::Unoriented,
                Some("+") => CSelector::Plus,
                Some("-") => CSelector::Minus,
                Some(o) => return Err(Failure::Usage(format!("--orient takes + or -, not `{o}`"))),
            };
            let t = match sel {
                CSelector::Unoriented => e.build(),
                _ => e.build_oriented(OrientationClass::LeftRight)?,
            };
            families::c_of(&t, sel).map_err(usage)
        }
        FamilyName::U => {
            let (n, m) = (need(args.n, "n")?, need(args.m, "m")?);
            if n < 0 || m < -n {
                return Err(Failure::Usage(format!("U(n, m) needs n >= 0 and m >= -n, got ({n}, {m})")));
            }
            Ok(families::u(n, m))
        }
        FamilyName::JsLink => {
            let n = need(args.n, "n")?;
            if n < 1 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let sel = match args.orient.as_deref() {
                None => None,
                Some("+") => Some(CSelector::Plus),
                Some("-") => Some(CSelector::Minus),
                Some(o) => return Err(Failure::Usage(format!("--orient takes + or -, not `{o}`"))),
            };
            match sel {
                None => families::js_link(n as usize),
                Some(s) => families::js_link_oriented(n as usize, s),
            }
            .map_err(usage)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String, Failure> {
        let mut argv = vec!["skein"];
        argv.extend_from_slice(args);
        run(&Cli::try_parse_from(argv).map_err(usage)?)
    }

    #[test]
    fn one_star_t0_has_unit_conway_vector() {
        assert_eq!(run_args(&["tangle", "con", "1 * T0"]).unwrap(), "(1, 0)\n");
    }

    #[test]
    fn bracket_of_closed_expression() {
        assert_eq!(run_args(&["bracket", "C(0)"]).unwrap(), "A^8 + 2 + A^-8\n");
    }

    #[test]
    fn jones_of_hopf_file() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hopf.pd");
        assert_eq!(run_args(&["jones", path]).unwrap(), "-t^(5/2) - t^(1/2)\n");
    }

    #[test]
    fn family_u_rejects_bad_parameters() {
        assert!(matches!(run_args(&["family", "U", "--n", "1", "--m", "-3"]), Err(Failure::Usage(_))));
    }

    #[test]
    fn family_output_parses_back() {
        let pd = run_args(&["family", "C", "--tangle", "2", "--orient", "+"]).unwrap();
        let d = parse_pd(&pd).unwrap();
        assert_eq!(d.num_crossings(), 6);
        assert!(d.is_oriented());
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        assert!(matches!(run_args(&["verify", "--suite", "nope"]), Err(Failure::Usage(_))));
    }
}
