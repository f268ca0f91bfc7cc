//! Line-oriented session shared by the binary and the tests.

use std::io::{self, BufRead, Write};

use crate::expr::{self, Format};
use crate::lab::{self, AxiomReport, LabError};
use crate::scalar::Backend;

/// Moduli checked when the suite is requested over the rationals, which
/// have no finite model of their own.
pub const DEFAULT_CHECK_MODULI: [u64; 3] = [2, 3, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub backend: Backend,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            backend: Backend::Rational,
            format: Format::Coords,
        }
    }
}

/// Parses `rational`, `integer`, `gf:<p>` or `gf <p>`.
pub fn parse_field(text: &str) -> Result<Backend, String> {
    let text = text.trim();
    match text {
        "rational" => return Ok(Backend::Rational),
        "integer" => return Ok(Backend::Integer),
        _ => {}
    }
    let p = text
        .strip_prefix("gf")
        .map(|rest| rest.trim_start_matches([':', ' ']))
        .ok_or_else(|| format!("unknown field {text:?}; use rational, integer or gf:<p>"))?;
    let p: u64 = p
        .parse()
        .map_err(|_| format!("bad modulus {p:?} in {text:?}"))?;
    Backend::prime_field(p).map_err(|e| e.to_string())
}

/// Moduli the axiom suite runs over for `backend`.
pub fn check_moduli(backend: Backend) -> Vec<u64> {
    match backend {
        Backend::PrimeField(m) => vec![u64::from(m.get())],
        _ => DEFAULT_CHECK_MODULI.to_vec(),
    }
}

pub fn run_checks(backend: Backend) -> Result<Vec<AxiomReport>, LabError> {
    check_moduli(backend)
        .into_iter()
        .map(lab::run_full_suite)
        .collect()
}

/// Runs a session until `:quit` or end of input. Errors are reported on
/// `output` and the session continues.
pub fn run_repl<R: BufRead, W: Write>(
    mut config: Config,
    input: R,
    mut output: W,
    prompt: bool,
) -> io::Result<()> {
    let mut lines = input.lines();
    loop {
        if prompt {
            write!(output, "sfield> ")?;
            output.flush()?;
        }
        let Some(line) = lines.next().transpose()? else {
            break;
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(command) = line.strip_prefix(':') {
            if !meta(command.trim(), &mut config, &mut output)? {
                break;
            }
            continue;
        }
        match expr::parse_str(line) {
            Err(e) => writeln!(output, "{}", e.diagnostic(line))?,
            Ok(tree) => {
                if tree.has_product_chain() {
                    writeln!(output, "grouped as {}", tree.normal_form())?;
                }
                match expr::evaluate(&tree, config.backend) {
                    Ok(value) => writeln!(output, "{}", expr::render(&value, config.format))?,
                    Err(e) => writeln!(output, "{}", expr::ExprError::from(e).diagnostic(line))?,
                }
            }
        }
    }
    Ok(())
}

/// Handles one `:command`; returns false to end the session.
fn meta<W: Write>(command: &str, config: &mut Config, out: &mut W) -> io::Result<bool> {
    let (name, arg) = command
        .split_once(char::is_whitespace)
        .map_or((command, ""), |(n, a)| (n, a.trim()));
    match name {
        "quit" | "q" => return Ok(false),
        "field" if arg.is_empty() => writeln!(out, "field {}", config.backend)?,
        "field" => match parse_field(arg) {
            Ok(backend) => {
                config.backend = backend;
                writeln!(out, "field {backend}")?;
            }
            Err(e) => writeln!(out, "error: {e}")?,
        },
        "format" if arg.is_empty() => writeln!(out, "format {}", config.format)?,
        "format" => match arg.parse::<Format>() {
            Ok(format) => {
                config.format = format;
                writeln!(out, "format {arg}")?;
            }
            Err(e) => writeln!(out, "error: {e}")?,
        },
        "check" => match run_checks(config.backend) {
            Ok(reports) => {
                for report in reports {
                    write!(out, "{}", report.render_table())?;
                }
            }
            Err(e) => writeln!(out, "error: {e}")?,
        },
        "help" => writeln!(
            out,
            ":field rational|integer|gf <p>   :format coords|canonical   :check   :quit"
        )?,
        other => writeln!(out, "error: unknown command :{other} (try :help)")?,
    }
    Ok(true)
}
