use std::io::{self, IsTerminal};
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use sfield::expr::{self, ExprError, Format};
use sfield::repl::{self, Config};
use sfield::Backend;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_EVAL_ERROR: u8 = 2;
const EXIT_SYNTAX_ERROR: u8 = 3;

/// Exact arithmetic in the pair model S = R x R, with division by zero.
///
/// Without --eval or --check, reads expressions from stdin line by line.
#[derive(Debug, Parser)]
#[command(name = "sfield", version)]
struct Cli {
    /// Coefficient ring: rational, integer, or gf:<p> for a prime p.
    #[arg(long, default_value = "rational", value_parser = repl::parse_field)]
    field: Backend,

    /// Output form for results.
    #[arg(long, value_enum, default_value_t = Format::Coords)]
    format: Format,

    /// Evaluate one expression and exit.
    #[arg(
        long,
        value_name = "EXPR",
        conflicts_with = "check",
        allow_hyphen_values = true
    )]
    eval: Option<String>,

    /// Run the exhaustive axiom suite (over GF(2), GF(3), GF(5) unless
    /// --field gf:<p> picks one modulus).
    #[arg(long)]
    check: bool,

    /// Machine-readable output for --eval and --check.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(source) = &cli.eval {
        return eval(&cli, source);
    }
    if cli.check {
        return check(&cli);
    }
    let config = Config {
        backend: cli.field,
        format: cli.format,
    };
    let stdin = io::stdin();
    let prompt = stdin.is_terminal();
    match repl::run_repl(config, stdin.lock(), io::stdout().lock(), prompt) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn eval(cli: &Cli, source: &str) -> ExitCode {
    match expr::eval_str(source, cli.field) {
        Ok(value) => {
            if cli.json {
                let d = value.decompose();
                let doc = json!({
                    "field": cli.field.to_string(),
                    "x": value.x().to_string(),
                    "y": value.y().to_string(),
                    "canonical": { "x": d.x.to_string(), "y": d.y.to_string() },
                    "text": expr::render(&value, cli.format),
                });
                println!("{doc}");
            } else {
                println!("{}", expr::render(&value, cli.format));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let span = e.span();
                let kind = match &e {
                    ExprError::Lex(_) => "LexError",
                    ExprError::Parse(_) => "ParseError",
                    ExprError::Eval(inner) => inner.name(),
                };
                let doc = json!({
                    "error": kind,
                    "message": e.to_string(),
                    "span": [span.start, span.end],
                });
                println!("{doc}");
            }
            eprintln!("{}", e.diagnostic(source));
            ExitCode::from(if e.is_syntax() {
                EXIT_SYNTAX_ERROR
            } else {
                EXIT_EVAL_ERROR
            })
        }
    }
}

fn check(cli: &Cli) -> ExitCode {
    let reports = match repl::run_checks(cli.field) {
        Ok(reports) => reports,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_EVAL_ERROR);
        }
    };
    let passed = reports.iter().all(|r| r.all_passed());
    if cli.json {
        let suites: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
        println!("{}", json!({ "passed": passed, "suites": suites }));
    } else {
        for (i, report) in reports.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print!("{}", report.render_table());
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}
