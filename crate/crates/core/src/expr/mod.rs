//! Expression language over the pair model.
//!
//! Integers, the base unit `A`, pair literals `(x, y)` with signed rational
//! coordinates, and the operators `+ - * /` with the usual precedence.

mod eval;
mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::division::DivisionOutcome;
use crate::element::SElement;
use crate::error::AlgebraError;
use crate::scalar::Backend;

pub use eval::evaluate;
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, Expr, ExprKind, RationalLiteral};

/// Half-open byte range into the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }

    pub fn point(at: usize) -> Span {
        Span::new(at, at + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("LexError: unexpected character {character:?} at offset {position}")]
pub struct LexError {
    pub position: usize,
    pub character: char,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ParseError at offset {}: expected {}",
            self.position,
            self.expected.join(" or ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalErrorKind {
    /// A division whose outcome is not a quotient.
    Division(DivisionOutcome),
    Algebra(AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct EvalError {
    pub kind: Box<EvalErrorKind>,
    pub span: Span,
}

impl EvalError {
    /// Short machine-friendly name, e.g. `Indeterminate`.
    pub fn name(&self) -> &'static str {
        match &*self.kind {
            EvalErrorKind::Division(outcome) => outcome.name(),
            EvalErrorKind::Algebra(AlgebraError::NotRepresentable { .. }) => "NotRepresentable",
            EvalErrorKind::Algebra(_) => "AlgebraError",
        }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let detail = match &*self.kind {
            EvalErrorKind::Division(DivisionOutcome::Indeterminate) => {
                "zero divided by zero has no unique value".to_string()
            }
            EvalErrorKind::Division(DivisionOutcome::NoSolution) => {
                "no element q satisfies divisor * q = dividend".to_string()
            }
            EvalErrorKind::Division(DivisionOutcome::NotInvertible) => {
                "the divisor has no inverse over this backend".to_string()
            }
            EvalErrorKind::Division(DivisionOutcome::NotAScalarDivisor) => {
                "only scalars (second coordinate 0) can be divisors".to_string()
            }
            EvalErrorKind::Division(DivisionOutcome::Quotient(q)) => q.to_string(),
            EvalErrorKind::Algebra(e) => e.to_string(),
        };
        write!(f, "{}: {detail}", self.name())
    }
}

/// Any failure between source text and value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl ExprError {
    pub fn span(&self) -> Span {
        match self {
            ExprError::Lex(e) => Span::point(e.position),
            ExprError::Parse(e) => Span::point(e.position),
            ExprError::Eval(e) => e.span,
        }
    }

    pub fn is_syntax(&self) -> bool {
        !matches!(self, ExprError::Eval(_))
    }

    /// The message followed by the source line and a caret underline.
    pub fn diagnostic(&self, source: &str) -> String {
        let span = self.span();
        let width = span.end.saturating_sub(span.start).max(1);
        let pad = source
            .get(..span.start.min(source.len()))
            .map_or(span.start, |prefix| prefix.chars().count());
        format!(
            "error: {self}\n  {source}\n  {}{}",
            " ".repeat(pad),
            "^".repeat(width)
        )
    }
}

/// Lexes and parses one expression.
pub fn parse_str(input: &str) -> Result<Expr, ExprError> {
    let tokens = tokenize(input)?;
    Ok(parse(&tokens)?)
}

/// Lexes, parses and evaluates one expression.
pub fn eval_str(input: &str, backend: Backend) -> Result<SElement, ExprError> {
    Ok(evaluate(&parse_str(input)?, backend)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// `(x, y)`
    #[default]
    Coords,
    /// `x - 1 + y*A`
    Canonical,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "coords" => Ok(Format::Coords),
            "canonical" => Ok(Format::Canonical),
            other => Err(format!("unknown format {other:?}; use coords or canonical")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Coords => "coords",
            Format::Canonical => "canonical",
        })
    }
}

pub fn render(s: &SElement, format: Format) -> String {
    match format {
        Format::Coords => s.to_string(),
        Format::Canonical => s.canonical(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagnostics_point_at_the_problem() {
        let err = eval_str("2 $ 3", Backend::Rational).unwrap_err();
        assert!(err.is_syntax());
        assert_eq!(err.diagnostic("2 $ 3").lines().nth(2), Some("    ^"));

        let err = eval_str("1 + 0/0", Backend::Rational).unwrap_err();
        let text = err.diagnostic("1 + 0/0");
        assert!(text.starts_with("error: Indeterminate"));
        assert!(text.ends_with("      ^^^"));
    }

    #[test]
    fn both_formats_reparse() {
        let q = Backend::Rational;
        for input in ["(7/4, -3/2)", "(-2, 23)", "(0, 0)", "A"] {
            let value = eval_str(input, q).unwrap();
            for format in [Format::Coords, Format::Canonical] {
                let text = render(&value, format);
                assert_eq!(eval_str(&text, q).unwrap(), value, "{text}");
            }
        }
        let value = eval_str("A", q).unwrap();
        assert_eq!(render(&value, Format::Canonical), "1 - 1 + 1*A");
    }
}
