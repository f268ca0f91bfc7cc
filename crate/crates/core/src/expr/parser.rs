//! Recursive-descent parser.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | primary
//! primary := NUMBER | 'A' | pair | '(' expr ')'
//! pair    := '(' literal ',' literal ')'
//! literal := '-'? NUMBER ('/' NUMBER)?
//! ```
//!
//! Products associate to the left, so `a*b*c` is `(a*b)*c`. The product is
//! not associative, so this grouping changes results.

use std::fmt;

use num_bigint::BigInt;

use super::lexer::{Token, TokenKind};
use super::{ParseError, Span};

/// A signed rational written inside a pair literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalLiteral {
    pub numerator: BigInt,
    pub denominator: BigInt,
}

impl fmt::Display for RationalLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == BigInt::from(1) {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    /// `(x, y)`; coordinates are converted into the backend at evaluation.
    Literal {
        x: RationalLiteral,
        y: RationalLiteral,
    },
    ScalarLiteral(BigInt),
    BaseUnit,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
    /// Written inside explicit grouping parentheses.
    pub parenthesized: bool,
}

impl Expr {
    fn new(kind: ExprKind, span: Span) -> Self {
        Expr {
            kind,
            span,
            parenthesized: false,
        }
    }

    /// True if the tree contains an ungrouped product of three or more
    /// factors, whose meaning depends on the left-to-right grouping.
    pub fn has_product_chain(&self) -> bool {
        use ExprKind::*;
        match &self.kind {
            Literal { .. } | ScalarLiteral(_) | BaseUnit => false,
            Neg(e) => e.has_product_chain(),
            Mul(l, r) => {
                (matches!(l.kind, Mul(..)) && !l.parenthesized)
                    || l.has_product_chain()
                    || r.has_product_chain()
            }
            Add(l, r) | Sub(l, r) | Div(l, r) => l.has_product_chain() || r.has_product_chain(),
        }
    }

    /// Fully parenthesized rendering of the tree.
    pub fn normal_form(&self) -> String {
        use ExprKind::*;
        match &self.kind {
            Literal { x, y } => format!("({x}, {y})"),
            ScalarLiteral(n) => n.to_string(),
            BaseUnit => "A".to_string(),
            Neg(e) => format!("-{}", e.normal_form()),
            Add(l, r) => format!("({} + {})", l.normal_form(), r.normal_form()),
            Sub(l, r) => format!("({} - {})", l.normal_form(), r.normal_form()),
            Mul(l, r) => format!("({} * {})", l.normal_form(), r.normal_form()),
            Div(l, r) => format!("({} / {})", l.normal_form(), r.normal_form()),
        }
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

/// Parses a complete token stream into one expression.
pub fn parse(tokens: &[Token]) -> Result<Expr, ParseError> {
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    if parser.pos < tokens.len() {
        return Err(parser.error(&["'+'", "'-'", "'*'", "'/'", "end of input"]));
    }
    Ok(expr)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn eat(&mut self, kind: TokenKind) -> Option<&'a Token> {
        let token = self.peek().filter(|t| t.kind == kind)?;
        self.pos += 1;
        Some(token)
    }

    fn end_of_input(&self) -> usize {
        self.tokens.last().map_or(0, Token::end)
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            position: self.peek().map_or(self.end_of_input(), |t| t.position),
            expected: expected.to_vec(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek_kind() {
                Some(TokenKind::Plus) => ExprKind::Add,
                Some(TokenKind::Minus) => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek_kind() {
                Some(TokenKind::Star) => ExprKind::Mul,
                Some(TokenKind::Slash) => ExprKind::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let Some(minus) = self.eat(TokenKind::Minus) {
            let operand = self.unary()?;
            let span = Span::new(minus.position, operand.span.end);
            return Ok(Expr::new(ExprKind::Neg(Box::new(operand)), span));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        const EXPECTED: &[&str] = &["number", "'A'", "'('", "'-'"];
        let Some(token) = self.peek() else {
            return Err(self.error(EXPECTED));
        };
        match token.kind {
            TokenKind::Number => {
                self.pos += 1;
                let value: BigInt = token.lexeme.parse().expect("lexer yields digit runs");
                Ok(Expr::new(
                    ExprKind::ScalarLiteral(value),
                    Span::new(token.position, token.end()),
                ))
            }
            TokenKind::SymbolA => {
                self.pos += 1;
                Ok(Expr::new(
                    ExprKind::BaseUnit,
                    Span::new(token.position, token.end()),
                ))
            }
            TokenKind::LParen => {
                if let Some(pair) = self.pair_literal() {
                    return Ok(pair);
                }
                self.pos += 1;
                let mut inner = self.expr()?;
                let Some(close) = self.eat(TokenKind::RParen) else {
                    return Err(self.error(&["')'"]));
                };
                inner.span = Span::new(token.position, close.end());
                inner.parenthesized = true;
                Ok(inner)
            }
            _ => Err(self.error(EXPECTED)),
        }
    }

    /// Tries `( literal , literal )`, restoring the position on mismatch.
    fn pair_literal(&mut self) -> Option<Expr> {
        let start = self.pos;
        let result = (|| {
            let open = self.eat(TokenKind::LParen)?;
            let x = self.rational_literal()?;
            self.eat(TokenKind::Comma)?;
            let y = self.rational_literal()?;
            let close = self.eat(TokenKind::RParen)?;
            Some(Expr::new(
                ExprKind::Literal { x, y },
                Span::new(open.position, close.end()),
            ))
        })();
        if result.is_none() {
            self.pos = start;
        }
        result
    }

    fn rational_literal(&mut self) -> Option<RationalLiteral> {
        let negative = self.eat(TokenKind::Minus).is_some();
        let numerator: BigInt = self.eat(TokenKind::Number)?.lexeme.parse().ok()?;
        let denominator = if self.eat(TokenKind::Slash).is_some() {
            self.eat(TokenKind::Number)?.lexeme.parse().ok()?
        } else {
            BigInt::from(1)
        };
        Some(RationalLiteral {
            numerator: if negative { -numerator } else { numerator },
            denominator,
        })
    }
}
