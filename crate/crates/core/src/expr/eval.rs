use crate::division::{divide, DivisionOutcome};
use crate::element::SElement;
use crate::scalar::Backend;

use super::parser::{Expr, ExprKind};
use super::{EvalError, EvalErrorKind};

/// Evaluates `expr` in the pair model over `backend`.
///
/// Numbers embed as scalars `(n, 0)`, `A` is `(1, 1)`, and `/` goes through
/// [`divide`]; any outcome other than a verified quotient is an error
/// carrying the span of the offending division.
pub fn evaluate(expr: &Expr, backend: Backend) -> Result<SElement, EvalError> {
    let at = |kind: EvalErrorKind| EvalError {
        kind: Box::new(kind),
        span: expr.span,
    };
    let algebra = |e| at(EvalErrorKind::Algebra(e));
    match &expr.kind {
        ExprKind::Literal { x, y } => {
            let x = backend
                .from_ratio(&x.numerator, &x.denominator)
                .map_err(algebra)?;
            let y = backend
                .from_ratio(&y.numerator, &y.denominator)
                .map_err(algebra)?;
            SElement::new(x, y).map_err(algebra)
        }
        ExprKind::ScalarLiteral(n) => Ok(SElement::embed(backend.from_bigint(n))),
        ExprKind::BaseUnit => Ok(SElement::base_unit(backend)),
        ExprKind::Neg(e) => Ok(-evaluate(e, backend)?),
        ExprKind::Add(l, r) => evaluate(l, backend)?
            .checked_add(&evaluate(r, backend)?)
            .map_err(algebra),
        ExprKind::Sub(l, r) => evaluate(l, backend)?
            .checked_sub(&evaluate(r, backend)?)
            .map_err(algebra),
        ExprKind::Mul(l, r) => evaluate(l, backend)?
            .checked_mul(&evaluate(r, backend)?)
            .map_err(algebra),
        ExprKind::Div(l, r) => {
            let (s, t) = (evaluate(l, backend)?, evaluate(r, backend)?);
            match divide(&s, &t).map_err(algebra)? {
                DivisionOutcome::Quotient(q) => Ok(q),
                outcome => Err(at(EvalErrorKind::Division(outcome))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_str, Span};
    use super::*;

    fn eval(input: &str, backend: Backend) -> Result<String, EvalError> {
        evaluate(&parse_str(input).unwrap(), backend).map(|s| s.to_string())
    }

    fn gf(p: u64) -> Backend {
        Backend::prime_field(p).unwrap()
    }

    #[test]
    fn examples() {
        let q = Backend::Rational;
        assert_eq!(eval("1/0", q).unwrap(), "(0, 1)");
        assert_eq!(eval("2 + 3*A", q).unwrap(), "(3, 3)");
        assert_eq!(eval("(2, 3) / 2", q).unwrap(), "(7/4, 3/2)");
        assert_eq!(eval("(2, 3) * (1, 4)", q).unwrap(), "(-2, 23)");
        assert_eq!(eval("2/0", gf(5)).unwrap(), "(0, 2)");
        assert_eq!(eval("(2, 3) / 2", gf(5)).unwrap(), "(3, 4)");
        assert_eq!(eval("0 * (2, 3)", q).unwrap(), "(3, 0)");
    }

    #[test]
    fn grouping_matters() {
        let q = Backend::Rational;
        // (0*0)*A = 0*A = (1, 0) but 0*(0*A) = 0*(1, 0) = (0, 0)
        assert_eq!(eval("0*0*A", q).unwrap(), "(1, 0)");
        assert_eq!(eval("0*(0*A)", q).unwrap(), "(0, 0)");
    }

    #[test]
    fn division_failures_carry_outcome_and_span() {
        let q = Backend::Rational;
        let err = eval("1 + 0/0", q).unwrap_err();
        assert_eq!(
            *err.kind,
            EvalErrorKind::Division(DivisionOutcome::Indeterminate)
        );
        assert_eq!(err.span, Span::new(4, 7));
        let err = eval("A/0", q).unwrap_err();
        assert_eq!(
            *err.kind,
            EvalErrorKind::Division(DivisionOutcome::NoSolution)
        );
        let err = eval("1/A", q).unwrap_err();
        assert_eq!(
            *err.kind,
            EvalErrorKind::Division(DivisionOutcome::NotAScalarDivisor)
        );
        let err = eval("1/2", Backend::Integer).unwrap_err();
        assert_eq!(
            *err.kind,
            EvalErrorKind::Division(DivisionOutcome::NotInvertible)
        );
        let err = eval("2/0", Backend::Integer).unwrap_err();
        assert_eq!(
            *err.kind,
            EvalErrorKind::Division(DivisionOutcome::NotInvertible)
        );
    }

    #[test]
    fn literals_convert_per_backend() {
        assert_eq!(eval("(1/2, 0)", gf(5)).unwrap(), "(3, 0)");
        assert_eq!(eval("(-1, 7)", gf(5)).unwrap(), "(4, 2)");
        assert_eq!(eval("(4/2, 0)", Backend::Integer).unwrap(), "(2, 0)");
        let err = eval("(1/2, 0)", Backend::Integer).unwrap_err();
        assert!(matches!(*err.kind, EvalErrorKind::Algebra(_)));
        assert_eq!(err.span, Span::new(0, 8));
        assert!(eval("(1/5, 0)", gf(5)).is_err());
        assert!(eval("(1/0, 0)", Backend::Rational).is_err());
    }
}
