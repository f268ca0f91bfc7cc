//! Division by scalars and division by zero.
//!
//! For a nonzero invertible scalar `m` and `s = x - 1 + y*A`, the quotient
//! `s / m` is the unique `q` with `m * q = s`:
//!
//! ```text
//! q = m⁻¹(x + y - m⁻¹y) - 1 + (m⁻¹y)*A
//! ```
//!
//! For a nonzero scalar `α` over a field, `α / 0` is the reversible standard
//! base `(0, α)`: the only element with `0 * q = α` that starts the class of
//! index `α`. `0 / 0` stays indeterminate, and a non-scalar divided by zero
//! has no solution because `0 * q` is always a scalar.

use crate::element::{Decomposition, SElement};
use crate::error::{AlgebraError, Result};
use crate::scalar::ScalarValue;

/// Result of the dispatching [`divide`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisionOutcome {
    /// A verified quotient: `divisor * q` reproduces the dividend exactly.
    Quotient(SElement),
    /// `0 / 0`.
    Indeterminate,
    /// A non-scalar divided by zero.
    NoSolution,
    /// The divisor (or, for division by zero, the backend) lacks inverses.
    NotInvertible,
    /// The divisor is not a scalar.
    NotAScalarDivisor,
}

impl DivisionOutcome {
    pub fn quotient(self) -> Option<SElement> {
        match self {
            DivisionOutcome::Quotient(q) => Some(q),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DivisionOutcome::Quotient(_) => "Quotient",
            DivisionOutcome::Indeterminate => "Indeterminate",
            DivisionOutcome::NoSolution => "NoSolution",
            DivisionOutcome::NotInvertible => "NotInvertible",
            DivisionOutcome::NotAScalarDivisor => "NotAScalarDivisor",
        }
    }
}

/// `s / m` for a nonzero invertible scalar `m`.
pub fn div_by_scalar(s: &SElement, m: &ScalarValue) -> Result<SElement> {
    if m.backend() != s.backend() {
        return Err(AlgebraError::BackendMismatch {
            left: s.backend(),
            right: m.backend(),
        });
    }
    if m.is_zero() {
        return Err(AlgebraError::ZeroDivisor);
    }
    let inv = m.inverse()?;
    let Decomposition { x, y } = s.decompose();
    let second = inv.checked_mul(&y)?;
    let first = inv.checked_mul(&x.checked_add(&y)?.checked_sub(&second)?)?;
    Decomposition {
        x: first,
        y: second,
    }
    .compose()
}

/// `α / 0` for a nonzero scalar `α` over a field backend.
pub fn div_by_zero(alpha: &ScalarValue) -> Result<SElement> {
    if alpha.is_zero() {
        return Err(AlgebraError::Indeterminate);
    }
    if !alpha.backend().is_field() {
        return Err(AlgebraError::NotInvertible {
            value: "0".to_string(),
            backend: alpha.backend(),
        });
    }
    Ok(SElement::standard_base(alpha.clone()))
}

/// Checks `q0(1) = α⁻¹ * (q0(α) + α) - α` with pair-model arithmetic.
pub fn is_reversible(alpha: &ScalarValue) -> bool {
    let Ok(inverse) = alpha.inverse() else {
        return false;
    };
    reverses_with(alpha, &inverse).unwrap_or(false)
}

/// Whether `candidate` works as the reversing scalar for `α`.
pub fn reverses_with(alpha: &ScalarValue, candidate: &ScalarValue) -> Result<bool> {
    let backend = alpha.backend();
    let embedded = SElement::embed(alpha.clone());
    let lifted = SElement::standard_base(alpha.clone()).checked_add(&embedded)?;
    let rhs = SElement::embed(candidate.clone())
        .checked_mul(&lifted)?
        .checked_sub(&embedded)?;
    Ok(rhs == SElement::standard_base(backend.one()))
}

/// True iff `m * q = s`.
pub fn verify_quotient(s: &SElement, m: &ScalarValue, q: &SElement) -> bool {
    SElement::scalar_mul(m, q).is_ok_and(|product| &product == s)
}

/// Divides `s` by `t`, routing to scalar division or division by zero.
pub fn divide(s: &SElement, t: &SElement) -> Result<DivisionOutcome> {
    if s.backend() != t.backend() {
        return Err(AlgebraError::BackendMismatch {
            left: s.backend(),
            right: t.backend(),
        });
    }
    let Ok(m) = t.extract_scalar() else {
        return Ok(DivisionOutcome::NotAScalarDivisor);
    };
    let candidate = if m.is_zero() {
        if !s.is_scalar() {
            return Ok(DivisionOutcome::NoSolution);
        }
        let alpha = s.extract_scalar()?;
        match div_by_zero(&alpha) {
            Ok(q) => q,
            Err(AlgebraError::Indeterminate) => return Ok(DivisionOutcome::Indeterminate),
            Err(AlgebraError::NotInvertible { .. }) => return Ok(DivisionOutcome::NotInvertible),
            Err(e) => return Err(e),
        }
    } else {
        match div_by_scalar(s, &m) {
            Ok(q) => q,
            Err(AlgebraError::NotInvertible { .. }) => return Ok(DivisionOutcome::NotInvertible),
            Err(e) => return Err(e),
        }
    };
    if verify_quotient(s, &m, &candidate) {
        Ok(DivisionOutcome::Quotient(candidate))
    } else {
        Ok(DivisionOutcome::NoSolution)
    }
}
