//! Exact arithmetic in the pair model `S = R x R`, a commutative but
//! non-associative extension of a ring in which nonzero scalars can be
//! divided by zero.
//!
//! ```
//! use sfield::{divide, Backend, DivisionOutcome, SElement};
//!
//! let q = Backend::Rational;
//! let one = SElement::one(q);
//! let zero = SElement::zero(q);
//! let DivisionOutcome::Quotient(r) = divide(&one, &zero).unwrap() else { panic!() };
//! assert_eq!(r.to_string(), "(0, 1)");
//! assert_eq!(zero.checked_mul(&r).unwrap(), one);
//! ```

pub mod division;
pub mod element;
pub mod error;
pub mod expr;
pub mod lab;
pub mod repl;
pub mod scalar;

pub use division::{div_by_scalar, div_by_zero, divide, is_reversible, DivisionOutcome};
pub use element::{Decomposition, SElement};
pub use error::{AlgebraError, Result};
pub use lab::run_full_suite;
pub use scalar::{Backend, Modulus, Residue, ScalarValue};
