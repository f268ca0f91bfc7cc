//! The pair model: elements `(x, y)` over a coefficient ring R.
//!
//! Addition is componentwise. Multiplication is
//!
//! ```text
//! (x, y) * (u, v) = (x*u + y + v - x*v - y*u,  y*v + x*v + y*u)
//! ```
//!
//! which is commutative but neither associative nor distributive. Zero is
//! `(0, 0)`, one is `(1, 0)`, and `0 * (x, y) = (y, 0)`, so the second
//! coordinate is the index of the class an element belongs to. Scalars are
//! the elements with index zero; they form a copy of R via `r -> (r, 0)`.

use std::fmt;
use std::ops::Neg;

use crate::error::{AlgebraError, Result};
use crate::scalar::{Backend, ScalarValue};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SElement {
    x: ScalarValue,
    y: ScalarValue,
}

/// The coordinates `(x, y)` with `s = x - 1 + y*A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub x: ScalarValue,
    pub y: ScalarValue,
}

impl SElement {
    pub fn new(x: ScalarValue, y: ScalarValue) -> Result<Self> {
        if x.backend() != y.backend() {
            return Err(AlgebraError::BackendMismatch {
                left: x.backend(),
                right: y.backend(),
            });
        }
        Ok(SElement { x, y })
    }

    pub fn x(&self) -> &ScalarValue {
        &self.x
    }

    pub fn y(&self) -> &ScalarValue {
        &self.y
    }

    pub fn backend(&self) -> Backend {
        self.x.backend()
    }

    pub fn zero(backend: Backend) -> Self {
        SElement {
            x: backend.zero(),
            y: backend.zero(),
        }
    }

    /// `(1, 0)`, which is also the unique multiplicative unity.
    pub fn one(backend: Backend) -> Self {
        SElement {
            x: backend.one(),
            y: backend.zero(),
        }
    }

    pub fn checked_add(&self, other: &SElement) -> Result<SElement> {
        Ok(SElement {
            x: self.x.checked_add(&other.x)?,
            y: self.y.checked_add(&other.y)?,
        })
    }

    pub fn checked_sub(&self, other: &SElement) -> Result<SElement> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &SElement) -> Result<SElement> {
        let (x, y) = (&self.x, &self.y);
        let (u, v) = (&other.x, &other.y);
        let xu = x.checked_mul(u)?;
        let xv = x.checked_mul(v)?;
        let yu = y.checked_mul(u)?;
        let yv = y.checked_mul(v)?;
        let first = xu
            .checked_add(y)?
            .checked_add(v)?
            .checked_sub(&xv)?
            .checked_sub(&yu)?;
        let second = yv.checked_add(&xv)?.checked_add(&yu)?;
        Ok(SElement {
            x: first,
            y: second,
        })
    }

    /// The index `α` with `0 * s = (α, 0)`.
    pub fn alpha_index(&self) -> ScalarValue {
        self.y.clone()
    }

    pub fn is_scalar(&self) -> bool {
        self.y.is_zero()
    }

    pub fn embed(r: ScalarValue) -> Self {
        let y = r.backend().zero();
        SElement { x: r, y }
    }

    pub fn extract_scalar(&self) -> Result<ScalarValue> {
        if !self.is_scalar() {
            return Err(AlgebraError::NotAScalar(self.to_string()));
        }
        Ok(self.x.clone())
    }

    /// `A = (1, 1)`: satisfies `0*A = 1` and `1*A = A`.
    pub fn base_unit(backend: Backend) -> Self {
        SElement {
            x: backend.one(),
            y: backend.one(),
        }
    }

    /// The standard base of the class with index `alpha`, namely `(0, α)`.
    pub fn standard_base(alpha: ScalarValue) -> Self {
        let x = alpha.backend().zero();
        SElement { x, y: alpha }
    }

    pub fn decompose(&self) -> Decomposition {
        Decomposition {
            x: self.x.clone(),
            y: self.y.clone(),
        }
    }

    /// `m * s` for a scalar `m`, via the closed form
    /// `(m*(x - y) + y, m*y)`.
    pub fn scalar_mul(m: &ScalarValue, s: &SElement) -> Result<SElement> {
        let diff = s.x.checked_sub(&s.y)?;
        Ok(SElement {
            x: m.checked_mul(&diff)?.checked_add(&s.y)?,
            y: m.checked_mul(&s.y)?,
        })
    }

    /// Renders as `x - 1 + y*A`.
    pub fn canonical(&self) -> String {
        self.decompose().to_string()
    }
}

impl Decomposition {
    /// Evaluates `x - 1 + y*A` with pair-model arithmetic.
    pub fn compose(&self) -> Result<SElement> {
        let backend = self.x.backend();
        let shifted = SElement::embed(self.x.clone()).checked_sub(&SElement::one(backend))?;
        let scaled = SElement::embed(self.y.clone()).checked_mul(&SElement::base_unit(backend))?;
        shifted.checked_add(&scaled)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - 1 + {}*A", self.x, self.y)
    }
}

impl Neg for &SElement {
    type Output = SElement;

    fn neg(self) -> SElement {
        SElement {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl Neg for SElement {
    type Output = SElement;

    fn neg(self) -> SElement {
        -&self
    }
}

/// Coordinate form `(x, y)`.
impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
