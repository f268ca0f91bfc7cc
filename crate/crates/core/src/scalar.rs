//! Exact arithmetic for the coefficient ring underneath the pair model.
//!
//! Three backends are available: the rationals (an infinite field), the prime
//! fields GF(p) (finite, so every law can be checked by enumeration), and the
//! integers (a commutative ring without general inverses). Values from
//! different backends never mix; every binary operation checks the tags and
//! fails with [`AlgebraError::BackendMismatch`] instead of coercing.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// Largest accepted prime modulus (exclusive bound).
pub const MAX_MODULUS: u64 = 1 << 31;

/// A prime modulus, validated by trial division at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(AlgebraError::InvalidModulus(p));
        }
        Ok(Modulus(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Trial division; fine for the moduli this crate accepts.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Which coefficient ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    PrimeField(Modulus),
    Integer,
}

impl Backend {
    pub fn prime_field(p: u64) -> Result<Self> {
        Modulus::new(p).map(Backend::PrimeField)
    }

    /// True for the backends where every nonzero value is invertible.
    pub fn is_field(&self) -> bool {
        !matches!(self, Backend::Integer)
    }

    pub fn zero(&self) -> ScalarValue {
        self.from_i64(0)
    }

    pub fn one(&self) -> ScalarValue {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> ScalarValue {
        self.from_bigint(&BigInt::from(n))
    }

    /// Embeds an integer; prime-field values are reduced mod p.
    pub fn from_bigint(&self, n: &BigInt) -> ScalarValue {
        match *self {
            Backend::Rational => ScalarValue::Rational(BigRational::from_integer(n.clone())),
            Backend::PrimeField(m) => ScalarValue::PrimeField(Residue::reduce(n, m)),
            Backend::Integer => ScalarValue::Integer(n.clone()),
        }
    }

    /// Builds `numerator / denominator` in this backend.
    ///
    /// Prime fields multiply by the inverse of the denominator; the integers
    /// accept the quotient only when it is exact.
    pub fn from_ratio(&self, numerator: &BigInt, denominator: &BigInt) -> Result<ScalarValue> {
        let not_representable = || AlgebraError::NotRepresentable {
            value: format!("{numerator}/{denominator}"),
            backend: *self,
        };
        if denominator.is_zero() {
            return Err(not_representable());
        }
        match *self {
            Backend::Rational => Ok(ScalarValue::Rational(BigRational::new(
                numerator.clone(),
                denominator.clone(),
            ))),
            Backend::PrimeField(m) => {
                let den = Residue::reduce(denominator, m);
                if den.value == 0 {
                    return Err(not_representable());
                }
                let num = Residue::reduce(numerator, m);
                Ok(ScalarValue::PrimeField(num.mul(den.inverse())))
            }
            Backend::Integer => {
                let (q, r) = numerator.div_rem(denominator);
                if r.is_zero() {
                    Ok(ScalarValue::Integer(q))
                } else {
                    Err(not_representable())
                }
            }
        }
    }

    /// Every element in ascending residue order, for finite backends only.
    pub fn elements(&self) -> Option<Vec<ScalarValue>> {
        match *self {
            Backend::PrimeField(m) => Some(
                (0..m.get())
                    .map(|value| ScalarValue::PrimeField(Residue { value, modulus: m }))
                    .collect(),
            ),
            _ => None,
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => f.write_str("rational"),
            Backend::PrimeField(m) => write!(f, "gf:{m}"),
            Backend::Integer => f.write_str("integer"),
        }
    }
}

/// A residue class in GF(p), always kept in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: u64, modulus: Modulus) -> Self {
        Residue {
            value: (value % modulus.0 as u64) as u32,
            modulus,
        }
    }

    fn reduce(n: &BigInt, modulus: Modulus) -> Self {
        let r = n.mod_floor(&BigInt::from(modulus.0));
        Residue {
            value: r.to_u32().expect("residue below modulus fits in u32"),
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn add(self, other: Residue) -> Residue {
        Residue::new(self.value as u64 + other.value as u64, self.modulus)
    }

    fn mul(self, other: Residue) -> Residue {
        Residue::new(self.value as u64 * other.value as u64, self.modulus)
    }

    fn neg(self) -> Residue {
        Residue::new(self.modulus.0 as u64 - self.value as u64, self.modulus)
    }

    // Caller guarantees value != 0.
    fn inverse(self) -> Residue {
        let p = self.modulus.0 as i64;
        let egcd = (self.value as i64).extended_gcd(&p);
        debug_assert_eq!(egcd.gcd, 1);
        Residue::new(egcd.x.rem_euclid(p) as u64, self.modulus)
    }
}

/// An exact element of the coefficient ring, tagged with its backend.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScalarValue {
    /// Always normalized: lowest terms with a positive denominator.
    Rational(BigRational),
    PrimeField(Residue),
    Integer(BigInt),
}

impl ScalarValue {
    pub fn backend(&self) -> Backend {
        match self {
            ScalarValue::Rational(_) => Backend::Rational,
            ScalarValue::PrimeField(r) => Backend::PrimeField(r.modulus),
            ScalarValue::Integer(_) => Backend::Integer,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ScalarValue::Rational(q) => q.is_zero(),
            ScalarValue::PrimeField(r) => r.value == 0,
            ScalarValue::Integer(n) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            ScalarValue::Rational(q) => q.is_one(),
            ScalarValue::PrimeField(r) => r.value == 1,
            ScalarValue::Integer(n) => n.is_one(),
        }
    }

    pub fn checked_add(&self, other: &ScalarValue) -> Result<ScalarValue> {
        use ScalarValue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(Rational(a + b)),
            (PrimeField(a), PrimeField(b)) if a.modulus == b.modulus => Ok(PrimeField(a.add(*b))),
            (Integer(a), Integer(b)) => Ok(Integer(a + b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_mul(&self, other: &ScalarValue) -> Result<ScalarValue> {
        use ScalarValue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(Rational(a * b)),
            (PrimeField(a), PrimeField(b)) if a.modulus == b.modulus => Ok(PrimeField(a.mul(*b))),
            (Integer(a), Integer(b)) => Ok(Integer(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &ScalarValue) -> Result<ScalarValue> {
        self.checked_add(&-other)
    }

    /// Multiplicative inverse. Fails for zero, and for every integer other
    /// than 1 and -1.
    pub fn inverse(&self) -> Result<ScalarValue> {
        let not_invertible = || AlgebraError::NotInvertible {
            value: self.to_string(),
            backend: self.backend(),
        };
        if self.is_zero() {
            return Err(not_invertible());
        }
        match self {
            ScalarValue::Rational(q) => Ok(ScalarValue::Rational(q.recip())),
            ScalarValue::PrimeField(r) => Ok(ScalarValue::PrimeField(r.inverse())),
            ScalarValue::Integer(n) if n.abs().is_one() => Ok(ScalarValue::Integer(n.clone())),
            ScalarValue::Integer(_) => Err(not_invertible()),
        }
    }

    pub fn as_residue(&self) -> Option<Residue> {
        match self {
            ScalarValue::PrimeField(r) => Some(*r),
            _ => None,
        }
    }

    fn mismatch(&self, other: &ScalarValue) -> AlgebraError {
        AlgebraError::BackendMismatch {
            left: self.backend(),
            right: other.backend(),
        }
    }
}

impl Neg for &ScalarValue {
    type Output = ScalarValue;

    fn neg(self) -> ScalarValue {
        match self {
            ScalarValue::Rational(q) => ScalarValue::Rational(-q),
            ScalarValue::PrimeField(r) => ScalarValue::PrimeField(r.neg()),
            ScalarValue::Integer(n) => ScalarValue::Integer(-n),
        }
    }
}

impl Neg for ScalarValue {
    type Output = ScalarValue;

    fn neg(self) -> ScalarValue {
        -&self
    }
}

/// `p/q` (or `p` when q = 1) for rationals; plain decimal otherwise.
impl fmt::Display for ScalarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarValue::Rational(q) => write!(f, "{q}"),
            ScalarValue::PrimeField(r) => write!(f, "{}", r.value),
            ScalarValue::Integer(n) => write!(f, "{n}"),
        }
    }
}
