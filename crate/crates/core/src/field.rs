//! Exact scalar arithmetic over prime fields and the rationals.
//!
//! Two layers live here. The [`Field`] trait is the context-passing interface
//! used by every algebra module: elements are plain values and the field
//! object carries the modulus, so hot census loops never pay for a
//! descriptor check. [`FieldScalar`] is the self-describing value used at API
//! boundaries, where operands from different fields must be rejected.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MODULUS_BOUND: u64 = 1 << 31;

/// Arithmetic context for one exact field.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn descriptor(&self) -> FieldDescriptor;
    fn to_scalar(&self, a: &Self::Elem) -> FieldScalar;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `n · a` for a small integer `n`.
    fn scale_int(&self, n: i64, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_i64(n), a)
    }

    /// Inverse of the integer `n` when it is invertible in this field.
    fn inv_int(&self, n: i64) -> Option<Self::Elem> {
        self.inv(&self.from_i64(n)).ok()
    }
}

/// The prime field F_p with `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..MODULUS_BOUND).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u32 {
        (v % self.p) as u32
    }

    /// Residues in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1 % self.p as u32
    }
    #[inline]
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.p { s - self.p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let (a, b) = (*a as u64, *b as u64);
        (if a >= b { a - b } else { a + self.p - b }) as u32
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            (self.p - *a as u64) as u32
        }
    }
    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(t0.rem_euclid(self.p as i64) as u32)
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }
    fn to_scalar(&self, a: &u32) -> FieldScalar {
        FieldScalar {
            descriptor: self.descriptor(),
            value: ScalarValue::Residue(*a),
        }
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
    fn to_scalar(&self, a: &BigRational) -> FieldScalar {
        FieldScalar {
            descriptor: FieldDescriptor::Rationals,
            value: ScalarValue::Rational(a.clone()),
        }
    }
}

/// Which field a [`FieldScalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDescriptor {
    Prime(u64),
    Rationals,
}

impl FieldDescriptor {
    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|f| f.descriptor())
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime(p) => *p,
            FieldDescriptor::Rationals => 0,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Prime(p) => write!(f, "F_{p}"),
            FieldDescriptor::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarValue {
    Residue(u32),
    Rational(BigRational),
}

/// A field element that knows which field it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    descriptor: FieldDescriptor,
    value: ScalarValue,
}

/// Operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Eq,
}

/// Result of [`field_arith`]: `Eq` yields a boolean, everything else a scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithOutput {
    Scalar(FieldScalar),
    Bool(bool),
}

impl FieldScalar {
    /// Residue `v mod p`.
    pub fn residue(p: u64, v: i64) -> Result<Self> {
        let f = PrimeField::new(p)?;
        Ok(f.to_scalar(&f.from_i64(v)))
    }

    /// The fraction `num/den`, reduced to lowest terms with positive denominator.
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            descriptor: FieldDescriptor::Rationals,
            value: ScalarValue::Rational(BigRational::new(num.into(), den.into())),
        })
    }

    pub fn from_big_rational(v: BigRational) -> Self {
        Self {
            descriptor: FieldDescriptor::Rationals,
            value: ScalarValue::Rational(v),
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.descriptor
    }

    pub fn value(&self) -> &ScalarValue {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            ScalarValue::Residue(r) => *r == 0,
            ScalarValue::Rational(q) => q.is_zero(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.descriptor == other.descriptor {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn binary(
        &self,
        other: &Self,
        fp: impl Fn(&PrimeField, &u32, &u32) -> Result<u32>,
        fq: impl Fn(&BigRational, &BigRational) -> Result<BigRational>,
    ) -> Result<Self> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (ScalarValue::Residue(a), ScalarValue::Residue(b)) => {
                let f = PrimeField {
                    p: self.descriptor.characteristic(),
                };
                ScalarValue::Residue(fp(&f, a, b)?)
            }
            (ScalarValue::Rational(a), ScalarValue::Rational(b)) => {
                ScalarValue::Rational(fq(a, b)?)
            }
            _ => return Err(Error::MixedFields),
        };
        Ok(Self {
            descriptor: self.descriptor,
            value,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.binary(other, |f, a, b| Ok(f.add(a, b)), |a, b| Ok(a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.binary(other, |f, a, b| Ok(f.sub(a, b)), |a, b| Ok(a - b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.binary(other, |f, a, b| Ok(f.mul(a, b)), |a, b| Ok(a * b))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.binary(other, |f, a, b| f.div(a, b), |a, b| Rationals.div(a, b))
    }

    pub fn neg(&self) -> Self {
        let value = match &self.value {
            ScalarValue::Residue(a) => ScalarValue::Residue(
                PrimeField {
                    p: self.descriptor.characteristic(),
                }
                .neg(a),
            ),
            ScalarValue::Rational(a) => ScalarValue::Rational(-a),
        };
        Self {
            descriptor: self.descriptor,
            value,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let value = match &self.value {
            ScalarValue::Residue(a) => ScalarValue::Residue(
                PrimeField {
                    p: self.descriptor.characteristic(),
                }
                .inv(a)?,
            ),
            ScalarValue::Rational(a) => ScalarValue::Rational(Rationals.inv(a)?),
        };
        Ok(Self {
            descriptor: self.descriptor,
            value,
        })
    }

    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.value == other.value)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            ScalarValue::Residue(r) => write!(f, "{r}"),
            ScalarValue::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            ScalarValue::Rational(q) => {
                let sign = if q.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", q.numer().abs(), q.denom())
            }
        }
    }
}

/// Checked arithmetic on self-describing scalars. Unary operations ignore `b`.
pub fn field_arith(op: ArithOp, a: &FieldScalar, b: Option<&FieldScalar>) -> Result<ArithOutput> {
    let need_b = || b.ok_or_else(|| Error::InvalidArgument(format!("{op:?} needs two operands")));
    Ok(match op {
        ArithOp::Add => ArithOutput::Scalar(a.add(need_b()?)?),
        ArithOp::Sub => ArithOutput::Scalar(a.sub(need_b()?)?),
        ArithOp::Mul => ArithOutput::Scalar(a.mul(need_b()?)?),
        ArithOp::Div => ArithOutput::Scalar(a.div(need_b()?)?),
        ArithOp::Neg => ArithOutput::Scalar(a.neg()),
        ArithOp::Inv => ArithOutput::Scalar(a.inv()?),
        ArithOp::Eq => ArithOutput::Bool(a.try_eq(need_b()?)?),
    })
}

/// All elements of a prime field in ascending residue order.
pub fn enumerate_field(descriptor: FieldDescriptor) -> Result<impl Iterator<Item = FieldScalar>> {
    match descriptor {
        FieldDescriptor::Rationals => Err(Error::InfiniteField),
        FieldDescriptor::Prime(p) => {
            let f = PrimeField::new(p)?;
            Ok(f.elements().map(move |r| f.to_scalar(&r)))
        }
    }
}

/// Deterministic trial division; `n < 2^31` keeps this under 50k iterations.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
