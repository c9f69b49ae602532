//! Exact scalar fields.
//!
//! Everything above this module is written against the [`Field`] trait, so
//! the same linear algebra, algebra and cohomology code runs over the
//! rationals, over prime fields (used for cocycle enumeration) and over the
//! cyclotomic fields `Q(zeta_n)` that carry roots of unity.

mod cyclotomic;
mod poly;
mod prime;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use cyclotomic::{euler_phi, CycError, CycScalar};
pub use prime::Fp;
pub use rational::{parse_rational, Rational};

/// An exact, commutative field.
///
/// Equality must be exact: `a == b` decides equality of field values.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Image of an integer under the canonical ring map `Z -> F`.
    fn from_int(n: i64) -> Self;

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self -= a * b`, the inner step of every elimination.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        *self = self.sub_ref(&prod);
    }

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }

    /// The value as a rational number when it lies in the prime subfield of
    /// a characteristic-zero field.
    fn to_rational(&self) -> Option<Rational> {
        None
    }
}

/// Fields that contain every root of unity the caller asks for.
pub trait Cyclotomic: Field {
    /// `zeta_n^k` for the fixed primitive `n`-th root `zeta_n = exp(2 pi i / n)`.
    fn root_of_unity(n: u32, k: i64) -> Self;
}

/// `x^k` by repeated squaring; negative exponents invert.
pub fn pow<F: Field>(x: &F, k: i64) -> Option<F> {
    let mut base = if k < 0 { x.inv()? } else { x.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = F::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul_ref(&base);
        }
        base = base.mul_ref(&base);
        e >>= 1;
    }
    Some(acc)
}
