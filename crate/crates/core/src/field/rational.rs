use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::Field;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"` with decimal big integers.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
    }
}

/// `(numerator, denominator)` as decimal strings, denominator positive.
pub(crate) fn rational_parts(r: &Rational) -> (String, String) {
    debug_assert!(r.denom().is_positive());
    (r.numer().to_string(), r.denom().to_string())
}
