use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Field;

/// Element of the prime field `Z/P`. `P` must be prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(P-2).
        let mut base = *self;
        let mut e = P - 2;
        let mut acc = Fp::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        Some(acc)
    }

    fn from_int(n: i64) -> Self {
        Fp::new(n)
    }

    fn add_ref(&self, other: &Self) -> Self {
        *self + *other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        *self - *other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        *self * *other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_7() {
        for a in 1..7 {
            let x = Fp::<7>::new(a);
            assert_eq!(x * x.inv().unwrap(), Fp::one());
        }
        assert_eq!(Fp::<7>::zero().inv(), None);
    }

    #[test]
    fn negative_reduction() {
        assert_eq!(Fp::<5>::new(-1).value(), 4);
        assert_eq!(-Fp::<2>::new(1), Fp::<2>::new(1));
    }
}
