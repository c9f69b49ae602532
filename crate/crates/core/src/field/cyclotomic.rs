//! Elements of cyclotomic fields `Q(zeta_n)` in the power basis
//! `1, zeta_n, ..., zeta_n^(phi(n)-1)`, fully reduced modulo `Phi_n`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::poly::{self, QPoly};
use super::rational::rational_parts;
use super::{parse_rational, Cyclotomic, Field, Rational};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("expected {expected} coefficients for conductor {conductor}, got {got}")]
    WrongLength {
        conductor: u32,
        expected: usize,
        got: usize,
    },
    #[error("bad rational literal {0:?}")]
    BadRational(String),
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

fn cyclo(n: u32) -> Rc<Vec<i64>> {
    PHI_CACHE.with(|c| {
        c.borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(poly::cyclotomic_poly(n)))
            .clone()
    })
}

/// Reduces a polynomial in `zeta_n` to canonical length `phi(n)`.
fn reduce(n: u32, mut p: QPoly) -> Vec<Rational> {
    let phi = euler_phi(n);
    if p.len() > phi {
        let cp = cyclo(n);
        for k in (phi..p.len()).rev() {
            if p[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut p[k], Rational::zero());
            for (i, &pc) in cp.iter().enumerate().take(phi) {
                if pc != 0 {
                    p[k - phi + i] -= &c * Rational::from_int(pc);
                }
            }
        }
    }
    p.resize(phi, Rational::zero());
    p
}

/// Exact element of `Q(zeta_n)`.
///
/// Arithmetic operators accept operands of different conductors and work in
/// the field of the least common multiple; the `checked_*` methods insist on
/// equal conductors. Equality compares field values, so `-1` at conductor 2
/// equals `zeta_4^2` at conductor 4.
#[derive(Clone)]
pub struct CycScalar {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Result<Self, CycError> {
        if conductor == 0 {
            return Err(CycError::ZeroConductor);
        }
        let expected = euler_phi(conductor);
        if coeffs.len() != expected {
            return Err(CycError::WrongLength {
                conductor,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(CycScalar { conductor, coeffs })
    }

    /// Builds `sum_i poly[i] * zeta_n^i` for arbitrary-length input.
    pub fn from_poly(conductor: u32, poly: Vec<Rational>) -> Result<Self, CycError> {
        if conductor == 0 {
            return Err(CycError::ZeroConductor);
        }
        Ok(CycScalar {
            conductor,
            coeffs: reduce(conductor, poly),
        })
    }

    pub fn from_rational(r: Rational) -> Self {
        CycScalar {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_rational_at(conductor: u32, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); euler_phi(conductor)];
        coeffs[0] = r;
        CycScalar { conductor, coeffs }
    }

    /// `zeta_n^k`, any integer `k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0, "root of unity of order 0");
        let e = k.rem_euclid(n as i64) as usize;
        let mut p = vec![Rational::zero(); e + 1];
        p[e] = Rational::one();
        CycScalar {
            conductor: n,
            coeffs: reduce(n, p),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The same value written over `Q(zeta_target)`.
    pub fn promote(&self, target: u32) -> Result<Self, CycError> {
        if target == 0 || target % self.conductor != 0 {
            return Err(CycError::NotDivisible {
                from: self.conductor,
                to: target,
            });
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = (target / self.conductor) as usize;
        let mut p = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i * step] = c.clone();
        }
        Ok(CycScalar {
            conductor: target,
            coeffs: reduce(target, p),
        })
    }

    /// Recognises the value inside the subfield `Q(zeta_target)`, if it lies
    /// there. `target` must divide the conductor.
    pub fn demote(&self, target: u32) -> Result<Option<Self>, CycError> {
        if target == 0 || self.conductor % target != 0 {
            return Err(CycError::NotDivisible {
                from: target,
                to: self.conductor,
            });
        }
        if target == self.conductor {
            return Ok(Some(self.clone()));
        }
        let small = euler_phi(target);
        let big = self.coeffs.len();
        // Columns: images of zeta_target^i in the big power basis.
        let mut m = Matrix::<Rational>::zeros(big, small);
        for i in 0..small {
            let img = CycScalar::root_of_unity(target, i as i64)
                .promote(self.conductor)
                .expect("divisible");
            for (r, c) in img.coeffs.iter().enumerate() {
                m.set(r, i, c.clone());
            }
        }
        let rhs = Matrix::column(self.coeffs.clone());
        let sol = m.solve(&rhs).expect("shapes agree");
        Ok(sol.map(|x| CycScalar {
            conductor: target,
            coeffs: x.into_column(),
        }))
    }

    /// Rewrites the value over the smallest conductor that contains it.
    pub fn simplify(&self) -> Self {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            return CycScalar::from_rational(self.coeffs[0].clone());
        }
        let n = self.conductor;
        for d in 1..n {
            if n % d == 0 {
                if let Ok(Some(x)) = self.demote(d) {
                    return x;
                }
            }
        }
        self.clone()
    }

    fn lift_pair(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Self) {
        // Returns (self', other') at a common conductor.
        if self.conductor == other.conductor {
            return (std::borrow::Cow::Borrowed(self), other.clone());
        }
        let l = self.conductor.lcm(&other.conductor);
        (
            std::borrow::Cow::Owned(self.promote(l).expect("lcm")),
            other.promote(l).expect("lcm"),
        )
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CycError> {
        self.same_conductor(other)?;
        Ok(self.add_ref(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CycError> {
        self.same_conductor(other)?;
        Ok(self.sub_ref(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CycError> {
        self.same_conductor(other)?;
        Ok(self.mul_ref(other))
    }

    pub fn checked_inv(&self) -> Result<Self, CycError> {
        self.inv().ok_or(CycError::DivisionByZero)
    }

    fn same_conductor(&self, other: &Self) -> Result<(), CycError> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(CycError::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let (a, b) = self.lift_pair(other);
        CycScalar {
            conductor: b.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let (a, b) = self.lift_pair(other);
        let n = b.conductor;
        if a.coeffs.len() == 1 {
            return CycScalar {
                conductor: n,
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            };
        }
        if a.is_rational() {
            let c = &a.coeffs[0];
            return CycScalar {
                conductor: n,
                coeffs: b.coeffs.iter().map(|x| x * c).collect(),
            };
        }
        if b.is_rational() {
            let c = &b.coeffs[0];
            return CycScalar {
                conductor: n,
                coeffs: a.coeffs.iter().map(|x| x * c).collect(),
            };
        }
        CycScalar {
            conductor: n,
            coeffs: reduce(n, poly::mul(&a.coeffs, &b.coeffs)),
        }
    }

    fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lift_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [n={}]", self, self.conductor)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "z{}", self.conductor)?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for CycScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for CycScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for CycScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl Neg for CycScalar {
    type Output = Self;
    fn neg(self) -> Self {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Zero for CycScalar {
    fn zero() -> Self {
        CycScalar::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for CycScalar {
    fn one() -> Self {
        CycScalar::from_rational(Rational::one())
    }
}

impl Field for CycScalar {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
            coeffs[0] = self.coeffs[0].recip();
            return Some(CycScalar {
                conductor: self.conductor,
                coeffs,
            });
        }
        let modulus: QPoly = cyclo(self.conductor)
            .iter()
            .map(|&c| Rational::from_int(c))
            .collect();
        let s = poly::inverse_mod(&self.coeffs, &modulus)?;
        Some(CycScalar {
            conductor: self.conductor,
            coeffs: reduce(self.conductor, s),
        })
    }

    fn from_int(n: i64) -> Self {
        CycScalar::from_rational(Rational::from_int(n))
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            return CycScalar {
                conductor: self.conductor,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&other.coeffs)
                    .map(|(x, y)| x + y)
                    .collect(),
            };
        }
        self.zip_with(other, |x, y| x + y)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            return CycScalar {
                conductor: self.conductor,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&other.coeffs)
                    .map(|(x, y)| x - y)
                    .collect(),
            };
        }
        self.zip_with(other, |x, y| x - y)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }

    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }
}

impl Cyclotomic for CycScalar {
    fn root_of_unity(n: u32, k: i64) -> Self {
        CycScalar::root_of_unity(n, k)
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    conductor: u32,
    coeffs: Vec<(String, String)>,
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(rational_parts).collect(),
        }
        .serialize(s)
    }
}

/// Accepted input spellings: the canonical object form, a bare integer, or
/// a rational string such as `"-3/4"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarInput {
    Int(i64),
    Str(String),
    Obj(CycRepr),
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match ScalarInput::deserialize(d)? {
            ScalarInput::Int(n) => Ok(CycScalar::from_int(n)),
            ScalarInput::Str(s) => parse_rational(&s)
                .map(CycScalar::from_rational)
                .ok_or_else(|| D::Error::custom(CycError::BadRational(s))),
            ScalarInput::Obj(r) => {
                let coeffs = r
                    .coeffs
                    .iter()
                    .map(|(n, d)| {
                        parse_rational(&format!("{n}/{d}"))
                            .ok_or_else(|| CycError::BadRational(format!("{n}/{d}")))
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
                CycScalar::new(r.conductor, coeffs).map_err(D::Error::custom)
            }
        }
    }
}
