//! Dense univariate polynomials over `Q`, lowest degree first. Only what the
//! cyclotomic arithmetic needs.

use num_traits::{One, Zero};

use super::{Field, Rational};

pub(crate) type QPoly = Vec<Rational>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &QPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut r = a.clone();
    trim(&mut r);
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            if !bc.is_zero() {
                r[shift + i] -= &c * bc;
            }
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Returns `s` with `s * a = 1 (mod m)`, or `None` when `gcd(a, m) != 1`.
pub(crate) fn inverse_mod(a: &QPoly, m: &QPoly) -> Option<QPoly> {
    // Extended Euclid tracking only the coefficient of `a`.
    let (mut r0, mut r1) = (m.clone(), a.clone());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![Rational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = r0[0].inv()?;
    let mut s: QPoly = s0.iter().map(|x| x * &c).collect();
    let (_, rem) = divrem(&s, m);
    s = rem;
    Some(s)
}

/// Integer coefficients of the `n`-th cyclotomic polynomial.
pub(crate) fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_int(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    assert_eq!(b[db], 1, "monic divisor");
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for k in (db..a.len()).rev() {
        let c = r[k];
        if c != 0 {
            for i in 0..=db {
                r[k - db + i] -= c * b[i];
            }
            q[k - db] = c;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "inexact cyclotomic division");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn inverse_of_one_plus_x_mod_phi3() {
        let q = |v: &[i64]| v.iter().map(|&x| Rational::from_int(x)).collect::<QPoly>();
        let inv = inverse_mod(&q(&[1, 1]), &q(&[1, 1, 1])).unwrap();
        // (1 + x)^{-1} = -x mod x^2 + x + 1
        assert_eq!(inv, q(&[0, -1]));
        assert!(inverse_mod(&q(&[1, 1]), &q(&[1, 0, -1])).is_none());
    }
}
