//! Exact arithmetic in cyclotomic fields Q(zeta_N), power basis modulo the
//! N-th cyclotomic polynomial, with conductor lifting for mixed operands.

use crate::{Error, Result};
use num::{BigInt, BigRational, One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// Integer coefficients of the N-th cyclotomic polynomial, constant term
/// first, including the leading 1 (degree = phi(N)).
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    static CACHE: Lazy<Mutex<HashMap<u64, Vec<BigInt>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); (n + 1) as usize];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = divide_exact(&num, &phi_d);
        }
    }
    while num.len() > 1 && num.last().unwrap().is_zero() {
        num.pop();
    }
    CACHE.lock().unwrap().insert(n, num.clone());
    num
}

/// Exact polynomial division (remainder known to be zero, monic divisor).
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for j in 0..=dd {
            rem[i + j] -= &c * &den[j];
        }
    }
    quot
}

fn euler_phi(mut n: u64) -> u64 {
    let mut out = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            out *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        out *= n - 1;
    }
    out
}

/// An element of Q(zeta_N) stored on the power basis 1, z, ..., z^{phi(N)-1}.
#[derive(Clone)]
pub struct CycScalar {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        self.sub(other).is_zero()
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "z{}^{}", self.conductor, i)?;
            } else {
                write!(f, "{}*z{}^{}", c, self.conductor, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycScalar {
    pub fn zero() -> Self {
        CycScalar { conductor: 1, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        CycScalar { conductor: 1, coeffs: vec![BigRational::one()] }
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycScalar { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// zeta_n^k, stored at conductor n.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u64;
        let deg = euler_phi(n) as usize;
        let mut s = CycScalar {
            conductor: n,
            coeffs: vec![BigRational::zero(); deg],
        };
        let mut mono = vec![BigRational::zero(); (k + 1) as usize];
        mono[k as usize] = BigRational::one();
        s.coeffs = reduce_mod_phi(mono, n);
        s
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.clone().sub(&CycScalar::one()).is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn rational_part(&self) -> BigRational {
        self.coeffs[0].clone()
    }

    /// Re-express at a larger conductor m (self.conductor must divide m).
    fn lift(&self, m: u64) -> CycScalar {
        if self.conductor == m {
            return self.clone();
        }
        assert_eq!(m % self.conductor, 0);
        let step = (m / self.conductor) as usize;
        let mut raw = vec![BigRational::zero(); self.coeffs.len() * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        CycScalar { conductor: m, coeffs: reduce_mod_phi(raw, m) }
    }

    fn align(&self, other: &CycScalar) -> (CycScalar, CycScalar, u64) {
        let m = lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m), m)
    }

    pub fn add(&self, other: &CycScalar) -> CycScalar {
        let (mut a, b, m) = self.align(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        CycScalar { conductor: m, coeffs: a.coeffs }
    }

    pub fn sub(&self, other: &CycScalar) -> CycScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycScalar) -> CycScalar {
        let (a, b, m) = self.align(other);
        let mut raw =
            vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        CycScalar { conductor: m, coeffs: reduce_mod_phi(raw, m) }
    }

    pub fn scale(&self, r: &BigRational) -> CycScalar {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// the cyclotomic polynomial.
    pub fn inverse(&self) -> Result<CycScalar> {
        if self.is_zero() {
            return Err(Error::Invalid("division by zero".into()));
        }
        let n = self.conductor;
        let phi: Vec<BigRational> = cyclotomic_poly(n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        // Extended Euclid over Q[x]: gcd(self, Phi_n) = 1.
        let mut r0 = phi;
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut s0 = vec![BigRational::zero()];
        let mut s1 = vec![BigRational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant gcd; scale s0 by its inverse.
        if r0.len() != 1 || r0[0].is_zero() {
            return Err(Error::Invalid("non-invertible cyclotomic element".into()));
        }
        let inv = r0[0].recip();
        let coeffs = reduce_mod_phi(
            s0.into_iter().map(|c| c * &inv).collect(),
            n,
        );
        Ok(CycScalar { conductor: n, coeffs })
    }

    /// Numeric value with zeta_N = exp(2 pi i / N).
    pub fn to_complex(&self) -> num_complex::Complex64 {
        use num::ToPrimitive;
        let mut z = num_complex::Complex64::new(0.0, 0.0);
        let n = self.conductor as f64;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let arg = 2.0 * std::f64::consts::PI * (i as f64) / n;
            let v = c.to_f64().unwrap();
            z += num_complex::Complex64::new(arg.cos() * v, arg.sin() * v);
        }
        z
    }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
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
    trim(&mut out);
    out
}

fn poly_divmod(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![BigRational::zero()], rem);
    }
    let lead = den[dd].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for j in 0..=dd {
            let t = &c * &den[j];
            rem[i + j] -= t;
        }
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Reduce a raw coefficient vector (powers of zeta_n) modulo Phi_n, then
/// truncate/pad to degree phi(n).
fn reduce_mod_phi(mut raw: Vec<BigRational>, n: u64) -> Vec<BigRational> {
    let phi: Vec<BigRational> = cyclotomic_poly(n)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    let deg = phi.len() - 1;
    let mut i = raw.len();
    while i > deg {
        i -= 1;
        let c = raw[i].clone();
        if c.is_zero() {
            continue;
        }
        raw[i] = BigRational::zero();
        for j in 0..deg {
            let t = &c * &phi[j];
            raw[i - deg + j] -= t;
        }
    }
    raw.truncate(deg.max(1));
    while raw.len() < deg.max(1) {
        raw.push(BigRational::zero());
    }
    raw
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_multiply() {
        let z = CycScalar::root_of_unity(12, 1);
        let mut acc = CycScalar::one();
        for _ in 0..12 {
            acc = acc.mul(&z);
        }
        assert!(acc.is_one());
        // zeta_12^6 = -1
        let m = CycScalar::root_of_unity(12, 6);
        assert!(m.add(&CycScalar::one()).is_zero());
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        let a = CycScalar::root_of_unity(3, 1);
        let b = CycScalar::root_of_unity(4, 1);
        let p = a.mul(&b);
        assert_eq!(p.conductor(), 12);
        // zeta_3 * zeta_4 = zeta_12^{4+3}
        assert_eq!(p, CycScalar::root_of_unity(12, 7));
        // 1 + zeta_3 + zeta_3^2 = 0
        let s = CycScalar::one()
            .add(&CycScalar::root_of_unity(3, 1))
            .add(&CycScalar::root_of_unity(3, 2));
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        for n in [1u64, 2, 3, 4, 5, 7, 12] {
            for k in 0..n {
                let x = CycScalar::root_of_unity(n, k as i64)
                    .add(&CycScalar::from_integer(3));
                let inv = x.inverse().unwrap();
                assert!(x.mul(&inv).is_one(), "n={n} k={k}");
            }
        }
    }
}
