//! Second cohomology of finite groups with values in the roots of unity,
//! represented exactly: a cocycle stores exponents of zeta_modulus, and
//! classes are handled modulo coboundaries together with the lifting-defect
//! classes coming from characters (the kernel of passing from finite to
//! divisible coefficients).

mod catalog;
mod compute;

pub use catalog::sylow_subgroup;
pub use compute::{exhaustive_h2, h2, CohomologyGroup, EXHAUSTIVE_CAP};

use crate::error::{Error, Result};
use crate::group::{conjugacy_partition, GroupMap, GroupTable};
use std::sync::Arc;

pub(crate) fn lcm64(a: u64, b: u64) -> u64 {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// A normalized 2-cocycle on a finite group, with values zeta_modulus^vals.
#[derive(Clone)]
pub struct Cocycle2 {
    pub group: Arc<GroupTable>,
    pub modulus: u64,
    /// vals[g * n + h] = exponent of c(g, h)
    pub vals: Vec<u64>,
}

impl std::fmt::Debug for Cocycle2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Cocycle2(mod {}, on {})",
            self.modulus, self.group.provenance
        )
    }
}

impl Cocycle2 {
    pub fn trivial(group: &Arc<GroupTable>) -> Self {
        Cocycle2 {
            group: group.clone(),
            modulus: 1,
            vals: vec![0; group.order * group.order],
        }
    }

    pub fn new(group: &Arc<GroupTable>, modulus: u64, vals: Vec<u64>) -> Result<Self> {
        let c = Cocycle2 {
            group: group.clone(),
            modulus,
            vals,
        };
        c.check()?;
        Ok(c)
    }

    #[inline]
    pub fn get(&self, g: usize, h: usize) -> u64 {
        self.vals[g * self.group.order + h]
    }

    pub fn is_trivial_table(&self) -> bool {
        self.vals.iter().all(|&v| v % self.modulus.max(1) == 0)
    }

    pub fn check(&self) -> Result<()> {
        let n = self.group.order;
        let m = self.modulus;
        if m == 0 || self.vals.len() != n * n {
            return Err(Error::Invalid("malformed cocycle table".into()));
        }
        for x in 0..n {
            if self.get(0, x) % m != 0 || self.get(x, 0) % m != 0 {
                return Err(Error::Invalid("cocycle is not normalized".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.group.mul(a, b);
                for c in 0..n {
                    let lhs = self.get(a, b) + self.get(ab, c);
                    let rhs = self.get(b, c) + self.get(a, self.group.mul(b, c));
                    if lhs % m != rhs % m {
                        return Err(Error::Invalid(format!(
                            "cocycle identity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-express with exponents of zeta_l, l a multiple of the modulus.
    pub fn lift(&self, l: u64) -> Result<Cocycle2> {
        if l % self.modulus != 0 {
            return Err(Error::MismatchedParents);
        }
        let f = l / self.modulus;
        Ok(Cocycle2 {
            group: self.group.clone(),
            modulus: l,
            vals: self.vals.iter().map(|&v| v % self.modulus * f).collect(),
        })
    }

    pub fn mul(&self, other: &Cocycle2) -> Result<Cocycle2> {
        if !Arc::ptr_eq(&self.group, &other.group) && self.group.mul != other.group.mul {
            return Err(Error::MismatchedParents);
        }
        let l = lcm64(self.modulus, other.modulus);
        let a = self.lift(l)?;
        let b = other.lift(l)?;
        Ok(Cocycle2 {
            group: self.group.clone(),
            modulus: l,
            vals: a
                .vals
                .iter()
                .zip(&b.vals)
                .map(|(&x, &y)| (x + y) % l)
                .collect(),
        })
    }

    pub fn pow(&self, k: i64) -> Cocycle2 {
        let m = self.modulus;
        let k = k.rem_euclid(m as i64) as u64;
        Cocycle2 {
            group: self.group.clone(),
            modulus: m,
            vals: self.vals.iter().map(|&v| v % m * k % m).collect(),
        }
    }

    pub fn inv(&self) -> Cocycle2 {
        self.pow(-1)
    }

    /// Ratio self / other at a common modulus.
    pub fn div(&self, other: &Cocycle2) -> Result<Cocycle2> {
        self.mul(&other.inv())
    }

    /// Restriction to a subgroup given by its standalone table and embedding.
    pub fn restrict(&self, sub: &Arc<GroupTable>, embed: &[usize]) -> Cocycle2 {
        let k = sub.order;
        let mut vals = vec![0u64; k * k];
        for i in 0..k {
            for j in 0..k {
                vals[i * k + j] = self.get(embed[i], embed[j]) % self.modulus;
            }
        }
        Cocycle2 {
            group: sub.clone(),
            modulus: self.modulus,
            vals,
        }
    }

    /// Push forward along an isomorphism theta: (theta_* c)(x, y) =
    /// c(theta^{-1} x, theta^{-1} y), a cocycle on the target group.
    pub fn transport(&self, theta: &GroupMap) -> Result<Cocycle2> {
        if theta.source.order != self.group.order || !theta.is_bijective() {
            return Err(Error::MismatchedParents);
        }
        let n = theta.target.order;
        let mut pre = vec![0usize; n];
        for (g, &y) in theta.image.iter().enumerate() {
            pre[y] = g;
        }
        let mut vals = vec![0u64; n * n];
        for x in 0..n {
            for y in 0..n {
                vals[x * n + y] = self.get(pre[x], pre[y]) % self.modulus;
            }
        }
        Ok(Cocycle2 {
            group: theta.target.clone(),
            modulus: self.modulus,
            vals,
        })
    }
}

/// An element g is regular for c when c(g, x) = c(x, g) for every x in its
/// centralizer; regularity is constant on conjugacy classes.
pub fn is_regular(c: &Cocycle2, g: usize) -> bool {
    let gt = &c.group;
    let m = c.modulus;
    (0..gt.order)
        .filter(|&x| gt.mul(g, x) == gt.mul(x, g))
        .all(|x| c.get(g, x) % m == c.get(x, g) % m)
}

pub fn regular_class_count(c: &Cocycle2) -> usize {
    conjugacy_partition(&c.group)
        .iter()
        .filter(|class| is_regular(c, class[0]))
        .count()
}

/// Non-degenerate: exactly one regular class (necessarily the identity's).
pub fn is_nondegenerate(c: &Cocycle2) -> bool {
    regular_class_count(c) == 1
}
