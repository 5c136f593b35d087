use crate::error::{Error, Result};
use std::sync::Arc;

pub const MAX_ORDER: usize = 200;

/// A finite group given by its full multiplication table. Element 0 is the
/// identity, the remaining indices are in a deterministic order fixed by the
/// constructor.
#[derive(Clone)]
pub struct GroupTable {
    pub order: usize,
    pub(crate) mul: Vec<u16>,
    pub inv: Vec<usize>,
    pub labels: Vec<String>,
    /// How this table was built, e.g. the spec string.
    pub provenance: String,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable({}, |G|={})", self.provenance, self.order)
    }
}

impl GroupTable {
    pub fn from_table(mul: Vec<u16>, labels: Vec<String>, provenance: String) -> Result<Self> {
        let order = labels.len();
        if order == 0 || mul.len() != order * order {
            return Err(Error::Invalid("malformed multiplication table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::SizeLimit(order, MAX_ORDER));
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b;
                }
            }
        }
        let g = GroupTable {
            order,
            mul,
            inv,
            labels,
            provenance,
        };
        g.check_axioms()?;
        Ok(g)
    }

    #[inline(always)]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline(always)]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv[g])
    }

    pub fn pow(&self, g: usize, mut e: i64) -> usize {
        let mut base = if e < 0 {
            e = -e;
            self.inv[g]
        } else {
            g
        };
        let mut acc = 0usize;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn order_of(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1usize, |acc, g| lcm(acc, self.order_of(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(a, 0) != a || self.mul(0, a) != a {
                return Err(Error::Invalid("identity law fails".into()));
            }
            if self.inv[a] == usize::MAX || self.mul(a, self.inv[a]) != 0 {
                return Err(Error::Invalid("inverses missing".into()));
            }
            // each row/column must be a permutation
            let mut seen_r = vec![false; n];
            let mut seen_c = vec![false; n];
            for b in 0..n {
                let r = self.mul(a, b);
                let c = self.mul(b, a);
                if seen_r[r] || seen_c[c] {
                    return Err(Error::Invalid("table is not a Latin square".into()));
                }
                seen_r[r] = true;
                seen_c[c] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Invalid("associativity fails".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shared(self) -> Arc<GroupTable> {
        Arc::new(self)
    }

    // ---- named constructors -------------------------------------------------

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("C 0 is not a group".into()));
        }
        Self::metacyclic(1, 1, n, &format!("C {n}"), "g")
            .map(|mut g| {
                for (i, l) in g.labels.iter_mut().enumerate() {
                    *l = if i == 0 { "e".into() } else { format!("g^{i}") };
                }
                g
            })
    }

    /// C_a semidirect C_c, the generator t of C_c acting by x -> x^b.
    pub fn metacyclic(a: usize, b: usize, c: usize, provenance: &str, xname: &str) -> Result<Self> {
        if a == 0 || c == 0 {
            return Err(Error::Invalid("trivial cyclic factor of order 0".into()));
        }
        let b = b % a.max(1);
        // b must be invertible mod a and b^c = 1 mod a
        if a > 1 {
            if gcd(b, a) != 1 {
                return Err(Error::Invalid(format!(
                    "twist {b} is not invertible modulo {a}"
                )));
            }
            let mut p = 1usize;
            for _ in 0..c {
                p = p * b % a;
            }
            if p != 1 {
                return Err(Error::Invalid(format!(
                    "twist {b} has order not dividing {c} modulo {a}"
                )));
            }
        }
        let n = a * c;
        if n > MAX_ORDER {
            return Err(Error::SizeLimit(n, MAX_ORDER));
        }
        // element (i, j) = x^i t^j, index i*c + j
        let mut mul = vec![0u16; n * n];
        let mut bpow = vec![1usize; c];
        for j in 1..c {
            bpow[j] = bpow[j - 1] * b % a.max(1);
        }
        for i in 0..a {
            for j in 0..c {
                for k in 0..a {
                    for l in 0..c {
                        // x^i t^j x^k t^l = x^{i + k*b^j} t^{j+l}
                        let x = (i + k * bpow[j]) % a;
                        let t = (j + l) % c;
                        mul[(i * c + j) * n + (k * c + l)] = (x * c + t) as u16;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for i in 0..a {
            for j in 0..c {
                labels.push(match (i, j) {
                    (0, 0) => "e".into(),
                    (0, _) => format!("t^{j}"),
                    (_, 0) => format!("{xname}^{i}"),
                    _ => format!("{xname}^{i} t^{j}"),
                });
            }
        }
        Self::from_table(mul, labels, provenance.into())
    }

    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("D 0 is not a group".into()));
        }
        let b = if n == 1 { 0 } else { n - 1 };
        let mut g = Self::metacyclic(n, b, 2, &format!("D {n}"), "r")?;
        for i in 0..n {
            for j in 0..2 {
                g.labels[i * 2 + j] = match (i, j) {
                    (0, 0) => "e".into(),
                    (0, 1) => "s".into(),
                    (_, 0) => format!("r^{i}"),
                    (_, _) => format!("r^{i} s"),
                };
            }
        }
        Ok(g)
    }

    fn from_perms(perms: Vec<Vec<u8>>, provenance: String) -> Result<Self> {
        let mut elems = perms;
        elems.sort();
        // identity is lexicographically least, hence index 0 already
        let n = elems.len();
        let idx: std::collections::HashMap<Vec<u8>, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut mul = vec![0u16; n * n];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                let r: Vec<u8> = q.iter().map(|&k| p[k as usize]).collect();
                mul[i * n + j] = idx[&r] as u16;
            }
        }
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(mul, labels, provenance)
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || factorial(n) > MAX_ORDER {
            return Err(Error::SizeLimit(factorial(n.max(1)), MAX_ORDER));
        }
        Self::from_perms(all_perms(n), format!("S {n}"))
    }

    pub fn alternating(n: usize) -> Result<Self> {
        if n == 0 || factorial(n) / 2 > MAX_ORDER {
            return Err(Error::SizeLimit(factorial(n.max(1)) / 2, MAX_ORDER));
        }
        let perms = all_perms(n)
            .into_iter()
            .filter(|p| perm_sign(p))
            .collect();
        Self::from_perms(perms, format!("A {n}"))
    }

    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<Self> {
        let n = g.order * h.order;
        if n > MAX_ORDER {
            return Err(Error::SizeLimit(n, MAX_ORDER));
        }
        let mut mul = vec![0u16; n * n];
        for a in 0..g.order {
            for b in 0..h.order {
                for c in 0..g.order {
                    for d in 0..h.order {
                        mul[(a * h.order + b) * n + (c * h.order + d)] =
                            (g.mul(a, c) * h.order + h.mul(b, d)) as u16;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for a in 0..g.order {
            for b in 0..h.order {
                labels.push(format!("({},{})", g.labels[a], h.labels[b]));
            }
        }
        Self::from_table(
            mul,
            labels,
            format!("{} x {}", g.provenance, h.provenance),
        )
    }

    /// The order-18 group C3:C6 = <x, a, b> = (C3 x C3) : C2 with
    /// x a x^-1 = a and x b x^-1 = b^-1.
    pub fn g18() -> Result<Self> {
        let n = 18;
        let enc = |i: usize, j: usize, k: usize| (i * 3 + j) * 2 + k;
        let mut mul = vec![0u16; n * n];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..2 {
                    for p in 0..3 {
                        for q in 0..3 {
                            for l in 0..2 {
                                // a^i b^j x^k * a^p b^q x^l
                                let (pp, qq) = if k == 0 { (p, q) } else { (p, (3 - q) % 3) };
                                let e = enc((i + pp) % 3, (j + qq) % 3, (k + l) % 2);
                                mul[enc(i, j, k) * n + enc(p, q, l)] = e as u16;
                            }
                        }
                    }
                }
            }
        }
        let mut labels = vec![String::new(); n];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..2 {
                    let mut s = String::new();
                    if i > 0 {
                        s += &format!("a^{i} ");
                    }
                    if j > 0 {
                        s += &format!("b^{j} ");
                    }
                    if k > 0 {
                        s += "x ";
                    }
                    let s = s.trim().to_string();
                    labels[enc(i, j, k)] = if s.is_empty() { "e".into() } else { s };
                }
            }
        }
        Self::from_table(mul, labels, "G18".into())
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
}

fn all_perms(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            for k in 0..n as u8 {
                if !p.contains(&k) {
                    let mut q = p.clone();
                    q.push(k);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn perm_sign(p: &[u8]) -> bool {
    let mut even = true;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                even = !even;
            }
        }
    }
    even
}

fn cycle_notation(p: &[u8]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut cur = p[start] as usize;
        while cur != start {
            seen[cur] = true;
            cyc.push(cur);
            cur = p[cur] as usize;
        }
        out += "(";
        out += &cyc
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out += ")";
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}
