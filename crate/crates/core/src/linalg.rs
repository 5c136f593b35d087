//! Exact linear algebra over Z/p^e: Howell forms for span membership,
//! right kernels, coefficient extraction and a Smith-style diagonalization
//! with tracked transforms. Z/p^e is a chain ring, so the ideal generated by
//! a set of entries is generated by any entry of least p-adic valuation;
//! all pivots below are of the form p^k.

/// Extended gcd over i128: returns (g, x, y) with a x + b y = g.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some((x.rem_euclid(m as i128)) as u64)
}

#[derive(Clone, Copy, Debug)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
    pub m: u64,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Self {
        PrimePower {
            p,
            e,
            m: p.pow(e),
        }
    }

    /// p-adic valuation, capped at e (val(0) = e).
    pub fn val(&self, a: u64) -> u32 {
        let mut a = a % self.m;
        if a == 0 {
            return self.e;
        }
        let mut v = 0;
        while a % self.p == 0 {
            a /= self.p;
            v += 1;
        }
        v
    }

    pub fn unit_part(&self, a: u64) -> u64 {
        let mut a = a % self.m;
        if a == 0 {
            return 1;
        }
        while a % self.p == 0 {
            a /= self.p;
        }
        a
    }
}

pub fn factor(mut n: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push(PrimePower::new(p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push(PrimePower::new(n, 1));
    }
    out
}

fn sub_scaled(row: &mut [u64], other: &[u64], q: u64, m: u64) {
    for (a, &b) in row.iter_mut().zip(other) {
        *a = (*a + (m - q % m) % m * (b % m)) % m;
    }
}

/// Row Howell form over Z/p^e. Each row has a pivot column with entry p^k,
/// zeros to the left, and all other rows reduced modulo p^k at that column.
/// Membership in the row span is decidable by greedy left-to-right reduction.
#[derive(Clone, Debug)]
pub struct HowellForm {
    pub pp: PrimePower,
    pub ncols: usize,
    pub rows: Vec<Vec<u64>>,
    /// pivot column of each row, strictly increasing
    pub pivots: Vec<usize>,
}

pub fn howell_form(input: &[Vec<u64>], ncols: usize, pp: PrimePower) -> HowellForm {
    let m = pp.m;
    let mut work: Vec<Vec<u64>> = input
        .iter()
        .map(|r| {
            let mut v: Vec<u64> = r.iter().map(|&x| x % m).collect();
            v.resize(ncols, 0);
            v
        })
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for c in 0..ncols {
        // rows in `work` are zero on columns < c by construction
        let best = work
            .iter()
            .enumerate()
            .filter(|(_, r)| r[c] % m != 0)
            .min_by_key(|(_, r)| pp.val(r[c]));
        let Some((bi, _)) = best.map(|(i, _)| (i, ())) else {
            continue;
        };
        let mut piv = work.swap_remove(bi);
        let k = pp.val(piv[c]);
        let u_inv = inv_mod(pp.unit_part(piv[c]), m).expect("unit");
        for x in piv.iter_mut() {
            *x = *x * u_inv % m;
        }
        debug_assert_eq!(piv[c], pp.p.pow(k));
        let pk = pp.p.pow(k);
        // clear column c in the remaining work rows
        for r in work.iter_mut() {
            if r[c] != 0 {
                debug_assert!(pp.val(r[c]) >= k);
                let q = r[c] / pk;
                sub_scaled(r, &piv, q, m);
            }
        }
        work.retain(|r| r.iter().any(|&x| x != 0));
        // annihilator of the pivot contributes to later columns
        if k > 0 {
            let ann: Vec<u64> = piv.iter().map(|&x| x * pp.p.pow(pp.e - k) % m).collect();
            if ann.iter().any(|&x| x != 0) {
                work.push(ann);
            }
        }
        // normalize the placed rows at column c modulo p^k
        for r in rows.iter_mut() {
            let q = r[c] / pk;
            if q != 0 {
                sub_scaled(r, &piv, q, m);
            }
        }
        rows.push(piv);
        pivots.push(c);
    }
    HowellForm {
        pp,
        ncols,
        rows,
        pivots,
    }
}

impl HowellForm {
    /// Reduce v by the form; the result is the canonical coset representative.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let m = self.pp.m;
        let mut v: Vec<u64> = v.iter().map(|&x| x % m).collect();
        v.resize(self.ncols, 0);
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let pk = row[c];
            let q = v[c] / pk;
            if q != 0 {
                sub_scaled(&mut v, row, q, m);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Number of elements in the row span.
    pub fn span_size(&self) -> u128 {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(r, &c)| (self.pp.m / r[c]) as u128)
            .product()
    }
}

/// Coefficients x (len = rows.len()) with sum_i x_i rows_i = v, if any.
pub fn express_in_span(rows: &[Vec<u64>], v: &[u64], ncols: usize, pp: PrimePower) -> Option<Vec<u64>> {
    SpanSolver::new(rows, ncols, pp).coefficients(v)
}

/// Incremental row-space echelonizer over Z/p^e. Keeps at most one row per
/// pivot column; the retained rows span exactly the row space of everything
/// fed in. Useful when the constraint stream is much longer than the width.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub pp: PrimePower,
    pub ncols: usize,
    rows: std::collections::BTreeMap<usize, Vec<u64>>,
}

impl Echelon {
    pub fn new(ncols: usize, pp: PrimePower) -> Self {
        Echelon {
            pp,
            ncols,
            rows: Default::default(),
        }
    }

    pub fn add_row(&mut self, mut r: Vec<u64>) {
        let m = self.pp.m;
        for x in r.iter_mut() {
            *x %= m;
        }
        loop {
            let Some(c) = r.iter().position(|&x| x != 0) else {
                return;
            };
            match self.rows.get_mut(&c) {
                None => {
                    let k = self.pp.val(r[c]);
                    let u_inv = inv_mod(self.pp.unit_part(r[c]), m).expect("unit");
                    for x in r.iter_mut() {
                        *x = *x * u_inv % m;
                    }
                    debug_assert_eq!(r[c], self.pp.p.pow(k));
                    self.rows.insert(c, r);
                    return;
                }
                Some(piv) => {
                    let ke = self.pp.val(piv[c]);
                    if self.pp.val(r[c]) >= ke {
                        let q = r[c] / self.pp.p.pow(ke);
                        let pr = piv.clone();
                        sub_scaled(&mut r, &pr, q, m);
                    } else {
                        let u_inv = inv_mod(self.pp.unit_part(r[c]), m).expect("unit");
                        for x in r.iter_mut() {
                            *x = *x * u_inv % m;
                        }
                        std::mem::swap(piv, &mut r);
                        // the displaced pivot keeps reducing on the next pass
                    }
                }
            }
        }
    }

    /// The retained spanning rows, by pivot column.
    pub fn into_rows(self) -> Vec<Vec<u64>> {
        self.rows.into_values().collect()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Augmented Howell form built once so that repeated "is v in the span /
/// with which coefficients" queries stay cheap.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    hf: HowellForm,
    ncols: usize,
    nrows: usize,
}

impl SpanSolver {
    pub fn new(rows: &[Vec<u64>], ncols: usize, pp: PrimePower) -> Self {
        let m = pp.m;
        let k = rows.len();
        let aug: Vec<Vec<u64>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row: Vec<u64> = r.iter().map(|&x| x % m).collect();
                row.resize(ncols + k, 0);
                row[ncols + i] = 1;
                row
            })
            .collect();
        SpanSolver {
            hf: howell_form(&aug, ncols + k, pp),
            ncols,
            nrows: k,
        }
    }

    /// Coefficients x with sum_i x_i rows_i = v, if v is in the span.
    pub fn coefficients(&self, v: &[u64]) -> Option<Vec<u64>> {
        let m = self.hf.pp.m;
        let mut w: Vec<u64> = v.iter().map(|&x| x % m).collect();
        w.resize(self.ncols + self.nrows, 0);
        for (row, &c) in self.hf.rows.iter().zip(&self.hf.pivots) {
            if c >= self.ncols {
                break;
            }
            let pk = row[c];
            let q = w[c] / pk;
            if q != 0 {
                sub_scaled(&mut w, row, q, m);
            }
        }
        if w[..self.ncols].iter().any(|&x| x != 0) {
            return None;
        }
        Some(w[self.ncols..].iter().map(|&x| (m - x) % m).collect())
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.coefficients(v).is_some()
    }
}

/// Spanning set of { x : A x = 0 } over Z/p^e (x indexed by columns of A).
pub fn right_kernel(a: &[Vec<u64>], ncols: usize, pp: PrimePower) -> Vec<Vec<u64>> {
    let m = pp.m;
    let nrows = a.len();
    // rows of the augmented system: (column_j of A | e_j)
    let aug: Vec<Vec<u64>> = (0..ncols)
        .map(|j| {
            let mut row = vec![0u64; nrows + ncols];
            for (i, r) in a.iter().enumerate() {
                row[i] = r.get(j).copied().unwrap_or(0) % m;
            }
            row[nrows + j] = 1;
            row
        })
        .collect();
    let hf = howell_form(&aug, nrows + ncols, pp);
    hf.rows
        .iter()
        .zip(&hf.pivots)
        .filter(|(_, &c)| c >= nrows)
        .map(|(r, _)| r[nrows..].to_vec())
        .collect()
}

/// Smith-style diagonalization over Z/p^e with transforms:
/// left * A * right = diag(d), d_i = p^{k_i} with k nondecreasing,
/// and right_inv * right = I.
#[derive(Clone, Debug)]
pub struct SmithLocal {
    pub pp: PrimePower,
    pub diag: Vec<u64>,
    pub left: Vec<Vec<u64>>,
    pub right: Vec<Vec<u64>>,
    pub right_inv: Vec<Vec<u64>>,
}

pub fn smith_local(a: &[Vec<u64>], ncols: usize, pp: PrimePower) -> SmithLocal {
    let m = pp.m;
    let nrows = a.len();
    let mut a: Vec<Vec<u64>> = a
        .iter()
        .map(|r| {
            let mut v: Vec<u64> = r.iter().map(|&x| x % m).collect();
            v.resize(ncols, 0);
            v
        })
        .collect();
    let ident = |n: usize| -> Vec<Vec<u64>> {
        (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect()
    };
    let mut left = ident(nrows);
    let mut right = ident(ncols);
    let mut right_inv = ident(ncols);
    let mut diag = Vec::new();
    for t in 0..nrows.min(ncols) {
        let mut best: Option<(usize, usize, u32)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] % m != 0 {
                    let v = pp.val(a[i][j]);
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((bi, bj, k)) = best else { break };
        a.swap(t, bi);
        left.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        for row in right.iter_mut() {
            row.swap(t, bj);
        }
        right_inv.swap(t, bj);
        let u_inv = inv_mod(pp.unit_part(a[t][t]), m).expect("unit");
        for x in a[t].iter_mut() {
            *x = *x * u_inv % m;
        }
        for x in left[t].iter_mut() {
            *x = *x * u_inv % m;
        }
        let pk = pp.p.pow(k);
        debug_assert_eq!(a[t][t], pk);
        for i in 0..nrows {
            if i != t && a[i][t] != 0 {
                let q = a[i][t] / pk;
                let piv = a[t].clone();
                sub_scaled(&mut a[i], &piv, q, m);
                let lp = left[t].clone();
                sub_scaled(&mut left[i], &lp, q, m);
            }
        }
        for j in 0..ncols {
            if j != t && a[t][j] != 0 {
                let q = a[t][j] / pk;
                // col_j -= q col_t; inverse op applies to right_inv rows
                for row in a.iter_mut() {
                    row[j] = (row[j] + (m - q % m) % m * row[t]) % m;
                }
                for row in right.iter_mut() {
                    row[j] = (row[j] + (m - q % m) % m * row[t]) % m;
                }
                let rt = right_inv[j].clone();
                // (col add on right) corresponds to row op on right_inv:
                // row_t += q row_j
                for (x, &y) in right_inv[t].iter_mut().zip(&rt) {
                    *x = (*x + q % m * y) % m;
                }
            }
        }
        diag.push(pk);
    }
    SmithLocal {
        pp,
        diag,
        left,
        right,
        right_inv,
    }
}
