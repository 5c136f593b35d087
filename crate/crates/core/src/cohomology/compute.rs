use super::catalog;
use super::{lcm64, Cocycle2};
use crate::error::{Error, Result};
use crate::group::{min_generating_set, AbelianShape, GroupTable, Subgroup};
use crate::linalg::{factor, right_kernel, smith_local, Echelon, PrimePower, SpanSolver};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Largest order computed by the direct solver; bigger groups fall back to
/// the closed-form catalog.
pub const EXHAUSTIVE_CAP: usize = 100;

/// Chains every group element down to the identity through left
/// multiplication by a fixed generating set. Unknowns of the cocycle solver
/// are the generator rows u(i, x) = f(gens[i], x); the rest of the table
/// is linear in them via
///   f(g_i w, x) = u(i, w x) - u(i, w) + f(w, x).
pub(crate) struct Expr {
    pub group: Arc<GroupTable>,
    pub gens: Vec<usize>,
    /// for w != e: (i, w') with w = gens[i] * w'; w' always precedes w in bfs
    parent: Vec<(usize, usize)>,
    bfs: Vec<usize>,
}

impl Expr {
    pub fn new(group: &Arc<GroupTable>) -> Expr {
        let gens = min_generating_set(group);
        let n = group.order;
        let mut parent = vec![(usize::MAX, usize::MAX); n];
        let mut bfs = vec![0usize];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut head = 0;
        while head < bfs.len() {
            let w = bfs[head];
            head += 1;
            for (i, &g) in gens.iter().enumerate() {
                let next = group.mul(g, w);
                if !seen[next] {
                    seen[next] = true;
                    parent[next] = (i, w);
                    bfs.push(next);
                }
            }
        }
        Expr {
            group: group.clone(),
            gens,
            parent,
            bfs,
        }
    }

    pub fn dim(&self) -> usize {
        self.gens.len() * self.group.order
    }

    fn uidx(&self, i: usize, x: usize) -> usize {
        i * self.group.order + x
    }

    /// Accumulate the symbolic row of f(w, x) into acc with the given sign.
    fn add_f(&self, acc: &mut [u64], mut w: usize, x: usize, positive: bool, m: u64) {
        let (plus, minus) = if positive { (1, m - 1) } else { (m - 1, 1) };
        while w != 0 {
            let (i, wp) = self.parent[w];
            acc[self.uidx(i, self.group.mul(wp, x))] =
                (acc[self.uidx(i, self.group.mul(wp, x))] + plus) % m;
            acc[self.uidx(i, wp)] = (acc[self.uidx(i, wp)] + minus) % m;
            w = wp;
        }
    }

    /// Rebuild the full n x n table from an unknown vector (mod m).
    pub fn table(&self, u: &[u64], m: u64) -> Vec<u64> {
        let n = self.group.order;
        let mut f = vec![0u64; n * n];
        for &w in &self.bfs[1..] {
            let (i, wp) = self.parent[w];
            for x in 0..n {
                let v = u[self.uidx(i, self.group.mul(wp, x))] % m + (m - u[self.uidx(i, wp)] % m)
                    + f[wp * n + x];
                f[w * n + x] = v % m;
            }
        }
        f
    }
}

/// Generator-row vectors of the span that dies in divisible coefficients:
/// coboundaries plus the carry cocycles of the abelianization's characters.
/// Entries are small integers, reduced per prime power at use sites.
fn boundary_and_carry_uvecs(group: &Arc<GroupTable>, gens: &[usize]) -> Vec<Vec<i64>> {
    let n = group.order;
    let d = gens.len() * n;
    let mut out = Vec::new();
    for y in 1..n {
        let mut v = vec![0i64; d];
        for (i, &g) in gens.iter().enumerate() {
            for x in 0..n {
                let mut e = 0i64;
                if g == y {
                    e += 1;
                }
                if x == y {
                    e += 1;
                }
                if group.mul(g, x) == y {
                    e -= 1;
                }
                v[i * n + x] = e;
            }
        }
        out.push(v);
    }
    let derived = Subgroup::full(group).commutator_subgroup();
    let (quot, proj) = derived.quotient().expect("derived subgroup is normal");
    let shape = AbelianShape::decompose(&quot).expect("abelianization");
    for (j, &oj) in shape.orders.iter().enumerate() {
        let a = |g: usize| shape.coords[proj.apply(g)][j] as i64;
        let mut v = vec![0i64; d];
        for (i, &g) in gens.iter().enumerate() {
            for x in 0..n {
                let carry = (a(g) + a(x) - a(group.mul(g, x))) / oj as i64;
                debug_assert!(carry == 0 || carry == 1);
                v[i * n + x] = carry;
            }
        }
        out.push(v);
    }
    out
}

fn reduce_i64(v: &[i64], m: u64) -> Vec<u64> {
    v.iter().map(|&x| x.rem_euclid(m as i64) as u64).collect()
}

/// H^2 of a finite group with divisible coefficients, as an abelian group
/// with explicit representative cocycles and class recognition.
pub struct CohomologyGroup {
    pub group: Arc<GroupTable>,
    /// common modulus of the representatives (the group order)
    pub modulus: u64,
    /// cyclic orders of the basis classes, largest first, each a multiple of
    /// the next; empty when H^2 is trivial
    pub orders: Vec<u64>,
    pub reps: Vec<Cocycle2>,
    gens: Vec<usize>,
    bnd: Vec<Vec<i64>>,
    solvers: Mutex<HashMap<(u64, u32), Arc<SpanSolver>>>,
}

impl std::fmt::Debug for CohomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CohomologyGroup(on {}, orders {:?})",
            self.group.provenance, self.orders
        )
    }
}

impl CohomologyGroup {
    pub(crate) fn assemble(
        group: &Arc<GroupTable>,
        orders: Vec<u64>,
        reps: Vec<Cocycle2>,
    ) -> Result<CohomologyGroup> {
        let modulus = group.order as u64;
        let gens = min_generating_set(group);
        let bnd = boundary_and_carry_uvecs(group, &gens);
        let reps = reps
            .into_iter()
            .map(|r| r.lift(modulus))
            .collect::<Result<Vec<_>>>()?;
        for r in &reps {
            r.check()?;
        }
        Ok(CohomologyGroup {
            group: group.clone(),
            modulus,
            orders,
            reps,
            gens,
            bnd,
            solvers: Mutex::new(HashMap::new()),
        })
    }

    pub fn size(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Exponent tuples of every class, identity first.
    pub fn all_classes(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![0u64; self.orders.len()]];
        for (i, &o) in self.orders.iter().enumerate() {
            let prev = out.clone();
            out.clear();
            for k in 0..o {
                for base in &prev {
                    let mut t = base.clone();
                    t[i] = k;
                    out.push(t);
                }
            }
        }
        out.sort();
        out
    }

    pub fn cocycle_for(&self, exps: &[u64]) -> Cocycle2 {
        let n = self.group.order;
        let m = self.modulus;
        let mut vals = vec![0u64; n * n];
        for (r, &k) in self.reps.iter().zip(exps) {
            for (v, &x) in vals.iter_mut().zip(&r.vals) {
                *v = (*v + x % m * (k % m)) % m;
            }
        }
        Cocycle2 {
            group: self.group.clone(),
            modulus: m,
            vals,
        }
    }

    fn u_of(&self, c: &Cocycle2) -> Vec<u64> {
        let n = self.group.order;
        let mut u = Vec::with_capacity(self.gens.len() * n);
        for &g in &self.gens {
            for x in 0..n {
                u.push(c.get(g, x) % c.modulus);
            }
        }
        u
    }

    fn solver(&self, pp: PrimePower) -> Arc<SpanSolver> {
        let mut cache = self.solvers.lock().expect("solver cache");
        cache
            .entry((pp.p, pp.e))
            .or_insert_with(|| {
                let d = self.gens.len() * self.group.order;
                let rows: Vec<Vec<u64>> =
                    self.bnd.iter().map(|v| reduce_i64(v, pp.m)).collect();
                Arc::new(SpanSolver::new(&rows, d, pp))
            })
            .clone()
    }

    /// The exponent tuple of the class of c, which must be a cocycle on the
    /// same group table (any modulus).
    pub fn class_of(&self, c: &Cocycle2) -> Result<Vec<u64>> {
        if c.group.order != self.group.order {
            return Err(Error::MismatchedParents);
        }
        let l = lcm64(self.modulus, c.modulus);
        let cu = self.u_of(&c.lift(l)?);
        let reps_u: Vec<Vec<u64>> = self
            .reps
            .iter()
            .map(|r| Ok(self.u_of(&r.lift(l)?)))
            .collect::<Result<Vec<_>>>()?;
        let primes = factor(l);
        let solvers: Vec<(PrimePower, Arc<SpanSolver>)> = primes
            .iter()
            .map(|&pp| (pp, self.solver(pp)))
            .collect();
        for tuple in self.all_classes() {
            let mut d = cu.clone();
            for (ru, &k) in reps_u.iter().zip(&tuple) {
                for (x, &y) in d.iter_mut().zip(ru) {
                    *x = (*x + (l - y % l) % l * k) % l;
                }
            }
            let ok = solvers.iter().all(|(pp, s)| {
                let dv: Vec<u64> = d.iter().map(|&x| x % pp.m).collect();
                s.contains(&dv)
            });
            if ok {
                return Ok(tuple);
            }
        }
        Err(Error::Invalid(
            "cocycle does not represent any cohomology class of this group".into(),
        ))
    }

    pub fn is_trivial_class(&self, c: &Cocycle2) -> Result<bool> {
        Ok(self.class_of(c)?.iter().all(|&k| k == 0))
    }
}

/// Direct computation of H^2 for groups of order <= EXHAUSTIVE_CAP.
pub fn exhaustive_h2(group: &Arc<GroupTable>) -> Result<CohomologyGroup> {
    let n = group.order;
    let m = n as u64;
    let expr = Expr::new(group);
    let d = expr.dim();
    let r = expr.gens.len();
    let bnd = boundary_and_carry_uvecs(group, &expr.gens);

    // per prime power: (descending class order, unknown vector mod p^e)
    let mut per_prime: Vec<(PrimePower, Vec<(u64, Vec<u64>)>)> = Vec::new();
    for pp in factor(m) {
        let mut ech = Echelon::new(d, pp);
        // cocycle identity rows with the first slot ranging over generators
        for i in 0..r {
            let a = expr.gens[i];
            for h in 0..n {
                let ah = group.mul(a, h);
                for l in 0..n {
                    let mut row = vec![0u64; d];
                    row[i * n + h] = (row[i * n + h] + 1) % pp.m; // f(a, h)
                    expr.add_f(&mut row, ah, l, true, pp.m);
                    expr.add_f(&mut row, h, l, false, pp.m);
                    let hl = group.mul(h, l);
                    row[i * n + hl] = (row[i * n + hl] + pp.m - 1) % pp.m; // -f(a, hl)
                    ech.add_row(row);
                }
            }
        }
        // pin u(i, e) = 0 so the parametrization is faithful
        for i in 0..r {
            let mut row = vec![0u64; d];
            row[i * n] = 1;
            ech.add_row(row);
        }
        let cons = ech.into_rows();
        let y = right_kernel(&cons, d, pp);
        let s = y.len();
        // relations on the coefficient space: syzygies of y, plus the
        // coefficients of each dying generator
        let mut rel: Vec<Vec<u64>> = {
            let yt: Vec<Vec<u64>> = (0..d)
                .map(|col| y.iter().map(|row| row[col]).collect())
                .collect();
            right_kernel(&yt, s, pp)
        };
        let solver = SpanSolver::new(&y, d, pp);
        for b in &bnd {
            let bv = reduce_i64(b, pp.m);
            let coeffs = solver
                .coefficients(&bv)
                .ok_or_else(|| Error::Invalid("boundary escaped the cocycle space".into()))?;
            rel.push(coeffs);
        }
        let sm = smith_local(&rel, s, pp);
        let mut cls: Vec<(u64, Vec<u64>)> = Vec::new();
        for t in 0..s {
            // relations cut Z/p^e down to Z/d_t (no relation row = full Z/p^e)
            let dt = sm.diag.get(t).copied().unwrap_or(0);
            let order = if dt == 0 { pp.m } else { dt };
            if order <= 1 {
                continue;
            }
            let mut uvec = vec![0u64; d];
            for (j, yrow) in y.iter().enumerate() {
                let c = sm.right_inv[t][j] % pp.m;
                if c != 0 {
                    for (x, &v) in uvec.iter_mut().zip(yrow) {
                        *x = (*x + c * v) % pp.m;
                    }
                }
            }
            cls.push((order, uvec));
        }
        cls.sort_by(|a, b| b.0.cmp(&a.0));
        per_prime.push((pp, cls));
    }

    // CRT: combine the j-th largest classes across primes
    let width = per_prime.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let mut orders = Vec::new();
    let mut reps = Vec::new();
    for j in 0..width {
        let mut order = 1u64;
        let mut uvec = vec![0u64; d];
        for (pp, cls) in &per_prime {
            if let Some((o, u)) = cls.get(j) {
                order *= o;
                let scale = m / pp.m;
                for (x, &v) in uvec.iter_mut().zip(u) {
                    *x = (*x + v % pp.m * scale) % m;
                }
            }
        }
        let table = expr.table(&uvec, m);
        orders.push(order);
        reps.push(Cocycle2::new(group, m, table)?);
    }
    CohomologyGroup::assemble(group, orders, reps)
}

/// H^2 of any supported group: direct solve for small orders, closed forms
/// (abelian, dihedral, symmetric) above the cap.
pub fn h2(group: &Arc<GroupTable>) -> Result<CohomologyGroup> {
    if group.order <= EXHAUSTIVE_CAP {
        return exhaustive_h2(group);
    }
    if group.is_abelian() {
        return catalog::abelian_h2(group);
    }
    if let Some(h) = catalog::dihedral_h2(group)? {
        return Ok(h);
    }
    if let Some(h) = catalog::symmetric_h2(group)? {
        return Ok(h);
    }
    Err(Error::NoCohomology(group.order))
}
