//! Matched pairs of finite groups, bicrossed products k^Gamma tau# sigma kF,
//! and their group-like elements.

use super::algebra::{HopfAlgebra, Sparse};
use crate::cyclotomic::CycScalar;
use crate::group::{GroupTable, Subgroup};
use crate::linalg::{factor, right_kernel, SpanSolver};
use crate::{Error, Result};
use std::sync::Arc;

/// A matched pair (F, Gamma) with actions Gamma x F -> F (written |>) and
/// Gamma x F -> Gamma (written <|), plus root-of-unity cocycles sigma, tau
/// stored as exponent tables modulo `cond`.
#[derive(Clone)]
pub struct MatchedPair {
    pub f: Arc<GroupTable>,
    pub gamma: Arc<GroupTable>,
    /// act_f[g][x] = g |> x, an element of F.
    pub act_f: Vec<Vec<usize>>,
    /// act_g[g][x] = g <| x, an element of Gamma.
    pub act_g: Vec<Vec<usize>>,
    pub cond: u64,
    /// sigma[g][x][x'] exponent: sigma_g(x, x') = zeta_cond^e.
    pub sigma: Vec<Vec<Vec<i64>>>,
    /// tau[g'][g''][x] exponent: tau_{g', g''}(x) = zeta_cond^e.
    pub tau: Vec<Vec<Vec<i64>>>,
}

impl MatchedPair {
    /// Derive the unique matched pair from an exact factorization G = F.Gamma:
    /// for g in Gamma, x in F the product g x decomposes as (g|>x)(g<|x).
    pub fn from_factorization(f_sub: &Subgroup, gamma_sub: &Subgroup) -> Result<MatchedPair> {
        let parent = f_sub.parent.clone();
        let inter = f_sub.intersect(gamma_sub);
        if inter.order() != 1 || f_sub.order() * gamma_sub.order() != parent.order {
            return Err(Error::NotExactFactorization);
        }
        let (f_table, f_embed) = f_sub.to_group();
        let (g_table, g_embed) = gamma_sub.to_group();
        // decompose every parent element as x.g uniquely
        let mut decomp = vec![None; parent.order];
        for (xi, &x) in f_embed.iter().enumerate() {
            for (gi, &g) in g_embed.iter().enumerate() {
                let p = parent.mul(x, g);
                if decomp[p].is_some() {
                    return Err(Error::NotExactFactorization);
                }
                decomp[p] = Some((xi, gi));
            }
        }
        let nf = f_table.order;
        let ng = g_table.order;
        let mut act_f = vec![vec![0; nf]; ng];
        let mut act_g = vec![vec![0; nf]; ng];
        for gi in 0..ng {
            for xi in 0..nf {
                let p = parent.mul(g_embed[gi], f_embed[xi]);
                let (a, b) = decomp[p].unwrap();
                act_f[gi][xi] = a;
                act_g[gi][xi] = b;
            }
        }
        Ok(MatchedPair {
            f: f_table.shared(),
            gamma: g_table.shared(),
            act_f,
            act_g,
            cond: 1,
            sigma: vec![vec![vec![0; nf]; nf]; ng],
            tau: vec![vec![vec![0; nf]; ng]; ng],
        })
    }

    /// Matched pair with one factor trivial: the group algebra kF.
    pub fn group_algebra(f: &Arc<GroupTable>) -> MatchedPair {
        let nf = f.order;
        MatchedPair {
            f: f.clone(),
            gamma: GroupTable::cyclic(1).unwrap().shared(),
            act_f: vec![(0..nf).collect()],
            act_g: vec![vec![0; nf]],
            cond: 1,
            sigma: vec![vec![vec![0; nf]; nf]],
            tau: vec![vec![vec![0; nf]]],
        }
    }

    /// Matched pair with the other factor trivial: the function algebra k^G.
    pub fn function_algebra(g: &Arc<GroupTable>) -> MatchedPair {
        let ng = g.order;
        MatchedPair {
            f: GroupTable::cyclic(1).unwrap().shared(),
            gamma: g.clone(),
            act_f: vec![vec![0]; ng],
            act_g: (0..ng).map(|x| vec![x]).collect(),
            cond: 1,
            sigma: vec![vec![vec![0]]; ng],
            tau: vec![vec![vec![0]; ng]; ng],
        }
    }

    /// The transposed matched pair, whose bicrossed product is the dual Hopf
    /// algebra: roles of F and Gamma swap, actions are inverted-transposed,
    /// and sigma/tau trade places.
    pub fn transpose(&self) -> MatchedPair {
        let nf = self.f.order;
        let ng = self.gamma.order;
        let mut act_f = vec![vec![0; ng]; nf];
        let mut act_g = vec![vec![0; ng]; nf];
        for a in 0..nf {
            for b in 0..ng {
                let ai = self.f.inv(a);
                let bi = self.gamma.inv(b);
                act_f[a][b] = self.gamma.inv(self.act_g[bi][ai]);
                act_g[a][b] = self.f.inv(self.act_f[bi][ai]);
            }
        }
        let mut sigma = vec![vec![vec![0; ng]; ng]; nf];
        for a in 0..nf {
            for b1 in 0..ng {
                for b2 in 0..ng {
                    sigma[a][b1][b2] = self.tau[b1][b2][a];
                }
            }
        }
        let mut tau = vec![vec![vec![0; ng]; nf]; nf];
        for b in 0..ng {
            for a1 in 0..nf {
                for a2 in 0..nf {
                    tau[a1][a2][b] = self.sigma[b][a1][a2];
                }
            }
        }
        MatchedPair {
            f: self.gamma.clone(),
            gamma: self.f.clone(),
            act_f,
            act_g,
            cond: self.cond,
            sigma,
            tau,
        }
    }

    fn scalar(&self, e: i64) -> CycScalar {
        CycScalar::root_of_unity(self.cond, e)
    }

    /// Basis index of delta_g # x.
    pub fn index(&self, g: usize, x: usize) -> usize {
        g * self.f.order + x
    }

    /// The bicrossed product k^Gamma tau# sigma kF with its antipode solved
    /// and all Hopf axioms verified exactly.
    pub fn bicrossed(&self) -> Result<HopfAlgebra> {
        let nf = self.f.order;
        let ng = self.gamma.order;
        let dim = nf * ng;
        let mut mult = vec![vec![Sparse::new(); dim]; dim];
        for g in 0..ng {
            for x in 0..nf {
                let i = self.index(g, x);
                for g2 in 0..ng {
                    for x2 in 0..nf {
                        let j = self.index(g2, x2);
                        if self.act_g[g][x] != g2 {
                            continue;
                        }
                        let c = self.scalar(self.sigma[g][x][x2]);
                        mult[i][j] = vec![(self.index(g, self.f.mul(x, x2)), c)];
                    }
                }
            }
        }
        let unit: Sparse = (0..ng)
            .map(|g| (self.index(g, 0), CycScalar::one()))
            .collect();
        let mut comult = vec![Vec::new(); dim];
        for g in 0..ng {
            for x in 0..nf {
                let k = self.index(g, x);
                let mut terms = Vec::new();
                for g1 in 0..ng {
                    // g = g1 * g2
                    let g2 = self.gamma.mul(self.gamma.inv(g1), g);
                    let c = self.scalar(self.tau[g1][g2][x]);
                    terms.push((
                        (self.index(g1, self.act_f[g2][x]), self.index(g2, x)),
                        c,
                    ));
                }
                terms.sort_by_key(|(p, _)| *p);
                comult[k] = terms;
            }
        }
        let mut counit = vec![CycScalar::zero(); dim];
        for x in 0..nf {
            counit[self.index(0, x)] = CycScalar::one();
        }
        let mut labels = Vec::with_capacity(dim);
        for g in 0..ng {
            for x in 0..nf {
                labels.push(format!(
                    "d({})#{}",
                    self.gamma.labels[g], self.f.labels[x]
                ));
            }
        }
        let mut h = HopfAlgebra {
            dim,
            basis: labels,
            mult,
            unit,
            comult,
            counit,
            antipode: vec![Sparse::new(); dim],
            conductor: self.cond,
        };
        h.compute_antipode()?;
        h.verify()?;
        Ok(h)
    }

    /// Group-like elements of the bicrossed product, solved in closed form:
    /// they are sums sum_g chi(g) delta_g # x over a Gamma-fixed x in F with
    /// chi a tau(x)-twisted character of Gamma. Returns the group table and
    /// the group-like vectors (identity of the table = unit of H, index 0).
    pub fn grouplikes(&self) -> Result<(GroupTable, Vec<Sparse>)> {
        let nf = self.f.order;
        let ng = self.gamma.order;
        let exp_g = self.gamma.exponent() as u64;
        let n_big = exp_g * self.cond;
        let lift = (n_big / self.cond) as i64;
        let mut vectors: Vec<Sparse> = Vec::new();
        for x in 0..nf {
            if (0..ng).any(|g| self.act_f[g][x] != x) {
                continue;
            }
            // solve e(g1 g2) - e(g1) - e(g2) = -lift * tau[g1][g2][x] mod n_big
            let neq = ng * ng + 1;
            let mut cols: Vec<Vec<i64>> = vec![vec![0i64; neq]; ng];
            let mut rhs: Vec<i64> = vec![0; neq];
            for g1 in 0..ng {
                for g2 in 0..ng {
                    let row = g1 * ng + g2;
                    cols[self.gamma.mul(g1, g2)][row] += 1;
                    cols[g1][row] -= 1;
                    cols[g2][row] -= 1;
                    rhs[row] = -lift * self.tau[g1][g2][x];
                }
            }
            cols[0][neq - 1] = 1; // pin e(identity) = 0
            let mut per_prime: Vec<(u64, Vec<Vec<u64>>)> = Vec::new();
            let mut ok = true;
            for pp in factor(n_big) {
                let m = pp.m;
                let to_mod =
                    |v: &[i64]| -> Vec<u64> { v.iter().map(|&a| a.rem_euclid(m as i64) as u64).collect() };
                let rows: Vec<Vec<u64>> = cols.iter().map(|c| to_mod(c)).collect();
                let solver = SpanSolver::new(&rows, neq, pp.clone());
                let part = match solver.coefficients(&to_mod(&rhs)) {
                    Some(p) => p,
                    None => {
                        ok = false;
                        break;
                    }
                };
                // kernel of the column map = homomorphisms Gamma -> Z/m
                let a_rows: Vec<Vec<u64>> = (0..neq)
                    .map(|r| (0..ng).map(|c| rows[c][r]).collect())
                    .collect();
                let kern = right_kernel(&a_rows, ng, pp.clone());
                // enumerate the kernel span
                let mut sols: Vec<Vec<u64>> = vec![part];
                for kv in &kern {
                    let mut next = Vec::new();
                    for s in &sols {
                        for t in 0..m {
                            let mut v = s.clone();
                            for (vi, ki) in v.iter_mut().zip(kv.iter()) {
                                *vi = (*vi + t * ki) % m;
                            }
                            next.push(v);
                        }
                    }
                    next.sort();
                    next.dedup();
                    sols = next;
                }
                per_prime.push((m, sols));
            }
            if !ok {
                continue;
            }
            // CRT-combine one choice per prime power
            let mut combined: Vec<Vec<u64>> = vec![vec![0; ng]];
            let mut mod_so_far: u64 = 1;
            for (m, sols) in per_prime {
                let mut next = Vec::new();
                for base in &combined {
                    for s in &sols {
                        let mut v = vec![0u64; ng];
                        for i in 0..ng {
                            v[i] = crt(base[i], mod_so_far, s[i], m);
                        }
                        next.push(v);
                    }
                }
                combined = next;
                mod_so_far *= m;
            }
            debug_assert_eq!(mod_so_far, n_big);
            for e in combined {
                let mut v: Sparse = (0..ng)
                    .map(|g| {
                        (
                            self.index(g, x),
                            CycScalar::root_of_unity(n_big, e[g] as i64),
                        )
                    })
                    .collect();
                v.sort_by_key(|(i, _)| *i);
                vectors.push(v);
            }
        }
        // order vectors so the unit comes first
        let h = self.bicrossed_mult_only();
        let unit: Sparse = {
            let mut u = h.unit.clone();
            u.sort_by_key(|(i, _)| *i);
            u
        };
        if let Some(pos) = vectors.iter().position(|v| *v == unit) {
            vectors.swap(0, pos);
        } else {
            return Err(Error::HopfAxiom("unit is not among the group-likes".into()));
        }
        let n = vectors.len();
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = h.mul(&vectors[i], &vectors[j]);
                let pos = vectors
                    .iter()
                    .position(|v| *v == p)
                    .ok_or_else(|| Error::HopfAxiom("group-likes not closed".into()))?;
                mul[i * n + j] = pos as u16;
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let table = GroupTable::from_table(mul, labels, "G(H)".into())?;
        Ok((table, vectors))
    }

    /// Multiplication-only skeleton (no antipode solve, no verification) —
    /// enough to multiply group-like vectors.
    pub fn bicrossed_mult_only(&self) -> HopfAlgebra {
        let nf = self.f.order;
        let ng = self.gamma.order;
        let dim = nf * ng;
        let mut mult = vec![vec![Sparse::new(); dim]; dim];
        for g in 0..ng {
            for x in 0..nf {
                let i = self.index(g, x);
                let g2 = self.act_g[g][x];
                for x2 in 0..nf {
                    let j = self.index(g2, x2);
                    let c = self.scalar(self.sigma[g][x][x2]);
                    mult[i][j] = vec![(self.index(g, self.f.mul(x, x2)), c)];
                }
            }
        }
        let unit: Sparse = (0..ng)
            .map(|g| (self.index(g, 0), CycScalar::one()))
            .collect();
        let mut counit = vec![CycScalar::zero(); dim];
        for x in 0..nf {
            counit[self.index(0, x)] = CycScalar::one();
        }
        HopfAlgebra {
            dim,
            basis: (0..dim).map(|i| format!("b{i}")).collect(),
            mult,
            unit,
            comult: vec![Vec::new(); dim],
            counit,
            antipode: vec![Sparse::new(); dim],
            conductor: self.cond,
        }
    }
}

fn crt(a: u64, m: u64, b: u64, n: u64) -> u64 {
    if m == 1 {
        return b % n;
    }
    // x = a mod m, x = b mod n with (m, n) = 1
    let (_, u, _) = crate::linalg::egcd(m as i128, n as i128);
    let mn = (m * n) as i128;
    let diff = (b as i128 - a as i128).rem_euclid(n as i128);
    let x = (a as i128 + (diff * u).rem_euclid(n as i128) * m as i128).rem_euclid(mn);
    x as u64
}

/// The Hopf algebra A18 built from the order-18 matched pair: F = C2 = <x>,
/// Gamma = C3 x C3 = <a, b>, with x inverting b, and tau twisted by a
/// primitive cube root of unity xi = zeta_3^xi_power.
pub fn a18(xi_power: i64) -> Result<(MatchedPair, HopfAlgebra)> {
    let parent = GroupTable::g18()?.shared();
    // element encoding in g18: (i*3 + j)*2 + k for a^i b^j x^k
    let x = 1usize;
    let a = 6usize;
    let b = 2usize;
    let f_sub = Subgroup::generated(&parent, &[x]);
    let g_sub = Subgroup::generated(&parent, &[a, b]);
    let mut mp = MatchedPair::from_factorization(&f_sub, &g_sub)?;
    // tau(a^i b^j, a^r b^s) = delta_1 + xi^{jr} delta_x
    mp.cond = 3;
    let members = &g_sub.members;
    let coords: Vec<(i64, i64)> = members
        .iter()
        .map(|&g| ((g / 6) as i64, ((g % 6) / 2) as i64))
        .collect();
    // F table index of x inside the subgroup table
    let x_idx = f_sub.members.iter().position(|&m| m == x).unwrap();
    for (t1, &(_, j)) in coords.iter().enumerate() {
        for (t2, &(r, _)) in coords.iter().enumerate() {
            mp.tau[t1][t2][x_idx] = (xi_power * j * r).rem_euclid(3);
        }
    }
    let h = mp.bicrossed()?;
    Ok((mp, h))
}
