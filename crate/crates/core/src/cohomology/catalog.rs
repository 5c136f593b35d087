use super::compute::{exhaustive_h2, CohomologyGroup};
use super::Cocycle2;
use crate::error::{Error, Result};
use crate::group::{isomorphism, AbelianShape, GroupTable, Subgroup};
use std::sync::Arc;

fn gcd64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// H^2 of an abelian group: one cyclic factor C_gcd(d_i, d_j) per basis pair
/// i < j, represented by the bilinear cocycle (x, y) -> zeta^(x_i y_j).
pub fn abelian_h2(group: &Arc<GroupTable>) -> Result<CohomologyGroup> {
    let shape = AbelianShape::decompose(group)?;
    let n = group.order;
    let k = shape.orders.len();
    let mut cls: Vec<(u64, Cocycle2)> = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let g = gcd64(shape.orders[i] as u64, shape.orders[j] as u64);
            if g <= 1 {
                continue;
            }
            let mut vals = vec![0u64; n * n];
            for x in 0..n {
                for y in 0..n {
                    vals[x * n + y] =
                        (shape.coords[x][i] as u64 % g) * (shape.coords[y][j] as u64 % g) % g;
                }
            }
            cls.push((
                g,
                Cocycle2 {
                    group: group.clone(),
                    modulus: g,
                    vals,
                },
            ));
        }
    }
    cls.sort_by(|a, b| b.0.cmp(&a.0));
    let (orders, reps) = cls.into_iter().unzip();
    CohomologyGroup::assemble(group, orders, reps)
}

/// H^2 of a dihedral group of order 2n: trivial for n odd, C2 for n even with
/// representative f(r^i s^j, r^k s^l) = zeta_n^(k j) transported from the
/// standard presentation. Returns None when the group is not dihedral.
pub fn dihedral_h2(group: &Arc<GroupTable>) -> Result<Option<CohomologyGroup>> {
    if group.order % 2 != 0 || group.order < 6 {
        return Ok(None);
    }
    let n = group.order / 2;
    let std = GroupTable::dihedral(n)?.shared();
    let Some(iso) = isomorphism(&std, group) else {
        return Ok(None);
    };
    if n % 2 == 1 {
        return CohomologyGroup::assemble(group, vec![], vec![]).map(Some);
    }
    let order = 2 * n;
    let mut vals = vec![0u64; order * order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    vals[(i * 2 + j) * order + (k * 2 + l)] = (k * j % n) as u64;
                }
            }
        }
    }
    let rep = Cocycle2::new(&std, n as u64, vals)?.transport(&iso)?;
    CohomologyGroup::assemble(group, vec![2], vec![rep]).map(Some)
}

/// A Sylow p-subgroup, grown through normalizers.
pub fn sylow_subgroup(group: &Arc<GroupTable>, p: usize) -> Result<Subgroup> {
    let mut pk = 1usize;
    let mut rest = group.order;
    while rest % p == 0 {
        rest /= p;
        pk *= p;
    }
    if pk == 1 {
        return Ok(Subgroup::trivial(group));
    }
    let seed = (0..group.order)
        .filter(|&x| {
            let o = group.order_of(x);
            o > 1 && pk % o == 0
        })
        .max_by_key(|&x| group.order_of(x))
        .expect("Cauchy");
    let mut s = Subgroup::generated(group, &[seed]);
    while s.order() < pk {
        let norm = s.normalizer_in_parent();
        let mut grew = false;
        for &z in &norm.members {
            if s.contains(z) {
                continue;
            }
            let mut q = group.order_of(z);
            while q % p == 0 {
                q /= p;
            }
            let y = group.pow(z, q as i64);
            if y == 0 || s.contains(y) {
                continue;
            }
            let mut gens = s.members.clone();
            gens.push(y);
            let t = Subgroup::generated(group, &gens);
            if t.order() > s.order() && pk % t.order() == 0 {
                s = t;
                grew = true;
                break;
            }
        }
        if !grew {
            return Err(Error::Invalid("Sylow subgroup search stalled".into()));
        }
    }
    Ok(s)
}

/// Corestriction of a cocycle on a subgroup back up to the whole group,
/// summed over a left transversal: g t_i = t_{g(i)} s_i(g) with s_i(g) in the
/// subgroup, and (tr f)(g, h) = sum_i f(s_{h(i)}(g), s_i(h)).
pub fn transfer(
    group: &Arc<GroupTable>,
    sub: &Subgroup,
    embed: &[usize],
    f: &Cocycle2,
) -> Result<Cocycle2> {
    let n = group.order;
    let mut local_of = vec![usize::MAX; n];
    for (loc, &g) in embed.iter().enumerate() {
        local_of[g] = loc;
    }
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(g);
        for &m in &sub.members {
            coset_of[group.mul(g, m)] = idx;
        }
    }
    let nc = reps.len();
    // perm[g][i] = coset of g t_i, fac[g][i] = local index of t_{g(i)}^-1 g t_i
    let mut perm = vec![0usize; n * nc];
    let mut fac = vec![0usize; n * nc];
    for g in 0..n {
        for (i, &t) in reps.iter().enumerate() {
            let gt = group.mul(g, t);
            let ci = coset_of[gt];
            perm[g * nc + i] = ci;
            let s = group.mul(group.inv(reps[ci]), gt);
            debug_assert_ne!(local_of[s], usize::MAX);
            fac[g * nc + i] = local_of[s];
        }
    }
    let m = f.modulus;
    let mut vals = vec![0u64; n * n];
    for a in 0..n {
        for b in 0..n {
            let mut acc = 0u64;
            for i in 0..nc {
                let bi = perm[b * nc + i];
                acc = (acc + f.get(fac[a * nc + bi], fac[b * nc + i])) % m;
            }
            vals[a * n + b] = acc;
        }
    }
    Cocycle2::new(group, m, vals)
}

/// H^2 of a symmetric group S_n, n >= 4: C2, represented by the transfer of
/// the nontrivial class on a Sylow 2-subgroup. Returns None when the group is
/// not symmetric.
pub fn symmetric_h2(group: &Arc<GroupTable>) -> Result<Option<CohomologyGroup>> {
    let mut nfac = 1usize;
    let mut n = 1usize;
    while nfac < group.order {
        n += 1;
        nfac *= n;
    }
    if nfac != group.order || n < 4 {
        return Ok(None);
    }
    let std = GroupTable::symmetric(n)?.shared();
    let Some(iso) = isomorphism(&std, group) else {
        return Ok(None);
    };
    let syl = sylow_subgroup(&std, 2)?;
    let (pt, embed) = syl.to_group();
    let pt = pt.shared();
    let h2p = exhaustive_h2(&pt)?;
    let gen = h2p
        .reps
        .iter()
        .zip(&h2p.orders)
        .find(|(_, &o)| o % 2 == 0)
        .map(|(r, &o)| r.pow((o / 2) as i64))
        .ok_or_else(|| Error::Invalid("Sylow 2-subgroup has odd multiplier".into()))?;
    let _ = &pt;
    let tr = transfer(&std, &syl, &embed, &gen)?;
    let rep = tr.transport(&iso)?;
    let h = CohomologyGroup::assemble(group, vec![2], vec![rep])?;
    if h.is_trivial_class(&h.reps[0])? {
        return Err(Error::Invalid("transferred class is trivial".into()));
    }
    Ok(Some(h))
}
