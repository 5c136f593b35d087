use super::abelian::AbelianShape;
use super::maps::isomorphic;
use super::table::GroupTable;
use std::sync::Arc;

/// Dicyclic group of order 4m: <a, b | a^{2m} = 1, b^2 = a^m, b a b^-1 = a^-1>.
/// Element (i, j) = a^i b^j sits at index i*2 + j.
pub fn dicyclic(m: usize) -> GroupTable {
    assert!(m >= 1);
    let n = 4 * m;
    let two_m = 2 * m;
    let enc = |i: usize, j: usize| i * 2 + j;
    let mut mul = vec![0u16; n * n];
    for i in 0..two_m {
        for j in 0..2 {
            for k in 0..two_m {
                for l in 0..2 {
                    let (ri, rj) = if j == 0 {
                        ((i + k) % two_m, l)
                    } else if l == 0 {
                        ((i + two_m - k % two_m) % two_m, 1)
                    } else {
                        ((i + two_m - k % two_m + m) % two_m, 0)
                    };
                    mul[enc(i, j) * n + enc(k, l)] = enc(ri, rj) as u16;
                }
            }
        }
    }
    let labels = (0..two_m)
        .flat_map(|i| {
            (0..2).map(move |j| match (i, j) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("a^{i}"),
                (0, _) => "b".to_string(),
                (i, _) => format!("a^{i} b"),
            })
        })
        .collect();
    GroupTable::from_table(mul, labels, format!("Dic{m}")).expect("dicyclic table")
}

fn abelian_name(shape: &AbelianShape) -> String {
    if shape.orders.is_empty() {
        return "1".into();
    }
    shape
        .invariant_factors()
        .iter()
        .map(|d| format!("C{d}"))
        .collect::<Vec<_>>()
        .join(" x ")
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Nonabelian "atoms" of order d used for recognizing direct products.
fn atoms(d: usize) -> Vec<(String, GroupTable)> {
    let mut out = Vec::new();
    if d >= 6 && d % 2 == 0 {
        if let Ok(g) = GroupTable::dihedral(d / 2) {
            out.push((format!("D{}", d / 2), g));
        }
    }
    if d >= 8 && d % 4 == 0 {
        let m = d / 4;
        let name = if d == 8 { "Q8".to_string() } else { format!("Dic{m}") };
        out.push((name, dicyclic(m)));
    }
    match d {
        12 => out.push(("A4".to_string(), GroupTable::alternating(4).expect("A4"))),
        24 => out.push(("S4".to_string(), GroupTable::symmetric(4).expect("S4"))),
        60 => out.push(("A5".to_string(), GroupTable::alternating(5).expect("A5"))),
        120 => out.push(("S5".to_string(), GroupTable::symmetric(5).expect("S5"))),
        _ => {}
    }
    // split metacyclic families C_a : C_c
    for a in divisors(d) {
        if a < 3 || a == d {
            continue;
        }
        let c = d / a;
        if c < 2 {
            continue;
        }
        for b in 2..a {
            if super::table::gcd(b, a) != 1 {
                continue;
            }
            let mut p = 1usize;
            for _ in 0..c {
                p = p * b % a;
            }
            if p != 1 {
                continue;
            }
            let name = format!("C{a}:{b}:C{c}");
            if let Ok(g) = GroupTable::metacyclic(a, b, c, &name, "x") {
                if !g.is_abelian() {
                    out.push((name, g));
                }
            }
        }
    }
    out
}

/// Best-effort structural name for a small group.
pub fn identify(g: &Arc<GroupTable>) -> String {
    if g.is_abelian() {
        let shape = AbelianShape::decompose(g).expect("abelian");
        return abelian_name(&shape);
    }
    let n = g.order;
    for d in divisors(n).into_iter().rev() {
        let k = n / d;
        for (name, atom) in atoms(d) {
            let candidate = if k == 1 {
                atom
            } else {
                let ck = GroupTable::cyclic(k).expect("cyclic cofactor");
                match GroupTable::direct_product(&atom, &ck) {
                    Ok(p) => p,
                    Err(_) => continue,
                }
            };
            if isomorphic(g, &candidate.shared()) {
                return if k == 1 {
                    name
                } else {
                    format!("{name} x C{k}")
                };
            }
        }
    }
    format!("nonabelian of order {n}")
}
