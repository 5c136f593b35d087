use super::subgroup::Subgroup;
use super::table::GroupTable;
use crate::error::{Error, Result};
use std::sync::Arc;

/// Basis decomposition of a finite abelian group: orders[0] is the exponent
/// and each later order divides the previous one.
#[derive(Clone, Debug)]
pub struct AbelianShape {
    pub group: Arc<GroupTable>,
    pub basis: Vec<usize>,
    pub orders: Vec<usize>,
    /// element index -> exponent vector against `basis`
    pub coords: Vec<Vec<usize>>,
}

impl AbelianShape {
    pub fn decompose(group: &Arc<GroupTable>) -> Result<AbelianShape> {
        if !group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let (basis, orders) = basis_of(group);
        let n = group.order;
        let k = basis.len();
        let mut coords = vec![Vec::new(); n];
        let mut exps = vec![0usize; k];
        let mut elem = 0usize;
        // walk the full mixed-radix exponent range; `elem` tracks the product
        loop {
            coords[elem] = exps.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    if elem != 0 || exps.iter().any(|&e| e != 0) {
                        // only possible if basis/orders were wrong
                        return Err(Error::Invalid("abelian basis mismatch".into()));
                    }
                    debug_assert!(coords.iter().all(|c| c.len() == k || n == 1));
                    return Ok(AbelianShape {
                        group: group.clone(),
                        basis,
                        orders,
                        coords,
                    });
                }
                i -= 1;
                exps[i] += 1;
                elem = group.mul(elem, basis[i]);
                if exps[i] < orders[i] {
                    break;
                }
                // roll over: b^orders[i] = 1, so elem is already reduced
                exps[i] = 0;
            }
        }
    }

    pub fn exponent(&self) -> usize {
        self.orders.first().copied().unwrap_or(1)
    }

    /// Invariant factors in ascending divisibility order (d1 | d2 | ...).
    pub fn invariant_factors(&self) -> Vec<usize> {
        let mut v = self.orders.clone();
        v.reverse();
        v
    }

    pub fn num_chars(&self) -> usize {
        self.group.order
    }

    /// Character with index i, as exponents (c_1..c_k), c_j in Z_{orders[j]}.
    pub fn char_vector(&self, i: usize) -> Vec<usize> {
        let mut i = i;
        let mut v = vec![0usize; self.orders.len()];
        for j in (0..self.orders.len()).rev() {
            v[j] = i % self.orders[j];
            i /= self.orders[j];
        }
        v
    }

    pub fn char_index(&self, v: &[usize]) -> usize {
        let mut i = 0usize;
        for (j, &o) in self.orders.iter().enumerate() {
            i = i * o + v[j] % o;
        }
        i
    }

    /// chi_i(x) = zeta_N ^ (returned value), N = exponent().
    pub fn char_eval(&self, chi: usize, x: usize) -> usize {
        let n = self.exponent();
        let v = self.char_vector(chi);
        let mut e = 0usize;
        for (j, &c) in v.iter().enumerate() {
            e = (e + c * self.coords[x][j] * (n / self.orders[j])) % n;
        }
        e
    }

    /// The dual group: indices are character indices, product is pointwise.
    pub fn character_group(&self) -> GroupTable {
        let n = self.group.order;
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            let va = self.char_vector(a);
            for b in 0..n {
                let vb = self.char_vector(b);
                let vc: Vec<usize> = va
                    .iter()
                    .zip(&vb)
                    .zip(&self.orders)
                    .map(|((&x, &y), &o)| (x + y) % o)
                    .collect();
                mul[a * n + b] = self.char_index(&vc) as u16;
            }
        }
        let labels = (0..n).map(|i| format!("chi{:?}", self.char_vector(i))).collect();
        GroupTable::from_table(mul, labels, format!("dual of {}", self.group.provenance))
            .expect("character table")
    }

    /// Pull an automorphism of the underlying group back to characters:
    /// (theta . chi)(x) = chi(theta^{-1} x).
    pub fn char_pullback(&self, theta_inv: &[usize], chi: usize) -> usize {
        // determine the new character by its values on the basis
        let n = self.exponent();
        let mut v = vec![0usize; self.orders.len()];
        for (j, &b) in self.basis.iter().enumerate() {
            let e = self.char_eval(chi, theta_inv[b]);
            // e is a multiple of n / orders[j] for a well-defined character
            let step = n / self.orders[j];
            debug_assert_eq!(e % step, 0);
            v[j] = (e / step) % self.orders[j];
        }
        self.char_index(&v)
    }
}

/// Greedy basis: peel off a maximal-order element, recurse on the quotient,
/// and correct the lifted generators so their orders match downstairs.
fn basis_of(group: &Arc<GroupTable>) -> (Vec<usize>, Vec<usize>) {
    if group.order == 1 {
        return (Vec::new(), Vec::new());
    }
    let g = (0..group.order)
        .max_by_key(|&x| group.order_of(x))
        .expect("nonempty");
    let d = group.order_of(g);
    if d == group.order {
        return (vec![g], vec![d]);
    }
    let cyc = Subgroup::generated(group, &[g]);
    let (q, proj) = cyc.quotient().expect("abelian subgroups are normal");
    let (qbasis, qorders) = basis_of(&q);
    // powers of g for solving y^{d_i} = g^t
    let mut pow_of = vec![usize::MAX; group.order];
    let mut acc = 0usize;
    for t in 0..d {
        pow_of[acc] = t;
        acc = group.mul(acc, g);
    }
    let mut basis = vec![g];
    let mut orders = vec![d];
    for (i, &qb) in qbasis.iter().enumerate() {
        let di = qorders[i];
        // any preimage of the quotient basis element
        let y = (0..group.order)
            .find(|&x| proj.apply(x) == qb)
            .expect("projection is onto");
        let t = pow_of[group.pow(y, di as i64)];
        debug_assert_ne!(t, usize::MAX);
        debug_assert_eq!(t % di, 0);
        // y' = y * g^{-(t/di)} now has order exactly di
        let fix = group.pow(group.inv(g), (t / di) as i64);
        let y2 = group.mul(y, fix);
        debug_assert_eq!(group.order_of(y2), di);
        basis.push(y2);
        orders.push(di);
    }
    (basis, orders)
}

/// Shorthand used throughout: chi(x) as an exponent of zeta_N for the
/// decomposed abelian group.
pub fn char_eval(shape: &AbelianShape, chi: usize, x: usize) -> usize {
    shape.char_eval(chi, x)
}

pub fn character_group(shape: &AbelianShape) -> GroupTable {
    shape.character_group()
}
