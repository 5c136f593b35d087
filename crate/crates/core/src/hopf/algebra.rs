//! Finite-dimensional Hopf algebras as sparse structure constants over a
//! cyclotomic field, with exact axiom verification and antipode synthesis.

use crate::cyclotomic::CycScalar;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Sparse vector: sorted (index, coefficient) pairs, no zero coefficients.
pub type Sparse = Vec<(usize, CycScalar)>;

pub fn sparse_from_map(m: BTreeMap<usize, CycScalar>) -> Sparse {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn add_term(m: &mut BTreeMap<usize, CycScalar>, k: usize, c: CycScalar) {
    if c.is_zero() {
        return;
    }
    let entry = m.entry(k).or_insert_with(CycScalar::zero);
    *entry = entry.add(&c);
    if entry.is_zero() {
        m.remove(&k);
    }
}

#[derive(Clone)]
pub struct HopfAlgebra {
    pub dim: usize,
    pub basis: Vec<String>,
    /// mult[i][j] = e_i * e_j as a sparse vector.
    pub mult: Vec<Vec<Sparse>>,
    /// The unit element 1_H as a sparse vector.
    pub unit: Sparse,
    /// comult[k] = Delta(e_k) as sparse pairs ((i, j), c) meaning c * e_i (x) e_j.
    pub comult: Vec<Vec<((usize, usize), CycScalar)>>,
    /// counit[k] = eps(e_k).
    pub counit: Vec<CycScalar>,
    /// antipode[i] = S(e_i) as a sparse vector.
    pub antipode: Vec<Sparse>,
    pub conductor: u64,
}

impl HopfAlgebra {
    /// Product of two sparse elements.
    pub fn mul(&self, a: &Sparse, b: &Sparse) -> Sparse {
        let mut acc = BTreeMap::new();
        for (i, ca) in a {
            for (j, cb) in b {
                let cab = ca.mul(cb);
                for (k, c) in &self.mult[*i][*j] {
                    add_term(&mut acc, *k, cab.mul(c));
                }
            }
        }
        sparse_from_map(acc)
    }

    pub fn apply_antipode(&self, a: &Sparse) -> Sparse {
        let mut acc = BTreeMap::new();
        for (i, ca) in a {
            for (k, c) in &self.antipode[*i] {
                add_term(&mut acc, *k, ca.mul(c));
            }
        }
        sparse_from_map(acc)
    }

    pub fn comul(&self, a: &Sparse) -> BTreeMap<(usize, usize), CycScalar> {
        let mut acc: BTreeMap<(usize, usize), CycScalar> = BTreeMap::new();
        for (k, ck) in a {
            for ((i, j), c) in &self.comult[*k] {
                let e = acc.entry((*i, *j)).or_insert_with(CycScalar::zero);
                *e = e.add(&ck.mul(c));
                if e.is_zero() {
                    acc.remove(&(*i, *j));
                }
            }
        }
        acc
    }

    pub fn counit_of(&self, a: &Sparse) -> CycScalar {
        let mut s = CycScalar::zero();
        for (i, c) in a {
            s = s.add(&c.mul(&self.counit[*i]));
        }
        s
    }

    pub fn basis_elem(&self, i: usize) -> Sparse {
        vec![(i, CycScalar::one())]
    }

    fn fail(&self, what: &str, at: String) -> Error {
        Error::HopfAxiom(format!("{what} fails at {at}"))
    }

    /// Exact verification of every Hopf-algebra identity on the structure
    /// constants. The first failing identity is reported with a witness.
    pub fn verify(&self) -> Result<()> {
        let d = self.dim;
        // unit laws
        for k in 0..d {
            let ek = self.basis_elem(k);
            if self.mul(&self.unit, &ek) != ek || self.mul(&ek, &self.unit) != ek {
                return Err(self.fail("unit law", format!("basis {k}")));
            }
        }
        // associativity
        for i in 0..d {
            for j in 0..d {
                let ij = self.mult[i][j].clone();
                for k in 0..d {
                    let left = self.mul(&ij, &self.basis_elem(k));
                    let right = self.mul(&self.basis_elem(i), &self.mult[j][k]);
                    if left != right {
                        return Err(self.fail("associativity", format!("({i},{j},{k})")));
                    }
                }
            }
        }
        // counit laws: (eps (x) id)Delta = id = (id (x) eps)Delta
        for k in 0..d {
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            for ((i, j), c) in &self.comult[k] {
                add_term(&mut left, *j, c.mul(&self.counit[*i]));
                add_term(&mut right, *i, c.mul(&self.counit[*j]));
            }
            let ek = self.basis_elem(k);
            if sparse_from_map(left) != ek || sparse_from_map(right) != ek {
                return Err(self.fail("counit law", format!("basis {k}")));
            }
        }
        // coassociativity
        for k in 0..d {
            let mut left: BTreeMap<(usize, usize, usize), CycScalar> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), CycScalar> = BTreeMap::new();
            for ((i, j), c) in &self.comult[k] {
                for ((a, b), c2) in &self.comult[*i] {
                    let e = left.entry((*a, *b, *j)).or_insert_with(CycScalar::zero);
                    *e = e.add(&c.mul(c2));
                }
                for ((a, b), c2) in &self.comult[*j] {
                    let e = right.entry((*i, *a, *b)).or_insert_with(CycScalar::zero);
                    *e = e.add(&c.mul(c2));
                }
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            if left != right {
                return Err(self.fail("coassociativity", format!("basis {k}")));
            }
        }
        // bialgebra: Delta and eps are algebra maps; Delta(1) = 1 (x) 1
        let mut unit_sq: BTreeMap<(usize, usize), CycScalar> = BTreeMap::new();
        for (i, ci) in &self.unit {
            for (j, cj) in &self.unit {
                unit_sq.insert((*i, *j), ci.mul(cj));
            }
        }
        unit_sq.retain(|_, v| !v.is_zero());
        if self.comul(&self.unit) != unit_sq {
            return Err(self.fail("Delta(1) = 1 (x) 1", "unit".into()));
        }
        if !self.counit_of(&self.unit).is_one() {
            return Err(self.fail("eps(1) = 1", "unit".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let prod = &self.mult[i][j];
                let lhs = self.comul(prod);
                // Delta(e_i) Delta(e_j) componentwise
                let mut rhs: BTreeMap<(usize, usize), CycScalar> = BTreeMap::new();
                for ((a1, b1), c1) in &self.comult[i] {
                    for ((a2, b2), c2) in &self.comult[j] {
                        let c12 = c1.mul(c2);
                        for (x, cx) in &self.mult[*a1][*a2] {
                            for (y, cy) in &self.mult[*b1][*b2] {
                                let e = rhs.entry((*x, *y)).or_insert_with(CycScalar::zero);
                                *e = e.add(&c12.mul(cx).mul(cy));
                            }
                        }
                    }
                }
                rhs.retain(|_, v| !v.is_zero());
                if lhs != rhs {
                    return Err(self.fail("Delta multiplicative", format!("({i},{j})")));
                }
                let ei = self.counit_of(prod);
                if ei != self.counit[i].mul(&self.counit[j]) {
                    return Err(self.fail("eps multiplicative", format!("({i},{j})")));
                }
            }
        }
        // antipode: m(S (x) id)Delta = u eps = m(id (x) S)Delta
        for k in 0..d {
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            for ((i, j), c) in &self.comult[k] {
                let si = self.apply_antipode(&self.basis_elem(*i));
                for (t, ct) in self.mul(&si, &self.basis_elem(*j)) {
                    add_term(&mut left, t, c.mul(&ct));
                }
                let sj = self.apply_antipode(&self.basis_elem(*j));
                for (t, ct) in self.mul(&self.basis_elem(*i), &sj) {
                    add_term(&mut right, t, c.mul(&ct));
                }
            }
            let mut expect = BTreeMap::new();
            for (t, c) in &self.unit {
                add_term(&mut expect, *t, self.counit[k].mul(c));
            }
            if left != expect || right != expect {
                return Err(self.fail("antipode law", format!("basis {k}")));
            }
        }
        Ok(())
    }

    /// The dual Hopf algebra on the dual basis: multiplication is the
    /// transpose of comultiplication and vice versa.
    pub fn dual(&self) -> HopfAlgebra {
        let d = self.dim;
        let mut mult = vec![vec![Sparse::new(); d]; d];
        for k in 0..d {
            for ((i, j), c) in &self.comult[k] {
                mult[*i][*j].push((k, c.clone()));
            }
        }
        for row in mult.iter_mut() {
            for v in row.iter_mut() {
                v.sort_by_key(|(k, _)| *k);
            }
        }
        let mut comult = vec![Vec::new(); d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in &self.mult[i][j] {
                    comult[*k].push(((i, j), c.clone()));
                }
            }
        }
        for v in comult.iter_mut() {
            v.sort_by_key(|(p, _)| *p);
        }
        let unit: Sparse = self
            .counit
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        let mut counit = vec![CycScalar::zero(); d];
        for (k, c) in &self.unit {
            counit[*k] = c.clone();
        }
        let mut antipode = vec![Sparse::new(); d];
        for j in 0..d {
            for (i, c) in &self.antipode[j] {
                antipode[*i].push((j, c.clone()));
            }
        }
        for v in antipode.iter_mut() {
            v.sort_by_key(|(k, _)| *k);
        }
        HopfAlgebra {
            dim: d,
            basis: self.basis.iter().map(|b| format!("{b}*")).collect(),
            mult,
            unit,
            comult,
            counit,
            antipode,
            conductor: self.conductor,
        }
    }

    /// Solve for the antipode as the convolution inverse of the identity:
    /// build convolution powers of id, find the first linear dependency, and
    /// read the inverse off the minimal polynomial.
    pub fn compute_antipode(&mut self) -> Result<()> {
        let d = self.dim;
        // Convolution unit u.eps as columns.
        let conv_one: Vec<Sparse> = (0..d)
            .map(|k| {
                self.unit
                    .iter()
                    .map(|(t, c)| (*t, self.counit[k].mul(c)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        let id_map: Vec<Sparse> = (0..d).map(|k| self.basis_elem(k)).collect();
        // P * id on columns: (P * id)(e_k) = sum over Delta(e_k) of P(e_i) e_j.
        let conv_with_id = |p: &[Sparse]| -> Vec<Sparse> {
            (0..d)
                .map(|k| {
                    let mut acc = BTreeMap::new();
                    for ((i, j), c) in &self.comult[k] {
                        for (s, cs) in &p[*i] {
                            let csc = c.mul(cs);
                            for (t, ct) in &self.mult[*s][*j] {
                                add_term(&mut acc, *t, csc.mul(ct));
                            }
                        }
                    }
                    sparse_from_map(acc)
                })
                .collect()
        };
        let vectorize = |p: &[Sparse]| -> Vec<(usize, CycScalar)> {
            let mut v = Vec::new();
            for (k, col) in p.iter().enumerate() {
                for (t, c) in col {
                    v.push((k * d + t, c.clone()));
                }
            }
            v.sort_by_key(|(i, _)| *i);
            v
        };
        // Incremental elimination, tracking the expression of each reduced
        // vector in the original convolution powers.
        struct Row {
            pivot: usize,
            vec: Sparse,
            coeffs: Vec<CycScalar>,
        }
        let mut rows: Vec<Row> = Vec::new();
        let mut powers: Vec<Vec<Sparse>> = vec![conv_one];
        let minpoly: Vec<CycScalar> = loop {
            let t = powers.len() - 1;
            let mut vec = vectorize(&powers[t]);
            let mut coeffs = vec![CycScalar::zero(); t + 1];
            coeffs[t] = CycScalar::one();
            for row in &rows {
                if let Some(pos) = vec.iter().position(|(i, _)| *i == row.pivot) {
                    let factor = vec[pos].1.clone();
                    // vec -= factor * row.vec  (row is pivot-normalized)
                    let mut m: BTreeMap<usize, CycScalar> = vec.into_iter().collect();
                    for (i, c) in &row.vec {
                        add_term(&mut m, *i, factor.neg().mul(c));
                    }
                    vec = sparse_from_map(m);
                    for (i, c) in row.coeffs.iter().enumerate() {
                        coeffs[i] = coeffs[i].sub(&factor.mul(c));
                    }
                }
            }
            if vec.is_empty() {
                break coeffs;
            }
            let lead = vec[0].1.clone();
            let lead_inv = lead.inverse()?;
            let pivot = vec[0].0;
            let vec: Sparse = vec.into_iter().map(|(i, c)| (i, c.mul(&lead_inv))).collect();
            let coeffs = coeffs.iter().map(|c| c.mul(&lead_inv)).collect();
            rows.push(Row { pivot, vec, coeffs });
            if powers.len() == 1 {
                powers.push(id_map.clone());
            } else {
                let next = conv_with_id(powers.last().unwrap());
                powers.push(next);
            }
        };
        // minpoly: sum coeffs[i] id^{*i} = 0, coeffs normalized with the top
        // coefficient produced by the loop. Need nonzero constant term.
        let a0 = &minpoly[0];
        if a0.is_zero() {
            return Err(Error::HopfAxiom(
                "identity map is not convolution invertible".into(),
            ));
        }
        let neg_inv = a0.inverse()?.neg();
        let mut s_cols: Vec<BTreeMap<usize, CycScalar>> = vec![BTreeMap::new(); d];
        for (i, ai) in minpoly.iter().enumerate().skip(1) {
            if ai.is_zero() {
                continue;
            }
            let c = neg_inv.mul(ai);
            for k in 0..d {
                for (t, ct) in &powers[i - 1][k] {
                    add_term(&mut s_cols[k], *t, c.mul(ct));
                }
            }
        }
        self.antipode = s_cols.into_iter().map(sparse_from_map).collect();
        Ok(())
    }

    /// JSON serialization with sparse mult/comult triples.
    pub fn to_json(&self) -> serde_json::Value {
        let cyc = |c: &CycScalar| format!("{c:?}");
        let mut mult = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.mult[i][j] {
                    mult.push(serde_json::json!([i, j, k, cyc(c)]));
                }
            }
        }
        let mut comult = Vec::new();
        for k in 0..self.dim {
            for ((i, j), c) in &self.comult[k] {
                comult.push(serde_json::json!([k, i, j, cyc(c)]));
            }
        }
        let antipode: Vec<_> = self
            .antipode
            .iter()
            .enumerate()
            .flat_map(|(i, col)| {
                col.iter()
                    .map(move |(t, c)| serde_json::json!([i, t, cyc(c)]))
            })
            .collect();
        serde_json::json!({
            "dim": self.dim,
            "basis": self.basis,
            "mult": mult,
            "comult": comult,
            "counit": self.counit.iter().map(cyc).collect::<Vec<_>>(),
            "antipode": antipode,
            "conductor": self.conductor,
        })
    }
}
