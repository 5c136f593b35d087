//! Group-theoretical data over a fixed finite group: tuples (F, alpha,
//! Gamma, beta) of subgroups with 2-cocycle classes whose ratio is
//! non-degenerate on the intersection, their orbits under the automorphism
//! group acting together with global cohomology shifts, triviality and
//! twist detection, group-like invariants and classification reports.

use crate::cohomology::{h2, is_nondegenerate, regular_class_count, Cocycle2, CohomologyGroup};
use crate::error::{Error, Result};
use crate::group::{
    all_subgroups, automorphisms, double_cosets, identify, min_generating_set, AbelianShape,
    GroupMap, GroupTable, Subgroup,
};
use crate::hopf::MatchedPair;
use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

mod report;

pub use report::{export_json, export_markdown, ClassificationReport, MergeRecord, RawCase};

/// Sort/canonicalisation key of a datum: (|F|, F, |Gamma|, Gamma, alpha, beta).
pub type DatumKey = (usize, Vec<usize>, usize, Vec<usize>, Vec<u64>, Vec<u64>);

/// A tuple (F, alpha, Gamma, beta): FG = G and the class ratio
/// alpha|_S / beta|_S is non-degenerate on S = F meet Gamma.
#[derive(Clone, Debug)]
pub struct GTDatum {
    pub f: Subgroup,
    pub gamma: Subgroup,
    /// Exponent vector of [alpha] in H^2(F).
    pub alpha: Vec<u64>,
    /// Exponent vector of [beta] in H^2(Gamma).
    pub beta: Vec<u64>,
}

impl GTDatum {
    pub fn key(&self) -> DatumKey {
        (
            self.f.members.len(),
            self.f.members.clone(),
            self.gamma.members.len(),
            self.gamma.members.clone(),
            self.alpha.clone(),
            self.beta.clone(),
        )
    }

    /// The transpose datum (Gamma, beta, F, alpha).
    pub fn dual(&self) -> GTDatum {
        GTDatum {
            f: self.gamma.clone(),
            gamma: self.f.clone(),
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    pub fn alpha_trivial(&self) -> bool {
        self.alpha.iter().all(|&e| e == 0)
    }

    pub fn beta_trivial(&self) -> bool {
        self.beta.iter().all(|&e| e == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triviality {
    pub cocommutative: bool,
    pub commutative: bool,
    pub trivial: bool,
}

/// One equivalence class of data together with its computed invariants.
#[derive(Clone, Debug)]
pub struct DatumClass {
    pub rep: GTDatum,
    pub orbit_size: usize,
    pub intersection_order: usize,
    pub f_type: String,
    pub gamma_type: String,
    pub trivial: bool,
    pub cocommutative: bool,
    pub commutative: bool,
    /// Some("group_algebra") when the class contains a datum with Gamma = G
    /// and beta trivial, Some("dual_group_algebra") for the transposed
    /// condition, Some("both") when both hold, None otherwise.
    pub twist: Option<String>,
    pub abelian_extension: bool,
    pub gh_order: u64,
    pub gh_type: Option<String>,
    /// Index of the class holding the transposed datum, within the same list.
    pub dual_of: usize,
    /// Display name attached by the report layer (merged classes only).
    pub name: Option<String>,
    /// Indices into `all_classes` that this report row collapses.
    pub merged_from: Vec<usize>,
}

/// Per-subgroup working context: standalone table, embedding, positions and
/// second cohomology.
pub(crate) struct Ctx {
    pub std: Arc<GroupTable>,
    pub embed: Vec<usize>,
    /// parent element -> index in `std`, usize::MAX outside the subgroup.
    pub pos: Vec<usize>,
    pub coh: CohomologyGroup,
    pub name: String,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let r = self.find(self.parent[i]);
            self.parent[i] = r;
            r
        } else {
            i
        }
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn is_perfect_square(n: usize) -> bool {
    let r = (n as f64).sqrt().round() as usize;
    r * r == n
}

pub struct Classifier {
    pub g: Arc<GroupTable>,
    autos: Vec<GroupMap>,
    coh_g: CohomologyGroup,
    gens_g: Vec<usize>,
    ctxs: HashMap<Vec<usize>, Arc<Ctx>>,
    subs: Option<Vec<Subgroup>>,
    // (members, class, auto index) -> (image members, image class)
    piece_auto: HashMap<(Vec<usize>, Vec<u64>, usize), (Vec<usize>, Vec<u64>)>,
    // (members, class, generator index) -> shifted class
    piece_shift: HashMap<(Vec<usize>, Vec<u64>, usize), Vec<u64>>,
}

impl Classifier {
    pub fn new(g: &Arc<GroupTable>) -> Result<Classifier> {
        let coh_g = h2(g)?;
        Ok(Classifier {
            g: g.clone(),
            autos: automorphisms(g),
            coh_g,
            gens_g: min_generating_set(g),
            ctxs: HashMap::new(),
            subs: None,
            piece_auto: HashMap::new(),
            piece_shift: HashMap::new(),
        })
    }

    fn ctx(&mut self, members: &[usize]) -> Result<Arc<Ctx>> {
        if let Some(c) = self.ctxs.get(members) {
            return Ok(c.clone());
        }
        let sub = Subgroup::new(&self.g, members.to_vec())?;
        let (table, embed) = sub.to_group();
        let std = table.shared();
        let mut pos = vec![usize::MAX; self.g.order];
        for (i, &m) in embed.iter().enumerate() {
            pos[m] = i;
        }
        let coh = h2(&std)?;
        let name = identify(&std);
        let ctx = Arc::new(Ctx {
            std,
            embed,
            pos,
            coh,
            name,
        });
        self.ctxs.insert(members.to_vec(), ctx.clone());
        Ok(ctx)
    }

    fn subgroups(&mut self) -> Vec<Subgroup> {
        if self.subs.is_none() {
            self.subs = Some(all_subgroups(&self.g));
        }
        self.subs.clone().unwrap()
    }

    /// All ordered pairs (F, Gamma) with F Gamma = G, reduced modulo the
    /// automorphism group of G, sorted by canonical key.
    pub fn enumerate_factorizations(&mut self) -> Result<Vec<(Subgroup, Subgroup)>> {
        let subs = self.subgroups();
        let mut seen: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::new();
        let mut out = Vec::new();
        for f in &subs {
            for gm in &subs {
                let inter = f.intersect(gm);
                if f.members.len() * gm.members.len() != self.g.order * inter.members.len() {
                    continue;
                }
                let key = self.canonical_pair(&f.members, &gm.members);
                if seen.insert(key.clone()) {
                    let fs = Subgroup::new(&self.g, key.0)?;
                    let gs = Subgroup::new(&self.g, key.1)?;
                    out.push((fs, gs));
                }
            }
        }
        out.sort_by_key(|(f, gm)| {
            (
                f.members.len(),
                gm.members.len(),
                f.members.clone(),
                gm.members.clone(),
            )
        });
        Ok(out)
    }

    fn canonical_pair(&self, f: &[usize], gm: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for th in &self.autos {
            let mut f2: Vec<usize> = f.iter().map(|&m| th.apply(m)).collect();
            let mut g2: Vec<usize> = gm.iter().map(|&m| th.apply(m)).collect();
            f2.sort_unstable();
            g2.sort_unstable();
            let cand = (f2, g2);
            if best.as_ref().map(|b| cand < *b).unwrap_or(true) {
                best = Some(cand);
            }
        }
        best.unwrap()
    }

    /// Whether the ordered subgroup pair satisfies |F| |Gamma| = |G| |F meet Gamma|.
    pub fn is_factorization(&self, f: &Subgroup, gamma: &Subgroup) -> bool {
        f.members.len() * gamma.members.len()
            == self.g.order * f.intersect(gamma).members.len()
    }

    /// Every datum over G, including trivial ones, sorted by key.
    pub fn enumerate_data(&mut self) -> Result<Vec<GTDatum>> {
        let subs = self.subgroups();
        let mut out = Vec::new();
        for f in &subs {
            for gm in &subs {
                let inter = f.intersect(gm);
                let si = inter.members.len();
                if f.members.len() * gm.members.len() != self.g.order * si {
                    continue;
                }
                // a class ratio can only be non-degenerate on a group of
                // central type, whose order is a perfect square
                if si > 1 && !is_perfect_square(si) {
                    continue;
                }
                let fc = self.ctx(&f.members)?;
                let gc = self.ctx(&gm.members)?;
                let sc = self.ctx(&inter.members)?;
                let posf: Vec<usize> = inter.members.iter().map(|&m| fc.pos[m]).collect();
                let posg: Vec<usize> = inter.members.iter().map(|&m| gc.pos[m]).collect();
                for a in fc.coh.all_classes() {
                    let ra = fc.coh.cocycle_for(&a).restrict(&sc.std, &posf);
                    for b in gc.coh.all_classes() {
                        let rb = gc.coh.cocycle_for(&b).restrict(&sc.std, &posg);
                        let ratio = ra.div(&rb)?;
                        if is_nondegenerate(&ratio) {
                            out.push(GTDatum {
                                f: f.clone(),
                                gamma: gm.clone(),
                                alpha: a.clone(),
                                beta: b,
                            });
                        }
                    }
                }
            }
        }
        out.sort_by_key(|d| d.key());
        Ok(out)
    }

    /// Validity check against the defining conditions, usable on arbitrary
    /// candidate tuples.
    pub fn is_valid_datum(&mut self, d: &GTDatum) -> Result<bool> {
        let inter = d.f.intersect(&d.gamma);
        if !self.is_factorization(&d.f, &d.gamma) {
            return Ok(false);
        }
        let fc = self.ctx(&d.f.members)?;
        let gc = self.ctx(&d.gamma.members)?;
        let sc = self.ctx(&inter.members)?;
        let posf: Vec<usize> = inter.members.iter().map(|&m| fc.pos[m]).collect();
        let posg: Vec<usize> = inter.members.iter().map(|&m| gc.pos[m]).collect();
        let ra = fc.coh.cocycle_for(&d.alpha).restrict(&sc.std, &posf);
        let rb = gc.coh.cocycle_for(&d.beta).restrict(&sc.std, &posg);
        Ok(is_nondegenerate(&ra.div(&rb)?))
    }

    fn auto_piece(
        &mut self,
        members: &[usize],
        class: &[u64],
        t: usize,
    ) -> Result<(Vec<usize>, Vec<u64>)> {
        let key = (members.to_vec(), class.to_vec(), t);
        if let Some(v) = self.piece_auto.get(&key) {
            return Ok(v.clone());
        }
        let ctx = self.ctx(members)?;
        let mut m2: Vec<usize> = {
            let th = &self.autos[t];
            members.iter().map(|&m| th.apply(m)).collect()
        };
        m2.sort_unstable();
        let c2 = self.ctx(&m2)?;
        let image: Vec<usize> = (0..ctx.std.order)
            .map(|i| c2.pos[self.autos[t].apply(ctx.embed[i])])
            .collect();
        let iso = GroupMap {
            source: ctx.std.clone(),
            target: c2.std.clone(),
            image,
        };
        let moved = ctx.coh.cocycle_for(class).transport(&iso)?;
        let cls = c2.coh.class_of(&moved)?;
        let val = (m2, cls);
        self.piece_auto.insert(key, val.clone());
        Ok(val)
    }

    fn shift_piece(&mut self, members: &[usize], class: &[u64], k: usize) -> Result<Vec<u64>> {
        let key = (members.to_vec(), class.to_vec(), k);
        if let Some(v) = self.piece_shift.get(&key) {
            return Ok(v.clone());
        }
        let ctx = self.ctx(members)?;
        let gamma = self.coh_g.reps[k].restrict(&ctx.std, &ctx.embed);
        let shifted = ctx.coh.cocycle_for(class).mul(&gamma)?;
        let cls = ctx.coh.class_of(&shifted)?;
        self.piece_shift.insert(key, cls.clone());
        Ok(cls)
    }

    /// Image key of a datum under the automorphism with the given index.
    pub fn act_auto_key(&mut self, d: &GTDatum, t: usize) -> Result<DatumKey> {
        let (fm, ac) = self.auto_piece(&d.f.members, &d.alpha, t)?;
        let (gm, bc) = self.auto_piece(&d.gamma.members, &d.beta, t)?;
        Ok((fm.len(), fm, gm.len(), gm, ac, bc))
    }

    /// Image key of a datum under multiplication by the k-th generator of H^2(G).
    pub fn act_shift_key(&mut self, d: &GTDatum, k: usize) -> Result<DatumKey> {
        let ac = self.shift_piece(&d.f.members, &d.alpha, k)?;
        let bc = self.shift_piece(&d.gamma.members, &d.beta, k)?;
        Ok((
            d.f.members.len(),
            d.f.members.clone(),
            d.gamma.members.len(),
            d.gamma.members.clone(),
            ac,
            bc,
        ))
    }

    /// Datum with both classes trivial, exponent vectors correctly sized.
    pub fn trivial_datum(&mut self, f: &Subgroup, gamma: &Subgroup) -> Result<GTDatum> {
        let fc = self.ctx(&f.members)?;
        let gc = self.ctx(&gamma.members)?;
        Ok(GTDatum {
            f: f.clone(),
            gamma: gamma.clone(),
            alpha: vec![0; fc.coh.orders.len()],
            beta: vec![0; gc.coh.orders.len()],
        })
    }

    /// Rebuild a datum from its canonical key.
    pub fn datum_from_key(&self, key: &DatumKey) -> Result<GTDatum> {
        Ok(GTDatum {
            f: Subgroup::new(&self.g, key.1.clone())?,
            gamma: Subgroup::new(&self.g, key.3.clone())?,
            alpha: key.4.clone(),
            beta: key.5.clone(),
        })
    }

    /// Partition a datum list into orbits of Aut(G) combined with shifts by
    /// classes of H^2(G). Returns, per orbit: the representative with the
    /// least key, the orbit size, and the indices of the input data in it.
    pub fn equivalence_orbits(
        &mut self,
        data: &[GTDatum],
    ) -> Result<Vec<(GTDatum, Vec<usize>)>> {
        let mut index: HashMap<DatumKey, usize> = HashMap::new();
        for (i, d) in data.iter().enumerate() {
            index.insert(d.key(), i);
        }
        let mut uf = UnionFind::new(data.len());
        let nt = self.autos.len();
        let ns = self.coh_g.reps.len();
        for (i, d) in data.iter().enumerate() {
            for t in 0..nt {
                let k = self.act_auto_key(d, t)?;
                let j = *index
                    .get(&k)
                    .ok_or_else(|| Error::Invalid("orbit image left the datum set".into()))?;
                uf.union(i, j);
            }
            for s in 0..ns {
                let k = self.act_shift_key(d, s)?;
                let j = *index
                    .get(&k)
                    .ok_or_else(|| Error::Invalid("shift image left the datum set".into()))?;
                uf.union(i, j);
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..data.len() {
            let r = uf.find(i);
            groups.entry(r).or_default().push(i);
        }
        let mut out: Vec<(GTDatum, Vec<usize>)> = Vec::new();
        for (_, mut members) in groups {
            members.sort_unstable();
            let rep = data[members[0]].clone();
            out.push((rep, members));
        }
        out.sort_by_key(|(rep, _)| rep.key());
        Ok(out)
    }

    fn class_is_ad_invariant(&mut self, s: &Subgroup, cls: &[u64]) -> Result<bool> {
        if cls.iter().all(|&e| e == 0) {
            return Ok(true);
        }
        let ctx = self.ctx(&s.members)?;
        for gi in 0..self.gens_g.len() {
            let g = self.gens_g[gi];
            let image: Vec<usize> = (0..ctx.std.order)
                .map(|i| ctx.pos[self.g.conj(g, ctx.embed[i])])
                .collect();
            let iso = GroupMap {
                source: ctx.std.clone(),
                target: ctx.std.clone(),
                image,
            };
            let moved = ctx.coh.cocycle_for(cls).transport(&iso)?;
            if ctx.coh.class_of(&moved)? != cls {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn side_cocommutative(&mut self, s: &Subgroup, cls: &[u64]) -> Result<bool> {
        if !s.is_normal() || !s.is_abelian() {
            return Ok(false);
        }
        self.class_is_ad_invariant(s, cls)
    }

    /// Co/commutativity of the algebra attached to the datum: cocommutative
    /// iff F is abelian normal with [alpha] stable under conjugation by G,
    /// commutative for the transposed condition on (Gamma, beta).
    pub fn triviality(&mut self, d: &GTDatum) -> Result<Triviality> {
        let cocommutative = self.side_cocommutative(&d.f, &d.alpha)?;
        let commutative = self.side_cocommutative(&d.gamma, &d.beta)?;
        Ok(Triviality {
            cocommutative,
            commutative,
            trivial: cocommutative || commutative,
        })
    }

    /// (|char group of F|, |K|) with K the stabiliser of [alpha] in N_G(F)/F.
    fn gh_parts(&mut self, d: &GTDatum) -> Result<(u64, u64)> {
        let ctx = self.ctx(&d.f.members)?;
        let com = Subgroup::full(&ctx.std).commutator_subgroup();
        let fhat = (ctx.std.order / com.members.len()) as u64;
        let norm = d.f.normalizer_in_parent();
        let mut seen = vec![false; self.g.order];
        let mut k = 0u64;
        for &r in &norm.members {
            if seen[r] {
                continue;
            }
            for &m in &d.f.members {
                seen[self.g.mul(r, m)] = true;
            }
            if r == 0 || d.alpha.iter().all(|&e| e == 0) {
                k += 1;
                continue;
            }
            let image: Vec<usize> = (0..ctx.std.order)
                .map(|i| ctx.pos[self.g.conj(r, ctx.embed[i])])
                .collect();
            let iso = GroupMap {
                source: ctx.std.clone(),
                target: ctx.std.clone(),
                image,
            };
            let moved = ctx.coh.cocycle_for(&d.alpha).transport(&iso)?;
            if ctx.coh.class_of(&moved)? == d.alpha {
                k += 1;
            }
        }
        Ok((fhat, k))
    }

    /// Order of the group of group-like elements of the algebra attached to
    /// the datum: |F^| times the number of classes in N_G(F)/F fixing [alpha].
    pub fn grouplike_order(&mut self, d: &GTDatum) -> Result<u64> {
        let (fhat, k) = self.gh_parts(d)?;
        Ok(fhat * k)
    }

    /// The group of group-likes itself, when computable: as an explicit
    /// semidirect product F^ x| N_G(F)/F when alpha is trivial, through the
    /// bicrossed product construction when F meet Gamma = 1, as the
    /// character group alone when the quotient part collapses.
    pub fn grouplike_group(&mut self, d: &GTDatum) -> Result<Option<Arc<GroupTable>>> {
        if d.alpha_trivial() {
            return self.gh_semidirect(d).map(Some);
        }
        let (fhat, k) = self.gh_parts(d)?;
        if k == 1 {
            let ctx = self.ctx(&d.f.members)?;
            let com = Subgroup::full(&ctx.std).commutator_subgroup();
            let (q, _) = com.quotient()?;
            let shape = AbelianShape::decompose(&q)?;
            return Ok(Some(shape.character_group().shared()));
        }
        if fhat == 1 {
            // the extension collapses onto the stabiliser subquotient;
            // no direct model is produced here
            if d.f.intersect(&d.gamma).members.len() == 1 {
                return self.gh_bicrossed(d).map(Some);
            }
            return Ok(None);
        }
        if d.f.intersect(&d.gamma).members.len() == 1 {
            return self.gh_bicrossed(d).map(Some);
        }
        Ok(None)
    }

    fn gh_semidirect(&mut self, d: &GTDatum) -> Result<Arc<GroupTable>> {
        let ctx = self.ctx(&d.f.members)?;
        let com = Subgroup::full(&ctx.std).commutator_subgroup();
        let (q, proj) = com.quotient()?;
        let shape = AbelianShape::decompose(&q)?;
        let chars = shape.character_group();
        let m = chars.order;
        // preimages in std of each quotient element
        let mut pre = vec![usize::MAX; q.order];
        for i in 0..ctx.std.order {
            let qi = proj.apply(i);
            if pre[qi] == usize::MAX {
                pre[qi] = i;
            }
        }
        let norm = d.f.normalizer_in_parent();
        let mut coset_of: HashMap<usize, usize> = HashMap::new();
        let mut reps: Vec<usize> = Vec::new();
        for &r in &norm.members {
            if coset_of.contains_key(&r) {
                continue;
            }
            let w = reps.len();
            reps.push(r);
            for &mm in &d.f.members {
                coset_of.insert(self.g.mul(r, mm), w);
            }
        }
        let nw = reps.len();
        // character permutation induced by conjugation with each coset rep
        let mut act: Vec<Vec<usize>> = Vec::with_capacity(nw);
        for &r in &reps {
            let rinv = self.g.inv(r);
            let mut theta_inv = vec![0usize; q.order];
            for qi in 0..q.order {
                let x = ctx.embed[pre[qi]];
                theta_inv[qi] = proj.apply(ctx.pos[self.g.conj(rinv, x)]);
            }
            let row: Vec<usize> = (0..m).map(|chi| shape.char_pullback(&theta_inv, chi)).collect();
            act.push(row);
        }
        let n = m * nw;
        let mut mul = vec![0u16; n * n];
        for w1 in 0..nw {
            for c1 in 0..m {
                for w2 in 0..nw {
                    for c2 in 0..m {
                        let chi = chars.mul(c1, act[w1][c2]);
                        let w = coset_of[&self.g.mul(reps[w1], reps[w2])];
                        mul[(w1 * m + c1) * n + (w2 * m + c2)] = (w * m + chi) as u16;
                    }
                }
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Ok(GroupTable::from_table(mul, labels, format!("G(H) order {n}"))?.shared())
    }

    fn gh_bicrossed(&mut self, d: &GTDatum) -> Result<Arc<GroupTable>> {
        let mp = self.twisted_pair(d)?;
        let (table, _) = mp.grouplikes()?;
        Ok(table.shared())
    }

    /// Bicrossed-product presentation of the algebra attached to an exact
    /// factorization datum: functions on F, group algebra of Gamma, beta as
    /// the multiplication twist and alpha as the comultiplication twist.
    pub fn twisted_pair(&mut self, d: &GTDatum) -> Result<MatchedPair> {
        let fc = self.ctx(&d.f.members)?;
        let gc = self.ctx(&d.gamma.members)?;
        let alpha = fc.coh.cocycle_for(&d.alpha);
        let beta = gc.coh.cocycle_for(&d.beta);
        let mut mp = MatchedPair::from_factorization(&d.gamma, &d.f)?;
        let cond = lcm64(alpha.modulus, beta.modulus).max(1);
        mp.cond = cond;
        let nf = mp.f.order;
        let ng = mp.gamma.order;
        let sb = cond / beta.modulus.max(1);
        let sa = cond / alpha.modulus.max(1);
        for g in 0..ng {
            for x in 0..nf {
                for y in 0..nf {
                    mp.sigma[g][x][y] = (beta.get(x, y) * sb) as i64;
                }
            }
        }
        for g1 in 0..ng {
            for g2 in 0..ng {
                for x in 0..nf {
                    mp.tau[g1][g2][x] = (alpha.get(g1, g2) * sa) as i64;
                }
            }
        }
        Ok(mp)
    }

    /// If some global class restricts on F to the inverse of alpha, trade
    /// (F, alpha, Gamma, beta) for an equivalent datum with trivial alpha.
    pub fn reduce_by_global_class(&mut self, d: &GTDatum) -> Result<Option<GTDatum>> {
        if d.alpha_trivial() {
            return Ok(Some(d.clone()));
        }
        for cls in self.coh_g.all_classes() {
            let gamma = self.coh_g.cocycle_for(&cls);
            let fc = self.ctx(&d.f.members)?;
            let rf = gamma.restrict(&fc.std, &fc.embed);
            let shifted = fc.coh.cocycle_for(&d.alpha).mul(&rf)?;
            if fc.coh.class_of(&shifted)?.iter().all(|&e| e == 0) {
                let gc = self.ctx(&d.gamma.members)?;
                let rg = gamma.restrict(&gc.std, &gc.embed);
                let nb = gc.coh.class_of(&gc.coh.cocycle_for(&d.beta).mul(&rg)?)?;
                return Ok(Some(GTDatum {
                    f: d.f.clone(),
                    gamma: d.gamma.clone(),
                    alpha: vec![0; d.alpha.len()],
                    beta: nb,
                }));
            }
        }
        Ok(None)
    }

    /// Number of irreducible module summands of the tensor square invariant:
    /// sum over (F, Gamma)-double cosets of the regular class count of the
    /// induced ratio cocycle on the stabiliser F meet g Gamma g^{-1}.
    pub fn module_tensor_rank(&mut self, d: &GTDatum) -> Result<usize> {
        let fc = self.ctx(&d.f.members)?;
        let gc = self.ctx(&d.gamma.members)?;
        let alpha = fc.coh.cocycle_for(&d.alpha);
        let beta = gc.coh.cocycle_for(&d.beta);
        let mut total = 0usize;
        for dc in double_cosets(&d.f, &d.gamma) {
            let g = dc.rep;
            let conj = d.gamma.conjugate(g);
            let stab = d.f.intersect(&conj);
            let sc = self.ctx(&stab.members)?;
            let k = sc.std.order;
            let posf: Vec<usize> = stab.members.iter().map(|&m| fc.pos[m]).collect();
            let ra = alpha.restrict(&sc.std, &posf);
            let ginv = self.g.inv(g);
            let mut vals = vec![0u64; k * k];
            for i in 0..k {
                let xi = gc.pos[self.g.conj(ginv, stab.members[i])];
                for j in 0..k {
                    let xj = gc.pos[self.g.conj(ginv, stab.members[j])];
                    vals[i * k + j] = beta.get(xi, xj);
                }
            }
            let rb = Cocycle2 {
                group: sc.std.clone(),
                modulus: beta.modulus,
                vals,
            };
            total += regular_class_count(&ra.div(&rb)?);
        }
        Ok(total)
    }

    /// Full classification report for G.
    pub fn classify(&mut self) -> Result<ClassificationReport> {
        let data = self.enumerate_data()?;
        let orbits = self.equivalence_orbits(&data)?;

        // orient twist flags by scanning orbit members
        let mut classes: Vec<DatumClass> = Vec::with_capacity(orbits.len());
        let mut orbit_of_key: HashMap<DatumKey, usize> = HashMap::new();
        for (oi, (_, members)) in orbits.iter().enumerate() {
            for &i in members {
                orbit_of_key.insert(data[i].key(), oi);
            }
        }
        for (rep, members) in &orbits {
            let tv = self.triviality(rep)?;
            let mut as_twist = false;
            let mut as_dual_twist = false;
            for &i in members {
                let d = &data[i];
                if d.gamma.members.len() == self.g.order && d.beta_trivial() {
                    as_twist = true;
                }
                if d.f.members.len() == self.g.order && d.alpha_trivial() {
                    as_dual_twist = true;
                }
            }
            let twist = match (as_twist, as_dual_twist) {
                (true, true) => Some("both".to_string()),
                (true, false) => Some("group_algebra".to_string()),
                (false, true) => Some("dual_group_algebra".to_string()),
                (false, false) => None,
            };
            let inter = rep.f.intersect(&rep.gamma).members.len();
            let gh_order = self.grouplike_order(rep)?;
            let gh_type = self.gh_type_cheap(rep)?;
            let f_type = self.ctx(&rep.f.members)?.name.clone();
            let gamma_type = self.ctx(&rep.gamma.members)?.name.clone();
            classes.push(DatumClass {
                rep: rep.clone(),
                orbit_size: members.len(),
                intersection_order: inter,
                f_type,
                gamma_type,
                trivial: tv.trivial,
                cocommutative: tv.cocommutative,
                commutative: tv.commutative,
                twist,
                abelian_extension: inter == 1,
                gh_order,
                gh_type,
                dual_of: usize::MAX,
                name: None,
                merged_from: Vec::new(),
            });
        }
        for i in 0..classes.len() {
            let dk = classes[i].rep.dual().key();
            classes[i].dual_of = *orbit_of_key
                .get(&dk)
                .ok_or_else(|| Error::Invalid("dual datum missing from enumeration".into()))?;
        }
        let raw = self.raw_cases(&data)?;
        report::assemble(self, classes, raw)
    }

    fn gh_type_cheap(&mut self, d: &GTDatum) -> Result<Option<String>> {
        if d.alpha_trivial() {
            let t = self.gh_semidirect(d)?;
            return Ok(Some(identify(&t)));
        }
        let (_, k) = self.gh_parts(d)?;
        if k == 1 {
            let ctx = self.ctx(&d.f.members)?;
            let com = Subgroup::full(&ctx.std).commutator_subgroup();
            let (q, _) = com.quotient()?;
            let shape = AbelianShape::decompose(&q)?;
            return Ok(Some(identify(&shape.character_group().shared())));
        }
        Ok(None)
    }

    pub(crate) fn raw_cases(&mut self, data: &[GTDatum]) -> Result<Vec<RawCase>> {
        let mut seen: HashMap<(Vec<usize>, Vec<usize>), ()> = HashMap::new();
        let mut out = Vec::new();
        for d in data {
            if d.f.members.len() <= 1 || d.gamma.members.len() <= 1 {
                continue;
            }
            let (a, b) = if (d.f.members.len(), &d.f.members) <= (d.gamma.members.len(), &d.gamma.members)
            {
                (d.f.members.clone(), d.gamma.members.clone())
            } else {
                (d.gamma.members.clone(), d.f.members.clone())
            };
            let key = self.canonical_unordered_pair(&a, &b);
            if let Entry::Vacant(e) = seen.entry(key.clone()) {
                e.insert(());
                let fs = Subgroup::new(&self.g, key.0.clone())?;
                let gs = Subgroup::new(&self.g, key.1.clone())?;
                let inter = fs.intersect(&gs).members.len();
                let f_type = self.ctx(&key.0)?.name.clone();
                let gamma_type = self.ctx(&key.1)?.name.clone();
                out.push(RawCase {
                    f_members: key.0,
                    gamma_members: key.1,
                    f_type,
                    gamma_type,
                    intersection_order: inter,
                });
            }
        }
        out.sort_by_key(|c| {
            (
                c.f_members.len(),
                c.gamma_members.len(),
                c.f_members.clone(),
                c.gamma_members.clone(),
            )
        });
        Ok(out)
    }

    fn canonical_unordered_pair(&self, a: &[usize], b: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for th in &self.autos {
            let mut a2: Vec<usize> = a.iter().map(|&m| th.apply(m)).collect();
            let mut b2: Vec<usize> = b.iter().map(|&m| th.apply(m)).collect();
            a2.sort_unstable();
            b2.sort_unstable();
            let cand = if (a2.len(), &a2) <= (b2.len(), &b2) {
                (a2, b2)
            } else {
                (b2, a2)
            };
            if best.as_ref().map(|x| cand < *x).unwrap_or(true) {
                best = Some(cand);
            }
        }
        best.unwrap()
    }
}

fn lcm64(a: u64, b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    a / gcd64(a, b) * b
}

fn gcd64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}
