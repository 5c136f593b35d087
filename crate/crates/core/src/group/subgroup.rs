use super::maps::GroupMap;
use super::table::GroupTable;
use crate::error::{Error, Result};
use crate::par;
use std::collections::BTreeSet;
use std::sync::Arc;

/// A subgroup of a shared parent table, kept as a sorted member list.
/// Comparisons look at the member list only; callers never mix parents.
#[derive(Clone)]
pub struct Subgroup {
    pub parent: Arc<GroupTable>,
    pub members: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}
impl Eq for Subgroup {}
impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Subgroup {
    pub fn new(parent: &Arc<GroupTable>, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&m| m >= parent.order) {
            return Err(Error::ForeignSubgroup);
        }
        let s = Subgroup {
            parent: parent.clone(),
            members,
        };
        if !s.is_closed() {
            return Err(Error::Invalid("member set is not closed".into()));
        }
        Ok(s)
    }

    pub fn generated(parent: &Arc<GroupTable>, gens: &[usize]) -> Self {
        Subgroup {
            parent: parent.clone(),
            members: closure(parent, gens),
        }
    }

    pub fn trivial(parent: &Arc<GroupTable>) -> Self {
        Subgroup {
            parent: parent.clone(),
            members: vec![0],
        }
    }

    pub fn full(parent: &Arc<GroupTable>) -> Self {
        Subgroup {
            parent: parent.clone(),
            members: (0..parent.order).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    fn is_closed(&self) -> bool {
        self.contains(0)
            && self.members.iter().all(|&a| {
                self.contains(self.parent.inv(a))
                    && self
                        .members
                        .iter()
                        .all(|&b| self.contains(self.parent.mul(a, b)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        self.members.iter().all(|&a| {
            self.members
                .iter()
                .all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a))
        })
    }

    pub fn is_normal(&self) -> bool {
        (0..self.parent.order).all(|g| {
            self.members
                .iter()
                .all(|&m| self.contains(self.parent.conj(g, m)))
        })
    }

    pub fn conjugate(&self, g: usize) -> Subgroup {
        let mut members: Vec<usize> = self
            .members
            .iter()
            .map(|&m| self.parent.conj(g, m))
            .collect();
        members.sort_unstable();
        Subgroup {
            parent: self.parent.clone(),
            members,
        }
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m))
            .collect();
        Subgroup {
            parent: self.parent.clone(),
            members,
        }
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = self
            .members
            .iter()
            .chain(other.members.iter())
            .copied()
            .collect();
        Subgroup::generated(&self.parent, &gens)
    }

    /// The set product F*Gamma as a sorted list of elements (not a subgroup
    /// in general).
    pub fn product_set(&self, other: &Subgroup) -> Vec<usize> {
        let mut hit = vec![false; self.parent.order];
        for &a in &self.members {
            for &b in &other.members {
                hit[self.parent.mul(a, b)] = true;
            }
        }
        (0..self.parent.order).filter(|&i| hit[i]).collect()
    }

    pub fn centralizer_of(&self, x: usize) -> Vec<usize> {
        self.members
            .iter()
            .copied()
            .filter(|&g| self.parent.mul(g, x) == self.parent.mul(x, g))
            .collect()
    }

    pub fn center(&self) -> Subgroup {
        let members: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&z| {
                self.members
                    .iter()
                    .all(|&g| self.parent.mul(z, g) == self.parent.mul(g, z))
            })
            .collect();
        Subgroup {
            parent: self.parent.clone(),
            members,
        }
    }

    pub fn normalizer_in_parent(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.parent.order)
            .filter(|&g| {
                self.members
                    .iter()
                    .all(|&m| self.contains(self.parent.conj(g, m)))
            })
            .collect();
        Subgroup {
            parent: self.parent.clone(),
            members,
        }
    }

    pub fn centralizer_in_parent(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.parent.order)
            .filter(|&g| {
                self.members
                    .iter()
                    .all(|&m| self.parent.mul(g, m) == self.parent.mul(m, g))
            })
            .collect();
        Subgroup {
            parent: self.parent.clone(),
            members,
        }
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let mut gens = Vec::new();
        for &a in &self.members {
            for &b in &self.members {
                let c = self.parent.mul(
                    self.parent.mul(a, b),
                    self.parent.mul(self.parent.inv(a), self.parent.inv(b)),
                );
                gens.push(c);
            }
        }
        Subgroup::generated(&self.parent, &gens)
    }

    /// Extract this subgroup as a standalone GroupTable together with the
    /// embedding local index -> parent index.
    pub fn to_group(&self) -> (GroupTable, Vec<usize>) {
        let n = self.members.len();
        let pos = |g: usize| self.members.binary_search(&g).expect("closed");
        let mut mul = vec![0u16; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                mul[i * n + j] = pos(self.parent.mul(a, b)) as u16;
            }
        }
        let labels = self
            .members
            .iter()
            .map(|&m| self.parent.labels[m].clone())
            .collect();
        let g = GroupTable::from_table(
            mul,
            labels,
            format!("subgroup of {} (order {})", self.parent.provenance, n),
        )
        .expect("subgroup table");
        (g, self.members.clone())
    }

    /// Quotient by this (normal) subgroup: the coset group plus the
    /// projection map.
    pub fn quotient(&self) -> Result<(Arc<GroupTable>, GroupMap)> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        let po = self.parent.order;
        let mut coset_of = vec![usize::MAX; po];
        let mut reps = Vec::new();
        for g in 0..po {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &m in &self.members {
                coset_of[self.parent.mul(g, m)] = idx;
            }
        }
        let q = reps.len();
        let mut mul = vec![0u16; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * q + j] = coset_of[self.parent.mul(a, b)] as u16;
            }
        }
        let labels = reps
            .iter()
            .map(|&r| format!("[{}]", self.parent.labels[r]))
            .collect();
        let qt = GroupTable::from_table(
            mul,
            labels,
            format!("{} / N (order {q})", self.parent.provenance),
        )?
        .shared();
        let map = GroupMap::new(&self.parent, &qt, coset_of)?;
        Ok((qt, map))
    }
}

pub fn closure(g: &GroupTable, gens: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; g.order];
    in_set[0] = true;
    let mut frontier: Vec<usize> = vec![0];
    for &x in gens {
        if !in_set[x] {
            in_set[x] = true;
            frontier.push(x);
        }
    }
    let gens: Vec<usize> = gens.to_vec();
    while let Some(x) = frontier.pop() {
        for &s in &gens {
            for y in [g.mul(x, s), g.mul(s, x)] {
                if !in_set[y] {
                    in_set[y] = true;
                    frontier.push(y);
                }
            }
        }
    }
    (0..g.order).filter(|&i| in_set[i]).collect()
}

/// All subgroups: close the set of cyclic subgroups under pairwise join.
/// Result is sorted by (order, members).
pub fn all_subgroups(parent: &Arc<GroupTable>) -> Vec<Subgroup> {
    let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
    known.insert(vec![0]);
    for g in 1..parent.order {
        known.insert(closure(parent, &[g]));
    }
    loop {
        let list: Vec<Vec<usize>> = known.iter().cloned().collect();
        let n = list.len();
        let new_sets: Vec<Vec<Vec<usize>>> = par::map_range(n, |i| {
            let mut local = Vec::new();
            for j in (i + 1)..n {
                let mut gens = list[i].clone();
                gens.extend_from_slice(&list[j]);
                let joined = closure(parent, &gens);
                local.push(joined);
            }
            local
        });
        let before = known.len();
        for batch in new_sets {
            for s in batch {
                known.insert(s);
            }
        }
        if known.len() == before {
            break;
        }
    }
    let mut out: Vec<Subgroup> = known
        .into_iter()
        .map(|members| Subgroup {
            parent: parent.clone(),
            members,
        })
        .collect();
    out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    out
}
