use super::table::GroupTable;
use crate::error::{Error, Result};
use std::sync::Arc;

/// A homomorphism between two shared tables, stored pointwise.
/// Comparisons look at the image vector only.
#[derive(Clone, Debug)]
pub struct GroupMap {
    pub source: Arc<GroupTable>,
    pub target: Arc<GroupTable>,
    pub image: Vec<usize>,
}

impl PartialEq for GroupMap {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image
    }
}
impl Eq for GroupMap {}
impl PartialOrd for GroupMap {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.image.cmp(&other.image))
    }
}
impl Ord for GroupMap {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.image.cmp(&other.image)
    }
}

impl GroupMap {
    pub fn new(
        source: &Arc<GroupTable>,
        target: &Arc<GroupTable>,
        image: Vec<usize>,
    ) -> Result<Self> {
        if image.len() != source.order {
            return Err(Error::NotHomomorphism);
        }
        for a in 0..source.order {
            for b in 0..source.order {
                if image[source.mul(a, b)] != target.mul(image[a], image[b]) {
                    return Err(Error::NotHomomorphism);
                }
            }
        }
        Ok(GroupMap {
            source: source.clone(),
            target: target.clone(),
            image,
        })
    }

    pub fn identity(g: &Arc<GroupTable>) -> Self {
        GroupMap {
            source: g.clone(),
            target: g.clone(),
            image: (0..g.order).collect(),
        }
    }

    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order != self.target.order {
            return false;
        }
        let mut seen = vec![false; self.target.order];
        self.image.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// other ∘ self
    pub fn then(&self, other: &GroupMap) -> Result<GroupMap> {
        if !Arc::ptr_eq(&self.target, &other.source) && self.target.mul != other.source.mul {
            return Err(Error::MismatchedParents);
        }
        Ok(GroupMap {
            source: self.source.clone(),
            target: other.target.clone(),
            image: self.image.iter().map(|&g| other.image[g]).collect(),
        })
    }

    pub fn inverse(&self) -> Result<GroupMap> {
        if !self.is_bijective() {
            return Err(Error::Invalid("map is not bijective".into()));
        }
        let mut image = vec![0usize; self.target.order];
        for (g, &y) in self.image.iter().enumerate() {
            image[y] = g;
        }
        Ok(GroupMap {
            source: self.target.clone(),
            target: self.source.clone(),
            image,
        })
    }

    pub fn conjugation(g: &Arc<GroupTable>, by: usize) -> Self {
        GroupMap {
            source: g.clone(),
            target: g.clone(),
            image: (0..g.order).map(|x| g.conj(by, x)).collect(),
        }
    }
}

/// A small generating set, greedily built by repeatedly adding a highest-order
/// element outside the current closure.
pub fn min_generating_set(g: &GroupTable) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = super::subgroup::closure(g, &gens);
    while span.len() < g.order {
        let next = (0..g.order)
            .filter(|x| span.binary_search(x).is_err())
            .max_by_key(|&x| g.order_of(x))
            .expect("span is proper");
        gens.push(next);
        span = super::subgroup::closure(g, &gens);
    }
    gens
}

/// Invariant fingerprint used to prune isomorphism search: element order plus
/// conjugacy class size plus centralizer order.
fn fingerprints(g: &GroupTable) -> Vec<(usize, usize, usize)> {
    let classes = super::cosets::conjugacy_partition(g);
    let mut class_size = vec![0usize; g.order];
    for c in &classes {
        for &x in c {
            class_size[x] = c.len();
        }
    }
    (0..g.order)
        .map(|x| {
            let cent = (0..g.order).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
            (g.order_of(x), class_size[x], cent)
        })
        .collect()
}

fn extend_map(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    assigned: &mut Vec<usize>,
    fp_a: &[(usize, usize, usize)],
    fp_b: &[(usize, usize, usize)],
    k: usize,
    all: Option<&mut Vec<Vec<usize>>>,
) -> bool {
    if k == gens.len() {
        // Propagate gen images to a full map via words; here we rebuild by BFS.
        if let Some(full) = complete_map(a, b, gens, assigned) {
            match all {
                Some(list) => {
                    list.push(full);
                    return false; // keep searching
                }
                None => return true,
            }
        }
        return false;
    }
    let mut all = all;
    for y in 0..b.order {
        if fp_b[y] != fp_a[gens[k]] {
            continue;
        }
        assigned[k] = y;
        let found = match all {
            Some(ref mut list) => {
                extend_map(a, b, gens, assigned, fp_a, fp_b, k + 1, Some(list))
            }
            None => extend_map(a, b, gens, assigned, fp_a, fp_b, k + 1, None),
        };
        if found {
            return true;
        }
    }
    false
}

/// Given images of a generating set, build the full map by closure, failing
/// if the assignment is inconsistent.
fn complete_map(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    gen_imgs: &[usize],
) -> Option<Vec<usize>> {
    let n = a.order;
    let mut image = vec![usize::MAX; n];
    image[0] = 0;
    let mut frontier = vec![0usize];
    let mut reached = 1usize;
    while let Some(x) = frontier.pop() {
        for (i, &s) in gens.iter().enumerate() {
            let nx = a.mul(x, s);
            let ny = b.mul(image[x], gen_imgs[i]);
            if image[nx] == usize::MAX {
                image[nx] = ny;
                reached += 1;
                frontier.push(nx);
            } else if image[nx] != ny {
                return None;
            }
        }
    }
    if reached < n {
        return None;
    }
    // Bijectivity and the homomorphism law both need a final check: BFS only
    // enforced right-multiplication by generators.
    let mut seen = vec![false; n];
    for &y in &image {
        if std::mem::replace(&mut seen[y], true) {
            return None;
        }
    }
    for x in 0..n {
        for (i, &s) in gens.iter().enumerate() {
            if image[a.mul(s, x)] != b.mul(gen_imgs[i], image[x]) {
                return None;
            }
        }
    }
    Some(image)
}

pub fn isomorphism(a: &Arc<GroupTable>, b: &Arc<GroupTable>) -> Option<GroupMap> {
    if a.order != b.order {
        return None;
    }
    let fa = fingerprints(a);
    let fb = fingerprints(b);
    {
        let mut sa = fa.clone();
        let mut sb = fb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    let gens = min_generating_set(a);
    let mut assigned = vec![0usize; gens.len()];
    let found = extend_map(a, b, &gens, &mut assigned, &fa, &fb, 0, None);
    if !found {
        return None;
    }
    let image = complete_map(a, b, &gens, &assigned).expect("checked");
    Some(GroupMap {
        source: a.clone(),
        target: b.clone(),
        image,
    })
}

pub fn isomorphic(a: &Arc<GroupTable>, b: &Arc<GroupTable>) -> bool {
    isomorphism(a, b).is_some()
}

/// All automorphisms of g, as full pointwise maps sorted lexicographically.
pub fn automorphisms(g: &Arc<GroupTable>) -> Vec<GroupMap> {
    let fp = fingerprints(g);
    let gens = min_generating_set(g);
    let mut assigned = vec![0usize; gens.len()];
    let mut list: Vec<Vec<usize>> = Vec::new();
    extend_map(g, g, &gens, &mut assigned, &fp, &fp, 0, Some(&mut list));
    list.sort_unstable();
    list.dedup();
    list.into_iter()
        .map(|image| GroupMap {
            source: g.clone(),
            target: g.clone(),
            image,
        })
        .collect()
}
