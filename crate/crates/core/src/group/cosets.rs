use super::subgroup::Subgroup;
use super::table::GroupTable;

/// Conjugacy classes with lexicographically least representatives, ordered by
/// representative.
pub fn conjugacy_partition(g: &GroupTable) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order];
    let mut classes = Vec::new();
    for x in 0..g.order {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..g.order).map(|y| g.conj(y, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// Representatives only (each class' least element).
pub fn conjugacy_classes(g: &GroupTable) -> Vec<usize> {
    conjugacy_partition(g).iter().map(|c| c[0]).collect()
}

#[derive(Clone, Debug)]
pub struct DoubleCoset {
    /// least element of F g Gamma
    pub rep: usize,
    pub elements: Vec<usize>,
}

/// Double cosets F \ G / Gamma, ordered by representative. F acts on the
/// left, Gamma on the right.
pub fn double_cosets(f: &Subgroup, gamma: &Subgroup) -> Vec<DoubleCoset> {
    let g = &f.parent;
    let mut seen = vec![false; g.order];
    let mut out = Vec::new();
    for x in 0..g.order {
        if seen[x] {
            continue;
        }
        let mut elements = Vec::new();
        for &a in &f.members {
            let ax = g.mul(a, x);
            for &b in &gamma.members {
                let axb = g.mul(ax, b);
                if !std::mem::replace(&mut seen[axb], true) {
                    elements.push(axb);
                }
            }
        }
        elements.sort_unstable();
        out.push(DoubleCoset { rep: x, elements });
    }
    out
}
