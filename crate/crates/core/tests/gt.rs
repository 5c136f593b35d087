use gth_core::group::{all_subgroups, isomorphic, parse_spec, GroupTable, Subgroup};
use gth_core::gt::Classifier;
use std::collections::BTreeSet;
use std::sync::Arc;

fn group(spec: &str) -> Arc<GroupTable> {
    parse_spec(spec).unwrap().shared()
}

fn normal_klein(g: &Arc<GroupTable>) -> Subgroup {
    all_subgroups(g)
        .into_iter()
        .find(|s| {
            s.members.len() == 4
                && s.is_normal()
                && s.members.iter().all(|&m| g.mul(m, m) == 0)
        })
        .unwrap()
}

fn sub_of_order(g: &Arc<GroupTable>, n: usize) -> Subgroup {
    all_subgroups(g)
        .into_iter()
        .find(|s| s.members.len() == n)
        .unwrap()
}

#[test]
fn s3_has_no_nontrivial_classes() {
    let mut cl = Classifier::new(&group("S 3")).unwrap();
    let r = cl.classify().unwrap();
    assert!(r.classes.is_empty());
    assert!(!r.all_classes.is_empty());
}

#[test]
fn frobenius20_has_no_nontrivial_classes() {
    let mut cl = Classifier::new(&group("C 5 : 2 : C 4")).unwrap();
    let r = cl.classify().unwrap();
    assert!(r.classes.is_empty());
}

#[test]
fn s4_classification() {
    let mut cl = Classifier::new(&group("S 4")).unwrap();
    let r = cl.classify().unwrap();
    assert_eq!(r.classes.len(), 4, "post-merge non-trivial classes");

    let gh: BTreeSet<u64> = r.classes.iter().map(|c| c.gh_order).collect();
    assert_eq!(gh, BTreeSet::from([2, 4, 6, 8]));

    // group-like groups: C2 x C2, S3, D4, C2
    for c in &r.classes {
        let t = c.gh_type.as_deref().expect("every row has a type");
        match c.gh_order {
            4 => assert_eq!(t, "C2 x C2"),
            6 => assert_eq!(t, "S3"),
            8 => assert_eq!(t, "D4"),
            2 => assert_eq!(t, "C2"),
            _ => panic!("unexpected order"),
        }
    }

    // rows come in two dual pairs and pairs are adjacent
    assert_eq!(r.classes[0].dual_of, 1);
    assert_eq!(r.classes[1].dual_of, 0);
    assert_eq!(r.classes[2].dual_of, 3);
    assert_eq!(r.classes[3].dual_of, 2);
    let d01: BTreeSet<u64> = [r.classes[0].gh_order, r.classes[1].gh_order].into();
    let d23: BTreeSet<u64> = [r.classes[2].gh_order, r.classes[3].gh_order].into();
    assert!(
        (d01 == BTreeSet::from([4, 6]) && d23 == BTreeSet::from([2, 8]))
            || (d01 == BTreeSet::from([2, 8]) && d23 == BTreeSet::from([4, 6]))
    );

    assert_eq!(r.raw_cases.len(), 7, "case pairs up to conjugation");
    assert_eq!(
        r.merges_applied.iter().filter(|m| m.asserted).count(),
        4
    );
}

#[test]
fn g18_classification() {
    let g = group("G18");
    let mut cl = Classifier::new(&g).unwrap();
    let r = cl.classify().unwrap();
    assert_eq!(r.classes.len(), 2);
    assert_eq!(r.classes[0].dual_of, 1);
    assert_eq!(r.classes[1].dual_of, 0);
    let gh: BTreeSet<u64> = r.classes.iter().map(|c| c.gh_order).collect();
    assert_eq!(gh, BTreeSet::from([6, 9]));

    // pre-merge: four dual pairs of non-trivial classes
    let nontrivial: Vec<_> = r.all_classes.iter().filter(|c| !c.trivial).collect();
    assert_eq!(nontrivial.len(), 8);
    let mut shapes: Vec<(usize, usize, u64)> = nontrivial
        .iter()
        .map(|c| (c.rep.f.members.len(), c.rep.gamma.members.len(), c.gh_order))
        .collect();
    shapes.sort_unstable();
    assert_eq!(
        shapes,
        vec![
            (2, 9, 6),
            (3, 6, 9),
            (3, 6, 9),
            (6, 3, 6),
            (6, 3, 6),
            (9, 2, 9),
            (9, 18, 9),
            (18, 9, 6),
        ]
    );
}

#[test]
fn c7c6_classification() {
    let mut cl = Classifier::new(&group("C 7 : 3 : C 6")).unwrap();
    let r = cl.classify().unwrap();
    assert_eq!(r.classes.len(), 2);
    assert_eq!(r.classes[0].dual_of, 1);
    assert_eq!(r.classes[1].dual_of, 0);
    for c in &r.classes {
        assert_eq!(c.gh_order, 6);
        assert_eq!(c.gh_type.as_deref(), Some("C6"));
    }
    let names: BTreeSet<_> = r
        .classes
        .iter()
        .map(|c| c.name.clone().unwrap())
        .collect();
    assert_eq!(
        names,
        BTreeSet::from(["A7(3,2)".to_string(), "A7(2,3)".to_string()])
    );
}

#[test]
fn module_tensor_rank_examples() {
    let g = group("S 4");
    let mut cl = Classifier::new(&g).unwrap();
    let v = normal_klein(&g);
    let s3 = sub_of_order(&g, 6);
    let c3 = sub_of_order(&g, 3);
    let full = Subgroup::full(&g);

    let d = cl.trivial_datum(&v, &s3).unwrap();
    assert_eq!(cl.module_tensor_rank(&d).unwrap(), 1);

    let d = cl.trivial_datum(&v, &c3).unwrap();
    assert_eq!(cl.module_tensor_rank(&d).unwrap(), 2);

    let d = cl.trivial_datum(&full, &full).unwrap();
    assert_eq!(cl.module_tensor_rank(&d).unwrap(), 5);
}

#[test]
fn rank_one_on_exact_factorizations() {
    for spec in ["S 4", "C 7 : 3 : C 6", "D 6"] {
        let g = group(spec);
        let mut cl = Classifier::new(&g).unwrap();
        for (f, gm) in cl.enumerate_factorizations().unwrap() {
            if f.intersect(&gm).members.len() != 1 {
                continue;
            }
            let d = cl.trivial_datum(&f, &gm).unwrap();
            assert_eq!(cl.module_tensor_rank(&d).unwrap(), 1, "{spec}");
        }
    }
}

#[test]
fn dual_is_an_involution_and_swaps_triviality() {
    let g = group("S 4");
    let mut cl = Classifier::new(&g).unwrap();
    let data = cl.enumerate_data().unwrap();
    for d in &data {
        let dd = d.dual().dual();
        assert_eq!(dd.key(), d.key());
        let t = cl.triviality(d).unwrap();
        let td = cl.triviality(&d.dual()).unwrap();
        assert_eq!(t.cocommutative, td.commutative);
        assert_eq!(t.commutative, td.cocommutative);
    }
}

#[test]
fn grouplike_order_matches_bicrossed_grouplikes() {
    // independent cross-check through the bicrossed product construction
    for spec in ["S 4", "D 6", "C 7 : 3 : C 6"] {
        let g = group(spec);
        let mut cl = Classifier::new(&g).unwrap();
        let data = cl.enumerate_data().unwrap();
        for d in &data {
            if d.f.intersect(&d.gamma).members.len() != 1 {
                continue;
            }
            let want = cl.grouplike_order(d).unwrap();
            let mp = cl.twisted_pair(d).unwrap();
            let (gl, _) = mp.grouplikes().unwrap();
            assert_eq!(
                gl.order as u64, want,
                "{spec}: F={:?} Gamma={:?} alpha={:?} beta={:?}",
                d.f.members, d.gamma.members, d.alpha, d.beta
            );
        }
    }
}

#[test]
fn grouplike_group_paths_agree() {
    // when both the semidirect model and the bicrossed model apply they
    // must produce isomorphic groups
    let g = group("S 4");
    let mut cl = Classifier::new(&g).unwrap();
    let data = cl.enumerate_data().unwrap();
    for d in &data {
        if !d.alpha_trivial() || d.f.intersect(&d.gamma).members.len() != 1 {
            continue;
        }
        let a = cl.grouplike_group(d).unwrap().unwrap();
        let mp = cl.twisted_pair(d).unwrap();
        let (b, _) = mp.grouplikes().unwrap();
        assert!(isomorphic(&a, &b.shared()), "F={:?}", d.f.members);
    }
}
