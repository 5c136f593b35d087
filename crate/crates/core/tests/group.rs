use gth_core::group::*;
use gth_core::Error;

fn by_spec(s: &str) -> std::sync::Arc<GroupTable> {
    parse_spec(s).expect(s).shared()
}

#[test]
fn parse_and_axioms() {
    for s in [
        "C 1", "C 12", "D 4", "D 7", "S 3", "S 4", "A 4", "A 5", "C2 x C2", "C3 x C3 x C2",
        "C 7 : 2 : C 3", "G18", "c5:2:c20",
    ] {
        let g = parse_spec(s).expect(s);
        g.check_axioms().expect(s);
    }
    assert_eq!(parse_spec("C 6").unwrap().order, 6);
    assert_eq!(parse_spec("S 5").unwrap().order, 120);
    assert_eq!(parse_spec("C5 : 2 : C20").unwrap().order, 100);
    assert!(matches!(parse_spec("C x"), Err(Error::ParseSpec(_))));
    assert!(matches!(parse_spec("B 5"), Err(Error::ParseSpec(_))));
    assert!(matches!(parse_spec("C 6 extra"), Err(Error::ParseSpec(_))));
    assert!(matches!(parse_spec("C 999"), Err(Error::SizeLimit(_, _))));
}

#[test]
fn subgroup_counts() {
    // classical counts
    assert_eq!(all_subgroups(&by_spec("S 3")).len(), 6);
    assert_eq!(all_subgroups(&by_spec("S 4")).len(), 30);
    assert_eq!(all_subgroups(&by_spec("A 4")).len(), 10);
    assert_eq!(all_subgroups(&by_spec("D 6")).len(), 16);
    assert_eq!(all_subgroups(&by_spec("C 12")).len(), 6);
    assert_eq!(all_subgroups(&by_spec("C2 x C2 x C2")).len(), 16);
    assert_eq!(all_subgroups(&by_spec("G18")).len(), 14);
}

#[test]
fn subgroup_counts_s5() {
    assert_eq!(all_subgroups(&by_spec("S 5")).len(), 156);
}

#[test]
fn quotient_and_structure() {
    let g = by_spec("S 4");
    let subs = all_subgroups(&g);
    let normal: Vec<_> = subs.iter().filter(|s| s.is_normal()).collect();
    // 1, V4, A4, S4
    assert_eq!(normal.len(), 4);
    let v4 = normal.iter().find(|s| s.order() == 4).unwrap();
    let (q, proj) = v4.quotient().unwrap();
    assert_eq!(q.order, 6);
    assert!(!q.is_abelian());
    assert_eq!(proj.apply(0), 0);
    let derived = Subgroup::full(&g).commutator_subgroup();
    assert_eq!(derived.order(), 12);
    assert_eq!(Subgroup::full(&g).center().order(), 1);
}

#[test]
fn automorphism_counts() {
    assert_eq!(automorphisms(&by_spec("C 12")).len(), 4);
    assert_eq!(automorphisms(&by_spec("C2 x C2")).len(), 6);
    assert_eq!(automorphisms(&by_spec("C3 x C3")).len(), 48);
    assert_eq!(automorphisms(&by_spec("S 3")).len(), 6);
    assert_eq!(automorphisms(&by_spec("S 4")).len(), 24);
    assert_eq!(automorphisms(&by_spec("D 6")).len(), 12);
    assert_eq!(automorphisms(&by_spec("A 4")).len(), 24);
}

#[test]
fn isomorphism_examples() {
    assert!(isomorphic(&by_spec("D 3"), &by_spec("S 3")));
    assert!(isomorphic(&by_spec("C 7 : 2 : C 3"), &by_spec("C7:4:C3")));
    assert!(!isomorphic(&by_spec("C 4"), &by_spec("C2 x C2")));
    assert!(!isomorphic(&by_spec("D 6"), &by_spec("A 4")));
    assert!(!isomorphic(&by_spec("D 6"), &by_spec("C 12")));
}

#[test]
fn abelian_decomposition() {
    let g = by_spec("C2 x C12");
    let shape = AbelianShape::decompose(&g).unwrap();
    assert_eq!(shape.orders, vec![12, 2]);
    assert_eq!(shape.invariant_factors(), vec![2, 12]);
    assert_eq!(shape.exponent(), 12);
    // coords must reconstruct every element
    for x in 0..g.order {
        let mut acc = 0usize;
        for (j, &b) in shape.basis.iter().enumerate() {
            acc = g.mul(acc, g.pow(b, shape.coords[x][j] as i64));
        }
        assert_eq!(acc, x);
    }
    // characters form a group of the same order and separate points
    let dual = shape.character_group();
    assert_eq!(dual.order, 24);
    for x in 1..g.order {
        assert!((0..24).any(|chi| shape.char_eval(chi, x) != 0));
    }
    // character law chi(xy) = chi(x) chi(y)
    let n = shape.exponent();
    for chi in 0..24 {
        for x in 0..g.order {
            for y in 0..g.order {
                assert_eq!(
                    shape.char_eval(chi, g.mul(x, y)),
                    (shape.char_eval(chi, x) + shape.char_eval(chi, y)) % n
                );
            }
        }
    }
}

#[test]
fn conjugacy_and_double_cosets() {
    let g = by_spec("S 4");
    let classes = conjugacy_partition(&g);
    assert_eq!(classes.len(), 5);
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    assert_eq!(conjugacy_classes(&g).len(), 5);

    let subs = all_subgroups(&g);
    let a4 = subs.iter().find(|s| s.order() == 12).unwrap();
    let s3 = subs
        .iter()
        .find(|s| s.order() == 6 && !s.is_normal())
        .unwrap();
    let dcs = double_cosets(s3, a4);
    let total: usize = dcs.iter().map(|d| d.elements.len()).sum();
    assert_eq!(total, 24);
    for d in &dcs {
        assert!(d.elements.contains(&d.rep));
        assert_eq!(d.rep, d.elements[0]);
    }
}

#[test]
fn identify_names() {
    assert_eq!(identify(&by_spec("C 1")), "1");
    assert_eq!(identify(&by_spec("C 6")), "C6");
    assert_eq!(identify(&by_spec("C2 x C4")), "C2 x C4");
    assert_eq!(identify(&by_spec("C2 x C6")), "C2 x C6");
    assert_eq!(identify(&by_spec("D 4")), "D4");
    assert_eq!(identify(&by_spec("S 4")), "S4");
    assert_eq!(identify(&by_spec("A 4")), "A4");
    assert_eq!(identify(&by_spec("S 3")), "D3");
    assert_eq!(identify(&by_spec("A4 x C2")), "A4 x C2");
}
