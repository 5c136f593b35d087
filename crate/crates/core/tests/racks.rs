use gth_core::group::GroupTable;
use gth_core::hopf::bosonization_dimension;
use gth_core::racks::*;

#[test]
fn catalog_racks_pass_axioms_and_are_quandles() {
    for e in catalog() {
        let r = build_rack(e.rack_name).unwrap();
        r.check_axioms().unwrap();
        assert!(r.is_quandle(), "{}", e.rack_name);
    }
}

#[test]
fn dihedral_rack_is_transpositions_of_s3() {
    let d3 = dihedral_rack(3).unwrap();
    let s3 = GroupTable::symmetric(3).unwrap().shared();
    let t = (0..6).find(|&e| s3.order_of(e) == 2).unwrap();
    let o23 = conj_class_rack(&s3, t).unwrap();
    assert_eq!(o23.size, 3);
    assert!(rack_iso(&d3, &o23).unwrap().is_some());
}

#[test]
fn affine_racks() {
    let q52 = q_rack(5, 2).unwrap();
    assert_eq!(q52.size, 5);
    // trivial T = id gives x |> y = y
    let c4 = GroupTable::cyclic(4).unwrap().shared();
    let t = gth_core::group::GroupMap::identity(&c4);
    let r = affine_rack(&c4, &t).unwrap();
    for x in 0..4 {
        for y in 0..4 {
            assert_eq!(r.op[x][y], y);
        }
    }
    // Q(5,2) is a conjugacy class rack of C5 : 2 : C4
    let g = GroupTable::metacyclic(5, 2, 4, "C5:2:C4", "t").unwrap().shared();
    let found = (0..g.order).any(|e| {
        let cr = conj_class_rack(&g, e).unwrap();
        cr.size == 5 && rack_iso(&q52, &cr).unwrap().is_some()
    });
    assert!(found);
}

#[test]
fn catalog_realizations_exist() {
    for e in catalog() {
        let (_, reps) = realizations(&e).unwrap();
        assert!(!reps.is_empty(), "no realizing class for {}", e.rack_name);
    }
}

#[test]
fn bosonization_dimensions() {
    let expect = [
        ("D3", "-1", 216u64),
        ("O(4,2)", "-1", 13824),
        ("Q(5,2)", "-1", 128000),
        ("O(5,2)", "-1", 995328000),
        ("T", "-1", 1728),
        ("Q(7,3)", "-1", 13716864),
    ];
    for (name, coc, dim) in expect {
        let e = lookup(name, coc).unwrap();
        assert_eq!(bosonization_dimension(e.nichols_dim, e.hopf_dim), dim);
    }
    assert!(lookup("D3", "chi").is_err());
}

#[test]
fn rack_iso_negative_and_reflexive() {
    let q52 = q_rack(5, 2).unwrap();
    let q53 = q_rack(5, 3).unwrap();
    assert!(rack_iso(&q52, &q52).unwrap().is_some());
    // Q(5,2) and Q(5,3) are distinct racks (mutually dual, not isomorphic)
    assert!(rack_iso(&q52, &q53).unwrap().is_none());
    let d12 = dihedral_rack(12).unwrap();
    assert!(matches!(
        rack_iso(&d12, &d12),
        Ok(Some(_)) | Err(gth_core::Error::SizeLimit(_, _))
    ));
}
