use links_gould::error::Error;
use links_gould::linkcat::{
    catalog, check_chirality, check_inversion_symmetry, expected_pretzel_count, kt_pair, links_gould, lookup, pretzel,
    pretzels_up_to, scan_pretzels, standard_library, Chirality, Evaluator,
};
use links_gould::polyring::format::{to_plain, QP};
use links_gould::tensornet::{Order, Tensor};

#[test]
fn every_catalog_link_passes_diagnostics() {
    let ev = Evaluator::default();
    for e in catalog() {
        let t = e.abstract_tensor(ev.library()).unwrap();
        assert_eq!((t.rank(), t.dim()), (2, 4));
        let r = ev.eval(&e).unwrap();
        assert!(r.diagnostics.all_pass(), "{}", e.name);
        for i in 1..=4 {
            assert_eq!(t.at(&[i, i]).base, r.polynomial, "{}", e.name);
        }
    }
}

#[test]
fn unknot_tangle_is_the_identity() {
    let lib = standard_library();
    let t = lookup("unknot").unwrap().abstract_tensor(&lib).unwrap();
    assert_eq!(t, Tensor::identity(4));
    assert_eq!(to_plain(&links_gould(&lookup("0_1").unwrap(), &lib).unwrap().polynomial, QP), "1");
}

#[test]
fn palindromic_exactly_for_amphichiral_entries() {
    let ev = Evaluator::default();
    let mut pal = Vec::new();
    for e in catalog() {
        let r = ev.eval(&e).unwrap();
        let detected = check_chirality(&r) == Chirality::Detected;
        assert_eq!(detected, !e.amphichiral, "{}", e.name);
        if e.components == 1 && e.name != "0_1" && !detected {
            pal.push(e.name.clone());
        }
    }
    assert_eq!(pal, ["4_1", "6_3", "8_17"]);
}

#[test]
fn knots_keep_the_inversion_symmetry() {
    let ev = Evaluator::default();
    for e in catalog() {
        let r = ev.eval(&e).unwrap();
        match e.components {
            1 => assert!(check_inversion_symmetry(&e, &r).unwrap(), "{}", e.name),
            _ => assert!(matches!(check_inversion_symmetry(&e, &r), Err(Error::Invalid(_)))),
        }
    }
}

#[test]
fn kt_mutants_agree_down_to_the_differing_block() {
    let lib = standard_library();
    let (kt, kti) = kt_pair();
    let a = kt.intermediate("KTA", &lib).unwrap();
    let b = kti.intermediate("KTA'", &lib).unwrap();
    assert_eq!(a, b);
    assert_eq!(kt.defs[1..], kti.defs[1..]);
    assert_eq!(links_gould(&kt, &lib).unwrap().polynomial, links_gould(&kti, &lib).unwrap().polynomial);
}

#[test]
fn reflection_inverts_q_and_p() {
    let lib = standard_library();
    let mir = lib.mirrored();
    for e in catalog() {
        let a = links_gould(&e, &lib).unwrap().polynomial;
        let b = links_gould(&e, &mir).unwrap().polynomial;
        assert_eq!(b, a.involute_q(), "{}", e.name);
    }
}

#[test]
fn contraction_order_and_caching_are_invisible() {
    let greedy = standard_library();
    let seq = standard_library().with_order(Order::Sequential).without_cache();
    for e in catalog() {
        assert_eq!(e.abstract_tensor(&greedy).unwrap(), e.abstract_tensor(&seq).unwrap(), "{}", e.name);
    }
}

#[test]
fn small_pretzels() {
    let ev = Evaluator::default();
    for (max, n) in [(7, 1), (9, 4), (11, 10), (13, 20)] {
        assert_eq!(pretzels_up_to(max).len(), n);
        assert_eq!(expected_pretzel_count(max), n);
    }
    assert_eq!(pretzels_up_to(7), [(3, 5, 7)]);
    let rep = scan_pretzels(&ev, 9).unwrap();
    assert!(rep.pass());
    assert_eq!(rep.rows.len(), 4);
    let e = pretzel(3, 5, 7).unwrap();
    assert_eq!(e.writhe, 15);
    let r = ev.eval(&e).unwrap();
    assert!(check_inversion_symmetry(&e, &r).unwrap());
    assert_eq!(check_chirality(&r), Chirality::Detected);
}

#[test]
fn pretzel_constraints() {
    for (p, q, r) in [(3, 3, 5), (3, 5, 4), (1, 3, 5), (5, 3, 7), (3, 7, 5)] {
        assert!(pretzel(p, q, r).is_err(), "{p},{q},{r}");
    }
    assert_eq!(lookup("pretzel 3,5,7").unwrap().name, "P(3,5,7)");
    assert_eq!(lookup("P(3,7,9)").unwrap().writhe, 19);
}

#[test]
fn names_and_table_data() {
    let got: Vec<(String, i32, bool, Option<bool>, u32)> =
        catalog().into_iter().map(|e| (e.name, e.writhe, e.amphichiral, e.invertible, e.components)).collect();
    let want: Vec<(&str, i32, bool, Option<bool>, u32)> = vec![
        ("0_1", 0, true, Some(true), 1),
        ("2^2_1", 2, false, Some(true), 2),
        ("3_1", 3, false, Some(true), 1),
        ("4_1", 0, true, Some(true), 1),
        ("5_1", 5, false, Some(true), 1),
        ("5_2", 5, false, Some(true), 1),
        ("5^2_1", 2, false, Some(true), 2),
        ("6_1", -2, false, Some(true), 1),
        ("6_2", 2, false, Some(true), 1),
        ("6_3", 0, true, Some(true), 1),
        ("7_1", 7, false, Some(true), 1),
        ("7_2", 7, false, Some(true), 1),
        ("8_17", 0, true, Some(false), 1),
        ("9_42", -1, false, Some(true), 1),
        ("10_48", 0, false, Some(true), 1),
        ("KT", -2, false, None, 1),
        ("KT'", -2, false, None, 1),
    ];
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(&want) {
        assert_eq!((g.0.as_str(), g.1, g.2, g.3, g.4), *w);
    }
    for alias in ["unknot", "Trefoil", "hopf", "whitehead", "figure-eight", "KTI"] {
        assert!(lookup(alias).is_ok(), "{alias}");
    }
    match lookup("nosuchknot") {
        Err(Error::UnknownLink { valid, .. }) => assert!(valid.contains("8_17") && valid.contains("trefoil")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn recipes_print_back_to_their_definitions() {
    let e = lookup("5^2_1").unwrap();
    assert_eq!(
        e.to_string(),
        "W[c,j,i,d] = S^2[c,j,e,f] Rd^2[g,h,i,d] Op[e,g] Um[f,h]\nT = RrRl[a,i,y,b] W[c,x,i,d] Op[c,a] Up[d,b]\n"
    );
}
