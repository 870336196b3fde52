mod common;

use common::{jones_table, judge_lg_row, lg_table, RowVerdict, SIGN_SLIPS};
use links_gould::bracket::{bracket_library, jones};
use links_gould::linkcat::{catalog, kt_pair, lookup, Evaluator};
use links_gould::polyring::format::{to_plain, QP};

#[test]
fn lg_rows_match_printed_table() {
    let ev = Evaluator::default();
    let mut slips = Vec::new();
    for (name, printed) in lg_table() {
        let r = ev.eval(&lookup(&name).unwrap()).unwrap();
        match judge_lg_row(&name, &printed, &r.polynomial) {
            RowVerdict::Verbatim => {}
            RowVerdict::SignSlip => slips.push(name),
            RowVerdict::Mismatch => panic!("{name}: computed {}", to_plain(&r.polynomial, QP)),
        }
    }
    let expected: Vec<&str> = SIGN_SLIPS.iter().map(|s| s.0).collect();
    assert_eq!(slips, expected);
}

#[test]
fn kt_mutant_shares_the_kt_row() {
    let ev = Evaluator::default();
    let (kt, kti) = kt_pair();
    let (a, b) = (ev.eval(&kt).unwrap().polynomial, ev.eval(&kti).unwrap().polynomial);
    assert_eq!(a, b);
    let row = lg_table().into_iter().find(|(n, _)| n == "KT").unwrap().1;
    assert_eq!(a, row);
    assert_eq!(a.coeff_nat(0, 0), -23);
}

#[test]
fn frozen_corrected_rows() {
    let ev = Evaluator::default();
    let f = |n: &str| to_plain(&ev.eval(&lookup(n).unwrap()).unwrap().polynomial, QP);
    assert_eq!(
        f("5_2"),
        "3 + 3 p^-4 - 5 p^-2 + 10 q^2 + p^-4 q^2 - 6 p^-2 q^2 - 5 p^2 q^2 + 4 q^4 - p^-2 q^4 - 6 p^2 q^4 \
         + 3 p^4 q^4 - p^2 q^6 + p^4 q^6"
    );
    assert!(f("7_1").starts_with("1 + p^-12 - p^-10 + p^-8 - p^-6 + p^-4 - p^-2 + 2 q^2 - p^-10 q^2 + 2 p^-8 q^2"));
}

#[test]
fn jones_rows_match_printed_table() {
    let lib = bracket_library();
    let table = jones_table();
    let row = |n: &str| table.iter().find(|(k, _)| k == n).map(|(_, p)| p.clone());
    let mut checked = 0;
    for e in catalog() {
        let v = jones(&e, &lib).unwrap();
        let want = match e.name.as_str() {
            "0_1" => links_gould::polyring::LaurentPoly::one(),
            "KT'" => row("KT").unwrap(),
            n => row(n).unwrap_or_else(|| panic!("no printed Jones row for {n}")),
        };
        assert_eq!(v, want, "{}", e.name);
        checked += 1;
    }
    assert_eq!(checked, 17);
}

#[test]
fn jones_exponent_grid_follows_component_count() {
    let lib = bracket_library();
    for e in catalog() {
        let v = jones(&e, &lib).unwrap();
        assert_eq!(v.denom(), 4);
        let half = v.terms().iter().all(|((a, _), _)| a % 2 == 0);
        let whole = v.terms().iter().all(|((a, _), _)| a % 4 == 0);
        assert!(half, "{}: quarter-integer exponent", e.name);
        assert_eq!(whole, e.components % 2 == 1, "{}", e.name);
    }
}
