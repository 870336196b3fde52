#![allow(dead_code)]

use links_gould::polyring::format::{parse_plain, QP, T};
use links_gould::polyring::LaurentPoly;

pub type Poly = LaurentPoly<i128>;

fn load(file: &str) -> Vec<(String, String)> {
    let path = format!("{}/tests/fixtures/{file}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{path}: {e}"))
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (k, v) = l.split_once('\t').expect("name<TAB>polynomial");
            (k.to_string(), v.to_string())
        })
        .collect()
}

/// Printed LG rows, `(link, polynomial)`, in table order.
pub fn lg_table() -> Vec<(String, Poly)> {
    load("lg_table.tsv").into_iter().map(|(k, v)| (k, parse_plain(&v, QP, 2).unwrap())).collect()
}

/// Printed Jones rows on the quarter grid in `t`.
pub fn jones_table() -> Vec<(String, Poly)> {
    load("jones_table.tsv").into_iter().map(|(k, v)| (k, parse_plain(&v, T, 4).unwrap())).collect()
}

/// Printed rows carrying a single-monomial exponent-sign slip: `(link,
/// printed term, intended term)`.
pub const SIGN_SLIPS: &[(&str, &str, &str)] = &[("5_2", "-5 p^2", "-5 p^-2"), ("7_1", "-p^10 q^2", "-p^-10 q^2")];

#[derive(Debug, PartialEq, Eq)]
pub enum RowVerdict {
    Verbatim,
    /// Differs from the printed row only by one listed sign slip, and the
    /// printed row (unlike the computed one) breaks `p ↦ q⁻¹p⁻¹` symmetry.
    SignSlip,
    Mismatch,
}

pub fn judge_lg_row(link: &str, printed: &Poly, computed: &Poly) -> RowVerdict {
    if printed == computed {
        return RowVerdict::Verbatim;
    }
    let Some((_, bad, good)) = SIGN_SLIPS.iter().find(|(l, _, _)| *l == link) else {
        return RowVerdict::Mismatch;
    };
    let bad: Poly = parse_plain(bad, QP, 2).unwrap();
    let good: Poly = parse_plain(good, QP, 2).unwrap();
    let corrected = printed.sub(&bad).add(&good);
    let printed_breaks = *printed != printed.involute_alpha();
    let computed_keeps = *computed == computed.involute_alpha();
    if corrected == *computed && printed_breaks && computed_keeps {
        RowVerdict::SignSlip
    } else {
        RowVerdict::Mismatch
    }
}
