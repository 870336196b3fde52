//! Acceptance run: one PASS/FAIL line per criterion; exits nonzero if any fails.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{jones_table, judge_lg_row, lg_table, RowVerdict};
use links_gould::bracket::{bracket_library, jones};
use links_gould::linkcat::{
    catalog, check_chirality, check_inversion_symmetry, expected_pretzel_count, kt_pair, lookup, pretzel,
    pretzels_up_to, scan_pretzels, Chirality, Evaluator,
};
use links_gould::polyring::LaurentPoly;
use links_gould::rmatrix::verify::{skein_residual, ybe_residual};
use links_gould::rmatrix::{
    explicit_caps_cups, explicit_sigma, explicit_sigma_bar, explicit_sigma_inverse, run_suite,
};
use links_gould::tensornet::combinators::einsum;
use links_gould::tensornet::Tensor;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn lg_table_criterion() -> Outcome {
    let ev = Evaluator::default();
    let start = Instant::now();
    let (mut verbatim, mut slips, mut bad) = (0, Vec::new(), Vec::new());
    let mut slowest = Duration::ZERO;
    for (name, printed) in lg_table() {
        let t = Instant::now();
        let r = match ev.eval(&lookup(&name).unwrap()) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("{name}: {e}"));
                continue;
            }
        };
        slowest = slowest.max(t.elapsed());
        match judge_lg_row(&name, &printed, &r.polynomial) {
            RowVerdict::Verbatim => verbatim += 1,
            RowVerdict::SignSlip => slips.push(name),
            RowVerdict::Mismatch => bad.push(name),
        }
    }
    let (kt, kti) = kt_pair();
    let kt_same = ev.eval(&kt).map(|r| r.polynomial) == ev.eval(&kti).map(|r| r.polynomial);
    let total = start.elapsed();
    let timely = total < Duration::from_secs(300) && slowest < Duration::from_secs(60);
    outcome(
        bad.is_empty() && kt_same && timely,
        format!(
            "{verbatim} rows verbatim, {} printed rows with a single-term exponent-sign slip corrected ({}), \
             mismatches {:?}, KT' = KT {kt_same}; total {}, slowest link {}",
            slips.len(),
            slips.join(", "),
            bad,
            secs(total),
            secs(slowest)
        ),
    )
}

fn jones_criterion() -> Outcome {
    let lib = bracket_library();
    let table = jones_table();
    let mut bad = Vec::new();
    let mut n = 0;
    for e in catalog() {
        let key = if e.name == "KT'" { "KT" } else { e.name.as_str() };
        let want = if e.name == "0_1" {
            Some(LaurentPoly::one())
        } else {
            table.iter().find(|(k, _)| k == key).map(|(_, p)| p.clone())
        };
        match (jones(&e, &lib), want) {
            (Ok(v), Some(w)) if v == w => n += 1,
            _ => bad.push(e.name.clone()),
        }
    }
    outcome(bad.is_empty() && n == 17, format!("{n}/17 catalog entries match (KT' shares the KT row), mismatches {bad:?}"))
}

fn rmatrix_criterion() -> Outcome {
    let start = Instant::now();
    let (sb, si) = (explicit_sigma_bar(), explicit_sigma_inverse());
    let ybe = ybe_residual(&sb).map(|t| t.nnz()).unwrap_or(usize::MAX);
    let skein = skein_residual(&sb).nnz();
    let id = Tensor::identity4(4);
    let inv = sb.compose(&si).sub(&id).nnz();
    let caps = explicit_caps_cups();
    let x = Arc::new(sb.clone());
    let lp = einsum("X[y,x,a,b] Um[b,a]", &["x", "y"], &[("X", &x), ("Um", &caps.um)])
        .map(|t| t == Tensor::identity(4))
        .unwrap_or(false);
    let counts = (explicit_sigma().nnz(), si.nnz());
    let took = start.elapsed();
    let pass = ybe == 0 && skein == 0 && inv == 0 && lp && counts == (26, 26) && took < Duration::from_secs(120);
    outcome(
        pass,
        format!(
            "YBE residual nonzero {ybe}/4096, skein residual nonzero {skein}, σ̄σ̄⁻¹−I nonzero {inv}, loop = δ {lp}, \
             nnz(σ), nnz(σ̄⁻¹) = {counts:?}; {}",
            secs(took)
        ),
    )
}

fn suites(names: &[&str], points: usize, seed: u64) -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in names {
        match run_suite(n, points, seed) {
            Ok(r) => {
                pass &= r.pass;
                parts.push(format!("{n} {} ({} pts, {} nonzero)", if r.pass { "ok" } else { "FAIL" }, r.points, r.residual_nonzero_entries));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{n} error: {e}"));
            }
        }
    }
    (pass, parts.join("; "))
}

fn reconstruction_criterion() -> Outcome {
    let (pass, detail) = suites(&["sigma-match", "projectors", "limit"], 20, 2024);
    outcome(pass, detail)
}

fn trig_criterion() -> Outcome {
    // Each sample also checks the 36-entry count and ten closed-form entries.
    let (pass, detail) = suites(&["spectral"], 10, 2024);
    outcome(pass, detail)
}

fn proposition_criterion() -> Outcome {
    let ev = Evaluator::default();
    let mut issues = Vec::new();
    let mut palindromic = Vec::new();
    for e in catalog() {
        let r = match ev.eval(&e) {
            Ok(r) => r,
            Err(err) => {
                issues.push(format!("{}: {err}", e.name));
                continue;
            }
        };
        if !r.diagnostics.all_pass() {
            issues.push(format!("{} diagnostics", e.name));
        }
        if e.components == 1 {
            if check_chirality(&r) == Chirality::NotDetected && e.name != "0_1" {
                palindromic.push(e.name.clone());
            }
            if !check_inversion_symmetry(&e, &r).unwrap_or(false) {
                issues.push(format!("{} inversion", e.name));
            }
        }
    }
    for (p, q, r) in pretzels_up_to(9) {
        let e = pretzel(p, q, r).unwrap();
        match ev.eval(&e) {
            Ok(res) if check_inversion_symmetry(&e, &res).unwrap_or(false) => {}
            _ => issues.push(format!("{} inversion", e.name)),
        }
    }
    let (kt, kti) = kt_pair();
    if ev.eval(&kt).map(|r| r.polynomial) != ev.eval(&kti).map(|r| r.polynomial) {
        issues.push("LG(KT) ≠ LG(KT')".into());
    }
    let pal_ok = palindromic == ["4_1", "6_3", "8_17"];
    outcome(
        pal_ok && issues.is_empty(),
        format!("palindromic knots {palindromic:?}, issues {issues:?}"),
    )
}

fn pretzel_scan_criterion() -> Outcome {
    let ev = Evaluator::default();
    let start = Instant::now();
    let rep = match scan_pretzels(&ev, 13) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("scan failed: {e}")),
    };
    let took = start.elapsed();
    let formula = expected_pretzel_count(13);
    let eleven = pretzels_up_to(11).len();
    outcome(
        rep.pass() && rep.rows.len() == formula && took < Duration::from_secs(600),
        format!(
            "max 13: {} pretzels (formula {formula}; max 11 gives {eleven}), all inversion-symmetric and chiral {}; {}",
            rep.rows.len(),
            rep.pass(),
            secs(took)
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("golden LG table", lg_table_criterion),
        ("golden Jones table", jones_criterion),
        ("R-matrix suite", rmatrix_criterion),
        ("reconstruction suite", reconstruction_criterion),
        ("trigonometric suite", trig_criterion),
        ("proposition suite", proposition_criterion),
        ("pretzel scan", pretzel_scan_criterion),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.pass);
        println!("criterion {} [{name}]: {} — {}", k + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
