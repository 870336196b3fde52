//! Catalog of (1,1)-tangle recipes and evaluation of the Links–Gould
//! invariant `LG^{2,1}(q, p)`.

pub mod catalog;

use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use rustc_hash::FxHashMap;

pub use catalog::{catalog, kt_pair, lookup, pretzel, pretzels_up_to, valid_names, LinkEntry};

use crate::error::{Error, Result};
use crate::polyring::{ExtScalar, LaurentPoly};
use crate::rmatrix::{explicit_caps_cups, explicit_sigma_bar, explicit_sigma_inverse};
use crate::tensornet::{Tensor, TensorLibrary};

pub type Poly = LaurentPoly<i128>;
pub type Ext = ExtScalar<i128>;

/// Checks every evaluation must pass before a polynomial is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub scalar_identity: bool,
    pub y_free: bool,
    pub even_exponents: bool,
    pub integer_coefficients: bool,
}

impl Diagnostics {
    pub fn all_pass(&self) -> bool {
        self.scalar_identity && self.y_free && self.even_exponents && self.integer_coefficients
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantResult {
    pub link: String,
    pub polynomial: Poly,
    pub diagnostics: Diagnostics,
}

/// The standard library: `R = σ̄`, `S = σ̄⁻¹` with the graded caps/cups.
pub fn standard_library() -> TensorLibrary<Ext> {
    TensorLibrary::new(explicit_sigma_bar(), explicit_sigma_inverse(), explicit_caps_cups())
}

/// Reads the scalar `λ` off `T = λ·I`, or reports the first failing check.
pub fn extract_scalar(name: &str, t: &Tensor<Ext>) -> Result<InvariantResult> {
    let diag = |what: &str| Error::Diagnostic { link: name.to_string(), what: what.to_string() };
    if t.rank() != 2 {
        return Err(diag(&format!("abstract tensor has rank {}", t.rank())));
    }
    let n = t.dim();
    let lambda = t.at(&[1, 1]);
    let mut scalar_identity = true;
    for i in 1..=n {
        for j in 1..=n {
            let v = t.at(&[i, j]);
            let want = if i == j { lambda.clone() } else { Ext::zero() };
            scalar_identity &= v == want;
        }
    }
    if !scalar_identity {
        return Err(diag("abstract tensor is not a scalar multiple of the identity"));
    }
    if !lambda.is_y_free() {
        return Err(diag("invariant retains the radical Y"));
    }
    let poly = lambda.base.clone();
    let d = Diagnostics {
        scalar_identity,
        y_free: true,
        even_exponents: poly.has_even_exponents(),
        integer_coefficients: poly.has_integer_coefficients(),
    };
    if !d.even_exponents {
        return Err(diag("odd exponent in invariant"));
    }
    if !d.integer_coefficients {
        return Err(diag("non-integer coefficient in invariant"));
    }
    Ok(InvariantResult { link: name.to_string(), polynomial: poly, diagnostics: d })
}

pub fn links_gould(entry: &LinkEntry, lib: &TensorLibrary<Ext>) -> Result<InvariantResult> {
    extract_scalar(&entry.name, &entry.abstract_tensor(lib)?)
}

/// Orientation flags: the invariant is sensitive to chirality iff it is
/// not palindromic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    Detected,
    NotDetected,
}

pub fn check_chirality(res: &InvariantResult) -> Chirality {
    if res.polynomial.is_palindromic() {
        Chirality::NotDetected
    } else {
        Chirality::Detected
    }
}

/// Symmetry under `p ↦ q⁻¹p⁻¹`; only meaningful for knots.
pub fn check_inversion_symmetry(entry: &LinkEntry, res: &InvariantResult) -> Result<bool> {
    if entry.components != 1 {
        return Err(Error::Invalid(format!("{} has {} components; inversion check needs a knot", entry.name, entry.components)));
    }
    Ok(res.polynomial == res.polynomial.involute_alpha())
}

/// Evaluates links against one shared library, caching results by name.
pub struct Evaluator {
    lib: TensorLibrary<Ext>,
    results: Mutex<FxHashMap<String, Arc<OnceLock<Result<InvariantResult>>>>>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new(standard_library())
    }
}

impl Evaluator {
    pub fn new(lib: TensorLibrary<Ext>) -> Self {
        Evaluator { lib, results: Mutex::new(FxHashMap::default()) }
    }

    pub fn library(&self) -> &TensorLibrary<Ext> {
        &self.lib
    }

    pub fn eval(&self, entry: &LinkEntry) -> Result<InvariantResult> {
        let cell = {
            let mut m = self.results.lock().expect("result cache poisoned");
            Arc::clone(m.entry(entry.name.clone()).or_default())
        };
        cell.get_or_init(|| links_gould(entry, &self.lib)).clone()
    }

    pub fn eval_all(&self, entries: &[LinkEntry]) -> Vec<Result<InvariantResult>> {
        entries.par_iter().map(|e| self.eval(e)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PretzelRow {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub inversion_symmetric: bool,
    pub chirality_detected: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PretzelReport {
    pub max: u32,
    pub expected: usize,
    pub rows: Vec<PretzelRow>,
}

impl PretzelReport {
    /// Every pretzel is evaluated, keeps the inversion symmetry (so their
    /// non-invertibility goes undetected) and is detected as chiral.
    pub fn pass(&self) -> bool {
        self.rows.len() == self.expected && self.rows.iter().all(|r| r.inversion_symmetric && r.chirality_detected)
    }
}

/// `(N−1)(N−3)(N−5)/48` pretzels for odd `N ≥ 7`.
pub fn expected_pretzel_count(max: u32) -> usize {
    let n = if max % 2 == 0 { max.saturating_sub(1) } else { max } as usize;
    if n < 7 {
        0
    } else {
        (n - 1) * (n - 3) * (n - 5) / 48
    }
}

pub fn scan_pretzels(ev: &Evaluator, max: u32) -> Result<PretzelReport> {
    let rows = pretzels_up_to(max)
        .into_par_iter()
        .map(|(p, q, r)| {
            let e = pretzel(p, q, r)?;
            let res = ev.eval(&e)?;
            Ok(PretzelRow {
                p,
                q,
                r,
                inversion_symmetric: check_inversion_symmetry(&e, &res)?,
                chirality_detected: check_chirality(&res) == Chirality::Detected,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PretzelReport { max, expected: expected_pretzel_count(max), rows })
}

pub fn manifest() -> serde_json::Value {
    serde_json::Value::Array(catalog().iter().map(LinkEntry::manifest).collect())
}
