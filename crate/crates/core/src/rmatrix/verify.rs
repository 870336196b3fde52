//! Exact checks of the braid-generator data: Yang–Baxter (symbolic and
//! graded at sample points), skein relation, inverse, caps/cups, projector
//! algebra, the classical limit, and the spectral Yang–Baxter equation.

use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::explicit::{
    explicit_caps_cups, explicit_sigma, explicit_sigma_bar, explicit_sigma_inverse, graded_permutation, parity,
    ungrade, Ext, Poly,
};
use super::basis::{basis_unnormalized, norm_squared};
use super::projector::{admissible, projector, random_points, sigma_constructed, trig_r};
use super::sampled::{SampledExt, SqrtContext};
use crate::error::{Error, Result};
use crate::polyring::{RationalPoint, Ring};
use crate::tensornet::combinators::einsum;
use crate::tensornet::{Caps, Tensor};

const SIX: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// The residual `Σ_{ijk} r_{aibj} r_{jkcf} r_{idke} − r_{bjci} r_{adjk} r_{keif}`
/// over all `M⁶` index choices (the classic component-wise checker).
pub fn ybe_residual<S: Ring>(r: &Tensor<S>) -> Result<Tensor<S>> {
    let r = Arc::new(r.clone());
    let bind = [("R1", &r), ("R2", &r), ("R3", &r)];
    let lhs = einsum("R1[a,i,b,j] R2[j,k,c,f] R3[i,d,k,e]", &SIX, &bind)?;
    let rhs = einsum("R1[b,j,c,i] R2[a,d,j,k] R3[k,e,i,f]", &SIX, &bind)?;
    Ok(lhs.sub(&rhs))
}

pub fn verify_yang_baxter<S: Ring>(r: &Tensor<S>) -> bool {
    ybe_residual(r).map(|t| t.is_zero()).unwrap_or(false)
}

/// Operators on `V⊗V⊗V` as rank-6 tensors `[i₁,j₁,i₂,j₂,i₃,j₃]` (coefficient
/// of `e^{i₁}_{j₁} ⊗ e^{i₂}_{j₂} ⊗ e^{i₃}_{j₃}`).
fn embed12<S: Ring>(x: &Tensor<S>) -> Result<Tensor<S>> {
    let id = Arc::new(Tensor::identity(x.dim()));
    einsum("X[a,b,c,d] I[e,f]", &SIX, &[("X", &Arc::new(x.clone())), ("I", &id)])
}

fn embed23<S: Ring>(x: &Tensor<S>) -> Result<Tensor<S>> {
    let id = Arc::new(Tensor::identity(x.dim()));
    einsum("I[a,b] X[c,d,e,f]", &SIX, &[("X", &Arc::new(x.clone())), ("I", &id)])
}

fn compose6<S: Ring>(x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
    einsum(
        "A[a,m,c,n,e,o] B[m,b,n,d,o,f]",
        &SIX,
        &[("A", &Arc::new(x.clone())), ("B", &Arc::new(y.clone()))],
    )
}

/// `(σ⊗I)(I⊗σ)(σ⊗I) − (I⊗σ)(σ⊗I)(I⊗σ)` with ordinary matrix products.
pub fn braid_residual<S: Ring>(x: &Tensor<S>) -> Result<Tensor<S>> {
    let (a, b) = (embed12(x)?, embed23(x)?);
    Ok(compose6(&compose6(&a, &b)?, &a)?.sub(&compose6(&compose6(&b, &a)?, &b)?))
}

/// Product in the graded tensor algebra:
/// `(x₁⊗x₂⊗x₃)(y₁⊗y₂⊗y₃) = (−1)^{|x₂||y₁| + |x₃||y₁| + |x₃||y₂|} x₁y₁⊗x₂y₂⊗x₃y₃`.
pub fn graded_compose6<S: Ring>(x: &Tensor<S>, y: &Tensor<S>) -> Tensor<S> {
    let mut by_upper: FxHashMap<[usize; 3], Vec<(Vec<usize>, &S)>> = FxHashMap::default();
    for (k, v) in y.entries() {
        by_upper.entry([k[0], k[2], k[4]]).or_default().push((k, v));
    }
    let deg = |i: usize, j: usize| (parity(i) + parity(j)) as u32;
    let mut out = Tensor::new(x.dim(), 6);
    for (kx, vx) in x.entries() {
        let Some(ys) = by_upper.get(&[kx[1], kx[3], kx[5]]) else { continue };
        let (x2, x3) = (deg(kx[2], kx[3]), deg(kx[4], kx[5]));
        for (ky, vy) in ys {
            let (y1, y2) = (deg(ky[0], ky[1]), deg(ky[2], ky[3]));
            let mut v = vx.mul(vy);
            if (x2 * y1 + x3 * y1 + x3 * y2) % 2 == 1 {
                v = v.neg();
            }
            out.add_at(&[kx[0], ky[1], kx[2], ky[3], kx[4], ky[5]], &v);
        }
    }
    out
}

/// Yang–Baxter residual of a graded generator using graded products.
pub fn graded_braid_residual<S: Ring>(x: &Tensor<S>) -> Result<Tensor<S>> {
    let (a, b) = (embed12(x)?, embed23(x)?);
    let l = graded_compose6(&graded_compose6(&a, &b), &a);
    let r = graded_compose6(&graded_compose6(&b, &a), &b);
    Ok(l.sub(&r))
}

fn ext(p: Poly) -> Ext {
    Ext::from_base(p)
}

/// `q⁻¹σ³ + (q⁻¹ − p⁻²q⁻¹ − p²q)σ² + (q − p⁻²q⁻¹ − p²q)σ + qI`.
pub fn skein_residual(s: &Tensor<Ext>) -> Tensor<Ext> {
    let m = Poly::qp;
    let mid = m(1, -1, -2).add(&m(1, 1, 2));
    let s2 = s.compose(s);
    let s3 = s2.compose(s);
    s3.scale(&ext(m(1, -1, 0)))
        .add(&s2.scale(&ext(m(1, -1, 0).sub(&mid))))
        .add(&s.scale(&ext(m(1, 1, 0).sub(&mid))))
        .add(&Tensor::identity4(4).scale(&ext(m(1, 1, 0))))
}

pub fn verify_skein(s: &Tensor<Ext>) -> bool {
    skein_residual(s).is_zero()
}

/// `Σ_{a,b} X^{ya}_{xb} (℧)^{ba} − δ^y_x`: closing the right strand of a
/// crossing with `Ω⁺ = I` and the cup `u`.
pub fn cap_loop_residual<S: Ring>(x: &Tensor<S>, u: &Arc<Tensor<S>>) -> Result<Tensor<S>> {
    let t = einsum("X[y,x,a,b] U[b,a]", &["x", "y"], &[("X", &Arc::new(x.clone())), ("U", u)])?;
    Ok(t.sub(&Tensor::identity(x.dim())))
}

/// `Σ_{a,b} (℧)^{ab} X^{ax}_{by} − δ^y_x`: closing the left strand instead.
pub fn cap_loop_left_residual<S: Ring>(x: &Tensor<S>, u: &Arc<Tensor<S>>) -> Result<Tensor<S>> {
    let t = einsum("X[a,b,y,x] U[b,a]", &["x", "y"], &[("X", &Arc::new(x.clone())), ("U", u)])?;
    Ok(t.sub(&Tensor::identity(x.dim())))
}

fn cap_pairs_residual<S: Ring>(caps: &Caps<S>) -> Result<usize> {
    let mut n = 0;
    for (o, u) in [(&caps.om, &caps.um), (&caps.op, &caps.up)] {
        let t = einsum("O[a,m] U[m,b]", &["a", "b"], &[("O", o), ("U", u)])?;
        n += t.sub(&Tensor::identity(caps.dim())).nnz();
    }
    Ok(n)
}

/// Cap-loop identities for both `σ̄` and `σ̄⁻¹`: the right strand closes
/// with `℧⁻`, the left strand with `Ω⁻`; plus `Ω±℧± = I`.
pub fn verify_cap_loop() -> bool {
    cap_loop_nonzero().map(|n| n == 0).unwrap_or(false)
}

fn cap_loop_nonzero() -> Result<usize> {
    let caps = explicit_caps_cups();
    let mut n = cap_pairs_residual(&caps)?;
    for x in [explicit_sigma_bar(), explicit_sigma_inverse()] {
        n += cap_loop_residual(&x, &caps.um)?.nnz() + cap_loop_left_residual(&x, &caps.om)?.nnz();
    }
    Ok(n)
}

/// The graded `σ` with every coefficient evaluated at a sample point.
pub fn sample_tensor(t: &Tensor<Ext>, ctx: &Arc<SqrtContext>) -> Result<Tensor<SampledExt>> {
    let mut out = Tensor::new(t.dim(), t.rank());
    for (k, v) in t.entries() {
        out.set(&k, SampledExt::from_ext(v, ctx)?);
    }
    Ok(out)
}

/// Result of one named check, serialized as JSON.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub check: String,
    pub points: usize,
    pub pass: bool,
    pub residual_nonzero_entries: usize,
}

impl VerifyReport {
    fn new(check: &str, points: usize, residual: usize) -> Self {
        VerifyReport { check: check.into(), points, pass: residual == 0, residual_nonzero_entries: residual }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.check,
            "points": self.points,
            "pass": self.pass,
            "residual_nonzero_entries": self.residual_nonzero_entries,
        })
    }
}

pub const SUITES: [&str; 8] = ["ybe", "skein", "inverse", "projectors", "caps", "limit", "sigma-match", "spectral"];

fn per_point(points: &[RationalPoint], f: impl Fn(&Arc<SqrtContext>) -> Result<usize> + Sync) -> Result<usize> {
    points
        .par_iter()
        .map(|pt| f(&admissible(pt)?))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().sum())
}

/// Projector algebra at one point: idempotence, orthogonality, and the
/// leading entries of `P₁`, `P₃`.
fn projector_nonzero(ctx: &Arc<SqrtContext>) -> Result<usize> {
    let (p1, p3) = (ungrade(&projector(1, ctx)?), ungrade(&projector(3, ctx)?));
    let id = Tensor::<SampledExt>::identity4(4);
    let p2 = id.sub(&p1).sub(&p3);
    let mut n = p1.compose(&p1).sub(&p1).nnz() + p3.compose(&p3).sub(&p3).nnz();
    n += p1.compose(&p3).nnz() + p3.compose(&p1).nnz();
    n += p2.compose(&p2).sub(&p2).nnz();
    n += p1.at(&[1, 1, 1, 1]).sub(&SampledExt::one()).is_zero().then_some(0).unwrap_or(1);
    n += p3.at(&[4, 4, 4, 4]).sub(&SampledExt::one()).is_zero().then_some(0).unwrap_or(1);
    Ok(n + norm_nonzero(ctx)?)
}

/// `⟨Ψ¹₄|Ψ¹₄⟩ = [2α+1]_q(q^α + q^{−α})`, `⟨Ψ³₁|Ψ³₁⟩ = [2α+1]_q(q^{α+1} + q^{−α−1})`.
fn norm_nonzero(ctx: &Arc<SqrtContext>) -> Result<usize> {
    let pt = &ctx.point;
    let b = super::sampled::qbracket(pt, 2, 2, 0)?;
    let q = |a, h| super::sampled::qpow(pt, a, h, 0);
    let want14 = SampledExt::rational(&b * (q(1, 0)? + q(-1, 0)?));
    let want31 = SampledExt::rational(&b * (q(1, 2)? + q(-1, -2)?));
    let got14 = norm_squared(&basis_unnormalized(1, 4, ctx)?);
    let got31 = norm_squared(&basis_unnormalized(3, 1, ctx)?);
    Ok(usize::from(got14 != want14) + usize::from(got31 != want31))
}

/// Entry count and closed-form spot values of `Ř(u)` at one point.
fn trig_entries_nonzero(ctx: &Arc<SqrtContext>) -> Result<usize> {
    let ru = trig_r(ctx)?;
    let mut bad = usize::from(ru.nnz() != 36);
    for (slot, v) in super::trig::spot_values(ctx)? {
        bad += usize::from(ru.at(&slot) != v);
    }
    Ok(bad)
}

fn eigen_nonzero(ctx: &Arc<SqrtContext>) -> Result<usize> {
    let pt = &ctx.point;
    let s = ungrade(&sigma_constructed(ctx)?);
    let id = Tensor::<SampledExt>::identity4(4);
    let shift = |c: num_rational::BigRational| s.sub(&id.scale(&SampledExt::rational(c)));
    let a = shift(super::sampled::qpow(pt, -2, 0, 0)?);
    let b = s.add(&id);
    let c = shift(super::sampled::qpow(pt, 2, 4, 0)?);
    Ok(a.compose(&b).compose(&c).nnz())
}

fn sigma_match_nonzero(ctx: &Arc<SqrtContext>) -> Result<usize> {
    let built = sigma_constructed(ctx)?;
    let explicit = sample_tensor(&explicit_sigma(), ctx)?;
    Ok(built.sub(&explicit).nnz())
}

fn graded_ybe_nonzero(ctx: &Arc<SqrtContext>) -> Result<usize> {
    Ok(graded_braid_residual(&sample_tensor(&explicit_sigma(), ctx)?)?.nnz())
}

/// `Ř₁₂(u)Ř₂₃(u+v)Ř₁₂(v) = Ř₂₃(v)Ř₁₂(u+v)Ř₂₃(u)` with `q^{(u+v)/2} = w_u w_v`.
pub fn spectral_nonzero(pt: &RationalPoint, wu: &num_rational::BigRational, wv: &num_rational::BigRational) -> Result<usize> {
    let at = |w: num_rational::BigRational| -> Result<Tensor<SampledExt>> {
        let ctx = admissible(&pt.clone().with_w(w))?;
        Ok(ungrade(&trig_r(&ctx)?))
    };
    let (ru, rv, ruv) = (at(wu.clone())?, at(wv.clone())?, at(wu * wv)?);
    let l = compose6(&compose6(&embed12(&ru)?, &embed23(&ruv)?)?, &embed12(&rv)?)?;
    let r = compose6(&compose6(&embed23(&rv)?, &embed12(&ruv)?)?, &embed23(&ru)?)?;
    Ok(l.sub(&r).nnz())
}

/// Spectral-parameter triples derived from the seed: `w_u, w_v` are small
/// positive rationals, redrawn at `u = 0` (where `Ř` degenerates) or where
/// an eigenvalue denominator vanishes.
pub fn spectral_samples(seed: u64, n: usize) -> Vec<(RationalPoint, num_rational::BigRational, num_rational::BigRational)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5bd1_e995);
    let pts = random_points(seed, n);
    pts.into_iter()
        .map(|pt| loop {
            let wu = crate::polyring::point::random_rational(&mut rng, 12);
            let wv = crate::polyring::point::random_rational(&mut rng, 12);
            use num_traits::{One, Signed};
            let (wu, wv) = (wu.abs(), wv.abs());
            let ok = [wu.clone(), wv.clone(), &wu * &wv]
                .into_iter()
                .all(|w| !w.is_one() && admissible(&pt.clone().with_w(w)).and_then(|c| trig_r(&c)).is_ok());
            if ok {
                break (pt, wu, wv);
            }
        })
        .collect()
}

/// Runs a named suite at `n` seeded points (symbolic suites ignore them).
pub fn run_suite(name: &str, n: usize, seed: u64) -> Result<VerifyReport> {
    let pts = random_points(seed, n);
    let r = match name {
        "ybe" => {
            let sym = ybe_residual(&explicit_sigma_bar())?.nnz()
                + ybe_residual(&explicit_sigma_inverse())?.nnz()
                + braid_residual(&explicit_sigma_bar())?.nnz();
            VerifyReport::new(name, n, sym + per_point(&pts, graded_ybe_nonzero)?)
        }
        "skein" => {
            let sym = skein_residual(&explicit_sigma_bar()).nnz();
            VerifyReport::new(name, n, sym + per_point(&pts, eigen_nonzero)?)
        }
        "inverse" => {
            let (s, si) = (explicit_sigma_bar(), explicit_sigma_inverse());
            let id = Tensor::identity4(4);
            VerifyReport::new(name, 0, s.compose(&si).sub(&id).nnz() + si.compose(&s).sub(&id).nnz())
        }
        "projectors" => VerifyReport::new(name, n, per_point(&pts, projector_nonzero)?),
        "caps" => VerifyReport::new(name, 0, cap_loop_nonzero()?),
        "limit" => VerifyReport::new(name, 1, classical_limit_nonzero()?),
        "sigma-match" => VerifyReport::new(name, n, per_point(&pts, sigma_match_nonzero)?),
        "spectral" => {
            let samples = spectral_samples(seed, n);
            let bad: usize = samples
                .par_iter()
                .map(|(pt, wu, wv)| {
                    let spot = trig_entries_nonzero(&admissible(&pt.clone().with_w(wu.clone()))?)?;
                    Ok(spot + spectral_nonzero(pt, wu, wv)?)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .sum();
            VerifyReport::new(name, n, bad)
        }
        other => {
            return Err(Error::Invalid(format!("unknown suite `{other}`; valid suites: {}", SUITES.join(", "))));
        }
    };
    Ok(r)
}

/// At `q = p = 1` (so `Y = 0`) the graded `σ` is the graded permutation.
pub fn classical_limit_nonzero() -> Result<usize> {
    let pt = RationalPoint::classical();
    let (s, p) = (explicit_sigma(), graded_permutation());
    let keys: std::collections::BTreeSet<Vec<usize>> =
        s.entries().into_iter().chain(p.entries()).map(|(k, _)| k).collect();
    let mut bad = 0;
    for k in keys {
        if s.at(&k).base.eval_rational(&pt)? != p.at(&k).base.eval_rational(&pt)? {
            bad += 1;
        }
    }
    Ok(bad)
}
