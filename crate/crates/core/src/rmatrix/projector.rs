//! Projectors onto `V₁`, `V₃` and the braid generator built from them.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::basis::{basis_unnormalized, norm_squared};
use super::explicit::parity;
use super::sampled::{qbracket, qpow, SampledExt, SqrtContext};
use crate::error::{Error, Result};
use crate::polyring::point::random_rational;
use crate::polyring::{RationalPoint, Ring};
use crate::tensornet::Tensor;

/// Rejects points where `q = ±1`, `p = ±1`, or a bracket used in the
/// normalizations vanishes.
pub fn admissible(pt: &RationalPoint) -> Result<Arc<SqrtContext>> {
    let one = num_rational::BigRational::one();
    if pt.q() == one {
        return Err(Error::Inadmissible("q = 1".into()));
    }
    if pt.p() == one || pt.p() == -one {
        return Err(Error::Inadmissible("p = ±1".into()));
    }
    for (a, h) in [(1, 0), (1, 2), (2, 2)] {
        if qbracket(pt, a, h, 0)?.is_zero() {
            return Err(Error::Inadmissible(format!("[{a}α + {}]_q = 0", h / 2)));
        }
    }
    SqrtContext::new(pt.clone())
}

/// Seeded sample points with `r`, `s` positive rationals, numerators and
/// denominators at most 50, redrawn until admissible.
pub fn random_points(seed: u64, n: usize) -> Vec<RationalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let r = random_rational(&mut rng, 50);
        let s = random_rational(&mut rng, 50);
        if r <= num_rational::BigRational::zero() || s <= num_rational::BigRational::zero() {
            continue;
        }
        let pt = RationalPoint::new(r, s);
        if admissible(&pt).is_ok() {
            out.push(pt);
        }
    }
    out
}

/// `P_k = Σ_j |ψ_j⟩⟨ψ_j| / ⟨ψ_j|ψ_j⟩` as a graded rank-4 tensor.
pub fn projector(k: usize, ctx: &Arc<SqrtContext>) -> Result<Tensor<SampledExt>> {
    if k != 1 && k != 3 {
        return Err(Error::Invalid(format!("no projector P_{k} (only P_1, P_3 are built from bases)")));
    }
    let mut t = Tensor::new(4, 4);
    for j in 1..=4 {
        let v = basis_unnormalized(k, j, ctx)?;
        let inv = norm_squared(&v)
            .recip_rational()
            .ok_or_else(|| Error::Inadmissible(format!("⟨Ψ^{k}_{j}|Ψ^{k}_{j}⟩ = 0")))?;
        for (a, c, x) in v.support() {
            for (b, d, y) in v.support() {
                // Dual-vector sign, then the sign of passing |c⟩ past ⟨b|.
                let sign = (parity(b) * parity(d) + parity(c) * parity(b)) % 2;
                let mut term = x.mul(y).mul(&inv);
                if sign == 1 {
                    term = term.neg();
                }
                t.add_at(&[a, b, c, d], &term);
            }
        }
    }
    Ok(t)
}

fn coeff(v: num_rational::BigRational) -> SampledExt {
    SampledExt::rational(v)
}

/// `c₁P₁ − P₂ + c₃P₃` with `P₂ = I − P₁ − P₃`.
fn combine(c1: SampledExt, c3: SampledExt, ctx: &Arc<SqrtContext>) -> Result<Tensor<SampledExt>> {
    let (p1, p3) = (projector(1, ctx)?, projector(3, ctx)?);
    let one = SampledExt::one();
    let id = Tensor::<SampledExt>::identity4(4);
    Ok(p1.scale(&c1.add(&one)).add(&p3.scale(&c3.add(&one))).sub(&id))
}

/// `σ = q^{−2α}P₁ − P₂ + q^{2α+2}P₃` at the point.
pub fn sigma_constructed(ctx: &Arc<SqrtContext>) -> Result<Tensor<SampledExt>> {
    let pt = &ctx.point;
    combine(coeff(qpow(pt, -2, 0, 0)?), coeff(qpow(pt, 2, 4, 0)?), ctx)
}

/// Trigonometric `Ř(u)` at a point carrying `w = q^{u/2}`.
pub fn trig_r(ctx: &Arc<SqrtContext>) -> Result<Tensor<SampledExt>> {
    let pt = &ctx.point;
    let qu = qpow(pt, 0, 0, 2)?;
    let (q2a, q2a2) = (qpow(pt, 2, 0, 0)?, qpow(pt, 2, 4, 0)?);
    let d1 = num_rational::BigRational::one() - &qu * &q2a;
    let d3 = &qu - &q2a2;
    if d1.is_zero() || d3.is_zero() {
        return Err(Error::Inadmissible("Ř(u) eigenvalue denominator vanishes".into()));
    }
    let c1 = -(&qu - &q2a) / d1;
    let c3 = -(num_rational::BigRational::one() - &qu * &q2a2) / d3;
    combine(coeff(c1), coeff(c3), ctx)
}
