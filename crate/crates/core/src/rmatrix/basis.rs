//! Symmetry-adapted bases of the submodules `V₁` and `V₃` of `V ⊗ V`,
//! with normalization prefactors stripped.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::explicit::parity;
use super::sampled::{qpow, SampledExt, SqrtContext};
use crate::error::{Error, Result};
use crate::polyring::Ring;

/// Components `x_{ij}` of `Σ x_{ij} |i⟩ ⊗ |j⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct KetVector16 {
    pub comps: [[SampledExt; 4]; 4],
}

impl KetVector16 {
    pub fn zero() -> Self {
        KetVector16 { comps: std::array::from_fn(|_| std::array::from_fn(|_| SampledExt::zero())) }
    }

    pub fn get(&self, i: usize, j: usize) -> &SampledExt {
        &self.comps[i - 1][j - 1]
    }

    fn set(&mut self, i: usize, j: usize, v: SampledExt) {
        self.comps[i - 1][j - 1] = v;
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, usize, &SampledExt)> {
        (1..=4).flat_map(move |i| (1..=4).map(move |j| (i, j))).filter_map(move |(i, j)| {
            let v = self.get(i, j);
            (!v.is_zero()).then_some((i, j, v))
        })
    }

    /// Parity `[i] + [j]` shared by every nonzero component, if homogeneous.
    pub fn parity(&self) -> Option<u8> {
        let mut ps = self.support().map(|(i, j, _)| (parity(i) + parity(j)) % 2);
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }
}

/// `|Ψ^k_j⟩` (`k ∈ {1, 3}`, `j ∈ 1..=4`) without its normalization constant.
pub fn basis_unnormalized(k: usize, j: usize, ctx: &Arc<SqrtContext>) -> Result<KetVector16> {
    let pt = &ctx.point;
    let rat = |a: i32, h: i32| -> Result<SampledExt> { Ok(SampledExt::rational(qpow(pt, a, h, 0)?)) };
    // q^{aα/2 + h/4}: powers of s = q^{α/2} and r = q^{1/2}.
    let sr = |a: i32, h: i32| -> SampledExt {
        let v = num_traits::pow::pow(if a < 0 { pt.s.recip() } else { pt.s.clone() }, a.unsigned_abs() as usize)
            * num_traits::pow::pow(if h < 0 { pt.r.recip() } else { pt.r.clone() }, h.unsigned_abs() as usize);
        SampledExt::rational(v)
    };
    let sa = SampledExt::sqrt_a(ctx);
    let sb = SampledExt::sqrt_b(ctx);
    let mut v = KetVector16::zero();
    match (k, j) {
        (1, 1) => v.set(1, 1, SampledExt::rational(BigRational::one())),
        (1, 2) | (1, 3) => {
            v.set(1, j, sr(1, 0));
            v.set(j, 1, sr(-1, 0));
        }
        (1, 4) => {
            v.set(1, 4, sb.mul(&rat(1, 0)?));
            v.set(4, 1, sb.mul(&rat(-1, 0)?));
            v.set(3, 2, sa.mul(&sr(0, 1)).neg());
            v.set(2, 3, sa.mul(&sr(0, -1)));
        }
        (3, 1) => {
            v.set(4, 1, sa.mul(&rat(1, 2)?));
            v.set(1, 4, sa.mul(&rat(-1, -2)?));
            v.set(3, 2, sb.mul(&sr(0, 1)));
            v.set(2, 3, sb.mul(&sr(0, -1)).neg());
        }
        (3, 2) | (3, 3) => {
            v.set(4, j, sr(1, 1));
            v.set(j, 4, sr(-1, -1));
        }
        (3, 4) => v.set(4, 4, SampledExt::rational(BigRational::one())),
        _ => return Err(Error::Invalid(format!("no basis vector Ψ^{k}_{j}"))),
    }
    Ok(v)
}

/// `⟨ψ|ψ⟩` using the graded dual: the sign `(−1)^{[i][j]}` of the bra
/// cancels the sign of the pairing, leaving `Σ x_{ij}²`.
pub fn norm_squared(v: &KetVector16) -> SampledExt {
    let mut acc = SampledExt::zero();
    for (i, j, x) in v.support() {
        let dual = (parity(i) * parity(j)) % 2;
        let pairing = (parity(j) * parity(i)) % 2;
        let sq = x.mul(x);
        acc = if (dual + pairing) % 2 == 1 { acc.sub(&sq) } else { acc.add(&sq) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RationalPoint;
    use crate::rmatrix::sampled::qbracket;

    fn ctx() -> Arc<SqrtContext> {
        SqrtContext::new(RationalPoint::from_ints((5, 3), (2, 7))).unwrap()
    }

    #[test]
    fn extremal_vectors() {
        let k = ctx();
        let v = basis_unnormalized(1, 1, &k).unwrap();
        assert_eq!(v.support().count(), 1);
        assert_eq!(v.get(1, 1), &SampledExt::one());
        let v = basis_unnormalized(3, 4, &k).unwrap();
        assert_eq!(v.support().count(), 1);
        assert_eq!(v.get(4, 4), &SampledExt::one());
        let v = basis_unnormalized(3, 2, &k).unwrap();
        let sr = SampledExt::rational(&k.point.s * &k.point.r);
        assert_eq!(v.get(4, 2), &sr);
        assert_eq!(v.get(2, 4), &sr.recip_rational().unwrap());
        assert!(basis_unnormalized(2, 1, &k).is_err());
    }

    #[test]
    fn every_vector_is_homogeneous() {
        let k = ctx();
        for kk in [1, 3] {
            for j in 1..=4 {
                assert!(basis_unnormalized(kk, j, &k).unwrap().parity().is_some());
            }
        }
    }

    #[test]
    fn norms_match_closed_forms() {
        let k = ctx();
        let pt = &k.point;
        let q = |a, h| qpow(pt, a, h, 0).unwrap();
        let n = |kk, j| norm_squared(&basis_unnormalized(kk, j, &k).unwrap());
        let b2a1 = qbracket(pt, 2, 2, 0).unwrap();
        assert_eq!(n(1, 2), SampledExt::rational(q(1, 0) + q(-1, 0)));
        assert_eq!(n(1, 4), SampledExt::rational(&b2a1 * (q(1, 0) + q(-1, 0))));
        assert_eq!(n(3, 1), SampledExt::rational(&b2a1 * (q(1, 2) + q(-1, -2))));
    }
}
