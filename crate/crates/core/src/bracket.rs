//! Dimension-2 bracket state model and the writhe-normalized Jones
//! polynomial, evaluated from the same tangle recipes.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linkcat::{lookup, LinkEntry};
use crate::polyring::{Gaussian, LaurentPoly};
use crate::tensornet::{Caps, Tensor, TensorLibrary};

/// Laurent polynomial in `A` (stored in the `q` slot, grid 1).
pub type GaussianLaurent = LaurentPoly<Gaussian>;

fn a_pow(c: Gaussian, k: i32) -> GaussianLaurent {
    LaurentPoly::monomial(c, (k, 0), 1)
}

/// `[[0, iA], [−iA⁻¹, 0]]`, its own inverse.
fn cap_matrix() -> Tensor<GaussianLaurent> {
    let mut m = Tensor::new(2, 2);
    m.set(&[1, 2], a_pow(Gaussian::I, 1));
    m.set(&[2, 1], a_pow(Gaussian::new(0, -1), -1));
    m
}

/// `(R, S, caps)` with `R[i,j,k,l] = A⁻¹·M[i,k]·M[j,l] + A·δ_{ij}δ_{kl}`
/// and `S = R⁻¹`; every cap and cup is `M`.
pub fn bracket_tensors() -> (Tensor<GaussianLaurent>, Tensor<GaussianLaurent>, Caps<GaussianLaurent>) {
    let m = cap_matrix();
    let one = Gaussian::new(1, 0);
    let r = Tensor::from_fn(2, 4, |x| {
        let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
        let mut v = m.at(&[i, k]).mul(&m.at(&[j, l])).mul(&a_pow(one, -1));
        if i == j && k == l {
            v = v.add(&a_pow(one, 1));
        }
        v
    });
    let s = r.invert4(|x| x.inverse_monomial()).expect("bracket R is invertible over monomial pivots");
    let m = Arc::new(m);
    let caps = Caps { op: Arc::clone(&m), om: Arc::clone(&m), up: Arc::clone(&m), um: m };
    (r, s, caps)
}

pub fn bracket_library() -> TensorLibrary<GaussianLaurent> {
    let (r, s, caps) = bracket_tensors();
    TensorLibrary::new(r, s, caps)
}

/// Trace closure `Σ_{x,y,z} T[x,y]·Ω⁻[z,y]·℧⁺[z,x]` of the tangle.
pub fn bracket_value(entry: &LinkEntry, lib: &TensorLibrary<GaussianLaurent>) -> Result<GaussianLaurent> {
    let t = entry.abstract_tensor(lib)?;
    let caps = lib.caps();
    let mut acc = GaussianLaurent::zero();
    for x in 1..=2 {
        for y in 1..=2 {
            for z in 1..=2 {
                acc = acc.add(&t.at(&[x, y]).mul(&caps.om.at(&[z, y])).mul(&caps.up.at(&[z, x])));
            }
        }
    }
    Ok(acc)
}

/// `(−A)^{−3w}·⟨L⟩/⟨O⟩` under `A = t^{−1/4}`, on the quarter grid in `t`.
pub fn jones(entry: &LinkEntry, lib: &TensorLibrary<GaussianLaurent>) -> Result<LaurentPoly<i128>> {
    let unknot = bracket_value(&lookup("unknot")?, lib)?;
    let b = bracket_value(entry, lib)?;
    let k = -3 * entry.writhe;
    let sign = if k.rem_euclid(2) == 1 { -1 } else { 1 };
    let norm = b.mul(&a_pow(Gaussian::new(sign, 0), k)).div_exact(&unknot)?.reduced_grid();
    debug_assert_eq!(norm.denom(), 1);
    let mut terms = Vec::with_capacity(norm.len());
    for ((ea, ep), c) in norm.terms() {
        debug_assert_eq!(*ep, 0);
        if c.im != 0 {
            return Err(Error::Diagnostic { link: entry.name.clone(), what: "Jones polynomial has an imaginary part".into() });
        }
        terms.push(((-ea, 0), c.re));
    }
    Ok(LaurentPoly::from_terms(4, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::format::{to_plain, T};
    use crate::rmatrix::verify::ybe_residual;

    #[test]
    fn caps_and_inverse() {
        let (r, s, caps) = bracket_tensors();
        assert_eq!(caps.um.at(&[1, 2]), a_pow(Gaussian::I, 1));
        let m = cap_matrix();
        for i in 1..=2 {
            for k in 1..=2 {
                let mut v = GaussianLaurent::zero();
                for j in 1..=2 {
                    v = v.add(&m.at(&[i, j]).mul(&m.at(&[j, k])));
                }
                assert_eq!(v, if i == k { GaussianLaurent::one() } else { GaussianLaurent::zero() });
            }
        }
        assert_eq!(r.compose(&s), Tensor::identity4(2));
        assert_eq!(s.compose(&r), Tensor::identity4(2));
    }

    #[test]
    fn yang_baxter_in_dimension_two() {
        let (r, s, _) = bracket_tensors();
        assert!(ybe_residual(&r).unwrap().is_zero());
        assert!(ybe_residual(&s).unwrap().is_zero());
    }

    #[test]
    fn unknot_bracket_is_two_term_loop() {
        let lib = bracket_library();
        let u = bracket_value(&lookup("unknot").unwrap(), &lib).unwrap();
        // Σ_{x,z} M[z,x]·M[z,x]: only (1,2) and (2,1) survive.
        let direct = a_pow(Gaussian::I, 1).mul(&a_pow(Gaussian::I, 1)).add(&a_pow(Gaussian::new(0, -1), -1).mul(&a_pow(Gaussian::new(0, -1), -1)));
        assert_eq!(u, direct);
        assert_eq!(u, a_pow(Gaussian::new(-1, 0), 2).add(&a_pow(Gaussian::new(-1, 0), -2)));
    }

    #[test]
    fn small_jones_values() {
        let lib = bracket_library();
        let j = |n: &str| to_plain(&jones(&lookup(n).unwrap(), &lib).unwrap(), T);
        assert_eq!(j("unknot"), "1");
        assert_eq!(j("trefoil"), "t + t^3 - t^4");
        assert_eq!(j("hopf"), "-t^1/2 - t^5/2");
    }

    #[test]
    fn mirror_swaps_a() {
        let lib = bracket_library();
        let mir = lib.mirrored();
        for n in ["trefoil", "5_2", "hopf"] {
            let e = lookup(n).unwrap();
            let b = bracket_value(&e, &lib).unwrap();
            let bm = bracket_value(&e, &mir).unwrap();
            assert_eq!(bm, b.involute_q(), "{n}");
        }
    }
}
