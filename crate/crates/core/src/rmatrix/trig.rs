//! Spot checks of the trigonometric `Ř(u)` against closed forms of
//! individual entries.

use std::sync::Arc;

use num_rational::BigRational;

use super::sampled::{qbracket, qpow, SampledExt, SqrtContext};
use crate::error::Result;

/// `(slot, expected value)` for ten named entries of the graded `Ř(u)`
/// (slot `[i,j,k,l]` holds the coefficient of `e^{ik}_{jl}`).
pub fn spot_values(ctx: &Arc<SqrtContext>) -> Result<Vec<([usize; 4], SampledExt)>> {
    let pt = &ctx.point;
    let br = |a, h, c| qbracket(pt, a, h, c);
    let a_plus = br(1, 0, 1)?; // [α + u/2]
    let b_minus = br(1, 2, -1)?; // [α + 1 − u/2]
    let half = br(0, 0, 1)?; // [u/2]
    let alpha = br(1, 0, 0)?;
    let alpha1 = br(1, 2, 0)?;
    let v = |x: BigRational| SampledExt::rational(x);
    Ok(vec![
        ([1, 1, 1, 1], v(-br(1, 0, -1)? / &a_plus)),
        ([2, 2, 2, 2], v(BigRational::from_integer((-1).into()))),
        ([3, 3, 3, 3], v(BigRational::from_integer((-1).into()))),
        ([4, 4, 4, 4], v(-br(1, 2, 1)? / &b_minus)),
        ([2, 2, 1, 1], v(-&alpha * qpow(pt, 0, 0, 1)? / &a_plus)),
        ([1, 1, 2, 2], v(-&alpha * qpow(pt, 0, 0, -1)? / &a_plus)),
        ([1, 2, 2, 1], v(-&half / &a_plus)),
        ([4, 4, 1, 1], v(-&alpha * &alpha1 * qpow(pt, 0, 0, 2)? / (&a_plus * &b_minus))),
        ([2, 3, 3, 2], v(&half * &half / (&a_plus * &b_minus))),
        ([1, 4, 4, 1], v(&half * br(0, 2, -1)? / (&a_plus * &b_minus))),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::point::rat;
    use crate::polyring::RationalPoint;
    use crate::rmatrix::projector::{admissible, trig_r};

    #[test]
    fn entries_match_closed_forms() {
        for (r, s, w) in [((3, 2), (5, 7), (4, 3)), ((7, 5), (2, 9), (3, 11))] {
            let ctx = admissible(&RationalPoint::from_ints(r, s).with_w(rat(w.0, w.1))).unwrap();
            let ru = trig_r(&ctx).unwrap();
            assert_eq!(ru.nnz(), 36);
            for (slot, v) in spot_values(&ctx).unwrap() {
                assert_eq!(ru.at(&slot), v, "{slot:?}");
            }
        }
    }
}
