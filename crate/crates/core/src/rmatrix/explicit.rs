//! The braid generator of the four-dimensional `U_q[gl(2|1)]` module,
//! its inverse, the caps/cups, and the graded permutation.

use crate::polyring::{y_squared, ExtScalar, LaurentPoly};
use crate::tensornet::{Caps, Tensor};

pub type Poly = LaurentPoly<i128>;
pub type Ext = ExtScalar<i128>;

/// Parities `[1] = [4] = 0`, `[2] = [3] = 1`.
pub const GRADING: [u8; 4] = [0, 1, 1, 0];

pub fn parity(i: usize) -> u8 {
    GRADING[i - 1]
}

fn m(c: i64, eq: i32, ep: i32) -> Poly {
    Poly::qp(c, eq, ep)
}

fn b(p: Poly) -> Ext {
    Ext::from_base(p)
}

fn y(p: Poly) -> Ext {
    Ext::y_times(p)
}

/// Sets the coefficient of `e^{ik}_{jl}`, written as `up = ik`, `lo = jl`.
fn put(t: &mut Tensor<Ext>, up: usize, lo: usize, v: Ext) {
    let (i, k, j, l) = (up / 10, up % 10, lo / 10, lo % 10);
    t.set(&[i, j, k, l], v);
}

/// `σ` in graded form (26 nonzero entries).
pub fn explicit_sigma() -> Tensor<Ext> {
    let mut t = Tensor::new(4, 4);
    let one = m(1, 0, 0);
    put(&mut t, 11, 11, b(m(1, 0, -2)));
    put(&mut t, 21, 21, b(m(1, 0, -2).sub(&one)));
    put(&mut t, 22, 22, b(m(-1, 0, 0)));
    put(&mut t, 31, 31, b(m(1, 0, -2).sub(&one)));
    put(&mut t, 32, 32, b(m(1, 2, 0).sub(&one)));
    put(&mut t, 33, 33, b(m(-1, 0, 0)));
    put(&mut t, 41, 41, b(y_squared()));
    put(&mut t, 42, 42, b(m(1, 2, 2).sub(&one)));
    put(&mut t, 43, 43, b(m(1, 2, 2).sub(&one)));
    put(&mut t, 44, 44, b(m(1, 2, 2)));

    put(&mut t, 21, 12, b(m(1, 0, -1)));
    put(&mut t, 12, 21, b(m(-1, 0, -1)));
    put(&mut t, 31, 13, b(m(1, 0, -1)));
    put(&mut t, 13, 31, b(m(-1, 0, -1)));
    put(&mut t, 41, 14, b(one.clone()));
    put(&mut t, 14, 41, b(one.clone()));
    put(&mut t, 32, 23, b(m(-1, 1, 0)));
    put(&mut t, 23, 32, b(m(-1, 1, 0)));
    put(&mut t, 41, 23, y(one.clone()));
    put(&mut t, 23, 41, y(one.neg()));
    put(&mut t, 32, 41, y(m(1, 1, 0)));
    put(&mut t, 41, 32, y(m(-1, 1, 0)));
    put(&mut t, 24, 42, b(m(1, 1, 1)));
    put(&mut t, 42, 24, b(m(-1, 1, 1)));
    put(&mut t, 34, 43, b(m(1, 1, 1)));
    put(&mut t, 43, 34, b(m(-1, 1, 1)));
    t
}

/// Entry `(i,j,k,l)` multiplied by `(−1)^{[j]([k]+[l])}`: the graded
/// operator written as an ordinary matrix on `V ⊗ V`.
pub fn ungrade<S: crate::polyring::Ring>(t: &Tensor<S>) -> Tensor<S> {
    t.map_indexed(|x, v| {
        if parity(x[1]) * (parity(x[2]) + parity(x[3])) % 2 == 1 {
            v.neg()
        } else {
            v.clone()
        }
    })
}

/// `σ̄`, the ungraded braid generator used in every link recipe.
pub fn explicit_sigma_bar() -> Tensor<Ext> {
    ungrade(&explicit_sigma())
}

/// `σ̄⁻¹` in ungraded form (26 nonzero entries).
pub fn explicit_sigma_inverse() -> Tensor<Ext> {
    let mut t = Tensor::new(4, 4);
    let one = m(1, 0, 0);
    put(&mut t, 11, 11, b(m(1, 0, 2)));
    put(&mut t, 12, 12, b(m(1, 0, 2).sub(&one)));
    put(&mut t, 13, 13, b(m(1, 0, 2).sub(&one)));
    put(&mut t, 14, 14, b(y_squared().mul(&m(1, -2, 0))));
    put(&mut t, 22, 22, b(m(-1, 0, 0)));
    put(&mut t, 23, 23, b(m(1, -2, 0).sub(&one)));
    put(&mut t, 24, 24, b(m(1, -2, -2).sub(&one)));
    put(&mut t, 33, 33, b(m(-1, 0, 0)));
    put(&mut t, 34, 34, b(m(1, -2, -2).sub(&one)));
    put(&mut t, 44, 44, b(m(1, -2, -2)));

    let pairs: [(usize, usize, Ext); 8] = [
        (21, 12, b(m(1, 0, 1))),
        (31, 13, b(m(1, 0, 1))),
        (41, 14, b(one.clone())),
        (32, 23, b(m(-1, -1, 0))),
        (14, 32, y(m(-1, -1, 0))),
        (14, 23, y(m(1, -2, 0))),
        (42, 24, b(m(1, -1, -1))),
        (43, 34, b(m(1, -1, -1))),
    ];
    for (up, lo, v) in pairs {
        put(&mut t, up, lo, v.clone());
        put(&mut t, lo, up, v);
    }
    t
}

/// `Ω⁺ = ℧⁺ = I`, `℧⁻ = diag(p², −p², −p²q², p²q²)`, `Ω⁻ = (℧⁻)⁻¹`.
pub fn explicit_caps_cups() -> Caps<Ext> {
    let um = Tensor::diagonal(vec![b(m(1, 0, 2)), b(m(-1, 0, 2)), b(m(-1, 2, 2)), b(m(1, 2, 2))]);
    let om = Tensor::diagonal(vec![b(m(1, 0, -2)), b(m(-1, 0, -2)), b(m(-1, -2, -2)), b(m(1, -2, -2))]);
    Caps::new(Tensor::identity(4), om, Tensor::identity(4), um)
}

/// `P^{ij}_{ji} = (−1)^{[j]}`.
pub fn graded_permutation() -> Tensor<Ext> {
    let mut t = Tensor::new(4, 4);
    for i in 1..=4 {
        for j in 1..=4 {
            let s = if parity(j) == 1 { -1 } else { 1 };
            t.set(&[i, j, j, i], b(m(s, 0, 0)));
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_counts_and_corners() {
        let s = explicit_sigma();
        assert_eq!(s.nnz(), 26);
        assert_eq!(s.at(&[1, 1, 1, 1]), b(m(1, 0, -2)));
        assert_eq!(s.at(&[4, 4, 4, 4]), b(m(1, 2, 2)));
        assert_eq!(s.at(&[4, 2, 1, 3]), y(m(1, 0, 0)));
        let si = explicit_sigma_inverse();
        assert_eq!(si.nnz(), 26);
        assert_eq!(si.at(&[1, 1, 1, 1]), b(m(1, 0, 2)));
        assert_eq!(si.at(&[4, 4, 4, 4]), b(m(1, -2, -2)));
    }

    #[test]
    fn ungrade_flips_one_sign_and_is_involutive() {
        let s = explicit_sigma();
        let u = ungrade(&s);
        assert_eq!(u.at(&[4, 2, 1, 3]), y(m(-1, 0, 0)));
        assert_eq!(u.at(&[1, 1, 1, 1]), s.at(&[1, 1, 1, 1]));
        assert_eq!(ungrade(&u), s);
        // The ungraded generator is symmetric under (upper ↔ lower).
        for (x, v) in u.entries() {
            assert_eq!(&u.at(&[x[1], x[0], x[3], x[2]]), v);
        }
    }

    #[test]
    fn sigma_bar_times_inverse_is_identity() {
        let id = Tensor::<Ext>::identity4(4);
        let (s, si) = (explicit_sigma_bar(), explicit_sigma_inverse());
        assert_eq!(s.compose(&si), id);
        assert_eq!(si.compose(&s), id);
    }

    #[test]
    fn caps_are_inverse_and_match_rho() {
        let c = explicit_caps_cups();
        assert_eq!(c.um.at(&[1, 1]), b(m(1, 0, 2)));
        for i in 1..=4 {
            assert_eq!(c.um.at(&[i, i]).mul(&c.om.at(&[i, i])), Ext::one());
            let rho = [m(1, 0, 2), m(1, 0, 2), m(1, 2, 2), m(1, 2, 2)][i - 1].clone();
            let sign = if parity(i) == 1 { -1 } else { 1 };
            assert_eq!(c.um.at(&[i, i]), b(rho.mul(&m(sign, 0, 0))));
        }
    }

    #[test]
    fn graded_permutation_squares_to_identity() {
        let p = graded_permutation();
        assert_eq!(p.at(&[1, 2, 2, 1]), b(m(-1, 0, 0)));
        assert_eq!(p.at(&[1, 1, 1, 1]), Ext::one());
        let op = ungrade(&p);
        assert_eq!(op.compose(&op), Tensor::identity4(4));
    }
}
