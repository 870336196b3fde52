//! Exact Laurent polynomials in `q`, `p` (with `p = q^α`), the quadratic
//! extension by `Y`, and exact sample points.

pub mod coeff;
pub mod ext;
pub mod format;
pub mod laurent;
pub mod point;

pub use coeff::{Coefficient, Gaussian};
pub use ext::{y_squared, ExtScalar};
pub use format::{Format, Vars};
pub use laurent::{Exp, LaurentPoly, LG_DENOM};
pub use point::RationalPoint;

/// Scalar ring carried by tensors.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }

    fn from_i64(n: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if n < 0 { Self::one().neg() } else { Self::one() };
        for _ in 0..n.unsigned_abs() {
            acc = acc.add(&unit);
        }
        acc
    }
}

impl<C: Coefficient> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        LaurentPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentPoly::sub(self, o)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
    fn from_i64(n: i64) -> Self {
        LaurentPoly::from_int(n)
    }
}

impl<C: Coefficient> Ring for ExtScalar<C> {
    fn zero() -> Self {
        ExtScalar::zero()
    }
    fn one() -> Self {
        ExtScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        ExtScalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ExtScalar::sub(self, o)
    }
    fn neg(&self) -> Self {
        ExtScalar::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        ExtScalar::mul(self, o)
    }
    fn from_i64(n: i64) -> Self {
        ExtScalar::from_base(LaurentPoly::from_int(n))
    }
}
