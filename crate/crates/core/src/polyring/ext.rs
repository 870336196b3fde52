use super::coeff::Coefficient;
use super::laurent::LaurentPoly;

/// `base + y·Y` with `Y² = p⁻² − q² + p²q² − 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtScalar<C: Coefficient = i128> {
    pub base: LaurentPoly<C>,
    pub y: LaurentPoly<C>,
}

/// `Y²` as a polynomial.
pub fn y_squared<C: Coefficient>() -> LaurentPoly<C> {
    let m = |c: i64, eq: i32, ep: i32| LaurentPoly::<C>::qp(c, eq, ep);
    m(1, 0, -2).sub(&m(1, 2, 0)).add(&m(1, 2, 2)).sub(&m(1, 0, 0))
}

impl<C: Coefficient> ExtScalar<C> {
    pub fn new(base: LaurentPoly<C>, y: LaurentPoly<C>) -> Self {
        ExtScalar { base, y }
    }

    pub fn from_base(base: LaurentPoly<C>) -> Self {
        ExtScalar { base, y: LaurentPoly::zero() }
    }

    /// `c·Y`.
    pub fn y_times(c: LaurentPoly<C>) -> Self {
        ExtScalar { base: LaurentPoly::zero(), y: c }
    }

    pub fn zero() -> Self {
        Self::from_base(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_base(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.y.is_zero()
    }

    pub fn is_y_free(&self) -> bool {
        self.y.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        ExtScalar { base: self.base.add(&o.base), y: self.y.add(&o.y) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ExtScalar { base: self.base.sub(&o.base), y: self.y.sub(&o.y) }
    }

    pub fn neg(&self) -> Self {
        ExtScalar { base: self.base.neg(), y: self.y.neg() }
    }

    /// `(u₁+v₁Y)(u₂+v₂Y) = (u₁u₂ + v₁v₂Y²) + (u₁v₂ + u₂v₁)Y`.
    pub fn mul(&self, o: &Self) -> Self {
        let mut base = self.base.mul(&o.base);
        if !self.y.is_zero() && !o.y.is_zero() {
            base = base.add(&self.y.mul(&o.y).mul(&y_squared()));
        }
        let y = match (self.y.is_zero(), o.y.is_zero()) {
            (true, true) => LaurentPoly::zero(),
            (false, true) => self.y.mul(&o.base),
            (true, false) => self.base.mul(&o.y),
            (false, false) => self.base.mul(&o.y).add(&o.base.mul(&self.y)),
        };
        ExtScalar { base, y }
    }

    pub fn scale(&self, k: &LaurentPoly<C>) -> Self {
        ExtScalar { base: self.base.mul(k), y: self.y.mul(k) }
    }

    pub fn involute_q(&self) -> Self {
        ExtScalar { base: self.base.involute_q(), y: self.y.involute_q() }
    }
}

impl<C: Coefficient> From<LaurentPoly<C>> for ExtScalar<C> {
    fn from(p: LaurentPoly<C>) -> Self {
        Self::from_base(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i128>;
    type E = ExtScalar<i128>;

    #[test]
    fn y_squares_to_defining_polynomial() {
        let y = E::y_times(P::one());
        let expect = P::qp(1, 0, -2).sub(&P::qp(1, 2, 0)).add(&P::qp(1, 2, 2)).sub(&P::one());
        assert_eq!(y.mul(&y), E::from_base(expect));
    }

    #[test]
    fn q_y_times_minus_y() {
        let a = E::y_times(P::qp(1, 1, 0));
        let b = E::y_times(P::from_int(-1));
        // One application of the Y² rule: −q·Y².
        assert_eq!(a.mul(&b), E::from_base(P::qp(-1, 1, 0).mul(&y_squared())));
    }

    #[test]
    fn unit_is_neutral() {
        let x = E::new(P::qp(2, 1, -1), P::qp(-3, 0, 2));
        assert_eq!(E::one().mul(&x), x);
        assert_eq!(E::from_base(P::one()).mul(&x), x);
    }
}
