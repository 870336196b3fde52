use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{ExtScalar, Ring, RationalPoint};

/// Rational data of a sample point needed for radicals:
/// `A = s_a² = [α]_q`, `B = s_b² = [α+1]_q`.
#[derive(Clone, Debug, PartialEq)]
pub struct SqrtContext {
    pub point: RationalPoint,
    pub a: BigRational,
    pub b: BigRational,
}

/// `[x]_q` for `q^x = s^{2a}·r^h·w^c`, i.e. `x = aα + h/2 + c·u/2`.
pub fn qbracket(pt: &RationalPoint, a: i32, h: i32, c: i32) -> Result<BigRational> {
    let v = qpow(pt, a, h, c)?;
    let den = qpow(pt, 0, 2, 0)? - qpow(pt, 0, -2, 0)?;
    if den.is_zero() {
        return Err(Error::Inadmissible("q = ±1".into()));
    }
    Ok((&v - v.recip()) / den)
}

/// `q^{aα + h/2 + c·u/2} = s^{2a}·r^h·w^c`.
pub fn qpow(pt: &RationalPoint, a: i32, h: i32, c: i32) -> Result<BigRational> {
    let w = match (c, &pt.w) {
        (0, _) => BigRational::one(),
        (_, Some(w)) => pow(w, c),
        (_, None) => return Err(Error::Invalid("sample point has no spectral coordinate w".into())),
    };
    Ok(pow(&pt.s, 2 * a) * pow(&pt.r, h) * w)
}

fn pow(x: &BigRational, e: i32) -> BigRational {
    num_traits::pow::pow(if e < 0 { x.recip() } else { x.clone() }, e.unsigned_abs() as usize)
}

/// `Y / (s_a·s_b) = r·(r² − r⁻²)`.
pub fn y_factor(pt: &RationalPoint) -> BigRational {
    &pt.r * (pt.q() - pt.q().recip())
}

impl SqrtContext {
    pub fn new(point: RationalPoint) -> Result<Arc<Self>> {
        let a = qbracket(&point, 1, 0, 0)?;
        let b = qbracket(&point, 1, 2, 0)?;
        Ok(Arc::new(SqrtContext { point, a, b }))
    }
}

/// `c1 + ca·s_a + cb·s_b + cab·s_a·s_b` at a fixed sample point.
#[derive(Clone, Debug)]
pub struct SampledExt {
    pub c1: BigRational,
    pub ca: BigRational,
    pub cb: BigRational,
    pub cab: BigRational,
    ctx: Option<Arc<SqrtContext>>,
}

impl PartialEq for SampledExt {
    fn eq(&self, o: &Self) -> bool {
        self.c1 == o.c1 && self.ca == o.ca && self.cb == o.cb && self.cab == o.cab
    }
}

impl SampledExt {
    pub fn rational(c: BigRational) -> Self {
        let z = BigRational::zero();
        SampledExt { c1: c, ca: z.clone(), cb: z.clone(), cab: z, ctx: None }
    }

    pub fn new(ctx: &Arc<SqrtContext>, c1: BigRational, ca: BigRational, cb: BigRational, cab: BigRational) -> Self {
        SampledExt { c1, ca, cb, cab, ctx: Some(Arc::clone(ctx)) }
    }

    /// `s_a = [α]_q^{1/2}`.
    pub fn sqrt_a(ctx: &Arc<SqrtContext>) -> Self {
        let (z, o) = (BigRational::zero(), BigRational::one());
        Self::new(ctx, z.clone(), o, z.clone(), z)
    }

    /// `s_b = [α+1]_q^{1/2}`.
    pub fn sqrt_b(ctx: &Arc<SqrtContext>) -> Self {
        let (z, o) = (BigRational::zero(), BigRational::one());
        Self::new(ctx, z.clone(), z.clone(), o, z)
    }

    pub fn is_rational(&self) -> bool {
        self.ca.is_zero() && self.cb.is_zero() && self.cab.is_zero()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        SampledExt {
            c1: &self.c1 * k,
            ca: &self.ca * k,
            cb: &self.cb * k,
            cab: &self.cab * k,
            ctx: self.ctx.clone(),
        }
    }

    /// Inverse of a value with only a rational part.
    pub fn recip_rational(&self) -> Option<Self> {
        (self.is_rational() && !self.c1.is_zero()).then(|| Self::rational(self.c1.recip()).with_ctx(self.ctx.clone()))
    }

    fn with_ctx(mut self, ctx: Option<Arc<SqrtContext>>) -> Self {
        self.ctx = ctx;
        self
    }

    fn join(&self, o: &Self) -> Option<Arc<SqrtContext>> {
        match (&self.ctx, &o.ctx) {
            (Some(a), Some(b)) => {
                debug_assert!(Arc::ptr_eq(a, b) || (a.a == b.a && a.b == b.b), "mixing sample points");
                Some(Arc::clone(a))
            }
            (Some(a), None) | (None, Some(a)) => Some(Arc::clone(a)),
            (None, None) => None,
        }
    }

    /// Image of `u + vY`. The radical is `Y = q^{1/2}(q − q⁻¹)·s_a·s_b`,
    /// the normalization for which `Y²` equals `p⁻² − q² + p²q² − 1`.
    pub fn from_ext(x: &ExtScalar<i128>, ctx: &Arc<SqrtContext>) -> Result<Self> {
        let z = BigRational::zero();
        let pt = &ctx.point;
        let u = x.base.eval_rational(pt)?;
        let v = x.y.eval_rational(pt)?;
        Ok(Self::new(ctx, u, z.clone(), z, v * y_factor(pt)))
    }
}

impl Ring for SampledExt {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    fn one() -> Self {
        Self::rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.is_rational()
    }

    fn add(&self, o: &Self) -> Self {
        SampledExt {
            c1: &self.c1 + &o.c1,
            ca: &self.ca + &o.ca,
            cb: &self.cb + &o.cb,
            cab: &self.cab + &o.cab,
            ctx: self.join(o),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn neg(&self) -> Self {
        SampledExt { c1: -&self.c1, ca: -&self.ca, cb: -&self.cb, cab: -&self.cab, ctx: self.ctx.clone() }
    }

    fn mul(&self, o: &Self) -> Self {
        let ctx = self.join(o);
        if self.is_rational() {
            return o.scale(&self.c1).with_ctx(ctx);
        }
        if o.is_rational() {
            return self.scale(&o.c1).with_ctx(ctx);
        }
        let k = ctx.as_ref().expect("radical components carry their sample point");
        let (a, b) = (&k.a, &k.b);
        let ab = a * b;
        let (c, d) = (self, o);
        SampledExt {
            c1: &c.c1 * &d.c1 + &c.ca * &d.ca * a + &c.cb * &d.cb * b + &c.cab * &d.cab * &ab,
            ca: &c.c1 * &d.ca + &c.ca * &d.c1 + (&c.cb * &d.cab + &c.cab * &d.cb) * b,
            cb: &c.c1 * &d.cb + &c.cb * &d.c1 + (&c.ca * &d.cab + &c.cab * &d.ca) * a,
            cab: &c.c1 * &d.cab + &c.cab * &d.c1 + &c.ca * &d.cb + &c.cb * &d.ca,
            ctx,
        }
    }

    fn from_i64(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::point::rat;

    fn ctx() -> Arc<SqrtContext> {
        SqrtContext::new(RationalPoint::from_ints((3, 2), (5, 7))).unwrap()
    }

    #[test]
    fn radicals_square_to_brackets() {
        let k = ctx();
        let sa = SampledExt::sqrt_a(&k);
        let sb = SampledExt::sqrt_b(&k);
        assert_eq!(sa.mul(&sa), SampledExt::rational(k.a.clone()));
        assert_eq!(sb.mul(&sb), SampledExt::rational(k.b.clone()));
        let sab = sa.mul(&sb);
        assert_eq!(sab.mul(&sab), SampledExt::rational(&k.a * &k.b));
        assert_eq!(sab.mul(&sa), sb.scale(&k.a));
    }

    #[test]
    fn y_maps_to_its_square() {
        let k = ctx();
        let y = SampledExt::from_ext(&ExtScalar::y_times(crate::polyring::LaurentPoly::one()), &k).unwrap();
        let y2 = crate::polyring::y_squared::<i128>().eval_rational(&k.point).unwrap();
        assert_eq!(y.mul(&y), SampledExt::rational(y2));
    }

    #[test]
    fn bracket_values() {
        let pt = RationalPoint::from_ints((2, 1), (1, 1));
        // q = 4, [1]_q = 1, [2]_q = q^{1} + q^{-1}.
        assert_eq!(qbracket(&pt, 0, 2, 0).unwrap(), rat(1, 1));
        assert_eq!(qbracket(&pt, 0, 4, 0).unwrap(), rat(17, 4));
    }
}
