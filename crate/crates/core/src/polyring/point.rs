use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Exact sample point: `r = q^{1/2}`, `s = p^{1/2}`, optional `w = q^{u/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPoint {
    pub r: BigRational,
    pub s: BigRational,
    pub w: Option<BigRational>,
}

impl RationalPoint {
    pub fn new(r: BigRational, s: BigRational) -> Self {
        assert!(!r.is_zero() && !s.is_zero(), "sample coordinates must be nonzero");
        RationalPoint { r, s, w: None }
    }

    pub fn with_w(mut self, w: BigRational) -> Self {
        assert!(!w.is_zero(), "w must be nonzero");
        self.w = Some(w);
        self
    }

    pub fn from_ints(r: (i64, i64), s: (i64, i64)) -> Self {
        Self::new(rat(r.0, r.1), rat(s.0, s.1))
    }

    pub fn q(&self) -> BigRational {
        &self.r * &self.r
    }

    pub fn p(&self) -> BigRational {
        &self.s * &self.s
    }

    /// Point with `r = s = 1`, i.e. `q = p = 1`.
    pub fn classical() -> Self {
        Self::new(BigRational::one(), BigRational::one())
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Random nonzero rational with numerator and denominator bounded by `bound`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> BigRational {
    loop {
        let n = rng.gen_range(-bound..=bound);
        let d = rng.gen_range(1..=bound);
        if n != 0 {
            return rat(n, d);
        }
    }
}
