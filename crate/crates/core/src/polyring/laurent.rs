use std::cmp::Ordering;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Pow;

use super::coeff::Coefficient;
use super::point::RationalPoint;
use crate::error::{Error, Result};

/// Exponent pair `(e_q, e_p)` in grid units of `1/denom`.
pub type Exp = (i32, i32);

/// Exact Laurent polynomial in commuting `q`, `p` with exponents on the grid
/// `(1/D)·ℤ`. Terms are kept sorted lexicographically by `(e_q, e_p)` with
/// no zero coefficients.
#[derive(Clone, Debug)]
pub struct LaurentPoly<C: Coefficient = i128> {
    denom: u32,
    terms: Vec<(Exp, C)>,
}

/// Grid used for every `q,p` polynomial on the Links–Gould side.
pub const LG_DENOM: u32 = 2;

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { denom: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, (0, 0), 1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    /// `c · q^{e_q/D} p^{e_p/D}`.
    pub fn monomial(c: C, e: Exp, denom: u32) -> Self {
        assert!(denom > 0, "denom_scale must be positive");
        let terms = if c.is_zero() { Vec::new() } else { vec![(e, c)] };
        LaurentPoly { denom, terms }
    }

    /// `c · q^{eq} p^{ep}` with integer natural exponents, on the LG grid.
    pub fn qp(c: i64, eq: i32, ep: i32) -> Self {
        let d = LG_DENOM as i32;
        Self::monomial(C::from_i64(c), (eq * d, ep * d), LG_DENOM)
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(denom: u32, terms: impl IntoIterator<Item = (Exp, C)>) -> Self {
        assert!(denom > 0, "denom_scale must be positive");
        let mut v: Vec<(Exp, C)> = terms.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { denom, terms: merge_sorted(v) }
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn terms(&self) -> &[(Exp, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exp) -> C {
        match self.terms.binary_search_by(|t| t.0.cmp(&e)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Coefficient of `q^{eq} p^{ep}` (integer natural exponents).
    pub fn coeff_nat(&self, eq: i32, ep: i32) -> C {
        let d = self.denom as i32;
        self.coeff((eq * d, ep * d))
    }

    /// Same polynomial on the finer grid `new_denom` (a multiple of the current one).
    pub fn rescaled(&self, new_denom: u32) -> Self {
        assert!(new_denom % self.denom == 0, "grid {new_denom} is not a refinement of {}", self.denom);
        let f = (new_denom / self.denom) as i32;
        if f == 1 {
            return self.clone();
        }
        LaurentPoly {
            denom: new_denom,
            terms: self.terms.iter().map(|((a, b), c)| ((a * f, b * f), c.clone())).collect(),
        }
    }

    /// Coarsest grid on which the polynomial is representable.
    pub fn reduced_grid(&self) -> Self {
        let mut g = self.denom;
        for ((a, b), _) in &self.terms {
            g = g.gcd(&(a.unsigned_abs())).gcd(&(b.unsigned_abs()));
        }
        if g <= 1 {
            return self.clone();
        }
        let gi = g as i32;
        LaurentPoly {
            denom: self.denom / g,
            terms: self.terms.iter().map(|((a, b), c)| ((a / gi, b / gi), c.clone())).collect(),
        }
    }

    fn aligned<'a>(&'a self, o: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>, u32) {
        use std::borrow::Cow;
        if self.denom == o.denom {
            return (Cow::Borrowed(self), Cow::Borrowed(o), self.denom);
        }
        let l = self.denom.lcm(&o.denom);
        let a = if self.denom == l { Cow::Borrowed(self) } else { Cow::Owned(self.rescaled(l)) };
        let b = if o.denom == l { Cow::Borrowed(o) } else { Cow::Owned(o.rescaled(l)) };
        (a, b, l)
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.with_denom_at_least(o.denom);
        }
        if self.is_zero() {
            return o.with_denom_at_least(self.denom);
        }
        let (a, b, d) = self.aligned(o);
        LaurentPoly { denom: d, terms: merge_add(&a.terms, &b.terms, false) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let (a, b, d) = self.aligned(o);
        LaurentPoly { denom: d, terms: merge_add(&a.terms, &b.terms, true) }
    }

    fn with_denom_at_least(&self, other: u32) -> Self {
        let l = self.denom.lcm(&other);
        self.rescaled(l)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            denom: self.denom,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return LaurentPoly { denom: self.denom, terms: Vec::new() };
        }
        LaurentPoly {
            denom: self.denom,
            terms: self.terms.iter().map(|(e, c)| (*e, c.mul(k))).collect(),
        }
    }

    /// Multiplies by `q^{e_q/D} p^{e_p/D}` where `D` is this polynomial's grid.
    pub fn shift(&self, e: Exp) -> Self {
        LaurentPoly {
            denom: self.denom,
            terms: self.terms.iter().map(|((a, b), c)| ((a + e.0, b + e.1), c.clone())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b, d) = self.aligned(o);
        LaurentPoly { denom: d, terms: mul_terms(&a.terms, &b.terms) }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one().rescaled(self.denom);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Laurent monomials are units; anything else is not invertible here.
    pub fn inverse_monomial(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [((a, b), c)] => {
                let inv = C::one().div_exact(c)?;
                Some(LaurentPoly { denom: self.denom, terms: vec![((-a, -b), inv)] })
            }
            _ => None,
        }
    }

    /// `(e_q, e_p) ↦ (−e_q, −e_p)`: the palindrome involution `q ↦ q⁻¹, p ↦ p⁻¹`.
    pub fn involute_q(&self) -> Self {
        Self::from_terms(self.denom, self.terms.iter().map(|((a, b), c)| ((-a, -b), c.clone())))
    }

    /// `p ↦ q⁻¹p⁻¹`, i.e. `(e_q, e_p) ↦ (e_q − e_p, −e_p)`.
    pub fn involute_alpha(&self) -> Self {
        Self::from_terms(self.denom, self.terms.iter().map(|((a, b), c)| ((a - b, -b), c.clone())))
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.involute_q()
    }

    /// Every natural exponent of `q` and `p` is an even integer.
    pub fn has_even_exponents(&self) -> bool {
        let step = 2 * self.denom as i32;
        self.terms.iter().all(|((a, b), _)| a % step == 0 && b % step == 0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.denom, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Lexicographically largest and smallest exponents.
    fn lead(&self) -> Option<&(Exp, C)> {
        self.terms.last()
    }

    fn exponent_box(&self) -> Option<(i32, i32, i32, i32)> {
        let first = self.terms.first()?;
        let mut bx = (first.0 .0, first.0 .0, first.0 .1, first.0 .1);
        for ((a, b), _) in &self.terms {
            bx.0 = bx.0.min(*a);
            bx.1 = bx.1.max(*a);
            bx.2 = bx.2.min(*b);
            bx.3 = bx.3.max(*b);
        }
        Some(bx)
    }

    /// Exact quotient `self / d`; fails unless the remainder is zero.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (a, b, den) = self.aligned(d);
        let (a, b) = (a.into_owned(), b.into_owned());
        let Some(bbox) = b.exponent_box() else {
            return Err(Error::InexactDivision("division by zero".into()));
        };
        let Some(abox) = a.exponent_box() else {
            return Ok(LaurentPoly { denom: den, terms: Vec::new() });
        };
        // Quotient exponents are confined to this box (degrees add under multiplication).
        let qbox = (abox.0 - bbox.0, abox.1 - bbox.1, abox.2 - bbox.2, abox.3 - bbox.3);
        let (blead_e, blead_c) = b.lead().cloned().expect("nonzero divisor");
        let mut rem = a;
        let mut quot: Vec<(Exp, C)> = Vec::new();
        while let Some((re, rc)) = rem.lead().cloned() {
            let e = (re.0 - blead_e.0, re.1 - blead_e.1);
            let in_box = e.0 >= qbox.0 && e.0 <= qbox.1 && e.1 >= qbox.2 && e.1 <= qbox.3;
            let c = match (in_box, rc.div_exact(&blead_c)) {
                (true, Some(c)) => c,
                _ => return Err(Error::InexactDivision("nonzero remainder".into())),
            };
            let t = LaurentPoly { denom: den, terms: vec![(e, c.clone())] };
            rem = rem.sub(&t.mul(&b));
            quot.push((e, c));
        }
        Ok(LaurentPoly::from_terms(den, quot))
    }

    /// Exact evaluation at `q = r², p = s²`; half-integer exponents use `r`, `s` directly.
    pub fn eval_rational(&self, pt: &RationalPoint) -> Result<BigRational> {
        let d = self.denom as i32;
        let mut acc = BigRational::from_integer(0.into());
        for ((a, b), c) in &self.terms {
            if (2 * a) % d != 0 || (2 * b) % d != 0 {
                return Err(Error::NotRepresentable(format!(
                    "exponent finer than 1/2 on grid {}",
                    self.denom
                )));
            }
            let c = c
                .to_rational()
                .ok_or_else(|| Error::NotRepresentable("non-real coefficient".into()))?;
            let rq: BigRational = Pow::pow(&pt.r, 2 * a / d);
            let sp: BigRational = Pow::pow(&pt.s, 2 * b / d);
            acc += c * rq * sp;
        }
        Ok(acc)
    }

    /// Natural exponents `(num, den)` of a grid exponent.
    pub fn natural(&self, units: i32) -> (i32, i32) {
        let g = (units.unsigned_abs()).gcd(&self.denom).max(1) as i32;
        (units / g, self.denom as i32 / g)
    }
}

impl<C: Coefficient> PartialEq for LaurentPoly<C> {
    fn eq(&self, o: &Self) -> bool {
        let (a, b, _) = self.aligned(o);
        a.terms == b.terms
    }
}

impl<C: Coefficient + Eq> Eq for LaurentPoly<C> {}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

fn merge_sorted<C: Coefficient>(v: Vec<(Exp, C)>) -> Vec<(Exp, C)> {
    let mut out: Vec<(Exp, C)> = Vec::with_capacity(v.len());
    for (e, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == e => last.1.add_assign(&c),
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((e, c));
            }
        }
    }
    if out.last().is_some_and(|l| l.1.is_zero()) {
        out.pop();
    }
    out
}

fn merge_add<C: Coefficient>(a: &[(Exp, C)], b: &[(Exp, C)], negate_b: bool) -> Vec<(Exp, C)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let bv = |c: &C| if negate_b { c.neg() } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, bv(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(e, c)| (*e, bv(c))));
    out
}

fn mul_terms<C: Coefficient>(a: &[(Exp, C)], b: &[(Exp, C)]) -> Vec<(Exp, C)> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if a.len() == 1 {
        let ((ea, eb), c) = &a[0];
        return b
            .iter()
            .filter_map(|((x, y), d)| {
                let v = c.mul(d);
                (!v.is_zero()).then(|| ((x + ea, y + eb), v))
            })
            .collect();
    }
    let bx = |t: &[(Exp, C)]| {
        let mut r = (i32::MAX, i32::MIN, i32::MAX, i32::MIN);
        for ((x, y), _) in t {
            r = (r.0.min(*x), r.1.max(*x), r.2.min(*y), r.3.max(*y));
        }
        r
    };
    let (ba, bb) = (bx(a), bx(b));
    let q0 = ba.0 + bb.0;
    let p0 = ba.2 + bb.2;
    let wq = (ba.1 + bb.1 - q0 + 1) as i64;
    let wp = (ba.3 + bb.3 - p0 + 1) as i64;
    let area = wq * wp;
    let work = (a.len() * b.len()) as i64;
    if area <= 4 * work + 256 && area <= 1 << 22 {
        let mut dense: Vec<C> = vec![C::zero(); area as usize];
        for ((x1, y1), c1) in a {
            for ((x2, y2), c2) in b {
                let k = (x1 + x2 - q0) as i64 * wp + (y1 + y2 - p0) as i64;
                dense[k as usize].add_assign(&c1.mul(c2));
            }
        }
        dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let k = k as i64;
                (((k / wp) as i32 + q0, (k % wp) as i32 + p0), c)
            })
            .collect()
    } else {
        let mut v = Vec::with_capacity(a.len() * b.len());
        for ((x1, y1), c1) in a {
            for ((x2, y2), c2) in b {
                v.push(((x1 + x2, y1 + y2), c1.mul(c2)));
            }
        }
        v.sort_by(|s, t| s.0.cmp(&t.0));
        merge_sorted(v)
    }
}

/// `num/den` as a rational, used when callers need exact quotients of evaluations.
pub fn ratio(num: BigRational, den: BigRational) -> Result<BigRational> {
    if num_traits::Zero::is_zero(&den) {
        Err(Error::Inadmissible("vanishing denominator".into()))
    } else {
        Ok(num / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i128>;

    fn q(e: i32) -> P {
        P::qp(1, e, 0)
    }
    fn p(e: i32) -> P {
        P::qp(1, 0, e)
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = q(2).sub(&P::one());
        let b = P::one().sub(&q(2));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = p(1).sub(&p(-1));
        let b = p(1).add(&p(-1));
        assert_eq!(a.mul(&b), p(2).sub(&p(-2)));
    }

    #[test]
    fn half_exponent_square() {
        // Oracle: the four cross terms of (q^½ − q^-½)² written out by hand.
        let h = P::monomial(1, (1, 0), 2).sub(&P::monomial(1, (-1, 0), 2));
        let cross = [
            P::monomial(1, (2, 0), 2),
            P::monomial(-1, (0, 0), 2),
            P::monomial(-1, (0, 0), 2),
            P::monomial(1, (-2, 0), 2),
        ]
        .iter()
        .fold(P::zero(), |acc, t| acc.add(t));
        assert_eq!(h.mul(&h), cross);
        assert_eq!(h.mul(&h), q(1).sub(&P::from_int(2)).add(&q(-1)));
    }

    #[test]
    fn grids_mix_by_refinement() {
        let a = P::monomial(3, (1, 0), 1);
        let b = P::monomial(3, (2, 0), 2);
        assert_eq!(a, b);
        let c = P::monomial(1, (1, 0), 4).add(&a);
        assert_eq!(c.denom(), 4);
        assert_eq!(c.terms(), &[((1, 0), 1), ((4, 0), 3)]);
        assert_eq!(c.reduced_grid().denom(), 4);
        assert_eq!(b.reduced_grid().denom(), 1);
    }

    #[test]
    fn involutions() {
        let a = P::qp(1, 2, -2);
        assert_eq!(a.involute_q(), P::qp(1, -2, 2));
        assert_eq!(P::qp(1, 0, 2).involute_alpha(), P::qp(1, -2, -2));
        assert_eq!(P::qp(1, 1, -1).involute_alpha(), P::qp(1, 2, 1));
        assert_eq!(P::one().add(&q(2)).involute_q(), P::one().add(&q(-2)));
        assert!(P::zero().is_palindromic());
    }

    #[test]
    fn even_exponents() {
        assert!(P::one().has_even_exponents());
        assert!(!P::qp(1, 1, 1).has_even_exponents());
        assert!(P::qp(1, 2, -4).has_even_exponents());
        assert!(!P::monomial(1, (2, 0), 4).has_even_exponents());
    }

    #[test]
    fn exact_division() {
        let a = q(1).sub(&p(2)).add(&P::qp(3, -1, 1));
        let b = p(-1).add(&P::qp(2, 1, 3)).sub(&P::one());
        assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&b).is_err());
        assert!(a.div_exact(&P::zero()).is_err());
        assert!(P::zero().div_exact(&b).unwrap().is_zero());
    }

    #[test]
    fn evaluation() {
        use num_bigint::BigInt;
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        // p = s², so (r, s) = (1, 2) gives q + p = 1 + 4.
        let pt = RationalPoint::new(r(1, 1), r(2, 1));
        assert_eq!(q(1).add(&p(1)).eval_rational(&pt).unwrap(), r(5, 1));
        let pt = RationalPoint::new(r(3, 1), r(1, 1));
        assert_eq!(P::monomial(1, (1, 0), 2).eval_rational(&pt).unwrap(), r(3, 1));
        // (p − p⁻¹)/(q − q⁻¹) at r=2, s=3: p = 9, q = 4.
        let pt = RationalPoint::new(r(2, 1), r(3, 1));
        let num = p(1).sub(&p(-1)).eval_rational(&pt).unwrap();
        let den = q(1).sub(&q(-1)).eval_rational(&pt).unwrap();
        assert_eq!(ratio(num, den).unwrap(), r(80 * 4, 9 * 15));
        assert!(P::monomial(1, (1, 0), 4).eval_rational(&pt).is_err());
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        // Widely spread exponents force the sort-merge path; a compact block forces the dense one.
        let spread = P::from_terms(1, (0..6).map(|k| ((k * 1000, -k * 700), (k as i128) - 2)));
        let blockish = P::from_terms(1, (0..6).map(|k| ((k % 3, k / 3), 2 * (k as i128) + 1)));
        let oracle = |a: &P, b: &P| {
            P::from_terms(
                1,
                a.terms().iter().flat_map(|(e1, c1)| {
                    b.terms().iter().map(move |(e2, c2)| ((e1.0 + e2.0, e1.1 + e2.1), c1 * c2))
                }),
            )
        };
        for (a, b) in [(&spread, &blockish), (&blockish, &blockish), (&spread, &spread)] {
            assert_eq!(a.mul(b), oracle(a, b));
        }
    }
}
