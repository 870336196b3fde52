use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Exact coefficient ring. The variant is a type parameter of each
/// polynomial, so two variants can never meet in one operation.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }

    /// `Some(self / o)` when the quotient exists in the ring.
    fn div_exact(&self, o: &Self) -> Option<Self>;

    /// Plain rendering as `(negative, magnitude)`; magnitude `None` means ±1.
    fn plain_parts(&self) -> (bool, Option<String>);
    fn parse_plain(s: &str) -> Result<Self>;

    /// Writes `re` (and `im` when meaningful) into a JSON term record.
    fn write_json(&self, rec: &mut serde_json::Map<String, Value>);
    fn read_json(rec: &serde_json::Map<String, Value>) -> Result<Self>;

    /// CSV columns after `denom_scale,eq,ep`.
    fn csv_header() -> &'static str;
    fn write_csv(&self) -> String;
    fn read_csv(fields: &[&str]) -> Result<Self>;

    /// Whether the value is an ordinary integer (imaginary part zero, denominator one).
    fn is_integer(&self) -> bool;

    /// The value as a rational, if it is real.
    fn to_rational(&self) -> Option<BigRational>;
}

fn overflow() -> ! {
    panic!("integer coefficient overflow")
}

fn int_json(n: i128) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(n.to_string()),
    }
}

fn read_int(v: Option<&Value>, key: &str) -> Result<i128> {
    match v {
        Some(Value::Number(n)) => n
            .as_i64()
            .map(i128::from)
            .ok_or_else(|| Error::Parse(format!("non-integer {key}"))),
        Some(Value::String(s)) => s
            .parse()
            .map_err(|_| Error::Parse(format!("bad {key}: {s}"))),
        None => Ok(0),
        Some(other) => Err(Error::Parse(format!("bad {key}: {other}"))),
    }
}

fn parse_i128(s: &str) -> Result<i128> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad integer coefficient `{s}`")))
}

impl Coefficient for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(n: i64) -> Self {
        n as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Self {
        self.checked_add(*o).unwrap_or_else(|| overflow())
    }
    fn sub(&self, o: &Self) -> Self {
        self.checked_sub(*o).unwrap_or_else(|| overflow())
    }
    fn neg(&self) -> Self {
        self.checked_neg().unwrap_or_else(|| overflow())
    }
    fn mul(&self, o: &Self) -> Self {
        self.checked_mul(*o).unwrap_or_else(|| overflow())
    }
    fn add_assign(&mut self, o: &Self) {
        *self = self.checked_add(*o).unwrap_or_else(|| overflow());
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if *o == 0 || self % o != 0 {
            None
        } else {
            Some(self / o)
        }
    }
    fn plain_parts(&self) -> (bool, Option<String>) {
        let m = self.unsigned_abs();
        (*self < 0, (m != 1).then(|| m.to_string()))
    }
    fn parse_plain(s: &str) -> Result<Self> {
        parse_i128(s)
    }
    fn write_json(&self, rec: &mut serde_json::Map<String, Value>) {
        rec.insert("re".into(), int_json(*self));
    }
    fn read_json(rec: &serde_json::Map<String, Value>) -> Result<Self> {
        read_int(rec.get("re"), "re")
    }
    fn csv_header() -> &'static str {
        "re"
    }
    fn write_csv(&self) -> String {
        self.to_string()
    }
    fn read_csv(fields: &[&str]) -> Result<Self> {
        match fields {
            [re] => parse_i128(re),
            _ => Err(Error::Parse("expected one coefficient column".into())),
        }
    }
    fn is_integer(&self) -> bool {
        true
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(BigRational::from_integer(BigInt::from(*self)))
    }
}

/// Gaussian integer `re + im·i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gaussian {
    pub re: i128,
    pub im: i128,
}

impl Gaussian {
    pub const I: Gaussian = Gaussian { re: 0, im: 1 };

    pub fn new(re: i128, im: i128) -> Self {
        Gaussian { re, im }
    }

    fn norm(&self) -> i128 {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }
}

impl Coefficient for Gaussian {
    fn zero() -> Self {
        Gaussian::new(0, 0)
    }
    fn one() -> Self {
        Gaussian::new(1, 0)
    }
    fn from_i64(n: i64) -> Self {
        Gaussian::new(n as i128, 0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
    fn add(&self, o: &Self) -> Self {
        Gaussian::new(self.re.add(&o.re), self.im.add(&o.im))
    }
    fn sub(&self, o: &Self) -> Self {
        Gaussian::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }
    fn neg(&self) -> Self {
        Gaussian::new(self.re.neg(), self.im.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        Gaussian::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        let n = o.norm();
        if n == 0 {
            return None;
        }
        // self · conj(o) / |o|²
        let num = self.mul(&Gaussian::new(o.re, o.im.neg()));
        Some(Gaussian::new(Coefficient::div_exact(&num.re, &n)?, Coefficient::div_exact(&num.im, &n)?))
    }
    fn plain_parts(&self) -> (bool, Option<String>) {
        if self.im == 0 {
            self.re.plain_parts()
        } else if self.re == 0 {
            let m = self.im.unsigned_abs();
            let mag = if m == 1 { "i".to_string() } else { format!("{m}i") };
            (self.im < 0, Some(mag))
        } else {
            let sign = if self.im < 0 { '-' } else { '+' };
            (false, Some(format!("({}{}{}i)", self.re, sign, self.im.unsigned_abs())))
        }
    }
    fn parse_plain(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Gaussian coefficient `{s}`"));
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix("i)")) {
            let split = inner
                .char_indices()
                .skip(1)
                .find(|&(_, c)| c == '+' || c == '-')
                .map(|(k, _)| k)
                .ok_or_else(bad)?;
            let re = parse_i128(&inner[..split])?;
            let im_str = &inner[split..];
            let im = match im_str {
                "+" => 1,
                "-" => -1,
                _ => parse_i128(im_str.trim_start_matches('+'))?,
            };
            return Ok(Gaussian::new(re, im));
        }
        if let Some(im) = s.strip_suffix('i') {
            let im = if im.is_empty() { 1 } else { parse_i128(im)? };
            return Ok(Gaussian::new(0, im));
        }
        Ok(Gaussian::new(parse_i128(s)?, 0))
    }
    fn write_json(&self, rec: &mut serde_json::Map<String, Value>) {
        rec.insert("re".into(), int_json(self.re));
        rec.insert("im".into(), int_json(self.im));
    }
    fn read_json(rec: &serde_json::Map<String, Value>) -> Result<Self> {
        Ok(Gaussian::new(read_int(rec.get("re"), "re")?, read_int(rec.get("im"), "im")?))
    }
    fn csv_header() -> &'static str {
        "re,im"
    }
    fn write_csv(&self) -> String {
        format!("{},{}", self.re, self.im)
    }
    fn read_csv(fields: &[&str]) -> Result<Self> {
        match fields {
            [re, im] => Ok(Gaussian::new(parse_i128(re)?, parse_i128(im)?)),
            _ => Err(Error::Parse("expected two coefficient columns".into())),
        }
    }
    fn is_integer(&self) -> bool {
        self.im == 0
    }
    fn to_rational(&self) -> Option<BigRational> {
        (self.im == 0).then(|| BigRational::from_integer(BigInt::from(self.re)))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational coefficient `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn rational_json(r: &BigRational) -> Value {
    if r.is_integer() {
        if let Some(v) = r.numer().to_i64() {
            return Value::from(v);
        }
    }
    Value::from(r.to_string())
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        (!Zero::is_zero(o)).then(|| self / o)
    }
    fn plain_parts(&self) -> (bool, Option<String>) {
        let m = self.abs();
        (self.is_negative(), (!m.is_one()).then(|| m.to_string()))
    }
    fn parse_plain(s: &str) -> Result<Self> {
        parse_rational(s)
    }
    fn write_json(&self, rec: &mut serde_json::Map<String, Value>) {
        rec.insert("re".into(), rational_json(self));
    }
    fn read_json(rec: &serde_json::Map<String, Value>) -> Result<Self> {
        match rec.get("re") {
            Some(Value::Number(n)) => n
                .as_i64()
                .map(<BigRational as Coefficient>::from_i64)
                .ok_or_else(|| Error::Parse("non-integer re".into())),
            Some(Value::String(s)) => parse_rational(s),
            _ => Err(Error::Parse("missing re".into())),
        }
    }
    fn csv_header() -> &'static str {
        "re"
    }
    fn write_csv(&self) -> String {
        self.to_string()
    }
    fn read_csv(fields: &[&str]) -> Result<Self> {
        match fields {
            [re] => parse_rational(re),
            _ => Err(Error::Parse("expected one coefficient column".into())),
        }
    }
    fn is_integer(&self) -> bool {
        BigRational::is_integer(self)
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic() {
        let i = Gaussian::I;
        assert_eq!(i.mul(&i), Gaussian::new(-1, 0));
        let a = Gaussian::new(3, -2);
        let b = Gaussian::new(1, 4);
        assert_eq!(a.mul(&b).div_exact(&b), Some(a));
        assert_eq!(Gaussian::new(1, 0).div_exact(&Gaussian::new(2, 0)), None);
    }

    #[test]
    fn gaussian_plain_round_trip() {
        for g in [
            Gaussian::new(3, -2),
            Gaussian::new(-3, 1),
            Gaussian::new(0, -1),
            Gaussian::new(0, 5),
            Gaussian::new(-7, 0),
        ] {
            let (neg, mag) = g.plain_parts();
            let body = mag.unwrap_or_else(|| if g.im == 0 { "1".into() } else { "i".into() });
            let mut parsed = Gaussian::parse_plain(&body).unwrap();
            if neg {
                parsed = parsed.neg();
            }
            assert_eq!(parsed, g);
        }
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn integer_overflow_is_loud() {
        let _ = i128::MAX.add(&1);
    }
}
