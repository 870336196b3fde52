use serde_json::{Map, Value};

use super::coeff::Coefficient;
use super::laurent::{Exp, LaurentPoly};
use crate::error::{Error, Result};

/// Output format shared by every serialized polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format `{s}` (plain|json|csv)"))),
        }
    }
}

/// Printed names of the two exponent slots. The second variable is printed first.
#[derive(Clone, Copy, Debug)]
pub struct Vars {
    pub q: &'static str,
    pub p: &'static str,
}

pub const QP: Vars = Vars { q: "q", p: "p" };
pub const T: Vars = Vars { q: "t", p: "s" };
pub const A: Vars = Vars { q: "A", p: "B" };

/// Display order: by `e_q`, the `p⁰` term first, then ascending `e_p`.
fn display_key(e: &Exp) -> (i32, bool, i32) {
    (e.0, e.1 != 0, e.1)
}

fn exponent_text<C: Coefficient>(poly: &LaurentPoly<C>, units: i32) -> String {
    let (n, d) = poly.natural(units);
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

fn monomial_text<C: Coefficient>(poly: &LaurentPoly<C>, e: Exp, vars: Vars) -> String {
    let mut parts = Vec::new();
    for (name, units) in [(vars.p, e.1), (vars.q, e.0)] {
        if units == 0 {
            continue;
        }
        let ex = exponent_text(poly, units);
        parts.push(if ex == "1" { name.to_string() } else { format!("{name}^{ex}") });
    }
    parts.join(" ")
}

pub fn to_plain<C: Coefficient>(poly: &LaurentPoly<C>, vars: Vars) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<&(Exp, C)> = poly.terms().iter().collect();
    terms.sort_by_key(|t| display_key(&t.0));
    let mut out = String::new();
    for (k, (e, c)) in terms.into_iter().enumerate() {
        let (neg, mag) = c.plain_parts();
        let mon = monomial_text(poly, *e, vars);
        let body = match (mag, mon.is_empty()) {
            (Some(m), true) => m,
            (None, true) => "1".into(),
            (Some(m), false) => format!("{m} {mon}"),
            (None, false) => mon,
        };
        match (k, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

fn parse_exponent(s: &str, denom: u32) -> Result<i32> {
    let bad = || Error::Parse(format!("bad exponent `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<i64>().map_err(|_| bad())?, d.parse::<i64>().map_err(|_| bad())?),
        None => (s.parse::<i64>().map_err(|_| bad())?, 1),
    };
    if d <= 0 || (n * denom as i64) % d != 0 {
        return Err(Error::Parse(format!("exponent `{s}` not on grid 1/{denom}")));
    }
    i32::try_from(n * denom as i64 / d).map_err(|_| bad())
}

/// Recognizes `var` or `var^exp`, returning the exponent text.
fn split_power<'a>(tok: &'a str, var: &str) -> Option<&'a str> {
    let rest = tok.strip_prefix(var)?;
    if rest.is_empty() {
        Some("1")
    } else {
        rest.strip_prefix('^')
    }
}

fn parse_term<C: Coefficient>(toks: &[&str], vars: Vars, denom: u32) -> Result<(Exp, C)> {
    let mut coeff: Option<C> = None;
    let mut e: Exp = (0, 0);
    for (k, tok) in toks.iter().enumerate() {
        if let Some(ex) = split_power(tok, vars.p) {
            e.1 += parse_exponent(ex, denom)?;
        } else if let Some(ex) = split_power(tok, vars.q) {
            e.0 += parse_exponent(ex, denom)?;
        } else if k == 0 {
            coeff = Some(C::parse_plain(tok)?);
        } else {
            return Err(Error::Parse(format!("unexpected token `{tok}`")));
        }
    }
    Ok((e, coeff.unwrap_or_else(C::one)))
}

/// Inverse of [`to_plain`] on the grid `1/denom`; terms may appear in any order.
pub fn parse_plain<C: Coefficient>(s: &str, vars: Vars, denom: u32) -> Result<LaurentPoly<C>> {
    let s = s.trim();
    if s == "0" {
        return Ok(LaurentPoly::from_terms(denom, std::iter::empty()));
    }
    let mut terms = Vec::new();
    let mut sign_neg = false;
    let mut cur: Vec<&str> = Vec::new();
    let flush = |cur: &mut Vec<&str>, neg: bool, terms: &mut Vec<(Exp, C)>| -> Result<()> {
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        let (e, c) = parse_term::<C>(cur, vars, denom)?;
        terms.push((e, if neg { c.neg() } else { c }));
        cur.clear();
        Ok(())
    };
    for (k, tok) in s.split_whitespace().enumerate() {
        match tok {
            "+" | "-" => {
                if k > 0 {
                    flush(&mut cur, sign_neg, &mut terms)?;
                }
                sign_neg = tok == "-";
            }
            _ if k == 0 && tok.starts_with('-') && tok.len() > 1 => {
                sign_neg = true;
                cur.push(&tok[1..]);
            }
            _ => cur.push(tok),
        }
    }
    flush(&mut cur, sign_neg, &mut terms)?;
    Ok(LaurentPoly::from_terms(denom, terms))
}

pub fn to_json_value<C: Coefficient>(poly: &LaurentPoly<C>) -> Value {
    let terms: Vec<Value> = poly
        .terms()
        .iter()
        .map(|((a, b), c)| {
            let mut rec = Map::new();
            rec.insert("eq".into(), Value::from(*a));
            rec.insert("ep".into(), Value::from(*b));
            c.write_json(&mut rec);
            Value::Object(rec)
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("denom_scale".into(), Value::from(poly.denom()));
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

pub fn from_json_value<C: Coefficient>(v: &Value) -> Result<LaurentPoly<C>> {
    let bad = |w: &str| Error::Parse(format!("polynomial JSON: {w}"));
    let obj = v.as_object().ok_or_else(|| bad("not an object"))?;
    let denom = obj
        .get("denom_scale")
        .and_then(Value::as_u64)
        .filter(|d| *d > 0)
        .ok_or_else(|| bad("denom_scale"))? as u32;
    let arr = obj.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let rec = t.as_object().ok_or_else(|| bad("term"))?;
        let get = |k: &str| {
            rec.get(k)
                .and_then(Value::as_i64)
                .and_then(|x| i32::try_from(x).ok())
                .ok_or_else(|| bad(k))
        };
        terms.push(((get("eq")?, get("ep")?), C::read_json(rec)?));
    }
    Ok(LaurentPoly::from_terms(denom, terms))
}

pub fn to_csv<C: Coefficient>(poly: &LaurentPoly<C>) -> String {
    let mut out = format!("denom_scale,eq,ep,{}\n", C::csv_header());
    for ((a, b), c) in poly.terms() {
        out.push_str(&format!("{},{a},{b},{}\n", poly.denom(), c.write_csv()));
    }
    out
}

pub fn from_csv<C: Coefficient>(s: &str) -> Result<LaurentPoly<C>> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    lines.next().ok_or_else(|| Error::Parse("empty CSV".into()))?;
    let mut denom = None;
    let mut terms = Vec::new();
    for line in lines {
        let f: Vec<&str> = line.split(',').map(str::trim).collect();
        if f.len() < 4 {
            return Err(Error::Parse(format!("short CSV row `{line}`")));
        }
        let num = |x: &str| x.parse::<i64>().map_err(|_| Error::Parse(format!("bad CSV field `{x}`")));
        let d = num(f[0])? as u32;
        if *denom.get_or_insert(d) != d || d == 0 {
            return Err(Error::Parse("inconsistent denom_scale".into()));
        }
        terms.push(((num(f[1])? as i32, num(f[2])? as i32), C::read_csv(&f[3..])?));
    }
    Ok(LaurentPoly::from_terms(denom.unwrap_or(1), terms))
}

pub fn serialize<C: Coefficient>(poly: &LaurentPoly<C>, format: Format, vars: Vars) -> String {
    match format {
        Format::Plain => to_plain(poly, vars),
        Format::Json => to_json_value(poly).to_string(),
        Format::Csv => to_csv(poly),
    }
}

pub fn parse<C: Coefficient>(s: &str, format: Format, vars: Vars, denom: u32) -> Result<LaurentPoly<C>> {
    match format {
        Format::Plain => parse_plain(s, vars, denom),
        Format::Json => {
            let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            from_json_value(&v)
        }
        Format::Csv => from_csv(s),
    }
}
