use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// One named tensor with a label per slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub name: String,
    pub labels: Vec<String>,
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name, self.labels.join(","))
    }
}

/// Einstein-summation network: every non-output label occurs exactly twice,
/// every output label exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    pub factors: Vec<FactorSpec>,
    pub outputs: Vec<String>,
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '^' | '_' | '\'')
}

fn parse_factor(tok: &str) -> Result<FactorSpec> {
    let bad = || Error::Parse(format!("malformed factor `{tok}`"));
    let open = tok.find('[').ok_or_else(bad)?;
    let inner = tok[open + 1..].strip_suffix(']').ok_or_else(bad)?;
    let name = &tok[..open];
    if name.is_empty() || !name.chars().all(is_name_char) {
        return Err(bad());
    }
    let labels: Vec<String> = inner.split(',').map(|l| l.trim().to_string()).collect();
    if labels.iter().any(|l| l.is_empty() || !l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')) {
        return Err(bad());
    }
    Ok(FactorSpec { name: name.to_string(), labels })
}

/// Parses whitespace- or newline-separated factors `name[l1,l2,...]`;
/// `#` starts a comment running to the end of the line.
pub fn parse_factors(text: &str) -> Result<Vec<FactorSpec>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        // Labels never contain spaces, but allow `a, b` inside brackets.
        let mut buf = String::new();
        let mut depth = 0;
        for c in line.chars() {
            match c {
                '[' => depth += 1,
                ']' => depth -= 1,
                _ => {}
            }
            if c.is_whitespace() && depth == 0 {
                if !buf.is_empty() {
                    out.push(parse_factor(&buf)?);
                    buf.clear();
                }
            } else if !c.is_whitespace() {
                buf.push(c);
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced brackets in `{line}`")));
        }
        if !buf.is_empty() {
            out.push(parse_factor(&buf)?);
        }
    }
    Ok(out)
}

impl Network {
    pub fn new(factors: Vec<FactorSpec>, outputs: Vec<String>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Malformed("network has no factors".into()));
        }
        let mut count: BTreeMap<&str, usize> = BTreeMap::new();
        for f in &factors {
            for l in &f.labels {
                *count.entry(l.as_str()).or_default() += 1;
            }
        }
        for o in &outputs {
            if outputs.iter().filter(|x| *x == o).count() != 1 {
                return Err(Error::Malformed(format!("output label `{o}` repeated")));
            }
            match count.get(o.as_str()) {
                Some(1) => {}
                n => {
                    return Err(Error::Malformed(format!(
                        "output label `{o}` occurs {} times (expected once)",
                        n.copied().unwrap_or(0)
                    )))
                }
            }
        }
        for (l, n) in &count {
            if !outputs.iter().any(|o| o == l) && *n != 2 {
                return Err(Error::Malformed(format!("label `{l}` occurs {n} times (expected twice)")));
            }
        }
        Ok(Network { factors, outputs })
    }

    /// `factors -> o1,o2,...` on one line, or factors only with explicit outputs.
    pub fn parse(text: &str, outputs: &[&str]) -> Result<Self> {
        let factors = parse_factors(text)?;
        Network::new(factors, outputs.iter().map(|s| s.to_string()).collect())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.factors.iter().map(|f| f.name.as_str())
    }
}

/// Parses `NAME[o1,o2,...] = factors`: a named intermediate whose slot
/// order is the bracketed output list.
pub fn parse_definition(text: &str) -> Result<(String, Network)> {
    let (head, body) = text
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("definition `{}` lacks `=`", text.trim())))?;
    let head = parse_factor(head.trim())?;
    let net = Network::new(parse_factors(body)?, head.labels)?;
    Ok((head.name, net))
}

impl fmt::Display for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{} -> {}", parts.join(" "), self.outputs.join(","))
    }
}

/// A closed (1,1)-tangle network with open labels `x` (bottom) and `y` (top).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkRecipe {
    pub network: Network,
}

impl NetworkRecipe {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(NetworkRecipe { network: Network::parse(text, &["x", "y"])? })
    }

    pub fn from_factors(factors: Vec<FactorSpec>) -> Result<Self> {
        Ok(NetworkRecipe { network: Network::new(factors, vec!["x".into(), "y".into()])? })
    }
}

impl fmt::Display for NetworkRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.network.factors {
            writeln!(f, "{x}")?;
        }
        Ok(())
    }
}
