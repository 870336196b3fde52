use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::Ring;
use crate::tensornet::{parse_definition, Network, NetworkRecipe, Tensor, TensorLibrary};

/// A catalog link: its (1,1)-tangle recipe (with named intermediates) and
/// tabulated data.
#[derive(Clone, Debug)]
pub struct LinkEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub components: u32,
    pub writhe: i32,
    pub amphichiral: bool,
    /// `None` where the table gives no answer.
    pub invertible: Option<bool>,
    pub defs: Vec<(String, Network)>,
    pub recipe: NetworkRecipe,
}

/// Parses definition lines `NAME[outs] = factors` followed by the tangle
/// line `T = factors` (open labels `x`, `y`).
pub fn parse_tangle(text: &str) -> Result<(Vec<(String, Network)>, NetworkRecipe)> {
    let mut defs = Vec::new();
    let mut main = None;
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(body) = line.strip_prefix("T =") {
            main = Some(NetworkRecipe::parse(body)?);
        } else {
            defs.push(parse_definition(line)?);
        }
    }
    let main = main.ok_or_else(|| Error::Malformed("tangle has no `T = …` line".into()))?;
    Ok((defs, main))
}

struct Row {
    name: &'static str,
    aliases: &'static [&'static str],
    components: u32,
    writhe: i32,
    amphichiral: bool,
    invertible: Option<bool>,
    tangle: &'static str,
}

const KTB: &str = "
KTB[d,e,f,g] = R[d,a,b,c] Rd^2[l,m,f,n] SuSd[a,e,n,g] Op[b,l] Um[c,m]
KTC[d,e,j,k] = KTB[d,e,f,g] SlSr[h,i,j,k] Om[f,h] Up[g,i]";

const ROWS: &[Row] = &[
    Row {
        name: "0_1",
        aliases: &["unknot"],
        components: 1,
        writhe: 0,
        amphichiral: true,
        invertible: Some(true),
        tangle: "T = delta[x,y]",
    },
    Row {
        name: "2^2_1",
        aliases: &["hopf"],
        components: 2,
        writhe: 2,
        amphichiral: false,
        invertible: Some(true),
        tangle: "T = R^2[y,x,a,b] Op[a,c] Um[b,c]",
    },
    Row {
        name: "3_1",
        aliases: &["trefoil"],
        components: 1,
        writhe: 3,
        amphichiral: false,
        invertible: Some(true),
        tangle: "T = R^3[y,x,c,d] Op[c,f] Um[d,f]",
    },
    Row {
        name: "4_1",
        aliases: &["figure-eight"],
        components: 1,
        writhe: 0,
        amphichiral: true,
        invertible: Some(true),
        tangle: "T = RlRr[y,a,b,c] SuSd[a,x,c,d] Om[b,e] Up[d,e]",
    },
    Row {
        name: "5_1",
        aliases: &["cinquefoil"],
        components: 1,
        writhe: 5,
        amphichiral: false,
        invertible: Some(true),
        tangle: "T = R^5[y,x,c,d] Op[c,f] Um[d,f]",
    },
    Row {
        name: "5_2",
        aliases: &[],
        components: 1,
        writhe: 5,
        amphichiral: false,
        invertible: Some(true),
        tangle: "T = Rudu^3[b,c,d,x] R^2[a,b,y,d] Om[e,a] Up[e,c]",
    },
    Row {
        name: "5^2_1",
        aliases: &["whitehead"],
        components: 2,
        writhe: 2,
        amphichiral: false,
        invertible: Some(true),
        tangle: "
W[c,j,i,d] = S^2[c,j,e,f] Rd^2[g,h,i,d] Op[e,g] Um[f,h]
T = RrRl[a,i,y,b] W[c,x,i,d] Op[c,a] Up[d,b]",
    },
    Row {
        name: "6_1",
        aliases: &[],
        components: 1,
        writhe: -2,
        amphichiral: false,
        invertible: Some(true),
        tangle: "
SOA[b,c,d,x] = Sd[b,c,f,h] Sudu^3[g,i,d,x] Om[f,g] Up[h,i]
T = SOA[b,c,d,x] RrRl[a,b,y,d] Op[e,a] Um[e,c]",
    },
    Row {
        name: "6_2",
        aliases: &[],
        components: 1,
        writhe: 2,
        amphichiral: false,
        invertible: Some(true),
        tangle: "
STA[a,b,y,g] = R^3[e,f,y,g] Rd[a,b,c,d] Om[c,e] Up[d,f]
T = STA[a,b,y,g] SrSl[b,h,g,x] Op[i,a] Um[i,h]",
    },
    Row {
        name: "6_3",
        aliases: &[],
        components: 1,
        writhe: 0,
        amphichiral: true,
        invertible: Some(true),
        tangle: "
STA[a,b,d,f,i,y] = S^2[a,b,e,f] R[d,e,y,i]
STB[b,c,f,h,i,x] = S[b,c,g,h] R^2[f,g,i,x]
ST[a,c,d,h,y,x] = STA[a,b,d,f,i,y] STB[b,c,f,h,i,x]
T = ST[a,c,d,h,y,x] Om[j,d] Up[j,h] Om[k,a] Up[k,c]",
    },
    Row {
        name: "7_1",
        aliases: &["septfoil"],
        components: 1,
        writhe: 7,
        amphichiral: false,
        invertible: Some(true),
        tangle: "T = R^7[y,x,c,d] Op[c,f] Um[d,f]",
    },
    Row {
        name: "7_2",
        aliases: &[],
        components: 1,
        writhe: 7,
        amphichiral: false,
        invertible: Some(true),
        tangle: "T = Rudu^5[b,c,d,x] R^2[a,b,y,d] Om[e,a] Up[e,c]",
    },
    Row {
        name: "8_17",
        aliases: &[],
        components: 1,
        writhe: 0,
        amphichiral: true,
        invertible: Some(false),
        tangle: "
EA[a,b,c,d,e,f] = R^2[a,b,g,d] S^2[c,g,e,f]
EC[b,m,d,n,f,l] = S[d,k,f,l] R[b,m,k,n]
ED[m,h,n,i,l,j] = S[n,o,l,j] R[m,h,o,i]
EB[b,h,d,i,f,j] = EC[b,m,d,n,f,l] ED[m,h,n,i,l,j]
ES[a,h,c,i,e,j] = EA[a,b,c,d,e,f] EB[b,h,d,i,f,j]
T = ES[y,x,c,i,e,j] Op[c,r] Um[i,r] Op[e,s] Um[j,s]",
    },
    Row {
        name: "9_42",
        aliases: &[],
        components: 1,
        writhe: -1,
        amphichiral: false,
        invertible: Some(true),
        tangle: "
N[a,b,g,h] = Rd^2[a,b,c,d] S^3[e,f,g,h] Om[c,e] Up[d,f]
T = N[a,b,y,h] SdSu[b,i,h,j] RuRd[k,x,i,m] Up[m,j] Op[k,a]",
    },
    Row {
        name: "10_48",
        aliases: &[],
        components: 1,
        writhe: 0,
        amphichiral: false,
        invertible: Some(true),
        tangle: "
TA[a,b,d,g,h,y] = S^2[a,b,y,f] R^4[f,d,g,h]
TB[b,c,d,h,i,x] = S^3[b,c,d,e] R[e,x,h,i]
TT[a,c,g,i,y,x] = TA[a,b,d,g,h,y] TB[b,c,d,h,i,x]
T = TT[a,c,g,i,y,x] Om[j,a] Up[j,c] Op[g,k] Um[i,k]",
    },
];

const KT_TAIL: &str = "T = KTA[a,x,b,c] KTC[d,e,j,k] Om[b,d] Up[c,e] Op[a,j] Up[k,y]";
const KTA: &str = "KTA[a,s,b,c] = RuRd[a,d,b,e] S^2[d,s,f,g] Sd[h,i,e,c] Op[f,h] Um[g,i]";
const KTA_PRIME: &str = "KTA'[a,s,b,c] = S^2[a,d,f,g] Sd[h,i,b,e] RuRd[d,s,e,c] Op[f,h] Um[g,i]";

fn entry(
    name: &str,
    aliases: &[&str],
    components: u32,
    writhe: i32,
    amphichiral: bool,
    invertible: Option<bool>,
    tangle: &str,
) -> LinkEntry {
    let (defs, recipe) = parse_tangle(tangle).unwrap_or_else(|e| panic!("catalog recipe for {name}: {e}"));
    LinkEntry {
        name: name.to_string(),
        aliases: aliases.iter().map(|s| s.to_string()).collect(),
        components,
        writhe,
        amphichiral,
        invertible,
        defs,
        recipe,
    }
}

impl LinkEntry {
    /// A user-supplied tangle in the catalog recipe syntax.
    pub fn custom(name: &str, tangle: &str, writhe: i32, components: u32) -> Result<Self> {
        let (defs, recipe) = parse_tangle(tangle)?;
        Ok(LinkEntry {
            name: name.to_string(),
            aliases: Vec::new(),
            components,
            writhe,
            amphichiral: false,
            invertible: None,
            defs,
            recipe,
        })
    }
}

/// The Kinoshita–Terasaka knot and its mutant; the recipes differ only in
/// the `KTA` / `KTA'` block.
pub fn kt_pair() -> (LinkEntry, LinkEntry) {
    let kt = entry("KT", &["kt"], 1, -2, false, None, &format!("{KTA}\n{KTB}\n{KT_TAIL}"));
    let tail = KT_TAIL.replace("KTA[", "KTA'[");
    let kti = entry("KT'", &["KTI", "kt'", "kti"], 1, -2, false, None, &format!("{KTA_PRIME}\n{KTB}\n{tail}"));
    (kt, kti)
}

/// Three twist chains of `p`, `q`, `r` crossings side by side.
pub fn pretzel(p: u32, q: u32, r: u32) -> Result<LinkEntry> {
    if !(p % 2 == 1 && q % 2 == 1 && r % 2 == 1 && 3 <= p && p < q && q < r) {
        return Err(Error::Invalid(format!("pretzel({p},{q},{r}) needs odd 3 ≤ p < q < r")));
    }
    let tangle = format!("T = Rudu^{p}[a,b,y,e] Rudu^{q}[b,c,e,f] Rudu^{r}[c,d,f,x] Om[g,a] Up[g,d]");
    Ok(entry(
        &format!("P({p},{q},{r})"),
        &[],
        1,
        (p + q + r) as i32,
        false,
        Some(false),
        &tangle,
    ))
}

/// Every admissible pretzel with all parameters at most `max`, in
/// lexicographic order.
pub fn pretzels_up_to(max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for p in (3..=max).step_by(2) {
        for q in (p + 2..=max).step_by(2) {
            for r in (q + 2..=max).step_by(2) {
                out.push((p, q, r));
            }
        }
    }
    out
}

/// The fixed catalog in table order.
pub fn catalog() -> Vec<LinkEntry> {
    let mut v: Vec<LinkEntry> = ROWS
        .iter()
        .map(|r| entry(r.name, r.aliases, r.components, r.writhe, r.amphichiral, r.invertible, r.tangle))
        .collect();
    let (kt, kti) = kt_pair();
    v.push(kt);
    v.push(kti);
    v
}

fn parse_pretzel(s: &str) -> Option<Result<LinkEntry>> {
    let lower = s.to_ascii_lowercase();
    let rest = lower.strip_prefix("pretzel").or_else(|| lower.strip_prefix('p'))?;
    let inner = rest.trim().trim_start_matches('(').trim_end_matches(')');
    let nums: Vec<&str> = inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()).collect();
    if nums.len() != 3 {
        return None;
    }
    let parsed: Option<Vec<u32>> = nums.iter().map(|n| n.parse().ok()).collect();
    parsed.map(|n| pretzel(n[0], n[1], n[2]))
}

/// Looks a link up by name or alias (aliases are case-insensitive), or
/// builds a pretzel from `pretzel(p,q,r)` / `P(p,q,r)`.
pub fn lookup(name: &str) -> Result<LinkEntry> {
    let cat = catalog();
    if let Some(e) = cat
        .iter()
        .find(|e| e.name == name || e.aliases.iter().any(|a| a.eq_ignore_ascii_case(name)))
    {
        return Ok(e.clone());
    }
    if let Some(p) = parse_pretzel(name) {
        return p;
    }
    Err(Error::UnknownLink { name: name.to_string(), valid: valid_names(&cat) })
}

pub fn valid_names(cat: &[LinkEntry]) -> String {
    let mut v: Vec<String> = cat
        .iter()
        .map(|e| if e.aliases.is_empty() { e.name.clone() } else { format!("{} ({})", e.name, e.aliases.join(", ")) })
        .collect();
    v.push("pretzel(p,q,r)".into());
    v.join(", ")
}

impl LinkEntry {
    /// `(T)^y_x`, indexed `[x, y]`.
    pub fn abstract_tensor<S: Ring>(&self, lib: &TensorLibrary<S>) -> Result<Tensor<S>> {
        lib.contract_scoped(&self.defs, &self.recipe.network)
    }

    /// A named intermediate of this recipe, evaluated on its own.
    pub fn intermediate<S: Ring>(&self, name: &str, lib: &TensorLibrary<S>) -> Result<Tensor<S>> {
        let pos = self
            .defs
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| Error::Unbound(format!("{}: no intermediate `{name}`", self.name)))?;
        lib.contract_scoped(&self.defs[..pos], &self.defs[pos].1)
    }

    pub fn manifest(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "aliases": self.aliases,
            "components": self.components,
            "writhe": self.writhe,
            "amphichiral": self.amphichiral,
            "invertible": self.invertible,
        })
    }
}

impl fmt::Display for LinkEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, net) in &self.defs {
            let parts: Vec<String> = net.factors.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{name}[{}] = {}", net.outputs.join(","), parts.join(" "))?;
        }
        let parts: Vec<String> = self.recipe.network.factors.iter().map(|x| x.to_string()).collect();
        writeln!(f, "T = {}", parts.join(" "))
    }
}
