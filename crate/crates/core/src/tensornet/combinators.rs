//! Auxiliary tensors built from a crossing `X` and the caps/cups.
//! Each is the defining contraction, evaluated by the network engine.

use std::sync::Arc;

use super::contract::{contract_network, Order};
use super::recipe::Network;
use super::tensor::Tensor;
use crate::error::{Error, Result};
use crate::polyring::Ring;

/// `Ω⁺, Ω⁻, ℧⁺, ℧⁻` as rank-2 tensors.
#[derive(Clone, Debug)]
pub struct Caps<S> {
    pub op: Arc<Tensor<S>>,
    pub om: Arc<Tensor<S>>,
    pub up: Arc<Tensor<S>>,
    pub um: Arc<Tensor<S>>,
}

impl<S: Ring> Caps<S> {
    pub fn new(op: Tensor<S>, om: Tensor<S>, up: Tensor<S>, um: Tensor<S>) -> Self {
        Caps { op: Arc::new(op), om: Arc::new(om), up: Arc::new(up), um: Arc::new(um) }
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }
}

/// Evaluates `text -> outputs` with factor names bound by `bind`.
pub fn einsum<S: Ring>(text: &str, outputs: &[&str], bind: &[(&str, &Arc<Tensor<S>>)]) -> Result<Tensor<S>> {
    let net = Network::parse(text, outputs)?;
    let tensors = net
        .factors
        .iter()
        .map(|f| {
            bind.iter()
                .find(|(n, _)| *n == f.name)
                .map(|(_, t)| Arc::clone(t))
                .ok_or_else(|| Error::Unbound(f.name.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    contract_network(&net, tensors, Order::Greedy)
}

const ABCD: [&str; 4] = ["a", "b", "c", "d"];

fn check4<S: Ring>(x: &Tensor<S>, caps: &Caps<S>) -> Result<()> {
    if x.rank() != 4 {
        return Err(Error::Dimension(format!("expected a rank-4 tensor, got rank {}", x.rank())));
    }
    if x.dim() != caps.dim() {
        return Err(Error::Dimension(format!("crossing dimension {} vs caps {}", x.dim(), caps.dim())));
    }
    Ok(())
}

fn arc<S: Ring>(x: &Tensor<S>) -> Arc<Tensor<S>> {
    Arc::new(x.clone())
}

pub fn twist_left<S: Ring>(x: &Tensor<S>, caps: &Caps<S>) -> Result<Tensor<S>> {
    check4(x, caps)?;
    einsum("X[e,d,a,h] Om[b,e] Um[h,c]", &ABCD, &[("X", &arc(x)), ("Om", &caps.om), ("Um", &caps.um)])
}

pub fn twist_right<S: Ring>(x: &Tensor<S>, caps: &Caps<S>) -> Result<Tensor<S>> {
    check4(x, caps)?;
    einsum("X[c,f,g,b] Up[a,f] Op[g,d]", &ABCD, &[("X", &arc(x)), ("Up", &caps.up), ("Op", &caps.op)])
}

pub fn twist_down<S: Ring>(x: &Tensor<S>, caps: &Caps<S>) -> Result<Tensor<S>> {
    check4(x, caps)?;
    einsum(
        "X[e,f,g,h] Up[a,h] Op[g,b] Up[c,f] Op[e,d]",
        &ABCD,
        &[("X", &arc(x)), ("Up", &caps.up), ("Op", &caps.op)],
    )
}

/// `top` placed directly above `bottom`: `T[a,e,c,f]·B[e,b,f,d]`.
pub fn stack<S: Ring>(top: &Arc<Tensor<S>>, bottom: &Arc<Tensor<S>>) -> Result<Tensor<S>> {
    einsum("T[a,e,c,f] B[e,b,f,d]", &ABCD, &[("T", top), ("B", bottom)])
}

/// `left` beside `right`, joined by a cap `o` and cup `u`: `L[a,b,e,f]·Rt[g,h,c,d]·O[e,g]·U[f,h]`.
pub fn beside<S: Ring>(
    left: &Arc<Tensor<S>>,
    right: &Arc<Tensor<S>>,
    o: &Arc<Tensor<S>>,
    u: &Arc<Tensor<S>>,
) -> Result<Tensor<S>> {
    einsum("L[a,b,e,f] Rt[g,h,c,d] O[e,g] U[f,h]", &ABCD, &[("L", left), ("Rt", right), ("O", o), ("U", u)])
}

pub fn power_n<S: Ring>(x: &Tensor<S>, n: usize) -> Result<Tensor<S>> {
    if n == 0 {
        return Err(Error::Invalid("power N must be at least 1".into()));
    }
    let x = arc(x);
    let mut acc = Arc::clone(&x);
    for _ in 1..n {
        acc = Arc::new(stack(&x, &acc)?);
    }
    Ok(Arc::unwrap_or_clone(acc))
}

pub fn xu_xd<S: Ring>(x: &Tensor<S>, caps: &Caps<S>) -> Result<Tensor<S>> {
    let xd = arc(&twist_down(x, caps)?);
    beside(&arc(x), &xd, &caps.op, &caps.um)
}

pub fn xd_xu<S: Ring>(x: &Tensor<S>, caps: &Caps<S>) -> Result<Tensor<S>> {
    let xd = arc(&twist_down(x, caps)?);
    beside(&xd, &arc(x), &caps.om, &caps.up)
}

pub fn xl_xr<S: Ring>(x: &Tensor<S>, caps: &Caps<S>) -> Result<Tensor<S>> {
    stack(&arc(&twist_left(x, caps)?), &arc(&twist_right(x, caps)?))
}

pub fn xr_xl<S: Ring>(x: &Tensor<S>, caps: &Caps<S>) -> Result<Tensor<S>> {
    stack(&arc(&twist_right(x, caps)?), &arc(&twist_left(x, caps)?))
}

/// Chain of `N` (odd) alternating upright/upside-down crossings.
pub fn x_udu_n<S: Ring>(x: &Tensor<S>, n: usize, caps: &Caps<S>) -> Result<Tensor<S>> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::Invalid(format!("udu chain length must be odd and positive, got {n}")));
    }
    check4(x, caps)?;
    let pair = arc(&xd_xu(x, caps)?);
    let mut acc = arc(x);
    for _ in 0..(n - 1) / 2 {
        acc = Arc::new(beside(&acc, &pair, &caps.op, &caps.um)?);
    }
    Ok(Arc::unwrap_or_clone(acc))
}
