use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::recipe::Network;
use super::tensor::{slot_of, Tensor, MAX_RANK};
use crate::error::{Error, Result};
use crate::polyring::Ring;

/// How the factor list is reduced to a single tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Order {
    /// Most shared labels first; ties by smallest result rank, then factor order.
    #[default]
    Greedy,
    /// Left to right: `((f₀·f₁)·f₂)·…`.
    Sequential,
}

struct Labeled<S> {
    t: Arc<Tensor<S>>,
    labels: Vec<u32>,
}

fn trace_repeats<S: Ring>(f: Labeled<S>) -> Labeled<S> {
    let mut labels = f.labels.clone();
    let mut t = f.t;
    loop {
        let dup = (0..labels.len()).find_map(|i| ((i + 1)..labels.len()).find(|&j| labels[j] == labels[i]).map(|j| (i, j)));
        let Some((i, j)) = dup else { break };
        let keep: Vec<usize> = (0..labels.len()).filter(|&s| s != i && s != j).collect();
        let mut out: FxHashMap<u64, S> = FxHashMap::default();
        for (k, v) in t.raw() {
            if slot_of(*k, i) != slot_of(*k, j) {
                continue;
            }
            let mut nk = 0u64;
            for (o, &s) in keep.iter().enumerate() {
                nk |= (slot_of(*k, s) as u64) << (4 * o);
            }
            out.entry(nk).and_modify(|e| e.add_assign(v)).or_insert_with(|| v.clone());
        }
        t = Arc::new(Tensor::from_raw(t.dim(), keep.len(), out));
        labels = keep.iter().map(|&s| labels[s]).collect();
    }
    Labeled { t, labels }
}

fn contract_pair<S: Ring>(a: &Labeled<S>, b: &Labeled<S>) -> Labeled<S> {
    let shared: Vec<u32> = a.labels.iter().copied().filter(|l| b.labels.contains(l)).collect();
    let a_free: Vec<usize> = (0..a.labels.len()).filter(|&s| !shared.contains(&a.labels[s])).collect();
    let b_free: Vec<usize> = (0..b.labels.len()).filter(|&s| !shared.contains(&b.labels[s])).collect();
    let a_sh: Vec<usize> = shared.iter().map(|l| a.labels.iter().position(|x| x == l).unwrap()).collect();
    let b_sh: Vec<usize> = shared.iter().map(|l| b.labels.iter().position(|x| x == l).unwrap()).collect();
    let out_rank = a_free.len() + b_free.len();
    assert!(out_rank <= MAX_RANK, "intermediate rank {out_rank} too large");

    let pack = |k: u64, slots: &[usize], offset: usize| -> u64 {
        let mut r = 0u64;
        for (o, &s) in slots.iter().enumerate() {
            r |= (slot_of(k, s) as u64) << (4 * (o + offset));
        }
        r
    };

    let mut index: FxHashMap<u64, Vec<(u64, &S)>> = FxHashMap::default();
    for (k, v) in b.t.raw() {
        index.entry(pack(*k, &b_sh, 0)).or_default().push((pack(*k, &b_free, a_free.len()), v));
    }
    let mut out: FxHashMap<u64, S> = FxHashMap::default();
    for (k, va) in a.t.raw() {
        let Some(rows) = index.get(&pack(*k, &a_sh, 0)) else { continue };
        let ka = pack(*k, &a_free, 0);
        for (kb, vb) in rows {
            let prod = va.mul(vb);
            match out.entry(ka | kb) {
                std::collections::hash_map::Entry::Occupied(mut e) => e.get_mut().add_assign(&prod),
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(prod);
                }
            }
        }
    }
    let labels = a_free.iter().map(|&s| a.labels[s]).chain(b_free.iter().map(|&s| b.labels[s])).collect();
    Labeled { t: Arc::new(Tensor::from_raw(a.t.dim(), out_rank, out)), labels }
}

fn pick<S>(fs: &[Labeled<S>], order: Order) -> (usize, usize) {
    if order == Order::Sequential {
        return (0, 1);
    }
    let mut best: Option<((usize, std::cmp::Reverse<usize>), (usize, usize))> = None;
    for i in 0..fs.len() {
        for j in (i + 1)..fs.len() {
            let s = fs[i].labels.iter().filter(|l| fs[j].labels.contains(l)).count();
            let r = fs[i].labels.len() + fs[j].labels.len() - 2 * s;
            let key = (s, std::cmp::Reverse(r));
            if best.as_ref().map_or(true, |(bk, _)| key > *bk) {
                best = Some((key, (i, j)));
            }
        }
    }
    best.expect("at least two factors").1
}

/// Contracts `net` with its factors bound to `tensors` (same order as `net.factors`).
pub fn contract_network<S: Ring>(net: &Network, tensors: Vec<Arc<Tensor<S>>>, order: Order) -> Result<Tensor<S>> {
    if tensors.len() != net.factors.len() {
        return Err(Error::Malformed("binding count differs from factor count".into()));
    }
    let dim = tensors[0].dim();
    let mut ids: FxHashMap<&str, u32> = FxHashMap::default();
    let mut fs = Vec::with_capacity(tensors.len());
    for (spec, t) in net.factors.iter().zip(tensors) {
        if t.dim() != dim {
            return Err(Error::Dimension(format!("`{}` has dimension {}, expected {dim}", spec.name, t.dim())));
        }
        if t.rank() != spec.labels.len() {
            return Err(Error::Dimension(format!(
                "`{}` has rank {}, but {} labels were given",
                spec.name,
                t.rank(),
                spec.labels.len()
            )));
        }
        let mut labels = Vec::with_capacity(spec.labels.len());
        for l in &spec.labels {
            let next = ids.len() as u32;
            labels.push(*ids.entry(l.as_str()).or_insert(next));
        }
        fs.push(trace_repeats(Labeled { t, labels }));
    }
    while fs.len() > 1 {
        let (i, j) = pick(&fs, order);
        let b = fs.remove(j);
        let a = fs.remove(i);
        fs.insert(i, contract_pair(&a, &b));
    }
    let last = fs.pop().expect("one factor");
    let out_ids: Vec<u32> = net.outputs.iter().map(|o| ids[o.as_str()]).collect();
    let perm: Vec<usize> = out_ids.iter().map(|id| last.labels.iter().position(|l| l == id).unwrap()).collect();
    Ok(last.t.permute(&perm))
}
