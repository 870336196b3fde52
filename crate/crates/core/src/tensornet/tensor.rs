use rustc_hash::FxHashMap;

use crate::polyring::Ring;

/// Maximum rank representable by the packed index key (4 bits per slot).
pub const MAX_RANK: usize = 16;

/// Sparse tensor over a scalar ring. Indices are 1-based in the public API,
/// packed 4 bits per slot (slot 0 lowest) into a `u64` key internally.
/// No zero entry is ever stored.
#[derive(Clone, Debug)]
pub struct Tensor<S> {
    dim: usize,
    rank: usize,
    entries: FxHashMap<u64, S>,
}

/// A rank-2 tensor (caps, cups, closed tangles).
pub type Rank2Tensor<S> = Tensor<S>;
/// A rank-4 tensor (crossings and their composites).
pub type Rank4Tensor<S> = Tensor<S>;

pub(crate) fn slot_of(key: u64, slot: usize) -> usize {
    ((key >> (4 * slot)) & 0xF) as usize
}

fn encode(dim: usize, idx: &[usize]) -> u64 {
    let mut k = 0u64;
    for (slot, &i) in idx.iter().enumerate() {
        assert!(i >= 1 && i <= dim, "index {i} out of range 1..={dim}");
        k |= ((i - 1) as u64) << (4 * slot);
    }
    k
}

impl<S: Ring> Tensor<S> {
    pub fn new(dim: usize, rank: usize) -> Self {
        assert!((1..=16).contains(&dim), "dimension must be in 1..=16");
        assert!(rank <= MAX_RANK, "rank {rank} exceeds {MAX_RANK}");
        Tensor { dim, rank, entries: FxHashMap::default() }
    }

    pub(crate) fn from_raw(dim: usize, rank: usize, entries: FxHashMap<u64, S>) -> Self {
        let mut t = Tensor { dim, rank, entries };
        t.entries.retain(|_, v| !v.is_zero());
        t
    }

    pub fn from_fn(dim: usize, rank: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let mut t = Self::new(dim, rank);
        let mut idx = vec![1usize; rank];
        loop {
            t.set(&idx, f(&idx));
            let mut s = 0;
            loop {
                if s == rank {
                    return t;
                }
                idx[s] += 1;
                if idx[s] <= dim {
                    break;
                }
                idx[s] = 1;
                s += 1;
            }
        }
    }

    /// `δ_{ij}` as a rank-2 tensor.
    pub fn identity(dim: usize) -> Self {
        let mut t = Self::new(dim, 2);
        for i in 1..=dim {
            t.set(&[i, i], S::one());
        }
        t
    }

    /// Rank-2 tensor with the given diagonal.
    pub fn diagonal(diag: Vec<S>) -> Self {
        let mut t = Self::new(diag.len(), 2);
        for (i, v) in diag.into_iter().enumerate() {
            t.set(&[i + 1, i + 1], v);
        }
        t
    }

    /// Identity operator on `V⊗V` in the `[i,j,k,l] = e^{ik}_{jl}` layout.
    pub fn identity4(dim: usize) -> Self {
        let mut t = Self::new(dim, 4);
        for i in 1..=dim {
            for k in 1..=dim {
                t.set(&[i, i, k, k], S::one());
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: &[usize]) -> Option<&S> {
        assert_eq!(idx.len(), self.rank, "index arity");
        self.entries.get(&encode(self.dim, idx))
    }

    pub fn at(&self, idx: &[usize]) -> S {
        self.get(idx).cloned().unwrap_or_else(S::zero)
    }

    pub fn set(&mut self, idx: &[usize], v: S) {
        assert_eq!(idx.len(), self.rank, "index arity");
        let k = encode(self.dim, idx);
        if v.is_zero() {
            self.entries.remove(&k);
        } else {
            self.entries.insert(k, v);
        }
    }

    pub fn add_at(&mut self, idx: &[usize], v: &S) {
        let cur = self.at(idx);
        self.set(idx, cur.add(v));
    }

    pub(crate) fn raw(&self) -> &FxHashMap<u64, S> {
        &self.entries
    }

    pub fn decode(&self, key: u64) -> Vec<usize> {
        (0..self.rank).map(|s| slot_of(key, s) + 1).collect()
    }

    /// Nonzero entries with 1-based indices, in a deterministic order.
    pub fn entries(&self) -> Vec<(Vec<usize>, &S)> {
        let mut keys: Vec<&u64> = self.entries.keys().collect();
        keys.sort_by_key(|k| self.decode(**k));
        keys.into_iter().map(|k| (self.decode(*k), &self.entries[k])).collect()
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Tensor<T> {
        Tensor::from_raw(self.dim, self.rank, self.entries.iter().map(|(k, v)| (*k, f(v))).collect())
    }

    pub fn map_indexed(&self, f: impl Fn(&[usize], &S) -> S) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(k, v)| (*k, f(&self.decode(*k), v)))
            .collect();
        Tensor::from_raw(self.dim, self.rank, entries)
    }

    /// Output slot `s` takes input slot `perm[s]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank);
        let entries = self
            .entries
            .iter()
            .map(|(k, v)| {
                let mut nk = 0u64;
                for (s, &src) in perm.iter().enumerate() {
                    nk |= (slot_of(*k, src) as u64) << (4 * s);
                }
                (nk, v.clone())
            })
            .collect();
        Tensor { dim: self.dim, rank: self.rank, entries }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_shape(o);
        let mut entries = self.entries.clone();
        for (k, v) in &o.entries {
            entries.entry(*k).and_modify(|e| e.add_assign(v)).or_insert_with(|| v.clone());
        }
        Tensor::from_raw(self.dim, self.rank, entries)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&S::one().neg()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Tensor::from_raw(self.dim, self.rank, self.entries.iter().map(|(k, v)| (*k, v.mul(c))).collect())
    }

    fn check_shape(&self, o: &Self) {
        assert!(self.dim == o.dim && self.rank == o.rank, "tensor shape mismatch");
    }

    /// `Some(c)` when this rank-2 tensor equals `c·δ`.
    pub fn scalar_identity(&self) -> Option<S> {
        assert_eq!(self.rank, 2);
        let c = self.at(&[1, 1]);
        let ok = (1..=self.dim).all(|i| {
            (1..=self.dim).all(|j| if i == j { self.at(&[i, j]) == c } else { self.get(&[i, j]).is_none() })
        });
        ok.then_some(c)
    }

    /// Operator composition on `V⊗V`: `(AB)[i,j,k,l] = Σ A[i,m,k,n]·B[m,j,n,l]`.
    pub fn compose(&self, o: &Self) -> Self {
        assert!(self.rank == 4 && o.rank == 4 && self.dim == o.dim);
        let mut by_row: FxHashMap<(usize, usize), Vec<(usize, usize, &S)>> = FxHashMap::default();
        for (k, v) in &o.entries {
            let (m, j, n, l) = (slot_of(*k, 0), slot_of(*k, 1), slot_of(*k, 2), slot_of(*k, 3));
            by_row.entry((m, n)).or_default().push((j, l, v));
        }
        let mut out: FxHashMap<u64, S> = FxHashMap::default();
        for (k, a) in &self.entries {
            let (i, m, kk, n) = (slot_of(*k, 0), slot_of(*k, 1), slot_of(*k, 2), slot_of(*k, 3));
            if let Some(row) = by_row.get(&(m, n)) {
                for (j, l, b) in row {
                    let key = (i as u64) | ((*j as u64) << 4) | ((kk as u64) << 8) | ((*l as u64) << 12);
                    let prod = a.mul(b);
                    out.entry(key).and_modify(|e| e.add_assign(&prod)).or_insert(prod);
                }
            }
        }
        Tensor::from_raw(self.dim, 4, out)
    }

    /// Inverse by Gauss–Jordan elimination on the `dim²×dim²` matrix form,
    /// pivoting only on units supplied by `inv` (returns `None` if no unit pivot exists).
    pub fn invert4(&self, inv: impl Fn(&S) -> Option<S>) -> Option<Self> {
        assert_eq!(self.rank, 4);
        let d = self.dim;
        let n = d * d;
        let mut m: Vec<Vec<S>> = (0..n)
            .map(|r| {
                (0..2 * n)
                    .map(|c| {
                        if c < n {
                            let (i, k, j, l) = (r / d + 1, r % d + 1, c / d + 1, c % d + 1);
                            self.at(&[i, j, k, l])
                        } else if c - n == r {
                            S::one()
                        } else {
                            S::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let (piv, pinv) = (col..n).find_map(|r| inv(&m[r][col]).map(|iv| (r, iv)))?;
            m.swap(col, piv);
            for c in 0..2 * n {
                m[col][c] = m[col][c].mul(&pinv);
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let v = m[r][c].sub(&f.mul(&m[col][c]));
                    m[r][c] = v;
                }
            }
        }
        let mut out = Self::new(d, 4);
        for r in 0..n {
            for c in 0..n {
                let (i, k, j, l) = (r / d + 1, r % d + 1, c / d + 1, c % d + 1);
                out.set(&[i, j, k, l], m[r][n + c].clone());
            }
        }
        Some(out)
    }
}

impl<S: Ring> PartialEq for Tensor<S> {
    fn eq(&self, o: &Self) -> bool {
        self.dim == o.dim && self.rank == o.rank && self.entries == o.entries
    }
}
