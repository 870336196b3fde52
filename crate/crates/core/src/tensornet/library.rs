use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;

use super::combinators::{beside, stack, twist_down, twist_left, twist_right, Caps};
use super::contract::{contract_network, Order};
use super::recipe::{Network, NetworkRecipe};
use super::tensor::Tensor;
use crate::error::{Error, Result};
use crate::polyring::Ring;

type Cell<S> = Arc<OnceLock<Result<Arc<Tensor<S>>>>>;

/// Name → tensor bindings for recipes. Base tensors are `R`, `S`, the caps
/// `Op`, `Om`, `Up`, `Um` and `delta`; derived names such as `R^3`, `Sd`,
/// `RlRr`, `SuSd`, `Rudu^5` are built on demand by the matching combinator,
/// and named intermediates may be defined as networks. Everything derived is
/// built once and shared between threads.
pub struct TensorLibrary<S> {
    dim: usize,
    base: FxHashMap<String, Arc<Tensor<S>>>,
    defs: FxHashMap<String, Network>,
    cache: Mutex<FxHashMap<String, Cell<S>>>,
    caching: bool,
    order: Order,
}

fn parse_count(s: &str, what: &str) -> Result<usize> {
    s.parse::<usize>().map_err(|_| Error::Unbound(format!("{what}: bad count `{s}`")))
}

impl<S: Ring> TensorLibrary<S> {
    pub fn new(r: Tensor<S>, s: Tensor<S>, caps: Caps<S>) -> Self {
        let dim = r.dim();
        let mut base = FxHashMap::default();
        base.insert("R".to_string(), Arc::new(r));
        base.insert("S".to_string(), Arc::new(s));
        base.insert("Op".to_string(), caps.op);
        base.insert("Om".to_string(), caps.om);
        base.insert("Up".to_string(), caps.up);
        base.insert("Um".to_string(), caps.um);
        base.insert("delta".to_string(), Arc::new(Tensor::identity(dim)));
        TensorLibrary {
            dim,
            base,
            defs: FxHashMap::default(),
            cache: Mutex::new(FxHashMap::default()),
            caching: true,
            order: Order::Greedy,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Disables memoization (for checking that caching is semantically invisible).
    pub fn without_cache(mut self) -> Self {
        self.caching = false;
        self
    }

    pub fn with_order(mut self, order: Order) -> Self {
        self.order = order;
        self
    }

    /// Registers a named intermediate (its outputs define its slot order).
    pub fn define(&mut self, name: &str, net: Network) {
        self.defs.insert(name.to_string(), net);
        self.cache.get_mut().expect("cache lock").clear();
    }

    pub fn caps(&self) -> Caps<S> {
        Caps {
            op: Arc::clone(&self.base["Op"]),
            om: Arc::clone(&self.base["Om"]),
            up: Arc::clone(&self.base["Up"]),
            um: Arc::clone(&self.base["Um"]),
        }
    }

    /// Same bindings and definitions with the two crossings exchanged
    /// (every diagram is replaced by its mirror image).
    pub fn mirrored(&self) -> Self {
        let mut base = self.base.clone();
        let r = base.remove("R").expect("R bound");
        let s = base.remove("S").expect("S bound");
        base.insert("R".into(), s);
        base.insert("S".into(), r);
        TensorLibrary {
            dim: self.dim,
            base,
            defs: self.defs.clone(),
            cache: Mutex::new(FxHashMap::default()),
            caching: self.caching,
            order: self.order,
        }
    }

    pub fn resolve(&self, name: &str) -> Result<Arc<Tensor<S>>> {
        if let Some(t) = self.base.get(name) {
            return Ok(Arc::clone(t));
        }
        if !self.caching {
            return self.compute(name);
        }
        let cell = {
            let mut cache = self.cache.lock().expect("cache lock");
            Arc::clone(cache.entry(name.to_string()).or_default())
        };
        cell.get_or_init(|| self.compute(name)).clone()
    }

    fn compute(&self, name: &str) -> Result<Arc<Tensor<S>>> {
        if let Some(net) = self.defs.get(name) {
            return Ok(Arc::new(self.contract_net(net)?));
        }
        let mut chars = name.chars();
        let x = chars.next().ok_or_else(|| Error::Unbound(name.into()))?;
        let rest = chars.as_str();
        let xs = x.to_string();
        if !matches!(x, 'R' | 'S') || !self.base.contains_key(&xs) {
            return Err(Error::Unbound(name.into()));
        }
        let caps = self.caps();
        let get = |n: String| self.resolve(&n);
        let t = if let Some(n) = rest.strip_prefix('^') {
            match parse_count(n, name)? {
                0 => return Err(Error::Invalid(format!("`{name}`: power must be at least 1"))),
                1 => return get(xs),
                n => stack(&get(xs.clone())?, &get(format!("{x}^{}", n - 1))?)?,
            }
        } else if let Some(n) = rest.strip_prefix("udu^") {
            match parse_count(n, name)? {
                1 => return get(xs),
                n if n % 2 == 1 => beside(&get(format!("{x}udu^{}", n - 2))?, &get(format!("{x}d{x}u"))?, &caps.op, &caps.um)?,
                _ => return Err(Error::Invalid(format!("`{name}`: chain length must be odd"))),
            }
        } else if let Some(n) = rest.strip_prefix("d^") {
            match parse_count(n, name)? {
                0 => return Err(Error::Invalid(format!("`{name}`: power must be at least 1"))),
                1 => return get(format!("{x}d")),
                n => stack(&get(format!("{x}d"))?, &get(format!("{x}d^{}", n - 1))?)?,
            }
        } else if rest == "d" {
            twist_down(&*get(xs)?, &caps)?
        } else if rest == "l" {
            twist_left(&*get(xs)?, &caps)?
        } else if rest == "r" {
            twist_right(&*get(xs)?, &caps)?
        } else if rest == format!("u{x}d") {
            beside(&get(xs)?, &get(format!("{x}d"))?, &caps.op, &caps.um)?
        } else if rest == format!("d{x}u") {
            beside(&get(format!("{x}d"))?, &get(xs)?, &caps.om, &caps.up)?
        } else if rest == format!("l{x}r") {
            stack(&get(format!("{x}l"))?, &get(format!("{x}r"))?)?
        } else if rest == format!("r{x}l") {
            stack(&get(format!("{x}r"))?, &get(format!("{x}l"))?)?
        } else {
            return Err(Error::Unbound(name.into()));
        };
        Ok(Arc::new(t))
    }

    fn contract_net(&self, net: &Network) -> Result<Tensor<S>> {
        let tensors = net.names().map(|n| self.resolve(n)).collect::<Result<Vec<_>>>()?;
        contract_network(net, tensors, self.order)
    }

    /// `(T)^y_x`, returned as a rank-2 tensor indexed `[x, y]`.
    pub fn contract(&self, recipe: &NetworkRecipe) -> Result<Tensor<S>> {
        self.contract_net(&recipe.network)
    }

    /// Contracts `net` after evaluating `defs` in order; each definition may
    /// use library names and earlier definitions. Definitions are local to
    /// this call, so different recipes may reuse intermediate names.
    pub fn contract_scoped(&self, defs: &[(String, Network)], net: &Network) -> Result<Tensor<S>> {
        let mut local: FxHashMap<&str, Arc<Tensor<S>>> = FxHashMap::default();
        let bind = |n: &Network, local: &FxHashMap<&str, Arc<Tensor<S>>>| -> Result<Vec<Arc<Tensor<S>>>> {
            n.names().map(|x| local.get(x).map(Arc::clone).map_or_else(|| self.resolve(x), Ok)).collect()
        };
        for (name, d) in defs {
            let t = contract_network(d, bind(d, &local)?, self.order)?;
            local.insert(name.as_str(), Arc::new(t));
        }
        contract_network(net, bind(net, &local)?, self.order)
    }

    pub fn contract_with(&self, recipe: &NetworkRecipe, order: Order) -> Result<Tensor<S>> {
        let tensors = recipe.network.names().map(|n| self.resolve(n)).collect::<Result<Vec<_>>>()?;
        contract_network(&recipe.network, tensors, order)
    }
}

/// Free-function form of [`TensorLibrary::contract`].
pub fn contract<S: Ring>(recipe: &NetworkRecipe, bindings: &TensorLibrary<S>) -> Result<Tensor<S>> {
    bindings.contract(recipe)
}
