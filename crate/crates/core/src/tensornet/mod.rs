//! Sparse tensors over a coefficient ring, Einstein-summation networks,
//! and the crossing combinators used to assemble (1,1)-tangles.

pub mod combinators;
pub mod contract;
pub mod library;
pub mod recipe;
pub mod tensor;

pub use combinators::Caps;
pub use contract::{contract_network, Order};
pub use library::{contract, TensorLibrary};
pub use recipe::{parse_definition, parse_factors, FactorSpec, Network, NetworkRecipe};
pub use tensor::{Rank2Tensor, Rank4Tensor, Tensor};
