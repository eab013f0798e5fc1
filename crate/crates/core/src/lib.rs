//! Fair allocation of players to teams when both sides have preferences:
//! envy-freeness up to one player, stability notions, Pareto optimality
//! and justified envy, together with the algorithms that achieve them.

pub mod error;
pub mod experiment;
pub mod fixtures;
pub mod generate;
pub mod justified;
pub mod matching;
pub mod model;
pub mod pareto;
pub mod solve;
pub mod stability;
pub mod verify;

pub use error::{Error, Result};
pub use model::{Allocation, Comparison, Instance, PlayerSpec};
pub use solve::Algorithm;
pub use verify::Property;
