//! Partizan N-player games.

pub mod order;
pub mod pool;
pub mod simplify;
pub mod store;

pub use order::{CompareVerdict, Rule};
pub use simplify::{dominated_example, reversible_example, DominatedExample, ReversibleExample};
pub use store::{integer_sum_outcome, PGameId, PartizanOutcome, PartizanStore, Player};
