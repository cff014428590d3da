//! Sum laws: undeterminedness, absorbing games, reverting, and checkers.

mod check;
mod pool;
mod undetermined;

pub use check::{
    check_law, equal_refute, search_trebling, sum_allowed3, sum_bound3, Law, Violation,
};
pub use pool::{
    born_by, default_pool, default_seeds, enumerate_games, nim_positions, simplest_first, GamePool,
    DEFAULT_POOL_BUDGET,
};
pub use undetermined::AbsorbingVerdict;
