//! Short N-player impartial and partizan games under normal play.

pub mod error;
pub mod game;
mod intern;
pub mod laws;
pub mod nim;
pub mod notation;
pub mod outcome;
pub mod partizan;
pub mod tables;

pub use error::{Error, Result};
pub use game::{GameId, GameStore, PlayerCount};
pub use outcome::Outcome;
