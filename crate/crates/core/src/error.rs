use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("game handle does not belong to this store")]
    InvalidHandle,

    #[error("player count {0} is out of range (2..=32)")]
    InvalidPlayerCount(usize),

    #[error("{op} requires more than two players")]
    NeedsMoreThanTwoPlayers { op: &'static str },

    #[error("node cap of {cap} exceeded")]
    ResourceLimit { cap: usize },

    #[error("seat {seat} is out of range for {players} players")]
    SeatOutOfRange { seat: usize, players: usize },

    #[error("outcome {0} is not a proper subset of the players")]
    ImproperOutcome(String),

    #[error("outcome {outcome} cannot occur with {players} players")]
    UnreachableOutcome { outcome: String, players: usize },

    #[error("game is not undetermined")]
    NotUndetermined,

    #[error("precondition not established: {0}")]
    Unproven(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("fixture {name}: {msg}")]
    Fixture { name: &'static str, msg: String },

    #[error("quotient consistency failure: {0}")]
    Quotient(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
