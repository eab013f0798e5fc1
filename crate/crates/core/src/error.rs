use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    /// A document or argument failed structural validation. `field` names the
    /// offending location, e.g. `players[2].ranks`.
    #[error("invalid {field}: {reason}")]
    Invalid { field: String, reason: String },

    #[error("team index {team} out of range for {num_teams} teams")]
    TeamOutOfRange { team: usize, num_teams: usize },

    #[error("player index {player} out of range for {num_players} players")]
    PlayerOutOfRange { player: usize, num_players: usize },

    #[error(
        "values too large: {num_players} players with |value| up to {max_abs} overflow 64-bit sums"
    )]
    Overflow { num_players: usize, max_abs: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The search space of a brute-force or table-based routine exceeds its
    /// configured budget.
    #[error("{what} needs {required} steps but the budget is {budget}; reduce the number of players or teams")]
    Capacity {
        what: &'static str,
        required: String,
        budget: u64,
    },

    #[error("no perfect matching exists within the admissible edges")]
    Infeasible,

    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
}

impl Error {
    pub(crate) fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
