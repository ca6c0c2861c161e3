//   Copyright 2026 The tugames Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{n} players exceeds the configured maximum of {max} (ordered Bell number of {n} is {chains} chains)")]
    Capacity { n: usize, max: usize, chains: u128 },

    #[error("player count must be at least 1")]
    NoPlayers,

    #[error("missing value for coalition \"{0}\"")]
    MissingCoalition(String),

    #[error("duplicate coalition key \"{0}\"")]
    DuplicateKey(String),

    #[error("invalid coalition key \"{key}\": {reason}")]
    InvalidCoalitionKey { key: String, reason: String },

    #[error("value \"{value}\" of coalition \"{key}\" is not a rational number")]
    InvalidRational { key: String, value: String },

    #[error("not a rational number: \"{0}\"")]
    BadRational(String),

    #[error("malformed game file: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("polyhedron is empty")]
    Empty,

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("game is not simple: {0}")]
    NotSimple(String),

    #[error("game is not submodular")]
    NotSubmodular,

    #[error("glove game needs at least as many left gloves as right gloves (p={p}, q={q}); relabel the players")]
    GloveOrder { p: usize, q: usize },
}

impl Error {
    /// Short machine-readable tag used in CLI error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Capacity { .. } => "capacity",
            Error::NoPlayers => "no_players",
            Error::MissingCoalition(_) => "missing_coalition",
            Error::DuplicateKey(_) => "duplicate_key",
            Error::InvalidCoalitionKey { .. } => "invalid_coalition_key",
            Error::InvalidRational { .. } | Error::BadRational(_) => "invalid_rational",
            Error::Json(_) => "json",
            Error::InvalidGame(_) => "invalid_game",
            Error::InvalidPolytope(_) => "invalid_polytope",
            Error::InvalidChain(_) => "invalid_chain",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::Empty => "empty",
            Error::Unbounded => "unbounded",
            Error::NotSimple(_) => "not_simple",
            Error::NotSubmodular => "not_submodular",
            Error::GloveOrder { .. } => "glove_order",
        }
    }
}
