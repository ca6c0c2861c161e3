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

//! Game sources accepted on the command line.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use tugames::game::{check_players, parse_game_capped, Coalition, Game, HARD_MAX_PLAYERS};
use tugames::{families, generate};

use crate::Failure;

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Game file in the JSON game format; `-` reads stdin. Repeatable for `properties`.
    #[arg(long, value_name = "PATH")]
    pub game: Vec<PathBuf>,

    /// Glove game with `p` left and `q` right owners, written `p,q`.
    #[arg(long, value_name = "P,Q")]
    pub glove: Option<String>,

    /// Simple game from its minimal winning coalitions, e.g. `1,2;1,3`.
    #[arg(long, value_name = "SETS")]
    pub simple: Option<String>,

    /// Unanimity game of a carrier, e.g. `1,3`.
    #[arg(long, value_name = "CARRIER")]
    pub unanimity: Option<String>,

    /// Random rational game; needs `--n` and `--seed`.
    #[arg(long, requires = "seed")]
    pub random: bool,

    /// Number of players for generated games.
    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long)]
    pub seed: Option<u64>,

    /// Number of random games (only used by `properties`).
    #[arg(long, default_value_t = 1)]
    pub count: usize,

    /// Largest accepted player count.
    #[arg(long, default_value_t = tugames::game::DEFAULT_MAX_PLAYERS)]
    pub max_n: usize,
}

impl Input {
    /// Loads every game named by the input options.
    pub fn games(&self) -> Result<Vec<Game>, Failure> {
        let sources = [
            !self.game.is_empty(),
            self.glove.is_some(),
            self.simple.is_some(),
            self.unanimity.is_some(),
            self.random,
        ];
        if sources.iter().filter(|&&s| s).count() != 1 {
            return Err(Failure::usage(
                "exactly one of --game, --glove, --simple, --unanimity, --random is required",
            ));
        }
        if self.max_n > HARD_MAX_PLAYERS {
            return Err(Failure::usage(format!("--max-n may not exceed {HARD_MAX_PLAYERS}")));
        }
        let games = if !self.game.is_empty() {
            self.game
                .iter()
                .map(|path| Ok(parse_game_capped(&read_source(path)?, self.max_n)?))
                .collect::<Result<_, Failure>>()?
        } else if let Some(spec) = &self.glove {
            let pq = parse_players(spec)?;
            let [p, q] = pq[..] else {
                return Err(Failure::usage("--glove expects two counts `p,q`"));
            };
            check_players(p + q, self.max_n)?;
            vec![families::make_glove(p, q)?]
        } else if let Some(spec) = &self.simple {
            vec![simple_game(spec, self.n, self.max_n)?]
        } else if let Some(spec) = &self.unanimity {
            let players = parse_players(spec)?;
            let n = self.n.unwrap_or_else(|| players.iter().copied().max().unwrap_or(0));
            check_players(n, self.max_n)?;
            vec![Game::unanimity(n, Coalition::parse_key(spec, n)?)]
        } else {
            let n = self.n.ok_or_else(|| Failure::usage("--random needs --n"))?;
            check_players(n, self.max_n)?;
            let mut rng = generate::rng(self.seed.expect("clap enforces --seed"));
            (0..self.count.max(1))
                .map(|_| generate::random_game(n, &mut rng))
                .collect()
        };
        Ok(games)
    }

    /// The single game named by the input options.
    pub fn game(&self) -> Result<Game, Failure> {
        let mut games = self.games()?;
        if games.len() != 1 {
            return Err(Failure::usage("this subcommand takes a single game"));
        }
        Ok(games.remove(0))
    }
}

pub fn read_source(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::io(path, e))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    }
    Ok(text)
}

/// Comma-separated positive integers.
fn parse_players(spec: &str) -> Result<Vec<usize>, Failure> {
    spec.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("not a player list: \"{spec}\"")))
        })
        .collect()
}

pub fn simple_game(spec: &str, n: Option<usize>, max_n: usize) -> Result<Game, Failure> {
    let keys: Vec<&str> = spec.split(';').map(str::trim).collect();
    let mut largest = 0;
    for key in &keys {
        largest = largest.max(parse_players(key)?.into_iter().max().unwrap_or(0));
    }
    let n = n.unwrap_or(largest);
    check_players(n, max_n)?;
    let antichain = keys
        .iter()
        .map(|k| Coalition::parse_key(k, n))
        .collect::<tugames::Result<Vec<_>>>()?;
    Ok(families::SimpleGameView::from_minimal_winning(n, &antichain)?.to_game())
}
