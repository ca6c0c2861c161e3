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

//! Seeded game generators. Equal seeds give equal games on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{Coalition, Game};
use crate::rational::{self, Rational};

pub type GameRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GameRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 10` and `1 ≤ q ≤ 4`.
pub fn random_rational(rng: &mut GameRng) -> Rational {
    rational::ratio(rng.gen_range(-10..=10), rng.gen_range(1..=4))
}

fn random_nonnegative(rng: &mut GameRng) -> Rational {
    rational::ratio(rng.gen_range(0..=10), rng.gen_range(1..=4))
}

/// Independent random rational values on every nonempty coalition.
pub fn random_game(n: usize, rng: &mut GameRng) -> Game {
    Game::from_fn(n, |_| random_rational(rng))
}

pub fn random_additive(n: usize, rng: &mut GameRng) -> Game {
    let weights: Vec<Rational> = (0..n).map(|_| random_rational(rng)).collect();
    Game::additive(&weights)
}

/// Nonnegative combination of unanimity games on coalitions of size at
/// least two, plus a random additive game. Supermodular by construction.
pub fn supermodular_game(n: usize, rng: &mut GameRng) -> Game {
    let mut game = random_additive(n, rng);
    for carrier in Coalition::nonempty(n).filter(|c| c.len() >= 2) {
        if rng.gen_bool(0.6) {
            let weight = random_nonnegative(rng);
            game = game
                .add(&Game::unanimity(n, carrier).scale(&weight))
                .expect("same players");
        }
    }
    game
}

pub fn submodular_game(n: usize, rng: &mut GameRng) -> Game {
    supermodular_game(n, rng).neg()
}

/// Lowers `v(A∪B)` for a random incomparable pair `A, B` just enough to
/// violate supermodularity on that pair. Needs `n ≥ 2`.
pub fn break_supermodularity(game: &Game, rng: &mut GameRng) -> Game {
    let n = game.n();
    assert!(n >= 2, "supermodularity cannot fail with one player");
    let all: Vec<Coalition> = Coalition::nonempty(n).collect();
    let (a, b) = loop {
        let a = *all.choose(rng).unwrap();
        let b = *all.choose(rng).unwrap();
        if !a.is_subset(b) && !b.is_subset(a) {
            break (a, b);
        }
    };
    let union = a.union(b);
    let slack = game.value(union) + game.value(a.intersection(b)) - game.value(a) - game.value(b);
    let drop = slack + rational::int(1);
    Game::from_fn(n, |s| {
        if s == union {
            game.value(s) - &drop
        } else {
            game.value(s).clone()
        }
    })
}

/// A game in `Γ*`: coalitions are filled by size, each value at least the
/// best split `v(A∖{i}) + v({i})`.
pub fn weakly_superadditive_game(n: usize, rng: &mut GameRng) -> Game {
    let mut values = vec![Rational::from_integer(0.into()); 1 << n];
    let mut order: Vec<Coalition> = Coalition::nonempty(n).collect();
    order.sort_by_key(|c| (c.len(), c.bits()));
    for a in order {
        let floor = if a.len() == 1 {
            random_rational(rng)
        } else {
            a.players()
                .map(|i| &values[a.without(i).index()] + &values[Coalition::singleton(i).index()])
                .max()
                .unwrap()
        };
        values[a.index()] = floor
            + if a.len() == 1 {
                rational::int(0)
            } else {
                random_nonnegative(rng)
            };
    }
    Game::new(n, values).expect("v(∅) = 0")
}

/// A game outside `Γ*`: a random game in which `v(A∪{i}) < v(A) + v({i})`
/// for some nonempty `A` and `i ∉ A`. Needs `n ≥ 2`.
pub fn outside_gamma_star(n: usize, rng: &mut GameRng) -> Game {
    assert!(n >= 2, "every one-player game is weakly superadditive");
    let base = random_game(n, rng);
    let i = rng.gen_range(0..n);
    let others: Vec<Coalition> = Coalition::nonempty(n).filter(|a| !a.contains(i)).collect();
    let a = *others.choose(rng).unwrap();
    let target = a.with(i);
    let low = base.value(a) + base.singleton_value(i) - rational::int(1);
    Game::from_fn(n, |s| {
        if s == target {
            low.clone()
        } else {
            base.value(s).clone()
        }
    })
}

/// A random game in which `player` (0-based) is null.
pub fn with_null_player(n: usize, player: usize, rng: &mut GameRng) -> Game {
    let base = random_game(n, rng);
    Game::from_fn(n, |s| base.value(s.without(player)).clone())
}

/// A random game in which `player` (0-based) is a dummy worth a random amount.
pub fn with_dummy_player(n: usize, player: usize, rng: &mut GameRng) -> Game {
    let base = random_game(n, rng);
    let worth = random_rational(rng);
    Game::from_fn(n, |s| {
        let rest = base.value(s.without(player)).clone();
        if s.contains(player) {
            rest + &worth
        } else {
            rest
        }
    })
}
