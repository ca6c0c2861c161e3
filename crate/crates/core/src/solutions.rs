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

//! Core, imputations, Weber set and the intermediate set.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{
    check_players, enumerate_chains_capped, marginal_vectors, Chain, Coalition, Game, DEFAULT_MAX_PLAYERS,
};
use crate::geometry::{set_equal, HPolytope, Label, PolyUnion, Region, VPolytope};
use crate::rational::Rational;

/// Largest player count at which `--verify` cross-checks the two routes to `M(v)`.
pub const VERIFY_MAX_PLAYERS: usize = 4;

/// `{x : x(N) = v(N), x(A) ≥ v(A) for ∅ ≠ A ⊊ N}`.
pub fn core(game: &Game) -> HPolytope {
    let n = game.n();
    let grand = game.grand();
    let mut p = HPolytope::new(n);
    p.add_equality(grand.incidence(n).into_coords(), game.grand_value().clone());
    for a in Coalition::nonempty(n).filter(|&a| a != grand) {
        p.add_inequality(a.incidence(n).into_coords(), game.value(a).clone());
    }
    p
}

/// `{x : x(N) = v(N), x_i ≥ v({i})}`.
pub fn imputations(game: &Game) -> HPolytope {
    let n = game.n();
    let mut p = HPolytope::new(n);
    p.add_equality(game.grand().incidence(n).into_coords(), game.grand_value().clone());
    for i in 0..n {
        p.add_inequality(
            Coalition::singleton(i).incidence(n).into_coords(),
            game.singleton_value(i).clone(),
        );
    }
    p
}

/// Convex hull of the `n!` marginal vectors.
pub fn weber(game: &Game) -> VPolytope {
    VPolytope::from_points(game.n(), marginal_vectors(game))
}

/// `M_H(v)`: every block receives its marginal contribution to the chain
/// and no proper part of a block can improve on what it gets.
pub fn chain_component(game: &Game, chain: &Chain) -> HPolytope {
    let n = game.n();
    assert_eq!(chain.n(), n, "chain and game must share the player set");
    let mut p = HPolytope::new(n);
    for (before, block) in chain.steps() {
        let base = game.value(before);
        p.add_equality(block.incidence(n).into_coords(), game.value(before.union(block)) - base);
        for part in block.subsets().filter(|&b| b != block) {
            p.add_inequality(part.incidence(n).into_coords(), game.value(before.union(part)) - base);
        }
    }
    p
}

/// The H-marginal game `v^H(B) = Σ_i [v(C_{i-1} ∪ (B ∩ block_i)) − v(C_{i-1})]`.
pub fn marginal_game(game: &Game, chain: &Chain) -> Game {
    assert_eq!(chain.n(), game.n(), "chain and game must share the player set");
    let steps: Vec<(Coalition, Coalition)> = chain.steps().collect();
    Game::from_fn(game.n(), |b| {
        steps
            .iter()
            .map(|&(before, block)| game.value(before.union(b.intersection(block))) - game.value(before))
            .sum::<Rational>()
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Union of the chain systems `M_H(v)`.
    #[default]
    Chains,
    /// Union of the cores of the chain-marginal games.
    MarginalCores,
}

/// `M(v)` with one chain-labeled component per chain, empty ones flagged.
pub fn intermediate(game: &Game, method: Method) -> Result<PolyUnion> {
    intermediate_capped(game, method, DEFAULT_MAX_PLAYERS)
}

pub fn intermediate_capped(game: &Game, method: Method, max_players: usize) -> Result<PolyUnion> {
    let chains = enumerate_chains_capped(game.n(), max_players)?;
    let components: Vec<(Chain, HPolytope, bool)> = chains
        .into_par_iter()
        .map(|chain| {
            let p = match method {
                Method::Chains => chain_component(game, &chain),
                Method::MarginalCores => core(&marginal_game(game, &chain)),
            };
            let empty = p.is_empty();
            (chain, p, empty)
        })
        .collect();
    let mut union = PolyUnion::new(game.n());
    for (chain, p, empty) in components {
        union.push_flagged(Label::Chain(chain), p, empty);
    }
    Ok(union)
}

/// Computes `M(v)` by chains and, for small games, checks it against the
/// marginal-core route. The flag is `None` when the check was skipped.
pub fn intermediate_verified(game: &Game, max_players: usize) -> Result<(PolyUnion, Option<bool>)> {
    let by_chains = intermediate_capped(game, Method::Chains, max_players)?;
    if game.n() > VERIFY_MAX_PLAYERS {
        return Ok((by_chains, None));
    }
    let by_cores = intermediate_capped(game, Method::MarginalCores, max_players)?;
    let agree = by_chains
        .components()
        .iter()
        .zip(by_cores.components())
        .all(|(a, b)| a.empty == b.empty)
        && set_equal(&Region::U(by_chains.clone()), &Region::U(by_cores))?;
    Ok((by_chains, Some(agree)))
}

/// All four solution sets of one game.
#[derive(Clone, Debug)]
pub struct SolutionReport {
    pub core: HPolytope,
    pub weber: VPolytope,
    pub intermediate: PolyUnion,
    pub imputations: HPolytope,
    pub empty_chain_labels: Vec<Chain>,
}

pub fn solve(game: &Game) -> Result<SolutionReport> {
    check_players(game.n(), DEFAULT_MAX_PLAYERS)?;
    let intermediate = intermediate(game, Method::Chains)?;
    let empty_chain_labels = intermediate
        .empty_labels()
        .into_iter()
        .map(|label| match label {
            Label::Chain(c) => Ok(c.clone()),
            other => Err(Error::InvalidChain(format!("{other:?}"))),
        })
        .collect::<Result<_>>()?;
    Ok(SolutionReport {
        core: core(game),
        weber: weber(game),
        intermediate,
        imputations: imputations(game),
        empty_chain_labels,
    })
}
