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

//! Superdifferentials of the Lovász extension computed from their
//! definitions, independently of the chain formulas in [`crate::solutions`].
//!
//! The Lovász extension `v̂` is piecewise linear, so near any point `x̄` the
//! difference `v̂(x̄ + d) − v̂(x̄)` is a positively homogeneous function of
//! `d` that is linear on the cones of a fan. Those cones are spanned by the
//! incidence vectors `χ_B` and `±χ_N`, so the Fréchet supergradient
//! inequality only has to be imposed on the directions `±εχ_B`.

use num_traits::{Signed, Zero};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{enumerate_chains_capped, Chain, Coalition, Game, PayoffVector, Permutation, DEFAULT_MAX_PLAYERS};
use crate::generate;
use crate::geometry::{minkowski_member, set_equal, HPolytope, Label, PolyUnion, Region, VPolytope};
use crate::lovasz::lovasz_eval;
use crate::rational::{self, Rational};

/// A point whose level sets are exactly the blocks of a chain: block `i`
/// of `k` gets the value `k − i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanPoint {
    pub chain: Chain,
    pub point: PayoffVector,
}

impl FanPoint {
    pub fn new(chain: &Chain) -> Self {
        let k = chain.len();
        let mut coords = vec![Rational::zero(); chain.n()];
        for (i, block) in chain.blocks().into_iter().enumerate() {
            for p in block.players() {
                coords[p] = rational::int((k - i) as i64);
            }
        }
        FanPoint {
            chain: chain.clone(),
            point: PayoffVector::new(coords),
        }
    }
}

/// Where the limiting superdifferential is taken.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProbePoint {
    Zero,
    #[default]
    Grand,
}

impl ProbePoint {
    fn offset(self, n: usize) -> PayoffVector {
        match self {
            ProbePoint::Zero => PayoffVector::zeros(n),
            ProbePoint::Grand => Coalition::grand(n).incidence(n),
        }
    }
}

/// Half the smallest positive gap between coordinates of `x`, or 1 when
/// all coordinates are equal. Directions `±εχ_B` keep the order of unequal
/// coordinates, since all shifts have the same sign.
pub fn local_radius(x: &PayoffVector) -> Rational {
    let mut sorted: Vec<&Rational> = x.coords().iter().collect();
    sorted.sort();
    sorted
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|g| g.is_positive())
        .min()
        .map(|g| g / rational::int(2))
        .unwrap_or_else(|| rational::int(1))
}

/// `{x* : v̂(x̄ + d) − v̂(x̄) ≤ ⟨x*, d⟩ for d = ±εχ_B, ∅ ≠ B ⊆ N}`.
pub fn frechet_superdiff(game: &Game, at: &PayoffVector) -> Result<HPolytope> {
    let n = game.n();
    if at.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: at.len(),
        });
    }
    let eps = local_radius(at);
    let base = lovasz_eval(game, at)?;
    let mut h = HPolytope::new(n);
    for b in Coalition::nonempty(n) {
        let step = b.incidence(n).scale(&eps);
        // ε x*(B) ≥ v̂(x̄ + εχ_B) − v̂(x̄) and −ε x*(B) ≥ v̂(x̄ − εχ_B) − v̂(x̄)
        let lower = (lovasz_eval(game, &at.add(&step))? - &base) / &eps;
        let upper = -(lovasz_eval(game, &at.sub(&step))? - &base) / &eps;
        let row = b.incidence(n).into_coords();
        if lower == upper {
            h.add_equality(row, lower);
        } else {
            h.add_inequality(row.clone(), lower);
            h.add_inequality(row.iter().map(|c| -c).collect(), -upper);
        }
    }
    Ok(h)
}

/// Union over all chains `H` of the Fréchet superdifferential at the fan
/// point of `H`, shifted to the probe point.
pub fn limiting_superdiff(game: &Game, at: ProbePoint) -> Result<PolyUnion> {
    limiting_superdiff_capped(game, at, DEFAULT_MAX_PLAYERS)
}

pub fn limiting_superdiff_capped(game: &Game, at: ProbePoint, max_players: usize) -> Result<PolyUnion> {
    let n = game.n();
    let offset = at.offset(n);
    let parts: Vec<(Chain, HPolytope, bool)> = enumerate_chains_capped(n, max_players)?
        .into_par_iter()
        .map(|chain| {
            let x = FanPoint::new(&chain).point.add(&offset);
            let h = frechet_superdiff(game, &x)?;
            let empty = h.is_empty();
            Ok((chain, h, empty))
        })
        .collect::<Result<_>>()?;
    let mut u = PolyUnion::new(n);
    for (chain, h, empty) in parts {
        u.push_flagged(Label::Chain(chain), h, empty);
    }
    Ok(u)
}

/// Convex hull of the gradients of `v̂` on the open chambers of the fan,
/// each gradient taken by finite differences at an interior point.
pub fn clarke_superdiff(game: &Game) -> Result<VPolytope> {
    let n = game.n();
    let half = rational::ratio(1, 2);
    let mut gradients = Vec::new();
    for perm in Permutation::all(n) {
        let mut coords = vec![Rational::zero(); n];
        for (rank, &p) in perm.order().iter().enumerate() {
            coords[p] = rational::int((n - rank) as i64);
        }
        let x = PayoffVector::new(coords);
        let base = lovasz_eval(game, &x)?;
        let mut g = Vec::with_capacity(n);
        for i in 0..n {
            let step = Coalition::singleton(i).incidence(n).scale(&half);
            g.push((lovasz_eval(game, &x.add(&step))? - &base) / &half);
        }
        gradients.push(PayoffVector::new(g));
    }
    Ok(VPolytope::from_points(n, gradients))
}

/// Outcome of [`sum_rule_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumRuleReport {
    /// `∂(v̂₁+v̂₂) ⊆ ∂v̂₁ + ∂v̂₂`, checked on all vertices.
    pub inclusion: bool,
    /// Exact equality, checked only when `v₂` is additive.
    pub equality: Option<bool>,
    pub witness: Option<PayoffVector>,
}

/// Sum rule for limiting superdifferentials at `χ_N`.
pub fn sum_rule_check(v1: &Game, v2: &Game) -> Result<SumRuleReport> {
    let sum = v1.add(v2)?;
    let joint = limiting_superdiff(&sum, ProbePoint::Grand)?;
    let a = Region::U(limiting_superdiff(v1, ProbePoint::Grand)?);
    let b = Region::U(limiting_superdiff(v2, ProbePoint::Grand)?);
    let witness = joint.all_vertices()?.into_iter().find(|x| !minkowski_member(x, &a, &b));
    let equality = if crate::classify::is_additive(v2) {
        let z = PayoffVector::new((0..v2.n()).map(|i| v2.singleton_value(i).clone()).collect());
        let Region::U(first) = a else { unreachable!() };
        Some(set_equal(&Region::U(joint), &Region::U(first.translate(&z)))?)
    } else {
        None
    };
    Ok(SumRuleReport {
        inclusion: witness.is_none(),
        equality,
        witness,
    })
}

/// Tests the supergradient inequality of every vertex of the Fréchet set at
/// `at` along `samples` seeded random directions inside the local radius.
/// Returns an offending `(x*, d)` if one exists.
pub fn validate_frechet_directions(
    game: &Game,
    at: &PayoffVector,
    samples: usize,
    seed: u64,
) -> Result<Option<(PayoffVector, PayoffVector)>> {
    let n = game.n();
    let set = frechet_superdiff(game, at)?;
    let vertices = match set.vertices() {
        Ok(v) => v.vertices().to_vec(),
        Err(Error::Empty) => return Ok(None),
        Err(e) => return Err(e),
    };
    let eps = local_radius(at);
    let base = lovasz_eval(game, at)?;
    let mut rng = generate::rng(seed);
    for _ in 0..samples {
        // entries in [−1, 1] scaled so every coordinate moves by less than ε
        let d = PayoffVector::new(
            (0..n)
                .map(|_| rational::ratio(rng.gen_range(-64..=64), 64) * &eps / rational::int(2))
                .collect(),
        );
        let rise = lovasz_eval(game, &at.add(&d))? - &base;
        if let Some(x) = vertices.iter().find(|x| x.dot(d.coords()) < rise) {
            return Ok(Some((x.clone(), d)));
        }
    }
    Ok(None)
}

/// Intersection of the selected components of a union.
pub fn intersect_components(union: &PolyUnion, select: &[usize]) -> HPolytope {
    select
        .iter()
        .map(|&k| &union.components()[k].polytope)
        .fold(HPolytope::new(union.dim()), |acc, p| acc.intersect(p))
}

/// Whether the core equals the intersection of the selected components.
/// This is an experimental probe; no general criterion is claimed.
pub fn core_is_intersection(game: &Game, union: &PolyUnion, select: &[usize]) -> Result<bool> {
    set_equal(
        &Region::H(crate::solutions::core(game)),
        &Region::H(intersect_components(union, select)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::marginal_vector;
    use crate::rational::int;
    use crate::solutions::{self, chain_component, Method};

    fn star() -> Game {
        Game::from_fn(3, |a| int([0, 0, 2, 3][a.len()]))
    }

    #[test]
    fn fan_point_levels() {
        let chain = Chain::from_keys(3, &["2", "1,2,3"]).unwrap();
        assert_eq!(FanPoint::new(&chain).point, PayoffVector::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn interior_point_gives_marginal_vector() {
        let v = star();
        let x = PayoffVector::from_ints(&[1, 3, 2]);
        let pts = frechet_superdiff(&v, &x).unwrap().vertices().unwrap();
        let perm = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(pts.vertices(), &[marginal_vector(&v, &perm).unwrap()]);
    }

    #[test]
    fn per_chain_agreement_on_star() {
        let v = star();
        for chain in crate::game::enumerate_chains(3).unwrap() {
            let f = frechet_superdiff(&v, &FanPoint::new(&chain).point).unwrap();
            assert!(
                set_equal(&Region::H(f), &Region::H(chain_component(&v, &chain))).unwrap(),
                "{chain}"
            );
        }
    }

    #[test]
    fn limiting_matches_intermediate() {
        let v = star();
        let m = solutions::intermediate(&v, Method::Chains).unwrap();
        for at in [ProbePoint::Zero, ProbePoint::Grand] {
            let l = limiting_superdiff(&v, at).unwrap();
            assert!(set_equal(&Region::U(l), &Region::U(m.clone())).unwrap());
        }
    }

    #[test]
    fn clarke_is_weber() {
        let v = star();
        assert_eq!(clarke_superdiff(&v).unwrap(), solutions::weber(&v));
    }

    #[test]
    fn sum_rule_with_additive_game() {
        let z = Game::additive(&[int(1), int(-2), int(3)]);
        let report = sum_rule_check(&star(), &z).unwrap();
        assert!(report.inclusion);
        assert_eq!(report.equality, Some(true));
        let zero = sum_rule_check(&star(), &Game::zero(3)).unwrap();
        assert_eq!(zero.equality, Some(true));
    }

    #[test]
    fn random_directions_respect_supergradients() {
        let v = star();
        for chain in crate::game::enumerate_chains(3).unwrap() {
            let x = FanPoint::new(&chain).point;
            assert_eq!(validate_frechet_directions(&v, &x, 200, 5).unwrap(), None);
        }
    }

    #[test]
    fn core_as_intersection_on_star() {
        let v = star();
        let m = solutions::intermediate(&v, Method::Chains).unwrap();
        let segments: Vec<usize> = m
            .components()
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(&c.label, Label::Chain(h) if h.len() == 2 && h.coalitions()[0].len() == 2))
            .map(|(k, _)| k)
            .collect();
        assert_eq!(segments.len(), 3);
        assert!(core_is_intersection(&v, &m, &segments).unwrap());
    }
}
