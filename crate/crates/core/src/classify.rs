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

//! Structural predicates on games and the solution property suite.

use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::game::{marginal_vectors, Coalition, Game, PayoffVector, Permutation};
use crate::geometry::{minkowski_member, set_equal, subset_witness, HPolytope, Label, PolyUnion, Region, VPolytope};
use crate::rational::{self, Rational};
use crate::solutions::{self, Method};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameClassification {
    pub supermodular: bool,
    pub submodular: bool,
    pub superadditive: bool,
    pub weakly_superadditive: bool,
    pub additive: bool,
    pub monotone: bool,
    pub simple: bool,
    pub zero_normalized: bool,
    pub null_players: Coalition,
    pub dummy_players: Coalition,
    /// 0-based pairs `i < j`.
    pub substitute_pairs: Vec<(usize, usize)>,
    /// `(b_i^min, b_i^max)` per player.
    pub reasonable_bounds: Vec<(Rational, Rational)>,
}

/// `v(A∪{i}) − v(A)` for `i ∉ A`.
fn gain(game: &Game, a: Coalition, i: usize) -> Rational {
    game.value(a.with(i)) - game.value(a)
}

fn pairs(game: &Game) -> impl Iterator<Item = (Coalition, Coalition)> + '_ {
    let n = game.n();
    Coalition::all(n).flat_map(move |a| Coalition::all(n).map(move |b| (a, b)))
}

pub fn is_supermodular(game: &Game) -> bool {
    pairs(game).all(|(a, b)| game.value(a.union(b)) + game.value(a.intersection(b)) >= game.value(a) + game.value(b))
}

pub fn is_submodular(game: &Game) -> bool {
    pairs(game).all(|(a, b)| game.value(a.union(b)) + game.value(a.intersection(b)) <= game.value(a) + game.value(b))
}

pub fn is_superadditive(game: &Game) -> bool {
    pairs(game)
        .filter(|(a, b)| a.intersection(*b).is_empty())
        .all(|(a, b)| *game.value(a.union(b)) >= game.value(a) + game.value(b))
}

/// Membership in `Γ*`: `v(A∪{i}) ≥ v(A) + v({i})` for `i ∉ A`.
pub fn is_weakly_superadditive(game: &Game) -> bool {
    Coalition::all(game.n()).all(|a| {
        (0..game.n())
            .filter(|&i| !a.contains(i))
            .all(|i| gain(game, a, i) >= *game.singleton_value(i))
    })
}

pub fn is_additive(game: &Game) -> bool {
    Coalition::all(game.n())
        .all(|a| *game.value(a) == a.players().map(|i| game.singleton_value(i).clone()).sum::<Rational>())
}

pub fn is_monotone(game: &Game) -> bool {
    Coalition::all(game.n()).all(|a| (0..game.n()).all(|i| game.value(a.with(i)) >= game.value(a)))
}

/// Monotone, `{0,1}`-valued and `v(N) = 1`.
pub fn is_simple(game: &Game) -> bool {
    let one = rational::int(1);
    game.values().iter().all(|x| x.is_zero() || *x == one) && *game.grand_value() == one && is_monotone(game)
}

pub fn null_players(game: &Game) -> Coalition {
    let n = game.n();
    Coalition::from_bits(
        (0..n)
            .filter(|&i| {
                Coalition::all(n)
                    .filter(|a| !a.contains(i))
                    .all(|a| gain(game, a, i).is_zero())
            })
            .fold(0, |bits, i| bits | 1 << i),
    )
}

pub fn dummy_players(game: &Game) -> Coalition {
    let n = game.n();
    Coalition::from_bits(
        (0..n)
            .filter(|&i| {
                Coalition::all(n)
                    .filter(|a| !a.contains(i))
                    .all(|a| gain(game, a, i) == *game.singleton_value(i))
            })
            .fold(0, |bits, i| bits | 1 << i),
    )
}

pub fn substitute_pairs(game: &Game) -> Vec<(usize, usize)> {
    let n = game.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let others = game.grand().without(i).without(j);
            if others
                .subsets()
                .chain([Coalition::EMPTY])
                .all(|a| game.value(a.with(i)) == game.value(a.with(j)))
            {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn reasonable_bounds(game: &Game) -> Vec<(Rational, Rational)> {
    (0..game.n())
        .map(|i| {
            let gains: Vec<Rational> = Coalition::all(game.n())
                .filter(|a| !a.contains(i))
                .map(|a| gain(game, a, i))
                .collect();
            (gains.iter().min().unwrap().clone(), gains.iter().max().unwrap().clone())
        })
        .collect()
}

pub fn classify(game: &Game) -> GameClassification {
    GameClassification {
        supermodular: is_supermodular(game),
        submodular: is_submodular(game),
        superadditive: is_superadditive(game),
        weakly_superadditive: is_weakly_superadditive(game),
        additive: is_additive(game),
        monotone: is_monotone(game),
        simple: is_simple(game),
        zero_normalized: (0..game.n()).all(|i| game.singleton_value(i).is_zero()),
        null_players: null_players(game),
        dummy_players: dummy_players(game),
        substitute_pairs: substitute_pairs(game),
        reasonable_bounds: reasonable_bounds(game),
    }
}

impl GameClassification {
    pub fn to_json(&self) -> Value {
        let players = |c: Coalition| c.players().map(|i| i + 1).collect::<Vec<_>>();
        json!({
            "supermodular": self.supermodular,
            "submodular": self.submodular,
            "superadditive": self.superadditive,
            "weakly_superadditive": self.weakly_superadditive,
            "additive": self.additive,
            "monotone": self.monotone,
            "simple": self.simple,
            "zero_normalized": self.zero_normalized,
            "null_players": players(self.null_players),
            "dummy_players": players(self.dummy_players),
            "substitute_pairs": self.substitute_pairs.iter().map(|(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
            "reasonable_bounds": self
                .reasonable_bounds
                .iter()
                .map(|(lo, hi)| [rational::format(lo), rational::format(hi)])
                .collect::<Vec<_>>(),
        })
    }
}

/// Which solution concept the suite examines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solution {
    Core,
    Intermediate,
    Weber,
}

impl Solution {
    pub fn name(self) -> &'static str {
        match self {
            Solution::Core => "core",
            Solution::Intermediate => "intermediate",
            Solution::Weber => "weber",
        }
    }

    pub fn evaluate(self, game: &Game) -> Result<Region> {
        Ok(match self {
            Solution::Core => Region::H(solutions::core(game)),
            Solution::Intermediate => Region::U(solutions::intermediate(game, Method::Chains)?),
            Solution::Weber => Region::V(solutions::weber(game)),
        })
    }
}

/// The properties of a solution concept checked by [`property_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Ne,
    Con,
    Po,
    Ir,
    Supa,
    Suba,
    An,
    Etp,
    Re,
    Cov,
    Np,
    Dum,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::Ne,
        Property::Con,
        Property::Po,
        Property::Ir,
        Property::Supa,
        Property::Suba,
        Property::An,
        Property::Etp,
        Property::Re,
        Property::Cov,
        Property::Np,
        Property::Dum,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Property::Ne => "NE",
            Property::Con => "CON",
            Property::Po => "PO",
            Property::Ir => "IR",
            Property::Supa => "SUPA",
            Property::Suba => "SUBA",
            Property::An => "AN",
            Property::Etp => "ETP",
            Property::Re => "RE",
            Property::Cov => "COV",
            Property::Np => "NP",
            Property::Dum => "DUM",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Parameters of the covariance check `w = αv + z`.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub alpha: Rational,
    /// Weights of the additive game `z`; cycled when shorter than `n`.
    pub shift: Vec<Rational>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            alpha: rational::int(2),
            shift: vec![rational::int(1), rational::int(-1), rational::ratio(1, 2)],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyResult {
    pub property: Property,
    pub passed: bool,
    /// Number of instance-level checks that were actually made.
    pub checks: usize,
    pub witness: Option<Value>,
}

impl PropertyResult {
    pub fn to_json(&self) -> Value {
        json!({
            "status": if self.passed { "pass" } else { "fail" },
            "checks": self.checks,
            "witness": self.witness,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub solution: Solution,
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn get(&self, property: Property) -> &PropertyResult {
        self.results
            .iter()
            .find(|r| r.property == property)
            .expect("every property is reported")
    }

    pub fn to_json(&self) -> Value {
        let mut props = serde_json::Map::new();
        for r in &self.results {
            props.insert(r.property.code().to_string(), r.to_json());
        }
        json!({ "solution": self.solution.name(), "properties": props })
    }
}

/// A solution set together with its vertex lists, one per convex piece.
struct Evaluated {
    region: Region,
    pieces: Vec<Vec<PayoffVector>>,
}

impl Evaluated {
    fn new(region: Region) -> Result<Self> {
        let pieces = match &region {
            Region::H(p) => match p.vertices() {
                Ok(v) => vec![v.vertices().to_vec()],
                Err(Error::Empty) => Vec::new(),
                Err(e) => return Err(e),
            },
            Region::V(p) if p.is_empty() => Vec::new(),
            Region::V(p) => vec![p.vertices().to_vec()],
            Region::U(u) => u
                .component_vertices()?
                .into_iter()
                .map(|(_, v)| v.vertices().to_vec())
                .collect(),
        };
        Ok(Evaluated { region, pieces })
    }

    fn vertices(&self) -> impl Iterator<Item = &PayoffVector> {
        self.pieces.iter().flatten()
    }
}

fn point_json(x: &PayoffVector) -> Value {
    json!(x.to_strings())
}

fn translate(region: &Region, t: &PayoffVector) -> Region {
    match region {
        Region::H(p) => Region::H(p.translate(t)),
        Region::V(p) => Region::V(p.translate(t)),
        Region::U(p) => Region::U(p.translate(t)),
    }
}

fn scale(region: &Region, alpha: &Rational) -> Region {
    match region {
        Region::H(p) => Region::H(p.scale(alpha)),
        Region::V(p) => Region::V(p.scale(alpha)),
        Region::U(p) => Region::U(p.scale(alpha)),
    }
}

fn permute(region: &Region, perm: &Permutation) -> Region {
    match region {
        Region::H(p) => Region::H(p.permute(perm)),
        Region::V(p) => Region::V(p.permute(perm)),
        Region::U(p) => Region::U(p.permute(perm)),
    }
}

/// Accumulates checks for one property, keeping the first failure.
struct Tally {
    property: Property,
    checks: usize,
    witness: Option<Value>,
}

impl Tally {
    fn new(property: Property) -> Self {
        Tally {
            property,
            checks: 0,
            witness: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }

    fn finish(self) -> PropertyResult {
        PropertyResult {
            property: self.property,
            passed: self.witness.is_none(),
            checks: self.checks,
            witness: self.witness,
        }
    }
}

/// Runs every property check of `solution` on the given games.
///
/// The checks are instance-level: a pass means no counterexample was found
/// among these games. Superadditivity and subadditivity use consecutive
/// pairs of games, or the pair `(v, v)` for a single game.
pub fn property_suite(games: &[Game], solution: Solution, config: &SuiteConfig) -> Result<SuiteReport> {
    let Some(first) = games.first() else {
        return Err(Error::InvalidGame("the property suite needs at least one game".into()));
    };
    for g in games {
        first.check_same_players(g)?;
    }
    if config.shift.is_empty() || !config.alpha.is_positive() {
        return Err(Error::InvalidGame("covariance needs α > 0 and a nonempty shift".into()));
    }
    let n = first.n();
    let evaluated: Vec<Evaluated> = games
        .iter()
        .map(|g| Evaluated::new(solution.evaluate(g)?))
        .collect::<Result<_>>()?;
    let mut results = Vec::new();

    let mut ne = Tally::new(Property::Ne);
    let mut con = Tally::new(Property::Con);
    let mut po = Tally::new(Property::Po);
    let mut ir = Tally::new(Property::Ir);
    let mut etp = Tally::new(Property::Etp);
    let mut re = Tally::new(Property::Re);
    let mut np = Tally::new(Property::Np);
    let mut dum = Tally::new(Property::Dum);
    for (k, (game, sol)) in games.iter().zip(&evaluated).enumerate() {
        ne.check(!sol.pieces.is_empty(), || json!({ "game": k }));
        let convex = match &sol.region {
            Region::U(u) => set_equal(&Region::V(u.hull()?), &sol.region)?,
            _ => true,
        };
        con.check(convex, || json!({ "game": k }));
        let class = classify(game);
        for x in sol.vertices() {
            po.check(x.is_efficient(game), || json!({ "game": k, "point": point_json(x) }));
            for i in 0..n {
                ir.check(
                    x[i] >= *game.singleton_value(i),
                    || json!({ "game": k, "player": i + 1, "point": point_json(x) }),
                );
                let (lo, hi) = &class.reasonable_bounds[i];
                re.check(
                    lo <= &x[i] && x[i] <= *hi,
                    || json!({ "game": k, "player": i + 1, "point": point_json(x) }),
                );
            }
            for &(i, j) in &class.substitute_pairs {
                etp.check(
                    x[i] == x[j],
                    || json!({ "game": k, "pair": [i + 1, j + 1], "point": point_json(x) }),
                );
            }
            for i in class.null_players.players() {
                np.check(
                    x[i].is_zero(),
                    || json!({ "game": k, "player": i + 1, "point": point_json(x) }),
                );
            }
            for i in class.dummy_players.players() {
                dum.check(
                    x[i] == *game.singleton_value(i),
                    || json!({ "game": k, "player": i + 1, "point": point_json(x) }),
                );
            }
        }
    }

    let pairs: Vec<(usize, usize)> = if games.len() == 1 {
        vec![(0, 0)]
    } else {
        (1..games.len()).map(|k| (k - 1, k)).collect()
    };
    let mut supa = Tally::new(Property::Supa);
    let mut suba = Tally::new(Property::Suba);
    for &(a, b) in &pairs {
        let sum = games[a].add(&games[b])?;
        let joint = Evaluated::new(solution.evaluate(&sum)?)?;
        for pa in &evaluated[a].pieces {
            for pb in &evaluated[b].pieces {
                if supa.failed() {
                    break;
                }
                let sums: Vec<PayoffVector> = pa.iter().flat_map(|p| pb.iter().map(move |q| p.add(q))).collect();
                let witness = subset_witness(&Region::V(VPolytope::from_points(n, sums)), &joint.region)?;
                supa.check(
                    witness.is_none(),
                    || json!({ "games": [a, b], "point": point_json(witness.as_ref().unwrap()) }),
                );
            }
        }
        for x in joint.vertices() {
            suba.check(
                minkowski_member(x, &evaluated[a].region, &evaluated[b].region),
                || json!({ "games": [a, b], "point": point_json(x) }),
            );
        }
    }

    let mut an = Tally::new(Property::An);
    let mut cov = Tally::new(Property::Cov);
    let shift = PayoffVector::new((0..n).map(|i| config.shift[i % config.shift.len()].clone()).collect());
    for (k, (game, sol)) in games.iter().zip(&evaluated).enumerate() {
        for perm in Permutation::all(n) {
            let moved = solution.evaluate(&game.permute(&perm))?;
            let ok = set_equal(&moved, &permute(&sol.region, &perm))?;
            an.check(
                ok,
                || json!({ "game": k, "permutation": perm.order().iter().map(|i| i + 1).collect::<Vec<_>>() }),
            );
        }
        let w = game.scale(&config.alpha).add(&Game::additive(shift.coords()))?;
        let expected = translate(&scale(&sol.region, &config.alpha), &shift);
        cov.check(set_equal(&solution.evaluate(&w)?, &expected)?, || json!({ "game": k }));
    }

    results.extend(
        [ne, con, po, ir, supa, suba, an, etp, re, cov, np, dum]
            .into_iter()
            .map(Tally::finish),
    );
    Ok(SuiteReport { solution, results })
}

/// `core ⊆ intermediate ⊆ weber` on every vertex, with a witness on failure.
pub fn sandwich_witness(game: &Game) -> Result<Option<PayoffVector>> {
    let core = solutions::core(game);
    let m = solutions::intermediate(game, Method::Chains)?;
    let w = solutions::weber(game);
    if let Some(x) = subset_witness(&Region::H(core), &Region::U(m.clone()))? {
        return Ok(Some(x));
    }
    Ok(m.all_vertices()?.into_iter().find(|x| !w.contains(x)))
}

/// Exact test of `C(v) = M(v)`.
pub fn core_equals_intermediate(game: &Game) -> Result<bool> {
    let m = solutions::intermediate(game, Method::Chains)?;
    set_equal(&Region::H(solutions::core(game)), &Region::U(m))
}

/// Exact test of `C(v) = W(v)`.
pub fn core_equals_weber(game: &Game) -> Result<bool> {
    set_equal(&Region::H(solutions::core(game)), &Region::V(solutions::weber(game)))
}

/// Whether `M(v)` is exactly the set of marginal vectors.
pub fn intermediate_is_marginal_vectors(game: &Game) -> Result<bool> {
    let m = solutions::intermediate(game, Method::Chains)?;
    let mut points = PolyUnion::new(game.n());
    for (k, x) in marginal_vectors(game).into_iter().enumerate() {
        points.push_flagged(Label::Index(k), HPolytope::point(&x), false);
    }
    set_equal(&Region::U(m), &Region::U(points))
}

/// Whether every marginal vector is individually rational.
pub fn marginal_vectors_individually_rational(game: &Game) -> bool {
    marginal_vectors(game)
        .iter()
        .all(|x| (0..game.n()).all(|i| x[i] >= *game.singleton_value(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn star() -> Game {
        Game::from_fn(3, |a| int([0, 0, 2, 3][a.len()]))
    }

    fn glove() -> Game {
        // player 1 holds the left glove
        Game::from_fn(3, |a| int(if a.contains(0) && a.len() >= 2 { 1 } else { 0 }))
    }

    #[test]
    fn star_classification() {
        let c = classify(&star());
        assert!(!c.supermodular && c.superadditive && c.weakly_superadditive);
        assert_eq!(c.substitute_pairs, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(c.reasonable_bounds[0], (int(0), int(2)));
    }

    #[test]
    fn glove_classification() {
        let c = classify(&glove());
        assert!(c.simple && c.monotone && c.zero_normalized);
        assert!(!c.supermodular);
    }

    #[test]
    fn additive_classification() {
        let v = Game::additive(&[int(1), int(2), int(-3)]);
        let c = classify(&v);
        assert!(c.supermodular && c.submodular && c.superadditive && c.additive);
        assert_eq!(c.dummy_players, Coalition::grand(3));
        assert!(c.null_players.is_empty());
    }

    #[test]
    fn star_suite_falsifies_equal_treatment() {
        let report = property_suite(&[star()], Solution::Intermediate, &SuiteConfig::default()).unwrap();
        assert!(!report.get(Property::Etp).passed);
        assert!(!report.get(Property::Con).passed);
        for p in [
            Property::Ne,
            Property::Po,
            Property::Ir,
            Property::Suba,
            Property::An,
            Property::Re,
            Property::Cov,
        ] {
            assert!(report.get(p).passed, "{p}");
        }
    }

    #[test]
    fn weber_ir_fails_outside_gamma_star() {
        let mut values: Vec<Rational> = star().values().to_vec();
        values[Coalition::from_players([1, 2]).index()] = int(-1);
        let v = Game::new(3, values).unwrap();
        assert!(!is_weakly_superadditive(&v));
        let report = property_suite(&[v], Solution::Weber, &SuiteConfig::default()).unwrap();
        assert!(!report.get(Property::Ir).passed);
    }

    #[test]
    fn sandwich_on_star() {
        assert_eq!(sandwich_witness(&star()).unwrap(), None);
        assert!(!core_equals_intermediate(&star()).unwrap());
        assert!(!core_equals_weber(&star()).unwrap());
    }
}
