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

//! Players, coalitions, games, chains and permutations.
//!
//! Players are 1-based in every external representation (game files, chain
//! labels, CLI arguments) and 0-based bit positions internally.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Default cap on the number of players.
pub const DEFAULT_MAX_PLAYERS: usize = 8;

/// Hard limit imposed by the dense value table (2^n entries).
pub const HARD_MAX_PLAYERS: usize = 20;

/// A set of players stored as a bit set; bit `i` is player `i + 1`.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    pub fn grand(n: usize) -> Self {
        Coalition(((1u64 << n) - 1) as u32)
    }

    /// Singleton of the 0-based player `i`.
    pub fn singleton(i: usize) -> Self {
        Coalition(1 << i)
    }

    /// Builds a coalition from 1-based player numbers.
    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Self {
        Coalition(players.into_iter().fold(0, |acc, p| acc | (1 << (p - 1))))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Coalition(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Coalition(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Coalition(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Coalition(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// 0-based members in ascending order.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// Nonempty subsets in ascending bit order (including `self`).
    pub fn subsets(self) -> impl Iterator<Item = Coalition> {
        let full = self.0;
        let mut current = 0u32;
        std::iter::from_fn(move || {
            current = current.wrapping_sub(full) & full;
            (current != 0).then_some(Coalition(current))
        })
    }

    /// Every coalition of `n` players, including the empty one.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..1u32 << n).map(Coalition)
    }

    /// Nonempty coalitions of `n` players.
    pub fn nonempty(n: usize) -> impl Iterator<Item = Coalition> {
        (1..1u32 << n).map(Coalition)
    }

    /// Incidence vector `χ_A`.
    pub fn incidence(self, n: usize) -> PayoffVector {
        PayoffVector::new(
            (0..n)
                .map(|i| {
                    if self.contains(i) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        )
    }

    /// Comma separated 1-based key, e.g. `"1,3"`. The empty coalition is `""`.
    pub fn key(self) -> String {
        self.players().map(|i| (i + 1).to_string()).join(",")
    }

    /// Parses a key of strictly increasing 1-based players, all at most `n`.
    pub fn parse_key(key: &str, n: usize) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidCoalitionKey {
            key: key.to_string(),
            reason: reason.to_string(),
        };
        if key.trim().is_empty() {
            return Err(invalid("the empty coalition is not listed"));
        }
        let mut bits = 0u32;
        let mut last = 0usize;
        for part in key.split(',') {
            let player: usize = part.trim().parse().map_err(|_| invalid("not a player number"))?;
            if player == 0 || player > n {
                return Err(invalid("player out of range"));
            }
            if player <= last {
                return Err(invalid("players must be strictly increasing"));
            }
            last = player;
            bits |= 1 << (player - 1);
        }
        Ok(Coalition(bits))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

/// A rational vector of length `n`, indexed by 0-based player.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PayoffVector(#[serde(with = "crate::rational::serde_vec")] Vec<Rational>);

impl PayoffVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        PayoffVector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        PayoffVector(vec![Rational::zero(); n])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        PayoffVector(values.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    /// `x(A)`.
    pub fn sum_over(&self, coalition: Coalition) -> Rational {
        coalition.players().map(|i| &self.0[i]).sum()
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    /// `x(N) <= v(N)`.
    pub fn is_feasible(&self, game: &Game) -> bool {
        self.total() <= *game.grand_value()
    }

    /// `x(N) = v(N)`.
    pub fn is_efficient(&self, game: &Game) -> bool {
        self.total() == *game.grand_value()
    }

    pub fn add(&self, other: &PayoffVector) -> PayoffVector {
        PayoffVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &PayoffVector) -> PayoffVector {
        PayoffVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> PayoffVector {
        PayoffVector(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn dot(&self, other: &[Rational]) -> Rational {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    /// Strings of the coordinates, for JSON output.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rational::format).collect()
    }
}

impl std::ops::Index<usize> for PayoffVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for PayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl From<Vec<Rational>> for PayoffVector {
    fn from(coords: Vec<Rational>) -> Self {
        PayoffVector(coords)
    }
}

/// An arrival order of players: `order()[j]` is the 0-based player arriving
/// in position `j`. Read as a bijection of `N`, the permutation sends `j` to
/// `order()[j]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &p in &order {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation(format!(
                    "{order:?} is not a bijection of 0..{n}"
                )));
            }
            seen[p] = true;
        }
        Ok(Permutation(order))
    }

    /// From 1-based players, e.g. `[2, 1, 3]`.
    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        if order.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{order:?} contains player 0")));
        }
        Self::new(order.iter().map(|&p| p - 1).collect())
    }

    /// All `n!` permutations in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n).permutations(n).map(Permutation).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    /// `π(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (j, &p) in self.0.iter().enumerate() {
            inv[p] = j;
        }
        Permutation(inv)
    }

    /// Image `π(A)`.
    pub fn image(&self, coalition: Coalition) -> Coalition {
        coalition.players().fold(Coalition::EMPTY, |acc, i| acc.with(self.0[i]))
    }

    /// Moves coordinates along the permutation: `(πx)_{π(i)} = x_i`.
    pub fn permute_vector(&self, x: &PayoffVector) -> PayoffVector {
        let mut out = vec![Rational::zero(); x.len()];
        for (i, value) in x.coords().iter().enumerate() {
            out[self.0[i]] = value.clone();
        }
        PayoffVector(out)
    }

    /// The maximal chain `{π(1)}, {π(1),π(2)}, …, N`.
    pub fn chain(&self) -> Chain {
        let mut acc = Coalition::EMPTY;
        let coalitions = self
            .0
            .iter()
            .map(|&p| {
                acc = acc.with(p);
                acc
            })
            .collect();
        Chain {
            n: self.0.len(),
            coalitions,
        }
    }
}

/// A coalitional game with transferable utility: `v : 2^N -> Q`, `v(∅) = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Game {
    n: usize,
    values: Vec<Rational>,
}

impl Game {
    /// `values` is indexed by coalition bit pattern and must have `2^n` entries.
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        check_players(n, HARD_MAX_PLAYERS)?;
        if values.len() != 1 << n {
            return Err(Error::InvalidGame(format!(
                "expected {} values for {n} players, got {}",
                1usize << n,
                values.len()
            )));
        }
        if !values[0].is_zero() {
            return Err(Error::InvalidGame("the empty coalition must be worth 0".into()));
        }
        Ok(Game { n, values })
    }

    /// Builds a game from a function on coalitions; `v(∅)` is forced to 0.
    pub fn from_fn<F: FnMut(Coalition) -> Rational>(n: usize, mut f: F) -> Self {
        assert!((1..=HARD_MAX_PLAYERS).contains(&n), "player count {n} out of range");
        let values = Coalition::all(n)
            .map(|c| if c.is_empty() { Rational::zero() } else { f(c) })
            .collect();
        Game { n, values }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::zero())
    }

    /// The additive game `z(A) = Σ_{i∈A} weights_i`.
    pub fn additive(weights: &[Rational]) -> Self {
        let p = PayoffVector::new(weights.to_vec());
        Self::from_fn(weights.len(), |c| p.sum_over(c))
    }

    /// The unanimity game `u_T(A) = 1` iff `T ⊆ A`.
    pub fn unanimity(n: usize, carrier: Coalition) -> Self {
        Self::from_fn(n, |c| {
            if carrier.is_subset(c) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    pub fn value(&self, coalition: Coalition) -> &Rational {
        &self.values[coalition.index()]
    }

    pub fn grand_value(&self) -> &Rational {
        self.value(self.grand())
    }

    /// `v({i})` for 0-based `i`.
    pub fn singleton_value(&self, i: usize) -> &Rational {
        self.value(Coalition::singleton(i))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn add(&self, other: &Game) -> Result<Game> {
        self.check_same_players(other)?;
        Ok(Game {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Game {
        Game {
            n: self.n,
            values: self.values.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn neg(&self) -> Game {
        self.scale(&-Rational::one())
    }

    /// `πv(A) = v(π⁻¹(A))`.
    pub fn permute(&self, perm: &Permutation) -> Game {
        let inverse = perm.inverse();
        Game::from_fn(self.n, |c| self.value(inverse.image(c)).clone())
    }

    pub fn check_same_players(&self, other: &Game) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }
}

/// Checks `1 <= n <= max`, reporting the chain count the cap protects against.
pub fn check_players(n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoPlayers);
    }
    if n > max.min(HARD_MAX_PLAYERS) {
        return Err(Error::Capacity {
            n,
            max: max.min(HARD_MAX_PLAYERS),
            chains: ordered_bell(n),
        });
    }
    Ok(())
}

/// A coalitional chain `C_1 ⊊ C_2 ⊊ … ⊊ C_k = N` with `C_1 ≠ ∅`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    n: usize,
    coalitions: Vec<Coalition>,
}

impl Chain {
    /// From the increasing sequence `(C_1, …, C_k)`.
    pub fn from_sequence(n: usize, coalitions: Vec<Coalition>) -> Result<Self> {
        let grand = Coalition::grand(n);
        if coalitions.last() != Some(&grand) {
            return Err(Error::InvalidChain("the last coalition must be N".into()));
        }
        let mut previous = Coalition::EMPTY;
        for &c in &coalitions {
            if !previous.is_proper_subset(c) || !c.is_subset(grand) {
                return Err(Error::InvalidChain(format!("{c} does not strictly contain {previous}")));
            }
            previous = c;
        }
        Ok(Chain { n, coalitions })
    }

    /// From an unordered family of coalitions; inclusion orders them.
    pub fn from_set<I: IntoIterator<Item = Coalition>>(n: usize, coalitions: I) -> Result<Self> {
        let mut sorted: Vec<Coalition> = coalitions.into_iter().collect();
        sorted.sort_by_key(|c| (c.len(), c.bits()));
        sorted.dedup();
        Self::from_sequence(n, sorted)
    }

    /// From an ordered partition of `N` into nonempty blocks.
    pub fn from_blocks(n: usize, blocks: &[Coalition]) -> Result<Self> {
        let mut acc = Coalition::EMPTY;
        let mut coalitions = Vec::with_capacity(blocks.len());
        for &b in blocks {
            if b.is_empty() || !acc.intersection(b).is_empty() {
                return Err(Error::InvalidChain("blocks must be nonempty and disjoint".into()));
            }
            acc = acc.union(b);
            coalitions.push(acc);
        }
        Self::from_sequence(n, coalitions)
    }

    /// Parses 1-based keys such as `["1,2", "1,2,3"]`.
    pub fn from_keys<S: AsRef<str>>(n: usize, keys: &[S]) -> Result<Self> {
        let coalitions = keys
            .iter()
            .map(|k| Coalition::parse_key(k.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_set(n, coalitions)
    }

    pub fn grand(n: usize) -> Self {
        Chain {
            n,
            coalitions: vec![Coalition::grand(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coalitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coalitions.is_empty()
    }

    pub fn coalitions(&self) -> &[Coalition] {
        &self.coalitions
    }

    /// `C_{i-1}` for 1-based `i`, with `C_0 = ∅`.
    pub fn predecessor(&self, i: usize) -> Coalition {
        if i <= 1 {
            Coalition::EMPTY
        } else {
            self.coalitions[i - 2]
        }
    }

    /// `(C_1, C_2∖C_1, …, C_k∖C_{k-1})`.
    pub fn blocks(&self) -> Vec<Coalition> {
        let mut previous = Coalition::EMPTY;
        self.coalitions
            .iter()
            .map(|&c| {
                let block = c.difference(previous);
                previous = c;
                block
            })
            .collect()
    }

    /// Pairs `(C_{i-1}, C_i ∖ C_{i-1})`.
    pub fn steps(&self) -> impl Iterator<Item = (Coalition, Coalition)> + '_ {
        let mut previous = Coalition::EMPTY;
        self.coalitions.iter().map(move |&c| {
            let step = (previous, c.difference(previous));
            previous = c;
            step
        })
    }

    pub fn is_maximal(&self) -> bool {
        self.coalitions.len() == self.n
    }

    /// The arrival order of a maximal chain.
    pub fn permutation(&self) -> Option<Permutation> {
        if !self.is_maximal() {
            return None;
        }
        Some(Permutation(
            self.blocks().iter().map(|b| b.players().next().unwrap()).collect(),
        ))
    }

    pub fn keys(&self) -> Vec<String> {
        self.coalitions.iter().map(|c| c.key()).collect()
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coalitions.iter().map(|c| c.key()).join(" < "))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Ordered Bell (Fubini) number: `a(0) = 1`, `a(n) = Σ_{k=1}^n C(n,k) a(n-k)`.
pub fn ordered_bell(n: usize) -> u128 {
    let mut a = vec![1u128; n + 1];
    for m in 1..=n {
        let mut binom = 1u128;
        let mut total = 0u128;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u128 / k as u128;
            total = total.saturating_add(binom.saturating_mul(a[m - k]));
        }
        a[m] = total;
    }
    a[n]
}

/// Every chain on `n` players, using the default capacity.
pub fn enumerate_chains(n: usize) -> Result<Vec<Chain>> {
    enumerate_chains_capped(n, DEFAULT_MAX_PLAYERS)
}

/// Every chain on `n <= max` players.
///
/// Chains are produced by peeling the first block off the remaining players,
/// trying candidate blocks in ascending bit order, and recursing on the rest.
/// The output is therefore sorted lexicographically by block bit patterns.
pub fn enumerate_chains_capped(n: usize, max: usize) -> Result<Vec<Chain>> {
    check_players(n, max)?;
    let mut out = Vec::with_capacity(ordered_bell(n) as usize);
    let mut prefix = Vec::with_capacity(n);
    peel(n, Coalition::grand(n), &mut prefix, &mut out);
    Ok(out)
}

fn peel(n: usize, remaining: Coalition, prefix: &mut Vec<Coalition>, out: &mut Vec<Chain>) {
    if remaining.is_empty() {
        out.push(Chain {
            n,
            coalitions: prefix.clone(),
        });
        return;
    }
    let reached = prefix.last().copied().unwrap_or(Coalition::EMPTY);
    for block in remaining.subsets() {
        prefix.push(reached.union(block));
        peel(n, remaining.difference(block), prefix, out);
        prefix.pop();
    }
}

/// The marginal vector `x^v(π)`: each player receives its marginal
/// contribution to the players arriving before it.
pub fn marginal_vector(game: &Game, perm: &Permutation) -> Result<PayoffVector> {
    if perm.len() != game.n() {
        return Err(Error::DimensionMismatch {
            expected: game.n(),
            found: perm.len(),
        });
    }
    let mut coords = vec![Rational::zero(); game.n()];
    let mut before = Coalition::EMPTY;
    for &player in perm.order() {
        let after = before.with(player);
        coords[player] = game.value(after) - game.value(before);
        before = after;
    }
    Ok(PayoffVector(coords))
}

/// All `n!` marginal vectors, in lexicographic permutation order.
pub fn marginal_vectors(game: &Game) -> Vec<PayoffVector> {
    Permutation::all(game.n())
        .iter()
        .map(|p| marginal_vector(game, p).expect("permutation sized to the game"))
        .collect()
}

#[derive(Deserialize)]
struct GameFile {
    n: usize,
    values: StrictValues,
}

/// The `"values"` object, rejecting duplicate keys.
struct StrictValues(Vec<(String, String)>);

impl<'de> Deserialize<'de> for StrictValues {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ValuesVisitor;

        impl<'de> Visitor<'de> for ValuesVisitor {
            type Value = StrictValues;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping coalition keys to rational strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<StrictValues, A::Error> {
                let mut entries: Vec<(String, String)> = Vec::new();
                while let Some(key) = map.next_key::<String>()? {
                    let value: serde_json::Value = map.next_value()?;
                    let text = match value {
                        serde_json::Value::String(s) => s,
                        serde_json::Value::Number(num) if num.is_i64() || num.is_u64() => num.to_string(),
                        other => other.to_string(),
                    };
                    if entries.iter().any(|(k, _)| *k == key) {
                        return Err(de::Error::custom(format!("duplicate coalition key \"{key}\"")));
                    }
                    entries.push((key, text));
                }
                Ok(StrictValues(entries))
            }
        }

        deserializer.deserialize_map(ValuesVisitor)
    }
}

/// Parses a game file with the default player cap.
pub fn parse_game(text: &str) -> Result<Game> {
    parse_game_capped(text, DEFAULT_MAX_PLAYERS)
}

pub fn parse_game_capped(text: &str, max: usize) -> Result<Game> {
    let file: GameFile = serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        match message.split('"').nth(1) {
            Some(key) if message.starts_with("duplicate coalition key") => Error::DuplicateKey(key.to_string()),
            _ => Error::Json(e),
        }
    })?;
    let n = file.n;
    check_players(n, max)?;
    let mut values: Vec<Option<Rational>> = vec![None; 1 << n];
    values[0] = Some(Rational::zero());
    for (key, text) in &file.values.0 {
        let coalition = Coalition::parse_key(key, n)?;
        if values[coalition.index()].is_some() {
            return Err(Error::DuplicateKey(key.clone()));
        }
        let value = rational::parse(text).map_err(|_| Error::InvalidRational {
            key: key.clone(),
            value: text.clone(),
        })?;
        values[coalition.index()] = Some(value);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(bits, v)| v.ok_or_else(|| Error::MissingCoalition(Coalition(bits as u32).key())))
        .collect::<Result<Vec<_>>>()?;
    Game::new(n, values)
}

/// Serializes a game in the game file format, coalitions ordered by size
/// and then lexicographically.
pub fn game_to_json(game: &Game) -> serde_json::Value {
    let mut coalitions: Vec<Coalition> = Coalition::nonempty(game.n()).collect();
    coalitions.sort_by_key(|c| (c.len(), c.players().collect::<Vec<_>>()));
    let mut values = serde_json::Map::new();
    for c in coalitions {
        values.insert(c.key(), serde_json::Value::String(rational::format(game.value(c))));
    }
    serde_json::json!({ "n": game.n(), "values": values })
}
