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

//! The Lovász extension of a game.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::game::{Coalition, Game, PayoffVector, Permutation};
use crate::rational::Rational;

/// Level-set decomposition of a vector `x`:
/// `x = Σ_i x_{π(i)} (χ_{V_i} − χ_{V_{i−1}})` with `V_i = {j : x_j ≥ x_{π(i)}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub permutation: Permutation,
    /// `V_1 ⊆ … ⊆ V_n`; `V_0 = ∅` is implicit.
    pub level_sets: Vec<Coalition>,
    /// `x_{π(1)} ≥ … ≥ x_{π(n)}`.
    pub coefficients: Vec<Rational>,
}

impl LevelDecomposition {
    pub fn reassemble(&self) -> PayoffVector {
        let n = self.level_sets.len();
        let mut coords = vec![Rational::zero(); n];
        let mut previous = Coalition::EMPTY;
        for (level, coefficient) in self.level_sets.iter().zip(&self.coefficients) {
            for j in level.difference(previous).players() {
                coords[j] += coefficient;
            }
            previous = *level;
        }
        PayoffVector::new(coords)
    }
}

/// Sorts players by decreasing coordinate, ties by ascending index.
pub fn decompose(x: &PayoffVector) -> LevelDecomposition {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[b].cmp(&x[a]).then(a.cmp(&b)));
    let permutation = Permutation::new(order).expect("sorted indices form a permutation");
    level_sets_for(x, permutation).expect("sorting permutation lies in Π(x)")
}

/// The decomposition for a caller-chosen `π`; fails unless `π ∈ Π(x)`.
pub fn decompose_with(x: &PayoffVector, permutation: &Permutation) -> Result<LevelDecomposition> {
    if permutation.len() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: permutation.len(),
        });
    }
    level_sets_for(x, permutation.clone())
}

fn level_sets_for(x: &PayoffVector, permutation: Permutation) -> Result<LevelDecomposition> {
    let order = permutation.order();
    if order.windows(2).any(|w| x[w[0]] < x[w[1]]) {
        return Err(Error::InvalidPermutation(format!(
            "{:?} does not sort {x} in decreasing order",
            order
        )));
    }
    let n = x.len();
    let mut level_sets = Vec::with_capacity(n);
    let mut coefficients = Vec::with_capacity(n);
    for &p in order {
        let threshold = &x[p];
        let level = (0..n)
            .filter(|&j| x[j] >= *threshold)
            .fold(Coalition::EMPTY, Coalition::with);
        level_sets.push(level);
        coefficients.push(threshold.clone());
    }
    Ok(LevelDecomposition {
        permutation,
        level_sets,
        coefficients,
    })
}

/// `v̂(x) = Σ_i x_{π(i)} (v(V_i) − v(V_{i−1}))`.
pub fn lovasz_eval(game: &Game, x: &PayoffVector) -> Result<Rational> {
    if x.len() != game.n() {
        return Err(Error::DimensionMismatch {
            expected: game.n(),
            found: x.len(),
        });
    }
    Ok(eval_decomposition(game, &decompose(x)))
}

/// Evaluates with an explicit `π ∈ Π(x)`.
pub fn lovasz_eval_with(game: &Game, x: &PayoffVector, permutation: &Permutation) -> Result<Rational> {
    if x.len() != game.n() {
        return Err(Error::DimensionMismatch {
            expected: game.n(),
            found: x.len(),
        });
    }
    Ok(eval_decomposition(game, &decompose_with(x, permutation)?))
}

pub fn eval_decomposition(game: &Game, decomposition: &LevelDecomposition) -> Rational {
    let mut previous = Coalition::EMPTY;
    let mut total = Rational::zero();
    for (level, coefficient) in decomposition.level_sets.iter().zip(&decomposition.coefficients) {
        total += coefficient * (game.value(*level) - game.value(previous));
        previous = *level;
    }
    total
}
