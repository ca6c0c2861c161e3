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

//! Closed forms for simple games, glove games and submodular games.

use itertools::Itertools;
use num_traits::Zero;

use crate::classify::{is_simple, is_submodular};
use crate::error::{Error, Result};
use crate::game::{check_players, marginal_vector, Chain, Coalition, Game, Permutation, DEFAULT_MAX_PLAYERS};
use crate::geometry::{HPolytope, Label, PolyUnion};
use crate::rational::{int, Rational};

fn unit_row(n: usize, i: usize) -> Vec<Rational> {
    Coalition::singleton(i).incidence(n).into_coords()
}

/// A simple game seen through its winning coalitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGameView {
    n: usize,
    winning: Vec<Coalition>,
    minimal_winning: Vec<Coalition>,
}

impl SimpleGameView {
    pub fn from_game(game: &Game) -> Result<Self> {
        if !is_simple(game) {
            return Err(Error::NotSimple(
                "values must be 0 or 1, monotone, with v(N) = 1".into(),
            ));
        }
        let winning: Vec<Coalition> = Coalition::nonempty(game.n())
            .filter(|&a| !game.value(a).is_zero())
            .collect();
        let mut minimal_winning: Vec<Coalition> = winning
            .iter()
            .copied()
            .filter(|&e| !winning.iter().any(|&b| b.is_proper_subset(e)))
            .collect();
        minimal_winning.sort_by_key(|c| (c.len(), c.bits()));
        Ok(SimpleGameView {
            n: game.n(),
            winning,
            minimal_winning,
        })
    }

    /// The simple game whose minimal winning coalitions are `antichain`.
    pub fn from_minimal_winning(n: usize, antichain: &[Coalition]) -> Result<Self> {
        check_players(n, DEFAULT_MAX_PLAYERS)?;
        if antichain.is_empty() {
            return Err(Error::NotSimple(
                "at least one minimal winning coalition is needed".into(),
            ));
        }
        let grand = Coalition::grand(n);
        for (k, &e) in antichain.iter().enumerate() {
            if e.is_empty() || !e.is_subset(grand) {
                return Err(Error::NotSimple(format!(
                    "{e} is not a nonempty coalition of {n} players"
                )));
            }
            if antichain[..k].iter().any(|&f| f.is_subset(e) || e.is_subset(f)) {
                return Err(Error::NotSimple(format!(
                    "{e} is comparable with another minimal winning coalition"
                )));
            }
        }
        let mut minimal_winning = antichain.to_vec();
        minimal_winning.sort_by_key(|c| (c.len(), c.bits()));
        let winning = Coalition::nonempty(n)
            .filter(|&a| minimal_winning.iter().any(|&e| e.is_subset(a)))
            .collect();
        Ok(SimpleGameView {
            n,
            winning,
            minimal_winning,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn winning(&self) -> &[Coalition] {
        &self.winning
    }

    pub fn minimal_winning(&self) -> &[Coalition] {
        &self.minimal_winning
    }

    pub fn to_game(&self) -> Game {
        Game::from_fn(self.n, |a| int(self.winning.contains(&a) as i64))
    }
}

pub fn minimal_winning(game: &Game) -> Result<Vec<Coalition>> {
    Ok(SimpleGameView::from_game(game)?.minimal_winning)
}

/// The face `Δ_E` of the standard simplex.
pub fn simplex_face(n: usize, e: Coalition) -> HPolytope {
    let mut p = HPolytope::new(n);
    p.add_equality(e.incidence(n).into_coords(), int(1));
    for i in 0..n {
        if e.contains(i) {
            p.add_inequality(unit_row(n, i), int(0));
        } else {
            p.add_equality(unit_row(n, i), int(0));
        }
    }
    p
}

/// `M(v)` of a simple game: the union of `Δ_E` over minimal winners `E`.
pub fn intermediate_simple(view: &SimpleGameView) -> PolyUnion {
    let mut u = PolyUnion::new(view.n);
    for &e in &view.minimal_winning {
        u.push_flagged(Label::Coalition(e), simplex_face(view.n, e), false);
    }
    u
}

/// `C(v)` of a simple game: the intersection of `Δ_E` over minimal winners `E`.
pub fn core_simple(view: &SimpleGameView) -> HPolytope {
    view.minimal_winning
        .iter()
        .fold(HPolytope::new(view.n), |p, &e| p.intersect(&simplex_face(view.n, e)))
}

/// Every nonempty antichain of nonempty coalitions of `n` players, i.e.
/// every family of minimal winning coalitions of a simple game.
pub fn antichains(n: usize) -> Vec<Vec<Coalition>> {
    fn grow(pool: &[Coalition], chosen: &mut Vec<Coalition>, out: &mut Vec<Vec<Coalition>>) {
        for (k, &c) in pool.iter().enumerate() {
            if chosen.iter().all(|&d| !c.is_subset(d) && !d.is_subset(c)) {
                chosen.push(c);
                out.push(chosen.clone());
                grow(&pool[k + 1..], chosen, out);
                chosen.pop();
            }
        }
    }
    let pool: Vec<Coalition> = Coalition::nonempty(n).collect();
    let mut out = Vec::new();
    grow(&pool, &mut Vec::new(), &mut out);
    out
}

/// `v(A) = min(|A∩L|, |A∩R|)` with `L = {1..p}`, `R = {p+1..p+q}`.
pub fn make_glove(p: usize, q: usize) -> Result<Game> {
    if p < q {
        return Err(Error::GloveOrder { p, q });
    }
    if q == 0 {
        return Err(Error::InvalidGame("a glove game needs at least one right glove".into()));
    }
    check_players(p + q, DEFAULT_MAX_PLAYERS)?;
    let left = Coalition::grand(p);
    let right = Coalition::grand(p + q).difference(left);
    Ok(Game::from_fn(p + q, |a| {
        int(a.intersection(left).len().min(a.intersection(right).len()) as i64)
    }))
}

/// A glove game with an arbitrary set of left-glove owners.
pub fn make_glove_with_left(n: usize, left: Coalition) -> Result<Game> {
    check_players(n, DEFAULT_MAX_PLAYERS)?;
    let right = Coalition::grand(n).difference(left);
    if left.is_empty() || right.is_empty() || !left.is_subset(Coalition::grand(n)) {
        return Err(Error::InvalidGame("both glove sides must be nonempty".into()));
    }
    Ok(Game::from_fn(n, |a| {
        int(a.intersection(left).len().min(a.intersection(right).len()) as i64)
    }))
}

fn glove_sides(p: usize, q: usize) -> (Coalition, Coalition) {
    let left = Coalition::grand(p);
    (left, Coalition::grand(p + q).difference(left))
}

/// `C(v)` of the glove game: the point `χ_R` if `p > q`, the segment
/// `conv{χ_L, χ_R}` if `p = q`.
pub fn glove_core(p: usize, q: usize) -> Result<HPolytope> {
    if p < q {
        return Err(Error::GloveOrder { p, q });
    }
    let n = p + q;
    let (left, right) = glove_sides(p, q);
    let mut h = HPolytope::new(n);
    if p > q {
        for i in 0..n {
            h.add_equality(unit_row(n, i), int(right.contains(i) as i64));
        }
    } else {
        // x constant on L, constant on R, the two constants summing to one
        let l0 = 0;
        let r0 = p;
        for i in left.players().skip(1) {
            h.add_equality(
                Coalition::singleton(i)
                    .incidence(n)
                    .sub(&Coalition::singleton(l0).incidence(n))
                    .into_coords(),
                int(0),
            );
        }
        for i in right.players().skip(1) {
            h.add_equality(
                Coalition::singleton(i)
                    .incidence(n)
                    .sub(&Coalition::singleton(r0).incidence(n))
                    .into_coords(),
                int(0),
            );
        }
        h.add_equality(
            Coalition::from_bits((1 << l0) | (1 << r0)).incidence(n).into_coords(),
            int(1),
        );
        h.add_inequality(unit_row(n, l0), int(0));
        h.add_inequality(unit_row(n, r0), int(0));
    }
    Ok(h)
}

/// `M(v)` of the glove game: for every `q`-subset `L̃ ⊆ L` and bijection
/// `ρ: L̃ → R`, the set where `x_l + x_ρ(l) = 1`, `0 ≤ x_l ≤ 1` on `L̃` and
/// `x_l = 0` on `L ∖ L̃`. Components are labeled by the matching.
pub fn intermediate_glove(p: usize, q: usize) -> Result<PolyUnion> {
    if p < q {
        return Err(Error::GloveOrder { p, q });
    }
    let n = p + q;
    check_players(n, DEFAULT_MAX_PLAYERS)?;
    let mut u = PolyUnion::new(n);
    for chosen in (0..p).combinations(q) {
        for image in (p..n).permutations(q) {
            let mut h = HPolytope::new(n);
            let mut matching = Vec::with_capacity(q);
            for (&l, &r) in chosen.iter().zip(&image) {
                h.add_equality(
                    Coalition::from_bits((1 << l) | (1 << r)).incidence(n).into_coords(),
                    int(1),
                );
                h.add_inequality(unit_row(n, l), int(0));
                h.add_inequality(unit_row(n, l).iter().map(|c| -c).collect(), int(-1));
                matching.push((l, r));
            }
            for l in (0..p).filter(|l| !chosen.contains(l)) {
                h.add_equality(unit_row(n, l), int(0));
            }
            u.push_flagged(Label::Matching(matching), h, false);
        }
    }
    Ok(u)
}

/// `M(v)` for a glove game with arbitrary left set, via the canonical
/// labeling and anonymity. Sides are swapped when fewer players hold the
/// left glove.
pub fn intermediate_glove_relabeled(n: usize, left: Coalition) -> Result<PolyUnion> {
    make_glove_with_left(n, left)?;
    let right = Coalition::grand(n).difference(left);
    let (big, small) = if left.len() >= right.len() {
        (left, right)
    } else {
        (right, left)
    };
    let perm = Permutation::new(big.players().chain(small.players()).collect())?;
    Ok(intermediate_glove(big.len(), small.len())?.permute(&perm))
}

/// Outcome of the per-block case analysis of a glove chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockCase {
    /// Left owners share `λ`, right owners `1 − λ`, `λ ∈ [0, 1]`.
    Segment,
    Infeasible,
    /// Left owners get 0, right owners get 1.
    LeftZero,
    /// Left owners get 1, right owners get 0.
    LeftOne,
}

/// Case of every block of `chain` in the glove game `(p, q)`, from the
/// glove counts before and after the block.
pub fn glove_block_cases(p: usize, q: usize, chain: &Chain) -> Vec<BlockCase> {
    let (left, right) = glove_sides(p, q);
    let counts = |c: Coalition| (c.intersection(left).len(), c.intersection(right).len());
    chain
        .steps()
        .map(|(before, block)| {
            let (p0, q0) = counts(before);
            let (p1, q1) = counts(before.union(block));
            match (p0.cmp(&q0), p1.cmp(&q1)) {
                (std::cmp::Ordering::Equal, std::cmp::Ordering::Equal) => BlockCase::Segment,
                (std::cmp::Ordering::Greater, std::cmp::Ordering::Less)
                | (std::cmp::Ordering::Less, std::cmp::Ordering::Greater) => BlockCase::Infeasible,
                _ if p0 >= q0 && p1 >= q1 => BlockCase::LeftZero,
                _ => BlockCase::LeftOne,
            }
        })
        .collect()
}

/// The component predicted by the block cases, or `None` if some block
/// is infeasible.
pub fn glove_predicted_component(p: usize, q: usize, chain: &Chain) -> Option<HPolytope> {
    let n = p + q;
    let (left, right) = glove_sides(p, q);
    let mut h = HPolytope::new(n);
    for ((_, block), case) in chain.steps().zip(glove_block_cases(p, q, chain)) {
        let ls: Vec<usize> = block.intersection(left).players().collect();
        let rs: Vec<usize> = block.intersection(right).players().collect();
        match case {
            BlockCase::Infeasible => return None,
            BlockCase::LeftZero | BlockCase::LeftOne => {
                let l_value = int((case == BlockCase::LeftOne) as i64);
                let r_value = int(1) - &l_value;
                for &l in &ls {
                    h.add_equality(unit_row(n, l), l_value.clone());
                }
                for &r in &rs {
                    h.add_equality(unit_row(n, r), r_value.clone());
                }
            }
            BlockCase::Segment => {
                let (l0, r0) = (ls[0], rs[0]);
                for &l in &ls[1..] {
                    h.add_equality(
                        Coalition::singleton(l)
                            .incidence(n)
                            .sub(&Coalition::singleton(l0).incidence(n))
                            .into_coords(),
                        int(0),
                    );
                }
                for &r in &rs[1..] {
                    h.add_equality(
                        Coalition::singleton(r)
                            .incidence(n)
                            .sub(&Coalition::singleton(r0).incidence(n))
                            .into_coords(),
                        int(0),
                    );
                }
                h.add_equality(
                    Coalition::from_bits((1 << l0) | (1 << r0)).incidence(n).into_coords(),
                    int(1),
                );
                h.add_inequality(unit_row(n, l0), int(0));
                h.add_inequality(unit_row(n, r0), int(0));
            }
        }
    }
    Some(h)
}

/// `M(v)` of a submodular game: the marginal vectors as point components.
pub fn intermediate_submodular(game: &Game) -> Result<PolyUnion> {
    if !is_submodular(game) {
        return Err(Error::NotSubmodular);
    }
    let mut u = PolyUnion::new(game.n());
    for perm in Permutation::all(game.n()) {
        let x = marginal_vector(game, &perm)?;
        u.push_flagged(Label::Permutation(perm), HPolytope::point(&x), false);
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::PayoffVector;
    use crate::geometry::{set_equal, Region};
    use crate::solutions::{self, Method};

    fn pts(h: &HPolytope) -> Vec<PayoffVector> {
        h.vertices().unwrap().vertices().to_vec()
    }

    fn example_one() -> Game {
        Game::from_fn(3, |a| int((a.contains(0) && a.len() >= 2) as i64))
    }

    #[test]
    fn minimal_winners() {
        assert_eq!(
            minimal_winning(&example_one()).unwrap(),
            vec![Coalition::from_players([1, 2]), Coalition::from_players([1, 3])]
        );
        assert_eq!(
            minimal_winning(&Game::unanimity(3, Coalition::grand(3))).unwrap(),
            vec![Coalition::grand(3)]
        );
        assert!(minimal_winning(&Game::from_fn(2, |a| int(a.len() as i64))).is_err());
    }

    #[test]
    fn disconnected_simple_game() {
        let view =
            SimpleGameView::from_minimal_winning(3, &[Coalition::from_players([1]), Coalition::from_players([2, 3])])
                .unwrap();
        assert!(core_simple(&view).is_empty());
        let m = intermediate_simple(&view);
        assert_eq!(
            pts(&m.components()[0].polytope),
            vec![PayoffVector::from_ints(&[1, 0, 0])]
        );
        let general = solutions::intermediate(&view.to_game(), Method::Chains).unwrap();
        assert!(set_equal(&Region::U(m), &Region::U(general)).unwrap());
    }

    #[test]
    fn antichain_count() {
        assert_eq!(antichains(1).len(), 1);
        assert_eq!(antichains(2).len(), 4);
        assert_eq!(antichains(3).len(), 18);
        assert_eq!(antichains(4).len(), 166);
    }

    #[test]
    fn glove_values() {
        let g = make_glove(2, 2).unwrap();
        assert_eq!(g.value(Coalition::from_players([1, 3])), &int(1));
        assert_eq!(g.value(Coalition::from_players([1, 2])), &int(0));
        assert_eq!(g.grand_value(), &int(2));
        assert!(matches!(make_glove(1, 2), Err(Error::GloveOrder { .. })));
    }

    #[test]
    fn glove_cores() {
        assert_eq!(
            pts(&glove_core(2, 1).unwrap()),
            vec![PayoffVector::from_ints(&[0, 0, 1])]
        );
        assert_eq!(
            pts(&glove_core(2, 2).unwrap()),
            vec![
                PayoffVector::from_ints(&[0, 0, 1, 1]),
                PayoffVector::from_ints(&[1, 1, 0, 0])
            ]
        );
    }

    #[test]
    fn three_left_one_right() {
        let u = intermediate_glove(3, 1).unwrap();
        assert_eq!(u.components().len(), 3);
        for (l, c) in u.components().iter().enumerate() {
            let mut e = vec![0; 4];
            e[l] = 1;
            assert_eq!(
                pts(&c.polytope),
                vec![PayoffVector::from_ints(&[0, 0, 0, 1]), PayoffVector::from_ints(&e)]
            );
        }
    }

    #[test]
    fn example_one_by_relabeling() {
        let m = intermediate_glove_relabeled(3, Coalition::from_players([1])).unwrap();
        let general = solutions::intermediate(&example_one(), Method::Chains).unwrap();
        assert!(set_equal(&Region::U(m), &Region::U(general)).unwrap());
    }

    #[test]
    fn submodular_shortcut() {
        let v = Game::from_fn(3, |a| int(a.len().min(1) as i64 * 5));
        let m = intermediate_submodular(&v).unwrap();
        let general = solutions::intermediate(&v, Method::Chains).unwrap();
        assert!(set_equal(&Region::U(m), &Region::U(general)).unwrap());
        assert!(matches!(
            intermediate_submodular(&example_one()),
            Err(Error::NotSubmodular)
        ));
    }
}
