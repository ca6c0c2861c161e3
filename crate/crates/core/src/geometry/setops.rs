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

//! Set-level queries across representations: inclusion, equality and
//! Minkowski-sum membership.

use num_traits::{Signed, Zero};

use super::lp::{LinearProgram, LpOutcome, Relation};
use super::{Constraint, HPolytope, PolyUnion, VPolytope};
use crate::error::Result;
use crate::game::PayoffVector;
use crate::rational::{self, Rational};

/// Any of the three set representations.
#[derive(Clone, Debug)]
pub enum Region {
    H(HPolytope),
    V(VPolytope),
    U(PolyUnion),
}

impl From<HPolytope> for Region {
    fn from(p: HPolytope) -> Self {
        Region::H(p)
    }
}

impl From<VPolytope> for Region {
    fn from(p: VPolytope) -> Self {
        Region::V(p)
    }
}

impl From<PolyUnion> for Region {
    fn from(p: PolyUnion) -> Self {
        Region::U(p)
    }
}

/// A bounded convex piece in both representations.
struct Piece {
    h: HPolytope,
    vertices: Vec<PayoffVector>,
}

impl Region {
    pub fn dim(&self) -> usize {
        match self {
            Region::H(p) => p.dim(),
            Region::V(p) => p.dim(),
            Region::U(p) => p.dim(),
        }
    }

    pub fn contains(&self, x: &PayoffVector) -> bool {
        match self {
            Region::H(p) => p.contains(x),
            Region::V(p) => p.contains(x),
            Region::U(p) => p.contains(x),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Region::H(p) => p.is_empty(),
            Region::V(p) => p.is_empty(),
            Region::U(p) => p.is_empty(),
        }
    }

    fn pieces(&self) -> Result<Vec<Piece>> {
        let from_h = |h: &HPolytope| -> Result<Option<Piece>> {
            match h.vertices() {
                Ok(v) => Ok(Some(Piece {
                    h: h.clone(),
                    vertices: v.vertices().to_vec(),
                })),
                Err(crate::Error::Empty) => Ok(None),
                Err(e) => Err(e),
            }
        };
        Ok(match self {
            Region::H(p) => from_h(p)?.into_iter().collect(),
            Region::V(p) if p.is_empty() => Vec::new(),
            Region::V(p) => vec![Piece {
                h: p.to_h(),
                vertices: p.vertices().to_vec(),
            }],
            Region::U(u) => {
                let mut out = Vec::new();
                for c in u.nonempty() {
                    out.extend(from_h(&c.polytope)?);
                }
                out
            }
        })
    }

    /// Constraint systems of the nonempty convex pieces.
    fn systems(&self) -> Vec<HPolytope> {
        match self {
            Region::H(p) => vec![p.clone()],
            Region::V(p) if p.is_empty() => Vec::new(),
            Region::V(p) => vec![p.to_h()],
            Region::U(u) => u.nonempty().map(|c| c.polytope.clone()).collect(),
        }
    }
}

/// Point of `closed` satisfying every `strict` row with `>`, if any.
fn strict_point(closed: &HPolytope, strict: &[Constraint]) -> Option<PayoffVector> {
    if strict.is_empty() {
        return closed.find_point();
    }
    let n = closed.dim();
    let mut lp = LinearProgram::new(n + 1);
    let widen = |coeffs: &[Rational], t: Rational| {
        let mut row = coeffs.to_vec();
        row.push(t);
        row
    };
    for c in closed.equalities() {
        lp.add_row(widen(&c.coeffs, Rational::zero()), Relation::Eq, c.rhs.clone());
    }
    for c in closed.inequalities() {
        lp.add_row(widen(&c.coeffs, Rational::zero()), Relation::Ge, c.rhs.clone());
    }
    for c in strict {
        lp.add_row(widen(&c.coeffs, rational::int(-1)), Relation::Ge, c.rhs.clone());
    }
    let mut bound = vec![Rational::zero(); n + 1];
    bound[n] = rational::int(1);
    lp.add_row(bound.clone(), Relation::Le, rational::int(1));
    lp.maximize(bound);
    match lp.solve() {
        LpOutcome::Optimal { mut point, value } if value.is_positive() => {
            point.pop();
            Some(PayoffVector::new(point))
        }
        _ => None,
    }
}

/// A point of `cell` (closed part plus strict rows) outside every system in
/// `cover`, found by splitting the cell along the violated constraints.
fn uncovered(closed: HPolytope, strict: Vec<Constraint>, cover: &[HPolytope]) -> Option<PayoffVector> {
    let point = strict_point(&closed, &strict)?;
    let Some((first, rest)) = cover.split_first() else {
        return Some(point);
    };
    if strict_point(&closed.intersect(first), &strict).is_none() {
        return uncovered(closed, strict, rest);
    }
    // cell ∖ Q is the disjoint union over constraints j of Q of the parts
    // violating j and satisfying every earlier constraint.
    let mut sides: Vec<Constraint> = first.inequalities().to_vec();
    for c in first.equalities() {
        sides.push(c.clone());
        sides.push(Constraint::new(c.coeffs.iter().map(|a| -a).collect(), -c.rhs.clone()));
    }
    let mut satisfied = closed;
    for c in sides {
        let mut violated = strict.clone();
        violated.push(Constraint::new(c.coeffs.iter().map(|a| -a).collect(), -c.rhs.clone()));
        if let Some(x) = uncovered(satisfied.clone(), violated, rest) {
            return Some(x);
        }
        satisfied.add_inequality(c.coeffs, c.rhs);
    }
    None
}

/// A point of `x` outside `y`, or `None` when `x ⊆ y`. Both sides must be
/// bounded.
pub fn subset_witness(x: &Region, y: &Region) -> Result<Option<PayoffVector>> {
    assert_eq!(x.dim(), y.dim(), "regions must share the dimension");
    let targets = y.systems();
    for piece in x.pieces()? {
        if let Some(v) = piece.vertices.iter().find(|v| !y.contains(v)) {
            return Ok(Some(v.clone()));
        }
        if !matches!(y, Region::U(_)) {
            continue;
        }
        if targets.iter().any(|t| piece.vertices.iter().all(|v| t.contains(v))) {
            continue;
        }
        if let Some(w) = uncovered(piece.h, Vec::new(), &targets) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub fn is_subset(x: &Region, y: &Region) -> Result<bool> {
    Ok(subset_witness(x, y)?.is_none())
}

/// Exact point-set equality by mutual inclusion.
pub fn set_equal(x: &Region, y: &Region) -> Result<bool> {
    Ok(is_subset(x, y)? && is_subset(y, x)?)
}

/// Whether `point ∈ P + Q`.
pub fn minkowski_member(point: &PayoffVector, p: &Region, q: &Region) -> bool {
    for a in p.systems() {
        for b in q.systems() {
            // q = point − p turns `c·q ≥ r` into `−c·p ≥ r − c·point`.
            let mut system = a.clone();
            for c in b.equalities() {
                system.add_equality(c.coeffs.iter().map(|x| -x).collect(), &c.rhs - c.lhs(point));
            }
            for c in b.inequalities() {
                system.add_inequality(c.coeffs.iter().map(|x| -x).collect(), &c.rhs - c.lhs(point));
            }
            if !system.is_empty() {
                return true;
            }
        }
    }
    false
}
