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

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::affine::{nullspace, rref};
use super::dd::extreme_rays;
use super::lp::{LinearProgram, Relation};
use super::HPolytope;
use crate::game::{PayoffVector, Permutation};
use crate::rational::{self, Rational};

/// Convex hull of finitely many points, stored by its extreme points in
/// ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<PayoffVector>,
}

/// Whether `x` is a convex combination of `points`.
pub fn in_hull(points: &[&PayoffVector], x: &PayoffVector) -> bool {
    if points.is_empty() {
        return false;
    }
    if points.contains(&x) {
        return true;
    }
    let m = points.len();
    let mut lp = LinearProgram::new(m);
    for j in 0..m {
        lp.set_nonnegative(j);
    }
    lp.add_row(vec![rational::int(1); m], Relation::Eq, rational::int(1));
    for i in 0..x.len() {
        let row = points.iter().map(|p| p[i].clone()).collect();
        lp.add_row(row, Relation::Eq, x[i].clone());
    }
    lp.solve().point().is_some()
}

impl VPolytope {
    pub fn empty(dim: usize) -> Self {
        VPolytope {
            dim,
            vertices: Vec::new(),
        }
    }

    /// Hull of `points`; duplicates and non-extreme points are dropped.
    pub fn from_points(dim: usize, points: Vec<PayoffVector>) -> Self {
        let mut points = points;
        assert!(points.iter().all(|p| p.len() == dim), "point dimension must match");
        points.sort();
        points.dedup();
        let mut keep = vec![true; points.len()];
        for i in 0..points.len() {
            let others: Vec<&PayoffVector> = (0..points.len())
                .filter(|&j| j != i && keep[j])
                .map(|j| &points[j])
                .collect();
            if in_hull(&others, &points[i]) {
                keep[i] = false;
            }
        }
        let vertices = points
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(p, _)| p)
            .collect();
        VPolytope { dim, vertices }
    }

    /// Trusts that `vertices` are distinct extreme points.
    pub(crate) fn from_extreme_points(dim: usize, mut vertices: Vec<PayoffVector>) -> Self {
        vertices.sort();
        VPolytope { dim, vertices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[PayoffVector] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, x: &PayoffVector) -> bool {
        in_hull(&self.vertices.iter().collect::<Vec<_>>(), x)
    }

    /// Dimension of the affine hull, `-1` when empty.
    pub fn affine_dim(&self) -> isize {
        match self.vertices.split_first() {
            None => -1,
            Some((first, rest)) => {
                let diffs: Vec<Vec<Rational>> = rest.iter().map(|p| p.sub(first).into_coords()).collect();
                rref(diffs, self.dim).1.len() as isize
            }
        }
    }

    /// Facet description: the affine hull as equalities plus one inequality
    /// per facet.
    pub fn to_h(&self) -> HPolytope {
        let Some((first, rest)) = self.vertices.split_first() else {
            return HPolytope::empty(self.dim);
        };
        let diffs: Vec<Vec<Rational>> = rest.iter().map(|p| p.sub(first).into_coords()).collect();
        let mut h = HPolytope::new(self.dim);
        for normal in nullspace(&diffs, self.dim) {
            let rhs = first.dot(&normal);
            h.add_equality(normal, rhs);
        }
        let (_, pivots) = rref(diffs, self.dim);
        if pivots.is_empty() {
            return h;
        }
        // Within the affine hull the pivot coordinates are a chart; the
        // facets there are the extreme rays of {(β, a) : β + a·q ≥ 0}.
        let rows: Vec<Vec<Rational>> = self
            .vertices
            .iter()
            .map(|p| {
                std::iter::once(rational::int(1))
                    .chain(pivots.iter().map(|&j| p[j].clone()))
                    .collect()
            })
            .collect();
        let rays = extreme_rays(&rows, pivots.len() + 1).expect("hull cone is pointed");
        for ray in rays {
            if ray[1..].iter().all(Zero::is_zero) {
                continue;
            }
            let mut coeffs = vec![Rational::zero(); self.dim];
            for (k, &j) in pivots.iter().enumerate() {
                coeffs[j] = ray[k + 1].clone();
            }
            h.add_inequality(coeffs, -ray[0].clone());
        }
        h
    }

    pub fn translate(&self, t: &PayoffVector) -> VPolytope {
        VPolytope::from_extreme_points(self.dim, self.vertices.iter().map(|v| v.add(t)).collect())
    }

    pub fn scale(&self, alpha: &Rational) -> VPolytope {
        assert!(alpha.is_positive(), "scaling factor must be positive");
        VPolytope::from_extreme_points(self.dim, self.vertices.iter().map(|v| v.scale(alpha)).collect())
    }

    pub fn permute(&self, perm: &Permutation) -> VPolytope {
        VPolytope::from_extreme_points(self.dim, self.vertices.iter().map(|v| perm.permute_vector(v)).collect())
    }

    /// `{"equalities": …, "inequalities": …, "vertices": …}`.
    pub fn to_json(&self) -> Value {
        let mut value = self.to_h().to_json();
        value["vertices"] = json!(self.vertices.iter().map(PayoffVector::to_strings).collect::<Vec<_>>());
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn pts(list: &[&[i64]]) -> Vec<PayoffVector> {
        list.iter().map(|p| PayoffVector::from_ints(p)).collect()
    }

    #[test]
    fn interior_points_are_dropped() {
        let v = VPolytope::from_points(2, pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[1, 0], &[0, 0]]));
        assert_eq!(v.vertices(), pts(&[&[0, 0], &[0, 2], &[2, 0]]).as_slice());
        assert_eq!(v.affine_dim(), 2);
    }

    #[test]
    fn hull_membership() {
        let v = VPolytope::from_points(2, pts(&[&[0, 0], &[2, 0], &[0, 2]]));
        assert!(v.contains(&PayoffVector::new(vec![ratio(1, 2), ratio(3, 2)])));
        assert!(!v.contains(&PayoffVector::new(vec![ratio(3, 2), ratio(3, 2)])));
    }

    #[test]
    fn facets_of_a_square_in_a_plane() {
        let v = VPolytope::from_points(3, pts(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]));
        let h = v.to_h();
        assert_eq!(h.inequalities().len(), 4);
        assert!(h.contains(&PayoffVector::new(vec![ratio(1, 2), ratio(1, 3), int(1)])));
        assert!(!h.contains(&PayoffVector::new(vec![ratio(1, 2), ratio(1, 3), int(2)])));
        assert_eq!(h.vertices().unwrap(), v);
    }

    #[test]
    fn point_and_segment() {
        let p = VPolytope::from_points(2, pts(&[&[1, 2]]));
        assert_eq!(p.to_h().vertices().unwrap(), p);
        assert_eq!(p.affine_dim(), 0);
        let s = VPolytope::from_points(2, pts(&[&[0, 0], &[2, 2], &[1, 1]]));
        assert_eq!(s.vertices().len(), 2);
        assert_eq!(s.to_h().vertices().unwrap(), s);
        assert!(VPolytope::empty(2).to_h().is_empty());
    }
}
