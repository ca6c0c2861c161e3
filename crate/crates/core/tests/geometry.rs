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

use proptest::prelude::*;

use tugames::geometry::{set_equal, HPolytope, Region};
use tugames::rational::{int, ratio};
use tugames::{PayoffVector, VPolytope};

fn points(dim: usize) -> impl Strategy<Value = Vec<PayoffVector>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, dim), 1..8)
        .prop_map(|ps| ps.iter().map(|p| PayoffVector::from_ints(p)).collect())
}

/// Up to five inequalities `a·x ≥ b` on the plane with small coefficients.
fn plane_system() -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -6i64..=6), 1..6)
}

fn system(rows: &[(i64, i64, i64)]) -> HPolytope {
    let mut h = HPolytope::new(2);
    for &(a, b, c) in rows {
        h.add_inequality(vec![int(a), int(b)], int(c));
    }
    h
}

proptest! {
    #[test]
    fn vertex_facet_round_trip(ps in points(3)) {
        let v = VPolytope::from_points(3, ps);
        let h = v.to_h();
        prop_assert_eq!(&h.vertices().unwrap(), &v);
        prop_assert!(set_equal(&Region::H(h), &Region::V(v)).unwrap());
    }

    #[test]
    fn hull_membership_agrees_with_facets(ps in points(3), x in prop::collection::vec(-4i64..=4, 3)) {
        let v = VPolytope::from_points(3, ps);
        let x = PayoffVector::from_ints(&x);
        prop_assert_eq!(v.contains(&x), v.to_h().contains(&x));
    }

    #[test]
    fn emptiness_agrees_with_grid_search(rows in plane_system()) {
        let h = system(&rows);
        // a grid hit proves feasibility; a miss is only conclusive for the LP side
        let mut hit = false;
        'grid: for d in 1..=4 {
            for x in -40..=40 {
                for y in -40..=40 {
                    if h.contains(&PayoffVector::new(vec![ratio(x, d), ratio(y, d)])) {
                        hit = true;
                        break 'grid;
                    }
                }
            }
        }
        if hit {
            prop_assert!(!h.is_empty());
        }
        if let Some(p) = h.find_point() {
            prop_assert!(h.contains(&p));
        } else {
            prop_assert!(!hit);
        }
    }
}

#[test]
fn grid_search_decides_small_integral_systems() {
    let feasible = system(&[(1, 0, 0), (0, 1, 0), (-1, -1, -1)]);
    assert!(!feasible.is_empty());
    let thin = system(&[(1, 1, 1), (-1, -1, -1), (1, -1, 0), (-1, 1, 0)]);
    assert_eq!(
        thin.find_point().unwrap(),
        PayoffVector::new(vec![ratio(1, 2), ratio(1, 2)])
    );
    let strip = system(&[(2, 0, 1), (-2, 0, -1)]);
    assert!(!strip.is_empty());
    let infeasible = system(&[(1, 0, 1), (-1, 0, 0)]);
    assert!(infeasible.is_empty());
}
