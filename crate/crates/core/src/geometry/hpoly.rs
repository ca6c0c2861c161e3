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

use super::affine::{dot, AffineParam};
use super::dd::{extreme_rays, ConeError};
use super::lp::{LinearProgram, LpOutcome, Relation};
use super::VPolytope;
use crate::error::{Error, Result};
use crate::game::{PayoffVector, Permutation};
use crate::rational::{self, make_primitive, Rational};

/// A linear constraint `coeffs·x (= or ≥) rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Constraint { coeffs, rhs }
    }

    pub fn lhs(&self, x: &PayoffVector) -> Rational {
        dot(&self.coeffs, x.coords())
    }

    fn to_json(&self) -> Value {
        let mut row: Vec<String> = self.coeffs.iter().map(rational::format).collect();
        row.push(rational::format(&self.rhs));
        json!(row)
    }
}

/// Polyhedron `{x : E x = e, A x ≥ a}` in `R^dim`. Redundant rows are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    equalities: Vec<Constraint>,
    inequalities: Vec<Constraint>,
}

impl HPolytope {
    /// The whole space `R^dim`.
    pub fn new(dim: usize) -> Self {
        HPolytope {
            dim,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    /// A canonical empty polyhedron (`0 ≥ 1`).
    pub fn empty(dim: usize) -> Self {
        let mut p = HPolytope::new(dim);
        p.add_inequality(vec![Rational::zero(); dim], rational::int(1));
        p
    }

    /// `{point}`.
    pub fn point(point: &PayoffVector) -> Self {
        let dim = point.len();
        let mut p = HPolytope::new(dim);
        for i in 0..dim {
            let mut row = vec![Rational::zero(); dim];
            row[i] = rational::int(1);
            p.add_equality(row, point[i].clone());
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> &[Constraint] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Constraint] {
        &self.inequalities
    }

    pub fn add_equality(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.dim, "constraint width must match the dimension");
        self.equalities.push(Constraint::new(coeffs, rhs));
    }

    pub fn add_inequality(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.dim, "constraint width must match the dimension");
        self.inequalities.push(Constraint::new(coeffs, rhs));
    }

    pub fn contains(&self, x: &PayoffVector) -> bool {
        assert_eq!(x.len(), self.dim, "point dimension must match");
        self.equalities.iter().all(|c| c.lhs(x) == c.rhs) && self.inequalities.iter().all(|c| c.lhs(x) >= c.rhs)
    }

    fn feasibility_lp(&self) -> LinearProgram {
        let mut lp = LinearProgram::new(self.dim);
        for c in &self.equalities {
            lp.add_row(c.coeffs.clone(), Relation::Eq, c.rhs.clone());
        }
        for c in &self.inequalities {
            lp.add_row(c.coeffs.clone(), Relation::Ge, c.rhs.clone());
        }
        lp
    }

    /// Some point of the polyhedron, if any.
    pub fn find_point(&self) -> Option<PayoffVector> {
        match self.feasibility_lp().solve() {
            LpOutcome::Optimal { point, .. } => Some(PayoffVector::new(point)),
            _ => None,
        }
    }

    /// Exact emptiness test by linear-program feasibility.
    pub fn is_empty(&self) -> bool {
        self.find_point().is_none()
    }

    /// Maximizes `objective·x`; `None` if empty, `Some(None)` if unbounded.
    pub fn maximize(&self, objective: &[Rational]) -> Option<Option<(PayoffVector, Rational)>> {
        let mut lp = self.feasibility_lp();
        lp.maximize(objective.to_vec());
        match lp.solve() {
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => Some(None),
            LpOutcome::Optimal { point, value } => Some(Some((PayoffVector::new(point), value))),
        }
    }

    /// Extreme points of a nonempty bounded polyhedron.
    ///
    /// The equalities are eliminated first; the inequalities, restated in
    /// the free coordinates, are homogenized and handed to the double
    /// description method. Rays with positive homogenizing coordinate are
    /// the vertices.
    pub fn vertices(&self) -> Result<VPolytope> {
        let equalities: Vec<(Vec<Rational>, Rational)> = self
            .equalities
            .iter()
            .map(|c| (c.coeffs.clone(), c.rhs.clone()))
            .collect();
        let param = AffineParam::from_equalities(self.dim, &equalities).ok_or(Error::Empty)?;
        let d = param.dim();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.inequalities.len() + 1);
        for c in &self.inequalities {
            let (coeffs, rhs) = param.project_row(&c.coeffs, &c.rhs);
            if coeffs.iter().all(Zero::is_zero) {
                if rhs.is_positive() {
                    return Err(Error::Empty);
                }
                continue;
            }
            let mut row = Vec::with_capacity(d + 1);
            row.push(-rhs);
            row.extend(coeffs);
            make_primitive(&mut row);
            rows.push(row);
        }
        if d == 0 {
            return Ok(VPolytope::from_extreme_points(
                self.dim,
                vec![PayoffVector::new(param.origin)],
            ));
        }
        rows.sort();
        rows.dedup();
        let mut homogenizer = vec![Rational::zero(); d + 1];
        homogenizer[0] = rational::int(1);
        rows.insert(0, homogenizer);
        let rays = match extreme_rays(&rows, d + 1) {
            Ok(rays) => rays,
            Err(ConeError::NotPointed) => {
                return Err(if self.is_empty() {
                    Error::Empty
                } else {
                    Error::Unbounded
                })
            }
        };
        let mut points = Vec::new();
        let mut recession = false;
        for ray in rays {
            if ray[0].is_zero() {
                recession = true;
                continue;
            }
            let y: Vec<Rational> = ray[1..].iter().map(|c| c / &ray[0]).collect();
            points.push(PayoffVector::new(param.lift(&y)));
        }
        if points.is_empty() {
            return Err(Error::Empty);
        }
        if recession {
            return Err(Error::Unbounded);
        }
        points.sort();
        points.dedup();
        Ok(VPolytope::from_extreme_points(self.dim, points))
    }

    pub fn is_bounded(&self) -> bool {
        !matches!(self.vertices(), Err(Error::Unbounded))
    }

    pub fn intersect(&self, other: &HPolytope) -> HPolytope {
        assert_eq!(self.dim, other.dim);
        let mut p = self.clone();
        p.equalities.extend(other.equalities.iter().cloned());
        p.inequalities.extend(other.inequalities.iter().cloned());
        p
    }

    /// `P + t`.
    pub fn translate(&self, t: &PayoffVector) -> HPolytope {
        let shift = |c: &Constraint| Constraint::new(c.coeffs.clone(), &c.rhs + dot(&c.coeffs, t.coords()));
        HPolytope {
            dim: self.dim,
            equalities: self.equalities.iter().map(shift).collect(),
            inequalities: self.inequalities.iter().map(shift).collect(),
        }
    }

    /// `αP` for `α > 0`.
    pub fn scale(&self, alpha: &Rational) -> HPolytope {
        assert!(alpha.is_positive(), "scaling factor must be positive");
        let scale = |c: &Constraint| Constraint::new(c.coeffs.clone(), &c.rhs * alpha);
        HPolytope {
            dim: self.dim,
            equalities: self.equalities.iter().map(scale).collect(),
            inequalities: self.inequalities.iter().map(scale).collect(),
        }
    }

    /// Image under the coordinate permutation `(πx)_{π(i)} = x_i`.
    pub fn permute(&self, perm: &Permutation) -> HPolytope {
        let map = |c: &Constraint| {
            Constraint::new(
                perm.permute_vector(&PayoffVector::new(c.coeffs.clone())).into_coords(),
                c.rhs.clone(),
            )
        };
        HPolytope {
            dim: self.dim,
            equalities: self.equalities.iter().map(map).collect(),
            inequalities: self.inequalities.iter().map(map).collect(),
        }
    }

    /// `{"equalities": [[row…, rhs]…], "inequalities": […], "vertices": […]}`.
    /// Vertices are included when the polyhedron is nonempty and bounded.
    pub fn to_json(&self) -> Value {
        let vertices = self
            .vertices()
            .map(|v| v.vertices().iter().map(PayoffVector::to_strings).collect::<Vec<_>>())
            .unwrap_or_default();
        json!({
            "equalities": self.equalities.iter().map(Constraint::to_json).collect::<Vec<_>>(),
            "inequalities": self.inequalities.iter().map(Constraint::to_json).collect::<Vec<_>>(),
            "vertices": vertices,
        })
    }

    /// Reads the polytope JSON format; returns the constraint system and the
    /// listed vertices (possibly none).
    pub fn from_json(value: &Value) -> Result<(HPolytope, Vec<PayoffVector>)> {
        let bad = |what: &str| Error::InvalidPolytope(what.to_string());
        let rows = |key: &str| -> Result<Vec<Vec<Rational>>> {
            match value.get(key) {
                None => Ok(Vec::new()),
                Some(Value::Array(items)) => items
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| bad(key))?
                            .iter()
                            .map(|cell| cell.as_str().ok_or_else(|| bad(key)).and_then(rational::parse))
                            .collect()
                    })
                    .collect(),
                Some(_) => Err(bad(key)),
            }
        };
        let equalities = rows("equalities")?;
        let inequalities = rows("inequalities")?;
        let vertices = rows("vertices")?;
        let dim = equalities
            .first()
            .or(inequalities.first())
            .map(|r| r.len().saturating_sub(1))
            .or(vertices.first().map(Vec::len))
            .ok_or_else(|| bad("no rows"))?;
        let mut p = HPolytope::new(dim);
        for (list, is_eq) in [(equalities, true), (inequalities, false)] {
            for mut row in list {
                if row.len() != dim + 1 {
                    return Err(Error::DimensionMismatch {
                        expected: dim + 1,
                        found: row.len(),
                    });
                }
                let rhs = row.pop().unwrap();
                if is_eq {
                    p.add_equality(row, rhs);
                } else {
                    p.add_inequality(row, rhs);
                }
            }
        }
        let vertices = vertices
            .into_iter()
            .map(|v| {
                if v.len() != dim {
                    Err(Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    })
                } else {
                    Ok(PayoffVector::new(v))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((p, vertices))
    }
}
