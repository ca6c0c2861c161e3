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

use serde_json::{json, Value};

use super::{HPolytope, VPolytope};
use crate::error::Result;
use crate::game::{Chain, Coalition, PayoffVector, Permutation};
use crate::rational::Rational;

/// What generated a component of a union.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Chain(Chain),
    Coalition(Coalition),
    Permutation(Permutation),
    /// Pairs `(l, ρ(l))` of 0-based players.
    Matching(Vec<(usize, usize)>),
    Index(usize),
}

impl Label {
    /// `("chain", ["1","1,2,3"])` and the like; players are 1-based.
    pub fn to_json(&self) -> (&'static str, Value) {
        match self {
            Label::Chain(chain) => ("chain", json!(chain.keys())),
            Label::Coalition(c) => ("coalition", json!(c.key())),
            Label::Permutation(p) => (
                "permutation",
                json!(p.order().iter().map(|i| i + 1).collect::<Vec<_>>()),
            ),
            Label::Matching(pairs) => (
                "matching",
                json!(pairs.iter().map(|(l, r)| [l + 1, r + 1]).collect::<Vec<_>>()),
            ),
            Label::Index(i) => ("index", json!(i)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub label: Label,
    pub polytope: HPolytope,
    pub empty: bool,
}

/// A finite union of labeled polytopes. Empty components are kept and
/// flagged; the represented set is the union of the nonempty ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyUnion {
    dim: usize,
    components: Vec<Component>,
}

impl PolyUnion {
    pub fn new(dim: usize) -> Self {
        PolyUnion {
            dim,
            components: Vec::new(),
        }
    }

    /// Adds a component, deciding its emptiness.
    pub fn push(&mut self, label: Label, polytope: HPolytope) {
        let empty = polytope.is_empty();
        self.push_flagged(label, polytope, empty);
    }

    pub fn push_flagged(&mut self, label: Label, polytope: HPolytope, empty: bool) {
        assert_eq!(polytope.dim(), self.dim, "component dimension must match");
        self.components.push(Component { label, polytope, empty });
    }

    pub fn from_components(dim: usize, components: Vec<Component>) -> Self {
        assert!(components.iter().all(|c| c.polytope.dim() == dim));
        PolyUnion { dim, components }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn nonempty(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| !c.empty)
    }

    pub fn empty_labels(&self) -> Vec<&Label> {
        self.components.iter().filter(|c| c.empty).map(|c| &c.label).collect()
    }

    /// True when every component is empty.
    pub fn is_empty(&self) -> bool {
        self.nonempty().next().is_none()
    }

    pub fn contains(&self, x: &PayoffVector) -> bool {
        self.nonempty().any(|c| c.polytope.contains(x))
    }

    /// Vertex sets of the nonempty components, in component order.
    pub fn component_vertices(&self) -> Result<Vec<(&Component, VPolytope)>> {
        self.nonempty().map(|c| Ok((c, c.polytope.vertices()?))).collect()
    }

    /// Distinct vertices of all nonempty components, sorted.
    pub fn all_vertices(&self) -> Result<Vec<PayoffVector>> {
        let mut points: Vec<PayoffVector> = Vec::new();
        for (_, v) in self.component_vertices()? {
            points.extend(v.vertices().iter().cloned());
        }
        points.sort();
        points.dedup();
        Ok(points)
    }

    /// Convex hull of the union.
    pub fn hull(&self) -> Result<VPolytope> {
        Ok(VPolytope::from_points(self.dim, self.all_vertices()?))
    }

    /// Drops empty components and every component contained in another
    /// one; of equal components the first is kept.
    pub fn minimal(&self) -> Result<PolyUnion> {
        let comps = self.component_vertices()?;
        let within = |i: usize, j: usize| comps[i].1.vertices().iter().all(|x| comps[j].0.polytope.contains(x));
        let mut keep = Vec::new();
        for i in 0..comps.len() {
            let redundant = (0..comps.len()).any(|j| j != i && within(i, j) && (j < i || !within(j, i)));
            if !redundant {
                keep.push(comps[i].0.clone());
            }
        }
        Ok(PolyUnion::from_components(self.dim, keep))
    }

    fn map(&self, f: impl Fn(&HPolytope) -> HPolytope) -> PolyUnion {
        PolyUnion {
            dim: self.dim,
            components: self
                .components
                .iter()
                .map(|c| Component {
                    label: c.label.clone(),
                    polytope: f(&c.polytope),
                    empty: c.empty,
                })
                .collect(),
        }
    }

    pub fn translate(&self, t: &PayoffVector) -> PolyUnion {
        self.map(|p| p.translate(t))
    }

    pub fn scale(&self, alpha: &Rational) -> PolyUnion {
        self.map(|p| p.scale(alpha))
    }

    pub fn permute(&self, perm: &Permutation) -> PolyUnion {
        self.map(|p| p.permute(perm))
    }

    /// `{"components": [{<label>, "empty", "equalities", "inequalities", "vertices"}…]}`.
    pub fn to_json(&self) -> Value {
        let components: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                let (key, label) = c.label.to_json();
                let mut entry = serde_json::Map::new();
                entry.insert(key.to_string(), label);
                entry.insert("empty".into(), json!(c.empty));
                if let Value::Object(body) = c.polytope.to_json() {
                    entry.extend(body);
                }
                Value::Object(entry)
            })
            .collect();
        json!({ "components": components })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn segment(a: &[i64], b: &[i64]) -> HPolytope {
        VPolytope::from_points(a.len(), vec![PayoffVector::from_ints(a), PayoffVector::from_ints(b)]).to_h()
    }

    #[test]
    fn flags_and_membership() {
        let mut u = PolyUnion::new(2);
        u.push(Label::Index(0), segment(&[0, 0], &[1, 0]));
        u.push(Label::Index(1), HPolytope::empty(2));
        assert_eq!(u.empty_labels(), vec![&Label::Index(1)]);
        assert!(u.contains(&PayoffVector::from_ints(&[1, 0])));
        assert!(!u.contains(&PayoffVector::from_ints(&[0, 1])));
        assert!(!u.is_empty());
    }

    #[test]
    fn minimal_drops_contained_components() {
        let mut u = PolyUnion::new(2);
        u.push(Label::Index(0), HPolytope::point(&PayoffVector::from_ints(&[1, 0])));
        u.push(Label::Index(1), segment(&[0, 0], &[2, 0]));
        u.push(Label::Index(2), segment(&[2, 0], &[0, 0]));
        u.push(Label::Index(3), segment(&[0, 1], &[0, 2]));
        let m = u.minimal().unwrap();
        let labels: Vec<_> = m.components().iter().map(|c| c.label.clone()).collect();
        assert_eq!(labels, vec![Label::Index(1), Label::Index(3)]);
    }

    #[test]
    fn json_carries_labels() {
        let mut u = PolyUnion::new(2);
        u.push(Label::Chain(Chain::grand(2)), segment(&[0, 1], &[1, 0]));
        let value = u.to_json();
        assert_eq!(value["components"][0]["chain"], json!(["1,2"]));
        assert_eq!(value["components"][0]["empty"], json!(false));
        assert_eq!(value["components"][0]["vertices"].as_array().unwrap().len(), 2);
    }
}
