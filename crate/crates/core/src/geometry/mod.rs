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

//! Exact polyhedral computation over the rationals.

pub mod affine;
pub mod dd;
mod hpoly;
pub mod lp;
mod setops;
mod union;
mod vpoly;

pub use hpoly::{Constraint, HPolytope};
pub use setops::{is_subset, minkowski_member, set_equal, subset_witness, Region};
pub use union::{Component, Label, PolyUnion};
pub use vpoly::{in_hull, VPolytope};
