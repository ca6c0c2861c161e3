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

//! Exact solvers for transferable-utility coalitional games.
//!
//! The crate computes three nested solution concepts of a game `v`:
//!
//! * the core `C(v)` (an H-polytope),
//! * the Weber set `W(v)`, the convex hull of the marginal vectors (a V-polytope),
//! * the intermediate set `M(v)`, the limiting superdifferential of the Lovász
//!   extension of `v` at the grand coalition. It is a finite union of polytopes
//!   indexed by coalitional chains, with `C(v) ⊆ M(v) ⊆ W(v)`.
//!
//! `M(v)` is available through three independent routes: per-chain linear
//! systems ([`solutions::chain_component`]), cores of chain-marginal games
//! ([`solutions::marginal_game`]) and a direct superdifferential computation
//! from the Lovász extension ([`oracle`]). All arithmetic is exact.

pub mod classify;
pub mod error;
pub mod families;
pub mod game;
pub mod generate;
pub mod geometry;
pub mod lovasz;
pub mod oracle;
pub mod rational;
pub mod solutions;

pub use error::{Error, Result};
pub use game::{Chain, Coalition, Game, PayoffVector, Permutation};
pub use geometry::{HPolytope, PolyUnion, Region, VPolytope};
pub use rational::Rational;
