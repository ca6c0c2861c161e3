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

//! Double description method for the extreme rays of a pointed cone
//! `{z : h·z ≥ 0 for every row h}`.

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};

use super::affine::{dot, rref};
use crate::rational::{make_primitive, Rational};

#[derive(Debug, PartialEq, Eq)]
pub enum ConeError {
    /// The rows do not span the space, so the cone contains a line.
    NotPointed,
}

struct Ray {
    coords: Vec<Rational>,
    zeros: FixedBitSet,
}

/// Extreme rays (primitive integer vectors) of `{z ∈ R^dim : rows·z ≥ 0}`.
pub fn extreme_rays(rows: &[Vec<Rational>], dim: usize) -> Result<Vec<Vec<Rational>>, ConeError> {
    let m = rows.len();
    // Greedy choice of `dim` independent rows for the initial simplicial cone.
    let mut chosen: Vec<usize> = Vec::with_capacity(dim);
    let mut basis_rows: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if chosen.len() == dim {
            break;
        }
        let mut candidate = basis_rows.clone();
        candidate.push(row.clone());
        if rref(candidate.clone(), dim).1.len() == candidate.len() {
            basis_rows = candidate;
            chosen.push(i);
        }
    }
    if chosen.len() < dim {
        return Err(ConeError::NotPointed);
    }

    // Columns of the inverse of the chosen rows are the initial rays.
    let mut augmented: Vec<Vec<Rational>> = basis_rows
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let mut row = r.clone();
            row.extend((0..dim).map(|j| {
                if j == k {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    augmented = rref(augmented, dim).0;
    let mut rays: Vec<Ray> = (0..dim)
        .map(|k| {
            let mut coords: Vec<Rational> = augmented.iter().map(|row| row[dim + k].clone()).collect();
            make_primitive(&mut coords);
            let mut zeros = FixedBitSet::with_capacity(m);
            for (kk, &i) in chosen.iter().enumerate() {
                if kk != k {
                    zeros.insert(i);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    let mut processed = vec![false; m];
    for &i in &chosen {
        processed[i] = true;
    }
    for idx in 0..m {
        if processed[idx] {
            continue;
        }
        processed[idx] = true;
        let h = &rows[idx];
        let values: Vec<Rational> = rays.iter().map(|r| dot(h, &r.coords)).collect();
        if !values.iter().any(Signed::is_negative) {
            for (ray, value) in rays.iter_mut().zip(&values) {
                if value.is_zero() {
                    ray.zeros.insert(idx);
                }
            }
            continue;
        }
        let positive: Vec<usize> = (0..rays.len()).filter(|&r| values[r].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&r| values[r].is_negative()).collect();

        let mut created = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                if common.count_ones(..) + 2 < dim {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|r| r == p || r == q || !common.is_subset(&rays[r].zeros));
                if !adjacent {
                    continue;
                }
                let mut coords: Vec<Rational> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(cq, cp)| &values[p] * cq - &values[q] * cp)
                    .collect();
                make_primitive(&mut coords);
                common.insert(idx);
                created.push(Ray { coords, zeros: common });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut ray, value) in rays.into_iter().zip(values) {
            if value.is_negative() {
                continue;
            }
            if value.is_zero() {
                ray.zeros.insert(idx);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }
    Ok(rays.into_iter().map(|r| r.coords).collect())
}
