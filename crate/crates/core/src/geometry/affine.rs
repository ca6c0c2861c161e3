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

//! Row reduction and parametrization of affine subspaces.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Reduced row echelon form of `rows` (each row has `width` entries, the
/// caller decides whether the last column is a right-hand side).
/// Returns the reduced rows (pivot rows first) and the pivot columns.
pub fn rref(mut rows: Vec<Vec<Rational>>, pivot_limit: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_limit {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *v -= &factor * p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    // Rows past the pivots have zero coefficients; an inconsistent system
    // shows up there as a nonzero right-hand side.
    (rows, pivots)
}

/// Rank of a set of vectors.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    match rows.first() {
        None => 0,
        Some(first) => rref(rows.to_vec(), first.len()).1.len(),
    }
}

/// Basis of `{x : row·x = 0 for every row}` in `R^dim`.
pub fn nullspace(rows: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(rows.to_vec(), dim);
    (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); dim];
            v[free] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect()
}

/// Solves a square system, `None` when singular.
pub fn solve_square(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = rhs.len();
    let augmented = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(augmented, n);
    if pivots.len() < n {
        return None;
    }
    Some(reduced.iter().map(|row| row[n].clone()).collect())
}

/// `{x : A x = b}` written as `x = origin + Σ_k y_k directions[k]`, where
/// `y` are the free coordinates of the reduced system.
#[derive(Clone, Debug)]
pub struct AffineParam {
    pub origin: Vec<Rational>,
    pub directions: Vec<Vec<Rational>>,
    pub free: Vec<usize>,
}

impl AffineParam {
    /// `None` if the equalities are inconsistent.
    pub fn from_equalities(dim: usize, equalities: &[(Vec<Rational>, Rational)]) -> Option<Self> {
        let rows: Vec<Vec<Rational>> = equalities
            .iter()
            .map(|(a, b)| {
                let mut r = a.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let (reduced, pivots) = rref(rows, dim);
        if reduced.iter().skip(pivots.len()).any(|row| !row[dim].is_zero()) {
            return None;
        }
        let mut origin = vec![Rational::zero(); dim];
        for (row, &p) in reduced.iter().zip(&pivots) {
            origin[p] = row[dim].clone();
        }
        let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let directions = free
            .iter()
            .map(|&f| {
                let mut d = vec![Rational::zero(); dim];
                d[f] = Rational::one();
                for (row, &p) in reduced.iter().zip(&pivots) {
                    d[p] = -&row[f];
                }
                d
            })
            .collect();
        Some(AffineParam {
            origin,
            directions,
            free,
        })
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn lift(&self, y: &[Rational]) -> Vec<Rational> {
        let mut x = self.origin.clone();
        for (yk, d) in y.iter().zip(&self.directions) {
            if yk.is_zero() {
                continue;
            }
            for (xi, di) in x.iter_mut().zip(d) {
                if !di.is_zero() {
                    *xi += yk * di;
                }
            }
        }
        x
    }

    /// Restates `a·x ≥ b` (or `=`) in the parameter coordinates.
    pub fn project_row(&self, a: &[Rational], b: &Rational) -> (Vec<Rational>, Rational) {
        let coeffs = self.directions.iter().map(|d| dot(a, d)).collect();
        (coeffs, b - dot(a, &self.origin))
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn parametrizes_plane() {
        let p = AffineParam::from_equalities(3, &[(v(&[1, 1, 1]), int(3))]).unwrap();
        assert_eq!(p.dim(), 2);
        let x = p.lift(&v(&[1, 1]));
        assert_eq!(dot(&v(&[1, 1, 1]), &x), int(3));
    }

    #[test]
    fn detects_inconsistency() {
        let eqs = [(v(&[1, 1]), int(1)), (v(&[2, 2]), int(3))];
        assert!(AffineParam::from_equalities(2, &eqs).is_none());
    }

    #[test]
    fn nullspace_and_rank() {
        let rows = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        assert!(rows.iter().all(|r| dot(r, &ns[0]) == int(0)));
        assert_eq!(rank(&rows), 2);
        assert_eq!(
            solve_square(&[v(&[2, 0]), v(&[0, 4])], &v(&[2, 2])),
            Some(vec![int(1), crate::rational::ratio(1, 2)])
        );
        assert_eq!(solve_square(&[v(&[1, 1]), v(&[2, 2])], &v(&[1, 2])), None);
    }
}
