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

//! Dense two-phase simplex over exact rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { point: Vec<Rational>, value: Rational },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

/// `maximize c·x` subject to linear rows; variables are free unless
/// declared nonnegative.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    nonneg: Vec<bool>,
    rows: Vec<(Vec<Rational>, Relation, Rational)>,
    objective: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            nonneg: vec![false; num_vars],
            rows: Vec::new(),
            objective: vec![Rational::zero(); num_vars],
        }
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.nonneg[var] = true;
    }

    pub fn add_row(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.num_vars);
        self.rows.push((coeffs, relation, rhs));
    }

    pub fn maximize(&mut self, objective: Vec<Rational>) {
        debug_assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(self)
    }
}

struct Tableau {
    /// `rows × (cols + 1)`, last column is the right-hand side.
    cells: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
    /// Column of the positive and (for free variables) negative part.
    var_cols: Vec<(usize, Option<usize>)>,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        let mut next = 0;
        for j in 0..lp.num_vars {
            if lp.nonneg[j] {
                var_cols.push((next, None));
                next += 1;
            } else {
                var_cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
        let structural = next;
        let slacks = lp.rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let first_slack = structural;

        // Normalize to nonnegative right-hand sides and decide which rows
        // can start with their slack in the basis.
        struct Prepared {
            coeffs: Vec<Rational>,
            slack: Option<(usize, Rational)>,
            rhs: Rational,
        }
        let mut prepared = Vec::with_capacity(lp.rows.len());
        let mut slack_idx = first_slack;
        for (coeffs, relation, rhs) in &lp.rows {
            let mut slack = match relation {
                Relation::Ge => Some((slack_idx, -Rational::one())),
                Relation::Le => Some((slack_idx, Rational::one())),
                Relation::Eq => None,
            };
            if slack.is_some() {
                slack_idx += 1;
            }
            let mut coeffs = coeffs.clone();
            let mut rhs = rhs.clone();
            if rhs.is_negative() {
                coeffs.iter_mut().for_each(|c| *c = -&*c);
                rhs = -rhs;
                if let Some((_, s)) = slack.as_mut() {
                    *s = -&*s;
                }
            }
            prepared.push(Prepared { coeffs, slack, rhs });
        }
        let first_artificial = first_slack + slacks;
        let artificials = prepared
            .iter()
            .filter(|p| !matches!(&p.slack, Some((_, s)) if s.is_positive()))
            .count();
        let cols = first_artificial + artificials;

        let mut cells = Vec::with_capacity(prepared.len());
        let mut basis = Vec::with_capacity(prepared.len());
        let mut art = first_artificial;
        for p in prepared {
            let mut row = vec![Rational::zero(); cols + 1];
            for (j, c) in p.coeffs.iter().enumerate() {
                let (pos, neg) = var_cols[j];
                row[pos] = c.clone();
                if let Some(neg) = neg {
                    row[neg] = -c;
                }
            }
            let mut basic = None;
            if let Some((s, sign)) = p.slack {
                if sign.is_positive() {
                    basic = Some(s);
                }
                row[s] = sign;
            }
            let basic = basic.unwrap_or_else(|| {
                row[art] = Rational::one();
                art += 1;
                art - 1
            });
            row[cols] = p.rhs;
            cells.push(row);
            basis.push(basic);
        }
        Tableau {
            cells,
            basis,
            cols,
            var_cols,
            first_artificial,
        }
    }

    fn pivot(&mut self, objective: &mut [Rational], r: usize, c: usize) {
        let inv = Rational::one() / &self.cells[r][c];
        for v in self.cells[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.cells[r].clone();
        let nonzero: Vec<usize> = (0..=self.cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in self.cells.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &nonzero {
                row[j] -= &factor * &pivot_row[j];
            }
        }
        if !objective[c].is_zero() {
            let factor = objective[c].clone();
            for &j in &nonzero {
                objective[j] -= &factor * &pivot_row[j];
            }
        }
        self.basis[r] = c;
    }

    /// Objective row for `maximize Σ cost_j x_j` in canonical form
    /// (entries are negated reduced costs, last entry the current value).
    fn objective_row(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut obj: Vec<Rational> = cost.iter().map(|c| -c).collect();
        obj.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if obj[b].is_zero() {
                continue;
            }
            let factor = obj[b].clone();
            for (j, v) in self.cells[i].iter().enumerate() {
                if !v.is_zero() {
                    obj[j] -= &factor * v;
                }
            }
        }
        obj
    }

    /// Bland's rule iterations; returns false when unbounded.
    fn optimize(&mut self, objective: &mut [Rational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| objective[j].is_negative());
            let Some(c) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.cells.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(objective, r, c),
                None => return false,
            }
        }
    }

    fn run(mut self, lp: &LinearProgram) -> LpOutcome {
        if self.first_artificial < self.cols {
            let mut cost = vec![Rational::zero(); self.cols];
            for c in cost.iter_mut().skip(self.first_artificial) {
                *c = -Rational::one();
            }
            let mut phase1 = self.objective_row(&cost);
            self.optimize(&mut phase1, self.cols);
            if !phase1[self.cols].is_zero() {
                return LpOutcome::Infeasible;
            }
            // Drive zero-level artificials out of the basis.
            let mut i = 0;
            while i < self.cells.len() {
                if self.basis[i] >= self.first_artificial {
                    match (0..self.first_artificial).find(|&j| !self.cells[i][j].is_zero()) {
                        Some(j) => self.pivot(&mut phase1, i, j),
                        None => {
                            self.cells.remove(i);
                            self.basis.remove(i);
                            continue;
                        }
                    }
                }
                i += 1;
            }
        }
        let mut cost = vec![Rational::zero(); self.cols];
        for (j, c) in lp.objective.iter().enumerate() {
            let (pos, neg) = self.var_cols[j];
            cost[pos] = c.clone();
            if let Some(neg) = neg {
                cost[neg] = -c;
            }
        }
        let mut phase2 = self.objective_row(&cost);
        if !self.optimize(&mut phase2, self.first_artificial) {
            return LpOutcome::Unbounded;
        }
        let mut values = vec![Rational::zero(); self.cols];
        for (i, &b) in self.basis.iter().enumerate() {
            values[b] = self.cells[i][self.cols].clone();
        }
        let point = self
            .var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &values[pos] - &values[neg],
                None => values[pos].clone(),
            })
            .collect();
        LpOutcome::Optimal {
            point,
            value: phase2[self.cols].clone(),
        }
    }
}
