//! Dense two-phase simplex for small linear programs.
//!
//! Solves `maximize c·z subject to A z <= b` with every `z_j` free. Free
//! variables are split into positive and negative parts; rows with a
//! negative right-hand side receive an artificial variable and are handled
//! by a phase-one feasibility problem. Pivoting follows Bland's rule, so the
//! method terminates on degenerate problems.

use std::fmt;

const PIVOT_EPS: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpError {
    Infeasible,
    Unbounded,
    IterationLimit,
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::Infeasible => f.write_str("linear program is infeasible"),
            LpError::Unbounded => f.write_str("linear program is unbounded"),
            LpError::IterationLimit => f.write_str("simplex iteration limit reached"),
        }
    }
}

impl std::error::Error for LpError {}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub value: f64,
}

struct Tableau {
    /// `rows + 1` rows; the last one is the objective row. The last column
    /// of every row is the right-hand side.
    cells: Vec<Vec<f64>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rows(&self) -> usize {
        self.basis.len()
    }

    fn rhs(&self, row: usize) -> f64 {
        *self.cells[row].last().unwrap()
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.cells[row][col];
        for v in self.cells[row].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.cells[row].clone();
        for (i, r) in self.cells.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let factor = r[col];
            if factor != 0.0 {
                for (v, pv) in r.iter_mut().zip(&pivot_row) {
                    *v -= factor * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Runs primal simplex on the objective row, only letting columns
    /// `< active_cols` enter the basis.
    fn optimize(&mut self, active_cols: usize) -> Result<(), LpError> {
        let m = self.rows();
        let max_iter = 50 * (active_cols + m).max(10);
        for _ in 0..max_iter {
            let entering = (0..active_cols).find(|&j| self.cells[m][j] < -PIVOT_EPS);
            let Some(col) = entering else {
                return Ok(());
            };
            let mut best: Option<(usize, f64)> = None;
            for i in 0..m {
                let a = self.cells[i][col];
                if a > PIVOT_EPS {
                    let ratio = self.rhs(i) / a;
                    best = match best {
                        None => Some((i, ratio)),
                        Some((bi, br)) => {
                            if ratio < br - PIVOT_EPS
                                || (ratio <= br + PIVOT_EPS && self.basis[i] < self.basis[bi])
                            {
                                Some((i, ratio))
                            } else {
                                Some((bi, br))
                            }
                        }
                    };
                }
            }
            let Some((row, _)) = best else {
                return Err(LpError::Unbounded);
            };
            self.pivot(row, col);
        }
        Err(LpError::IterationLimit)
    }

    fn set_objective(&mut self, costs: &[f64]) {
        let m = self.rows();
        let width = self.cells[m].len();
        let mut obj = vec![0.0; width];
        for (j, &c) in costs.iter().enumerate() {
            obj[j] = -c;
        }
        for i in 0..m {
            let factor = obj[self.basis[i]];
            if factor != 0.0 {
                for (v, rv) in obj.iter_mut().zip(&self.cells[i]) {
                    *v -= factor * rv;
                }
            }
        }
        self.cells[m] = obj;
    }
}

/// Maximizes `c·z` subject to `a[i]·z <= b[i]` for every row, `z` free.
pub fn maximize(c: &[f64], a: &[Vec<f64>], b: &[f64]) -> Result<LpSolution, LpError> {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m, "one right-hand side per constraint row");
    assert!(
        a.iter().all(|row| row.len() == n),
        "constraint width mismatch"
    );

    let artificial_rows: Vec<usize> = (0..m).filter(|&i| b[i] < 0.0).collect();
    let structural = 2 * n;
    let slack_start = structural;
    let art_start = slack_start + m;
    let width = art_start + artificial_rows.len() + 1;

    let mut cells = Vec::with_capacity(m + 1);
    let mut basis = Vec::with_capacity(m);
    let mut art = art_start;
    for i in 0..m {
        let mut row = vec![0.0; width];
        let sign = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            row[j] = sign * a[i][j];
            row[n + j] = -sign * a[i][j];
        }
        row[slack_start + i] = sign;
        row[width - 1] = sign * b[i];
        if b[i] < 0.0 {
            row[art] = 1.0;
            basis.push(art);
            art += 1;
        } else {
            basis.push(slack_start + i);
        }
        cells.push(row);
    }
    cells.push(vec![0.0; width]);
    let mut tableau = Tableau { cells, basis };

    if !artificial_rows.is_empty() {
        let mut phase_one = vec![0.0; width - 1];
        for v in phase_one.iter_mut().skip(art_start) {
            *v = -1.0;
        }
        tableau.set_objective(&phase_one);
        tableau.optimize(width - 1)?;
        if tableau.rhs(m) < -1e-9 * (1.0 + b.iter().map(|v| v.abs()).fold(0.0, f64::max)) {
            return Err(LpError::Infeasible);
        }
        // Drive zero-valued artificials out of the basis where possible.
        for i in 0..m {
            if tableau.basis[i] >= art_start {
                if let Some(col) = (0..art_start).find(|&j| tableau.cells[i][j].abs() > PIVOT_EPS) {
                    tableau.pivot(i, col);
                }
            }
        }
    }

    let mut costs = vec![0.0; art_start];
    for j in 0..n {
        costs[j] = c[j];
        costs[n + j] = -c[j];
    }
    tableau.set_objective(&costs);
    tableau.optimize(art_start)?;

    let mut split = vec![0.0; structural];
    for (i, &col) in tableau.basis.iter().enumerate() {
        if col < structural {
            split[col] = tableau.rhs(i);
        }
    }
    let x: Vec<f64> = (0..n).map(|j| split[j] - split[n + j]).collect();
    let value = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    Ok(LpSolution { x, value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  ->  (2, 6), 36
        let a = vec![vec![1.0, 0.0], vec![0.0, 2.0], vec![3.0, 2.0]];
        let sol = maximize(&[3.0, 5.0], &a, &[4.0, 12.0, 18.0]).unwrap();
        assert!(close(sol.x[0], 2.0) && close(sol.x[1], 6.0));
        assert!(close(sol.value, 36.0));
    }

    #[test]
    fn free_variables_go_negative() {
        // max -x - y with x >= -3, y >= -2  ->  (-3, -2), value 5
        let a = vec![vec![-1.0, 0.0], vec![0.0, -1.0]];
        let sol = maximize(&[-1.0, -1.0], &a, &[3.0, 2.0]).unwrap();
        assert!(close(sol.x[0], -3.0) && close(sol.x[1], -2.0));
        assert!(close(sol.value, 5.0));
    }

    #[test]
    fn phase_one_handles_origin_infeasible() {
        // max -x s.t. x >= 2 (i.e. -x <= -2), x <= 5
        let a = vec![vec![-1.0], vec![1.0]];
        let sol = maximize(&[-1.0], &a, &[-2.0, 5.0]).unwrap();
        assert!(close(sol.x[0], 2.0));
    }

    #[test]
    fn detects_infeasible() {
        let a = vec![vec![1.0], vec![-1.0]];
        assert_eq!(maximize(&[1.0], &a, &[1.0, -2.0]), Err(LpError::Infeasible));
    }

    #[test]
    fn detects_unbounded() {
        let a = vec![vec![-1.0, 0.0]];
        assert_eq!(maximize(&[1.0, 0.0], &a, &[0.0]), Err(LpError::Unbounded));
    }

    #[test]
    fn degenerate_vertex_terminates() {
        // Three constraints through the optimum (1, 1).
        let a = vec![
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
            vec![-1.0, -1.0],
        ];
        let sol = maximize(&[1.0, 1.0], &a, &[1.0, 1.0, 2.0, 0.0]).unwrap();
        assert!(close(sol.value, 2.0));
    }
}
