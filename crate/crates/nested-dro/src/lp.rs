//! Dense two-phase revised simplex with primal and dual solutions.
//!
//! Solves `min c'x  s.t.  A_eq x = b_eq,  A_ub x <= b_ub,  x_i >= 0` for
//! non-negative variables and `x_i` free where marked. Free variables are
//! split internally; inequality rows receive slacks. Duals are recovered
//! from the optimal basis under the convention `L = c'x + y'(b_eq - A_eq x)`,
//! so `y` is the gradient of the optimal value with respect to `b_eq` and
//! the dual of the program is `max b_eq'y + b_ub'mu` with `mu <= 0`.
//!
//! Dantzig pricing by default; Bland's rule engages after `3(n+m)`
//! iterations without objective progress, which guarantees termination on
//! the degenerate perturbed-RHS subproblems that dominate this crate.

use ndarray::{Array1, Array2};
use thiserror::Error;

/// Entering-column threshold: reduced costs above `-PIVOT_TOL` do not enter.
pub const PIVOT_TOL: f64 = 1e-10;
/// Primal feasibility tolerance (phase-1 objective, ratio test).
pub const FEAS_TOL: f64 = 1e-9;

const REFACTOR_EVERY: usize = 64;

#[derive(Debug, Error)]
pub enum LpError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("non-finite coefficient in {0}")]
    NonFinite(&'static str),
    #[error("simplex did not terminate within {0} iterations")]
    IterationLimit(usize),
    #[error("singular basis during refactorization")]
    SingularBasis,
    #[error("expected an optimal solution, got {0:?}")]
    NotOptimal(LpStatus),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// A dense linear program in the block form described above.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub a_eq: Array2<f64>,
    pub b_eq: Vec<f64>,
    pub a_ub: Array2<f64>,
    pub b_ub: Vec<f64>,
    /// `free[j]` lifts the lower bound of variable `j` from 0 to -inf.
    pub free: Vec<bool>,
}

impl LinearProgram {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    fn validate(&self) -> Result<(), LpError> {
        let n = self.num_vars();
        if self.a_eq.ncols() != n && self.a_eq.nrows() > 0 {
            return Err(LpError::Dimension(format!(
                "a_eq has {} columns, expected {n}",
                self.a_eq.ncols()
            )));
        }
        if self.a_ub.ncols() != n && self.a_ub.nrows() > 0 {
            return Err(LpError::Dimension(format!(
                "a_ub has {} columns, expected {n}",
                self.a_ub.ncols()
            )));
        }
        if self.a_eq.nrows() != self.b_eq.len() {
            return Err(LpError::Dimension("a_eq rows != b_eq length".into()));
        }
        if self.a_ub.nrows() != self.b_ub.len() {
            return Err(LpError::Dimension("a_ub rows != b_ub length".into()));
        }
        if self.free.len() != n {
            return Err(LpError::Dimension("free marker length != variable count".into()));
        }
        let finite = |v: &[f64]| v.iter().all(|x| x.is_finite());
        if !finite(&self.objective) {
            return Err(LpError::NonFinite("objective"));
        }
        if !finite(&self.b_eq) || !finite(&self.b_ub) {
            return Err(LpError::NonFinite("right-hand side"));
        }
        if !self.a_eq.iter().all(|x| x.is_finite()) || !self.a_ub.iter().all(|x| x.is_finite()) {
            return Err(LpError::NonFinite("constraint matrix"));
        }
        Ok(())
    }
}

/// Primal/dual solution of a [`LinearProgram`].
#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Primal values for the original variables (empty unless optimal).
    pub x: Vec<f64>,
    pub value: f64,
    /// Duals of the equality rows (`dV/db_eq`).
    pub y_eq: Vec<f64>,
    /// Duals of the inequality rows; `<= 0` at optimality.
    pub y_ub: Vec<f64>,
    pub iterations: usize,
}

impl LpSolution {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    /// Unwraps an optimal solution or reports the status as an error.
    pub fn optimal(self) -> Result<LpSolution, LpError> {
        if self.is_optimal() {
            Ok(self)
        } else {
            Err(LpError::NotOptimal(self.status))
        }
    }
}

/// Incremental construction of a [`LinearProgram`] from sparse rows.
#[derive(Debug, Clone, Default)]
pub struct LpBuilder {
    objective: Vec<f64>,
    free: Vec<bool>,
    eq_rows: Vec<(Vec<(usize, f64)>, f64)>,
    ub_rows: Vec<(Vec<(usize, f64)>, f64)>,
}

impl LpBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Adds a non-negative variable with the given objective coefficient.
    pub fn var(&mut self, cost: f64) -> usize {
        self.objective.push(cost);
        self.free.push(false);
        self.objective.len() - 1
    }

    /// Adds a free variable with the given objective coefficient.
    pub fn free_var(&mut self, cost: f64) -> usize {
        let j = self.var(cost);
        self.free[j] = true;
        j
    }

    /// Adds `count` non-negative variables; returns the first index.
    pub fn vars(&mut self, count: usize, cost: &[f64]) -> usize {
        assert_eq!(count, cost.len());
        let first = self.objective.len();
        for &c in cost {
            self.var(c);
        }
        first
    }

    pub fn add_cost(&mut self, var: usize, delta: f64) {
        self.objective[var] += delta;
    }

    pub fn eq(&mut self, terms: Vec<(usize, f64)>, rhs: f64) {
        self.eq_rows.push((terms, rhs));
    }

    pub fn le(&mut self, terms: Vec<(usize, f64)>, rhs: f64) {
        self.ub_rows.push((terms, rhs));
    }

    pub fn ge(&mut self, terms: Vec<(usize, f64)>, rhs: f64) {
        let neg = terms.into_iter().map(|(j, a)| (j, -a)).collect();
        self.ub_rows.push((neg, -rhs));
    }

    pub fn build(&self) -> LinearProgram {
        let n = self.objective.len();
        let densify = |rows: &[(Vec<(usize, f64)>, f64)]| {
            let mut a = Array2::zeros((rows.len(), n));
            let mut b = Vec::with_capacity(rows.len());
            for (i, (terms, rhs)) in rows.iter().enumerate() {
                for &(j, coef) in terms {
                    a[(i, j)] += coef;
                }
                b.push(*rhs);
            }
            (a, b)
        };
        let (a_eq, b_eq) = densify(&self.eq_rows);
        let (a_ub, b_ub) = densify(&self.ub_rows);
        LinearProgram {
            objective: self.objective.clone(),
            a_eq,
            b_eq,
            a_ub,
            b_ub,
            free: self.free.clone(),
        }
    }

    pub fn solve(&self) -> Result<LpSolution, LpError> {
        solve_lp(&self.build())
    }
}

/// Solves a [`LinearProgram`]. Deterministic: re-solving the same instance
/// yields bit-identical output.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    lp.validate()?;

    let n = lp.num_vars();
    let m_eq = lp.b_eq.len();
    let m_ub = lp.b_ub.len();
    let m = m_eq + m_ub;

    // Standard-form columns: for each original variable one column, plus a
    // negated twin for free variables, plus one slack per inequality row.
    let mut col_of_var = Vec::with_capacity(n);
    let mut std_cols: Vec<(usize, f64)> = Vec::new(); // (original var, sign)
    for (j, &is_free) in lp.free.iter().enumerate() {
        col_of_var.push(std_cols.len());
        std_cols.push((j, 1.0));
        if is_free {
            std_cols.push((j, -1.0));
        }
    }
    let n_real = std_cols.len() + m_ub;

    let mut a = Array2::<f64>::zeros((m, n_real));
    let mut b = Array1::<f64>::zeros(m);
    let mut cost = vec![0.0; n_real];
    for (k, &(j, sign)) in std_cols.iter().enumerate() {
        cost[k] = sign * lp.objective[j];
        for i in 0..m_eq {
            a[(i, k)] = sign * lp.a_eq[(i, j)];
        }
        for i in 0..m_ub {
            a[(m_eq + i, k)] = sign * lp.a_ub[(i, j)];
        }
    }
    for i in 0..m_ub {
        a[(m_eq + i, std_cols.len() + i)] = 1.0;
    }
    for i in 0..m_eq {
        b[i] = lp.b_eq[i];
    }
    for i in 0..m_ub {
        b[m_eq + i] = lp.b_ub[i];
    }

    // Flip rows so the artificial basis is feasible.
    let mut row_sign = vec![1.0; m];
    for i in 0..m {
        if b[i] < 0.0 {
            row_sign[i] = -1.0;
            b[i] = -b[i];
            for k in 0..n_real {
                a[(i, k)] = -a[(i, k)];
            }
        }
    }

    let mut sx = Simplex::new(a, b, cost, n_real);
    let status = sx.run()?;

    match status {
        LpStatus::Optimal => {
            let mut x = vec![0.0; n];
            for (k, &(j, sign)) in std_cols.iter().enumerate() {
                x[j] += sign * sx.primal_value(k);
            }
            let y_std = sx.duals();
            let mut y_eq = vec![0.0; m_eq];
            let mut y_ub = vec![0.0; m_ub];
            for i in 0..m_eq {
                y_eq[i] = row_sign[i] * y_std[i];
            }
            for i in 0..m_ub {
                y_ub[i] = row_sign[m_eq + i] * y_std[m_eq + i];
            }
            let value = lp
                .objective
                .iter()
                .zip(&x)
                .map(|(c, xi)| c * xi)
                .sum::<f64>();
            Ok(LpSolution {
                status,
                x,
                value,
                y_eq,
                y_ub,
                iterations: sx.iterations,
            })
        }
        LpStatus::Infeasible => Ok(LpSolution {
            status,
            x: Vec::new(),
            value: f64::INFINITY,
            y_eq: Vec::new(),
            y_ub: Vec::new(),
            iterations: sx.iterations,
        }),
        LpStatus::Unbounded => Ok(LpSolution {
            status,
            x: Vec::new(),
            value: f64::NEG_INFINITY,
            y_eq: Vec::new(),
            y_ub: Vec::new(),
            iterations: sx.iterations,
        }),
    }
}

/// Revised simplex state on `min c'z : Az = b, z >= 0` with `b >= 0`.
/// Artificial variables occupy virtual columns `n_real..n_real+m`.
struct Simplex {
    a: Array2<f64>,
    b: Array1<f64>,
    cost: Vec<f64>,
    n_real: usize,
    m: usize,
    basis: Vec<usize>,
    binv: Array2<f64>,
    xb: Array1<f64>,
    /// Map of surviving row -> original row (rows dropped as redundant).
    row_map: Vec<usize>,
    orig_rows: usize,
    iterations: usize,
    pivots_since_refactor: usize,
}

impl Simplex {
    fn new(a: Array2<f64>, b: Array1<f64>, cost: Vec<f64>, n_real: usize) -> Self {
        let m = b.len();
        Simplex {
            xb: b.clone(),
            basis: (n_real..n_real + m).collect(),
            binv: Array2::eye(m),
            row_map: (0..m).collect(),
            orig_rows: m,
            a,
            b,
            cost,
            n_real,
            m,
            iterations: 0,
            pivots_since_refactor: 0,
        }
    }

    fn column(&self, j: usize) -> Array1<f64> {
        if j < self.n_real {
            self.a.column(j).to_owned()
        } else {
            let mut e = Array1::zeros(self.m);
            e[j - self.n_real] = 1.0;
            e
        }
    }

    fn is_artificial(&self, j: usize) -> bool {
        j >= self.n_real
    }

    fn primal_value(&self, col: usize) -> f64 {
        self.basis
            .iter()
            .position(|&bj| bj == col)
            .map_or(0.0, |r| self.xb[r])
    }

    /// `y' = c_B' B^-1` for the phase-2 costs, expanded to original rows.
    fn duals(&self) -> Vec<f64> {
        let cb: Array1<f64> = self.basis.iter().map(|&j| self.phase2_cost(j)).collect();
        let y = cb.dot(&self.binv);
        let mut full = vec![0.0; self.orig_rows];
        for (r, &orig) in self.row_map.iter().enumerate() {
            full[orig] = y[r];
        }
        full
    }

    fn phase2_cost(&self, j: usize) -> f64 {
        if self.is_artificial(j) {
            0.0
        } else {
            self.cost[j]
        }
    }

    fn run(&mut self) -> Result<LpStatus, LpError> {
        // Phase 1: minimize the sum of artificials.
        let phase1_cost: Vec<f64> = (0..self.n_real).map(|_| 0.0).collect();
        let feasible = self.optimize(&phase1_cost, true)?;
        debug_assert!(feasible != LpStatus::Unbounded, "phase 1 is bounded below by 0");
        let infeas: f64 = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &j)| self.is_artificial(j))
            .map(|(r, _)| self.xb[r])
            .sum();
        if infeas > FEAS_TOL {
            return Ok(LpStatus::Infeasible);
        }
        self.evict_artificials()?;

        // Phase 2: minimize the real objective.
        let cost = self.cost.clone();
        self.optimize(&cost, false)
    }

    /// Pivots basic artificials out; rows where that is impossible are
    /// linearly dependent and get dropped.
    fn evict_artificials(&mut self) -> Result<(), LpError> {
        let mut dead_rows = Vec::new();
        for r in 0..self.m {
            if !self.is_artificial(self.basis[r]) {
                continue;
            }
            let mut replaced = false;
            for j in 0..self.n_real {
                if self.basis.contains(&j) {
                    continue;
                }
                let d = self.binv.row(r).dot(&self.a.column(j));
                if d.abs() > 1e-7 {
                    let dir = self.binv.dot(&self.column(j));
                    self.pivot(j, r, &dir);
                    replaced = true;
                    break;
                }
            }
            if !replaced {
                dead_rows.push(r);
            }
        }
        if dead_rows.is_empty() {
            return Ok(());
        }
        let keep: Vec<usize> = (0..self.m).filter(|r| !dead_rows.contains(r)).collect();
        let mut a = Array2::zeros((keep.len(), self.n_real));
        let mut b = Array1::zeros(keep.len());
        let mut row_map = Vec::with_capacity(keep.len());
        let mut basis = Vec::with_capacity(keep.len());
        for (new_r, &old_r) in keep.iter().enumerate() {
            for j in 0..self.n_real {
                a[(new_r, j)] = self.a[(old_r, j)];
            }
            b[new_r] = self.b[old_r];
            row_map.push(self.row_map[old_r]);
            basis.push(self.basis[old_r]);
        }
        // Re-index artificial columns that survive (they must map to their row).
        for (r, j) in basis.iter_mut().enumerate() {
            if *j >= self.n_real {
                *j = self.n_real + r;
            }
        }
        self.a = a;
        self.b = b;
        self.basis = basis;
        self.row_map = row_map;
        self.m = keep.len();
        self.refactor()?;
        Ok(())
    }

    fn refactor(&mut self) -> Result<(), LpError> {
        // Gauss-Jordan inversion of the basis matrix with partial pivoting.
        let m = self.m;
        let mut aug = Array2::<f64>::zeros((m, 2 * m));
        for (r, &j) in self.basis.iter().enumerate() {
            let col = self.column(j);
            for i in 0..m {
                aug[(i, r)] = col[i];
            }
        }
        for i in 0..m {
            aug[(i, m + i)] = 1.0;
        }
        for col in 0..m {
            let mut piv = col;
            for r in col + 1..m {
                if aug[(r, col)].abs() > aug[(piv, col)].abs() {
                    piv = r;
                }
            }
            if aug[(piv, col)].abs() < 1e-12 {
                return Err(LpError::SingularBasis);
            }
            if piv != col {
                for k in 0..2 * m {
                    aug.swap((piv, k), (col, k));
                }
            }
            let d = aug[(col, col)];
            for k in 0..2 * m {
                aug[(col, k)] /= d;
            }
            for r in 0..m {
                if r != col {
                    let f = aug[(r, col)];
                    if f != 0.0 {
                        for k in 0..2 * m {
                            aug[(r, k)] -= f * aug[(col, k)];
                        }
                    }
                }
            }
        }
        let mut binv = Array2::zeros((m, m));
        for i in 0..m {
            for k in 0..m {
                binv[(i, k)] = aug[(i, m + k)];
            }
        }
        self.binv = binv;
        self.xb = self.binv.dot(&self.b);
        self.pivots_since_refactor = 0;
        Ok(())
    }

    fn pivot(&mut self, entering: usize, leave_row: usize, dir: &Array1<f64>) {
        let theta = self.xb[leave_row] / dir[leave_row];
        for i in 0..self.m {
            if i != leave_row {
                self.xb[i] -= theta * dir[i];
                if self.xb[i] < 0.0 && self.xb[i] > -FEAS_TOL {
                    self.xb[i] = 0.0;
                }
            }
        }
        self.xb[leave_row] = theta;
        let piv = dir[leave_row];
        let pivot_row = self.binv.row(leave_row).to_owned() / piv;
        for i in 0..self.m {
            if i != leave_row {
                let f = dir[i];
                if f != 0.0 {
                    let update = &pivot_row * f;
                    let mut row = self.binv.row_mut(i);
                    row -= &update;
                }
            }
        }
        self.binv.row_mut(leave_row).assign(&pivot_row);
        self.basis[leave_row] = entering;
        self.pivots_since_refactor += 1;
    }

    /// Runs simplex iterations for the given cost vector. `phase1` makes
    /// artificial columns cost 1 and forbids them from entering.
    fn optimize(&mut self, cost: &[f64], phase1: bool) -> Result<LpStatus, LpError> {
        let n_real = self.n_real;
        let col_cost = move |j: usize| -> f64 {
            if j >= n_real {
                if phase1 {
                    1.0
                } else {
                    0.0
                }
            } else {
                cost[j]
            }
        };
        let stall_limit = 3 * (self.n_real + self.m);
        let iter_limit = 20_000 + 200 * (self.n_real + self.m);
        let mut stalled = 0usize;
        let mut bland = false;
        let mut last_obj = f64::INFINITY;

        loop {
            self.iterations += 1;
            if self.iterations > iter_limit {
                return Err(LpError::IterationLimit(iter_limit));
            }
            if self.pivots_since_refactor >= REFACTOR_EVERY {
                self.refactor()?;
            }

            let cb: Array1<f64> = self.basis.iter().map(|&j| col_cost(j)).collect();
            let y = cb.dot(&self.binv);
            let obj = cb.dot(&self.xb);

            if (last_obj - obj).abs() <= 1e-12 * (1.0 + obj.abs()) {
                stalled += 1;
                if stalled > stall_limit {
                    bland = true;
                }
            } else {
                stalled = 0;
            }
            last_obj = obj;

            // Pricing over real non-basic columns.
            let mut entering = None;
            let mut best = -PIVOT_TOL;
            for j in 0..self.n_real {
                if self.basis.contains(&j) {
                    continue;
                }
                let r = col_cost(j) - y.dot(&self.a.column(j));
                if bland {
                    if r < -PIVOT_TOL {
                        entering = Some(j);
                        break;
                    }
                } else if r < best {
                    best = r;
                    entering = Some(j);
                }
            }
            let Some(j) = entering else {
                return Ok(LpStatus::Optimal);
            };

            let dir = self.binv.dot(&self.a.column(j));
            let mut leave: Option<usize> = None;
            let mut min_ratio = f64::INFINITY;
            for i in 0..self.m {
                if dir[i] > PIVOT_TOL {
                    let ratio = self.xb[i] / dir[i];
                    let better = match leave {
                        None => true,
                        Some(cur) => {
                            ratio < min_ratio - 1e-12
                                || (ratio <= min_ratio + 1e-12 && {
                                    if bland {
                                        self.basis[i] < self.basis[cur]
                                    } else {
                                        // prefer kicking artificials out, then low row
                                        let art_i = self.is_artificial(self.basis[i]);
                                        let art_c = self.is_artificial(self.basis[cur]);
                                        art_i && !art_c || (art_i == art_c && i < cur)
                                    }
                                })
                        }
                    };
                    if better {
                        min_ratio = ratio.max(0.0);
                        leave = Some(i);
                    }
                }
            }
            let Some(r) = leave else {
                return Ok(LpStatus::Unbounded);
            };
            self.pivot(j, r, &dir);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn lp(
        c: Vec<f64>,
        a_eq: Array2<f64>,
        b_eq: Vec<f64>,
        a_ub: Array2<f64>,
        b_ub: Vec<f64>,
    ) -> LinearProgram {
        let n = c.len();
        LinearProgram {
            objective: c,
            a_eq,
            b_eq,
            a_ub,
            b_ub,
            free: vec![false; n],
        }
    }

    #[test]
    fn simplex_on_unit_budget() {
        // min x1 + x2 s.t. x1 + x2 = 1, x >= 0 -> value 1, dual y = 1
        let p = lp(
            vec![1.0, 1.0],
            array![[1.0, 1.0]],
            vec![1.0],
            Array2::zeros((0, 2)),
            vec![],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.value - 1.0).abs() < 1e-10);
        assert!((s.y_eq[0] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn detects_infeasibility() {
        // x1 = 1 and x1 = 2
        let p = lp(
            vec![0.0],
            array![[1.0], [1.0]],
            vec![1.0, 2.0],
            Array2::zeros((0, 1)),
            vec![],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn detects_unboundedness() {
        // min -x1 with x1 only bounded below
        let p = lp(
            vec![-1.0],
            Array2::zeros((0, 1)),
            vec![],
            Array2::zeros((0, 1)),
            vec![],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Unbounded);
    }

    #[test]
    fn handles_inequalities_and_duals() {
        // min -x1 - 2 x2 s.t. x1 + x2 <= 4, x2 <= 2
        let p = lp(
            vec![-1.0, -2.0],
            Array2::zeros((0, 2)),
            vec![],
            array![[1.0, 1.0], [0.0, 1.0]],
            vec![4.0, 2.0],
        );
        let s = solve_lp(&p).unwrap().optimal().unwrap();
        assert!((s.value + 6.0).abs() < 1e-9);
        assert!((s.x[0] - 2.0).abs() < 1e-9 && (s.x[1] - 2.0).abs() < 1e-9);
        // max-dual convention: mu <= 0, value = b_ub' mu
        assert!(s.y_ub.iter().all(|&mu| mu <= 1e-12));
        let dual_val = 4.0 * s.y_ub[0] + 2.0 * s.y_ub[1];
        assert!((dual_val - s.value).abs() < 1e-8);
    }

    #[test]
    fn free_variable_absolute_value() {
        // min |w - 3| encoded as min s⁺+s⁻ with free w pinned by w = 3.
        let mut b = LpBuilder::new();
        let w = b.free_var(0.0);
        let sp = b.var(1.0);
        let sm = b.var(1.0);
        b.eq(vec![(w, 1.0), (sp, -1.0), (sm, 1.0)], 5.0);
        b.eq(vec![(w, 1.0)], 3.0);
        let s = b.solve().unwrap().optimal().unwrap();
        assert!((s.value - 2.0).abs() < 1e-9);
        assert!((s.x[w] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        // duplicated constraint row must not break phase transition or duals
        let p = lp(
            vec![1.0, 1.0],
            array![[1.0, 1.0], [1.0, 1.0]],
            vec![1.0, 1.0],
            Array2::zeros((0, 2)),
            vec![],
        );
        let s = solve_lp(&p).unwrap().optimal().unwrap();
        assert!((s.value - 1.0).abs() < 1e-10);
        let dual_val = s.y_eq[0] + s.y_eq[1];
        assert!((dual_val - 1.0).abs() < 1e-8);
    }

    #[test]
    fn resolve_is_bit_identical() {
        let p = lp(
            vec![-1.0, -2.0, 0.5],
            array![[1.0, 1.0, 1.0]],
            vec![3.0],
            array![[1.0, 0.0, -1.0], [0.0, 1.0, 1.0]],
            vec![2.0, 2.5],
        );
        let a = solve_lp(&p).unwrap();
        let b = solve_lp(&p).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        for (xa, xb) in a.x.iter().zip(&b.x) {
            assert_eq!(xa.to_bits(), xb.to_bits());
        }
        for (ya, yb) in a.y_eq.iter().zip(&b.y_eq) {
            assert_eq!(ya.to_bits(), yb.to_bits());
        }
    }

    #[test]
    fn degenerate_instance_terminates() {
        // Many ties in the ratio test; Bland fallback must terminate.
        let p = lp(
            vec![-0.75, 150.0, -0.02, 6.0],
            Array2::zeros((0, 4)),
            vec![],
            array![
                [0.25, -60.0, -0.04, 9.0],
                [0.5, -90.0, -0.02, 3.0],
                [0.0, 0.0, 1.0, 0.0]
            ],
            vec![0.0, 0.0, 1.0],
        );
        // Beale's cycling example: optimum -0.05 at x = (0.04, 0, 1, 0)
        let s = solve_lp(&p).unwrap().optimal().unwrap();
        assert!((s.value + 0.05).abs() < 1e-9);
    }

    #[test]
    fn duality_gap_and_complementary_slackness() {
        let p = lp(
            vec![2.0, 3.0, 1.0],
            array![[1.0, 1.0, 1.0]],
            vec![2.0],
            array![[-1.0, 0.0, 0.0], [0.0, -1.0, 1.0]],
            vec![-0.5, 1.0],
        );
        let s = solve_lp(&p).unwrap().optimal().unwrap();
        let dual = 2.0 * s.y_eq[0] + (-0.5) * s.y_ub[0] + 1.0 * s.y_ub[1];
        assert!((dual - s.value).abs() < 1e-8 * (1.0 + s.value.abs()));
        // dual feasibility: A'y <= c on non-negative variables
        for j in 0..3 {
            let mut lhs = s.y_eq[0] * p.a_eq[(0, j)];
            lhs += s.y_ub[0] * p.a_ub[(0, j)] + s.y_ub[1] * p.a_ub[(1, j)];
            assert!(lhs <= p.objective[j] + 1e-8);
        }
    }
}
