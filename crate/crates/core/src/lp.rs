//! Dense two-phase simplex with Bland's rule.
//!
//! Generic over [`Real`], so with the rational backend every answer
//! (optimal value, primal point, infeasibility, unboundedness) is exact.

use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub rel: Relation,
    pub rhs: T,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { value: T, x: Vec<T> },
    Infeasible,
    Unbounded,
}

impl<T> LpOutcome<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&[T]> {
        match self {
            LpOutcome::Optimal { x, .. } => Some(x),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// A linear program over `n` variables. Variables are nonnegative unless
/// marked free.
#[derive(Clone, Debug)]
pub struct LinearProgram<T> {
    n: usize,
    objective: Vec<T>,
    maximize: bool,
    free: Vec<bool>,
    constraints: Vec<Constraint<T>>,
}

impl<T: Real> LinearProgram<T> {
    pub fn minimize(objective: Vec<T>) -> Self {
        let n = objective.len();
        Self {
            n,
            objective,
            maximize: false,
            free: vec![false; n],
            constraints: Vec::new(),
        }
    }

    pub fn maximize(objective: Vec<T>) -> Self {
        Self {
            maximize: true,
            ..Self::minimize(objective)
        }
    }

    /// Pure feasibility problem.
    pub fn feasibility(n: usize) -> Self {
        Self::minimize(vec![T::zero(); n])
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn set_free_range(&mut self, vars: std::ops::Range<usize>) -> &mut Self {
        for v in vars {
            self.free[v] = true;
        }
        self
    }

    pub fn add(&mut self, coeffs: Vec<T>, rel: Relation, rhs: T) -> &mut Self {
        assert_eq!(
            coeffs.len(),
            self.n,
            "constraint width differs from variable count"
        );
        self.constraints.push(Constraint { coeffs, rel, rhs });
        self
    }

    pub fn solve(&self) -> LpOutcome<T> {
        Tableau::build(self).run(self)
    }
}

struct Tableau<T> {
    /// `m` rows of `cols + 1` entries; the last entry is the right-hand side.
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    cols: usize,
    /// First artificial column; columns from here on are artificial.
    art_start: usize,
    /// Column of `x_j^+` and, for free variables, `x_j^-`.
    var_cols: Vec<(usize, Option<usize>)>,
}

impl<T: Real> Tableau<T> {
    fn build(lp: &LinearProgram<T>) -> Self {
        let mut var_cols = Vec::with_capacity(lp.n);
        let mut next = 0;
        for j in 0..lp.n {
            let pos = next;
            next += 1;
            let neg = if lp.free[j] {
                next += 1;
                Some(next - 1)
            } else {
                None
            };
            var_cols.push((pos, neg));
        }
        let structural = next;

        // Normalize to nonnegative right-hand sides.
        let normalized: Vec<(Vec<T>, Relation, T)> = lp
            .constraints
            .iter()
            .map(|c| {
                let mut row = vec![T::zero(); structural];
                for (j, a) in c.coeffs.iter().enumerate() {
                    let (p, n) = var_cols[j];
                    row[p] = a.clone();
                    if let Some(n) = n {
                        row[n] = -a.clone();
                    }
                }
                if c.rhs < T::zero() {
                    let rel = match c.rel {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (row.into_iter().map(|v| -v).collect(), rel, -c.rhs.clone())
                } else {
                    (row, c.rel, c.rhs.clone())
                }
            })
            .collect();

        let slacks = normalized
            .iter()
            .filter(|(_, r, _)| *r != Relation::Eq)
            .count();
        let arts = normalized
            .iter()
            .filter(|(_, r, _)| *r != Relation::Le)
            .count();
        let art_start = structural + slacks;
        let cols = art_start + arts;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut s, mut a) = (structural, art_start);
        for (coeffs, rel, rhs) in normalized {
            let mut row = coeffs;
            row.resize(cols + 1, T::zero());
            row[cols] = rhs;
            match rel {
                Relation::Le => {
                    row[s] = T::one();
                    basis.push(s);
                    s += 1;
                }
                Relation::Ge => {
                    row[s] = -T::one();
                    s += 1;
                    row[a] = T::one();
                    basis.push(a);
                    a += 1;
                }
                Relation::Eq => {
                    row[a] = T::one();
                    basis.push(a);
                    a += 1;
                }
            }
            rows.push(row);
        }
        Self {
            rows,
            basis,
            cols,
            art_start,
            var_cols,
        }
    }

    fn reduced_costs(&self, cost: &[T]) -> Vec<T> {
        let mut r: Vec<T> = cost.to_vec();
        r.push(T::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (rj, aj) in r.iter_mut().zip(row) {
                *rj = rj.clone() - cb.clone() * aj.clone();
            }
        }
        r
    }

    fn pivot(&mut self, pr: usize, pc: usize, reduced: &mut [T]) {
        let inv = T::one() / self.rows[pr][pc].clone();
        for v in self.rows[pr].iter_mut().filter(|v| !v.is_zero()) {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = self.rows[pr].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == pr || row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
            row[pc] = T::zero();
        }
        if !reduced[pc].is_zero() {
            let f = reduced[pc].clone();
            for (v, p) in reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
            reduced[pc] = T::zero();
        }
        self.basis[pr] = pc;
    }

    /// Runs simplex iterations over columns `< limit`. Returns `false` when
    /// the objective is unbounded below.
    fn iterate(&mut self, reduced: &mut [T], limit: usize) -> bool {
        loop {
            let Some(pc) = (0..limit).find(|&j| reduced[j].lt_tol(&T::zero())) else {
                return true;
            };
            let mut best: Option<(usize, T)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !T::zero().lt_tol(&row[pc]) {
                    continue;
                }
                let ratio = row[self.cols].clone() / row[pc].clone();
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => match ratio.cmp_tol(&br) {
                        std::cmp::Ordering::Less => Some((i, ratio)),
                        std::cmp::Ordering::Equal if self.basis[i] < self.basis[bi] => {
                            Some((i, ratio))
                        }
                        _ => Some((bi, br)),
                    },
                };
            }
            match best {
                Some((pr, _)) => self.pivot(pr, pc, reduced),
                None => return false,
            }
        }
    }

    fn run(mut self, lp: &LinearProgram<T>) -> LpOutcome<T> {
        // Phase one: minimize the sum of artificial variables.
        if self.art_start < self.cols {
            let cost: Vec<T> = (0..self.cols)
                .map(|j| {
                    if j >= self.art_start {
                        T::one()
                    } else {
                        T::zero()
                    }
                })
                .collect();
            let mut reduced = self.reduced_costs(&cost);
            self.iterate(&mut reduced, self.cols);
            let infeasibility = -reduced[self.cols].clone();
            if !infeasibility.is_zero_tol() {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials(&mut reduced);
        }

        // Phase two on the original objective, written as a minimization.
        let mut cost = vec![T::zero(); self.cols];
        for (j, c) in lp.objective.iter().enumerate() {
            let c = if lp.maximize { -c.clone() } else { c.clone() };
            let (p, n) = self.var_cols[j];
            cost[p] = c.clone();
            if let Some(n) = n {
                cost[n] = -c;
            }
        }
        let mut reduced = self.reduced_costs(&cost);
        if !self.iterate(&mut reduced, self.art_start) {
            return LpOutcome::Unbounded;
        }

        let mut col_values = vec![T::zero(); self.cols];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            col_values[b] = row[self.cols].clone();
        }
        let x: Vec<T> = self
            .var_cols
            .iter()
            .map(|&(p, n)| match n {
                Some(n) => col_values[p].clone() - col_values[n].clone(),
                None => col_values[p].clone(),
            })
            .collect();
        let value = lp
            .objective
            .iter()
            .zip(&x)
            .fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone());
        LpOutcome::Optimal { value, x }
    }

    /// Pivots zero-level artificials out of the basis; rows where that is
    /// impossible are redundant and dropped.
    fn drive_out_artificials(&mut self, reduced: &mut [T]) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.art_start {
                i += 1;
                continue;
            }
            match (0..self.art_start).find(|&j| !self.rows[i][j].is_zero_tol()) {
                Some(pc) => {
                    self.pivot(i, pc, reduced);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}
