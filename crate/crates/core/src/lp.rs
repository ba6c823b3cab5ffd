//! Exact rational linear programming: a dense two-phase simplex with
//! Bland's rule, plus the feasibility / implicit-equality / relative
//! interior helpers the polyhedral kernel is built on.
//!
//! Scale target is desk-sized systems (tens of variables, a few hundred
//! rows), where exactness matters more than speed.

use num::{One, Signed, Zero};

use crate::linalg::{self, Vecr};
use crate::trop::Rat;

/// `a·x = b` rows in `equalities`, `a·x ≤ b` rows in `inequalities`,
/// over `n` free variables.
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    pub n: usize,
    pub equalities: Vec<(Vecr, Rat)>,
    pub inequalities: Vec<(Vecr, Rat)>,
}

impl LinearProgram {
    pub fn new(n: usize) -> Self {
        LinearProgram {
            n,
            equalities: vec![],
            inequalities: vec![],
        }
    }

    pub fn eq(&mut self, a: Vecr, b: Rat) {
        debug_assert_eq!(a.len(), self.n);
        self.equalities.push((a, b));
    }

    pub fn le(&mut self, a: Vecr, b: Rat) {
        debug_assert_eq!(a.len(), self.n);
        self.inequalities.push((a, b));
    }

    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        self.equalities.iter().all(|(a, b)| &linalg::dot(a, x) == b)
            && self
                .inequalities
                .iter()
                .all(|(a, b)| &linalg::dot(a, x) <= b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, point: Vecr },
}

struct Tableau {
    rows: Vec<Vecr>, // m x (ncols + 1), last column is rhs
    cost: Vecr,      // ncols + 1, last entry is -objective value
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (x, p) in self.cost.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        self.basis[r] = c;
    }

    /// Minimize with Bland's rule. Returns false on unboundedness.
    fn run(&mut self) -> bool {
        loop {
            // Entering: smallest column index with negative reduced cost.
            let Some(c) = (0..self.ncols).find(|&j| self.cost[j].is_negative()) else {
                return true;
            };
            // Ratio test; Bland tie-break on smallest basic variable.
            let mut best: Option<(usize, Rat)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[self.ncols] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// Internal solver: maximize `objective` (may be empty for pure
/// feasibility).
fn simplex(objective: Option<&[Rat]>, lp: &LinearProgram) -> LpOutcome {
    let n = lp.n;
    let m_ineq = lp.inequalities.len();
    // Columns: x = p - q  (2n), slacks (m_ineq), artificials appended later.
    let base_cols = 2 * n + m_ineq;
    let mut rows: Vec<Vecr> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    let build_row = |a: &[Rat], slack: Option<usize>| -> Vecr {
        let mut row = linalg::zeros(base_cols);
        for (j, v) in a.iter().enumerate() {
            row[j] = v.clone();
            row[n + j] = -v.clone();
        }
        if let Some(s) = slack {
            row[2 * n + s] = Rat::one();
        }
        row
    };
    for (a, b) in &lp.equalities {
        rows.push(build_row(a, None));
        rhs.push(b.clone());
    }
    for (i, (a, b)) in lp.inequalities.iter().enumerate() {
        rows.push(build_row(a, Some(i)));
        rhs.push(b.clone());
    }
    // Normalize rhs >= 0, then one artificial per row.
    let m = rows.len();
    for i in 0..m {
        if rhs[i].is_negative() {
            for x in rows[i].iter_mut() {
                *x = -x.clone();
            }
            rhs[i] = -rhs[i].clone();
        }
    }
    let ncols = base_cols + m;
    let mut t = Tableau {
        rows: (0..m)
            .map(|i| {
                let mut row = rows[i].clone();
                row.resize(ncols, Rat::zero());
                row[base_cols + i] = Rat::one();
                row.push(rhs[i].clone());
                row
            })
            .collect(),
        cost: linalg::zeros(ncols + 1),
        basis: (0..m).map(|i| base_cols + i).collect(),
    ncols,
    };
    // Phase 1: minimize sum of artificials.
    for j in base_cols..ncols {
        t.cost[j] = Rat::one();
    }
    for i in 0..m {
        // Make reduced costs of the basic artificials zero.
        let row = t.rows[i].clone();
        for (x, p) in t.cost.iter_mut().zip(&row) {
            *x -= p;
        }
    }
    let ok = t.run();
    assert!(ok, "phase 1 is bounded below by construction");
    let phase1_value = -t.cost[ncols].clone();
    if !phase1_value.is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive artificials out of the basis or drop redundant rows.
    let mut drop_rows = Vec::new();
    for i in 0..m {
        if t.basis[i] >= base_cols {
            match (0..base_cols).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => drop_rows.push(i),
            }
        }
    }
    for &i in drop_rows.iter().rev() {
        t.rows.remove(i);
        t.basis.remove(i);
    }
    // Forbid artificials from re-entering by removing their columns.
    for row in t.rows.iter_mut() {
        let rhs_val = row.pop().unwrap();
        row.truncate(base_cols);
        row.push(rhs_val);
    }
    t.ncols = base_cols;

    // Phase 2.
    let extract = |t: &Tableau| -> Vecr {
        let mut y = linalg::zeros(base_cols);
        for (i, &b) in t.basis.iter().enumerate() {
            y[b] = t.rows[i][t.ncols].clone();
        }
        (0..n).map(|j| &y[j] - &y[n + j]).collect()
    };
    let Some(obj) = objective else {
        return LpOutcome::Optimal {
            value: Rat::zero(),
            point: extract(&t),
        };
    };
    // Minimize -obj.
    t.cost = linalg::zeros(base_cols + 1);
    for (j, v) in obj.iter().enumerate() {
        t.cost[j] = -v.clone();
        t.cost[n + j] = v.clone();
    }
    for i in 0..t.rows.len() {
        if !t.cost[t.basis[i]].is_zero() {
            let f = t.cost[t.basis[i]].clone();
            let row = t.rows[i].clone();
            for (x, p) in t.cost.iter_mut().zip(&row) {
                *x -= &f * p;
            }
        }
    }
    if !t.run() {
        return LpOutcome::Unbounded;
    }
    let point = extract(&t);
    let value = linalg::dot(obj, &point);
    LpOutcome::Optimal { value, point }
}

/// Maximize `objective` over the feasible set.
pub fn maximize(objective: &[Rat], lp: &LinearProgram) -> LpOutcome {
    debug_assert_eq!(objective.len(), lp.n);
    let out = simplex(Some(objective), lp);
    if let LpOutcome::Optimal { point, .. } = &out {
        debug_assert!(lp.satisfied_by(point));
    }
    out
}

/// Any feasible point, if one exists.
pub fn feasible_point(lp: &LinearProgram) -> Option<Vecr> {
    match simplex(None, lp) {
        LpOutcome::Optimal { point, .. } => {
            debug_assert!(lp.satisfied_by(&point));
            Some(point)
        }
        _ => None,
    }
}

/// Maximize the slack of inequality `i`, capped at 1. An optimum of zero
/// means the inequality is an implicit equality of the feasible set.
fn max_slack_capped(lp: &LinearProgram, i: usize) -> Option<(Rat, Vecr)> {
    let mut aug = LinearProgram::new(lp.n + 1);
    let ext = |a: &[Rat], s: Rat| -> Vecr {
        let mut row = a.to_vec();
        row.push(s);
        row
    };
    for (a, b) in &lp.equalities {
        aug.eq(ext(a, Rat::zero()), b.clone());
    }
    for (j, (a, b)) in lp.inequalities.iter().enumerate() {
        let s = if j == i { Rat::one() } else { Rat::zero() };
        aug.le(ext(a, s), b.clone());
    }
    let mut cap = linalg::zeros(lp.n + 1);
    cap[lp.n] = Rat::one();
    aug.le(cap.clone(), Rat::one());
    match maximize(&cap, &aug) {
        LpOutcome::Optimal { value, mut point } => {
            point.truncate(lp.n);
            Some((value, point))
        }
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("slack objective is capped"),
    }
}

/// Feasibility analysis of a polyhedron: a relative interior point together
/// with the set of inequalities that hold with equality everywhere.
pub struct Interior {
    pub point: Vecr,
    pub implicit_equalities: Vec<usize>,
}

/// Compute a relative interior point and the implicit equalities, or `None`
/// if the system is infeasible. Deterministic: simplex with Bland's rule is
/// deterministic, and the result is a barycenter of per-constraint optima.
pub fn relative_interior(lp: &LinearProgram) -> Option<Interior> {
    let base = feasible_point(lp)?;
    let mut implicit = Vec::new();
    let mut points: Vec<Vecr> = Vec::new();
    for i in 0..lp.inequalities.len() {
        let (value, point) = max_slack_capped(lp, i).expect("feasible by base point");
        if value.is_zero() {
            implicit.push(i);
        } else {
            points.push(point);
        }
    }
    let point = if points.is_empty() {
        base
    } else {
        let k = Rat::from_integer(num::BigInt::from(points.len() as i64));
        let mut acc = linalg::zeros(lp.n);
        for p in &points {
            acc = linalg::add(&acc, p);
        }
        acc.iter().map(|x| x / &k).collect()
    };
    debug_assert!(lp.satisfied_by(&point));
    Some(Interior {
        point,
        implicit_equalities: implicit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trop::rint;

    fn v(xs: &[i64]) -> Vecr {
        xs.iter().map(|&x| rint(x)).collect()
    }

    #[test]
    fn simple_max() {
        // max x + y st x <= 2, y <= 3, x + y <= 4
        let mut lp = LinearProgram::new(2);
        lp.le(v(&[1, 0]), rint(2));
        lp.le(v(&[0, 1]), rint(3));
        lp.le(v(&[1, 1]), rint(4));
        match maximize(&v(&[1, 1]), &lp) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rint(4)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.le(v(&[1]), rint(0));
        lp.le(v(&[-1]), rint(-1)); // x >= 1
        assert_eq!(maximize(&v(&[1]), &lp), LpOutcome::Infeasible);

        let mut lp2 = LinearProgram::new(1);
        lp2.le(v(&[-1]), rint(0)); // x >= 0
        assert_eq!(maximize(&v(&[1]), &lp2), LpOutcome::Unbounded);
    }

    #[test]
    fn equalities_and_negative_rhs() {
        // x + y = -1, x - y <= 0, maximize x
        let mut lp = LinearProgram::new(2);
        lp.eq(v(&[1, 1]), rint(-1));
        lp.le(v(&[1, -1]), rint(0));
        match maximize(&v(&[1, 0]), &lp) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rint(-1) / rint(2));
                assert!(lp.satisfied_by(&point));
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn relative_interior_detects_implicit_equalities() {
        // x >= 0, -x >= 0 forces x = 0; y free in [0, 1].
        let mut lp = LinearProgram::new(2);
        lp.le(v(&[1, 0]), rint(0));
        lp.le(v(&[-1, 0]), rint(0));
        lp.le(v(&[0, 1]), rint(1));
        lp.le(v(&[0, -1]), rint(0));
        let int = relative_interior(&lp).unwrap();
        assert_eq!(int.implicit_equalities, vec![0, 1]);
        assert!(int.point[0].is_zero());
        assert!(int.point[1].is_positive() && int.point[1] < rint(1));
    }

    #[test]
    fn degenerate_cycling_guard() {
        // A classically degenerate instance; Bland's rule must terminate.
        let mut lp = LinearProgram::new(4);
        lp.le(v(&[1, 1, 1, 1]), rint(40));
        lp.le(v(&[2, 1, -1, -1]), rint(10));
        lp.le(v(&[0, -1, 0, 1]), rint(10));
        match maximize(&v(&[1, 2, 3, -1]), &lp) {
            LpOutcome::Unbounded => {}
            LpOutcome::Optimal { .. } => {}
            LpOutcome::Infeasible => panic!("feasible at origin"),
        }
    }
}
