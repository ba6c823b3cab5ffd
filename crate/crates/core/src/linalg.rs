//! Exact rational linear algebra: reduced row echelon form, rank, null
//! spaces, linear solves, and primitive integer normalization of rational
//! vectors.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::trop::Rat;

pub type Vecr = Vec<Rat>;

pub fn zeros(n: usize) -> Vecr {
    vec![Rat::zero(); n]
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vecr {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vecr {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rat], c: &Rat) -> Vecr {
    a.iter().map(|x| x * c).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// In-place reduced row echelon form. Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vecr>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    rows.retain(|row| !is_zero_vec(row));
    pivots
}

pub fn rank(rows: &[Vecr]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m);
    m.len()
}

/// Basis of the null space of the matrix given by `rows` (n columns).
pub fn nullspace(rows: &[Vecr], n: usize) -> Vec<Vecr> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = zeros(n);
        v[free] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b` for one solution, or `None` if inconsistent. `a` has `n`
/// columns.
pub fn solve(a: &[Vecr], b: &[Rat], n: usize) -> Option<Vecr> {
    let mut m: Vec<Vecr> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    // Inconsistent iff a pivot lands in the rhs column.
    if pivots.iter().any(|&c| c == n) {
        return None;
    }
    let mut x = zeros(n);
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = m[ri][n].clone();
    }
    Some(x)
}

/// Scale a nonzero rational vector to a primitive integer vector with the
/// first nonzero coordinate positive.
pub fn primitive(v: &[Rat]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    ints
}

/// Orthogonal projection of `v` onto the orthogonal complement of
/// `span(basis)`, computed exactly via the Gram matrix.
pub fn project_mod_subspace(v: &[Rat], basis: &[Vecr]) -> Vecr {
    if basis.is_empty() {
        return v.to_vec();
    }
    let k = basis.len();
    // Solve (B Bᵀ) c = B v, then v - Bᵀ c.
    let gram: Vec<Vecr> = basis
        .iter()
        .map(|bi| basis.iter().map(|bj| dot(bi, bj)).collect())
        .collect();
    let rhs: Vecr = basis.iter().map(|bi| dot(bi, v)).collect();
    let c = solve(&gram, &rhs, k).expect("gram system is always solvable");
    let mut out = v.to_vec();
    for (ci, bi) in c.iter().zip(basis) {
        for (o, bij) in out.iter_mut().zip(bi) {
            *o -= ci * bij;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trop::{rat, rint};

    fn v(xs: &[i64]) -> Vecr {
        xs.iter().map(|&x| rint(x)).collect()
    }

    #[test]
    fn rref_rank_nullspace() {
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[1, 0, 1])];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(dot(r, &ns[0]).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = vec![v(&[1, 1]), v(&[1, -1])];
        let x = solve(&a, &v(&[3, 1]), 2).unwrap();
        assert_eq!(x, vec![rint(2), rint(1)]);
        let a2 = vec![v(&[1, 1]), v(&[2, 2])];
        assert!(solve(&a2, &v(&[1, 3]), 2).is_none());
    }

    #[test]
    fn primitive_normalization() {
        let p = primitive(&[rat(-1, 2), rat(1, 3), rint(0)]);
        assert_eq!(p, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(0)]);
    }

    #[test]
    fn projection() {
        let basis = vec![v(&[1, 1, 1])];
        let p = project_mod_subspace(&v(&[3, 0, 0]), &basis);
        assert_eq!(p, vec![rint(2), rint(-1), rint(-1)]);
    }
}
