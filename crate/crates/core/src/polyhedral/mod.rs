//! Exact rational polyhedral kernel: affine systems, feasibility and
//! dimension, Fourier–Motzkin projection, lower-hull subdivisions, closures
//! of complexes in tropical projective space, and polyhedral fans with
//! lineality and f-vector.

pub mod hull;
pub mod lower_hull;

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, One, Signed, Zero};

use crate::error::Error;
use crate::linalg::{self, Vecr};
use crate::lp::{self, LinearProgram};
use crate::trop::Rat;
use crate::Result;

pub use lower_hull::{lower_hull_faces, SubdivFace};

/// Equalities `a·x = b` and inequalities `a·x ≤ b` over a common ambient
/// dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AffineSystem {
    pub n: usize,
    pub equalities: Vec<(Vecr, Rat)>,
    pub inequalities: Vec<(Vecr, Rat)>,
}

impl AffineSystem {
    pub fn new(n: usize) -> Self {
        AffineSystem {
            n,
            equalities: vec![],
            inequalities: vec![],
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (a, _) in self.equalities.iter().chain(&self.inequalities) {
            if a.len() != self.n {
                return Err(Error::input(format!(
                    "row has {} coefficients in ambient dimension {}",
                    a.len(),
                    self.n
                )));
            }
        }
        Ok(())
    }

    pub fn push_eq(&mut self, a: Vecr, b: Rat) {
        self.equalities.push((a, b));
    }

    pub fn push_le(&mut self, a: Vecr, b: Rat) {
        self.inequalities.push((a, b));
    }

    pub fn to_lp(&self) -> LinearProgram {
        LinearProgram {
            n: self.n,
            equalities: self.equalities.clone(),
            inequalities: self.inequalities.clone(),
        }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.to_lp().satisfied_by(x)
    }

    /// The homogeneous part: recession cone of the solution set.
    pub fn recession(&self) -> AffineSystem {
        AffineSystem {
            n: self.n,
            equalities: self
                .equalities
                .iter()
                .map(|(a, _)| (a.clone(), Rat::zero()))
                .collect(),
            inequalities: self
                .inequalities
                .iter()
                .map(|(a, _)| (a.clone(), Rat::zero()))
                .collect(),
        }
    }
}

/// `None` means the system is infeasible; otherwise the exact affine
/// dimension of the solution set.
pub fn feasible_dim(sys: &AffineSystem) -> Result<Option<usize>> {
    sys.validate()?;
    let Some(interior) = lp::relative_interior(&sys.to_lp()) else {
        return Ok(None);
    };
    let mut rows: Vec<Vecr> = sys.equalities.iter().map(|(a, _)| a.clone()).collect();
    for &i in &interior.implicit_equalities {
        rows.push(sys.inequalities[i].0.clone());
    }
    Ok(Some(sys.n - linalg::rank(&rows)))
}

/// Eliminate variable `var` by substitution (if an equality pins it) or by
/// Fourier–Motzkin combination of inequality pairs.
fn fm_eliminate(sys: &AffineSystem, var: usize) -> AffineSystem {
    let mut out = AffineSystem::new(sys.n);
    // Prefer elimination through an equality.
    if let Some(k) = sys.equalities.iter().position(|(a, _)| !a[var].is_zero()) {
        let (pivot, pb) = sys.equalities[k].clone();
        let reduce = |a: &Vecr, b: &Rat| -> (Vecr, Rat) {
            if a[var].is_zero() {
                (a.clone(), b.clone())
            } else {
                let f = &a[var] / &pivot[var];
                (linalg::sub(a, &linalg::scale(&pivot, &f)), b - &f * &pb)
            }
        };
        for (i, (a, b)) in sys.equalities.iter().enumerate() {
            if i != k {
                let (ra, rb) = reduce(a, b);
                out.push_eq(ra, rb);
            }
        }
        for (a, b) in &sys.inequalities {
            let (ra, rb) = reduce(a, b);
            out.push_le(ra, rb);
        }
        return out;
    }
    out.equalities = sys.equalities.clone();
    let mut pos: Vec<(Vecr, Rat)> = vec![];
    let mut neg: Vec<(Vecr, Rat)> = vec![];
    for (a, b) in &sys.inequalities {
        match a[var].cmp(&Rat::zero()) {
            std::cmp::Ordering::Greater => pos.push((a.clone(), b.clone())),
            std::cmp::Ordering::Less => neg.push((a.clone(), b.clone())),
            std::cmp::Ordering::Equal => out.push_le(a.clone(), b.clone()),
        }
    }
    for (ap, bp) in &pos {
        for (an, bn) in &neg {
            // Positive multiple of each so the var column cancels.
            let cp = ap[var].clone();
            let mcn = -an[var].clone();
            let a = linalg::add(&linalg::scale(an, &cp), &linalg::scale(ap, &mcn));
            let b = &cp * bn + &mcn * bp;
            out.push_le(a, b);
        }
    }
    dedupe_rows(&mut out);
    out
}

fn dedupe_rows(sys: &mut AffineSystem) {
    let mut seen = BTreeSet::new();
    sys.inequalities.retain(|(a, b)| {
        if linalg::is_zero_vec(a) && !b.is_negative() {
            return false; // trivially true
        }
        let mut key = a.clone();
        key.push(b.clone());
        let prim: Vec<BigInt> = linalg::primitive(&key);
        // Keep orientation: primitive() may flip sign, which changes the
        // meaning of an inequality, so re-orient to the original side.
        let flip = key
            .iter()
            .zip(&prim)
            .find(|(orig, _)| !orig.is_zero())
            .map(|(orig, p)| orig.is_positive() != p.is_positive())
            .unwrap_or(false);
        let prim: Vec<BigInt> = if flip { prim.iter().map(|x| -x).collect() } else { prim };
        seen.insert(prim)
    });
}

/// Project the solution set to the coordinates in `keep` (ascending order),
/// eliminating all others.
pub fn fm_project(sys: &AffineSystem, keep: &[usize]) -> AffineSystem {
    let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
    let mut cur = sys.clone();
    for var in (0..sys.n).rev() {
        if !keep_set.contains(&var) {
            cur = fm_eliminate(&cur, var);
        }
    }
    // Re-index onto the kept coordinates.
    let mut out = AffineSystem::new(keep.len());
    let remap = |a: &Vecr| -> Vecr { keep.iter().map(|&i| a[i].clone()).collect() };
    for (a, b) in &cur.equalities {
        out.push_eq(remap(a), b.clone());
    }
    for (a, b) in &cur.inequalities {
        out.push_le(remap(a), b.clone());
    }
    out
}

/// Does the recession cone of `cell` contain a vector that is zero on
/// `stratum` and strictly positive off it?
fn recession_pattern_exists(cell: &AffineSystem, stratum: &BTreeSet<usize>) -> bool {
    let rec = cell.recession();
    let mut lp = rec.to_lp();
    for i in 0..cell.n {
        let mut row = linalg::zeros(cell.n);
        row[i] = Rat::one();
        if stratum.contains(&i) {
            lp.eq(row, Rat::zero());
        } else {
            // r_i >= 1 (scaling inside a cone makes strict positivity
            // equivalent to >= 1)
            let neg: Vecr = row.iter().map(|x| -x.clone()).collect();
            lp.le(neg, -Rat::one());
        }
    }
    lp::feasible_point(&lp).is_some()
}

/// Closure of a polyhedral complex in tropical projective space,
/// intersected with the stratum of points supported exactly on `stratum`.
/// Each input cell contributes its projection to the stratum coordinates iff
/// its recession cone contains a direction that is zero on the stratum and
/// strictly positive off it.
pub fn closure_in_tropical_projective(
    cells: &[AffineSystem],
    stratum: &BTreeSet<usize>,
) -> Result<Vec<AffineSystem>> {
    if stratum.is_empty() {
        return Err(Error::input("closure stratum must be nonempty"));
    }
    let keep: Vec<usize> = stratum.iter().copied().collect();
    let mut out = Vec::new();
    for cell in cells {
        cell.validate()?;
        if keep.iter().any(|&i| i >= cell.n) {
            return Err(Error::input("stratum index out of range"));
        }
        if lp::feasible_point(&cell.to_lp()).is_none() {
            continue;
        }
        if recession_pattern_exists(cell, stratum) {
            out.push(fm_project(cell, &keep));
        }
    }
    Ok(out)
}

/// Membership of a point (finite coordinates on `stratum`) in the closure of
/// one cell, tested directly by LP instead of via projection.
pub fn closure_contains_point(
    cell: &AffineSystem,
    stratum: &BTreeSet<usize>,
    coords: &BTreeMap<usize, Rat>,
) -> bool {
    if !recession_pattern_exists(cell, stratum) {
        return false;
    }
    // y in cell with y_i = u_i + c on the stratum, c free.
    let mut lp = LinearProgram::new(cell.n + 1);
    let ext = |a: &[Rat], last: Rat| -> Vecr {
        let mut row = a.to_vec();
        row.push(last);
        row
    };
    for (a, b) in &cell.equalities {
        lp.eq(ext(a, Rat::zero()), b.clone());
    }
    for (a, b) in &cell.inequalities {
        lp.le(ext(a, Rat::zero()), b.clone());
    }
    for (&i, u) in coords {
        let mut row = linalg::zeros(cell.n + 1);
        row[i] = Rat::one();
        row[cell.n] = -Rat::one();
        lp.eq(row, u.clone());
    }
    lp::feasible_point(&lp).is_some()
}

/// A rational polyhedral cone: an `AffineSystem` with zero right-hand sides,
/// with its dimension and lineality dimension cached at construction.
#[derive(Clone, Debug)]
pub struct Cone {
    pub system: AffineSystem,
    pub dim: usize,
    pub lineality_dim: usize,
}

impl Cone {
    /// Build from homogeneous equalities/inequalities (rhs must be zero).
    pub fn new(system: AffineSystem) -> Result<Cone> {
        system.validate()?;
        if system
            .equalities
            .iter()
            .chain(&system.inequalities)
            .any(|(_, b)| !b.is_zero())
        {
            return Err(Error::input("cone systems must have zero right-hand sides"));
        }
        let dim = feasible_dim(&system)?.expect("cones contain the origin");
        let lineality_dim = system.n - {
            let rows: Vec<Vecr> = system
                .equalities
                .iter()
                .chain(&system.inequalities)
                .map(|(a, _)| a.clone())
                .collect();
            linalg::rank(&rows)
        };
        Ok(Cone {
            system,
            dim,
            lineality_dim,
        })
    }

    /// Basis of the lineality space (all constraints to equality).
    pub fn lineality_basis(&self) -> Vec<Vecr> {
        let rows: Vec<Vecr> = self
            .system
            .equalities
            .iter()
            .chain(&self.system.inequalities)
            .map(|(a, _)| a.clone())
            .collect();
        linalg::nullspace(&rows, self.system.n)
    }

    /// Canonical form deciding set equality: RREF basis of the span's
    /// annihilator joined with the sorted irredundant facet rows reduced
    /// modulo it.
    pub fn canonical_key(&self) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
        let interior =
            lp::relative_interior(&self.system.to_lp()).expect("cones contain the origin");
        let mut span_rows: Vec<Vecr> =
            self.system.equalities.iter().map(|(a, _)| a.clone()).collect();
        for &i in &interior.implicit_equalities {
            span_rows.push(self.system.inequalities[i].0.clone());
        }
        let pivots = linalg::rref(&mut span_rows);
        let eq_key: Vec<Vec<BigInt>> = span_rows.iter().map(|r| signed_primitive(r)).collect();
        // Facet candidates: non-implicit inequalities reduced modulo the span
        // rows, then filtered for redundancy.
        let implicit: BTreeSet<usize> = interior.implicit_equalities.iter().copied().collect();
        let mut facets: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        let mut reduced: Vec<(usize, Vecr)> = Vec::new();
        for (i, (a, _)) in self.system.inequalities.iter().enumerate() {
            if implicit.contains(&i) {
                continue;
            }
            let mut row = a.clone();
            for (r, &p) in span_rows.iter().zip(&pivots) {
                if !row[p].is_zero() {
                    let f = row[p].clone();
                    row = linalg::sub(&row, &linalg::scale(r, &f));
                }
            }
            if !linalg::is_zero_vec(&row) {
                reduced.push((i, row));
            }
        }
        for (i, row) in &reduced {
            if !self.facet_redundant(*i) {
                facets.insert(signed_primitive(row));
            }
        }
        (eq_key, facets.into_iter().collect())
    }

    fn facet_redundant(&self, skip: usize) -> bool {
        // Redundant iff dropping it cannot open up points violating it.
        let mut lp = LinearProgram::new(self.system.n);
        for (a, b) in &self.system.equalities {
            lp.eq(a.clone(), b.clone());
        }
        for (i, (a, b)) in self.system.inequalities.iter().enumerate() {
            if i != skip {
                lp.le(a.clone(), b.clone());
            }
        }
        // Violating point: a·x >= 1.
        let (a, _) = &self.system.inequalities[skip];
        let neg: Vecr = a.iter().map(|x| -x.clone()).collect();
        lp.le(neg, -Rat::one());
        lp::feasible_point(&lp).is_none()
    }
}

/// Primitive integer form preserving orientation.
fn signed_primitive(v: &[Rat]) -> Vec<BigInt> {
    let prim = linalg::primitive(v);
    let flip = v
        .iter()
        .zip(&prim)
        .find(|(orig, _)| !orig.is_zero())
        .map(|(orig, p)| orig.is_positive() != p.is_positive())
        .unwrap_or(false);
    if flip {
        prim.iter().map(|x| -x).collect()
    } else {
        prim
    }
}

/// A polyhedral fan reported modulo its lineality space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub ambient_dim: usize,
    /// Dimension of the largest cone (the affine cone dimension).
    pub dim: usize,
    pub lineality_dim: usize,
    /// Cell counts for dimensions `lineality_dim + 1 ..= dim`.
    pub f_vector: Vec<usize>,
    /// Canonical primitive generators of the rays modulo lineality, sorted.
    pub rays: Vec<Vec<BigInt>>,
    /// Cell counts for every occurring dimension, including the lineality
    /// cell itself.
    pub cells_by_dim: BTreeMap<usize, usize>,
}

/// A cone together with a relative interior point, the unit the fan
/// assembler works with.
#[derive(Clone, Debug)]
pub struct FanCell {
    pub cone: Cone,
    pub interior_point: Vecr,
}

impl Fan {
    /// Assemble from cells that are already pairwise distinct and closed
    /// under the face relation (the prevariety engine hands in exactly
    /// this).
    pub fn from_cells(ambient_dim: usize, cells: &[FanCell]) -> Result<Fan> {
        if cells.is_empty() {
            return Err(Error::input("cannot assemble an empty fan"));
        }
        let lineality_dim = cells.iter().map(|c| c.cone.lineality_dim).min().unwrap();
        let lin_cell = cells
            .iter()
            .find(|c| c.cone.dim == lineality_dim)
            .ok_or_else(|| Error::internal("fan missing its lineality cell"))?;
        let lin_basis = lin_cell.cone.lineality_basis();
        for c in cells {
            if c.cone.system.n != ambient_dim {
                return Err(Error::input("inconsistent ambient dimension across cones"));
            }
            if c.cone.lineality_dim != lineality_dim {
                return Err(Error::input("inconsistent lineality across cones"));
            }
        }
        let mut cells_by_dim: BTreeMap<usize, usize> = BTreeMap::new();
        for c in cells {
            *cells_by_dim.entry(c.cone.dim).or_insert(0) += 1;
        }
        let dim = *cells_by_dim.keys().max().unwrap();
        let f_vector: Vec<usize> = (lineality_dim + 1..=dim)
            .map(|d| cells_by_dim.get(&d).copied().unwrap_or(0))
            .collect();
        // signed_primitive keeps the true direction of each ray; collapsing
        // opposite rays to one string would miscount line-like fans.
        let mut rays: Vec<Vec<BigInt>> = cells
            .iter()
            .filter(|c| c.cone.dim == lineality_dim + 1)
            .map(|c| {
                let proj = linalg::project_mod_subspace(&c.interior_point, &lin_basis);
                signed_primitive(&proj)
            })
            .collect();
        rays.sort();
        rays.dedup();
        Ok(Fan {
            ambient_dim,
            dim,
            lineality_dim,
            f_vector,
            rays,
            cells_by_dim,
        })
    }
}

/// Deduplicate raw cones by canonical form, close under the face relation,
/// and assemble the fan.
pub fn assemble_fan(cones: &[Cone]) -> Result<Fan> {
    if cones.is_empty() {
        return Err(Error::input("cannot assemble an empty fan"));
    }
    let ambient = cones[0].system.n;
    let lin: Vec<Vec<Vec<BigInt>>> = cones
        .iter()
        .map(|c| {
            let mut rows: Vec<Vecr> = c.lineality_basis();
            linalg::rref(&mut rows);
            rows.iter().map(|r| signed_primitive(r)).collect()
        })
        .collect();
    if lin.iter().any(|l| *l != lin[0]) {
        return Err(Error::input("inconsistent lineality across cones"));
    }
    let mut seen: BTreeMap<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>), FanCell> = BTreeMap::new();
    let mut queue: Vec<Cone> = cones.to_vec();
    while let Some(cone) = queue.pop() {
        if cone.system.n != ambient {
            return Err(Error::input("inconsistent ambient dimension across cones"));
        }
        let key = cone.canonical_key();
        if seen.contains_key(&key) {
            continue;
        }
        let interior = lp::relative_interior(&cone.system.to_lp())
            .expect("cones contain the origin");
        let n_ineq = cone.system.inequalities.len();
        seen.insert(
            key,
            FanCell {
                cone: cone.clone(),
                interior_point: interior.point,
            },
        );
        // Faces: tighten one inequality at a time.
        for i in 0..n_ineq {
            let mut sys = cone.system.clone();
            let (a, b) = sys.inequalities.remove(i);
            sys.push_eq(a, b);
            queue.push(Cone::new(sys)?);
        }
    }
    let cells: Vec<FanCell> = seen.into_values().collect();
    Fan::from_cells(ambient, &cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trop::rint;

    fn v(xs: &[i64]) -> Vecr {
        xs.iter().map(|&x| rint(x)).collect()
    }

    #[test]
    fn feasible_dim_examples() {
        // {x >= 0, -x >= 0} is the origin.
        let mut s = AffineSystem::new(1);
        s.push_le(v(&[-1]), rint(0));
        s.push_le(v(&[1]), rint(0));
        assert_eq!(feasible_dim(&s).unwrap(), Some(0));

        // {x >= 1, x <= 0} is empty.
        let mut s = AffineSystem::new(1);
        s.push_le(v(&[-1]), rint(-1));
        s.push_le(v(&[1]), rint(0));
        assert_eq!(feasible_dim(&s).unwrap(), None);

        // The Dr(2;4) cone "terms 1 = 2 <= 3" in R^6 with coordinates
        // (p12, p13, p14, p23, p24, p34): p12+p34 = p13+p24 <= p14+p23.
        let mut s = AffineSystem::new(6);
        s.push_eq(v(&[1, -1, 0, 0, -1, 1]), rint(0));
        s.push_le(v(&[1, 0, -1, -1, 0, 1]), rint(0));
        assert_eq!(feasible_dim(&s).unwrap(), Some(5));
    }

    #[test]
    fn malformed_rows_rejected() {
        let mut s = AffineSystem::new(2);
        s.push_le(v(&[1]), rint(0));
        assert!(feasible_dim(&s).is_err());
    }

    #[test]
    fn projection_of_a_simplex() {
        // x, y >= 0, x + y <= 1 projected to x gives 0 <= x <= 1.
        let mut s = AffineSystem::new(2);
        s.push_le(v(&[-1, 0]), rint(0));
        s.push_le(v(&[0, -1]), rint(0));
        s.push_le(v(&[1, 1]), rint(1));
        let p = fm_project(&s, &[0]);
        assert_eq!(feasible_dim(&p).unwrap(), Some(1));
        assert!(p.contains(&v(&[0])));
        assert!(p.contains(&v(&[1])));
        assert!(!p.contains(&v(&[2])));
    }

    #[test]
    fn closure_examples() {
        // A single point has trivial recession: closure only in its own
        // stratum when S = [n].
        let mut pt = AffineSystem::new(2);
        pt.push_eq(v(&[1, 0]), rint(3));
        pt.push_eq(v(&[0, 1]), rint(5));
        let full: BTreeSet<usize> = [0, 1].into_iter().collect();
        let one: BTreeSet<usize> = [0].into_iter().collect();
        assert_eq!(
            closure_in_tropical_projective(&[pt.clone()], &full)
                .unwrap()
                .len(),
            1
        );
        assert!(closure_in_tropical_projective(&[pt.clone()], &one)
            .unwrap()
            .is_empty());

        // Ray p + t e_2: closes into the stratum {1}.
        let mut ray = AffineSystem::new(2);
        ray.push_eq(v(&[1, 0]), rint(3));
        ray.push_le(v(&[0, -1]), rint(-5)); // y >= 5
        let c = closure_in_tropical_projective(&[ray], &one).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].contains(&v(&[3])));
        assert!(!c[0].contains(&v(&[4])));
    }

    #[test]
    fn assemble_three_sectors() {
        // The fan with rays (1,0), (0,1), (-1,-1) and the three sectors
        // between them.
        let mk = |a: Vecr, b: Vecr| -> Cone {
            let mut s = AffineSystem::new(2);
            s.push_le(a, rint(0));
            s.push_le(b, rint(0));
            Cone::new(s).unwrap()
        };
        let c1 = mk(v(&[-1, 0]), v(&[0, -1])); // x,y >= 0
        let c2 = mk(v(&[1, 0]), v(&[1, -1])); // x <= 0, x <= y
        let c3 = mk(v(&[0, 1]), v(&[-1, 1])); // y <= 0, y <= x
        let fan = assemble_fan(&[c1, c2, c3]).unwrap();
        assert_eq!(fan.lineality_dim, 0);
        assert_eq!(fan.dim, 2);
        assert_eq!(fan.f_vector, vec![3, 3]);
        assert_eq!(fan.cells_by_dim.get(&0), Some(&1));
        let rays: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(-1), BigInt::from(-1)],
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(fan.rays, rays);
    }

    #[test]
    fn assemble_lineality_only() {
        let mut s = AffineSystem::new(3);
        s.push_eq(v(&[1, 1, 1]), rint(0));
        let fan = assemble_fan(&[Cone::new(s).unwrap()]).unwrap();
        assert_eq!(fan.lineality_dim, 2);
        assert_eq!(fan.dim, 2);
        assert!(fan.f_vector.is_empty());
        assert_eq!(fan.cells_by_dim.get(&2), Some(&1));
        assert!(fan.rays.is_empty());
    }
}
