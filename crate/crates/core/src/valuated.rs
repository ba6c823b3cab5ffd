//! Plücker vectors and valuated matroids: the exchange axiom with its
//! Grassmann-Plücker cross-check, valuated circuits and cocircuits, duality,
//! minors via face splitting, face matroids at projective points, and the
//! five equivalent membership tests for projective tropical linear spaces.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::error::Error;
use crate::linalg;
use crate::matroid::{
    self, k_subsets, subset_card, subset_elements, subset_to_string, Matroid, Subset,
};
use crate::polyhedral::{self, lower_hull, AffineSystem};
use crate::trop::{min_achieved_twice, Finite, Infinity, ProjPoint, Rat, TropRat, TropVector};
use crate::Result;

/// A map from r-subsets of `[n]` to tropical rationals, not identically
/// infinite. Subsets absent from `values` are infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerVector {
    n: usize,
    r: usize,
    values: BTreeMap<Subset, Rat>,
}

impl PlueckerVector {
    pub fn new(n: usize, r: usize, values: BTreeMap<Subset, Rat>) -> Result<Self> {
        if n > matroid::MAX_GROUND {
            return Err(Error::input(format!(
                "ground set size {n} exceeds {}",
                matroid::MAX_GROUND
            )));
        }
        if r > n {
            return Err(Error::input(format!("rank {r} exceeds ground size {n}")));
        }
        if values.is_empty() {
            return Err(Error::input("Plücker vector must have nonempty support"));
        }
        let mask = matroid::full_mask(n);
        for &s in values.keys() {
            if s & !mask != 0 || subset_card(s) != r {
                return Err(Error::input(format!(
                    "key {{{}}} is not an {r}-subset of the ground set",
                    subset_to_string(s)
                )));
            }
        }
        Ok(PlueckerVector { n, r, values })
    }

    /// All-zero values on the bases of `m`.
    pub fn zero_on(m: &Matroid) -> Self {
        PlueckerVector {
            n: m.n(),
            r: m.rank_total(),
            values: m.bases().iter().map(|&b| (b, Rat::zero())).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn value(&self, s: Subset) -> TropRat {
        match self.values.get(&s) {
            Some(r) => Finite(r.clone()),
            None => Infinity,
        }
    }

    pub fn finite_value(&self, s: Subset) -> Option<&Rat> {
        self.values.get(&s)
    }

    pub fn support(&self) -> Vec<Subset> {
        self.values.keys().copied().collect()
    }

    pub fn entries(&self) -> &BTreeMap<Subset, Rat> {
        &self.values
    }

    /// Add a constant to every finite value.
    pub fn shift(&self, c: &Rat) -> Self {
        PlueckerVector {
            n: self.n,
            r: self.r,
            values: self.values.iter().map(|(&s, v)| (s, v + c)).collect(),
        }
    }

    /// Normalize so the minimum value is zero.
    pub fn min_normalized(&self) -> Self {
        let min = self.values.values().min().unwrap().clone();
        self.shift(&-min)
    }

    /// Projective equality: equal after min-normalization.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.n == other.n
            && self.r == other.r
            && self.min_normalized().values == other.min_normalized().values
    }
}

/// A Plücker vector satisfying the valuated exchange axiom, with its
/// underlying matroid (the support).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuatedMatroid {
    pluecker: PlueckerVector,
    underlying: Matroid,
}

/// Witness that a Plücker vector fails the valuated exchange axiom.
#[derive(Clone, Debug)]
pub struct ValuationViolation {
    pub b1: Subset,
    pub b2: Subset,
    pub i: usize,
}

impl std::fmt::Display for ValuationViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "valuated exchange fails for B={{{}}}, B'={{{}}}, i={}",
            subset_to_string(self.b1),
            subset_to_string(self.b2),
            self.i + 1
        )
    }
}

/// The valuated exchange axiom over support pairs; returns the first
/// violating triple.
fn valuated_exchange(p: &PlueckerVector) -> std::result::Result<(), ValuationViolation> {
    let support = p.support();
    for &b1 in &support {
        for &b2 in &support {
            for i in subset_elements(b1 & !b2) {
                let lhs = p.value(b1).times(&p.value(b2));
                let ok = subset_elements(b2 & !b1).into_iter().any(|j| {
                    let c1 = (b1 & !(1 << i)) | (1 << j);
                    let c2 = (b2 & !(1 << j)) | (1 << i);
                    let rhs = p.value(c1).times(&p.value(c2));
                    rhs.cmp_trop(&lhs) != std::cmp::Ordering::Greater
                });
                if !ok {
                    return Err(ValuationViolation { b1, b2, i });
                }
            }
        }
    }
    Ok(())
}

/// Index triples (I, J, i) of the tropical Grassmann-Plücker relations:
/// |I ∩ J| < r - 1 and i ∈ I ∖ J.
pub fn gp_index_triples(n: usize, r: usize) -> Vec<(Subset, Subset, usize)> {
    let mut out = Vec::new();
    let all = k_subsets(n, r);
    for &i_set in &all {
        for &j_set in &all {
            if subset_card(i_set & j_set) + 1 < r {
                for i in subset_elements(i_set & !j_set) {
                    out.push((i_set, j_set, i));
                }
            }
        }
    }
    out
}

/// Evaluate the full tropical Grassmann-Plücker system at `p`.
pub fn satisfies_gp_relations(p: &PlueckerVector) -> bool {
    for (i_set, j_set, i) in gp_index_triples(p.n, p.r) {
        let mut terms = vec![p.value(i_set).times(&p.value(j_set))];
        for j in subset_elements(j_set & !i_set) {
            let c1 = (i_set & !(1 << i)) | (1 << j);
            let c2 = (j_set & !(1 << j)) | (1 << i);
            terms.push(p.value(c1).times(&p.value(c2)));
        }
        if !min_achieved_twice(&terms).expect("nonempty") {
            return false;
        }
    }
    true
}

impl ValuatedMatroid {
    /// Validate the exchange axiom; the Grassmann-Plücker prevariety
    /// membership test runs alongside and must agree.
    pub fn validate(p: PlueckerVector) -> Result<ValuatedMatroid> {
        match Self::validate_with_witness(p) {
            Ok(v) => Ok(v),
            Err(w) => Err(Error::input(format!("not a valuated matroid: {w}"))),
        }
    }

    pub fn validate_with_witness(
        p: PlueckerVector,
    ) -> std::result::Result<ValuatedMatroid, ValuationViolation> {
        let exchange = valuated_exchange(&p);
        let gp = satisfies_gp_relations(&p);
        match (exchange, gp) {
            (Ok(()), true) => {
                let underlying = Matroid::from_checked(p.n, p.r, p.support());
                Ok(ValuatedMatroid {
                    pluecker: p,
                    underlying,
                })
            }
            (Err(w), false) => Err(w),
            (res, gp) => panic!(
                "exchange axiom and GP membership disagree (exchange ok: {}, gp: {gp})",
                res.is_ok()
            ),
        }
    }

    pub fn is_valid(p: &PlueckerVector) -> bool {
        Self::validate_with_witness(p.clone()).is_ok()
    }

    pub fn pluecker(&self) -> &PlueckerVector {
        &self.pluecker
    }

    pub fn underlying(&self) -> &Matroid {
        &self.underlying
    }

    pub fn n(&self) -> usize {
        self.pluecker.n
    }

    pub fn rank(&self) -> usize {
        self.pluecker.r
    }

    pub fn value(&self, s: Subset) -> TropRat {
        self.pluecker.value(s)
    }

    pub fn zero_on(m: &Matroid) -> ValuatedMatroid {
        ValuatedMatroid {
            pluecker: PlueckerVector::zero_on(m),
            underlying: m.clone(),
        }
    }

    /// μ*([n] ∖ I) = μ(I).
    pub fn dual(&self) -> ValuatedMatroid {
        let mask = self.underlying.full_mask();
        let values: BTreeMap<Subset, Rat> = self
            .pluecker
            .values
            .iter()
            .map(|(&s, v)| (mask & !s, v.clone()))
            .collect();
        ValuatedMatroid {
            pluecker: PlueckerVector {
                n: self.n(),
                r: self.n() - self.rank(),
                values,
            },
            underlying: self.underlying.dual(),
        }
    }

    /// Valuated circuits: for each (r+1)-subset S the vector `i ↦ μ(S∖i)`
    /// on S, infinite off S; all-infinite vectors dropped, the rest
    /// deduplicated projectively.
    pub fn circuits(&self) -> Vec<ProjPoint> {
        let mut out: BTreeSet<ProjPoint> = BTreeSet::new();
        for s in k_subsets(self.n(), self.rank() + 1) {
            let coords: Vec<TropRat> = (0..self.n())
                .map(|i| {
                    if s & (1 << i) != 0 {
                        self.value(s & !(1 << i))
                    } else {
                        Infinity
                    }
                })
                .collect();
            let v = TropVector::new(coords);
            if !v.support().is_empty() {
                out.insert(ProjPoint::normalize(&v).unwrap());
            }
        }
        out.into_iter().collect()
    }

    /// Valuated cocircuits: the circuits of the dual; computed directly as
    /// `i ↦ μ(S ∪ i)` over (r-1)-subsets S, which debug builds check
    /// against the dual route.
    pub fn cocircuits(&self) -> Vec<ProjPoint> {
        if self.rank() == 0 {
            return vec![];
        }
        let mut out: BTreeSet<ProjPoint> = BTreeSet::new();
        for s in k_subsets(self.n(), self.rank() - 1) {
            let coords: Vec<TropRat> = (0..self.n())
                .map(|i| {
                    if s & (1 << i) == 0 {
                        self.value(s | (1 << i))
                    } else {
                        Infinity
                    }
                })
                .collect();
            let v = TropVector::new(coords);
            if !v.support().is_empty() {
                out.insert(ProjPoint::normalize(&v).unwrap());
            }
        }
        let out: Vec<ProjPoint> = out.into_iter().collect();
        debug_assert_eq!(out, self.dual().circuits());
        out
    }

    /// The face `Δ_μ^ū` at a projective point: restriction to the support
    /// of `u`, then the weighted argmin. Returns the face matroid on the
    /// relabeled support with the label map.
    pub fn face_matroid(&self, u: &ProjPoint) -> Result<(Matroid, Vec<usize>)> {
        if u.len() != self.n() {
            return Err(Error::input("point length does not match ground set"));
        }
        let supp = matroid::subset_from_slice(&u.support());
        let full = self.underlying.full_mask();
        let (vm, map) = if supp == full {
            (self.clone(), (0..self.n()).collect::<Vec<usize>>())
        } else {
            self.restrict(supp)?
        };
        let uvals: Vec<Rat> = map
            .iter()
            .map(|&orig| u.coords()[orig].as_finite().unwrap().clone())
            .collect();
        let mut best: Option<Rat> = None;
        let mut labels: Vec<Subset> = Vec::new();
        for (&b, v) in vm.pluecker.values.iter() {
            let mut val = v.clone();
            for e in subset_elements(b) {
                val += &uvals[e];
            }
            match &best {
                Some(m) if val > *m => {}
                Some(m) if val == *m => labels.push(b),
                _ => {
                    best = Some(val);
                    labels = vec![b];
                }
            }
        }
        let rank = subset_card(labels[0]);
        let face = Matroid::validate(vm.n(), rank, &labels).map_err(|e| {
            Error::internal(format!("face of a valuated matroid must be a matroid: {e}"))
        })?;
        Ok((face, map))
    }

    /// Restriction μ|_S: the factor on S of the face weight μ^{e_{[n]∖S}},
    /// min-normalized, with the label map.
    pub fn restrict(&self, s: Subset) -> Result<(ValuatedMatroid, Vec<usize>)> {
        Ok(self.split_at(s)?.0)
    }

    /// Contraction μ/_S: the factor on [n]∖S, min-normalized, with the
    /// label map.
    pub fn contract(&self, s: Subset) -> Result<(ValuatedMatroid, Vec<usize>)> {
        Ok(self.split_at(s)?.1)
    }

    /// Split the geometric face μ^{e_{[n]∖S}} as the product μ|_S × μ/_S,
    /// asserting the product identity on every face label.
    #[allow(clippy::type_complexity)]
    fn split_at(
        &self,
        s: Subset,
    ) -> Result<((ValuatedMatroid, Vec<usize>), (ValuatedMatroid, Vec<usize>))> {
        let s = s & self.underlying.full_mask();
        let rk = self.underlying.rank(s);
        // Geometric face: bases meeting S in rank(S) elements.
        let face: Vec<(Subset, &Rat)> = self
            .pluecker
            .values
            .iter()
            .filter(|(&b, _)| subset_card(b & s) == rk)
            .map(|(&b, v)| (b, v))
            .collect();
        let b0 = face[0].0;
        let left_elements = subset_elements(s);
        let right_elements = subset_elements(self.underlying.full_mask() & !s);
        let x0 = b0 & s;
        let y0 = b0 & !s;
        let face_map: BTreeMap<Subset, &Rat> = face.iter().map(|&(b, v)| (b, v)).collect();
        let base_val = face_map[&b0];
        let mut left_vals: BTreeMap<Subset, Rat> = BTreeMap::new();
        let mut right_vals: BTreeMap<Subset, Rat> = BTreeMap::new();
        for &(b, v) in &face {
            let x = b & s;
            let y = b & !s;
            let vx = face_map.get(&(x | y0)).ok_or_else(|| {
                Error::internal("face domain is not a product; invalid valuated matroid?")
            })?;
            let vy = face_map.get(&(x0 | y)).ok_or_else(|| {
                Error::internal("face domain is not a product; invalid valuated matroid?")
            })?;
            if &(&**vx + &**vy - base_val) != v {
                return Err(Error::internal(
                    "face weight does not split as a product; invalid valuated matroid?",
                ));
            }
            left_vals.insert(relabel(x, &left_elements), (*vx).clone());
            right_vals.insert(relabel(y, &right_elements), &**vy - base_val);
        }
        let mk = |n: usize, r: usize, vals: BTreeMap<Subset, Rat>| -> ValuatedMatroid {
            let min = vals.values().min().cloned().unwrap_or_else(Rat::zero);
            let vals: BTreeMap<Subset, Rat> =
                vals.into_iter().map(|(k, v)| (k, v - &min)).collect();
            let support: Vec<Subset> = vals.keys().copied().collect();
            ValuatedMatroid {
                pluecker: PlueckerVector { n, r, values: vals },
                underlying: Matroid::from_checked(n, r, support),
            }
        };
        let left = mk(left_elements.len(), rk, left_vals);
        let right = mk(right_elements.len(), self.rank() - rk, right_vals);
        Ok(((left, left_elements), (right, right_elements)))
    }

    pub fn loops(&self) -> Subset {
        self.underlying.loops()
    }
}

fn relabel(b: Subset, elements: &[usize]) -> Subset {
    let mut out = 0;
    for (new, &old) in elements.iter().enumerate() {
        if b & (1 << old) != 0 {
            out |= 1 << new;
        }
    }
    out
}

/// Membership of an all-finite point in the torus tropical linear space:
/// every valuated circuit achieves its minimum at least twice.
pub fn in_trop_linear_space(vm: &ValuatedMatroid, u: &[Rat]) -> Result<bool> {
    if u.len() != vm.n() {
        return Err(Error::input("point length does not match ground set"));
    }
    for c in vm.circuits() {
        let terms: Vec<TropRat> = c
            .coords()
            .iter()
            .zip(u)
            .map(|(ci, ui)| ci.times(&Finite(ui.clone())))
            .collect();
        if !min_achieved_twice(&terms)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Selector for the five characterizations of projective tropical linear
/// spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TlsMethod {
    /// Contract away the infinite coordinates, then the torus test.
    Contraction,
    /// Valuated-circuit prevariety with the all-infinite convention.
    Circuits,
    /// The face of the dual at `u` is coloopless.
    DualFace,
    /// Min-plus span of the valuated cocircuits via residuation.
    CocircuitSpan,
    /// Closure of the loop-free part, computed polyhedrally.
    Closure,
}

pub const TLS_METHODS: [TlsMethod; 5] = [
    TlsMethod::Contraction,
    TlsMethod::Circuits,
    TlsMethod::DualFace,
    TlsMethod::CocircuitSpan,
    TlsMethod::Closure,
];

/// Membership of a projective point in the projective tropical linear
/// space, by the chosen characterization.
pub fn in_projective_tls(vm: &ValuatedMatroid, u: &ProjPoint, method: TlsMethod) -> Result<bool> {
    if u.len() != vm.n() {
        return Err(Error::input("point length does not match ground set"));
    }
    match method {
        TlsMethod::Contraction => tls_by_contraction(vm, u),
        TlsMethod::Circuits => tls_by_circuits(vm, u),
        TlsMethod::DualFace => tls_by_dual_face(vm, u),
        TlsMethod::CocircuitSpan => tls_by_span(vm, u),
        TlsMethod::Closure => tls_by_closure(vm, u),
    }
}

fn tls_by_contraction(vm: &ValuatedMatroid, u: &ProjPoint) -> Result<bool> {
    let supp = matroid::subset_from_slice(&u.support());
    let full = vm.underlying().full_mask();
    let off = full & !supp;
    let (contracted, map) = if off == 0 {
        (vm.clone(), (0..vm.n()).collect())
    } else {
        vm.contract(off)?
    };
    let finite: Vec<Rat> = map
        .iter()
        .map(|&orig| u.coords()[orig].as_finite().unwrap().clone())
        .collect();
    in_trop_linear_space(&contracted, &finite)
}

fn tls_by_circuits(vm: &ValuatedMatroid, u: &ProjPoint) -> Result<bool> {
    for c in vm.circuits() {
        let terms: Vec<TropRat> = c
            .coords()
            .iter()
            .zip(u.coords())
            .map(|(ci, ui)| ci.times(ui))
            .collect();
        if !min_achieved_twice(&terms)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn tls_by_dual_face(vm: &ValuatedMatroid, u: &ProjPoint) -> Result<bool> {
    let (face, _map) = vm.dual().face_matroid(u)?;
    Ok(face.is_coloopless())
}

fn tls_by_span(vm: &ValuatedMatroid, u: &ProjPoint) -> Result<bool> {
    let cocircuits = vm.cocircuits();
    if cocircuits.is_empty() {
        return Ok(false);
    }
    let n = vm.n();
    // Principal coefficients: a = max over the cocircuit support of
    // u_j - C_j; a cocircuit with a finite entry where u is infinite is
    // unusable.
    let mut combo = TropVector::new(vec![Infinity; n]);
    for c in &cocircuits {
        let mut a: Option<Rat> = None;
        let mut usable = true;
        for (cj, uj) in c.coords().iter().zip(u.coords()) {
            if let Finite(cjf) = cj {
                match uj {
                    Infinity => {
                        usable = false;
                        break;
                    }
                    Finite(ujf) => {
                        let cand = ujf - cjf;
                        if a.as_ref().map_or(true, |cur| cand > *cur) {
                            a = Some(cand);
                        }
                    }
                }
            }
        }
        if usable {
            if let Some(a) = a {
                combo = combo.plus(&c.as_vector().scale(&Finite(a)));
            }
        }
    }
    Ok(combo == u.as_vector())
}

fn tls_by_closure(vm: &ValuatedMatroid, u: &ProjPoint) -> Result<bool> {
    let loops = vm.loops();
    let full = vm.underlying().full_mask();
    if loops == full {
        // Rank zero: the space is empty.
        return Ok(false);
    }
    let supp = matroid::subset_from_slice(&u.support());
    if supp & loops != 0 {
        return Ok(false);
    }
    let (core, map) = if loops == 0 {
        (vm.clone(), (0..vm.n()).collect::<Vec<usize>>())
    } else {
        vm.contract(loops)?
    };
    let cells = trop_cells(&core)?;
    let mut stratum: BTreeSet<usize> = BTreeSet::new();
    let mut coords: BTreeMap<usize, Rat> = BTreeMap::new();
    for (new, &orig) in map.iter().enumerate() {
        if let Finite(r) = &u.coords()[orig] {
            stratum.insert(new);
            coords.insert(new, r.clone());
        }
    }
    for cell in &cells {
        if polyhedral::closure_contains_point(cell, &stratum, &coords) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The torus tropical linear space of a valuated matroid as a finite union
/// of closed polyhedra in R^n: the coloopless cells of the dual complex of
/// μ*.
pub fn trop_cells(vm: &ValuatedMatroid) -> Result<Vec<AffineSystem>> {
    let dual = vm.dual();
    let points = dual.underlying().base_points();
    let lifts: Vec<Rat> = dual
        .underlying()
        .bases()
        .iter()
        .map(|b| dual.pluecker().finite_value(*b).unwrap().clone())
        .collect();
    let faces = lower_hull::lower_hull_faces(&points, &lifts)?;
    let n = vm.n();
    let mut out = Vec::new();
    for f in faces {
        let labels: Vec<Subset> = f
            .labels
            .iter()
            .map(|&i| dual.underlying().bases()[i])
            .collect();
        let inter = labels
            .iter()
            .fold(dual.underlying().full_mask(), |m, &b| m & b);
        if inter != 0 {
            continue; // the face matroid has a coloop
        }
        // Closed dual cell: ties on the face labels, ≤ against the rest.
        let mut sys = AffineSystem::new(n);
        let rep = labels[0];
        let rep_vec = matroid::indicator_vector(rep, n);
        let rep_w = dual.pluecker().finite_value(rep).unwrap();
        for (&b, w) in dual.pluecker().entries() {
            if b == rep {
                continue;
            }
            let row = linalg::sub(&rep_vec, &matroid::indicator_vector(b, n));
            let rhs = w - rep_w;
            if labels.contains(&b) {
                sys.push_eq(row, rhs);
            } else {
                sys.push_le(row, rhs);
            }
        }
        out.push(sys);
    }
    Ok(out)
}

/// Run all five projective membership tests and insist they agree.
pub fn in_projective_tls_all(vm: &ValuatedMatroid, u: &ProjPoint) -> Result<bool> {
    let answers: Vec<bool> = TLS_METHODS
        .iter()
        .map(|&m| in_projective_tls(vm, u, m))
        .collect::<Result<_>>()?;
    if answers.iter().any(|&a| a != answers[0]) {
        return Err(Error::internal(format!(
            "projective tropical linear space methods disagree: {answers:?} at {u}"
        )));
    }
    Ok(answers[0])
}

/// Exact threshold beyond which replacing the infinite coordinates of a
/// projective point by a large finite parameter stabilizes the weighted
/// argmin (used by boundary-compatibility checks).
pub fn boundary_parameter(vm: &ValuatedMatroid) -> Rat {
    let vals: Vec<&Rat> = vm.pluecker().entries().values().collect();
    let wmax = vals.iter().max().cloned().cloned().unwrap_or_else(Rat::zero);
    let wmin = vals.iter().min().cloned().cloned().unwrap_or_else(Rat::zero);
    // Coordinate spread of 0/1 base configurations is at most rank.
    let spread = Rat::from_integer((vm.rank() as i64).into());
    (wmax - wmin + Rat::from_integer(1.into())) * (spread + Rat::from_integer(1.into()))
        + Rat::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{m4, subset_from_slice, uniform};
    use crate::trop::rint;

    fn u24(vals: [i64; 6]) -> PlueckerVector {
        // Order: 12, 13, 14, 23, 24, 34.
        let subsets = k_subsets(4, 2);
        let values: BTreeMap<Subset, Rat> = subsets
            .iter()
            .zip(vals)
            .map(|(&s, v)| (s, rint(v)))
            .collect();
        PlueckerVector::new(4, 2, values).unwrap()
    }

    fn at(coords: &[Option<i64>]) -> ProjPoint {
        ProjPoint::normalize(&TropVector::from_ints(coords)).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(ValuatedMatroid::validate(u24([0, 0, 0, 0, 0, 1])).is_ok());
        assert!(ValuatedMatroid::validate_with_witness(u24([0, 1, 0, 1, 0, 0])).is_err());
        assert!(ValuatedMatroid::validate(PlueckerVector::zero_on(&m4())).is_ok());
    }

    #[test]
    fn circuits_of_small_uniforms() {
        let vm = ValuatedMatroid::zero_on(&uniform(2, 3));
        let c = vm.circuits();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].support(), vec![0, 1, 2]);

        let vm = ValuatedMatroid::zero_on(&uniform(2, 4));
        let c = vm.circuits();
        assert_eq!(c.len(), 4);
        for circ in &c {
            assert_eq!(circ.support().len(), 3);
        }
    }

    #[test]
    fn circuit_values_with_infinite_entry() {
        // n=3, r=2: mu(12)=0, mu(13)=1, mu(23)=inf.
        let mut values = BTreeMap::new();
        values.insert(subset_from_slice(&[0, 1]), rint(0));
        values.insert(subset_from_slice(&[0, 2]), rint(1));
        let p = PlueckerVector::new(3, 2, values).unwrap();
        let vm = ValuatedMatroid::validate(p).unwrap();
        let c = vm.circuits();
        assert_eq!(c.len(), 1);
        // (mu(23), mu(13), mu(12)) = (inf, 1, 0)
        assert_eq!(
            c[0].as_vector(),
            TropVector::new(vec![Infinity, Finite(rint(1)), Finite(rint(0))])
        );
        assert_eq!(
            vm.underlying().circuits(),
            vec![subset_from_slice(&[1, 2])]
        );
    }

    #[test]
    fn dual_involution() {
        let vm = ValuatedMatroid::validate(u24([0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(vm.dual().dual(), vm);
        let z = ValuatedMatroid::zero_on(&uniform(2, 4));
        assert_eq!(z.dual(), z);
        assert_eq!(
            ValuatedMatroid::zero_on(&m4()).dual().underlying(),
            &m4().dual()
        );
        // U(1,2) with values (0,5) dualizes to values (5,0).
        let mut values = BTreeMap::new();
        values.insert(subset_from_slice(&[0]), rint(0));
        values.insert(subset_from_slice(&[1]), rint(5));
        let vm =
            ValuatedMatroid::validate(PlueckerVector::new(2, 1, values).unwrap()).unwrap();
        let d = vm.dual();
        assert_eq!(d.value(subset_from_slice(&[1])), Finite(rint(0)));
        assert_eq!(d.value(subset_from_slice(&[0])), Finite(rint(5)));
    }

    #[test]
    fn face_matroid_examples() {
        let vm = ValuatedMatroid::zero_on(&uniform(2, 4));
        let (f, _) = vm.face_matroid(&at(&[Some(0); 4])).unwrap();
        assert_eq!(f.bases().len(), 6);
        let (f, _) = vm
            .face_matroid(&at(&[Some(0), Some(0), Some(0), Some(1)]))
            .unwrap();
        assert_eq!(f.bases(), uniform(2, 3).bases());
        let (f, map) = vm
            .face_matroid(&at(&[Some(0), Some(0), None, None]))
            .unwrap();
        assert_eq!(map, vec![0, 1]);
        assert_eq!(f.bases(), &[subset_from_slice(&[0, 1])]);
    }

    #[test]
    fn minors_examples() {
        let vm = ValuatedMatroid::zero_on(&uniform(2, 4));
        let (c, map) = vm.contract(subset_from_slice(&[3])).unwrap();
        assert_eq!(c.underlying(), &uniform(1, 3));
        assert_eq!(map, vec![0, 1, 2]);

        let vm = ValuatedMatroid::validate(u24([0, 0, 0, 0, 0, 1])).unwrap();
        let (c, map) = vm.contract(subset_from_slice(&[0])).unwrap();
        assert_eq!(c.underlying(), &uniform(1, 3));
        assert_eq!(map, vec![1, 2, 3]);
        assert!(c.pluecker().entries().values().all(|v| v.is_zero()));

        // Restriction to the whole ground set is min-normalization.
        let base = ValuatedMatroid::zero_on(&uniform(2, 4));
        let shifted = ValuatedMatroid::validate(u24([2, 2, 2, 2, 2, 2])).unwrap();
        let (r, _) = shifted.restrict(shifted.underlying().full_mask()).unwrap();
        assert!(r.pluecker().projectively_equal(base.pluecker()));
    }

    #[test]
    fn trop_membership_examples() {
        let vm = ValuatedMatroid::zero_on(&uniform(2, 3));
        assert!(in_trop_linear_space(&vm, &[rint(0), rint(0), rint(1)]).unwrap());
        assert!(!in_trop_linear_space(&vm, &[rint(0), rint(1), rint(2)]).unwrap());
    }

    #[test]
    fn projective_tls_rank_one() {
        let vm = ValuatedMatroid::zero_on(&uniform(1, 3));
        assert!(in_projective_tls_all(&vm, &at(&[Some(0), Some(0), Some(0)])).unwrap());
        assert!(!in_projective_tls_all(&vm, &at(&[Some(0), Some(0), Some(1)])).unwrap());
    }

    #[test]
    fn loops_force_infinite_coordinates() {
        // Rank-1 matroid on 3 elements with loops 2,3.
        let mut values = BTreeMap::new();
        values.insert(subset_from_slice(&[0]), rint(0));
        let vm = ValuatedMatroid::validate(PlueckerVector::new(3, 1, values).unwrap()).unwrap();
        assert!(!in_projective_tls_all(&vm, &at(&[Some(0), Some(0), None])).unwrap());
        assert!(in_projective_tls_all(&vm, &at(&[Some(0), None, None])).unwrap());
    }

    #[test]
    fn u24_projective_membership() {
        let vm = ValuatedMatroid::zero_on(&uniform(2, 4));
        assert!(in_projective_tls_all(&vm, &at(&[Some(0), Some(0), Some(0), None])).unwrap());
        assert!(in_projective_tls_all(&vm, &at(&[Some(0); 4])).unwrap());
        assert!(!in_projective_tls_all(&vm, &at(&[Some(0), Some(1), Some(2), None])).unwrap());
    }
}
