//! Matroids by explicit basis lists on ground sets of size at most 16:
//! axioms, rank, circuits, duality, minors with label maps, quotient tests,
//! flag matroids, and the polytope-level characterizations.

use std::fmt;

use num::Zero;

use crate::error::Error;
use crate::linalg::Vecr;
use crate::polyhedral::hull;
use crate::trop::rint;
use crate::Result;

pub const MAX_GROUND: usize = 16;

/// A subset of the ground set as a bitmask (bit i = element i, 0-based).
pub type Subset = u32;

pub fn subset_from_slice(elements: &[usize]) -> Subset {
    elements.iter().fold(0, |m, &e| m | (1 << e))
}

pub fn subset_elements(s: Subset) -> Vec<usize> {
    (0..MAX_GROUND).filter(|&i| s & (1 << i) != 0).collect()
}

pub fn subset_card(s: Subset) -> usize {
    s.count_ones() as usize
}

/// All subsets of `{0..n-1}` of size `k`, ordered lexicographically by
/// sorted element lists.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    fn rec(n: usize, k: usize, start: usize, cur: Subset, out: &mut Vec<Subset>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for e in start..=(n - k) {
            rec(n, k - 1, e + 1, cur | (1 << e), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, 0, 0, &mut out);
    }
    out
}

/// 1-based display form, e.g. `1,2,4`.
pub fn subset_to_string(s: Subset) -> String {
    let els: Vec<String> = subset_elements(s)
        .iter()
        .map(|e| (e + 1).to_string())
        .collect();
    if els.is_empty() {
        "{}".into()
    } else {
        els.join(",")
    }
}

/// Witness of a basis-exchange failure: no valid `j` exists for
/// `(b1, b2, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub b1: Subset,
    pub b2: Subset,
    pub i: usize,
}

impl fmt::Display for ExchangeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exchange fails for B={{{}}}, B'={{{}}}, i={}",
            subset_to_string(self.b1),
            subset_to_string(self.b2),
            self.i + 1
        )
    }
}

/// A matroid given by ground-set size, rank, and basis family. Immutable
/// after validation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matroid {
    n: usize,
    r: usize,
    bases: Vec<Subset>, // sorted, deduplicated
}

impl Matroid {
    pub fn validate(n: usize, r: usize, bases: &[Subset]) -> Result<Matroid> {
        match Self::build(n, r, bases) {
            Ok(m) => Ok(m),
            Err(msg) => Err(Error::input(format!("not a matroid: {msg}"))),
        }
    }

    /// Like `validate` but exposing the typed exchange witness when the
    /// family fails the axiom.
    pub fn validate_with_witness(
        n: usize,
        r: usize,
        bases: &[Subset],
    ) -> std::result::Result<Matroid, (String, Option<ExchangeViolation>)> {
        match Self::build(n, r, bases) {
            Ok(m) => Ok(m),
            Err(msg) => {
                let mut sorted: Vec<Subset> = bases.to_vec();
                sorted.sort_unstable();
                sorted.dedup();
                Err((msg, exchange_check(&sorted).err()))
            }
        }
    }

    fn build(n: usize, r: usize, bases: &[Subset]) -> std::result::Result<Matroid, String> {
        if n > MAX_GROUND {
            return Err(format!("ground set size {n} exceeds {MAX_GROUND}"));
        }
        if r > n {
            return Err(format!("rank {r} exceeds ground set size {n}"));
        }
        if bases.is_empty() {
            return Err("empty basis family".into());
        }
        let mut sorted: Vec<Subset> = bases.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mask = full_mask(n);
        for &b in &sorted {
            if b & !mask != 0 {
                return Err("basis uses elements outside the ground set".into());
            }
            if subset_card(b) != r {
                return Err(format!(
                    "basis {{{}}} does not have cardinality {r}",
                    subset_to_string(b)
                ));
            }
        }
        if let Err(v) = exchange_check(&sorted) {
            return Err(v.to_string());
        }
        Ok(Matroid {
            n,
            r,
            bases: sorted,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_total(&self) -> usize {
        self.r
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        self.bases.binary_search(&b).is_ok()
    }

    /// rank(S) = max over bases of |B ∩ S|.
    pub fn rank(&self, s: Subset) -> usize {
        self.bases
            .iter()
            .map(|&b| subset_card(b & s))
            .max()
            .unwrap()
    }

    pub fn full_mask(&self) -> Subset {
        full_mask(self.n)
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Subset {
        let union = self.bases.iter().fold(0, |m, &b| m | b);
        self.full_mask() & !union
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Subset {
        self.bases.iter().fold(self.full_mask(), |m, &b| m & b)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops() == 0
    }

    pub fn is_coloopless(&self) -> bool {
        self.coloops() == 0
    }

    /// All minimal dependent sets.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for size in 1..=(self.r + 1).min(self.n) {
            'cand: for s in k_subsets(self.n, size) {
                if self.rank(s) >= subset_card(s) {
                    continue; // independent
                }
                for e in subset_elements(s) {
                    let t = s & !(1 << e);
                    if self.rank(t) < subset_card(t) {
                        continue 'cand; // a smaller dependent set inside
                    }
                }
                out.push(s);
            }
        }
        out
    }

    pub fn dual(&self) -> Matroid {
        let mask = self.full_mask();
        let mut bases: Vec<Subset> = self.bases.iter().map(|&b| mask & !b).collect();
        bases.sort_unstable();
        Matroid {
            n: self.n,
            r: self.n - self.r,
            bases,
        }
    }

    /// Restriction to `S`, relabeled to contiguous indices; the label map
    /// sends new indices to original elements.
    pub fn restrict(&self, s: Subset) -> (Matroid, Vec<usize>) {
        let s = s & self.full_mask();
        let elements = subset_elements(s);
        let rk = self.rank(s);
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .filter(|&&b| subset_card(b & s) == rk)
            .map(|&b| relabel_into(b & s, &elements))
            .collect();
        bases.sort_unstable();
        bases.dedup();
        (
            Matroid {
                n: elements.len(),
                r: rk,
                bases,
            },
            elements,
        )
    }

    /// Contraction by `S` (ground set `[n] ∖ S`), relabeled, with label map.
    pub fn contract(&self, s: Subset) -> (Matroid, Vec<usize>) {
        let s = s & self.full_mask();
        let rest = subset_elements(self.full_mask() & !s);
        let rk = self.rank(s);
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .filter(|&&b| subset_card(b & s) == rk)
            .map(|&b| relabel_into(b & !s, &rest))
            .collect();
        bases.sort_unstable();
        bases.dedup();
        (
            Matroid {
                n: rest.len(),
                r: self.r - rk,
                bases,
            },
            rest,
        )
    }

    /// Base polytope vertices `e_B` as rational vectors.
    pub fn base_points(&self) -> Vec<Vecr> {
        self.bases
            .iter()
            .map(|&b| indicator_vector(b, self.n))
            .collect()
    }

    /// Construct from a family already known to satisfy exchange (used by
    /// internal ops whose output is a matroid by a theorem; debug builds
    /// re-check).
    pub(crate) fn from_checked(n: usize, r: usize, mut bases: Vec<Subset>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(exchange_check(&bases).is_ok());
        Matroid { n, r, bases }
    }
}

pub fn full_mask(n: usize) -> Subset {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn indicator_vector(s: Subset, n: usize) -> Vecr {
    (0..n)
        .map(|i| if s & (1 << i) != 0 { rint(1) } else { rint(0) })
        .collect()
}

fn relabel_into(b: Subset, elements: &[usize]) -> Subset {
    let mut out = 0;
    for (new, &old) in elements.iter().enumerate() {
        if b & (1 << old) != 0 {
            out |= 1 << new;
        }
    }
    out
}

/// Basis exchange over an arbitrary family.
pub fn exchange_check(input: &[Subset]) -> std::result::Result<(), ExchangeViolation> {
    let mut bases = input.to_vec();
    bases.sort_unstable();
    let bases = &bases;
    for &b1 in bases {
        for &b2 in bases {
            let diff = b1 & !b2;
            for i in subset_elements(diff) {
                let found = subset_elements(b2 & !b1).into_iter().any(|j| {
                    let cand = (b1 & !(1 << i)) | (1 << j);
                    bases.binary_search(&cand).is_ok()
                });
                if !found {
                    return Err(ExchangeViolation { b1, b2, i });
                }
            }
        }
    }
    Ok(())
}

/// Uniform matroid U(r, n).
pub fn uniform(r: usize, n: usize) -> Matroid {
    Matroid::from_checked(n, r, k_subsets(n, r))
}

/// The rank-3 matroid on 6 elements with circuit hyperplanes
/// {124, 135, 236, 456} (16 bases).
pub fn m4() -> Matroid {
    let hyperplanes: Vec<Subset> = [
        [0usize, 1, 3].as_slice(),
        &[0, 2, 4],
        &[1, 2, 5],
        &[3, 4, 5],
    ]
    .iter()
    .map(|v| subset_from_slice(v))
    .collect();
    let bases: Vec<Subset> = k_subsets(6, 3)
        .into_iter()
        .filter(|b| !hyperplanes.contains(b))
        .collect();
    Matroid::validate(6, 3, &bases).expect("M4 is a matroid")
}

/// Matroid quotient test `mq ↞ m`: the rank-difference test is the source
/// of truth, the circuit-union characterization a built-in cross-check;
/// disagreement aborts with an internal error.
pub fn is_quotient(mq: &Matroid, m: &Matroid) -> Result<bool> {
    if mq.n() != m.n() {
        return Err(Error::input("quotient test requires a common ground set"));
    }
    let full = m.full_mask();
    let mut rank_ok = true;
    'outer: for b in 0..=full {
        // All subsets a of b.
        let mut a = b;
        loop {
            if mq.rank(b) + m.rank(a) > m.rank(b) + mq.rank(a) {
                rank_ok = false;
                break 'outer;
            }
            if a == 0 {
                break;
            }
            a = (a - 1) & b;
        }
    }
    let mq_circuits = mq.circuits();
    let circuit_ok = m.circuits().into_iter().all(|c| {
        let covered = mq_circuits
            .iter()
            .filter(|&&d| d & !c == 0)
            .fold(0u32, |acc, &d| acc | d);
        covered == c
    });
    if rank_ok != circuit_ok {
        return Err(Error::internal(format!(
            "quotient characterizations disagree: rank test {rank_ok}, circuit test {circuit_ok}"
        )));
    }
    Ok(rank_ok)
}

/// A sequence of matroids on one ground set, each a quotient of every later
/// one, with weakly increasing ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagMatroid {
    constituents: Vec<Matroid>,
}

impl FlagMatroid {
    pub fn validate(constituents: Vec<Matroid>) -> Result<FlagMatroid> {
        if constituents.is_empty() {
            return Err(Error::input("flag matroid needs at least one constituent"));
        }
        let n = constituents[0].n();
        if constituents.iter().any(|m| m.n() != n) {
            return Err(Error::input("constituents on different ground sets"));
        }
        for w in constituents.windows(2) {
            if w[0].rank_total() > w[1].rank_total() {
                return Err(Error::input("constituent ranks must weakly increase"));
            }
        }
        for i in 0..constituents.len() {
            for j in i + 1..constituents.len() {
                if !is_quotient(&constituents[i], &constituents[j])? {
                    return Err(Error::input(format!(
                        "constituent {} is not a quotient of constituent {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(FlagMatroid { constituents })
    }

    pub fn constituents(&self) -> &[Matroid] {
        &self.constituents
    }

    pub fn n(&self) -> usize {
        self.constituents[0].n()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.constituents.iter().map(|m| m.rank_total()).collect()
    }
}

/// Do all edges of `Conv(vertices)` point in root directions `e_i - e_j`?
/// Root-edged polytopes are automatically homogeneous, so inhomogeneous
/// input simply fails the test.
pub fn is_generalized_permutohedron(vertices: &[Vecr]) -> Result<bool> {
    if vertices.is_empty() {
        return Err(Error::input("empty vertex set"));
    }
    for face in hull::face_lattice(vertices) {
        let pts: Vec<Vecr> = face.labels.iter().map(|&i| vertices[i].clone()).collect();
        if hull::affine_dim(&pts) != 1 {
            continue;
        }
        let d = crate::linalg::sub(&pts[1], &pts[0]);
        let prim = crate::linalg::primitive(&d);
        let nonzero: Vec<_> = prim.iter().filter(|x| !x.is_zero()).collect();
        let root = nonzero.len() == 2
            && nonzero
                .iter()
                .all(|x| **x == 1.into() || **x == (-1).into())
            && nonzero[0] != nonzero[1];
        if !root {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generalized permutohedron whose vertices lie in the S_n-orbit of
/// `e_{[r_1]} + ... + e_{[r_k]}`.
pub fn is_flag_base_polytope(vertices: &[Vecr], ranks: &[usize]) -> Result<bool> {
    if !is_generalized_permutohedron(vertices)? {
        return Ok(false);
    }
    let n = vertices[0].len();
    let mut reference = crate::linalg::zeros(n);
    for &r in ranks {
        if r > n {
            return Err(Error::input("rank exceeds ambient dimension"));
        }
        for slot in reference.iter_mut().take(r) {
            *slot += rint(1);
        }
    }
    reference.sort();
    for i in hull::vertex_labels(vertices) {
        let mut v = vertices[i].clone();
        v.sort();
        if v != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All matroids of rank `r` on `[n]` by exhaustive search over basis
/// families. Tiny parameters only; exhaustive test suites use it.
pub fn all_matroids(n: usize, r: usize) -> Vec<Matroid> {
    let all = k_subsets(n, r);
    assert!(all.len() <= 20, "exhaustive matroid search too large");
    let mut out = Vec::new();
    for mask in 1u64..(1 << all.len()) {
        let family: Vec<Subset> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &b)| b)
            .collect();
        let mut family = family;
        family.sort_unstable();
        if exchange_check(&family).is_ok() {
            out.push(Matroid {
                n,
                r,
                bases: family,
            });
        }
    }
    out
}
