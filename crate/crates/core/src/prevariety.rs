//! Tropical prevariety fan engine: Grassmann-Plücker and incidence-Plücker
//! relation systems, membership testing with the infinite-monomial
//! convention, restriction to matroid strata, and exact enumeration of the
//! argmin-type cell structure as a polyhedral fan.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::{self, Vecr};
use crate::lp::{self, LinearProgram};
use crate::matroid::{k_subsets, subset_card, subset_elements, Subset};
use crate::polyhedral::{AffineSystem, Cone, Fan, FanCell};
use crate::trop::{min_achieved_twice, Finite, Infinity, Rat, TropRat};
use crate::valuated::gp_index_triples;
use crate::Result;

/// A term of a tropical polynomial: a rational coefficient and a sparse
/// exponent list (variable indices, repeated with multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Term {
    pub coeff: Rat,
    pub vars: Vec<usize>,
}

/// A tropical polynomial over the flattened variable set of a
/// `RelationSystem`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropPolynomial {
    pub terms: Vec<Term>,
}

/// One variable block: the coordinates indexed by the declared r-subsets of
/// the ground set.
#[derive(Clone, Debug)]
pub struct Block {
    pub rank: usize,
    pub subsets: Vec<Subset>,
    pub offset: usize,
}

impl Block {
    pub fn var(&self, s: Subset) -> Option<usize> {
        self.subsets.binary_search(&s).ok().map(|i| self.offset + i)
    }
}

/// Grassmann-Plücker and incidence-Plücker relations for a rank sequence on
/// a common ground set.
#[derive(Clone, Debug)]
pub struct RelationSystem {
    pub n_ground: usize,
    pub blocks: Vec<Block>,
    pub n_vars: usize,
    pub polys: Vec<TropPolynomial>,
}

impl RelationSystem {
    pub fn block_of(&self, var: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| var >= b.offset && var < b.offset + b.subsets.len())
            .expect("variable in range")
    }
}

/// Generate all tropical Grassmann-Plücker relations (per rank) and
/// incidence-Plücker relations (per rank pair), deduplicated by term sets.
pub fn generate_relations(ranks: &[usize], n: usize) -> Result<RelationSystem> {
    if ranks.is_empty() {
        return Err(Error::input("need at least one rank"));
    }
    if ranks.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::input("ranks must weakly increase"));
    }
    if *ranks.last().unwrap() > n {
        return Err(Error::input("rank exceeds ground set size"));
    }
    let mut blocks = Vec::new();
    let mut offset = 0;
    for &r in ranks {
        let mut subsets = k_subsets(n, r);
        subsets.sort_unstable();
        blocks.push(Block {
            rank: r,
            subsets: subsets.clone(),
            offset,
        });
        offset += subsets.len();
    }
    let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    let mut polys = Vec::new();
    let mut push = |terms: Vec<Term>| {
        let mut key: Vec<Vec<usize>> = terms.iter().map(|t| t.vars.clone()).collect();
        key.sort();
        key.dedup();
        if seen.insert(key) {
            polys.push(TropPolynomial { terms });
        }
    };
    // Grassmann-Plücker per block.
    for b in &blocks {
        for (i_set, j_set, i) in gp_index_triples(n, b.rank) {
            let mut terms = vec![Term {
                coeff: Rat::zero(),
                vars: sorted2(b.var(i_set).unwrap(), b.var(j_set).unwrap()),
            }];
            for j in subset_elements(j_set & !i_set) {
                let c1 = (i_set & !(1 << i)) | (1 << j);
                let c2 = (j_set & !(1 << j)) | (1 << i);
                terms.push(Term {
                    coeff: Rat::zero(),
                    vars: sorted2(b.var(c1).unwrap(), b.var(c2).unwrap()),
                });
            }
            push(dedup_terms(terms));
        }
    }
    // Incidence-Plücker per pair of blocks.
    for bi in 0..blocks.len() {
        for bj in bi + 1..blocks.len() {
            let (low, high) = (&blocks[bi], &blocks[bj]);
            let (r, s) = (low.rank, high.rank);
            if r == 0 || s + 1 > n {
                continue;
            }
            for i_prime in k_subsets(n, r - 1) {
                for j_prime in k_subsets(n, s + 1) {
                    let mut terms = Vec::new();
                    for j in subset_elements(j_prime & !i_prime) {
                        terms.push(Term {
                            coeff: Rat::zero(),
                            vars: sorted2(
                                low.var(i_prime | (1 << j)).unwrap(),
                                high.var(j_prime & !(1 << j)).unwrap(),
                            ),
                        });
                    }
                    if terms.len() >= 2 {
                        push(dedup_terms(terms));
                    }
                }
            }
        }
    }
    Ok(RelationSystem {
        n_ground: n,
        blocks,
        n_vars: offset,
        polys,
    })
}

fn sorted2(a: usize, b: usize) -> Vec<usize> {
    if a <= b {
        vec![a, b]
    } else {
        vec![b, a]
    }
}

fn dedup_terms(terms: Vec<Term>) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    for t in terms {
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// Result of restricting a system to per-block supports.
#[derive(Clone, Debug)]
pub enum Restriction {
    System(RelationSystem),
    /// A relation survived with exactly one term: no point of the stratum
    /// torus satisfies it.
    Infeasible { relation: String },
}

/// Drop every term touching a coordinate outside the declared supports;
/// relations reduced to zero terms vanish, a relation reduced to exactly
/// one term makes the stratum infeasible.
pub fn restrict_to_stratum(sys: &RelationSystem, supports: &[Vec<Subset>]) -> Result<Restriction> {
    if supports.len() != sys.blocks.len() {
        return Err(Error::input("one support per block required"));
    }
    let mut blocks = Vec::new();
    let mut offset = 0;
    for (b, sup) in sys.blocks.iter().zip(supports) {
        if sup.is_empty() {
            return Err(Error::input("empty block support"));
        }
        let mut subsets = sup.clone();
        subsets.sort_unstable();
        subsets.dedup();
        for &s in &subsets {
            if subset_card(s) != b.rank || b.var(s).is_none() {
                return Err(Error::input(
                    "support subset is not a coordinate of the block",
                ));
            }
        }
        blocks.push(Block {
            rank: b.rank,
            subsets: subsets.clone(),
            offset,
        });
        offset += subsets.len();
    }
    // Old variable -> new variable.
    let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
    for (old_b, new_b) in sys.blocks.iter().zip(&blocks) {
        for (i, &s) in new_b.subsets.iter().enumerate() {
            let old = old_b.var(s).unwrap();
            remap.insert(old, new_b.offset + i);
        }
    }
    let mut polys = Vec::new();
    let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for p in &sys.polys {
        let mut terms = Vec::new();
        for t in &p.terms {
            if let Some(vars) = t
                .vars
                .iter()
                .map(|v| remap.get(v).copied())
                .collect::<Option<Vec<usize>>>()
            {
                terms.push(Term {
                    coeff: t.coeff.clone(),
                    vars,
                });
            }
        }
        match terms.len() {
            0 => {}
            1 => {
                return Ok(Restriction::Infeasible {
                    relation: format!("{:?}", p.terms),
                })
            }
            _ => {
                let mut key: Vec<Vec<usize>> = terms.iter().map(|t| t.vars.clone()).collect();
                key.sort();
                key.dedup();
                if seen.insert(key) {
                    polys.push(TropPolynomial { terms });
                }
            }
        }
    }
    Ok(Restriction::System(RelationSystem {
        n_ground: sys.n_ground,
        blocks,
        n_vars: offset,
        polys,
    }))
}

/// Evaluate membership of a point (one tropical value per variable, absent
/// = ∞) in the prevariety: each polynomial's minimum must be achieved at
/// least twice, an all-infinite term list counting as achieved twice.
pub fn member(sys: &RelationSystem, point: &[BTreeMap<Subset, Rat>]) -> Result<bool> {
    if point.len() != sys.blocks.len() {
        return Err(Error::input("one coordinate map per block required"));
    }
    let mut coords: Vec<TropRat> = vec![Infinity; sys.n_vars];
    for (b, vals) in sys.blocks.iter().zip(point) {
        for (&s, v) in vals {
            match b.var(s) {
                Some(i) => coords[i] = Finite(v.clone()),
                None => return Err(Error::input("coordinate outside the block support")),
            }
        }
    }
    for p in &sys.polys {
        let terms: Vec<TropRat> = p
            .terms
            .iter()
            .map(|t| {
                let mut acc = Finite(t.coeff.clone());
                for &v in &t.vars {
                    acc = acc.times(&coords[v]);
                }
                acc
            })
            .collect();
        if !min_achieved_twice(&terms)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One canonical cell of the prevariety fan: the closed region where each
/// polynomial's argmin is exactly the recorded term set.
#[derive(Clone, Debug)]
pub struct PrevarietyCell {
    /// Argmin term indices per polynomial.
    pub argmin: Vec<BTreeSet<usize>>,
    pub dim: usize,
    pub interior_point: Vecr,
    pub system: AffineSystem,
}

/// The computed fan with its cells.
#[derive(Clone, Debug)]
pub struct PrevarietyFan {
    pub fan: Fan,
    pub cells: Vec<PrevarietyCell>,
}

struct DfsNode {
    level: usize,
    ties: Vec<Vecr>,       // RREF rows over n_vars
    pivots: Vec<usize>,    // pivot columns of `ties`
    strict: Vec<Vecr>,     // reduced, deduped strict-positive forms
    witness: Vecr,         // point with ties = 0 and strict >= 1
    argmin: Vec<BTreeSet<usize>>,
}

/// Enumerate the cells of the prevariety as exact argmin types
/// (depth-first over polynomials, strict feasibility checked exactly) and
/// assemble the fan modulo the common lineality space.
pub fn prevariety_fan(sys: &RelationSystem) -> Result<PrevarietyFan> {
    if sys.polys.iter().any(|p| p.terms.len() < 2) {
        return Err(Error::input(
            "a relation with fewer than two terms makes the prevariety empty",
        ));
    }
    if sys
        .polys
        .iter()
        .any(|p| p.terms.iter().any(|t| !t.coeff.is_zero()))
    {
        return Err(Error::input(
            "fan computation requires coefficient-free relations",
        ));
    }
    let n = sys.n_vars;
    // Polynomials sorted by ascending term count; mixed-block relations
    // first within equal counts so the blocks couple early.
    let mut order: Vec<usize> = (0..sys.polys.len()).collect();
    let poly_span = |p: &TropPolynomial| -> usize {
        let blocks: BTreeSet<usize> = p
            .terms
            .iter()
            .flat_map(|t| t.vars.iter().map(|&v| sys.block_of(v)))
            .collect();
        blocks.len()
    };
    order.sort_by_key(|&i| {
        (
            sys.polys[i].terms.len(),
            std::cmp::Reverse(poly_span(&sys.polys[i])),
            i,
        )
    });
    let polys: Vec<&TropPolynomial> = order.iter().map(|&i| &sys.polys[i]).collect();
    // Term forms: dense vectors over the variables.
    let forms: Vec<Vec<Vecr>> = polys
        .iter()
        .map(|p| {
            p.terms
                .iter()
                .map(|t| {
                    let mut f = linalg::zeros(n);
                    for &v in &t.vars {
                        f[v] += Rat::one();
                    }
                    f
                })
                .collect()
        })
        .collect();

    let mut cells: Vec<PrevarietyCell> = Vec::new();
    let mut stack = vec![DfsNode {
        level: 0,
        ties: vec![],
        pivots: vec![],
        strict: vec![],
        witness: linalg::zeros(n),
        argmin: vec![],
    }];
    while let Some(node) = stack.pop() {
        if node.level == polys.len() {
            cells.push(finish_cell(sys, &order, node, n));
            continue;
        }
        let pforms = &forms[node.level];
        // Reduce the term forms modulo the ties and group equal ones.
        let reduced: Vec<Vecr> = pforms
            .iter()
            .map(|f| reduce(f, &node.ties, &node.pivots))
            .collect();
        let mut groups: Vec<(Vecr, Vec<usize>)> = Vec::new();
        for (t, rf) in reduced.iter().enumerate() {
            match groups.iter_mut().find(|(g, _)| g == rf) {
                Some((_, members)) => members.push(t),
                None => groups.push((rf.clone(), vec![t])),
            }
        }
        let g = groups.len();
        // The free child: the argmin of the parent witness extends it
        // without an LP.
        let witness_vals: Vec<Rat> = groups
            .iter()
            .map(|(f, _)| linalg::dot(f, &node.witness))
            .collect();
        let wmin = witness_vals.iter().min().unwrap().clone();
        let free_choice: u64 = witness_vals
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == wmin)
            .fold(0u64, |m, (i, _)| m | (1 << i));
        for choice in 1u64..(1 << g) {
            let term_count: usize = (0..g)
                .filter(|&k| choice & (1 << k) != 0)
                .map(|k| groups[k].1.len())
                .sum();
            if term_count < 2 {
                continue;
            }
            let chosen: Vec<usize> = (0..g).filter(|&k| choice & (1 << k) != 0).collect();
            let rep = chosen[0];
            // New tie equations.
            let mut ties = node.ties.clone();
            let mut pivots = node.pivots.clone();
            let mut consistent_strict = true;
            for &k in &chosen[1..] {
                let eq = linalg::sub(&groups[k].0, &groups[rep].0);
                add_rref_row(&mut ties, &mut pivots, eq);
            }
            // Re-reduce inherited strict forms; any that vanish kill the
            // branch.
            let mut strict: Vec<Vecr> = Vec::new();
            let mut keys: BTreeSet<Vec<num::BigInt>> = BTreeSet::new();
            for f in node.strict.iter() {
                let rf = reduce(f, &ties, &pivots);
                if linalg::is_zero_vec(&rf) {
                    consistent_strict = false;
                    break;
                }
                if keys.insert(signed_primitive_key(&rf)) {
                    strict.push(rf);
                }
            }
            if !consistent_strict {
                continue;
            }
            // New strict forms from the unchosen groups.
            let mut ok = true;
            for k in 0..g {
                if choice & (1 << k) != 0 {
                    continue;
                }
                let f = linalg::sub(&groups[k].0, &groups[rep].0);
                let rf = reduce(&f, &ties, &pivots);
                if linalg::is_zero_vec(&rf) {
                    ok = false;
                    break;
                }
                if keys.insert(signed_primitive_key(&rf)) {
                    strict.push(rf);
                }
            }
            if !ok {
                continue;
            }
            // Feasibility: a point in the tie space with every strict form
            // >= 1 (homogeneity makes strict positivity scalable).
            let witness = if choice == free_choice {
                Some(rescale_witness(&node.witness, &strict))
            } else {
                strict_feasible_point(n, &ties, &pivots, &strict)
            };
            let Some(witness) = witness else { continue };
            let mut argmin = node.argmin.clone();
            argmin.push(
                chosen
                    .iter()
                    .flat_map(|&k| groups[k].1.iter().copied())
                    .collect(),
            );
            stack.push(DfsNode {
                level: node.level + 1,
                ties,
                pivots,
                strict,
                witness,
                argmin,
            });
        }
    }

    // Lineality: everything tied.
    let mut lin_rows: Vec<Vecr> = Vec::new();
    for pf in &forms {
        for f in &pf[1..] {
            lin_rows.push(linalg::sub(f, &pf[0]));
        }
    }
    let lineality_dim = n - linalg::rank(&lin_rows);
    let fan_cells: Vec<FanCell> = cells
        .iter()
        .map(|c| FanCell {
            cone: Cone {
                system: c.system.clone(),
                dim: c.dim,
                lineality_dim,
            },
            interior_point: c.interior_point.clone(),
        })
        .collect();
    let fan = Fan::from_cells(n, &fan_cells)?;
    Ok(PrevarietyFan { fan, cells })
}

fn finish_cell(sys: &RelationSystem, order: &[usize], node: DfsNode, n: usize) -> PrevarietyCell {
    // Closed cell: tie equalities plus "chosen <= others" inequalities.
    let mut system = AffineSystem::new(n);
    for row in &node.ties {
        system.push_eq(row.clone(), Rat::zero());
    }
    for f in &node.strict {
        let neg: Vecr = f.iter().map(|x| -x.clone()).collect();
        system.push_le(neg, Rat::zero());
    }
    let dim = n - node.ties.len();
    // Report argmin sets in the original polynomial order.
    let mut argmin = vec![BTreeSet::new(); sys.polys.len()];
    for (pos, &orig) in order.iter().enumerate() {
        argmin[orig] = node.argmin[pos].clone();
    }
    PrevarietyCell {
        argmin,
        dim,
        interior_point: node.witness,
        system,
    }
}

/// Reduce a linear form modulo RREF rows.
fn reduce(f: &Vecr, ties: &[Vecr], pivots: &[usize]) -> Vecr {
    let mut out = f.clone();
    for (row, &p) in ties.iter().zip(pivots) {
        if !out[p].is_zero() {
            let c = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                *o -= &c * r;
            }
        }
    }
    out
}

/// Add a row to an RREF system, keeping it reduced. No-op if the row is
/// dependent.
fn add_rref_row(ties: &mut Vec<Vecr>, pivots: &mut Vec<usize>, row: Vecr) {
    let mut row = reduce(&row, ties, pivots);
    let Some(p) = row.iter().position(|x| !x.is_zero()) else {
        return;
    };
    let inv = row[p].recip();
    for x in row.iter_mut() {
        *x *= &inv;
    }
    // Eliminate the new pivot from existing rows.
    for r in ties.iter_mut() {
        if !r[p].is_zero() {
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                *x -= &c * y;
            }
        }
    }
    ties.push(row);
    pivots.push(p);
    // Keep rows sorted by pivot for determinism.
    let mut idx: Vec<usize> = (0..ties.len()).collect();
    idx.sort_by_key(|&i| pivots[i]);
    let new_ties: Vec<Vecr> = idx.iter().map(|&i| ties[i].clone()).collect();
    let new_pivots: Vec<usize> = idx.iter().map(|&i| pivots[i]).collect();
    *ties = new_ties;
    *pivots = new_pivots;
}

fn signed_primitive_key(v: &Vecr) -> Vec<num::BigInt> {
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

/// Scale a witness so every strict form is at least one.
fn rescale_witness(witness: &Vecr, strict: &[Vecr]) -> Vecr {
    let mut lambda = Rat::one();
    for f in strict {
        let v = linalg::dot(f, witness);
        debug_assert!(v.is_positive());
        let need = v.recip();
        if need > lambda {
            lambda = need;
        }
    }
    linalg::scale(witness, &lambda)
}

/// A point of the tie space with every strict form at least one, if any.
/// The strict forms are already reduced, so they only involve non-pivot
/// variables; pivot variables are recovered from the ties afterwards.
fn strict_feasible_point(
    n: usize,
    ties: &[Vecr],
    pivots: &[usize],
    strict: &[Vecr],
) -> Option<Vecr> {
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..n).filter(|i| !pivot_set.contains(i)).collect();
    let mut lp = LinearProgram::new(free.len());
    for f in strict {
        let row: Vecr = free.iter().map(|&i| -f[i].clone()).collect();
        lp.le(row, -Rat::one());
    }
    let free_point = lp::feasible_point(&lp)?;
    // Lift to the full space: free coordinates as found, pivots from ties.
    let mut full = linalg::zeros(n);
    for (k, &i) in free.iter().enumerate() {
        full[i] = free_point[k].clone();
    }
    for (row, &p) in ties.iter().zip(pivots) {
        // row has 1 at p: p-coordinate = -sum over free of row * value.
        let mut v = Rat::zero();
        for &i in &free {
            v -= &row[i] * &full[i];
        }
        full[p] = v;
    }
    Some(full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{m4, uniform};
    use crate::trop::rint;

    #[test]
    fn relation_counts() {
        // Dr(2;4): one three-term relation after dedup.
        let sys = generate_relations(&[2], 4).unwrap();
        assert_eq!(sys.polys.len(), 1);
        assert_eq!(sys.polys[0].terms.len(), 3);
        // FlDr(1,3;4): a single four-term incidence relation.
        let sys = generate_relations(&[1, 3], 4).unwrap();
        assert_eq!(sys.polys.len(), 1);
        assert_eq!(sys.polys[0].terms.len(), 4);
        // FlDr(1,2;4): 1 GP + 4 IP.
        let sys = generate_relations(&[1, 2], 4).unwrap();
        assert_eq!(sys.polys.len(), 5);
    }

    #[test]
    fn member_examples() {
        let sys = generate_relations(&[2], 4).unwrap();
        let zeros: BTreeMap<Subset, Rat> = k_subsets(4, 2)
            .into_iter()
            .map(|s| (s, Rat::zero()))
            .collect();
        assert!(member(&sys, &[zeros.clone()]).unwrap());
        let bad: BTreeMap<Subset, Rat> = k_subsets(4, 2)
            .into_iter()
            .zip([0, 1, 0, 1, 0, 0])
            .map(|(s, v)| (s, rint(v)))
            .collect();
        assert!(!member(&sys, &[bad]).unwrap());
    }

    #[test]
    fn dr24_fan() {
        let sys = generate_relations(&[2], 4).unwrap();
        let pf = prevariety_fan(&sys).unwrap();
        assert_eq!(pf.fan.ambient_dim, 6);
        assert_eq!(pf.fan.dim, 5);
        assert_eq!(pf.fan.lineality_dim, 4);
        assert_eq!(pf.fan.f_vector, vec![3]);
        assert_eq!(pf.fan.rays.len(), 3);
        assert_eq!(pf.cells.len(), 4);
    }

    #[test]
    fn fldr13_fan() {
        let sys = generate_relations(&[1, 3], 4).unwrap();
        let pf = prevariety_fan(&sys).unwrap();
        assert_eq!(pf.fan.ambient_dim, 8);
        assert_eq!(pf.fan.dim, 7);
        assert_eq!(pf.fan.lineality_dim, 5);
        assert_eq!(pf.fan.f_vector, vec![4, 6]);
    }

    #[test]
    fn stratum_restriction() {
        let sys = generate_relations(&[2], 4).unwrap();
        // Full support: unchanged.
        match restrict_to_stratum(&sys, &[k_subsets(4, 2)]).unwrap() {
            Restriction::System(s) => assert_eq!(s.polys.len(), 1),
            _ => panic!("full stratum must stay feasible"),
        }
        // Support {12, 34}: the relation drops to a single term.
        let sup = vec![vec![
            crate::matroid::subset_from_slice(&[0, 1]),
            crate::matroid::subset_from_slice(&[2, 3]),
        ]];
        match restrict_to_stratum(&sys, &sup).unwrap() {
            Restriction::Infeasible { .. } => {}
            _ => panic!("expected infeasible stratum"),
        }
    }

    #[test]
    fn m4_stratum_has_relations() {
        let sys = generate_relations(&[2, 3], 6).unwrap();
        let sup = vec![uniform(2, 6).bases().to_vec(), m4().bases().to_vec()];
        match restrict_to_stratum(&sys, &sup).unwrap() {
            Restriction::System(s) => {
                assert_eq!(s.n_vars, 15 + 16);
                assert!(!s.polys.is_empty());
                // The zero point of the stratum is a member.
                let zero2: BTreeMap<Subset, Rat> = uniform(2, 6)
                    .bases()
                    .iter()
                    .map(|&b| (b, Rat::zero()))
                    .collect();
                let zero3: BTreeMap<Subset, Rat> =
                    m4().bases().iter().map(|&b| (b, Rat::zero())).collect();
                assert!(member(&s, &[zero2, zero3]).unwrap());
            }
            _ => panic!("M4 stratum is nonempty"),
        }
    }

    #[test]
    fn member_matches_fan_cells() {
        let sys = generate_relations(&[1, 2], 4).unwrap();
        let pf = prevariety_fan(&sys).unwrap();
        let mut rng = crate::sample::rng(23);
        for _ in 0..40 {
            let mut point: Vecr = Vec::new();
            for _ in 0..sys.n_vars {
                point.push(crate::sample::small_rat(&mut rng));
            }
            let mut maps: Vec<BTreeMap<Subset, Rat>> = Vec::new();
            for b in &sys.blocks {
                maps.push(
                    b.subsets
                        .iter()
                        .enumerate()
                        .map(|(i, &s)| (s, point[b.offset + i].clone()))
                        .collect(),
                );
            }
            let m = member(&sys, &maps).unwrap();
            let in_cell = pf.cells.iter().any(|c| c.system.contains(&point));
            assert_eq!(m, in_cell);
        }
    }
}
