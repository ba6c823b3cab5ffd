//! Weighted point configurations, Minkowski sums, regular subdivisions via
//! lower hulls, flag-matroidal certification of faces, and the Cayley-trick
//! correspondence used by the fibration.

use std::collections::BTreeSet;

use num::Zero;

use crate::error::Error;
use crate::flag::{self, ValuatedFlag};
use crate::linalg::{self, Vecr};
use crate::matroid::{self, FlagMatroid, Matroid, Subset};
use crate::polyhedral::{lower_hull_faces, SubdivFace};
use crate::trop::Rat;
use crate::valuated::{PlueckerVector, ValuatedMatroid};
use crate::Result;

/// A labeled integral homogeneous point configuration with a rational
/// weight per label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedConfig {
    pub labels: Vec<String>,
    pub points: Vec<Vecr>,
    pub weights: Vec<Rat>,
}

impl WeightedConfig {
    pub fn new(labels: Vec<String>, points: Vec<Vecr>, weights: Vec<Rat>) -> Result<Self> {
        if labels.len() != points.len() || labels.len() != weights.len() {
            return Err(Error::input("labels, points, weights must have equal length"));
        }
        if points.is_empty() {
            return Err(Error::input("empty configuration"));
        }
        let n = points[0].len();
        if points.iter().any(|p| p.len() != n) {
            return Err(Error::input("points of mixed dimension"));
        }
        let degree: Rat = points[0].iter().sum();
        for p in &points {
            let s: Rat = p.iter().sum();
            if s != degree {
                return Err(Error::input(
                    "configuration is not homogeneous (coordinate sums differ)",
                ));
            }
        }
        Ok(WeightedConfig {
            labels,
            points,
            weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A Minkowski sum configuration remembering its factor structure: label
/// `t` of the sum is the tuple `tuples[t]` of factor label indices.
#[derive(Clone, Debug)]
pub struct MinkowskiConfig {
    pub factors: Vec<WeightedConfig>,
    pub tuples: Vec<Vec<usize>>,
    pub config: WeightedConfig,
}

/// Minkowski sum of weighted configurations: product labels, summed
/// placements and weights.
pub fn minkowski_weight(factors: &[WeightedConfig]) -> Result<MinkowskiConfig> {
    if factors.is_empty() {
        return Err(Error::input("Minkowski sum needs at least one factor"));
    }
    let n = factors[0].dim();
    if factors.iter().any(|f| f.dim() != n) {
        return Err(Error::input("factors live in different dimensions"));
    }
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for f in factors {
        let mut next = Vec::with_capacity(tuples.len() * f.len());
        for t in &tuples {
            for j in 0..f.len() {
                let mut t2 = t.clone();
                t2.push(j);
                next.push(t2);
            }
        }
        tuples = next;
    }
    let mut labels = Vec::with_capacity(tuples.len());
    let mut points = Vec::with_capacity(tuples.len());
    let mut weights = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut p = linalg::zeros(n);
        let mut w = Rat::zero();
        let mut name = Vec::new();
        for (f, &j) in factors.iter().zip(t) {
            p = linalg::add(&p, &f.points[j]);
            w += &f.weights[j];
            name.push(f.labels[j].clone());
        }
        labels.push(name.join("|"));
        points.push(p);
        weights.push(w);
    }
    Ok(MinkowskiConfig {
        factors: factors.to_vec(),
        tuples,
        config: WeightedConfig::new(labels, points, weights)?,
    })
}

/// The base configuration of a flag matroid: Minkowski sum of the basis
/// configurations of the constituents, weights zero.
pub fn base_configuration(f: &FlagMatroid) -> MinkowskiConfig {
    let factors: Vec<WeightedConfig> = f
        .constituents()
        .iter()
        .map(|m| matroid_config(m, None))
        .collect();
    minkowski_weight(&factors).expect("base configurations are homogeneous")
}

/// The weighted base configuration of a sequence of Plücker vectors
/// (weights are the values on the supports).
pub fn weighted_base_configuration(flag: &[PlueckerVector]) -> Result<MinkowskiConfig> {
    let factors: Vec<WeightedConfig> = flag.iter().map(pluecker_config).collect();
    minkowski_weight(&factors)
}

/// One matroid's bases as a configuration, optionally weighted.
pub fn matroid_config(m: &Matroid, weights: Option<Vec<Rat>>) -> WeightedConfig {
    let labels: Vec<String> = m
        .bases()
        .iter()
        .map(|&b| matroid::subset_to_string(b))
        .collect();
    let points = m.base_points();
    let weights = weights.unwrap_or_else(|| vec![Rat::zero(); points.len()]);
    WeightedConfig::new(labels, points, weights).expect("base configurations are homogeneous")
}

/// A Plücker vector as a weighted configuration on its support.
pub fn pluecker_config(p: &PlueckerVector) -> WeightedConfig {
    let labels: Vec<String> = p
        .support()
        .iter()
        .map(|&b| matroid::subset_to_string(b))
        .collect();
    let points: Vec<Vecr> = p
        .support()
        .iter()
        .map(|&b| matroid::indicator_vector(b, p.n()))
        .collect();
    let weights: Vec<Rat> = p
        .support()
        .iter()
        .map(|&b| p.finite_value(b).unwrap().clone())
        .collect();
    WeightedConfig::new(labels, points, weights).expect("supports are homogeneous")
}

/// The coherent subdivision of a configuration with its tightness flag.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub faces: Vec<SubdivFace>,
    pub tight: bool,
}

impl Subdivision {
    pub fn maximal_faces(&self) -> Vec<&SubdivFace> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.labels != f.labels && f.labels.is_subset(&g.labels))
            })
            .collect()
    }

    /// Face label sets, for poset comparisons.
    pub fn label_sets(&self) -> BTreeSet<BTreeSet<usize>> {
        self.faces.iter().map(|f| f.labels.clone()).collect()
    }

    /// Faces mapped to sets of distinct placements (for comparing
    /// subdivisions of configurations that differ only in multiplicity).
    pub fn placement_sets(&self, cfg: &WeightedConfig) -> BTreeSet<BTreeSet<Vecr>> {
        self.faces
            .iter()
            .map(|f| f.labels.iter().map(|&i| cfg.points[i].clone()).collect())
            .collect()
    }
}

/// All faces of the coherent subdivision induced by the weights.
pub fn subdivide(cfg: &WeightedConfig) -> Result<Subdivision> {
    let faces = lower_hull_faces(&cfg.points, &cfg.weights)?;
    let covered: BTreeSet<usize> = faces.iter().flat_map(|f| f.labels.iter().copied()).collect();
    let tight = covered.len() == cfg.len();
    Ok(Subdivision { faces, tight })
}

/// Verdict for one face of a certification run.
#[derive(Clone, Debug)]
pub struct FaceVerdict {
    pub labels: BTreeSet<usize>,
    /// Face label set equals the product of its factor projections.
    pub product: bool,
    /// Every factor projection is a matroid basis family of the declared
    /// rank.
    pub factors_matroidal: bool,
    /// The factor matroids form a flag matroid.
    pub flag: bool,
}

impl FaceVerdict {
    pub fn certified(&self) -> bool {
        self.product && self.factors_matroidal && self.flag
    }
}

#[derive(Clone, Debug)]
pub struct Certification {
    pub verdicts: Vec<FaceVerdict>,
}

impl Certification {
    pub fn all_certified(&self) -> bool {
        self.verdicts.iter().all(|v| v.certified())
    }

    pub fn first_failure(&self) -> Option<&FaceVerdict> {
        self.verdicts.iter().find(|v| !v.certified())
    }
}

/// Certify faces of a subdivision of a Minkowski base configuration as
/// base configurations of flag matroids: each face must decompose as the
/// product of its per-factor label sets, each factor must be a matroid of
/// the declared rank, and the tuple must be a flag matroid.
pub fn certify_flag_matroidal(
    mc: &MinkowskiConfig,
    faces: &[&SubdivFace],
    ranks: &[usize],
) -> Result<Certification> {
    if ranks.len() != mc.factors.len() {
        return Err(Error::input("one rank per factor required"));
    }
    let n = mc.config.dim();
    // Interpret factor labels as subsets via 0/1 placements.
    let mut factor_subsets: Vec<Vec<Subset>> = Vec::new();
    for (f, &r) in mc.factors.iter().zip(ranks) {
        let mut subsets = Vec::with_capacity(f.len());
        for p in &f.points {
            let mut s: Subset = 0;
            for (i, x) in p.iter().enumerate() {
                if x == &Rat::from_integer(1.into()) {
                    s |= 1 << i;
                } else if !x.is_zero() {
                    return Err(Error::input(
                        "factor placements must be 0/1 vectors to certify",
                    ));
                }
            }
            if matroid::subset_card(s) != r {
                return Err(Error::input(
                    "factor placement cardinality does not match declared rank",
                ));
            }
            subsets.push(s);
        }
        factor_subsets.push(subsets);
    }
    let mut verdicts = Vec::new();
    for face in faces {
        let mut projections: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); mc.factors.len()];
        for &t in &face.labels {
            for (k, &j) in mc.tuples[t].iter().enumerate() {
                projections[k].insert(j);
            }
        }
        let product_size: usize = projections.iter().map(|p| p.len()).product();
        let mut product = product_size == face.labels.len();
        if product {
            // Verify every combination is present.
            let expected: BTreeSet<Vec<usize>> = face
                .labels
                .iter()
                .map(|&t| mc.tuples[t].clone())
                .collect();
            product = cartesian(&projections).into_iter().all(|t| expected.contains(&t));
        }
        let mut factors_matroidal = true;
        let mut constituent_matroids: Vec<Matroid> = Vec::new();
        for (k, proj) in projections.iter().enumerate() {
            let family: Vec<Subset> = proj.iter().map(|&j| factor_subsets[k][j]).collect();
            match Matroid::validate(n, ranks[k], &family) {
                Ok(m) => constituent_matroids.push(m),
                Err(_) => {
                    factors_matroidal = false;
                    break;
                }
            }
        }
        let flag = factors_matroidal
            && (constituent_matroids.len() < 2
                || FlagMatroid::validate(constituent_matroids.clone()).is_ok());
        verdicts.push(FaceVerdict {
            labels: face.labels.clone(),
            product,
            factors_matroidal,
            flag,
        });
    }
    Ok(Certification { verdicts })
}

fn cartesian(sets: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for s in sets {
        let mut next = Vec::with_capacity(out.len() * s.len());
        for t in &out {
            for &j in s {
                let mut t2 = t.clone();
                t2.push(j);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// The executable content of "a flag matroidal subdivision yields a
/// valuated flag matroid": certify the subdivision induced by the summed
/// weights, then check that each factor validates and the flag passes the
/// cocircuit-containment test.
pub fn theorem_a_c_to_d(flag: &[PlueckerVector]) -> Result<bool> {
    let mc = weighted_base_configuration(flag)?;
    let sub = subdivide(&mc.config)?;
    let ranks: Vec<usize> = flag.iter().map(|p| p.r()).collect();
    let maximal = sub.maximal_faces();
    let cert = certify_flag_matroidal(&mc, &maximal, &ranks)?;
    if !cert.all_certified() {
        return Err(Error::input(
            "subdivision is not flag matroidal; the pipeline requires a certified subdivision",
        ));
    }
    let mut vms = Vec::new();
    for p in flag {
        match ValuatedMatroid::validate_with_witness(p.clone()) {
            Ok(vm) => vms.push(vm),
            Err(_) => return Ok(false),
        }
    }
    for i in 0..vms.len() {
        for j in i + 1..vms.len() {
            if !flag::is_valuated_quotient(&vms[i], &vms[j], flag::QuotientMethod::Tls)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Is the weight on a Minkowski configuration itself a Minkowski sum of
/// factor weights? Returns the factor weights when it is.
pub fn minkowski_sum_decomposition(mc: &MinkowskiConfig, w: &[Rat]) -> Option<Vec<Vec<Rat>>> {
    if w.len() != mc.tuples.len() {
        return None;
    }
    // Unknowns: one weight per factor label, ordered factor by factor.
    let offsets: Vec<usize> = mc
        .factors
        .iter()
        .scan(0usize, |acc, f| {
            let o = *acc;
            *acc += f.len();
            Some(o)
        })
        .collect();
    let total: usize = mc.factors.iter().map(|f| f.len()).sum();
    let rows: Vec<Vecr> = mc
        .tuples
        .iter()
        .map(|t| {
            let mut row = linalg::zeros(total);
            for (k, &j) in t.iter().enumerate() {
                row[offsets[k] + j] += Rat::from_integer(1.into());
            }
            row
        })
        .collect();
    let sol = linalg::solve(&rows, w, total)?;
    let mut out = Vec::new();
    for (k, f) in mc.factors.iter().enumerate() {
        out.push(sol[offsets[k]..offsets[k] + f.len()].to_vec());
    }
    Some(out)
}

/// Verify the Cayley-trick bijection between the subdivision of the lifted
/// valuated matroid on `Q(M̃)` and the mixed subdivision of
/// `B(M') + B(M)` with weights `(a + μ') ⊞ (b + μ)`.
pub fn cayley_faces_correspond(
    mu_prime: &ValuatedMatroid,
    mu: &ValuatedMatroid,
    a: &Rat,
    b: &Rat,
) -> Result<bool> {
    let nu = flag::fibration_lift(mu_prime, mu, a, b)?;
    // Faces of the lifted subdivision on Q(M~).
    let nu_cfg = pluecker_config(nu.pluecker());
    let nu_sub = subdivide(&nu_cfg)?;
    let nu_support = nu.pluecker().support();
    // Both-sided Cayley faces mapped to (A', B) pairs of factor subsets.
    let mut cayley_pairs: BTreeSet<(BTreeSet<Subset>, BTreeSet<Subset>)> = BTreeSet::new();
    for f in &nu_sub.faces {
        let mut left: BTreeSet<Subset> = BTreeSet::new();
        let mut right: BTreeSet<Subset> = BTreeSet::new();
        for &i in &f.labels {
            let s = nu_support[i];
            if s & 1 != 0 {
                left.insert(s >> 1);
            } else {
                right.insert(s >> 1);
            }
        }
        if !left.is_empty() && !right.is_empty() {
            cayley_pairs.insert((left, right));
        }
    }
    // Mixed subdivision of B(M') + B(M).
    let shifted_prime = mu_prime.pluecker().shift(a);
    let shifted = mu.pluecker().shift(b);
    let mc = weighted_base_configuration(&[shifted_prime.clone(), shifted.clone()])?;
    let mixed_sub = subdivide(&mc.config)?;
    let prime_support = shifted_prime.support();
    let mu_support = shifted.support();
    let mut mixed_pairs: BTreeSet<(BTreeSet<Subset>, BTreeSet<Subset>)> = BTreeSet::new();
    for f in &mixed_sub.faces {
        let mut left: BTreeSet<Subset> = BTreeSet::new();
        let mut right: BTreeSet<Subset> = BTreeSet::new();
        for &t in &f.labels {
            left.insert(prime_support[mc.tuples[t][0]]);
            right.insert(mu_support[mc.tuples[t][1]]);
        }
        // Faces of a genuine Minkowski weight are label products; record
        // the projection pair.
        let expected: usize = left.len() * right.len();
        if expected != f.labels.len() {
            return Err(Error::internal(
                "mixed subdivision face of a Minkowski weight is not a product",
            ));
        }
        mixed_pairs.insert((left, right));
    }
    Ok(cayley_pairs == mixed_pairs)
}

/// Validate a valuated flag and certify its induced subdivision (the
/// forward direction of the subdivision characterization).
pub fn flag_subdivision_certified(flag: &ValuatedFlag) -> Result<bool> {
    let plueckers: Vec<PlueckerVector> = flag
        .constituents()
        .iter()
        .map(|vm| vm.pluecker().clone())
        .collect();
    let mc = weighted_base_configuration(&plueckers)?;
    let sub = subdivide(&mc.config)?;
    let faces: Vec<&SubdivFace> = sub.faces.iter().collect();
    let cert = certify_flag_matroidal(&mc, &faces, &flag.ranks())?;
    Ok(cert.all_certified())
}

/// The hexagon configuration: A = B(U(1,3)), B = B(U(2,3)), with label
/// order 201, 210, 120, 021, 012, 102, 001+110, 100+011, 010+101.
pub fn hexagon_example() -> (MinkowskiConfig, Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let a = matroid_config(&matroid::uniform(1, 3), None);
    let b = matroid_config(&matroid::uniform(2, 3), None);
    let mc = minkowski_weight(&[a, b]).unwrap();
    // Tuple order from minkowski_weight: (a_i, b_j) with a in order
    // 1,2,3 (points e1,e2,e3) and b in order 12,13,23 (points 110,101,011).
    // The published label order is 201,210,120,021,012,102 then the three
    // center labels 001+110, 100+011, 010+101.
    let idx = |ai: usize, bj: usize| ai * 3 + bj;
    let mut w1 = vec![Rat::zero(); 9];
    let mut w2 = vec![Rat::zero(); 9];
    let z = |v: i64| Rat::from_integer(v.into());
    // 201 = e1 + 101, 210 = e1 + 110, 120 = e2 + 110,
    // 021 = e2 + 011, 012 = e3 + 011, 102 = e3 + 101,
    // centers: 001+110 = e3 + 110, 100+011 = e1 + 011, 010+101 = e2 + 101.
    let assignments: [((usize, usize), i64, i64); 9] = [
        ((0, 1), 0, 0),  // 201 = e1 + 101
        ((0, 0), 0, 0),  // 210 = e1 + 110
        ((1, 0), 0, 0),  // 120 = e2 + 110
        ((1, 2), 1, 1),  // 021 = e2 + 011
        ((2, 2), 1, 1),  // 012 = e3 + 011
        ((2, 1), 0, 0),  // 102 = e3 + 101
        ((2, 0), 0, 0),  // 001+110 = e3 + 110
        ((0, 2), 0, 1),  // 100+011 = e1 + 011
        ((1, 1), 17, 0), // 010+101 = e2 + 101
    ];
    for ((ai, bj), v1, v2) in assignments {
        w1[idx(ai, bj)] = z(v1);
        w2[idx(ai, bj)] = z(v2);
    }
    // w_A = (0,0,0), w_B = (011 -> 1, 101 -> 0, 110 -> 0); in b's label
    // order (12, 13, 23) = (110, 101, 011) that is (0, 0, 1).
    let wa = vec![z(0), z(0), z(0)];
    let wb = vec![z(0), z(0), z(1)];
    let wab: Vec<Rat> = mc
        .tuples
        .iter()
        .map(|t| &wa[t[0]] + &wb[t[1]])
        .collect();
    (mc, w1, w2, wab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::uniform;
    use crate::trop::rint;

    #[test]
    fn base_configuration_cuboctahedron() {
        let f = FlagMatroid::validate(vec![uniform(1, 4), uniform(3, 4)]).unwrap();
        let mc = base_configuration(&f);
        assert_eq!(mc.config.len(), 16);
        let distinct: BTreeSet<Vecr> = mc.config.points.iter().cloned().collect();
        // 12 cuboctahedron vertices plus the center.
        assert_eq!(distinct.len(), 13);
        let verts = crate::polyhedral::hull::vertex_labels(&mc.config.points);
        assert_eq!(verts.len(), 12);
        assert!(
            matroid::is_flag_base_polytope(&mc.config.points, &[1, 3]).unwrap()
        );
    }

    #[test]
    fn base_configuration_truncated_tetrahedron() {
        let f = FlagMatroid::validate(vec![uniform(1, 4), uniform(2, 4)]).unwrap();
        let mc = base_configuration(&f);
        assert_eq!(mc.config.len(), 24);
        let verts = crate::polyhedral::hull::vertex_labels(&mc.config.points);
        assert_eq!(verts.len(), 12);
        assert!(matroid::is_flag_base_polytope(&mc.config.points, &[1, 2]).unwrap());
    }

    #[test]
    fn trivial_and_zero_weights() {
        let f = FlagMatroid::validate(vec![uniform(1, 3), uniform(2, 3)]).unwrap();
        let mc = base_configuration(&f);
        let sub = subdivide(&mc.config).unwrap();
        assert_eq!(sub.maximal_faces().len(), 1);
        assert!(sub.tight);
        let ranks = [1, 2];
        let faces: Vec<&SubdivFace> = sub.faces.iter().collect();
        let cert = certify_flag_matroidal(&mc, &faces, &ranks).unwrap();
        assert!(cert.all_certified());
    }

    #[test]
    fn hexagon_subdivisions_agree_geometrically() {
        let (mc, w1, w2, wab) = hexagon_example();
        assert_eq!(w2, wab);
        let sub = |w: &Vec<Rat>| {
            let cfg = WeightedConfig::new(
                mc.config.labels.clone(),
                mc.config.points.clone(),
                w.clone(),
            )
            .unwrap();
            subdivide(&cfg).unwrap()
        };
        let s1 = sub(&w1);
        let s2 = sub(&w2);
        let cfg = &mc.config;
        assert_eq!(s1.placement_sets(cfg), s2.placement_sets(cfg));
        // Neither weight is tight: one center label sits strictly above.
        assert!(!s1.tight);
        assert!(!s2.tight);
        // w1 is not a Minkowski sum of factor weights, w2 is.
        assert!(minkowski_sum_decomposition(&mc, &w1).is_none());
        let dec = minkowski_sum_decomposition(&mc, &w2).unwrap();
        assert_eq!(dec.len(), 2);
        // Two maximal cells.
        assert_eq!(s1.maximal_faces().len(), 2);
        // The w2 subdivision certifies flag matroidal at the label level.
        let mc2 = MinkowskiConfig {
            factors: mc.factors.clone(),
            tuples: mc.tuples.clone(),
            config: WeightedConfig::new(
                mc.config.labels.clone(),
                mc.config.points.clone(),
                w2.clone(),
            )
            .unwrap(),
        };
        let s2faces: Vec<&SubdivFace> = s2.faces.iter().collect();
        let cert = certify_flag_matroidal(&mc2, &s2faces, &[1, 2]).unwrap();
        assert!(cert.all_certified());
        // The w1 subdivision has a non-product face (the point of the
        // example): certification by raw labels fails on it.
        let mc1 = MinkowskiConfig {
            factors: mc.factors.clone(),
            tuples: mc.tuples.clone(),
            config: WeightedConfig::new(
                mc.config.labels.clone(),
                mc.config.points.clone(),
                w1.clone(),
            )
            .unwrap(),
        };
        let s1faces: Vec<&SubdivFace> = s1.faces.iter().collect();
        let cert1 = certify_flag_matroidal(&mc1, &s1faces, &[1, 2]).unwrap();
        assert!(!cert1.all_certified());
        assert!(cert1.verdicts.iter().any(|v| !v.product));
    }

    #[test]
    fn octahedron_pyramids_certify() {
        let p = PlueckerVector::new(
            4,
            2,
            matroid::k_subsets(4, 2)
                .into_iter()
                .zip([0, 0, 0, 0, 0, 1])
                .map(|(s, v)| (s, rint(v)))
                .collect(),
        )
        .unwrap();
        let mc = weighted_base_configuration(std::slice::from_ref(&p)).unwrap();
        let sub = subdivide(&mc.config).unwrap();
        assert_eq!(sub.maximal_faces().len(), 2);
        let faces: Vec<&SubdivFace> = sub.faces.iter().collect();
        let cert = certify_flag_matroidal(&mc, &faces, &[2]).unwrap();
        assert!(cert.all_certified());
        assert!(theorem_a_c_to_d(&[p]).unwrap());
    }

    #[test]
    fn broken_weight_fails_certification() {
        // (0,1,0,1,0,0) violates the exchange; its subdivision must have a
        // non-matroidal face.
        let p = PlueckerVector::new(
            4,
            2,
            matroid::k_subsets(4, 2)
                .into_iter()
                .zip([0, 1, 0, 1, 0, 0])
                .map(|(s, v)| (s, rint(v)))
                .collect(),
        )
        .unwrap();
        let mc = weighted_base_configuration(std::slice::from_ref(&p)).unwrap();
        let sub = subdivide(&mc.config).unwrap();
        let maximal = sub.maximal_faces();
        let cert = certify_flag_matroidal(&mc, &maximal, &[2]).unwrap();
        assert!(!cert.all_certified());
    }

    #[test]
    fn cayley_correspondence_examples() {
        let u1 = ValuatedMatroid::zero_on(&uniform(1, 4));
        let u2 = ValuatedMatroid::zero_on(&uniform(2, 4));
        assert!(cayley_faces_correspond(&u1, &u2, &rint(0), &rint(0)).unwrap());

        let p = PlueckerVector::new(
            4,
            2,
            matroid::k_subsets(4, 2)
                .into_iter()
                .zip([0, 0, 0, 0, 0, 1])
                .map(|(s, v)| (s, rint(v)))
                .collect(),
        )
        .unwrap();
        let vm = ValuatedMatroid::validate(p).unwrap();
        assert!(cayley_faces_correspond(&u1, &vm, &rint(0), &rint(0)).unwrap());
    }

    #[test]
    fn linear_shift_lemma() {
        // Delta_w^u equals Delta_{w + <u, a>}^0 as label sets.
        let mut rng = crate::sample::rng(5);
        let vm = crate::sample::random_stiefel(4, 2, 10, &mut rng);
        let cfg = pluecker_config(vm.pluecker());
        let u: Vecr = (0..4).map(|_| crate::sample::small_rat(&mut rng)).collect();
        let shifted: Vec<Rat> = cfg
            .points
            .iter()
            .zip(&cfg.weights)
            .map(|(p, w)| w + linalg::dot(&u, p))
            .collect();
        let face_at_u = crate::polyhedral::lower_hull::weighted_argmin(&cfg.points, &cfg.weights, &u);
        let face_at_0 =
            crate::polyhedral::lower_hull::weighted_argmin(&cfg.points, &shifted, &linalg::zeros(4));
        assert_eq!(face_at_u, face_at_0);
    }
}
