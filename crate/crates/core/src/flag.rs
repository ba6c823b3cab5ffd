//! Valuated flag matroids: the three equivalent quotient decision
//! procedures (exchange definition, incidence-Plücker relations, cocircuit
//! containment), flag Dressian membership, and the fibration relating
//! `Dr(r+1; n+1)` to `FlDr(r, r+1; n)` with the affine-cone identification.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::Error;
use crate::matroid::{k_subsets, subset_elements, FlagMatroid, Subset};
use crate::sample;
use crate::trop::{min_achieved_twice, Rat, TropRat};
use crate::valuated::{PlueckerVector, ValuatedMatroid};
use crate::Result;

/// Selector for the quotient decision procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientMethod {
    /// The valuated exchange definition over basis pairs.
    Definition,
    /// The tropical incidence-Plücker relations.
    IncidencePluecker,
    /// Every valuated cocircuit of the quotient lies in the circuit
    /// prevariety of the other.
    Tls,
}

pub const QUOTIENT_METHODS: [QuotientMethod; 3] = [
    QuotientMethod::Definition,
    QuotientMethod::IncidencePluecker,
    QuotientMethod::Tls,
];

/// Is `mq ↞ m` a valuated quotient? Ranks must satisfy
/// `rank(mq) ≤ rank(m)`.
pub fn is_valuated_quotient(
    mq: &ValuatedMatroid,
    m: &ValuatedMatroid,
    method: QuotientMethod,
) -> Result<bool> {
    if mq.n() != m.n() {
        return Err(Error::input("quotient test requires a common ground set"));
    }
    if mq.rank() > m.rank() {
        return Err(Error::input(
            "quotient must have rank at most the other constituent",
        ));
    }
    Ok(match method {
        QuotientMethod::Definition => quotient_by_definition(mq, m),
        QuotientMethod::IncidencePluecker => {
            satisfies_ip_relations(mq.pluecker(), m.pluecker())
        }
        QuotientMethod::Tls => quotient_by_tls(mq, m),
    })
}

/// All three methods; they must agree, and the common verdict is returned.
pub fn is_valuated_quotient_all(mq: &ValuatedMatroid, m: &ValuatedMatroid) -> Result<bool> {
    let answers: Vec<bool> = QUOTIENT_METHODS
        .iter()
        .map(|&meth| is_valuated_quotient(mq, m, meth))
        .collect::<Result<_>>()?;
    if answers.iter().any(|&a| a != answers[0]) {
        return Err(Error::internal(format!(
            "quotient methods disagree: def={}, ip={}, tls={}",
            answers[0], answers[1], answers[2]
        )));
    }
    Ok(answers[0])
}

fn quotient_by_definition(mq: &ValuatedMatroid, m: &ValuatedMatroid) -> bool {
    for &i_set in mq.underlying().bases() {
        for &j_set in m.underlying().bases() {
            for i in subset_elements(i_set & !j_set) {
                let lhs = mq.value(i_set).times(&m.value(j_set));
                let ok = subset_elements(j_set & !i_set).into_iter().any(|j| {
                    let c1 = (i_set & !(1 << i)) | (1 << j);
                    let c2 = (j_set & !(1 << j)) | (1 << i);
                    let rhs = mq.value(c1).times(&m.value(c2));
                    rhs.cmp_trop(&lhs) != std::cmp::Ordering::Greater
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Evaluate the tropical incidence-Plücker relations on a pair of raw
/// Plücker vectors (ranks r ≤ s): for every I' of size r-1 and J' of size
/// s+1, the minimum of `p(I' ∪ j') + q(J' ∖ j')` over `j' ∈ J' ∖ I'` is
/// achieved at least twice (all-infinite lists count).
pub fn satisfies_ip_relations(p: &PlueckerVector, q: &PlueckerVector) -> bool {
    let n = p.n();
    let (r, s) = (p.r(), q.r());
    if s + 1 > n {
        return true;
    }
    for i_prime in k_subsets(n, r.wrapping_sub(1).min(n)) {
        if r == 0 {
            break;
        }
        for j_prime in k_subsets(n, s + 1) {
            let terms: Vec<TropRat> = subset_elements(j_prime & !i_prime)
                .into_iter()
                .map(|j| {
                    p.value(i_prime | (1 << j))
                        .times(&q.value(j_prime & !(1 << j)))
                })
                .collect();
            if !terms.is_empty() && !min_achieved_twice(&terms).expect("nonempty") {
                return false;
            }
        }
    }
    true
}

fn quotient_by_tls(mq: &ValuatedMatroid, m: &ValuatedMatroid) -> bool {
    let circuits = m.circuits();
    for d in mq.cocircuits() {
        for c in &circuits {
            let terms: Vec<TropRat> = c
                .coords()
                .iter()
                .zip(d.coords())
                .map(|(ci, di)| ci.times(di))
                .collect();
            if !min_achieved_twice(&terms).expect("nonempty") {
                return false;
            }
        }
    }
    true
}

/// A sequence of valuated matroids on one ground set with weakly increasing
/// ranks in which every pair is a valuated quotient; the underlying
/// matroids form a validated flag matroid.
#[derive(Clone, Debug)]
pub struct ValuatedFlag {
    constituents: Vec<ValuatedMatroid>,
    underlying: FlagMatroid,
}

impl ValuatedFlag {
    pub fn validate(constituents: Vec<ValuatedMatroid>) -> Result<ValuatedFlag> {
        if constituents.is_empty() {
            return Err(Error::input("flag needs at least one constituent"));
        }
        let n = constituents[0].n();
        if constituents.iter().any(|vm| vm.n() != n) {
            return Err(Error::input("constituents on different ground sets"));
        }
        for w in constituents.windows(2) {
            if w[0].rank() > w[1].rank() {
                return Err(Error::input("constituent ranks must weakly increase"));
            }
        }
        for i in 0..constituents.len() {
            for j in i + 1..constituents.len() {
                if !is_valuated_quotient_all(&constituents[i], &constituents[j])? {
                    return Err(Error::input(format!(
                        "constituent {} is not a valuated quotient of constituent {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let underlying =
            FlagMatroid::validate(constituents.iter().map(|vm| vm.underlying().clone()).collect())
                .map_err(|e| {
                    Error::internal(format!(
                        "valuated flag with non-flag underlying matroids: {e}"
                    ))
                })?;
        Ok(ValuatedFlag {
            constituents,
            underlying,
        })
    }

    pub fn constituents(&self) -> &[ValuatedMatroid] {
        &self.constituents
    }

    pub fn underlying(&self) -> &FlagMatroid {
        &self.underlying
    }

    pub fn n(&self) -> usize {
        self.constituents[0].n()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.constituents.iter().map(|vm| vm.rank()).collect()
    }
}

/// Flag Dressian membership of a sequence of raw Plücker vectors: each
/// constituent validates and every pair is a valuated quotient.
pub fn flag_dressian_member(flag: &[PlueckerVector]) -> Result<bool> {
    if flag.is_empty() {
        return Err(Error::input("empty flag"));
    }
    let n = flag[0].n();
    if flag.iter().any(|p| p.n() != n) {
        return Err(Error::input("constituents on different ground sets"));
    }
    for w in flag.windows(2) {
        if w[0].r() > w[1].r() {
            return Err(Error::input("constituent ranks must weakly increase"));
        }
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
            if !is_valuated_quotient_all(&vms[i], &vms[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Projection along the fibration: a valuated matroid on `{0, …, n}` of
/// rank `r+1` maps to the pair `(μ', μ)` with `μ'(I∖0) = ν(I)` for `I ∋ 0`
/// and `μ(J) = ν(J)` for `J ∌ 0`. Element 0 is internal index 0.
pub fn fibration_project(nu: &ValuatedMatroid) -> Result<(ValuatedMatroid, ValuatedMatroid)> {
    let n_tilde = nu.n();
    if n_tilde < 2 || nu.rank() == 0 {
        return Err(Error::input("fibration needs rank >= 1 on >= 2 elements"));
    }
    let mut left: BTreeMap<Subset, Rat> = BTreeMap::new();
    let mut right: BTreeMap<Subset, Rat> = BTreeMap::new();
    for (&b, v) in nu.pluecker().entries() {
        if b & 1 != 0 {
            left.insert(b >> 1, v.clone());
        } else {
            right.insert(b >> 1, v.clone());
        }
    }
    if left.is_empty() {
        return Err(Error::input(
            "outside the fibration domain: no finite coordinate on subsets containing 0 (0 is a loop)",
        ));
    }
    if right.is_empty() {
        return Err(Error::input(
            "outside the fibration domain: no finite coordinate on subsets avoiding 0 (0 is a coloop)",
        ));
    }
    let n = n_tilde - 1;
    let mu_prime = ValuatedMatroid::validate(PlueckerVector::new(n, nu.rank() - 1, left)?)
        .map_err(|e| Error::internal(format!("projection of a valuated matroid failed: {e}")))?;
    let mu = ValuatedMatroid::validate(PlueckerVector::new(n, nu.rank(), right)?)
        .map_err(|e| Error::internal(format!("projection of a valuated matroid failed: {e}")))?;
    Ok((mu_prime, mu))
}

/// Lift along the fibration: `I ↦ a + μ'(I∖0)` for `I ∋ 0`, `J ↦ b + μ(J)`
/// otherwise. Requires a rank difference of one; the result is validated.
pub fn fibration_lift(
    mu_prime: &ValuatedMatroid,
    mu: &ValuatedMatroid,
    a: &Rat,
    b: &Rat,
) -> Result<ValuatedMatroid> {
    if mu_prime.n() != mu.n() {
        return Err(Error::input("lift requires a common ground set"));
    }
    if mu_prime.rank() + 1 != mu.rank() {
        return Err(Error::input("lift requires rank difference exactly 1"));
    }
    let mut values: BTreeMap<Subset, Rat> = BTreeMap::new();
    for (&s, v) in mu_prime.pluecker().entries() {
        values.insert((s << 1) | 1, v + a);
    }
    for (&s, v) in mu.pluecker().entries() {
        values.insert(s << 1, v + b);
    }
    let p = PlueckerVector::new(mu.n() + 1, mu.rank(), values)?;
    ValuatedMatroid::validate(p)
        .map_err(|e| Error::input(format!("pair does not lift to a valuated matroid: {e}")))
}

/// Outcome of the affine-cone comparison between `Dr(r+1; n+1)` and
/// `FlDr(r, r+1; n)` on sampled points.
#[derive(Clone, Debug)]
pub struct AffineConeReport {
    pub samples: usize,
    pub dr_members: usize,
    pub counterexamples: usize,
}

/// Membership of a possibly-empty-support vector in the affine cone of
/// `Dr(r+1; n+1)` (empty support means the all-infinite point, which is in
/// the cone by definition).
fn dr_affine_member(values: &BTreeMap<Subset, Rat>, n_tilde: usize, r1: usize) -> bool {
    if values.is_empty() {
        return true;
    }
    match PlueckerVector::new(n_tilde, r1, values.clone()) {
        Ok(p) => ValuatedMatroid::is_valid(&p),
        Err(_) => false,
    }
}

/// Membership of the identified pair in the affine cone of
/// `FlDr(r, r+1; n)`, including the degenerate all-infinite strata of the
/// corollary's proof.
fn fldr_affine_member(
    left: &BTreeMap<Subset, Rat>,
    right: &BTreeMap<Subset, Rat>,
    n: usize,
    r: usize,
) -> bool {
    match (left.is_empty(), right.is_empty()) {
        (true, true) => true,
        (true, false) => PlueckerVector::new(n, r + 1, right.clone())
            .map(|p| ValuatedMatroid::is_valid(&p))
            .unwrap_or(false),
        (false, true) => PlueckerVector::new(n, r, left.clone())
            .map(|p| ValuatedMatroid::is_valid(&p))
            .unwrap_or(false),
        (false, false) => {
            let lp = PlueckerVector::new(n, r, left.clone());
            let rp = PlueckerVector::new(n, r + 1, right.clone());
            match (lp, rp) {
                (Ok(lp), Ok(rp)) => flag_dressian_member(&[lp, rp]).unwrap_or(false),
                _ => false,
            }
        }
    }
}

/// Sample points of `T^{C(n+1, r+1)}` (random values, boundary-infinity
/// patterns, and fiber points) and check that membership in the affine cone
/// of `Dr(r+1; n+1)` coincides with membership in the affine cone of
/// `FlDr(r, r+1; n)` under the coordinate identification.
pub fn affine_cone_equal_sample(r: usize, n: usize, samples: usize, seed: u64) -> Result<AffineConeReport> {
    if r + 1 > n {
        return Err(Error::input("need r + 1 <= n"));
    }
    let n_tilde = n + 1;
    let r1 = r + 1;
    let mut rng = sample::rng(seed);
    let mut dr_members = 0;
    let mut counterexamples = 0;
    let alphabet: &[Option<i64>] = &[Some(0), Some(1), Some(2), None, None];
    for k in 0..samples {
        // Mix: raw grid vectors, structured valid vectors, one-sided
        // infinite patterns, and fiber points of valid quotient pairs.
        let values: BTreeMap<Subset, Rat> = match k % 4 {
            0 => sample::random_pluecker_grid(n_tilde, r1, alphabet, &mut rng)
                .entries()
                .clone(),
            1 => sample::random_stiefel(n_tilde, r1, 20, &mut rng)
                .pluecker()
                .entries()
                .clone(),
            2 => {
                // Kill one side to hit the loop/coloop strata.
                let base = sample::random_stiefel(n_tilde, r1, 10, &mut rng);
                let keep_zero_side = rng.gen_bool(0.5);
                base.pluecker()
                    .entries()
                    .iter()
                    .filter(|(&s, _)| (s & 1 != 0) == keep_zero_side)
                    .map(|(&s, v)| (s, v.clone()))
                    .collect()
            }
            _ => {
                // Fiber point a ⊙ μ' ⊕ b ⊙ μ over a valid quotient pair.
                let nu = sample::random_stiefel(n_tilde, r1, 15, &mut rng);
                match fibration_project(&nu) {
                    Ok((mp, m)) => {
                        let a = sample::small_rat(&mut rng);
                        let b = sample::small_rat(&mut rng);
                        let mut vals: BTreeMap<Subset, Rat> = BTreeMap::new();
                        for (&s, v) in mp.pluecker().entries() {
                            vals.insert((s << 1) | 1, v + &a);
                        }
                        for (&s, v) in m.pluecker().entries() {
                            let cand = v + &b;
                            vals.insert(s << 1, cand);
                        }
                        vals
                    }
                    Err(_) => nu.pluecker().entries().clone(),
                }
            }
        };
        let left: BTreeMap<Subset, Rat> = values
            .iter()
            .filter(|(&s, _)| s & 1 != 0)
            .map(|(&s, v)| (s >> 1, v.clone()))
            .collect();
        let right: BTreeMap<Subset, Rat> = values
            .iter()
            .filter(|(&s, _)| s & 1 == 0)
            .map(|(&s, v)| (s >> 1, v.clone()))
            .collect();
        let dr = dr_affine_member(&values, n_tilde, r1);
        let fl = fldr_affine_member(&left, &right, n, r);
        if dr {
            dr_members += 1;
        }
        if dr != fl {
            counterexamples += 1;
        }
    }
    Ok(AffineConeReport {
        samples,
        dr_members,
        counterexamples,
    })
}

/// Bases of the lift's underlying matroid predicted by the elementary
/// quotient construction: `{I' ∪ 0 | I' ∈ B(M')} ∪ B(M)`.
pub fn predicted_lift_bases(mu_prime: &ValuatedMatroid, mu: &ValuatedMatroid) -> Vec<Subset> {
    let mut out: Vec<Subset> = mu_prime
        .underlying()
        .bases()
        .iter()
        .map(|&b| (b << 1) | 1)
        .collect();
    out.extend(mu.underlying().bases().iter().map(|&b| b << 1));
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{m4, uniform};
    use crate::trop::rint;

    #[test]
    fn zero_flags_are_quotients() {
        let u1 = ValuatedMatroid::zero_on(&uniform(1, 4));
        let u2 = ValuatedMatroid::zero_on(&uniform(2, 4));
        let u3 = ValuatedMatroid::zero_on(&uniform(3, 4));
        assert!(is_valuated_quotient_all(&u1, &u2).unwrap());
        assert!(ValuatedFlag::validate(vec![u1.clone(), u2.clone(), u3.clone()]).is_ok());
        assert!(is_valuated_quotient(&u2, &u1, QuotientMethod::Definition).is_err());
    }

    #[test]
    fn equal_rank_degenerates_to_gp() {
        let values: BTreeMap<Subset, Rat> = k_subsets(4, 2)
            .into_iter()
            .zip([0, 0, 0, 0, 0, 1])
            .map(|(s, v)| (s, rint(v)))
            .collect();
        let vm =
            ValuatedMatroid::validate(PlueckerVector::new(4, 2, values).unwrap()).unwrap();
        assert!(is_valuated_quotient_all(&vm, &vm).unwrap());
    }

    #[test]
    fn m4_flag_example() {
        let u26 = ValuatedMatroid::zero_on(&uniform(2, 6));
        let m4z = ValuatedMatroid::zero_on(&m4());
        assert!(is_valuated_quotient_all(&u26, &m4z).unwrap());
        assert!(ValuatedFlag::validate(vec![u26, m4z]).is_ok());
    }

    #[test]
    fn non_quotient_pairs_fail_all_methods() {
        // mu' concentrated on {1} against generic mu on U(2,4) with a
        // valuation pattern breaking the incidence relations.
        let mut rng = sample::rng(3);
        let mut disagreements = 0;
        for _ in 0..200 {
            let a = sample::random_pluecker_grid(4, 1, &[Some(0), Some(1), None], &mut rng);
            let b = sample::random_pluecker_grid(4, 2, &[Some(0), Some(1), None], &mut rng);
            let (Ok(va), Ok(vb)) = (
                ValuatedMatroid::validate_with_witness(a),
                ValuatedMatroid::validate_with_witness(b),
            ) else {
                continue;
            };
            // Agreement is asserted inside; just exercise it.
            if is_valuated_quotient_all(&va, &vb).is_err() {
                disagreements += 1;
            }
        }
        assert_eq!(disagreements, 0);
    }

    #[test]
    fn fibration_roundtrip_zero() {
        let nu = ValuatedMatroid::zero_on(&uniform(2, 5));
        let (mp, m) = fibration_project(&nu).unwrap();
        assert_eq!(mp.underlying(), &uniform(1, 4));
        assert_eq!(m.underlying(), &uniform(2, 4));
        let lifted = fibration_lift(&mp, &m, &rint(0), &rint(0)).unwrap();
        assert_eq!(lifted, nu);
        assert_eq!(
            predicted_lift_bases(&mp, &m),
            lifted.underlying().bases().to_vec()
        );
    }

    #[test]
    fn fibration_random_roundtrips() {
        let mut rng = sample::rng(17);
        for _ in 0..25 {
            let nu = sample::random_stiefel(5, 2, 10, &mut rng);
            let Ok((mp, m)) = fibration_project(&nu) else {
                continue;
            };
            assert!(is_valuated_quotient_all(&mp, &m).unwrap());
            let a = sample::small_rat(&mut rng);
            let b = sample::small_rat(&mut rng);
            let lifted = fibration_lift(&mp, &m, &a, &b).unwrap();
            let (mp2, m2) = fibration_project(&lifted).unwrap();
            assert!(mp2.pluecker().projectively_equal(mp.pluecker()));
            assert!(m2.pluecker().projectively_equal(m.pluecker()));
            // lift(project(nu), c, c) recovers nu projectively.
            let c = sample::small_rat(&mut rng);
            let again = fibration_lift(&mp, &m, &c, &c).unwrap();
            assert!(again.pluecker().projectively_equal(nu.pluecker()));
        }
    }

    #[test]
    fn fibration_omega_violations() {
        // 0 a coloop: every basis contains 0.
        let mut values = BTreeMap::new();
        values.insert(crate::matroid::subset_from_slice(&[0, 1]), rint(0));
        values.insert(crate::matroid::subset_from_slice(&[0, 2]), rint(0));
        let nu =
            ValuatedMatroid::validate(PlueckerVector::new(3, 2, values).unwrap()).unwrap();
        let err = fibration_project(&nu).unwrap_err();
        assert!(err.to_string().contains("coloop"));
    }

    #[test]
    fn affine_cone_small_sample() {
        let report = affine_cone_equal_sample(1, 4, 200, 42).unwrap();
        assert_eq!(report.counterexamples, 0);
        assert!(report.dr_members > 0);
    }
}
