//! Deterministic random generators for the property and regression suites:
//! valuated matroids via the tropical Stiefel map (minors of a tropical
//! matrix are always valuated matroids), raw Plücker vectors over small
//! alphabets, projective points, and points of a cocircuit span.

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::matroid::{k_subsets, subset_elements, Subset};
use crate::trop::{rat, Finite, Infinity, ProjPoint, Rat, TropRat, TropVector};
use crate::valuated::{PlueckerVector, ValuatedMatroid};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random rational with denominator in {1, 2, 3}.
pub fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

/// Valuated matroid from a random tropical matrix: the value of an r-subset
/// is the tropical minor (assignment minimum). Entries are infinite with
/// probability `inf_prob` out of 100.
pub fn random_stiefel(n: usize, r: usize, inf_prob: u32, rng: &mut ChaCha8Rng) -> ValuatedMatroid {
    assert!(r >= 1 && r <= n);
    loop {
        let a: Vec<Vec<TropRat>> = (0..r)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_range(0..100) < inf_prob {
                            Infinity
                        } else {
                            Finite(Rat::from_integer(rng.gen_range(0..=8i64).into()))
                        }
                    })
                    .collect()
            })
            .collect();
        let mut values: BTreeMap<Subset, Rat> = BTreeMap::new();
        for s in k_subsets(n, r) {
            if let Finite(v) = tropical_minor(&a, &subset_elements(s)) {
                values.insert(s, v);
            }
        }
        if values.is_empty() {
            continue;
        }
        let p = PlueckerVector::new(n, r, values).unwrap();
        return ValuatedMatroid::validate(p).expect("Stiefel vectors are valuated matroids");
    }
}

/// min over bijections rows -> cols of the tropical permanent.
fn tropical_minor(a: &[Vec<TropRat>], cols: &[usize]) -> TropRat {
    let r = a.len();
    let mut best = Infinity;
    let mut perm: Vec<usize> = (0..r).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut term = TropRat::zero();
        for (row, &pi) in p.iter().enumerate() {
            term = term.times(&a[row][cols[pi]]);
        }
        best = best.plus(&term);
    });
    best
}

fn permute(arr: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == arr.len() {
        f(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute(arr, k + 1, f);
        arr.swap(k, i);
    }
}

/// Raw Plücker vector with entries from a finite alphabet (None = ∞);
/// retried until the support is nonempty.
pub fn random_pluecker_grid(
    n: usize,
    r: usize,
    alphabet: &[Option<i64>],
    rng: &mut ChaCha8Rng,
) -> PlueckerVector {
    loop {
        let mut values: BTreeMap<Subset, Rat> = BTreeMap::new();
        for s in k_subsets(n, r) {
            if let Some(v) = alphabet[rng.gen_range(0..alphabet.len())] {
                values.insert(s, Rat::from_integer(v.into()));
            }
        }
        if !values.is_empty() {
            return PlueckerVector::new(n, r, values).unwrap();
        }
    }
}

/// Raw Plücker vector with random small rational entries and ∞ with the
/// given percent probability.
pub fn random_pluecker_rational(
    n: usize,
    r: usize,
    inf_prob: u32,
    rng: &mut ChaCha8Rng,
) -> PlueckerVector {
    loop {
        let mut values: BTreeMap<Subset, Rat> = BTreeMap::new();
        for s in k_subsets(n, r) {
            if rng.gen_range(0..100) >= inf_prob {
                values.insert(s, small_rat(rng));
            }
        }
        if !values.is_empty() {
            return PlueckerVector::new(n, r, values).unwrap();
        }
    }
}

/// Random projective point with a random nonempty support.
pub fn random_proj_point(n: usize, inf_prob: u32, rng: &mut ChaCha8Rng) -> ProjPoint {
    loop {
        let coords: Vec<TropRat> = (0..n)
            .map(|_| {
                if rng.gen_range(0..100) < inf_prob {
                    Infinity
                } else {
                    Finite(small_rat(rng))
                }
            })
            .collect();
        let v = TropVector::new(coords);
        if !v.support().is_empty() {
            return ProjPoint::normalize(&v).unwrap();
        }
    }
}

/// A point of the tropical span of the cocircuits of `vm` (a guaranteed
/// member of the projective tropical linear space), or None for rank 0.
pub fn span_point(vm: &ValuatedMatroid, rng: &mut ChaCha8Rng) -> Option<ProjPoint> {
    let cocircuits = vm.cocircuits();
    if cocircuits.is_empty() {
        return None;
    }
    loop {
        let mut combo = TropVector::new(vec![Infinity; vm.n()]);
        let mut used = false;
        for c in &cocircuits {
            if rng.gen_bool(0.5) {
                combo = combo.plus(&c.as_vector().scale(&Finite(small_rat(rng))));
                used = true;
            }
        }
        if used && !combo.support().is_empty() {
            return Some(ProjPoint::normalize(&combo).unwrap());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stiefel_vectors_validate() {
        let mut rng = rng(7);
        for _ in 0..20 {
            let vm = random_stiefel(5, 2, 20, &mut rng);
            assert!(ValuatedMatroid::is_valid(vm.pluecker()));
        }
        for _ in 0..10 {
            let vm = random_stiefel(6, 3, 25, &mut rng);
            assert!(ValuatedMatroid::is_valid(vm.pluecker()));
        }
    }

    #[test]
    fn span_points_are_members() {
        let mut rng = rng(11);
        for _ in 0..10 {
            let vm = random_stiefel(5, 3, 15, &mut rng);
            if let Some(p) = span_point(&vm, &mut rng) {
                assert!(crate::valuated::in_projective_tls_all(&vm, &p).unwrap());
            }
        }
    }
}
