//! Exact facet enumeration for V-polytopes via the double description
//! method on the polar cone, and face lattices from facet-vertex
//! incidences. Inner-normal (min) convention throughout: a facet is
//! `⟨normal, x⟩ ≥ offset` with equality exactly on its incident points.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};

use crate::linalg::{self, Vecr};
use crate::trop::Rat;

/// Facet of the convex hull of a point set.
#[derive(Clone, Debug)]
pub struct Facet {
    pub normal: Vecr,
    pub offset: Rat,
    pub incident: BTreeSet<usize>,
}

/// A face of the hull: the set of input points minimizing some linear
/// functional, together with such a functional.
#[derive(Clone, Debug)]
pub struct Face {
    pub labels: BTreeSet<usize>,
    pub witness: Vecr,
}

/// Compact tight-set bookkeeping for the double description method.
#[derive(Clone, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Self) -> Self {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn is_superset(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vecr,
    tight: BitSet,
}

/// Extreme rays of `{ y : ⟨rows[i], y⟩ ≥ 0 }`, which must be a pointed cone
/// (rows of full rank).
fn dual_extreme_rays(rows: &[Vecr], dim: usize) -> Vec<Vecr> {
    // Initial simplicial cone from `dim` independent rows.
    let mut chosen: Vec<usize> = Vec::new();
    let mut echelon: Vec<Vecr> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut test = echelon.clone();
        test.push(r.clone());
        if linalg::rref(&mut test).len() > chosen.len() {
            echelon = test;
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        }
    }
    assert_eq!(chosen.len(), dim, "dual cone must be pointed");
    let m = rows.len();
    // Rays of the initial cone: columns of the inverse of the chosen rows.
    let chosen_rows: Vec<Vecr> = chosen.iter().map(|&i| rows[i].clone()).collect();
    let mut rays: Vec<Ray> = Vec::new();
    for k in 0..dim {
        let mut e = linalg::zeros(dim);
        e[k] = Rat::one();
        let col = linalg::solve(&chosen_rows, &e, dim).expect("chosen rows invertible");
        let mut tight = BitSet::new(m);
        for (j, &ci) in chosen.iter().enumerate() {
            if j != k {
                tight.set(ci);
            }
        }
        rays.push(Ray {
            v: primitive_q(&col),
            tight,
        });
    }
    let chosen_set: BTreeSet<usize> = chosen.iter().copied().collect();
    for (q, row) in rows.iter().enumerate() {
        if chosen_set.contains(&q) {
            continue;
        }
        let vals: Vec<Rat> = rays.iter().map(|r| linalg::dot(row, &r.v)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (r, val) in rays.iter_mut().zip(&vals) {
                if val.is_zero() {
                    r.tight.set(q);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (r, val) in rays.iter().zip(&vals) {
            if !val.is_negative() {
                let mut nr = Ray {
                    v: r.v.clone(),
                    tight: r.tight.clone(),
                };
                if val.is_zero() {
                    nr.tight.set(q);
                }
                next.push(nr);
            }
        }
        for i in 0..rays.len() {
            if !vals[i].is_positive() {
                continue;
            }
            for j in 0..rays.len() {
                if !vals[j].is_negative() {
                    continue;
                }
                let meet = rays[i].tight.and(&rays[j].tight);
                let adjacent = (0..rays.len())
                    .all(|k| k == i || k == j || !rays[k].tight.is_superset(&meet));
                if !adjacent {
                    continue;
                }
                // vals[i] * ray_j - vals[j] * ray_i is tight on q and stays
                // feasible for everything processed so far.
                let combo = linalg::sub(
                    &linalg::scale(&rays[j].v, &vals[i]),
                    &linalg::scale(&rays[i].v, &vals[j]),
                );
                let mut tight = meet;
                tight.set(q);
                next.push(Ray {
                    v: primitive_q(&combo),
                    tight,
                });
            }
        }
        rays = next;
    }
    rays.into_iter().map(|r| r.v).collect()
}

/// Primitive rational direction (integer entries, content 1, sign kept).
fn primitive_q(v: &[Rat]) -> Vecr {
    let prim = linalg::primitive(v);
    let flip = v
        .iter()
        .zip(&prim)
        .find(|(orig, _)| !orig.is_zero())
        .map(|(orig, p)| orig.is_positive() != p.is_positive())
        .unwrap_or(false);
    prim.iter()
        .map(|x| {
            let x = if flip { -x.clone() } else { x.clone() };
            Rat::from_integer(x)
        })
        .collect()
}

/// All facets of `Conv(points)`. Points may repeat; incidences refer to
/// input indices. A configuration whose hull is a single point has no
/// facets.
pub fn facets(points: &[Vecr]) -> Vec<Facet> {
    assert!(!points.is_empty());
    let n = points[0].len();
    let p0 = &points[0];
    // Affine basis from the input differences.
    let mut basis: Vec<Vecr> = Vec::new();
    let mut echelon: Vec<Vecr> = Vec::new();
    for p in points {
        let d = linalg::sub(p, p0);
        let mut test = echelon.clone();
        test.push(d.clone());
        if linalg::rref(&mut test).len() > basis.len() {
            echelon = test;
            basis.push(d);
        }
    }
    let d = basis.len();
    if d == 0 {
        return vec![];
    }
    // Coordinates of each point in the affine basis.
    let mat: Vec<Vecr> = (0..n)
        .map(|r| basis.iter().map(|bv| bv[r].clone()).collect())
        .collect();
    let coords: Vec<Vecr> = points
        .iter()
        .map(|p| linalg::solve(&mat, &linalg::sub(p, p0), d).expect("point in affine hull"))
        .collect();
    // Homogenize and run DD on the polar side.
    let gens: Vec<Vecr> = coords
        .iter()
        .map(|t| {
            let mut g = t.clone();
            g.push(Rat::one());
            g
        })
        .collect();
    let rays = dual_extreme_rays(&gens, d + 1);
    // Each ray (nu, nu0) gives the facet <nu, t> + nu0 >= 0 in local
    // coordinates; translate back to ambient functionals.
    let mut out = Vec::new();
    for ray in rays {
        let nu = &ray[..d];
        // An ambient functional g with <g, basis_j> = nu_j represents the
        // local facet functional on the affine hull.
        let normal = linalg::solve(&basis, &nu.to_vec(), n).expect("basis rows independent");
        let offset = linalg::dot(&normal, p0) - ray[d].clone();
        let incident: BTreeSet<usize> = points
            .iter()
            .enumerate()
            .filter(|(_, p)| linalg::dot(&normal, p) == offset)
            .map(|(i, _)| i)
            .collect();
        debug_assert!(points.iter().all(|p| linalg::dot(&normal, p) >= offset));
        out.push(Facet {
            normal,
            offset,
            incident,
        });
    }
    out
}

/// The full face lattice of `Conv(points)` as label sets with minimizing
/// witnesses. Includes the improper face (all labels, witness 0); excludes
/// the empty face.
pub fn face_lattice(points: &[Vecr]) -> Vec<Face> {
    let n = points[0].len();
    let all: BTreeSet<usize> = (0..points.len()).collect();
    let fs = facets(points);
    let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    sets.insert(all.clone());
    let mut queue: Vec<BTreeSet<usize>> = vec![all.clone()];
    for f in &fs {
        if sets.insert(f.incident.clone()) {
            queue.push(f.incident.clone());
        }
    }
    // Close under intersections with facets; every proper face of a
    // polytope is an intersection of facets.
    while let Some(cur) = queue.pop() {
        for f in &fs {
            let meet: BTreeSet<usize> = cur.intersection(&f.incident).copied().collect();
            if !meet.is_empty() && sets.insert(meet.clone()) {
                queue.push(meet);
            }
        }
    }
    sets.into_iter()
        .map(|labels| {
            let mut witness = linalg::zeros(n);
            for f in &fs {
                if labels.iter().all(|i| f.incident.contains(i)) {
                    witness = linalg::add(&witness, &f.normal);
                }
            }
            debug_assert_eq!(argmin(points, &witness), labels);
            Face { labels, witness }
        })
        .collect()
}

/// Indices minimizing `⟨w, p⟩`.
pub fn argmin(points: &[Vecr], w: &[Rat]) -> BTreeSet<usize> {
    let vals: Vec<Rat> = points.iter().map(|p| linalg::dot(w, p)).collect();
    let min = vals.iter().min().unwrap().clone();
    vals.iter()
        .enumerate()
        .filter(|(_, v)| **v == min)
        .map(|(i, _)| i)
        .collect()
}

/// Affine dimension of a set of points.
pub fn affine_dim(points: &[Vecr]) -> usize {
    let p0 = &points[0];
    let diffs: Vec<Vecr> = points.iter().skip(1).map(|p| linalg::sub(p, p0)).collect();
    linalg::rank(&diffs)
}

/// Vertices (0-dimensional faces) of the hull, as input indices. Duplicate
/// input points at a vertex are all reported.
pub fn vertex_labels(points: &[Vecr]) -> BTreeSet<usize> {
    face_lattice(points)
        .into_iter()
        .filter(|f| {
            let pts: Vec<Vecr> = f.labels.iter().map(|&i| points[i].clone()).collect();
            affine_dim(&pts) == 0
        })
        .flat_map(|f| f.labels)
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::trop::rint;

    fn pts(rows: &[&[i64]]) -> Vec<Vecr> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rint(x)).collect())
            .collect()
    }

    #[test]
    fn square_facets_and_faces() {
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let fs = facets(&p);
        assert_eq!(fs.len(), 4);
        let faces = face_lattice(&p);
        // 4 vertices + 4 edges + 1 improper
        assert_eq!(faces.len(), 9);
    }

    #[test]
    fn degenerate_dimensions() {
        // A single (repeated) point.
        let p = pts(&[&[2, 3], &[2, 3]]);
        assert!(facets(&p).is_empty());
        let faces = face_lattice(&p);
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].labels.len(), 2);

        // A segment with an interior point: interior label is in no proper
        // face.
        let p = pts(&[&[0], &[1], &[2]]);
        let faces = face_lattice(&p);
        let proper: Vec<_> = faces.iter().filter(|f| f.labels.len() < 3).collect();
        assert_eq!(proper.len(), 2);
        assert!(proper.iter().all(|f| !f.labels.contains(&1)));
    }

    #[test]
    fn octahedron_counts() {
        // Hypersimplex Δ(2,4) = octahedron: 6 vertices, 12 edges, 8 facets.
        let p = pts(&[
            &[1, 1, 0, 0],
            &[1, 0, 1, 0],
            &[1, 0, 0, 1],
            &[0, 1, 1, 0],
            &[0, 1, 0, 1],
            &[0, 0, 1, 1],
        ]);
        let fs = facets(&p);
        assert_eq!(fs.len(), 8);
        let faces = face_lattice(&p);
        let mut by_dim: BTreeMap<usize, usize> = BTreeMap::new();
        for f in &faces {
            let fp: Vec<Vecr> = f.labels.iter().map(|&i| p[i].clone()).collect();
            *by_dim.entry(affine_dim(&fp)).or_insert(0) += 1;
        }
        assert_eq!(by_dim.get(&0), Some(&6));
        assert_eq!(by_dim.get(&1), Some(&12));
        assert_eq!(by_dim.get(&2), Some(&8));
        assert_eq!(by_dim.get(&3), Some(&1));
    }

    #[test]
    fn cuboctahedron_vertices() {
        // Orbit of (1,1,2,0): the base polytope of the flag (U14, U34),
        // 12 vertices, plus the center with multiplicity.
        let mut p = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                let mut v = vec![rint(1); 4];
                v[i] += rint(1);
                v[j] -= rint(1);
                p.push(v);
            }
        }
        // 16 labeled points, 4 of them at the center (i == j).
        let verts = vertex_labels(&p);
        assert_eq!(verts.len(), 12);
        let fs = facets(&p);
        // Cuboctahedron: 8 triangles + 6 squares = 14 facets.
        assert_eq!(fs.len(), 14);
    }
}
