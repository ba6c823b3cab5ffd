//! Coherent subdivisions of weighted point configurations via the lower
//! hull of the lifted points. Returns every face of the subdivision (all
//! dimensions, including vertices), each with an exact witness vector that
//! re-evaluates to it.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Signed};

use crate::error::Error;
use crate::linalg::{self, Vecr};
use crate::polyhedral::hull;
use crate::trop::Rat;
use crate::Result;

/// A face `Δ_w^witness` of the coherent subdivision: the labels at which
/// `⟨witness, a_i⟩ + w_i` is minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivFace {
    pub labels: BTreeSet<usize>,
    pub witness: Vecr,
}

/// The labels minimizing `⟨u, a_i⟩ + w_i`.
pub fn weighted_argmin(points: &[Vecr], lifts: &[Rat], u: &[Rat]) -> BTreeSet<usize> {
    let vals: Vec<Rat> = points
        .iter()
        .zip(lifts)
        .map(|(p, w)| linalg::dot(u, p) + w)
        .collect();
    let min = vals.iter().min().unwrap().clone();
    vals.iter()
        .enumerate()
        .filter(|(_, v)| **v == min)
        .map(|(i, _)| i)
        .collect()
}

/// All faces of the coherent subdivision induced by `lifts` on `points`.
///
/// Labels sharing a placement are merged into a site carrying the minimal
/// weight; labels lifted strictly above their site never appear in a face.
pub fn lower_hull_faces(points: &[Vecr], lifts: &[Rat]) -> Result<Vec<SubdivFace>> {
    if points.is_empty() {
        return Err(Error::input("empty point configuration"));
    }
    if points.len() != lifts.len() {
        return Err(Error::input(format!(
            "{} points but {} lifts",
            points.len(),
            lifts.len()
        )));
    }
    let n = points[0].len();
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::input("points of mixed dimension"));
    }

    // Sites: distinct placements with their minimal lift.
    let mut site_of: BTreeMap<Vecr, usize> = BTreeMap::new();
    let mut sites: Vec<Vecr> = Vec::new();
    let mut site_lift: Vec<Rat> = Vec::new();
    let mut site_labels: Vec<Vec<usize>> = Vec::new();
    let mut label_site: Vec<usize> = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        let s = match site_of.get(p) {
            Some(&s) => {
                if lifts[i] < site_lift[s] {
                    site_lift[s] = lifts[i].clone();
                }
                site_labels[s].push(i);
                s
            }
            None => {
                let s = sites.len();
                site_of.insert(p.clone(), s);
                sites.push(p.clone());
                site_lift.push(lifts[i].clone());
                site_labels.push(vec![i]);
                s
            }
        };
        label_site.push(s);
    }

    let site_faces = lower_hull_site_faces(&sites, &site_lift)?;

    // Back to label sets; a label belongs to a face iff its site does and
    // its lift equals the site lift.
    let mut out = Vec::new();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for f in site_faces {
        let labels: BTreeSet<usize> = f
            .labels
            .iter()
            .flat_map(|&s| site_labels[s].iter().copied())
            .filter(|&i| lifts[i] == site_lift[label_site[i]])
            .collect();
        debug_assert_eq!(weighted_argmin(points, lifts, &f.witness), labels);
        if seen.insert(labels.clone()) {
            out.push(SubdivFace {
                labels,
                witness: f.witness,
            });
        }
    }
    out.sort_by(|a, b| {
        (a.labels.len(), &a.labels).cmp(&(b.labels.len(), &b.labels))
    });
    Ok(out)
}

/// Core computation over distinct sites.
fn lower_hull_site_faces(sites: &[Vecr], lifts: &[Rat]) -> Result<Vec<SubdivFace>> {
    let n = sites[0].len();

    // Trivial subdivision: the lift is an affine function of the placement,
    // w_i = c - <u0, a_i>; the faces are then the faces of the unlifted
    // configuration shifted by u0.
    if let Some(u0) = affine_lift_witness(sites, lifts, n) {
        return Ok(hull::face_lattice(sites)
            .into_iter()
            .map(|f| SubdivFace {
                labels: f.labels,
                witness: linalg::add(&u0, &f.witness),
            })
            .collect());
    }

    // Lifted hull; lower facets are those whose inner normal has a positive
    // last coordinate.
    let lifted: Vec<Vecr> = sites
        .iter()
        .zip(lifts)
        .map(|(p, w)| {
            let mut q = p.clone();
            q.push(w.clone());
            q
        })
        .collect();
    let mut faces: Vec<SubdivFace> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for facet in hull::facets(&lifted) {
        let last = facet.normal[n].clone();
        if !last.is_positive() {
            continue;
        }
        let witness: Vecr = facet.normal[..n].iter().map(|x| x / &last).collect();
        let labels = facet.incident.clone();
        debug_assert_eq!(weighted_argmin(sites, lifts, &witness), labels);
        // Proper faces of this cell are faces of its placements alone; the
        // lifts agree with an affine function on the cell.
        let cell_sites: Vec<usize> = labels.iter().copied().collect();
        let cell_points: Vec<Vecr> = cell_sites.iter().map(|&s| sites[s].clone()).collect();
        for sub in hull::face_lattice(&cell_points) {
            let sub_global: BTreeSet<usize> =
                sub.labels.iter().map(|&k| cell_sites[k]).collect();
            if !seen.insert(sub_global.clone()) {
                continue;
            }
            let w = if sub_global == labels {
                witness.clone()
            } else {
                perturb_witness(sites, lifts, &witness, &labels, &sub.witness, &sub_global)
            };
            debug_assert_eq!(weighted_argmin(sites, lifts, &w), sub_global);
            faces.push(SubdivFace {
                labels: sub_global,
                witness: w,
            });
        }
    }
    if faces.is_empty() {
        return Err(Error::internal(
            "nontrivial lift produced no lower facets",
        ));
    }
    Ok(faces)
}

/// Does some `u0` make `w_i + <u0, a_i>` constant across sites?
fn affine_lift_witness(sites: &[Vecr], lifts: &[Rat], n: usize) -> Option<Vecr> {
    // Unknowns (u0, c): <a_i, u0> - c = -w_i.
    let rows: Vec<Vecr> = sites
        .iter()
        .map(|p| {
            let mut r = p.clone();
            r.push(-Rat::one());
            r
        })
        .collect();
    let rhs: Vecr = lifts.iter().map(|w| -w.clone()).collect();
    linalg::solve(&rows, &rhs, n + 1).map(|mut sol| {
        sol.truncate(n);
        sol
    })
}

/// Witness for a proper subface: `u_F + ε v`, with ε small enough exactly.
fn perturb_witness(
    sites: &[Vecr],
    lifts: &[Rat],
    u_f: &[Rat],
    cell: &BTreeSet<usize>,
    v: &[Rat],
    target: &BTreeSet<usize>,
) -> Vecr {
    let val = |i: usize| -> Rat { linalg::dot(u_f, &sites[i]) + &lifts[i] };
    let base = val(*cell.first().unwrap());
    let m_v = target
        .iter()
        .map(|&i| linalg::dot(v, &sites[i]))
        .min()
        .unwrap();
    let mut eps = Rat::one();
    for k in 0..sites.len() {
        if cell.contains(&k) {
            continue;
        }
        let delta = val(k) - &base; // > 0 off the cell
        let growth = &m_v - &linalg::dot(v, &sites[k]);
        if growth.is_positive() {
            let bound = &delta / &growth;
            let half = &bound / &(Rat::one() + Rat::one());
            if half < eps {
                eps = half;
            }
        }
    }
    linalg::add(u_f, &linalg::scale(v, &eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trop::{rint, Rat};

    fn pts(rows: &[&[i64]]) -> Vec<Vecr> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rint(x)).collect())
            .collect()
    }

    fn lifts(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rint(x)).collect()
    }

    fn maximal(faces: &[SubdivFace]) -> Vec<BTreeSet<usize>> {
        faces
            .iter()
            .filter(|f| {
                !faces
                    .iter()
                    .any(|g| g.labels != f.labels && f.labels.is_subset(&g.labels))
            })
            .map(|f| f.labels.clone())
            .collect()
    }

    #[test]
    fn split_square() {
        // Square 00,10,01,11 lifted by (0,0,0,1): two triangles.
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let faces = lower_hull_faces(&p, &lifts(&[0, 0, 0, 1])).unwrap();
        let max = maximal(&faces);
        assert_eq!(max.len(), 2);
        assert!(max.contains(&[0, 1, 2].into_iter().collect()));
        assert!(max.contains(&[1, 2, 3].into_iter().collect()));
        // Faces: 2 triangles + shared diagonal + 4 outer edges + 4 vertices.
        assert_eq!(faces.len(), 11);
    }

    #[test]
    fn trivial_subdivision() {
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let faces = lower_hull_faces(&p, &lifts(&[0, 0, 0, 0])).unwrap();
        let max = maximal(&faces);
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].len(), 4);
        // Affine lifts are also trivial.
        let faces2 = lower_hull_faces(&p, &lifts(&[5, 3, 9, 7])).unwrap();
        assert_eq!(maximal(&faces2), max);
    }

    #[test]
    fn octahedron_split_by_one_lift() {
        // Zero-valuated U(2,4) perturbed at basis 34: two square pyramids
        // sharing the square 13,14,23,24.
        let p = pts(&[
            &[1, 1, 0, 0],
            &[1, 0, 1, 0],
            &[1, 0, 0, 1],
            &[0, 1, 1, 0],
            &[0, 1, 0, 1],
            &[0, 0, 1, 1],
        ]);
        let faces = lower_hull_faces(&p, &lifts(&[0, 0, 0, 0, 0, 1])).unwrap();
        let max = maximal(&faces);
        assert_eq!(max.len(), 2);
        assert!(max.contains(&[0, 1, 2, 3, 4].into_iter().collect()));
        assert!(max.contains(&[1, 2, 3, 4, 5].into_iter().collect()));
        let square: BTreeSet<usize> = [1, 2, 3, 4].into_iter().collect();
        assert!(faces.iter().any(|f| f.labels == square));
    }

    #[test]
    fn duplicate_placements_and_tightness() {
        // Two labels at the same placement with different lifts; the heavier
        // one is in no face.
        let p = pts(&[&[0], &[1], &[1]]);
        let faces = lower_hull_faces(&p, &lifts(&[0, 0, 3])).unwrap();
        assert!(faces.iter().all(|f| !f.labels.contains(&2)));
        // Equal lifts at one placement always co-occur.
        let faces = lower_hull_faces(&p, &lifts(&[0, 2, 2])).unwrap();
        for f in &faces {
            assert_eq!(f.labels.contains(&1), f.labels.contains(&2));
        }
    }

    #[test]
    fn witnesses_reevaluate() {
        let p = pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[2, 2]]);
        let faces = lower_hull_faces(&p, &lifts(&[0, 1, 1, 0, 3])).unwrap();
        for f in &faces {
            assert_eq!(weighted_argmin(&p, &lifts(&[0, 1, 1, 0, 3]), &f.witness), f.labels);
        }
    }
}
