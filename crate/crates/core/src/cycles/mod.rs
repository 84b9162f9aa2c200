//! Tropical cycles: weighted balanced fans of pure dimension.

mod balance;
mod intersect;
mod maps;
mod overlay;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::LatticeMatrix;
use crate::polyhedra::Cone;

pub use balance::BalanceReport;
pub use intersect::{displacement_candidate, IntersectOptions};
pub(crate) use overlay::overlay;

/// Weighted cones of one dimension `dim` in `R^ambient`.
///
/// Cones may overlap or subdivide one another; equality is semantic (see
/// [`TropicalCycle::cycle_equal`]). Zero weights are kept until
/// [`TropicalCycle::canonicalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalCycle {
    ambient: usize,
    dim: usize,
    cones: Vec<(Cone, BigInt)>,
}

impl TropicalCycle {
    pub fn from_cones(ambient: usize, dim: usize, cones: Vec<(Cone, BigInt)>) -> Result<TropicalCycle> {
        for (c, _) in &cones {
            if c.ambient() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "cone in ambient rank {} inside a cycle of rank {ambient}",
                    c.ambient()
                )));
            }
            if c.dim() != dim {
                return Err(Error::MixedDimension(format!(
                    "cone of dimension {} in a {dim}-cycle",
                    c.dim()
                )));
            }
        }
        Ok(TropicalCycle { ambient, dim, cones })
    }

    pub fn zero(ambient: usize, dim: usize) -> TropicalCycle {
        TropicalCycle { ambient, dim, cones: Vec::new() }
    }

    /// `R^n` with weight one.
    pub fn whole_space(n: usize) -> TropicalCycle {
        TropicalCycle { ambient: n, dim: n, cones: vec![(Cone::whole_space(n), BigInt::one())] }
    }

    /// The origin with the given weight.
    pub fn point(n: usize, weight: BigInt) -> TropicalCycle {
        TropicalCycle { ambient: n, dim: 0, cones: vec![(Cone::origin(n), weight)] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim
    }

    pub fn cones(&self) -> &[(Cone, BigInt)] {
        &self.cones
    }

    pub fn nonzero_cones(&self) -> impl Iterator<Item = &(Cone, BigInt)> {
        self.cones.iter().filter(|(_, w)| !w.is_zero())
    }

    /// Sum of all weights; for 0-cycles this is the degree.
    pub fn total_weight(&self) -> BigInt {
        self.cones.iter().map(|(_, w)| w).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.canonicalize().cones.is_empty()
    }

    /// Whether all weights of the canonical form are positive.
    pub fn has_positive_weights(&self) -> bool {
        self.canonicalize().cones.iter().all(|(_, w)| w > &BigInt::zero())
    }

    fn check_same_shape(&self, other: &TropicalCycle) -> Result<()> {
        if self.ambient != other.ambient || self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "{}-cycle in R^{} versus {}-cycle in R^{}",
                self.dim, self.ambient, other.dim, other.ambient
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TropicalCycle) -> Result<TropicalCycle> {
        self.check_same_shape(other)?;
        let mut cones = self.cones.clone();
        cones.extend(other.cones.iter().cloned());
        Ok(TropicalCycle { cones, ..self.clone() }.canonicalize())
    }

    /// Concatenation without canonicalizing.
    pub fn add_raw(&self, other: &TropicalCycle) -> Result<TropicalCycle> {
        self.check_same_shape(other)?;
        let mut cones = self.cones.clone();
        cones.extend(other.cones.iter().cloned());
        Ok(TropicalCycle { cones, ..self.clone() })
    }

    pub fn scale(&self, a: &BigInt) -> TropicalCycle {
        let cones = self.cones.iter().map(|(c, w)| (c.clone(), w * a)).collect();
        TropicalCycle { cones, ..self.clone() }
    }

    pub fn negated(&self) -> TropicalCycle {
        self.scale(&BigInt::from(-1))
    }

    /// Drops zero weights, sums coinciding pieces and merges adjacent cones of
    /// equal weight whose union is convex. The output order is deterministic.
    pub fn canonicalize(&self) -> TropicalCycle {
        let mut groups: BTreeMap<LatticeMatrix, Vec<(Cone, BigInt)>> = BTreeMap::new();
        for (c, w) in self.nonzero_cones() {
            groups.entry(c.lattice_basis()).or_default().push((c.clone(), w.clone()));
        }
        let mut out: Vec<(Cone, BigInt)> = Vec::new();
        for (_, group) in groups {
            let mut summed: BTreeMap<Cone, BigInt> = BTreeMap::new();
            for (c, w) in group {
                *summed.entry(c).or_insert_with(BigInt::zero) += w;
            }
            summed.retain(|_, w| !w.is_zero());
            if summed.len() <= 1 {
                out.extend(summed);
                continue;
            }
            let cones: Vec<Cone> = summed.keys().cloned().collect();
            let weights: Vec<BigInt> = summed.values().cloned().collect();
            let cells: Vec<(Cone, BigInt)> = overlay(&cones)
                .into_iter()
                .map(|(cell, idx)| {
                    let w: BigInt = idx.iter().map(|&i| &weights[i]).sum();
                    (cell, w)
                })
                .filter(|(_, w)| !w.is_zero())
                .collect();
            out.extend(merge_cells(cells));
        }
        out.sort();
        TropicalCycle { ambient: self.ambient, dim: self.dim, cones: out }
    }

    /// Semantic equality: the difference canonicalizes to the empty cycle.
    pub fn cycle_equal(&self, other: &TropicalCycle) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(self.add_raw(&other.negated())?.canonicalize().cones.is_empty())
    }

    pub fn cross_product(&self, other: &TropicalCycle) -> TropicalCycle {
        let mut cones = Vec::new();
        for (a, wa) in self.nonzero_cones() {
            for (b, wb) in other.nonzero_cones() {
                cones.push((a.product(b), wa * wb));
            }
        }
        TropicalCycle { ambient: self.ambient + other.ambient, dim: self.dim + other.dim, cones }
    }

    /// Image of the support under a linear map, as a list of cones.
    pub fn support(&self) -> Vec<Cone> {
        self.canonicalize().cones.into_iter().map(|(c, _)| c).collect()
    }

    /// Whether a point lies in the support of the canonical form.
    pub fn support_contains(&self, x: &[BigInt]) -> bool {
        self.canonicalize().cones.iter().any(|(c, _)| c.contains_point(x))
    }
}

fn convex_union(c1: &Cone, c2: &Cone) -> Option<Cone> {
    let shared = c1.facets().iter().any(|a| {
        let na: Vec<BigInt> = a.iter().map(|x| -x).collect();
        c2.facets().contains(&na)
    });
    if !shared {
        return None;
    }
    let mut rays = c1.rays().to_vec();
    rays.extend(c2.rays().iter().cloned());
    let mut lin = c1.lineality().to_vec();
    lin.extend(c2.lineality().iter().cloned());
    let u = Cone::new(c1.ambient(), rays, lin).ok()?;
    if u.dim() != c1.dim() {
        return None;
    }
    for a in c1.facets() {
        let violated = u.generators().iter().any(|r| crate::lattice::dot(a, r) < BigInt::zero());
        if violated {
            let na: Vec<BigInt> = a.iter().map(|x| -x).collect();
            if !c2.contains(&u.cut(&na)) {
                return None;
            }
        }
    }
    Some(u)
}

fn merge_cells(mut cells: Vec<(Cone, BigInt)>) -> Vec<(Cone, BigInt)> {
    cells.sort();
    'outer: loop {
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                if cells[i].1 != cells[j].1 {
                    continue;
                }
                if let Some(u) = convex_union(&cells[i].0, &cells[j].0) {
                    cells[i].0 = u;
                    cells.remove(j);
                    continue 'outer;
                }
            }
        }
        break;
    }
    cells
}

pub fn canonicalize(c: &TropicalCycle) -> TropicalCycle {
    c.canonicalize()
}

pub fn cycle_equal(a: &TropicalCycle, b: &TropicalCycle) -> Result<bool> {
    a.cycle_equal(b)
}

pub fn add(a: &TropicalCycle, b: &TropicalCycle) -> Result<TropicalCycle> {
    a.add(b)
}

pub fn scale(c: &TropicalCycle, a: &BigInt) -> TropicalCycle {
    c.scale(a)
}

pub fn cross_product(a: &TropicalCycle, b: &TropicalCycle) -> TropicalCycle {
    a.cross_product(b)
}

pub use balance::{is_balanced, lineality_space};
pub use intersect::{intersection_number, stable_intersection, stable_intersection_with};
pub use maps::{pullback, pushforward};

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::lattice::int;

    pub fn ray(n: usize, v: &[i64]) -> Cone {
        Cone::from_i64(n, &[v], &[])
    }

    pub fn rays_cycle(n: usize, rays: &[(&[i64], i64)]) -> TropicalCycle {
        let cones = rays.iter().map(|(v, w)| (ray(n, v), int(*w))).collect();
        TropicalCycle::from_cones(n, 1, cones).unwrap()
    }

    pub fn tropical_line() -> TropicalCycle {
        rays_cycle(2, &[(&[-1, 0], 1), (&[0, -1], 1), (&[1, 1], 1)])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::lattice::int;

    #[test]
    fn duplicated_ray_sums() {
        let c = rays_cycle(2, &[(&[1, 0], 1), (&[1, 0], 1)]).canonicalize();
        assert_eq!(c.cones().len(), 1);
        assert_eq!(c.cones()[0].1, int(2));
    }

    #[test]
    fn zero_weight_is_ignored() {
        let line = tropical_line();
        let padded = line.add_raw(&rays_cycle(2, &[(&[3, 1], 0)])).unwrap();
        assert!(line.cycle_equal(&padded).unwrap());
    }

    #[test]
    fn subdivided_ray_equals_ray() {
        let line = tropical_line();
        let mut cones = line.cones().to_vec();
        cones.push((ray(2, &[2, 2]), int(0)));
        let sub = TropicalCycle::from_cones(2, 1, cones).unwrap();
        assert!(line.cycle_equal(&sub).unwrap());
    }

    #[test]
    fn subdivided_plane_region_merges() {
        let a = Cone::from_i64(2, &[&[1, 0], &[1, 1]], &[]);
        let b = Cone::from_i64(2, &[&[1, 1], &[0, 1]], &[]);
        let c = TropicalCycle::from_cones(2, 2, vec![(a, int(3)), (b, int(3))]).unwrap().canonicalize();
        assert_eq!(c.cones(), &[(Cone::from_i64(2, &[&[1, 0], &[0, 1]], &[]), int(3))]);
    }

    #[test]
    fn overlapping_cones_cancel() {
        let a = Cone::from_i64(2, &[&[1, 0], &[0, 1]], &[]);
        let b = Cone::from_i64(2, &[&[1, 0], &[1, 1]], &[]);
        let c = Cone::from_i64(2, &[&[1, 1], &[0, 1]], &[]);
        let x = TropicalCycle::from_cones(2, 2, vec![(a, int(1)), (b, int(-1)), (c, int(-1))]).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn add_and_scale() {
        let line = tropical_line();
        let z = TropicalCycle::zero(2, 1);
        assert!(line.add(&z).unwrap().cycle_equal(&line).unwrap());
        assert!(line.add(&line.scale(&int(-1))).unwrap().is_zero());
        let twice = line.add(&line).unwrap();
        assert!(twice.cones().iter().all(|(_, w)| *w == int(2)));
        assert!(line.add(&TropicalCycle::zero(2, 0)).is_err());
    }

    #[test]
    fn cross_products() {
        let line = tropical_line();
        let pt = TropicalCycle::point(0, int(1));
        assert!(pt.cross_product(&line).cycle_equal(&line).unwrap());
        assert!(TropicalCycle::zero(1, 0).cross_product(&line).is_zero());
        let c = TropicalCycle::whole_space(1).cross_product(&line);
        assert_eq!((c.ambient(), c.dim()), (3, 2));
        assert!(c.cones().iter().all(|(cone, _)| cone.lineality() == [crate::lattice::vector(&[1, 0, 0])]));
        assert!(is_balanced(&c).balanced);
    }
}
