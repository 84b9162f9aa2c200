use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::overlay::overlay;
use super::TropicalCycle;
use crate::lattice::{dot, kernel_of_rows, LatticeMatrix, LatticeVector};
use crate::polyhedra::Cone;

/// Outcome of the balancing test; `failures` lists codimension-one cells
/// around which the weighted normals do not sum into the cell's span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    pub failures: Vec<Cone>,
}

fn add_into(acc: &mut [BigInt], v: &[BigInt], w: &BigInt) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += w * x;
    }
}

pub fn is_balanced(c: &TropicalCycle) -> BalanceReport {
    let n = c.ambient();
    if c.dim() == 0 {
        return BalanceReport { balanced: true, failures: Vec::new() };
    }
    let mut groups: BTreeMap<LatticeMatrix, Vec<(Cone, LatticeVector)>> = BTreeMap::new();
    for (sigma, w) in c.nonzero_cones() {
        for (a, f) in sigma.facet_faces() {
            let u = sigma.lattice_normal(&a);
            let mut contrib = vec![BigInt::zero(); n];
            add_into(&mut contrib, &u, w);
            groups.entry(f.lattice_basis()).or_default().push((f, contrib));
        }
    }
    let in_span = |f: &Cone, v: &[BigInt]| f.equations().iter().all(|e| dot(e, v).is_zero());
    let mut failures = Vec::new();
    for (_, group) in groups {
        let mut by_cone: BTreeMap<Cone, LatticeVector> = BTreeMap::new();
        for (f, v) in group {
            let e = by_cone.entry(f).or_insert_with(|| vec![BigInt::zero(); n]);
            add_into(e, &v, &BigInt::from(1));
        }
        if by_cone.len() == 1 {
            let (f, v) = by_cone.into_iter().next().expect("one cell");
            if !in_span(&f, &v) {
                failures.push(f);
            }
            continue;
        }
        let faces: Vec<Cone> = by_cone.keys().cloned().collect();
        let vals: Vec<LatticeVector> = by_cone.values().cloned().collect();
        for (cell, idx) in overlay(&faces) {
            let mut s = vec![BigInt::zero(); n];
            for i in idx {
                add_into(&mut s, &vals[i], &BigInt::from(1));
            }
            if !in_span(&cell, &s) {
                failures.push(cell);
            }
        }
    }
    failures.sort();
    BalanceReport { balanced: failures.is_empty(), failures }
}

/// Largest subspace `L` with `C + L = C`, as a saturated basis.
pub fn lineality_space(c: &TropicalCycle) -> LatticeMatrix {
    let n = c.ambient();
    let canon = c.canonicalize();
    let mut constraints: Vec<LatticeVector> = Vec::new();
    let mut spans: BTreeMap<LatticeMatrix, Vec<(Cone, BigInt)>> = BTreeMap::new();
    for (sigma, w) in canon.cones() {
        spans.entry(sigma.lattice_basis()).or_default().push((sigma.clone(), w.clone()));
    }
    for (_, group) in spans {
        constraints.extend(group[0].0.equations().iter().cloned());
        let mut walls: BTreeMap<LatticeMatrix, (LatticeVector, BTreeMap<Cone, BigInt>)> = BTreeMap::new();
        for (sigma, w) in &group {
            for (a, f) in sigma.facet_faces() {
                let flip = a.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
                let normal: LatticeVector = if flip { a.iter().map(|x| -x).collect() } else { a.clone() };
                let signed = if flip { -w.clone() } else { w.clone() };
                let entry = walls.entry(f.lattice_basis()).or_insert_with(|| (normal, BTreeMap::new()));
                *entry.1.entry(f).or_insert_with(BigInt::zero) += signed;
            }
        }
        for (_, (normal, pieces)) in walls {
            let essential = if pieces.len() == 1 {
                pieces.values().any(|w| !w.is_zero())
            } else {
                let faces: Vec<Cone> = pieces.keys().cloned().collect();
                let ws: Vec<BigInt> = pieces.values().cloned().collect();
                overlay(&faces).iter().any(|(_, idx)| !idx.iter().map(|&i| &ws[i]).sum::<BigInt>().is_zero())
            };
            if essential {
                constraints.push(normal);
            }
        }
    }
    kernel_of_rows(n, &constraints)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::lattice::int;

    #[test]
    fn line_is_balanced() {
        assert!(is_balanced(&tropical_line()).balanced);
    }

    #[test]
    fn single_ray_is_not() {
        let r = is_balanced(&rays_cycle(2, &[(&[1, 0], 1)]));
        assert!(!r.balanced);
        assert_eq!(r.failures, vec![Cone::origin(2)]);
    }

    #[test]
    fn whole_space_is_balanced() {
        assert!(is_balanced(&TropicalCycle::whole_space(3)).balanced);
    }

    #[test]
    fn weighted_rays_need_lattice_normals() {
        let c = rays_cycle(2, &[(&[1, 0], 2), (&[-2, 1], 1), (&[0, -1], 1)]);
        assert!(is_balanced(&c).balanced);
        let d = rays_cycle(2, &[(&[1, 0], 1), (&[-2, 1], 1), (&[0, -1], 1)]);
        assert!(!is_balanced(&d).balanced);
    }

    #[test]
    fn non_fan_half_planes() {
        let upper = Cone::from_i64(2, &[&[0, 1]], &[&[1, 0]]);
        let q1 = Cone::from_i64(2, &[&[1, 0], &[0, -1]], &[]);
        let q2 = Cone::from_i64(2, &[&[-1, 0], &[0, -1]], &[]);
        let c = TropicalCycle::from_cones(2, 2, vec![(upper, int(1)), (q1, int(1)), (q2, int(1))]).unwrap();
        assert!(is_balanced(&c).balanced);
        assert_eq!(lineality_space(&c).row_count(), 2);
    }

    #[test]
    fn lineality_examples() {
        assert_eq!(lineality_space(&TropicalCycle::whole_space(3)).row_count(), 3);
        assert_eq!(lineality_space(&tropical_line()).row_count(), 0);
        let cyl = TropicalCycle::whole_space(1).cross_product(&tropical_line());
        let l = lineality_space(&cyl);
        assert_eq!(l.rows(), &[crate::lattice::vector(&[1, 0, 0])]);
        assert_eq!(lineality_space(&TropicalCycle::zero(2, 1)).row_count(), 2);
    }
}
