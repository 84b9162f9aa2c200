use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lattice::{dot, LatticeVector};
use crate::polyhedra::Cone;

fn sign_normalized(a: &[BigInt]) -> LatticeVector {
    match a.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => a.iter().map(|y| -y).collect(),
        _ => a.to_vec(),
    }
}

fn splits(c: &Cone, h: &[BigInt]) -> bool {
    if c.lineality().iter().any(|l| !dot(h, l).is_zero()) {
        return true;
    }
    let vals: Vec<BigInt> = c.rays().iter().map(|r| dot(h, r)).collect();
    vals.iter().any(Signed::is_positive) && vals.iter().any(Signed::is_negative)
}

/// Common refinement of equal-dimensional cones with a common linear span.
///
/// Every cone is cut by the facet hyperplanes of all cones; the resulting cells
/// are returned with the indices of the input cones covering them.
pub(crate) fn overlay(cones: &[Cone]) -> Vec<(Cone, Vec<usize>)> {
    let Some(first) = cones.first() else { return Vec::new() };
    let d = first.dim();
    let mut hyperplanes: BTreeSet<LatticeVector> = BTreeSet::new();
    for c in cones {
        for a in c.facets() {
            hyperplanes.insert(sign_normalized(a));
        }
    }
    let mut cells: BTreeMap<Cone, Vec<usize>> = BTreeMap::new();
    for (i, c) in cones.iter().enumerate() {
        let mut pieces = vec![c.clone()];
        for h in &hyperplanes {
            let mut next = Vec::with_capacity(pieces.len());
            for p in pieces {
                if splits(&p, h) {
                    let nh: LatticeVector = h.iter().map(|x| -x).collect();
                    for q in [p.cut(h), p.cut(&nh)] {
                        if q.dim() == d {
                            next.push(q);
                        }
                    }
                } else {
                    next.push(p);
                }
            }
            pieces = next;
        }
        for p in pieces {
            cells.entry(p).or_default().push(i);
        }
    }
    cells.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_sectors() {
        let a = Cone::from_i64(2, &[&[1, 0], &[0, 1]], &[]);
        let b = Cone::from_i64(2, &[&[1, 1], &[-1, 1]], &[]);
        let cells = overlay(&[a, b]);
        assert_eq!(cells.len(), 3);
        assert_eq!(cells.iter().filter(|(_, idx)| idx.len() == 2).count(), 1);
    }

    #[test]
    fn line_against_ray() {
        let line = Cone::from_i64(2, &[], &[&[1, 0]]);
        let ray = Cone::from_i64(2, &[&[1, 0]], &[]);
        let cells = overlay(&[line, ray]);
        assert_eq!(cells.len(), 2);
    }
}
