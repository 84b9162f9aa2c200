use num_bigint::BigInt;

use super::TropicalCycle;
use crate::error::{Error, Result};
use crate::genericity::ProjectionMap;
use crate::lattice::{image_lattice_index, rank};

/// Images of the cones that keep their dimension, weighted by the lattice index.
pub fn pushforward(p: &ProjectionMap, c: &TropicalCycle) -> Result<TropicalCycle> {
    let m = p.matrix();
    if m.col_count() != c.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "map from R^{} applied to a cycle in R^{}",
            m.col_count(),
            c.ambient()
        )));
    }
    let r = m.row_count();
    let k = c.dim();
    if k > r {
        return Ok(TropicalCycle::zero(r, k));
    }
    let mut cones = Vec::new();
    for (sigma, w) in c.nonzero_cones() {
        let images: Vec<_> = sigma.span_generators().iter().map(|g| m.apply(g)).collect();
        if rank(&images) != k {
            continue;
        }
        let index = image_lattice_index(m, &sigma.lattice_basis())?;
        cones.push((sigma.image(m), w * index));
    }
    Ok(TropicalCycle::from_cones(r, k, cones)?.canonicalize())
}

/// Preimages of the cones with unchanged weights.
pub fn pullback(p: &ProjectionMap, c: &TropicalCycle) -> Result<TropicalCycle> {
    let m = p.matrix();
    if m.row_count() != c.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "map to R^{} pulling back a cycle in R^{}",
            m.row_count(),
            c.ambient()
        )));
    }
    if !p.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let n = m.col_count();
    let dim = c.dim() + n - m.row_count();
    let cones: Vec<(crate::polyhedra::Cone, BigInt)> =
        c.nonzero_cones().map(|(s, w)| (s.preimage(m), w.clone())).collect();
    TropicalCycle::from_cones(n, dim, cones)
}
