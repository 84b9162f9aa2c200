use crate::cycles::TropicalCycle;
use crate::error::{Error, Result};
use crate::lattice::{rank, LatticeVector};
use crate::polyhedra::Cone;

use super::ProjectionMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenericityWitness {
    /// A top cone whose span meets the kernel.
    Collapsed(Cone),
    /// Two top cones whose images overlap in full dimension.
    Overlap(Cone, Cone),
    /// A top cone whose interior fibers have dimension `fiber_dim`.
    FiberTooLarge { cone: Cone, fiber_dim: usize },
}

/// Outcome of the genericity predicates. A flag is `None` when it was not evaluated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenericityReport {
    pub immersed: Option<bool>,
    pub submersed: Option<bool>,
    pub witnesses: Vec<GenericityWitness>,
}

impl GenericityReport {
    pub fn holds(&self) -> bool {
        self.immersed != Some(false) && self.submersed != Some(false)
    }
}

fn check_ambient(p: &ProjectionMap, k: &TropicalCycle) -> Result<()> {
    if p.source_rank() != k.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "projection from R^{} applied to a complex in R^{}",
            p.source_rank(),
            k.ambient()
        )));
    }
    Ok(())
}

fn top_cones(k: &TropicalCycle) -> Vec<Cone> {
    let mut cones: Vec<Cone> = k.nonzero_cones().map(|(c, _)| c.clone()).collect();
    cones.sort();
    cones.dedup();
    cones
}

/// Rank of the image of the linear span of `sigma`.
pub(crate) fn image_rank(p: &ProjectionMap, sigma: &Cone) -> usize {
    let images: Vec<LatticeVector> = sigma.span_generators().iter().map(|g| p.matrix().apply(g)).collect();
    rank(&images)
}

fn immersion_witnesses(p: &ProjectionMap, cones: &[Cone], k: usize) -> Vec<GenericityWitness> {
    let mut out = Vec::new();
    for s in cones {
        if image_rank(p, s) != k {
            out.push(GenericityWitness::Collapsed(s.clone()));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let images: Vec<Cone> = cones.iter().map(|c| c.image(p.matrix())).collect();
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            if images[i].intersection(&images[j]).dim() >= k {
                out.push(GenericityWitness::Overlap(cones[i].clone(), cones[j].clone()));
            }
        }
    }
    out
}

/// Injectivity of `p` on a dense subset of the support of `k`.
pub fn is_immersed(p: &ProjectionMap, k: &TropicalCycle) -> Result<GenericityReport> {
    check_ambient(p, k)?;
    let witnesses = immersion_witnesses(p, &top_cones(k), k.dim());
    Ok(GenericityReport { immersed: Some(witnesses.is_empty()), submersed: None, witnesses })
}

/// Every fiber of `p` on the support of `k` has dimension at most `dim k - rank p`.
pub fn is_submersed(p: &ProjectionMap, k: &TropicalCycle) -> Result<GenericityReport> {
    check_ambient(p, k)?;
    let r = p.target_rank();
    let cones = top_cones(k);
    if cones.is_empty() {
        return Ok(GenericityReport { immersed: None, submersed: Some(true), witnesses: Vec::new() });
    }
    if k.dim() < r {
        return Err(Error::InvalidInput(format!(
            "submersion of a {}-dimensional complex by a rank-{r} map is undefined",
            k.dim()
        )));
    }
    let allowed = k.dim() - r;
    let witnesses: Vec<GenericityWitness> = cones
        .into_iter()
        .filter_map(|s| {
            let fiber_dim = s.dim() - image_rank(p, &s);
            (fiber_dim > allowed).then_some(GenericityWitness::FiberTooLarge { cone: s, fiber_dim })
        })
        .collect();
    Ok(GenericityReport { immersed: None, submersed: Some(witnesses.is_empty()), witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, LatticeMatrix};
    use crate::polyhedra::LatticePolytope;

    fn rays(n: usize, rs: &[&[i64]]) -> TropicalCycle {
        let cones = rs.iter().map(|r| (Cone::from_i64(n, &[r], &[]), int(1))).collect();
        TropicalCycle::from_cones(n, 1, cones).unwrap()
    }

    fn map(n: usize, rows: &[&[i64]]) -> ProjectionMap {
        ProjectionMap::new(LatticeMatrix::from_i64(n, rows)).unwrap()
    }

    fn plane_skeleton() -> TropicalCycle {
        LatticePolytope::dilated_simplex(3, 1).trop().unwrap()
    }

    #[test]
    fn immersion_examples() {
        let x = map(2, &[&[1, 0]]);
        let r = is_immersed(&x, &rays(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(r.immersed, Some(false));
        assert!(matches!(r.witnesses[0], GenericityWitness::Collapsed(_)));
        let r = is_immersed(&x, &rays(2, &[&[1, 0], &[1, 1]])).unwrap();
        assert_eq!(r.immersed, Some(false));
        assert!(matches!(r.witnesses[0], GenericityWitness::Overlap(..)));
        assert!(is_immersed(&x, &rays(2, &[&[1, 0], &[-1, 1]])).unwrap().holds());
    }

    #[test]
    fn submersion_examples() {
        let p = map(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(is_submersed(&p, &TropicalCycle::whole_space(3)).unwrap().holds());
        let r = is_submersed(&p, &plane_skeleton()).unwrap();
        assert_eq!(r.submersed, Some(false));
        assert_eq!(r.witnesses.len(), 3);
        let q = map(3, &[&[2, -1, 0], &[3, 0, -1]]);
        assert_eq!(q.kernel().rows(), &[crate::lattice::vector(&[1, 2, 3])]);
        assert!(is_submersed(&q, &plane_skeleton()).unwrap().holds());
    }

    #[test]
    fn low_dimension_submersion_is_rejected() {
        let p = map(2, &[&[1, 0], &[0, 1]]);
        assert!(is_submersed(&p, &rays(2, &[&[1, 0]])).is_err());
        assert!(is_submersed(&p, &TropicalCycle::zero(2, 1)).unwrap().holds());
    }
}
