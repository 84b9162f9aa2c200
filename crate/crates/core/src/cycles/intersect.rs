use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::TropicalCycle;
use crate::error::{Error, Result};
use crate::lattice::{dot, rank, saturation_index, LatticeVector};
use crate::polyhedra::Cone;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectOptions {
    pub retry_budget: usize,
    /// Position in the displacement sequence at which to start.
    pub offset: usize,
    pub parallel: bool,
}

impl Default for IntersectOptions {
    fn default() -> Self {
        IntersectOptions { retry_budget: 64, offset: 0, parallel: true }
    }
}

/// The `j`-th displacement candidate `(1, t, t^2, ..., t^(n-1))` with `t = 2^j + 1`.
pub fn displacement_candidate(n: usize, j: usize) -> LatticeVector {
    let t = (BigInt::from(1) << j) + 1;
    let mut v = Vec::with_capacity(n);
    let mut x = BigInt::from(1);
    for _ in 0..n {
        v.push(x.clone());
        x *= &t;
    }
    v
}

struct Pair {
    meet: Cone,
    weight: BigInt,
    /// Facet normals of `sigma - tau`.
    walls: Vec<LatticeVector>,
}

fn transversal_pair(sigma: &Cone, ws: &BigInt, tau: &Cone, wt: &BigInt, n: usize, e: usize) -> Option<Pair> {
    let mut spans = sigma.span_generators();
    spans.extend(tau.span_generators());
    if rank(&spans) != n {
        return None;
    }
    let meet = sigma.intersection(tau);
    if meet.dim() != e {
        return None;
    }
    let diff = sigma.minus(tau);
    let mut bases = sigma.lattice_basis().into_rows();
    bases.extend(tau.lattice_basis().into_rows());
    let index = saturation_index(n, &bases);
    Some(Pair { meet, weight: ws * wt * index, walls: diff.facets().to_vec() })
}

pub fn stable_intersection(a: &TropicalCycle, b: &TropicalCycle) -> Result<TropicalCycle> {
    stable_intersection_with(a, b, &IntersectOptions::default())
}

/// Fan displacement product: the pair `(sigma, tau)` contributes
/// `w_sigma * w_tau * [N : N_sigma + N_tau]` on `sigma ∩ tau` when the
/// displacement `v` lies in the interior of `sigma - tau`.
pub fn stable_intersection_with(a: &TropicalCycle, b: &TropicalCycle, opts: &IntersectOptions) -> Result<TropicalCycle> {
    let n = a.ambient();
    if b.ambient() != n {
        return Err(Error::DimensionMismatch(format!(
            "cycles in R^{} and R^{}",
            a.ambient(),
            b.ambient()
        )));
    }
    if a.dim() + b.dim() < n {
        return Ok(TropicalCycle::zero(n, 0));
    }
    let e = a.dim() + b.dim() - n;
    let left: Vec<&(Cone, BigInt)> = a.nonzero_cones().collect();
    let right: Vec<&(Cone, BigInt)> = b.nonzero_cones().collect();
    let jobs: Vec<(usize, usize)> =
        (0..left.len()).flat_map(|i| (0..right.len()).map(move |j| (i, j))).collect();
    let eval = |&(i, j): &(usize, usize)| {
        let (s, ws) = left[i];
        let (t, wt) = right[j];
        transversal_pair(s, ws, t, wt, n, e)
    };
    let pairs: Vec<Pair> = if opts.parallel {
        jobs.par_iter().filter_map(eval).collect()
    } else {
        jobs.iter().filter_map(eval).collect()
    };
    if pairs.is_empty() {
        return Ok(TropicalCycle::zero(n, e));
    }
    let v = (opts.offset..opts.offset + opts.retry_budget)
        .map(|j| displacement_candidate(n, j))
        .find(|v| pairs.iter().all(|p| p.walls.iter().all(|w| !dot(w, v).is_zero())))
        .ok_or(Error::DisplacementExhausted(opts.retry_budget))?;
    let cones: Vec<(Cone, BigInt)> = pairs
        .into_iter()
        .filter(|p| p.walls.iter().all(|w| dot(w, &v).is_positive()))
        .map(|p| (p.meet, p.weight))
        .collect();
    Ok(TropicalCycle::from_cones(n, e, cones)?.canonicalize())
}

pub fn intersection_number(a: &TropicalCycle, b: &TropicalCycle) -> Result<BigInt> {
    if a.ambient() != b.ambient() || a.dim() + b.dim() != a.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "intersection number needs complementary dimensions, got {} and {} in R^{}",
            a.dim(),
            b.dim(),
            a.ambient()
        )));
    }
    Ok(stable_intersection(a, b)?.total_weight())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::lattice::int;
    use crate::polyhedra::LatticePolytope;

    #[test]
    fn line_meets_line_once() {
        let l = tropical_line();
        let p = stable_intersection(&l, &l).unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.total_weight(), int(1));
        assert_eq!(intersection_number(&l, &l).unwrap(), int(1));
    }

    #[test]
    fn whole_space_is_identity() {
        let l = tropical_line();
        let p = stable_intersection(&l, &TropicalCycle::whole_space(2)).unwrap();
        assert!(p.cycle_equal(&l).unwrap());
    }

    #[test]
    fn bezout_for_simplices() {
        for d in 1..=3 {
            for e in 1..=3 {
                let a = LatticePolytope::dilated_simplex(2, d).trop().unwrap();
                let b = LatticePolytope::dilated_simplex(2, e).trop().unwrap();
                assert_eq!(intersection_number(&a, &b).unwrap(), int(d * e));
            }
        }
    }

    #[test]
    fn zero_and_low_dimension() {
        let l = tropical_line();
        assert_eq!(intersection_number(&l, &TropicalCycle::zero(2, 1)).unwrap(), int(0));
        let pt = TropicalCycle::point(2, int(1));
        assert!(stable_intersection(&pt, &l).unwrap().is_zero());
        assert!(intersection_number(&l, &TropicalCycle::whole_space(2)).is_err());
    }

    #[test]
    fn displacement_independence() {
        let t = LatticePolytope::dilated_simplex(3, 1).trop().unwrap();
        let a = stable_intersection(&t, &t).unwrap();
        let b = stable_intersection_with(&t, &t, &IntersectOptions { offset: 9, ..Default::default() }).unwrap();
        assert!(a.cycle_equal(&b).unwrap());
        assert!(super::super::is_balanced(&a).balanced);
    }
}
