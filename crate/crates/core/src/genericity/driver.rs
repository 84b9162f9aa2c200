use num_bigint::BigInt;
use num_traits::One;

use crate::classes::{Grading, TropicalClass};
use crate::cycles::{is_balanced, TropicalCycle};
use crate::error::{Error, Result};
use crate::polyhedra::Cone;

use super::oracle::TropOracle;
use super::search::{find_generic_projection, Mode, SearchOptions};
use super::ProjectionMap;

/// Projections chosen at each step of a surface computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceTrace {
    pub step2: ProjectionMap,
    /// The 1-dimensional complex containing `Trop_1 U`, unit weights, not canonicalized.
    pub complex: TropicalCycle,
    pub step3: ProjectionMap,
    pub step4: ProjectionMap,
}

fn validate(resp: TropicalCycle, n: usize, dim: usize, step: &str) -> Result<TropicalCycle> {
    if resp.ambient() != n || resp.dim() != dim {
        return Err(Error::Oracle(format!(
            "{step}: expected a {dim}-cycle in R^{n}, got a {}-cycle in R^{}",
            resp.dim(),
            resp.ambient()
        )));
    }
    if !resp.has_positive_weights() {
        return Err(Error::Oracle(format!("{step}: response has nonpositive weights")));
    }
    let report = is_balanced(&resp);
    if !report.balanced {
        return Err(Error::Oracle(format!(
            "{step}: response is not balanced at {} codimension-one cone(s)",
            report.failures.len()
        )));
    }
    Ok(resp.canonicalize())
}

/// `|Trop_2| ∩ p^{-1}(p(|response|))`, kept as a set of 1-dimensional cells.
fn step2_complex(trop2: &TropicalCycle, p: &ProjectionMap, resp: &TropicalCycle) -> Result<TropicalCycle> {
    let n = trop2.ambient();
    let mut cells: Vec<Cone> = Vec::new();
    for (rho, _) in resp.nonzero_cones() {
        let image = rho.image(p.matrix());
        let pre = image.preimage(p.matrix());
        for (sigma, _) in trop2.nonzero_cones() {
            let meet = sigma.intersection(&pre);
            if meet.dim() == 1 && !cells.contains(&meet) {
                cells.push(meet);
            }
        }
    }
    TropicalCycle::from_cones(n, 1, cells.into_iter().map(|c| (c, BigInt::one())).collect())
}

/// Trop grading of a surface in the 3-torus from its tropicalization,
/// querying `oracle` for the critical loci of three generic projections.
pub fn compute_classes_surface3(
    trop_u: &TropicalCycle,
    oracle: &mut dyn TropOracle,
    opts: &SearchOptions,
) -> Result<(TropicalClass, SurfaceTrace)> {
    if trop_u.ambient() != 3 || trop_u.dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 2-cycle in R^3, got a {}-cycle in R^{}",
            trop_u.dim(),
            trop_u.ambient()
        )));
    }
    let report = is_balanced(trop_u);
    if !report.balanced {
        return Err(Error::InvalidInput("tropical surface is not balanced".into()));
    }
    if !trop_u.has_positive_weights() {
        return Err(Error::InvalidInput("tropical surface has nonpositive weights".into()));
    }
    let trop2 = trop_u.canonicalize();

    let p2 = find_generic_projection(&[(trop2.clone(), Mode::Submerse)], 2, opts)?;
    let resp2 = validate(oracle.query(&p2, &trop2)?, 3, 1, "step (ii)")?;
    let complex = step2_complex(&trop2, &p2, &resp2)?;

    let p3 = find_generic_projection(&[(complex.clone(), Mode::Immerse), (trop2.clone(), Mode::Submerse)], 2, opts)?;
    let trop1 = validate(oracle.query(&p3, &trop2)?, 3, 1, "step (iii)")?;

    let p4 = find_generic_projection(&[(trop2.clone(), Mode::Submerse), (trop1.clone(), Mode::Submerse)], 1, opts)?;
    let trop0 = validate(oracle.query(&p4, &trop2)?, 3, 0, "step (iv)")?;

    let mut class = TropicalClass::zero(3, Some(2), Grading::Trop);
    class.set_piece(1, trop2)?;
    class.set_piece(2, trop1)?;
    class.set_piece(3, trop0)?;
    Ok((class, SurfaceTrace { step2: p2, complex, step3: p3, step4: p4 }))
}
