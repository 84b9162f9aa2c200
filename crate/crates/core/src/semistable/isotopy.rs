use crate::cycles::{pushforward, TropicalCycle};
use crate::error::{Error, Result};
use crate::genericity::{is_immersed, ProjectionMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotopyReport {
    pub pushforwards_equal: bool,
    pub immersed: bool,
    pub hypotheses_met: bool,
    pub conclusion_holds: bool,
    /// Hypotheses hold but the cycles differ: the pair cannot come from one family.
    pub inconsistent: bool,
}

fn same_shape(a: &TropicalCycle, b: &TropicalCycle) -> Result<()> {
    if a.ambient() != b.ambient() || a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}-cycle in R^{} against {}-cycle in R^{}",
            a.dim(),
            a.ambient(),
            b.dim(),
            b.ambient()
        )));
    }
    Ok(())
}

/// Compares a general fibre `c_bullet` with a special fibre `c_0` under `p`.
pub fn isotopy_report(c_bullet: &TropicalCycle, c_0: &TropicalCycle, p: &ProjectionMap) -> Result<IsotopyReport> {
    same_shape(c_bullet, c_0)?;
    if p.source_rank() != c_bullet.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "projection from R^{} for cycles in R^{}",
            p.source_rank(),
            c_bullet.ambient()
        )));
    }
    let pushforwards_equal = pushforward(p, c_bullet)?.cycle_equal(&pushforward(p, c_0)?)?;
    let immersed = is_immersed(p, c_bullet)?.holds();
    let hypotheses_met = pushforwards_equal && immersed;
    let conclusion_holds = c_bullet.cycle_equal(c_0)?;
    Ok(IsotopyReport {
        pushforwards_equal,
        immersed,
        hypotheses_met,
        conclusion_holds,
        inconsistent: hypotheses_met && !conclusion_holds,
    })
}

/// `c_bullet = c_0 + sum(boundary)`.
pub fn boundary_decomposition_check(
    c_bullet: &TropicalCycle,
    c_0: &TropicalCycle,
    boundary: &[TropicalCycle],
) -> Result<bool> {
    same_shape(c_bullet, c_0)?;
    let mut total = c_0.clone();
    for z in boundary {
        same_shape(c_0, z)?;
        total = total.add(z)?;
    }
    c_bullet.cycle_equal(&total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::fixtures::rays_cycle;
    use crate::lattice::{int, vector};
    use crate::semistable::{tripod_cycle, Column, LadderProfile, Tripod};

    fn ladder() -> LadderProfile {
        LadderProfile::new(vec![
            Column { v: vector(&[1, 0]), a: 0, b: 2 },
            Column { v: vector(&[0, 1]), a: 0, b: 0 },
            Column { v: vector(&[-1, -1]), a: 0, b: 0 },
        ])
        .unwrap()
    }

    fn spatial_line() -> TropicalCycle {
        rays_cycle(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[-1, -1, 0], 1)])
    }

    #[test]
    fn identical_cycles() {
        let c = spatial_line();
        let rep = isotopy_report(&c, &c, &ProjectionMap::forget_coordinate(3, 2)).unwrap();
        assert!(rep.pushforwards_equal && rep.immersed && rep.hypotheses_met && rep.conclusion_holds);
        assert!(!rep.inconsistent);
    }

    #[test]
    fn vertical_tripods_vanish_under_projection() {
        let p = ProjectionMap::forget_coordinate(3, 2);
        for t in [Tripod::new(0, 1, int(1)), Tripod::new(0, 2, int(3)), Tripod::new(1, 0, int(1))] {
            assert!(pushforward(&p, &tripod_cycle(&ladder(), &t).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn non_immersive_projection_makes_no_claim() {
        let p = ProjectionMap::forget_coordinate(3, 2);
        let c_bullet = rays_cycle(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[-1, -1, 1], 1), (&[0, 0, -1], 1)]);
        let t = tripod_cycle(&ladder(), &Tripod::new(1, 0, int(1))).unwrap();
        let c_0 = c_bullet.add(&t).unwrap();
        let rep = isotopy_report(&c_bullet, &c_0, &p).unwrap();
        assert!(rep.pushforwards_equal);
        assert!(!rep.immersed);
        assert!(!rep.hypotheses_met && !rep.inconsistent);
    }

    #[test]
    fn flags_inconsistent_pairs() {
        let p = ProjectionMap::forget_coordinate(3, 2);
        let c_bullet = rays_cycle(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[-1, -1, 0], 1)]);
        let c_0 = rays_cycle(3, &[(&[1, 0, 1], 1), (&[0, 1, -1], 1), (&[-1, -1, 0], 1)]);
        let rep = isotopy_report(&c_bullet, &c_0, &p).unwrap();
        assert!(rep.hypotheses_met);
        assert!(!rep.conclusion_holds);
        assert!(rep.inconsistent);
    }

    #[test]
    fn boundary_sums() {
        let c0 = spatial_line();
        let t = tripod_cycle(&ladder(), &Tripod::new(0, 1, int(1))).unwrap();
        assert!(boundary_decomposition_check(&c0, &c0, &[]).unwrap());
        let cb = c0.add(&t).unwrap();
        assert!(boundary_decomposition_check(&cb, &c0, std::slice::from_ref(&t)).unwrap());
        let t2 = tripod_cycle(&ladder(), &Tripod::new(0, 1, int(2))).unwrap();
        assert!(!boundary_decomposition_check(&cb, &c0, &[t2]).unwrap());
        let plane = TropicalCycle::whole_space(3);
        assert!(boundary_decomposition_check(&cb, &plane, &[]).is_err());
    }
}
