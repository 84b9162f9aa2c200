use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{cycle_power, TropicalClass};
use crate::cycles::{intersection_number, IntersectOptions};
use crate::error::{Error, Result};
use crate::lattice::{dot, primitive, LatticeVector};
use crate::polyhedra::LatticePolytope;

/// A finite set of exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSupport {
    ambient: usize,
    points: Vec<LatticeVector>,
}

impl MonomialSupport {
    pub fn new(ambient: usize, points: Vec<LatticeVector>) -> Result<MonomialSupport> {
        if let Some(p) = points.iter().find(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch(format!("point of length {} in R^{ambient}", p.len())));
        }
        let distinct: BTreeSet<&LatticeVector> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::InvalidInput("monomial support has repeated points".into()));
        }
        Ok(MonomialSupport { ambient, points })
    }

    pub fn from_i64(ambient: usize, points: &[&[i64]]) -> MonomialSupport {
        Self::new(ambient, points.iter().map(|p| crate::lattice::vector(p)).collect()).expect("valid support literal")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn polytope(&self) -> Result<LatticePolytope> {
        LatticePolytope::new(self.ambient, self.points.clone())
    }

    /// `conv({0} ∪ A)`.
    pub fn polytope_with_origin(&self) -> Result<LatticePolytope> {
        let mut pts = self.points.clone();
        pts.push(vec![BigInt::zero(); self.ambient]);
        LatticePolytope::new(self.ambient, pts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityViolation {
    /// Vertices of the offending face.
    pub face: Vec<LatticeVector>,
    pub face_dim: usize,
    /// A primitive vector in both the normal cone of the face and `Trop_(dim face) U`.
    pub ray: LatticeVector,
}

impl std::fmt::Display for AdmissibilityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |v: &LatticeVector| format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
        let verts: Vec<String> = self.face.iter().map(show).collect();
        write!(f, "face [{}] of dimension {} has normal {} in Trop_{}", verts.join(" "), self.face_dim, show(&self.ray), self.face_dim)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub violations: Vec<AdmissibilityViolation>,
}

/// Checks that for every face `G` of `conv({0} ∪ A)` through the origin, the
/// normal cone of `G` meets `Trop_(dim G) U` only at the origin.
pub fn admissibility_check(a: &MonomialSupport, u: &TropicalClass) -> Result<AdmissibilityReport> {
    if a.ambient() != u.ambient() {
        return Err(Error::DimensionMismatch(format!("support in R^{} and class in R^{}", a.ambient(), u.ambient())));
    }
    let u = u.to_trop()?;
    let q = a.polytope_with_origin()?;
    let mut violations = Vec::new();
    for (face, normal) in q.face_normal_data() {
        let xi = normal.relative_interior_point();
        let top = q.vertices().iter().map(|v| dot(&xi, v)).max().unwrap_or_else(BigInt::zero);
        if !top.is_zero() {
            continue;
        }
        let piece = u.trop(face.dim)?;
        for (sigma, _) in piece.nonzero_cones() {
            let meet = sigma.intersection(&normal);
            if meet.dim() > 0 {
                violations.push(AdmissibilityViolation {
                    face: face.vertices.iter().map(|&i| q.vertices()[i].clone()).collect(),
                    face_dim: face.dim,
                    ray: primitive(&meet.relative_interior_point()),
                });
            }
        }
    }
    violations.sort_by(|x, y| (x.face_dim, &x.face, &x.ray).cmp(&(y.face_dim, &y.face, &y.ray)));
    violations.dedup();
    Ok(AdmissibilityReport { admissible: violations.is_empty(), violations })
}

/// `sum_k (Trop A)^k · Trop_k U`, defined for admissible supports.
pub fn critical_count(a: &MonomialSupport, u: &TropicalClass) -> Result<BigInt> {
    let report = admissibility_check(a, u)?;
    if !report.admissible {
        return Err(Error::Inadmissible(report.violations.iter().map(ToString::to_string).collect()));
    }
    let u = u.to_trop()?;
    let n = u.ambient();
    let mut total = u.trop(0)?.total_weight();
    let poly = a.polytope()?;
    if poly.is_empty() || n == 0 {
        return Ok(total);
    }
    let t = poly.trop()?;
    let opts = IntersectOptions::default();
    for k in 1..=n {
        let piece = u.trop(k)?;
        if piece.is_zero() {
            continue;
        }
        let power = cycle_power(&t, k, &opts)?;
        if power.is_zero() {
            continue;
        }
        total += intersection_number(&power, &piece)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{grading_convert, hypersurface_class};
    use crate::lattice::{int, vector};

    fn line() -> TropicalClass {
        grading_convert(&hypersurface_class(&LatticePolytope::dilated_simplex(2, 1), 2).unwrap()).unwrap()
    }

    #[test]
    fn inadmissible_edge() {
        let a = MonomialSupport::from_i64(2, &[&[1, 0], &[0, 1]]);
        let rep = admissibility_check(&a, &line()).unwrap();
        assert!(!rep.admissible);
        assert!(rep.violations.iter().any(|v| v.face_dim == 1 && v.ray == vector(&[0, -1])));
        assert!(matches!(critical_count(&a, &line()), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn admissible_count() {
        let a = MonomialSupport::from_i64(2, &[&[2, 1], &[1, 2]]);
        assert!(admissibility_check(&a, &line()).unwrap().admissible);
        assert_eq!(critical_count(&a, &line()).unwrap(), int(2));
    }

    #[test]
    fn point_support_reads_euler_weight() {
        let a = MonomialSupport::from_i64(2, &[&[3, 5]]);
        assert_eq!(critical_count(&a, &line()).unwrap(), int(1));
    }

    #[test]
    fn kushnirenko_for_torus() {
        let a = MonomialSupport::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let t = TropicalClass::torus(2);
        assert!(admissibility_check(&a, &t).unwrap().admissible);
        assert_eq!(critical_count(&a, &t).unwrap(), a.polytope().unwrap().lattice_volume());
    }

    #[test]
    fn repeated_points_rejected() {
        assert!(MonomialSupport::new(1, vec![vector(&[1]), vector(&[1])]).is_err());
    }
}
