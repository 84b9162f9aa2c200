//! Weakly semistable toric morphisms `R^3 -> R^2`, tripods and the
//! decomposition checks for degenerating families of curves.

mod build;
mod isotopy;
mod tripod;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::genericity::ProjectionMap;
use crate::lattice::{determinant, primitive, LatticeVector};
use crate::polyhedra::{Cone, Fan};

pub use build::{build_semistable_3to2, dilate, ladder_profile};
pub use isotopy::{boundary_decomposition_check, isotopy_report, IsotopyReport};
pub use tripod::{
    combination_weights, tripod_counterexample, tripod_counterexample_by_enumeration, tripod_cycle,
    tripod_positivity_witness, unit_tripods, LadderRay, Tripod, TripodWitness,
};

/// One column of the ladder: the rays `(v, j)` for `j` in `a..=b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    pub v: LatticeVector,
    pub a: i64,
    pub b: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderProfile {
    columns: Vec<Column>,
}

impl LadderProfile {
    pub fn new(columns: Vec<Column>) -> Result<LadderProfile> {
        let mut seen = BTreeSet::new();
        for c in &columns {
            if c.v.len() != 2 || c.v.iter().all(Zero::is_zero) || primitive(&c.v) != c.v {
                return Err(Error::InvalidInput("column vectors must be primitive in Z^2".into()));
            }
            if c.a > c.b {
                return Err(Error::InvalidInput(format!("empty ladder range [{}, {}]", c.a, c.b)));
            }
            if !seen.insert(c.v.clone()) {
                return Err(Error::InvalidInput("repeated column vector".into()));
            }
        }
        Ok(LadderProfile { columns })
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    /// `u_(i,j) = (v_i, j)`.
    pub fn ray(&self, i: usize, j: i64) -> LatticeVector {
        let c = &self.columns[i];
        vec![c.v[0].clone(), c.v[1].clone(), BigInt::from(j)]
    }

    /// Whether consecutive columns (cyclically) satisfy `det(v_(i-1), v_i) = 1`.
    pub fn is_cyclic_unimodular(&self) -> bool {
        let n = self.columns.len();
        n >= 3
            && (0..n).all(|i| {
                let prev = &self.columns[(i + n - 1) % n].v;
                determinant(&[prev.clone(), self.columns[i].v.clone()]).is_one()
            })
    }
}

pub fn pole(sign: i64) -> LatticeVector {
    vec![BigInt::zero(), BigInt::zero(), BigInt::from(sign)]
}

/// Fans of a weakly semistable morphism together with its ladder description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistablePair {
    pub sigma: Fan,
    pub sigma_prime: Fan,
    pub p: ProjectionMap,
    pub profile: LadderProfile,
    pub dilation: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemistableWitness {
    /// The image of the cone is not a cone of the target fan.
    ImageNotACone { cone: Cone, image: Cone },
    /// The image monoid misses the primitive generator `ray` of the image cone.
    LatticeDeficit { cone: Cone, image: Cone, ray: LatticeVector },
}

impl fmt::Display for SemistableWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[LatticeVector]| {
            v.iter()
                .map(|r| format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            SemistableWitness::ImageNotACone { cone, image } => {
                write!(f, "cone [{}] maps onto [{}], not a cone of the target", show(cone.rays()), show(image.rays()))
            }
            SemistableWitness::LatticeDeficit { cone, ray, .. } => {
                write!(f, "cone [{}] misses the lattice point {} of its image", show(cone.rays()), show(std::slice::from_ref(ray)))
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SemistableReport {
    pub semistable: bool,
    pub witnesses: Vec<SemistableWitness>,
}

fn cone_label(c: &Cone) -> String {
    let rays: Vec<String> = c
        .generators()
        .iter()
        .map(|r| format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rays.join(" "))
}

fn require_complete_smooth(f: &Fan, name: &str) -> Result<()> {
    if let Some(c) = f.smoothness_violations().first() {
        return Err(Error::NotSmooth(format!("{name}: cone {}", cone_label(c))));
    }
    if !f.is_fan() {
        let (i, j) = f.fan_violations()[0];
        return Err(Error::NotComplete(format!(
            "{name}: cones {} and {} overlap improperly",
            cone_label(&f.cones()[i]),
            cone_label(&f.cones()[j])
        )));
    }
    if let Some(c) = f.completeness_violations().first() {
        return Err(Error::NotComplete(format!("{name}: cone {}", cone_label(c))));
    }
    Ok(())
}

/// Every cone maps onto a cone of `sigma_prime`, with surjective image monoid.
pub fn check_weakly_semistable(sigma: &Fan, sigma_prime: &Fan, p: &ProjectionMap) -> Result<SemistableReport> {
    let r = sigma_prime.ambient();
    if r > 2 {
        return Err(Error::Unsupported(format!("weak semistability over R^{r} (only r <= 2)")));
    }
    if p.source_rank() != sigma.ambient() || p.target_rank() != r {
        return Err(Error::DimensionMismatch(format!(
            "map R^{} -> R^{} between fans in R^{} and R^{r}",
            p.source_rank(),
            p.target_rank(),
            sigma.ambient()
        )));
    }
    require_complete_smooth(sigma, "source fan")?;
    require_complete_smooth(sigma_prime, "target fan")?;
    let targets: BTreeSet<Cone> = sigma_prime.all_cones().into_iter().collect();
    let mut witnesses = Vec::new();
    for c in sigma.all_cones() {
        let image = c.image(p.matrix());
        if !targets.contains(&image) {
            witnesses.push(SemistableWitness::ImageNotACone { cone: c, image });
            continue;
        }
        let images: Vec<LatticeVector> = c.rays().iter().map(|u| p.matrix().apply(u)).collect();
        for w in image.rays() {
            if !images.contains(w) {
                witnesses.push(SemistableWitness::LatticeDeficit { cone: c.clone(), image: image.clone(), ray: w.clone() });
            }
        }
    }
    Ok(SemistableReport { semistable: witnesses.is_empty(), witnesses })
}
