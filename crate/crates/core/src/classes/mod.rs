//! Graded characteristic classes with values in tropical cycles.
//!
//! A class stores one cycle per codimension. In the affine grading the piece at
//! codimension `j` is `<U>_j`; in the trop grading the piece at codimension
//! `n - k` is `Trop_k U`.

mod critical;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::cycles::{pushforward, stable_intersection_with, IntersectOptions, TropicalCycle};
use crate::error::{Error, Result};
use crate::genericity::ProjectionMap;
use crate::polyhedra::LatticePolytope;

pub use critical::{admissibility_check, critical_count, AdmissibilityReport, AdmissibilityViolation, MonomialSupport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grading {
    Affine,
    Trop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalClass {
    ambient: usize,
    pieces: BTreeMap<usize, TropicalCycle>,
    dim_u: Option<usize>,
    grading: Grading,
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

impl TropicalClass {
    pub fn zero(ambient: usize, dim_u: Option<usize>, grading: Grading) -> TropicalClass {
        TropicalClass { ambient, pieces: BTreeMap::new(), dim_u, grading }
    }

    /// Class of the whole torus `(C^*)^n`.
    pub fn torus(n: usize) -> TropicalClass {
        let mut c = Self::zero(n, Some(n), Grading::Affine);
        c.pieces.insert(0, TropicalCycle::whole_space(n));
        c
    }

    /// Class with a single piece at codimension `codim`.
    pub fn from_piece(codim: usize, cycle: TropicalCycle, dim_u: Option<usize>, grading: Grading) -> Result<TropicalClass> {
        let mut c = Self::zero(cycle.ambient(), dim_u, grading);
        c.set_piece(codim, cycle)?;
        Ok(c)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim_u(&self) -> Option<usize> {
        self.dim_u
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn with_dim_u(mut self, dim_u: Option<usize>) -> TropicalClass {
        self.dim_u = dim_u;
        self
    }

    /// Nonzero pieces keyed by codimension, each canonical.
    pub fn pieces(&self) -> &BTreeMap<usize, TropicalCycle> {
        &self.pieces
    }

    /// Replaces the piece at codimension `codim`.
    pub fn set_piece(&mut self, codim: usize, cycle: TropicalCycle) -> Result<()> {
        if codim > self.ambient || cycle.ambient() != self.ambient || cycle.dim() != self.ambient - codim {
            return Err(Error::DimensionMismatch(format!(
                "piece at codimension {codim} of a class in R^{} cannot be a {}-cycle in R^{}",
                self.ambient,
                cycle.dim(),
                cycle.ambient()
            )));
        }
        let c = cycle.canonicalize();
        if c.is_zero() {
            self.pieces.remove(&codim);
        } else {
            self.pieces.insert(codim, c);
        }
        Ok(())
    }

    /// Piece at codimension `codim`; absent pieces are zero.
    pub fn piece(&self, codim: usize) -> TropicalCycle {
        self.pieces
            .get(&codim)
            .cloned()
            .unwrap_or_else(|| TropicalCycle::zero(self.ambient, self.ambient.saturating_sub(codim)))
    }

    /// `Trop_k U` of a trop-graded class.
    pub fn trop(&self, k: usize) -> Result<TropicalCycle> {
        if self.grading != Grading::Trop {
            return Err(Error::InvalidInput("class is not in the trop grading".into()));
        }
        if k > self.ambient {
            return Ok(TropicalCycle::zero(self.ambient, k.min(self.ambient)));
        }
        Ok(self.piece(self.ambient - k))
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    fn add_piece(&mut self, codim: usize, c: &TropicalCycle) -> Result<()> {
        let sum = self.piece(codim).add_raw(c)?;
        self.set_piece(codim, sum)
    }

    pub fn add(&self, other: &TropicalClass) -> Result<TropicalClass> {
        check_same(self, other)?;
        if self.grading != other.grading {
            return Err(Error::InvalidInput("adding classes of different gradings".into()));
        }
        let dim_u = if self.dim_u == other.dim_u { self.dim_u } else { None };
        let mut out = TropicalClass { dim_u, ..self.clone() };
        for (j, c) in &other.pieces {
            out.add_piece(*j, c)?;
        }
        Ok(out)
    }

    pub fn negated(&self) -> TropicalClass {
        let pieces = self.pieces.iter().map(|(j, c)| (*j, c.negated())).collect();
        TropicalClass { pieces, ..self.clone() }
    }

    /// Piecewise semantic equality, ignoring `dim_u`.
    pub fn class_equal(&self, other: &TropicalClass) -> Result<bool> {
        check_same(self, other)?;
        if self.grading != other.grading {
            return Ok(false);
        }
        for j in 0..=self.ambient {
            if !self.piece(j).cycle_equal(&other.piece(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// This class in the affine grading, converting if needed.
    pub fn to_affine(&self) -> Result<TropicalClass> {
        match self.grading {
            Grading::Affine => Ok(self.clone()),
            Grading::Trop => grading_convert(self),
        }
    }

    /// This class in the trop grading, converting if needed.
    pub fn to_trop(&self) -> Result<TropicalClass> {
        match self.grading {
            Grading::Trop => Ok(self.clone()),
            Grading::Affine => grading_convert(self),
        }
    }
}

fn check_same(a: &TropicalClass, b: &TropicalClass) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch(format!("classes in R^{} and R^{}", a.ambient, b.ambient)));
    }
    Ok(())
}

fn require_affine(a: &TropicalClass) -> Result<()> {
    if a.grading != Grading::Affine {
        return Err(Error::InvalidInput("operation needs a class in the affine grading".into()));
    }
    Ok(())
}

/// Graded product `<U V>_k = sum_j <U>_j <V>_(k-j)`.
pub fn class_mul(a: &TropicalClass, b: &TropicalClass) -> Result<TropicalClass> {
    class_mul_with(a, b, &IntersectOptions::default())
}

pub fn class_mul_with(a: &TropicalClass, b: &TropicalClass, opts: &IntersectOptions) -> Result<TropicalClass> {
    check_same(a, b)?;
    require_affine(a)?;
    require_affine(b)?;
    let n = a.ambient;
    let dim_u = match (a.dim_u, b.dim_u) {
        (Some(x), Some(y)) if x + y >= n => Some(x + y - n),
        _ => None,
    };
    let mut out = TropicalClass::zero(n, dim_u, Grading::Affine);
    for (i, x) in &a.pieces {
        for (j, y) in &b.pieces {
            if i + j > n {
                continue;
            }
            out.add_piece(i + j, &stable_intersection_with(x, y, opts)?)?;
        }
    }
    Ok(out)
}

/// Graded cross product into `R^(a+b)`.
pub fn class_cross(a: &TropicalClass, b: &TropicalClass) -> Result<TropicalClass> {
    require_affine(a)?;
    require_affine(b)?;
    let dim_u = match (a.dim_u, b.dim_u) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    };
    let mut out = TropicalClass::zero(a.ambient + b.ambient, dim_u, Grading::Affine);
    for (i, x) in &a.pieces {
        for (j, y) in &b.pieces {
            out.add_piece(i + j, &x.cross_product(y))?;
        }
    }
    Ok(out)
}

/// Piecewise pushforward; a piece of dimension `d <= r` lands at codimension `r - d`.
pub fn class_pushforward(p: &ProjectionMap, a: &TropicalClass) -> Result<TropicalClass> {
    require_affine(a)?;
    if p.source_rank() != a.ambient {
        return Err(Error::DimensionMismatch(format!(
            "map from R^{} applied to a class in R^{}",
            p.source_rank(),
            a.ambient
        )));
    }
    let r = p.target_rank();
    let mut out = TropicalClass::zero(r, None, Grading::Affine);
    for (j, x) in &a.pieces {
        let d = a.ambient - j;
        if d > r {
            continue;
        }
        out.add_piece(r - d, &pushforward(p, x)?)?;
    }
    Ok(out)
}

/// Switches between `<U>_k` and `Trop_(n-k) U` by the sign `(-1)^(dim U + k - n)`.
pub fn grading_convert(a: &TropicalClass) -> Result<TropicalClass> {
    let d = a.dim_u.ok_or_else(|| Error::InvalidInput("grading conversion needs dimU".into()))? as i64;
    let n = a.ambient as i64;
    let pieces = a.pieces.iter().map(|(k, c)| (*k, c.scale(&sign(d + *k as i64 - n)))).collect();
    let grading = match a.grading {
        Grading::Affine => Grading::Trop,
        Grading::Trop => Grading::Affine,
    };
    Ok(TropicalClass { ambient: a.ambient, pieces, dim_u: a.dim_u, grading })
}

/// `T^m` in the fan ring, by repeated stable intersection.
pub fn cycle_power(t: &TropicalCycle, m: usize, opts: &IntersectOptions) -> Result<TropicalCycle> {
    let n = t.ambient();
    let mut acc = TropicalCycle::whole_space(n);
    for _ in 0..m {
        if acc.is_zero() {
            break;
        }
        acc = stable_intersection_with(&acc, t, opts)?;
    }
    if acc.is_zero() {
        let dim = n.saturating_sub(m * t.codim());
        return Ok(TropicalCycle::zero(n, dim));
    }
    Ok(acc)
}

/// Class of `k` generic equations with Newton polytope `a`: the truncation of
/// `(T/(1+T))^k` with `T` the tropical fan of `a`.
pub fn complete_intersection_class(a: &LatticePolytope, k: usize, n: usize) -> Result<TropicalClass> {
    if a.ambient() != n {
        return Err(Error::DimensionMismatch(format!("polytope in R^{} for a class in R^{n}", a.ambient())));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let t = a.trop()?;
    let opts = IntersectOptions::default();
    let mut out = TropicalClass::zero(n, Some(n - k), Grading::Affine);
    let mut power = cycle_power(&t, k, &opts)?;
    for j in 0..=n - k {
        if j > 0 {
            power = stable_intersection_with(&power, &t, &opts)?;
        }
        let coef = sign(j as i64) * binomial(BigInt::from(k + j - 1), BigInt::from(j));
        out.add_piece(k + j, &power.scale(&coef))?;
    }
    Ok(out)
}

pub fn hypersurface_class(a: &LatticePolytope, n: usize) -> Result<TropicalClass> {
    complete_intersection_class(a, 1, n)
}

/// Total weight of the top-codimension piece. For a trop-graded class this is
/// `(-1)^dim U` times the weight of `Trop_0 U`.
pub fn euler_characteristic(a: &TropicalClass) -> Result<BigInt> {
    match a.grading {
        Grading::Affine => Ok(a.piece(a.ambient).total_weight()),
        Grading::Trop => euler_characteristic(&grading_convert(a)?),
    }
}

/// Pushforward of the `k`-dimensional piece along `m: R^n -> R^(k+1)`.
pub fn euler_discriminant_fan(a: &TropicalClass, m: &ProjectionMap) -> Result<TropicalCycle> {
    let a = a.to_affine()?;
    let n = a.ambient;
    if m.source_rank() != n {
        return Err(Error::DimensionMismatch(format!("map from R^{} for a class in R^{n}", m.source_rank())));
    }
    let r = m.target_rank();
    if r == 0 || r > n + 1 {
        return Err(Error::DimensionMismatch(format!("target rank {r} for a class in R^{n}")));
    }
    let k = r - 1;
    pushforward(m, &a.piece(n - k))
}

/// `<U>_k = <S>_k + (-1)^(dim U + k - n) p_* Trop_(n-k) U'` with `p` forgetting the last coordinate.
pub fn singular_combine(s: &TropicalClass, trop_primes: &TropicalClass, dim_u: usize) -> Result<TropicalClass> {
    let n = s.ambient;
    let s = s.to_affine()?;
    if trop_primes.ambient != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "lift lives in R^{}, expected R^{}",
            trop_primes.ambient,
            n + 1
        )));
    }
    if trop_primes.grading != Grading::Trop {
        return Err(Error::InvalidInput("lifted class must be in the trop grading".into()));
    }
    let p = ProjectionMap::forget_coordinate(n + 1, n);
    let mut out = TropicalClass::zero(n, Some(dim_u), Grading::Affine);
    for (j, c) in &s.pieces {
        out.add_piece(*j, c)?;
    }
    for k in 0..=n {
        let lifted = trop_primes.trop(n - k)?;
        if lifted.is_zero() {
            continue;
        }
        let e = dim_u as i64 + k as i64 - n as i64;
        out.add_piece(k, &pushforward(&p, &lifted)?.scale(&sign(e)))?;
    }
    Ok(out)
}

/// Trop grading of `U ∩ gV`: `Trop_k = sum_j Trop_j U · Trop_(n+k-j) V`.
pub fn intersection_class(a: &TropicalClass, b: &TropicalClass) -> Result<TropicalClass> {
    check_same(a, b)?;
    let (a, b) = (a.to_trop()?, b.to_trop()?);
    let n = a.ambient;
    let (du, dv) = (a.dim_u.unwrap_or(n), b.dim_u.unwrap_or(n));
    let dim_u = (du + dv).checked_sub(n);
    let opts = IntersectOptions::default();
    let mut out = TropicalClass::zero(n, dim_u, Grading::Trop);
    for k in 0..=n {
        for j in k..=n {
            let (x, y) = (a.trop(j)?, b.trop(n + k - j)?);
            if x.is_zero() || y.is_zero() {
                continue;
            }
            out.add_piece(n - k, &stable_intersection_with(&x, &y, &opts)?)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    /// Largest `r` with `Trop_k U = 0` for all `k < r`.
    pub rank: usize,
    /// Rank of the lineality space of each nonzero `Trop_k U`.
    pub lineality_ranks: BTreeMap<usize, usize>,
}

pub fn invariance_rank(a: &TropicalClass) -> Result<InvarianceReport> {
    let a = a.to_trop()?;
    let n = a.ambient;
    let mut rank = a.dim_u.unwrap_or(n);
    let mut lineality_ranks = BTreeMap::new();
    for k in (0..=n).rev() {
        let piece = a.trop(k)?;
        if !piece.is_zero() {
            rank = k;
            lineality_ranks.insert(k, crate::cycles::lineality_space(&piece).row_count());
        }
    }
    Ok(InvarianceReport { rank, lineality_ranks })
}

/// `(-1)^(dim U - k) Trop_k U`.
pub fn csm_fan(a: &TropicalClass, k: usize) -> Result<TropicalCycle> {
    let a = a.to_trop()?;
    let d = a.dim_u.ok_or_else(|| Error::InvalidInput("csm fan needs dimU".into()))?;
    Ok(a.trop(k)?.scale(&sign(d as i64 - k as i64)))
}

/// Lift of a class along the graph of a coordinate: each piece crossed with the origin of `R^1`.
pub fn graph_lift(a: &TropicalClass) -> Result<TropicalClass> {
    let n = a.ambient;
    let mut out = TropicalClass::zero(n + 1, a.dim_u, a.grading);
    let point = TropicalCycle::point(1, BigInt::one());
    for (j, c) in &a.pieces {
        out.add_piece(j + 1, &c.cross_product(&point))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int;

    fn line_class() -> TropicalClass {
        hypersurface_class(&LatticePolytope::dilated_simplex(2, 1), 2).unwrap()
    }

    #[test]
    fn line_class_pieces() {
        let l = line_class();
        assert_eq!(l.dim_u(), Some(1));
        assert!(l.piece(0).is_zero());
        assert_eq!(l.piece(1).dim(), 1);
        assert_eq!(l.piece(2).total_weight(), int(-1));
        assert_eq!(euler_characteristic(&l).unwrap(), int(-1));
    }

    #[test]
    fn hypersurface_euler_values() {
        for d in 1..=3 {
            let seg = LatticePolytope::from_i64(1, &[&[0], &[d]]);
            assert_eq!(euler_characteristic(&hypersurface_class(&seg, 1).unwrap()).unwrap(), int(d));
            let tri = LatticePolytope::dilated_simplex(2, d);
            assert_eq!(euler_characteristic(&hypersurface_class(&tri, 2).unwrap()).unwrap(), int(-d * d));
        }
        assert!(complete_intersection_class(&LatticePolytope::dilated_simplex(2, 1), 3, 2).is_err());
    }

    #[test]
    fn product_with_torus_and_zero() {
        let l = line_class();
        let t = TropicalClass::torus(2);
        assert!(class_mul(&l, &t).unwrap().class_equal(&l).unwrap());
        let z = TropicalClass::zero(2, None, Grading::Affine);
        assert!(class_mul(&l, &z).unwrap().is_zero());
    }

    #[test]
    fn square_of_hypersurface_is_complete_intersection() {
        let tri = LatticePolytope::dilated_simplex(2, 1);
        let h = hypersurface_class(&tri, 2).unwrap();
        let ci = complete_intersection_class(&tri, 2, 2).unwrap();
        assert!(class_mul(&h, &h).unwrap().class_equal(&ci).unwrap());
    }

    #[test]
    fn grading_conversion() {
        let l = line_class();
        let t = grading_convert(&l).unwrap();
        assert_eq!(t.grading(), Grading::Trop);
        assert!(t.trop(1).unwrap().cycle_equal(&l.piece(1)).unwrap());
        assert_eq!(t.trop(0).unwrap().total_weight(), int(1));
        assert_eq!(grading_convert(&t).unwrap(), l);
        assert_eq!(euler_characteristic(&t).unwrap(), int(-1));
    }

    #[test]
    fn pushforward_of_line_class() {
        let x = ProjectionMap::forget_coordinate(2, 1);
        let img = class_pushforward(&x, &line_class()).unwrap();
        assert!(img.piece(0).cycle_equal(&TropicalCycle::whole_space(1)).unwrap());
        assert_eq!(img.piece(1).total_weight(), int(-1));
        let torus = class_pushforward(&x, &TropicalClass::torus(2)).unwrap();
        assert!(torus.is_zero());
        let id = ProjectionMap::identity(2);
        assert!(class_pushforward(&id, &line_class()).unwrap().class_equal(&line_class().with_dim_u(None)).unwrap());
    }

    #[test]
    fn cross_products() {
        let l = line_class();
        let one = TropicalClass::torus(1);
        let c = class_cross(&l, &one).unwrap();
        assert_eq!(c.ambient(), 3);
        assert_eq!(c.dim_u(), Some(2));
        for piece in c.pieces().values() {
            assert!(piece.cones().iter().all(|(s, _)| s.lineality().contains(&crate::lattice::vector(&[0, 0, 1]))));
        }
        let t = class_cross(&TropicalClass::torus(2), &TropicalClass::torus(1)).unwrap();
        assert!(t.class_equal(&TropicalClass::torus(3)).unwrap());
        assert!(class_cross(&l, &TropicalClass::torus(0)).unwrap().class_equal(&l).unwrap());
    }

    #[test]
    fn euler_discriminant() {
        let l = line_class();
        let id = ProjectionMap::identity(2);
        assert!(euler_discriminant_fan(&l, &id).unwrap().cycle_equal(&l.piece(1)).unwrap());
        let l3 = class_cross(&l, &TropicalClass::torus(1)).unwrap();
        let drop_z = ProjectionMap::forget_coordinate(3, 2);
        let e = euler_discriminant_fan(&l3, &drop_z).unwrap();
        assert_eq!((e.ambient(), e.dim()), (2, 1));
        assert!(e.is_zero());
        let x = ProjectionMap::forget_coordinate(2, 1);
        assert_eq!(euler_discriminant_fan(&l, &x).unwrap().total_weight(), int(-1));
        assert!(euler_discriminant_fan(&l, &ProjectionMap::identity(3)).is_err());
    }

    #[test]
    fn singular_combination_with_graph_lift() {
        let l = line_class();
        let lifted = graph_lift(&grading_convert(&l).unwrap()).unwrap();
        let zero = TropicalClass::zero(2, Some(0), Grading::Affine);
        let u = singular_combine(&zero, &lifted, 1).unwrap();
        assert!(u.class_equal(&l).unwrap());
        let nothing = TropicalClass::zero(3, Some(1), Grading::Trop);
        assert!(singular_combine(&l, &nothing, 1).unwrap().class_equal(&l).unwrap());
    }

    #[test]
    fn intersections_and_invariance() {
        let l = line_class();
        let meet = intersection_class(&l, &l).unwrap();
        assert_eq!(meet.trop(0).unwrap().total_weight(), int(1));
        let unit = intersection_class(&l, &TropicalClass::torus(2)).unwrap();
        assert!(unit.class_equal(&grading_convert(&l).unwrap()).unwrap());
        assert_eq!(invariance_rank(&TropicalClass::torus(3)).unwrap().rank, 3);
        assert_eq!(invariance_rank(&l).unwrap().rank, 0);
        let l3 = class_cross(&l, &TropicalClass::torus(1)).unwrap();
        let rep = invariance_rank(&l3).unwrap();
        assert_eq!(rep.rank, 1);
        assert!(rep.lineality_ranks.values().all(|&r| r >= 1));
    }

    #[test]
    fn csm_signs() {
        let l = line_class();
        assert!(csm_fan(&l, 1).unwrap().cycle_equal(&l.piece(1)).unwrap());
        assert_eq!(csm_fan(&l, 0).unwrap().total_weight(), int(-1));
        let t = TropicalClass::torus(2);
        assert!(csm_fan(&t, 1).unwrap().is_zero());
    }
}
