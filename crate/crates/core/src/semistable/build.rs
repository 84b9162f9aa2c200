use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{pole, Column, LadderProfile, SemistablePair};
use crate::error::{Error, Result};
use crate::genericity::ProjectionMap;
use crate::lattice::{gcd_of, primitive, LatticeVector};
use crate::polyhedra::{Cone, Fan};

/// `d_m(x, y, z) = (x, y, m z)` applied to every cone.
pub fn dilate(s: &Fan, m: &BigInt) -> Result<Fan> {
    if s.ambient() != 3 {
        return Err(Error::DimensionMismatch(format!("dilation of a fan in R^{}", s.ambient())));
    }
    let d = |v: &LatticeVector| vec![v[0].clone(), v[1].clone(), &v[2] * m];
    let cones = s
        .cones()
        .iter()
        .map(|c| Cone::new(3, c.rays().iter().map(d).collect(), c.lineality().iter().map(d).collect()))
        .collect::<Result<Vec<_>>>()?;
    Fan::new(3, cones)
}

fn half(v: &[BigInt]) -> u8 {
    if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
        0
    } else {
        1
    }
}

fn det2(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn by_angle(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| BigInt::zero().cmp(&det2(a, b)))
}

/// Inserts rays into the cone spanned by `v, w` until every piece is unimodular.
fn smooth_wedge(v: &LatticeVector, w: &LatticeVector, out: &mut Vec<LatticeVector>) {
    let d = det2(v, w);
    if d <= BigInt::one() {
        return;
    }
    let mut a = BigInt::one();
    while a < d {
        let x = &a * &v[0] + &w[0];
        let y = &a * &v[1] + &w[1];
        if x.is_multiple_of(&d) && y.is_multiple_of(&d) {
            let u = vec![x / &d, y / &d];
            out.push(u.clone());
            smooth_wedge(&u, w, out);
            return;
        }
        a += 1;
    }
    unreachable!("no interior lattice point in a wedge of determinant {d}");
}

/// Smooth complete fan in `R^2` whose rays contain `dirs` and `±e1, ±e2`, sorted by angle.
fn target_rays(dirs: BTreeSet<LatticeVector>) -> Vec<LatticeVector> {
    let mut rays: Vec<LatticeVector> = dirs.into_iter().collect();
    for e in [[1, 0], [0, 1], [-1, 0], [0, -1]] {
        let e = crate::lattice::vector(&e);
        if !rays.contains(&e) {
            rays.push(e);
        }
    }
    rays.sort_by(by_angle);
    let mut smooth = Vec::new();
    for i in 0..rays.len() {
        let (v, w) = (&rays[i], &rays[(i + 1) % rays.len()]);
        smooth.push(v.clone());
        smooth_wedge(v, w, &mut smooth);
    }
    smooth.sort_by(by_angle);
    smooth
}

fn planar(v: &[BigInt]) -> Option<LatticeVector> {
    let xy = vec![v[0].clone(), v[1].clone()];
    (!xy.iter().all(Zero::is_zero)).then(|| primitive(&xy))
}

/// The column of the ladder over `v` that contains the primitive ray `r`, and its height after `d_m`.
fn height(r: &[BigInt], m: &BigInt) -> BigInt {
    let g = gcd_of(&r[..2]);
    m * &r[2] / g
}

fn lift(v: &LatticeVector, j: &BigInt) -> LatticeVector {
    vec![v[0].clone(), v[1].clone(), j.clone()]
}

fn to_i64(x: &BigInt) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Unsupported(format!("ladder height {x} out of range")))
}

/// The dilation `m` and ladder profile of [`build_semistable_3to2`], without
/// assembling the cones.
pub fn ladder_profile(s: &Fan) -> Result<(LadderProfile, BigInt)> {
    if s.ambient() != 3 {
        return Err(Error::DimensionMismatch(format!("expected a fan in R^3, got R^{}", s.ambient())));
    }
    if s.cones().iter().any(|c| !c.lineality().is_empty()) {
        return Err(Error::InvalidInput("cones of the input fan must be pointed".into()));
    }
    if !s.is_fan() {
        return Err(Error::InvalidInput("input cones do not form a fan".into()));
    }
    let vs = target_rays(s.rays().iter().filter_map(|r| planar(r)).collect());
    let n = vs.len();
    let index: BTreeMap<LatticeVector, usize> = vs.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let up = pole(1);
    let halfplane = |v: &LatticeVector| Cone::new(3, vec![lift(v, &BigInt::zero())], vec![up.clone()]);

    let low: Vec<Cone> = s.all_cones().into_iter().filter(|c| c.dim() == 1 || c.dim() == 2).collect();
    let mut s1: BTreeSet<LatticeVector> = BTreeSet::new();
    for v in &vs {
        let h = halfplane(v)?;
        for tau in &low {
            s1.extend(tau.intersection(&h).rays().iter().filter(|r| planar(r).is_some()).cloned());
        }
    }
    let m = s1.iter().fold(BigInt::one(), |acc, r| acc.lcm(&gcd_of(&r[..2])));

    let mut heights: Vec<BTreeSet<BigInt>> = vec![BTreeSet::new(); n];
    for r in &s1 {
        let col = index[&planar(r).expect("planar ray")];
        heights[col].insert(height(r, &m));
    }
    let mut columns = Vec::with_capacity(n);
    for (v, hs) in vs.iter().zip(&heights) {
        let (a, b) = match (hs.first(), hs.last()) {
            (Some(a), Some(b)) => (to_i64(a)?, to_i64(b)?),
            _ => (0, 0),
        };
        columns.push(Column { v: v.clone(), a, b });
    }
    let profile = LadderProfile::new(columns)?;
    Ok((profile, m))
}

/// Weakly semistable `Σ -> Σ'` over the coordinate projection `R^3 -> R^2`
/// with `Σ` refining the dilation `d_m(S)`.
pub fn build_semistable_3to2(s: &Fan) -> Result<SemistablePair> {
    let (profile, m) = ladder_profile(s)?;
    let p = ProjectionMap::forget_coordinate(3, 2);
    let vs: Vec<LatticeVector> = profile.columns().iter().map(|c| c.v.clone()).collect();
    let n = vs.len();
    let up = pole(1);
    let dilated = dilate(s, &m)?;
    let faces2: Vec<Cone> = dilated.all_cones().into_iter().filter(|c| c.dim() == 2).collect();
    let down = pole(-1);
    let mut cones3 = Vec::new();
    for l in 0..n {
        let r = (l + 1) % n;
        let (cl, cr) = (&profile.columns()[l], &profile.columns()[r]);
        let wedge = Cone::new(3, vec![lift(&cl.v, &BigInt::zero()), lift(&cr.v, &BigInt::zero())], vec![up.clone()])?;
        let mut edges: BTreeSet<(i64, i64)> = BTreeSet::new();
        for tau in &faces2 {
            let meet = tau.intersection(&wedge);
            if meet.dim() != 2 || meet.rays().len() != 2 {
                continue;
            }
            let mut s_h = None;
            let mut t_h = None;
            for ray in meet.rays() {
                match planar(ray) {
                    Some(d) if d == cl.v => s_h = Some(to_i64(&height(ray, &BigInt::one()))?),
                    Some(d) if d == cr.v => t_h = Some(to_i64(&height(ray, &BigInt::one()))?),
                    _ => {}
                }
            }
            if let (Some(s_h), Some(t_h)) = (s_h, t_h) {
                edges.insert((s_h, t_h));
            }
        }
        let mut path: Vec<(i64, i64)> = edges.into_iter().collect();
        if path.windows(2).any(|w| w[1].1 < w[0].1) {
            return Err(Error::InvalidInput("two-dimensional cones of the input cross".into()));
        }
        path.push((cl.b, cr.b));
        cones3.push(Cone::new(3, vec![profile.ray(l, cl.a), profile.ray(r, cr.a), down.clone()], vec![])?);
        let (mut s_cur, mut t_cur) = (cl.a, cr.a);
        for (s_goal, t_goal) in path {
            while s_cur < s_goal {
                cones3.push(Cone::new(3, vec![profile.ray(l, s_cur), profile.ray(l, s_cur + 1), profile.ray(r, t_cur)], vec![])?);
                s_cur += 1;
            }
            while t_cur < t_goal {
                cones3.push(Cone::new(3, vec![profile.ray(l, s_cur), profile.ray(r, t_cur), profile.ray(r, t_cur + 1)], vec![])?);
                t_cur += 1;
            }
        }
        cones3.push(Cone::new(3, vec![profile.ray(l, cl.b), profile.ray(r, cr.b), up.clone()], vec![])?);
    }

    let sigma = Fan::new(3, cones3)?;
    let sigma_prime = Fan::new(
        2,
        (0..n).map(|i| Cone::new(2, vec![vs[i].clone(), vs[(i + 1) % n].clone()], vec![])).collect::<Result<Vec<_>>>()?,
    )?;
    Ok(SemistablePair { sigma, sigma_prime, p, profile, dilation: m })
}
