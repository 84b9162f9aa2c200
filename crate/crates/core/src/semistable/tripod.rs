use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{pole, LadderProfile};
use crate::cycles::TropicalCycle;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::polyhedra::Cone;

/// The tripod centred at `u_(column, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tripod {
    pub column: usize,
    pub j: i64,
    pub weight: BigInt,
}

impl Tripod {
    pub fn new(column: usize, j: i64, weight: BigInt) -> Tripod {
        Tripod { column, j, weight }
    }
}

/// A ray of the ladder: a pole `u_±` or a rung `u_(i,j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LadderRay {
    Pole(i8),
    Rung(usize, i64),
}

impl LadderRay {
    fn vector(self, profile: &LadderProfile) -> LatticeVector {
        match self {
            LadderRay::Pole(s) => pole(i64::from(s)),
            LadderRay::Rung(i, j) => profile.ray(i, j),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripodWitness {
    PositivePole { sign: i8, weight: BigInt },
    /// Two positively weighted rungs of one column, `j1 < j2`.
    PositivePair { column: usize, j1: i64, j2: i64 },
}

impl std::fmt::Display for TripodWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TripodWitness::PositivePole { sign, weight } => {
                write!(f, "pole u{} has weight {weight}", if *sign > 0 { "+" } else { "-" })
            }
            TripodWitness::PositivePair { column, j1, j2 } => {
                write!(f, "rays u({column},{j1}) and u({column},{j2}) are positive")
            }
        }
    }
}

fn check_position(profile: &LadderProfile, t: &Tripod) -> Result<()> {
    let col = profile
        .columns()
        .get(t.column)
        .ok_or_else(|| Error::InvalidInput(format!("no column {} in a profile of {}", t.column, profile.columns().len())))?;
    if t.j < col.a || t.j > col.b {
        return Err(Error::InvalidInput(format!("tripod centre {} outside [{}, {}]", t.j, col.a, col.b)));
    }
    if !t.weight.is_positive() {
        return Err(Error::InvalidInput("tripod weight must be positive".into()));
    }
    Ok(())
}

/// Signed weights of the three legs, in the order lower, centre, upper.
fn legs(profile: &LadderProfile, t: &Tripod) -> [(LadderRay, BigInt); 3] {
    let col = &profile.columns()[t.column];
    let w = &t.weight;
    let lower = if t.j > col.a { LadderRay::Rung(t.column, t.j - 1) } else { LadderRay::Pole(-1) };
    let upper = if t.j < col.b { LadderRay::Rung(t.column, t.j + 1) } else { LadderRay::Pole(1) };
    let centre = match (t.j > col.a, t.j < col.b) {
        (true, true) => -(w * BigInt::from(2)),
        (false, false) => BigInt::zero(),
        _ => -w.clone(),
    };
    [(lower, w.clone()), (LadderRay::Rung(t.column, t.j), centre), (upper, w.clone())]
}

pub fn tripod_cycle(profile: &LadderProfile, t: &Tripod) -> Result<TropicalCycle> {
    check_position(profile, t)?;
    let cones = legs(profile, t)
        .into_iter()
        .map(|(r, w)| Ok((Cone::new(3, vec![r.vector(profile)], vec![])?, w)))
        .collect::<Result<Vec<_>>>()?;
    TropicalCycle::from_cones(3, 1, cones)
}

/// Weight of every ladder ray in `sum c · T`.
pub fn combination_weights(profile: &LadderProfile, combo: &[(Tripod, BigInt)]) -> Result<BTreeMap<LadderRay, BigInt>> {
    let mut acc: BTreeMap<LadderRay, BigInt> = BTreeMap::new();
    for (t, c) in combo {
        check_position(profile, t)?;
        for (r, w) in legs(profile, t) {
            *acc.entry(r).or_default() += c * w;
        }
    }
    acc.retain(|_, w| !w.is_zero());
    Ok(acc)
}

fn witness_in(weights: &BTreeMap<LadderRay, BigInt>) -> Option<TripodWitness> {
    let mut first: BTreeMap<usize, i64> = BTreeMap::new();
    for (r, w) in weights {
        if let (LadderRay::Rung(i, j), true) = (r, w.is_positive()) {
            match first.get(i) {
                Some(&j1) => return Some(TripodWitness::PositivePair { column: *i, j1, j2: *j }),
                None => {
                    first.insert(*i, *j);
                }
            }
        }
    }
    for sign in [1i8, -1] {
        if let Some(w) = weights.get(&LadderRay::Pole(sign)).filter(|w| w.is_positive()) {
            return Some(TripodWitness::PositivePole { sign, weight: w.clone() });
        }
    }
    None
}

/// A positive pole or two positive rungs of one column in `sum c · T`;
/// `None` means the combination has neither.
pub fn tripod_positivity_witness(profile: &LadderProfile, combo: &[(Tripod, BigInt)]) -> Result<Option<TripodWitness>> {
    if combo.iter().all(|(_, c)| c.is_zero()) {
        return Err(Error::InvalidInput("combination has no nonzero coefficient".into()));
    }
    Ok(witness_in(&combination_weights(profile, combo)?))
}

/// All unit tripods of a profile, column by column.
pub fn unit_tripods(profile: &LadderProfile) -> Vec<Tripod> {
    let mut out = Vec::new();
    for (i, c) in profile.columns().iter().enumerate() {
        for j in c.a..=c.b {
            out.push(Tripod::new(i, j, BigInt::one()));
        }
    }
    out
}

/// Column-local data: `(u_+ weight, u_- weight, any nonzero coefficient)`.
type ColumnState = (i64, i64, bool);

fn column_states(a: i64, b: i64, range: &RangeInclusive<i64>) -> BTreeMap<ColumnState, Vec<i64>> {
    let len = (b - a + 1) as usize;
    let lo = *range.start();
    let mut out = BTreeMap::new();
    let mut coeffs = vec![lo; len];
    loop {
        let mut rung = vec![0i64; len];
        let (mut up, mut down) = (0i64, 0i64);
        for (k, &c) in coeffs.iter().enumerate() {
            if k > 0 {
                rung[k - 1] += c;
            } else {
                down += c;
            }
            if k + 1 < len {
                rung[k + 1] += c;
            } else {
                up += c;
            }
            let inner = usize::from(k > 0) + usize::from(k + 1 < len);
            rung[k] -= c * inner as i64;
        }
        if rung.iter().filter(|&&w| w > 0).count() <= 1 {
            out.entry((up, down, coeffs.iter().any(|&c| c != 0))).or_insert_with(|| coeffs.clone());
        }
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            if coeffs[k] < *range.end() {
                coeffs[k] += 1;
                break;
            }
            coeffs[k] = lo;
            k += 1;
        }
    }
}

/// A nontrivial coefficient vector over [`unit_tripods`] with coefficients in
/// `range` whose combination has no positivity witness.
///
/// Columns only interact through the two poles, so the search keeps, per
/// column, the reachable pole weights of witness-free column combinations.
pub fn tripod_counterexample(profile: &LadderProfile, range: RangeInclusive<i64>) -> Option<Vec<i64>> {
    if range.is_empty() {
        return None;
    }
    let mut reach: BTreeMap<ColumnState, Vec<i64>> = BTreeMap::from([((0, 0, false), Vec::new())]);
    for c in profile.columns() {
        let states = column_states(c.a, c.b, &range);
        let mut next: BTreeMap<ColumnState, Vec<i64>> = BTreeMap::new();
        for ((u1, d1, n1), pre) in &reach {
            for ((u2, d2, n2), local) in &states {
                next.entry((u1 + u2, d1 + d2, *n1 || *n2)).or_insert_with(|| {
                    let mut v = pre.clone();
                    v.extend_from_slice(local);
                    v
                });
            }
        }
        reach = next;
    }
    reach.into_iter().find(|((u, d, nz), _)| *nz && *u <= 0 && *d <= 0).map(|(_, v)| v)
}

/// Same answer as [`tripod_counterexample`] by literal enumeration; exponential.
pub fn tripod_counterexample_by_enumeration(profile: &LadderProfile, range: RangeInclusive<i64>) -> Option<Vec<i64>> {
    let tripods = unit_tripods(profile);
    if range.is_empty() || tripods.is_empty() {
        return None;
    }
    let lo = *range.start();
    let mut coeffs = vec![lo; tripods.len()];
    loop {
        if coeffs.iter().any(|&c| c != 0) {
            let combo: Vec<(Tripod, BigInt)> =
                tripods.iter().cloned().zip(coeffs.iter().map(|&c| BigInt::from(c))).collect();
            if tripod_positivity_witness(profile, &combo).ok().flatten().is_none() {
                return Some(coeffs);
            }
        }
        let mut k = 0;
        loop {
            if k == coeffs.len() {
                return None;
            }
            if coeffs[k] < *range.end() {
                coeffs[k] += 1;
                break;
            }
            coeffs[k] = lo;
            k += 1;
        }
    }
}
