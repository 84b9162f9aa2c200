use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cone::Cone;
use crate::cycles::TropicalCycle;
use crate::error::{Error, Result};
use crate::lattice::{dot, LatticeVector};

/// A polyhedral fan, understood as the face closure of its listed cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient: usize,
    cones: Vec<Cone>,
}

impl Fan {
    pub fn new(ambient: usize, cones: Vec<Cone>) -> Result<Fan> {
        if let Some(c) = cones.iter().find(|c| c.ambient() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "cone in ambient rank {} inside a fan of rank {ambient}",
                c.ambient()
            )));
        }
        Ok(Fan { ambient, cones })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// Listed cones not contained in another listed cone, sorted and deduplicated.
    pub fn maximal_cones(&self) -> Vec<Cone> {
        let set: BTreeSet<Cone> = self.cones.iter().cloned().collect();
        let all: Vec<Cone> = set.into_iter().collect();
        let top = all.iter().map(Cone::dim).max().unwrap_or(0);
        all.iter()
            .filter(|c| c.dim() == top || !all.iter().any(|d| d.dim() > c.dim() && d.contains(c)))
            .cloned()
            .collect()
    }

    /// Face closure of the listed cones.
    pub fn all_cones(&self) -> Vec<Cone> {
        let mut set = BTreeSet::new();
        for c in self.maximal_cones() {
            set.extend(c.faces());
        }
        set.into_iter().collect()
    }

    pub fn cones_of_dim(&self, d: usize) -> Vec<Cone> {
        self.all_cones().into_iter().filter(|c| c.dim() == d).collect()
    }

    /// Primitive generators of all rays appearing in the fan.
    pub fn rays(&self) -> Vec<LatticeVector> {
        let mut set = BTreeSet::new();
        for c in &self.cones {
            set.extend(c.rays().iter().cloned());
        }
        set.into_iter().collect()
    }

    /// Pairs of listed cones whose intersection is not a face of both.
    pub fn fan_violations(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.cones.len() {
            for j in i + 1..self.cones.len() {
                let (a, b) = (&self.cones[i], &self.cones[j]);
                let g = a.intersection(b);
                if !a.is_face(&g) || !b.is_face(&g) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    pub fn is_fan(&self) -> bool {
        if self.simplicial_complete() == Some(true) {
            return true;
        }
        self.fan_violations().is_empty()
    }

    /// Maximal cones when all of them are full-dimensional and simplicial.
    fn simplicial_top(&self) -> Option<Vec<Cone>> {
        let n = self.ambient;
        let top = self.maximal_cones();
        let ok = n > 0 && !top.is_empty() && top.iter().all(|c| c.dim() == n && c.lineality().is_empty() && c.rays().len() == n);
        ok.then_some(top)
    }

    /// For simplicial full-dimensional cones: every facet is shared by exactly
    /// two cones lying on opposite sides of it, and a generic ray lies in
    /// exactly one cone. Together these force a complete fan.
    fn simplicial_complete(&self) -> Option<bool> {
        let top = self.simplicial_top()?;
        let mut sides: std::collections::BTreeMap<Cone, Vec<LatticeVector>> = Default::default();
        for c in &top {
            for (a, f) in c.facet_faces() {
                sides.entry(f).or_default().push(a);
            }
        }
        let paired = sides.values().all(|ns| {
            ns.len() == 2 && ns[0].iter().zip(&ns[1]).all(|(x, y)| (x + y).is_zero())
        });
        if !paired {
            return Some(false);
        }
        let normals: BTreeSet<&LatticeVector> = sides.values().map(|ns| &ns[0]).collect();
        let n = self.ambient;
        let mut t = BigInt::one();
        let v = loop {
            let mut v = Vec::with_capacity(n);
            let mut x = BigInt::one();
            for _ in 0..n {
                v.push(x.clone());
                x *= &t;
            }
            if normals.iter().all(|a| !dot(a, &v).is_zero()) {
                break v;
            }
            t += 1;
        };
        let covering = top.iter().filter(|c| c.facets().iter().all(|a| dot(a, &v).is_positive())).count();
        Some(covering == 1)
    }

    /// Facets of full-dimensional cones that do not have exactly two neighbours.
    pub fn completeness_violations(&self) -> Vec<Cone> {
        let n = self.ambient;
        let top: Vec<Cone> = self.maximal_cones().into_iter().filter(|c| c.dim() == n).collect();
        if top.is_empty() {
            return vec![Cone::origin(n)];
        }
        let mut count: std::collections::BTreeMap<Cone, usize> = Default::default();
        for c in &top {
            for (_, f) in c.facet_faces() {
                *count.entry(f).or_default() += 1;
            }
        }
        let mut bad: Vec<Cone> = count.into_iter().filter(|(_, k)| *k != 2).map(|(f, _)| f).collect();
        bad.extend(self.maximal_cones().into_iter().filter(|c| c.dim() < n));
        bad
    }

    /// Complete: the full-dimensional cones pair up along every facet and
    /// nothing lower-dimensional is left over.
    pub fn is_complete(&self) -> bool {
        if let Some(ok) = self.simplicial_complete() {
            return ok;
        }
        self.is_fan() && self.completeness_violations().is_empty()
    }

    pub fn smoothness_violations(&self) -> Vec<Cone> {
        self.maximal_cones().into_iter().filter(|c| !c.is_unimodular()).collect()
    }

    pub fn is_smooth(&self) -> bool {
        self.smoothness_violations().is_empty()
    }

    /// Whether every cone of `self` lies in a cone of `coarse` and every maximal
    /// cone of `coarse` is covered by the cones of `self` of the same dimension.
    pub fn refines(&self, coarse: &Fan) -> bool {
        let fine = self.maximal_cones();
        let coarse_max = coarse.maximal_cones();
        fine.iter().all(|c| coarse_max.iter().any(|d| d.contains(c))) && self.subdivides(coarse)
    }

    /// Every cone of `coarse` is a union of cones of `self`.
    pub fn subdivides(&self, coarse: &Fan) -> bool {
        if self.ambient == coarse.ambient && self.simplicial_complete() == Some(true) {
            return self.complete_subdivides(coarse);
        }
        let all_fine = self.all_cones();
        coarse.maximal_cones().iter().all(|sigma| {
            let d = sigma.dim();
            let whole = TropicalCycle::from_cones(self.ambient, d, vec![(sigma.clone(), BigInt::one())]);
            let pieces: Vec<(Cone, BigInt)> = all_fine
                .iter()
                .filter(|c| c.dim() == d && sigma.contains(c))
                .map(|c| (c.clone(), BigInt::one()))
                .collect();
            match (whole, TropicalCycle::from_cones(self.ambient, d, pieces)) {
                (Ok(w), Ok(p)) => w.cycle_equal(&p).unwrap_or(false),
                _ => false,
            }
        })
    }

    /// For a complete `self`: each coarse cone is a union of fine cones iff it
    /// meets every maximal fine cone in a face of that cone.
    fn complete_subdivides(&self, coarse: &Fan) -> bool {
        let fine = self.maximal_cones();
        coarse.maximal_cones().iter().all(|sigma| {
            let mut valid: Vec<LatticeVector> = sigma.facets().to_vec();
            for e in sigma.equations() {
                valid.push(e.clone());
                valid.push(e.iter().map(|x| -x).collect());
            }
            fine.iter().all(|c| {
                if sigma.contains(c) || valid.iter().any(|a| c.rays().iter().all(|r| dot(a, r).is_negative())) {
                    return true;
                }
                c.is_face(&c.intersection(sigma))
            })
        })
    }

    pub fn image(&self, p: &crate::lattice::LatticeMatrix) -> Fan {
        Fan { ambient: p.row_count(), cones: self.cones.iter().map(|c| c.image(p)).collect() }
    }
}

/// The fan of all pairwise intersections; its maximal cones are returned.
pub fn common_refinement(f1: &Fan, f2: &Fan) -> Result<Fan> {
    if f1.ambient != f2.ambient {
        return Err(Error::DimensionMismatch(format!(
            "fans in ambient ranks {} and {}",
            f1.ambient, f2.ambient
        )));
    }
    let mut set = BTreeSet::new();
    for a in f1.maximal_cones() {
        for b in f2.maximal_cones() {
            set.insert(a.intersection(&b));
        }
    }
    let all = Fan { ambient: f1.ambient, cones: set.into_iter().collect() };
    Ok(Fan { ambient: f1.ambient, cones: all.maximal_cones() })
}
