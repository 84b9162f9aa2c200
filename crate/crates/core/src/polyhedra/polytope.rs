use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cone::Cone;
use crate::cycles::TropicalCycle;
use crate::error::{Error, Result};
use crate::lattice::{determinant, dot, gcd_of, rank, LatticeVector};

/// Convex hull of finitely many lattice points, stored by its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient: usize,
    vertices: Vec<LatticeVector>,
    /// Inner normals `(a0, a)` of facets `a0 + a·x >= 0`, relative to the affine hull.
    facets: Vec<LatticeVector>,
}

/// A face given by the indices of its vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolytopeFace {
    pub vertices: Vec<usize>,
    pub dim: usize,
}

fn sub(a: &[BigInt], b: &[BigInt]) -> LatticeVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn affine_dim(points: &[&LatticeVector]) -> usize {
    match points.split_first() {
        None => 0,
        Some((p0, rest)) => rank(&rest.iter().map(|p| sub(p, p0)).collect::<Vec<_>>()),
    }
}

impl LatticePolytope {
    pub fn new(ambient: usize, points: Vec<LatticeVector>) -> Result<LatticePolytope> {
        if let Some(p) = points.iter().find(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} in ambient rank {ambient}",
                p.len()
            )));
        }
        if points.is_empty() {
            return Ok(LatticePolytope { ambient, vertices: Vec::new(), facets: Vec::new() });
        }
        let lifted: Vec<LatticeVector> = points
            .iter()
            .map(|p| {
                let mut v = vec![BigInt::from(1)];
                v.extend(p.iter().cloned());
                v
            })
            .collect();
        let cone = Cone::new(ambient + 1, lifted, Vec::new())?;
        let mut vertices: Vec<LatticeVector> = cone.rays().iter().map(|r| r[1..].to_vec()).collect();
        vertices.sort();
        Ok(LatticePolytope { ambient, vertices, facets: cone.facets().to_vec() })
    }

    pub fn from_i64(ambient: usize, points: &[&[i64]]) -> LatticePolytope {
        Self::new(ambient, points.iter().map(|p| crate::lattice::vector(p)).collect()).expect("valid polytope")
    }

    /// `d` times the standard simplex in `R^n`.
    pub fn dilated_simplex(n: usize, d: i64) -> LatticePolytope {
        let mut pts = vec![vec![BigInt::zero(); n]];
        for i in 0..n {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::from(d);
            pts.push(v);
        }
        Self::new(n, pts).expect("simplex")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        if self.vertices.is_empty() {
            None
        } else {
            Some(affine_dim(&self.vertices.iter().collect::<Vec<_>>()))
        }
    }

    fn face_dim(&self, idx: &[usize]) -> usize {
        affine_dim(&idx.iter().map(|&i| &self.vertices[i]).collect::<Vec<_>>())
    }

    /// All nonempty faces, the polytope itself included, sorted by dimension.
    pub fn faces(&self) -> Vec<PolytopeFace> {
        if self.vertices.is_empty() {
            return Vec::new();
        }
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        sets.insert(all);
        let mut frontier: Vec<Vec<usize>> = Vec::new();
        for a in &self.facets {
            let tight: Vec<usize> = (0..self.vertices.len())
                .filter(|&i| (&a[0] + dot(&a[1..], &self.vertices[i])).is_zero())
                .collect();
            if !tight.is_empty() && sets.insert(tight.clone()) {
                frontier.push(tight);
            }
        }
        let facet_sets = frontier.clone();
        while let Some(s) = frontier.pop() {
            for f in &facet_sets {
                let meet: Vec<usize> = s.iter().filter(|i| f.contains(i)).copied().collect();
                if !meet.is_empty() && sets.insert(meet.clone()) {
                    frontier.push(meet);
                }
            }
        }
        let mut faces: Vec<PolytopeFace> =
            sets.into_iter().map(|v| PolytopeFace { dim: self.face_dim(&v), vertices: v }).collect();
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        faces
    }

    /// Exterior normal cone of a face under `h(u) = max <u, v>`.
    pub fn normal_cone(&self, face: &PolytopeFace) -> Cone {
        let v0 = &self.vertices[face.vertices[0]];
        let eqs: Vec<LatticeVector> = face.vertices[1..].iter().map(|&i| sub(&self.vertices[i], v0)).collect();
        let ineqs: Vec<LatticeVector> = self.vertices.iter().map(|w| sub(v0, w)).collect();
        Cone::from_inequalities(self.ambient, &eqs, &ineqs).expect("normal cone")
    }

    pub fn face_normal_data(&self) -> Vec<(PolytopeFace, Cone)> {
        self.faces()
            .into_iter()
            .map(|f| {
                let c = self.normal_cone(&f);
                (f, c)
            })
            .collect()
    }

    /// Simplices of the pulling triangulation of a face, as vertex index lists.
    fn pulling(&self, face: &PolytopeFace, faces: &[PolytopeFace]) -> Vec<Vec<usize>> {
        if face.dim == 0 {
            return vec![vec![face.vertices[0]]];
        }
        let apex = face.vertices[0];
        let mut out = Vec::new();
        for f in faces {
            if f.dim + 1 == face.dim
                && !f.vertices.contains(&apex)
                && f.vertices.iter().all(|v| face.vertices.contains(v))
            {
                for mut s in self.pulling(f, faces) {
                    s.push(apex);
                    out.push(s);
                }
            }
        }
        out
    }

    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let faces = self.faces();
        match faces.last() {
            Some(top) => self.pulling(top, &faces),
            None => Vec::new(),
        }
    }

    /// `n!` times the Euclidean volume; zero unless full-dimensional.
    pub fn lattice_volume(&self) -> BigInt {
        if self.dim() != Some(self.ambient) {
            return BigInt::zero();
        }
        if self.ambient == 0 {
            return BigInt::from(1);
        }
        self.triangulation()
            .iter()
            .map(|s| {
                let v0 = &self.vertices[s[0]];
                let m: Vec<LatticeVector> = s[1..].iter().map(|&i| sub(&self.vertices[i], v0)).collect();
                determinant(&m).abs()
            })
            .sum()
    }

    /// Codimension-one skeleton of the normal fan, weighted by lattice edge lengths.
    pub fn trop(&self) -> Result<TropicalCycle> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidInput("tropical fan of the empty polytope".into()));
        }
        let n = self.ambient;
        if n == 0 {
            return Err(Error::InvalidInput("tropical fan needs ambient rank at least 1".into()));
        }
        let mut cones = Vec::new();
        for f in self.faces().into_iter().filter(|f| f.dim == 1) {
            let e = sub(&self.vertices[f.vertices[1]], &self.vertices[f.vertices[0]]);
            cones.push((self.normal_cone(&f), gcd_of(&e)));
        }
        TropicalCycle::from_cones(n, n - 1, cones)
    }

    pub fn translate(&self, t: &[BigInt]) -> LatticePolytope {
        let pts = self.vertices.iter().map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect()).collect();
        Self::new(self.ambient, pts).expect("translate")
    }
}

pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.ambient != q.ambient {
        return Err(Error::DimensionMismatch(format!(
            "polytopes in ambient ranks {} and {}",
            p.ambient, q.ambient
        )));
    }
    let mut pts = BTreeSet::new();
    for a in &p.vertices {
        for b in &q.vertices {
            pts.insert(a.iter().zip(b).map(|(x, y)| x + y).collect::<LatticeVector>());
        }
    }
    LatticePolytope::new(p.ambient, pts.into_iter().collect())
}

pub fn lattice_volume(p: &LatticePolytope) -> BigInt {
    p.lattice_volume()
}

pub fn trop_of_polytope(p: &LatticePolytope) -> Result<TropicalCycle> {
    p.trop()
}

pub fn face_normal_data(p: &LatticePolytope) -> Vec<(PolytopeFace, Cone)> {
    p.face_normal_data()
}
