use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::convert::{h_to_v, v_to_h};
use crate::error::{Error, Result};
use crate::lattice::{
    dot, is_zero_vector, lattice_coordinates, primitive, project_off, rank, saturate,
    LatticeMatrix, LatticeVector,
};

#[derive(Clone, Debug)]
struct HRep {
    facets: Vec<LatticeVector>,
    equations: Vec<LatticeVector>,
}

/// A rational polyhedral cone `cone(rays) + span(lineality)`.
///
/// Stored canonically: the lineality basis is in Hermite form and the rays are
/// the primitive extreme rays orthogonal to the lineality space, sorted.
#[derive(Clone)]
pub struct Cone {
    ambient: usize,
    rays: Vec<LatticeVector>,
    lineality: Vec<LatticeVector>,
    dim: usize,
    hrep: OnceLock<HRep>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.lineality == other.lineality && self.rays == other.rays
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.lineality.hash(state);
        self.rays.hash(state);
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim, &self.lineality, &self.rays).cmp(&(
            other.ambient,
            other.dim,
            &other.lineality,
            &other.rays,
        ))
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |vs: &[LatticeVector]| {
            vs.iter()
                .map(|v| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "Cone[{}; rays {}; lin {}]", self.dim, show(&self.rays), show(&self.lineality))
    }
}

/// `[(1,0) (0,1)]`, with `lin (..)` appended for a lineality space.
impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &LatticeVector| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        let rays: Vec<String> = self.rays.iter().map(show).collect();
        write!(f, "[{}", rays.join(" "))?;
        if !self.lineality.is_empty() {
            let lin: Vec<String> = self.lineality.iter().map(show).collect();
            write!(f, "{}lin {}", if rays.is_empty() { "" } else { " " }, lin.join(" "))?;
        }
        f.write_str("]")
    }
}

fn neg(v: &[BigInt]) -> LatticeVector {
    v.iter().map(|x| -x).collect()
}

impl Cone {
    fn check_lengths(n: usize, vs: &[LatticeVector]) -> Result<()> {
        match vs.iter().find(|v| v.len() != n) {
            Some(v) => Err(Error::DimensionMismatch(format!(
                "generator of length {} in ambient rank {n}",
                v.len()
            ))),
            None => Ok(()),
        }
    }

    fn finish(n: usize, rays: Vec<LatticeVector>, lin: Vec<LatticeVector>, hrep: Option<HRep>) -> Cone {
        let lineality = saturate(n, &lin).into_rows();
        let mut rs: Vec<LatticeVector> = rays
            .iter()
            .map(|r| project_off(r, &lineality))
            .filter(|r| !is_zero_vector(r))
            .collect();
        rs.sort();
        rs.dedup();
        let dim = lineality.len() + rank(&rs);
        let cell = OnceLock::new();
        if let Some(h) = hrep {
            let _ = cell.set(h);
        }
        Cone { ambient: n, rays: rs, lineality, dim, hrep: cell }
    }

    /// `cone(rays) + span(lineality)`; redundant generators are removed.
    pub fn new(n: usize, rays: Vec<LatticeVector>, lineality: Vec<LatticeVector>) -> Result<Cone> {
        Self::check_lengths(n, &rays)?;
        Self::check_lengths(n, &lineality)?;
        let rays: Vec<LatticeVector> = rays.into_iter().filter(|r| !is_zero_vector(r)).map(|r| primitive(&r)).collect();
        let lineality: Vec<LatticeVector> = lineality.into_iter().filter(|r| !is_zero_vector(r)).collect();
        let lin_rank = rank(&lineality);
        let mut all = rays.clone();
        all.extend(lineality.iter().cloned());
        if rank(&all) == rays.len() + lin_rank {
            return Ok(Self::finish(n, rays, lineality, None));
        }
        let (facets, equations) = v_to_h(n, &rays, &lineality);
        let (r, l) = h_to_v(n, &equations, &facets);
        Ok(Self::finish(n, r, l, Some(HRep { facets, equations })))
    }

    pub fn from_i64(n: usize, rays: &[&[i64]], lineality: &[&[i64]]) -> Cone {
        let conv = |vs: &[&[i64]]| vs.iter().map(|v| crate::lattice::vector(v)).collect();
        Cone::new(n, conv(rays), conv(lineality)).expect("valid cone literal")
    }

    /// `{x : E x = 0, A x >= 0}`.
    pub fn from_inequalities(n: usize, equations: &[LatticeVector], inequalities: &[LatticeVector]) -> Result<Cone> {
        Self::check_lengths(n, equations)?;
        Self::check_lengths(n, inequalities)?;
        let (r, l) = h_to_v(n, equations, inequalities);
        Ok(Self::finish(n, r, l, None))
    }

    pub fn origin(n: usize) -> Cone {
        Self::finish(n, Vec::new(), Vec::new(), None)
    }

    pub fn whole_space(n: usize) -> Cone {
        Self::finish(n, Vec::new(), LatticeMatrix::identity(n).into_rows(), None)
    }

    /// Assumes the rays are already extreme, primitive and orthogonal to the lineality basis.
    fn from_canonical_parts(n: usize, mut rays: Vec<LatticeVector>, lineality: Vec<LatticeVector>) -> Cone {
        rays.sort();
        let dim = lineality.len() + rank(&rays);
        Cone { ambient: n, rays, lineality, dim, hrep: OnceLock::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[LatticeVector] {
        &self.lineality
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| {
            let (facets, equations) = v_to_h(self.ambient, &self.rays, &self.lineality);
            HRep { facets, equations }
        })
    }

    /// Primitive inner facet normals, each lying in the linear span of the cone.
    pub fn facets(&self) -> &[LatticeVector] {
        &self.hrep().facets
    }

    /// Basis of the orthogonal complement of the span.
    pub fn equations(&self) -> &[LatticeVector] {
        &self.hrep().equations
    }

    /// All generators, with the lineality listed in both directions.
    pub fn generators(&self) -> Vec<LatticeVector> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(neg(l));
        }
        g
    }

    pub fn span_generators(&self) -> Vec<LatticeVector> {
        let mut g = self.rays.clone();
        g.extend(self.lineality.iter().cloned());
        g
    }

    /// Hermite basis of the saturated lattice `span ∩ Z^n`.
    pub fn lattice_basis(&self) -> LatticeMatrix {
        saturate(self.ambient, &self.span_generators())
    }

    pub fn contains_point(&self, x: &[BigInt]) -> bool {
        self.equations().iter().all(|e| dot(e, x).is_zero())
            && self.facets().iter().all(|a| !dot(a, x).is_negative())
    }

    pub fn contains(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains_point(r)) && other.lineality.iter().all(|l| self.contains_point(l) && self.contains_point(&neg(l)))
    }

    pub fn relative_interior_point(&self) -> LatticeVector {
        let mut p = vec![BigInt::zero(); self.ambient];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }

    pub fn in_relative_interior(&self, x: &[BigInt]) -> bool {
        self.equations().iter().all(|e| dot(e, x).is_zero())
            && self.facets().iter().all(|a| dot(a, x).is_positive())
    }

    pub fn intersection(&self, other: &Cone) -> Cone {
        let mut eqs = self.equations().to_vec();
        eqs.extend(other.equations().iter().cloned());
        let mut ineqs = self.facets().to_vec();
        ineqs.extend(other.facets().iter().cloned());
        Cone::from_inequalities(self.ambient, &eqs, &ineqs).expect("same ambient")
    }

    /// Intersection with the half-space `h·x >= 0`.
    pub fn cut(&self, h: &[BigInt]) -> Cone {
        let mut ineqs = self.facets().to_vec();
        ineqs.push(h.to_vec());
        Cone::from_inequalities(self.ambient, self.equations(), &ineqs).expect("same ambient")
    }

    /// The face cut out by a valid inequality `a` (`a·x >= 0` on the cone).
    pub fn face_of(&self, a: &[BigInt]) -> Cone {
        let tight: Vec<LatticeVector> = self.rays.iter().filter(|r| dot(a, r).is_zero()).cloned().collect();
        Cone::from_canonical_parts(self.ambient, tight, self.lineality.clone())
    }

    /// Facets paired with their inner normal.
    pub fn facet_faces(&self) -> Vec<(LatticeVector, Cone)> {
        self.facets().iter().map(|a| (a.clone(), self.face_of(a))).collect()
    }

    /// Smallest face containing `g`; assumes `g` is contained in the cone.
    pub fn smallest_face_containing(&self, g: &Cone) -> Cone {
        let gens = g.generators();
        let tight: Vec<LatticeVector> =
            self.facets().iter().filter(|a| gens.iter().all(|x| dot(a, x).is_zero())).cloned().collect();
        let rays: Vec<LatticeVector> = self
            .rays
            .iter()
            .filter(|r| tight.iter().all(|a| dot(a, r).is_zero()))
            .cloned()
            .collect();
        Cone::from_canonical_parts(self.ambient, rays, self.lineality.clone())
    }

    pub fn is_face(&self, g: &Cone) -> bool {
        self.contains(g) && self.smallest_face_containing(g) == *g
    }

    /// All nonempty faces, each once.
    pub fn faces(&self) -> Vec<Cone> {
        let mut out = vec![self.clone()];
        let mut frontier = vec![self.clone()];
        while let Some(c) = frontier.pop() {
            if c.dim == c.lineality_dim() {
                continue;
            }
            for (_, f) in c.facet_faces() {
                if !out.contains(&f) {
                    out.push(f.clone());
                    frontier.push(f);
                }
            }
        }
        out.sort();
        out
    }

    pub fn image(&self, p: &LatticeMatrix) -> Cone {
        let rays = self.rays.iter().map(|r| p.apply(r)).collect();
        let lin = self.lineality.iter().map(|l| p.apply(l)).collect();
        Cone::new(p.row_count(), rays, lin).expect("image lies in the target")
    }

    pub fn preimage(&self, p: &LatticeMatrix) -> Cone {
        let pt = p.transpose();
        let pull = |vs: &[LatticeVector]| -> Vec<LatticeVector> { vs.iter().map(|a| pt.apply(a)).collect() };
        Cone::from_inequalities(p.col_count(), &pull(self.equations()), &pull(self.facets())).expect("valid preimage")
    }

    pub fn product(&self, other: &Cone) -> Cone {
        let (a, b) = (self.ambient, other.ambient);
        let left = |v: &LatticeVector| {
            let mut x = v.clone();
            x.extend((0..b).map(|_| BigInt::zero()));
            x
        };
        let right = |v: &LatticeVector| {
            let mut x: LatticeVector = (0..a).map(|_| BigInt::zero()).collect();
            x.extend(v.iter().cloned());
            x
        };
        let rays = self.rays.iter().map(left).chain(other.rays.iter().map(right)).collect();
        let lin: Vec<LatticeVector> =
            self.lineality.iter().map(left).chain(other.lineality.iter().map(right)).collect();
        Cone::new(a + b, rays, lin).expect("product")
    }

    /// Negation `-C`.
    pub fn negated(&self) -> Cone {
        Cone::new(self.ambient, self.rays.iter().map(|r| neg(r)).collect(), self.lineality.clone()).expect("negation")
    }

    /// Minkowski difference `C - D`.
    pub fn minus(&self, other: &Cone) -> Cone {
        let mut rays = self.rays.clone();
        rays.extend(other.rays.iter().map(|r| neg(r)));
        let mut lin = self.lineality.clone();
        lin.extend(other.lineality.iter().cloned());
        Cone::new(self.ambient, rays, lin).expect("difference")
    }

    /// Lattice normal of a facet: a vector of the cone's lattice whose class generates
    /// the quotient by the facet's lattice, pointing into the cone.
    pub fn lattice_normal(&self, facet_normal: &[BigInt]) -> LatticeVector {
        let basis = self.lattice_basis().into_rows();
        let vals: Vec<BigInt> = basis.iter().map(|b| dot(facet_normal, b)).collect();
        let mut g = BigInt::zero();
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(vals.len());
        for v in &vals {
            let (ng, x, y) = crate::lattice::ext_gcd(&g, v);
            for c in coeffs.iter_mut() {
                *c *= &x;
            }
            coeffs.push(y);
            g = ng;
        }
        let mut u = vec![BigInt::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&basis) {
            for (x, y) in u.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        u
    }

    /// Whether the rays together with a lineality basis extend to a lattice basis.
    pub fn is_unimodular(&self) -> bool {
        let gens = self.span_generators();
        if rank(&gens) != gens.len() {
            return false;
        }
        crate::lattice::saturation_index(self.ambient, &gens) == BigInt::from(1)
    }

    /// Whether `x` lies in the lattice generated by the span generators.
    pub fn in_generated_lattice(&self, x: &[BigInt]) -> bool {
        lattice_coordinates(x, &self.span_generators()).is_some()
    }
}
