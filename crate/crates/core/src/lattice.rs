//! Integer and rational linear algebra over lattices.
//!
//! Row conventions throughout: a matrix acts on column vectors, and a list of
//! vectors is stored as the rows of a matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type LatticeVector = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeMatrix {
    cols: usize,
    rows: Vec<LatticeVector>,
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn vector(v: &[i64]) -> LatticeVector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vector(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Extended gcd normalised so that `g >= 0` and `g = x*a + y*b`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

impl LatticeMatrix {
    pub fn new(cols: usize, rows: Vec<LatticeVector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {} columns",
                r.len(),
                cols
            )));
        }
        Ok(LatticeMatrix { cols, rows })
    }

    /// Panics on ragged input; meant for literals and internal use.
    pub fn from_rows(cols: usize, rows: Vec<LatticeVector>) -> Self {
        Self::new(cols, rows).expect("rectangular matrix")
    }

    pub fn from_i64<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        Self::from_rows(cols, rows.iter().map(|r| vector(r.as_ref())).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        LatticeMatrix { cols, rows: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[LatticeVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<LatticeVector> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &LatticeVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                t.rows[j][i] = x.clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &LatticeMatrix) -> Result<LatticeMatrix> {
        if self.cols != other.rows.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows.len(),
                self.cols,
                other.rows.len(),
                other.cols
            )));
        }
        let ot = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| ot.rows.iter().map(|c| dot(r, c)).collect())
            .collect();
        Ok(LatticeMatrix { cols: other.cols, rows })
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[BigInt]) -> LatticeVector {
        debug_assert_eq!(v.len(), self.cols);
        self.rows.iter().map(|r| dot(r, v)).collect()
    }

    pub fn stack(&self, other: &LatticeMatrix) -> Result<LatticeMatrix> {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        LatticeMatrix::new(self.cols, rows)
    }

    pub fn rank(&self) -> usize {
        rank(&self.rows)
    }

    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows.len() != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        Ok(determinant(&self.rows))
    }
}

impl fmt::Display for LatticeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Fraction-free elimination; returns the echelon rows and the rank.
fn bareiss(rows: &[LatticeVector]) -> (Vec<LatticeVector>, usize, bool) {
    let mut a: Vec<LatticeVector> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut negated = false;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        if p != r {
            a.swap(p, r);
            negated = !negated;
        }
        for i in r + 1..m {
            for j in c + 1..n {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (a, r, negated)
}

pub fn rank(rows: &[LatticeVector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    bareiss(rows).1
}

pub fn determinant(rows: &[LatticeVector]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let (a, r, neg) = bareiss(rows);
    if r < n {
        return BigInt::zero();
    }
    let d = a[n - 1][n - 1].clone();
    if neg {
        -d
    } else {
        d
    }
}

/// Unimodular `[x y; c d]` with `x*a + y*b = g` and `c*a + d*b = 0`.
fn elimination(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    if b.is_multiple_of(a) {
        return [BigInt::one(), BigInt::zero(), -(b / a), BigInt::one()];
    }
    let (g, x, y) = ext_gcd(a, b);
    [x, y, -(b / &g), a / &g]
}

fn combine_rows(rows: &mut [LatticeVector], i: usize, j: usize, t: [&BigInt; 4]) {
    // (row_i, row_j) <- (t0*row_i + t1*row_j, t2*row_i + t3*row_j)
    let (ri, rj) = (rows[i].clone(), rows[j].clone());
    for k in 0..ri.len() {
        rows[i][k] = t[0] * &ri[k] + t[1] * &rj[k];
        rows[j][k] = t[2] * &ri[k] + t[3] * &rj[k];
    }
}

fn sub_row_multiple(rows: &mut [LatticeVector], target: usize, source: usize, q: &BigInt) {
    let src = rows[source].clone();
    for (x, s) in rows[target].iter_mut().zip(&src) {
        *x -= q * s;
    }
}

fn negate_row(rows: &mut [LatticeVector], i: usize) {
    for x in rows[i].iter_mut() {
        *x = -&*x;
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `H = U*A`, `U` unimodular.
pub fn hermite_normal_form(a: &LatticeMatrix) -> (LatticeMatrix, LatticeMatrix) {
    let m = a.row_count();
    let mut h = a.rows.clone();
    let mut u = LatticeMatrix::identity(m).rows;
    let mut p = 0;
    for col in 0..a.cols {
        if p == m {
            break;
        }
        for i in p + 1..m {
            if h[i][col].is_zero() {
                continue;
            }
            if h[p][col].is_zero() {
                h.swap(p, i);
                u.swap(p, i);
                continue;
            }
            let [x, y, c, d] = elimination(&h[p][col], &h[i][col]);
            combine_rows(&mut h, p, i, [&x, &y, &c, &d]);
            combine_rows(&mut u, p, i, [&x, &y, &c, &d]);
        }
        if h[p][col].is_zero() {
            continue;
        }
        if h[p][col].is_negative() {
            negate_row(&mut h, p);
            negate_row(&mut u, p);
        }
        for i in 0..p {
            let q = h[i][col].div_floor(&h[p][col]);
            if !q.is_zero() {
                sub_row_multiple(&mut h, i, p, &q);
                sub_row_multiple(&mut u, i, p, &q);
            }
        }
        p += 1;
    }
    (LatticeMatrix { cols: a.cols, rows: h }, LatticeMatrix { cols: m, rows: u })
}

/// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
pub fn hnf_basis(cols: usize, rows: &[LatticeVector]) -> LatticeMatrix {
    if rows.is_empty() {
        return LatticeMatrix::zeros(0, cols);
    }
    let (h, _) = hermite_normal_form(&LatticeMatrix::from_rows(cols, rows.to_vec()));
    let rows = h.rows.into_iter().filter(|r| !is_zero_vector(r)).collect();
    LatticeMatrix { cols, rows }
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_r`.
    pub invariants: Vec<BigInt>,
    pub d: LatticeMatrix,
    pub p: LatticeMatrix,
    pub q: LatticeMatrix,
    pub q_inv: LatticeMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn index(&self) -> BigInt {
        self.invariants.iter().product()
    }
}

fn combine_cols(rows: &mut [LatticeVector], i: usize, j: usize, t: [&BigInt; 4]) {
    for r in rows.iter_mut() {
        let (ci, cj) = (r[i].clone(), r[j].clone());
        r[i] = t[0] * &ci + t[1] * &cj;
        r[j] = t[2] * &ci + t[3] * &cj;
    }
}

/// Smith normal form `D = P*A*Q` with unimodular transforms.
pub fn smith_normal_form(a: &LatticeMatrix) -> SmithForm {
    let (m, n) = (a.row_count(), a.cols);
    let mut d = a.rows.clone();
    let mut p = LatticeMatrix::identity(m).rows;
    let mut q = LatticeMatrix::identity(n).rows;
    let mut qi = LatticeMatrix::identity(n).rows;
    let mut invariants = Vec::new();
    for t in 0..m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap(t, bi);
        p.swap(t, bi);
        for r in d.iter_mut().chain(q.iter_mut()) {
            r.swap(t, bj);
        }
        qi.swap(t, bj);
        loop {
            for i in t + 1..m {
                if d[i][t].is_zero() {
                    continue;
                }
                let [x, y, c, e] = elimination(&d[t][t], &d[i][t]);
                combine_rows(&mut d, t, i, [&x, &y, &c, &e]);
                combine_rows(&mut p, t, i, [&x, &y, &c, &e]);
            }
            for j in t + 1..n {
                if d[t][j].is_zero() {
                    continue;
                }
                let [x, y, c, e] = elimination(&d[t][t], &d[t][j]);
                combine_cols(&mut d, t, j, [&x, &y, &c, &e]);
                combine_cols(&mut q, t, j, [&x, &y, &c, &e]);
                // inverse of [x c; y e] acting on rows
                let (nc, ny) = (-&c, -&y);
                combine_rows(&mut qi, t, j, [&e, &nc, &ny, &x]);
            }
            let col_clear = (t + 1..m).all(|i| d[i][t].is_zero());
            if !col_clear {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    let zero = BigInt::zero();
                    combine_rows(&mut d, t, i, [&one, &one, &zero, &one]);
                    combine_rows(&mut p, t, i, [&one, &one, &zero, &one]);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut p, t);
        }
        invariants.push(d[t][t].clone());
    }
    SmithForm {
        invariants,
        d: LatticeMatrix { cols: n, rows: d },
        p: LatticeMatrix { cols: m, rows: p },
        q: LatticeMatrix { cols: n, rows: q },
        q_inv: LatticeMatrix { cols: n, rows: qi },
    }
}

/// Basis of the saturation `(span_Q L) ∩ Z^n` of the lattice spanned by `rows`.
pub fn saturate(cols: usize, rows: &[LatticeVector]) -> LatticeMatrix {
    if rows.is_empty() {
        return LatticeMatrix::zeros(0, cols);
    }
    let s = smith_normal_form(&LatticeMatrix::from_rows(cols, rows.to_vec()));
    let r = s.rank();
    hnf_basis(cols, &s.q_inv.rows[..r])
}

/// Index of the lattice spanned by `rows` in its saturation.
pub fn saturation_index(cols: usize, rows: &[LatticeVector]) -> BigInt {
    if rows.is_empty() {
        return BigInt::one();
    }
    smith_normal_form(&LatticeMatrix::from_rows(cols, rows.to_vec())).index()
}

/// Saturated basis of `{v : A v = 0}`, in Hermite form.
pub fn kernel_basis(a: &LatticeMatrix) -> LatticeMatrix {
    let n = a.cols;
    if a.rows.is_empty() {
        return LatticeMatrix::identity(n);
    }
    if n == 0 {
        return LatticeMatrix::zeros(0, 0);
    }
    let (h, u) = hermite_normal_form(&a.transpose());
    let ker: Vec<LatticeVector> = h
        .rows
        .iter()
        .zip(u.rows)
        .filter(|(hr, _)| is_zero_vector(hr))
        .map(|(_, ur)| ur)
        .collect();
    hnf_basis(n, &ker)
}

pub fn kernel_of_rows(cols: usize, rows: &[LatticeVector]) -> LatticeMatrix {
    kernel_basis(&LatticeMatrix::from_rows(cols, rows.to_vec()))
}

pub fn primitive_part(v: &[BigInt]) -> Result<(LatticeVector, BigInt)> {
    let g = gcd_of(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok((v.iter().map(|x| x / &g).collect(), g))
}

/// Primitive part, leaving the zero vector as is.
pub fn primitive(v: &[BigInt]) -> LatticeVector {
    primitive_part(v).map(|(p, _)| p).unwrap_or_else(|_| v.to_vec())
}

/// Index of `p(span_basis lattice)` inside its saturation in the target.
pub fn image_lattice_index(p: &LatticeMatrix, span_basis: &LatticeMatrix) -> Result<BigInt> {
    if span_basis.cols != p.cols {
        return Err(Error::DimensionMismatch(format!(
            "map has {} columns, span vectors have length {}",
            p.cols, span_basis.cols
        )));
    }
    let images: Vec<LatticeVector> = span_basis.rows.iter().map(|b| p.apply(b)).collect();
    let k = rank(&span_basis.rows);
    if rank(&images) != k {
        return Err(Error::RankDrop(format!("span of rank {k} loses rank under the map")));
    }
    let target = LatticeMatrix::from_rows(p.row_count(), images);
    Ok(smith_normal_form(&target).index())
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`, as a rational vector.
pub fn project_off_rational(v: &[BigInt], basis: &[LatticeVector]) -> Vec<BigRational> {
    let vq: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    if basis.is_empty() {
        return vq;
    }
    let l = basis.len();
    // Gram system G c = B v
    let mut aug: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            let mut row: Vec<BigRational> =
                (0..l).map(|j| BigRational::from_integer(dot(&basis[i], &basis[j]))).collect();
            row.push(BigRational::from_integer(dot(&basis[i], v)));
            row
        })
        .collect();
    let c = solve_square(&mut aug);
    let mut out = vq;
    for (ci, b) in c.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(b) {
            *o -= ci * BigRational::from_integer(x.clone());
        }
    }
    out
}

/// Gauss-Jordan on an augmented nonsingular system.
fn solve_square(aug: &mut [Vec<BigRational>]) -> Vec<BigRational> {
    let l = aug.len();
    for c in 0..l {
        let p = (c..l).find(|&i| !aug[i][c].is_zero()).expect("independent basis");
        aug.swap(c, p);
        let piv = aug[c][c].clone();
        for x in aug[c].iter_mut() {
            *x /= &piv;
        }
        for i in 0..l {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let src = aug[c].clone();
                for (x, s) in aug[i].iter_mut().zip(src) {
                    *x -= &f * s;
                }
            }
        }
    }
    aug.iter().map(|r| r[l].clone()).collect()
}

/// Clears denominators and returns the primitive integer vector in the same direction.
pub fn rational_to_primitive(v: &[BigRational]) -> LatticeVector {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    primitive(&ints)
}

pub fn project_off(v: &[BigInt], basis: &[LatticeVector]) -> LatticeVector {
    rational_to_primitive(&project_off_rational(v, basis))
}

/// Integer coordinates of `v` in the lattice basis `basis`, if `v` lies in that lattice.
pub fn lattice_coordinates(v: &[BigInt], basis: &[LatticeVector]) -> Option<Vec<BigInt>> {
    let cols = v.len();
    if basis.is_empty() {
        return is_zero_vector(v).then(Vec::new);
    }
    // Solve c^T B = v by Hermite reduction of [B | I].
    let k = basis.len();
    let rows: Vec<LatticeVector> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut r = b.clone();
            r.extend((0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let (h, _) = hermite_normal_form(&LatticeMatrix::from_rows(cols + k, rows));
    let mut rem: Vec<BigInt> = v.to_vec();
    rem.extend((0..k).map(|_| BigInt::zero()));
    for r in &h.rows {
        let Some(pc) = r[..cols].iter().position(|x| !x.is_zero()) else { continue };
        if !rem[pc].is_multiple_of(&r[pc]) {
            return None;
        }
        let q = &rem[pc] / &r[pc];
        for (x, y) in rem.iter_mut().zip(r) {
            *x -= &q * y;
        }
    }
    if !is_zero_vector(&rem[..cols]) {
        return None;
    }
    Some(rem[cols..].iter().map(|x| -x).collect())
}

/// Determinant-based cross product of `q-1` vectors in `Z^q`.
pub fn generalized_cross(rows: &[LatticeVector], q: usize) -> LatticeVector {
    debug_assert_eq!(rows.len() + 1, q);
    (0..q)
        .map(|i| {
            let minor: Vec<LatticeVector> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect())
                .collect();
            let d = determinant(&minor);
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: usize, rows: &[&[i64]]) -> LatticeMatrix {
        LatticeMatrix::from_i64(cols, rows)
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = hermite_normal_form(&LatticeMatrix::identity(2));
        assert_eq!(h, LatticeMatrix::identity(2));
        assert_eq!(u, LatticeMatrix::identity(2));
        let (h, _) = hermite_normal_form(&m(1, &[&[4], &[6]]));
        assert_eq!(h, m(1, &[&[2], &[0]]));
        let a = m(2, &[&[2, 1], &[0, 3]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, a);
        assert_eq!(u, LatticeMatrix::identity(2));
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&m(2, &[&[2, 0], &[0, 3]])).invariants, vector(&[1, 6]));
        assert_eq!(smith_normal_form(&m(2, &[&[2, 0], &[0, 2]])).invariants, vector(&[2, 2]));
        assert_eq!(smith_normal_form(&LatticeMatrix::identity(3)).invariants, vector(&[1, 1, 1]));
    }

    #[test]
    fn snf_transforms_are_consistent() {
        let a = m(3, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.p.mul(&a).unwrap().mul(&s.q).unwrap(), s.d);
        assert_eq!(s.q.mul(&s.q_inv).unwrap(), LatticeMatrix::identity(3));
        assert_eq!(s.invariants, vector(&[2, 6, 12]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&m(2, &[&[1, 1]])).rows().len(), 1);
        let k = kernel_basis(&m(2, &[&[2, 4]]));
        assert_eq!(k.rows().len(), 1);
        let r = &k.rows()[0];
        assert!(r == &vector(&[2, -1]) || r == &vector(&[-2, 1]));
        assert!(kernel_basis(&LatticeMatrix::identity(3)).is_empty());
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_part(&vector(&[4, 6])).unwrap(), (vector(&[2, 3]), int(2)));
        assert_eq!(primitive_part(&vector(&[0, -5])).unwrap(), (vector(&[0, -1]), int(5)));
        assert_eq!(primitive_part(&vector(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn image_index_examples() {
        let px = m(2, &[&[1, 0]]);
        assert_eq!(image_lattice_index(&px, &m(2, &[&[2, 1]])).unwrap(), int(2));
        assert_eq!(image_lattice_index(&px, &m(2, &[&[1, 1]])).unwrap(), int(1));
        assert_eq!(
            image_lattice_index(&LatticeMatrix::identity(2), &m(2, &[&[1, 2], &[0, 1]])).unwrap(),
            int(1)
        );
        assert!(matches!(image_lattice_index(&px, &m(2, &[&[0, 1]])), Err(Error::RankDrop(_))));
    }

    #[test]
    fn saturation_and_coordinates() {
        let s = saturate(3, &[vector(&[2, 0, 2]), vector(&[0, 3, 3])]);
        assert_eq!(s.rows().len(), 2);
        assert!(lattice_coordinates(&vector(&[1, 0, 1]), s.rows()).is_some());
        assert!(lattice_coordinates(&vector(&[1, 0, 1]), &[vector(&[2, 0, 2])]).is_none());
        assert_eq!(
            lattice_coordinates(&vector(&[3, 5]), &[vector(&[1, 1]), vector(&[0, 1])]),
            Some(vector(&[3, 2]))
        );
        assert_eq!(saturation_index(3, &[vector(&[2, 0, 2]), vector(&[0, 3, 3])]), int(6));
    }

    #[test]
    fn projection_and_cross() {
        assert_eq!(project_off(&vector(&[1, 2]), &[vector(&[1, 0])]), vector(&[0, 1]));
        assert_eq!(project_off(&vector(&[1, 0, 0]), &[vector(&[1, 1, 0])]), vector(&[1, -1, 0]));
        let c = generalized_cross(&[vector(&[1, 0, 0]), vector(&[0, 1, 0])], 3);
        assert_eq!(c, vector(&[0, 0, 1]));
    }
}
