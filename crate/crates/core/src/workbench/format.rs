//! Line-oriented text formats.
//!
//! Blank lines and lines starting with `#` are ignored. Integers are decimal
//! strings of any length. Ray indices in fan and cycle files are 0-based.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::classes::{Grading, MonomialSupport, TropicalClass};
use crate::cycles::TropicalCycle;
use crate::error::{parse_err, Result};
use crate::lattice::{is_zero_vector, primitive, LatticeMatrix, LatticeVector};
use crate::genericity::ProjectionMap;
use crate::polyhedra::{Cone, Fan, LatticePolytope};
use crate::semistable::{Column, LadderProfile, SemistablePair};

/// Cursor over the significant lines of a document.
pub struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    pub fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Lines { lines, pos: 0 }
    }

    pub fn is_done(&self) -> bool {
        self.pos >= self.lines.len()
    }

    /// Line number of the next line, or one past the last line at the end.
    pub fn line_no(&self) -> usize {
        match self.lines.get(self.pos) {
            Some((n, _)) => *n,
            None => self.lines.last().map_or(1, |(n, _)| n + 1),
        }
    }

    pub fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|(_, l)| *l)
    }

    pub fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.lines.get(self.pos) {
            Some(&(n, l)) => {
                self.pos += 1;
                Ok((n, l))
            }
            None => Err(parse_err(self.line_no(), format!("unexpected end of input, expected {what}"))),
        }
    }

    pub fn expect_end(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some((n, l)) => Err(parse_err(*n, format!("unexpected trailing content `{l}`"))),
        }
    }

    /// Reads `<keyword> <args...>` and returns the arguments.
    fn keyword(&mut self, key: &str, nargs: usize) -> Result<(usize, Vec<&'a str>)> {
        let (n, line) = self.next_line(&format!("`{key}`"))?;
        let mut toks = line.split_whitespace();
        if toks.next() != Some(key) {
            return Err(parse_err(n, format!("expected `{key}`, found `{line}`")));
        }
        let args: Vec<&str> = toks.collect();
        if args.len() != nargs {
            return Err(parse_err(n, format!("`{key}` takes {nargs} argument(s), found {}", args.len())));
        }
        Ok((n, args))
    }

    fn keyword_count(&mut self, key: &str) -> Result<usize> {
        let (n, args) = self.keyword(key, 1)?;
        parse_usize(n, args[0])
    }

    fn vectors(&mut self, count: usize, len: usize, what: &str) -> Result<Vec<LatticeVector>> {
        (0..count)
            .map(|_| {
                let (n, line) = self.next_line(what)?;
                parse_vector(n, line, len)
            })
            .collect()
    }
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a nonnegative integer, found `{tok}`")))
}

fn parse_int(line: usize, tok: &str) -> Result<BigInt> {
    BigInt::from_str(tok).map_err(|_| parse_err(line, format!("expected an integer, found `{tok}`")))
}

fn parse_vector(line: usize, text: &str, len: usize) -> Result<LatticeVector> {
    let v: Vec<BigInt> = text.split_whitespace().map(|t| parse_int(line, t)).collect::<Result<_>>()?;
    if v.len() != len {
        return Err(parse_err(line, format!("expected {len} entries, found {}", v.len())));
    }
    Ok(v)
}

fn write_vector(out: &mut String, v: &[BigInt]) {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    out.push_str(&parts.join(" "));
    out.push('\n');
}

fn parse_ray(line: usize, v: LatticeVector) -> Result<LatticeVector> {
    if is_zero_vector(&v) {
        return Err(parse_err(line, "zero ray"));
    }
    if primitive(&v) != v {
        return Err(parse_err(line, "ray is not primitive"));
    }
    Ok(v)
}

fn ray_block(lines: &mut Lines, n: usize) -> Result<Vec<LatticeVector>> {
    let m = lines.keyword_count("rays")?;
    (0..m)
        .map(|_| {
            let (no, line) = lines.next_line("a ray")?;
            parse_ray(no, parse_vector(no, line, n)?)
        })
        .collect()
}

fn optional_lineality(lines: &mut Lines, n: usize) -> Result<Vec<LatticeVector>> {
    if lines.peek().is_some_and(|l| l.split_whitespace().next() == Some("lineality")) {
        let l = lines.keyword_count("lineality")?;
        lines.vectors(l, n, "a lineality vector")
    } else {
        Ok(Vec::new())
    }
}

fn indexed_rays(line: usize, toks: &[&str], rays: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    toks.iter()
        .map(|t| {
            let i = parse_usize(line, t)?;
            rays.get(i)
                .cloned()
                .ok_or_else(|| parse_err(line, format!("ray index {i} out of range (have {} rays)", rays.len())))
        })
        .collect()
}

/// Global lineality shared by every cone, rays in sorted order, and per-cone
/// ray lists where extra lineality is written as opposite ray pairs.
struct Layout {
    rays: Vec<LatticeVector>,
    lineality: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
}

fn layout<'c>(cones: impl Iterator<Item = &'c Cone> + Clone) -> Layout {
    let mut it = cones.clone();
    let lineality: Vec<LatticeVector> = match it.next() {
        Some(first) if it.all(|c| c.lineality() == first.lineality()) => first.lineality().to_vec(),
        _ => Vec::new(),
    };
    let gens = |c: &Cone| -> Vec<LatticeVector> {
        let mut g: Vec<LatticeVector> = c.rays().to_vec();
        if c.lineality() != lineality.as_slice() {
            for l in c.lineality() {
                g.push(primitive(l));
                g.push(primitive(&l.iter().map(|x| -x).collect::<Vec<_>>()));
            }
        }
        g
    };
    let set: BTreeSet<LatticeVector> = cones.clone().flat_map(gens).collect();
    let rays: Vec<LatticeVector> = set.into_iter().collect();
    let index: BTreeMap<&LatticeVector, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let cone_rows = cones
        .map(|c| {
            let mut idx: Vec<usize> = gens(c).iter().map(|g| index[g]).collect();
            idx.sort_unstable();
            idx.dedup();
            idx
        })
        .collect();
    Layout { rays, lineality, cones: cone_rows }
}

fn write_layout_head(out: &mut String, l: &Layout) {
    let _ = writeln!(out, "rays {}", l.rays.len());
    for r in &l.rays {
        write_vector(out, r);
    }
    if !l.lineality.is_empty() {
        let _ = writeln!(out, "lineality {}", l.lineality.len());
        for r in &l.lineality {
            write_vector(out, r);
        }
    }
}

fn join_indices(idx: &[usize]) -> String {
    idx.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

// ---- matrix ----

pub fn parse_matrix_block(lines: &mut Lines) -> Result<LatticeMatrix> {
    let (n, args) = lines.keyword("matrix", 2)?;
    let r = parse_usize(n, args[0])?;
    let c = parse_usize(n, args[1])?;
    let rows = lines.vectors(r, c, "a matrix row")?;
    Ok(LatticeMatrix::from_rows(c, rows))
}

pub fn parse_matrix(text: &str) -> Result<LatticeMatrix> {
    let mut lines = Lines::new(text);
    let m = parse_matrix_block(&mut lines)?;
    lines.expect_end()?;
    Ok(m)
}

pub fn write_matrix(m: &LatticeMatrix) -> String {
    let mut out = format!("matrix {} {}\n", m.row_count(), m.col_count());
    for r in m.rows() {
        write_vector(&mut out, r);
    }
    out
}

// ---- polytope and point sets ----

fn parse_points_block(lines: &mut Lines, keys: &[&str]) -> Result<(usize, Vec<LatticeVector>)> {
    let (no, line) = lines.next_line("a point set header")?;
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 3 || !keys.contains(&toks[0]) {
        return Err(parse_err(no, format!("expected `{} <n> <count>`, found `{line}`", keys[0])));
    }
    let n = parse_usize(no, toks[1])?;
    let m = parse_usize(no, toks[2])?;
    Ok((n, lines.vectors(m, n, "a point")?))
}

pub fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    let mut lines = Lines::new(text);
    let (n, pts) = parse_points_block(&mut lines, &["polytope", "points"])?;
    lines.expect_end()?;
    LatticePolytope::new(n, pts)
}

pub fn write_polytope(p: &LatticePolytope) -> String {
    let mut out = format!("polytope {} {}\n", p.ambient(), p.vertices().len());
    for v in p.vertices() {
        write_vector(&mut out, v);
    }
    out
}

pub fn parse_support(text: &str) -> Result<MonomialSupport> {
    let mut lines = Lines::new(text);
    let (n, pts) = parse_points_block(&mut lines, &["points", "polytope"])?;
    lines.expect_end()?;
    MonomialSupport::new(n, pts)
}

pub fn write_support(a: &MonomialSupport) -> String {
    let mut out = format!("points {} {}\n", a.ambient(), a.points().len());
    for v in a.points() {
        write_vector(&mut out, v);
    }
    out
}

// ---- fan ----

pub fn parse_fan_block(lines: &mut Lines) -> Result<Fan> {
    let (no, args) = lines.keyword("fan", 2)?;
    let n = parse_usize(no, args[0])?;
    let c = parse_usize(no, args[1])?;
    let rays = ray_block(lines, n)?;
    let lin = optional_lineality(lines, n)?;
    let mut cones = Vec::with_capacity(c);
    for _ in 0..c {
        let (no, line) = lines.next_line("a cone")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.first() != Some(&"rays") {
            return Err(parse_err(no, format!("expected `rays <indices>`, found `{line}`")));
        }
        let gens = indexed_rays(no, &toks[1..], &rays)?;
        cones.push(Cone::new(n, gens, lin.clone()).map_err(|e| parse_err(no, e.to_string()))?);
    }
    Fan::new(n, cones)
}

pub fn parse_fan(text: &str) -> Result<Fan> {
    let mut lines = Lines::new(text);
    let f = parse_fan_block(&mut lines)?;
    lines.expect_end()?;
    Ok(f)
}

pub fn write_fan(f: &Fan) -> String {
    let l = layout(f.cones().iter());
    let mut out = format!("fan {} {}\n", f.ambient(), f.cones().len());
    write_layout_head(&mut out, &l);
    for idx in &l.cones {
        if idx.is_empty() {
            out.push_str("rays\n");
        } else {
            let _ = writeln!(out, "rays {}", join_indices(idx));
        }
    }
    out
}

// ---- tropical cycle ----

pub fn parse_cycle_block(lines: &mut Lines) -> Result<TropicalCycle> {
    let (no, args) = lines.keyword("tropical-cycle", 1)?;
    if args[0] != "v1" {
        return Err(parse_err(no, format!("unsupported cycle format version `{}`", args[0])));
    }
    let (no_a, a) = lines.keyword("ambient", 1)?;
    let n = parse_usize(no_a, a[0])?;
    let (no_d, d) = lines.keyword("dim", 1)?;
    let k = parse_usize(no_d, d[0])?;
    if k > n {
        return Err(parse_err(no_d, format!("dimension {k} exceeds ambient rank {n}")));
    }
    let rays = ray_block(lines, n)?;
    let lin = optional_lineality(lines, n)?;
    let c = lines.keyword_count("cones")?;
    let mut cones = Vec::with_capacity(c);
    for _ in 0..c {
        let (no, line) = lines.next_line("a weighted cone")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let w_at = toks
            .iter()
            .position(|t| *t == "w")
            .ok_or_else(|| parse_err(no, "cone line lacks `w <weight>`"))?;
        if w_at + 2 != toks.len() {
            return Err(parse_err(no, "expected exactly one weight after `w`"));
        }
        let gens = indexed_rays(no, &toks[..w_at], &rays)?;
        let w = parse_int(no, toks[w_at + 1])?;
        let cone = Cone::new(n, gens, lin.clone()).map_err(|e| parse_err(no, e.to_string()))?;
        if cone.dim() != k {
            return Err(parse_err(no, format!("cone of dimension {} in a {k}-cycle", cone.dim())));
        }
        cones.push((cone, w));
    }
    TropicalCycle::from_cones(n, k, cones)
}

pub fn parse_cycle(text: &str) -> Result<TropicalCycle> {
    let mut lines = Lines::new(text);
    let c = parse_cycle_block(&mut lines)?;
    lines.expect_end()?;
    Ok(c)
}

pub fn write_cycle(c: &TropicalCycle) -> String {
    let l = layout(c.cones().iter().map(|(s, _)| s));
    let mut out = format!("tropical-cycle v1\nambient {}\ndim {}\n", c.ambient(), c.dim());
    write_layout_head(&mut out, &l);
    let _ = writeln!(out, "cones {}", c.cones().len());
    for (idx, (_, w)) in l.cones.iter().zip(c.cones()) {
        if idx.is_empty() {
            let _ = writeln!(out, "w {w}");
        } else {
            let _ = writeln!(out, "{} w {w}", join_indices(idx));
        }
    }
    out
}

// ---- tropical class ----

pub fn parse_class_block(lines: &mut Lines) -> Result<TropicalClass> {
    let (no, args) = lines.keyword("tropical-class", 1)?;
    if args[0] != "v1" {
        return Err(parse_err(no, format!("unsupported class format version `{}`", args[0])));
    }
    let (no_a, a) = lines.keyword("ambient", 1)?;
    let n = parse_usize(no_a, a[0])?;
    let (no_d, d) = lines.keyword("dimU", 1)?;
    let dim_u = match d[0] {
        "unset" => None,
        s => Some(parse_usize(no_d, s)?),
    };
    let grading = if lines.peek().is_some_and(|l| l.starts_with("grading")) {
        let (no_g, g) = lines.keyword("grading", 1)?;
        match g[0] {
            "affine" => Grading::Affine,
            "trop" => Grading::Trop,
            other => return Err(parse_err(no_g, format!("unknown grading `{other}`"))),
        }
    } else {
        Grading::Affine
    };
    let mut class = TropicalClass::zero(n, dim_u, grading);
    let mut seen = BTreeSet::new();
    while lines.peek().is_some_and(|l| l.starts_with("piece")) {
        let (no_p, p) = lines.keyword("piece", 1)?;
        let j = parse_usize(no_p, p[0])?;
        if j > n {
            return Err(parse_err(no_p, format!("codimension {j} exceeds ambient rank {n}")));
        }
        if !seen.insert(j) {
            return Err(parse_err(no_p, format!("duplicate piece {j}")));
        }
        if lines.peek() == Some("zero") {
            lines.next_line("zero")?;
            continue;
        }
        let start = lines.line_no();
        let cyc = parse_cycle_block(lines)?;
        if cyc.ambient() != n || cyc.dim() != n - j {
            return Err(parse_err(
                start,
                format!("piece {j} must be a {}-cycle in R^{n}", n - j),
            ));
        }
        class.set_piece(j, cyc)?;
    }
    Ok(class)
}

pub fn parse_class(text: &str) -> Result<TropicalClass> {
    let mut lines = Lines::new(text);
    let c = parse_class_block(&mut lines)?;
    lines.expect_end()?;
    Ok(c)
}

pub fn write_class(c: &TropicalClass) -> String {
    let n = c.ambient();
    let mut out = format!("tropical-class v1\nambient {n}\n");
    match c.dim_u() {
        Some(d) => {
            let _ = writeln!(out, "dimU {d}");
        }
        None => out.push_str("dimU unset\n"),
    }
    if c.grading() == Grading::Trop {
        out.push_str("grading trop\n");
    }
    for j in 0..=n {
        let _ = writeln!(out, "piece {j}");
        match c.pieces().get(&j) {
            Some(p) if !p.is_zero() => out.push_str(&write_cycle(p)),
            _ => out.push_str("zero\n"),
        }
    }
    out
}

/// Parses a request for a tropicalization oracle: a matrix block followed by a cycle block.
pub fn parse_oracle_request(text: &str) -> Result<(LatticeMatrix, TropicalCycle)> {
    let mut lines = Lines::new(text);
    let m = parse_matrix_block(&mut lines)?;
    let c = parse_cycle_block(&mut lines)?;
    lines.expect_end()?;
    Ok((m, c))
}

pub fn write_oracle_request(m: &LatticeMatrix, c: &TropicalCycle) -> String {
    let mut s = write_matrix(m);
    s.push_str(&write_cycle(c));
    s
}

// ---- semistable pair ----

/// `profile N` followed by `N` lines `vx vy a b`.
pub fn parse_profile_block(lines: &mut Lines) -> Result<LadderProfile> {
    let count = lines.keyword_count("profile")?;
    let start = lines.line_no();
    let mut columns = Vec::with_capacity(count);
    for _ in 0..count {
        let (no, line) = lines.next_line("a profile column")?;
        let v = parse_vector(no, line, 4)?;
        let bound = |x: &BigInt| i64::try_from(x).map_err(|_| parse_err(no, format!("ladder bound {x} out of range")));
        columns.push(Column { v: vec![v[0].clone(), v[1].clone()], a: bound(&v[2])?, b: bound(&v[3])? });
    }
    LadderProfile::new(columns).map_err(|e| parse_err(start, e.to_string()))
}

pub fn parse_profile(text: &str) -> Result<LadderProfile> {
    let mut lines = Lines::new(text);
    let p = parse_profile_block(&mut lines)?;
    lines.expect_end()?;
    Ok(p)
}

pub fn write_profile(p: &LadderProfile) -> String {
    let mut out = format!("profile {}\n", p.columns().len());
    for c in p.columns() {
        let _ = writeln!(out, "{} {} {} {}", c.v[0], c.v[1], c.a, c.b);
    }
    out
}

pub fn parse_semistable_pair(text: &str) -> Result<SemistablePair> {
    let mut lines = Lines::new(text);
    let (no, args) = lines.keyword("semistable-pair", 1)?;
    if args[0] != "v1" {
        return Err(parse_err(no, format!("unsupported semistable-pair format version `{}`", args[0])));
    }
    let (no, args) = lines.keyword("dilation", 1)?;
    let dilation = parse_int(no, args[0])?;
    let sigma = parse_fan_block(&mut lines)?;
    let sigma_prime = parse_fan_block(&mut lines)?;
    let no = lines.line_no();
    let p = ProjectionMap::new(parse_matrix_block(&mut lines)?).map_err(|e| parse_err(no, e.to_string()))?;
    let no = lines.line_no();
    let profile = parse_profile_block(&mut lines)?;
    if !profile.is_cyclic_unimodular() {
        return Err(parse_err(no, "consecutive profile vectors must have determinant 1"));
    }
    lines.expect_end()?;
    Ok(SemistablePair { sigma, sigma_prime, p, profile, dilation })
}

pub fn write_semistable_pair(s: &SemistablePair) -> String {
    let mut out = format!("semistable-pair v1\ndilation {}\n", s.dilation);
    out.push_str(&write_fan(&s.sigma));
    out.push_str(&write_fan(&s.sigma_prime));
    out.push_str(&write_matrix(s.p.matrix()));
    out.push_str(&write_profile(&s.profile));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::lattice::int;

    const LINE: &str = "tropical-cycle v1\nambient 2\ndim 1\nrays 3\n-1 0\n0 -1\n1 1\ncones 3\n0 w 1\n1 w 1\n2 w 1\n";

    #[test]
    fn cycle_round_trip() {
        let c = parse_cycle(LINE).unwrap();
        assert_eq!(c.cones().len(), 3);
        assert_eq!(write_cycle(&c), LINE);
    }

    #[test]
    fn huge_weight_survives() {
        let big = format!("1{}", "0".repeat(40));
        let text = format!("tropical-cycle v1\nambient 1\ndim 0\nrays 0\ncones 1\nw {big}\n");
        let c = parse_cycle(&text).unwrap();
        assert_eq!(c.total_weight(), BigInt::from_str(&big).unwrap());
        assert_eq!(write_cycle(&c), text);
    }

    #[test]
    fn missing_ray_is_positioned() {
        let text = "tropical-cycle v1\nambient 2\ndim 1\nrays 1\n1 0\ncones 2\n0 w 1\n3 w 1\n";
        match parse_cycle(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 8),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lineality_and_mixed_cones() {
        let a = Cone::from_i64(3, &[&[1, 0, 0]], &[&[0, 0, 1]]);
        let b = Cone::from_i64(3, &[&[0, 1, 0]], &[&[0, 0, 1]]);
        let c = TropicalCycle::from_cones(3, 2, vec![(a.clone(), int(1)), (b, int(2))]).unwrap();
        let text = write_cycle(&c);
        assert!(text.contains("lineality 1"));
        assert_eq!(parse_cycle(&text).unwrap(), c);
        let d = TropicalCycle::from_cones(3, 2, vec![(a, int(1)), (Cone::from_i64(3, &[], &[&[1, 0, 0], &[0, 1, 0]]), int(1))])
            .unwrap();
        assert_eq!(parse_cycle(&write_cycle(&d)).unwrap(), d);
    }

    #[test]
    fn matrix_and_fan() {
        let m = parse_matrix("matrix 2 3\n1 0 0\n0 1 0\n").unwrap();
        assert_eq!(write_matrix(&m), "matrix 2 3\n1 0 0\n0 1 0\n");
        let f = parse_fan("fan 2 2\nrays 3\n1 0\n0 1\n-1 -1\nrays 0 1\nrays 1 2\n").unwrap();
        assert_eq!(parse_fan(&write_fan(&f)).unwrap(), f);
        let origin = Fan::new(2, vec![Cone::origin(2)]).unwrap();
        assert_eq!(write_fan(&origin), "fan 2 1\nrays 0\nrays\n");
        assert_eq!(parse_fan(&write_fan(&origin)).unwrap(), origin);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_matrix("matrix 2 2\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("matrix 1 2\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_cycle("tropical-cycle v2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_cycle("tropical-cycle v1\nambient 2\ndim 1\nrays 1\n2 0\ncones 0\n").is_err());
    }

    #[test]
    fn semistable_pair_round_trip() {
        let s = Fan::new(3, vec![Cone::from_i64(3, &[&[2, 2, 1]], &[])]).unwrap();
        let pair = crate::semistable::build_semistable_3to2(&s).unwrap();
        let text = write_semistable_pair(&pair);
        let back = parse_semistable_pair(&text).unwrap();
        assert_eq!(write_semistable_pair(&back), text);
        assert_eq!(back.profile, pair.profile);
        assert_eq!(back.dilation, int(2));
    }

    #[test]
    fn profile_errors_are_positioned() {
        match parse_profile("profile 2\n1 0 0 1\n2 0 0 0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_profile("profile 1\n1 0 0\n").is_err());
    }
}
