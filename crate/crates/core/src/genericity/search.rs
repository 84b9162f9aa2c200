use num_bigint::BigInt;
use num_traits::Zero;

use crate::cycles::TropicalCycle;
use crate::error::{Error, Result};
use crate::lattice::{kernel_of_rows, rank, LatticeMatrix, LatticeVector};

use super::predicates::{image_rank, is_immersed, is_submersed};
use super::ProjectionMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Submerse,
    Immerse,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "submerse" => Ok(Mode::Submerse),
            "immerse" => Ok(Mode::Immerse),
            other => Err(Error::InvalidInput(format!("unknown genericity mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest max-norm of an enumerated kernel vector.
    pub search_bound: u32,
    /// Rotation of the enumeration order.
    pub offset: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { search_bound: 4, offset: 0 }
    }
}

/// Nonzero integer vectors of max-norm at most `bound` with positive leading
/// entry, by increasing max-norm and then lexicographically.
pub fn kernel_candidates(n: usize, bound: u32) -> Vec<LatticeVector> {
    let b = bound as i64;
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut v = vec![-b; n];
    'odometer: loop {
        if v.iter().find(|x| **x != 0).is_some_and(|&lead| lead > 0) {
            out.push(v.clone());
        }
        for i in (0..n).rev() {
            if v[i] < b {
                v[i] += 1;
                continue 'odometer;
            }
            v[i] = -b;
        }
        break;
    }
    out.sort_by_key(|v| v.iter().map(|x| x.abs()).max().unwrap_or(0));
    out.into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect()
}

fn map_with_kernel(n: usize, kernel: &[LatticeVector]) -> ProjectionMap {
    let rows = kernel_of_rows(n, kernel);
    let rows = if rows.row_count() == 0 { LatticeMatrix::zeros(0, n) } else { rows };
    ProjectionMap::new(rows).expect("saturated annihilator")
}

/// Stage check once `s` kernel vectors are fixed: the partial projection must
/// already be as generic as the final one can be.
fn stage_ok(p: &ProjectionMap, fans: &[(TropicalCycle, Mode)]) -> bool {
    let r = p.target_rank();
    fans.iter().all(|(k, mode)| match mode {
        Mode::Immerse => is_immersed(p, k).map(|rep| rep.holds()).unwrap_or(false),
        Mode::Submerse => {
            let want = k.dim().min(r);
            k.nonzero_cones().all(|(s, _)| image_rank(p, s) >= want)
        }
    })
}

fn final_ok(p: &ProjectionMap, fans: &[(TropicalCycle, Mode)]) -> bool {
    fans.iter().all(|(k, mode)| match mode {
        Mode::Immerse => is_immersed(p, k).map(|rep| rep.holds()).unwrap_or(false),
        Mode::Submerse => is_submersed(p, k).map(|rep| rep.holds()).unwrap_or(false),
    })
}

/// Deterministic search for a rank-`r` epimorphism passing every requested
/// predicate, choosing kernel vectors one at a time.
pub fn find_generic_projection(fans: &[(TropicalCycle, Mode)], r: usize, opts: &SearchOptions) -> Result<ProjectionMap> {
    let n = match fans.first() {
        Some((k, _)) => k.ambient(),
        None => return Err(Error::InvalidInput("no complexes given".into())),
    };
    if r > n {
        return Err(Error::DimensionMismatch(format!("rank {r} projection of R^{n}")));
    }
    for (k, mode) in fans {
        if k.ambient() != n {
            return Err(Error::DimensionMismatch(format!("complexes in R^{n} and R^{}", k.ambient())));
        }
        match mode {
            Mode::Immerse if k.dim() > r => {
                return Err(Error::InvalidInput(format!("cannot immerse a {}-dimensional complex into R^{r}", k.dim())))
            }
            Mode::Submerse if k.dim() < r && !k.is_zero() => {
                return Err(Error::InvalidInput(format!("cannot submerse a {}-dimensional complex onto R^{r}", k.dim())))
            }
            _ => {}
        }
    }
    let mut cands = kernel_candidates(n, opts.search_bound);
    if !cands.is_empty() {
        let shift = opts.offset % cands.len();
        cands.rotate_left(shift);
    }
    let depth = n - r;
    let mut chosen: Vec<usize> = Vec::new();
    if dfs(n, depth, &cands, fans, &mut chosen) {
        let kernel: Vec<LatticeVector> = chosen.iter().map(|&i| cands[i].clone()).collect();
        return Ok(map_with_kernel(n, &kernel));
    }
    let constraints: Vec<String> = fans.iter().map(|(k, m)| format!("{m:?} {}-dimensional complex", k.dim())).collect();
    Err(Error::SearchExhausted(format!(
        "no rank-{r} projection with kernel vectors of max-norm <= {} satisfies [{}]",
        opts.search_bound,
        constraints.join(", ")
    )))
}

fn dfs(n: usize, depth: usize, cands: &[LatticeVector], fans: &[(TropicalCycle, Mode)], chosen: &mut Vec<usize>) -> bool {
    let kernel: Vec<LatticeVector> = chosen.iter().map(|&i| cands[i].clone()).collect();
    let p = map_with_kernel(n, &kernel);
    if chosen.len() == depth {
        return final_ok(&p, fans);
    }
    if !chosen.is_empty() && !stage_ok(&p, fans) {
        return false;
    }
    let start = chosen.last().map_or(0, |&i| i + 1);
    for i in start..cands.len() {
        let mut trial = kernel.clone();
        trial.push(cands[i].clone());
        if rank(&trial) != trial.len() {
            continue;
        }
        chosen.push(i);
        if dfs(n, depth, cands, fans, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Hyperplane refinement: given `p` with kernel `L` submersing `k`, finds a
/// hyperplane `H ⊂ L` so that the projection along `H` submerses `k`, or
/// immerses it when `dim k + dim L = n`.
pub fn generic_hyperplane(k: &TropicalCycle, kernel: &LatticeMatrix, opts: &SearchOptions) -> Result<ProjectionMap> {
    let n = k.ambient();
    let l = kernel.row_count();
    if l == 0 {
        return Err(Error::InvalidInput("kernel is zero".into()));
    }
    if k.dim() + l < n {
        return Err(Error::InvalidInput(format!(
            "a {}-dimensional complex cannot be submersed along a {l}-dimensional kernel",
            k.dim()
        )));
    }
    let immerse = k.dim() + l == n;
    let mut cands = kernel_candidates(l, opts.search_bound);
    if !cands.is_empty() {
        let shift = opts.offset % cands.len();
        cands.rotate_left(shift);
    }
    for c in cands {
        let h = kernel_of_rows(l, &[c]);
        let hyper: Vec<LatticeVector> = h
            .rows()
            .iter()
            .map(|coef| {
                let mut x = vec![BigInt::zero(); n];
                for (a, b) in coef.iter().zip(kernel.rows()) {
                    for (xi, bi) in x.iter_mut().zip(b) {
                        *xi += a * bi;
                    }
                }
                x
            })
            .collect();
        let q = map_with_kernel(n, &hyper);
        let ok = if immerse {
            is_immersed(&q, k)?.holds()
        } else {
            is_submersed(&q, k)?.holds()
        };
        if ok {
            return Ok(q);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no hyperplane of the kernel with coefficients of max-norm <= {}",
        opts.search_bound
    )))
}
