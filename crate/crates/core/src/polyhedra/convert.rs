//! Double description conversions for rational polyhedral cones.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lattice::{dot, generalized_cross, is_zero_vector, kernel_of_rows, primitive, LatticeVector};

/// Generators of `{x : E x = 0, A x >= 0}` as `(rays, lineality basis)`.
///
/// The rays returned are primitive and lie in the orthogonal complement of the
/// lineality space inside `ker E`.
pub fn h_to_v(n: usize, eqs: &[LatticeVector], ineqs: &[LatticeVector]) -> (Vec<LatticeVector>, Vec<LatticeVector>) {
    let mut all: Vec<LatticeVector> = eqs.to_vec();
    all.extend(ineqs.iter().cloned());
    let lin = kernel_of_rows(n, &all).into_rows();
    let mut wrows: Vec<LatticeVector> = eqs.to_vec();
    wrows.extend(lin.iter().cloned());
    let w = kernel_of_rows(n, &wrows).into_rows();
    let q = w.len();
    if q == 0 {
        return (Vec::new(), lin);
    }
    let mut reduced: BTreeSet<LatticeVector> = BTreeSet::new();
    for a in ineqs {
        let r: LatticeVector = w.iter().map(|b| dot(a, b)).collect();
        if !is_zero_vector(&r) {
            reduced.insert(primitive(&r));
        }
    }
    let a: Vec<LatticeVector> = reduced.into_iter().collect();
    let feasible = |y: &LatticeVector| a.iter().all(|row| !dot(row, y).is_negative());
    let mut found: BTreeSet<LatticeVector> = BTreeSet::new();
    let try_candidate = |c: LatticeVector, found: &mut BTreeSet<LatticeVector>| {
        if is_zero_vector(&c) {
            return;
        }
        let c = primitive(&c);
        let neg: LatticeVector = c.iter().map(|x| -x).collect();
        if feasible(&c) {
            found.insert(c);
        } else if feasible(&neg) {
            found.insert(neg);
        }
    };
    if q == 1 {
        try_candidate(vec![BigInt::from(1)], &mut found);
    } else if a.len() >= q - 1 {
        let mut idx: Vec<usize> = (0..q - 1).collect();
        loop {
            let rows: Vec<LatticeVector> = idx.iter().map(|&i| a[i].clone()).collect();
            try_candidate(generalized_cross(&rows, q), &mut found);
            if !next_combination(&mut idx, a.len()) {
                break;
            }
        }
    }
    let rays = found
        .into_iter()
        .map(|y| {
            let mut x = vec![BigInt::zero(); n];
            for (c, b) in y.iter().zip(&w) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += c * bi;
                }
            }
            primitive(&x)
        })
        .collect();
    (rays, lin)
}

/// Irredundant inequalities and equations `(facets, equations)` of `cone(rays) + span(lin)`.
pub fn v_to_h(n: usize, rays: &[LatticeVector], lin: &[LatticeVector]) -> (Vec<LatticeVector>, Vec<LatticeVector>) {
    h_to_v(n, lin, rays)
}

pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
