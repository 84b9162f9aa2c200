use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use tropchar::lattice::{
    hermite_normal_form, image_lattice_index, kernel_basis, lattice_coordinates, primitive_part, rank,
    smith_normal_form,
};
use tropchar::LatticeMatrix;

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = LatticeMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(-5i64..=5, n), m)
            .prop_map(move |rows| LatticeMatrix::from_i64(n, &rows))
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

// Leibniz expansion, independent of the library's elimination.
fn leibniz(a: &[Vec<i128>]) -> i128 {
    fn perms(n: usize) -> Vec<(Vec<usize>, i128)> {
        if n == 0 {
            return vec![(vec![], 1)];
        }
        let mut out = Vec::new();
        for (p, s) in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
                out.push((q, sign));
            }
        }
        out
    }
    perms(a.len()).into_iter().map(|(p, s)| s * p.iter().enumerate().map(|(i, &j)| a[i][j]).product::<i128>()).sum()
}

fn minor_gcd(a: &LatticeMatrix, k: usize) -> BigInt {
    let entries: Vec<Vec<i128>> =
        a.rows().iter().map(|r| r.iter().map(|x| i128::try_from(x).unwrap()).collect()).collect();
    let mut g = 0i128;
    for rs in subsets(a.row_count(), k) {
        for cs in subsets(a.col_count(), k) {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| entries[i][j]).collect()).collect();
            g = g.gcd(&leibniz(&sub));
        }
    }
    BigInt::from(g)
}

/// A unimodular matrix and its inverse, from elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = (LatticeMatrix, LatticeMatrix)> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..8).prop_map(move |ops| {
        let mut u = LatticeMatrix::identity(n).into_rows();
        let mut inv = LatticeMatrix::identity(n).into_rows();
        for (i, j, c, swap) in ops {
            if i == j {
                continue;
            }
            if swap {
                u.swap(i, j);
                for r in inv.iter_mut() {
                    r.swap(i, j);
                }
            } else {
                let c = BigInt::from(c);
                let rj = u[j].clone();
                for (x, y) in u[i].iter_mut().zip(&rj) {
                    *x += &c * y;
                }
                for r in inv.iter_mut() {
                    let t = &r[i] * &c;
                    r[j] -= t;
                }
            }
        }
        (LatticeMatrix::from_rows(n, u), LatticeMatrix::from_rows(n, inv))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hermite_form_is_reached_by_unimodular_rows(a in matrix(4, 4)) {
        let (h, u) = hermite_normal_form(&a);
        prop_assert_eq!(u.mul(&a).unwrap(), h.clone());
        prop_assert!(u.determinant().unwrap().abs().is_one());
        let mut last_pivot = None;
        for r in h.rows() {
            match r.iter().position(|x| !x.is_zero()) {
                None => last_pivot = Some(usize::MAX),
                Some(p) => {
                    prop_assert!(last_pivot.is_none_or(|q| q != usize::MAX && q < p));
                    prop_assert!(r[p].is_positive());
                    last_pivot = Some(p);
                }
            }
        }
        for (i, r) in h.rows().iter().enumerate() {
            if let Some(p) = r.iter().position(|x| !x.is_zero()) {
                for above in &h.rows()[..i] {
                    prop_assert!(!above[p].is_negative() && above[p] < r[p]);
                }
            }
        }
        prop_assert_eq!(hermite_normal_form(&h).0, h);
    }

    #[test]
    fn smith_invariants_match_minor_gcds(a in matrix(4, 4)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.rank(), rank(a.rows()));
        for w in s.invariants.windows(2) {
            prop_assert!(w[0].is_positive() && w[1].is_multiple_of(&w[0]));
        }
        let mut prod = BigInt::one();
        for (k, d) in s.invariants.iter().enumerate() {
            prod *= d;
            prop_assert_eq!(&prod, &minor_gcd(&a, k + 1));
        }
        prop_assert!(minor_gcd(&a, s.rank() + 1).is_zero());
        prop_assert_eq!(s.p.mul(&a).unwrap().mul(&s.q).unwrap(), s.d.clone());
    }

    #[test]
    fn kernel_is_saturated(a in matrix(3, 4), coeffs in prop::collection::vec(-4i64..=4, 4)) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.row_count(), a.col_count() - rank(a.rows()));
        for v in k.rows() {
            prop_assert!(a.apply(v).iter().all(Zero::is_zero));
        }
        let n = a.col_count();
        let mut v = vec![BigInt::zero(); n];
        for (row, c) in k.rows().iter().zip(&coeffs) {
            for (x, y) in v.iter_mut().zip(row) {
                *x += BigInt::from(*c) * y;
            }
        }
        if let Ok((p, _)) = primitive_part(&v) {
            prop_assert!(lattice_coordinates(&p, k.rows()).is_some());
        }
    }

    #[test]
    fn image_index_is_stable_under_unimodular_changes(
        p in matrix(3, 3).prop_filter("full width", |p| p.col_count() == 3),
        basis in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..=2),
        (v, v_inv) in unimodular(3),
        ut in (1usize..=3).prop_flat_map(unimodular),
    ) {
        prop_assert_eq!(v.mul(&v_inv).unwrap(), LatticeMatrix::identity(3));
        let basis = LatticeMatrix::from_i64(3, &basis);
        let Ok(base) = image_lattice_index(&p, &basis) else { return Ok(()); };
        prop_assert!(base.is_positive());
        if ut.0.col_count() == p.row_count() {
            prop_assert_eq!(image_lattice_index(&ut.0.mul(&p).unwrap(), &basis).unwrap(), base.clone());
        }
        let moved = LatticeMatrix::from_rows(3, basis.rows().iter().map(|b| v_inv.apply(b)).collect());
        prop_assert_eq!(image_lattice_index(&p.mul(&v).unwrap(), &moved).unwrap(), base.clone());
        let doubled = LatticeMatrix::from_rows(3, basis.rows().iter().map(|b| b.iter().map(|x| x * 2).collect()).collect());
        let k = BigInt::from(2).pow(rank(basis.rows()) as u32);
        prop_assert_eq!(image_lattice_index(&p, &doubled).unwrap(), base * k);
    }
}
