//! Fixed workloads shared by the benchmarks.

use tropchar::semistable::build_semistable_3to2;
use tropchar::{Cone, Fan, LatticeMatrix, LatticePolytope, ProjectionMap, TropicalCycle};

/// `Trop` of the `d`-th dilated simplex in `R^n`.
pub fn simplex_trop(n: usize, d: i64) -> TropicalCycle {
    LatticePolytope::dilated_simplex(n, d).trop().expect("simplex is nonempty")
}

/// A lopsided lattice polygon with `k` vertices on a parabola.
pub fn parabola_polygon(k: i64) -> LatticePolytope {
    let pts: Vec<Vec<i64>> = (0..k).map(|i| vec![i, i * i]).collect();
    let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    LatticePolytope::from_i64(2, &refs)
}

/// A dense integer matrix with small, deterministic entries.
pub fn scrambled_matrix(rows: usize, cols: usize) -> LatticeMatrix {
    let data: Vec<Vec<i64>> =
        (0..rows).map(|i| (0..cols).map(|j| ((i * 7 + j * 13 + i * j) % 11) as i64 - 5).collect()).collect();
    LatticeMatrix::from_i64(cols, &data)
}

pub fn forget_last(n: usize) -> ProjectionMap {
    ProjectionMap::forget_coordinate(n, n - 1)
}

/// Input fan for the semistable builder with rays of varying heights.
pub fn ladder_fan() -> Fan {
    let rays: [&[i64]; 4] = [&[2, 2, 1], &[1, -3, 2], &[-1, 0, 3], &[0, 1, -2]];
    let cones = vec![
        Cone::from_i64(3, &[rays[0], rays[1]], &[]),
        Cone::from_i64(3, &[rays[2]], &[]),
        Cone::from_i64(3, &[rays[3]], &[]),
    ];
    let f = Fan::new(3, cones).expect("valid fan");
    build_semistable_3to2(&f).expect("builder accepts the fixture");
    f
}
