use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropchar::cycles::{is_balanced, stable_intersection};
use tropchar::genericity::{
    compute_classes_surface3, find_generic_projection, generic_hyperplane, is_immersed, is_submersed, Mode,
    SchonMockOracle, SearchOptions,
};
use tropchar::lattice::vector;
use tropchar::{LatticePolytope, TropicalCycle};

fn hypersurface(rng: &mut ChaCha8Rng, n: usize) -> TropicalCycle {
    loop {
        let pts = (0..n + 1).map(|_| vector(&(0..n).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>())).collect();
        let p = LatticePolytope::new(n, pts).unwrap();
        if p.dim() == Some(n) {
            return p.trop().unwrap();
        }
    }
}

/// A nonzero pure complex of the given dimension with positive weights.
fn complex(seed: u64, n: usize, dim: usize) -> TropicalCycle {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut c = TropicalCycle::whole_space(n);
        for _ in dim..n {
            c = stable_intersection(&c, &hypersurface(&mut rng, n)).unwrap();
        }
        if !c.is_zero() {
            return c;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn search_results_pass_their_predicates(seeds in prop::array::uniform2(any::<u64>()), n in 3usize..=4) {
        let curve = complex(seeds[0], n, 1);
        let surface = complex(seeds[1], n, 2);
        let opts = SearchOptions::default();
        let p = find_generic_projection(&[(curve.clone(), Mode::Immerse), (surface.clone(), Mode::Submerse)], 2, &opts).unwrap();
        prop_assert_eq!(p.target_rank(), 2);
        prop_assert!(p.is_surjective());
        prop_assert!(is_immersed(&p, &curve).unwrap().holds());
        prop_assert!(is_submersed(&p, &surface).unwrap().holds());
        let q = find_generic_projection(&[(curve.clone(), Mode::Submerse)], 1, &opts).unwrap();
        prop_assert!(is_submersed(&q, &curve).unwrap().holds());
    }

    #[test]
    fn hyperplane_refinement(seed in any::<u64>(), n in 2usize..=4, dim in 1usize..=3, l in 1usize..=3) {
        prop_assume!(dim < n && l < n && dim + l >= n);
        let k = complex(seed, n, dim);
        let p = find_generic_projection(&[(k.clone(), Mode::Submerse)], n - l, &SearchOptions::default()).unwrap();
        let q = generic_hyperplane(&k, p.kernel(), &SearchOptions::default()).unwrap();
        prop_assert_eq!(q.target_rank(), n - l + 1);
        if dim + l == n {
            prop_assert!(is_immersed(&q, &k).unwrap().holds());
        } else {
            prop_assert!(is_submersed(&q, &k).unwrap().holds());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn driver_ignores_search_order(seed in any::<u64>(), offset in 1usize..40) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let surface = hypersurface(&mut rng, 3);
        let base = SearchOptions::default();
        let shifted = SearchOptions { offset, ..SearchOptions::default() };
        let (a, _) = compute_classes_surface3(&surface, &mut SchonMockOracle::default(), &base).unwrap();
        let (b, trace) = compute_classes_surface3(&surface, &mut SchonMockOracle::default(), &shifted).unwrap();
        prop_assert!(a.class_equal(&b).unwrap());
        prop_assert!(is_submersed(&trace.step2, &surface).unwrap().holds());
        for c in a.pieces().values() {
            prop_assert!(is_balanced(c).balanced);
            prop_assert!(c.has_positive_weights());
        }
    }
}
