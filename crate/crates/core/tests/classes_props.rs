use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropchar::classes::{
    class_mul, class_pushforward, complete_intersection_class, critical_count, cycle_power, euler_characteristic,
    grading_convert, hypersurface_class,
};
use tropchar::cycles::{stable_intersection, IntersectOptions};
use tropchar::lattice::vector;
use tropchar::{
    Error, Grading, LatticeMatrix, LatticePolytope, MonomialSupport, ProjectionMap, TropicalClass, TropicalCycle,
};

fn small_polytope(rng: &mut ChaCha8Rng, n: usize, k: usize) -> LatticePolytope {
    let pts = (0..k).map(|_| vector(&(0..n).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>())).collect();
    LatticePolytope::new(n, pts).unwrap()
}

fn random_cycle(rng: &mut ChaCha8Rng, n: usize, codim: usize) -> TropicalCycle {
    let mut c = TropicalCycle::whole_space(n);
    for _ in 0..codim {
        c = stable_intersection(&c, &small_polytope(rng, n, 3).trop().unwrap()).unwrap();
    }
    c.scale(&BigInt::from(rng.gen_range(1..=3) * if rng.gen_bool(0.3) { -1 } else { 1 }))
}

fn random_class(seed: u64, n: usize) -> TropicalClass {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim_u = rng.gen_range(0..=n);
    let mut c = TropicalClass::zero(n, Some(dim_u), Grading::Affine);
    for j in n - dim_u..=n {
        if rng.gen_bool(0.7) {
            c.set_piece(j, random_cycle(&mut rng, n, j)).unwrap();
        }
    }
    c
}

fn full_polytope(n: usize, k: usize) -> impl Strategy<Value = LatticePolytope> {
    any::<u64>()
        .prop_map(move |s| small_polytope(&mut ChaCha8Rng::seed_from_u64(s), n, k))
        .prop_filter("full-dimensional", move |p| p.dim() == Some(n))
}

fn same(a: &TropicalClass, b: &TropicalClass) -> bool {
    a.class_equal(b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn class_mul_is_a_commutative_monoid(seeds in prop::array::uniform3(any::<u64>()), n in 2usize..=3) {
        let (a, b, c) = (random_class(seeds[0], n), random_class(seeds[1], n), random_class(seeds[2], n));
        let one = TropicalClass::torus(n);
        prop_assert!(same(&class_mul(&a, &one).unwrap(), &a));
        prop_assert!(same(&class_mul(&one, &a).unwrap(), &a));
        prop_assert!(same(&class_mul(&a, &b).unwrap(), &class_mul(&b, &a).unwrap()));
        let left = class_mul(&class_mul(&a, &b).unwrap(), &c).unwrap();
        let right = class_mul(&a, &class_mul(&b, &c).unwrap()).unwrap();
        prop_assert!(same(&left, &right));
    }

    #[test]
    fn grading_convert_is_an_involution(seed in any::<u64>(), n in 1usize..=3) {
        let a = random_class(seed, n);
        let t = grading_convert(&a).unwrap();
        prop_assert_eq!(t.grading(), Grading::Trop);
        prop_assert!(same(&grading_convert(&t).unwrap(), &a));
        let top = n - a.dim_u().unwrap();
        prop_assert!(t.piece(top).cycle_equal(&a.piece(top)).unwrap());
    }

    #[test]
    fn hypersurface_euler_is_signed_volume(p in (1usize..=4).prop_flat_map(|n| full_polytope(n, n + 1))) {
        let n = p.ambient();
        let class = hypersurface_class(&p, n).unwrap();
        let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(euler_characteristic(&class).unwrap(), p.lattice_volume() * sign);
    }

    #[test]
    fn hypersurface_trop_pieces_are_positive_powers(p in (2usize..=3).prop_flat_map(|n| full_polytope(n, 4))) {
        let n = p.ambient();
        let t = p.trop().unwrap();
        let trop = grading_convert(&hypersurface_class(&p, n).unwrap()).unwrap();
        for j in 0..n {
            let piece = trop.trop(j).unwrap();
            let power = cycle_power(&t, n - j, &IntersectOptions::default()).unwrap();
            prop_assert!(piece.cycle_equal(&power).unwrap());
            prop_assert!(piece.has_positive_weights());
        }
    }

    #[test]
    fn complete_intersection_euler(p in (2usize..=3).prop_flat_map(|n| full_polytope(n, 4))) {
        let n = p.ambient();
        let k = n - 1;
        let class = complete_intersection_class(&p, k, n).unwrap();
        let top = cycle_power(&p.trop().unwrap(), k + 1, &IntersectOptions::default()).unwrap();
        prop_assert_eq!(euler_characteristic(&class).unwrap(), top.total_weight() * -(k as i64));
    }

    #[test]
    fn pushforwards_compose(seed in any::<u64>(), p in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 2), q in prop::collection::vec(-2i64..=2, 2)) {
        let a = random_class(seed, 3);
        let p = ProjectionMap::new(LatticeMatrix::from_i64(3, &p)).unwrap();
        let q = ProjectionMap::new(LatticeMatrix::from_i64(2, &[q])).unwrap();
        let twice = class_pushforward(&q, &class_pushforward(&p, &a).unwrap()).unwrap();
        let once = class_pushforward(&p.then(&q).unwrap(), &a).unwrap();
        prop_assert!(same(&twice, &once));
    }

    #[test]
    fn critical_counts(seeds in prop::array::uniform2(any::<u64>()), pts in prop::collection::vec(prop::collection::vec(-2i64..=2, 2), 1..=3)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seeds[0]);
        let u = grading_convert(&hypersurface_class(&small_polytope(&mut rng, 2, 3), 2).unwrap()).unwrap();
        let v = grading_convert(&hypersurface_class(&small_polytope(&mut rng, 2, 3), 2).unwrap()).unwrap();
        let mut distinct = pts.clone();
        distinct.sort();
        distinct.dedup();
        let refs: Vec<&[i64]> = distinct.iter().map(Vec::as_slice).collect();
        let a = MonomialSupport::from_i64(2, &refs);
        match (critical_count(&a, &u), critical_count(&a, &v), critical_count(&a, &u.add(&v).unwrap())) {
            (Ok(x), Ok(y), Ok(z)) => prop_assert_eq!(x + y, z),
            (Err(Error::Inadmissible(_)), _, _) | (_, Err(Error::Inadmissible(_)), _) => {}
            other => prop_assert!(false, "unexpected {:?}", other),
        }
        let point = MonomialSupport::from_i64(2, &[refs[0]]);
        if let Ok(c) = critical_count(&point, &u) {
            prop_assert_eq!(c, u.trop(0).unwrap().total_weight());
        }
        let origin = MonomialSupport::from_i64(2, &[&[0, 0]]);
        prop_assert_eq!(critical_count(&origin, &u).unwrap(), u.trop(0).unwrap().total_weight());
    }
}
