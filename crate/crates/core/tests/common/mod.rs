#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tropchar::lattice::{gcd_of, rank, vector};
use tropchar::{Cone, Fan};

/// A fan of at most four simplicial cones on primitive rays with entries in [-4, 4].
pub fn random_fan(rng: &mut ChaCha8Rng) -> Fan {
    let mut rays = Vec::new();
    let target = rng.gen_range(2..6);
    while rays.len() < target {
        let v: Vec<i64> = (0..3).map(|_| rng.gen_range(-4..=4)).collect();
        let big = vector(&v);
        if gcd_of(&big) == BigInt::from(1) && !rays.contains(&big) {
            rays.push(big);
        }
    }
    let mut cones: Vec<Cone> = Vec::new();
    for _ in 0..4 {
        let k = rng.gen_range(1..=rays.len().min(3));
        let mut gens = Vec::new();
        while gens.len() < k {
            let r = rays[rng.gen_range(0..rays.len())].clone();
            if !gens.contains(&r) {
                gens.push(r);
            }
        }
        if rank(&gens) != k {
            continue;
        }
        let c = Cone::new(3, gens, vec![]).unwrap();
        if cones.iter().all(|d| {
            let g = c.intersection(d);
            c.is_face(&g) && d.is_face(&g)
        }) {
            cones.push(c);
        }
    }
    Fan::new(3, cones).unwrap()
}

