use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use tropchar::classes::{critical_count, grading_convert, hypersurface_class};
use tropchar::cycles::{intersection_number, is_balanced, pushforward, stable_intersection};
use tropchar::lattice::{hermite_normal_form, smith_normal_form};
use tropchar::semistable::build_semistable_3to2;
use tropchar::{LatticePolytope, MonomialSupport};
use tropchar_bench::{forget_last, ladder_fan, parabola_polygon, scrambled_matrix, simplex_trop};

fn lattice(c: &mut Criterion) {
    let m = scrambled_matrix(6, 8);
    c.bench_function("hnf 6x8", |b| b.iter(|| hermite_normal_form(black_box(&m))));
    c.bench_function("snf 6x8", |b| b.iter(|| smith_normal_form(black_box(&m))));
}

fn cycles(c: &mut Criterion) {
    let p = parabola_polygon(6).trop().unwrap();
    let q = parabola_polygon(4).trop().unwrap();
    c.bench_function("intersection number polygons", |b| b.iter(|| intersection_number(black_box(&p), black_box(&q))));
    let s = simplex_trop(3, 2);
    c.bench_function("self-intersection simplex R^3", |b| b.iter(|| stable_intersection(black_box(&s), black_box(&s))));
    let curve = stable_intersection(&s, &s).unwrap();
    c.bench_function("balancing curve R^3", |b| b.iter(|| is_balanced(black_box(&curve))));
    let p3 = forget_last(3);
    c.bench_function("pushforward curve R^3", |b| b.iter(|| pushforward(&p3, black_box(&curve))));
}

fn classes(c: &mut Criterion) {
    let poly = LatticePolytope::dilated_simplex(3, 2);
    c.bench_function("hypersurface class R^3", |b| {
        b.iter(|| grading_convert(&hypersurface_class(black_box(&poly), 3).unwrap()))
    });
    let u = hypersurface_class(&LatticePolytope::dilated_simplex(2, 1), 2).unwrap();
    let a = MonomialSupport::from_i64(2, &[&[2, 1], &[1, 2], &[3, 3]]);
    c.bench_function("critical count line", |b| b.iter(|| critical_count(black_box(&a), &u)));
}

fn semistable(c: &mut Criterion) {
    let f = ladder_fan();
    c.bench_function("semistable builder", |b| b.iter(|| build_semistable_3to2(black_box(&f))));
}

criterion_group!(benches, lattice, cycles, classes, semistable);
criterion_main!(benches);
