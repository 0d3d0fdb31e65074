use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use semilaurent::verify::{case_rng, gen};
use semilaurent::RiordanArray;

const LENS: [usize; 3] = [8, 16, 32];

fn series_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for len in LENS {
        let rng = &mut case_rng(1, len);
        let a = gen::series(rng, -3..=3, len);
        let b = gen::series(rng, -3..=3, len);
        let f = gen::order_one(rng, len, false);
        let t = gen::order_one(rng, len, true);
        group.bench_with_input(BenchmarkId::new("mul", len), &len, |bch, _| bch.iter(|| black_box(&a).mul(&b)));
        group.bench_with_input(BenchmarkId::new("inverse", len), &len, |bch, _| bch.iter(|| black_box(&a).inverse()));
        group.bench_with_input(BenchmarkId::new("compose", len), &len, |bch, _| bch.iter(|| black_box(&a).compose(&f)));
        group.bench_with_input(BenchmarkId::new("comp_inverse", len), &len, |bch, _| {
            bch.iter(|| black_box(&f).comp_inverse())
        });
        group.bench_with_input(BenchmarkId::new("iter_sqrt", len), &len, |bch, _| {
            bch.iter(|| black_box(&t).iter_sqrt())
        });
    }
    group.finish();
}

fn array_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("riordan");
    group.sample_size(20);
    for len in [8, 16] {
        let rng = &mut case_rng(2, len);
        let r = gen::array(rng, -3..=3, len);
        let s = gen::array(rng, -3..=3, len);
        group.bench_with_input(BenchmarkId::new("rmul", len), &len, |bch, _| bch.iter(|| black_box(&r).mul(&s)));
        group.bench_with_input(BenchmarkId::new("rinverse", len), &len, |bch, _| bch.iter(|| black_box(&r).inverse()));
        // a fresh array each time so the column cache starts empty
        group.bench_with_input(BenchmarkId::new("window_8x8", len), &len, |bch, _| {
            bch.iter(|| {
                let fresh = RiordanArray::new(r.g().clone(), r.f().clone()).unwrap();
                let q = fresh.diag_offset();
                fresh.window(q, q + 7, 0, 7)
            })
        });
    }
    group.finish();
}

criterion_group!(benches, series_kernels, array_kernels);
criterion_main!(benches);
