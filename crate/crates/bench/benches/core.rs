use cgfib_core::golden::letter_at;
use cgfib_core::numeric::floor_div_phi;
use cgfib_core::sets::{b_members, RowTable};
use cgfib_core::{cg_decompose, fib, zeckendorf};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;

fn decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for index in [40u64, 400, 4000] {
        let n = fib(index).unwrap() * 2u32 - 1u32;
        group.bench_with_input(BenchmarkId::new("chung_graham", index), &n, |b, n| {
            b.iter(|| cg_decompose(black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("zeckendorf", index), &n, |b, n| {
            b.iter(|| zeckendorf(black_box(n)))
        });
    }
    group.finish();
}

fn golden(c: &mut Criterion) {
    let deep = fib(300).unwrap();
    c.bench_function("floor_div_phi F300", |b| {
        b.iter(|| floor_div_phi(black_box(&deep)))
    });
    c.bench_function("letter_at F300", |b| b.iter(|| letter_at(black_box(&deep))));
}

fn sets(c: &mut Criterion) {
    let limit = BigUint::from(100_000u32);
    c.bench_function("b_members N=2 to 1e5", |b| {
        b.iter(|| b_members(2, black_box(&limit)).unwrap())
    });
    c.bench_function("row table k=1 10k rows", |b| {
        b.iter(|| RowTable::new(1, black_box(10_000)).unwrap())
    });
}

criterion_group!(benches, decompose, golden, sets);
criterion_main!(benches);
