use criterion::{black_box, criterion_group, criterion_main, Criterion};

use xnd_core::brauer::build_line;
use xnd_core::cohomology::{cohomology_trivial_table, les_euler_check};
use xnd_core::complex::{is_partial_tilting, truncated_e};
use xnd_core::partition::Partition;

fn bench_tables(c: &mut Criterion) {
    c.bench_function("cohomology_table_14_7", |b| {
        b.iter(|| cohomology_trivial_table(black_box(14), black_box(7)).unwrap())
    });
    c.bench_function("les_euler_check_8_5", |b| {
        let mu = Partition::new(vec![1, 1, 1]).unwrap();
        b.iter(|| les_euler_check(black_box(8), black_box(5), &mu).unwrap())
    });
}

fn bench_brauer(c: &mut Criterion) {
    c.bench_function("build_line_7_2", |b| {
        b.iter(|| build_line(black_box(7), black_box(2), 2).unwrap())
    });
    c.bench_function("syzygy_walk_period_6_2", |b| {
        let line = build_line(6, 2, 2).unwrap();
        let k = line.trivial();
        b.iter(|| line.syzygy_power(&k, 12).unwrap())
    });
    c.bench_function("partial_tilting_5_1_j5", |b| {
        let line = build_line(5, 1, 2).unwrap();
        b.iter(|| {
            let e = truncated_e(&line, 5).unwrap();
            is_partial_tilting(&line, &e).unwrap()
        })
    });
}

criterion_group!(benches, bench_tables, bench_brauer);
criterion_main!(benches);
