use std::hint::black_box;

use bruhatkit::bruhat::{bruhat_cell_rank_profile, bruhat_decompose, enumerate_cell, DEFAULT_CELL_BUDGET};
use bruhatkit::lab::{verify_theorem_a, GroupKind, LabConfig};
use bruhatkit::linalg::{PrimeField, RationalField};
use bruhatkit::weyl::{longest_element, GroupSpec};
use bruhatkit_bench::{random_invertible_gf, random_invertible_rational, rng};
use criterion::{criterion_group, criterion_main, Criterion};

fn decompose(c: &mut Criterion) {
    let f = PrimeField::new(7).unwrap();
    let mut r = rng(1);
    let gf: Vec<_> = (0..64).map(|_| random_invertible_gf(&mut r, &f, 5)).collect();
    let q: Vec<_> = (0..16).map(|_| random_invertible_rational(&mut r, 5)).collect();

    c.bench_function("decompose 5x5 GF(7) x64", |b| {
        b.iter(|| gf.iter().map(|g| bruhat_decompose(&f, black_box(g)).unwrap().w.length()).sum::<usize>())
    });
    c.bench_function("rank profile 5x5 GF(7) x64", |b| {
        b.iter(|| gf.iter().map(|g| bruhat_cell_rank_profile(&f, black_box(g)).unwrap().length()).sum::<usize>())
    });
    c.bench_function("decompose 5x5 Q x16", |b| {
        b.iter(|| q.iter().map(|g| bruhat_decompose(&RationalField, black_box(g)).unwrap().w.length()).sum::<usize>())
    });
}

fn cells(c: &mut Criterion) {
    let w0 = longest_element(GroupSpec::a(2).unwrap());
    let cell = enumerate_cell(&w0, 3, DEFAULT_CELL_BUDGET).unwrap();
    c.bench_function("stream GL3(F3) big cell", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            cell.for_each(|_, m| acc += m[0] as u64);
            acc
        })
    });
    let mut group = c.benchmark_group("lab");
    group.sample_size(10);
    group.bench_function("minimal classes Sp4(F3)", |b| {
        b.iter(|| verify_theorem_a(GroupKind::Sp(4), 3, &LabConfig::default()).unwrap().len())
    });
    group.finish();
}

criterion_group!(benches, decompose, cells);
criterion_main!(benches);
