use std::hint::black_box;

use bruhatkit::hecke::{hecke_mul, t_basis};
use bruhatkit::weyl::{all_elements, conjugacy_classes, longest_element, GroupSpec};
use criterion::{criterion_group, criterion_main, Criterion};

fn lengths(c: &mut Criterion) {
    let elems = all_elements(GroupSpec::bc(5).unwrap());
    c.bench_function("length over W(C5)", |b| b.iter(|| elems.iter().map(|w| black_box(w).length()).sum::<usize>()));
    c.bench_function("reduced word over W(C5)", |b| {
        b.iter(|| elems.iter().map(|w| black_box(w).reduced_word().len()).sum::<usize>())
    });
}

fn classes(c: &mut Criterion) {
    let mut group = c.benchmark_group("classes");
    group.sample_size(10);
    group.bench_function("conjugacy classes W(C5)", |b| {
        b.iter(|| conjugacy_classes(black_box(GroupSpec::bc(5).unwrap())).unwrap().len())
    });
    group.bench_function("conjugacy classes S7", |b| {
        b.iter(|| conjugacy_classes(black_box(GroupSpec::a(6).unwrap())).unwrap().len())
    });
    group.finish();
}

fn hecke(c: &mut Criterion) {
    let spec = GroupSpec::bc(3).unwrap();
    let w0 = t_basis(&longest_element(spec));
    c.bench_function("T_w0 * T_w0 in H(C3)", |b| b.iter(|| hecke_mul(black_box(&w0), black_box(&w0)).unwrap()));
}

criterion_group!(benches, lengths, classes, hecke);
criterion_main!(benches);
