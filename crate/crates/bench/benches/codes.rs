use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use bellperm::codes::{phi, phi_inverse, phi_tilde, phi_tilde_inverse};
use bellperm::{bijections, bp2};
use bellperm_bench::{scrambled_rgf, scrambled_sef};

fn code_maps(c: &mut Criterion) {
    let f = scrambled_sef(1000);
    c.bench_function("phi-n1000", |b| b.iter(|| black_box(phi(&f))));
    c.bench_function("phi-tilde-n1000", |b| b.iter(|| black_box(phi_tilde(&f))));

    let sigma = phi(&f);
    c.bench_function("phi-inverse-n1000", |b| {
        b.iter(|| black_box(phi_inverse(&sigma)))
    });
    let sigma = phi_tilde(&f);
    c.bench_function("phi-tilde-inverse-n1000", |b| {
        b.iter(|| black_box(phi_tilde_inverse(&sigma)))
    });
    c.bench_function("inom-table-n1000", |b| {
        b.iter(|| black_box(sigma.inom_table()))
    });
}

fn recognizers(c: &mut Criterion) {
    let member = phi_tilde(scrambled_rgf(1000).as_sef());
    c.bench_function("is-bp2-by-code-n1000", |b| {
        b.iter(|| black_box(bp2::is_bp2_by_code(&member)))
    });
    c.bench_function("certify-n1000", |b| {
        b.iter(|| black_box(bp2::certify(&member).verdict))
    });
    c.bench_function("is-bp2-by-reduction-n1000", |b| {
        b.iter(|| black_box(bp2::is_bp2_by_reduction(&member)))
    });
}

fn conversions(c: &mut Criterion) {
    let member = phi_tilde(scrambled_rgf(1000).as_sef());
    let pi = bijections::bp2_to_partition(&member).unwrap();
    c.bench_function("lambda-n1000", |b| {
        b.iter(|| black_box(bijections::bp2_to_partition(&member).unwrap()))
    });
    c.bench_function("chi-n1000", |b| {
        b.iter(|| black_box(bijections::partition_to_bp2(&pi)))
    });
    let bp1 = bijections::partition_to_bp1(&pi);
    c.bench_function("beta-n1000", |b| {
        b.iter(|| black_box(bijections::bp1_to_bp2(&bp1).unwrap()))
    });
    let image = bijections::bp1_to_bp2(&bp1).unwrap();
    c.bench_function("theta-n1000", |b| {
        b.iter(|| black_box(bijections::bp2_to_bp1(&image).unwrap()))
    });
}

criterion_group!(benches, code_maps, recognizers, conversions);
criterion_main!(benches);
