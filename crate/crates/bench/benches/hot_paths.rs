use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use recon_core::invariant::{ExpandedOrbit, IsolatedFamily};
use recon_core::{canonical_code, deck, enumerate_nonisomorphic, InvariantLimits, LabeledGraph, Multigraph, OrbitSum};

fn petersen() -> LabeledGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    LabeledGraph::from_edges(10, &edges).unwrap()
}

fn canonical(c: &mut Criterion) {
    let p = petersen();
    let k = LabeledGraph::complete(12).unwrap();
    let path = LabeledGraph::path(12).unwrap();
    c.bench_function("canonical_code/petersen", |b| b.iter(|| canonical_code(black_box(&p))));
    c.bench_function("canonical_code/k12", |b| b.iter(|| canonical_code(black_box(&k))));
    c.bench_function("canonical_code/p12", |b| b.iter(|| canonical_code(black_box(&path))));
    c.bench_function("deck/petersen", |b| b.iter(|| deck(black_box(&p)).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("n6", |b| b.iter(|| enumerate_nonisomorphic(black_box(6), false).unwrap()));
    group.finish();
}

fn orbit_eval(c: &mut Criterion) {
    let limits = InvariantLimits::default();
    let cycle = OrbitSum::new(&Multigraph::from(&LabeledGraph::cycle(7).unwrap()));
    let expanded = ExpandedOrbit::new(&cycle, &limits).unwrap();
    let host = LabeledGraph::complete(7).unwrap().to_weighted();
    c.bench_function("orbit_eval/c7_on_k7", |b| b.iter(|| expanded.eval(black_box(&host)).unwrap()));

    let family = IsolatedFamily::new(5, 4, &limits).unwrap();
    let w = LabeledGraph::cycle(5).unwrap().to_weighted();
    c.bench_function("orbit_eval/isolated_n5_d4", |b| b.iter(|| family.values(black_box(&w)).unwrap()));
}

criterion_group!(benches, canonical, enumeration, orbit_eval);
criterion_main!(benches);
