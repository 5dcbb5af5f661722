use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use alghyper::constructions::{commuting_hypergraph, generating_hypergraph, power_hypergraph};
use alghyper::matroid::check_exchange_axiom;
use alghyper::numtheory::{count_chains_recurrence, smallest_n_exceeding_chain_count};
use alghyper_bench::{algebra, GROUP_SPECS};

fn cliques(c: &mut Criterion) {
    let mut group = c.benchmark_group("commuting");
    for spec in GROUP_SPECS {
        let g = algebra(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| commuting_hypergraph(black_box(g)))
        });
    }
    group.finish();
}

fn power(c: &mut Criterion) {
    let mut group = c.benchmark_group("power");
    for n in [60, 360, 720] {
        let g = algebra(&format!("cyclic:{n}"));
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| power_hypergraph(black_box(g))));
    }
    group.finish();
}

fn generating(c: &mut Criterion) {
    let mut group = c.benchmark_group("generating");
    group.sample_size(10);
    for spec in ["sym:4", "quaternion", "product:(cyclic:2),(dihedral:4)"] {
        let g = algebra(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| generating_hypergraph(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn chains(c: &mut Criterion) {
    c.bench_function("chain recurrence 720720", |b| b.iter(|| count_chains_recurrence(black_box(720_720)).unwrap()));
    c.bench_function("smallest n 4e11", |b| {
        b.iter(|| smallest_n_exceeding_chain_count(black_box(400_000_000_000)).unwrap())
    });
}

fn exchange(c: &mut Criterion) {
    let h = generating_hypergraph(&algebra("product:(cyclic:6),(cyclic:6)")).unwrap();
    let family = h.edges().to_vec();
    let mut group = c.benchmark_group("exchange");
    group.sample_size(10);
    group.bench_function("Z6xZ6", |b| b.iter(|| check_exchange_axiom(black_box(&family)).unwrap()));
    group.finish();
}

criterion_group!(benches, cliques, power, generating, chains, exchange);
criterion_main!(benches);
