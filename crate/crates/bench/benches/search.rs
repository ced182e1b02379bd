use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use semicat_core::aut::{automorphism_group, tuple_orbits, OrbitOptions, OrbitStrategy};
use semicat_core::constructions::{brandt, cyclic_group};
use semicat_bench::search_inputs;

fn automorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphism_group");
    for (name, s) in search_inputs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, s| {
            b.iter(|| automorphism_group(s).unwrap())
        });
    }
    group.finish();
}

fn orbits(c: &mut Criterion) {
    let s = brandt(&cyclic_group(2), 3).unwrap();
    let aut = automorphism_group(&s).unwrap();
    let all: Vec<usize> = s.elements().collect();
    let mut group = c.benchmark_group("tuple_orbits_brandt_Z2_3_n3");
    for (label, strategy) in [
        ("union_find", OrbitStrategy::UnionFind),
        ("canonical_form", OrbitStrategy::CanonicalForm),
    ] {
        let opts = OrbitOptions {
            strategy,
            representatives: false,
            ..OrbitOptions::default()
        };
        group.bench_function(label, |b| b.iter(|| tuple_orbits(&aut, &all, 3, &opts).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, automorphisms, orbits);
criterion_main!(benches);
