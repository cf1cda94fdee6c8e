use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use normtop_core::catalog::catalog;
use normtop_core::lattice::enumerate_normal_subgroups;
use normtop_core::topology::coarse_lower_topology;
use normtop_core::verify::verify_theorem_main;
use normtop_core::Caps;

const GROUPS: &[&str] = &["S4", "S5", "Z60", "D8", "Q8", "V4 x V4"];

fn bench_enumerate(c: &mut Criterion) {
    let caps = Caps::default();
    let mut g = c.benchmark_group("enumerate_normal_subgroups");
    for name in GROUPS {
        let group = catalog(name).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(name), &group, |b, group| {
            b.iter(|| enumerate_normal_subgroups(group, &caps).unwrap())
        });
    }
    g.finish();
}

fn bench_topology(c: &mut Criterion) {
    let caps = Caps::default();
    let mut g = c.benchmark_group("coarse_lower_topology");
    for name in GROUPS {
        let lat = enumerate_normal_subgroups(&catalog(name).unwrap(), &caps).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(name), &lat, |b, lat| {
            b.iter(|| coarse_lower_topology(lat, &caps).unwrap())
        });
    }
    g.finish();
}

fn bench_full_pipeline(c: &mut Criterion) {
    let caps = Caps::default();
    let mut g = c.benchmark_group("verify_theorem_main");
    g.sample_size(10);
    for name in GROUPS {
        let group = catalog(name).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(name), &group, |b, group| {
            b.iter(|| verify_theorem_main(group, name, &caps, 1, 200).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_enumerate, bench_topology, bench_full_pipeline);
criterion_main!(benches);
