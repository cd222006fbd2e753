use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use frechet_bench::wavy_pair;
use frechet_core::decision::decide;
use frechet_core::free_space::build_free_space;

const SIZES: [usize; 3] = [64, 128, 256];
const EPS: f64 = 0.3;

fn bench_free_space(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_free_space");
    for m in SIZES {
        let (x, y) = wavy_pair(0x5EED + m as u64, m);
        group.throughput(Throughput::Elements((m * m) as u64));
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, _| {
            b.iter(|| build_free_space(&x, &y, EPS).unwrap().m())
        });
    }
    group.finish();
}

fn bench_decide(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide");
    for m in SIZES {
        let (x, y) = wavy_pair(0x5EED + m as u64, m);
        group.throughput(Throughput::Elements((m * m) as u64));
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, _| {
            b.iter(|| decide(&x, &y, EPS).unwrap().answer)
        });
    }
    group.finish();
}

criterion_group!(benches, bench_free_space, bench_decide);
criterion_main!(benches);
