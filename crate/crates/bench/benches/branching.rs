use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use iqw_bench::skew_shapes;
use iqw_core::families::{expand_skew, FamilyId, Params, Standard};

fn expand(c: &mut Criterion) {
    let src = Standard(Params::formal());
    let mut g = c.benchmark_group("expand_skew");
    for family in [FamilyId::F, FamilyId::Ftilde, FamilyId::InhomHL] {
        for (l, m, n) in skew_shapes() {
            let id = format!("{family} {l}/{m} n={n}");
            g.bench_function(BenchmarkId::from_parameter(id), |b| {
                b.iter(|| expand_skew(&src, family, &l, &m, n))
            });
        }
    }
    g.finish();
}

criterion_group!(benches, expand);
criterion_main!(benches);
