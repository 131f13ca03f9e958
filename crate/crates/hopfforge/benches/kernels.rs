use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopfforge::boson::{bosonize, build_nichols_hopf};
use hopfforge::modrep::{ext_table, Registry, SimpleLabel};
use hopfforge::nichols::{hilbert, BraidedSpace};
use hopfforge::par;
use hopfforge::yd::{from_double_module, YDModule};

fn yd_of(l: SimpleLabel) -> YDModule {
    from_double_module(Registry::shared().simple(l)).unwrap()
}

fn modes() -> [(&'static str, usize); 2] {
    [("sequential", 1), ("parallel", par::threads())]
}

fn bench_hilbert(c: &mut Criterion) {
    let bs = BraidedSpace::from_yd(&yd_of(SimpleLabel::TwoDim(2, 1))).unwrap();
    let mut g = c.benchmark_group("hilbert_v21_deg6");
    g.sample_size(10);
    for (name, n) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &n, |b, &n| {
            b.iter(|| par::with_threads(n, || hilbert(&bs, 6)))
        });
    }
    g.finish();
}

fn bench_ext(c: &mut Criterion) {
    let reg = Registry::shared();
    let mut g = c.benchmark_group("ext_table");
    g.sample_size(10);
    for (name, n) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &n, |b, &n| {
            b.iter(|| par::with_threads(n, || ext_table(&reg).unwrap()))
        });
    }
    g.finish();
}

fn bench_bosonize(c: &mut Criterion) {
    let y = yd_of(SimpleLabel::TwoDim(3, 1));
    let mut g = c.benchmark_group("bosonize_v31");
    g.sample_size(10);
    for (name, n) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &n, |b, &n| {
            b.iter(|| {
                par::with_threads(n, || {
                    let nh = build_nichols_hopf(&y, 6).unwrap();
                    bosonize(&nh).unwrap()
                })
            })
        });
    }
    g.finish();
}

criterion_group!(kernels, bench_hilbert, bench_ext, bench_bosonize);
criterion_main!(kernels);
