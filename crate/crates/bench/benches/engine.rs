use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hfusion_bench::{hef, hplus_symbolic};
use hfusion_core::freeprod::psi;
use hfusion_core::fusion::{odot, Letter, Word};

fn alternating(n: usize) -> Word {
    Word::from_letters((0..n).map(|i| if i % 2 == 0 { Letter::Alpha } else { Letter::Beta }).collect())
}

fn fusion(c: &mut Criterion) {
    let mut g = c.benchmark_group("odot");
    for n in [4, 8, 12] {
        let (x, y) = (alternating(n), alternating(n).bar());
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| b.iter(|| odot(black_box(&x), black_box(&y))));
    }
    g.finish();
    let w = alternating(24);
    c.bench_function("psi/24", |b| b.iter(|| psi(black_box(&w))));
}

fn confluence(c: &mut Criterion) {
    let mut g = c.benchmark_group("confluence");
    g.sample_size(10);
    for n in [2, 3, 4] {
        let sys = hef(n).system;
        g.bench_with_input(BenchmarkId::new("hef", n), &n, |b, _| b.iter(|| sys.is_confluent()));
    }
    let hp = hplus_symbolic().system;
    g.bench_function("hplus_sym", |b| b.iter(|| hp.is_confluent()));
    g.finish();
}

fn basis(c: &mut Criterion) {
    let sys = hef(2).system;
    c.bench_function("reduced_monomials/hef2/5", |b| b.iter(|| sys.reduced_monomials(black_box(5)).unwrap().len()));
}

criterion_group!(benches, fusion, confluence, basis);
criterion_main!(benches);
