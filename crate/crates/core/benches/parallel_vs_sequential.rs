use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use nsstqft::invariant::fixtures as sf;
use nsstqft::invariant::z_invariant_with;
use nsstqft::tqftdim::graded_dimension_with;
use nsstqft::tqftdim::graphs::generic_reference;
use nsstqft::{Exec, RootParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn surgery(c: &mut Criterion) {
    let mut group = c.benchmark_group("z_invariant");
    group.sample_size(10);
    for r in [3, 5] {
        let ctx = RootParams::new(r).unwrap();
        let sp = sf::hopf2((2, 3), (Complex64::new(0.4, 0.0), Complex64::new(-0.8, 0.0)));
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), r), &sp, |b, sp| {
                b.iter(|| z_invariant_with(&ctx, sp, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn colorings(c: &mut Criterion) {
    let mut group = c.benchmark_group("graded_dimension");
    group.sample_size(10);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for r in [5, 7] {
        let ctx = RootParams::new(r).unwrap();
        let g = generic_reference(&ctx, 3, &mut rng).unwrap();
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), r), &g, |b, g| {
                b.iter(|| graded_dimension_with(&ctx, g, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, surgery, colorings);
criterion_main!(benches);
