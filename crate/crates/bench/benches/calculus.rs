use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tannaka::chow::pontryagin;
use tannaka::cycles::{convolve, schur_cycle};
use tannaka::lambda::{gr_adams, lambda_op};
use tannaka::symfun::{partitions, schur_to_powersum, Partition};
use tannaka_bench::{curve, points, theta};

fn symmetric_functions(c: &mut Criterion) {
    let mut group = c.benchmark_group("schur_to_powersum");
    for n in [4u32, 6, 8] {
        let ps = partitions(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &ps, |b, ps| {
            b.iter(|| ps.iter().map(|p| schur_to_powersum(black_box(p)).len()).sum::<usize>())
        });
    }
    group.finish();
}

fn group_rings(c: &mut Criterion) {
    let x = points(8);
    c.bench_function("lambda_op 4 of 8 points", |b| b.iter(|| lambda_op(4, black_box(&x)).unwrap()));
    c.bench_function("adams 12 of 8 points", |b| b.iter(|| gr_adams(12, black_box(&x))));
}

fn cycles(c: &mut Criterion) {
    let t = theta(5, 2);
    let a = t.total_cm();
    c.bench_function("pontryagin g=5", |b| b.iter(|| pontryagin(black_box(&a), black_box(&a), 4).unwrap()));
    let cv = curve(5, 8, 3);
    c.bench_function("convolve curves g=5", |b| b.iter(|| convolve(black_box(&cv), black_box(&cv), 1).unwrap()));
    let alt4 = Partition::column(4);
    c.bench_function("alt4 of a curve g=5", |b| b.iter(|| schur_cycle(&alt4, black_box(&cv), 1).unwrap()));
}

criterion_group!(benches, symmetric_functions, group_rings, cycles);
criterion_main!(benches);
