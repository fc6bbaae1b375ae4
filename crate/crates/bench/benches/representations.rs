use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tannaka::liere::{
    char_sym, classify_wmf, decompose, freudenthal_character, quasi_minuscule_dim_search, RootSystem, Weight,
};
use tannaka::schottky::{fourfold_table, genus5_obstruction, s_sets, theta_group, PpavInput};

fn characters(c: &mut Criterion) {
    let e7 = RootSystem::from_name("E7").unwrap();
    let w = Weight::fundamental(7, 1);
    c.bench_function("freudenthal E7 adjoint", |b| b.iter(|| freudenthal_character(&e7, black_box(&w)).unwrap()));
    let c6 = RootSystem::from_name("C6").unwrap();
    let std = freudenthal_character(&c6, &Weight::fundamental(6, 1)).unwrap();
    c.bench_function("decompose Sym2 of C6 standard", |b| {
        b.iter(|| decompose(&c6, &char_sym(2, black_box(&std)).unwrap()).unwrap())
    });
}

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classification");
    group.sample_size(10);
    group.bench_function("classify_wmf rank 8 dim 600", |b| b.iter(|| classify_wmf(8, black_box(600)).unwrap()));
    group.bench_function("qm search 118 rank 12", |b| b.iter(|| quasi_minuscule_dim_search(118, 12).unwrap()));
    group.finish();
}

fn theta_divisors(c: &mut Criterion) {
    c.bench_function("s_sets 10000", |b| b.iter(|| s_sets(black_box(10000))));
    c.bench_function("theta_group g=4 k=1", |b| b.iter(|| theta_group(black_box(&PpavInput::new(4, 1))).unwrap()));
    c.bench_function("genus5 obstruction", |b| {
        b.iter(|| genus5_obstruction(black_box(&PpavInput::new(5, 0))).unwrap())
    });
    c.bench_function("fourfold table", |b| b.iter(|| fourfold_table().unwrap()));
}

criterion_group!(benches, characters, classification, theta_divisors);
criterion_main!(benches);
