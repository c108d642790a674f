use criterion::{black_box, criterion_group, criterion_main, Criterion};

use branching_core::fock::{enumerate_basis, Module, Sector};
use branching_core::hwv::{generate_table, solve_hwv, Cell, G2Class};
use branching_core::linalg::Matrix;
use branching_core::operators::{coset_l, Charge, FockOperator};
use branching_core::qseries::products::euler_phi;
use branching_core::scalars::{int, rat, Rational};
use branching_core::suites;

fn qseries(c: &mut Criterion) {
    c.bench_function("euler phi order 200", |b| b.iter(|| euler_phi(black_box(200))));
    c.bench_function("branching suite order 100", |b| b.iter(|| suites::branching(black_box(100))));
}

fn fock(c: &mut Criterion) {
    c.bench_function("NS basis to depth 2", |b| b.iter(|| enumerate_basis(Sector::NS, int(2))));
    let basis = enumerate_basis(Sector::NS, int(2));
    let op = coset_l(0, Charge::SevenTenths, Sector::NS);
    c.bench_function("L0 7/10 on the NS depth-2 basis", |b| {
        b.iter(|| basis.iter().map(|s| op.apply_state(s).len()).sum::<usize>())
    });
}

fn solver(c: &mut Criterion) {
    let cell = Cell::new(Module::V0, int(2), G2Class::Omega0);
    c.bench_function("solve V0 depth 2 Omega0", |b| b.iter(|| solve_hwv(black_box(&cell)).unwrap()));
    let cell = Cell::new(Module::V1, rat(3, 2), G2Class::Omega2);
    c.bench_function("solve V1 depth 3/2 Omega2", |b| b.iter(|| solve_hwv(black_box(&cell)).unwrap()));
    let m = Matrix::<Rational>::from_rows(
        (0..12).map(|i| (0..14).map(|j| rat((i * j + 1) % 7 - 3, 1 + (i + j) % 3)).collect()).collect(),
    );
    c.bench_function("nullspace 12x14", |b| b.iter(|| black_box(&m).nullspace()));
}

fn tables(c: &mut Criterion) {
    c.bench_function("regenerate l0-v0-two", |b| b.iter(|| generate_table("l0-v0-two").unwrap()));
}

criterion_group!(benches, qseries, fock, solver, tables);
criterion_main!(benches);
