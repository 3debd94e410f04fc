use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use weylzeta::coxeter::{build_system, CartanType, ElementTable};
use weylzeta::hecke::hecke_mul;
use weylzeta::rootsys::{exponent_table, RootSystem};
use weylzeta::series::poincare_affine;
use weylzeta::strips::{factorization_census, verify_corollary1, FactorizationScheme};
use weylzeta::zeta::{ihara_formula_check, ihara_zeta, torus_quotient_rep, verify_maintheorem2, Graph};
use weylzeta_bench::{ball, index_character, table};

fn coxeter(c: &mut Criterion) {
    let system = build_system("G2t", None).unwrap();
    c.bench_function("enumerate G2t L=20", |b| b.iter(|| ElementTable::enumerate(black_box(&system), 20).unwrap()));
    c.bench_function("poincare_affine C2t", |b| {
        let system = build_system("C2t", None).unwrap();
        b.iter(|| poincare_affine(black_box(&system), 24).unwrap())
    });
}

fn hecke(c: &mut Criterion) {
    let t = table("A2t", 12);
    let x = ball(&t, 3);
    c.bench_function("hecke_mul A2t balls of radius 3", |b| {
        b.iter(|| hecke_mul(&t, black_box(&x), black_box(&x)).unwrap())
    });
}

fn strips(c: &mut Criterion) {
    let mut group = c.benchmark_group("strips");
    group.sample_size(10);
    for tag in ["A2t", "C2t", "G2t"] {
        let t = table(tag, 20);
        let scheme = FactorizationScheme::for_table(&t).unwrap();
        group.bench_function(format!("census {tag} L=20"), |b| {
            b.iter(|| factorization_census(&t, &scheme, 20).unwrap())
        });
        let t8 = table(tag, 8);
        let rho = index_character(&t8);
        group.bench_function(format!("corollary1 {tag} index character"), |b| {
            b.iter(|| verify_corollary1(&t8, &scheme, &rho, 8).unwrap())
        });
    }
    let t = table("G2t", 6);
    let (tq, rho) = torus_quotient_rep(&t, 2).unwrap();
    group.bench_function("maintheorem2 G2t k=2", |b| b.iter(|| verify_maintheorem2(&t, &tq, &rho, 4, 6).unwrap()));
    group.finish();
}

fn rootsys(c: &mut Criterion) {
    let types = CartanType::catalogue(8);
    c.bench_function("exponent table, all types", |b| {
        b.iter(|| types.iter().map(|&t| exponent_table(&RootSystem::new(t)).unwrap()).collect::<Vec<_>>())
    });
}

fn zeta(c: &mut Criterion) {
    let petersen = Graph::petersen();
    c.bench_function("ihara zeta Petersen n=24", |b| b.iter(|| ihara_zeta(black_box(&petersen), 24).unwrap()));
    c.bench_function("ihara formula Petersen", |b| b.iter(|| ihara_formula_check(black_box(&petersen), 2).unwrap()));
}

criterion_group!(benches, coxeter, hecke, strips, rootsys, zeta);
criterion_main!(benches);
