use criterion::{black_box, criterion_group, criterion_main, Criterion};
use mcg_core::gluing::{f_pattern, induced_h1};
use mcg_core::orbifold::{admissible_orders, lift_exponent, PermRep};
use mcg_core::poly::char_poly;
use mcg_core::reduction_graph::example_graph;
use mcg_core::sl2z::{brute_force_roots, mth_roots};
use mcg_core::twist::{model, relation, verify_relation};
use mcg_core::{CaseLabel, FreeEndo, Sl2Matrix};
use num_bigint::BigInt;

fn sl2z(c: &mut Criterion) {
    let r = Sl2Matrix::from_i64(3, 2, 4, 3).unwrap();
    let big = r.pow(40);
    c.bench_function("mth_roots m=40", |b| b.iter(|| mth_roots(black_box(&big), 40).unwrap()));
    let m6 = r.pow(6);
    c.bench_function("brute_force_roots m=6", |b| b.iter(|| brute_force_roots(black_box(&m6), 6, 200)));
    let huge = Sl2Matrix::new(BigInt::from(1), BigInt::from(10).pow(60), BigInt::from(0), BigInt::from(1)).unwrap();
    c.bench_function("mth_roots parabolic 10^60", |b| b.iter(|| mth_roots(black_box(&huge), 4).unwrap()));
}

fn twist(c: &mut Criterion) {
    let rel = relation("lemma7.10").unwrap();
    let m = model(rel.model).unwrap();
    c.bench_function("verify lemma7.10", |b| b.iter(|| verify_relation(&m, black_box(&rel.lhs), &rel.rhs).unwrap()));
}

fn gluing(c: &mut Criterion) {
    let p = f_pattern(8).unwrap();
    c.bench_function("charpoly f:8", |b| b.iter(|| char_poly(&induced_h1(black_box(&p)).unwrap()).unwrap()));
}

fn orbifold(c: &mut Criterion) {
    c.bench_function("admissible_orders genus 5", |b| b.iter(|| admissible_orders(black_box(5), 1)));
    let rep = PermRep::new(7, vec![vec![2, 3, 4, 5, 6, 7, 1], vec![2, 1, 3, 4, 5, 6, 7]]).unwrap();
    let phi = FreeEndo::new(2, vec![vec![1, 2], vec![1]]).unwrap();
    c.bench_function("lift_exponent degree 7", |b| b.iter(|| lift_exponent(black_box(&rep), &phi, 64).unwrap()));
}

fn graphs(c: &mut Criterion) {
    let g = example_graph(CaseLabel::Case4, 6);
    c.bench_function("automorphisms case4", |b| b.iter(|| black_box(&g).leaf_fixing_automorphisms().unwrap()));
}

criterion_group!(benches, sl2z, twist, gluing, orbifold, graphs);
criterion_main!(benches);
