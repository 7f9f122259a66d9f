//! Criterion benchmarks for the library's hot kernels: sieving, the
//! universal Witt table, exhaustive symmetry search, modular point
//! counting, the eta product, the entire-function series, and the
//! closed-form zeta log-derivative.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn bench_sieve(c: &mut Criterion) {
    c.bench_function("sieve_1e6", |b| {
        b.iter(|| char1::arith::Sieve::new(black_box(1_000_000)))
    });
}

fn bench_witt_table(c: &mut Criterion) {
    c.bench_function("witt_coeffs_p5_N3", |b| {
        b.iter(|| char1::witt::witt_coeffs(black_box(5), black_box(3)).unwrap())
    });
    let table = char1::witt::witt_coeffs(5, 3).unwrap();
    let x = char1::witt::MonomialExp::from_fraction(7, 25, 5, 3).unwrap();
    let y = char1::witt::MonomialExp::from_fraction(3, 125, 5, 3).unwrap();
    c.bench_function("deformed_add_p5", |b| {
        b.iter(|| char1::witt::deformed_add(black_box(x), black_box(y), &table).unwrap())
    });
}

fn bench_additive_search(c: &mut Criterion) {
    c.bench_function("search_brute_n8", |b| {
        b.iter(|| char1::additive::search_a(black_box(8), char1::additive::SearchMode::Brute).unwrap())
    });
}

fn bench_elliptic(c: &mut Criterion) {
    let e = char1::elliptic::CurveModel::eleven_a();
    c.bench_function("count_points_mod_99991", |b| {
        b.iter(|| e.count_points_modp(black_box(99_991)).unwrap())
    });
    c.bench_function("eta_coeffs_1e4", |b| {
        b.iter(|| char1::elliptic::eta_coeffs(black_box(10_000)).unwrap())
    });
}

fn bench_special(c: &mut Criterion) {
    use char1::num::complex::Complex64;
    let s = Complex64::new(2.0, 0.5);
    c.bench_function("f_auto_s2_a_pi", |b| {
        b.iter(|| char1::special::f_auto(black_box(s), black_box(std::f64::consts::PI)).unwrap())
    });
    c.bench_function("hurwitz_zeta", |b| {
        b.iter(|| char1::special::hurwitz_zeta(black_box(s), black_box(0.25)).unwrap())
    });
}

fn bench_zeta_logderiv(c: &mut Criterion) {
    use char1::num::complex::Complex64;
    let scheme = char1::monoid::SchemeData::spec_f1m(12);
    let ev = char1::zeta::LogDerivEvaluator::new(&scheme, char1::zeta::LdMode::Integral).unwrap();
    let s = Complex64::new(0.5, 0.25);
    c.bench_function("zeta_logderiv_f1_12", |b| {
        b.iter(|| char1::zeta::zeta_logderiv(&ev, black_box(s)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_sieve,
    bench_witt_table,
    bench_additive_search,
    bench_elliptic,
    bench_special,
    bench_zeta_logderiv
);
criterion_main!(benches);
