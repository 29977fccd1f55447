//! Thickness-integral benchmarks: the closed form against the adaptive
//! quadrature at several tolerances.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use squnion_core::bounds::{t_star_closed, t_star_numeric};

fn bench_thickness(c: &mut Criterion) {
    let xs = [0.0, 0.25, 0.5, 0.75, 0.95];
    c.bench_function("t_star_closed_grid", |b| {
        b.iter(|| {
            for &x in &xs {
                black_box(t_star_closed(black_box(x)).unwrap());
            }
        })
    });
    let mut group = c.benchmark_group("t_star_numeric");
    for &tol in &[1e-6, 1e-9, 1e-12] {
        group.bench_with_input(BenchmarkId::from_parameter(tol), &tol, |b, &tol| {
            b.iter(|| {
                for &x in &xs {
                    black_box(t_star_numeric(black_box(x), tol).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_thickness);
criterion_main!(benches);
