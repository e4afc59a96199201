use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use skewlab_bench::s4_z2;
use skewlab_core::lab::fixtures::{z2xz2, z2xz2_swap};
use skewlab_core::lab::{check_mccoy, check_skew_armendariz, run_law_suite};
use skewlab_core::{build_sn, build_zmod, lift_entrywise, Bounds, QuasiDerivation};

fn search(c: &mut Criterion) {
    let s4 = s4_z2();
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    for jobs in [1, 4] {
        g.bench_function(format!("mccoy s4(z2) (1,1) jobs={jobs}"), |b| {
            b.iter(|| check_mccoy(black_box(&s4), Bounds::new(1, 1), jobs))
        });
    }
    g.bench_function("skew-armendariz s4(z2) (1,1)", |b| {
        b.iter(|| check_skew_armendariz(black_box(&s4), Bounds::new(1, 1), 1))
    });
    let corpus = vec![z2xz2_swap(true)];
    g.bench_function("law suite z2xz2-swap-inner (1,1)", |b| {
        b.iter(|| run_law_suite(black_box(&corpus), Bounds::new(1, 1), 1))
    });
    g.finish();
}

fn f_tables(c: &mut Criterion) {
    let inner = z2xz2_swap(true);
    let s2 = build_sn(inner.ring(), 2).expect("S2");
    c.bench_function("f_op tables S2(z2xz2) j<=6", |b| {
        b.iter(|| {
            // A fresh lift each iteration so the cached tables are rebuilt.
            let qd = lift_entrywise(inner.qd(), &s2).expect("lift");
            for a in s2.elements() {
                black_box(qd.f_op(3, 6, a).expect("in range"));
            }
        })
    });
}

fn construction(c: &mut Criterion) {
    let z2 = build_zmod(2).expect("Z2");
    c.bench_function("build S4(Z2)", |b| b.iter(|| build_sn(black_box(&z2), 4).expect("S4")));
    let r = z2xz2();
    c.bench_function("build S3(Z2xZ2) with identity lift", |b| {
        b.iter(|| {
            let s3 = build_sn(black_box(&r), 3).expect("S3");
            lift_entrywise(&QuasiDerivation::identity(&r), &s3).map(Arc::new).expect("lift")
        })
    });
}

criterion_group!(benches, search, f_tables, construction);
criterion_main!(benches);
