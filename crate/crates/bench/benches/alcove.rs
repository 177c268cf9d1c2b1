use alcove_core::alcove::{enumerate_dominant, enumerate_wf2};
use alcove_core::ideals::enumerate_abelian_ideals;
use alcove_core::series::{alcove_coeffs, euler_power, f_polys};
use alcove_core::RootSystem;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn rs(label: &str) -> RootSystem {
    RootSystem::new(label.parse().unwrap()).unwrap()
}

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("euler_power");
    for (dim, order) in [(24u32, 50usize), (248, 50), (248, 200)] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("d{dim}_k{order}")), &(dim, order), |b, &(d, k)| {
            b.iter(|| euler_power(black_box(d), k))
        });
    }
    g.finish();
    c.bench_function("f_polys_k20", |b| b.iter(|| f_polys(black_box(20))));
}

fn alcoves(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_dominant");
    for (label, len) in [("A4", 10u32), ("D4", 10), ("F4", 12)] {
        let r = rs(label);
        g.bench_function(format!("{label}_len{len}"), |b| b.iter(|| enumerate_dominant(&r, black_box(len))));
    }
    g.finish();
    let e6 = rs("E6");
    c.bench_function("alcove_coeffs_E6_k8", |b| b.iter(|| alcove_coeffs(&e6, black_box(8))));
}

fn ideals(c: &mut Criterion) {
    let mut g = c.benchmark_group("ideals");
    for label in ["E6", "E7", "E8"] {
        let r = rs(label);
        g.bench_function(format!("abelian_{label}"), |b| b.iter(|| enumerate_abelian_ideals(&r)));
        g.bench_function(format!("wf2_{label}"), |b| b.iter(|| enumerate_wf2(&r)));
    }
    g.finish();
}

criterion_group!(benches, series, alcoves, ideals);
criterion_main!(benches);
