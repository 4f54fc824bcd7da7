use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use sommerfeld_core::io::{render_svg, write_trajectory_csv, RenderOptions};
use sommerfeld_core::{
    count_self_intersections, orbit_parameters, sample_trajectory, validate_all, IonSpec,
    PeriodLimit, Tolerances,
};

fn parameters(c: &mut Criterion) {
    c.bench_function("orbit_parameters 92..=137", |b| {
        b.iter(|| {
            for z in 92..=137 {
                black_box(orbit_parameters(IonSpec::excited(black_box(z)).unwrap()));
            }
        })
    });
    c.bench_function("validate_all", |b| {
        b.iter(|| validate_all(&Tolerances::default()))
    });
}

fn intersections(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_self_intersections");
    group.sample_size(10);
    for z in [118, 131, 137] {
        let params = orbit_parameters(IonSpec::excited(z).unwrap());
        for spr in [1024, 4096] {
            let poly = sample_trajectory(&params, 1, spr).unwrap();
            group.bench_with_input(BenchmarkId::new(format!("Z={z}"), spr), &poly, |b, poly| {
                b.iter(|| count_self_intersections(poly, PeriodLimit::OnePeriod).unwrap())
            });
        }
    }
    group.finish();
}

fn output(c: &mut Criterion) {
    let params = orbit_parameters(IonSpec::excited(118).unwrap());
    let poly = sample_trajectory(&params, 31, 1024).unwrap();
    c.bench_function("trajectory csv Og 31x1024", |b| {
        b.iter(|| {
            let mut buf = Vec::with_capacity(1 << 21);
            write_trajectory_csv(&poly, &mut buf).unwrap();
            buf
        })
    });
    c.bench_function("svg Og 31x1024", |b| {
        b.iter(|| {
            let mut buf = Vec::with_capacity(1 << 20);
            render_svg(&poly, &RenderOptions::default(), &mut buf).unwrap();
            buf
        })
    });
}

criterion_group!(benches, parameters, intersections, output);
criterion_main!(benches);
