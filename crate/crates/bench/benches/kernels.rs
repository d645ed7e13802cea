use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use slicework_core::detection::{cohomology_r, s_solver};
use slicework_core::exactalg::snf;
use slicework_core::fgl::{mo_generators, FormalAModule};
use slicework_core::repsphere::{bredon_cohomology, bredon_homology, Coeff, RepDescriptor};
use slicework_core::slicess::{inverted_ss_run, refine_orbits};
use slicework_core::IntMatrix;

fn lcg_matrix(n: usize, seed: u64) -> IntMatrix {
    let mut x = seed;
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((x >> 33) % 19) as i64 - 9
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows)
}

fn smith(c: &mut Criterion) {
    let mut g = c.benchmark_group("snf");
    for n in [8, 16, 32] {
        let a = lcg_matrix(n, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| snf(a)));
    }
    g.finish();
}

fn spheres(c: &mut Criterion) {
    let mut g = c.benchmark_group("repsphere");
    g.sample_size(10);
    for m in [1u32, 2] {
        let v = RepDescriptor::regular(3).scaled(m);
        g.bench_with_input(BenchmarkId::new("homology_rho8", m), &v, |b, v| b.iter(|| bredon_homology(v, 8, Coeff::Z).unwrap()));
        g.bench_with_input(BenchmarkId::new("cohomology_rho8", m), &v, |b, v| {
            b.iter(|| bredon_cohomology(v, 8, Coeff::Z).unwrap())
        });
    }
    g.finish();
}

fn slices(c: &mut Criterion) {
    let mut g = c.benchmark_group("slicess");
    g.sample_size(10);
    for bound in [12usize, 20] {
        g.bench_with_input(BenchmarkId::new("inverted_c8", bound), &bound, |b, &n| b.iter(|| inverted_ss_run(8, n).unwrap()));
    }
    g.bench_function("refine_c8_d8", |b| b.iter(|| refine_orbits(8, 8).unwrap()));
    g.finish();
}

fn formal(c: &mut Criterion) {
    let mut g = c.benchmark_group("fgl");
    g.bench_function("amodule_prec16", |b| b.iter(|| FormalAModule::new(16).unwrap()));
    g.bench_function("mo_generators_31", |b| b.iter(|| mo_generators(31).unwrap()));
    g.bench_function("s_solver_c2_15", |b| b.iter(|| s_solver(2, 15).unwrap()));
    g.bench_function("cohomology_r", |b| b.iter(|| (0..16).map(|m| cohomology_r(1, m).group.torsion.len()).sum::<usize>()));
    g.finish();
}

criterion_group!(benches, smith, spheres, slices, formal);
criterion_main!(benches);
