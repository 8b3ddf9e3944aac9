use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use geodual::oracle::generate::random_hypergraph;
use geodual::sid::{structure_identification, SidOptions};
use geodual::{critical_base, CcmEngine, ClosureOperator, ElementSet, MeetFamily};
use geodual_bench::{acyclic_instance, ranked_instances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn closure(c: &mut Criterion) {
    let base = acyclic_instance(200);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let starts: Vec<ElementSet> = (0..64)
        .map(|_| {
            let h = random_hypergraph(&mut rng, 200, 1);
            h.edges().first().cloned().unwrap_or_else(|| ElementSet::empty(200))
        })
        .collect();
    c.bench_function("closure/acyclic_n200", |b| {
        b.iter(|| {
            for s in &starts {
                black_box(base.close(s));
            }
        })
    });
}

fn berge(c: &mut Criterion) {
    let mut group = c.benchmark_group("berge");
    for (v, e) in [(10, 12), (16, 20), (24, 30)] {
        let h = random_hypergraph(&mut ChaCha8Rng::seed_from_u64(v as u64), v, e);
        group.bench_with_input(BenchmarkId::from_parameter(format!("v{v}_e{e}")), &h, |b, h| {
            b.iter(|| h.minimal_transversals().count())
        });
    }
    group.finish();
}

fn ccm(c: &mut Criterion) {
    let mut group = c.benchmark_group("ccm");
    for (name, base) in ranked_instances() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &base, |b, base| {
            b.iter(|| CcmEngine::new(base).unwrap().meet_irreducibles().count())
        });
    }
    group.finish();
}

fn sid(c: &mut Criterion) {
    let mut group = c.benchmark_group("sid");
    for (name, base) in ranked_instances() {
        let meets: Vec<ElementSet> = CcmEngine::new(&base)
            .unwrap()
            .meet_irreducibles()
            .map(|(_, m)| m)
            .collect();
        let family = MeetFamily::new(base.ground().clone(), meets).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&name), &family, |b, m| {
            b.iter(|| structure_identification(m, SidOptions::default()).unwrap().len())
        });
    }
    group.finish();
}

fn critical(c: &mut Criterion) {
    let base = acyclic_instance(30);
    c.bench_function("critical_base/acyclic_n30", |b| {
        b.iter(|| critical_base(&base).unwrap().len())
    });
}

criterion_group!(benches, closure, berge, ccm, sid, critical);
criterion_main!(benches);
