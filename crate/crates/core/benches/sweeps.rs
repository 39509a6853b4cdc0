use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;
use ttmin_core::bp::obdd_optimal_order_with;
use ttmin_core::formulas::minimize_rof_xor_neg_with;
use ttmin_core::hardness::{verify_tree_reduction, HarnessConfig};
use ttmin_core::mlpoly::{and_decompose, or_decompose, xor_decompose};
use ttmin_core::par::{map_range, Exec};
use ttmin_core::trees::{build_affine_lattice, minimize_ldt_on};
use ttmin_core::TruthTable;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn random_table(rng: &mut impl Rng, n: usize) -> TruthTable {
    let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen()).collect();
    TruthTable::from_bits(&bits).unwrap()
}

fn trichotomy(c: &mut Criterion) {
    let mut g = c.benchmark_group("trichotomy-n3");
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                map_range(exec, 0..256, |w| {
                    let (t, _) = TruthTable::from_u64(3, w as u64).reduce_to_support();
                    if t.n() < 2 {
                        return 0;
                    }
                    [and_decompose(&t), or_decompose(&t), xor_decompose(&t)]
                        .iter()
                        .filter(|r| matches!(r, Ok(Some(_))))
                        .count()
                })
            })
        });
    }
    g.finish();
}

fn ldt(c: &mut Criterion) {
    let lattice = build_affine_lattice(5, None).unwrap();
    let tt = random_table(&mut ChaCha8Rng::seed_from_u64(1), 5);
    let mut g = c.benchmark_group("ldt-n5");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| minimize_ldt_on(&lattice, black_box(&tt), exec).unwrap()));
    }
    g.finish();
}

fn obdd_order(c: &mut Criterion) {
    let mut g = c.benchmark_group("obdd-order");
    for n in [10, 12] {
        let tt = random_table(&mut ChaCha8Rng::seed_from_u64(n as u64), n);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &tt, |b, tt| {
                b.iter(|| obdd_optimal_order_with(tt, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn rof_xor_neg(c: &mut Criterion) {
    // (x1 & x2) ^ (x3 | x4) ^ (x5 & (x6 | x7)) ^ x8
    let tt = TruthTable::from_fn(8, |x| {
        let b = |i: usize| x >> i & 1 == 1;
        (b(0) & b(1)) ^ (b(2) | b(3)) ^ (b(4) & (b(5) | b(6))) ^ b(7)
    });
    let mut g = c.benchmark_group("rof-xor-neg-n8");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| minimize_rof_xor_neg_with(black_box(&tt), exec).unwrap()));
    }
    g.finish();
}

fn harness(c: &mut Criterion) {
    let cfg = HarnessConfig::default();
    let mut g = c.benchmark_group("tree-reduction-harness");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| verify_tree_reduction(&cfg, exec)));
    }
    g.finish();
}

criterion_group!(benches, trichotomy, ldt, obdd_order, rof_xor_neg, harness);
criterion_main!(benches);
