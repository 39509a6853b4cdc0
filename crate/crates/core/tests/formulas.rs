mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ttmin_core::formulas::*;
use ttmin_core::gf2::XorBasis;
use ttmin_core::TruthTable;

const BOOL: [Gate; 2] = [Gate::And, Gate::Or];
const ALL: [Gate; 3] = [Gate::And, Gate::Or, Gate::Xor];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn flip_is_an_involution(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_rof(&mut rng, 6, 6, &ALL);
        let paths = f.and_or_paths();
        prop_assume!(!paths.is_empty());
        let p = &paths[rng.gen_range(0..paths.len())];
        let g = flip(&f, p).unwrap();
        prop_assert_eq!(g.to_table(6), f.to_table(6));
        prop_assert_eq!(flip(&g, p).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rof_xor_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=8);
        let f = random_rof(&mut rng, n, n, &ALL);
        let tt = f.to_table(n);
        let g = minimize_rof_xor(&tt).unwrap();
        prop_assert_eq!(g.to_table(n), tt);
        prop_assert!(g.gate_count() <= f.gate_count(), "{} vs {}", g, f);
        prop_assert!(g.is_read_once());
    }

    #[test]
    fn boolean_rof_is_canonical(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=8);
        let f = random_rof(&mut rng, n, n, &BOOL);
        let tt = f.to_table(n);
        let g = minimize_boolean_rof(&tt).unwrap();
        prop_assert_eq!(g.to_table(n), tt.clone());
        let again = minimize_boolean_rof(&g.to_table(n)).unwrap();
        prop_assert_eq!(again.sexpr(), g.sexpr());
        // the same function written in another shape gives the same answer
        let h = flip(&f, &f.and_or_paths().first().cloned().unwrap_or_default()).unwrap_or(f.clone());
        prop_assert_eq!(minimize_boolean_rof(&h.to_table(n)).unwrap().sexpr(), g.sexpr());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unate_direct_product(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, a, b) = random_split(&mut rng, 8);
        let f1 = random_unate_on(&mut rng, n, &a);
        let f2 = random_unate_on(&mut rng, n, &b);
        let f = f1.and(&f2);
        let cnf = |t: &TruthTable| minimize_unate_cnf(t).unwrap().leaf_count();
        let dnf = |t: &TruthTable| minimize_unate_dnf(t).unwrap().leaf_count();
        prop_assert_eq!(cnf(&f), cnf(&f1) + cnf(&f2));
        prop_assert!(dnf(&f) >= dnf(&f1) + dnf(&f2));
    }

    #[test]
    fn arithmetic_direct_product(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, a, b) = random_split(&mut rng, 8);
        let f1 = random_on(&mut rng, n, &a);
        let f2 = random_on(&mut rng, n, &b);
        let pi = |t: &TruthTable| minimize_pi2a(t).ok().map(|f| f.leaf_count());
        let sigma = |t: &TruthTable| sigma2a(t).leaf_count();
        let prod = f1.and(&f2);
        let add = f1.xor(&f2);
        let parts = pi(&f1).zip(pi(&f2)).map(|(x, y)| x + y);
        prop_assert_eq!(pi(&prod), parts);
        prop_assert!(sigma(&prod) >= sigma(&f1) + sigma(&f2));
        prop_assert_eq!(sigma(&add), sigma(&f1) + sigma(&f2));
        if let Some(p) = pi(&add) {
            let parts = parts.expect("factors of an affine sum are affine");
            prop_assert!(p >= parts);
        }
    }

    #[test]
    fn greedy_basis_is_lightest(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=8);
        let gens: Vec<u64> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(1..1u64 << n)).collect();
        let mut span = vec![0u64];
        for &g in &gens {
            let more: Vec<u64> = span.iter().map(|&s| s ^ g).collect();
            span.extend(more);
        }
        span.sort_unstable();
        span.dedup();
        let greedy = min_weight_basis(&span);
        let dim = greedy.len();
        prop_assert_eq!(1usize << dim, span.len());
        let weight = |v: &[u64]| v.iter().map(|x| x.count_ones()).sum::<u32>();
        let nonzero: Vec<u64> = span.into_iter().filter(|&v| v != 0).collect();
        let mut best = u32::MAX;
        for pick in 0u32..1 << nonzero.len() {
            if pick.count_ones() as usize != dim {
                continue;
            }
            let chosen: Vec<u64> = (0..nonzero.len()).filter(|&i| pick >> i & 1 == 1).map(|i| nonzero[i]).collect();
            let mut basis = XorBasis::new();
            if chosen.iter().all(|&v| basis.insert(v)) {
                best = best.min(weight(&chosen));
            }
        }
        prop_assert_eq!(weight(&greedy), best);
    }
}

#[test]
fn every_minimizer_reproduces_its_input() {
    for n in 1..=3 {
        for tt in all_tables(n) {
            let check = |f: &Formula| assert_eq!(f.to_table(n), tt, "{f}");
            check(&sigma2a(&tt));
            check(&minimize_f2a(&tt).unwrap());
            for r in [minimize_pi2a(&tt), minimize_uf2(&tt), minimize_rof_xor(&tt), minimize_boolean_rof(&tt)] {
                if let Ok(f) = r {
                    check(&f);
                }
            }
            for r in [minimize_rof_neg(&tt), minimize_rof_xor_neg(&tt)] {
                if let Ok(f) = r {
                    check(&f);
                }
            }
            for a in 0..1usize << n {
                if let Ok(f) = minimize_rof_xor_a(&tt, a) {
                    check(&f);
                }
            }
            if let Ok(d) = minimize_unate_dnf(&tt) {
                assert_eq!(d.to_table(), tt);
            }
            if let Ok(c) = minimize_unate_cnf(&tt) {
                assert_eq!(c.to_table(), tt);
            }
        }
    }
}

#[test]
fn rof_neg_never_costs_more() {
    // negations at the leaves count as gates too
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let f = random_rof(&mut rng, n, n, &BOOL);
        let tt = f.to_table(n);
        let g = minimize_rof_neg(&tt).unwrap();
        assert_eq!(g.to_table(n), tt);
        let cost = |h: &Formula| h.gate_count() - h.not_gate_count() + h.negation_count();
        let plain = minimize_boolean_rof(&tt).unwrap();
        assert!(cost(&g) <= cost(&plain));
    }
}
