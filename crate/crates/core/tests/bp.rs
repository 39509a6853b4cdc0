mod common;

use std::collections::HashMap;

use common::{all_tables, permutations};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ttmin_core::bp::*;
use ttmin_core::TruthTable;

#[test]
fn obdd_is_canonical() {
    for n in 1..=3 {
        for order in permutations(n) {
            let mut seen: HashMap<String, TruthTable> = HashMap::new();
            for tt in all_tables(n) {
                let d = obdd_build(&tt, &order).unwrap();
                let back = TruthTable::from_fn(n, |x| eval_bp(&d, x));
                assert_eq!(back, tt);
                assert_eq!(obdd_build(&back, &order).unwrap(), d);
                assert!(seen.insert(d.to_text(), tt).is_none(), "two functions share an OBDD");
            }
        }
    }
}

#[test]
fn optimal_order_beats_every_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 1..=5 {
        let perms = permutations(n);
        for _ in 0..50 {
            let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen()).collect();
            let tt = TruthTable::from_bits(&bits).unwrap();
            let r = obdd_optimal_order(&tt).unwrap();
            let best = perms.iter().map(|o| obdd_build(&tt, o).unwrap().size()).min().unwrap();
            assert_eq!(r.size, best, "{tt}");
            assert_eq!(obdd_build(&tt, &r.order).unwrap().size(), r.size);
            let seq = obdd_optimal_order_with(&tt, ttmin_core::par::Exec::Sequential).unwrap();
            assert_eq!(seq, r);
        }
    }
}

#[test]
fn mubp_is_width_one() {
    for n in 1..=4 {
        for tt in all_tables(n) {
            let support = tt.support().len();
            let width_one = obdd_optimal_order(&tt).unwrap().size == support;
            match mubp_construct(&tt) {
                Ok(p) => {
                    assert!(width_one, "{tt}");
                    assert_eq!(p.size(), support);
                    for x in 0..1usize << n {
                        assert_eq!(eval_bp(&p, x), tt.get(x));
                    }
                }
                Err(_) => assert!(!width_one, "{tt}"),
            }
        }
    }
}
