use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ttmin_core::mlpoly::*;
use ttmin_core::TruthTable;

fn random_poly(rng: &mut impl Rng, n: usize) -> MultilinearPoly {
    let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen_bool(0.3)).collect();
    MultilinearPoly::from_coeffs(TruthTable::from_bits(&bits).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn commutator_of_shifted_polynomial(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=8);
        let q = random_poly(&mut rng, n);
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let d2 = q.partial_derivative(i).unwrap().partial_derivative(j).unwrap();
        prop_assert_eq!(&d2, &q.partial_derivative(j).unwrap().partial_derivative(i).unwrap());
        let base = commutator_delta(&q, i, j).unwrap();
        prop_assert_eq!(commutator_delta(&q.add_constant(false), i, j).unwrap(), base.clone());
        let shifted = commutator_delta(&q.add_constant(true), i, j).unwrap();
        let expected = base.add(&DeltaPoly::from_multilinear(&d2, base.vars()));
        prop_assert_eq!(shifted, expected);
    }

    #[test]
    fn anf_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=10);
        let p = random_poly(&mut rng, n);
        prop_assert_eq!(to_multilinear(&to_truth_table(&p)), p);
    }
}

#[test]
fn decompositions_recombine() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen()).collect();
        let tt = TruthTable::from_bits(&bits).unwrap();
        let (g, _) = tt.reduce_to_support();
        if g.n() < 2 {
            continue;
        }
        let found: Vec<Decomposition> = [and_decompose(&g), or_decompose(&g), xor_decompose(&g)]
            .into_iter()
            .filter_map(|r| r.unwrap())
            .collect();
        assert!(found.len() <= 1);
        for d in found {
            assert_eq!(d.recombine(g.n()), g);
        }
    }
}
