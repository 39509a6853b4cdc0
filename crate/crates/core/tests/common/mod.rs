#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use ttmin_core::formulas::{Formula, Gate};
use ttmin_core::TruthTable;

/// Random read-once formula on a random subset of `1..=max_vars` of the
/// `n` variables, gates drawn from `ops`, random leaf polarity.
pub fn random_rof(rng: &mut impl Rng, n: usize, max_vars: usize, ops: &[Gate]) -> Formula {
    let k = rng.gen_range(1..=max_vars.min(n));
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    vars.truncate(k);
    build(rng, &vars, ops)
}

fn build(rng: &mut impl Rng, vars: &[usize], ops: &[Gate]) -> Formula {
    if vars.len() == 1 {
        return Formula::lit(vars[0], rng.gen());
    }
    let split = rng.gen_range(1..vars.len());
    let op = *ops.choose(rng).expect("nonempty ops");
    Formula::gate(op, vec![build(rng, &vars[..split], ops), build(rng, &vars[split..], ops)])
}

/// Random non-constant function of the variables in `vars` (as a table on
/// `n` variables).
pub fn random_on(rng: &mut impl Rng, n: usize, vars: &[usize]) -> TruthTable {
    loop {
        let bits: Vec<bool> = (0..1usize << vars.len()).map(|_| rng.gen()).collect();
        let small = TruthTable::from_bits(&bits).expect("power of two");
        if !small.is_constant() {
            return small.embed(n, vars);
        }
    }
}

/// Random non-constant unate function of `vars`: a random monotone DNF
/// with a random polarity shift.
pub fn random_unate_on(rng: &mut impl Rng, n: usize, vars: &[usize]) -> TruthTable {
    let k = vars.len();
    loop {
        let terms: Vec<usize> = (0..rng.gen_range(1..=3))
            .map(|_| rng.gen_range(1..1usize << k))
            .collect();
        let mono = TruthTable::from_fn(k, |x| terms.iter().any(|&t| x & t == t));
        if mono.is_constant() {
            continue;
        }
        let a = rng.gen_range(0..1usize << k);
        return mono.shift_inputs(a).embed(n, vars);
    }
}

/// Two disjoint nonempty variable blocks covering a random `n <= max_n`.
pub fn random_split(rng: &mut impl Rng, max_n: usize) -> (usize, Vec<usize>, Vec<usize>) {
    let n = rng.gen_range(2..=max_n);
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    let cut = rng.gen_range(1..n);
    let mut a = vars[..cut].to_vec();
    let mut b = vars[cut..].to_vec();
    a.sort_unstable();
    b.sort_unstable();
    (n, a, b)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn all_tables(n: usize) -> impl Iterator<Item = TruthTable> {
    (0..1u64 << (1 << n)).map(move |w| TruthTable::from_u64(n, w))
}
