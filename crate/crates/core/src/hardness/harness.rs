use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    brute_min_mondnf_partial, brute_set_cover, reduce_3psc_to_mondnf_star, reduce_sc_to_tree_with,
    verify_dnf_conditions, SetCoverInstance, Shift,
};
use crate::par::{self, Exec};
use crate::trees::decide_test_family_tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessConfig {
    pub trials: usize,
    /// Largest universe size.
    pub max_m: usize,
    pub max_sets: usize,
    pub seed: u64,
    pub shift: Shift,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            trials: 50,
            max_m: 8,
            max_sets: 6,
            seed: 0,
            shift: Shift::Standard,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub name: &'static str,
    pub seed: u64,
    pub trials: usize,
    pub checks: usize,
    /// Counterexample dumps.
    pub failures: Vec<String>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn random_sc_instance(rng: &mut impl Rng, max_m: usize, max_sets: usize) -> SetCoverInstance {
    let m = rng.gen_range(1..=max_m.max(1));
    let s = rng.gen_range(1..=max_sets.max(1));
    let sets = (0..s)
        .map(|_| {
            let mut set: Vec<usize> = (1..=m).filter(|_| rng.gen_bool(0.4)).collect();
            if set.is_empty() {
                set.push(rng.gen_range(1..=m));
            }
            set
        })
        .collect();
    let k = rng.gen_range(0..=s);
    SetCoverInstance::new(m, sets, k).expect("generated instance is valid")
}

/// Random valid three-partite instance on `3..=max_m` elements; extra sets
/// are added until the universe is covered.
pub fn random_3psc_instance(rng: &mut impl Rng, max_m: usize, max_sets: usize) -> SetCoverInstance {
    let m = rng.gen_range(3..=max_m.max(3));
    let mut partition: Vec<u8> = (0..m).map(|i| if i < 3 { i as u8 } else { rng.gen_range(0..3) }).collect();
    partition.shuffle(rng);
    let blocks: Vec<Vec<usize>> = (0..3u8)
        .map(|b| (1..=m).filter(|&d| partition[d - 1] == b).collect())
        .collect();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let push = |s: Vec<usize>, sets: &mut Vec<Vec<usize>>| {
        let mut s = s;
        s.sort_unstable();
        if !sets.contains(&s) {
            sets.push(s);
        }
    };
    for _ in 0..rng.gen_range(1..=max_sets.max(1)) {
        let s = blocks.iter().map(|b| *b.choose(rng).expect("nonempty block")).collect();
        push(s, &mut sets);
    }
    for d in 1..=m {
        if sets.iter().any(|s| s.contains(&d)) {
            continue;
        }
        let s = blocks
            .iter()
            .map(|b| if b.contains(&d) { d } else { *b.choose(rng).expect("nonempty block") })
            .collect();
        push(s, &mut sets);
    }
    let k = rng.gen_range(1..=sets.len());
    SetCoverInstance::three_partite(m, partition, sets, k).expect("generated instance is valid")
}

/// Every valid three-partite instance on `3..=max_m` elements up to
/// relabelling: elements sorted by block, block sizes nondecreasing, and
/// every covering family of distinct triples (`k` is the family size).
pub fn all_3psc_instances(max_m: usize) -> Vec<SetCoverInstance> {
    let mut out = Vec::new();
    for m in 3..=max_m {
        for a in 1..=m {
            for b in a..=m {
                let Some(c) = m.checked_sub(a + b) else { continue };
                if c < b {
                    continue;
                }
                let partition: Vec<u8> = (0..m).map(|i| if i < a { 0 } else if i < a + b { 1 } else { 2 }).collect();
                let mut triples = Vec::new();
                for x in 1..=a {
                    for y in a + 1..=a + b {
                        for z in a + b + 1..=m {
                            triples.push(vec![x, y, z]);
                        }
                    }
                }
                for pick in 1u64..1 << triples.len() {
                    let sets: Vec<Vec<usize>> = (0..triples.len())
                        .filter(|&i| pick >> i & 1 == 1)
                        .map(|i| triples[i].clone())
                        .collect();
                    let k = sets.len();
                    if let Ok(inst) = SetCoverInstance::three_partite(m, partition.clone(), sets, k) {
                        out.push(inst);
                    }
                }
            }
        }
    }
    out
}

/// For random instances and every `k` up to the number of sets: a cover of
/// size `<= k` exists iff the reduced table has a tree with `<= k`
/// distinct tests.
pub fn verify_tree_reduction(cfg: &HarnessConfig, exec: Exec) -> HarnessReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let insts: Vec<SetCoverInstance> = (0..cfg.trials)
        .map(|_| random_sc_instance(&mut rng, cfg.max_m, cfg.max_sets))
        .collect();
    let results = par::map_slice(exec, &insts, |inst| check_tree(inst, cfg.shift));
    collect("tree-reduction", cfg, results)
}

fn check_tree(inst: &SetCoverInstance, shift: Shift) -> (usize, Vec<String>) {
    let mut fails = Vec::new();
    let cover = match brute_set_cover(inst) {
        Ok(c) => c,
        Err(e) => return (0, vec![format!("{e}\n{inst}")]),
    };
    let red = match reduce_sc_to_tree_with(inst, shift) {
        Ok(r) => r,
        Err(e) => return (0, vec![format!("{e}\n{inst}")]),
    };
    let tests = red.test_tables();
    for k in 0..=inst.sets.len() {
        let sc = cover.is_some_and(|c| c <= k);
        match decide_test_family_tree(&red.tt, &tests, k) {
            Ok(tree) if tree == sc => {}
            Ok(tree) => fails.push(format!(
                "k={k}: cover={sc} tree={tree}\ninstance:\n{inst}table: {}\ntests: {:?}",
                red.tt, red.tests
            )),
            Err(e) => fails.push(format!("k={k}: {e}\n{inst}")),
        }
    }
    (inst.sets.len() + 1, fails)
}

/// For random three-partite instances: the minimum cover equals the
/// minimum monotone DNF of the reduced partial table, and the vector
/// conditions of the construction hold.
pub fn verify_dnf_reduction(cfg: &HarnessConfig, exec: Exec) -> HarnessReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let insts: Vec<SetCoverInstance> = (0..cfg.trials)
        .map(|_| random_3psc_instance(&mut rng, cfg.max_m, cfg.max_sets))
        .collect();
    let results = check_dnf_batch(&insts, exec);
    collect("dnf-reduction", cfg, results)
}

/// The same check over [`all_3psc_instances`].
pub fn verify_dnf_reduction_exhaustive(max_m: usize, exec: Exec) -> HarnessReport {
    let insts = all_3psc_instances(max_m);
    let cfg = HarnessConfig {
        trials: insts.len(),
        max_m,
        ..HarnessConfig::default()
    };
    let results = check_dnf_batch(&insts, exec);
    collect("dnf-reduction-exhaustive", &cfg, results)
}

fn check_dnf_batch(insts: &[SetCoverInstance], exec: Exec) -> Vec<(usize, Vec<String>)> {
    par::map_slice(exec, insts, |inst| {
        let res = (|| -> crate::Result<Option<String>> {
            let red = reduce_3psc_to_mondnf_star(inst)?;
            verify_dnf_conditions(inst, &red)?;
            let cover = brute_set_cover(inst)?;
            let dnf = brute_min_mondnf_partial(&red.ptt)?;
            Ok((cover != dnf).then(|| format!("cover={cover:?} dnf={dnf:?}\ninstance:\n{inst}")))
        })();
        match res {
            Ok(None) => (1, Vec::new()),
            Ok(Some(f)) => (1, vec![f]),
            Err(e) => (1, vec![format!("{e}\ninstance:\n{inst}")]),
        }
    })
}

fn collect(name: &'static str, cfg: &HarnessConfig, results: Vec<(usize, Vec<String>)>) -> HarnessReport {
    let mut checks = 0;
    let mut failures = Vec::new();
    for (c, f) in results {
        checks += c;
        failures.extend(f);
    }
    HarnessReport {
        name,
        seed: cfg.seed,
        trials: cfg.trials,
        checks,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harness_smoke() {
        let cfg = HarnessConfig {
            trials: 10,
            ..HarnessConfig::default()
        };
        let r = verify_tree_reduction(&cfg, Exec::Sequential);
        assert!(r.passed(), "{:?}", r.failures);
        let bad = verify_tree_reduction(
            &HarnessConfig {
                shift: Shift::OffByOne,
                ..cfg
            },
            Exec::Sequential,
        );
        assert!(!bad.passed());
        let d = verify_dnf_reduction(
            &HarnessConfig {
                trials: 5,
                max_m: 5,
                max_sets: 4,
                ..cfg
            },
            Exec::Sequential,
        );
        assert!(d.passed(), "{:?}", d.failures);
    }

    #[test]
    fn exhaustive_small() {
        let all = all_3psc_instances(4);
        // 1-1-1 with its single triple; 1-1-2 needs both triples
        assert_eq!(all.len(), 2);
        assert!(verify_dnf_reduction_exhaustive(4, Exec::Sequential).passed());
    }
}
