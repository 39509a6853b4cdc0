use crate::error::{cap, Error, Result};
use crate::truth_table::TruthTable;

/// Decides whether some tree using at most `k` distinct tests from `tests`
/// computes `tt`. A tree over a chosen test set exists iff the tests'
/// joint outcome determines `f`, so this checks every subset of size <= k.
pub fn decide_test_family_tree(tt: &TruthTable, tests: &[TruthTable], k: usize) -> Result<bool> {
    cap("test family size", tests.len(), 16)?;
    cap("test family k", k, 8)?;
    for t in tests {
        if t.n() != tt.n() {
            return Err(Error::DimensionMismatch {
                expected: tt.n(),
                got: t.n(),
            });
        }
    }
    let m = tests.len();
    for chosen in 0usize..(1 << m) {
        if chosen.count_ones() as usize > k {
            continue;
        }
        let picked: Vec<&TruthTable> = (0..m)
            .filter(|i| (chosen >> i) & 1 == 1)
            .map(|i| &tests[i])
            .collect();
        let mut seen: Vec<Option<bool>> = vec![None; 1 << picked.len()];
        let ok = (0..tt.len()).all(|x| {
            let sig = picked
                .iter()
                .enumerate()
                .fold(0usize, |acc, (j, t)| acc | (t.get(x) as usize) << j);
            let v = tt.get(x);
            *seen[sig].get_or_insert(v) == v
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}
